#![allow(dead_code)]

use std::collections::HashSet;

use catg_core::{GeneratorFile, Permutation};

pub fn fixture() -> GeneratorFile {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/a79.perms");
    GeneratorFile::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Brute-force closure of a generating set: repeated right multiplication
/// until no new elements appear. Independent of the stabilizer chain.
pub fn closure(gens: &[Permutation], limit: usize) -> HashSet<Permutation> {
    let n = gens[0].degree();
    let mut seen: HashSet<Permutation> = HashSet::from([Permutation::identity(n)]);
    let mut frontier = vec![Permutation::identity(n)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                assert!(seen.len() <= limit, "closure exceeded {limit} elements");
                frontier.push(y);
            }
        }
    }
    seen
}
