#![allow(dead_code)]

use catg_core::{PermGroup, Permutation};
use catg_graph::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> Graph {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    Graph::parse_edge_list(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Counts automorphisms by plain backtracking: assign images to vertices
/// 0, 1, ... in turn, keeping adjacency with every earlier vertex.
pub fn brute_force_automorphism_count(g: &Graph) -> u64 {
    fn go(g: &Graph, image: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let v = image.len();
        if v == g.vertex_count() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.vertex_count() {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w)) {
                used[w] = true;
                image.push(w);
                total += go(g, image, used);
                image.pop();
                used[w] = false;
            }
        }
        total
    }
    go(g, &mut Vec::new(), &mut vec![false; g.vertex_count()])
}

pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    use rand::seq::SliceRandom;
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Permutation::from_index_images(images).unwrap()
}

/// Product of a random word of length `len` in the generators of `group`.
pub fn random_element(group: &PermGroup, rng: &mut ChaCha8Rng, len: usize) -> Permutation {
    let gens = group.generators();
    let mut x = Permutation::identity(group.degree());
    for _ in 0..len {
        x = x.then(&gens[rng.gen_range(0..gens.len())]);
    }
    x
}

pub fn perm(images: impl IntoIterator<Item = usize>) -> Permutation {
    Permutation::from_index_images(images.into_iter().map(|v| v as u32).collect()).unwrap()
}

/// The 5-cube on bit strings `0..32`, with subgroups of its automorphism
/// group generated by all translations and a group of coordinate
/// permutations (each given as images of `0..5`).
pub fn cube_group(coordinate_perms: &[[usize; 5]]) -> PermGroup {
    let mut gens: Vec<Permutation> = (0..5).map(|i| perm((0..32).map(|v| v ^ (1 << i)))).collect();
    for pi in coordinate_perms {
        gens.push(perm((0..32).map(|v| (0..5).filter(|&i| v >> i & 1 == 1).map(|i| 1 << pi[i]).sum())));
    }
    PermGroup::from_generators(gens).unwrap()
}

pub const ROTATE: [usize; 5] = [1, 2, 3, 4, 0];
pub const REFLECT: [usize; 5] = [0, 4, 3, 2, 1];
pub const DOUBLE: [usize; 5] = [0, 2, 4, 1, 3];
pub const THREE_CYCLE: [usize; 5] = [1, 2, 0, 3, 4];
pub const SWAP: [usize; 5] = [1, 0, 2, 3, 4];

/// Translation by 11111.
pub fn cube_antipodal() -> PermGroup {
    PermGroup::from_generators(vec![perm((0..32).map(|v| v ^ 31))]).unwrap()
}
