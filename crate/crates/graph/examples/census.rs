//! Pentavalent census over a few small alternating and symmetric groups.
//!
//! cargo run --release -p catg-graph --example census

use std::time::Instant;

use catg_core::PermGroup;
use catg_graph::census_pentavalent;

fn main() {
    let groups = [
        ("A5", PermGroup::alternating(5)),
        ("S5", PermGroup::symmetric(5)),
        ("A6", PermGroup::alternating(6)),
        ("S6", PermGroup::symmetric(6)),
        ("A7", PermGroup::alternating(7)),
    ];
    for (name, x) in groups {
        let start = Instant::now();
        let census = census_pentavalent(&x, 10_000, 2000).expect("census");
        println!(
            "{name}: {} stabilizer classes, {} graphs ({:.2?})",
            census.stabilizer_classes,
            census.entries.len(),
            start.elapsed()
        );
        for e in &census.entries {
            println!(
                "  {:>4} vertices  H = {:<7} s = {}  |Aut| = {}",
                e.vertex_count,
                e.stabilizer_tag.to_string(),
                e.x_transitivity,
                e.aut_order
            );
        }
    }
}
