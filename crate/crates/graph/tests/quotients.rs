mod common;

use catg_core::PermGroup;
use catg_graph::{automorphism_group, quotient_graph, transitivity_degree, Graph};
use common::*;

/// Connected pentavalent arc-transitive graphs with an arc-transitive group
/// and a normal subgroup having more than two orbits.
fn triples() -> Vec<(&'static str, Graph, PermGroup, PermGroup)> {
    let q5 = Graph::hypercube(5);
    let mut out = Vec::new();
    let cube_actions: [(&str, &[[usize; 5]]); 5] = [
        ("Q5 Z2^5:Z5", &[ROTATE]),
        ("Q5 Z2^5:D10", &[ROTATE, REFLECT]),
        ("Q5 Z2^5:F20", &[ROTATE, DOUBLE]),
        ("Q5 Z2^5:A5", &[ROTATE, THREE_CYCLE]),
        ("Q5 Z2^5:S5", &[ROTATE, SWAP]),
    ];
    for (name, perms) in cube_actions {
        let x = cube_group(perms);
        out.push((name, q5.clone(), x.clone(), cube_antipodal()));
        out.push((name, q5.clone(), x, PermGroup::trivial(32)));
    }
    let k6 = Graph::complete(6);
    out.push(("K6", k6.clone(), automorphism_group(&k6, 100).unwrap(), PermGroup::trivial(6)));
    let k55 = Graph::complete_bipartite(5, 5);
    out.push(("K5,5", k55.clone(), automorphism_group(&k55, 100).unwrap(), PermGroup::trivial(10)));
    let census = catg_graph::census_pentavalent(&PermGroup::alternating(5), 100, 100).unwrap();
    let ico = census.graphs.iter().find(|g| g.vertex_count() == 12).unwrap().clone();
    let aut = automorphism_group(&ico, 100).unwrap();
    let center = aut.center(1000).unwrap();
    out.push(("icosahedron / antipodal", ico, aut, center));
    out
}

#[test]
fn normal_quotients_of_pentavalent_graphs() {
    for (name, g, x, n) in triples() {
        assert!(transitivity_degree(&g, &x).unwrap() >= 1, "{name}");
        let q = quotient_graph(&g, &x, &n).unwrap();
        assert!(q.orbit_count > 2, "{name}");
        assert!(q.semiregular, "{name}");
        assert_eq!(q.valency_preserved, Some(true), "{name}");
        assert_eq!(q.orbit_count * n.order_u64().unwrap() as usize, g.vertex_count(), "{name}");
        assert!(q.quotient.is_connected(), "{name}");
    }
}

#[test]
fn folded_cube_and_icosahedron_quotients() {
    let q = quotient_graph(&Graph::hypercube(5), &cube_group(&[ROTATE]), &cube_antipodal()).unwrap();
    assert_eq!(q.orbit_count, 16);
    // the folded 5-cube is the Clebsch graph, with 1920 automorphisms
    assert_eq!(automorphism_group(&q.quotient, 100).unwrap().order(), 1920u64);

    let (_, _, _, n) = triples().pop().unwrap();
    assert_eq!(n.order(), 2u64);
    let (_, ico, aut, center) = triples().pop().unwrap();
    let q = quotient_graph(&ico, &aut, &center).unwrap();
    assert_eq!(q.quotient, Graph::complete(6));
    assert_eq!(q.orbit_map.iter().filter(|&&o| o == 0).count(), 2);
}

#[test]
fn circulant_fixture_quotient() {
    let g = fixture("circulant10.edges");
    let shift = |k: usize| perm((0..10).map(move |i| (i + k) % 10));
    let x = PermGroup::from_generators(vec![shift(1)]).unwrap();
    let n = PermGroup::from_generators(vec![shift(5)]).unwrap();
    let q = quotient_graph(&g, &x, &n).unwrap();
    assert_eq!(q.summary().orbit_sizes, vec![2; 5]);
    assert!(q.semiregular);
    // Z10 is not arc-transitive here, so the valency may drop
    assert_eq!(q.quotient.regular_degree(), Some(4));
}
