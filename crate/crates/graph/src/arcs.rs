//! s-arcs: `(v₀, …, v_s)` with consecutive vertices adjacent and
//! `v_{i-1} ≠ v_{i+1}`.

use std::collections::HashMap;

use catg_core::PermGroup;

use crate::{Graph, GraphError, Result};

/// Default bound on the number of s-arcs materialized by [`s_arc_orbits`].
pub const ARC_ENUMERATION_CAP: u128 = 2_000_000;

/// Number of s-arcs, by dynamic programming over the final arc.
pub fn count_s_arcs(graph: &Graph, s: usize) -> u128 {
    let n = graph.vertex_count();
    if s == 0 {
        return n as u128;
    }
    // arc (u, v) has id offset[u] + position of v in N(u)
    let mut offset = vec![0usize; n + 1];
    for u in 0..n {
        offset[u + 1] = offset[u] + graph.degree(u);
    }
    let arc_id = |u: usize, v: usize| {
        offset[u] + graph.neighbors(u).binary_search(&(v as u32)).expect("adjacent")
    };
    // f[id(u, v)] = number of k-arcs ending with the arc (u, v)
    let mut f = vec![1u128; offset[n]];
    for _ in 1..s {
        let into: Vec<u128> = (0..n)
            .map(|v| graph.neighbors(v).iter().map(|&u| f[arc_id(u as usize, v)]).sum())
            .collect();
        let mut next = vec![0u128; offset[n]];
        for v in 0..n {
            for (i, &w) in graph.neighbors(v).iter().enumerate() {
                next[offset[v] + i] = into[v] - f[arc_id(w as usize, v)];
            }
        }
        f = next;
    }
    f.iter().sum()
}

/// All s-arcs in lexicographic order; fails if there are more than `cap`.
pub fn enumerate_s_arcs(graph: &Graph, s: usize, cap: u128) -> Result<Vec<Vec<u32>>> {
    let count = count_s_arcs(graph, s);
    if count > cap {
        return Err(GraphError::SearchCapExceeded { what: "s-arc", count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut arc = Vec::with_capacity(s + 1);
    fn extend(graph: &Graph, s: usize, arc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if arc.len() == s + 1 {
            out.push(arc.clone());
            return;
        }
        let last = *arc.last().expect("nonempty") as usize;
        let back = (arc.len() >= 2).then(|| arc[arc.len() - 2]);
        for &w in graph.neighbors(last) {
            if Some(w) != back {
                arc.push(w);
                extend(graph, s, arc, out);
                arc.pop();
            }
        }
    }
    for v in 0..graph.vertex_count() as u32 {
        arc.push(v);
        extend(graph, s, &mut arc, &mut out);
        arc.pop();
    }
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}

/// Checks that `group` acts on the vertices of `graph` by automorphisms.
pub fn check_automorphisms(graph: &Graph, group: &PermGroup) -> Result<()> {
    if group.degree() != graph.vertex_count() {
        return Err(GraphError::ActionDegree { group: group.degree(), graph: graph.vertex_count() });
    }
    match group.generators().iter().position(|g| !graph.is_automorphism(g)) {
        Some(generator) => Err(GraphError::NonAutomorphismGroup { generator }),
        None => Ok(()),
    }
}

/// Number of orbits of `group` on s-arcs, by union-find under generator images.
pub fn s_arc_orbits(graph: &Graph, group: &PermGroup, s: usize) -> Result<usize> {
    check_automorphisms(graph, group)?;
    let arcs = enumerate_s_arcs(graph, s, ARC_ENUMERATION_CAP)?;
    let index: HashMap<&[u32], u32> = arcs.iter().enumerate().map(|(i, a)| (a.as_slice(), i as u32)).collect();
    let mut parent: Vec<u32> = (0..arcs.len() as u32).collect();
    fn find(parent: &mut [u32], mut x: usize) -> usize {
        while parent[x] as usize != x {
            parent[x] = parent[parent[x] as usize];
            x = parent[x] as usize;
        }
        x
    }
    let mut orbits = arcs.len();
    let mut image = vec![0u32; s + 1];
    for g in group.generators() {
        let img = g.index_images();
        for (i, arc) in arcs.iter().enumerate() {
            for (slot, &v) in image.iter_mut().zip(arc) {
                *slot = img[v as usize];
            }
            let j = index[image.as_slice()] as usize;
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b) as u32;
                orbits -= 1;
            }
        }
    }
    Ok(orbits)
}

/// The largest `s` such that `group` is transitive on s-arcs.
///
/// Requires a vertex- and arc-transitive action of valency at least 3.
/// Walks the stabilizer of a growing s-arc: `group` is transitive on
/// (s+1)-arcs iff it is transitive on s-arcs and the pointwise stabilizer of
/// one s-arc is transitive on its extensions.
pub fn transitivity_degree(graph: &Graph, group: &PermGroup) -> Result<usize> {
    check_automorphisms(graph, group)?;
    let valency = graph.regular_degree().ok_or(GraphError::NotArcTransitive)?;
    if !group.is_transitive() {
        return Err(GraphError::NotArcTransitive);
    }
    if valency < 3 {
        return Err(GraphError::ValencyTooSmall(valency));
    }
    let mut arc: Vec<usize> = vec![0];
    let mut stab = group.point_stabilizer(1)?;
    loop {
        let last = *arc.last().expect("nonempty");
        let back = (arc.len() >= 2).then(|| arc[arc.len() - 2]);
        let extensions: Vec<usize> =
            graph.neighbors(last).iter().map(|&w| w as usize).filter(|&w| Some(w) != back).collect();
        let orbit = stab.orbit(extensions[0] + 1)?;
        let covered = extensions.iter().all(|&w| orbit.binary_search(&(w + 1)).is_ok());
        if !covered {
            if arc.len() == 1 {
                return Err(GraphError::NotArcTransitive);
            }
            return Ok(arc.len() - 1);
        }
        stab = stab.point_stabilizer(extensions[0] + 1)?;
        arc.push(extensions[0]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism_group;

    #[test]
    fn complete_graph_counts() {
        let k6 = Graph::complete(6);
        assert_eq!(count_s_arcs(&k6, 0), 6);
        assert_eq!(count_s_arcs(&k6, 1), 30);
        assert_eq!(count_s_arcs(&k6, 2), 120);
        assert_eq!(count_s_arcs(&k6, 3), 480);
        assert_eq!(enumerate_s_arcs(&k6, 3, 1000).unwrap().len(), 480);
    }

    #[test]
    fn regular_count_formula() {
        // n·k·(k-1)^(s-1) for a k-regular graph
        let q5 = Graph::hypercube(5);
        for s in 1..6 {
            assert_eq!(count_s_arcs(&q5, s), 32 * 5 * 4u128.pow(s as u32 - 1));
        }
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(count_s_arcs(&path, 2), 2);
        assert_eq!(count_s_arcs(&path, 3), 0);
    }

    #[test]
    fn k6_three_arcs_split_in_two() {
        let k6 = Graph::complete(6);
        let aut = automorphism_group(&k6, 100).unwrap();
        assert_eq!(s_arc_orbits(&k6, &aut, 2).unwrap(), 1);
        assert_eq!(s_arc_orbits(&k6, &aut, 3).unwrap(), 2);
        assert_eq!(transitivity_degree(&k6, &aut).unwrap(), 2);
    }

    #[test]
    fn preconditions() {
        let c5 = Graph::cycle(5);
        let aut = automorphism_group(&c5, 100).unwrap();
        assert_eq!(transitivity_degree(&c5, &aut), Err(GraphError::ValencyTooSmall(2)));
        let swap = PermGroup::from_generators(vec![catg_core::Permutation::from_images(&[2, 1, 3, 4, 5]).unwrap()])
            .unwrap();
        assert_eq!(s_arc_orbits(&c5, &swap, 1), Err(GraphError::NonAutomorphismGroup { generator: 0 }));
        assert!(matches!(
            s_arc_orbits(&c5, &PermGroup::symmetric(4), 1),
            Err(GraphError::ActionDegree { group: 4, graph: 5 })
        ));
    }
}
