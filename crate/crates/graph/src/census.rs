//! A bounded census of connected pentavalent `X`-arc-transitive coset graphs
//! `Cos(X, H, g)` with soluble vertex stabilizer `H`.
//!
//! Every soluble stabilizer type has a normal Sylow 5-subgroup, so candidate
//! stabilizers are found by growing each cyclic subgroup `P` of order 5 by
//! 2-elements normalizing `P`. For each candidate (up to conjugacy, core-free
//! so that `X` acts faithfully), `g` ranges over 2-elements with `g² ∈ H`,
//! one per double coset, with `|H : H ∩ H^g| = 5` and `⟨H, g⟩ = X`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use catg_core::structure::recognize_table3;
use catg_core::{PermGroup, Permutation, StabilizerTag};
use rayon::prelude::*;
use serde::Serialize;

use crate::{automorphism_group, is_isomorphic, transitivity_degree, CosetGraphSpec, Graph, Result};

pub const DEFAULT_ORDER_CAP: u64 = 10_000;
pub const DEFAULT_GRAPH_CAP: u64 = 2_000;

const STABILIZER_ORDERS: [u64; 5] = [5, 10, 20, 40, 80];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub h_generators: Vec<String>,
    pub g: String,
    pub valency: u64,
    pub vertex_count: usize,
    pub stabilizer_tag: StabilizerTag,
    pub s_value: Option<u32>,
    pub connected: bool,
    /// Largest s for which `X` is transitive on s-arcs of the materialized graph.
    pub x_transitivity: usize,
    pub s_consistent: bool,
    pub aut_order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_list_path: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Census {
    pub entries: Vec<CensusEntry>,
    /// Materialized graphs, parallel to `entries`.
    pub graphs: Vec<Graph>,
    /// Candidate stabilizers up to conjugacy.
    pub stabilizer_classes: usize,
    /// Specs passing every test but with index above the graph cap.
    pub skipped_over_cap: usize,
}

fn sorted_key(elements: &[Permutation]) -> Vec<Permutation> {
    let mut key = elements.to_vec();
    key.sort();
    key
}

fn is_two_power(n: u64) -> bool {
    n.is_power_of_two()
}

/// Core of `h` in `x`: the largest subgroup of `h` normalized by `x`.
fn core(h: &PermGroup, x: &PermGroup, cap: u64) -> Result<PermGroup> {
    let mut c = h.clone();
    loop {
        let mut changed = false;
        for s in x.generators() {
            let meet = c.intersection_small(&c.conjugate_subgroup(s)?, cap)?;
            if meet.order() != c.order() {
                c = meet;
                changed = true;
            }
        }
        if !changed {
            return Ok(c);
        }
    }
}

/// Subgroups of `x` with an order in {5, 10, 20, 40, 80} and a recognized
/// soluble stabilizer type, core-free, one per conjugacy class.
pub fn candidate_stabilizers(x: &PermGroup, elements: &[Permutation]) -> Result<Vec<(PermGroup, StabilizerTag)>> {
    let degree = x.degree();
    let mut fives: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    for e in elements.iter().filter(|e| e.order_u64() == Some(5)) {
        fives.insert(sorted_key(&(0..5).map(|k| e.pow(k)).collect::<Vec<_>>()));
    }
    let two_elements: Vec<&Permutation> =
        elements.iter().filter(|e| !e.is_identity() && e.order_u64().is_some_and(is_two_power)).collect();

    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    let mut found: Vec<Vec<Permutation>> = Vec::new();
    for p in &fives {
        let set: HashSet<&Permutation> = p.iter().collect();
        let generator = p.iter().find(|e| !e.is_identity()).expect("order 5");
        let normalizing: Vec<&Permutation> =
            two_elements.iter().copied().filter(|t| set.contains(&generator.conjugate_by(t))).collect();
        let start = PermGroup::from_generators(vec![generator.clone()])?;
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            let key = sorted_key(&k.enumerate_elements(80)?);
            if !seen.insert(key.clone()) {
                continue;
            }
            found.push(key);
            for t in &normalizing {
                if k.contains(t)? {
                    continue;
                }
                let bigger = k.join_with(std::slice::from_ref(*t))?;
                if bigger.order_u64().is_some_and(|o| STABILIZER_ORDERS.contains(&o)) {
                    queue.push_back(bigger);
                }
            }
        }
    }

    // conjugacy classes: key each subgroup by its least conjugate
    let mut classes: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    let mut out = Vec::new();
    for key in found {
        let least = elements
            .iter()
            .map(|y| sorted_key(&key.iter().map(|h| h.conjugate_by(y)).collect::<Vec<_>>()))
            .min()
            .expect("nonempty group");
        if !classes.insert(least.clone()) {
            continue;
        }
        let h = PermGroup::generated_by_subset(degree, &least);
        let tag = recognize_table3(&h)?;
        if tag == StabilizerTag::Other || core(&h, x, 80)?.order() != 1u64 {
            continue;
        }
        out.push((h, tag));
    }
    Ok(out)
}

struct Candidate {
    spec: CosetGraphSpec,
    tag: StabilizerTag,
}

struct Built {
    spec: CosetGraphSpec,
    tag: StabilizerTag,
    graph: Graph,
    aut_order: catg_core::BigCount,
    x_transitivity: usize,
}

/// Runs the census on `x` (`|X| ≤ order_cap`), materializing graphs with at
/// most `graph_cap` vertices.
pub fn census_pentavalent(x: &PermGroup, order_cap: u64, graph_cap: u64) -> Result<Census> {
    let elements = x.enumerate_elements(order_cap)?;
    let stabilizers = candidate_stabilizers(x, &elements)?;
    let two_elements: Vec<&Permutation> =
        elements.iter().filter(|e| !e.is_identity() && e.order_u64().is_some_and(is_two_power)).collect();

    let mut candidates = Vec::new();
    let mut skipped_over_cap = 0;
    for (h, tag) in &stabilizers {
        let mut double_cosets: HashSet<Permutation> = HashSet::new();
        for &g in &two_elements {
            if h.contains(g)? || !h.contains(&g.then(g))? {
                continue;
            }
            let spec = CosetGraphSpec::new(x.clone(), h.clone(), g.clone())?;
            if spec.suborbit_length() != 5 {
                continue;
            }
            if !double_cosets.insert(spec.double_coset_key()) || !spec.is_connected()? {
                continue;
            }
            if !spec.index().le_u64(graph_cap) {
                skipped_over_cap += 1;
                continue;
            }
            candidates.push(Candidate { spec, tag: *tag });
        }
    }

    let mut built: Vec<Built> = candidates
        .into_par_iter()
        .map(|c| -> Result<Built> {
            let cg = c.spec.materialize(graph_cap)?;
            let aut_order = automorphism_group(&cg.graph, graph_cap as usize)?.order();
            let action = cg.action_group(c.spec.x())?;
            let x_transitivity = transitivity_degree(&cg.graph, &action)?;
            Ok(Built { spec: c.spec, tag: c.tag, graph: cg.graph, aut_order, x_transitivity })
        })
        .collect::<Result<_>>()?;
    // stable sort keeps candidate order within equal keys
    built.sort_by(|a, b| {
        (a.graph.vertex_count(), a.graph.degree_sequence(), &a.aut_order)
            .cmp(&(b.graph.vertex_count(), b.graph.degree_sequence(), &b.aut_order))
    });

    let mut kept: Vec<Built> = Vec::new();
    for b in built {
        let duplicate = kept.iter().any(|k| {
            k.graph.vertex_count() == b.graph.vertex_count()
                && k.aut_order == b.aut_order
                && is_isomorphic(&k.graph, &b.graph)
        });
        if !duplicate {
            kept.push(b);
        }
    }

    let entries = kept
        .iter()
        .map(|b| {
            let s_value = b.tag.s_value();
            CensusEntry {
                h_generators: b.spec.h().generators().iter().map(Permutation::to_string).collect(),
                g: b.spec.g().to_string(),
                valency: b.spec.suborbit_length() as u64,
                vertex_count: b.graph.vertex_count(),
                stabilizer_tag: b.tag,
                s_value,
                connected: b.graph.is_connected(),
                x_transitivity: b.x_transitivity,
                s_consistent: s_value == Some(b.x_transitivity as u32),
                aut_order: b.aut_order.to_string(),
                edge_list_path: None,
            }
        })
        .collect();
    let graphs = kept.into_iter().map(|b| b.graph).collect();
    Ok(Census { entries, graphs, stabilizer_classes: stabilizers.len(), skipped_over_cap })
}
