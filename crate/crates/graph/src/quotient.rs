//! Normal quotients `Γ_N`: vertices are the `N`-orbits, two orbits adjacent
//! when some of their members are.

use std::collections::BTreeSet;

use catg_core::PermGroup;
use serde::Serialize;

use crate::arcs::check_automorphisms;
use crate::{Graph, GraphError, Result};

#[derive(Debug, Clone)]
pub struct QuotientResult {
    pub quotient: Graph,
    /// vertex → orbit id; orbits are numbered by least member.
    pub orbit_map: Vec<usize>,
    pub semiregular: bool,
    /// Whether the quotient keeps the valency of `Γ`. Only reported when `Γ`
    /// is regular of prime valency and `N` has more than two orbits.
    pub valency_preserved: Option<bool>,
    pub orbit_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientSummary {
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
    pub semiregular: bool,
    pub valency_preserved: Option<bool>,
    pub quotient_valency: Option<usize>,
}

impl QuotientResult {
    pub fn summary(&self) -> QuotientSummary {
        let mut orbit_sizes = vec![0usize; self.orbit_count];
        for &o in &self.orbit_map {
            orbit_sizes[o] += 1;
        }
        QuotientSummary {
            orbit_count: self.orbit_count,
            orbit_sizes,
            semiregular: self.semiregular,
            valency_preserved: self.valency_preserved,
            quotient_valency: self.quotient.regular_degree(),
        }
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `Γ_N` for `N ⊴ X`, both acting on the vertices of `graph` by automorphisms.
pub fn quotient_graph(graph: &Graph, x: &PermGroup, n: &PermGroup) -> Result<QuotientResult> {
    check_automorphisms(graph, x)?;
    check_automorphisms(graph, n)?;
    if !n.is_normal_in(x)? {
        return Err(GraphError::NotNormal);
    }
    let orbits = n.orbits();
    let mut orbit_map = vec![0usize; graph.vertex_count()];
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    order.sort_by_key(|&i| orbits[i][0]);
    for (id, &i) in order.iter().enumerate() {
        for &p in &orbits[i] {
            orbit_map[p - 1] = id;
        }
    }
    let orbit_count = orbits.len();
    let mut adjacent: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); orbit_count];
    for (u, v) in graph.edges() {
        let (a, b) = (orbit_map[u], orbit_map[v]);
        if a != b {
            adjacent[a].insert(b as u32);
            adjacent[b].insert(a as u32);
        }
    }
    let quotient = Graph::from_adjacency(adjacent.into_iter().map(|s| s.into_iter().collect()).collect())?;
    let n_order = n.order();
    let semiregular = orbits.iter().all(|o| n_order == o.len() as u64);
    let valency_preserved = match graph.regular_degree() {
        Some(k) if is_prime(k) && orbit_count > 2 => Some(quotient.regular_degree() == Some(k)),
        _ => None,
    };
    Ok(QuotientResult { quotient, orbit_map, semiregular, valency_preserved, orbit_count })
}
