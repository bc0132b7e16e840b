//! Coset graphs `Cos(X, H, g)` and Cayley graphs `Cay(G, S)`.
//!
//! Right cosets `Hx` are named by [`PermGroup::canonical_coset_rep`], so
//! vertex labels do not depend on how a coset was reached. `Hx ~ Hy` iff
//! `y·x⁻¹ ∈ HgH`; the cosets inside `HgH` form the suborbit
//! `{Hgh : h ∈ H}`, and the neighbours of `Hx` are `{Ht·x : Ht in the suborbit}`.

use std::collections::{HashMap, HashSet, VecDeque};

use catg_core::{BigCount, PermGroup, Permutation};
use rayon::prelude::*;

use crate::{Graph, GraphError, Result};

/// Above this many products `|H|²`, double-coset membership is decided from
/// the suborbit of canonical coset representatives instead of a hash set.
pub const DOUBLE_COSET_HASH_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone)]
pub struct CosetGraphSpec {
    x: PermGroup,
    h: PermGroup,
    g: Permutation,
    /// Canonical representatives of the right cosets of `H` inside `HgH`.
    suborbit: Vec<Permutation>,
}

fn suborbit(h: &PermGroup, g: &Permutation) -> Result<Vec<Permutation>> {
    let start = h.canonical_coset_rep(g)?;
    let mut seen: HashSet<Permutation> = HashSet::from([start.clone()]);
    let mut reps = vec![start];
    let mut head = 0;
    while head < reps.len() {
        let t = reps[head].clone();
        head += 1;
        for s in h.generators() {
            let next = h.canonical_coset_rep(&t.then(s))?;
            if seen.insert(next.clone()) {
                reps.push(next);
            }
        }
    }
    Ok(reps)
}

impl CosetGraphSpec {
    /// Checks `H ≤ X`, `g ∈ X` and `g⁻¹ ∈ HgH`.
    pub fn new(x: PermGroup, h: PermGroup, g: Permutation) -> Result<CosetGraphSpec> {
        if h.degree() != x.degree() {
            return Err(catg_core::Error::DegreeMismatch { left: x.degree(), right: h.degree() }.into());
        }
        if !h.is_subgroup_of(&x)? {
            return Err(GraphError::InvalidSpec("H is not contained in X".into()));
        }
        if !x.contains(&g)? {
            return Err(GraphError::InvalidSpec("g is not an element of X".into()));
        }
        let suborbit = suborbit(&h, &g)?;
        let spec = CosetGraphSpec { x, h, g, suborbit };
        if !spec.in_double_coset(&spec.g.inverse())? {
            return Err(GraphError::InvalidSpec("g⁻¹ is not in HgH, so adjacency is not symmetric".into()));
        }
        Ok(spec)
    }

    pub fn x(&self) -> &PermGroup {
        &self.x
    }

    pub fn h(&self) -> &PermGroup {
        &self.h
    }

    pub fn g(&self) -> &Permutation {
        &self.g
    }

    /// `|H : H ∩ H^g|`, computed from an explicit intersection.
    pub fn valency(&self, cap: u64) -> Result<u64> {
        let order = self.h.order();
        if !order.le_u64(cap) {
            return Err(catg_core::Error::OrderExceedsCap { order, cap }.into());
        }
        let meet = self.h.intersection_small(&self.h.conjugate_subgroup(&self.g)?, cap)?;
        let h = order.to_u64().expect("bounded by cap");
        let m = meet.order_u64().expect("subgroup of a small group");
        assert_eq!(h % m, 0, "Lagrange: |H ∩ H^g| divides |H|");
        Ok(h / m)
    }

    /// Number of right cosets of `H` in `HgH`; equals [`valency`](Self::valency).
    pub fn suborbit_length(&self) -> usize {
        self.suborbit.len()
    }

    /// Least canonical coset representative inside `HgH`; equal for `g`, `g'`
    /// iff `HgH = Hg'H`.
    pub fn double_coset_key(&self) -> Permutation {
        self.suborbit.iter().min().expect("nonempty suborbit").clone()
    }

    /// `⟨H, g⟩ = X`.
    pub fn is_connected(&self) -> Result<bool> {
        let joined = self.h.join_with(std::slice::from_ref(&self.g))?;
        Ok(joined.order() == self.x.order())
    }

    /// `|X : H|`.
    pub fn index(&self) -> BigCount {
        self.x.order().checked_div_exact(&self.h.order()).expect("Lagrange: |H| divides |X|")
    }

    pub fn in_double_coset(&self, z: &Permutation) -> Result<bool> {
        let rep = self.h.canonical_coset_rep(z)?;
        Ok(self.suborbit.contains(&rep))
    }

    /// Elements of `HgH` lying in `r`.
    pub fn connection_set(&self, r: &PermGroup, cap: u64) -> Result<Vec<Permutation>> {
        let dc = double_coset(&self.h, &self.g, cap)?;
        let mut out = Vec::new();
        for p in dc {
            if r.contains(&p)? {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Builds the graph on `|X : H|` vertices. Rejects `g ∈ H`, which would
    /// put a loop at every vertex.
    pub fn materialize(&self, vertex_cap: u64) -> Result<CosetGraph> {
        if self.h.contains(&self.g)? {
            return Err(GraphError::InvalidSpec("g ∈ H: every vertex would carry a loop".into()));
        }
        let index = self.index();
        if !index.le_u64(vertex_cap) {
            return Err(GraphError::IndexExceedsCap { index, cap: vertex_cap });
        }
        let n = index.to_u64().expect("bounded by cap") as usize;
        let h_order = self.h.order();
        let membership = if (&h_order * &h_order).le_u64(DOUBLE_COSET_HASH_LIMIT) {
            let dc = double_coset(&self.h, &self.g, DOUBLE_COSET_HASH_LIMIT)?;
            Membership::Elements(dc.into_iter().collect())
        } else {
            Membership::Suborbit
        };

        let start = self.h.canonical_coset_rep(&Permutation::identity(self.x.degree()))?;
        let mut reps = vec![start.clone()];
        let mut ids: HashMap<Permutation, u32> = HashMap::from([(start, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let r = reps[i].clone();
            for s in self.x.generators() {
                let next = self.h.canonical_coset_rep(&r.then(s))?;
                if !ids.contains_key(&next) {
                    ids.insert(next.clone(), reps.len() as u32);
                    queue.push_back(reps.len());
                    reps.push(next);
                }
            }
        }
        assert_eq!(reps.len(), n, "coset enumeration reached every coset");

        let adjacency: Vec<Vec<u32>> = reps
            .par_iter()
            .map(|r| -> Result<Vec<u32>> {
                let mut list = Vec::with_capacity(self.suborbit.len());
                for t in &self.suborbit {
                    let y = self.h.canonical_coset_rep(&t.then(r))?;
                    list.push(ids[&y]);
                }
                Ok(list)
            })
            .collect::<Result<_>>()?;

        // Cross-check the defining relation `y·x⁻¹ ∈ HgH` on the first vertex
        // with an independent membership test.
        let x0_inv = reps[0].inverse();
        for &v in &adjacency[0] {
            let z = reps[v as usize].then(&x0_inv);
            assert!(membership.contains(self, &z)?, "neighbour outside HgH");
        }

        let labels = reps.iter().map(Permutation::to_string).collect();
        let graph = Graph::from_adjacency(adjacency)?.with_labels(labels)?;
        Ok(CosetGraph { graph, h: self.h.clone(), reps, ids })
    }
}

enum Membership {
    Elements(HashSet<Permutation>),
    Suborbit,
}

impl Membership {
    fn contains(&self, spec: &CosetGraphSpec, z: &Permutation) -> Result<bool> {
        match self {
            Membership::Elements(set) => Ok(set.contains(z)),
            Membership::Suborbit => spec.in_double_coset(z),
        }
    }
}

/// All distinct `h₁·g·h₂`; `|H|²` must not exceed `cap`.
pub fn double_coset(h: &PermGroup, g: &Permutation, cap: u64) -> Result<Vec<Permutation>> {
    let order = h.order();
    let squared = &order * &order;
    if !squared.le_u64(cap) {
        return Err(catg_core::Error::OrderExceedsCap { order: squared, cap }.into());
    }
    let elements = h.enumerate_elements(cap)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for h1 in &elements {
        let left = h1.then(g);
        for h2 in &elements {
            let p = left.then(h2);
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    let meet = h.intersection_small(&h.conjugate_subgroup(&g.inverse())?, cap)?;
    let expected = squared.to_u64().expect("bounded") / meet.order_u64().expect("small");
    assert_eq!(out.len() as u64, expected, "|HgH| = |H|²/|H ∩ H^(g⁻¹)|");
    Ok(out)
}

/// A materialized coset graph together with its coset representatives.
#[derive(Debug, Clone)]
pub struct CosetGraph {
    pub graph: Graph,
    h: PermGroup,
    reps: Vec<Permutation>,
    ids: HashMap<Permutation, u32>,
}

impl CosetGraph {
    pub fn representatives(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn vertex_of(&self, x: &Permutation) -> Result<usize> {
        let rep = self.h.canonical_coset_rep(x)?;
        Ok(self.ids[&rep] as usize)
    }

    /// Right multiplication by `x` on cosets, as a permutation of vertex ids.
    pub fn action(&self, x: &Permutation) -> Result<Permutation> {
        let images = self
            .reps
            .iter()
            .map(|r| self.vertex_of(&r.then(x)).map(|v| v as u32))
            .collect::<Result<Vec<u32>>>()?;
        Ok(Permutation::from_index_images(images)?)
    }

    /// Image of `group` (a subgroup of `X`) acting on the vertices.
    pub fn action_group(&self, group: &PermGroup) -> Result<PermGroup> {
        let gens = group.generators().iter().map(|g| self.action(g)).collect::<Result<Vec<_>>>()?;
        Ok(PermGroup::from_generators(gens)?)
    }
}

#[derive(Debug, Clone)]
pub struct CayleyGraphSpec {
    group: PermGroup,
    connection_set: Vec<Permutation>,
}

impl CayleyGraphSpec {
    pub fn new(group: PermGroup, connection_set: Vec<Permutation>) -> Result<CayleyGraphSpec> {
        let bad = |m: &str| Err(GraphError::InvalidConnectionSet(m.into()));
        let set: HashSet<&Permutation> = connection_set.iter().collect();
        if set.len() != connection_set.len() {
            return bad("repeated element");
        }
        for s in &connection_set {
            if s.degree() != group.degree() {
                return Err(catg_core::Error::DegreeMismatch { left: group.degree(), right: s.degree() }.into());
            }
            if s.is_identity() {
                return bad("contains the identity");
            }
            if !set.contains(&s.inverse()) {
                return Err(GraphError::InvalidConnectionSet(format!("inverse of {s} is missing")));
            }
            if !group.contains(s)? {
                return Err(GraphError::InvalidConnectionSet(format!("{s} is not in the group")));
            }
        }
        Ok(CayleyGraphSpec { group, connection_set })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn connection_set(&self) -> &[Permutation] {
        &self.connection_set
    }

    /// Vertices are the group elements in [`PermGroup::enumerate_elements`]
    /// order; `x ~ s·x` for `s ∈ S`.
    pub fn materialize(&self, vertex_cap: u64) -> Result<CayleyGraph> {
        let elements = self.group.enumerate_elements(vertex_cap)?;
        let ids: HashMap<Permutation, u32> =
            elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        let adjacency = elements
            .par_iter()
            .map(|x| self.connection_set.iter().map(|s| ids[&s.then(x)]).collect())
            .collect();
        let labels = elements.iter().map(Permutation::to_string).collect();
        let graph = Graph::from_adjacency(adjacency)?.with_labels(labels)?;
        Ok(CayleyGraph { graph, elements, ids })
    }
}

#[derive(Debug, Clone)]
pub struct CayleyGraph {
    pub graph: Graph,
    elements: Vec<Permutation>,
    ids: HashMap<Permutation, u32>,
}

impl CayleyGraph {
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn vertex_of(&self, x: &Permutation) -> Option<usize> {
        self.ids.get(x).map(|&v| v as usize)
    }

    /// `v ↦ v·g` on vertex ids.
    pub fn right_multiplication(&self, g: &Permutation) -> Permutation {
        let images = self.elements.iter().map(|x| self.ids[&x.then(g)]).collect();
        Permutation::from_index_images(images).expect("right multiplication is a bijection")
    }
}
