//! Normality of Cayley graphs and `Aut(G, S)`.

use std::collections::HashMap;

use catg_core::{PermGroup, Permutation};

use crate::{automorphism_group, CayleyGraph, CayleyGraphSpec, GraphError, Result, DEFAULT_VERTEX_CAP};

/// Bound on the image tuples tried by [`aut_g_s`].
pub const TUPLE_CAP: u128 = 1_000_000;

/// Above this stabilizer order the normalizer cross-check in [`aut_g_s`] is skipped.
const NORMALIZER_CHECK_CAP: u64 = 100_000;

/// `G` acting on its own elements by right multiplication, on the vertex ids
/// used by [`CayleyGraphSpec::materialize`].
pub fn right_regular_representation(group: &PermGroup, cap: u64) -> Result<PermGroup> {
    let elements = group.enumerate_elements(cap)?;
    let ids: HashMap<&Permutation, u32> = elements.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
    let gens = group
        .generators()
        .iter()
        .map(|g| {
            let images = elements.iter().map(|x| ids[&x.then(g)]).collect();
            Permutation::from_index_images(images).expect("right multiplication is a bijection")
        })
        .collect();
    Ok(PermGroup::from_generators(gens)?)
}

fn regular_subgroup(cg: &CayleyGraph, group: &PermGroup) -> Result<PermGroup> {
    let gens = group.generators().iter().map(|g| cg.right_multiplication(g)).collect();
    Ok(PermGroup::from_generators(gens)?)
}

/// Whether the right regular copy of `G` is normal in `Aut Cay(G, S)`.
pub fn is_normal_cayley(spec: &CayleyGraphSpec, cap: u64) -> Result<bool> {
    let cg = spec.materialize(cap)?;
    let aut = automorphism_group(&cg.graph, DEFAULT_VERTEX_CAP.max(cap as usize))?;
    let r = regular_subgroup(&cg, spec.group())?;
    Ok(r.is_normal_in(&aut)?)
}

/// `Aut(G, S)`: group automorphisms of `G` fixing `S` setwise, as permutations
/// of the vertices of `Cay(G, S)` (fixing the identity vertex).
///
/// Found inside the stabilizer `A₁` of the identity vertex in the graph's
/// automorphism group: for a generating tuple `T` of `G`, every candidate
/// image tuple realized by `A₁` is extended multiplicatively and kept if it
/// is a well-defined bijection fixing `S`. When `A₁` is small enough the
/// result is checked against `{a ∈ A₁ : a normalizes G}`.
pub fn aut_g_s(spec: &CayleyGraphSpec, cap: u64) -> Result<PermGroup> {
    let cg = spec.materialize(cap)?;
    let n = cg.graph.vertex_count();
    let aut = automorphism_group(&cg.graph, DEFAULT_VERTEX_CAP.max(cap as usize))?;
    let stab = aut.point_stabilizer(1)?;
    let group = spec.group();

    // generating tuple: greedy from S, then from the generators of G
    let mut tuple: Vec<Permutation> = Vec::new();
    let mut span = PermGroup::trivial(group.degree());
    for s in spec.connection_set().iter().chain(group.generators()) {
        if !span.contains(s)? {
            tuple.push(s.clone());
            span = PermGroup::from_generators(tuple.clone())?;
        }
    }
    let t_ids: Vec<usize> = tuple.iter().map(|t| cg.vertex_of(t).expect("element of G")).collect();

    // level i: pointwise stabilizer of t_0..t_{i-1} in A₁, based at t_i
    let mut levels = Vec::with_capacity(t_ids.len());
    let mut k = stab;
    let mut tuples: u128 = 1;
    for &t in &t_ids {
        let based = PermGroup::with_base_prefix(nonempty_generators(&k), &[t + 1])?;
        let orbit = based.orbit(t + 1)?;
        tuples = tuples.saturating_mul(orbit.len() as u128);
        if tuples > TUPLE_CAP {
            return Err(GraphError::SearchCapExceeded { what: "image tuple", count: tuples, cap: TUPLE_CAP });
        }
        k = based.point_stabilizer(t + 1)?;
        levels.push((based, orbit));
    }

    let mult = |u: usize, v: usize| cg.vertex_of(&cg.elements()[u].then(&cg.elements()[v])).expect("closed");
    let s_ids: Vec<usize> =
        spec.connection_set().iter().map(|s| cg.vertex_of(s).expect("element of G")).collect();
    let mut s_sorted = s_ids.clone();
    s_sorted.sort_unstable();

    // Extends t_j ↦ images[j] to a map on G; None unless it is an
    // automorphism of G fixing S.
    let extend = |images: &[usize]| -> Option<Permutation> {
        let mut sigma = vec![u32::MAX; n];
        sigma[0] = 0;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for (&t, &ti) in t_ids.iter().zip(images) {
                let w = mult(u, t);
                let target = mult(sigma[u] as usize, ti) as u32;
                if sigma[w] == u32::MAX {
                    sigma[w] = target;
                    queue.push(w);
                } else if sigma[w] != target {
                    return None;
                }
            }
        }
        let p = Permutation::from_index_images(sigma).ok()?;
        let mut mapped: Vec<usize> = s_ids.iter().map(|&s| p.image_index(s)).collect();
        mapped.sort_unstable();
        (mapped == s_sorted).then_some(p)
    };

    let mut found: Vec<Permutation> = Vec::new();
    let identity = Permutation::identity(n);
    let mut stack: Vec<(usize, Permutation)> = vec![(0, identity)];
    while let Some((i, pi)) = stack.pop() {
        if i == levels.len() {
            let images: Vec<usize> = t_ids.iter().map(|&t| pi.image_index(t)).collect();
            if let Some(sigma) = extend(&images) {
                found.push(sigma);
            }
            continue;
        }
        let (based, orbit) = &levels[i];
        for &x in orbit {
            let u = based.transversal_element(x)?.expect("point in orbit");
            stack.push((i + 1, u.then(&pi)));
        }
    }
    found.sort();
    let result = PermGroup::generated_by_subset(n, &found);
    assert_eq!(result.order(), found.len() as u64, "Aut(G,S) is closed");

    let r = regular_subgroup(&cg, group)?;
    let joined = r.join_with(result.generators())?;
    assert_eq!(joined.order(), &r.order() * &result.order(), "G_R ⋊ Aut(G,S)");
    assert!(r.is_normalized_by(&joined)?, "Aut(G,S) normalizes G_R");
    if let Some(order) = aut.point_stabilizer(1)?.order_u64().filter(|&o| o <= NORMALIZER_CHECK_CAP) {
        let a1 = aut.point_stabilizer(1)?.enumerate_elements(order)?;
        let normalizing = a1
            .iter()
            .filter(|a| r.generators().iter().all(|g| r.contains(&g.conjugate_by(a)).expect("same degree")))
            .count();
        assert_eq!(normalizing, found.len(), "N_A(G_R) = G_R ⋊ Aut(G,S)");
    }
    Ok(result)
}

/// Strong generators, or the identity for the trivial group.
fn nonempty_generators(group: &PermGroup) -> Vec<Permutation> {
    let gens = group.strong_generators();
    if gens.is_empty() {
        vec![Permutation::identity(group.degree())]
    } else {
        gens
    }
}
