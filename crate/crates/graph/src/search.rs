//! Automorphism groups and isomorphism by individualization-refinement.
//!
//! The first path always individualizes the least vertex of the target cell
//! and ends in a discrete leaf `λ₀`. Working from the deepest level up, for
//! each vertex `w` of the target cell not yet in the orbit of the current
//! generators, the subtree below `w` is searched for a leaf `λ` such that
//! `λ₀ ↦ λ` is an automorphism. Nodes whose refinement trace differs from
//! the first path's at the same depth are pruned.

use catg_core::{PermGroup, Permutation};

use crate::partition::{equitable, VertexPartition};
use crate::{Graph, GraphError, Result};

pub const DEFAULT_VERTEX_CAP: usize = 2000;

struct PathNode {
    partition: VertexPartition,
    trace: u64,
}

/// The leftmost path: `path[d]` is the node at depth `d`, the last one discrete.
fn first_path(graph: &Graph) -> Vec<PathNode> {
    let (partition, trace) = equitable(graph);
    let mut path = vec![PathNode { partition, trace }];
    while let Some(t) = path.last().expect("nonempty").partition.target_cell() {
        let mut partition = path.last().expect("nonempty").partition.clone();
        let v = partition.cells()[t][0] as usize;
        let trace = individualize_refine(graph, &mut partition, v);
        path.push(PathNode { partition, trace });
    }
    path
}

fn individualize_refine(graph: &Graph, partition: &mut VertexPartition, v: usize) -> u64 {
    let c = partition.individualize(v);
    partition.refine(graph, &[c]) ^ (c as u64).rotate_left(32)
}

/// Map sending the vertex in cell `i` of `from` to the vertex in cell `i` of `to`.
fn leaf_map(from: &VertexPartition, to: &VertexPartition) -> Permutation {
    let mut images = vec![0u32; from.cells().len()];
    for (a, b) in from.cells().iter().zip(to.cells()) {
        images[a[0] as usize] = b[0];
    }
    Permutation::from_index_images(images).expect("discrete partitions give a bijection")
}

/// Whether `map` sends the edges of `a` exactly onto the edges of `b`.
fn is_isomorphism(a: &Graph, b: &Graph, map: &Permutation) -> bool {
    let img = map.index_images();
    let mut mapped = Vec::new();
    (0..a.vertex_count()).all(|u| {
        mapped.clear();
        mapped.extend(a.neighbors(u).iter().map(|&v| img[v as usize]));
        mapped.sort_unstable();
        mapped == b.neighbors(img[u] as usize)
    })
}

/// Depth-first search below `node` (at depth `depth`) of `target` for a leaf
/// matching the first path of `source`.
fn find_leaf(
    source: &Graph,
    target: &Graph,
    path: &[PathNode],
    node: &VertexPartition,
    depth: usize,
) -> Option<Permutation> {
    let Some(t) = node.target_cell() else {
        if depth + 1 != path.len() {
            return None;
        }
        let map = leaf_map(&path[depth].partition, node);
        return is_isomorphism(source, target, &map).then_some(map);
    };
    for &u in &node.cells()[t] {
        let mut child = node.clone();
        let trace = individualize_refine(target, &mut child, u as usize);
        if path.get(depth + 1).is_some_and(|p| p.trace == trace) {
            if let Some(map) = find_leaf(source, target, path, &child, depth + 1) {
                return Some(map);
            }
        }
    }
    None
}

struct Orbits {
    parent: Vec<u32>,
}

impl Orbits {
    fn new(n: usize) -> Orbits {
        Orbits { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] as usize != v {
            let up = self.parent[self.parent[v] as usize];
            self.parent[v] = up;
            v = up as usize;
        }
        v
    }

    fn absorb(&mut self, p: &Permutation) {
        for (v, &w) in p.index_images().iter().enumerate() {
            let (a, b) = (self.find(v), self.find(w as usize));
            if a != b {
                self.parent[a.max(b)] = a.min(b) as u32;
            }
        }
    }
}

/// Generators of `Aut(graph)` as a permutation group on the vertices
/// (point `i` is vertex `i - 1`).
pub fn automorphism_group(graph: &Graph, vertex_cap: usize) -> Result<PermGroup> {
    let n = graph.vertex_count();
    if n > vertex_cap {
        return Err(GraphError::VertexCapExceeded { vertices: n, cap: vertex_cap });
    }
    if n == 0 {
        return Err(GraphError::InvalidGraph("graph has no vertices".into()));
    }
    let path = first_path(graph);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut orbits = Orbits::new(n);
    for d in (0..path.len() - 1).rev() {
        let node = &path[d].partition;
        let t = node.target_cell().expect("non-leaf node");
        let cell = node.cells()[t].clone();
        let v = cell[0] as usize;
        let mut failed: Vec<usize> = Vec::new();
        for &w in &cell[1..] {
            let w = w as usize;
            let root = orbits.find(w);
            if root == orbits.find(v) || failed.iter().any(|&f| orbits.find(f) == root) {
                continue;
            }
            let mut child = node.clone();
            let trace = individualize_refine(graph, &mut child, w);
            let found =
                if trace == path[d + 1].trace { find_leaf(graph, graph, &path, &child, d + 1) } else { None };
            match found {
                Some(gamma) => {
                    orbits.absorb(&gamma);
                    gens.push(gamma);
                }
                None => failed.push(w),
            }
        }
    }
    for (i, g) in gens.iter().enumerate() {
        if !graph.is_automorphism(g) {
            return Err(GraphError::NonAutomorphismGroup { generator: i });
        }
    }
    if gens.is_empty() {
        return Ok(PermGroup::trivial(n));
    }
    Ok(PermGroup::from_generators(gens)?)
}

/// A vertex bijection `a → b` preserving adjacency, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Permutation> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return None;
    }
    if a.vertex_count() == 0 {
        return Some(Permutation::identity(0));
    }
    let path = first_path(a);
    let (root, trace) = equitable(b);
    if trace != path[0].trace {
        return None;
    }
    find_leaf(a, b, &path, &root, 0)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}
