//! Simple undirected graphs on `0..n` with sorted adjacency lists.
//!
//! Edge-list format:
//!
//! ```text
//! vertices 3
//! 0 1
//! 0 2
//! 1 2
//! ```
//!
//! Vertices are 0-based, each edge appears once with `u < v`, `#` starts a
//! comment.

use std::collections::VecDeque;
use std::fmt::Write as _;

use catg_core::Permutation;

use crate::{GraphError, Result};

/// Equality compares adjacency only; labels are ignored.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(GraphError::InvalidGraph(format!("loop at vertex {u}")));
            }
            adjacency[u].push(v as u32);
            adjacency[v].push(u as u32);
        }
        Graph::from_adjacency(adjacency)
    }

    /// Sorts each list and checks the graph is simple and undirected.
    pub fn from_adjacency(mut adjacency: Vec<Vec<u32>>) -> Result<Graph> {
        let n = adjacency.len();
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(GraphError::InvalidGraph(format!("repeated edge at vertex {v}")));
            }
            if list.binary_search(&(v as u32)).is_ok() {
                return Err(GraphError::InvalidGraph(format!("loop at vertex {v}")));
            }
            if list.last().is_some_and(|&w| w as usize >= n) {
                return Err(GraphError::InvalidGraph(format!("vertex {v} has a neighbour outside 0..{n}")));
            }
        }
        let graph = Graph { adjacency, labels: None };
        for u in 0..n {
            for &v in graph.neighbors(u) {
                if !graph.has_edge(v as usize, u) {
                    return Err(GraphError::InvalidGraph(format!("edge {u} -> {v} has no reverse")));
                }
            }
        }
        Ok(graph)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.vertex_count() {
            return Err(GraphError::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v as usize)).filter(|&(u, v)| u < v))
    }

    /// Common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    queue.push_back(v as usize);
                }
            }
        }
        count == n
    }

    /// Whether the vertex permutation `p` (degree = vertex count) maps edges to edges.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        if p.degree() != self.vertex_count() {
            return false;
        }
        let img = p.index_images();
        let mut mapped = Vec::new();
        (0..self.vertex_count()).all(|u| {
            let target = img[u] as usize;
            if self.degree(u) != self.degree(target) {
                return false;
            }
            mapped.clear();
            mapped.extend(self.neighbors(u).iter().map(|&v| img[v as usize]));
            mapped.sort_unstable();
            mapped == self.neighbors(target)
        })
    }

    /// The graph with vertex `v` renamed to `p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.degree() != self.vertex_count() {
            return Err(GraphError::ActionDegree { group: p.degree(), graph: self.vertex_count() });
        }
        let img = p.index_images();
        let mut adjacency = vec![Vec::new(); self.vertex_count()];
        for (u, list) in self.adjacency.iter().enumerate() {
            adjacency[img[u] as usize] = list.iter().map(|&v| img[v as usize]).collect();
        }
        Graph::from_adjacency(adjacency)
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut vertex_count: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| GraphError::EdgeList { line: line_no, message };
            let words: Vec<&str> = line.split_whitespace().collect();
            let Some(n) = vertex_count else {
                match words.as_slice() {
                    ["vertices", n] => {
                        vertex_count =
                            Some(n.parse().map_err(|_| err(format!("invalid vertex count {n:?}")))?);
                        continue;
                    }
                    _ => return Err(err("expected `vertices <n>`".into())),
                }
            };
            let [u, v] = words.as_slice() else {
                return Err(err("expected `<u> <v>`".into()));
            };
            let u: usize = u.parse().map_err(|_| err(format!("invalid vertex {u:?}")))?;
            let v: usize = v.parse().map_err(|_| err(format!("invalid vertex {v:?}")))?;
            if u >= v {
                return Err(err(format!("edge ({u}, {v}) must satisfy u < v")));
            }
            if v >= n {
                return Err(err(format!("vertex {v} outside 0..{n}")));
            }
            edges.push((u, v));
        }
        let n = vertex_count.ok_or(GraphError::EdgeList { line: 0, message: "missing `vertices <n>`".into() })?;
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("vertices {}\n", self.vertex_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        if let Some(labels) = &self.labels {
            for (v, label) in labels.iter().enumerate() {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn complete(n: usize) -> Graph {
        let adjacency = (0..n).map(|u| (0..n as u32).filter(|&v| v as usize != u).collect()).collect();
        Graph { adjacency, labels: None }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle is simple")
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let edges: Vec<_> = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))).collect();
        Graph::from_edges(m + n, &edges).expect("complete bipartite graph is simple")
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, &edges).expect("Petersen graph is simple")
    }

    /// The `d`-cube on bit strings of length `d`.
    pub fn hypercube(d: u32) -> Graph {
        let n = 1usize << d;
        let adjacency = (0..n).map(|u| (0..d).map(|b| (u ^ (1 << b)) as u32).collect()).collect();
        Graph::from_adjacency(adjacency).expect("hypercube is simple")
    }

    /// Cartesian product, vertex `(a, b)` numbered `a * |other| + b`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.vertex_count();
        let mut adjacency = vec![Vec::new(); self.vertex_count() * m];
        for a in 0..self.vertex_count() {
            for b in 0..m {
                let list = &mut adjacency[a * m + b];
                list.extend(self.neighbors(a).iter().map(|&a2| a2 * m as u32 + b as u32));
                list.extend(other.neighbors(b).iter().map(|&b2| (a * m) as u32 + b2));
            }
        }
        Graph::from_adjacency(adjacency).expect("product of simple graphs is simple")
    }
}
