//! Ordered vertex partitions and equitable refinement.

use std::collections::VecDeque;
use std::hash::{DefaultHasher, Hasher};

use crate::Graph;

/// An ordered partition of `0..n` into cells. Cells are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    cells: Vec<Vec<u32>>,
    cell_of: Vec<u32>,
}

impl VertexPartition {
    pub fn unit(n: usize) -> VertexPartition {
        VertexPartition { cells: vec![(0..n as u32).collect()], cell_of: vec![0; n] }
    }

    pub fn cells(&self) -> &[Vec<u32>] {
        &self.cells
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_of[v] as usize
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.len() == self.cell_of.len()
    }

    /// First smallest cell with more than one vertex.
    pub fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|&(i, c)| (c.len(), i))
            .map(|(i, _)| i)
    }

    /// Every vertex of a cell has the same number of neighbours in each cell.
    pub fn is_equitable(&self, graph: &Graph) -> bool {
        let k = self.cells.len();
        let profile = |v: usize| {
            let mut counts = vec![0u32; k];
            for &w in graph.neighbors(v) {
                counts[self.cell_of[w as usize] as usize] += 1;
            }
            counts
        };
        self.cells.iter().all(|cell| {
            let first = profile(cell[0] as usize);
            cell[1..].iter().all(|&v| profile(v as usize) == first)
        })
    }

    /// Splits `v` off its cell: `{v}` takes the cell's place and the rest
    /// goes to the end. Returns the index of the singleton.
    pub(crate) fn individualize(&mut self, v: usize) -> usize {
        let c = self.cell_of[v] as usize;
        let rest: Vec<u32> = self.cells[c].iter().copied().filter(|&w| w as usize != v).collect();
        self.cells[c] = vec![v as u32];
        let idx = self.cells.len() as u32;
        for &w in &rest {
            self.cell_of[w as usize] = idx;
        }
        self.cells.push(rest);
        c
    }

    /// Refines to the coarsest equitable partition finer than `self`, given
    /// that every cell not in `splitters` already splits the rest evenly.
    /// Returns a hash of the refinement trace; it depends only on invariant
    /// data (cell indices, counts and fragment sizes), so isomorphic inputs
    /// give equal traces.
    pub(crate) fn refine(&mut self, graph: &Graph, splitters: &[usize]) -> u64 {
        let n = self.cell_of.len();
        let mut hasher = DefaultHasher::new();
        let mut queue: VecDeque<usize> = splitters.iter().copied().collect();
        let mut queued = vec![false; self.cells.len()];
        for &s in splitters {
            queued[s] = true;
        }
        let mut count = vec![0u32; n];
        let mut touched: Vec<u32> = Vec::new();
        let mut touched_cells: Vec<usize> = Vec::new();
        while let Some(w) = queue.pop_front() {
            queued[w] = false;
            for &u in &self.cells[w] {
                for &v in graph.neighbors(u as usize) {
                    if count[v as usize] == 0 {
                        touched.push(v);
                    }
                    count[v as usize] += 1;
                }
            }
            touched_cells.clear();
            touched_cells.extend(touched.iter().map(|&v| self.cell_of[v as usize] as usize));
            touched_cells.sort_unstable();
            touched_cells.dedup();
            hasher.write_usize(w);
            hasher.write_usize(touched_cells.len());
            for &c in &touched_cells {
                let cell = &self.cells[c];
                let first = count[cell[0] as usize];
                hasher.write_usize(c);
                if cell.iter().all(|&v| count[v as usize] == first) {
                    hasher.write_u32(first);
                    continue;
                }
                let mut members = cell.clone();
                members.sort_unstable_by_key(|&v| (count[v as usize], v));
                let mut fragments: Vec<Vec<u32>> = Vec::new();
                let mut last = None;
                for v in members {
                    let k = count[v as usize];
                    if last != Some(k) {
                        hasher.write_u32(k);
                        fragments.push(Vec::new());
                        last = Some(k);
                    }
                    fragments.last_mut().expect("pushed").push(v);
                }
                let mut fragments = fragments.into_iter();
                self.cells[c] = fragments.next().expect("nonempty cell");
                hasher.write_usize(self.cells[c].len());
                for fragment in fragments {
                    let idx = self.cells.len();
                    hasher.write_usize(fragment.len());
                    for &v in &fragment {
                        self.cell_of[v as usize] = idx as u32;
                    }
                    self.cells.push(fragment);
                    queued.push(true);
                    queue.push_back(idx);
                }
            }
            for &v in &touched {
                count[v as usize] = 0;
            }
            touched.clear();
        }
        hasher.write_usize(self.cells.len());
        hasher.finish()
    }
}

/// The coarsest equitable partition of `graph`, with its trace.
pub(crate) fn equitable(graph: &Graph) -> (VertexPartition, u64) {
    let mut p = VertexPartition::unit(graph.vertex_count());
    let trace = if graph.vertex_count() == 0 { 0 } else { p.refine(graph, &[0]) };
    (p, trace)
}
