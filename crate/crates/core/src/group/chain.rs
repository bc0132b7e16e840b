//! Deterministic Schreier–Sims over Schreier vectors.
//!
//! Each level stores the strong generators fixing all earlier base points,
//! their inverses, and a Schreier vector: for every orbit point the index of
//! the generator whose application reached it from its parent in the
//! breadth-first Schreier tree. Transversal elements are never stored; they
//! are recovered by walking the tree back to the base point.

use crate::{BigCount, Permutation};

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Debug, Clone)]
pub(crate) struct Level {
    pub(crate) base_point: usize,
    pub(crate) gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    schreier: Vec<u32>,
    pub(crate) orbit: Vec<usize>,
    /// `checked[k]`: how many orbit points (in orbit order) already had their
    /// Schreier generator with `gens[k]` sifted successfully.
    checked: Vec<usize>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut schreier = vec![NOT_IN_ORBIT; degree];
        schreier[base_point] = ROOT;
        Level {
            base_point,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            schreier,
            orbit: vec![base_point],
            checked: Vec::new(),
        }
    }

    /// Adds a generator and extends the Schreier tree. Existing tree edges are
    /// kept, so transversal elements of points already in the orbit never change.
    fn add_generator(&mut self, g: Permutation) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        self.checked.push(0);
        let mut head = 0;
        // A new generator can reach new points from anywhere in the old orbit,
        // and newly found points must be explored with every generator.
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            for (k, g) in self.gens.iter().enumerate() {
                let q = g.image_index(p);
                if self.schreier[q] == NOT_IN_ORBIT {
                    self.schreier[q] = k as u32;
                    self.orbit.push(q);
                }
            }
        }
    }

    #[inline]
    pub(crate) fn in_orbit(&self, point: usize) -> bool {
        self.schreier[point] != NOT_IN_ORBIT
    }

    /// Transversal element mapping the base point to `point`.
    pub(crate) fn representative(&self, point: usize, degree: usize) -> Permutation {
        let mut path = Vec::new();
        let mut p = point;
        while self.schreier[p] != ROOT {
            let k = self.schreier[p] as usize;
            path.push(k);
            p = self.inv_gens[k].image_index(p);
        }
        let mut rep = Permutation::identity(degree);
        for &k in path.iter().rev() {
            rep.then_assign(&self.gens[k]);
        }
        rep
    }

    /// Multiplies `x` on the right by the inverse transversal element of
    /// `base_point^x`, so the result fixes the base point. `None` when
    /// `base_point^x` lies outside the orbit.
    #[inline]
    fn strip_once(&self, x: &mut Permutation) -> Option<()> {
        let mut p = x.image_index(self.base_point);
        if !self.in_orbit(p) {
            return None;
        }
        while self.schreier[p] != ROOT {
            let k = self.schreier[p] as usize;
            x.then_assign(&self.inv_gens[k]);
            p = self.inv_gens[k].image_index(p);
        }
        Some(())
    }
}

#[derive(Debug, Clone)]
pub(crate) struct StabChain {
    pub(crate) degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    /// Builds a base and strong generating set for `⟨gens⟩`.
    ///
    /// The base starts with `base_prefix` (0-based points); further base points
    /// are the smallest point moved by the element that needs them.
    pub(crate) fn build(degree: usize, gens: &[Permutation], base_prefix: &[usize]) -> StabChain {
        let mut chain = StabChain { degree, levels: Vec::new() };
        for &b in base_prefix {
            chain.levels.push(Level::new(b, degree));
        }
        for g in gens.iter().filter(|g| !g.is_identity()) {
            if chain.levels.iter().all(|l| g.image_index(l.base_point) == l.base_point) {
                let b = g.first_moved_point().expect("non-identity") - 1;
                chain.levels.push(Level::new(b, degree));
            }
        }
        for g in gens.iter().filter(|g| !g.is_identity()) {
            for level in chain.levels.iter_mut() {
                level.add_generator(g.clone());
                if g.image_index(level.base_point) != level.base_point {
                    break;
                }
            }
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        'outer: while i > 0 {
            let lvl = i - 1;
            let mut k = 0;
            while k < self.levels[lvl].gens.len() {
                while self.levels[lvl].checked[k] < self.levels[lvl].orbit.len() {
                    let level = &self.levels[lvl];
                    let p = level.orbit[level.checked[k]];
                    let s = &level.gens[k];
                    let q = s.image_index(p);
                    // Tree edges give trivial Schreier generators.
                    let trivial = level.schreier[q] == k as u32 && level.inv_gens[k].image_index(q) == p;
                    if !trivial {
                        let mut y = level.representative(p, self.degree);
                        y.then_assign(s);
                        level.strip_once(&mut y).expect("Schreier generator image lies in the orbit");
                        let (residue, drop_level) = self.strip_from(y, lvl + 1);
                        if !residue.is_identity() {
                            if drop_level == self.levels.len() {
                                let b = residue.first_moved_point().expect("non-identity") - 1;
                                self.levels.push(Level::new(b, self.degree));
                            }
                            for l in lvl + 1..=drop_level {
                                self.levels[l].add_generator(residue.clone());
                            }
                            // The pair stays unchecked: once deeper levels are
                            // complete it sifts to the identity.
                            i = drop_level + 1;
                            continue 'outer;
                        }
                    }
                    self.levels[lvl].checked[k] += 1;
                }
                k += 1;
            }
            i -= 1;
        }
    }

    /// Sifts `x` through levels `from..`. Returns the residue and the level at
    /// which sifting stopped (`levels.len()` when it passed every level).
    pub(crate) fn strip_from(&self, mut x: Permutation, from: usize) -> (Permutation, usize) {
        for (idx, level) in self.levels.iter().enumerate().skip(from) {
            if level.strip_once(&mut x).is_none() {
                return (x, idx);
            }
        }
        let end = self.levels.len();
        (x, end)
    }

    pub(crate) fn contains(&self, x: &Permutation) -> bool {
        let (residue, _) = self.strip_from(x.clone(), 0);
        residue.is_identity()
    }

    pub(crate) fn order(&self) -> BigCount {
        self.levels
            .iter()
            .fold(BigCount::one(), |acc, l| acc * BigCount::from(l.orbit.len()))
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Strong generators, deduplicated, in level order.
    pub(crate) fn strong_generators(&self) -> Vec<Permutation> {
        crate::perm::dedup_preserving_order(self.levels.iter().flat_map(|l| l.gens.iter().cloned()))
    }

    /// The chain of the pointwise stabilizer of the first `depth` base points.
    pub(crate) fn tail(&self, depth: usize) -> StabChain {
        StabChain { degree: self.degree, levels: self.levels[depth..].to_vec() }
    }
}
