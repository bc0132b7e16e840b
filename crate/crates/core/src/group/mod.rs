//! Permutation groups backed by a base and strong generating set.

mod chain;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::{BigCount, Error, Permutation, Result};
use chain::StabChain;

/// Default cap for element enumeration and small-subgroup intersections.
pub const DEFAULT_ENUM_CAP: u64 = 10_000;

/// A permutation group on `{1, …, degree}` given by generators, with its
/// stabilizer chain built eagerly at construction. Immutable afterwards.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>())
            .field("order", &self.order())
            .finish()
    }
}

impl PermGroup {
    /// Builds `⟨gens⟩` with deterministic Schreier–Sims.
    pub fn from_generators(gens: Vec<Permutation>) -> Result<PermGroup> {
        Self::with_base_prefix(gens, &[])
    }

    /// Like [`from_generators`](Self::from_generators), with the base starting
    /// at the given 1-based points.
    pub fn with_base_prefix(gens: Vec<Permutation>, base_prefix: &[usize]) -> Result<PermGroup> {
        let first = gens.first().ok_or(Error::EmptyGenerators)?;
        let degree = first.degree();
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        let mut prefix = Vec::with_capacity(base_prefix.len());
        for &b in base_prefix {
            if b == 0 || b > degree {
                return Err(Error::PointOutOfRange { point: b, degree });
            }
            if !prefix.contains(&(b - 1)) {
                prefix.push(b - 1);
            }
        }
        let chain = StabChain::build(degree, &gens, &prefix);
        Ok(PermGroup { degree, generators: gens, chain })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        Self::from_generators(vec![Permutation::identity(degree)]).expect("identity generator")
    }

    /// Symmetric group on `{1, …, n}`.
    pub fn symmetric(n: usize) -> PermGroup {
        if n < 2 {
            return Self::trivial(n.max(1));
        }
        let mut cycle: Vec<usize> = (2..=n).collect();
        cycle.push(1);
        let gens = vec![
            crate::parse_cycles("(1 2)", n).expect("valid"),
            Permutation::from_images(&cycle).expect("valid"),
        ];
        Self::from_generators(gens).expect("valid generators")
    }

    /// Alternating group on `{1, …, n}`, generated by 3-cycles `(1 2 k)`.
    pub fn alternating(n: usize) -> PermGroup {
        if n < 3 {
            return Self::trivial(n.max(1));
        }
        let gens = (3..=n)
            .map(|k| crate::parse_cycles(&format!("(1 2 {k})"), n).expect("valid"))
            .collect();
        Self::from_generators(gens).expect("valid generators")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain.strong_generators()
    }

    /// 1-based base points.
    pub fn base(&self) -> Vec<usize> {
        self.chain.base().into_iter().map(|b| b + 1).collect()
    }

    /// Basic orbit lengths along the base; their product is the order.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigCount {
        self.chain.order()
    }

    /// Order as a machine word, if it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: p.degree() });
        }
        Ok(())
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point == 0 || point > self.degree {
            return Err(Error::PointOutOfRange { point, degree: self.degree });
        }
        Ok(())
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.chain.contains(p))
    }

    /// Residue of sifting `p`: the identity exactly when `p` is in the group.
    pub fn sift(&self, p: &Permutation) -> Result<Permutation> {
        self.check_degree(p)?;
        Ok(self.chain.strip_from(p.clone(), 0).0)
    }

    /// Orbit of a 1-based point, ascending.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        seen[point - 1] = true;
        let mut queue = VecDeque::from([point - 1]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.image_index(p);
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        Ok((0..self.degree).filter(|&i| seen[i]).map(|i| i + 1).collect())
    }

    /// All orbits, each ascending, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 1..=self.degree {
            if assigned[p - 1] {
                continue;
            }
            let orbit = self.orbit(p).expect("point in range");
            for &q in &orbit {
                assigned[q - 1] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(1).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    /// Transitive with order equal to the degree.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == self.degree as u64
    }

    /// Stabilizer of a 1-based point.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        self.check_point(point)?;
        let rebased;
        let chain = if self.chain.levels.first().map(|l| l.base_point) == Some(point - 1) {
            &self.chain
        } else {
            rebased = StabChain::build(self.degree, &self.chain.strong_generators(), &[point - 1]);
            &rebased
        };
        Ok(Self::from_chain(chain.tail(1)))
    }

    /// Pointwise stabilizer of a sequence of 1-based points.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        if points.is_empty() {
            return Ok(self.clone());
        }
        let prefix: Vec<usize> = points.iter().map(|p| p - 1).collect();
        let chain = StabChain::build(self.degree, &self.chain.strong_generators(), &prefix);
        let depth = dedup_count(&prefix);
        Ok(Self::from_chain(chain.tail(depth)))
    }

    fn from_chain(chain: StabChain) -> PermGroup {
        let mut generators = chain.strong_generators();
        if generators.is_empty() {
            generators.push(Permutation::identity(chain.degree));
        }
        PermGroup { degree: chain.degree, generators, chain }
    }

    /// A transversal element mapping the first base point to `point`
    /// (1-based), or `None` if `point` is outside its orbit.
    pub fn transversal_element(&self, point: usize) -> Result<Option<Permutation>> {
        self.check_point(point)?;
        let Some(level) = self.chain.levels.first() else {
            return Ok(None);
        };
        if !level.in_orbit(point - 1) {
            return Ok(None);
        }
        Ok(Some(level.representative(point - 1, self.degree)))
    }

    /// Lexicographically least base image tuple representative of the right
    /// coset `self·x`: the unique element of `Hx` whose images of the base of
    /// `self` are minimal level by level. Depends only on the coset.
    pub fn canonical_coset_rep(&self, x: &Permutation) -> Result<Permutation> {
        self.check_degree(x)?;
        let mut y = x.clone();
        // Elements of the coset are u·y for u in the current stabilizer; at
        // each level pick the orbit point whose image under y is least.
        for level in &self.chain.levels {
            let best = level
                .orbit
                .iter()
                .copied()
                .min_by_key(|&p| y.image_index(p))
                .expect("orbit contains the base point");
            if best != level.base_point {
                let u = level.representative(best, self.degree);
                y = u.then(&y);
            }
        }
        Ok(y)
    }

    /// Every element, identity first, in breadth-first closure order over the
    /// generator list (right multiplication by generators).
    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<Permutation>> {
        let order = self.order();
        if !order.le_u64(cap) {
            return Err(Error::OrderExceedsCap { order, cap });
        }
        let expected = order.to_u64().expect("bounded by cap") as usize;
        let identity = Permutation::identity(self.degree);
        let mut index: HashMap<Permutation, usize> = HashMap::with_capacity(expected);
        let mut elements = Vec::with_capacity(expected);
        index.insert(identity.clone(), 0);
        elements.push(identity);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in &self.generators {
                let y = x.then(g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        debug_assert_eq!(elements.len(), expected);
        Ok(elements)
    }

    /// `self ∩ other`, computed by filtering the elements of `self`, which must
    /// have order at most `cap`.
    pub fn intersection_small(&self, other: &PermGroup, cap: u64) -> Result<PermGroup> {
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let elements = self.enumerate_elements(cap)?;
        let common: Vec<Permutation> =
            elements.into_iter().filter(|h| other.chain.contains(h)).collect();
        Ok(Self::generated_by_subset(self.degree, &common))
    }

    /// Subgroup generated by `elements`, keeping only generators that enlarge
    /// the group so far. Trivial group for an empty slice.
    pub fn generated_by_subset(degree: usize, elements: &[Permutation]) -> PermGroup {
        let mut group = Self::trivial(degree);
        let mut gens: Vec<Permutation> = Vec::new();
        for e in elements {
            if !group.chain.contains(e) {
                gens.push(e.clone());
                group = Self::from_generators(gens.clone()).expect("nonempty, equal degree");
            }
        }
        group
    }

    /// `H^g = g⁻¹Hg`.
    pub fn conjugate_subgroup(&self, g: &Permutation) -> Result<PermGroup> {
        self.check_degree(g)?;
        Self::from_generators(self.generators.iter().map(|h| h.conjugate_by(g)).collect())
    }

    /// Whether `self` is normalized by every generator of `big`. Does not
    /// require `self ≤ big`; combine with [`is_subgroup_of`](Self::is_subgroup_of)
    /// for the usual notion.
    pub fn is_normalized_by(&self, big: &PermGroup) -> Result<bool> {
        Ok(self.normality_witness(big)?.is_none())
    }

    /// `self ⊴ big`: subgroup and normalized by every generator.
    pub fn is_normal_in(&self, big: &PermGroup) -> Result<bool> {
        Ok(self.is_subgroup_of(big)? && self.normality_witness(big)?.is_none())
    }

    /// First pair `(i, j)` (indices into the generator lists of `self` and
    /// `big`) such that `self.generators[i]^big.generators[j]` is not in `self`.
    pub fn normality_witness(&self, big: &PermGroup) -> Result<Option<(usize, usize)>> {
        if big.degree != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: big.degree });
        }
        for (i, n) in self.generators.iter().enumerate() {
            for (j, g) in big.generators.iter().enumerate() {
                if !self.chain.contains(&n.conjugate_by(g)) {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_subgroup_of(&self, big: &PermGroup) -> Result<bool> {
        if big.degree != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: big.degree });
        }
        Ok(self.generators.iter().all(|g| big.chain.contains(g)))
    }

    /// Same element set.
    pub fn same_group(&self, other: &PermGroup) -> Result<bool> {
        Ok(self.order() == other.order() && self.is_subgroup_of(other)?)
    }

    /// `⟨self, extra⟩`.
    pub fn join_with(&self, extra: &[Permutation]) -> Result<PermGroup> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Self::from_generators(gens)
    }

    /// Group generated by the commutators of all pairs of elements. Needs the
    /// group to be enumerable within `cap`.
    pub fn derived_subgroup(&self, cap: u64) -> Result<PermGroup> {
        let elements = self.enumerate_elements(cap)?;
        let mut commutators = HashSet::new();
        for x in &elements {
            for y in &self.generators {
                commutators.insert(x.commutator(y));
            }
        }
        // The normal closure of [x, gen] over all x is the derived subgroup.
        let mut comms: Vec<Permutation> = commutators.into_iter().collect();
        comms.sort();
        let seed = Self::generated_by_subset(self.degree, &comms);
        let conj: Vec<Permutation> = seed
            .generators
            .iter()
            .flat_map(|c| elements.iter().map(move |x| c.conjugate_by(x)))
            .collect();
        let mut all = seed.generators.clone();
        all.extend(conj);
        Ok(Self::generated_by_subset(self.degree, &all))
    }

    /// Elements commuting with every generator.
    pub fn center(&self, cap: u64) -> Result<PermGroup> {
        let elements = self.enumerate_elements(cap)?;
        let central: Vec<Permutation> = elements
            .into_iter()
            .filter(|z| self.generators.iter().all(|g| z.then(g) == g.then(z)))
            .collect();
        Ok(Self::generated_by_subset(self.degree, &central))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.then(b) == b.then(a)))
    }
}

fn dedup_count(points: &[usize]) -> usize {
    let mut seen = HashSet::new();
    points.iter().filter(|p| seen.insert(**p)).count()
}
