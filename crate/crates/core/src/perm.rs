//! Permutations of `{1, …, n}` and cycle notation.
//!
//! # Multiplication convention
//!
//! Permutations act on the **right**: the image of a point `i` under `p` is
//! written `i^p`, and the product `p·q` means "apply `p` first, then `q`", so
//! `i^(p·q) = (i^p)^q`. [`Permutation::compose`]`(p, q)` computes exactly this
//! `p·q`, and [`Permutation::conjugate`]`(p, g)` computes `p^g = g⁻¹·p·g`.
//! Coset graphs and Cayley graphs throughout the toolkit are built with this
//! convention (right cosets `Hx`, right multiplication actions).
//!
//! Points are 1-based everywhere a human sees them (parsing, printing,
//! [`Permutation::image`]). Storage is 0-based; the `*_index` methods expose it
//! for callers that index arrays by vertex id.

use std::collections::HashSet;
use std::fmt;

use crate::{BigCount, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree > 0, "permutation degree must be positive");
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from a 1-based image table: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero_based = images
            .iter()
            .map(|&v| if v == 0 { u32::MAX } else { (v - 1) as u32 })
            .collect();
        Self::from_index_images(zero_based)
    }

    /// Builds a permutation from a 0-based image table.
    pub fn from_index_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::NotABijection { degree: 0 });
        }
        let mut seen = vec![false; n];
        for &v in &images {
            let v = v as usize;
            if v >= n || seen[v] {
                return Err(Error::NotABijection { degree: n });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based `point`. Panics when the point is out of range.
    pub fn image(&self, point: usize) -> usize {
        assert!(point >= 1 && point <= self.degree(), "point {point} out of range");
        self.images[point - 1] as usize + 1
    }

    /// Image of the 0-based `index`.
    #[inline]
    pub fn image_index(&self, index: usize) -> usize {
        self.images[index] as usize
    }

    /// The 0-based image table.
    pub fn index_images(&self) -> &[u32] {
        &self.images
    }

    /// 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }

    /// `self·other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    /// Unchecked [`compose`](Self::compose). Panics on a degree mismatch.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&v| other.images[v as usize]).collect() }
    }

    /// In-place `self ← self·other`.
    #[inline]
    pub fn then_assign(&mut self, other: &Permutation) {
        debug_assert_eq!(self.degree(), other.degree());
        for v in self.images.iter_mut() {
            *v = other.images[*v as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹·p·g`, written `p^g`.
    pub fn conjugate(p: &Permutation, g: &Permutation) -> Result<Permutation> {
        p.check_degree(g)?;
        Ok(p.conjugate_by(g))
    }

    /// Unchecked `self^g = g⁻¹·self·g`: maps `i^g` to `i^(self·g)`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        assert_eq!(self.degree(), g.degree(), "degree mismatch");
        let mut images = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[v as usize];
        }
        Permutation { images }
    }

    /// Commutator `[p, q] = p⁻¹·q⁻¹·p·q`.
    pub fn commutator(&self, q: &Permutation) -> Permutation {
        self.inverse().then(&q.inverse()).then(self).then(q)
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc.then_assign(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length ≥ 2 on 1-based points, each starting at its
    /// minimum, ordered by first point.
    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            cycles.push(cycle);
        }
        CycleDecomposition { degree: n, cycles }
    }

    /// Lengths of the non-trivial cycles, ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().cycles.iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }

    /// 1-based fixed points, ascending.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] as usize == i).map(|i| i + 1).collect()
    }

    /// Least positive `k` with `self^k = 1`, as the lcm of the cycle lengths.
    pub fn order(&self) -> BigCount {
        let mut lcm = num_bigint::BigUint::from(1u8);
        for len in self.cycle_type() {
            let len = num_bigint::BigUint::from(len);
            let g = gcd(&lcm, &len);
            lcm = &lcm / &g * &len;
        }
        BigCount::from(lcm)
    }

    /// [`order`](Self::order) when it fits a machine word.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().iter().filter(|&&len| len % 2 == 0).count() % 2 == 0
    }

    /// Smallest 1-based point not fixed, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &v)| *i != v as usize).map(|(i, _)| i + 1)
    }

    pub fn parse(text: &str, degree: usize) -> Result<Permutation> {
        parse_cycles(text, degree)
    }
}

fn gcd(a: &num_bigint::BigUint, b: &num_bigint::BigUint) -> num_bigint::BigUint {
    let zero = num_bigint::BigUint::from(0u8);
    let (mut a, mut b) = (a.clone(), b.clone());
    while b != zero {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycles().fmt(f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Cycle decomposition of a permutation, fixed points omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub degree: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn to_permutation(&self) -> Result<Permutation> {
        let mut images: Vec<u32> = (0..self.degree as u32).collect();
        let mut used = vec![false; self.degree];
        for cycle in &self.cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > self.degree {
                    return Err(Error::PointOutOfRange { point: p, degree: self.degree });
                }
                if used[p - 1] {
                    return Err(Error::NotABijection { degree: self.degree });
                }
                used[p - 1] = true;
                images[p - 1] = (cycle[(k + 1) % cycle.len()] - 1) as u32;
            }
        }
        Permutation::from_index_images(images)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Parses cycle notation such as `(1 2 3)(4 5)` into a permutation of degree `degree`.
///
/// Grammar: `perm := cycle* ; cycle := '(' int (ws int)* ')'`, with optional
/// whitespace around cycles and inside the parentheses. `""` and `"()"` are
/// the identity. Errors carry the byte offset of the offending token.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::Parse { offset: 0, message: "degree must be positive".into() });
    }
    let bytes = text.as_bytes();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut pos = 0;
    let err = |offset: usize, message: &str| Error::Parse { offset, message: message.to_string() };

    loop {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(err(pos, "expected '('"));
        }
        let open = pos;
        pos += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos == bytes.len() {
                return Err(err(open, "unclosed '('"));
            }
            match bytes[pos] {
                b')' => {
                    pos += 1;
                    break;
                }
                b'0'..=b'9' => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let point: usize = text[start..pos]
                        .parse()
                        .map_err(|_| err(start, "integer too large"))?;
                    if point == 0 || point > degree {
                        return Err(Error::Parse {
                            offset: start,
                            message: format!("point {point} out of range 1..={degree}"),
                        });
                    }
                    if used[point - 1] {
                        return Err(Error::Parse {
                            offset: start,
                            message: format!("point {point} repeated"),
                        });
                    }
                    used[point - 1] = true;
                    cycle.push(point);
                    if pos < bytes.len() && !(bytes[pos].is_ascii_whitespace() || bytes[pos] == b')') {
                        return Err(err(pos, "expected whitespace or ')'"));
                    }
                }
                _ => return Err(err(pos, "expected integer or ')'")),
            }
        }
        for (k, &p) in cycle.iter().enumerate() {
            images[p - 1] = (cycle[(k + 1) % cycle.len()] - 1) as u32;
        }
    }
    Ok(Permutation { images })
}

/// Distinct elements, preserving first occurrence order.
pub fn dedup_preserving_order(perms: impl IntoIterator<Item = Permutation>) -> Vec<Permutation> {
    let mut seen = HashSet::new();
    perms.into_iter().filter(|p| seen.insert(p.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    #[test]
    fn parse_single_cycle() {
        assert_eq!(p("(1 2 3)", 3).images(), vec![2, 3, 1]);
    }

    #[test]
    fn parse_identity_forms() {
        assert!(p("", 5).is_identity());
        assert!(p("()", 5).is_identity());
        assert!(p("  ( ) ", 5).is_identity());
        assert_eq!(p("", 5).to_string(), "()");
    }

    #[test]
    fn parse_errors_report_offsets() {
        assert_eq!(
            parse_cycles("(1 2 9)", 5),
            Err(Error::Parse { offset: 5, message: "point 9 out of range 1..=5".into() })
        );
        assert_eq!(
            parse_cycles("(1 2)(2 3)", 5),
            Err(Error::Parse { offset: 6, message: "point 2 repeated".into() })
        );
        assert_eq!(
            parse_cycles("(1 2 1)", 5),
            Err(Error::Parse { offset: 5, message: "point 1 repeated".into() })
        );
        assert!(matches!(parse_cycles("(1 2", 5), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_cycles("1 2)", 5), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_cycles("(1,2)", 5), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_cycles("(0 1)", 5), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn printing_is_canonical() {
        assert_eq!(p("(3 1 2)(5 4)", 6).to_string(), "(1 2 3)(4 5)");
        assert_eq!(p("(4 5)(1 2 3)", 6).to_string(), "(1 2 3)(4 5)");
    }

    #[test]
    fn composition_applies_left_first() {
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        // 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
        assert_eq!(a.compose(&b).unwrap().to_string(), "(1 3 2)");
        assert!(a.compose(&a).unwrap().is_identity());
    }

    #[test]
    fn conjugation() {
        let c = p("(1 2 3)", 3);
        assert_eq!(Permutation::conjugate(&c, &Permutation::identity(3)).unwrap(), c);
        let g = p("(1 2)", 3);
        let direct = g.inverse().then(&c).then(&g);
        assert_eq!(c.conjugate_by(&g), direct);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(a.compose(&b), Err(Error::DegreeMismatch { left: 3, right: 4 }));
        assert!(Permutation::conjugate(&a, &b).is_err());
    }

    #[test]
    fn orders_and_cycle_types() {
        let x = p("(1 2)(3 4 5)(6 7 8 9)", 10);
        assert_eq!(x.order(), 12u64);
        assert_eq!(x.cycle_type(), vec![2, 3, 4]);
        assert_eq!(x.fixed_points(), vec![10]);
        assert!(x.is_even());
        assert!(!parse_cycles("(1 2)(3 4 5)", 5).unwrap().is_even());
        assert!(x.pow(12).is_identity());
        assert!(!x.pow(6).is_identity());
        assert_eq!(Permutation::identity(4).order(), 1u64);
    }

    #[test]
    fn from_images_validates() {
        assert!(Permutation::from_images(&[2, 1, 3]).is_ok());
        assert!(Permutation::from_images(&[2, 2, 3]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[]).is_err());
    }
}
