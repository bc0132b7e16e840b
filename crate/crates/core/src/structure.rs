//! Recognition of the soluble pentavalent vertex stabilizers.
//!
//! A soluble vertex stabilizer of a pentavalent `(X, s)`-transitive graph is
//! one of `Z5, D10, D20` (s = 1), `F20, F20×Z2` (s = 2) or `F20×Z4` (s = 3).
//! These six groups are told apart by cheap invariants ([`GroupFingerprint`]),
//! which is checked against explicit permutation realizations rather than
//! assumed.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::{parse_cycles, Error, PermGroup, Result};

/// Largest order for which fingerprints are computed.
pub const FINGERPRINT_CAP: u64 = 200;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupFingerprint {
    pub order: u64,
    pub abelian: bool,
    /// element order → number of elements of that order
    pub element_orders: BTreeMap<u64, u64>,
    pub center_order: u64,
    pub derived_order: u64,
}

impl GroupFingerprint {
    pub fn of(group: &PermGroup) -> Result<GroupFingerprint> {
        let elements = group.enumerate_elements(FINGERPRINT_CAP)?;
        let mut element_orders = BTreeMap::new();
        for e in &elements {
            let o = e.order_u64().expect("order of an element of a small group");
            *element_orders.entry(o).or_insert(0) += 1;
        }
        let order = elements.len() as u64;
        let center_order = group.center(FINGERPRINT_CAP)?.order_u64().expect("small");
        let derived_order = group.derived_subgroup(FINGERPRINT_CAP)?.order_u64().expect("small");
        Ok(GroupFingerprint { order, abelian: group.is_abelian(), element_orders, center_order, derived_order })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StabilizerTag {
    Z5,
    D10,
    D20,
    F20,
    F20xZ2,
    F20xZ4,
    Other,
}

impl StabilizerTag {
    pub const SOLUBLE: [StabilizerTag; 6] = [
        StabilizerTag::Z5,
        StabilizerTag::D10,
        StabilizerTag::D20,
        StabilizerTag::F20,
        StabilizerTag::F20xZ2,
        StabilizerTag::F20xZ4,
    ];

    pub fn order(self) -> Option<u64> {
        match self {
            StabilizerTag::Z5 => Some(5),
            StabilizerTag::D10 => Some(10),
            StabilizerTag::D20 | StabilizerTag::F20 => Some(20),
            StabilizerTag::F20xZ2 => Some(40),
            StabilizerTag::F20xZ4 => Some(80),
            StabilizerTag::Other => None,
        }
    }

    pub fn s_value(self) -> Option<u32> {
        infer_s(self).ok()
    }

    /// Name as written in the stabilizer tables, e.g. `F20xZ4`.
    pub fn name(self) -> &'static str {
        match self {
            StabilizerTag::Z5 => "Z5",
            StabilizerTag::D10 => "D10",
            StabilizerTag::D20 => "D20",
            StabilizerTag::F20 => "F20",
            StabilizerTag::F20xZ2 => "F20xZ2",
            StabilizerTag::F20xZ4 => "F20xZ4",
            StabilizerTag::Other => "Other",
        }
    }

    pub fn from_name(name: &str) -> Option<StabilizerTag> {
        Self::SOLUBLE.into_iter().chain([StabilizerTag::Other]).find(|t| t.name() == name)
    }

    /// Generators of the fixed reference realization (cycle notation, degree).
    ///
    /// * `Z5`: `⟨(1 2 3 4 5)⟩`
    /// * `D10`: rotation and reflection of a pentagon
    /// * `D20`: rotation and reflection of a decagon
    /// * `F20`: `x ↦ x + 1` and `x ↦ 2x` on `Z5` (points `1..5` stand for `0..4`)
    /// * `F20xZ2`, `F20xZ4`: `F20` on `1..5` times a cycle on the next points
    pub fn reference_generators(self) -> Option<(&'static [&'static str], usize)> {
        const F20: &str = "(2 3 5 4)";
        match self {
            StabilizerTag::Z5 => Some((&["(1 2 3 4 5)"], 5)),
            StabilizerTag::D10 => Some((&["(1 2 3 4 5)", "(2 5)(3 4)"], 5)),
            StabilizerTag::D20 => {
                Some((&["(1 2 3 4 5 6 7 8 9 10)", "(2 10)(3 9)(4 8)(5 7)"], 10))
            }
            StabilizerTag::F20 => Some((&["(1 2 3 4 5)", F20], 5)),
            StabilizerTag::F20xZ2 => Some((&["(1 2 3 4 5)", F20, "(6 7)"], 7)),
            StabilizerTag::F20xZ4 => Some((&["(1 2 3 4 5)", F20, "(6 7 8 9)"], 9)),
            StabilizerTag::Other => None,
        }
    }

    pub fn reference_group(self) -> Option<PermGroup> {
        let (gens, degree) = self.reference_generators()?;
        let perms = gens.iter().map(|g| parse_cycles(g, degree).expect("valid reference")).collect();
        Some(PermGroup::from_generators(perms).expect("valid reference"))
    }
}

impl fmt::Display for StabilizerTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Reference fingerprints of the six soluble stabilizers, computed once.
///
/// Panics if two of them coincide: fingerprint matching is only a sound
/// recognizer while all six are pairwise distinct.
pub fn reference_fingerprints() -> &'static [(StabilizerTag, GroupFingerprint)] {
    static REFS: OnceLock<Vec<(StabilizerTag, GroupFingerprint)>> = OnceLock::new();
    REFS.get_or_init(|| {
        let refs: Vec<_> = StabilizerTag::SOLUBLE
            .into_iter()
            .map(|t| {
                let g = t.reference_group().expect("soluble tag");
                (t, GroupFingerprint::of(&g).expect("reference order below cap"))
            })
            .collect();
        for (i, (ta, fa)) in refs.iter().enumerate() {
            assert_eq!(Some(fa.order), ta.order(), "reference realization of {ta} has wrong order");
            for (tb, fb) in &refs[i + 1..] {
                assert_ne!(fa, fb, "reference fingerprints of {ta} and {tb} coincide");
            }
        }
        refs
    })
}

pub fn fingerprint(group: &PermGroup) -> Result<GroupFingerprint> {
    GroupFingerprint::of(group)
}

/// Identifies which soluble stabilizer type `group` is isomorphic to, or
/// [`StabilizerTag::Other`].
pub fn recognize_table3(group: &PermGroup) -> Result<StabilizerTag> {
    let order = group.order();
    if !order.le_u64(FINGERPRINT_CAP) {
        return Err(Error::OrderExceedsCap { order, cap: FINGERPRINT_CAP });
    }
    if !matches!(order.to_u64(), Some(5 | 10 | 20 | 40 | 80)) {
        return Ok(StabilizerTag::Other);
    }
    let fp = GroupFingerprint::of(group)?;
    Ok(reference_fingerprints()
        .iter()
        .find(|(_, reference)| *reference == fp)
        .map(|(t, _)| *t)
        .unwrap_or(StabilizerTag::Other))
}

/// Arc-transitivity `s` forced by a soluble stabilizer type.
pub fn infer_s(tag: StabilizerTag) -> Result<u32> {
    match tag {
        StabilizerTag::Z5 | StabilizerTag::D10 | StabilizerTag::D20 => Ok(1),
        StabilizerTag::F20 | StabilizerTag::F20xZ2 => Ok(2),
        StabilizerTag::F20xZ4 => Ok(3),
        StabilizerTag::Other => Err(Error::UnrecognizedStabilizer),
    }
}
