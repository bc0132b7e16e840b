//! Group-theoretic facts about the degree-80 construction, each checked
//! against an oracle that does not go through the stabilizer chain.

mod common;

use catg_core::structure::{fingerprint, infer_s, recognize_table3};
use catg_core::{parse_cycles, BigCount, PermGroup, Permutation, StabilizerTag};
use common::{closure, fixture};

fn h_group() -> PermGroup {
    PermGroup::from_generators(fixture().select(&["a", "b", "c"]).unwrap()).unwrap()
}

#[test]
fn generator_listings_parse() {
    let f = fixture();
    assert_eq!(f.degree, 80);
    let a = f.get("a").unwrap();
    assert_eq!(a.image(1), 16);
    assert_eq!(a.image(16), 11);
    assert_eq!(a.order(), 4u64);
    assert_eq!(f.get("c").unwrap().order(), 5u64);
    assert_eq!(f.get("b").unwrap().order(), 4u64);
    for name in ["x1", "x2", "x3"] {
        assert!(f.get(name).unwrap().fixed_points().contains(&1), "{name} fixes 1");
    }
    for (name, p) in &f.entries {
        assert!(p.is_even(), "{name} is even");
    }
}

#[test]
fn defining_relations() {
    let f = fixture();
    let (a, b, c) = (f.get("a").unwrap(), f.get("b").unwrap(), f.get("c").unwrap());
    assert_eq!(Permutation::conjugate(c, b).unwrap(), c.compose(c).unwrap());
    assert_eq!(a.compose(b).unwrap(), b.compose(a).unwrap());
    assert_eq!(a.compose(c).unwrap(), c.compose(a).unwrap());
    // Replacing b by its inverse breaks the relation: c^(b^-1) = c^3.
    let c3 = c.pow(3);
    assert_eq!(c.conjugate_by(&b.inverse()), c3);
    assert_ne!(c3, c.pow(2));
}

#[test]
fn h_is_regular_of_order_80() {
    let h = h_group();
    assert_eq!(h.order(), 80u64);
    assert_eq!(closure(h.generators(), 100).len(), 80);
    assert!(h.is_transitive());
    assert!(h.is_regular());
    assert_eq!(h.point_stabilizer(1).unwrap().order(), 1u64);
    assert_eq!(h.enumerate_elements(100).unwrap().len(), 80);
}

#[test]
fn x1_is_not_in_h() {
    let f = fixture();
    let h = h_group();
    let x1 = f.get("x1").unwrap();
    let oracle = closure(h.generators(), 100);
    assert!(!oracle.contains(x1));
    assert!(!h.contains(x1).unwrap());
    assert!(x1.then(x1).is_identity());
}

#[test]
fn h_meets_its_x1_conjugate_in_16_elements() {
    let f = fixture();
    let h = h_group();
    let x1 = f.get("x1").unwrap();
    // Oracle: elements of H whose x1-conjugate-inverse lies in H, i.e.
    // H ∩ H^x1 = { h ∈ H : x1·h·x1⁻¹ ∈ H }.
    let elements = closure(h.generators(), 100);
    let oracle = elements
        .iter()
        .filter(|&hh| elements.contains(&x1.then(hh).then(&x1.inverse())))
        .count();
    assert_eq!(oracle, 16);
    let hx = h.conjugate_subgroup(x1).unwrap();
    let meet = h.intersection_small(&hx, 10_000).unwrap();
    assert_eq!(meet.order(), 16u64);
    assert_eq!(h.order().checked_div_exact(&meet.order()), Some(BigCount::from(5u64)));
    // symmetric in its arguments
    assert_eq!(hx.intersection_small(&h, 10_000).unwrap().order(), 16u64);
}

#[test]
fn h_is_f20_times_z4() {
    let h = h_group();
    let fp = fingerprint(&h).unwrap();
    assert_eq!(fp.order, 80);
    assert!(!fp.abelian);
    assert!(fp.element_orders.contains_key(&20));
    assert_eq!(fp.derived_order, 5);
    assert_eq!(fp.center_order, 4);
    let tag = recognize_table3(&h).unwrap();
    assert_eq!(tag, StabilizerTag::F20xZ4);
    assert_eq!(infer_s(tag).unwrap(), 3);
}

#[test]
fn h_and_x1_generate_a80() {
    let f = fixture();
    let x = PermGroup::from_generators(f.select(&["a", "b", "c", "x1"]).unwrap()).unwrap();
    let mut oracle = BigCount::one();
    for k in 2..=80u64 {
        oracle = oracle * k;
    }
    assert_eq!(x.order(), oracle.clone() / 2);
    let stab = x.point_stabilizer(1).unwrap();
    assert_eq!(stab.order(), BigCount::factorial(79) / 2);
    assert_eq!(stab.order() * BigCount::from(80u64), x.order());
    assert!(matches!(
        x.enumerate_elements(1000),
        Err(catg_core::Error::OrderExceedsCap { cap: 1000, .. })
    ));
}

#[test]
fn standard_a79_is_not_normal() {
    let f = fixture();
    let x = PermGroup::from_generators(f.select(&["a", "b", "c", "x1"]).unwrap()).unwrap();
    let long: String = (2..=80).map(|k| k.to_string()).collect::<Vec<_>>().join(" ");
    let g = PermGroup::from_generators(vec![
        parse_cycles("(2 3 4)", 80).unwrap(),
        parse_cycles(&format!("({long})"), 80).unwrap(),
    ])
    .unwrap();
    assert_eq!(g.order(), BigCount::factorial(79) / 2);
    assert!(g.is_subgroup_of(&x).unwrap());
    assert!(g.same_group(&x.point_stabilizer(1).unwrap()).unwrap());
    assert!(!g.is_normal_in(&x).unwrap());
    // (2 3 4)^b = (43 60 57) stays inside G; the 79-cycle is the witness,
    // since b sends 35 to 1 and so its conjugate moves 1.
    let b = f.get("b").unwrap();
    let small = parse_cycles("(2 3 4)", 80).unwrap().conjugate_by(b);
    assert_eq!(small.to_string(), "(43 60 57)");
    assert!(g.contains(&small).unwrap());
    let conj = g.generators()[1].conjugate_by(b);
    assert_ne!(conj.image(1), 1);
    assert!(!g.contains(&conj).unwrap());
    let (i, _) = g.normality_witness(&x).unwrap().expect("not normal");
    assert_eq!(i, 1);
}
