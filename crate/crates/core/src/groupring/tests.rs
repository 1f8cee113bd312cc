use super::*;
use crate::exactla::int;
use crate::groups::{build_preset, cyclic, DEFAULT_MAX_ORDER};

fn ring(spec: &str) -> GroupRing {
    GroupRing::new(Arc::new(build_preset(spec, DEFAULT_MAX_ORDER).unwrap()))
}

fn v(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| int(x)).collect()
}

#[test]
fn ring_arithmetic() {
    let c2 = Arc::new(cyclic(2, DEFAULT_MAX_ORDER).unwrap());
    assert!(RingElem::minus_one(&c2, 0).is_zero());
    let a1 = RingElem::minus_one(&c2, 1);
    assert_eq!(a1.mul(&a1).unwrap(), a1.scale(&int(-2)));
    let g = Arc::new(build_preset("dihedral:4", DEFAULT_MAX_ORDER).unwrap());
    let r = g.parse_element("r").unwrap();
    let s = g.parse_element("s").unwrap();
    let p = RingElem::minus_one(&g, r).mul(&RingElem::minus_one(&g, s)).unwrap();
    assert_eq!(p.augment(), int(0));
    let x = RingElem::group_elem(&g, r).add(&RingElem::one(&g).scale(&int(3))).unwrap();
    let y = RingElem::group_elem(&g, s).scale(&int(-2));
    assert_eq!(x.mul(&y).unwrap().augment(), x.augment() * y.augment());
    assert_eq!(a1.add(&p), Err(RingError::ParentMismatch));
}

#[test]
fn augmentation_ideals() {
    let r = ring("cyclic:2");
    assert!(r.aug_ideal(&r.group().trivial_subgroup()).is_zero());
    assert_eq!(r.augmentation(), Lattice::new(2, vec![v(&[-1, 1])]));
    for spec in ["cyclic:6", "quaternion8", "symmetric:3", "heisenberg:3"] {
        let r = ring(spec);
        assert_eq!(r.augmentation().rank(), r.dim() - 1);
    }
}

#[test]
fn sided_ideals() {
    let r = ring("symmetric:3");
    let g = r.group().clone();
    assert!(r.sided_ideal(Side::Left, &g.trivial_subgroup()).is_zero());
    assert_eq!(r.sided_ideal(Side::Left, &g.whole()), r.augmentation());
    assert_eq!(r.sided_ideal(Side::Right, &g.whole()), r.augmentation());
    let a3 = g.parse_subgroup("r").unwrap();
    assert_eq!(r.sided_ideal(Side::Left, &a3), r.sided_ideal(Side::Right, &a3));
    let s = g.parse_subgroup("s").unwrap();
    assert_ne!(r.sided_ideal(Side::Left, &s), r.sided_ideal(Side::Right, &s));
}

#[test]
fn filtration_of_c2() {
    let r = ring("cyclic:2");
    let f = Filtration::new(&r, &r.group().lower_central_series(), 4);
    assert_eq!(f.term(1), &r.augmentation());
    assert_eq!(f.term(2), &Lattice::new(2, vec![v(&[-2, 2])]));
    // the iterated lattice product is an independent route to I^3
    let i3 = r.power(&r.augmentation(), 3);
    assert_eq!(f.term(3), &i3);
    assert_eq!(f.term(3), &Lattice::new(2, vec![v(&[-4, 4])]));
}

#[test]
fn first_term_is_augmentation_for_every_series() {
    let r = ring("dihedral:4");
    let g = r.group().clone();
    let rot = g.parse_subgroup("r").unwrap();
    let series = [g.lower_central_series(), g.custom_series(vec![g.whole(), rot.clone(), g.parse_subgroup("r2").unwrap(), g.trivial_subgroup()]).unwrap()];
    for s in &series {
        let f = Filtration::new(&r, s, 2);
        assert_eq!(f.term(1), &r.augmentation());
    }
}

#[test]
fn fox_modules() {
    let r = ring("cyclic:2");
    let g = r.group().clone();
    let f = Filtration::new(&r, &g.lower_central_series(), 3);
    let j = r.aug_ideal(&g.whole());
    assert_eq!(f.fox_module(1, &j), r.left_ideal_of(&j));
    assert_eq!(f.fox_module(2, &j), Lattice::new(2, vec![v(&[-2, 2])]));
    assert!(f.fox_module(2, &r.zero()).is_zero());
}

#[test]
fn unit_cosets() {
    let r = ring("cyclic:2");
    assert_eq!(r.unit_coset_subgroup(&r.zero()), (vec![0], true));
    assert_eq!(r.unit_coset_subgroup(&r.augmentation()), (vec![0, 1], true));
    let f = Filtration::new(&r, &r.group().lower_central_series(), 2);
    assert_eq!(r.unit_coset_subgroup(f.term(2)), (vec![0], true));
}

#[test]
fn mod_m_reductions() {
    let d = |g: &FgAbGroup| g.torsion();
    assert_eq!(d(&mod_m_quotient(&FgAbGroup::cyclic(4), 2)), vec![int(2)]);
    assert_eq!(d(&mod_m_quotient(&FgAbGroup::free(1), 5)), vec![int(5)]);
    assert!(mod_m_quotient(&FgAbGroup::cyclic(3), 2).is_trivial());
}
