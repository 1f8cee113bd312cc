use super::*;
use crate::exactla::{tensor, AbMap, FgAbGroup, Lattice};
use crate::groupring::{FoxSetting, Side};
use crate::groups::{build_preset, FiniteGroup, Subgroup, DEFAULT_MAX_ORDER};
use std::sync::Arc;

fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(build_preset(spec, DEFAULT_MAX_ORDER).unwrap())
}

fn setting(spec: &str, h: &str, n_max: usize) -> FoxSetting {
    let g = group(spec);
    let series = g.lower_central_series();
    let h = g.parse_subgroup(h).unwrap();
    FoxSetting::new(g, series, h, n_max).unwrap()
}

fn sub(s: &FoxSetting, spec: &str) -> Subgroup {
    s.g.parse_subgroup(spec).unwrap()
}

fn invariants(g: &FgAbGroup) -> Vec<i64> {
    let (t, f) = g.invariants();
    let mut v: Vec<i64> = t.iter().map(|d| d.try_into().unwrap()).collect();
    v.extend(std::iter::repeat_n(0, f));
    v
}

#[test]
fn coinvariants_of_augmentation_ideal() {
    let s = setting("symmetric:3", "r", 2);
    let j = HModuleQuotient::new(&s.ring, &s.h, Side::Left, &s.ih, &Lattice::zero(s.dim())).unwrap();
    assert_eq!(invariants(&j.coinvariants()), vec![3]);
    let zero = HModuleQuotient::new(&s.ring, &s.h, Side::Left, &Lattice::zero(s.dim()), &Lattice::zero(s.dim())).unwrap();
    assert!(zero.coinvariants().is_trivial());
}

#[test]
fn action_matrices_form_an_action() {
    let s = setting("dihedral:4", "r", 3);
    let a = HModuleQuotient::new(&s.ring, &s.h, Side::Right, &s.ig(), s.f(3)).unwrap();
    a.check_action(&s.h).unwrap();
    let b = HModuleQuotient::new(&s.ring, &s.h, Side::Left, &s.ih, &s.ih_power(3)).unwrap();
    b.check_action(&s.h).unwrap();
}

#[test]
fn unstable_lattice_is_rejected() {
    let s = setting("symmetric:3", "s", 2);
    let err = HModuleQuotient::new(&s.ring, &s.g.whole(), Side::Left, &s.ih, &Lattice::zero(s.dim()));
    assert!(matches!(err, Err(TensorError::NotStable { .. })));
}

#[test]
fn tensor_over_trivial_group_is_plain_tensor() {
    let s = setting("cyclic:4", "1", 2);
    let a = HModuleQuotient::new(&s.ring, &s.h, Side::Right, &s.ig(), s.f(2)).unwrap();
    let b = HModuleQuotient::new(&s.ring, &s.h, Side::Left, &s.ig(), s.f(2)).unwrap();
    let t = tensor_over_h(&a, &b).unwrap();
    assert_eq!(t.group().invariants(), tensor(a.group(), b.group()).invariants());
    assert!(matches!(tensor_over_h(&b, &a), Err(TensorError::WrongSides)));
}

#[test]
fn group_ring_tensor_is_the_product_ideal() {
    for (g, h) in [("symmetric:3", "r"), ("dihedral:4", "r"), ("cyclic:4", "a2")] {
        let s = setting(g, h, 2);
        assert!(lemma11(&s, &s.ih).unwrap().pass, "{g} {h}");
    }
}

#[test]
fn identity_square_is_a_pushout() {
    let a = Arc::new(FgAbGroup::from_i64_divisors(&[2, 6]));
    let id = AbMap::identity(a);
    let sq = Square { top: id.clone(), left: id.clone(), right: id.clone(), bottom: id };
    assert!(pushout_check("id", &sq).pass);
}

#[test]
fn degree_two_square_for_q8() {
    let s = setting("quaternion8", "G", 2);
    let v = thm36(&s, &s.g.trivial_subgroup()).unwrap();
    assert!(v.iter().all(|x| x.pass), "{v:?}");
}

#[test]
fn degree_three_square_for_d4() {
    let s = setting("dihedral:4", "G", 3);
    let v = thm66(&s, &s.g.trivial_subgroup()).unwrap();
    assert!(v.iter().all(|x| x.pass), "{v:?}");
}

#[test]
fn bottom_row_exact_for_d4() {
    let s = setting("dihedral:4", "r", 2);
    let v = thm33(&s, &s.g.trivial_subgroup(), &s.ih).unwrap();
    assert!(v.iter().all(|x| x.pass), "{v:?}");
}

#[test]
fn corrupted_map_fails_at_the_right_node() {
    let s = setting("dihedral:4", "r", 2);
    let d = Diagram23::new(&s, &s.g.trivial_subgroup(), &s.ih).unwrap();
    let m = d.qbar.matrix();
    let bad = d.qbar.with_entry_unchecked(0, 0, m.get(0, 0) + 1);
    let v = exactness_check("middle", &d.square.bottom, &bad);
    assert!(!v.pass && v.witness.is_some());
}

#[test]
fn intersection_identity_for_d4() {
    let s = setting("dihedral:4", "r", 2);
    let k = sub(&s, "r2");
    let v = thm33(&s, &k, &s.ih).unwrap();
    assert!(v.iter().all(|x| x.pass), "{v:?}");
    let v = thm33(&s, &s.g.whole(), &s.ih).unwrap();
    assert!(v.iter().all(|x| x.pass), "{v:?}");
}

#[test]
fn decompositions_for_d4() {
    let s = setting("dihedral:4", "r", 2);
    assert!(thm15(&s, &s.ih).pass);
    assert!(thm110(&s, &s.ih).unwrap().iter().all(|v| v.pass));
    let z = FgAbGroup::trivial();
    assert!(decomposition_check("zero", &z, &[&z, &z]).pass);
}

#[test]
fn unit_subgroups() {
    let s = setting("symmetric:3", "r", 2);
    let v = cor32(&s, &s.ih);
    assert!(v.pass);
    assert_eq!(v.details["order"], "1");
    let s = setting("quaternion8", "i", 2);
    assert!(cor32(&s, &s.ih).pass);
}

#[test]
fn fox_theorem_coinvariants() {
    for (g, h) in [("symmetric:3", "r"), ("quaternion8", "i"), ("alternating:4", "a")] {
        let s = setting(g, h, 2);
        assert!(prop31(&s, &s.ih).unwrap().pass);
        assert!(prop31(&s, &s.ih_power(2)).unwrap().pass);
    }
}

#[test]
fn named_maps() {
    let g = group("cyclic:6");
    let phi = phi_g(g).unwrap();
    assert!(phi.is_iso());
    let s = setting("cyclic:2", "G", 2);
    assert!(zeta_n(&s, 2).unwrap().is_surjective());
    let s = setting("symmetric:3", "G", 2);
    let psi = psi_n(&s.ring, &s.g.whole()).unwrap();
    assert!(psi.codomain().is_trivial());
    let psi = psi_n(&s.ring, &sub(&s, "r")).unwrap();
    assert!(psi.is_iso());
}

#[test]
fn cyclic_formula() {
    let s = setting("cyclic:2", "G", 2);
    let v = cor24_cyclic(&s, &s.g.trivial_subgroup(), 2).unwrap();
    assert!(v.pass);
    assert_eq!(v.details["lhs"], FgAbGroup::cyclic(2).describe());
    let s = setting("cyclic:4", "a2", 3);
    for n in [2, 3] {
        assert!(cor24_cyclic(&s, &s.g.trivial_subgroup(), n).unwrap().pass);
    }
    let s = setting("dihedral:4", "1", 2);
    let v = cor24_cyclic(&s, &s.g.trivial_subgroup(), 2).unwrap();
    assert!(v.pass && v.details["lhs"] == FgAbGroup::trivial().describe());
}

#[test]
fn abelian_sequence() {
    let s = setting("cyclic:2*cyclic:4", "G", 3);
    for n in [2, 3] {
        let v = cor24_abelian(&s, &s.g.trivial_subgroup(), n).unwrap();
        assert!(v.iter().all(|x| x.pass), "{v:?}");
    }
}

#[test]
fn corrupting_the_bottom_map_always_fails() {
    let s = setting("quaternion8", "G", 2);
    let sq = Square24::new(&s, &s.g.trivial_subgroup()).unwrap();
    let (n, survivors) = corrupt_sweep("sq", &sq.square);
    assert!(n > 0);
    assert!(survivors.is_empty());
}
