use super::*;
use num_bigint::BigInt;

const MAX: usize = DEFAULT_MAX_ORDER;

fn orders(s: &GroupSeries) -> Vec<usize> {
    s.orders()
}

#[test]
fn preset_orders() {
    assert_eq!(cyclic(1, MAX).unwrap().order(), 1);
    assert_eq!(dihedral(4, MAX).unwrap().order(), 8);
    assert_eq!(quaternion8(MAX).unwrap().order(), 8);
    assert_eq!(symmetric(4, MAX).unwrap().order(), 24);
    assert_eq!(alternating(4, MAX).unwrap().order(), 12);
    assert_eq!(build_preset("cyclic:2*cyclic:4", MAX).unwrap().order(), 8);
    assert!(matches!(build_preset("cyclic:600", MAX), Err(GroupError::BoundExceeded { .. })));
    assert!(matches!(build_preset("dodecahedral:3", MAX), Err(GroupError::InvalidParams(_))));
}

/// Unitriangular 3x3 matrices mod 3 multiplied as matrices.
fn unitriangular_center_size() -> usize {
    type M = [[u32; 3]; 3];
    let mul = |a: &M, b: &M| -> M {
        let mut c = [[0u32; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum::<u32>() % 3;
            }
        }
        c
    };
    let mut all = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                all.push([[1, a, c], [0, 1, b], [0, 0, 1]]);
            }
        }
    }
    all.iter().filter(|x| all.iter().all(|y| mul(x, y) == mul(y, x))).count()
}

#[test]
fn heisenberg_center() {
    let h = heisenberg(3, MAX).unwrap();
    assert_eq!(h.order(), 27);
    assert_eq!(h.center().order(), unitriangular_center_size());
    assert_eq!(h.center().order(), 3);
}

#[test]
fn commutator_subgroups() {
    let s3 = symmetric(3, MAX).unwrap();
    let g = s3.whole();
    let d = s3.commutator_subgroup(&g, &g);
    assert_eq!(d.order(), 3);
    assert!(d.elements().iter().all(|&x| s3.elem_order(x) != 2));
    let q8 = quaternion8(MAX).unwrap();
    let g = q8.whole();
    let d = q8.commutator_subgroup(&g, &g);
    assert_eq!(d.elements(), &[0, q8.parse_element("i2").unwrap()].iter().copied().collect::<std::collections::BTreeSet<_>>().into_iter().collect::<Vec<_>>()[..]);
    assert!(q8.closure(&[]).is_trivial());
}

#[test]
fn lower_central_series_examples() {
    let c4 = cyclic(4, MAX).unwrap();
    assert_eq!(orders(&c4.lower_central_series()), vec![4, 1]);
    let d4 = dihedral(4, MAX).unwrap();
    let s = d4.lower_central_series();
    assert_eq!(orders(&s), vec![8, 2, 1]);
    assert!(s.term(2).contains(d4.parse_element("r2").unwrap()));
    assert_eq!(s.term(7), s.term(3));
    let s3 = symmetric(3, MAX).unwrap();
    let s = s3.lower_central_series();
    assert_eq!(orders(&s), vec![6, 3]);
    assert!(!s.terminates_at_one());
}

#[test]
fn induced_and_action_series() {
    let d4 = dihedral(4, MAX).unwrap();
    let gamma = d4.lower_central_series();
    assert_eq!(d4.induced_series(&gamma, &d4.whole()).stored(), gamma.stored());
    let r = d4.parse_subgroup("r").unwrap();
    let ind = d4.induced_series(&gamma, &r);
    assert_eq!(orders(&ind), vec![4, 2, 1]);
    let act = d4.action_series(&r, &d4.whole()).unwrap();
    assert_eq!(act.stored(), ind.stored());
    let s = d4.parse_subgroup("s").unwrap();
    assert_eq!(d4.action_series(&s, &d4.whole()), Err(GroupError::NotNormal));
}

#[test]
fn custom_series_validation() {
    let d4 = dihedral(4, MAX).unwrap();
    let g = d4.whole();
    let r = d4.parse_subgroup("r").unwrap();
    let one = d4.trivial_subgroup();
    let r2 = d4.parse_subgroup("r2").unwrap();
    // [G, <r>] = <r^2> is not inside the third term
    assert!(d4.custom_series(vec![g.clone(), r.clone(), one.clone()]).is_err());
    let s = d4.custom_series(vec![g.clone(), r.clone(), r2, one.clone(), one.clone()]).unwrap();
    assert_eq!(s.orders(), vec![8, 4, 2, 1]);
    let s = d4.parse_subgroup("s").unwrap();
    assert!(d4.custom_series(vec![g.clone(), s, one.clone()]).is_err());
    assert!(d4.custom_series(vec![g, one.clone(), one]).is_err());
}

#[test]
fn quotients_and_abelianization() {
    let d4 = dihedral(4, MAX).unwrap();
    let (q, proj) = d4.quotient(&d4.whole()).unwrap();
    assert_eq!(q.order(), 1);
    assert!(proj.iter().all(|&p| p == 0));
    let z = d4.center();
    let (q, proj) = d4.quotient(&z).unwrap();
    assert_eq!(q.order(), 4);
    for a in d4.elements() {
        for b in d4.elements() {
            assert_eq!(proj[d4.mul(a, b)], q.mul(proj[a], proj[b]));
        }
    }
    assert_eq!(d4.elements().filter(|&a| proj[a] == 0).collect::<Vec<_>>(), z.elements());
    let q8 = quaternion8(MAX).unwrap();
    let ab = q8.abelianize();
    assert_eq!(ab.divisors(), vec![BigInt::from(2), BigInt::from(2)]);
    let s3 = symmetric(3, MAX).unwrap();
    assert_eq!(s3.abelianize().divisors(), vec![BigInt::from(2)]);
}

#[test]
fn abelianization_is_a_homomorphism_with_exact_lifts() {
    for spec in ["cyclic:6", "cyclic:2*cyclic:4", "dihedral:6", "alternating:4", "heisenberg:3", "quaternion8"] {
        let g = build_preset(spec, MAX).unwrap();
        let ab = g.abelianize();
        let grp = ab.group();
        for a in g.elements() {
            for b in g.elements() {
                let lhs = ab.coords(g.mul(a, b)).to_vec();
                let rhs: Vec<BigInt> = ab.coords(a).iter().zip(ab.coords(b)).map(|(x, y)| x + y).collect();
                assert!(grp.elem_eq(&lhs, &rhs), "{spec}");
            }
        }
        for k in 0..ab.ngens() {
            let h = ab.lift(k);
            let d = ab.divisor(k);
            let mut e = vec![BigInt::from(0); ab.ngens()];
            e[k] = BigInt::from(1);
            assert_eq!(ab.coords(h), &e[..]);
            // exact order d_k modulo the commutator subgroup
            for j in 1..d {
                assert!(!ab.bottom().contains(g.pow(h, j)));
            }
            assert!(ab.bottom().contains(g.pow(h, d)));
        }
        let kernel: Vec<_> = g.elements().filter(|&a| grp.is_zero(ab.coords(a))).collect();
        assert_eq!(kernel, ab.bottom().elements());
    }
}

#[test]
fn table_loader_reports_failing_triple() {
    let ok = r#"{"order": 2, "table": [[0,1],[1,0]]}"#;
    assert_eq!(FiniteGroup::from_json_str(ok, MAX).unwrap().order(), 2);
    // a Latin square with identity 0 that is not associative
    let bad = r#"{"order": 5, "table": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]}"#;
    assert!(matches!(FiniteGroup::from_json_str(bad, MAX), Err(GroupError::Associativity { .. })));
    let ragged = r#"{"order": 2, "table": [[0,1],[1]]}"#;
    assert!(matches!(FiniteGroup::from_json_str(ragged, MAX), Err(GroupError::InvalidTable(_))));
    let big = r#"{"order": 600, "table": []}"#;
    assert!(matches!(FiniteGroup::from_json_str(big, MAX), Err(GroupError::BoundExceeded { .. })));
}

#[test]
fn words_and_labels() {
    let d4 = dihedral(4, MAX).unwrap();
    let r = d4.parse_element("r").unwrap();
    let s = d4.parse_element("s").unwrap();
    assert_eq!(d4.parse_element("r2s").unwrap(), d4.mul(d4.pow(r, 2), s));
    assert_eq!(d4.parse_element("r-1").unwrap(), d4.inv(r));
    for a in d4.elements() {
        assert_eq!(d4.parse_element(d4.label(a)).unwrap(), a);
    }
    assert!(d4.parse_element("q").is_err());
}
