use super::*;
use num_bigint::BigInt;
use std::sync::Arc;

fn v(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| int(x)).collect()
}

fn lat(dim: usize, rows: &[&[i64]]) -> Lattice {
    Lattice::new(dim, rows.iter().map(|r| v(r)))
}

fn divs(g: &FgAbGroup) -> (Vec<i64>, usize) {
    let (t, f) = g.invariants();
    (t.iter().map(|d| i64::try_from(d).unwrap()).collect(), f)
}

#[test]
fn hnf_identity_and_zero() {
    let id = IntMatrix::identity(2);
    let (h, u) = hnf(&id);
    assert_eq!(h, id);
    assert_eq!(u, id);
    let z = IntMatrix::from_i64(&[&[0, 0]]);
    assert_eq!(hnf(&z).0, z);
}

#[test]
fn hnf_two_by_two() {
    let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
    let (h, u) = hnf(&m);
    assert_eq!(h, IntMatrix::from_i64(&[&[2, 0], &[0, 4]]));
    assert_eq!(u.mul(&m), h);
    assert_eq!(u.det().magnitude(), &1u32.into());
}

#[test]
fn snf_examples() {
    let id = IntMatrix::identity(3);
    assert_eq!(snf(&id).0, id);
    let z = IntMatrix::from_i64(&[&[0]]);
    assert_eq!(snf(&z).0, z);
    let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
    let (s, u, w) = snf(&m);
    assert_eq!(s, IntMatrix::from_i64(&[&[2, 0], &[0, 4]]));
    assert_eq!(u.mul(&m).mul(&w), s);
}

#[test]
fn lattice_sum_and_intersection() {
    let l = lat(2, &[&[3, 1], &[0, 5]]);
    assert_eq!(l.sum(&Lattice::zero(2)).unwrap(), l);
    let two = lat(2, &[&[2, 0], &[0, 2]]);
    let three = lat(2, &[&[3, 0], &[0, 3]]);
    assert_eq!(two.intersect(&three).unwrap(), lat(2, &[&[6, 0], &[0, 6]]));
    let a = lat(2, &[&[2, 0], &[0, 1]]);
    let b = lat(2, &[&[1, 1]]);
    assert_eq!(a.intersect(&b).unwrap(), lat(2, &[&[2, 2]]));
    assert!(a.contains(&v(&[4, 7])));
    assert!(!a.contains(&v(&[1, 0])));
    assert_eq!(a.sum(&lat(3, &[])), Err(ExactError::DimensionMismatch { expected: 2, got: 3 }));
}

#[test]
fn lattice_quotients() {
    let big = lat(2, &[&[1, 0], &[0, 2]]);
    let q = LatticeQuotient::new(&big, &big).unwrap();
    assert!(q.group().is_trivial());
    let q = LatticeQuotient::new(&Lattice::full(2), &lat(2, &[&[2, 0], &[0, 2]])).unwrap();
    assert_eq!(divs(q.group()), (vec![2, 2], 0));
    let q = LatticeQuotient::new(&big, &lat(2, &[&[2, 0], &[0, 2]])).unwrap();
    assert_eq!(divs(q.group()), (vec![2], 0));
    assert_eq!(q.coords(&v(&[1, 0])).unwrap(), v(&[1]));
    assert_eq!(q.coords(&v(&[3, 2])).unwrap(), v(&[1]));
    assert_eq!(q.coords(&v(&[2, 4])).unwrap(), v(&[0]));
    assert_eq!(q.coords(&v(&[0, 1])), Err(ExactError::NotMember));
    let lift = q.lift(0).to_vec();
    assert_eq!(q.coords(&lift).unwrap(), v(&[1]));
    assert!(matches!(LatticeQuotient::new(&lat(2, &[&[2, 0]]), &lat(2, &[&[1, 0]])), Err(ExactError::NotSublattice { row: 0 })));
}

#[test]
fn normal_forms_of_elements() {
    let g = FgAbGroup::new(2, vec![v(&[2, 4]), v(&[6, 8])]);
    assert_eq!(divs(&g), (vec![2, 4], 0));
    assert_eq!(g.order(), Some(int(8)));
    let x = v(&[5, -3]);
    let nf = g.normal_form(&x);
    let back = g.from_normal_form(&nf);
    assert!(g.elem_eq(&x, &back));
    assert_eq!(g.normal_form(&back), nf);
    assert!(g.is_zero(&v(&[2, 4])));
    assert!(!g.is_zero(&v(&[1, 0])));
}

#[test]
fn tensor_examples() {
    let z2 = FgAbGroup::cyclic(2);
    let z3 = FgAbGroup::cyclic(3);
    assert!(tensor(&z2, &z3).is_trivial());
    let a = FgAbGroup::new(2, vec![v(&[2, 4]), v(&[6, 8])]);
    assert_eq!(divs(&tensor(&FgAbGroup::free(1), &a)), divs(&a));
    let b = FgAbGroup::from_i64_divisors(&[2, 0]);
    assert_eq!(divs(&tensor(&b, &FgAbGroup::cyclic(4))), (vec![2, 4], 0));
}

#[test]
fn tor_examples() {
    let (t, g) = tor(&FgAbGroup::free(1), &FgAbGroup::from_i64_divisors(&[2, 4]));
    assert!(t.is_trivial() && g.is_empty());
    let (t, g) = tor(&FgAbGroup::cyclic(2), &FgAbGroup::cyclic(4));
    assert_eq!(divs(&t), (vec![2], 0));
    assert_eq!(g, vec![TorGenerator { x: v(&[1]), k: int(2), y: v(&[2]) }]);
    let (t, _) = tor(&FgAbGroup::cyclic(6), &FgAbGroup::cyclic(4));
    assert_eq!(divs(&t), (vec![2], 0));
}

#[test]
fn exterior_square_examples() {
    let (w, _) = exterior_square(&Arc::new(FgAbGroup::free(1)));
    assert!(w.is_trivial());
    let (w, p) = exterior_square(&Arc::new(FgAbGroup::from_i64_divisors(&[2, 2])));
    assert_eq!(divs(&w), (vec![2], 0));
    assert!(p.is_surjective());
    let (w, _) = exterior_square(&Arc::new(FgAbGroup::from_i64_divisors(&[2, 4])));
    assert_eq!(divs(&w), (vec![2], 0));
    let (w, _) = exterior_square(&Arc::new(FgAbGroup::free(3)));
    assert_eq!(divs(&w), (vec![], 3));
}

#[test]
fn l2_on_small_groups() {
    let z2 = Arc::new(FgAbGroup::cyclic(2));
    let (w, _) = exterior_square(&z2);
    let f = l2(&z2, &w);
    assert!(f.domain().is_trivial());
    let z = Arc::new(FgAbGroup::free(2));
    let (w, p) = exterior_square(&z);
    let f = l2(&z, &w);
    assert!(f.is_injective());
    // p ∘ l2 is multiplication by 2 on the exterior square
    let twice = f.then(&p).unwrap();
    assert_eq!(twice.apply(&v(&[1])), v(&[2]));
}

#[test]
fn map_kernels_images_cokernels() {
    let z = Arc::new(FgAbGroup::free(1));
    assert!(AbMap::identity(z.clone()).kernel().is_trivial());
    let z2 = Arc::new(FgAbGroup::cyclic(2));
    let proj = AbMap::from_images(z.clone(), z2.clone(), vec![v(&[1])]).unwrap();
    let k = proj.kernel();
    assert_eq!(k.lattice, lat(1, &[&[2]]));
    assert_eq!(divs(&k.group()), (vec![], 1));
    let z4 = Arc::new(FgAbGroup::cyclic(4));
    let double = AbMap::from_images(z4.clone(), z4.clone(), vec![v(&[2])]).unwrap();
    assert_eq!(divs(&double.cokernel().0), (vec![2], 0));
    assert_eq!(divs(&double.kernel().group()), (vec![2], 0));
    assert_eq!(divs(&double.image().group()), (vec![2], 0));
    assert!(!double.is_iso());
    assert!(matches!(AbMap::from_images(z2, z4, vec![v(&[1])]), Err(ExactError::IllDefined { relation: 0 })));
}

#[test]
fn smith_iso_round_trip() {
    let g = Arc::new(FgAbGroup::new(3, vec![v(&[2, 4, 0]), v(&[6, 8, 0]), v(&[0, 0, 3])]));
    let (d, to, from) = g.smith_iso();
    assert_eq!(divs(&d), (vec![2, 12], 0));
    assert!(to.is_iso() && from.is_iso());
    assert!(to.then(&from).unwrap().same_as(&AbMap::identity(g.clone())));
}

#[test]
fn wedge_indexing() {
    let n = 4;
    let mut seen = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            seen.push(wedge_index(n, i, j));
        }
    }
    assert_eq!(seen, (0..6).collect::<Vec<_>>());
}
