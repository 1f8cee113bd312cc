//! Property tests for the structural invariants of the exact linear algebra,
//! the group layer and the group ring filtrations.

use foxcalc::exactla::{exterior_square, hnf, snf, tensor, tor, AbMap, FgAbGroup, IntMatrix, Lattice};
use foxcalc::groupring::FoxSetting;
use foxcalc::groups::{build_preset, FiniteGroup, GroupSeries, Subgroup, DEFAULT_MAX_ORDER};
use foxcalc::tensor_h::decomposition_check;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use std::sync::Arc;

const SMALL_GROUPS: &[&str] =
    &["cyclic:4", "cyclic:6", "cyclic:2*cyclic:2", "cyclic:2*cyclic:4", "symmetric:3", "dihedral:4", "quaternion8", "alternating:4"];
const GROUPS: &[&str] = &[
    "cyclic:4",
    "cyclic:6",
    "cyclic:2*cyclic:2",
    "cyclic:2*cyclic:4",
    "symmetric:3",
    "dihedral:4",
    "quaternion8",
    "alternating:4",
    "dihedral:6",
    "heisenberg:3",
    "symmetric:4",
];

fn group(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(build_preset(spec, DEFAULT_MAX_ORDER).unwrap())
}

fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|r| (0..cols).map(|j| r.iter().zip(b).map(|(x, row)| x * &row[j]).sum()).collect()).collect()
}

/// Determinant by fraction-free elimination.
fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else { return BigInt::zero() };
            a.swap(i, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if negate {
        -prev
    } else {
        prev
    }
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-12i64..=12, c), r))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of solutions of `k x = 0` in `Z/d_1 + ... + Z/d_t`.
fn killed_by(divisors: &[u64], k: u64) -> u64 {
    divisors.iter().map(|&d| gcd(k, d)).product()
}

fn torsion_u64(g: &FgAbGroup) -> Vec<u64> {
    g.torsion().iter().map(|d| d.to_u64().unwrap()).collect()
}

fn cyclics() -> impl Strategy<Value = Vec<u64>> {
    // 0 is an infinite cyclic summand.
    prop::collection::vec(prop_oneof![1 => Just(0u64), 5 => 1u64..=12], 1..=3)
}

fn from_list(ds: &[u64]) -> FgAbGroup {
    FgAbGroup::from_divisors(&ds.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>())
}

/// An element of G picked by an index modulo the order.
fn pick(g: &FiniteGroup, i: usize) -> usize {
    i % g.order()
}

/// Every commutator [S_i, S_j] lies in S_(i+j), checked element by element.
fn is_n_series(g: &FiniteGroup, s: &GroupSeries) -> bool {
    let m = s.length() + 1;
    (1..=m).all(|i| {
        (1..=m).all(|j| s.term(i).elements().iter().all(|&x| s.term(j).elements().iter().all(|&y| s.term(i + j).contains(g.comm(x, y)))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_a_unimodular_row_reduction(m in matrix()) {
        let cols = m[0].len();
        let mm = IntMatrix::from_rows(cols, big(&m));
        let (h, u) = hnf(&mm);
        prop_assert!(det(&u.to_rows()).abs().is_one());
        prop_assert_eq!(mat_mul(&u.to_rows(), &big(&m)), h.to_rows());
    }

    #[test]
    fn snf_is_a_divisibility_chain(m in matrix()) {
        let cols = m[0].len();
        let mm = IntMatrix::from_rows(cols, big(&m));
        let (s, u, v) = snf(&mm);
        prop_assert!(det(&u.to_rows()).abs().is_one() && det(&v.to_rows()).abs().is_one());
        prop_assert_eq!(mat_mul(&mat_mul(&u.to_rows(), &big(&m)), &v.to_rows()), s.to_rows());
        let diag: Vec<BigInt> = (0..m.len().min(cols)).map(|i| s.get(i, i).clone()).collect();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
    }

    #[test]
    fn quotient_matches_coset_enumeration(diag in prop::collection::vec(1i64..=6, 1..=3), seed in prop::collection::vec(-3i64..=3, 9)) {
        // A full-rank lattice: an upper triangular matrix with the given diagonal.
        let n = diag.len();
        let rows: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(if i == j { diag[i] } else if j > i { seed[3 * i + j] } else { 0 })).collect())
            .collect();
        let small = Lattice::new(n, rows);
        let q = FgAbGroup::from_lattice(small.clone());
        // Cosets of the lattice in Z^n, one representative each.
        let mut reps: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]];
        let mut i = 0;
        while i < reps.len() {
            for k in 0..n {
                let mut x = reps[i].clone();
                x[k] += 1;
                if !reps.iter().any(|r| small.contains(&x.iter().zip(r).map(|(a, b)| a - b).collect::<Vec<_>>())) {
                    reps.push(x);
                }
            }
            i += 1;
        }
        let divisors = torsion_u64(&q);
        prop_assert_eq!(q.free_rank(), 0);
        prop_assert_eq!(reps.len() as u64, divisors.iter().product::<u64>());
        for k in 1..=reps.len() as u64 {
            let killed = reps.iter().filter(|r| small.contains(&r.iter().map(|x| x * k).collect::<Vec<_>>())).count() as u64;
            prop_assert_eq!(killed, killed_by(&divisors, k));
        }
    }

    #[test]
    fn tensor_and_tor_are_symmetric(a in cyclics(), b in cyclics()) {
        let (ga, gb) = (from_list(&a), from_list(&b));
        prop_assert_eq!(tensor(&ga, &gb).invariants(), tensor(&gb, &ga).invariants());
        prop_assert_eq!(tor(&ga, &gb).0.invariants(), tor(&gb, &ga).0.invariants());
    }

    #[test]
    fn exterior_square_closed_form(a in cyclics()) {
        // gcd(d, 0) = d covers the torsion-by-free terms, gcd(0, 0) = 0 the free ones.
        let closed: Vec<u64> = (0..a.len()).flat_map(|i| (i + 1..a.len()).map(move |j| (i, j))).map(|(i, j)| gcd(a[i], a[j])).collect();
        let (w, _) = exterior_square(&Arc::new(from_list(&a)));
        prop_assert_eq!(w.invariants(), from_list(&closed).invariants());
    }

    #[test]
    fn kernel_and_image_orders_multiply(a in prop::collection::vec(1u64..=12, 1..=3), b in prop::collection::vec(1u64..=12, 1..=3), seed in prop::collection::vec(0u64..12, 9)) {
        let (ga, gb) = (Arc::new(from_list(&a)), Arc::new(from_list(&b)));
        // Generator i of order a_i may go to any multiple of b_j / gcd(a_i, b_j) in Z/b_j.
        let images: Vec<Vec<BigInt>> = a
            .iter()
            .enumerate()
            .map(|(i, &ai)| b.iter().enumerate().map(|(j, &bj)| BigInt::from(seed[3 * i + j] * (bj / gcd(ai, bj)))).collect())
            .collect();
        let f = AbMap::from_images(ga.clone(), gb, images).unwrap();
        let order = |g: &FgAbGroup| g.order().unwrap();
        prop_assert_eq!(order(&ga), order(&f.kernel().group()) * order(&f.image().group()));
    }

    #[test]
    fn decomposition_ignores_summand_order(a in cyclics(), b in cyclics(), c in cyclics()) {
        let (ga, gb, gc) = (from_list(&a), from_list(&b), from_list(&c));
        let (lhs, _) = FgAbGroup::direct_sum(&[&ga, &gb, &gc]);
        prop_assert!(decomposition_check("abc", &lhs, &[&gc, &ga, &gb]).pass);
        prop_assert!(decomposition_check("abc", &lhs, &[&gb, &gc, &ga]).pass);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_series_are_n_series(gi in 0..GROUPS.len(), x in 0usize..64, y in 0usize..64) {
        let g = group(GROUPS[gi]);
        let h = g.closure(&[pick(&g, x), pick(&g, y)]);
        prop_assert!(is_n_series(&g, &g.lower_central_series()));
        prop_assert!(is_n_series(&g, &g.induced_series(&g.lower_central_series(), &h)));
        if g.is_normal(&h) {
            prop_assert!(is_n_series(&g, &g.action_series(&h, &g.whole()).unwrap()));
        }
    }

    #[test]
    fn closure_and_commutators(gi in 0..GROUPS.len(), x in 0usize..64, y in 0usize..64, z in 0usize..64) {
        let g = group(GROUPS[gi]);
        let a = g.closure(&[pick(&g, x)]);
        let b = g.closure(&[pick(&g, y), pick(&g, z)]);
        prop_assert_eq!(g.closure(b.elements()), b.clone());
        prop_assert_eq!(g.commutator_subgroup(&a, &b), g.commutator_subgroup(&b, &a));
    }

    #[test]
    fn abelianization_lifts_and_coordinates(gi in 0..GROUPS.len()) {
        let g = group(GROUPS[gi]);
        let ab = g.abelianize();
        for k in 0..ab.ngens() {
            prop_assert_eq!(g.elem_order(ab.lift(k)) as i64 % ab.divisor(k), 0);
            let mut c = vec![BigInt::zero(); ab.ngens()];
            c[k] = BigInt::one();
            prop_assert!(ab.group().elem_eq(ab.coords(ab.lift(k)), &c));
        }
        for x in g.elements() {
            for y in g.elements() {
                let sum: Vec<BigInt> = ab.coords(x).iter().zip(ab.coords(y)).map(|(p, q)| p + q).collect();
                prop_assert!(ab.group().elem_eq(ab.coords(g.mul(x, y)), &sum));
            }
        }
    }

    #[test]
    fn quotient_projection(gi in 0..GROUPS.len(), x in 0usize..64) {
        let g = group(GROUPS[gi]);
        let n = g.normal_closure(&[pick(&g, x)]);
        let (q, proj) = g.quotient(&n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        let mut hit = vec![false; q.order()];
        for a in g.elements() {
            hit[proj[a]] = true;
            prop_assert_eq!(proj[a] == 0, n.contains(a));
            for b in g.elements() {
                prop_assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }
        prop_assert!(hit.iter().all(|&h| h));
    }
}

fn setting(g: &Arc<FiniteGroup>, h: Subgroup, n_max: usize) -> FoxSetting {
    FoxSetting::new(g.clone(), g.lower_central_series(), h, n_max).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn filtration_is_multiplicative_and_augmented(gi in 0..SMALL_GROUPS.len()) {
        let g = group(SMALL_GROUPS[gi]);
        let s = setting(&g, g.whole(), 4);
        for a in 1..=3 {
            for b in 1..=4 - a {
                prop_assert!(s.f(a + b).contains_lattice(&s.prod(s.f(a), s.f(b))));
            }
        }
        for n in 1..=4 {
            prop_assert!(s.f(n).basis().iter().all(|v| v.iter().sum::<BigInt>().is_zero()));
        }
    }

    #[test]
    fn gamma_filtration_is_the_augmentation_power(gi in 0..SMALL_GROUPS.len()) {
        let g = group(SMALL_GROUPS[gi]);
        let s = setting(&g, g.whole(), 4);
        let mut power = s.ig();
        for n in 1..=4 {
            prop_assert_eq!(s.f(n), &power);
            power = s.prod(&power, &s.ig());
        }
    }

    #[test]
    fn fox_quotients_are_finite(gi in 0..SMALL_GROUPS.len(), x in 0usize..64) {
        let g = group(SMALL_GROUPS[gi]);
        let s = setting(&g, g.closure(&[pick(&g, x)]), 3);
        for n in 1..=3 {
            prop_assert_eq!(s.quot(&s.f_ih(n - 1), &s.f_ih(n)).group().free_rank(), 0);
        }
    }

    #[test]
    fn unit_cosets_of_ideals_are_subgroups(gi in 0..SMALL_GROUPS.len(), x in 0usize..64) {
        let g = group(SMALL_GROUPS[gi]);
        let s = setting(&g, g.closure(&[pick(&g, x)]), 3);
        let ideal = s.prod(&s.ring.left_ideal_of(&s.ih), &s.ih);
        prop_assert!(s.ring.unit_coset_subgroup(&ideal).1);
        prop_assert!(s.ring.unit_coset_subgroup(&s.sum(&[&s.f_ih(2), &ideal])).1);
    }
}
