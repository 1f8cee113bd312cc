use super::LieError;
use crate::exactla::{exterior_square, tensor, AbMap, FgAbGroup, IntMatrix};
use crate::groups::{AbQuot, Elem, FiniteGroup, GroupSeries};
use num_bigint::BigInt;
use num_traits::Zero;
use std::sync::Arc;

/// Exhaustive representative checks are run up to this group order.
pub const EXHAUSTIVE_ORDER: usize = 64;

/// The first three homogeneous pieces `L_n = S_n / S_{n+1}` of the graded Lie
/// ring of a series `S`, with the brackets `L_1 ⊗ L_1 -> L_2` and
/// `L_1 ⊗ L_2 -> L_3` induced by group commutators of lifts.
#[derive(Clone, Debug)]
pub struct GradedLieRing {
    group: Arc<FiniteGroup>,
    l: [AbQuot; 3],
    b11: AbMap,
    b12: AbMap,
}

fn add_scaled(acc: &mut [BigInt], c: &BigInt, v: &[BigInt]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        *a += c * b;
    }
}

impl GradedLieRing {
    /// Depth three ring of `series`; the series may start at a subgroup.
    pub fn new(group: Arc<FiniteGroup>, series: &GroupSeries) -> Result<Self, LieError> {
        let g = &group;
        let sec = |n: usize| g.abelian_section(series.term(n), series.term(n + 1), None);
        let l = [sec(1)?, sec(2)?, sec(3)?];
        let t11 = Arc::new(tensor(l[0].group(), l[0].group()));
        let t12 = Arc::new(tensor(l[0].group(), l[1].group()));
        let mut rows = Vec::new();
        for &x in l[0].lifts() {
            for &y in l[0].lifts() {
                rows.push(l[1].coords(g.comm(x, y)).to_vec());
            }
        }
        let b11 = AbMap::new(t11, l[1].group().clone(), IntMatrix::from_rows(l[1].ngens(), rows))?;
        let mut rows = Vec::new();
        for &x in l[0].lifts() {
            for &y in l[1].lifts() {
                rows.push(l[2].coords(g.comm(x, y)).to_vec());
            }
        }
        let b12 = AbMap::new(t12, l[2].group().clone(), IntMatrix::from_rows(l[2].ngens(), rows))?;
        let ring = GradedLieRing { group, l, b11, b12 };
        if ring.group.order() <= EXHAUSTIVE_ORDER {
            ring.check_representatives()?;
        }
        Ok(ring)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// `L_n` for `n` in 1..=3.
    pub fn piece(&self, n: usize) -> &AbQuot {
        &self.l[n - 1]
    }

    pub fn b11(&self) -> &AbMap {
        &self.b11
    }

    pub fn b12(&self) -> &AbMap {
        &self.b12
    }

    /// `[x, y]` for `x, y ∈ L_1`.
    pub fn bracket11(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        self.b11.apply(&crate::exactla::tensor_elem(x, y))
    }

    /// `[x, y]` for `x ∈ L_1`, `y ∈ L_2`.
    pub fn bracket12(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        self.b12.apply(&crate::exactla::tensor_elem(x, y))
    }

    /// Compares the bracket of classes with the commutator of every pair of
    /// representatives.
    pub fn check_representatives(&self) -> Result<(), LieError> {
        let g = &self.group;
        let (l1, l2, l3) = (&self.l[0], &self.l[1], &self.l[2]);
        let mismatch = |a: Elem, b: Elem| LieError::BracketNotWellDefined(format!("[{}, {}]", g.label(a), g.label(b)));
        for &x in l1.top().elements() {
            for &y in l1.top().elements() {
                let want = self.bracket11(l1.coords(x), l1.coords(y));
                if !l2.group().elem_eq(&want, l2.coords(g.comm(x, y))) {
                    return Err(mismatch(x, y));
                }
            }
            for &y in l2.top().elements() {
                let want = self.bracket12(l1.coords(x), l2.coords(y));
                if !l3.group().elem_eq(&want, l3.coords(g.comm(x, y))) {
                    return Err(mismatch(x, y));
                }
            }
        }
        Ok(())
    }

    /// `[x, x] = 0` and `[x, y] + [y, x] = 0` on generators of `L_1`.
    pub fn antisymmetric(&self) -> bool {
        let n = self.l[0].ngens();
        let l2 = self.l[1].group();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s: Vec<BigInt> = self
                    .bracket11(&unit(n, i), &unit(n, j))
                    .iter()
                    .zip(self.bracket11(&unit(n, j), &unit(n, i)))
                    .map(|(a, b)| a + b)
                    .collect();
                l2.is_zero(&s) && (i != j || l2.is_zero(&self.bracket11(&unit(n, i), &unit(n, i))))
            })
        })
    }

    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0` on generator triples of `L_1`.
    pub fn jacobi(&self) -> bool {
        let n = self.l[0].ngens();
        let l3 = self.l[2].group();
        let e = |i| unit(n, i);
        let term = |a: usize, b: usize, c: usize| self.bracket12(&e(a), &self.bracket11(&e(b), &e(c)));
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let mut s = term(x, y, z);
                    add_scaled(&mut s, &BigInt::from(1), &term(y, z, x));
                    add_scaled(&mut s, &BigInt::from(1), &term(z, x, y));
                    l3.is_zero(&s)
                })
            })
        })
    }

    /// `c_2: L_1 ∧ L_1 -> L_2` on wedge generators `e_i ∧ e_j`, i < j.
    pub fn c2(&self) -> Result<AbMap, LieError> {
        let l1 = self.l[0].group();
        let n = l1.ngens();
        let (wedge, _) = exterior_square(l1);
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                rows.push(self.bracket11(&unit(n, i), &unit(n, j)));
            }
        }
        Ok(AbMap::new(wedge, self.l[1].group().clone(), IntMatrix::from_rows(self.l[1].ngens(), rows))?)
    }

    /// `c_33(x ⊗ y ⊗ z) = [x, [y, z]]` from `L_1^{⊗3}` to `L_3`.
    pub fn c33(&self) -> Result<AbMap, LieError> {
        let l1 = self.l[0].group();
        let n = l1.ngens();
        let t3 = Arc::new(tensor(&tensor(l1, l1), l1));
        let mut rows = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    rows.push(self.bracket12(&unit(n, a), &self.bracket11(&unit(n, b), &unit(n, c))));
                }
            }
        }
        Ok(AbMap::new(t3, self.l[2].group().clone(), IntMatrix::from_rows(self.l[2].ngens(), rows))?)
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); n];
    e[i] = BigInt::from(1);
    e
}

/// `l_33(x ⊗ y ⊗ z) = xyz - xzy - yzx + zyx` on `A^{⊗3}`.
pub fn l33(a: &Arc<FgAbGroup>) -> AbMap {
    let n = a.ngens();
    let t3 = Arc::new(tensor(&tensor(a, a), a));
    let idx = |x: usize, y: usize, z: usize| (x * n + y) * n + z;
    let mut rows = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut r = vec![BigInt::zero(); n * n * n];
                r[idx(x, y, z)] += 1;
                r[idx(x, z, y)] -= 1;
                r[idx(y, z, x)] -= 1;
                r[idx(z, y, x)] += 1;
                rows.push(r);
            }
        }
    }
    AbMap::from_images(t3.clone(), t3, rows).expect("l33 respects the tensor relations")
}

/// `l_2^{GH} = (ι ⊗ id) l_2^H: H^ab ∧ H^ab -> G^AB ⊗ H^ab`.
pub fn l2_gh(iota: &AbMap) -> Result<AbMap, LieError> {
    let hab = iota.domain();
    let gab = iota.codomain();
    let n = hab.ngens();
    let (wedge, _) = exterior_square(hab);
    let t = Arc::new(tensor(gab, hab));
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut r = crate::exactla::tensor_elem(iota.matrix().row(i), &unit(n, j));
            let s = crate::exactla::tensor_elem(iota.matrix().row(j), &unit(n, i));
            add_scaled(&mut r, &BigInt::from(-1), &s);
            rows.push(r);
        }
    }
    Ok(AbMap::from_images(wedge, t, rows)?)
}

/// A tuple `(h_1, ..., h_m)` of elements of `H` with lower central weights
/// `k_j` (in `H`) and series weights `l_j` (in `𝒢`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightTuple {
    pub elements: Vec<Elem>,
    pub k: Vec<usize>,
    pub l: Vec<usize>,
}

impl HeightTuple {
    /// Weights are capped at `cap`.
    pub fn new(elements: Vec<Elem>, hlcs: &GroupSeries, series: &GroupSeries, cap: usize) -> Self {
        let k = elements.iter().map(|&a| hlcs.weight(a, cap)).collect();
        let l = elements.iter().map(|&a| series.weight(a, cap)).collect();
        HeightTuple { elements, k, l }
    }

    /// Largest `n` with `l_1 + ... + l_m - l_j + k_j ≥ n` for every `j`.
    pub fn height(&self) -> usize {
        let total: usize = self.l.iter().sum();
        self.l.iter().zip(&self.k).map(|(l, k)| total - l + k).min().unwrap_or(0)
    }
}
