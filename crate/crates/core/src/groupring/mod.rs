//! The integral group ring `Z(G)` realised on `Z^|G|`, with ideals and
//! filtration terms as lattices.

mod filtration;
mod setting;

pub use filtration::Filtration;
pub use setting::FoxSetting;

use crate::exactla::{mod_m, FgAbGroup, Lattice, LatticeQuotient};
use crate::groups::{Elem, FiniteGroup, Subgroup};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("ring elements belong to different groups")]
    ParentMismatch,
}

/// An element `Σ c_g g` of `Z(G)`, coefficients indexed by element id.
#[derive(Clone, Debug)]
pub struct RingElem {
    parent: Arc<FiniteGroup>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        same_parent(&self.parent, &other.parent) && self.coeffs == other.coeffs
    }
}

fn same_parent(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl RingElem {
    pub fn zero(g: &Arc<FiniteGroup>) -> Self {
        RingElem { parent: g.clone(), coeffs: vec![BigInt::zero(); g.order()] }
    }

    pub fn from_coeffs(g: &Arc<FiniteGroup>, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), g.order(), "coefficient vector of wrong length");
        RingElem { parent: g.clone(), coeffs }
    }

    /// The group element `a` as a ring element.
    pub fn group_elem(g: &Arc<FiniteGroup>, a: Elem) -> Self {
        let mut r = Self::zero(g);
        r.coeffs[a] = BigInt::one();
        r
    }

    pub fn one(g: &Arc<FiniteGroup>) -> Self {
        Self::group_elem(g, 0)
    }

    /// `a - 1`.
    pub fn minus_one(g: &Arc<FiniteGroup>, a: Elem) -> Self {
        RingElem { parent: g.clone(), coeffs: elem_minus_one(g.order(), a) }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    /// Sum of the coefficients.
    pub fn augment(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub fn mul(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.check(other)?;
        Ok(RingElem { parent: self.parent.clone(), coeffs: convolve(&self.parent, &self.coeffs, &other.coeffs) })
    }

    pub fn scale(&self, k: &BigInt) -> RingElem {
        RingElem { parent: self.parent.clone(), coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    fn check(&self, other: &RingElem) -> Result<(), RingError> {
        if same_parent(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(RingError::ParentMismatch)
        }
    }

    fn zip(&self, other: &RingElem, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> RingElem {
        RingElem { parent: self.parent.clone(), coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect() }
    }
}

/// Coefficient vector of `a - 1` (zero for the identity).
pub fn elem_minus_one(n: usize, a: Elem) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    if a != 0 {
        v[a] = BigInt::one();
        v[0] = -BigInt::one();
    }
    v
}

/// Product in `Z(G)` of two coefficient vectors.
pub fn convolve(g: &FiniteGroup, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let n = g.order();
    let mut out = vec![BigInt::zero(); n];
    let ys: Vec<(usize, &BigInt)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    for (a, ca) in x.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for &(b, cb) in &ys {
            out[g.mul(a, b)] += ca * cb;
        }
    }
    out
}

/// `a · v` for a group element `a`.
pub fn left_translate(g: &FiniteGroup, a: Elem, v: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); v.len()];
    for (b, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out[g.mul(a, b)] = c.clone();
        }
    }
    out
}

/// `v · a` for a group element `a`.
pub fn right_translate(g: &FiniteGroup, v: &[BigInt], a: Elem) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); v.len()];
    for (b, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out[g.mul(b, a)] = c.clone();
        }
    }
    out
}

/// `(a - 1) · v`.
pub fn left_minus_one(g: &FiniteGroup, a: Elem, v: &[BigInt]) -> Vec<BigInt> {
    let mut out = left_translate(g, a, v);
    for (o, c) in out.iter_mut().zip(v) {
        *o -= c;
    }
    out
}

/// `v · (a - 1)`.
pub fn right_minus_one(g: &FiniteGroup, v: &[BigInt], a: Elem) -> Vec<BigInt> {
    let mut out = right_translate(g, v, a);
    for (o, c) in out.iter_mut().zip(v) {
        *o -= c;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `Z(G) I(N)`, spanned by `g (n - 1)`.
    Left,
    /// `I(N) Z(G)`, spanned by `(n - 1) g`.
    Right,
}

/// Lattice-level operations in `Z(G)`.
#[derive(Clone, Debug)]
pub struct GroupRing {
    g: Arc<FiniteGroup>,
}

impl GroupRing {
    pub fn new(g: Arc<FiniteGroup>) -> Self {
        GroupRing { g }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.g.order()
    }

    pub fn full(&self) -> Lattice {
        Lattice::full(self.dim())
    }

    pub fn zero(&self) -> Lattice {
        Lattice::zero(self.dim())
    }

    pub fn elem(&self, a: Elem) -> RingElem {
        RingElem::group_elem(&self.g, a)
    }

    pub fn minus_one(&self, a: Elem) -> RingElem {
        RingElem::minus_one(&self.g, a)
    }

    /// `I(K)`, spanned by `k - 1`.
    pub fn aug_ideal(&self, k: &Subgroup) -> Lattice {
        let n = self.dim();
        Lattice::new(n, k.elements().iter().filter(|&&a| a != 0).map(|&a| elem_minus_one(n, a)))
    }

    /// Augmentation ideal of the whole group.
    pub fn augmentation(&self) -> Lattice {
        self.aug_ideal(&self.g.whole())
    }

    /// `Z(G) I(N)` or `I(N) Z(G)`.
    pub fn sided_ideal(&self, side: Side, nsub: &Subgroup) -> Lattice {
        let n = self.dim();
        let g = &self.g;
        let mut gens = Vec::new();
        for &x in nsub.elements() {
            if x == 0 {
                continue;
            }
            for a in g.elements() {
                let (p, q) = match side {
                    Side::Left => (g.mul(a, x), a),
                    Side::Right => (g.mul(x, a), a),
                };
                let mut v = vec![BigInt::zero(); n];
                v[p] += 1;
                v[q] -= 1;
                gens.push(v);
            }
        }
        Lattice::new(n, gens)
    }

    /// Span of all pairwise products of basis vectors.
    pub fn product(&self, a: &Lattice, b: &Lattice) -> Lattice {
        let mut gens = Vec::with_capacity(a.rank() * b.rank());
        for x in a.basis() {
            for y in b.basis() {
                gens.push(convolve(&self.g, x, y));
            }
        }
        Lattice::new(self.dim(), gens)
    }

    /// `L^k` by iterated products, `L^0 = Z(G)`.
    pub fn power(&self, l: &Lattice, k: usize) -> Lattice {
        let mut acc = self.full();
        for _ in 0..k {
            acc = self.product(&acc, l);
        }
        acc
    }

    /// Span of `a · v` over the given elements and basis vectors of `l`.
    pub fn left_span(&self, elems: &[Elem], l: &Lattice) -> Lattice {
        let gens = elems.iter().flat_map(|&a| l.basis().iter().map(move |v| left_translate(&self.g, a, v)));
        Lattice::new(self.dim(), gens.collect::<Vec<_>>())
    }

    /// Span of `v · a` over the given elements and basis vectors of `l`.
    pub fn right_span(&self, l: &Lattice, elems: &[Elem]) -> Lattice {
        let gens = elems.iter().flat_map(|&a| l.basis().iter().map(move |v| right_translate(&self.g, v, a)));
        Lattice::new(self.dim(), gens.collect::<Vec<_>>())
    }

    /// `Z(G) · l`.
    pub fn left_ideal_of(&self, l: &Lattice) -> Lattice {
        let all: Vec<Elem> = self.g.elements().collect();
        self.left_span(&all, l)
    }

    /// `G ∩ (1 + M)`, with a flag telling whether the set is a subgroup.
    pub fn unit_coset_subgroup(&self, m: &Lattice) -> (Vec<Elem>, bool) {
        let n = self.dim();
        let set: Vec<Elem> = self.g.elements().filter(|&a| m.contains(&elem_minus_one(n, a))).collect();
        let mut mask = vec![false; n];
        for &a in &set {
            mask[a] = true;
        }
        let closed = set.iter().all(|&a| mask[self.g.inv(a)] && set.iter().all(|&b| mask[self.g.mul(a, b)]));
        (set, closed)
    }

    /// Quotient `big / small` of two lattices.
    pub fn quotient(&self, big: &Lattice, small: &Lattice) -> LatticeQuotient {
        LatticeQuotient::new(big, small).expect("quotient of nested lattices")
    }
}

/// `A ⊗ Z/m` for a result computed over the integers.
pub fn mod_m_quotient(result: &FgAbGroup, m: u64) -> FgAbGroup {
    mod_m(result, m)
}

#[cfg(test)]
mod tests;
