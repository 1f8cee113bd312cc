use super::TensorError;
use crate::exactla::{tensor, tensor_elem, AbMap, FgAbGroup, IntMatrix, Lattice, LatticeQuotient};
use crate::groupring::{left_translate, right_translate, GroupRing, Side};
use crate::groups::{Elem, Subgroup};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::Arc;

/// A quotient `big / small` of `H`-stable lattices in `Z(G)`, kept in the
/// invariant coordinates of its Smith form; `H` acts by translation on the
/// given side (`Left`: `h · x`, `Right`: `x · h`).
#[derive(Clone, Debug)]
pub struct HModuleQuotient {
    ring: GroupRing,
    side: Side,
    hgens: Vec<Elem>,
    quot: LatticeQuotient,
    group: Arc<FgAbGroup>,
    action: Vec<AbMap>,
}

impl HModuleQuotient {
    pub fn new(ring: &GroupRing, h: &Subgroup, side: Side, big: &Lattice, small: &Lattice) -> Result<Self, TensorError> {
        let g = ring.group();
        let act = |a: Elem, v: &[BigInt]| match side {
            Side::Left => left_translate(g, a, v),
            Side::Right => right_translate(g, v, a),
        };
        let hgens: Vec<Elem> = h.generators().iter().copied().filter(|&a| a != 0).collect();
        for &a in &hgens {
            for (which, l) in [("numerator", big), ("denominator", small)] {
                if let Some(i) = l.basis().iter().position(|v| !l.contains(&act(a, v))) {
                    return Err(TensorError::NotStable { lattice: which.into(), element: g.label(a).into(), row: i });
                }
            }
        }
        let quot = ring.quotient(big, small);
        let group = Arc::new(quot.group().clone());
        let mut action = Vec::with_capacity(hgens.len());
        for &a in &hgens {
            let rows = quot.lifts().iter().map(|l| quot.coords(&act(a, l)).expect("stable lattice")).collect();
            let m = AbMap::new(group.clone(), group.clone(), IntMatrix::from_rows(group.ngens(), rows))?;
            action.push(m);
        }
        Ok(HModuleQuotient { ring: ring.clone(), side, hgens, quot, group, action })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn group(&self) -> &Arc<FgAbGroup> {
        &self.group
    }

    pub fn quotient(&self) -> &LatticeQuotient {
        &self.quot
    }

    pub fn ngens(&self) -> usize {
        self.quot.ngens()
    }

    pub fn h_generators(&self) -> &[Elem] {
        &self.hgens
    }

    /// Action of the k-th generator of `H` on the quotient generators.
    pub fn action(&self, k: usize) -> &AbMap {
        &self.action[k]
    }

    pub fn coords(&self, v: &[BigInt]) -> Result<Vec<BigInt>, TensorError> {
        Ok(self.quot.coords(v)?)
    }

    pub fn lift(&self, i: usize) -> &[BigInt] {
        self.quot.lift(i)
    }

    fn act_elem(&self, a: Elem, v: &[BigInt]) -> Vec<BigInt> {
        let g = self.ring.group();
        match self.side {
            Side::Left => left_translate(g, a, v),
            Side::Right => right_translate(g, v, a),
        }
    }

    /// Action matrix of an arbitrary element of `H`, computed from the lattices.
    pub fn action_of(&self, a: Elem) -> AbMap {
        let rows = self.quot.lifts().iter().map(|l| self.quot.coords(&self.act_elem(a, l)).expect("stable lattice")).collect();
        AbMap::new_unchecked(self.group.clone(), self.group.clone(), IntMatrix::from_rows(self.group.ngens(), rows))
    }

    /// Checks that the generator matrices compose like the group: for every
    /// generator `s` and element `a` of `H`, the matrix of `s` composed with
    /// the matrix of `a` equals the matrix of the product in the order the
    /// side dictates.
    pub fn check_action(&self, h: &Subgroup) -> Result<(), TensorError> {
        let g = self.ring.group();
        let mats: Vec<(Elem, AbMap)> = h.elements().iter().map(|&a| (a, self.action_of(a))).collect();
        let find = |x: Elem| &mats.iter().find(|(a, _)| *a == x).expect("element of H").1;
        for (k, &s) in self.hgens.iter().enumerate() {
            for (a, ma) in &mats {
                // Left: s·(a·x) = (s a)·x; rows are images, so M_a then M_s.
                // Right: (x·a)·s = x·(a s); M_a then M_s as well.
                let prod = match self.side {
                    Side::Left => g.mul(s, *a),
                    Side::Right => g.mul(*a, s),
                };
                let comp = ma.then(&self.action[k]).expect("same group");
                if !comp.same_as(find(prod)) {
                    return Err(TensorError::NotAnAction { generator: g.label(s).into(), element: g.label(*a).into() });
                }
            }
        }
        Ok(())
    }

    /// `M_H = M / (h - 1) M`.
    pub fn coinvariants(&self) -> FgAbGroup {
        let n = self.group.ngens();
        let mut rels = Vec::new();
        for m in &self.action {
            for i in 0..n {
                let mut r = m.matrix().row(i).to_vec();
                r[i] -= 1;
                rels.push(r);
            }
        }
        self.group.with_relations(rels)
    }
}

/// `A ⊗_H B` for a right module `A` and a left module `B`; generator
/// `i * ngens(B) + j` is `a_i ⊗ b_j` as in the tensor product over `Z`.
#[derive(Clone, Debug)]
pub struct TensorH {
    group: Arc<FgAbGroup>,
    na: usize,
    nb: usize,
}

impl TensorH {
    pub fn group(&self) -> &Arc<FgAbGroup> {
        &self.group
    }

    pub fn ngens(&self) -> usize {
        self.na * self.nb
    }

    pub fn factor_gens(&self) -> (usize, usize) {
        (self.na, self.nb)
    }

    /// Coordinates of `x ⊗ y`.
    pub fn elem(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        tensor_elem(x, y)
    }
}

pub fn tensor_over_h(a: &HModuleQuotient, b: &HModuleQuotient) -> Result<TensorH, TensorError> {
    if a.side != Side::Right || b.side != Side::Left {
        return Err(TensorError::WrongSides);
    }
    if a.hgens != b.hgens {
        return Err(TensorError::DifferentActingGroups);
    }
    let (na, nb) = (a.ngens(), b.ngens());
    let base = tensor(&a.group, &b.group);
    let unit = |n: usize, i: usize| {
        let mut e = vec![BigInt::zero(); n];
        e[i] = BigInt::one();
        e
    };
    let mut rels = Vec::new();
    let trivial = |m: &HModuleQuotient| m.action.iter().all(|x| x.same_as(&AbMap::identity(m.group.clone())));
    if trivial(a) && trivial(b) {
        return Ok(TensorH { group: Arc::new(base), na, nb });
    }
    for (ma, mb) in a.action.iter().zip(&b.action) {
        for i in 0..na {
            for j in 0..nb {
                let left = tensor_elem(ma.matrix().row(i), &unit(nb, j));
                let right = tensor_elem(&unit(na, i), mb.matrix().row(j));
                rels.push(left.iter().zip(&right).map(|(x, y)| x - y).collect());
            }
        }
    }
    Ok(TensorH { group: Arc::new(base.with_relations(rels)), na, nb })
}
