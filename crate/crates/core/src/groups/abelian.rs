use super::group::{Elem, FiniteGroup};
use super::subgroup::Subgroup;
use super::GroupError;
use crate::exactla::FgAbGroup;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::sync::Arc;

/// An abelian section `top / bottom` of a finite group in invariant-factor
/// form `Z/d_1 + ... + Z/d_r` with `d_1 | d_2 | ...`, together with group
/// elements `h_k ∈ top` mapping to the k-th generator.
#[derive(Clone, Debug)]
pub struct AbQuot {
    top: Subgroup,
    bottom: Subgroup,
    group: Arc<FgAbGroup>,
    coords: Vec<Option<Vec<BigInt>>>,
    lifts: Vec<Elem>,
}

impl AbQuot {
    pub fn top(&self) -> &Subgroup {
        &self.top
    }

    pub fn bottom(&self) -> &Subgroup {
        &self.bottom
    }

    pub fn group(&self) -> &Arc<FgAbGroup> {
        &self.group
    }

    pub fn ngens(&self) -> usize {
        self.lifts.len()
    }

    /// Orders `d_k` of the invariant generators.
    pub fn divisors(&self) -> Vec<BigInt> {
        self.group.divisors()
    }

    pub fn divisor(&self, k: usize) -> i64 {
        self.group.divisors()[k].to_i64().expect("small divisor")
    }

    pub fn lifts(&self) -> &[Elem] {
        &self.lifts
    }

    pub fn lift(&self, k: usize) -> Elem {
        self.lifts[k]
    }

    /// Reduced invariant coordinates of an element of `top`.
    pub fn coords(&self, a: Elem) -> &[BigInt] {
        self.coords[a].as_deref().expect("element outside the section")
    }

    pub fn try_coords(&self, a: Elem) -> Option<&[BigInt]> {
        self.coords[a].as_deref()
    }

    /// Representative `∏ h_k^{c_k}` of the class with coordinates `c`.
    pub fn element(&self, g: &FiniteGroup, c: &[BigInt]) -> Elem {
        let mut acc = 0;
        for (k, x) in c.iter().enumerate() {
            let d = &self.group.divisors()[k];
            let e = x.mod_floor(d).to_i64().expect("small exponent");
            acc = g.mul(acc, g.pow(self.lifts[k], e));
        }
        acc
    }

    pub fn order(&self) -> usize {
        self.top.order() / self.bottom.order()
    }
}

impl FiniteGroup {
    /// `top / bottom` for `bottom ⊇ [top, top]`, generators taken greedily from
    /// `pool` (default: the elements of `top` in id order), so every lift is a
    /// product of pool elements.
    pub fn abelian_section(&self, top: &Subgroup, bottom: &Subgroup, pool: Option<&[Elem]>) -> Result<AbQuot, GroupError> {
        if !bottom.is_subset_of(top) {
            return Err(GroupError::NotSubgroup);
        }
        for &x in top.elements() {
            for &y in top.elements() {
                if !bottom.contains(self.comm(x, y)) {
                    return Err(GroupError::NotAbelianSection);
                }
            }
        }
        let n = self.order();
        let mut coord: Vec<Option<Vec<i64>>> = vec![None; n];
        let mut members: Vec<Elem> = bottom.elements().to_vec();
        for &b in &members {
            coord[b] = Some(Vec::new());
        }
        let mut chosen: Vec<Elem> = Vec::new();
        let mut rels: Vec<Vec<i64>> = Vec::new();
        let pool: Vec<Elem> = pool.map_or_else(|| top.elements().to_vec(), <[Elem]>::to_vec);
        for &c in &pool {
            if !top.contains(c) {
                return Err(GroupError::NotSubgroup);
            }
            if coord[c].is_some() {
                continue;
            }
            let j = chosen.len();
            let mut k = 1;
            let mut p = c;
            while coord[p].is_none() {
                p = self.mul(p, c);
                k += 1;
            }
            let mut rel = vec![0i64; j + 1];
            for (i, x) in coord[p].as_ref().expect("member").iter().enumerate() {
                rel[i] = -x;
            }
            rel[j] = k;
            rels.push(rel);
            let old = members.clone();
            let mut ce = 0;
            for e in 1..k {
                ce = self.mul(ce, c);
                for &t in &old {
                    let y = self.mul(t, ce);
                    let mut v = coord[t].clone().expect("member");
                    v.resize(j + 1, 0);
                    v[j] = e;
                    debug_assert!(coord[y].is_none());
                    coord[y] = Some(v);
                    members.push(y);
                }
            }
            chosen.push(c);
            if members.len() == top.order() {
                break;
            }
        }
        if members.len() != top.order() {
            return Err(GroupError::NotSubgroup);
        }
        let m = chosen.len();
        let pad = |v: &[i64]| -> Vec<BigInt> {
            let mut w: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            w.resize(m, BigInt::zero());
            w
        };
        let pres = FgAbGroup::new(m, rels.iter().map(|r| pad(r)).collect());
        let group = Arc::new(FgAbGroup::from_divisors(&pres.divisors()));
        let lifts = pres
            .invariant_generators()
            .iter()
            .map(|c| {
                c.iter().zip(&chosen).fold(0, |acc, (e, &g)| self.mul(acc, self.pow(g, e.to_i64().expect("small exponent"))))
            })
            .collect();
        let coords = coord.iter().map(|c| c.as_ref().map(|v| pres.normal_form(&pad(v)))).collect();
        Ok(AbQuot { top: top.clone(), bottom: bottom.clone(), group, coords, lifts })
    }

    /// `G / [G, G]`.
    pub fn abelianize(&self) -> AbQuot {
        let g = self.whole();
        let d = self.commutator_subgroup(&g, &g);
        self.abelian_section(&g, &d, None).expect("G/[G,G] is abelian")
    }

    /// Quotient by a normal subgroup with the projection; cosets are
    /// numbered by their smallest element id.
    pub fn quotient(&self, nsub: &Subgroup) -> Result<(FiniteGroup, Vec<Elem>), GroupError> {
        if !self.is_normal(nsub) {
            return Err(GroupError::NotNormal);
        }
        let n = self.order();
        let mut proj = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if proj[a] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(a);
            for &x in nsub.elements() {
                proj[self.mul(a, x)] = idx;
            }
        }
        let table = reps.iter().map(|&a| reps.iter().map(|&b| proj[self.mul(a, b)]).collect()).collect();
        let labels = reps.iter().map(|&a| self.label(a).to_string()).collect();
        let mut q = FiniteGroup::from_table(format!("{}/N", self.name()), table, Some(labels))?;
        let gens = self
            .generator_names()
            .iter()
            .filter(|(_, e)| proj[*e] != 0)
            .map(|(s, e)| (s.clone(), proj[*e]))
            .collect();
        q.set_generator_names(gens);
        Ok((q, proj))
    }

    /// A subgroup as a group in its own right with the embedding; element i
    /// of the result is the i-th element of `s` in id order.
    pub fn subgroup_group(&self, s: &Subgroup) -> Result<(FiniteGroup, Vec<Elem>), GroupError> {
        let emb = s.elements().to_vec();
        let mut back = vec![usize::MAX; self.order()];
        for (i, &a) in emb.iter().enumerate() {
            back[a] = i;
        }
        let table = emb.iter().map(|&a| emb.iter().map(|&b| back[self.mul(a, b)]).collect()).collect();
        let labels = emb.iter().map(|&a| self.label(a).to_string()).collect();
        let mut k = FiniteGroup::from_table(format!("{}<{}>", self.name(), s.order()), table, Some(labels))?;
        let gens = s.generators().iter().map(|&a| (self.label(a).to_string(), back[a])).collect();
        k.set_generator_names(gens);
        Ok((k, emb))
    }

    /// Transports a subgroup of `self` contained in the image of `emb`.
    pub fn pull_back_subgroup(&self, emb: &[Elem], s: &Subgroup) -> Result<Subgroup, GroupError> {
        let set: Vec<Elem> = s
            .elements()
            .iter()
            .map(|&a| emb.iter().position(|&e| e == a).ok_or(GroupError::NotSubgroup))
            .collect::<Result<_, _>>()?;
        self.subgroup_from_set(&set)
    }
}
