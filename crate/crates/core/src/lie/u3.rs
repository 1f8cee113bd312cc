use super::graded::{l2_gh, l33, unit, GradedLieRing};
use super::LieError;
use crate::exactla::{exterior_square, tensor, tensor_elem, wedge_index, AbMap, FgAbGroup, IntMatrix, SubgroupOf};
use crate::groupring::{convolve, elem_minus_one, FoxSetting};
use crate::groups::Elem;
use num_bigint::BigInt;
use num_traits::Zero;
use std::sync::Arc;

/// An element of `U_3` in generator coordinates, block A first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementU3 {
    pub coords: Vec<BigInt>,
}

impl ElementU3 {
    pub fn add_scaled(&mut self, c: impl Into<BigInt>, other: &ElementU3) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += &c * b;
        }
    }

    pub fn add(&mut self, other: &ElementU3) {
        self.add_scaled(1, other);
    }

    pub fn sub(&mut self, other: &ElementU3) {
        self.add_scaled(-1, other);
    }
}

/// `C(k, 2) = k(k - 1)/2`, also for negative `k`.
pub fn binom2(k: i64) -> BigInt {
    BigInt::from(k) * BigInt::from(k - 1) / 2
}

/// The presentation of `U_3^𝒢(G, H)` on the blocks
/// `A = L_2^𝒢(G) ⊗ H^ab` and `B = G^AB ⊗ G^AB ⊗ H^ab`, together with the
/// degree one and two groups, the maps `θ_1, θ_2, θ_3` into the Fox
/// quotients and the bracket-preimage tables used by `ν_12` and `ν_03`.
#[derive(Clone, Debug)]
pub struct U3Pres {
    pub setting: FoxSetting,
    pub lg: GradedLieRing,
    pub lh: GradedLieRing,
    iota: AbMap,
    c2g: AbMap,
    c2h: AbMap,
    c33h: AbMap,
    nu12_table: Vec<Vec<BigInt>>,
    nu03_table: Vec<Vec<BigInt>>,
    na: usize,
    group: Arc<FgAbGroup>,
}

impl U3Pres {
    /// The setting must carry the filtration up to degree 3.
    pub fn build(setting: &FoxSetting) -> Result<Self, LieError> {
        let s = setting;
        if s.filt.n_max() < 3 {
            return Err(LieError::Precondition("the filtration must reach degree 3".into()));
        }
        let lg = GradedLieRing::new(s.g.clone(), &s.series)?;
        let lh = GradedLieRing::new(s.g.clone(), &s.hlcs)?;
        let (gab, hab) = (lg.piece(1), lh.piece(1));
        let rows = hab.lifts().iter().map(|&h| gab.coords(h).to_vec()).collect();
        let iota = AbMap::new(hab.group().clone(), gab.group().clone(), IntMatrix::from_rows(gab.ngens(), rows))?;
        let c2g = lg.c2()?;
        let c2h = lh.c2()?;
        let c33h = lh.c33()?;
        let nu12_table = preimage_table(&c2h)?;
        let nu03_table = preimage_table(&c33h)?;
        let (ng, nh, nl) = (gab.ngens(), hab.ngens(), lg.piece(2).ngens());
        let na = nl * nh;
        let nb = ng * ng * nh;
        let blk_a = tensor(lg.piece(2).group(), hab.group());
        let blk_b = tensor(&tensor(gab.group(), gab.group()), hab.group());
        let mut rels: Vec<Vec<BigInt>> = Vec::new();
        for r in blk_a.relations().basis() {
            let mut v = r.clone();
            v.resize(na + nb, BigInt::zero());
            rels.push(v);
        }
        for r in blk_b.relations().basis() {
            let mut v = vec![BigInt::zero(); na];
            v.extend(r.iter().cloned());
            rels.push(v);
        }
        let mut pres = U3Pres {
            setting: s.clone(),
            lg,
            lh,
            iota,
            c2g,
            c2h,
            c33h,
            nu12_table,
            nu03_table,
            na,
            group: Arc::new(FgAbGroup::free(na + nb)),
        };
        // (c_2^𝒢 ⊗ id, -l_2^𝒢 ⊗ id) on (G^AB ∧ G^AB) ⊗ H^ab
        for i in 0..ng {
            for j in i + 1..ng {
                let w = pres.c2g.matrix().row(wedge_index(ng, i, j)).to_vec();
                for q in 0..nh {
                    let eq = unit(nh, q);
                    let mut x = pres.a_elem(&w, &eq);
                    x.sub(&pres.b_elem(&unit(ng, i), &unit(ng, j), &eq));
                    x.add(&pres.b_elem(&unit(ng, j), &unit(ng, i), &eq));
                    rels.push(x.coords);
                }
            }
        }
        // G^AB ⊗ l_2^H Ker(c_2^H), through id ⊗ ι ⊗ id
        for u in pres.c2h.kernel().lattice.basis() {
            for p in 0..ng {
                rels.push(pres.wedge_to_b(&unit(ng, p), u).coords);
            }
        }
        // l_33^H Ker(c_33^H), through ι ⊗ ι ⊗ id
        for t in pres.c33h.kernel().lattice.basis() {
            rels.push(pres.triple_to_b(t).coords);
        }
        pres.group = Arc::new(FgAbGroup::new(na + nb, rels));
        Ok(pres)
    }

    pub fn group(&self) -> &Arc<FgAbGroup> {
        &self.group
    }

    pub fn ngens(&self) -> usize {
        self.group.ngens()
    }

    /// Number of block A generators; block B follows.
    pub fn block_a_len(&self) -> usize {
        self.na
    }

    pub fn iota(&self) -> &AbMap {
        &self.iota
    }

    pub fn c2g(&self) -> &AbMap {
        &self.c2g
    }

    pub fn c2h(&self) -> &AbMap {
        &self.c2h
    }

    pub fn c33h(&self) -> &AbMap {
        &self.c33h
    }

    pub fn zero(&self) -> ElementU3 {
        ElementU3 { coords: vec![BigInt::zero(); self.ngens()] }
    }

    pub fn is_zero(&self, x: &ElementU3) -> bool {
        self.group.is_zero(&x.coords)
    }

    pub fn same(&self, x: &ElementU3, y: &ElementU3) -> bool {
        self.group.elem_eq(&x.coords, &y.coords)
    }

    /// `w ⊗ h` in block A, `w ∈ L_2^𝒢(G)`, `h ∈ H^ab`.
    pub fn a_elem(&self, w: &[BigInt], h: &[BigInt]) -> ElementU3 {
        let mut x = self.zero();
        for (c, v) in x.coords.iter_mut().zip(tensor_elem(w, h)) {
            *c = v;
        }
        x
    }

    /// `x ⊗ y ⊗ h` in block B, `x, y ∈ G^AB`, `h ∈ H^ab`.
    pub fn b_elem(&self, x: &[BigInt], y: &[BigInt], h: &[BigInt]) -> ElementU3 {
        let mut e = self.zero();
        for (c, v) in e.coords[self.na..].iter_mut().zip(tensor_elem(&tensor_elem(x, y), h)) {
            *c = v;
        }
        e
    }

    /// `ḡ ⊗ Σ u_ij (ι(e_i) ⊗ e_j - ι(e_j) ⊗ e_i)` for `u` on the wedge generators of `H^ab`.
    fn wedge_to_b(&self, g: &[BigInt], u: &[BigInt]) -> ElementU3 {
        let nh = self.hab_ngens();
        let mut out = self.zero();
        for i in 0..nh {
            for j in i + 1..nh {
                let c = &u[wedge_index(nh, i, j)];
                if c.is_zero() {
                    continue;
                }
                out.add_scaled(c.clone(), &self.b_elem(g, self.iota.matrix().row(i), &unit(nh, j)));
                out.add_scaled(-c.clone(), &self.b_elem(g, self.iota.matrix().row(j), &unit(nh, i)));
            }
        }
        out
    }

    /// `(ι ⊗ ι ⊗ id) l_33(t)` for `t ∈ (H^ab)^{⊗3}`.
    fn triple_to_b(&self, t: &[BigInt]) -> ElementU3 {
        let nh = self.hab_ngens();
        let lt = l33(self.lh.piece(1).group()).apply(t);
        let mut out = self.zero();
        for a in 0..nh {
            for b in 0..nh {
                for c in 0..nh {
                    let k = &lt[(a * nh + b) * nh + c];
                    if !k.is_zero() {
                        let e = self.b_elem(self.iota.matrix().row(a), self.iota.matrix().row(b), &unit(nh, c));
                        out.add_scaled(k.clone(), &e);
                    }
                }
            }
        }
        out
    }

    fn hab_ngens(&self) -> usize {
        self.lh.piece(1).ngens()
    }

    /// `ḡ ⊗ w` for `w ∈ L_2(H)`, rewritten through a bracket preimage of `w`.
    pub fn nu12(&self, g: &[BigInt], w: &[BigInt]) -> ElementU3 {
        let u = combine(&self.nu12_table, w, self.c2h.domain().ngens());
        self.nu12_with(g, &u)
    }

    /// `ν_12` through an explicitly chosen preimage `u ∈ H^ab ∧ H^ab`.
    pub fn nu12_with(&self, g: &[BigInt], u: &[BigInt]) -> ElementU3 {
        self.wedge_to_b(g, u)
    }

    /// `1 ⊗ w` for `w ∈ L_3(H)`, rewritten through a `c_33` preimage.
    pub fn nu03(&self, w: &[BigInt]) -> ElementU3 {
        let t = combine(&self.nu03_table, w, self.c33h.domain().ngens());
        self.nu03_with(&t)
    }

    pub fn nu03_with(&self, t: &[BigInt]) -> ElementU3 {
        self.triple_to_b(t)
    }

    /// Class of `g` in `G^AB`.
    pub fn gbar(&self, g: Elem) -> Vec<BigInt> {
        self.lg.piece(1).coords(g).to_vec()
    }

    /// Class of `h` in `H^ab`.
    pub fn hbar(&self, h: Elem) -> Vec<BigInt> {
        self.lh.piece(1).coords(h).to_vec()
    }

    /// Class of `w ∈ G_(2)` in `L_2^𝒢(G)`.
    pub fn l2g(&self, w: Elem) -> Result<Vec<BigInt>, LieError> {
        self.lg.piece(2).try_coords(w).map(<[BigInt]>::to_vec).ok_or_else(|| self.outside(w, "G_(2)"))
    }

    /// Class of `w ∈ H_2` in `L_2(H)`.
    pub fn l2h(&self, w: Elem) -> Result<Vec<BigInt>, LieError> {
        self.lh.piece(2).try_coords(w).map(<[BigInt]>::to_vec).ok_or_else(|| self.outside(w, "H_2"))
    }

    /// Class of `w ∈ H_3` in `L_3(H)`.
    pub fn l3h(&self, w: Elem) -> Result<Vec<BigInt>, LieError> {
        self.lh.piece(3).try_coords(w).map(<[BigInt]>::to_vec).ok_or_else(|| self.outside(w, "H_3"))
    }

    fn outside(&self, w: Elem, what: &str) -> LieError {
        LieError::NotInSubgroup(format!("{} is not in {what}", self.setting.g.label(w)))
    }

    /// `ι(h̄)` in `G^AB`.
    pub fn iota_of(&self, h: &[BigInt]) -> Vec<BigInt> {
        self.iota.apply(h)
    }

    /// `U_1 = H^ab`.
    pub fn u1(&self) -> Arc<FgAbGroup> {
        self.lh.piece(1).group().clone()
    }

    /// `U_2 = (G^AB ⊗ H^ab) / l_2^{𝒢H} Ker(c_2^H)`.
    pub fn u2(&self) -> Result<Arc<FgAbGroup>, LieError> {
        let l = l2_gh(&self.iota)?;
        let rels: Vec<Vec<BigInt>> = self.c2h.kernel().lattice.basis().iter().map(|u| l.apply(u)).collect();
        Ok(Arc::new(l.codomain().with_relations(rels)))
    }

    /// `θ_1: U_1 -> Z(G)I(H)/I(G)I(H)`, `h̄ ↦ h - 1`.
    pub fn theta1(&self) -> Result<AbMap, LieError> {
        let s = &self.setting;
        let q = s.quot(&s.f_ih(0), &s.f_ih(1));
        let rows = self
            .lh
            .piece(1)
            .lifts()
            .iter()
            .map(|&h| q.coords(&elem_minus_one(s.dim(), h)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AbMap::new(self.u1(), Arc::new(q.group().clone()), IntMatrix::from_rows(q.ngens(), rows))?)
    }

    /// `θ_2: U_2 -> I(G)I(H)/F²I(H)`, `ḡ ⊗ h̄ ↦ (g - 1)(h - 1)`.
    pub fn theta2(&self) -> Result<AbMap, LieError> {
        let s = &self.setting;
        let q = s.quot(&s.f_ih(1), &s.f_ih(2));
        let mut rows = Vec::new();
        for &g in self.lg.piece(1).lifts() {
            for &h in self.lh.piece(1).lifts() {
                rows.push(q.coords(&convolve(&s.g, &elem_minus_one(s.dim(), g), &elem_minus_one(s.dim(), h)))?);
            }
        }
        Ok(AbMap::new(self.u2()?, Arc::new(q.group().clone()), IntMatrix::from_rows(q.ngens(), rows))?)
    }

    /// `θ_3: U_3 -> F²I(H)/F³I(H)`; block A `w ⊗ h̄ ↦ (w - 1)(h - 1)`,
    /// block B `ḡ_1 ⊗ ḡ_2 ⊗ h̄ ↦ (g_1 - 1)(g_2 - 1)(h - 1)`.
    pub fn theta3(&self) -> Result<AbMap, LieError> {
        let s = &self.setting;
        let q = s.quot(&s.f_ih(2), &s.f_ih(3));
        let m = |a: Elem| elem_minus_one(s.dim(), a);
        let mut rows = Vec::new();
        for &w in self.lg.piece(2).lifts() {
            for &h in self.lh.piece(1).lifts() {
                rows.push(q.coords(&convolve(&s.g, &m(w), &m(h)))?);
            }
        }
        for &g1 in self.lg.piece(1).lifts() {
            for &g2 in self.lg.piece(1).lifts() {
                let x = convolve(&s.g, &m(g1), &m(g2));
                for &h in self.lh.piece(1).lifts() {
                    rows.push(q.coords(&convolve(&s.g, &x, &m(h)))?);
                }
            }
        }
        Ok(AbMap::new(self.group.clone(), Arc::new(q.group().clone()), IntMatrix::from_rows(q.ngens(), rows))?)
    }

    /// The subgroup of `U_3` spanned by a list of elements.
    pub fn span<'a>(&self, xs: impl IntoIterator<Item = &'a ElementU3>) -> SubgroupOf {
        SubgroupOf::generated(self.group.clone(), xs.into_iter().map(|x| x.coords.clone()))
    }

    /// Exterior square of `H^ab` as used by `c_2^H`.
    pub fn hab_wedge(&self) -> Arc<FgAbGroup> {
        exterior_square(self.lh.piece(1).group()).0
    }
}

/// A preimage of every codomain generator; fails when `f` is not surjective.
fn preimage_table(f: &AbMap) -> Result<Vec<Vec<BigInt>>, LieError> {
    (0..f.codomain().ngens())
        .map(|i| {
            f.preimage(&unit(f.codomain().ngens(), i))
                .ok_or_else(|| LieError::NoBracketPreimage(format!("generator {i} of the bracket target")))
        })
        .collect()
}

fn combine(table: &[Vec<BigInt>], w: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for (c, row) in w.iter().zip(table) {
        if c.is_zero() {
            continue;
        }
        for (o, r) in out.iter_mut().zip(row) {
            *o += c * r;
        }
    }
    out
}
