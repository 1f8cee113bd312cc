use super::graded::{unit, HeightTuple};
use super::u3::{binom2, ElementU3, U3Pres};
use super::LieError;
use crate::exactla::{exterior_square, tor, wedge_elem, wedge_index, AbMap, FgAbGroup, IntMatrix, SubgroupOf};
use crate::groups::Elem;
use crate::tensor_h::{fmt_vec, subgroup_equality, surjectivity_check, Verdict};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::sync::Arc;

fn small(x: &BigInt) -> i64 {
    x.to_i64().expect("small integer")
}

impl U3Pres {
    /// `δ_1⟨ḡ, k, h̄⟩` for lifts with `g^k ∈ G_(2)` and `h^k ∈ H_2`.
    pub fn delta1_symbol(&self, g: Elem, k: i64, h: Elem) -> Result<ElementU3, LieError> {
        let grp = &self.setting.g;
        let (gb, hb) = (self.gbar(g), self.hbar(h));
        let mut x = self.nu12(&gb, &self.l2h(grp.pow(h, k))?);
        x.sub(&self.a_elem(&self.l2g(grp.pow(g, k))?, &hb));
        let mut t = self.b_elem(&gb, &gb, &hb);
        t.sub(&self.b_elem(&gb, &self.iota_of(&hb), &hb));
        x.add_scaled(binom2(k), &t);
        Ok(x)
    }

    /// `δ_1` on the canonical generators of `Tor(G^AB, H^ab)`, lifted by the
    /// section representatives; the map is checked against the orders.
    pub fn delta1(&self) -> Result<(AbMap, SubgroupOf), LieError> {
        let (gab, hab) = (self.lg.piece(1), self.lh.piece(1));
        let (tg, gens) = tor(gab.group(), hab.group());
        let grp = &self.setting.g;
        let mut rows = Vec::new();
        for t in &gens {
            let g = gab.element(grp, &t.x);
            let h = hab.element(grp, &t.y);
            rows.push(self.delta1_symbol(g, small(&t.k), h)?.coords);
        }
        let image = SubgroupOf::generated(self.group().clone(), rows.iter().cloned());
        let map = AbMap::new(Arc::new(tg), self.group().clone(), IntMatrix::from_rows(self.ngens(), rows))?;
        Ok((map, image))
    }

    /// Generators of `Ker(l_2^{𝒢H}) ∩ Ker(c_2^H)` on the wedge generators of `H^ab`.
    pub fn delta2_domain(&self) -> Result<SubgroupOf, LieError> {
        let l = super::graded::l2_gh(self.iota())?;
        Ok(l.kernel().intersect(&self.c2h().kernel()))
    }

    /// `δ_2(x)` for `x = Σ a_ij (h_i H_2) ∧ (h_j H_2)`; `order` is the
    /// enumeration order of the search for `g_k`.
    pub fn delta2_with_order(&self, a: &[BigInt], order: &[Elem]) -> Result<ElementU3, LieError> {
        let grp = &self.setting.g;
        let hab = self.lh.piece(1);
        let n = hab.ngens();
        let coef = |i: usize, j: usize| small(&a[wedge_index(n, i, j)]);
        let alpha = |k: usize, l: usize| -> i64 {
            if l < k {
                coef(l, k)
            } else if l > k {
                -coef(k, l)
            } else {
                0
            }
        };
        let g2 = self.setting.gk(2);
        let mut out = self.zero();
        for k in 0..n {
            let hk = hab.lift(k);
            let dk = hab.divisor(k);
            let ek = unit(n, k);
            let p = (0..n).fold(0, |acc, l| grp.mul(acc, grp.pow(hab.lift(l), alpha(k, l))));
            let (gk, gpk) = order
                .iter()
                .find_map(|&c| {
                    let gp = grp.mul(p, grp.inv(grp.pow(c, dk)));
                    g2.contains(gp).then_some((c, gp))
                })
                .ok_or_else(|| LieError::NoLift(format!("no g_{} for {}", k + 1, fmt_vec(a))))?;
            let gb = self.gbar(gk);
            out.add(&self.a_elem(&self.l2g(gpk)?, &ek));
            out.add(&self.nu12(&gb, &self.l2h(grp.pow(hk, dk))?));
            let mut t = self.b_elem(&gb, &gb, &ek);
            t.sub(&self.b_elem(&gb, &self.iota_of(&ek), &ek));
            out.add_scaled(binom2(dk), &t);
            let io: Vec<Vec<BigInt>> = (0..n).map(|l| self.iota_of(&unit(n, l))).collect();
            for l in 0..n {
                out.add_scaled(-binom2(alpha(k, l)), &self.b_elem(&io[l], &io[l], &ek));
            }
            for pp in 0..n {
                for q in pp + 1..n {
                    out.add_scaled(-(alpha(k, pp) * alpha(k, q)), &self.b_elem(&io[pp], &io[q], &ek));
                }
            }
        }
        let mut gamma = 0;
        for i in 0..n {
            for j in i + 1..n {
                gamma = grp.mul(gamma, grp.pow(grp.comm(hab.lift(i), hab.lift(j)), coef(i, j)));
            }
        }
        out.sub(&self.nu03(&self.l3h(gamma)?));
        Ok(out)
    }

    /// `δ_2(x)` with `g_k` searched in element id order.
    pub fn delta2(&self, a: &[BigInt]) -> Result<ElementU3, LieError> {
        let order: Vec<Elem> = self.setting.g.elements().collect();
        self.delta2_with_order(a, &order)
    }

    /// `Im(δ_1) + span δ_2(domain generators)`.
    pub fn delta_image(&self, d1: &SubgroupOf, order: Option<&[Elem]>) -> Result<SubgroupOf, LieError> {
        let dom = self.delta2_domain()?;
        let mut gens = Vec::new();
        for x in dom.lattice.basis() {
            let e = match order {
                Some(o) => self.delta2_with_order(x, o)?,
                None => self.delta2(x)?,
            };
            gens.push(e.coords);
        }
        Ok(d1.sum(&SubgroupOf::generated(self.group().clone(), gens)))
    }

    /// The relation elements `R_3`, each paired with the element
    /// `x ∈ Γ ∩ Ker(c_2^H)` it comes from (wedge coordinates of `H^ab`).
    pub fn r3_relations(&self) -> Result<Vec<(ElementU3, Vec<BigInt>)>, LieError> {
        let s = &self.setting;
        let grp = &s.g;
        let top = grp.intersect(&s.h, s.gk(2));
        let w = grp.abelian_section(&top, s.hk(2), None)?;
        let nw = w.ngens();
        let nh = self.lh.piece(1).ngens();
        let (wedge, _) = exterior_square(w.group());
        let l2 = self.lh.piece(2);
        let mut rows = Vec::new();
        for i in 0..nw {
            for j in i + 1..nw {
                rows.push(l2.coords(grp.comm(w.lift(i), w.lift(j))).to_vec());
            }
        }
        let c = AbMap::new(wedge, l2.group().clone(), IntMatrix::from_rows(l2.ngens(), rows))?;
        let mut out = Vec::new();
        for b in c.kernel().lattice.basis() {
            let mut pairs = Vec::new();
            let mut x = vec![BigInt::zero(); nh * nh.saturating_sub(1) / 2];
            for i in 0..nw {
                for j in i + 1..nw {
                    let bij = &b[wedge_index(nw, i, j)];
                    if bij.is_zero() {
                        continue;
                    }
                    pairs.push((grp.pow(w.lift(i), small(bij)), w.lift(j)));
                    let xij = wedge_elem(nh, &self.hbar(w.lift(i)), &self.hbar(w.lift(j)));
                    for (a, v) in x.iter_mut().zip(xij) {
                        *a += bij * v;
                    }
                }
            }
            let mut prod = 0;
            let mut r = self.zero();
            for &(h, hp) in &pairs {
                let t = HeightTuple::new(vec![h, hp], &s.hlcs, &s.series, 4);
                debug_assert!(t.height() >= 3, "pairs from H ∩ G_(2) have height at least 3");
                prod = grp.mul(prod, grp.comm(h, hp));
                r.sub(&self.a_elem(&self.l2g(h)?, &self.hbar(hp)));
                r.add(&self.a_elem(&self.l2g(hp)?, &self.hbar(h)));
            }
            r.add(&self.nu03(&self.l3h(prod)?));
            out.push((r, x));
        }
        Ok(out)
    }

    /// `Ū_3 = U_3 / span(R_3)`.
    pub fn u3bar(&self) -> Result<FgAbGroup, LieError> {
        let r = self.r3_relations()?;
        Ok(self.group().with_relations(r.into_iter().map(|(e, _)| e.coords)))
    }

    /// The generating sets `U_1` and `U_2` of the kernel of `θ_3` for `H = G`.
    pub fn cor65_sets(&self) -> Result<(Vec<ElementU3>, Vec<ElementU3>), LieError> {
        let s = &self.setting;
        let grp = &s.g;
        if s.h != grp.whole() {
            return Err(LieError::Precondition("the generating sets need H = G".into()));
        }
        let (g2, gam2) = (s.gk(2), s.hk(2));
        let exp = grp.exponent() as i64;
        let mut u1 = Vec::new();
        for a in grp.elements() {
            for b in grp.elements() {
                for k in 1..=exp {
                    if g2.contains(grp.pow(a, k)) && gam2.contains(grp.pow(b, k)) {
                        u1.push(self.delta1_symbol(a, k, b)?);
                    }
                }
            }
        }
        // atoms: pairs of lifts of G_(2)/G_2, and canonical symbols of Tor(G^AB, G^AB)
        enum Atom {
            Pair(Elem, Elem),
            Sym(Elem, Elem, i64),
        }
        let w = grp.abelian_section(g2, gam2, None)?;
        let mut atoms = Vec::new();
        for i in 0..w.ngens() {
            for j in i + 1..w.ngens() {
                atoms.push(Atom::Pair(w.lift(i), w.lift(j)));
            }
        }
        let gab = self.lg.piece(1);
        for t in tor(gab.group(), gab.group()).1 {
            atoms.push(Atom::Sym(gab.element(grp, &t.x), gab.element(grp, &t.y), small(&t.k)));
        }
        let l2 = self.lh.piece(2);
        let rows = atoms
            .iter()
            .map(|at| match *at {
                Atom::Pair(a, b) => l2.coords(grp.comm(a, b)).to_vec(),
                Atom::Sym(c, d, k) => l2.coords(grp.comm(c, grp.pow(d, k))).to_vec(),
            })
            .collect();
        let c = AbMap::new(Arc::new(FgAbGroup::free(atoms.len())), l2.group().clone(), IntMatrix::from_rows(l2.ngens(), rows))?;
        let mut u2 = Vec::new();
        for v in c.kernel().lattice.basis() {
            let mut pairs = Vec::new();
            let mut syms = Vec::new();
            for (at, n) in atoms.iter().zip(v) {
                let m = small(n);
                for _ in 0..m.unsigned_abs() {
                    match *at {
                        Atom::Pair(a, b) if m > 0 => pairs.push((a, b)),
                        Atom::Pair(a, b) => pairs.push((b, a)),
                        Atom::Sym(c, d, k) if m > 0 => syms.push((c, d, k)),
                        Atom::Sym(c, d, k) => syms.push((grp.inv(c), d, k)),
                    }
                }
            }
            let mut g = 0;
            let mut e = self.zero();
            for &(a, b) in &pairs {
                g = grp.mul(g, grp.comm(a, b));
                e.add(&self.a_elem(&self.l2g(a)?, &self.hbar(b)));
                e.sub(&self.a_elem(&self.l2g(b)?, &self.hbar(a)));
            }
            for &(c, d, k) in &syms {
                g = grp.mul(g, grp.comm(c, grp.pow(d, k)));
                e.add(&self.a_elem(&self.l2g(grp.pow(c, k))?, &self.hbar(d)));
                e.sub(&self.a_elem(&self.l2g(grp.pow(d, k))?, &self.hbar(c)));
                let (cb, db, dh) = (self.gbar(c), self.gbar(d), self.hbar(d));
                let mut t = self.b_elem(&cb, &db, &dh);
                t.sub(&self.b_elem(&cb, &cb, &dh));
                e.add_scaled(binom2(k), &t);
            }
            e.sub(&self.nu03(&self.l3h(g)?));
            u2.push(e);
        }
        Ok((u1, u2))
    }
}

/// Which map of the degree three kernel check to perturb.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    /// Adds 1 to entry `(tor generator, U_3 generator)` of `δ_1`.
    Delta1 { row: usize, col: usize },
}

/// The kernel of `θ_3` equals `Im(δ_1) + Im(δ_2)`, and `θ_3` is onto.
pub fn thm61(p: &U3Pres, corrupt: Option<Corruption>) -> Result<Vec<Verdict>, LieError> {
    let theta = p.theta3()?;
    let (mut d1, mut im1) = p.delta1()?;
    if let Some(Corruption::Delta1 { row, col }) = corrupt {
        let v = d1.matrix().get(row, col) + 1;
        d1 = d1.with_entry_unchecked(row, col, v);
        im1 = SubgroupOf::generated(p.group().clone(), d1.matrix().to_rows());
    }
    let ker = theta.kernel();
    let both = p.delta_image(&im1, None)?;
    Ok(vec![
        surjectivity_check("theta3 surjective", &theta),
        subgroup_equality("kernel of theta3", &ker, &both)
            .with("U3", p.group().describe())
            .with("Q3", theta.codomain().describe())
            .with("kernel", ker.group().describe())
            .with("im_delta1", im1.group().describe()),
    ])
}

/// `θ_3(R_3) = 0`, and `δ_2(x) ≡ -R_3(x)` modulo `Im(δ_1)` on the family of
/// relations indexed by `Γ ∩ Ker(c_2)`.
pub fn r3_checks(p: &U3Pres) -> Result<Vec<Verdict>, LieError> {
    let theta = p.theta3()?;
    let (_, im1) = p.delta1()?;
    let both = p.delta_image(&im1, None)?;
    let rels = p.r3_relations()?;
    let mut r3_ok = true;
    let mut cong = true;
    let mut witness = String::new();
    let mut nonzero = 0;
    for (r, x) in &rels {
        if !p.is_zero(r) {
            nonzero += 1;
        }
        if !theta.codomain().is_zero(&theta.apply(&r.coords)) || !both.contains(&r.coords) {
            r3_ok = false;
            witness = format!("R3 element {}", fmt_vec(&r.coords));
        }
        let mut d = p.delta2(x)?;
        d.add(r);
        if !im1.contains(&d.coords) {
            cong = false;
            witness = format!("delta2 + R3 = {} outside Im(delta1)", fmt_vec(&d.coords));
        }
    }
    Ok(vec![
        Verdict::from_bool("theta3 kills R3", r3_ok, || witness.clone()).with("relations", rels.len()).with("nonzero", nonzero),
        Verdict::from_bool("delta2 on Gamma is -R3 mod Im(delta1)", cong, || witness.clone()),
    ])
}

/// The kernel of `Ū_3 -> Q_3` is finite: `Ū_3` has free rank zero.
pub fn u3bar_finite(p: &U3Pres) -> Result<Verdict, LieError> {
    let bar = p.u3bar()?;
    Ok(Verdict::from_bool("kernel of U3bar -> Q3 is finite", bar.free_rank() == 0, || bar.describe()).with("U3bar", bar.describe()))
}

/// A `δ_1` entry whose perturbation must break the kernel equality: the
/// generator column is not killed by `θ_3`.
pub fn delta1_corruption(p: &U3Pres) -> Result<Option<Corruption>, LieError> {
    let (d1, _) = p.delta1()?;
    if d1.domain().ngens() == 0 {
        return Ok(None);
    }
    let theta = p.theta3()?;
    let col = (0..p.ngens()).find(|&j| !theta.codomain().is_zero(theta.matrix().row(j)));
    Ok(col.map(|col| Corruption::Delta1 { row: 0, col }))
}

/// `θ_1` and `θ_2` are isomorphisms.
pub fn low_degree_isos(p: &U3Pres) -> Result<Vec<Verdict>, LieError> {
    let t1 = p.theta1()?;
    let t2 = p.theta2()?;
    Ok(vec![
        crate::tensor_h::iso_verdict("theta1", &t1, "U1 -> Q1"),
        crate::tensor_h::iso_verdict("theta2", &t2, "U2 -> Q2"),
    ])
}

/// For `H = G`: `span(U_1) = Im(δ_1)` and `U_3 / (U_1 + U_2) ≅ Q_3` via `θ_3`.
pub fn cor65(p: &U3Pres) -> Result<Vec<Verdict>, LieError> {
    let (u1, u2) = p.cor65_sets()?;
    let (_, im1) = p.delta1()?;
    let s1 = p.span(&u1);
    let s12 = p.span(u1.iter().chain(&u2));
    let theta = p.theta3()?;
    let ker = theta.kernel();
    Ok(vec![
        subgroup_equality("span U1 = Im(delta1)", &s1, &im1).with("U1 size", u1.len()),
        subgroup_equality("span(U1 + U2) = kernel of theta3", &s12, &ker).with("U2 size", u2.len()),
        surjectivity_check("theta3 surjective", &theta),
    ])
}
