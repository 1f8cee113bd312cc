use super::checks::{
    decomposition_check, exactness_check, iso_verdict, pushout_check, same_invariants, subgroup_equality, surjectivity_check,
    Square, Verdict,
};
use super::hmodule::{tensor_over_h, HModuleQuotient};
use super::TensorError;
use crate::exactla::{exterior_square, tensor, tensor_elem, AbMap, FgAbGroup, Lattice, LatticeQuotient, SpanMap, SubgroupOf};
use crate::groupring::{convolve, elem_minus_one, FoxSetting, GroupRing, Side};
use crate::groups::{AbQuot, Elem, Subgroup};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::sync::Arc;

fn arc(g: &FgAbGroup) -> Arc<FgAbGroup> {
    Arc::new(g.clone())
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); n];
    e[i] = BigInt::one();
    e
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `(a - 1) x`.
fn minus_one_times(s: &FoxSetting, a: Elem, x: &[BigInt]) -> Vec<BigInt> {
    convolve(&s.g, &elem_minus_one(s.dim(), a), x)
}

/// `ℤ(G)J / I(G)J ≅ J / I(H)J`, through the map induced by inclusion.
pub fn prop31(s: &FoxSetting, j: &Lattice) -> Result<Verdict, TensorError> {
    let zgj = s.ring.left_ideal_of(j);
    let left = s.quot(j, &s.prod(&s.ih, j));
    let right = s.quot(&zgj, &s.prod(&s.ig(), j));
    let rows = left.lifts().iter().map(|l| right.coords(l)).collect::<Result<Vec<_>, _>>()?;
    let f = AbMap::from_images(arc(left.group()), arc(right.group()), rows)?;
    Ok(iso_verdict("inclusion induces an isomorphism", &f, "J/I(H)J -> Z(G)J/I(G)J")
        .with("J/I(H)J", left.group().describe())
        .with("Z(G)J/I(G)J", right.group().describe()))
}

/// `G ∩ (1 + I(G)J) = H ∩ (1 + I(H)J)`.
pub fn cor32(s: &FoxSetting, j: &Lattice) -> Verdict {
    let (lhs, _) = s.ring.unit_coset_subgroup(&s.prod(&s.ig(), j));
    let (rhs, _) = s.ring.unit_coset_subgroup(&s.prod(&s.ih, j));
    let rhs: Vec<Elem> = rhs.into_iter().filter(|&a| s.h.contains(a)).collect();
    Verdict::from_bool("unit subgroups agree", lhs == rhs, || {
        let odd: Vec<&str> = lhs.iter().filter(|a| !rhs.contains(a)).map(|&a| s.g.label(a)).collect();
        format!("elements only on the left: {odd:?}; sizes {} vs {}", lhs.len(), rhs.len())
    })
    .with("order", lhs.len())
}

/// `I(G)J/I(G)I(H)J ≅ I(H)J/I²(H)J ⊕ I(G)/Z(G)I(H) ⊗ J/I(H)J`.
pub fn thm15(s: &FoxSetting, j: &Lattice) -> Verdict {
    let ig = s.ig();
    let ihj = s.prod(&s.ih, j);
    let lhs = s.quot(&s.prod(&ig, j), &s.prod(&s.prod(&ig, &s.ih), j));
    let a = s.quot(&ihj, &s.prod(&s.ih, &ihj));
    let rel = s.quot(&ig, &s.left_ideal(&s.h));
    let jh = s.quot(j, &ihj);
    let t = tensor(rel.group(), jh.group());
    decomposition_check("direct sum decomposition", lhs.group(), &[a.group(), &t])
}

/// For normal `H`: the decomposition of `I(G)J/(I(H)I(G)J + I([H,G])Z(G)J)`
/// with first summand `H/[H,G] ⊗ J_H`, the same with first summand
/// `I(H)J/(I([H,G])J + I²(H)J)`, and, for `J = I(H)`, the three descriptions
/// of the unit subgroup. The first summands agree when `H/[H,G] ⊗ J_H`
/// maps injectively onto the second, e.g. for cyclic `H`; for `G = H = C2×C2`
/// they have orders 16 and 8.
pub fn thm110(s: &FoxSetting, j: &Lattice) -> Result<Vec<Verdict>, TensorError> {
    if !s.g.is_normal(&s.h) {
        return Err(TensorError::Precondition("H must be normal".into()));
    }
    let g = &s.g;
    let hg = g.commutator_subgroup(&s.h, &g.whole());
    let ig = s.ig();
    let ihig = s.prod(&s.ih, &ig);
    let ihgz = s.ring.sided_ideal(Side::Right, &hg);
    let lhs = s.quot(&s.prod(&ig, j), &s.sum(&[&s.prod(&ihig, j), &s.prod(&ihgz, j)]));
    let jh = s.quot(j, &s.prod(&s.ih, j));
    let hab_rel = g.abelian_section(&s.h, &hg, None)?;
    let t1 = tensor(hab_rel.group(), jh.group());
    let free = FgAbGroup::free(g.order() / s.h.order() - 1);
    let t2 = tensor(&free, jh.group());
    let fox = s.quot(&s.prod(&s.ih, j), &s.sum(&[&s.prod(&s.aug(&hg), j), &s.prod(&s.ih, &s.prod(&s.ih, j))]));
    let mut out = vec![
        decomposition_check("direct sum decomposition", lhs.group(), &[&t1, &t2]).with("H/[H,G] x J_H", t1.describe()),
        decomposition_check("decomposition through the Fox quotient of H", lhs.group(), &[fox.group(), &t2]).with("I(H)J/(I([H,G])J + I^2(H)J)", fox.group().describe()),
    ];
    if j == &s.ih {
        let ih = &s.ih;
        let base = s.prod(&ihig, ih);
        let (s1, _) = s.ring.unit_coset_subgroup(&s.sum(&[&base, &s.prod(&s.aug(&hg), ih)]));
        let (s2, _) = s.ring.unit_coset_subgroup(&s.sum(&[&base, &s.prod(&ihgz, ih)]));
        let (s3, _) = s.ring.unit_coset_subgroup(&s.sum(&[&s.prod(&s.aug(&hg), ih), &s.ih_power(3)]));
        let s3: Vec<Elem> = s3.into_iter().filter(|&a| s.h.contains(a)).collect();
        out.push(Verdict::from_bool("unit subgroups agree", s1 == s2 && s2 == s3, || format!("orders {} / {} / {}", s1.len(), s2.len(), s3.len())).with("order", s1.len()));
    }
    Ok(out)
}

/// `Z(G) ⊗_H J ≅ Z(G)J`.
pub fn lemma11(s: &FoxSetting, j: &Lattice) -> Result<Verdict, TensorError> {
    let a = HModuleQuotient::new(&s.ring, &s.h, Side::Right, &s.ring.full(), &s.ring.zero())?;
    let b = HModuleQuotient::new(&s.ring, &s.h, Side::Left, j, &Lattice::zero(s.dim()))?;
    let t = tensor_over_h(&a, &b)?;
    let zgj = FgAbGroup::free(s.ring.left_ideal_of(j).rank());
    Ok(same_invariants("tensor over H with the group ring", t.group(), &zgj))
}

fn element_of_order(s: &FoxSetting, k: usize) -> Option<Elem> {
    s.h.elements().iter().copied().find(|&a| s.g.elem_order(a) == k)
}

/// For cyclic `H = <t>`: `P̄_n(G,N;H) ≅ P_{n-1}(G/N) / P_{n-1}(G/N) N̄(t)`, the
/// right-hand side computed in the quotient group with the image series.
pub fn cor24_cyclic(s: &FoxSetting, nsub: &Subgroup, n: usize) -> Result<Verdict, TensorError> {
    let t = element_of_order(s, s.h.order()).ok_or_else(|| TensorError::Precondition("H must be cyclic".into()))?;
    let lhs = s.quot(&s.prod(&s.ig(), &s.ih), &s.sum(&[&s.prod(&s.left_ideal(nsub), &s.ih), &s.f_ih(n)]));
    let (q, proj) = s.g.quotient(nsub)?;
    let q = Arc::new(q);
    let mut terms = Vec::new();
    for k in 1..=s.series.length() {
        let img: Vec<Elem> = s.series.term(k).elements().iter().map(|&a| proj[a]).collect();
        terms.push(q.subgroup_from_set(&img)?);
    }
    let qseries = q.custom_series(terms)?;
    let qring = GroupRing::new(q.clone());
    let qfilt = crate::groupring::Filtration::new(&qring, &qseries, n);
    let mut norm = vec![BigInt::zero(); q.order()];
    let mut p = 0;
    for _ in 0..s.h.order() {
        norm[proj[p]] += 1;
        p = s.g.mul(p, t);
    }
    let iq = qring.augmentation();
    let iqn = Lattice::new(q.order(), iq.basis().iter().map(|x| convolve(&q, x, &norm)).collect::<Vec<_>>());
    let rhs = qring.quotient(&iq, &Lattice::sum_all(q.order(), [qfilt.term(n), &iqn]));
    Ok(same_invariants("cyclic formula", lhs.group(), rhs.group()))
}

/// For abelian `H`: exactness of
/// `H ∧ H -> P_{n-1}(G/N) ⊗_H P_{n-1}(H) -> P̄_n(G,N;H) -> 0`.
pub fn cor24_abelian(s: &FoxSetting, nsub: &Subgroup, n: usize) -> Result<Vec<Verdict>, TensorError> {
    if !s.g.is_normal(nsub) {
        return Err(TensorError::Precondition("N must be normal".into()));
    }
    let habq = s.g.abelian_section(&s.h, &s.g.trivial_subgroup(), None).map_err(|_| TensorError::Precondition("H must be abelian".into()))?;
    let ig = s.ig();
    let a = HModuleQuotient::new(&s.ring, &s.h, Side::Right, &ig, &s.sum(&[&s.left_ideal(nsub), s.f(n)]))?;
    let b = HModuleQuotient::new(&s.ring, &s.h, Side::Left, &s.ih, &s.ih_power(n))?;
    let t = tensor_over_h(&a, &b)?;
    let pbar = s.quot(&s.prod(&ig, &s.ih), &s.sum(&[&s.prod(&s.left_ideal(nsub), &s.ih), &s.f_ih(n)]));
    let hab = Arc::new(habq.group().as_ref().clone());
    let (wedge, _) = exterior_square(&hab);
    let m = hab.ngens();
    let pa = |h: Elem| a.coords(&elem_minus_one(s.dim(), h));
    let pb = |h: Elem| b.coords(&elem_minus_one(s.dim(), h));
    let mut rows = Vec::new();
    for i in 0..m {
        for k in i + 1..m {
            let (hi, hk) = (habq.lift(i), habq.lift(k));
            rows.push(sub(&tensor_elem(&pa(hi)?, &pb(hk)?), &tensor_elem(&pa(hk)?, &pb(hi)?)));
        }
    }
    let lambda = AbMap::from_images(wedge, t.group().clone(), rows)?;
    let mut rows = Vec::new();
    for x in a.quotient().lifts() {
        for y in b.quotient().lifts() {
            rows.push(pbar.coords(&convolve(&s.g, x, y))?);
        }
    }
    let mu = AbMap::from_images(t.group().clone(), arc(pbar.group()), rows)?;
    Ok(vec![exactness_check("exact at the tensor product", &lambda, &mu), surjectivity_check("exact at the quotient", &mu)])
}

/// The middle square and bottom row of the second-quotient diagram for a
/// subgroup `K` and an `H`-stable left ideal `J ⊆ Z(H)`-span:
///
/// ```text
/// HKG_(2)/KG_(2) ⊗ J_H --ι⊗id--> G/KG_(2) ⊗ J_H --> G/HKG_(2) ⊗ J_H
///         | μ'_H                     | μ'_G
///         v                          v
/// I(H)J/(I(H∩KG_(2))J + I²(H)J) --j--> I(G)J/(I(K)J + F²J) --q̄⊗id--> G/HKG_(2) ⊗ J_H
/// ```
#[derive(Clone, Debug)]
pub struct Diagram23 {
    pub kg2: Subgroup,
    pub hkg2: Subgroup,
    pub a_sec: AbQuot,
    pub b_sec: AbQuot,
    pub e_sec: AbQuot,
    pub jh: LatticeQuotient,
    pub c: LatticeQuotient,
    pub d: LatticeQuotient,
    pub te: Arc<FgAbGroup>,
    pub square: Square,
    pub qbar: AbMap,
}

impl Diagram23 {
    pub fn new(s: &FoxSetting, k: &Subgroup, j: &Lattice) -> Result<Self, TensorError> {
        let g = &s.g;
        let kg2 = g.join(k, s.gk(2));
        let hkg2 = g.join(&s.h, &kg2);
        let a_sec = g.abelian_section(&hkg2, &kg2, Some(s.h.elements()))?;
        let b_sec = g.abelian_section(&g.whole(), &kg2, None)?;
        let e_sec = g.abelian_section(&g.whole(), &hkg2, None)?;
        let ihj = s.prod(&s.ih, j);
        let jh = s.quot(j, &ihj);
        let c = s.quot(&ihj, &s.sum(&[&s.prod(&s.aug(&g.intersect(&s.h, &kg2)), j), &s.prod(&s.ih, &ihj)]));
        let d = s.quot(&s.prod(&s.ig(), j), &s.sum(&[&s.prod(&s.aug(k), j), &s.prod(s.f(2), j)]));
        let ta = arc(&tensor(a_sec.group(), jh.group()));
        let tb = arc(&tensor(b_sec.group(), jh.group()));
        let te = arc(&tensor(e_sec.group(), jh.group()));
        let (cg, dg) = (arc(c.group()), arc(d.group()));
        let nj = jh.ngens();
        let mut top = Vec::new();
        let mut left = Vec::new();
        for &h in a_sec.lifts() {
            for (x, xl) in jh.lifts().iter().enumerate() {
                top.push(tensor_elem(b_sec.coords(h), &unit(nj, x)));
                left.push(c.coords(&minus_one_times(s, h, xl))?);
            }
        }
        let mut right = Vec::new();
        for &a in b_sec.lifts() {
            for xl in jh.lifts() {
                right.push(d.coords(&minus_one_times(s, a, xl))?);
            }
        }
        let bottom = c.lifts().iter().map(|l| d.coords(l)).collect::<Result<Vec<_>, _>>()?;
        let square = Square {
            top: AbMap::from_images(ta.clone(), tb.clone(), top)?,
            left: AbMap::from_images(ta, cg.clone(), left)?,
            right: AbMap::from_images(tb, dg.clone(), right)?,
            bottom: AbMap::from_images(cg, dg.clone(), bottom)?,
        };
        let mut span = SpanMap::new(s.dim(), te.clone());
        for a in g.elements().skip(1) {
            for b in j.basis() {
                span.add(minus_one_times(s, a, b), tensor_elem(e_sec.coords(a), &jh.coords(b)?))?;
            }
        }
        let qbar = span.descend(&d, dg)?;
        Ok(Diagram23 { kg2, hkg2, a_sec, b_sec, e_sec, jh, c, d, te, square, qbar })
    }

    /// Whether `HKG_(2)/KG_(2) -> G/KG_(2) -> G/HKG_(2)` splits, decided by
    /// invariant factors (a short exact sequence of finite abelian groups
    /// splits exactly when the middle term is isomorphic to the sum).
    pub fn splits(&self) -> bool {
        let (sum, _) = FgAbGroup::direct_sum(&[self.a_sec.group(), self.e_sec.group()]);
        sum.invariants() == self.b_sec.group().invariants()
    }
}

/// The pushout, the exactness of the bottom row, the split decomposition
/// when it applies, and the lattice identity for `I(H)J ∩ (I(K)J + F²J)`.
pub fn thm33(s: &FoxSetting, k: &Subgroup, j: &Lattice) -> Result<Vec<Verdict>, TensorError> {
    let dg = Diagram23::new(s, k, j)?;
    let mut out = vec![
        pushout_check("middle square is a pushout", &dg.square),
        exactness_check("bottom row exact at the middle node", &dg.square.bottom, &dg.qbar),
        surjectivity_check("bottom row exact at the right node", &dg.qbar),
    ];
    if dg.splits() {
        out.push(decomposition_check("split decomposition", dg.d.group(), &[dg.c.group(), &dg.te]));
    }
    let u = u_generators(s, &dg);
    out.push(kernel_of_j(&dg, &u)?);
    out.push(cor35(s, k, j, &dg, u));
    Ok(out)
}

/// Generators of `U`: `(h - 1)x` for `0 ≤ k ≤ exp(G)`, `h ∈ H ∩ KG_(2)G^k`
/// and `x` in `X_k = {x ∈ J : kx ∈ I(H)J}`.
fn u_generators(s: &FoxSetting, dg: &Diagram23) -> Vec<Vec<BigInt>> {
    let g = &s.g;
    let ihj = s.prod(&s.ih, &dg.jh.big);
    let divs = dg.jh.group().divisors();
    let mut gens = Vec::new();
    for kk in 0..=g.exponent() as i64 {
        let hk = g.intersect(&s.h, &g.join(&dg.kg2, &g.power_subgroup(&g.whole(), kk)));
        let kb = BigInt::from(kk);
        let mut xk: Vec<Vec<BigInt>> = ihj.basis().to_vec();
        for (i, d) in divs.iter().enumerate() {
            let gcd = d.gcd(&kb);
            let c = if gcd.is_zero() { BigInt::one() } else { d / gcd };
            if !c.is_zero() {
                xk.push(dg.jh.lift(i).iter().map(|v| v * &c).collect());
            }
        }
        for &h in hk.elements() {
            if h == 0 {
                continue;
            }
            for x in &xk {
                gens.push(minus_one_times(s, h, x));
            }
        }
    }
    gens
}

/// `Ker(j)` is generated by the cosets of `U`.
fn kernel_of_j(dg: &Diagram23, u: &[Vec<BigInt>]) -> Result<Verdict, TensorError> {
    let c = dg.square.bottom.domain().clone();
    let coords = u.iter().map(|x| dg.c.coords(x)).collect::<Result<Vec<_>, _>>()?;
    let described = SubgroupOf::generated(c, coords);
    Ok(subgroup_equality("kernel of j is spanned by the described cosets", &dg.square.bottom.kernel(), &described))
}

/// `I(H)J ∩ (I(K)J + F²J) = I(H∩KG_(2))J + I²(H)J + U`.
fn cor35(s: &FoxSetting, k: &Subgroup, j: &Lattice, dg: &Diagram23, u: Vec<Vec<BigInt>>) -> Verdict {
    let g = &s.g;
    let ihj = s.prod(&s.ih, j);
    let lhs = ihj.intersect(&s.sum(&[&s.prod(&s.aug(k), j), &s.prod(s.f(2), j)])).expect("same ambient");
    let mut gens = u;
    gens.extend(s.prod(&s.aug(&g.intersect(&s.h, &dg.kg2)), j).basis().iter().cloned());
    gens.extend(s.prod(&s.ih, &ihj).basis().iter().cloned());
    let rhs = Lattice::new(s.dim(), gens);
    Verdict::from_bool("lattice identity for the intersection", lhs == rhs, || {
        let extra = lhs.basis().iter().find(|x| !rhs.contains(x)).or_else(|| rhs.basis().iter().find(|x| !lhs.contains(x)));
        format!("ranks {} vs {}; first differing vector {}", lhs.rank(), rhs.rank(), extra.map(|x| super::fmt_vec(x)).unwrap_or_default())
    })
}

/// Square (24) for a subgroup `K`:
///
/// ```text
/// H^ab ∧ H^ab --l2--> G/KG_(2) ⊗ H^ab
///     | c2                  | μ
///     v                     v
///  H_2/H_3 -----d2-----> I(G)I(H)/(I(K)I(H) + F²I(H))
/// ```
#[derive(Clone, Debug)]
pub struct Square24 {
    pub hab: AbQuot,
    pub b_sec: AbQuot,
    pub c_sec: AbQuot,
    pub d: LatticeQuotient,
    pub denominator: Lattice,
    pub square: Square,
}

impl Square24 {
    pub fn new(s: &FoxSetting, k: &Subgroup) -> Result<Self, TensorError> {
        let g = &s.g;
        let kg2 = g.join(k, s.gk(2));
        let hab = s.hab();
        let b_sec = g.abelian_section(&g.whole(), &kg2, None)?;
        let c_sec = g.abelian_section(s.hk(2), s.hk(3), None)?;
        let denominator = s.sum(&[&s.prod(&s.aug(k), &s.ih), &s.f_ih(2)]);
        let d = s.quot(&s.prod(&s.ig(), &s.ih), &denominator);
        let hg = Arc::new(hab.group().as_ref().clone());
        let (wedge, _) = exterior_square(&hg);
        let m = hab.ngens();
        let bg = arc(&tensor(b_sec.group(), &hg));
        let mut top = Vec::new();
        let mut left = Vec::new();
        for i in 0..m {
            for k2 in i + 1..m {
                let (hi, hk) = (hab.lift(i), hab.lift(k2));
                top.push(sub(&tensor_elem(b_sec.coords(hi), &unit(m, k2)), &tensor_elem(b_sec.coords(hk), &unit(m, i))));
                left.push(c_sec.coords(g.comm(hi, hk)).to_vec());
            }
        }
        let mut right = Vec::new();
        for &a in b_sec.lifts() {
            for &h in hab.lifts() {
                right.push(d.coords(&minus_one_times(s, a, &elem_minus_one(s.dim(), h)))?);
            }
        }
        let bottom = c_sec.lifts().iter().map(|&x| d.coords(&elem_minus_one(s.dim(), x))).collect::<Result<Vec<_>, _>>()?;
        let (cg, dg) = (c_sec.group().clone(), arc(d.group()));
        let square = Square {
            top: AbMap::from_images(wedge.clone(), bg.clone(), top)?,
            left: AbMap::from_images(wedge, cg.clone(), left)?,
            right: AbMap::from_images(bg, dg.clone(), right)?,
            bottom: AbMap::from_images(cg, dg, bottom)?,
        };
        Ok(Square24 { hab, b_sec, c_sec, d, denominator, square })
    }
}

/// Kernel identity shared by the degree two and three pushouts: the unit
/// subgroup `G ∩ (1 + M)` modulo the bottom of the section equals both
/// `Ker(bottom)` and `left(Ker(top))`.
fn unit_identity(s: &FoxSetting, m: &Lattice, sec: &AbQuot, sq: &Square) -> Verdict {
    let (units, closed) = s.ring.unit_coset_subgroup(m);
    if !closed {
        return Verdict::fail("unit subgroup identity", "the unit set is not a subgroup");
    }
    if let Some(&a) = units.iter().find(|&&a| !sec.top().contains(a)) {
        return Verdict::fail("unit subgroup identity", format!("{} is a unit but lies outside the section", s.g.label(a)));
    }
    let c = sq.left.codomain().clone();
    let from_units = SubgroupOf::generated(c.clone(), units.iter().map(|&a| sec.coords(a).to_vec()));
    let kernel = sq.bottom.kernel();
    let image = left_of_top_kernel(sq);
    let v1 = subgroup_equality("unit subgroup equals the kernel of the bottom map", &from_units, &kernel);
    if !v1.pass {
        return v1.renamed("unit subgroup identity");
    }
    subgroup_equality("unit subgroup identity", &kernel, &image).with("order", units.len())
}

/// `left(Ker(top))`, read off the echelon basis of the lattice spanned by
/// the rows `(top(e_i), left(e_i))` and the relations of `B`: the rows whose
/// pivot lies in the `C` block span the pairs `(0, c)`.
fn left_of_top_kernel(sq: &Square) -> SubgroupOf {
    let b = sq.top.codomain();
    let c = sq.left.codomain().clone();
    let (nb, nc) = (b.ngens(), c.ngens());
    let mut gens: Vec<Vec<BigInt>> = (0..sq.top.domain().ngens())
        .map(|i| sq.top.matrix().row(i).iter().chain(sq.left.matrix().row(i)).cloned().collect())
        .collect();
    for r in b.relations().basis() {
        gens.push(r.iter().cloned().chain(std::iter::repeat_n(BigInt::zero(), nc)).collect());
    }
    let l = Lattice::new(nb + nc, gens);
    let rows = l.basis().iter().zip(l.pivots()).filter(|(_, &p)| p >= nb).map(|(v, _)| v[nb..].to_vec());
    SubgroupOf::generated(c, rows.collect::<Vec<_>>())
}

pub fn thm36(s: &FoxSetting, k: &Subgroup) -> Result<Vec<Verdict>, TensorError> {
    let sq = Square24::new(s, k)?;
    Ok(vec![pushout_check("square is a pushout", &sq.square), unit_identity(s, &sq.denominator, &sq.c_sec, &sq.square)])
}

/// The degree three square for `(G, 𝒢, H, N)`, with its domain replaced by
/// the free abelian group on pairs `(a, b)` of elements of `H`:
///
/// ```text
/// Z[pairs] ---l3---> P_2(G/N) ⊗_H P_2(H)
///    | c3                  | μ
///    v                     v
/// H_2/H_4 ----d3----> I(G)I(H)/(Z(G)I(N)I(H) + F³I(H))
/// ```
///
/// The pushout of a square only depends on the image of its corner in
/// `B ⊕ C`, so a surjection onto `P_2(H) ∧ P_2(H)` leaves it unchanged.
#[derive(Clone, Debug)]
pub struct Square39 {
    pub pairs: Vec<(Elem, Elem)>,
    pub c_sec: AbQuot,
    pub denominator: Lattice,
    pub square: Square,
}

impl Square39 {
    pub fn new(s: &FoxSetting, nsub: &Subgroup) -> Result<Self, TensorError> {
        if !s.g.is_normal(nsub) {
            return Err(TensorError::Precondition("N must be normal".into()));
        }
        let g = &s.g;
        let ig = s.ig();
        let a = HModuleQuotient::new(&s.ring, &s.h, Side::Right, &ig, &s.sum(&[&s.left_ideal(nsub), s.f(3)]))?;
        let b = HModuleQuotient::new(&s.ring, &s.h, Side::Left, &s.ih, &s.ih_power(3))?;
        let t = tensor_over_h(&a, &b)?;
        let c_sec = g.abelian_section(s.hk(2), s.hk(4), None)?;
        let denominator = s.sum(&[&s.prod(&s.left_ideal(nsub), &s.ih), &s.f_ih(3)]);
        let d = s.quot(&s.prod(&ig, &s.ih), &denominator);
        let hs: Vec<Elem> = s.h.elements().iter().copied().filter(|&x| x != 0).collect();
        let mut pairs = Vec::new();
        for (i, &x) in hs.iter().enumerate() {
            for &y in &hs[i + 1..] {
                pairs.push((x, y));
            }
        }
        let dim = s.dim();
        let mut top = Vec::new();
        let mut left = Vec::new();
        for &(x, y) in &pairs {
            let (ux, uy) = (elem_minus_one(dim, x), elem_minus_one(dim, y));
            let (ax, ay) = (a.coords(&ux)?, a.coords(&uy)?);
            let (bx, by) = (b.coords(&ux)?, b.coords(&uy)?);
            let br = a.coords(&sub(&convolve(g, &ux, &uy), &convolve(g, &uy, &ux)))?;
            let bsum: Vec<BigInt> = bx.iter().zip(&by).map(|(p, q)| p + q).collect();
            let v = sub(&sub(&tensor_elem(&ax, &by), &tensor_elem(&ay, &bx)), &tensor_elem(&br, &bsum));
            top.push(v);
            left.push(c_sec.coords(g.comm(x, y)).to_vec());
        }
        let mut right = Vec::new();
        for x in a.quotient().lifts() {
            for y in b.quotient().lifts() {
                right.push(d.coords(&convolve(g, x, y))?);
            }
        }
        let bottom = c_sec.lifts().iter().map(|&x| d.coords(&elem_minus_one(dim, x))).collect::<Result<Vec<_>, _>>()?;
        let free = Arc::new(FgAbGroup::free(pairs.len()));
        let (cg, dg) = (c_sec.group().clone(), arc(d.group()));
        let square = Square {
            top: AbMap::from_images(free.clone(), t.group().clone(), top)?,
            left: AbMap::from_images(free, cg.clone(), left)?,
            right: AbMap::from_images(t.group().clone(), dg.clone(), right)?,
            bottom: AbMap::from_images(cg, dg, bottom)?,
        };
        Ok(Square39 { pairs, c_sec, denominator, square })
    }
}

pub fn thm66(s: &FoxSetting, nsub: &Subgroup) -> Result<Vec<Verdict>, TensorError> {
    let sq = Square39::new(s, nsub)?;
    Ok(vec![pushout_check("degree three square is a pushout", &sq.square), unit_identity(s, &sq.denominator, &sq.c_sec, &sq.square)])
}

/// Corrupts every entry of `bottom` by one in turn and reruns the pushout
/// check; returns the number of corruptions and the verdicts that passed
/// anyway (there are none when `left` is surjective).
pub fn corrupt_sweep(name: &str, sq: &Square) -> (usize, Vec<Verdict>) {
    let mut count = 0;
    let mut survivors = Vec::new();
    let m = sq.bottom.matrix();
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let v = m.get(i, j) + 1;
            let bad = Square { bottom: sq.bottom.with_entry_unchecked(i, j, v), ..sq.clone() };
            count += 1;
            let verdict = pushout_check(name, &bad);
            if verdict.pass || verdict.witness.is_none() {
                survivors.push(verdict.with("entry", format!("({i},{j})")));
            }
        }
    }
    (count, survivors)
}
