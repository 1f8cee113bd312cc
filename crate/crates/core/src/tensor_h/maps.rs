use super::theorems::{Diagram23, Square24};
use super::TensorError;
use crate::exactla::{tensor, AbMap, Lattice, SpanMap};
use crate::groupring::{convolve, elem_minus_one, FoxSetting, GroupRing, Side};
use crate::groups::{FiniteGroup, Subgroup};
use std::sync::Arc;

/// The maps that the second-quotient diagrams are built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    /// `G/KG_(2) ⊗ H^ab -> I(G)I(H)/(I(K)I(H) + F²I(H))`, `ḡ ⊗ h̄ ↦ (g-1)(h-1)`.
    MuG,
    /// `HKG_(2)/KG_(2) ⊗ J/I(H)J -> I(H)J/(I(H∩KG_(2))J + I²(H)J)`, `h̄ ⊗ x̄ ↦ (h-1)x`.
    MuH,
    /// The inclusion-induced map into `I(G)J/(I(K)J + F²J)`.
    J,
    /// `I(G)J/(I(K)J + F²J) -> G/HKG_(2) ⊗ J/I(H)J`, `(g-1)x ↦ ḡ ⊗ x̄`.
    QBarTensorId,
    /// `Q_{n-1}(G) ⊗ H^ab -> Q_n(G, H)`.
    Zeta(usize),
    /// `HKG_(2)/KG_(2) ⊗ J_H -> G/KG_(2) ⊗ J_H`.
    IotaTensorId,
    /// `G/G_2 -> I(G)/I²(G)`.
    PhiG,
    /// `I(G)/I(N)Z(G) -> I(G/N)`.
    PsiN,
}

/// Builds a named map for the setting; `k` and `j` select the diagram of the
/// second quotient, `n` is the normal subgroup for `PsiN`.
pub fn named_map(kind: MapKind, s: &FoxSetting, k: &Subgroup, j: &Lattice, n: &Subgroup) -> Result<AbMap, TensorError> {
    match kind {
        MapKind::MuG => Ok(Square24::new(s, k)?.square.right),
        MapKind::MuH => Ok(Diagram23::new(s, k, j)?.square.left),
        MapKind::J => Ok(Diagram23::new(s, k, j)?.square.bottom),
        MapKind::QBarTensorId => Ok(Diagram23::new(s, k, j)?.qbar),
        MapKind::IotaTensorId => Ok(Diagram23::new(s, k, j)?.square.top),
        MapKind::Zeta(m) => zeta_n(s, m),
        MapKind::PhiG => phi_g(s.g.clone()),
        MapKind::PsiN => psi_n(&s.ring, n),
    }
}

/// `φ_G(aG_2) = a - 1 + I²(G)`.
pub fn phi_g(g: Arc<FiniteGroup>) -> Result<AbMap, TensorError> {
    let ring = GroupRing::new(g.clone());
    let ig = ring.augmentation();
    let q = ring.quotient(&ig, &ring.product(&ig, &ig));
    let ab = g.abelianize();
    let rows = ab.lifts().iter().map(|&a| q.coords(&elem_minus_one(g.order(), a))).collect::<Result<Vec<_>, _>>()?;
    Ok(AbMap::from_images(ab.group().clone(), Arc::new(q.group().clone()), rows)?)
}

/// `Ψ_N(a - 1) = aN - 1`, defined on the spanning set `{a - 1}` of `I(G)`
/// with every syzygy checked.
pub fn psi_n(ring: &GroupRing, n: &Subgroup) -> Result<AbMap, TensorError> {
    let g = ring.group();
    let (q, proj) = g.quotient(n)?;
    let qring = GroupRing::new(Arc::new(q));
    let iq = qring.augmentation();
    let cod_q = qring.quotient(&iq, &qring.zero());
    let cod = Arc::new(cod_q.group().clone());
    let ig = ring.augmentation();
    let dom_q = ring.quotient(&ig, &ring.sided_ideal(Side::Right, n));
    let mut span = SpanMap::new(ring.dim(), cod);
    for a in g.elements().skip(1) {
        span.add(elem_minus_one(g.order(), a), cod_q.coords(&elem_minus_one(qring.dim(), proj[a]))?)?;
    }
    Ok(span.descend(&dom_q, Arc::new(dom_q.group().clone()))?)
}

/// `ζ_n(x ⊗ hH_2) = x(h - 1)` from `F^{n-1}/F^n ⊗ H^ab` to `F^{n-1}I(H)/F^nI(H)`.
pub fn zeta_n(s: &FoxSetting, n: usize) -> Result<AbMap, TensorError> {
    if n < 1 {
        return Err(TensorError::Precondition("ζ_n needs n ≥ 1".into()));
    }
    let src = s.quot(s.f(n - 1), s.f(n));
    let dst = s.quot(&s.f_ih(n - 1), &s.f_ih(n));
    let hab = s.hab();
    let dom = Arc::new(tensor(src.group(), hab.group()));
    let mut rows = Vec::new();
    for x in src.lifts() {
        for &h in hab.lifts() {
            rows.push(dst.coords(&convolve(&s.g, x, &elem_minus_one(s.dim(), h)))?);
        }
    }
    let cod = Arc::new(dst.group().clone());
    Ok(AbMap::from_images(dom, cod, rows)?)
}
