use crate::exactla::{AbMap, FgAbGroup, IntMatrix, SubgroupOf};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Outcome of one check: a name, the verdict, a witness when it fails, and
/// deterministic details (invariants, orders) for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub details: BTreeMap<String, String>,
}

impl Verdict {
    pub fn pass(name: impl Into<String>) -> Self {
        Verdict { name: name.into(), pass: true, witness: None, details: BTreeMap::new() }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Verdict { name: name.into(), pass: false, witness: Some(witness.into()), details: BTreeMap::new() }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.details.insert(key.to_string(), value.to_string());
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

pub fn fmt_vec(v: &[BigInt]) -> String {
    format!("[{}]", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

/// A commutative square
///
/// ```text
///   A --top--> B
///   |          |
///  left      right
///   v          v
///   C -bottom-> D
/// ```
#[derive(Clone, Debug)]
pub struct Square {
    pub top: AbMap,
    pub left: AbMap,
    pub right: AbMap,
    pub bottom: AbMap,
}

impl Square {
    fn maps(&self) -> [(&'static str, &AbMap); 4] {
        [("top", &self.top), ("left", &self.left), ("right", &self.right), ("bottom", &self.bottom)]
    }
}

fn ill_defined(name: &str, maps: &[(&str, &AbMap)]) -> Option<Verdict> {
    for (label, m) in maps {
        if let Some(r) = m.ill_defined_relation() {
            let rel = &m.domain().relations().basis()[r];
            return Some(Verdict::fail(name, format!("{label} map is not well defined: relation {} maps to {}", fmt_vec(rel), fmt_vec(&m.apply(rel)))));
        }
    }
    None
}

/// Decides whether the square is a pushout. Checks, in order, that every map
/// is well defined, that the square commutes on each generator of `A`, and
/// that the induced map `(B ⊕ C) / {(top a, -left a)} -> D` is bijective.
pub fn pushout_check(name: &str, sq: &Square) -> Verdict {
    if let Some(v) = ill_defined(name, &sq.maps()) {
        return v;
    }
    let a = sq.top.domain();
    let d = sq.right.codomain();
    for i in 0..a.ngens() {
        let x = sq.right.apply(sq.top.matrix().row(i));
        let y = sq.bottom.apply(sq.left.matrix().row(i));
        if !d.elem_eq(&x, &y) {
            return Verdict::fail(name, format!("square does not commute on generator {i} of A: {} vs {}", fmt_vec(&x), fmt_vec(&y)));
        }
    }
    let b = sq.top.codomain();
    let c = sq.left.codomain();
    let (nb, nc) = (b.ngens(), c.ngens());
    let mut rels: Vec<Vec<BigInt>> = Vec::new();
    for r in b.relations().basis() {
        rels.push(r.iter().cloned().chain(std::iter::repeat_n(BigInt::zero(), nc)).collect());
    }
    for r in c.relations().basis() {
        rels.push(std::iter::repeat_n(BigInt::zero(), nb).chain(r.iter().cloned()).collect());
    }
    for i in 0..a.ngens() {
        rels.push(sq.top.matrix().row(i).iter().cloned().chain(sq.left.matrix().row(i).iter().map(|x| -x)).collect());
    }
    let p = Arc::new(FgAbGroup::new(nb + nc, rels));
    let rows: Vec<Vec<BigInt>> = (0..nb).map(|i| sq.right.matrix().row(i).to_vec()).chain((0..nc).map(|i| sq.bottom.matrix().row(i).to_vec())).collect();
    let phi = AbMap::new(p.clone(), d.clone(), IntMatrix::from_rows(d.ngens(), rows)).expect("induced map on a commuting square is well defined");
    let v = iso_verdict(name, &phi, "pushout -> D");
    v.with("pushout", p.describe()).with("D", d.describe())
}

/// Verdict on whether a map is an isomorphism, with a kernel element or the
/// cokernel as witness.
pub fn iso_verdict(name: &str, f: &AbMap, what: &str) -> Verdict {
    if let Some(v) = ill_defined(name, &[(what, f)]) {
        return v;
    }
    let k = f.kernel();
    if let Some(x) = k.lattice.basis().iter().find(|x| !f.domain().is_zero(x)) {
        return Verdict::fail(name, format!("{what} is not injective: {} maps to zero", fmt_vec(x)));
    }
    if !f.is_surjective() {
        let (c, _) = f.cokernel();
        return Verdict::fail(name, format!("{what} is not surjective: cokernel {}", c.describe()));
    }
    Verdict::pass(name)
}

/// Exactness of `A -f-> B -g-> C` at `B`: `g ∘ f = 0` and `Ker g ⊆ Im f`.
pub fn exactness_check(name: &str, f: &AbMap, g: &AbMap) -> Verdict {
    if let Some(v) = ill_defined(name, &[("incoming", f), ("outgoing", g)]) {
        return v;
    }
    if f.codomain().relations() != g.domain().relations() || f.codomain().ngens() != g.domain().ngens() {
        return Verdict::fail(name, "maps are not composable");
    }
    for i in 0..f.domain().ngens() {
        let y = g.apply(f.matrix().row(i));
        if !g.codomain().is_zero(&y) {
            return Verdict::fail(name, format!("composite is nonzero on generator {i}: {}", fmt_vec(&y)));
        }
    }
    let im = f.image();
    let ker = g.kernel();
    if let Some(x) = ker.lattice.basis().iter().find(|x| !im.contains(x)) {
        return Verdict::fail(name, format!("kernel element {} is not in the image", fmt_vec(x)));
    }
    Verdict::pass(name).with("image", SubgroupOf::group(&im).describe())
}

/// Exactness of `B -g-> C -> 0` at `C`.
pub fn surjectivity_check(name: &str, g: &AbMap) -> Verdict {
    if let Some(v) = ill_defined(name, &[("map", g)]) {
        return v;
    }
    if g.is_surjective() {
        Verdict::pass(name)
    } else {
        let (c, _) = g.cokernel();
        Verdict::fail(name, format!("cokernel {} is nonzero", c.describe()))
    }
}

/// Abstract isomorphism `lhs ≅ ⊕ parts`, decided by invariant factors.
pub fn decomposition_check(name: &str, lhs: &FgAbGroup, parts: &[&FgAbGroup]) -> Verdict {
    let (sum, _) = FgAbGroup::direct_sum(parts);
    let (l, r) = (lhs.invariants(), sum.invariants());
    Verdict::from_bool(name, l == r, || format!("{} vs {}", lhs.describe(), sum.describe()))
        .with("lhs", lhs.describe())
        .with("rhs", sum.describe())
}

/// Abstract isomorphism of two groups by invariant factors.
pub fn same_invariants(name: &str, a: &FgAbGroup, b: &FgAbGroup) -> Verdict {
    decomposition_check(name, a, &[b])
}

/// Equality of two subgroups of a common group.
pub fn subgroup_equality(name: &str, a: &SubgroupOf, b: &SubgroupOf) -> Verdict {
    if let Some(x) = a.lattice.basis().iter().find(|x| !b.contains(x)) {
        return Verdict::fail(name, format!("{} lies only in the first subgroup", fmt_vec(x)));
    }
    if let Some(x) = b.lattice.basis().iter().find(|x| !a.contains(x)) {
        return Verdict::fail(name, format!("{} lies only in the second subgroup", fmt_vec(x)));
    }
    Verdict::pass(name).with("subgroup", a.group().describe())
}
