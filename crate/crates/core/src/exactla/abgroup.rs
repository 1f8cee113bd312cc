use super::lattice::{Lattice, LatticeQuotient};
use super::matrix::IntMatrix;
use super::normal_form::{smith, Echelon};
use super::ExactError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

/// Finitely generated abelian group `Z^ngens / relations`.
///
/// Invariant: `divs[j]` is the Smith diagonal entry attached to column `j` of
/// `v` (1 for killed directions, 0 for free ones), and the nontrivial columns
/// `comps` carry divisors in divisibility order followed by the free ones.
#[derive(Clone, Debug)]
pub struct FgAbGroup {
    ngens: usize,
    rel: Lattice,
    divs: Vec<BigInt>,
    v: IntMatrix,
    v_inv: IntMatrix,
    comps: Vec<usize>,
}

impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.ngens == other.ngens && self.rel == other.rel
    }
}

impl Eq for FgAbGroup {}

impl FgAbGroup {
    pub fn new(ngens: usize, relations: Vec<Vec<BigInt>>) -> Self {
        Self::from_lattice(Lattice::new(ngens, relations))
    }

    pub fn from_lattice(rel: Lattice) -> Self {
        let ngens = rel.dim();
        let sd = smith(&rel.basis_matrix(), false);
        let mut divs = Vec::with_capacity(ngens);
        for j in 0..ngens {
            if j < sd.s.nrows() {
                divs.push(sd.s.get(j, j).clone());
            } else {
                divs.push(BigInt::zero());
            }
        }
        Self::assemble(ngens, rel, divs, sd.v, sd.v_inv)
    }

    fn assemble(ngens: usize, rel: Lattice, divs: Vec<BigInt>, v: IntMatrix, v_inv: IntMatrix) -> Self {
        let mut comps: Vec<usize> = (0..ngens).filter(|&j| !divs[j].is_one()).collect();
        // torsion first in divisibility order, then free
        comps.sort_by(|&a, &b| {
            let (da, db) = (&divs[a], &divs[b]);
            match (da.is_zero(), db.is_zero()) {
                (true, true) => a.cmp(&b),
                (true, false) => std::cmp::Ordering::Greater,
                (false, true) => std::cmp::Ordering::Less,
                (false, false) => da.cmp(db).then(a.cmp(&b)),
            }
        });
        FgAbGroup { ngens, rel, divs, v, v_inv, comps }
    }

    /// `Z/d_1 + ... + Z/d_k`, with `d = 0` meaning a free summand.
    pub fn from_divisors(ds: &[BigInt]) -> Self {
        let n = ds.len();
        let rel = Lattice::new(
            n,
            ds.iter().enumerate().filter(|(_, d)| !d.is_zero()).map(|(i, d)| {
                let mut r = vec![BigInt::zero(); n];
                r[i] = d.abs();
                r
            }),
        );
        if is_chain(ds) {
            let divs = ds.iter().map(|d| d.abs()).collect();
            return Self::assemble(n, rel, divs, IntMatrix::identity(n), IntMatrix::identity(n));
        }
        Self::from_lattice(rel)
    }

    pub fn from_i64_divisors(ds: &[i64]) -> Self {
        Self::from_divisors(&ds.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>())
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_divisors(&[BigInt::from(n)])
    }

    pub fn free(rank: usize) -> Self {
        Self::from_divisors(&vec![BigInt::zero(); rank])
    }

    pub fn trivial() -> Self {
        Self::from_divisors(&[])
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Relation lattice in generator coordinates.
    pub fn relations(&self) -> &Lattice {
        &self.rel
    }

    pub fn relation_matrix(&self) -> IntMatrix {
        self.rel.basis_matrix()
    }

    /// Divisors of the nontrivial invariant components, 0 for free ones.
    pub fn divisors(&self) -> Vec<BigInt> {
        self.comps.iter().map(|&j| self.divs[j].clone()).collect()
    }

    /// Torsion invariant factors d_1 | d_2 | ..., all > 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.comps.iter().map(|&j| self.divs[j].clone()).filter(|d| !d.is_zero()).collect()
    }

    pub fn free_rank(&self) -> usize {
        self.comps.iter().filter(|&&j| self.divs[j].is_zero()).count()
    }

    pub fn invariants(&self) -> (Vec<BigInt>, usize) {
        (self.torsion(), self.free_rank())
    }

    pub fn is_trivial(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.is_finite() {
            Some(self.torsion().iter().fold(BigInt::one(), |a, d| a * d))
        } else {
            None
        }
    }

    /// Number of invariant components.
    pub fn ncomps(&self) -> usize {
        self.comps.len()
    }

    /// Canonical invariant coordinates of `x`; equal iff the elements are equal.
    pub fn normal_form(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.ngens, "element of wrong length");
        let y = self.v.vec_mul(x);
        self.comps
            .iter()
            .map(|&j| {
                let d = &self.divs[j];
                if d.is_zero() {
                    y[j].clone()
                } else {
                    y[j].mod_floor(d)
                }
            })
            .collect()
    }

    pub fn is_zero(&self, x: &[BigInt]) -> bool {
        self.normal_form(x).iter().all(Zero::is_zero)
    }

    pub fn elem_eq(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let d: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero(&d)
    }

    /// Element in generator coordinates from invariant coordinates.
    pub fn from_normal_form(&self, c: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(c.len(), self.comps.len(), "invariant coordinate vector of wrong length");
        let mut x = vec![BigInt::zero(); self.ngens];
        for (k, &j) in self.comps.iter().enumerate() {
            if c[k].is_zero() {
                continue;
            }
            for (xi, vi) in x.iter_mut().zip(self.v_inv.row(j)) {
                if !vi.is_zero() {
                    *xi += &c[k] * vi;
                }
            }
        }
        x
    }

    /// Generators of the invariant-factor decomposition, in generator coordinates.
    pub fn invariant_generators(&self) -> Vec<Vec<BigInt>> {
        self.comps.iter().map(|&j| self.v_inv.row(j).to_vec()).collect()
    }

    /// Isomorphism with the diagonal group `Z/d_1 + ...`: (diagonal, to, from).
    pub fn smith_iso(self: &Arc<Self>) -> (Arc<FgAbGroup>, AbMap, AbMap) {
        let diag = Arc::new(FgAbGroup::from_divisors(&self.divisors()));
        let t = self.comps.len();
        let mut to = IntMatrix::zeros(self.ngens, t);
        for i in 0..self.ngens {
            for (c, &j) in self.comps.iter().enumerate() {
                to.set(i, c, self.v.get(i, j).clone());
            }
        }
        let from = IntMatrix::from_rows(self.ngens, self.invariant_generators());
        let to = AbMap::new(self.clone(), diag.clone(), to).expect("smith transform is well defined");
        let from = AbMap::new(diag.clone(), self.clone(), from).expect("smith inverse is well defined");
        (diag, to, from)
    }

    /// Direct sum; generators of summand k occupy a contiguous block.
    pub fn direct_sum(parts: &[&FgAbGroup]) -> (FgAbGroup, Vec<usize>) {
        let n: usize = parts.iter().map(|p| p.ngens).sum();
        let mut offsets = Vec::with_capacity(parts.len());
        let mut rels = Vec::new();
        let mut off = 0;
        for p in parts {
            offsets.push(off);
            for r in p.rel.basis() {
                let mut row = vec![BigInt::zero(); n];
                row[off..off + p.ngens].clone_from_slice(r);
                rels.push(row);
            }
            off += p.ngens;
        }
        (FgAbGroup::new(n, rels), offsets)
    }

    /// Same generators, additional relations.
    pub fn with_relations(&self, extra: impl IntoIterator<Item = Vec<BigInt>>) -> FgAbGroup {
        FgAbGroup::new(self.ngens, self.rel.basis().iter().cloned().chain(extra).collect())
    }

    /// Short invariant description such as `Z/2 + Z/4 + Z^1`, or `0`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.torsion().iter().map(|d| format!("Z/{d}")).collect();
        let f = self.free_rank();
        if f > 0 {
            parts.push(format!("Z^{f}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

fn is_chain(ds: &[BigInt]) -> bool {
    let mut seen_free = false;
    let mut prev: Option<&BigInt> = None;
    for d in ds {
        if d.is_negative() || d.is_one() {
            return false;
        }
        if d.is_zero() {
            seen_free = true;
            continue;
        }
        if seen_free {
            return false;
        }
        if let Some(p) = prev {
            if !(d % p).is_zero() {
                return false;
            }
        }
        prev = Some(d);
    }
    true
}

/// A subgroup of an abelian group, stored as the preimage lattice in
/// generator coordinates (it always contains the relation lattice).
#[derive(Clone, Debug)]
pub struct SubgroupOf {
    pub ambient: Arc<FgAbGroup>,
    pub lattice: Lattice,
}

impl PartialEq for SubgroupOf {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice
    }
}

impl SubgroupOf {
    pub fn generated(ambient: Arc<FgAbGroup>, gens: impl IntoIterator<Item = Vec<BigInt>>) -> Self {
        let n = ambient.ngens();
        let lattice = Lattice::new(n, ambient.relations().basis().iter().cloned().chain(gens));
        SubgroupOf { ambient, lattice }
    }

    pub fn trivial(ambient: Arc<FgAbGroup>) -> Self {
        let lattice = ambient.relations().clone();
        SubgroupOf { ambient, lattice }
    }

    pub fn whole(ambient: Arc<FgAbGroup>) -> Self {
        let lattice = Lattice::full(ambient.ngens());
        SubgroupOf { ambient, lattice }
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.lattice.contains(x)
    }

    pub fn contains_subgroup(&self, other: &SubgroupOf) -> bool {
        self.lattice.contains_lattice(&other.lattice)
    }

    pub fn sum(&self, other: &SubgroupOf) -> SubgroupOf {
        SubgroupOf { ambient: self.ambient.clone(), lattice: self.lattice.sum(&other.lattice).expect("same ambient") }
    }

    pub fn intersect(&self, other: &SubgroupOf) -> SubgroupOf {
        SubgroupOf {
            ambient: self.ambient.clone(),
            lattice: self.lattice.intersect(&other.lattice).expect("same ambient"),
        }
    }

    /// The subgroup as an abstract group together with its coordinates.
    pub fn as_quotient(&self) -> LatticeQuotient {
        LatticeQuotient::new(&self.lattice, self.ambient.relations()).expect("relations lie in every subgroup")
    }

    pub fn group(&self) -> FgAbGroup {
        self.as_quotient().group().clone()
    }

    pub fn is_trivial(&self) -> bool {
        &self.lattice == self.ambient.relations()
    }

    pub fn is_whole(&self) -> bool {
        self.lattice.rank() == self.ambient.ngens() && self.lattice.index_in(&Lattice::full(self.ambient.ngens())).is_some_and(|i| i.is_one())
    }

    /// The quotient `ambient / self`.
    pub fn cokernel(&self) -> FgAbGroup {
        FgAbGroup::from_lattice(self.lattice.clone())
    }
}

/// A homomorphism of finitely generated abelian groups; row i of `matrix`
/// is the image of domain generator i in codomain generator coordinates.
#[derive(Clone, Debug)]
pub struct AbMap {
    dom: Arc<FgAbGroup>,
    cod: Arc<FgAbGroup>,
    matrix: IntMatrix,
}

impl AbMap {
    /// Checks well-definedness: every domain relation maps into the codomain relations.
    pub fn new(dom: Arc<FgAbGroup>, cod: Arc<FgAbGroup>, matrix: IntMatrix) -> Result<Self, ExactError> {
        if matrix.nrows() != dom.ngens() {
            return Err(ExactError::DimensionMismatch { expected: dom.ngens(), got: matrix.nrows() });
        }
        if matrix.ncols() != cod.ngens() {
            return Err(ExactError::DimensionMismatch { expected: cod.ngens(), got: matrix.ncols() });
        }
        for (i, r) in dom.relations().basis().iter().enumerate() {
            if !cod.is_zero(&matrix.vec_mul(r)) {
                return Err(ExactError::IllDefined { relation: i });
            }
        }
        Ok(AbMap { dom, cod, matrix })
    }

    /// No well-definedness check; negative controls use this to build
    /// deliberately broken maps.
    pub fn new_unchecked(dom: Arc<FgAbGroup>, cod: Arc<FgAbGroup>, matrix: IntMatrix) -> Self {
        assert_eq!(matrix.nrows(), dom.ngens(), "matrix rows must match domain generators");
        assert_eq!(matrix.ncols(), cod.ngens(), "matrix columns must match codomain generators");
        AbMap { dom, cod, matrix }
    }

    /// First relation of the domain whose image is nonzero.
    pub fn ill_defined_relation(&self) -> Option<usize> {
        self.dom.relations().basis().iter().position(|r| !self.cod.is_zero(&self.matrix.vec_mul(r)))
    }

    pub fn from_images(dom: Arc<FgAbGroup>, cod: Arc<FgAbGroup>, images: Vec<Vec<BigInt>>) -> Result<Self, ExactError> {
        let c = cod.ngens();
        if images.iter().any(|r| r.len() != c) {
            return Err(ExactError::DimensionMismatch { expected: c, got: images.iter().map(Vec::len).find(|&l| l != c).unwrap_or(0) });
        }
        Self::new(dom, cod, IntMatrix::from_rows(c, images))
    }

    pub fn identity(g: Arc<FgAbGroup>) -> Self {
        let n = g.ngens();
        AbMap { dom: g.clone(), cod: g, matrix: IntMatrix::identity(n) }
    }

    pub fn zero(dom: Arc<FgAbGroup>, cod: Arc<FgAbGroup>) -> Self {
        let m = IntMatrix::zeros(dom.ngens(), cod.ngens());
        AbMap { dom, cod, matrix: m }
    }

    pub fn domain(&self) -> &Arc<FgAbGroup> {
        &self.dom
    }

    pub fn codomain(&self) -> &Arc<FgAbGroup> {
        &self.cod
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.vec_mul(x)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AbMap) -> Result<AbMap, ExactError> {
        if self.cod.ngens() != other.dom.ngens() || self.cod.relations() != other.dom.relations() {
            return Err(ExactError::NotComposable);
        }
        Ok(AbMap { dom: self.dom.clone(), cod: other.cod.clone(), matrix: self.matrix.mul(&other.matrix) })
    }

    /// Same map with one entry replaced; used by negative controls.
    pub fn with_entry(&self, i: usize, j: usize, v: BigInt) -> Result<AbMap, ExactError> {
        let mut m = self.matrix.clone();
        m.set(i, j, v);
        AbMap::new(self.dom.clone(), self.cod.clone(), m)
    }

    pub fn with_entry_unchecked(&self, i: usize, j: usize, v: BigInt) -> AbMap {
        let mut m = self.matrix.clone();
        m.set(i, j, v);
        AbMap { dom: self.dom.clone(), cod: self.cod.clone(), matrix: m }
    }

    /// Some `x` with `f(x) = y`, or `None` when `y` is not in the image.
    pub fn preimage(&self, y: &[BigInt]) -> Option<Vec<BigInt>> {
        let n = self.dom.ngens();
        let mut s = super::SpanMap::solver(self.cod.ngens(), n);
        for i in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::one();
            s.add(self.matrix.row(i).to_vec(), e).expect("solver accepts every syzygy");
        }
        for r in self.cod.relations().basis() {
            s.add(r.clone(), vec![BigInt::zero(); n]).expect("solver accepts every syzygy");
        }
        s.eval(y)
    }

    /// True when both maps agree on every domain generator.
    pub fn same_as(&self, other: &AbMap) -> bool {
        (0..self.dom.ngens()).all(|i| self.cod.elem_eq(self.matrix.row(i), other.matrix.row(i)))
    }

    /// Preimage of the codomain relations, as a subgroup of the domain.
    pub fn kernel(&self) -> SubgroupOf {
        let n = self.dom.ngens();
        let m = self.cod.ngens();
        let mut e = Echelon::new(m + n);
        for i in 0..n {
            let mut row = self.matrix.row(i).to_vec();
            row.extend((0..n).map(|k| if k == i { BigInt::one() } else { BigInt::zero() }));
            e.insert(row);
        }
        for r in self.cod.relations().basis() {
            let mut row = r.clone();
            row.extend(std::iter::repeat_n(BigInt::zero(), n));
            e.insert(row);
        }
        let (rows, pivots) = e.finish();
        let gens = rows.into_iter().zip(pivots).filter(|(_, p)| *p >= m).map(|(r, _)| r[m..].to_vec());
        SubgroupOf { ambient: self.dom.clone(), lattice: Lattice::new(n, gens) }
    }

    pub fn image(&self) -> SubgroupOf {
        SubgroupOf::generated(self.cod.clone(), self.matrix.to_rows())
    }

    /// Image of a subgroup of the domain.
    pub fn image_of(&self, s: &SubgroupOf) -> SubgroupOf {
        SubgroupOf::generated(self.cod.clone(), s.lattice.basis().iter().map(|b| self.apply(b)))
    }

    /// Cokernel with its projection from the codomain.
    pub fn cokernel(&self) -> (Arc<FgAbGroup>, AbMap) {
        let c = Arc::new(self.image().cokernel());
        let p = AbMap::new(self.cod.clone(), c.clone(), IntMatrix::identity(self.cod.ngens())).expect("projection onto a cokernel is well defined");
        (c, p)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_whole()
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// (f, g): A -> B + C for f: A -> B, g: A -> C.
    pub fn pair(f: &AbMap, g: &AbMap) -> Result<(Arc<FgAbGroup>, AbMap), ExactError> {
        if f.dom.relations() != g.dom.relations() {
            return Err(ExactError::NotComposable);
        }
        let (s, _) = FgAbGroup::direct_sum(&[&f.cod, &g.cod]);
        let s = Arc::new(s);
        let rows = (0..f.dom.ngens())
            .map(|i| f.matrix.row(i).iter().chain(g.matrix.row(i)).cloned().collect())
            .collect();
        let m = AbMap::from_images(f.dom.clone(), s.clone(), rows)?;
        Ok((s, m))
    }
}

/// Generator index of `e_i ⊗ e_j` in `tensor(A, B)` when `B` has `nb` generators.
fn tidx(nb: usize, i: usize, j: usize) -> usize {
    i * nb + j
}

/// Tensor product over Z; generator `i * ngens(B) + j` is `a_i ⊗ b_j`.
pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    let (na, nb) = (a.ngens(), b.ngens());
    let n = na * nb;
    let mut rels = Vec::new();
    for r in a.relations().basis() {
        for j in 0..nb {
            let mut row = vec![BigInt::zero(); n];
            for i in 0..na {
                row[tidx(nb, i, j)] = r[i].clone();
            }
            rels.push(row);
        }
    }
    for s in b.relations().basis() {
        for i in 0..na {
            let mut row = vec![BigInt::zero(); n];
            for j in 0..nb {
                row[tidx(nb, i, j)] = s[j].clone();
            }
            rels.push(row);
        }
    }
    FgAbGroup::new(n, rels)
}

/// Coordinates of `x ⊗ y` in `tensor(A, B)`.
pub fn tensor_elem(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a * b);
        }
    }
    out
}

/// `A ⊗ Z/m`.
pub fn mod_m(a: &FgAbGroup, m: u64) -> FgAbGroup {
    assert!(m >= 2, "modulus must be at least 2");
    tensor(a, &FgAbGroup::cyclic(m))
}

/// Symbol `<x, k, y>` with `k x = 0` and `k y = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorGenerator {
    pub x: Vec<BigInt>,
    pub k: BigInt,
    pub y: Vec<BigInt>,
}

/// `Tor_1(A, B) = + Z/gcd(d_i, e_j)` over torsion factors, with the canonical
/// generators `<(d_i/g) x_i, g, (e_j/g) y_j>`.
pub fn tor(a: &FgAbGroup, b: &FgAbGroup) -> (FgAbGroup, Vec<TorGenerator>) {
    let (da, xa) = (a.divisors(), a.invariant_generators());
    let (db, yb) = (b.divisors(), b.invariant_generators());
    let mut divs = Vec::new();
    let mut gens = Vec::new();
    for (d, x) in da.iter().zip(&xa) {
        if d.is_zero() {
            continue;
        }
        for (e, y) in db.iter().zip(&yb) {
            if e.is_zero() {
                continue;
            }
            let g = d.gcd(e);
            if g.is_one() {
                continue;
            }
            let sx = d / &g;
            let sy = e / &g;
            gens.push(TorGenerator {
                x: x.iter().map(|v| v * &sx).collect(),
                k: g.clone(),
                y: y.iter().map(|v| v * &sy).collect(),
            });
            divs.push(g);
        }
    }
    (FgAbGroup::from_divisors(&divs), gens)
}

/// Generator index of `e_i ∧ e_j` (i < j) among `n(n-1)/2` wedge generators.
pub fn wedge_index(n: usize, i: usize, j: usize) -> usize {
    assert!(i < j && j < n, "wedge index needs i < j < n");
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Coordinates of `e_i ∧ e_j` for arbitrary i, j (sign and diagonal handled).
fn wedge_unit(n: usize, i: usize, j: usize, out: &mut [BigInt], coef: &BigInt) {
    if i < j {
        out[wedge_index(n, i, j)] += coef;
    } else if j < i {
        out[wedge_index(n, j, i)] -= coef;
    }
}

/// `∧²A` on generators `e_i ∧ e_j` (i < j), presented as `∧²F / (R ∧ F)`,
/// together with the projection from `A ⊗ A`.
pub fn exterior_square(a: &Arc<FgAbGroup>) -> (Arc<FgAbGroup>, AbMap) {
    let n = a.ngens();
    let w = n * n.saturating_sub(1) / 2;
    let mut rels = Vec::new();
    for r in a.relations().basis() {
        for j in 0..n {
            let mut row = vec![BigInt::zero(); w];
            for i in 0..n {
                if !r[i].is_zero() {
                    wedge_unit(n, i, j, &mut row, &r[i]);
                }
            }
            rels.push(row);
        }
    }
    let wedge = Arc::new(FgAbGroup::new(w, rels));
    let t = Arc::new(tensor(a, a));
    let one = BigInt::one();
    let images = (0..n * n)
        .map(|k| {
            let mut row = vec![BigInt::zero(); w];
            wedge_unit(n, k / n, k % n, &mut row, &one);
            row
        })
        .collect();
    let proj = AbMap::from_images(t, wedge.clone(), images).expect("projection onto the exterior square is well defined");
    (wedge, proj)
}

/// Coordinates of `x ∧ y` in the exterior square of a group with `n` generators.
pub fn wedge_elem(n: usize, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let w = n * n.saturating_sub(1) / 2;
    let mut out = vec![BigInt::zero(); w];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() || i == j {
                continue;
            }
            let c = &x[i] * &y[j];
            wedge_unit(n, i, j, &mut out, &c);
        }
    }
    out
}

/// `l2(A): A ∧ A -> A ⊗ A`, `x ∧ y ↦ x ⊗ y - y ⊗ x`.
pub fn l2(a: &Arc<FgAbGroup>, wedge: &Arc<FgAbGroup>) -> AbMap {
    let n = a.ngens();
    let t = Arc::new(tensor(a, a));
    let mut images = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut row = vec![BigInt::zero(); n * n];
            row[tidx(n, i, j)] += 1;
            row[tidx(n, j, i)] -= 1;
            images.push(row);
        }
    }
    AbMap::from_images(wedge.clone(), t, images).expect("l2 is well defined")
}
