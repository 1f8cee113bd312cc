use super::{left_minus_one, GroupRing};
use crate::exactla::Lattice;
use crate::groups::GroupSeries;

/// The filtration `F^0 ⊇ F^1 ⊇ ... ⊇ F^{n_max}` of `Z(G)` induced by an N-series.
///
/// `F^n` is spanned by the products `(a_1 - 1)...(a_r - 1)` with `a_i ∈ S_{k_i}`
/// and `k_1 + ... + k_r ≥ n`. Splitting off the first factor gives the
/// recursion `F^n = Σ_{k=1..n} (S_k - 1) F^{n-k}` with `F^0 = Z(G)`; the
/// terms with `k > n` are covered by `k = n` because `F^0` contains 1.
#[derive(Clone, Debug)]
pub struct Filtration {
    ring: GroupRing,
    series: GroupSeries,
    terms: Vec<Lattice>,
}

impl Filtration {
    pub fn new(ring: &GroupRing, series: &GroupSeries, n_max: usize) -> Self {
        let g = ring.group().clone();
        let dim = ring.dim();
        let mut terms = vec![ring.full()];
        for n in 1..=n_max {
            let mut gens = Vec::new();
            for k in 1..=n {
                for &a in series.term(k).elements() {
                    if a == 0 {
                        continue;
                    }
                    for v in terms[n - k].basis() {
                        gens.push(left_minus_one(&g, a, v));
                    }
                }
            }
            terms.push(Lattice::new(dim, gens));
        }
        Filtration { ring: ring.clone(), series: series.clone(), terms }
    }

    pub fn ring(&self) -> &GroupRing {
        &self.ring
    }

    pub fn series(&self) -> &GroupSeries {
        &self.series
    }

    pub fn n_max(&self) -> usize {
        self.terms.len() - 1
    }

    /// `F^n`; panics beyond `n_max`.
    pub fn term(&self, n: usize) -> &Lattice {
        assert!(n < self.terms.len(), "filtration degree {n} exceeds the configured maximum {}", self.n_max());
        &self.terms[n]
    }

    /// `F^{n-1} · J`.
    pub fn fox_module(&self, n: usize, j: &Lattice) -> Lattice {
        assert!(n >= 1, "Fox modules start at n = 1");
        self.ring.product(self.term(n - 1), j)
    }
}
