use super::{Filtration, GroupRing, Side};
use crate::exactla::{Lattice, LatticeQuotient};
use crate::groups::{AbQuot, FiniteGroup, GroupError, GroupSeries, Subgroup};
use std::sync::Arc;

/// A triple `(G, 𝒢, H)` with the group ring data shared by the Fox
/// quotient computations: the filtration of `Z(G)` up to `n_max`, `I(H)`,
/// and the lower central series of `H`.
#[derive(Clone, Debug)]
pub struct FoxSetting {
    pub g: Arc<FiniteGroup>,
    pub series: GroupSeries,
    pub h: Subgroup,
    pub ring: GroupRing,
    pub filt: Filtration,
    pub ih: Lattice,
    pub hlcs: GroupSeries,
}

impl FoxSetting {
    pub fn new(g: Arc<FiniteGroup>, series: GroupSeries, h: Subgroup, n_max: usize) -> Result<Self, GroupError> {
        if series.top() != &g.whole() {
            return Err(GroupError::InvalidSeries("the first term must be the whole group".into()));
        }
        if !h.is_subset_of(&g.whole()) {
            return Err(GroupError::NotSubgroup);
        }
        let ring = GroupRing::new(g.clone());
        let filt = Filtration::new(&ring, &series, n_max);
        let ih = ring.aug_ideal(&h);
        let hlcs = g.lower_central_series_of(&h);
        Ok(FoxSetting { g, series, h, ring, filt, ih, hlcs })
    }

    pub fn dim(&self) -> usize {
        self.ring.dim()
    }

    /// `F^n`.
    pub fn f(&self, n: usize) -> &Lattice {
        self.filt.term(n)
    }

    /// `F^n I(H)`.
    pub fn f_ih(&self, n: usize) -> Lattice {
        self.ring.product(self.f(n), &self.ih)
    }

    /// `I^n(H)` as a product of `n` copies of `I(H)`.
    pub fn ih_power(&self, n: usize) -> Lattice {
        assert!(n >= 1, "powers of I(H) start at 1");
        let mut acc = self.ih.clone();
        for _ in 1..n {
            acc = self.ring.product(&acc, &self.ih);
        }
        acc
    }

    /// `I(S)` for a subgroup `S`.
    pub fn aug(&self, s: &Subgroup) -> Lattice {
        self.ring.aug_ideal(s)
    }

    pub fn ig(&self) -> Lattice {
        self.ring.augmentation()
    }

    pub fn prod(&self, a: &Lattice, b: &Lattice) -> Lattice {
        self.ring.product(a, b)
    }

    pub fn sum(&self, ls: &[&Lattice]) -> Lattice {
        Lattice::sum_all(self.dim(), ls.iter().copied())
    }

    pub fn quot(&self, big: &Lattice, small: &Lattice) -> LatticeQuotient {
        self.ring.quotient(big, small)
    }

    /// `Z(G) I(N)`.
    pub fn left_ideal(&self, n: &Subgroup) -> Lattice {
        self.ring.sided_ideal(Side::Left, n)
    }

    /// `G_(k)`.
    pub fn gk(&self, k: usize) -> &Subgroup {
        self.series.term(k)
    }

    /// `H_k` of the lower central series of `H`.
    pub fn hk(&self, k: usize) -> &Subgroup {
        self.hlcs.term(k)
    }

    /// `H^ab = H / H_2`.
    pub fn hab(&self) -> AbQuot {
        self.g.abelian_section(&self.h, self.hk(2), None).expect("H/[H,H] is abelian")
    }

    /// `G / G_(2)`.
    pub fn gab(&self) -> AbQuot {
        self.g.abelian_section(&self.g.whole(), self.gk(2), None).expect("G/G_(2) is abelian for an N-series")
    }
}
