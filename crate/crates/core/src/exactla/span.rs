use super::normal_form::ext_gcd;
use super::{AbMap, ExactError, FgAbGroup, IntMatrix, LatticeQuotient};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::sync::Arc;

/// A homomorphism out of a lattice, specified on a spanning set.
///
/// Every spanning vector carries its prescribed image in a codomain group.
/// The echelon rows carry the images of the same integer combinations, so a
/// vector that reduces to zero is a syzygy whose image must vanish.
pub struct SpanMap {
    dim: usize,
    cod: Arc<FgAbGroup>,
    piv: Vec<Option<(Vec<BigInt>, Vec<BigInt>)>>,
    syzygies: usize,
    check: bool,
}

fn axpy(acc: &mut [BigInt], q: &BigInt, x: &[BigInt]) {
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += q * b;
        }
    }
}

impl SpanMap {
    pub fn new(dim: usize, cod: Arc<FgAbGroup>) -> Self {
        SpanMap { dim, cod, piv: vec![None; dim], syzygies: 0, check: true }
    }

    /// A solver for integer combinations: payloads are tracked but syzygies
    /// are not required to vanish.
    pub fn solver(dim: usize, ncoef: usize) -> Self {
        SpanMap { dim, cod: Arc::new(FgAbGroup::free(ncoef)), piv: vec![None; dim], syzygies: 0, check: false }
    }

    pub fn codomain(&self) -> &Arc<FgAbGroup> {
        &self.cod
    }

    /// Number of syzygies found so far; each one was checked to map to zero.
    pub fn syzygies(&self) -> usize {
        self.syzygies
    }

    /// Adds a spanning vector with its image; fails when a syzygy does not map to zero.
    pub fn add(&mut self, mut v: Vec<BigInt>, mut img: Vec<BigInt>) -> Result<(), ExactError> {
        if v.len() != self.dim {
            return Err(ExactError::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        if img.len() != self.cod.ngens() {
            return Err(ExactError::DimensionMismatch { expected: self.cod.ngens(), got: img.len() });
        }
        let mut c = 0;
        loop {
            while c < self.dim && v[c].is_zero() {
                c += 1;
            }
            if c == self.dim {
                self.syzygies += 1;
                return if !self.check || self.cod.is_zero(&img) { Ok(()) } else { Err(ExactError::IllDefined { relation: self.syzygies - 1 }) };
            }
            match self.piv[c].take() {
                None => {
                    if v[c].is_negative() {
                        v.iter_mut().for_each(|x| *x = -std::mem::take(x));
                        img.iter_mut().for_each(|x| *x = -std::mem::take(x));
                    }
                    self.piv[c] = Some((v, img));
                    return Ok(());
                }
                Some((p, pi)) => {
                    let (q, r) = v[c].div_rem(&p[c]);
                    if r.is_zero() {
                        let nq = -q;
                        axpy(&mut v, &nq, &p);
                        axpy(&mut img, &nq, &pi);
                        self.piv[c] = Some((p, pi));
                    } else {
                        let (g, s, t) = ext_gcd(&p[c], &v[c]);
                        let a = &p[c] / &g;
                        let b = &v[c] / &g;
                        let comb = |x: &[BigInt], y: &[BigInt], s: &BigInt, t: &BigInt| -> Vec<BigInt> {
                            x.iter().zip(y).map(|(u, w)| s * u + t * w).collect()
                        };
                        let mut np = comb(&p, &v, &s, &t);
                        let mut npi = comb(&pi, &img, &s, &t);
                        let nb = -b;
                        v = comb(&p, &v, &nb, &a);
                        img = comb(&pi, &img, &nb, &a);
                        if np[c].is_negative() {
                            np.iter_mut().for_each(|x| *x = -std::mem::take(x));
                            npi.iter_mut().for_each(|x| *x = -std::mem::take(x));
                        }
                        self.piv[c] = Some((np, npi));
                    }
                    c += 1;
                }
            }
        }
    }

    /// Image of a vector of the spanned lattice, `None` outside it.
    pub fn eval(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut v = v.to_vec();
        let mut out = vec![BigInt::zero(); self.cod.ngens()];
        for c in 0..self.dim {
            if v[c].is_zero() {
                continue;
            }
            let (p, pi) = self.piv[c].as_ref()?;
            let (q, r) = v[c].div_rem(&p[c]);
            if !r.is_zero() {
                return None;
            }
            axpy(&mut out, &q, pi);
            let nq = -q;
            axpy(&mut v, &nq, p);
        }
        Some(out)
    }

    /// The induced map `big / small -> cod` on the generators of `q.group()`;
    /// fails when some basis vector of `small` does not map to zero or a
    /// generator lift is outside the spanned lattice.
    pub fn descend(&self, q: &LatticeQuotient, dom: Arc<FgAbGroup>) -> Result<AbMap, ExactError> {
        for (i, b) in q.small.basis().iter().enumerate() {
            let img = self.eval(b).ok_or(ExactError::NotMember)?;
            if !self.cod.is_zero(&img) {
                return Err(ExactError::IllDefined { relation: i });
            }
        }
        let mut rows = Vec::with_capacity(q.ngens());
        for l in q.lifts() {
            rows.push(self.eval(l).ok_or(ExactError::NotMember)?);
        }
        AbMap::new(dom, self.cod.clone(), IntMatrix::from_rows(self.cod.ngens(), rows))
    }
}
