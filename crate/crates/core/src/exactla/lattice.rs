use super::abgroup::FgAbGroup;
use super::matrix::IntMatrix;
use super::normal_form::{smith, Echelon};
use super::ExactError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sublattice of `Z^dim` stored by its canonical Hermite basis.
///
/// Two lattices are equal iff their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn new<I>(dim: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = Vec<BigInt>>,
    {
        let mut e = Echelon::new(dim);
        for g in gens {
            assert_eq!(g.len(), dim, "generator of wrong dimension");
            e.insert(g);
        }
        let (basis, pivots) = e.finish();
        Lattice { dim, basis, pivots }
    }

    pub fn zero(dim: usize) -> Self {
        Lattice { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        Self::new(dim, (0..dim).map(|i| unit(dim, i)))
    }

    pub fn from_matrix(m: &IntMatrix) -> Self {
        Self::new(m.ncols(), m.to_rows())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.dim, self.basis.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    fn check_dim(&self, other: &Lattice) -> Result<(), ExactError> {
        if self.dim != other.dim {
            return Err(ExactError::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Lattice) -> Result<Lattice, ExactError> {
        self.check_dim(other)?;
        Ok(Lattice::new(self.dim, self.basis.iter().chain(other.basis.iter()).cloned()))
    }

    /// Sum of any number of lattices of the same dimension.
    pub fn sum_all<'a, I: IntoIterator<Item = &'a Lattice>>(dim: usize, ls: I) -> Lattice {
        let mut e = Echelon::new(dim);
        for l in ls {
            assert_eq!(l.dim, dim, "lattice of wrong dimension");
            for b in &l.basis {
                e.insert(b.clone());
            }
        }
        let (basis, pivots) = e.finish();
        Lattice { dim, basis, pivots }
    }

    /// Intersection via the echelon form of [[A, A], [B, 0]].
    pub fn intersect(&self, other: &Lattice) -> Result<Lattice, ExactError> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut e = Echelon::new(2 * n);
        for a in &self.basis {
            let mut row = a.clone();
            row.extend(a.iter().cloned());
            e.insert(row);
        }
        for b in &other.basis {
            let mut row = b.clone();
            row.extend(std::iter::repeat_n(BigInt::zero(), n));
            e.insert(row);
        }
        let (rows, pivots) = e.finish();
        let gens = rows.into_iter().zip(pivots).filter(|(_, p)| *p >= n).map(|(r, _)| r[n..].to_vec());
        Ok(Lattice::new(n, gens))
    }

    /// Coordinates of `v` in the Hermite basis, or `None` when `v` is not a member.
    pub fn coords(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.dim, "vector of wrong dimension");
        let mut w = v.to_vec();
        let mut c = Vec::with_capacity(self.basis.len());
        let mut k = 0;
        for j in 0..self.dim {
            if k < self.pivots.len() && self.pivots[k] == j {
                let b = &self.basis[k];
                let (q, r) = w[j].div_rem(&b[j]);
                if !r.is_zero() {
                    return None;
                }
                if !q.is_zero() {
                    for t in j..self.dim {
                        if !b[t].is_zero() {
                            let d = &q * &b[t];
                            w[t] -= d;
                        }
                    }
                }
                c.push(q);
                k += 1;
            } else if !w[j].is_zero() {
                return None;
            }
        }
        Some(c)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        self.dim == other.dim && other.basis.iter().all(|b| self.contains(b))
    }

    /// Vector of basis coordinates mapped back into the ambient space.
    pub fn combine(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.basis.len(), "coordinate vector of wrong length");
        let mut out = vec![BigInt::zero(); self.dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// Index of `self` in `big` when finite (equal rank), by products of pivots.
    pub fn index_in(&self, big: &Lattice) -> Option<BigInt> {
        if self.rank() != big.rank() || !big.contains_lattice(self) {
            return None;
        }
        let p = |l: &Lattice| l.basis.iter().zip(&l.pivots).fold(BigInt::one(), |acc, (b, &c)| acc * &b[c]);
        Some(p(self) / p(big))
    }
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

/// The abelian group `big / small` of two lattices in a common ambient space,
/// presented in invariant-factor form, with coordinate and lift maps.
#[derive(Clone, Debug)]
pub struct LatticeQuotient {
    pub big: Lattice,
    pub small: Lattice,
    group: FgAbGroup,
    /// big-basis coordinates -> invariant coordinates
    to_inv: IntMatrix,
    lifts: Vec<Vec<BigInt>>,
}

impl LatticeQuotient {
    pub fn new(big: &Lattice, small: &Lattice) -> Result<Self, ExactError> {
        big.check_dim(small)?;
        let k = big.rank();
        let mut rel = Vec::with_capacity(small.rank());
        for (i, b) in small.basis.iter().enumerate() {
            rel.push(big.coords(b).ok_or(ExactError::NotSublattice { row: i })?);
        }
        let rel = IntMatrix::from_rows(k, rel);
        let sd = smith(&rel, false);
        let mut divs = Vec::new();
        let mut keep = Vec::new();
        for j in 0..k {
            let d = if j < sd.s.nrows() { sd.s.get(j, j).clone() } else { BigInt::zero() };
            if !d.is_one() {
                keep.push(j);
                divs.push(d);
            }
        }
        let mut to_inv = IntMatrix::zeros(k, keep.len());
        for i in 0..k {
            for (c, &j) in keep.iter().enumerate() {
                to_inv.set(i, c, sd.v.get(i, j).clone());
            }
        }
        let lifts = keep.iter().map(|&j| big.combine(sd.v_inv.row(j))).collect();
        Ok(LatticeQuotient {
            big: big.clone(),
            small: small.clone(),
            group: FgAbGroup::from_divisors(&divs),
            to_inv,
            lifts,
        })
    }

    /// The quotient as `Z/d_1 + ... + Z/d_t (+ Z^f)`, generator i lifted by `lift(i)`.
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn ngens(&self) -> usize {
        self.lifts.len()
    }

    /// Coset coordinates of a vector of `big`.
    pub fn coords(&self, v: &[BigInt]) -> Result<Vec<BigInt>, ExactError> {
        let c = self.big.coords(v).ok_or(ExactError::NotMember)?;
        let mut out = self.to_inv.vec_mul(&c);
        for (x, d) in out.iter_mut().zip(self.group.divisors().iter()) {
            if d.is_positive() {
                *x = x.mod_floor(d);
            }
        }
        Ok(out)
    }

    pub fn lift(&self, i: usize) -> &[BigInt] {
        &self.lifts[i]
    }

    pub fn lifts(&self) -> &[Vec<BigInt>] {
        &self.lifts
    }
}
