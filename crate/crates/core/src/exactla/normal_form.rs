use super::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Returns (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Row-style Hermite normal form: returns (H, U) with U unimodular and U*M = H.
///
/// H is in row echelon form, pivots are positive and every entry above a pivot
/// lies in [0, pivot). Zero rows sit at the bottom.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h.get(i, c).is_zero() {
                continue;
            }
            if h.get(r, c).is_zero() {
                h.swap_rows(r, i);
                u.swap_rows(r, i);
                continue;
            }
            let a = h.get(r, c).clone();
            let b = h.get(i, c).clone();
            let (g, s, t) = ext_gcd(&a, &b);
            let ag = &a / &g;
            let bg = &b / &g;
            let nb = -bg;
            h.combine_rows(r, i, &s, &t, &nb, &ag);
            u.combine_rows(r, i, &s, &t, &nb, &ag);
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let p = h.get(r, c).clone();
        for i in 0..r {
            let q = h.get(i, c).div_floor(&p);
            if !q.is_zero() {
                let nq = -q;
                h.add_row_multiple(i, r, &nq);
                u.add_row_multiple(i, r, &nq);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form state with both column transform and its inverse.
pub(crate) struct SmithData {
    pub s: IntMatrix,
    pub u: Option<IntMatrix>,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

/// Smith normal form: returns (S, U, V) with U*M*V = S, S diagonal,
/// nonnegative, each diagonal entry dividing the next.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let d = smith(m, true);
    (d.s, d.u.expect("row transform tracked"), d.v)
}

pub(crate) fn smith(m: &IntMatrix, track_u: bool) -> SmithData {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut s = m.clone();
    let mut u = if track_u { Some(IntMatrix::identity(rows)) } else { None };
    let mut v = IntMatrix::identity(cols);
    let mut vi = IntMatrix::identity(cols);
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = s.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if s.get(bi, bj).magnitude() <= x.magnitude() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(s, u, v, vi);
            };
            if pi != t {
                s.swap_rows(pi, t);
                if let Some(u) = u.as_mut() {
                    u.swap_rows(pi, t);
                }
            }
            if pj != t {
                s.swap_cols(pj, t);
                v.swap_cols(pj, t);
                vi.swap_rows(pj, t);
            }
            let p = s.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = s.get(i, t) / &p;
                if !q.is_zero() {
                    let nq = -&q;
                    s.add_row_multiple(i, t, &nq);
                    if let Some(u) = u.as_mut() {
                        u.add_row_multiple(i, t, &nq);
                    }
                }
                if !s.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = s.get(t, j) / &p;
                if !q.is_zero() {
                    let nq = -&q;
                    s.add_col_multiple(j, t, &nq);
                    v.add_col_multiple(j, t, &nq);
                    vi.add_row_multiple(t, j, &q);
                }
                if !s.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(s.get(i, j) % &p).is_zero()));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    if let Some(u) = u.as_mut() {
                        u.add_row_multiple(t, i, &one);
                    }
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
    }
    finish(s, u, v, vi)
}

fn finish(mut s: IntMatrix, mut u: Option<IntMatrix>, v: IntMatrix, vi: IntMatrix) -> SmithData {
    let n = s.nrows().min(s.ncols());
    for t in 0..n {
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
    }
    SmithData { s, u, v, v_inv: vi }
}

/// Incremental echelon basis of a lattice, keyed by pivot column.
pub(crate) struct Echelon {
    dim: usize,
    piv: Vec<Option<Vec<BigInt>>>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, piv: vec![None; dim] }
    }

    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        debug_assert_eq!(v.len(), self.dim);
        let mut c = 0;
        loop {
            while c < self.dim && v[c].is_zero() {
                c += 1;
            }
            if c == self.dim {
                return;
            }
            match self.piv[c].take() {
                None => {
                    if v[c].is_negative() {
                        for x in v.iter_mut() {
                            *x = -std::mem::take(x);
                        }
                    }
                    self.piv[c] = Some(v);
                    return;
                }
                Some(p) => {
                    let (q, r) = v[c].div_rem(&p[c]);
                    if r.is_zero() {
                        for j in c..self.dim {
                            if !p[j].is_zero() {
                                let d = &q * &p[j];
                                v[j] -= d;
                            }
                        }
                        self.piv[c] = Some(p);
                    } else {
                        let (g, s, t) = ext_gcd(&p[c], &v[c]);
                        let a = &p[c] / &g;
                        let b = &v[c] / &g;
                        let mut np = vec![BigInt::zero(); self.dim];
                        let mut nv = vec![BigInt::zero(); self.dim];
                        for j in c..self.dim {
                            np[j] = &s * &p[j] + &t * &v[j];
                            nv[j] = &a * &v[j] - &b * &p[j];
                        }
                        if np[c].is_negative() {
                            for x in np.iter_mut() {
                                *x = -std::mem::take(x);
                            }
                        }
                        self.piv[c] = Some(np);
                        v = nv;
                    }
                    c += 1;
                }
            }
        }
    }

    /// Reduced basis rows (Hermite normal form) with their pivot columns.
    pub fn finish(self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut pivots = Vec::new();
        for (c, p) in self.piv.into_iter().enumerate() {
            if let Some(p) = p {
                rows.push(p);
                pivots.push(c);
            }
        }
        for k in 0..rows.len() {
            let c = pivots[k];
            let (before, rest) = rows.split_at_mut(k);
            let pr = &rest[0];
            for row in before.iter_mut() {
                let q = row[c].div_floor(&pr[c]);
                if !q.is_zero() {
                    for j in c..pr.len() {
                        if !pr[j].is_zero() {
                            let d = &q * &pr[j];
                            row[j] -= d;
                        }
                    }
                }
            }
        }
        (rows, pivots)
    }
}
