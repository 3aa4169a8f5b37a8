//! Exact integer linear algebra: Hermite normal forms, solving in row
//! lattices, left kernels and lattice intersections.
//!
//! All lattices are row lattices: the Z-span of the rows of a matrix.
//! The canonical form is the row HNF with positive pivots, zero entries
//! left of each pivot, and entries above each pivot reduced into
//! `[0, pivot)`. Zero rows are dropped from every returned basis.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LinAlgError> {
        if data.len() != rows * cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(IntMat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row vectors. Panics if rows have different lengths
    /// from `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        IntMat { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &IntMat) -> Result<IntMat, LinAlgError> {
        if self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(IntMat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn transpose(&self) -> IntMat {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        IntMat {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Greatest common divisor of all entries (zero for the zero matrix).
    pub fn content(&self) -> BigInt {
        self.data.iter().fold(BigInt::zero(), |g, v| g.gcd(v))
    }

    pub fn scale(&self, k: &BigInt) -> IntMat {
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    pub fn div_exact(&self, k: &BigInt) -> IntMat {
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v / k).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>, LinAlgError> {
        if x.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.rows,
                found: x.len(),
            });
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o += xi * a;
            }
        }
        Ok(out)
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.row_vecs();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                m.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Canonical row HNF of a matrix together with its rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfResult {
    pub h: IntMat,
    pub rank: usize,
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    transform: Option<Vec<Vec<BigInt>>>,
    rank: usize,
}

fn sub_row_multiple(rows: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < src {
        let (a, b) = rows.split_at_mut(src);
        (&mut a[target], &b[0])
    } else {
        let (a, b) = rows.split_at_mut(target);
        (&mut b[0], &a[src])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn echelon(mut rows: Vec<Vec<BigInt>>, cols: usize, track: bool) -> Echelon {
    let m = rows.len();
    let mut transform = track.then(|| IntMat::identity(m).row_vecs());
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let mut found = false;
        loop {
            let best = (r..m)
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].magnitude().cmp(rows[b][c].magnitude()));
            let Some(best) = best else { break };
            rows.swap(r, best);
            if let Some(t) = transform.as_mut() {
                t.swap(r, best);
            }
            let mut clean = true;
            for i in r + 1..m {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                sub_row_multiple(&mut rows, i, r, &q);
                if let Some(t) = transform.as_mut() {
                    sub_row_multiple(t, i, r, &q);
                }
                if !rows[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                found = true;
                break;
            }
        }
        if !found {
            continue;
        }
        if rows[r][c].is_negative() {
            for v in rows[r].iter_mut() {
                *v = -&*v;
            }
            if let Some(t) = transform.as_mut() {
                for v in t[r].iter_mut() {
                    *v = -&*v;
                }
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            sub_row_multiple(&mut rows, i, r, &q);
            if let Some(t) = transform.as_mut() {
                sub_row_multiple(t, i, r, &q);
            }
        }
        r += 1;
    }
    Echelon {
        rows,
        transform,
        rank: r,
    }
}

/// Canonical row Hermite normal form.
pub fn hnf(a: &IntMat) -> HnfResult {
    let e = echelon(a.row_vecs(), a.cols, false);
    let rank = e.rank;
    let rows = e.rows.into_iter().take(rank).collect();
    HnfResult {
        h: IntMat::from_rows(a.cols, rows),
        rank,
    }
}

/// Finds an integer `x` with `x·A = b`, or `None` when `b` is not in the row
/// lattice of `A`.
pub fn solve_in_rowspace(a: &IntMat, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinAlgError> {
    if b.len() != a.cols {
        return Err(LinAlgError::DimensionMismatch {
            expected: a.cols,
            found: b.len(),
        });
    }
    let e = echelon(a.row_vecs(), a.cols, true);
    let Some(y) = solve_echelon(&e.rows[..e.rank], b) else {
        return Ok(None);
    };
    let t = e.transform.expect("transform tracked");
    let mut x = vec![BigInt::zero(); a.rows];
    for (yk, trow) in y.iter().zip(t.iter()) {
        if yk.is_zero() {
            continue;
        }
        for (xi, ti) in x.iter_mut().zip(trow) {
            *xi += yk * ti;
        }
    }
    Ok(Some(x))
}

/// Solves `y·H = b` for `H` in row echelon form with no zero rows.
fn solve_echelon(h: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = b.to_vec();
    let mut y = Vec::with_capacity(h.len());
    let mut col = 0;
    for row in h {
        let piv = row.iter().position(|v| !v.is_zero())?;
        if rest[col..piv].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let (q, r) = rest[piv].div_rem(&row[piv]);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (x, v) in rest.iter_mut().zip(row) {
                if !v.is_zero() {
                    *x -= &q * v;
                }
            }
        }
        y.push(q);
        col = piv + 1;
    }
    rest.iter().all(|v| v.is_zero()).then_some(y)
}

/// HNF basis of the left kernel `{x : x·A = 0}`.
pub fn kernel(a: &IntMat) -> IntMat {
    let e = echelon(a.row_vecs(), a.cols, true);
    let t = e.transform.expect("transform tracked");
    let k = IntMat::from_rows(a.rows, t.into_iter().skip(e.rank).collect());
    hnf(&k).h
}

/// HNF basis of the intersection of the row lattices of `A` and `B`.
pub fn lattice_intersect(a: &IntMat, b: &IntMat) -> Result<IntMat, LinAlgError> {
    let stacked = a.stack(b)?;
    let k = kernel(&stacked);
    let mut rows = Vec::with_capacity(k.rows());
    for i in 0..k.rows() {
        rows.push(a.left_mul_vec(&k.row(i)[..a.rows])?);
    }
    Ok(hnf(&IntMat::from_rows(a.cols, rows)).h)
}

/// Solves `y·H = b` for a square HNF basis `H` of full rank. Faster than
/// `solve_in_rowspace` as no elimination is needed.
pub(crate) fn solve_full_hnf(h: &IntMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = h.rows;
    debug_assert_eq!(n, h.cols);
    let mut rest = b.to_vec();
    let mut y = Vec::with_capacity(n);
    for k in 0..n {
        let row = h.row(k);
        let (q, r) = rest[k].div_rem(&row[k]);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for j in k..n {
                if !row[j].is_zero() {
                    rest[j] -= &q * &row[j];
                }
            }
        }
        y.push(q);
    }
    Some(y)
}
