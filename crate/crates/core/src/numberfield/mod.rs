//! Number fields `K = Q(θ)`, their rings of integers `R` (given by an
//! integral basis), elements of `K`, and fractional ideals of `R`.

mod element;
mod fp;
mod ideal;
mod prime;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use element::FieldElem;
pub use ideal::{express_in_ideal_sum, FracIdeal};
pub use prime::{factor_ideal, prime_decompose, PrimeIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NfError {
    #[error("minimal polynomial must be monic of degree at least 1")]
    BadMinpoly,
    #[error("integral basis: {0}")]
    BadBasis(String),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("all generators are zero")]
    AllZero,
    #[error("element is not in the ideal sum")]
    NotInSum,
    #[error("invalid ideal data: {0}")]
    BadIdeal(String),
    #[error("{0} divides the index [R : Z[θ]]")]
    IndexDivisor(BigInt),
    #[error("{0} is not a prime")]
    NotPrime(BigInt),
    #[error("ideal is not integral")]
    NotIntegral,
    #[error("norm not bound-smooth: cofactor {0} remains")]
    NotSmooth(BigInt),
}

pub(crate) struct FieldData {
    minpoly: Vec<BigInt>,
    degree: usize,
    /// Rows express the integral basis in the power basis.
    basis: Vec<Vec<BigRational>>,
    basis_inv: Vec<Vec<BigRational>>,
    /// `mult_table[i][j]` holds the integral-basis coordinates of `ω_i·ω_j`.
    mult_table: Vec<Vec<Vec<BigInt>>>,
    /// `[R : Z[θ]]`.
    index: BigInt,
}

/// A number field with a fixed integral basis of its ring of integers.
///
/// Cheap to clone; clones share the same structure constants.
#[derive(Clone)]
pub struct NumberField(pub(crate) Arc<FieldData>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.minpoly == other.0.minpoly && self.0.basis == other.0.basis)
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(minpoly={:?})", self.0.minpoly)
    }
}

impl NumberField {
    /// `K = Q[t]/(m)` with `R = Z[θ]`. Coefficients are in ascending order.
    pub fn new(minpoly: Vec<BigInt>) -> Result<Self, NfError> {
        let d = minpoly.len().saturating_sub(1);
        let ident = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::with_basis(minpoly, ident)
    }

    pub fn from_i64(minpoly: &[i64]) -> Result<Self, NfError> {
        Self::new(minpoly.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The rationals, as `Q[t]/(t)`.
    pub fn rationals() -> Self {
        Self::from_i64(&[0, 1]).expect("valid")
    }

    /// `Q(√D)` with `R = Z[√D]`.
    pub fn quadratic(d: i64) -> Self {
        Self::from_i64(&[-d, 0, 1]).expect("valid")
    }

    /// `K = Q[t]/(m)` with a user supplied integral basis. Row `i` of `basis`
    /// gives `ω_i` in the power basis `1, θ, …, θ^{d-1}`; row 0 must be `1`.
    pub fn with_basis(minpoly: Vec<BigInt>, basis: Vec<Vec<BigRational>>) -> Result<Self, NfError> {
        if minpoly.len() < 2 || !minpoly.last().is_some_and(|c| c.is_one()) {
            return Err(NfError::BadMinpoly);
        }
        let d = minpoly.len() - 1;
        if basis.len() != d || basis.iter().any(|r| r.len() != d) {
            return Err(NfError::BadBasis(format!("expected a {d}x{d} matrix")));
        }
        if !basis[0][0].is_one() || basis[0][1..].iter().any(|c| !c.is_zero()) {
            return Err(NfError::BadBasis("first basis element must be 1".into()));
        }
        let basis_inv = rat_inverse(&basis)
            .ok_or_else(|| NfError::BadBasis("matrix is singular".into()))?;

        // power-basis products θ^k for k < 2d-1, reduced modulo m
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(2 * d);
        for k in 0..2 * d - 1 {
            if k < d {
                let mut e = vec![BigInt::zero(); d];
                e[k] = BigInt::one();
                powers.push(e);
            } else {
                let prev = &powers[k - 1];
                let top = prev[d - 1].clone();
                let mut next = vec![BigInt::zero(); d];
                for i in 1..d {
                    next[i] = prev[i - 1].clone();
                }
                for i in 0..d {
                    next[i] -= &top * &minpoly[i];
                }
                powers.push(next);
            }
        }

        let mut mult_table = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let mut pw = vec![BigRational::zero(); d];
                for (k, bik) in basis[i].iter().enumerate() {
                    if bik.is_zero() {
                        continue;
                    }
                    for (l, bjl) in basis[j].iter().enumerate() {
                        if bjl.is_zero() {
                            continue;
                        }
                        let c = bik * bjl;
                        for (t, pv) in powers[k + l].iter().enumerate() {
                            if !pv.is_zero() {
                                pw[t] += &c * BigRational::from_integer(pv.clone());
                            }
                        }
                    }
                }
                let coords = rat_vec_mat(&pw, &basis_inv);
                let mut ints = Vec::with_capacity(d);
                for c in coords {
                    if !c.is_integer() {
                        return Err(NfError::BadBasis(
                            "basis is not closed under multiplication".into(),
                        ));
                    }
                    ints.push(c.to_integer());
                }
                mult_table[i][j] = ints;
            }
        }
        let det = rat_det(&basis);
        let inv_det = det.recip();
        if !inv_det.is_integer() {
            return Err(NfError::BadBasis("basis does not contain Z[θ]".into()));
        }
        let index = num_traits::Signed::abs(&inv_det.to_integer());
        // Z[θ] ⊆ R: θ must have integral coordinates
        if d > 1 {
            let mut theta = vec![BigRational::zero(); d];
            theta[1] = BigRational::one();
            if rat_vec_mat(&theta, &basis_inv).iter().any(|c| !c.is_integer()) {
                return Err(NfError::BadBasis("basis does not contain θ".into()));
            }
        }
        Ok(NumberField(Arc::new(FieldData {
            minpoly,
            degree: d,
            basis,
            basis_inv,
            mult_table,
            index,
        })))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn minpoly(&self) -> &[BigInt] {
        &self.0.minpoly
    }

    pub fn basis_matrix(&self) -> &[Vec<BigRational>] {
        &self.0.basis
    }

    pub fn index(&self) -> &BigInt {
        &self.0.index
    }

    pub fn mult_table(&self) -> &[Vec<Vec<BigInt>>] {
        &self.0.mult_table
    }

    pub(crate) fn basis_inv(&self) -> &[Vec<BigRational>] {
        &self.0.basis_inv
    }

    pub fn is_power_basis(&self) -> bool {
        self.0.index.is_one()
            && self.0.basis.iter().enumerate().all(|(i, r)| {
                r.iter()
                    .enumerate()
                    .all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
            })
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::zero(self)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::one(self)
    }

    pub fn generator(&self) -> FieldElem {
        FieldElem::generator(self)
    }

    /// The ring of integers as a fractional ideal.
    pub fn unit_ideal(&self) -> FracIdeal {
        FracIdeal::unit(self)
    }

    pub(crate) fn check(&self, other: &NumberField) -> Result<(), NfError> {
        if self == other {
            Ok(())
        } else {
            Err(NfError::FieldMismatch)
        }
    }
}

pub(crate) fn rat_vec_mat(v: &[BigRational], m: &[Vec<BigRational>]) -> Vec<BigRational> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = vec![BigRational::zero(); cols];
    for (vi, row) in v.iter().zip(m) {
        if vi.is_zero() {
            continue;
        }
        for (o, mij) in out.iter_mut().zip(row) {
            if !mij.is_zero() {
                *o += vi * mij;
            }
        }
    }
    out
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub(crate) fn rat_inverse(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..2 * n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `x·M = b` for an invertible square rational matrix.
pub(crate) fn rat_solve_left(m: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let inv = rat_inverse(m)?;
    Some(rat_vec_mat(b, &inv))
}

pub(crate) fn rat_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn power_basis_table() {
        let k = NumberField::quadratic(10);
        // a·a = 10
        assert_eq!(k.mult_table()[1][1], vec![BigInt::from(10), BigInt::zero()]);
        assert!(k.is_power_basis());
        assert_eq!(k.index(), &BigInt::one());
    }

    #[test]
    fn rejects_non_monic_and_bad_basis() {
        assert_eq!(
            NumberField::from_i64(&[1, 2]).unwrap_err(),
            NfError::BadMinpoly
        );
        // {1, θ/2} for θ² = 10 is not a ring
        let bad = NumberField::with_basis(
            vec![(-10).into(), 0.into(), 1.into()],
            vec![vec![r(1, 1), r(0, 1)], vec![r(0, 1), r(1, 2)]],
        );
        assert!(matches!(bad, Err(NfError::BadBasis(_))));
    }

    #[test]
    fn maximal_order_of_sqrt5() {
        // Z[(1+√5)/2] ⊃ Z[√5] with index 2
        let k = NumberField::with_basis(
            vec![(-5).into(), 0.into(), 1.into()],
            vec![vec![r(1, 1), r(0, 1)], vec![r(1, 2), r(1, 2)]],
        )
        .unwrap();
        assert_eq!(k.index(), &BigInt::from(2));
        // ω² = ω + 1
        assert_eq!(k.mult_table()[1][1], vec![BigInt::one(), BigInt::one()]);
    }
}
