use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{rat_solve_left, rat_vec_mat, NfError, NumberField};

/// An element of `K`, stored as integer coordinates over the integral basis
/// with a common positive denominator (`gcd(num, den) = 1`).
#[derive(Clone)]
pub struct FieldElem {
    field: NumberField,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den && self.field == other.field
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl FieldElem {
    pub fn zero(field: &NumberField) -> Self {
        FieldElem {
            field: field.clone(),
            num: vec![BigInt::zero(); field.degree()],
            den: BigInt::one(),
        }
    }

    pub fn one(field: &NumberField) -> Self {
        Self::from_int(field, BigInt::one())
    }

    pub fn from_int(field: &NumberField, n: impl Into<BigInt>) -> Self {
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = n.into();
        FieldElem {
            field: field.clone(),
            num,
            den: BigInt::one(),
        }
    }

    pub fn from_rational(field: &NumberField, q: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = q.numer().clone();
        Self::from_parts(field, num, q.denom().clone())
    }

    /// Builds `num/den` from integral-basis coordinates.
    pub fn from_parts(field: &NumberField, num: Vec<BigInt>, den: BigInt) -> Self {
        assert_eq!(num.len(), field.degree(), "coordinate length");
        assert!(!den.is_zero(), "zero denominator");
        let mut e = FieldElem {
            field: field.clone(),
            num,
            den,
        };
        e.normalize();
        e
    }

    pub fn from_coords(field: &NumberField, coords: &[BigRational]) -> Self {
        let den = coords
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let num = coords
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_parts(field, num, den)
    }

    /// Element from coefficients in the power basis `1, θ, θ², …`.
    /// Longer coefficient lists are reduced modulo the minimal polynomial.
    pub fn from_power_basis(field: &NumberField, coeffs: &[BigRational]) -> Self {
        let d = field.degree();
        let m = field.minpoly();
        let mut c: Vec<BigRational> = coeffs.to_vec();
        while c.len() > d {
            let top = c.pop().expect("non-empty");
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - d;
            for (i, mi) in m[..d].iter().enumerate() {
                c[shift + i] -= &top * BigRational::from_integer(mi.clone());
            }
        }
        c.resize(d, BigRational::zero());
        let coords = rat_vec_mat(&c, field.basis_inv());
        Self::from_coords(field, &coords)
    }

    /// The field generator `θ`.
    pub fn generator(field: &NumberField) -> Self {
        let mut c = vec![BigRational::zero(); 2];
        c[1] = BigRational::one();
        Self::from_power_basis(field, &c)
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for v in self.num.iter_mut() {
                *v = -&*v;
            }
        }
        if self.num.iter().all(|v| v.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let g = self.num.iter().fold(self.den.clone(), |g, v| g.gcd(v));
        if !g.is_one() {
            for v in self.num.iter_mut() {
                *v = &*v / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Integer coordinates over the integral basis (scaled by `den`).
    pub fn numer(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn coords(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|v| BigRational::new(v.clone(), self.den.clone()))
            .collect()
    }

    pub fn power_basis_coords(&self) -> Vec<BigRational> {
        rat_vec_mat(&self.coords(), self.field.basis_matrix())
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|v| v.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|v| v.is_zero())
    }

    /// True if the element lies in `Q` (basis element 0 is `1`).
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|v| v.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// True if the element lies in `R`.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, NfError> {
        self.field.check(&other.field)?;
        let num = if self.den == other.den {
            self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| a * &other.den + b * &self.den)
                .collect()
        };
        let den = if self.den == other.den {
            self.den.clone()
        } else {
            &self.den * &other.den
        };
        Ok(Self::from_parts(&self.field, num, den))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, NfError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, NfError> {
        self.field.check(&other.field)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let den = &self.den * &other.den;
        if self.is_rational() {
            let s = &self.num[0];
            return Ok(Self::from_parts(
                &self.field,
                other.num.iter().map(|v| v * s).collect(),
                den,
            ));
        }
        if other.is_rational() {
            let s = &other.num[0];
            return Ok(Self::from_parts(
                &self.field,
                self.num.iter().map(|v| v * s).collect(),
                den,
            ));
        }
        let num = int_mul(&self.field, &self.num, &other.num);
        Ok(Self::from_parts(&self.field, num, den))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, NfError> {
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn checked_inv(&self) -> Result<Self, NfError> {
        if self.is_zero() {
            return Err(NfError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_parts(
                &self.field,
                {
                    let mut n = vec![BigInt::zero(); self.field.degree()];
                    n[0] = self.den.clone();
                    n
                },
                self.num[0].clone(),
            ));
        }
        // y·M = e_0 where row i of M is the coordinate vector of x·ω_i
        let m: Vec<Vec<BigRational>> = mul_matrix(&self.field, &self.num)
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect();
        let mut e0 = vec![BigRational::zero(); self.field.degree()];
        e0[0] = BigRational::one();
        let y = rat_solve_left(&m, &e0).ok_or(NfError::DivisionByZero)?;
        let y = Self::from_coords(&self.field, &y);
        Ok(y.scale_int(&self.den))
    }

    pub fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero")
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        Self::from_parts(
            &self.field,
            self.num.iter().map(|v| v * k).collect(),
            self.den.clone(),
        )
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        Self::from_parts(&self.field, self.num.clone(), &self.den * k)
    }

    /// Field norm `N_{K/Q}`.
    pub fn norm(&self) -> BigRational {
        let m = mul_matrix(&self.field, &self.num);
        let det = crate::zlinalg::IntMat::from_rows(self.field.degree(), m).determinant();
        BigRational::new(det, num_traits::pow(self.den.clone(), self.field.degree()))
    }

    /// Sum of squared integral-basis coordinates of the numerator; a crude
    /// size measure used when picking small representatives.
    pub fn size_score(&self) -> BigInt {
        self.num.iter().map(|v| v * v).sum::<BigInt>() * &self.den * &self.den
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

/// Product of two integral coordinate vectors.
pub(crate) fn int_mul(field: &NumberField, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let d = field.degree();
    let t = field.mult_table();
    let mut out = vec![BigInt::zero(); d];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let c = ai * bj;
            for (o, tk) in out.iter_mut().zip(&t[i][j]) {
                if !tk.is_zero() {
                    *o += &c * tk;
                }
            }
        }
    }
    out
}

/// Rows are the coordinates of `x·ω_i`.
pub(crate) fn mul_matrix(field: &NumberField, x: &[BigInt]) -> Vec<Vec<BigInt>> {
    let d = field.degree();
    (0..d)
        .map(|i| {
            let mut e = vec![BigInt::zero(); d];
            e[i] = BigInt::one();
            int_mul(field, x, &e)
        })
        .collect()
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            num: self.num.iter().map(|v| -v).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).expect("field mismatch")
            }
        }
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                self.$checked(&rhs).expect("field mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

fn write_rational_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        match k {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "a")?;
                } else {
                    write!(f, "a^{k}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Prints the element as an expression in the generator `a` with the
/// denominator factored out, e.g. `(a - 1)/9`.
impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pb = self.power_basis_coords();
        let den = pb.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = pb.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let terms = ints.iter().filter(|c| !c.is_zero()).count();
        if den.is_one() {
            write_rational_poly(f, &ints)
        } else if terms <= 1 {
            write_rational_poly(f, &ints)?;
            write!(f, "/{den}")
        } else {
            write!(f, "(")?;
            write_rational_poly(f, &ints)?;
            write!(f, ")/{den}")
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a10() -> (NumberField, FieldElem) {
        let k = NumberField::quadratic(10);
        let a = k.generator();
        (k, a)
    }

    #[test]
    fn square_of_generator() {
        let (k, a) = a10();
        assert_eq!(&a * &a, FieldElem::from_int(&k, 10));
    }

    #[test]
    fn identity_and_inverse() {
        let (k, a) = a10();
        let x = &FieldElem::from_int(&k, 3) + &a;
        assert_eq!(&x * &k.one(), x);
        let y = (&k.one() + &a).inv();
        // (1+a)^{-1} = (a-1)/9
        let expect = (&a - &k.one()).div_int(&BigInt::from(9));
        assert_eq!(y, expect);
        assert_eq!(&y * &(&k.one() + &a), k.one());
        assert_eq!(format!("{y}"), "(a - 1)/9");
    }

    #[test]
    fn errors() {
        let (k, _) = a10();
        assert_eq!(k.zero().checked_inv().unwrap_err(), NfError::DivisionByZero);
        let other = NumberField::quadratic(-5);
        assert_eq!(
            k.one().checked_mul(&other.one()).unwrap_err(),
            NfError::FieldMismatch
        );
    }

    #[test]
    fn norm_and_display() {
        let (k, a) = a10();
        let x = &FieldElem::from_int(&k, 12) + &(&FieldElem::from_int(&k, 7) * &a);
        assert_eq!(x.norm(), BigRational::from_integer(BigInt::from(144 - 490)));
        assert_eq!(format!("{x}"), "7*a + 12");
        assert_eq!(format!("{}", -&a), "-a");
        assert_eq!(format!("{}", k.zero()), "0");
    }

    #[test]
    fn power_basis_reduction() {
        let (k, a) = a10();
        let c: Vec<BigRational> = [0, 0, 0, 1]
            .iter()
            .map(|&v| BigRational::from_integer(BigInt::from(v)))
            .collect();
        // a^3 = 10a
        assert_eq!(FieldElem::from_power_basis(&k, &c), a.scale_int(&BigInt::from(10)));
        assert_eq!(a.pow(3), a.scale_int(&BigInt::from(10)));
    }
}
