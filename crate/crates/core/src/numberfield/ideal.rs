use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::element::{int_mul, mul_matrix};
use super::{rat_inverse, FieldElem, NfError, NumberField};
use crate::zlinalg::{hnf, lattice_intersect, solve_full_hnf, solve_in_rowspace, IntMat};

/// A fractional ideal `num/den` of `R`: `num` is the canonical square HNF of
/// an integral lattice (in integral-basis coordinates) and `den` a positive
/// integer sharing no common factor with all of `num`.
#[derive(Clone)]
pub struct FracIdeal {
    field: NumberField,
    num: IntMat,
    den: BigInt,
}

impl PartialEq for FracIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.den == other.den && self.num == other.num && self.field == other.field
    }
}

impl Eq for FracIdeal {}

impl std::hash::Hash for FracIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl FracIdeal {
    pub fn unit(field: &NumberField) -> Self {
        FracIdeal {
            field: field.clone(),
            num: IntMat::identity(field.degree()),
            den: BigInt::one(),
        }
    }

    /// Canonicalizes the Z-module spanned by `rows/den`, which must have full
    /// rank.
    fn from_lattice(field: &NumberField, rows: IntMat, den: BigInt) -> Self {
        let h = hnf(&rows);
        debug_assert_eq!(h.rank, field.degree(), "ideal lattice of full rank");
        let mut num = h.h;
        let g = num.content().gcd(&den);
        let den = if g.is_one() {
            den
        } else {
            num = num.div_exact(&g);
            den / g
        };
        FracIdeal {
            field: field.clone(),
            num,
            den,
        }
    }

    /// The `R`-module `Σ gens_i·R`.
    pub fn from_generators(field: &NumberField, gens: &[FieldElem]) -> Result<Self, NfError> {
        for g in gens {
            field.check(g.field())?;
        }
        let nz: Vec<&FieldElem> = gens.iter().filter(|g| !g.is_zero()).collect();
        if nz.is_empty() {
            return Err(NfError::AllZero);
        }
        let den = nz.iter().fold(BigInt::one(), |l, g| l.lcm(g.denom()));
        let d = field.degree();
        let mut rows = Vec::with_capacity(nz.len() * d);
        for g in nz {
            let scale = &den / g.denom();
            let v: Vec<BigInt> = g.numer().iter().map(|c| c * &scale).collect();
            rows.extend(mul_matrix(field, &v));
        }
        Ok(Self::from_lattice(field, IntMat::from_rows(d, rows), den))
    }

    pub fn principal(x: &FieldElem) -> Result<Self, NfError> {
        Self::from_generators(x.field(), std::slice::from_ref(x))
    }

    /// Builds an ideal from printed `(den, rows)` data, validating the
    /// canonical-form and module invariants.
    pub fn from_hnf(field: &NumberField, num: IntMat, den: BigInt) -> Result<Self, NfError> {
        let d = field.degree();
        if num.rows() != d || num.cols() != d {
            return Err(NfError::BadIdeal(format!("expected {d}x{d} rows")));
        }
        if !den.is_positive() {
            return Err(NfError::BadIdeal("denominator must be positive".into()));
        }
        let h = hnf(&num);
        if h.rank != d || h.h != num {
            return Err(NfError::BadIdeal("rows are not a full-rank canonical HNF".into()));
        }
        if !num.content().gcd(&den).is_one() {
            return Err(NfError::BadIdeal("denominator not reduced".into()));
        }
        let ideal = FracIdeal {
            field: field.clone(),
            num,
            den,
        };
        for i in 0..d {
            let row = ideal.num.row(i).to_vec();
            for j in 0..d {
                let mut e = vec![BigInt::zero(); d];
                e[j] = BigInt::one();
                let prod = int_mul(field, &row, &e);
                if solve_full_hnf(&ideal.num, &prod).is_none() {
                    return Err(NfError::BadIdeal("lattice is not an R-module".into()));
                }
            }
        }
        Ok(ideal)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn numerator(&self) -> &IntMat {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Z-basis of the ideal as field elements (HNF rows over `den`).
    pub fn basis(&self) -> Vec<FieldElem> {
        (0..self.num.rows())
            .map(|i| FieldElem::from_parts(&self.field, self.num.row(i).to_vec(), self.den.clone()))
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_unit(&self) -> bool {
        self.den.is_one() && self.num == IntMat::identity(self.field.degree())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, NfError> {
        self.field.check(&other.field)?;
        let den = self.den.lcm(&other.den);
        let a = self.num.scale(&(&den / &self.den));
        let b = other.num.scale(&(&den / &other.den));
        Ok(Self::from_lattice(
            &self.field,
            a.stack(&b).expect("same width"),
            den,
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, NfError> {
        self.field.check(&other.field)?;
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let d = self.field.degree();
        let mut rows = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                rows.push(int_mul(&self.field, self.num.row(i), other.num.row(j)));
            }
        }
        Ok(Self::from_lattice(
            &self.field,
            IntMat::from_rows(d, rows),
            &self.den * &other.den,
        ))
    }

    pub fn checked_intersect(&self, other: &Self) -> Result<Self, NfError> {
        self.field.check(&other.field)?;
        let den = self.den.lcm(&other.den);
        let a = self.num.scale(&(&den / &self.den));
        let b = other.num.scale(&(&den / &other.den));
        let c = lattice_intersect(&a, &b).expect("same width");
        Ok(Self::from_lattice(&self.field, c, den))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("field mismatch")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("field mismatch")
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.checked_intersect(other).expect("field mismatch")
    }

    /// `x·𝔞`.
    pub fn scale(&self, x: &FieldElem) -> Result<Self, NfError> {
        self.field.check(x.field())?;
        if x.is_zero() {
            return Err(NfError::AllZero);
        }
        let d = self.field.degree();
        if x.is_rational() {
            let q = x.to_rational().expect("rational");
            let num_s = q.numer().abs();
            return Ok(Self::from_lattice(
                &self.field,
                self.num.scale(&num_s),
                &self.den * q.denom(),
            ));
        }
        let rows = (0..d)
            .map(|i| int_mul(&self.field, self.num.row(i), x.numer()))
            .collect();
        Ok(Self::from_lattice(
            &self.field,
            IntMat::from_rows(d, rows),
            &self.den * x.denom(),
        ))
    }

    /// The inverse `(R : 𝔞) = {x ∈ K : x𝔞 ⊆ R}`.
    pub fn inverse(&self) -> Self {
        if self.is_unit() {
            return self.clone();
        }
        let d = self.field.degree();
        // x ∈ (R : num) iff x·C is integral, C = [M_{b_1} | … | M_{b_d}].
        // With B a basis of the column lattice of C, this is x ∈ Z^d·(B^T)^{-1}.
        let mut cols_t = Vec::with_capacity(d * d);
        for k in 0..d {
            let m = mul_matrix(&self.field, self.num.row(k));
            for c in 0..d {
                cols_t.push((0..d).map(|r| m[r][c].clone()).collect::<Vec<_>>());
            }
        }
        let b = hnf(&IntMat::from_rows(d, cols_t)).h;
        let bt: Vec<Vec<BigRational>> = (0..d)
            .map(|i| (0..d).map(|j| BigRational::from_integer(b.get(j, i).clone())).collect())
            .collect();
        let inv = rat_inverse(&bt).expect("full rank");
        let den = inv
            .iter()
            .flatten()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let rows: Vec<Vec<BigInt>> = inv
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.numer() * (&den / c.denom()) * &self.den)
                    .collect()
            })
            .collect();
        Self::from_lattice(&self.field, IntMat::from_rows(d, rows), den)
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::unit(&self.field);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    pub fn checked_contains_elem(&self, x: &FieldElem) -> Result<bool, NfError> {
        self.field.check(x.field())?;
        Ok(self.contains_parts(x.numer(), x.denom()))
    }

    /// `x ∈ 𝔞`.
    pub fn contains_elem(&self, x: &FieldElem) -> bool {
        self.checked_contains_elem(x).expect("field mismatch")
    }

    fn contains_parts(&self, v: &[BigInt], vden: &BigInt) -> bool {
        // v/vden ∈ num/den  iff  v·den/vden ∈ lattice(num)
        let mut w = Vec::with_capacity(v.len());
        for c in v {
            let t = c * &self.den;
            let (q, r) = t.div_rem(vden);
            if !r.is_zero() {
                return false;
            }
            w.push(q);
        }
        solve_full_hnf(&self.num, &w).is_some()
    }

    pub fn checked_contains(&self, other: &Self) -> Result<bool, NfError> {
        self.field.check(&other.field)?;
        Ok((0..other.num.rows()).all(|i| self.contains_parts(other.num.row(i), &other.den)))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        self.checked_contains(other).expect("field mismatch")
    }

    /// `|det(num)| / den^d`.
    pub fn norm(&self) -> BigRational {
        let d = self.field.degree();
        let det = (0..d).fold(BigInt::one(), |acc, i| acc * self.num.get(i, i));
        BigRational::new(det, num_traits::pow(self.den.clone(), d))
    }

    /// Smallest positive rational `q` with `q ∈ 𝔞 ∩ Q` scaled to the integers:
    /// the positive generator of `𝔞 ∩ Z` when `𝔞` is integral, and in general
    /// the least positive integer lying in `𝔞`.
    pub fn min_integer(&self) -> BigInt {
        let d = self.field.degree();
        let mut e0 = vec![BigInt::zero(); d];
        e0[0] = BigInt::one();
        let line = IntMat::from_rows(d, vec![e0]);
        let m = lattice_intersect(&self.num, &line).expect("same width");
        let t = m.get(0, 0).clone();
        &t / t.gcd(&self.den)
    }

    /// Size score: total bit length of the HNF entries and denominator.
    pub fn size_bits(&self) -> u64 {
        (0..self.num.rows())
            .flat_map(|i| self.num.row(i).iter())
            .map(|v| v.bits())
            .sum::<u64>()
            + self.den.bits()
    }

    /// Symmetric residue of `α` modulo this ideal: returns `β` with
    /// `α - β ∈ 𝔪`, each coordinate reduced against the HNF pivots.
    pub fn reduce_elem(&self, alpha: &FieldElem) -> FieldElem {
        assert!(self.field == *alpha.field(), "field mismatch");
        let l = alpha.denom().lcm(&self.den);
        let mut w: Vec<BigInt> = alpha
            .numer()
            .iter()
            .map(|c| c * (&l / alpha.denom()))
            .collect();
        let scale = &l / &self.den;
        let d = self.field.degree();
        for k in 0..d {
            let piv = self.num.get(k, k) * &scale;
            let mut r = w[k].mod_floor(&piv);
            if (&r * 2u32) > piv {
                r -= &piv;
            }
            let q = (&w[k] - &r) / &piv;
            if q.is_zero() {
                continue;
            }
            for j in k..d {
                let h = self.num.get(k, j);
                if !h.is_zero() {
                    w[j] -= &q * h * &scale;
                }
            }
        }
        FieldElem::from_parts(&self.field, w, l)
    }

    /// Finds `γ` and `𝔤 = γ^{-1}𝔞` with `γ ∈ 𝔞` and `𝔤` of smaller size when
    /// possible. `γ·𝔤` always equals `self`.
    pub fn small_rep(&self) -> (FieldElem, FracIdeal) {
        let q = self.num.content();
        let gamma_q = FieldElem::from_rational(&self.field, &BigRational::new(q.clone(), self.den.clone()));
        let base = FracIdeal {
            field: self.field.clone(),
            num: self.num.div_exact(&q),
            den: BigInt::one(),
        };
        let best = base
            .basis()
            .into_iter()
            .filter(|b| !b.is_zero())
            .min_by(|a, b| a.size_score().cmp(&b.size_score()))
            .expect("non-empty basis");
        if !best.is_one() {
            let cand = base.scale(&best.inv()).expect("non-zero");
            if cand.size_bits() < base.size_bits() {
                return (&gamma_q * &best, cand);
            }
        }
        (gamma_q, base)
    }
}

/// Writes `c = Σ a_i·c_i` with `a_i ∈ 𝔞_i`, solving on the stacked lattice of
/// all `𝔞_i·c_i`.
pub fn express_in_ideal_sum(
    c: &FieldElem,
    parts: &[(FracIdeal, FieldElem)],
) -> Result<Vec<FieldElem>, NfError> {
    let field = c.field();
    for (a, ci) in parts {
        field.check(a.field())?;
        field.check(ci.field())?;
    }
    let d = field.degree();
    // each generator is num-row·c_i / (den·c_i.den)
    let mut den = c.denom().clone();
    for (a, ci) in parts {
        den = den.lcm(&(a.denominator() * ci.denom()));
    }
    let mut rows = Vec::with_capacity(parts.len() * d);
    for (a, ci) in parts {
        let s = &den / (a.denominator() * ci.denom());
        for k in 0..d {
            let prod = int_mul(field, a.numerator().row(k), ci.numer());
            rows.push(prod.into_iter().map(|v| v * &s).collect::<Vec<_>>());
        }
    }
    let target: Vec<BigInt> = c.numer().iter().map(|v| v * (&den / c.denom())).collect();
    if rows.is_empty() {
        return if c.is_zero() { Ok(vec![]) } else { Err(NfError::NotInSum) };
    }
    let x = solve_in_rowspace(&IntMat::from_rows(d, rows), &target)
        .expect("dimensions agree")
        .ok_or(NfError::NotInSum)?;
    Ok(parts
        .iter()
        .enumerate()
        .map(|(i, (a, _))| {
            let coeffs = &x[i * d..(i + 1) * d];
            let num = a
                .numerator()
                .left_mul_vec(coeffs)
                .expect("dimensions agree");
            FieldElem::from_parts(field, num, a.denominator().clone())
        })
        .collect())
}

impl fmt::Display for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(den={}; rows={})", self.den, self.num)
    }
}

impl fmt::Debug for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
