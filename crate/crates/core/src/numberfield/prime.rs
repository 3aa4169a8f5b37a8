use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::{fp, FieldElem, FracIdeal, NfError, NumberField};

/// A prime ideal `⟨p, g(θ)⟩` above the rational prime `p`.
#[derive(Clone, PartialEq, Eq)]
pub struct PrimeIdeal {
    pub p: BigInt,
    pub ideal: FracIdeal,
    /// Ramification index.
    pub e: u32,
    /// Residue degree.
    pub f: u32,
    /// Second generator `g(θ)`; the ideal is `⟨p, generator⟩`.
    pub generator: FieldElem,
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f as usize == self.ideal.field().degree() {
            write!(f, "<{}>", self.p)
        } else {
            write!(f, "<{}, {}>", self.p, self.generator)
        }
    }
}

impl fmt::Debug for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (e={}, f={})", self.e, self.f)
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Decomposes `pR` by factoring the minimal polynomial modulo `p`.
pub fn prime_decompose(p: &BigInt, field: &NumberField) -> Result<Vec<PrimeIdeal>, NfError> {
    let pu = p
        .to_u64()
        .filter(|&v| v < (1 << 31) && is_prime_u64(v))
        .ok_or_else(|| NfError::NotPrime(p.clone()))?;
    if field.index().is_multiple_of(p) {
        return Err(NfError::IndexDivisor(p.clone()));
    }
    let m: Vec<u64> = field
        .minpoly()
        .iter()
        .map(|c| c.mod_floor(p).to_u64().expect("reduced"))
        .collect();
    let d = field.degree();
    let mut out = Vec::new();
    for (g, e) in fp::factor(&m, pu) {
        let coeffs: Vec<BigRational> = g
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let f = (g.len() - 1) as u32;
        let gen = FieldElem::from_power_basis(field, &coeffs);
        let ideal = if f as usize == d {
            FracIdeal::principal(&FieldElem::from_int(field, p.clone()))?
        } else {
            FracIdeal::from_generators(field, &[FieldElem::from_int(field, p.clone()), gen.clone()])?
        };
        out.push(PrimeIdeal {
            p: p.clone(),
            ideal,
            e,
            f,
            generator: gen,
        });
    }
    Ok(out)
}

/// Factors an integral ideal whose norm is smooth over primes up to `bound`
/// (a single leftover prime factor up to `bound²` is accepted).
pub fn factor_ideal(a: &FracIdeal, bound: u64) -> Result<Vec<(PrimeIdeal, u32)>, NfError> {
    if !a.is_integral() {
        return Err(NfError::NotIntegral);
    }
    let norm = a.norm();
    debug_assert!(norm.is_integer());
    let mut n = norm.to_integer();
    let mut primes = Vec::new();
    let mut q = 2u64;
    while q <= bound && !n.is_one() {
        let qb = BigInt::from(q);
        if n.is_multiple_of(&qb) {
            primes.push(qb.clone());
            while n.is_multiple_of(&qb) {
                n /= &qb;
            }
        }
        q += 1;
    }
    if !n.is_one() {
        let b2 = BigInt::from(bound) * BigInt::from(bound);
        if n > b2 {
            return Err(NfError::NotSmooth(n));
        }
        primes.push(n.abs());
    }
    let field = a.field();
    let mut out = Vec::new();
    for p in primes {
        for pr in prime_decompose(&p, field)? {
            let inv = pr.ideal.inverse();
            let mut rest = a.clone();
            let mut k = 0u32;
            while pr.ideal.contains(&rest) {
                rest = rest.mul(&inv);
                k += 1;
            }
            if k > 0 {
                out.push((pr, k));
            }
        }
    }
    Ok(out)
}
