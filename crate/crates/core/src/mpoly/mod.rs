//! Sparse multivariate polynomials over a number field `K`, monomial orders,
//! and a classical Buchberger engine over `K` with cofactor tracking.

mod field_gb;
mod jacobian;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::numberfield::{FieldElem, NumberField};

pub use field_gb::{field_buchberger, field_normal_form, lift_one, FieldGB};
pub use jacobian::{determinant, jacobian_minors};
pub use parse::{parse_elem, parse_poly, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("zero polynomial has no leading data")]
    ZeroPolynomial,
    #[error("exponent vectors of different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("ring mismatch")]
    RingMismatch,
    #[error("minor size {0} out of range")]
    MinorOutOfRange(usize),
    #[error("not the unit ideal")]
    NotUnitIdeal,
    #[error("variable index {0} out of range")]
    BadVariable(usize),
}

/// Exponent vector `α` of a monomial `x^α`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(exps: Vec<u32>) -> Self {
        ExpVec(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    pub fn var(n: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        ExpVec(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `self | other`.
    pub fn divides(&self, other: &ExpVec) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_divides(&self, other: &ExpVec) -> Result<bool, PolyError> {
        self.check_len(other)?;
        Ok(self.divides(other))
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn checked_lcm(&self, other: &ExpVec) -> Result<ExpVec, PolyError> {
        self.check_len(other)?;
        Ok(self.lcm(other))
    }

    /// True if the monomials share no variable.
    pub fn coprime(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other | self`.
    pub fn div(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn check_len(&self, other: &ExpVec) -> Result<(), PolyError> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(PolyError::LengthMismatch(self.len(), other.len()))
        }
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Monomial orders. `Elim(k)` makes every monomial involving one of the
/// first `k` variables larger than every monomial free of them; ties are
/// broken by degrevlex inside each block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Elim(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::Elim(k) => {
                let k = k.min(a.len());
                degrevlex(&a.0[..k], &b.0[..k]).then_with(|| degrevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Elim(k) => write!(f, "elim:{k}"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" => Ok(MonomialOrder::DegRevLex),
            t => t
                .strip_prefix("elim:")
                .and_then(|k| k.parse().ok())
                .map(MonomialOrder::Elim)
                .ok_or_else(|| format!("unknown monomial order {s:?}")),
        }
    }
}

pub(crate) struct RingData {
    field: NumberField,
    names: Vec<String>,
    order: MonomialOrder,
}

/// The polynomial ring `K[x_1, …, x_n]` with a fixed monomial order.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order
                && self.0.names == other.0.names
                && self.0.field == other.0.field)
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyRing({:?}, {})", self.0.names, self.0.order)
    }
}

impl PolyRing {
    pub fn new(field: &NumberField, names: &[&str], order: MonomialOrder) -> Self {
        Self::with_names(field, names.iter().map(|s| s.to_string()).collect(), order)
    }

    pub fn with_names(field: &NumberField, names: Vec<String>, order: MonomialOrder) -> Self {
        PolyRing(Arc::new(RingData {
            field: field.clone(),
            names,
            order,
        }))
    }

    pub fn field(&self) -> &NumberField {
        &self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    /// Same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        Self::with_names(&self.0.field, self.0.names.clone(), order)
    }

    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        self.0.order.cmp(a, b)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(self)
    }

    pub fn one(&self) -> Poly {
        Poly::constant(self, FieldElem::one(self.field()))
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::monomial(self, ExpVec::var(self.nvars(), i, 1), FieldElem::one(self.field()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub exp: ExpVec,
    pub coeff: FieldElem,
}

/// Polynomial with non-zero terms sorted strictly descending under the
/// ring's order.
#[derive(Clone)]
pub struct Poly {
    ring: PolyRing,
    terms: Vec<Term>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &PolyRing) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &PolyRing, c: FieldElem) -> Self {
        Self::monomial(ring, ExpVec::zero(ring.nvars()), c)
    }

    pub fn monomial(ring: &PolyRing, exp: ExpVec, coeff: FieldElem) -> Self {
        assert_eq!(exp.len(), ring.nvars(), "exponent length");
        let terms = if coeff.is_zero() {
            vec![]
        } else {
            vec![Term { exp, coeff }]
        };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Sorts and combines arbitrary terms.
    pub fn from_terms(ring: &PolyRing, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| ring.cmp(&b.exp, &a.exp));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.exp == t.exp => {
                    last.coeff = &last.coeff + &t.coeff;
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !t.coeff.is_zero() {
                        out.push(t)
                    }
                }
            }
        }
        Poly { ring: ring.clone(), terms: out }
    }

    pub(crate) fn from_sorted_terms(ring: &PolyRing, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].exp, &w[1].exp) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn field(&self) -> &NumberField {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for non-zero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].exp.is_zero()
    }

    pub fn lm(&self) -> Option<&ExpVec> {
        self.terms.first().map(|t| &t.exp)
    }

    pub fn lc(&self) -> Option<&FieldElem> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn lt(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// `(LM, LC, LT)` of a non-zero polynomial.
    pub fn leading_data(&self) -> Result<(ExpVec, FieldElem, Term), PolyError> {
        let t = self.terms.first().ok_or(PolyError::ZeroPolynomial)?;
        Ok((t.exp.clone(), t.coeff.clone(), t.clone()))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.exp.degree()).max().unwrap_or(0)
    }

    /// The polynomial without its leading term.
    pub fn tail(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    /// True if no term involves a variable outside `vars`.
    pub fn only_uses(&self, vars: &[usize]) -> bool {
        self.terms.iter().all(|t| {
            t.exp
                .exps()
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || vars.contains(&i))
        })
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check(other)?;
        Ok(self.merge(other, None))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check(other)?;
        let m1 = -FieldElem::one(self.field());
        Ok(self.merge(other, Some((&m1, None))))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check(other)?;
        let mut acc = Poly::zero(&self.ring);
        // multiply the shorter one termwise
        let (a, b) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        for t in &a.terms {
            acc = acc.merge(b, Some((&t.coeff, Some(&t.exp))));
        }
        Ok(acc)
    }

    fn check(&self, other: &Poly) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    /// `self + c·x^shift·other` by merging sorted term lists.
    fn merge(&self, other: &Poly, scale: Option<(&FieldElem, Option<&ExpVec>)>) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let map = |t: &Term| -> Term {
            match scale {
                None => t.clone(),
                Some((c, sh)) => Term {
                    exp: sh.map_or_else(|| t.exp.clone(), |s| t.exp.mul(s)),
                    coeff: c * &t.coeff,
                },
            }
        };
        while i < self.terms.len() && j < other.terms.len() {
            let b = map(&other.terms[j]);
            match self.ring.cmp(&self.terms[i].exp, &b.exp) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(Term { exp: b.exp, coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(map));
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `self - c·x^shift·g`.
    pub fn sub_mul_term(&self, c: &FieldElem, shift: &ExpVec, g: &Poly) -> Poly {
        let neg = -c;
        self.merge(g, Some((&neg, Some(shift))))
    }

    /// `c·x^shift·self`.
    pub fn mul_term(&self, c: &FieldElem, shift: &ExpVec) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: t.exp.mul(shift),
                    coeff: c * &t.coeff,
                })
                .collect(),
        }
    }

    pub fn scalar_mul(&self, c: &FieldElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        if c.is_one() {
            return self.clone();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: t.exp.clone(),
                    coeff: c * &t.coeff,
                })
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.lc() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scalar_mul(&c.inv()),
        }
    }

    pub fn derivative(&self, i: usize) -> Result<Poly, PolyError> {
        if i >= self.ring.nvars() {
            return Err(PolyError::BadVariable(i));
        }
        let terms = self
            .terms
            .iter()
            .filter(|t| t.exp.0[i] > 0)
            .map(|t| {
                let mut e = t.exp.0.clone();
                let k = e[i];
                e[i] -= 1;
                Term {
                    exp: ExpVec(e),
                    coeff: t.coeff.scale_int(&k.into()),
                }
            })
            .collect();
        // lowering one exponent can reorder terms under degree orders
        Ok(Poly::from_terms(&self.ring, terms))
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `var_map[i]`.
    pub fn embed(&self, target: &PolyRing, var_map: &[usize]) -> Poly {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e = vec![0; n];
                for (i, &x) in t.exp.0.iter().enumerate() {
                    e[var_map[i]] += x;
                }
                Term {
                    exp: ExpVec(e),
                    coeff: t.coeff.clone(),
                }
            })
            .collect();
        Poly::from_terms(target, terms)
    }

    /// Re-sorts the terms for another order on the same variables.
    pub fn reorder(&self, target: &PolyRing) -> Poly {
        Poly::from_terms(target, self.terms.clone())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: t.exp.clone(),
                    coeff: -&t.coeff,
                })
                .collect(),
        }
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

fn write_monomial(f: &mut fmt::Formatter<'_>, names: &[String], e: &ExpVec) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.exps().iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{}", names[i])?;
        } else {
            write!(f, "{}^{k}", names[i])?;
        }
    }
    Ok(())
}

/// Terms in descending order; rational coefficients are printed bare with
/// the sign pulled out, other coefficients in parentheses.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            let constant = t.exp.is_zero();
            match t.coeff.to_rational() {
                Some(q) => {
                    let neg = q < num_rational::BigRational::from_integer(0.into());
                    let mag = if neg { -q } else { q };
                    if idx == 0 {
                        if neg {
                            write!(f, "-")?;
                        }
                    } else if neg {
                        write!(f, " - ")?;
                    } else {
                        write!(f, " + ")?;
                    }
                    let unit = mag == num_rational::BigRational::from_integer(1.into());
                    if constant {
                        write!(f, "{mag}")?;
                    } else {
                        if !unit {
                            write!(f, "{mag}*")?;
                        }
                        write_monomial(f, self.ring.names(), &t.exp)?;
                    }
                }
                None => {
                    if idx > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "({})", t.coeff)?;
                    if !constant {
                        write!(f, "*")?;
                        write_monomial(f, self.ring.names(), &t.exp)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(order: MonomialOrder) -> PolyRing {
        PolyRing::new(&NumberField::rationals(), &["x", "y", "z"], order)
    }

    fn p(r: &PolyRing, s: &str) -> Poly {
        parse_poly(r, s).unwrap()
    }

    #[test]
    fn arithmetic() {
        let r = ring(MonomialOrder::Lex);
        let f = p(&r, "x + 2*y - 3");
        assert!((&f + &(-&f)).is_zero());
        assert_eq!(&p(&r, "x+y") * &p(&r, "x-y"), p(&r, "x^2 - y^2"));
        assert_eq!(&r.one() * &f, f);
        let other = PolyRing::new(&NumberField::rationals(), &["u"], MonomialOrder::Lex);
        assert_eq!(f.checked_add(&other.one()).unwrap_err(), PolyError::RingMismatch);
    }

    #[test]
    fn leading_data() {
        let r = ring(MonomialOrder::Lex);
        let (lm, lc, _) = p(&r, "x + y").leading_data().unwrap();
        assert_eq!(lm, ExpVec::var(3, 0, 1));
        assert!(lc.is_one());
        let (_, _, lt) = p(&r, "3*x^2*y").leading_data().unwrap();
        assert_eq!(Poly::from_terms(&r, vec![lt]), p(&r, "3*x^2*y"));
        let g = ring(MonomialOrder::DegRevLex);
        let (lm, _, _) = p(&g, "x*y^2 + x^2*y").leading_data().unwrap();
        assert_eq!(lm, ExpVec::new(vec![2, 1, 0]));
        assert_eq!(r.zero().leading_data().unwrap_err(), PolyError::ZeroPolynomial);
    }

    #[test]
    fn monomial_ops() {
        let x = ExpVec::new(vec![1, 0]);
        let x2y = ExpVec::new(vec![2, 1]);
        let xy2 = ExpVec::new(vec![1, 2]);
        assert!(x.divides(&x2y));
        assert_eq!(x2y.lcm(&xy2), ExpVec::new(vec![2, 2]));
        assert_eq!(x2y.lcm(&ExpVec::zero(2)), x2y);
        assert_eq!(
            x.checked_lcm(&ExpVec::zero(3)).unwrap_err(),
            PolyError::LengthMismatch(2, 3)
        );
    }

    #[test]
    fn elimination_order() {
        let o = MonomialOrder::Elim(1);
        // anything with x beats anything without
        assert_eq!(
            o.cmp(&ExpVec::new(vec![1, 0, 0]), &ExpVec::new(vec![0, 5, 5])),
            Ordering::Greater
        );
        assert_eq!(
            o.cmp(&ExpVec::new(vec![0, 2, 0]), &ExpVec::new(vec![0, 1, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn derivatives() {
        let r = ring(MonomialOrder::DegRevLex);
        assert_eq!(p(&r, "x^2").derivative(0).unwrap(), p(&r, "2*x"));
        assert_eq!(p(&r, "x^2*y + y^3").derivative(1).unwrap(), p(&r, "x^2 + 3*y^2"));
        assert!(p(&r, "x").derivative(7).is_err());
    }

    #[test]
    fn display_round_trip() {
        let k = NumberField::quadratic(10);
        let r = PolyRing::new(&k, &["x", "y"], MonomialOrder::DegRevLex);
        let f = p(&r, "y^2 - x^3 + (1728*a+3348)*x + (44928*a-324432)");
        let s = f.to_string();
        assert_eq!(s, "-x^3 + y^2 + (1728*a + 3348)*x + (44928*a - 324432)");
        assert_eq!(p(&r, &s), f);
        let g = p(&r, "x/2 - (a+1)/3*y + 1/5");
        assert_eq!(p(&r, &g.to_string()), g);
    }

    fn exp3() -> impl Strategy<Value = ExpVec> {
        prop::collection::vec(0u32..4, 3).prop_map(ExpVec::new)
    }

    proptest! {
        #[test]
        fn order_axioms(a in exp3(), b in exp3(), c in exp3()) {
            for o in [MonomialOrder::Lex, MonomialOrder::DegRevLex, MonomialOrder::Elim(1), MonomialOrder::Elim(2)] {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_ne!(o.cmp(&a, &ExpVec::zero(3)), Ordering::Less);
                if ab != Ordering::Less && o.cmp(&b, &c) != Ordering::Less {
                    prop_assert_ne!(o.cmp(&a, &c), Ordering::Less);
                }
            }
        }
    }
}
