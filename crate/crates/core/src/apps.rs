//! Applications of pseudo-Gröbner bases: ideal membership, elimination,
//! intersections, contraction to `R`, and primes of bad reduction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

use crate::mpoly::{jacobian_minors, lift_one, ExpVec, MonomialOrder, Poly, PolyError, PolyRing, Term};
use crate::numberfield::{factor_ideal, FieldElem, FracIdeal, NfError, PrimeIdeal};
use crate::pseudo::{buchberger, reduce_full, BuchbergerOptions, PseudoBasis, PseudoError, PseudoPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AppError {
    #[error("zero intersection with R: generic fiber singular or flatness violated")]
    ZeroIntersection,
    #[error("monomial order {0} does not eliminate the requested variables")]
    WrongOrder(MonomialOrder),
    #[error("dimension {dim} out of range for {nvars} variables")]
    BadDimension { dim: usize, nvars: usize },
    #[error(transparent)]
    Pseudo(#[from] PseudoError),
    #[error(transparent)]
    Field(#[from] NfError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A non-zero `⟨d⟩ ⊆ ⟨F⟩ ∩ R` with `d` a positive integer, found from a
/// representation `1 = Σ a_i f_i` over `K[x]`. `None` when `⟨F⟩_{K[x]}` is
/// proper, in which case `⟨F⟩ ∩ R = 0`.
pub fn find_conductor_ideal(f: &PseudoBasis) -> Option<FracIdeal> {
    if f.is_empty() {
        return None;
    }
    let polys: Vec<Poly> = f.iter().map(|p| p.poly().clone()).collect();
    let a = lift_one(&polys).ok()?;
    // d·c ∈ 𝔣_i for every coefficient c of a_i
    let mut d = BigInt::one();
    for (ai, p) in a.iter().zip(f.iter()) {
        for t in ai.terms() {
            let m = p.ideal().scale(&t.coeff.inv()).expect("non-zero").min_integer();
            d = d.lcm(&m);
        }
    }
    let field = f.ring().field();
    Some(FracIdeal::principal(&FieldElem::from_int(field, d)).expect("non-zero"))
}

/// Default options with the conductor filled in when one exists.
pub fn auto_options(f: &PseudoBasis) -> BuchbergerOptions {
    BuchbergerOptions {
        conductor: find_conductor_ideal(f),
        ..Default::default()
    }
}

/// A pseudo-Gröbner basis of `⟨F⟩`, kept for repeated membership queries.
#[derive(Debug, Clone)]
pub struct IdealContext {
    gb: PseudoBasis,
}

impl IdealContext {
    pub fn new(f: &PseudoBasis, opts: &BuchbergerOptions) -> Self {
        IdealContext { gb: buchberger(f, opts) }
    }

    pub fn with_auto_options(f: &PseudoBasis) -> Self {
        Self::new(f, &auto_options(f))
    }

    pub fn basis(&self) -> &PseudoBasis {
        &self.gb
    }

    /// `𝔣[x]·f ⊆ I`.
    pub fn contains(&self, p: &PseudoPoly) -> bool {
        p.is_zero() || reduce_full(p, &self.gb).is_zero()
    }

    /// `f ∈ I`; polynomials outside `R[x]` are never members.
    pub fn contains_poly(&self, f: &Poly) -> bool {
        match PseudoPoly::from_poly(f.clone()) {
            Ok(p) => self.contains(&p),
            Err(_) => false,
        }
    }
}

pub fn ideal_membership(p: &PseudoPoly, f: &PseudoBasis) -> bool {
    IdealContext::with_auto_options(f).contains(p)
}

fn eliminates(order: MonomialOrder, drop: &[usize]) -> bool {
    match order {
        MonomialOrder::Elim(k) => drop.iter().all(|&i| i < k),
        MonomialOrder::Lex => drop.iter().enumerate().all(|(n, &i)| i == n),
        MonomialOrder::DegRevLex => false,
    }
}

/// Elements of `G` involving only the variables in `keep`. `G` must be a
/// pseudo-Gröbner basis under an order eliminating the other variables.
pub fn eliminate(g: &PseudoBasis, keep: &[usize]) -> Result<PseudoBasis, AppError> {
    let ring = g.ring();
    let drop: Vec<usize> = (0..ring.nvars()).filter(|i| !keep.contains(i)).collect();
    if !drop.is_empty() && !eliminates(ring.order(), &drop) {
        return Err(AppError::WrongOrder(ring.order()));
    }
    let elems = g.iter().filter(|p| p.poly().only_uses(keep)).cloned().collect();
    Ok(PseudoBasis::from_elems(ring, elems)?)
}

fn fresh_name(names: &[String]) -> String {
    let mut w = String::from("w");
    while names.contains(&w) || w == "a" {
        w.push('_');
    }
    w
}

/// `I ∩ J = ⟨wI, (1 - w)J⟩ ∩ R[x]` with `w` eliminated by a block order.
pub fn ideal_intersection(f1: &PseudoBasis, f2: &PseudoBasis) -> Result<PseudoBasis, AppError> {
    let ring = f1.ring();
    if f2.ring() != ring {
        return Err(PolyError::RingMismatch.into());
    }
    let n = ring.nvars();
    let mut names = vec![fresh_name(ring.names())];
    names.extend(ring.names().iter().cloned());
    let big = PolyRing::with_names(ring.field(), names, MonomialOrder::Elim(1));
    let shift: Vec<usize> = (1..=n).collect();
    let w = big.var(0);
    let one_minus_w = &big.one() - &w;
    let mut gens = PseudoBasis::new(&big);
    for (src, m) in [(f1, &w), (f2, &one_minus_w)] {
        for p in src.iter() {
            let f = &p.poly().embed(&big, &shift) * m;
            gens.push(PseudoPoly::new(f, p.ideal().clone())?)?;
        }
    }
    let gb = buchberger(&gens, &auto_options(&gens));
    let kept = eliminate(&gb, &shift)?;
    let mut out = PseudoBasis::new(ring);
    for p in kept.iter() {
        let terms = p
            .poly()
            .terms()
            .iter()
            .map(|t| Term {
                exp: ExpVec::new(t.exp.exps()[1..].to_vec()),
                coeff: t.coeff.clone(),
            })
            .collect();
        out.push(PseudoPoly::new(Poly::from_terms(ring, terms), p.ideal().clone())?)?;
    }
    Ok(out)
}

/// `I ∩ R` as `Σ 𝔤_i g_i` over the constant elements of a pseudo-Gröbner
/// basis; `None` for the zero ideal.
pub fn intersect_with_r(f: &PseudoBasis) -> Option<FracIdeal> {
    let gb = buchberger(f, &auto_options(f));
    constant_part(&gb)
}

/// The ideal generated by the constant elements of a basis.
pub fn constant_part(gb: &PseudoBasis) -> Option<FracIdeal> {
    gb.iter()
        .filter(|p| p.poly().is_constant())
        .map(|p| p.ideal().scale(p.poly().lc().expect("non-zero")).expect("non-zero"))
        .reduce(|a, b| a.add(&b))
}

/// `X = V(f_1, …, f_l)`, assumed flat over `R` and pure of relative
/// dimension `dim`.
#[derive(Debug, Clone)]
pub struct AffineScheme {
    pub generators: PseudoBasis,
    pub dim: usize,
}

impl AffineScheme {
    pub fn new(generators: PseudoBasis, dim: usize) -> Result<Self, AppError> {
        let nvars = generators.ring().nvars();
        if dim >= nvars {
            return Err(AppError::BadDimension { dim, nvars });
        }
        Ok(AffineScheme { generators, dim })
    }
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(s: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in s..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    go(0, n, r, &mut cur, &mut out);
    out
}

/// The generators of `X` together with the non-zero `(n-k)`-minors of the
/// Jacobian. A minor built from rows `S` carries the ideal `Π_{i∈S} 𝔣_i`.
pub fn singular_ideal(x: &AffineScheme) -> Result<PseudoBasis, AppError> {
    let g = &x.generators;
    let ring = g.ring();
    let r = ring.nvars() - x.dim;
    let mut out = g.clone();
    if r == 0 || r > g.len() {
        return Ok(out);
    }
    let polys: Vec<Poly> = g.iter().map(|p| p.poly().clone()).collect();
    let minors = jacobian_minors(&polys, r)?;
    let ncols = subsets(ring.nvars(), r).len();
    for (k, rows) in subsets(g.len(), r).into_iter().enumerate() {
        let id = rows
            .iter()
            .fold(ring.field().unit_ideal(), |acc, &i| acc.mul(g.get(i).ideal()));
        for m in &minors[k * ncols..(k + 1) * ncols] {
            if !m.is_zero() {
                out.push(PseudoPoly::new(m.clone(), id.clone())?)?;
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct BadPrimesReport {
    /// `I ∩ R` for the singular ideal `I`.
    pub ideal: FracIdeal,
    pub factorization: Vec<(PrimeIdeal, u32)>,
}

/// Primes of bad reduction: the prime divisors of `I ∩ R` for the singular
/// ideal `I` of `X`, found by trial division up to `bound`.
pub fn bad_primes(x: &AffineScheme, bound: u64) -> Result<BadPrimesReport, AppError> {
    let sing = singular_ideal(x)?;
    let ideal = intersect_with_r(&sing).ok_or(AppError::ZeroIntersection)?;
    let factorization = factor_ideal(&ideal, bound)?;
    Ok(BadPrimesReport { ideal, factorization })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse_poly;
    use crate::numberfield::NumberField;

    fn zring(names: &[&str]) -> PolyRing {
        PolyRing::new(&NumberField::rationals(), names, MonomialOrder::DegRevLex)
    }

    fn pb(r: &PolyRing, gens: &[&str]) -> PseudoBasis {
        let e = gens
            .iter()
            .map(|s| PseudoPoly::from_poly(parse_poly(r, s).unwrap()).unwrap())
            .collect();
        PseudoBasis::from_elems(r, e).unwrap()
    }

    fn zideal(n: i64) -> FracIdeal {
        let q = NumberField::rationals();
        FracIdeal::principal(&FieldElem::from_int(&q, n)).unwrap()
    }

    #[test]
    fn conductors() {
        let r = zring(&["x"]);
        assert_eq!(find_conductor_ideal(&pb(&r, &["x", "1-x"])), Some(zideal(1)));
        assert_eq!(find_conductor_ideal(&pb(&r, &["x"])), None);
        let f = pb(&r, &["2*x+1", "4*x"]);
        let n = find_conductor_ideal(&f).unwrap();
        let d = n.basis()[0].clone();
        assert!(!d.is_zero());
        let p = PseudoPoly::from_poly(Poly::constant(&r, d)).unwrap();
        assert!(ideal_membership(&p, &f));
    }

    #[test]
    fn membership() {
        let r = zring(&["x", "y"]);
        let f = pb(&r, &["2*x+y", "3*x"]);
        let ctx = IdealContext::with_auto_options(&f);
        assert!(ctx.contains_poly(&parse_poly(&r, "3*y").unwrap()));
        assert!(!ctx.contains_poly(&parse_poly(&r, "y").unwrap()));
        assert!(ctx.contains_poly(&parse_poly(&r, "2*x+y").unwrap()));
        assert!(!ctx.contains_poly(&parse_poly(&r, "y/3").unwrap()));
        // closed under the module action of each basis element
        for g in ctx.basis().iter() {
            for c in g.ideal().basis() {
                assert!(ctx.contains_poly(&g.poly().scalar_mul(&c)));
            }
        }
    }

    #[test]
    fn elimination() {
        let r = PolyRing::new(&NumberField::rationals(), &["y", "x"], MonomialOrder::Elim(1));
        let f = pb(&r, &["y - x^2", "y"]);
        let g = buchberger(&f, &BuchbergerOptions::default());
        let e = eliminate(&g, &[1]).unwrap();
        assert!(e.iter().all(|p| p.poly().only_uses(&[1])));
        assert!(e.iter().any(|p| *p.poly() == parse_poly(&r, "x^2").unwrap()));
        assert_eq!(eliminate(&g, &[0, 1]).unwrap().len(), g.len());
        let d = zring(&["y", "x"]);
        let g = buchberger(&pb(&d, &["y - x^2"]), &BuchbergerOptions::default());
        assert_eq!(
            eliminate(&g, &[1]).unwrap_err(),
            AppError::WrongOrder(MonomialOrder::DegRevLex)
        );
    }

    #[test]
    fn intersections() {
        let r = zring(&["x", "y"]);
        let i = ideal_intersection(&pb(&r, &["x"]), &pb(&r, &["x"])).unwrap();
        let ctx = IdealContext::with_auto_options(&i);
        assert!(ctx.contains_poly(&r.var(0)));

        let i = ideal_intersection(&pb(&r, &["2"]), &pb(&r, &["3"])).unwrap();
        assert_eq!(constant_part(&buchberger(&i, &BuchbergerOptions::default())), Some(zideal(6)));

        let i = ideal_intersection(&pb(&r, &["x"]), &pb(&r, &["y"])).unwrap();
        let ctx = IdealContext::with_auto_options(&i);
        assert!(ctx.contains_poly(&parse_poly(&r, "x*y").unwrap()));
        assert!(!ctx.contains_poly(&parse_poly(&r, "x").unwrap()));
        assert!(!ctx.contains_poly(&parse_poly(&r, "y").unwrap()));
    }

    #[test]
    fn contraction() {
        let r = zring(&["x"]);
        let q = r.field().clone();
        let six = PseudoPoly::new(r.one(), zideal(6)).unwrap();
        let f = PseudoBasis::from_elems(&r, vec![six]).unwrap();
        assert_eq!(intersect_with_r(&f), Some(zideal(6)));
        assert_eq!(intersect_with_r(&pb(&r, &["x"])), None);
        // 1 = x·4x - (2x - 1)(2x + 1)
        assert_eq!(intersect_with_r(&pb(&r, &["2*x+1", "4*x"])), Some(zideal(1)));
        let f = pb(&r, &["2*x+1", "6*x"]);
        assert_eq!(intersect_with_r(&f), Some(zideal(3)));
        assert_eq!(q.degree(), 1);
    }

    #[test]
    fn singular_ideals() {
        let r = zring(&["x", "y"]);
        let x = AffineScheme::new(pb(&r, &["x^2+y^2-1"]), 1).unwrap();
        let s = singular_ideal(&x).unwrap();
        let polys: Vec<String> = s.iter().map(|p| p.poly().to_string()).collect();
        assert_eq!(polys, vec!["x^2 + y^2 - 1", "2*x", "2*y"]);

        let line = AffineScheme::new(pb(&r, &["x"]), 1).unwrap();
        let s = singular_ideal(&line).unwrap();
        assert!(s.iter().any(|p| p.poly().is_constant()));
        assert_eq!(s.len(), 2);

        let pts = AffineScheme::new(pb(&r, &["x*y-1", "x+y"]), 0).unwrap();
        let s = singular_ideal(&pts).unwrap();
        assert_eq!(s.get(2).poly(), &parse_poly(&r, "y-x").unwrap());
        assert!(AffineScheme::new(pb(&r, &["x"]), 2).is_err());
    }

    #[test]
    fn bad_reduction_over_z() {
        let r = zring(&["x"]);
        let x = AffineScheme::new(pb(&r, &["x^2-5"]), 0).unwrap();
        let rep = bad_primes(&x, 10).unwrap();
        let ps: Vec<BigInt> = rep.factorization.iter().map(|(p, _)| p.p.clone()).collect();
        assert_eq!(ps, vec![BigInt::from(2), BigInt::from(5)]);

        // x^2 - x has discriminant 1
        let x = AffineScheme::new(pb(&r, &["x^2-x"]), 0).unwrap();
        let rep = bad_primes(&x, 10).unwrap();
        assert!(rep.ideal.is_unit());
        assert!(rep.factorization.is_empty());

        let x = AffineScheme::new(pb(&r, &["x^2"]), 0).unwrap();
        assert_eq!(bad_primes(&x, 10).unwrap_err(), AppError::ZeroIntersection);
    }
}
