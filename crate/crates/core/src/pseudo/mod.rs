//! Pseudo-polynomials `(f, 𝔣)` over the ring of integers `R`, the reduction
//! relation, S-polynomials, Buchberger's algorithm, and strong bases.

mod buchberger;
mod strong;

use std::fmt;

use thiserror::Error;

use crate::mpoly::{ExpVec, Poly, PolyError, PolyRing, Term};
use crate::numberfield::{express_in_ideal_sum, FieldElem, FracIdeal, NfError};

pub use buchberger::{buchberger, buchberger_with_stats, is_groebner, BuchbergerOptions, BuchbergerStats};
pub use strong::{strong_basis, DEFAULT_SUBSET_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PseudoError {
    #[error("zero pseudo-polynomial")]
    Zero,
    #[error("pseudo-polynomial is not reducible modulo the basis")]
    NotReducible,
    #[error("coefficient ideal does not map the polynomial into R[x]")]
    NotIntegral,
    #[error("too many subsets ({0}) for the strong basis enumeration")]
    TooManySubsets(u128),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error(transparent)]
    Field(#[from] NfError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A pair `(f, 𝔣)` with `𝔣·f ⊆ R[x]`, standing for the module `𝔣[x]·f`.
#[derive(Clone, PartialEq, Eq)]
pub struct PseudoPoly {
    poly: Poly,
    ideal: FracIdeal,
}

impl PseudoPoly {
    /// Checks the integrality condition.
    pub fn new(poly: Poly, ideal: FracIdeal) -> Result<Self, PseudoError> {
        let p = PseudoPoly { poly, ideal };
        if p.satisfies_invariant() {
            Ok(p)
        } else {
            Err(PseudoError::NotIntegral)
        }
    }

    pub(crate) fn new_unchecked(poly: Poly, ideal: FracIdeal) -> Self {
        debug_assert!(PseudoPoly { poly: poly.clone(), ideal: ideal.clone() }.satisfies_invariant());
        PseudoPoly { poly, ideal }
    }

    /// `(f, R)`; requires `f ∈ R[x]`.
    pub fn from_poly(poly: Poly) -> Result<Self, PseudoError> {
        let unit = poly.field().unit_ideal();
        Self::new(poly, unit)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn ideal(&self) -> &FracIdeal {
        &self.ideal
    }

    pub fn into_parts(self) -> (Poly, FracIdeal) {
        (self.poly, self.ideal)
    }

    pub fn ring(&self) -> &PolyRing {
        self.poly.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn lm(&self) -> Option<&ExpVec> {
        self.poly.lm()
    }

    /// `𝔣·c ⊆ R` for every coefficient `c`.
    pub fn satisfies_invariant(&self) -> bool {
        self.poly
            .terms()
            .iter()
            .all(|t| self.ideal.scale(&t.coeff).map(|i| i.is_integral()).unwrap_or(false))
    }
}

impl fmt::Display for PseudoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.poly, self.ideal)
    }
}

impl fmt::Debug for PseudoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The integral ideal `𝔣·LC(f)`.
pub fn lc_ideal(p: &PseudoPoly) -> Result<FracIdeal, PseudoError> {
    let lc = p.poly.lc().ok_or(PseudoError::Zero)?;
    Ok(p.ideal.scale(lc)?)
}

#[derive(Clone)]
struct Lead {
    lm: ExpVec,
    lc: FieldElem,
    lc_ideal: FracIdeal,
}

/// Ordered list of non-zero pseudo-polynomials with cached leading data.
#[derive(Clone)]
pub struct PseudoBasis {
    ring: PolyRing,
    elems: Vec<PseudoPoly>,
    lead: Vec<Lead>,
}

impl PseudoBasis {
    pub fn new(ring: &PolyRing) -> Self {
        PseudoBasis {
            ring: ring.clone(),
            elems: Vec::new(),
            lead: Vec::new(),
        }
    }

    pub fn from_elems(ring: &PolyRing, elems: Vec<PseudoPoly>) -> Result<Self, PseudoError> {
        let mut b = Self::new(ring);
        for e in elems {
            b.push(e)?;
        }
        Ok(b)
    }

    pub fn push(&mut self, p: PseudoPoly) -> Result<(), PseudoError> {
        if p.ring() != &self.ring {
            return Err(PolyError::RingMismatch.into());
        }
        let lc_ideal = lc_ideal(&p)?;
        let t = p.poly.lt().expect("non-zero");
        self.lead.push(Lead {
            lm: t.exp.clone(),
            lc: t.coeff.clone(),
            lc_ideal,
        });
        self.elems.push(p);
        Ok(())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[PseudoPoly] {
        &self.elems
    }

    pub fn get(&self, i: usize) -> &PseudoPoly {
        &self.elems[i]
    }

    pub fn lm(&self, i: usize) -> &ExpVec {
        &self.lead[i].lm
    }

    pub fn lc_ideal(&self, i: usize) -> &FracIdeal {
        &self.lead[i].lc_ideal
    }

    pub fn iter(&self) -> impl Iterator<Item = &PseudoPoly> {
        self.elems.iter()
    }

    /// The basis without element `i`.
    pub fn without(&self, i: usize) -> PseudoBasis {
        let mut b = self.clone();
        b.elems.remove(i);
        b.lead.remove(i);
        b
    }
}

impl fmt::Debug for PseudoBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elems.iter()).finish()
    }
}

/// `(true, J)` when `𝔣·LC(f) ⊆ Σ_{i∈J} 𝔤_i·LC(g_i)` where `J` collects the
/// basis elements whose leading monomial divides `LM(f)`.
pub fn can_reduce(p: &PseudoPoly, g: &PseudoBasis) -> (bool, Vec<usize>) {
    let Some(lm) = p.lm() else { return (false, vec![]) };
    let j: Vec<usize> = (0..g.len()).filter(|&i| g.lm(i).divides(lm)).collect();
    if j.is_empty() {
        return (false, j);
    }
    let target = lc_ideal(p).expect("non-zero");
    if j.iter().any(|&i| g.lc_ideal(i).contains(&target)) {
        return (true, j);
    }
    let sum = j[1..]
        .iter()
        .fold(g.lc_ideal(j[0]).clone(), |acc, &i| acc.add(g.lc_ideal(i)));
    (sum.contains(&target), j)
}

/// `Lt(p) ⊆ Lt(G)`.
pub fn lt_ideal_member(p: &PseudoPoly, g: &PseudoBasis) -> bool {
    can_reduce(p, g).0
}

/// `LM(g) | LM(f)` and `𝔣·LC(f) ⊆ 𝔤·LC(g)`.
pub fn divides(g: &PseudoPoly, p: &PseudoPoly) -> bool {
    match (g.lm(), p.lm()) {
        (Some(a), Some(b)) if a.divides(b) => lc_ideal(g)
            .expect("non-zero")
            .contains(&lc_ideal(p).expect("non-zero")),
        _ => false,
    }
}

/// One head-reduction step; returns the new polynomial together with the
/// multipliers `(i, a_i, x^{LM(f)-LM(g_i)})`.
pub(crate) fn head_step(
    p: &PseudoPoly,
    g: &PseudoBasis,
) -> Option<(Poly, Vec<(usize, FieldElem, ExpVec)>)> {
    let (ok, j) = can_reduce(p, g);
    if !ok {
        return None;
    }
    let lt = p.poly.lt().expect("non-zero");
    let target = lc_ideal(p).expect("non-zero");
    // a single divisor keeps the multipliers small
    let single = j.iter().copied().find(|&i| g.lc_ideal(i).contains(&target));
    let mults: Vec<(usize, FieldElem)> = match single {
        Some(i) => vec![(i, &lt.coeff * &g.lead[i].lc.inv())],
        None => {
            let finv = p.ideal.inverse();
            let parts: Vec<(FracIdeal, FieldElem)> = j
                .iter()
                .map(|&i| (g.elems[i].ideal.mul(&finv), g.lead[i].lc.clone()))
                .collect();
            let a = express_in_ideal_sum(&lt.coeff, &parts).expect("containment was checked");
            j.iter().copied().zip(a).filter(|(_, a)| !a.is_zero()).collect()
        }
    };
    let mut f = p.poly.clone();
    let mut used = Vec::with_capacity(mults.len());
    for (i, a) in mults {
        let shift = lt.exp.div(&g.lead[i].lm);
        f = f.sub_mul_term(&a, &shift, &g.elems[i].poly);
        used.push((i, a, shift));
    }
    debug_assert!(f.lm().is_none_or(|m| g.ring.cmp(m, &lt.exp).is_lt()));
    Some((f, used))
}

/// `(f - Σ a_i x^{…} g_i, 𝔣)` with `a_i ∈ 𝔤_i𝔣^{-1}`.
pub fn reduce_step(p: &PseudoPoly, g: &PseudoBasis) -> Result<PseudoPoly, PseudoError> {
    let (f, _) = head_step(p, g).ok_or(PseudoError::NotReducible)?;
    Ok(PseudoPoly::new_unchecked(f, p.ideal.clone()))
}

/// Head reduction to minimality followed by reduction of the tail; the
/// result is zero or has no reducible term.
pub fn reduce_full(p: &PseudoPoly, g: &PseudoBasis) -> PseudoPoly {
    let mut rem: Vec<Term> = Vec::new();
    let mut cur = p.clone();
    while let Some(lt) = cur.poly.lt().cloned() {
        match head_step(&cur, g) {
            Some((f, _)) => cur.poly = f,
            None => {
                rem.push(lt);
                cur.poly = cur.poly.tail();
            }
        }
    }
    PseudoPoly::new_unchecked(Poly::from_sorted_terms(p.ring(), rem), p.ideal.clone())
}

/// `(x^{l-LM(f)} f/LC(f) - x^{l-LM(g)} g/LC(g), LC(f)𝔣 ∩ LC(g)𝔤)`.
pub fn spoly(p: &PseudoPoly, q: &PseudoPoly) -> Result<PseudoPoly, PseudoError> {
    let (lf, cf, _) = p.poly.leading_data().map_err(|_| PseudoError::Zero)?;
    let (lg, cg, _) = q.poly.leading_data().map_err(|_| PseudoError::Zero)?;
    let l = lf.lcm(&lg);
    let f = p.poly.mul_term(&cf.inv(), &l.div(&lf));
    let g = q.poly.mul_term(&cg.inv(), &l.div(&lg));
    let ideal = lc_ideal(p)?.intersect(&lc_ideal(q)?);
    Ok(PseudoPoly::new_unchecked(&f - &g, ideal))
}

/// Coprime leading monomials and coprime leading coefficient ideals.
pub fn product_criterion_applies(p: &PseudoPoly, q: &PseudoPoly) -> bool {
    match (p.lm(), q.lm()) {
        (Some(a), Some(b)) if a.coprime(b) => {
            let s = lc_ideal(p).expect("non-zero").add(&lc_ideal(q).expect("non-zero"));
            s.is_unit()
        }
        _ => false,
    }
}

/// `(f/LC(f), 𝔣·LC(f))`.
pub fn canonicalize(p: &PseudoPoly) -> Result<PseudoPoly, PseudoError> {
    let lc = p.poly.lc().ok_or(PseudoError::Zero)?;
    if lc.is_one() {
        return Ok(p.clone());
    }
    Ok(PseudoPoly::new_unchecked(
        p.poly.scalar_mul(&lc.inv()),
        p.ideal.scale(lc)?,
    ))
}

/// Canonicalizes, then replaces every coefficient by its residue modulo
/// `𝔑𝔣^{-1}`. The result may be zero.
///
/// The pivot residue can be larger than the coefficient itself when the
/// modulus is fractional. Sizes are compared after scaling by the least
/// positive integer `m ∈ 𝔣`, and the smaller representative is kept.
pub fn coeff_reduce(p: &PseudoPoly, conductor: &FracIdeal) -> Result<PseudoPoly, PseudoError> {
    let c = canonicalize(p)?;
    let poly = reduce_coeffs(&c.poly, &c.ideal, conductor);
    Ok(PseudoPoly::new_unchecked(poly, c.ideal))
}

fn reduce_coeffs(f: &Poly, ideal: &FracIdeal, conductor: &FracIdeal) -> Poly {
    let modulus = conductor.mul(&ideal.inverse());
    let m = FieldElem::from_int(ideal.field(), ideal.min_integer());
    let size = |x: &FieldElem| (x * &m).size_score();
    let terms: Vec<Term> = f
        .terms()
        .iter()
        .map(|t| {
            let r = modulus.reduce_elem(&t.coeff);
            let coeff = if r.is_zero() || size(&r) <= size(&t.coeff) {
                r
            } else {
                t.coeff.clone()
            };
            Term { exp: t.exp.clone(), coeff }
        })
        .filter(|t| !t.coeff.is_zero())
        .collect();
    Poly::from_sorted_terms(f.ring(), terms)
}

/// Moves `(f, 𝔣)` to `(γf, 𝔤)` with `γ𝔤 = 𝔣` and `𝔤` small, then reduces
/// the coefficients modulo `𝔑𝔤^{-1}`. Unlike [`coeff_reduce`] the sizes
/// stay bounded in terms of `𝔑`. A constant `(c, 𝔤)` becomes
/// `(1, c𝔤 + 𝔑)`, which spans the same ideal once `(1, 𝔑)` is present.
pub fn shrink(p: &PseudoPoly, conductor: &FracIdeal) -> Result<PseudoPoly, PseudoError> {
    if p.is_zero() {
        return Err(PseudoError::Zero);
    }
    let (gamma, small) = p.ideal.small_rep();
    let f = reduce_coeffs(&p.poly.scalar_mul(&gamma), &small, conductor);
    match f.terms() {
        [t] if t.exp.degree() == 0 => {
            let ideal = small.scale(&t.coeff)?.add(conductor);
            Ok(PseudoPoly::new_unchecked(p.ring().one(), ideal))
        }
        _ => Ok(PseudoPoly::new_unchecked(f, small)),
    }
}

/// For each `(g, 𝔤)` and each HNF basis element `c` of `𝔤`, the polynomial
/// `c·g ∈ R[x]`.
pub fn expand_to_classical(g: &PseudoBasis) -> Vec<Poly> {
    g.iter()
        .flat_map(|p| {
            p.ideal
                .basis()
                .into_iter()
                .map(move |c| p.poly.scalar_mul(&c))
        })
        .collect()
}

/// `Σ h_i g_i = 0` and `𝔥·h_i ⊆ 𝔤_i[x]` for every `i`.
pub fn is_pseudo_syzygy(h: &[Poly], hid: &FracIdeal, g: &PseudoBasis) -> Result<bool, PseudoError> {
    if h.len() != g.len() {
        return Err(PseudoError::LengthMismatch(h.len(), g.len()));
    }
    let sum = h
        .iter()
        .zip(g.iter())
        .try_fold(g.ring().zero(), |acc, (hi, gi)| -> Result<Poly, PseudoError> {
            Ok(acc.checked_add(&hi.checked_mul(&gi.poly)?)?)
        })?;
    if !sum.is_zero() {
        return Ok(false);
    }
    for (hi, gi) in h.iter().zip(g.iter()) {
        for t in hi.terms() {
            if !gi.ideal.contains(&hid.scale(&t.coeff)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
