use std::collections::BTreeSet;

use log::debug;

use super::{
    can_reduce, canonicalize, lc_ideal, product_criterion_applies, reduce_full, shrink, spoly,
    PseudoBasis, PseudoPoly,
};
use crate::numberfield::FracIdeal;

#[derive(Debug, Clone)]
pub struct BuchbergerOptions {
    pub use_product_criterion: bool,
    /// A non-zero ideal `𝔑 ⊆ ⟨F⟩ ∩ R`; enables coefficient reduction.
    pub conductor: Option<FracIdeal>,
    pub canonicalize: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            use_product_criterion: true,
            conductor: None,
            canonicalize: true,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct BuchbergerStats {
    pub pairs_total: usize,
    pub pairs_reduced: usize,
    /// Pairs skipped by the product criterion, as the two elements.
    pub skipped: Vec<(PseudoPoly, PseudoPoly)>,
    pub inserted: usize,
    pub removed_by_autoreduction: usize,
}

pub fn buchberger(f: &PseudoBasis, opts: &BuchbergerOptions) -> PseudoBasis {
    buchberger_with_stats(f, opts).0
}

// Bounds the reduce / coefficient-reduce alternation for one remainder.
const MAX_COEFF_ROUNDS: usize = 32;

fn prepare(p: &PseudoPoly, conductor: Option<&FracIdeal>, canonical: bool) -> Option<PseudoPoly> {
    if p.is_zero() {
        return None;
    }
    if let Some(n) = conductor {
        let r = shrink(p, n).expect("non-zero");
        return (!r.is_zero()).then_some(r);
    }
    if canonical {
        Some(canonicalize(p).expect("non-zero"))
    } else {
        Some(p.clone())
    }
}

/// Fully reduces `h` and, with a conductor, alternates with coefficient
/// reduction until the leading data is stable.
fn remainder(h: &PseudoPoly, g: &PseudoBasis, conductor: Option<&FracIdeal>, canonical: bool) -> Option<PseudoPoly> {
    let mut h = reduce_full(h, g);
    for _ in 0..MAX_COEFF_ROUNDS {
        let r = prepare(&h, conductor, canonical)?;
        if conductor.is_none() || !can_reduce(&r, g).0 {
            return Some(r);
        }
        h = reduce_full(&r, g);
        if h.is_zero() {
            return None;
        }
    }
    // h is irreducible here, so inserting it still enlarges Lt(G)
    Some(h)
}

/// Buchberger's algorithm for pseudo-polynomials with the normal selection
/// strategy. Zero remainders (whatever their ideal) are discarded; the
/// final basis is auto-reduced by dropping elements whose leading term lies
/// in the leading term ideal of the others.
///
/// With a conductor, elements are kept in the small form produced by
/// [`shrink`] while the algorithm runs, and a new constant element `(1, 𝔠)`
/// replaces the conductor (`𝔠 ⊇ 𝔑` by construction).
pub fn buchberger_with_stats(f: &PseudoBasis, opts: &BuchbergerOptions) -> (PseudoBasis, BuchbergerStats) {
    let ring = f.ring().clone();
    let canonical = opts.canonicalize;
    let mut conductor = opts.conductor.clone();
    let mut stats = BuchbergerStats::default();
    let mut g = PseudoBasis::new(&ring);
    // (1, 𝔑) goes in untouched: reducing it modulo itself would give zero
    if let Some(n) = &conductor {
        g.push(PseudoPoly::new_unchecked(ring.one(), n.clone())).expect("non-zero");
    }
    for p in f.iter() {
        if let Some(p) = prepare(p, conductor.as_ref(), canonical) {
            if conductor.is_some() && p.poly().is_constant() {
                conductor = Some(p.ideal().clone());
            }
            g.push(p).expect("non-zero");
        }
    }

    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            queue.insert((g.lm(i).lcm(g.lm(j)).degree(), i, j));
        }
    }
    stats.pairs_total = queue.len();

    while let Some((deg, i, j)) = queue.pop_first() {
        let (p, q) = (g.get(i).clone(), g.get(j).clone());
        if opts.use_product_criterion && product_criterion_applies(&p, &q) {
            debug!("pair ({i},{j}) deg {deg}: product criterion");
            stats.skipped.push((p, q));
            continue;
        }
        stats.pairs_reduced += 1;
        let s = spoly(&p, &q).expect("non-zero");
        let Some(h) = remainder(&s, &g, conductor.as_ref(), canonical) else {
            debug!("pair ({i},{j}) deg {deg}: reduces to zero");
            continue;
        };
        let n = g.len();
        debug!(
            "pair ({i},{j}) deg {deg}: new element {n}, LM {:?}, queue {}",
            h.lm().expect("non-zero"),
            queue.len()
        );
        if conductor.is_some() && h.poly().is_constant() {
            conductor = Some(h.ideal().clone());
        }
        g.push(h).expect("non-zero");
        stats.inserted += 1;
        for k in 0..n {
            queue.insert((g.lm(k).lcm(g.lm(n)).degree(), k, n));
            stats.pairs_total += 1;
        }
    }

    let before = g.len();
    let mut i = 0;
    while i < g.len() {
        let rest = g.without(i);
        if !rest.is_empty() && can_reduce(g.get(i), &rest).0 {
            g = rest;
        } else {
            i += 1;
        }
    }
    stats.removed_by_autoreduction = before - g.len();
    if canonical && opts.conductor.is_some() {
        let elems = g.iter().map(|p| canonicalize(p).expect("non-zero")).collect();
        g = PseudoBasis::from_elems(&ring, elems).expect("same ring");
    }
    debug_assert!(g.iter().all(|p| lc_ideal(p).is_ok()));
    (g, stats)
}

/// Every S-polynomial of the basis reduces to zero.
pub fn is_groebner(g: &PseudoBasis) -> bool {
    for j in 0..g.len() {
        for i in 0..j {
            let s = spoly(g.get(i), g.get(j)).expect("non-zero");
            if !reduce_full(&s, g).is_zero() {
                return false;
            }
        }
    }
    true
}
