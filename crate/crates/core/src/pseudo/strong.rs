use std::collections::BTreeSet;

use super::{PseudoBasis, PseudoError, PseudoPoly};
use crate::mpoly::ExpVec;
use crate::numberfield::{express_in_ideal_sum, FieldElem, FracIdeal};

pub const DEFAULT_SUBSET_CAP: u128 = 1 << 16;

/// Strong pseudo-Gröbner basis from a pseudo-Gröbner basis: one element
/// `(f_J, 𝔠_J)` per saturated index set `J`, where `𝔠_J = Σ_{i∈J} 𝔤_i LC(g_i)`
/// and `f_J = Σ a_i (x_J/LM(g_i)) g_i` with `1 = Σ a_i LC(g_i)`.
pub fn strong_basis(g: &PseudoBasis, cap: u128) -> Result<PseudoBasis, PseudoError> {
    let l = g.len();
    let subsets = if l >= 127 { u128::MAX } else { (1u128 << l) - 1 };
    if subsets > cap {
        return Err(PseudoError::TooManySubsets(subsets));
    }
    let ring = g.ring();
    let mut seen: BTreeSet<(ExpVec, Vec<usize>)> = BTreeSet::new();
    let mut out = PseudoBasis::new(ring);
    for mask in 1..=subsets {
        let xj = (0..l)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| g.lm(i).clone())
            .reduce(|a, b| a.lcm(&b))
            .expect("non-empty subset");
        let sat: Vec<usize> = (0..l).filter(|&i| g.lm(i).divides(&xj)).collect();
        if !seen.insert((xj.clone(), sat.clone())) {
            continue;
        }
        let cj = sat[1..]
            .iter()
            .fold(g.lc_ideal(sat[0]).clone(), |acc, &i| acc.add(g.lc_ideal(i)));
        let cinv = cj.inverse();
        let parts: Vec<(FracIdeal, FieldElem)> = sat
            .iter()
            .map(|&i| {
                let e = g.get(i);
                (cinv.mul(e.ideal()), e.poly().lc().expect("non-zero").clone())
            })
            .collect();
        let one = FieldElem::one(ring.field());
        let a = express_in_ideal_sum(&one, &parts)?;
        let mut f = ring.zero();
        for (&i, ai) in sat.iter().zip(&a) {
            if ai.is_zero() {
                continue;
            }
            f = &f + &g.get(i).poly().mul_term(ai, &xj.div(g.lm(i)));
        }
        out.push(PseudoPoly::new_unchecked(f, cj))?;
    }
    Ok(out)
}
