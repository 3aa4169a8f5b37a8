use std::collections::BTreeSet;

use log::trace;

use super::{ExpVec, Poly, PolyError, PolyRing};
use crate::numberfield::FieldElem;

/// Reduced Gröbner basis over the field `K`, optionally with the cofactor
/// rows expressing each element in terms of the input generators.
#[derive(Debug, Clone)]
pub struct FieldGB {
    pub ring: PolyRing,
    pub basis: Vec<Poly>,
    pub transform: Option<Vec<Vec<Poly>>>,
}

impl FieldGB {
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }
}

struct Elem {
    poly: Poly,
    cof: Option<Vec<Poly>>,
}

fn scale_cof(cof: &mut Option<Vec<Poly>>, c: &FieldElem) {
    if let Some(v) = cof {
        for p in v.iter_mut() {
            *p = p.scalar_mul(c);
        }
    }
}

fn make_monic(e: &mut Elem) {
    let inv = e.poly.lc().expect("non-zero").inv();
    if !inv.is_one() {
        e.poly = e.poly.scalar_mul(&inv);
        scale_cof(&mut e.cof, &inv);
    }
}

/// Full reduction of `f` by `basis` (skipping index `skip`), updating the
/// cofactor row alongside.
fn reduce(mut f: Elem, basis: &[Elem], skip: Option<usize>) -> Elem {
    let ring = f.poly.ring().clone();
    let mut rem = Vec::new();
    let mut p = std::mem::replace(&mut f.poly, Poly::zero(&ring));
    while let Some(lt) = p.lt().cloned() {
        let hit = basis
            .iter()
            .enumerate()
            .filter(|(k, _)| Some(*k) != skip)
            .find(|(_, g)| g.poly.lm().expect("non-zero").divides(&lt.exp));
        match hit {
            Some((_, g)) => {
                let (glm, glc) = (g.poly.lm().expect("non-zero"), g.poly.lc().expect("non-zero"));
                let c = &lt.coeff * &glc.inv();
                let shift = lt.exp.div(glm);
                p = p.sub_mul_term(&c, &shift, &g.poly);
                if let (Some(fc), Some(gc)) = (f.cof.as_mut(), g.cof.as_ref()) {
                    for (a, b) in fc.iter_mut().zip(gc) {
                        *a = a.sub_mul_term(&c, &shift, b);
                    }
                }
            }
            None => {
                rem.push(lt);
                p = p.tail();
            }
        }
    }
    f.poly = Poly::from_sorted_terms(&ring, rem);
    f
}

fn spoly(a: &Elem, b: &Elem) -> Elem {
    let (la, lb) = (a.poly.lm().expect("non-zero"), b.poly.lm().expect("non-zero"));
    let l = la.lcm(lb);
    let (sa, sb) = (l.div(la), l.div(lb));
    let ca = a.poly.lc().expect("non-zero").inv();
    let cb = b.poly.lc().expect("non-zero").inv();
    let poly = &a.poly.mul_term(&ca, &sa) - &b.poly.mul_term(&cb, &sb);
    let cof = match (&a.cof, &b.cof) {
        (Some(x), Some(y)) => Some(
            x.iter()
                .zip(y)
                .map(|(p, q)| &p.mul_term(&ca, &sa) - &q.mul_term(&cb, &sb))
                .collect(),
        ),
        _ => None,
    };
    Elem { poly, cof }
}

/// Buchberger's algorithm over `K` with the normal selection strategy,
/// Buchberger's two criteria, and a final auto-reduction to the reduced
/// monic basis sorted by descending leading monomial.
pub fn field_buchberger(gens: &[Poly], track: bool) -> FieldGB {
    assert!(!gens.is_empty(), "empty generator list");
    let ring = gens[0].ring().clone();
    let m = gens.len();
    let mut basis: Vec<Elem> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let cof = track.then(|| {
            (0..m)
                .map(|k| if k == i { ring.one() } else { ring.zero() })
                .collect()
        });
        let mut e = Elem { poly: g.clone(), cof };
        make_monic(&mut e);
        basis.push(e);
    }

    // (lcm degree, i, j)
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let lm = |b: &[Elem], i: usize| b[i].poly.lm().expect("non-zero").clone();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.insert((lm(&basis, i).lcm(&lm(&basis, j)).degree(), i, j));
        }
    }

    let mut unit = basis.iter().position(|e| e.poly.is_constant());
    while unit.is_none() {
        let Some(&(deg, i, j)) = queue.iter().next() else { break };
        queue.remove(&(deg, i, j));
        let (li, lj) = (lm(&basis, i), lm(&basis, j));
        if li.coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis, k).divides(&l)
                && !in_queue(&queue, &basis, i, k)
                && !in_queue(&queue, &basis, j, k)
        });
        if chain {
            continue;
        }
        let mut h = reduce(spoly(&basis[i], &basis[j]), &basis, None);
        if h.poly.is_zero() {
            continue;
        }
        make_monic(&mut h);
        trace!("field gb: pair ({i},{j}) deg {deg} -> new element {}", basis.len());
        let n = basis.len();
        let hl = h.poly.lm().expect("non-zero").clone();
        if hl.is_zero() {
            unit = Some(n);
        }
        basis.push(h);
        for k in 0..n {
            queue.insert((lm(&basis, k).lcm(&hl).degree(), k, n));
        }
    }

    let mut kept: Vec<Elem> = match unit {
        Some(u) => vec![basis.swap_remove(u)],
        None => {
            // drop elements whose leading monomial is a multiple of another's
            let lms: Vec<ExpVec> = basis.iter().map(|e| e.poly.lm().expect("non-zero").clone()).collect();
            let keep: Vec<bool> = (0..basis.len())
                .map(|i| {
                    !(0..basis.len()).any(|k| {
                        k != i && lms[k].divides(&lms[i]) && (lms[k] != lms[i] || k < i)
                    })
                })
                .collect();
            basis
                .into_iter()
                .zip(keep)
                .filter_map(|(e, k)| k.then_some(e))
                .collect()
        }
    };
    for i in 0..kept.len() {
        let e = Elem {
            poly: kept[i].poly.clone(),
            cof: kept[i].cof.clone(),
        };
        let mut r = reduce(e, &kept, Some(i));
        make_monic(&mut r);
        kept[i] = r;
    }
    kept.sort_by(|a, b| ring.cmp(b.poly.lm().expect("non-zero"), a.poly.lm().expect("non-zero")));
    let transform = track.then(|| kept.iter().map(|e| e.cof.clone().expect("tracked")).collect());
    FieldGB {
        ring,
        basis: kept.into_iter().map(|e| e.poly).collect(),
        transform,
    }
}

fn in_queue(q: &BTreeSet<(u32, usize, usize)>, basis: &[Elem], a: usize, b: usize) -> bool {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    let d = basis[i].poly.lm().expect("non-zero").lcm(basis[j].poly.lm().expect("non-zero")).degree();
    q.contains(&(d, i, j))
}

/// Remainder of `f` modulo the basis; no term of the result is divisible
/// by a leading monomial of `g`.
pub fn field_normal_form(f: &Poly, g: &FieldGB) -> Poly {
    let elems: Vec<Elem> = g
        .basis
        .iter()
        .map(|p| Elem {
            poly: p.clone(),
            cof: None,
        })
        .collect();
    reduce(Elem { poly: f.clone(), cof: None }, &elems, None).poly
}

/// Cofactors `a_i` with `1 = Σ a_i f_i`.
pub fn lift_one(gens: &[Poly]) -> Result<Vec<Poly>, PolyError> {
    let gb = field_buchberger(gens, true);
    if !gb.is_unit() {
        return Err(PolyError::NotUnitIdeal);
    }
    let c = gb.basis[0].lc().expect("non-zero").inv();
    Ok(gb.transform.expect("tracked")[0]
        .iter()
        .map(|p| p.scalar_mul(&c))
        .collect())
}
