use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::mpoly::{parse_poly, MonomialOrder};
use crate::numberfield::{FieldElem, NumberField};

fn zring() -> PolyRing {
    PolyRing::new(&NumberField::rationals(), &["x", "y"], MonomialOrder::DegRevLex)
}

fn ideal(k: &NumberField, gens: &[i64]) -> FracIdeal {
    let g: Vec<FieldElem> = gens.iter().map(|&n| FieldElem::from_int(k, n)).collect();
    FracIdeal::from_generators(k, &g).unwrap()
}

fn pp(r: &PolyRing, s: &str, gens: &[i64]) -> PseudoPoly {
    PseudoPoly::new(parse_poly(r, s).unwrap(), ideal(r.field(), gens)).unwrap()
}

fn basis(r: &PolyRing, elems: Vec<PseudoPoly>) -> PseudoBasis {
    PseudoBasis::from_elems(r, elems).unwrap()
}

#[test]
fn invariant_is_enforced() {
    let r = zring();
    let half = parse_poly(&r, "x/2").unwrap();
    assert_eq!(
        PseudoPoly::new(half.clone(), ideal(r.field(), &[1])).unwrap_err(),
        PseudoError::NotIntegral
    );
    assert!(PseudoPoly::new(half, ideal(r.field(), &[2])).is_ok());
}

#[test]
fn lc_ideals() {
    let r = zring();
    let k = r.field().clone();
    assert_eq!(lc_ideal(&pp(&r, "2*x", &[1])).unwrap(), ideal(&k, &[2]));
    assert!(lc_ideal(&pp(&r, "x/2", &[2])).unwrap().is_unit());
    assert_eq!(lc_ideal(&pp(&r, "0", &[1])).unwrap_err(), PseudoError::Zero);

    let k10 = NumberField::quadratic(10);
    let r10 = PolyRing::new(&k10, &["x", "y"], MonomialOrder::DegRevLex);
    let p = pp(&r10, "(1728*a+3348)*x", &[1]);
    let c = crate::mpoly::parse_elem(&k10, "1728*a+3348").unwrap();
    assert_eq!(lc_ideal(&p).unwrap(), FracIdeal::principal(&c).unwrap());
}

#[test]
fn reducibility() {
    let r = zring();
    let g = basis(&r, vec![pp(&r, "x", &[1])]);
    assert_eq!(can_reduce(&pp(&r, "x", &[1]), &g), (true, vec![0]));
    let g = basis(&r, vec![pp(&r, "y", &[1])]);
    assert_eq!(can_reduce(&pp(&r, "x", &[1]), &g), (false, vec![]));
    let g = basis(&r, vec![pp(&r, "2*x", &[1]), pp(&r, "3*x", &[1])]);
    assert_eq!(can_reduce(&pp(&r, "x", &[1]), &g), (true, vec![0, 1]));
    assert!(lt_ideal_member(&pp(&r, "x", &[1]), &g));
    // neither ⟨2⟩ nor ⟨3⟩ alone contains 1
    let (f, used) = head_step(&pp(&r, "x", &[1]), &g).unwrap();
    assert!(f.is_zero());
    assert_eq!(used.len(), 2);
}

#[test]
fn reduction_steps() {
    let r = zring();
    let g = basis(&r, vec![pp(&r, "x", &[1])]);
    assert!(reduce_step(&pp(&r, "2*x", &[1]), &g).unwrap().is_zero());
    let g = basis(&r, vec![pp(&r, "2*x", &[1]), pp(&r, "3*x", &[1])]);
    assert!(reduce_step(&pp(&r, "x", &[1]), &g).unwrap().is_zero());
    let g = basis(&r, vec![pp(&r, "2*x", &[1])]);
    assert_eq!(reduce_step(&pp(&r, "2*x+y", &[1]), &g).unwrap(), pp(&r, "y", &[1]));
    assert_eq!(
        reduce_step(&pp(&r, "y", &[1]), &g).unwrap_err(),
        PseudoError::NotReducible
    );
}

#[test]
fn full_reduction() {
    let r = zring();
    let g = basis(&r, vec![pp(&r, "2*x", &[1]), pp(&r, "3*x", &[1])]);
    assert!(reduce_full(&pp(&r, "2*x", &[1]), &g).is_zero());
    assert_eq!(reduce_full(&pp(&r, "6*x^2+y", &[1]), &g), pp(&r, "y", &[1]));
    let g = basis(&r, vec![pp(&r, "2*x", &[1])]);
    assert_eq!(reduce_full(&pp(&r, "y", &[1]), &g), pp(&r, "y", &[1]));
    // tail terms are reduced too
    assert_eq!(reduce_full(&pp(&r, "y^2 + 4*x", &[1]), &g), pp(&r, "y^2", &[1]));
}

#[test]
fn s_polynomials() {
    let r = zring();
    let s = spoly(&pp(&r, "x", &[2]), &pp(&r, "x", &[3])).unwrap();
    assert!(s.is_zero());
    assert_eq!(s.ideal(), &ideal(r.field(), &[6]));

    let s = spoly(&pp(&r, "2*x+y", &[1]), &pp(&r, "3*x", &[1])).unwrap();
    assert_eq!(s, pp(&r, "y/2", &[6]));
    assert_eq!(canonicalize(&s).unwrap(), pp(&r, "y", &[3]));

    let k = NumberField::quadratic(-5);
    let rk = PolyRing::new(&k, &["x"], MonomialOrder::Lex);
    let s = spoly(&pp(&rk, "2*x", &[1]), &pp(&rk, "(1+a)*x", &[1])).unwrap();
    assert!(s.is_zero());
    assert_eq!(s.ideal().norm(), num_rational::BigRational::from_integer(12.into()));
}

#[test]
fn product_criterion() {
    let r = zring();
    assert!(product_criterion_applies(&pp(&r, "2*x+1", &[1]), &pp(&r, "3*y+1", &[1])));
    assert!(!product_criterion_applies(&pp(&r, "2*x", &[1]), &pp(&r, "2*y", &[1])));
    assert!(!product_criterion_applies(&pp(&r, "2*x", &[1]), &pp(&r, "3*x", &[1])));
}

#[test]
fn canonical_forms() {
    let r = zring();
    assert_eq!(canonicalize(&pp(&r, "2*x", &[1])).unwrap(), pp(&r, "x", &[2]));
    let p = pp(&r, "x + 3", &[5]);
    assert_eq!(canonicalize(&p).unwrap(), p);
    assert_eq!(canonicalize(&pp(&r, "y/2", &[6])).unwrap(), pp(&r, "y", &[3]));
    assert_eq!(canonicalize(&pp(&r, "0", &[1])).unwrap_err(), PseudoError::Zero);
}

#[test]
fn coefficient_reduction() {
    let r = zring();
    let five = ideal(r.field(), &[5]);
    let out = coeff_reduce(&pp(&r, "7*x+12", &[1]), &five).unwrap();
    // the same module as (2x + 2, Z)
    assert_eq!(canonicalize(&out).unwrap(), canonicalize(&pp(&r, "2*x+2", &[1])).unwrap());
    assert!(coeff_reduce(&pp(&r, "5*x+10", &[1]), &five).unwrap().is_zero());

    let k = NumberField::quadratic(10);
    let rk = PolyRing::new(&k, &["x"], MonomialOrder::Lex);
    let p = pp(&rk, "(12+7*a)*x", &[1]);
    let n5 = ideal(&k, &[5]);
    let out = coeff_reduce(&p, &n5).unwrap();
    assert_eq!(out.ideal(), &lc_ideal(&p).unwrap());
    // difference from the canonical input lies in 𝔑·𝔣^{-1}
    let c = canonicalize(&p).unwrap();
    let diff = c.poly() - out.poly();
    let m = n5.mul(&out.ideal().inverse());
    assert!(diff.terms().iter().all(|t| m.contains_elem(&t.coeff)));
    assert!(out.satisfies_invariant());
}

#[test]
fn shrinking() {
    let r = zring();
    let five = ideal(r.field(), &[5]);
    let out = shrink(&pp(&r, "x/3+7/3", &[3]), &five).unwrap();
    assert_eq!(out, pp(&r, "x+2", &[1]));
    // a constant absorbs the conductor
    let out = shrink(&pp(&r, "6", &[1]), &ideal(r.field(), &[4])).unwrap();
    assert_eq!(out, pp(&r, "1", &[2]));

    let k = NumberField::quadratic(10);
    let rk = PolyRing::new(&k, &["x"], MonomialOrder::Lex);
    let p = pp(&rk, "x + 1/2", &[2]);
    let out = shrink(&p, &ideal(&k, &[7])).unwrap();
    assert!(out.satisfies_invariant());
    assert!(out.ideal().size_bits() <= p.ideal().size_bits());
}

#[test]
fn classical_expansion() {
    let r = zring();
    let g = basis(&r, vec![pp(&r, "x", &[2])]);
    assert_eq!(expand_to_classical(&g), vec![parse_poly(&r, "2*x").unwrap()]);
    let g = basis(&r, vec![pp(&r, "x", &[1])]);
    assert_eq!(expand_to_classical(&g), vec![parse_poly(&r, "x").unwrap()]);
    let k = NumberField::quadratic(10);
    let rk = PolyRing::new(&k, &["x"], MonomialOrder::Lex);
    let two_a = FracIdeal::from_generators(&k, &[FieldElem::from_int(&k, 2), k.generator()]).unwrap();
    let g = basis(&rk, vec![PseudoPoly::new(rk.var(0), two_a).unwrap()]);
    let out = expand_to_classical(&g);
    assert_eq!(out, vec![parse_poly(&rk, "2*x").unwrap(), parse_poly(&rk, "a*x").unwrap()]);
}

#[test]
fn strong_bases() {
    let r = zring();
    let g = basis(&r, vec![pp(&r, "x", &[1])]);
    let s = strong_basis(&g, DEFAULT_SUBSET_CAP).unwrap();
    assert_eq!(s.elems(), &[pp(&r, "x", &[1])]);

    let g = basis(&r, vec![pp(&r, "2*x", &[1]), pp(&r, "3*x", &[1])]);
    let s = strong_basis(&g, DEFAULT_SUBSET_CAP).unwrap();
    assert!(s.iter().any(|p| p.poly().lm() == Some(g.lm(0)) && p.ideal().is_unit() && p.poly().len() == 1));

    let g = basis(&r, vec![pp(&r, "2", &[1]), pp(&r, "x", &[1])]);
    let s = strong_basis(&g, DEFAULT_SUBSET_CAP).unwrap();
    assert_eq!(s.len(), 2);
    assert!(s.iter().any(|p| p.poly().is_constant() && lc_ideal(p).unwrap() == ideal(r.field(), &[2])));
    assert!(s.iter().any(|p| p.lm() == Some(g.lm(1))));

    let many = basis(&r, (0..17).map(|i| pp(&r, &format!("x^{i}"), &[1])).collect());
    assert!(matches!(strong_basis(&many, DEFAULT_SUBSET_CAP), Err(PseudoError::TooManySubsets(_))));
}

#[test]
fn syzygies() {
    let r = zring();
    let (g1, g2) = (parse_poly(&r, "x+1").unwrap(), parse_poly(&r, "y^2-x").unwrap());
    let g = basis(&r, vec![PseudoPoly::from_poly(g1.clone()).unwrap(), PseudoPoly::from_poly(g2.clone()).unwrap()]);
    let unit = r.field().unit_ideal();
    assert!(is_pseudo_syzygy(&[g2.clone(), -&g1], &unit, &g).unwrap());
    assert!(!is_pseudo_syzygy(&[r.one(), r.zero()], &unit, &g).unwrap());
    assert!(is_pseudo_syzygy(&[r.one()], &unit, &g).is_err());

    let g = basis(&r, vec![pp(&r, "2*x", &[1]), pp(&r, "3*y", &[1])]);
    let h = [parse_poly(&r, "y/2").unwrap(), parse_poly(&r, "-x/3").unwrap()];
    assert!(is_pseudo_syzygy(&h, &ideal(r.field(), &[6]), &g).unwrap());
    assert!(!is_pseudo_syzygy(&h, &ideal(r.field(), &[3]), &g).unwrap());
}

#[test]
fn buchberger_small() {
    let r = zring();
    let f = basis(&r, vec![pp(&r, "x", &[1]), pp(&r, "y", &[1])]);
    let g = buchberger(&f, &BuchbergerOptions::default());
    assert_eq!(g.elems(), f.elems());

    let f = basis(&r, vec![pp(&r, "2*x+y", &[1]), pp(&r, "3*x", &[1])]);
    assert!(!is_groebner(&f));
    let g = buchberger(&f, &BuchbergerOptions::default());
    assert!(is_groebner(&g));
    assert!(lt_ideal_member(&pp(&r, "x", &[1]), &g));
    assert!(lt_ideal_member(&pp(&r, "y", &[3]), &g));
    assert!(!lt_ideal_member(&pp(&r, "y", &[1]), &g));
    assert!(reduce_full(&pp(&r, "3*y", &[1]), &g).is_zero());
    assert!(!reduce_full(&pp(&r, "y", &[1]), &g).is_zero());

    assert!(is_groebner(&basis(&r, vec![pp(&r, "x^2+3", &[1])])));
}

#[test]
fn buchberger_with_conductor() {
    let r = zring();
    let f = basis(&r, vec![pp(&r, "2*x+1", &[1]), pp(&r, "4*x", &[1])]);
    // 2·(2x+1) - 4x = 2, so ⟨2⟩ lies in the ideal
    let opts = BuchbergerOptions {
        conductor: Some(ideal(r.field(), &[2])),
        ..Default::default()
    };
    let g = buchberger(&f, &opts);
    assert!(is_groebner(&g));
    let plain = buchberger(&f, &BuchbergerOptions::default());
    for p in g.iter() {
        assert!(lt_ideal_member(p, &plain));
    }
    for p in plain.iter() {
        assert!(lt_ideal_member(p, &g));
    }
}

// Random pseudo-polynomials with integral coefficients and small ideals.
fn arb_pp(r: PolyRing, nvars: usize) -> impl Strategy<Value = PseudoPoly> {
    let k = r.field().clone();
    let d = k.degree();
    let coeff = prop::collection::vec(-6i64..=6, d);
    let term = (coeff, prop::collection::vec(0u32..3, nvars));
    (prop::collection::vec(term, 1..4), 1i64..5).prop_filter_map("zero", move |(terms, id)| {
        let ts = terms
            .into_iter()
            .map(|(c, e)| crate::mpoly::Term {
                exp: ExpVec::new(e),
                coeff: FieldElem::from_parts(&k, c.into_iter().map(BigInt::from).collect(), 1.into()),
            })
            .collect();
        let f = Poly::from_terms(&r, ts);
        (!f.is_zero()).then(|| PseudoPoly::new(f, ideal(&k, &[id])).unwrap())
    })
}

fn rings() -> Vec<PolyRing> {
    [1i64, 10, -5]
        .iter()
        .map(|&d| {
            let k = if d == 1 { NumberField::rationals() } else { NumberField::quadratic(d) };
            PolyRing::new(&k, &["x", "y"], MonomialOrder::DegRevLex)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduction_invariants(
        (r, gens, p) in (0usize..3).prop_flat_map(|i| {
            let r = rings()[i].clone();
            (Just(r.clone()), prop::collection::vec(arb_pp(r.clone(), 2), 1..4), arb_pp(r, 2))
        })
    ) {
        let g = PseudoBasis::from_elems(&r, gens).unwrap();

        if let Some((h, used)) = head_step(&p, &g) {
            // strictly smaller leading monomial
            prop_assert!(h.lm().is_none_or(|m| r.cmp(m, p.lm().unwrap()).is_lt()));
            let hp = PseudoPoly::new(h.clone(), p.ideal().clone());
            prop_assert!(hp.is_ok());
            // f - h = Σ a_i x^s g_i with a_i ∈ 𝔤_i 𝔣^{-1}
            let finv = p.ideal().inverse();
            let mut acc = r.zero();
            for (i, a, s) in &used {
                prop_assert!(g.get(*i).ideal().mul(&finv).contains_elem(a));
                acc = &acc + &g.get(*i).poly().mul_term(a, s);
            }
            prop_assert_eq!(&acc, &(p.poly() - &h));
        }
        let red = reduce_full(&p, &g);
        prop_assert!(red.satisfies_invariant());
        for t in red.poly().terms() {
            let single = PseudoPoly::new(Poly::from_terms(&r, vec![t.clone()]), red.ideal().clone()).unwrap();
            prop_assert!(!can_reduce(&single, &g).0);
        }

        let c = canonicalize(&p).unwrap();
        prop_assert_eq!(&canonicalize(&c).unwrap(), &c);
        prop_assert_eq!(lc_ideal(&c).unwrap(), lc_ideal(&p).unwrap());
        for (a, b) in p.poly().terms().iter().zip(c.poly().terms()) {
            prop_assert_eq!(&a.exp, &b.exp);
            prop_assert_eq!(p.ideal().scale(&a.coeff).unwrap(), c.ideal().scale(&b.coeff).unwrap());
        }

        for q in g.iter() {
            let s = spoly(&p, q).unwrap();
            prop_assert!(s.satisfies_invariant());
            prop_assert_eq!(s.ideal(), &lc_ideal(&p).unwrap().intersect(&lc_ideal(q).unwrap()));
            if product_criterion_applies(&p, q) {
                let pair = PseudoBasis::from_elems(&r, vec![p.clone(), q.clone()]).unwrap();
                prop_assert!(reduce_full(&s, &pair).is_zero());
            }
        }
    }
}
