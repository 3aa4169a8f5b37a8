//! Dense univariate polynomials over `F_p` and their factorization
//! (square-free, distinct-degree, then Cantor–Zassenhaus splitting).

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Coefficients in ascending order, no trailing zeros.
pub(crate) type FpPoly = Vec<u64>;

fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

fn mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be non-zero.
fn divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let inv = inv_mod(*b.last().expect("non-zero divisor"), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = mulmod(*r.last().expect("non-empty"), inv, p);
        q[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mulmod(c, bi, p)) % p;
        }
        r = trim(r);
    }
    (trim(q), r)
}

fn rem(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    divrem(a, b, p).1
}

fn monic(a: FpPoly, p: u64) -> FpPoly {
    match a.last() {
        None => a,
        Some(&lc) => {
            let inv = inv_mod(lc, p);
            a.into_iter().map(|c| mulmod(c, inv, p)).collect()
        }
    }
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(x, p)
}

fn derivative(a: &[u64], p: u64) -> FpPoly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % p, p))
            .collect(),
    )
}

fn powmod_poly(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> FpPoly {
    let mut acc: FpPoly = vec![1];
    let b = rem(base, m, p);
    for i in (0..e.bits()).rev() {
        acc = rem(&mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
    }
    acc
}

fn is_one(a: &[u64]) -> bool {
    a.len() == 1 && a[0] == 1
}

/// Square-free decomposition of a monic polynomial: `(factor, multiplicity)`.
fn squarefree(f: &[u64], p: u64) -> Vec<(FpPoly, u32)> {
    let mut out = Vec::new();
    let fp = derivative(f, p);
    let mut c = gcd(f, &fp, p);
    let mut w = divrem(f, &c, p).0;
    let mut i = 1u32;
    while !is_one(&w) {
        let y = gcd(&w, &c, p);
        let fac = divrem(&w, &y, p).0;
        if !is_one(&fac) {
            out.push((monic(fac, p), i));
        }
        w = y;
        c = divrem(&c, &w, p).0;
        i += 1;
    }
    if !is_one(&c) {
        // c is a p-th power
        let root: FpPoly = c.iter().step_by(p as usize).copied().collect();
        for (g, m) in squarefree(&monic(root, p), p) {
            out.push((g, m * p as u32));
        }
    }
    out
}

/// Distinct-degree factorization of a monic square-free polynomial.
fn distinct_degree(f: &[u64], p: u64) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let x: FpPoly = vec![0, 1];
    let mut h = x.clone();
    let pe = BigUint::from(p);
    let mut i = 1;
    while rest.len() > 2 * i {
        h = powmod_poly(&h, &pe, &rest, p);
        let g = gcd(&rest, &sub(&h, &x, p), p);
        if !is_one(&g) {
            rest = divrem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
            out.push((g, i));
        }
        i += 1;
    }
    if rest.len() > 1 {
        let d = rest.len() - 1;
        out.push((rest, d));
    }
    out
}

/// Splits a product of distinct irreducibles of degree `d`.
fn equal_degree(f: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.to_vec()];
    }
    loop {
        let a: FpPoly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + … + a^{2^{d-1}}
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = rem(&mul(&t, &t, p), f, p);
                acc = add(&acc, &t, p);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            sub(&powmod_poly(&a, &e, f, p), &[1], p)
        };
        let g = gcd(f, &b, p);
        if g.len() > 1 && g.len() < f.len() {
            let q = monic(divrem(f, &g, p).0, p);
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&q, d, p, rng));
            return out;
        }
    }
}

/// Full factorization of a monic polynomial over `F_p` into monic
/// irreducibles with multiplicities, sorted by degree then coefficients.
pub(crate) fn factor(f: &[u64], p: u64) -> Vec<(FpPoly, u32)> {
    let f = monic(trim(f.to_vec()), p);
    if f.len() <= 1 {
        return vec![];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut out = Vec::new();
    for (sf, m) in squarefree(&f, p) {
        for (g, d) in distinct_degree(&sf, p) {
            for h in equal_degree(&g, d, p, &mut rng) {
                out.push((monic(h, p), m));
            }
        }
    }
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.iter().rev().cmp(b.0.iter().rev())));
    out
}
