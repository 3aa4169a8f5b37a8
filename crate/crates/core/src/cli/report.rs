//! Canonical text output, and parsing of printed bases back into objects.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::CliError;
use crate::mpoly::{parse_poly, PolyRing};
use crate::numberfield::{FracIdeal, NumberField, PrimeIdeal};
use crate::pseudo::{PseudoBasis, PseudoPoly};
use crate::zlinalg::IntMat;

/// Header lines describing the ring.
pub fn ring_block(ring: &PolyRing) -> String {
    let m: Vec<String> = ring.field().minpoly().iter().map(|c| c.to_string()).collect();
    format!(
        "field: minpoly = [{}]\nring: vars = [{}], order = {}\n",
        m.join(", "),
        ring.names().join(", "),
        ring.order()
    )
}

/// One `poly:` / `ideal:` line pair per element.
pub fn basis_block(label: &str, g: &PseudoBasis) -> String {
    let mut out = format!("{label}: {} elements\n", g.len());
    for p in g.iter() {
        writeln!(out, "  poly: {}", p.poly()).unwrap();
        writeln!(out, "  ideal: {}", p.ideal()).unwrap();
    }
    out
}

pub fn factorization_block(fact: &[(PrimeIdeal, u32)]) -> String {
    let mut out = format!("factorization: {} primes\n", fact.len());
    for (p, k) in fact {
        writeln!(out, "  {p}^{k}  (p = {}, e = {}, f = {})", p.p, p.e, p.f).unwrap();
    }
    out
}

fn bad(s: &str) -> CliError {
    CliError::Parse(format!("malformed ideal {s:?}"))
}

/// Parses `ideal(den=<q>; rows=[[...],...])` as printed for ideals.
pub fn parse_ideal(field: &NumberField, s: &str) -> Result<FracIdeal, CliError> {
    let body = s
        .trim()
        .strip_prefix("ideal(den=")
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| bad(s))?;
    let (den, rows) = body.split_once(';').ok_or_else(|| bad(s))?;
    let den: BigInt = den.trim().parse().map_err(|_| bad(s))?;
    let rows = rows
        .trim()
        .strip_prefix("rows=[")
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| bad(s))?;
    let mut data = Vec::new();
    for row in rows.split("],") {
        let row = row.trim().trim_start_matches('[').trim_end_matches(']');
        let parsed: Vec<BigInt> = row
            .split(',')
            .map(|v| v.trim().parse().map_err(|_| bad(s)))
            .collect::<Result<_, _>>()?;
        data.push(parsed);
    }
    let d = field.degree();
    if data.iter().any(|r| r.len() != d) {
        return Err(bad(s));
    }
    let mat = IntMat::from_rows(d, data);
    FracIdeal::from_hnf(field, mat, den).map_err(|e| CliError::Parse(e.to_string()))
}

/// Reads the `poly:` / `ideal:` pairs of a printed basis.
pub fn parse_basis(ring: &PolyRing, text: &str) -> Result<PseudoBasis, CliError> {
    let mut out = PseudoBasis::new(ring);
    let mut pending = None;
    for line in text.lines().map(str::trim) {
        if let Some(p) = line.strip_prefix("poly:") {
            let poly = parse_poly(ring, p).map_err(|e| CliError::Parse(e.to_string()))?;
            pending = Some(poly);
        } else if let Some(i) = line.strip_prefix("ideal:") {
            let poly = pending
                .take()
                .ok_or_else(|| CliError::Parse("ideal line without a poly line".into()))?;
            let ideal = parse_ideal(ring.field(), i)?;
            let p = PseudoPoly::new(poly, ideal).map_err(|e| CliError::Parse(e.to_string()))?;
            out.push(p).map_err(|e| CliError::Parse(e.to_string()))?;
        }
    }
    if pending.is_some() {
        return Err(CliError::Parse("poly line without an ideal line".into()));
    }
    Ok(out)
}
