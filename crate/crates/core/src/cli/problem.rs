//! Problem files: a TOML document with `[field]`, `[ring]`,
//! `[[generators]]`, and optional `[scheme]` and `[options]` tables.
//!
//! ```toml
//! [field]
//! minpoly = [-10, 0, 1]        # ascending, monic
//!
//! [ring]
//! vars = ["x", "y"]
//! order = "degrevlex"
//!
//! [[generators]]
//! poly = "y^2 - x^3 - (1728*a+3348)*x - (44928*a-324432)"
//! coeff_ideal = ["1"]          # generators of 𝔣; omitted means R
//!
//! [scheme]
//! dim = 1
//!
//! [options]
//! product_criterion = true
//! conductor = "auto"           # auto | off | <element>
//! factor_bound = 1000
//! ```

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

use super::CliError;
use crate::mpoly::{parse_elem, parse_poly, MonomialOrder, PolyRing};
use crate::numberfield::{FieldElem, FracIdeal, NumberField};
use crate::pseudo::{PseudoBasis, PseudoPoly};

/// An integer or rational literal; strings allow values beyond `i64`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn rational(&self) -> Result<BigRational, CliError> {
        match self {
            Num::Int(n) => Ok(BigRational::from_integer((*n).into())),
            Num::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("bad number {s:?}"))),
        }
    }

    fn integer(&self) -> Result<BigInt, CliError> {
        let q = self.rational()?;
        if !q.is_integer() {
            return Err(CliError::Parse(format!("expected an integer, found {q}")));
        }
        Ok(q.to_integer())
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSection {
    minpoly: Vec<Num>,
    basis: Option<Vec<Vec<Num>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingSection {
    vars: Vec<String>,
    order: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorEntry {
    poly: String,
    #[serde(default)]
    coeff_ideal: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeSection {
    dim: usize,
}

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileOptions {
    pub product_criterion: Option<bool>,
    pub conductor: Option<String>,
    pub factor_bound: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    field: FieldSection,
    ring: RingSection,
    #[serde(default)]
    generators: Vec<GeneratorEntry>,
    scheme: Option<SchemeSection>,
    #[serde(default)]
    options: FileOptions,
}

/// A parsed and validated problem.
#[derive(Debug, Clone)]
pub struct Problem {
    pub ring: PolyRing,
    pub generators: PseudoBasis,
    pub dim: Option<usize>,
    pub options: FileOptions,
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_error(what: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("{what}: {e}"))
}

/// Parses the generators of an ideal of `R`; an empty list means `R`.
pub fn parse_ideal_gens(field: &NumberField, gens: &[String]) -> Result<FracIdeal, CliError> {
    if gens.is_empty() {
        return Ok(field.unit_ideal());
    }
    let elems = gens
        .iter()
        .map(|g| parse_elem(field, g).map_err(|e| parse_error(g, e)))
        .collect::<Result<Vec<FieldElem>, _>>()?;
    FracIdeal::from_generators(field, &elems).map_err(|e| parse_error("coefficient ideal", e))
}

impl Problem {
    pub fn load(path: &Path, order: Option<MonomialOrder>) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text, order)
    }

    /// Parses problem text; `order` overrides the file's monomial order.
    pub fn parse(text: &str, order: Option<MonomialOrder>) -> Result<Self, CliError> {
        let raw: RawProblem = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;

        let minpoly = raw
            .field
            .minpoly
            .iter()
            .map(Num::integer)
            .collect::<Result<Vec<_>, _>>()?;
        let field = match &raw.field.basis {
            None => NumberField::new(minpoly),
            Some(rows) => {
                let basis = rows
                    .iter()
                    .map(|r| r.iter().map(Num::rational).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                NumberField::with_basis(minpoly, basis)
            }
        }
        .map_err(|e| parse_error("field", e))?;

        let vars = &raw.ring.vars;
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) || v == "a" || vars[..i].contains(v) {
                return Err(CliError::Parse(format!("bad variable name {v:?}")));
            }
        }
        let order = match order {
            Some(o) => o,
            None => match &raw.ring.order {
                Some(s) => s.parse().map_err(CliError::Parse)?,
                None => MonomialOrder::DegRevLex,
            },
        };
        if let MonomialOrder::Elim(k) = order {
            if k > vars.len() {
                return Err(CliError::Parse(format!("elim:{k} exceeds {} variables", vars.len())));
            }
        }
        let ring = PolyRing::with_names(&field, vars.clone(), order);

        let mut generators = PseudoBasis::new(&ring);
        for g in &raw.generators {
            let poly = parse_poly(&ring, &g.poly).map_err(|e| parse_error(&g.poly, e))?;
            let ideal = parse_ideal_gens(&field, &g.coeff_ideal)?;
            let p = PseudoPoly::new(poly, ideal).map_err(|e| parse_error(&g.poly, e))?;
            if !p.is_zero() {
                generators.push(p).map_err(|e| parse_error(&g.poly, e))?;
            }
        }

        Ok(Problem {
            ring,
            generators,
            dim: raw.scheme.map(|s| s.dim),
            options: raw.options,
        })
    }
}
