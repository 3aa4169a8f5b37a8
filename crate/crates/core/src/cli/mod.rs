//! Command-line front end. Exit codes: 0 on success, 1 on domain errors,
//! 2 on parse and usage errors.

mod problem;
mod report;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{ArgAction, Parser, Subcommand};
use thiserror::Error;

pub use problem::{parse_ideal_gens, FileOptions, Problem};
pub use report::{parse_basis, parse_ideal};

use crate::apps::{
    bad_primes, constant_part, find_conductor_ideal, ideal_intersection, AffineScheme, AppError, IdealContext,
};
use crate::mpoly::{parse_elem, parse_poly, MonomialOrder, PolyError};
use crate::numberfield::{factor_ideal, FracIdeal, NfError};
use crate::pseudo::{
    buchberger, strong_basis, BuchbergerOptions, PseudoBasis, PseudoError, PseudoPoly, DEFAULT_SUBSET_CAP,
};

const DEFAULT_BOUND: u64 = 1000;

/// Errors raised by the command layer itself.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommandError {
    #[error("conductor ideal is not contained in the input ideal")]
    ConductorNotInIdeal,
    #[error("the two problems use different rings")]
    RingMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Domain { name: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain { .. } => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Domain { name, message } => write!(f, "error[{name}]: {message}"),
        }
    }
}

fn domain<E: fmt::Debug + fmt::Display>(module: &str, e: E) -> CliError {
    let dbg = format!("{e:?}");
    let variant = dbg.split(['(', ' ', '{']).next().unwrap_or_default();
    CliError::Domain {
        name: format!("{module}::{variant}"),
        message: e.to_string(),
    }
}

impl From<NfError> for CliError {
    fn from(e: NfError) -> Self {
        domain("NfError", e)
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        domain("PolyError", e)
    }
}

impl From<PseudoError> for CliError {
    fn from(e: PseudoError) -> Self {
        match e {
            PseudoError::Field(e) => e.into(),
            PseudoError::Poly(e) => e.into(),
            e => domain("PseudoError", e),
        }
    }
}

impl From<AppError> for CliError {
    fn from(e: AppError) -> Self {
        match e {
            AppError::Field(e) => e.into(),
            AppError::Poly(e) => e.into(),
            AppError::Pseudo(e) => e.into(),
            e => domain("AppError", e),
        }
    }
}

impl From<CommandError> for CliError {
    fn from(e: CommandError) -> Self {
        domain("CommandError", e)
    }
}

#[derive(Debug, Parser)]
#[command(name = "pseudogb", version, about = "Pseudo-Gröbner bases over rings of integers")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Monomial order: lex, degrevlex or elim:<k>; overrides the file.
    #[arg(long, global = true, value_parser = parse_order)]
    order: Option<MonomialOrder>,

    /// Disable the product criterion.
    #[arg(long, global = true)]
    no_product_criterion: bool,

    /// Coefficient reduction: auto, off, or an element of ⟨F⟩ ∩ R.
    #[arg(long, global = true)]
    conductor: Option<String>,

    /// Trial division bound for factoring ideals.
    #[arg(long, global = true)]
    bound: Option<u64>,

    /// Normalize basis elements to leading coefficient 1.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set)]
    canonical: bool,
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a pseudo-Gröbner basis.
    Groebner { file: PathBuf },
    /// Compute a strong pseudo-Gröbner basis.
    StrongGroebner { file: PathBuf },
    /// Decide membership of a pseudo-polynomial in the ideal.
    Member {
        file: PathBuf,
        #[arg(long)]
        poly: String,
        /// Comma separated generators of the coefficient ideal.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Intersect the ideals of two problem files over the same ring.
    Intersect { file1: PathBuf, file2: PathBuf },
    /// Compute the contraction I ∩ R.
    Contract { file: PathBuf },
    /// Primes of bad reduction of the scheme in the file.
    BadPrimes { file: PathBuf },
    /// Factor an ideal of R, by default I ∩ R.
    FactorIdeal {
        file: PathBuf,
        /// Comma separated generators of the ideal to factor.
        #[arg(long)]
        ideal: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Groebner { .. } => "groebner",
            Command::StrongGroebner { .. } => "strong-groebner",
            Command::Member { .. } => "member",
            Command::Intersect { .. } => "intersect",
            Command::Contract { .. } => "contract",
            Command::BadPrimes { .. } => "bad-primes",
            Command::FactorIdeal { .. } => "factor-ideal",
        }
    }
}

/// Turns on debug tracing of the pair queue when `PSEUDOGB_VERBOSE=1`.
pub fn init_logging() {
    if std::env::var("PSEUDOGB_VERBOSE").is_ok_and(|v| v == "1") {
        env_logger::Builder::new()
            .filter_level(log::LevelFilter::Debug)
            .target(env_logger::Target::Stderr)
            .init();
    }
}

fn split_gens(s: &str) -> Vec<String> {
    s.split(',').map(|g| g.trim().to_string()).filter(|g| !g.is_empty()).collect()
}

struct Session<'a> {
    cli: &'a Cli,
}

impl Session<'_> {
    fn load(&self, file: &PathBuf) -> Result<Problem, CliError> {
        Problem::load(file, self.cli.order)
    }

    fn bound(&self, p: &Problem) -> u64 {
        self.cli.bound.or(p.options.factor_bound).unwrap_or(DEFAULT_BOUND)
    }

    fn options(&self, p: &Problem) -> Result<BuchbergerOptions, CliError> {
        let f = &p.generators;
        let product = !self.cli.no_product_criterion && p.options.product_criterion.unwrap_or(true);
        let choice = self
            .cli
            .conductor
            .clone()
            .or_else(|| p.options.conductor.clone())
            .unwrap_or_else(|| "auto".into());
        let conductor = match choice.trim() {
            "auto" => find_conductor_ideal(f),
            "off" => None,
            s => {
                let field = p.ring.field();
                let x = parse_elem(field, s).map_err(|e| CliError::Parse(format!("{s}: {e}")))?;
                if x.is_zero() || !x.is_integral() {
                    return Err(CliError::Parse(format!("conductor {s} must be a non-zero integral element")));
                }
                let n = FracIdeal::principal(&x)?;
                let plain = BuchbergerOptions {
                    use_product_criterion: product,
                    ..Default::default()
                };
                let one = PseudoPoly::new(p.ring.one(), n.clone())?;
                if !IdealContext::new(f, &plain).contains(&one) {
                    return Err(CommandError::ConductorNotInIdeal.into());
                }
                Some(n)
            }
        };
        Ok(BuchbergerOptions {
            use_product_criterion: product,
            conductor,
            canonicalize: self.cli.canonical,
        })
    }

    fn groebner(&self, p: &Problem) -> Result<PseudoBasis, CliError> {
        Ok(buchberger(&p.generators, &self.options(p)?))
    }

    fn contraction(&self, p: &Problem) -> Result<FracIdeal, CliError> {
        let gb = self.groebner(p)?;
        Ok(constant_part(&gb).ok_or(AppError::ZeroIntersection)?)
    }

    fn run(&self, command: &Command) -> Result<String, CliError> {
        let mut out = String::new();
        match command {
            Command::Groebner { file } => {
                let p = self.load(file)?;
                out += &report::ring_block(&p.ring);
                out += &report::basis_block("basis", &self.groebner(&p)?);
            }
            Command::StrongGroebner { file } => {
                let p = self.load(file)?;
                let strong = strong_basis(&self.groebner(&p)?, DEFAULT_SUBSET_CAP)?;
                out += &report::ring_block(&p.ring);
                out += &report::basis_block("basis", &strong);
            }
            Command::Member { file, poly, ideal } => {
                let p = self.load(file)?;
                let f = parse_poly(&p.ring, poly).map_err(|e| CliError::Parse(format!("{poly}: {e}")))?;
                let gens = ideal.as_deref().map(split_gens).unwrap_or_default();
                let id = parse_ideal_gens(p.ring.field(), &gens)?;
                let member = match PseudoPoly::new(f, id) {
                    Ok(q) => IdealContext::new(&p.generators, &self.options(&p)?).contains(&q),
                    // not even inside R[x]
                    Err(PseudoError::NotIntegral) => false,
                    Err(e) => return Err(e.into()),
                };
                out += &report::ring_block(&p.ring);
                out += &format!("member: {member}\n");
            }
            Command::Intersect { file1, file2 } => {
                let p1 = self.load(file1)?;
                let p2 = self.load(file2)?;
                if p1.ring != p2.ring {
                    return Err(CommandError::RingMismatch.into());
                }
                let g = ideal_intersection(&p1.generators, &p2.generators)?;
                out += &report::ring_block(&p1.ring);
                out += &report::basis_block("intersection", &g);
            }
            Command::Contract { file } => {
                let p = self.load(file)?;
                let n = self.contraction(&p)?;
                out += &report::ring_block(&p.ring);
                out += &format!("intersection: {n}\nnorm: {}\n", n.norm());
            }
            Command::BadPrimes { file } => {
                let p = self.load(file)?;
                let dim = p
                    .dim
                    .ok_or_else(|| CliError::Parse("bad-primes needs a [scheme] section".into()))?;
                let x = AffineScheme::new(p.generators.clone(), dim)?;
                let r = bad_primes(&x, self.bound(&p))?;
                out += &report::ring_block(&p.ring);
                out += &format!("ideal: {}\nnorm: {}\n", r.ideal, r.ideal.norm());
                out += &report::factorization_block(&r.factorization);
            }
            Command::FactorIdeal { file, ideal } => {
                let p = self.load(file)?;
                let a = match ideal {
                    Some(s) => parse_ideal_gens(p.ring.field(), &split_gens(s))?,
                    None => self.contraction(&p)?,
                };
                let fact = factor_ideal(&a, self.bound(&p))?;
                out += &report::ring_block(&p.ring);
                out += &format!("ideal: {a}\nnorm: {}\n", a.norm());
                out += &report::factorization_block(&fact);
            }
        }
        Ok(out)
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let start = Instant::now();
    let echo = match &cli.command {
        Command::Intersect { file1, file2 } => format!("{} {} {}", cli.command.name(), file1.display(), file2.display()),
        Command::Groebner { file }
        | Command::StrongGroebner { file }
        | Command::Member { file, .. }
        | Command::Contract { file }
        | Command::BadPrimes { file }
        | Command::FactorIdeal { file, .. } => format!("{} {}", cli.command.name(), file.display()),
    };
    match (Session { cli: &cli }).run(&cli.command) {
        Ok(body) => {
            let _ = writeln!(out, "command: {echo}");
            let _ = write!(out, "{body}");
            let _ = writeln!(out, "time: {:.3}s", start.elapsed().as_secs_f64());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
