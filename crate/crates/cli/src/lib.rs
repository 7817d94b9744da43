//! Command-line front end for `compoly`: expression parsing, command
//! dispatch and text/JSON rendering.

pub mod parse;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use compoly::{
    composed_mul_uni, composed_seeded, composed_sum_uni, decompose_uni, expand_branches_seeded, homog_compose, homog_decompose,
    is_associate, membership, BiOp, DiamondKind, Field, HomogeneousElement, Q64,
};
use thiserror::Error;

pub use parse::{parse_bivariate, parse_expr, parse_univariate, PolyExpr};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("not a polynomial at line {line}, column {col}: {msg}")]
    NonPolynomial { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Domain(#[from] compoly::Error),
    #[error("cannot write output: {0}")]
    Io(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Factored,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Add,
    Mul,
}

/// A field together with the flag text that named it.
#[derive(Clone, Debug)]
pub struct FieldArg {
    pub field: Field,
    pub label: String,
}

/// Parse `rational`, `cyclo:N` or `finite:p[:e]`.
pub fn parse_field(s: &str) -> Result<FieldArg, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |t: &str| t.parse::<u64>().map_err(|_| format!("invalid number '{t}' in field '{s}'"));
    let field = match parts.as_slice() {
        ["rational"] => Field::rational(),
        ["cyclo", n] => {
            let n = u32::try_from(num(n)?).map_err(|_| format!("cyclotomic order too large in '{s}'"))?;
            Field::cyclotomic(n).map_err(|e| e.to_string())?
        }
        ["finite", p] => Field::finite(num(p)?, 1).map_err(|e| e.to_string())?,
        ["finite", p, e] => {
            let e = u32::try_from(num(e)?).map_err(|_| format!("extension degree too large in '{s}'"))?;
            Field::finite(num(p)?, e).map_err(|e| e.to_string())?
        }
        _ => return Err(format!("unknown field '{s}' (expected rational, cyclo:N or finite:p[:e])")),
    };
    Ok(FieldArg { field, label: s.to_string() })
}

/// Parse a positive rational truncation order such as `2` or `63/24`.
pub fn parse_trunc(s: &str) -> Result<Q64, String> {
    let t: Q64 = s.trim().parse().map_err(|_| format!("invalid truncation '{s}'"))?;
    if t <= Q64::from_integer(0) {
        return Err(format!("truncation must be positive, got {s}"));
    }
    Ok(t)
}

#[derive(Debug, Parser)]
#[command(name = "compoly", version, about = "Composed sums and products of polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Coefficient field: rational, cyclo:N or finite:p[:e].
    #[arg(long, global = true, default_value = "rational", value_parser = parse_field)]
    pub field: FieldArg,
    /// Truncation order T (series are computed modulo x^T).
    #[arg(long, global = true, default_value = "4", value_parser = parse_trunc)]
    pub trunc: Q64,
    /// Seed for randomised root finding; COMPOLY_SEED overrides it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Newton-Puiseux branches of a polynomial monic in y.
    Expand {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Composed sum of two bivariate polynomials.
    Csum {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Composed multiplication of two bivariate polynomials.
    Cmul {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Composed product (branch substitution) of two bivariate polynomials.
    Cprod {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Composed sum of two univariate polynomials.
    UniCsum {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Composed multiplication of two univariate polynomials.
    UniCmul {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Decompose an irreducible polynomial over a finite field.
    UniDecompose {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, value_enum, default_value_t = KindArg::Mul)]
        kind: KindArg,
    },
    /// Compose two homogeneous polynomials.
    HomogCompose {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Decompose a homogeneous polynomial into coprime-degree factors.
    HomogDecompose {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Decide whether two homogeneous polynomials are associates.
    AssociateCheck {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Classify a bivariate polynomial against M_h and M_h,min.
    Membership {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

/// Run one invocation. `argv[0]` is the program name; `env_seed` is the
/// value of `COMPOLY_SEED`, if set.
pub fn run_command<I, S>(argv: I, env_seed: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let mut cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let msg = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(msg),
                _ => Outcome::fail(2, msg),
            };
        }
    };
    if let Some(s) = env_seed {
        match s.trim().parse() {
            Ok(v) => cli.seed = v,
            Err(_) => return Outcome::fail(2, format!("error: COMPOLY_SEED must be a nonnegative integer, got '{s}'\n")),
        }
    }
    let text = match execute(&cli) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(1, format!("error: {e}\n")),
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::fail(1, format!("error: {}\n", CliError::Io(e.to_string()))),
        },
        None => Outcome::ok(text),
    }
}

/// Execute a parsed command and render its result, newline-terminated.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let k = &cli.field.field;
    let fmt = cli.format;
    let bi = |s: &str| parse_bivariate(s, k);
    let uni = |s: &str| parse_univariate(s, k);
    let homog = |s: &str| -> Result<HomogeneousElement, CliError> { Ok(HomogeneousElement::new(bi(s)?)?) };
    let composed = |op: BiOp, f: &str, g: &str| -> Result<String, CliError> {
        let r = composed_seeded(op, &bi(f)?, &bi(g)?, cli.trunc, cli.seed)?;
        Ok(render::composed(&r, &cli.field.label, fmt))
    };
    let out = match &cli.command {
        Command::Expand { f } => {
            let mut bs = expand_branches_seeded(&bi(f)?, cli.trunc, cli.seed)?;
            bs.sort();
            render::branches(&bs, cli.trunc, fmt)
        }
        Command::Csum { f, g } => composed(BiOp::Sum, f, g)?,
        Command::Cmul { f, g } => composed(BiOp::Mul, f, g)?,
        Command::Cprod { f, g } => composed(BiOp::Product, f, g)?,
        Command::UniCsum { f, g } => render::univariate(&composed_sum_uni(&uni(f)?, &uni(g)?)?, fmt),
        Command::UniCmul { f, g } => render::univariate(&composed_mul_uni(&uni(f)?, &uni(g)?)?, fmt),
        Command::UniDecompose { f, kind } => {
            let kind = match kind {
                KindArg::Add => DiamondKind::Addition,
                KindArg::Mul => DiamondKind::Multiplication,
            };
            render::decomposition(&decompose_uni(&uni(f)?, kind)?, fmt)
        }
        Command::HomogCompose { f, g } => render::homogeneous(&homog_compose(&homog(f)?, &homog(g)?)?, fmt),
        Command::HomogDecompose { f } => render::homog_decomposition(&homog_decompose(&homog(f)?)?, fmt),
        Command::AssociateCheck { f, g } => render::associate(is_associate(&homog(f)?, &homog(g)?)?.as_ref(), fmt),
        Command::Membership { f } => render::membership(&membership(&bi(f)?)?, fmt),
    };
    Ok(out)
}
