//! The `hermops` command line: `gen` prints polynomials, `check` runs
//! identity checks. Exit status is 0 on success, 1 when a must-pass check
//! fails, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hermite::{
    bivariate_hermite, hermite_e, laguerre_rodrigues, legendre_rodrigues, u_poly_with, Convention,
    LambdaForm,
};
use crate::polyspace::GradedSpace;
use crate::scalar::{validate_precision, Scalar};
use crate::sl2::Family;
use crate::verify::{self, tolerance_exp10, CheckConfig, Theorem1Variant, CHECKS};
use crate::weyl::Poly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hermops",
    version,
    about = "Hermite operator calculus and sl(2) identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a polynomial with exact rational coefficients.
    Gen {
        kind: GenKind,
        #[command(flatten)]
        common: Common,
    },
    /// Run an identity check (or `all`) and print its reports.
    Check {
        /// Check id; see --list.
        id: Option<String>,
        /// List check ids with the identity each one tests.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, env = "HERMOPS_PRECISION", default_value_t = crate::scalar::DEFAULT_PRECISION)]
        precision: u32,
        #[arg(long, value_parser = parse_variant)]
        variant: Option<Theorem1Variant>,
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        #[arg(long, value_parser = parse_scalar)]
        alpha: Option<Scalar>,
        /// Ladder dimension.
        #[arg(long)]
        dim: Option<usize>,
        /// Float tolerance, as `1e-k` or an exact rational.
        #[arg(long, value_parser = parse_tolerance)]
        tolerance: Option<Scalar>,
        #[arg(long, default_value_t = 12)]
        max_n: u32,
        #[arg(long, default_value_t = 6)]
        max_nm: u32,
    },
}

#[derive(clap::Args, Debug)]
struct Common {
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// `sqrt_a,b,sqrt_c` as exact rationals; requires ac - b^2 > 0.
    #[arg(long, value_parser = parse_lambda)]
    lambda: Option<LambdaForm>,
    #[arg(long, value_enum, default_value_t = ConventionArg::NWithX)]
    convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Hermite,
    Bivariate,
    Legendre,
    Laguerre,
    UPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    NWithX,
    MWithX,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::NWithX => Convention::NWithX,
            ConventionArg::MWithX => Convention::MWithX,
        }
    }
}

fn parse_lambda(s: &str) -> std::result::Result<LambdaForm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_scalar(s: &str) -> std::result::Result<Scalar, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_tolerance(s: &str) -> std::result::Result<Scalar, String> {
    if let Some(k) = s.strip_prefix("1e-") {
        return k
            .parse::<u32>()
            .map(tolerance_exp10)
            .map_err(|_| format!("bad tolerance {s:?}"));
    }
    parse_scalar(s)
}

fn parse_variant(s: &str) -> std::result::Result<Theorem1Variant, String> {
    Theorem1Variant::parse(s).ok_or_else(|| {
        let all: Vec<_> = Theorem1Variant::ALL.iter().map(|v| v.label()).collect();
        format!("unknown variant {s:?}; expected one of {}", all.join(", "))
    })
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    serde_json::from_value(serde_json::Value::String(s.to_string()))
        .map_err(|_| format!("unknown family {s:?}"))
}

#[derive(Serialize)]
struct TermOut {
    xdeg: u32,
    ydeg: u32,
    coeff: String,
}

#[derive(Serialize)]
struct GenOut {
    kind: &'static str,
    params: std::collections::BTreeMap<String, String>,
    terms: Vec<TermOut>,
}

/// Terms from the highest graded-lex position down.
fn ordered_terms(p: &Poly) -> Vec<TermOut> {
    let degree = p.degree().unwrap_or(0);
    let space = GradedSpace::new(p.nvars(), degree).expect("1 or 2 variables");
    let mut terms: Vec<_> = p
        .terms()
        .map(|(&(i, j), c)| {
            (
                space.index(i, j).expect("within degree"),
                i,
                j,
                c.to_string(),
            )
        })
        .collect();
    terms.sort_by_key(|t| std::cmp::Reverse(t.0));
    terms
        .into_iter()
        .map(|(_, xdeg, ydeg, coeff)| TermOut { xdeg, ydeg, coeff })
        .collect()
}

fn cmd_gen(kind: GenKind, c: &Common, out: &mut dyn Write) -> Result<()> {
    let n =
        c.n.ok_or_else(|| Error::InvalidArgument("--n is required".into()))?;
    let m = c.m.unwrap_or(0);
    let lam = c
        .lambda
        .clone()
        .unwrap_or_else(|| LambdaForm::standard_samples()[0].clone());
    let mut params = std::collections::BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    let (name, poly) = match kind {
        GenKind::Hermite => ("hermite", hermite_e(n)),
        GenKind::Legendre => ("legendre", legendre_rodrigues(n)),
        GenKind::Laguerre => ("laguerre", laguerre_rodrigues(n)),
        GenKind::Bivariate | GenKind::UPoly => {
            params.insert("m".into(), m.to_string());
            params.insert("lambda".into(), lam.to_string());
            if matches!(kind, GenKind::Bivariate) {
                ("bivariate", bivariate_hermite(n, m, &lam)?)
            } else {
                let conv: Convention = c.convention.into();
                let label = serde_json::to_value(conv).expect("serializes");
                params.insert(
                    "convention".into(),
                    label.as_str().unwrap_or_default().to_string(),
                );
                ("u-poly", u_poly_with(n, m, &lam, conv))
            }
        }
    };
    let terms = ordered_terms(&poly);
    let io = |e: std::io::Error| Error::InvalidArgument(format!("write failed: {e}"));
    match c.format {
        Format::Json => {
            let doc = GenOut {
                kind: name,
                params,
                terms,
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializes")
            )
            .map_err(io)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let err = |e: csv::Error| Error::InvalidArgument(format!("csv output: {e}"));
            w.write_record(["xdeg", "ydeg", "coeff"]).map_err(err)?;
            for t in terms {
                w.write_record([t.xdeg.to_string(), t.ydeg.to_string(), t.coeff])
                    .map_err(err)?;
            }
            w.flush().map_err(io)?;
        }
        Format::Pretty => writeln!(out, "{poly}").map_err(io)?,
    }
    Ok(())
}

fn list_checks(out: &mut dyn Write) -> std::io::Result<()> {
    let width = CHECKS.iter().map(|c| c.id.len()).max().unwrap_or(0);
    for c in CHECKS {
        writeln!(out, "{:<width$}  {}", c.id, c.description)?;
    }
    writeln!(
        out,
        "{:<width$}  every check above over its default grid",
        "all"
    )
}

/// Runs the CLI on `args` (including the program name), writing to the
/// given streams, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match cli.command {
        Command::Gen { kind, common } => match cmd_gen(kind, &common, out) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Command::Check {
            id,
            list,
            common,
            degree,
            precision,
            variant,
            family,
            alpha,
            dim,
            tolerance,
            max_n,
            max_nm,
        } => {
            if list {
                return match list_checks(out) {
                    Ok(()) => EXIT_OK,
                    Err(_) => EXIT_USAGE,
                };
            }
            let Some(id) = id else {
                let _ = writeln!(err, "error: a check id is required (see --list)");
                return EXIT_USAGE;
            };
            if id != "all" && verify::check_info(&id).is_none() {
                let _ = writeln!(err, "error: unknown check id {id:?} (see --list)");
                return EXIT_USAGE;
            }
            if let Err(e) = validate_precision(precision) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            let config = CheckConfig {
                n: common.n,
                m: common.m,
                lambda: common.lambda,
                alpha,
                degree,
                dim,
                precision,
                tolerance,
                variant,
                family,
                convention: common.convention.into(),
                max_n,
                max_nm,
            };
            let reports = match verify::run_check(&id, &config) {
                Ok(r) => r,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            let written = match common.format {
                Format::Json => {
                    writeln!(out, "{}", verify::to_json(&reports)).map_err(|e| e.to_string())
                }
                Format::Pretty => {
                    write!(out, "{}", verify::to_pretty(&reports)).map_err(|e| e.to_string())
                }
                Format::Csv => verify::write_csv(&reports, &mut *out).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            if verify::all_passed(&reports) {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
    }
}
