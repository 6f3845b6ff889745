//! Command-line front end. [`run`] takes the argument vector and the two
//! output streams and returns the process exit code: 0 on success, 1 when a
//! verification or generating-function self-check fails, 2 on usage errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::coefficients::row_window;
use crate::genfun::{carlitz_gf, column_gf, pk_by_recurrence, ColumnSign};
use crate::identities::{self, IdentityReport, Profile, NUMERIC_IDS};
use crate::scalar::rat_to_int;
use crate::{coeff, CoeffKey, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "polycoeff",
    version,
    about = "Exact polynomial coefficients <n,k>_m = [t^k] (1 + t + ... + t^m)^n"
)]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one coefficient <n,k>_m.
    Coeff {
        #[arg(short = 'n', allow_negative_numbers = true)]
        n: i64,
        #[arg(short = 'k', allow_negative_numbers = true)]
        k: i64,
        #[arg(short = 'm', allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Print rows of the coefficient array.
    Table {
        #[arg(short = 'm', allow_negative_numbers = true)]
        m: i64,
        /// Inclusive row range `a..b`, e.g. `-3..3`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        rows: (i64, i64),
        /// Last column index.
        #[arg(long)]
        kmax: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
    /// Expand a generating function.
    Genfun(GenfunArgs),
    /// Run identity checks: an id, `all`, or `numeric`.
    Verify {
        selector: String,
        #[arg(long, default_value = "quick", value_parser = parse_profile)]
        profile: Profile,
        #[arg(long, value_enum, default_value = "plain")]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenfunKind {
    #[value(name = "column+")]
    ColumnPlus,
    #[value(name = "column-")]
    ColumnMinus,
    Carlitz,
    Pk,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct GenfunArgs {
    #[arg(value_enum)]
    pub kind: GenfunKind,
    #[arg(short = 'k')]
    pub k: Option<i64>,
    #[arg(short = 'm')]
    pub m: i64,
    #[arg(short = 'a')]
    pub a: Option<i64>,
    #[arg(short = 'b')]
    pub b: Option<i64>,
    #[arg(long)]
    pub terms: Option<usize>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: OutputFormat,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: i64 = a
        .trim()
        .parse()
        .map_err(|e| format!("bad range start {a:?}: {e}"))?;
    let b: i64 = b
        .trim()
        .parse()
        .map_err(|e| format!("bad range end {b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

fn parse_profile(s: &str) -> Result<Profile, String> {
    s.parse()
}

struct Usage(String);

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        Command::Coeff { n, k, m, format } => cmd_coeff(n, k, m, format, out),
        Command::Table {
            m,
            rows,
            kmax,
            format,
        } => cmd_table(m, rows, kmax, format, out),
        Command::Genfun(args) => cmd_genfun(&args, out, err),
        Command::Verify {
            selector,
            profile,
            format,
        } => cmd_verify(&selector, profile, format, out),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "run `polycoeff --help` for usage");
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Usage {
    Usage(format!("write failed: {e}"))
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

fn cmd_coeff(
    n: i64,
    k: i64,
    m: i64,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<i32, Usage> {
    let key = CoeffKey::new(n, k, m).map_err(|e| Usage(e.to_string()))?;
    let value = coeff(key).to_string();
    match format {
        OutputFormat::Plain => writeln!(out, "{value}"),
        OutputFormat::Json => writeln!(out, "{}", json!({"n": n, "k": k, "m": m, "value": value})),
        OutputFormat::Csv => writeln!(out, "n,k,m,value\n{n},{k},{m},{value}"),
    }
    .map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_table(
    m: i64,
    (lo, hi): (i64, i64),
    kmax: usize,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<i32, Usage> {
    if m < 1 {
        return Err(Usage(format!("m must be at least 1, got {m}")));
    }
    let rows: Vec<(i64, Vec<BigInt>)> =
        (lo..=hi).map(|n| (n, row_window(n, m, kmax + 1))).collect();
    match format {
        OutputFormat::Csv => {
            let header: Vec<String> = (0..=kmax).map(|k| format!("k{k}")).collect();
            writeln!(out, "n,{}", header.join(",")).map_err(io)?;
            for (n, r) in &rows {
                writeln!(out, "{n},{}", strings(r).join(",")).map_err(io)?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(n, r)| json!({"n": n, "coeffs": strings(r)}))
                .collect();
            writeln!(out, "{}", json!({"m": m, "rows": rows})).map_err(io)?;
        }
        OutputFormat::Plain => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|(n, r)| std::iter::once(n.to_string()).chain(strings(r)).collect())
                .collect();
            let header: Vec<String> = std::iter::once("n".to_string())
                .chain((0..=kmax).map(|k| format!("k={k}")))
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|j| {
                    cells
                        .iter()
                        .map(|c| c[j].len())
                        .chain([header[j].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for line in std::iter::once(&header).chain(cells.iter()) {
                let padded: Vec<String> = line
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                writeln!(out, "{}", padded.join(" ")).map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn require<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Usage> {
    value.ok_or_else(|| Usage(format!("genfun {kind} needs {flag}")))
}

fn cmd_genfun(args: &GenfunArgs, out: &mut impl Write, err: &mut impl Write) -> Result<i32, Usage> {
    if args.m < 1 {
        return Err(Usage(format!("m must be at least 1, got {}", args.m)));
    }
    let kind = args
        .kind
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let terms = || -> Result<usize, Usage> {
        match args.terms {
            Some(0) => Err(Usage("--terms must be positive".into())),
            t => require(t, "--terms", &kind),
        }
    };
    let column_k = || -> Result<usize, Usage> {
        let k = require(args.k, "-k", &kind)?;
        usize::try_from(k).map_err(|_| Usage(format!("-k must be non-negative, got {k}")))
    };
    let outcome: crate::Result<Vec<BigInt>> = match args.kind {
        GenfunKind::ColumnPlus | GenfunKind::ColumnMinus => {
            let sign = if args.kind == GenfunKind::ColumnPlus {
                ColumnSign::Positive
            } else {
                ColumnSign::Negative
            };
            let (k, terms) = (column_k()?, terms()?);
            column_gf(k, args.m, sign, terms - 1).map(|g| g.series.into_coeffs())
        }
        GenfunKind::Carlitz => {
            let a = require(args.a, "-a", &kind)?;
            let b = require(args.b, "-b", &kind)?;
            let terms = terms()?;
            carlitz_gf(a, b, args.m, terms - 1).map(|s| {
                s.coeffs()
                    .iter()
                    .map(|c| rat_to_int(c).expect("Carlitz coefficients are integers"))
                    .collect()
            })
        }
        GenfunKind::Pk => {
            let k = require(args.k, "-k", &kind)?;
            if k < 0 {
                return Err(Usage(format!("-k must be non-negative, got {k}")));
            }
            let p = pk_by_recurrence(args.m, k).map_err(|e| Usage(e.to_string()))?;
            match args.format {
                OutputFormat::Plain => writeln!(out, "{p}").map_err(io)?,
                OutputFormat::Json => {
                    writeln!(out, "{}", json!(strings(p.coeffs()))).map_err(io)?
                }
                OutputFormat::Csv => {
                    writeln!(out, "{}", strings(p.coeffs()).join(",")).map_err(io)?
                }
            }
            return Ok(EXIT_OK);
        }
    };
    let values = match outcome {
        Ok(v) => v,
        Err(e @ Error::Mismatch(_)) => {
            let _ = writeln!(err, "self-check failed: {e}");
            return Ok(EXIT_FAILURE);
        }
        Err(e) => return Err(Usage(e.to_string())),
    };
    match args.format {
        OutputFormat::Json => writeln!(out, "{}", json!(strings(&values))),
        OutputFormat::Plain | OutputFormat::Csv => writeln!(out, "{}", strings(&values).join(",")),
    }
    .map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    selector: &str,
    profile: Profile,
    format: OutputFormat,
    out: &mut impl Write,
) -> Result<i32, Usage> {
    let reports: Vec<IdentityReport> = match selector {
        "all" => {
            let mut r = identities::run_suite(profile);
            r.extend(identities::run_numeric_suite());
            r
        }
        "numeric" => identities::run_numeric_suite(),
        id => {
            if let Some(spec) = identities::find(id) {
                vec![identities::run_identity(&spec, profile)]
            } else if let Some(r) = identities::run_numeric(id) {
                vec![r]
            } else {
                let known: Vec<&str> = identities::registry()
                    .iter()
                    .map(|s| s.id)
                    .chain(NUMERIC_IDS)
                    .collect();
                return Err(Usage(format!(
                    "unknown selector {id:?}; expected all, numeric or one of {}",
                    known.join(", ")
                )));
            }
        }
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match format {
        OutputFormat::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&reports).expect("reports serialize")
        )
        .map_err(io)?,
        OutputFormat::Csv => {
            writeln!(out, "id,checked,failures").map_err(io)?;
            for r in &reports {
                writeln!(out, "{},{},{}", r.id, r.checked, r.failures.len()).map_err(io)?;
            }
        }
        OutputFormat::Plain => {
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{status} {:<14} checked={:<7} failures={:<5} {}",
                    r.id,
                    r.checked,
                    r.failures.len(),
                    r.grid
                )
                .map_err(io)?;
                for f in r.failures.iter().take(5) {
                    writeln!(out, "    at {}: lhs={} rhs={}", f.params, f.lhs, f.rhs)
                        .map_err(io)?;
                }
            }
            writeln!(
                out,
                "{} checks, {} failed (profile {})",
                reports.len(),
                failed,
                profile.name()
            )
            .map_err(io)?;
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("polycoeff").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn coeff_examples() {
        assert_eq!(
            call(&["coeff", "-n", "3", "-k", "4", "-m", "3"]),
            (0, "12\n".into(), String::new())
        );
        assert_eq!(call(&["coeff", "-n", "-2", "-k", "5", "-m", "3"]).1, "-4\n");
        assert_eq!(call(&["coeff", "-n", "5", "-k", "-1", "-m", "2"]).1, "0\n");
        let (code, out, _) = call(&["coeff", "-n", "3", "-k", "4", "-m", "3", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"k\":4,\"m\":3,\"n\":3,\"value\":\"12\"}\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["coeff", "-n", "3", "-k", "4", "-m", "0"]).0, 2);
        assert_eq!(call(&["coeff", "-n", "x", "-k", "4", "-m", "2"]).0, 2);
        assert_eq!(
            call(&["table", "-m", "2", "--rows", "3..1", "--kmax", "4"]).0,
            2
        );
        assert_eq!(call(&["genfun", "carlitz", "-m", "2", "--terms", "3"]).0, 2);
        let (code, _, err) = call(&["verify", "NOPE"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown selector"));
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn table_formats() {
        let (code, out, _) = call(&[
            "table", "-m", "3", "--rows", "-1..0", "--kmax", "9", "--format", "csv",
        ]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "n,k0,k1,k2,k3,k4,k5,k6,k7,k8,k9\n-1,1,-1,0,0,1,-1,0,0,1,-1\n0,1,0,0,0,0,0,0,0,0,0\n"
        );
        let (_, out, _) = call(&[
            "table", "-m", "3", "--rows", "-1..-1", "--kmax", "3", "--format", "json",
        ]);
        assert_eq!(
            out,
            "{\"m\":3,\"rows\":[{\"coeffs\":[\"1\",\"-1\",\"0\",\"0\"],\"n\":-1}]}\n"
        );
    }

    #[test]
    fn genfun_examples() {
        let (_, out, _) = call(&[
            "genfun", "carlitz", "-a", "0", "-b", "1", "-m", "2", "--terms", "6",
        ]);
        assert_eq!(out, "1,1,3,7,19,51\n");
        assert_eq!(
            call(&["genfun", "pk", "-m", "2", "-k", "3"]).1,
            "2x^2 - x^3\n"
        );
        assert_eq!(
            call(&["genfun", "pk", "-m", "2", "-k", "3", "--format", "json"]).1,
            "[\"0\",\"0\",\"2\",\"-1\"]\n"
        );
        assert_eq!(
            call(&["genfun", "column+", "-k", "0", "-m", "2", "--terms", "4"]).1,
            "1,1,1,1\n"
        );
        assert_eq!(
            call(&["genfun", "column-", "-k", "1", "-m", "2", "--terms", "4"]).1,
            "0,-1,-2,-3\n"
        );
    }

    #[test]
    fn verify_single() {
        let (code, out, _) = call(&["verify", "ID3", "--profile", "quick"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("PASS ID3"));
    }
}
