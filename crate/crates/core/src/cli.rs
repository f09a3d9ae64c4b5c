//! Command-line front end.
//!
//! [`run`] takes the full argument vector and returns the rendered output
//! together with the exit code, so the binary is a thin wrapper and every
//! subcommand can be exercised in-process.
//!
//! Exit codes: 0 when every tested identity passes, 1 when a verified
//! failure is found, 2 on usage or input errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::analytic::{binet_number, binet_quaternion, binet_spinor, genfunc_spinor_series, ComplexSpinor};
use crate::error::{Error, Result};
use crate::identities::{run_identities, IdentityId, Status, SuiteOptions, VerificationReport, DEFAULT_TOL};
use crate::quaternions::trib_quaternion;
use crate::sequences::{preset, seq_slice, seq_term, SeqParams};
use crate::spinors::trib_spinor;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "tribspin", version, about = "Generalized Tribonacci numbers, quaternions and spinors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone)]
struct ParamArgs {
    /// Named parameter set: tribonacci | third_order_jacobsthal
    #[arg(long, conflicts_with = "params")]
    preset: Option<String>,
    /// Explicit r,s,t,V0,V1,V2 (integers or fractions like 3/2)
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print V_n (or V_n .. V_{n+len-1})
    Term {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(short = 'n', long = "index")]
        index: usize,
        #[arg(long)]
        len: Option<usize>,
    },
    /// Print the Tribonacci quaternion Q_{v,n}
    Quaternion {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(short = 'n', long = "index")]
        index: usize,
    },
    /// Print the Tribonacci spinor A_{v,n}
    Spinor {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(short = 'n', long = "index")]
        index: usize,
    },
    /// Evaluate the Binet formulas at n in floating point
    Binet {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(short = 'n', long = "index")]
        index: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Expand the spinor generating function
    Genfunc {
        #[command(flatten)]
        p: ParamArgs,
        /// Number of series coefficients
        #[arg(long, default_value_t = 16)]
        order: usize,
    },
    /// Verify selected identities
    Verify {
        #[command(flatten)]
        p: ParamArgs,
        /// Identity to check (repeatable); all when omitted
        #[arg(long, value_enum)]
        identity: Vec<IdentityArg>,
        #[arg(long, default_value_t = 50)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Verify every identity
    Suite {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 50)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityArg {
    Recurrence,
    Conjugates,
    Norm,
    Binet,
    Genfunc,
    TripleProduct,
    SpinorMatrix,
    Determinant,
    Summation,
    UDecomposition,
    MatrixPower,
}

impl From<IdentityArg> for IdentityId {
    fn from(a: IdentityArg) -> Self {
        match a {
            IdentityArg::Recurrence => IdentityId::SpinorRecurrence,
            IdentityArg::Conjugates => IdentityId::ConjugateRelations,
            IdentityArg::Norm => IdentityId::NormEquality,
            IdentityArg::Binet => IdentityId::BinetAgreement,
            IdentityArg::Genfunc => IdentityId::GenfuncAgreement,
            IdentityArg::TripleProduct => IdentityId::TripleProductMap,
            IdentityArg::SpinorMatrix => IdentityId::SpinorMatrixBehavior,
            IdentityArg::Determinant => IdentityId::DeterminantCombination,
            IdentityArg::Summation => IdentityId::SummationClosedForm,
            IdentityArg::UDecomposition => IdentityId::UDecomposition,
            IdentityArg::MatrixPower => IdentityId::MatrixPowerShift,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Resolved invocation settings.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub params: SeqParams,
    pub format: OutputFormat,
    pub nmax: usize,
    pub seed: u64,
    pub tol: f64,
}

impl CliConfig {
    fn resolve(p: &ParamArgs) -> Result<Self> {
        let params = match (&p.preset, &p.params) {
            (Some(name), None) => preset(name)?,
            (None, Some(csv)) => SeqParams::parse_csv(csv)?,
            (None, None) => SeqParams::tribonacci(),
            (Some(_), Some(_)) => {
                return Err(Error::InvalidInput("--preset and --params are mutually exclusive".into()))
            }
        };
        Ok(Self {
            params,
            format: if p.json { OutputFormat::Json } else { OutputFormat::Text },
            nmax: 50,
            seed: 0,
            tol: DEFAULT_TOL,
        })
    }

    fn with_tol(mut self, tol: f64) -> Result<Self> {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::InvalidInput(format!("--tol must be a positive number, got {tol}")));
        }
        self.tol = tol;
        Ok(self)
    }

    fn json(&self) -> bool {
        self.format == OutputFormat::Json
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliOutput {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                CliOutput::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => CliOutput::usage(e),
    }
}

fn dispatch(command: Command) -> Result<CliOutput> {
    match command {
        Command::Term { p, index, len } => cmd_term(&CliConfig::resolve(&p)?, index, len),
        Command::Quaternion { p, index } => cmd_quaternion(&CliConfig::resolve(&p)?, index),
        Command::Spinor { p, index } => cmd_spinor(&CliConfig::resolve(&p)?, index),
        Command::Binet { p, index, tol } => cmd_binet(&CliConfig::resolve(&p)?.with_tol(tol)?, index),
        Command::Genfunc { p, order } => cmd_genfunc(&CliConfig::resolve(&p)?, order),
        Command::Verify { p, identity, nmax, seed, tol } => {
            let cfg = CliConfig { nmax, seed, ..CliConfig::resolve(&p)?.with_tol(tol)? };
            let ids: Vec<IdentityId> = if identity.is_empty() {
                IdentityId::ALL.to_vec()
            } else {
                identity.into_iter().map(IdentityId::from).collect()
            };
            Ok(cmd_verify(&cfg, &ids))
        }
        Command::Suite { p, nmax, seed, tol } => {
            let cfg = CliConfig { nmax, seed, ..CliConfig::resolve(&p)?.with_tol(tol)? };
            Ok(cmd_suite(&cfg))
        }
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

pub fn cmd_term(cfg: &CliConfig, n: usize, len: Option<usize>) -> Result<CliOutput> {
    let p = &cfg.params;
    let out = match (len, cfg.json()) {
        (None, false) => format!("{}\n", seq_term(p, n)),
        (None, true) => to_json(&json!({ "n": n, "value": seq_term(p, n).to_string() })),
        (Some(len), json) => {
            let values: Vec<String> = seq_slice(p, n, len).iter().map(ToString::to_string).collect();
            if json {
                to_json(&json!({ "n0": n, "len": len, "values": values }))
            } else {
                values.iter().map(|v| format!("{v}\n")).collect()
            }
        }
    };
    Ok(CliOutput::ok(out))
}

pub fn cmd_quaternion(cfg: &CliConfig, n: usize) -> Result<CliOutput> {
    let q = trib_quaternion(&cfg.params, n).value;
    Ok(CliOutput::ok(if cfg.json() { to_json(&q) } else { format!("{q}\n") }))
}

pub fn cmd_spinor(cfg: &CliConfig, n: usize) -> Result<CliOutput> {
    let a = trib_spinor(&cfg.params, n);
    Ok(CliOutput::ok(if cfg.json() {
        format!("{}\n", serde_json::to_string(&a).expect("serializable"))
    } else {
        format!("{a}\n")
    }))
}

fn complex_json(z: Complex64) -> serde_json::Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn cmd_binet(cfg: &CliConfig, n: usize) -> Result<CliOutput> {
    let p = &cfg.params;
    let number = binet_number(p, n)?;
    let quat = binet_quaternion(p, n)?;
    let spinor = binet_spinor(p, n)?;
    let exact = trib_spinor(p, n);
    let err = spinor.relative_error(&ComplexSpinor::from_exact(&exact));
    let within = err < cfg.tol;
    let out = if cfg.json() {
        to_json(&json!({
            "n": n,
            "tol": cfg.tol,
            "number": complex_json(number),
            "quaternion": quat.iter().copied().map(complex_json).collect::<Vec<_>>(),
            "spinor": { "c1": complex_json(spinor.c1), "c2": complex_json(spinor.c2) },
            "exact_spinor": exact,
            "relative_error": err,
            "within_tol": within,
        }))
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "V_{n} ~ {number}");
        let _ = writeln!(s, "Q_{n} ~ ({}, {}, {}, {})", quat[0], quat[1], quat[2], quat[3]);
        let _ = writeln!(s, "A_{n} ~ [{}; {}]", spinor.c1, spinor.c2);
        let _ = writeln!(s, "exact A_{n} = {exact}");
        let _ = writeln!(s, "relative error {err:.3e} (tol {:e}): {}", cfg.tol, if within { "ok" } else { "exceeded" });
        s
    };
    Ok(CliOutput::ok(out))
}

fn poly_text(coeffs: &[String]) -> String {
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c == "0" {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        terms.push(if mono.is_empty() { c.clone() } else { format!("({c}){mono}") });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn cmd_genfunc(cfg: &CliConfig, order: usize) -> Result<CliOutput> {
    let series = genfunc_spinor_series(&cfg.params, order);
    let denominator: Vec<String> = series.denominator.iter().map(ToString::to_string).collect();
    let out = if cfg.json() {
        to_json(&json!({
            "order": order,
            "numerator": series.numerator,
            "denominator": denominator,
            "coefficients": series.coefficients,
        }))
    } else {
        use crate::scalar::GaussDisplay;
        let comp = |f: &dyn Fn(&crate::spinors::Spinor) -> String| -> String {
            poly_text(&series.numerator.iter().map(f).collect::<Vec<_>>())
        };
        let c1 = comp(&|s| GaussDisplay(&s.c1).to_string());
        let c2 = comp(&|s| GaussDisplay(&s.c2).to_string());
        let mut s = String::new();
        let _ = writeln!(s, "numerator: [{c1}; {c2}]");
        let _ = writeln!(s, "denominator: {}", poly_text(&denominator));
        for (k, c) in series.coefficients.iter().enumerate() {
            let _ = writeln!(s, "{k}: {c}");
        }
        s
    };
    Ok(CliOutput::ok(out))
}

fn render_reports(cfg: &CliConfig, reports: &[VerificationReport]) -> CliOutput {
    let stdout = if cfg.json() {
        to_json(reports)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "params {}  nmax {}  seed {}", cfg.params, cfg.nmax, cfg.seed);
        for r in reports {
            let status = format!("{:?}", r.status);
            let _ = writeln!(
                s,
                "{:<24} {:<12} [{}..{}]  {}",
                r.identity.to_string(),
                status,
                r.range.start,
                r.range.end,
                r.note
            );
            if let Some(w) = &r.witness {
                let _ = writeln!(s, "{:<24} witness n={}: {} != {}", "", w.n, w.lhs, w.rhs);
            }
        }
        s
    };
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    CliOutput {
        code: if failed { EXIT_FAILURE } else { EXIT_OK },
        stdout,
        stderr: String::new(),
    }
}

pub fn cmd_verify(cfg: &CliConfig, ids: &[IdentityId]) -> CliOutput {
    let opts = SuiteOptions { nmax: cfg.nmax, seed: cfg.seed, tol: cfg.tol };
    render_reports(cfg, &run_identities(ids, &cfg.params, &opts))
}

pub fn cmd_suite(cfg: &CliConfig) -> CliOutput {
    cmd_verify(cfg, &IdentityId::ALL)
}
