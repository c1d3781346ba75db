//! Command-line front end: build matrices, invert them by either route,
//! evaluate determinants, expand orthogonal polynomials, integrate against
//! the measure, and run the verification suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid parameters (including
//! root-of-unity rejections and vanishing denominators), 3 internal
//! certification failure (two supposedly equal computations disagreed,
//! which is always a bug).

use std::ffi::OsString;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fib::{bridge_check, quantum_param_from_theta, ThetaParam};
use crate::field::{parse_rational, FieldContext, FieldElement, Rational};
use crate::hankel::{
    build_matrix, closed_form_det, closed_form_inverse, det_ratio_check, MatrixKind,
};
use crate::matrix::ExactMatrix;
use crate::oracle::{bareiss_det, exact_inverse};
use crate::qpoly::{
    braces_identity_check, induction_identity_check, integrate_against_measure,
    specialized_poly, verify_orthogonality, MeasureSpec, PolyCoeffs,
};
use crate::quantum::{quantum_integer, QuantumParam};

/// Environment variable capping the index bound n; exact entries grow fast,
/// so runaway sizes are refused rather than attempted.
pub const MAX_N_ENV: &str = "QHILBERT_MAX_N";
pub const MAX_N_DEFAULT: u32 = 24;

#[derive(Parser)]
#[command(
    name = "qhilbert",
    version,
    about = "Exact quantum, Fibonacci, and classical Hilbert matrices",
    after_help = "The QHILBERT_MAX_N environment variable (default 24) caps the index bound n."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a matrix from one of the families.
    Matrix(SizedArgs),
    /// Print a matrix inverse, by closed form or by elimination.
    Invert(MethodArgs),
    /// Print a determinant, by closed form or by elimination.
    Det(MethodArgs),
    /// Print the coefficients of the degree-n orthogonal polynomial.
    Poly(SizedArgs),
    /// Integrate a polynomial against the discrete measure.
    Integrate(IntegrateArgs),
    /// Run a verification suite over a parameter grid.
    Verify(VerifyArgs),
}

/// Family selector shared by every subcommand.
#[derive(Args)]
struct Target {
    /// Matrix family.
    #[arg(long, value_enum)]
    kind: Kind,
    /// Order parameter: a positive rational for classical, a positive
    /// integer otherwise.
    #[arg(long)]
    alpha: String,
    #[command(flatten)]
    param: ParamFlags,
}

#[derive(Args)]
struct ParamFlags {
    /// Rational deformation parameter s, written p/q.
    #[arg(long, value_name = "P/Q")]
    s_rational: Option<String>,
    /// Pure-imaginary deformation parameter s, written p/q*i.
    #[arg(long, value_name = "P/Q*i")]
    s_gaussian: Option<String>,
    /// Fibonacci weight m selecting the theta form of the parameter.
    #[arg(long, value_name = "M")]
    m: Option<u32>,
}

#[derive(Args)]
struct SizedArgs {
    #[command(flatten)]
    target: Target,
    /// Index bound; matrices run over indices 0..=n.
    #[arg(long)]
    n: u32,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Args)]
struct MethodArgs {
    #[command(flatten)]
    target: Target,
    /// Index bound; matrices run over indices 0..=n.
    #[arg(long)]
    n: u32,
    /// closed evaluates the closed form; oracle runs fraction-free
    /// elimination. Both serialize identically.
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Args)]
#[command(group(ArgGroup::new("poly_input").required(true)))]
struct IntegrateArgs {
    #[command(flatten)]
    target: Target,
    /// Integrate the monomial x^DEGREE.
    #[arg(long, value_name = "DEGREE", group = "poly_input")]
    moment: Option<u32>,
    /// Comma-separated rational coefficients, constant term first.
    #[arg(long, value_name = "C0,C1,...", group = "poly_input")]
    coeffs: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which invariant family to exercise.
    #[arg(long, value_enum)]
    suite: Suite,
    /// Matrix family (the bridge suite needs only --m).
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    /// Grid bound: cases run for indices up to n.
    #[arg(long)]
    n: u32,
    /// Order parameter (the bridge suite ignores it).
    #[arg(long)]
    alpha: Option<String>,
    #[command(flatten)]
    param: ParamFlags,
    /// Output format (json or pretty).
    #[arg(long, value_enum, default_value_t = Output::Pretty)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Classical,
    Quantum,
    Filbert,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Inverse,
    Det,
    Orthogonality,
    Identities,
    Bridge,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Inverse => "inverse",
            Suite::Det => "det",
            Suite::Orthogonality => "orthogonality",
            Suite::Identities => "identities",
            Suite::Bridge => "bridge",
        }
    }
}

/// Parse and dispatch; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::SingularMatrix
        | Error::BridgeViolation(_)
        | Error::IdentityViolation(_)
        | Error::CertificationFailed(_) => 3,
        _ => 2,
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Matrix(args) => handle_matrix(args),
        Command::Invert(args) => handle_invert(args),
        Command::Det(args) => handle_det(args),
        Command::Poly(args) => handle_poly(args),
        Command::Integrate(args) => handle_integrate(args),
        Command::Verify(args) => handle_verify(args),
    }
}

fn max_n() -> Result<u32> {
    match std::env::var(MAX_N_ENV) {
        Ok(text) => text.trim().parse().map_err(|_| {
            Error::InvalidParameter(format!(
                "{MAX_N_ENV} must be a nonnegative integer, got {text:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(MAX_N_DEFAULT),
        Err(err) => Err(Error::InvalidParameter(format!("{MAX_N_ENV}: {err}"))),
    }
}

fn check_cap(n: u32) -> Result<()> {
    let cap = max_n()?;
    if n > cap {
        return Err(Error::InvalidParameter(format!(
            "n={n} exceeds the size cap {cap} (set {MAX_N_ENV} to raise it)"
        )));
    }
    Ok(())
}

/// Alpha as it appears in documents: a JSON number for the integer-order
/// families, a rational string for the classical one.
#[derive(Clone, Serialize)]
#[serde(untagged)]
enum AlphaDoc {
    Integer(u32),
    Rational(String),
}

impl std::fmt::Display for AlphaDoc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlphaDoc::Integer(a) => write!(f, "{a}"),
            AlphaDoc::Rational(a) => write!(f, "{a}"),
        }
    }
}

/// Deformation parameter as it appears in documents; null for classical.
#[derive(Clone, Serialize)]
#[serde(tag = "form", rename_all = "lowercase")]
enum ParamDoc {
    Rational { s: String },
    Gaussian { s: String },
    Theta { m: u32 },
}

enum FamilySpec {
    Classical { alpha: Rational },
    Quantum { alpha: u32, param: QuantumParam },
    Filbert { alpha: u32, theta: ThetaParam },
}

struct Resolved {
    family: FamilySpec,
    kind_name: &'static str,
    alpha: AlphaDoc,
    param: Option<ParamDoc>,
}

impl Resolved {
    fn matrix_kind(&self) -> Result<MatrixKind> {
        match &self.family {
            FamilySpec::Classical { alpha } => MatrixKind::classical(alpha.clone()),
            FamilySpec::Quantum { alpha, param } => MatrixKind::quantum(*alpha, param.clone()),
            FamilySpec::Filbert { alpha, theta } => MatrixKind::filbert(*alpha, theta.clone()),
        }
    }

    /// Measure order and quantum parameter for the polynomial commands.
    /// Classical means the s = 1 specialization and needs an integer alpha.
    fn measure(&self) -> Result<(u32, QuantumParam)> {
        match &self.family {
            FamilySpec::Classical { alpha } => {
                Ok((rational_order(alpha)?, QuantumParam::from_rational(Rational::one())?))
            }
            FamilySpec::Quantum { alpha, param } => Ok((*alpha, param.clone())),
            FamilySpec::Filbert { alpha, theta } => {
                Ok((*alpha, quantum_param_from_theta(theta)))
            }
        }
    }

    /// One-line description used in verification reports.
    fn label(&self) -> String {
        let mut out = format!("kind={} alpha={}", self.kind_name, self.alpha);
        match &self.param {
            None => {}
            Some(ParamDoc::Rational { s }) => out.push_str(&format!(" s={s}")),
            Some(ParamDoc::Gaussian { s }) => out.push_str(&format!(" s={s}*i")),
            Some(ParamDoc::Theta { m }) => out.push_str(&format!(" m={m}")),
        }
        out
    }
}

fn rational_order(alpha: &Rational) -> Result<u32> {
    if alpha.is_integer() {
        if let Some(order) = alpha.to_integer().to_u32() {
            if order >= 1 {
                return Ok(order);
            }
        }
    }
    Err(Error::InvalidParameter(format!(
        "polynomial commands need a positive integer alpha, got {alpha}"
    )))
}

fn parse_order(text: &str) -> Result<u32> {
    text.trim().parse().map_err(|_| {
        Error::InvalidParameter(format!(
            "alpha must be a nonnegative integer for this kind, got {text:?}"
        ))
    })
}

fn parse_gaussian(text: &str) -> Result<Rational> {
    let body = text.trim().strip_suffix("*i").ok_or_else(|| {
        Error::InvalidParameter(format!(
            "pure-imaginary parameter must be written p/q*i, got {text:?}"
        ))
    })?;
    parse_rational(body)
}

fn resolve(target: &Target) -> Result<Resolved> {
    resolve_parts(target.kind, &target.alpha, &target.param)
}

fn resolve_parts(kind: Kind, alpha_text: &str, flags: &ParamFlags) -> Result<Resolved> {
    let forms = usize::from(flags.s_rational.is_some())
        + usize::from(flags.s_gaussian.is_some())
        + usize::from(flags.m.is_some());
    match kind {
        Kind::Classical => {
            if forms != 0 {
                return Err(Error::InvalidParameter(
                    "classical kind takes no parameter flags (--s-rational, --s-gaussian, --m)"
                        .into(),
                ));
            }
            let alpha = parse_rational(alpha_text)?;
            Ok(Resolved {
                kind_name: "classical",
                alpha: AlphaDoc::Rational(alpha.to_string()),
                param: None,
                family: FamilySpec::Classical { alpha },
            })
        }
        Kind::Quantum => {
            if forms != 1 {
                return Err(Error::InvalidParameter(
                    "quantum kind needs exactly one of --s-rational, --s-gaussian, --m".into(),
                ));
            }
            let alpha = parse_order(alpha_text)?;
            let (param, doc) = if let Some(text) = &flags.s_rational {
                let s = parse_rational(text)?;
                let doc = ParamDoc::Rational { s: s.to_string() };
                (QuantumParam::from_rational(s)?, doc)
            } else if let Some(text) = &flags.s_gaussian {
                let t = parse_gaussian(text)?;
                let doc = ParamDoc::Gaussian { s: t.to_string() };
                (QuantumParam::from_imaginary_rational(t)?, doc)
            } else {
                let m = flags.m.expect("counted above");
                let theta = ThetaParam::new(m)?;
                (quantum_param_from_theta(&theta), ParamDoc::Theta { m })
            };
            Ok(Resolved {
                kind_name: "quantum",
                alpha: AlphaDoc::Integer(alpha),
                param: Some(doc),
                family: FamilySpec::Quantum { alpha, param },
            })
        }
        Kind::Filbert => {
            let Some(m) = flags.m else {
                return Err(Error::InvalidParameter("filbert kind needs --m".into()));
            };
            if flags.s_rational.is_some() || flags.s_gaussian.is_some() {
                return Err(Error::InvalidParameter(
                    "filbert kind takes only --m, not --s-rational or --s-gaussian".into(),
                ));
            }
            let alpha = parse_order(alpha_text)?;
            let theta = ThetaParam::new(m)?;
            Ok(Resolved {
                kind_name: "filbert",
                alpha: AlphaDoc::Integer(alpha),
                param: Some(ParamDoc::Theta { m }),
                family: FamilySpec::Filbert { alpha, theta },
            })
        }
    }
}

#[derive(Serialize)]
struct MatrixDocument<'a> {
    kind: &'a str,
    n: u32,
    alpha: &'a AlphaDoc,
    param: &'a Option<ParamDoc>,
    matrix: &'a ExactMatrix,
}

#[derive(Serialize)]
struct DetDocument<'a> {
    kind: &'a str,
    n: u32,
    alpha: &'a AlphaDoc,
    param: &'a Option<ParamDoc>,
    det: &'a FieldElement,
}

#[derive(Serialize)]
struct PolyDocument<'a> {
    kind: &'a str,
    n: u32,
    alpha: u32,
    param: &'a Option<ParamDoc>,
    coeffs: &'a PolyCoeffs,
}

#[derive(Serialize)]
struct IntegralDocument<'a> {
    kind: &'a str,
    alpha: u32,
    param: &'a Option<ParamDoc>,
    coeffs: &'a PolyCoeffs,
    value: &'a FieldElement,
    convergent: bool,
}

fn print_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("documents always serialize");
    println!("{text}");
}

fn emit_matrix(resolved: &Resolved, n: u32, matrix: &ExactMatrix, output: Output) -> Result<()> {
    match output {
        Output::Json => print_json(&MatrixDocument {
            kind: resolved.kind_name,
            n,
            alpha: &resolved.alpha,
            param: &resolved.param,
            matrix,
        }),
        Output::Csv => print!("{}", matrix.to_csv()?),
        Output::Pretty => print!("{}", matrix.to_pretty()),
    }
    Ok(())
}

fn handle_matrix(args: SizedArgs) -> Result<i32> {
    check_cap(args.n)?;
    let resolved = resolve(&args.target)?;
    let matrix = build_matrix(&resolved.matrix_kind()?, args.n)?;
    emit_matrix(&resolved, args.n, &matrix, args.output)?;
    Ok(0)
}

fn handle_invert(args: MethodArgs) -> Result<i32> {
    check_cap(args.n)?;
    let resolved = resolve(&args.target)?;
    let kind = resolved.matrix_kind()?;
    let inverse = match args.method {
        Method::Closed => closed_form_inverse(&kind, args.n)?,
        Method::Oracle => exact_inverse(&build_matrix(&kind, args.n)?)?,
    };
    emit_matrix(&resolved, args.n, &inverse, args.output)?;
    Ok(0)
}

fn handle_det(args: MethodArgs) -> Result<i32> {
    check_cap(args.n)?;
    let resolved = resolve(&args.target)?;
    let kind = resolved.matrix_kind()?;
    let det = match args.method {
        Method::Closed => closed_form_det(&kind, args.n)?,
        Method::Oracle => bareiss_det(&build_matrix(&kind, args.n)?),
    };
    match args.output {
        Output::Json => print_json(&DetDocument {
            kind: resolved.kind_name,
            n: args.n,
            alpha: &resolved.alpha,
            param: &resolved.param,
            det: &det,
        }),
        Output::Csv => {
            return Err(Error::InvalidParameter(
                "csv output applies to matrix and polynomial results".into(),
            ))
        }
        Output::Pretty => println!("{det}"),
    }
    Ok(0)
}

fn poly_csv(poly: &PolyCoeffs) -> Result<String> {
    let mut cells = Vec::with_capacity(poly.coeffs().len());
    for (j, coeff) in poly.coeffs().iter().enumerate() {
        let value = coeff
            .as_rational()
            .ok_or(Error::NonRationalEntry { row: 0, col: j })?;
        cells.push(value.to_string());
    }
    Ok(cells.join(",") + "\n")
}

fn handle_poly(args: SizedArgs) -> Result<i32> {
    check_cap(args.n)?;
    let resolved = resolve(&args.target)?;
    let (order, param) = resolved.measure()?;
    let poly = specialized_poly(args.n, order, &param)?;
    match args.output {
        Output::Json => print_json(&PolyDocument {
            kind: resolved.kind_name,
            n: args.n,
            alpha: order,
            param: &resolved.param,
            coeffs: &poly,
        }),
        Output::Csv => print!("{}", poly_csv(&poly)?),
        Output::Pretty => {
            for (j, coeff) in poly.coeffs().iter().enumerate() {
                println!("x^{j}: {coeff}");
            }
        }
    }
    Ok(0)
}

fn parse_coeff_list(text: &str, ctx: FieldContext) -> Result<PolyCoeffs> {
    let mut coeffs = Vec::new();
    for cell in text.split(',') {
        coeffs.push(ctx.from_rational(parse_rational(cell.trim())?));
    }
    Ok(PolyCoeffs::new(ctx, coeffs))
}

fn monomial(ctx: FieldContext, degree: u32) -> PolyCoeffs {
    let mut coeffs = vec![ctx.zero(); degree as usize + 1];
    let last = coeffs.len() - 1;
    coeffs[last] = ctx.one();
    PolyCoeffs::new(ctx, coeffs)
}

fn handle_integrate(args: IntegrateArgs) -> Result<i32> {
    let resolved = resolve(&args.target)?;
    let (order, param) = resolved.measure()?;
    let ctx = param.context();
    let poly = match (&args.moment, &args.coeffs) {
        (Some(degree), None) => {
            check_cap(*degree)?;
            monomial(ctx, *degree)
        }
        (None, Some(text)) => {
            let poly = parse_coeff_list(text, ctx)?;
            check_cap(poly.coeffs().len().saturating_sub(1) as u32)?;
            poly
        }
        _ => unreachable!("clap enforces exactly one input form"),
    };
    let spec = MeasureSpec::new(order, param)?;
    let value = integrate_against_measure(&poly, &spec)?;
    let convergent = spec.is_convergent();
    match args.output {
        Output::Json => print_json(&IntegralDocument {
            kind: resolved.kind_name,
            alpha: order,
            param: &resolved.param,
            coeffs: &poly,
            value: &value,
            convergent,
        }),
        Output::Csv => {
            return Err(Error::InvalidParameter(
                "csv output applies to matrix and polynomial results".into(),
            ))
        }
        Output::Pretty => {
            println!("integral: {value}");
            println!("convergent: {convergent}");
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct CaseReport {
    case: String,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

impl CaseReport {
    fn new(case: String, detail: Option<String>) -> Self {
        CaseReport { ok: detail.is_none(), case, detail }
    }

    fn line(&self) -> String {
        match &self.detail {
            None => format!("PASS {}", self.case),
            Some(detail) => format!("FAIL {}: {detail}", self.case),
        }
    }
}

fn require_target(args: &VerifyArgs) -> Result<Resolved> {
    let (Some(kind), Some(alpha)) = (args.kind, args.alpha.as_deref()) else {
        return Err(Error::InvalidParameter(format!(
            "suite {} needs --kind and --alpha",
            args.suite.name()
        )));
    };
    resolve_parts(kind, alpha, &args.param)
}

/// A violation found by a suite becomes a failed case; any other error is a
/// parameter problem and aborts the run.
fn case_detail(outcome: Result<()>) -> Result<Option<String>> {
    match outcome {
        Ok(()) => Ok(None),
        Err(Error::IdentityViolation(detail)) | Err(Error::BridgeViolation(detail)) => {
            Ok(Some(detail))
        }
        Err(err) => Err(err),
    }
}

fn inverse_suite(args: &VerifyArgs) -> Result<Vec<CaseReport>> {
    let resolved = require_target(args)?;
    let kind = resolved.matrix_kind()?;
    let label = resolved.label();
    let mut reports = Vec::new();
    for n in 0..=args.n {
        let built = build_matrix(&kind, n)?;
        let closed = closed_form_inverse(&kind, n)?;
        let oracle = exact_inverse(&built)?;
        let detail = if closed != oracle {
            Some("closed form and elimination inverse disagree".into())
        } else if !built.mul(&closed)?.is_identity() {
            Some("closed-form inverse fails the product certificate".into())
        } else {
            None
        };
        reports.push(CaseReport::new(format!("inverse {label} n={n}"), detail));
    }
    Ok(reports)
}

fn det_suite(args: &VerifyArgs) -> Result<Vec<CaseReport>> {
    let resolved = require_target(args)?;
    let kind = resolved.matrix_kind()?;
    let label = resolved.label();
    let quantum = matches!(resolved.family, FamilySpec::Quantum { .. });
    let mut reports = Vec::new();
    for n in 0..=args.n {
        let closed = closed_form_det(&kind, n)?;
        let oracle = bareiss_det(&build_matrix(&kind, n)?);
        let mut detail = if closed == oracle {
            None
        } else {
            Some(format!("closed form {closed} but elimination {oracle}"))
        };
        if detail.is_none() && quantum && n >= 1 {
            detail = case_detail(det_ratio_check(&kind, n))?;
        }
        reports.push(CaseReport::new(format!("det {label} n={n}"), detail));
    }
    Ok(reports)
}

fn orthogonality_suite(args: &VerifyArgs) -> Result<Vec<CaseReport>> {
    let resolved = require_target(args)?;
    let (order, param) = resolved.measure()?;
    let label = resolved.label();
    let mut reports = Vec::new();
    for n in 0..=args.n {
        for m in n..=args.n {
            let integral = verify_orthogonality(n, m, order, &param)?;
            let expected = if n == m {
                quantum_integer(order, &param).div(&quantum_integer(2 * n + order, &param))?
            } else {
                param.context().zero()
            };
            let detail = (integral != expected)
                .then(|| format!("integral {integral}, expected {expected}"));
            reports.push(CaseReport::new(
                format!("orthogonality {label} n={n} m={m}"),
                detail,
            ));
        }
    }
    Ok(reports)
}

fn identities_suite(args: &VerifyArgs) -> Result<Vec<CaseReport>> {
    let resolved = require_target(args)?;
    let (order, param) = resolved.measure()?;
    let label = resolved.label();
    let mut reports = Vec::new();
    for n in 0..=args.n {
        let mut detail = None;
        'scan: for l in 0..=n + 1 {
            for j in 0..=n + 1 {
                detail = case_detail(induction_identity_check(n, l, j, order, &param))?;
                if detail.is_some() {
                    break 'scan;
                }
                detail = case_detail(braces_identity_check(n, l, j, order, &param))?;
                if detail.is_some() {
                    break 'scan;
                }
            }
        }
        reports.push(CaseReport::new(
            format!("identities {label} n={n} (l, j up to {})", n + 1),
            detail,
        ));
    }
    Ok(reports)
}

fn bridge_suite(args: &VerifyArgs) -> Result<Vec<CaseReport>> {
    let Some(m) = args.param.m else {
        return Err(Error::InvalidParameter("the bridge suite needs --m".into()));
    };
    if args.param.s_rational.is_some() || args.param.s_gaussian.is_some() {
        return Err(Error::InvalidParameter(
            "the bridge suite takes only --m".into(),
        ));
    }
    let theta = ThetaParam::new(m)?;
    let mut reports = Vec::new();
    for n in 0..=args.n {
        let detail = case_detail(bridge_check(n, &theta))?;
        reports.push(CaseReport::new(format!("bridge m={m} n={n}"), detail));
    }
    Ok(reports)
}

fn handle_verify(args: VerifyArgs) -> Result<i32> {
    if args.output == Output::Csv {
        return Err(Error::InvalidParameter(
            "verification reports support json and pretty output".into(),
        ));
    }
    check_cap(args.n)?;
    let reports = match args.suite {
        Suite::Inverse => inverse_suite(&args)?,
        Suite::Det => det_suite(&args)?,
        Suite::Orthogonality => orthogonality_suite(&args)?,
        Suite::Identities => identities_suite(&args)?,
        Suite::Bridge => bridge_suite(&args)?,
    };
    match args.output {
        Output::Json => print_json(&reports),
        _ => {
            for report in &reports {
                println!("{}", report.line());
            }
        }
    }
    let failures = reports.iter().filter(|r| !r.ok).count();
    if failures > 0 {
        eprintln!("{failures} of {} cases failed", reports.len());
        return Ok(3);
    }
    Ok(0)
}
