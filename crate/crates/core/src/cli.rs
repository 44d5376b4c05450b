//! Command-line front end: `poly`, `sgp`, `hilbert` and `survey` command
//! groups, each with a text and a `--json` rendering of the same result.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::cyclotomy::{cyclotomic, exponent_sequence, kronecker_factor, CyclotomicFactorization};
use crate::error::{Error, Result};
use crate::hilbert::{
    ci_series, curvature_estimate, detect_irreducible_cyclotomic_h, deviations_from_poincare,
    f_d_minus_2, f_to_h, h_to_f, koszul_deviations, plane_monoid_hilbert, poincare_coefficients,
    FVector, HVector, HilbertSeries, Verdict,
};
use crate::intpoly::{parse_list, IntPoly};
use crate::numsgp::{is_complete_intersection, NumericalSemigroup};
use crate::survey::{run_survey, SurveyConfig, RECORDS_FILE, SUMMARY_FILE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cyclosgp",
    version,
    about = "Cyclotomic numerators, Kronecker tests and complete intersections"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integer polynomials: Kronecker test, cyclotomic factors and exponents.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Numerical semigroups given by comma-separated generators.
    #[command(subcommand)]
    Sgp(SgpCommand),
    /// Hilbert series, deviations and h/f-vectors.
    #[command(subcommand)]
    Hilbert(HilbertCommand),
    /// Classify every numerical semigroup up to a Frobenius bound.
    Survey(SurveyArgs),
}

#[derive(Args, Debug)]
struct CoeffArg {
    /// Coefficients, lowest degree first, e.g. 1,-1,0,1.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_poly)]
    coeffs: IntPoly,
}

#[derive(Subcommand, Debug)]
enum PolyCommand {
    IsKronecker(CoeffArg),
    Factor(CoeffArg),
    Exponents {
        #[command(flatten)]
        poly: CoeffArg,
        /// Truncation order; defaults to 2 deg^2.
        #[arg(long)]
        bound: Option<usize>,
    },
    Cyclotomic {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

#[derive(Args, Debug)]
struct GensArg {
    /// Generators, e.g. 4,6,9.
    #[arg(value_parser = parse_gens)]
    gens: Csv<u64>,
}

#[derive(Subcommand, Debug)]
enum SgpCommand {
    Info(GensArg),
    Poly(GensArg),
    IsCi(GensArg),
    IsCyclotomic(GensArg),
}

#[derive(Subcommand, Debug)]
enum HilbertCommand {
    /// Reduced Hilbert series of a complete intersection.
    Ci {
        #[arg(long, value_parser = parse_gens)]
        vars: Csv<u64>,
        #[arg(long, value_parser = parse_gens, default_value = "")]
        rels: Csv<u64>,
    },
    /// Deviations of a Koszul algebra with h-polynomial h and dimension d.
    Deviations {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_poly)]
        h: IntPoly,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 20)]
        bound: usize,
        /// Window for the curvature estimate.
        #[arg(long, default_value_t = 5)]
        window: usize,
    },
    /// h-vector to f-vector.
    H2f {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ints)]
        h: Csv<BigInt>,
        #[arg(long)]
        dim: usize,
    },
    /// f-vector (starting with f_{-1}) to h-vector.
    F2h {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ints)]
        f: Csv<BigInt>,
    },
    /// Is h an irreducible cyclotomic polynomial, and can it be an h-polynomial?
    Detect {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_poly)]
        h: IntPoly,
    },
    /// Hilbert function of a monoid generated by points a:b of equal degree.
    PlaneMonoid {
        #[arg(long, value_parser = parse_points)]
        gens: Csv<(u64, u64)>,
        #[arg(long, default_value_t = 12)]
        bound: usize,
    },
}

#[derive(Args, Debug)]
struct SurveyArgs {
    #[arg(long, default_value_t = 33)]
    max_frobenius: u64,
    #[arg(long, env = "CYCLOSGP_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Directory for records.jsonl, summary.json and checkpoints.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    no_symmetric_prefilter: bool,
    /// Persist records for every semigroup, not only cyclotomic ones.
    #[arg(long)]
    emit_all: bool,
    #[arg(long, default_value_t = 0)]
    checkpoint_every: u64,
    /// Continue from a checkpoint in the output directory.
    #[arg(long)]
    resume: bool,
    /// Stop after this many subtrees and leave a checkpoint.
    #[arg(long)]
    stop_after_roots: Option<usize>,
}

/// A comma-separated list passed as a single argument.
#[derive(Clone, Debug)]
struct Csv<T>(Vec<T>);

fn parse_poly(s: &str) -> std::result::Result<IntPoly, String> {
    IntPoly::parse(s).map_err(|e| e.to_string())
}

fn parse_ints(s: &str) -> std::result::Result<Csv<BigInt>, String> {
    parse_list::<BigInt>(s).map(Csv).map_err(|e| e.to_string())
}

fn parse_gens(s: &str) -> std::result::Result<Csv<u64>, String> {
    if s.trim().is_empty() {
        return Ok(Csv(Vec::new()));
    }
    parse_list::<u64>(s).map(Csv).map_err(|e| e.to_string())
}

fn parse_points(s: &str) -> std::result::Result<Csv<(u64, u64)>, String> {
    let mut out = Vec::new();
    let mut position = 1;
    for item in s.split(',') {
        let point = item.split_once(':').and_then(|(a, b)| {
            Some((u64::from_str(a.trim()).ok()?, u64::from_str(b.trim()).ok()?))
        });
        match point {
            Some(p) => out.push(p),
            None => {
                return Err(Error::Parse {
                    position,
                    message: format!("expected a:b, got {:?}", item.trim()),
                }
                .to_string())
            }
        }
        position += item.len() + 1;
    }
    Ok(Csv(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

/// The outcome of one command: status, a JSON payload, human-readable
/// lines, and diagnostics.
#[derive(Debug)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Map<String, Value>,
    pub text: Vec<String>,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    fn ok() -> Self {
        CommandResult {
            status: Status::Ok,
            payload: Map::new(),
            text: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    fn field(mut self, key: &str, value: Value) -> Self {
        self.payload.insert(key.to_string(), value);
        self
    }

    fn line(mut self, line: impl Into<String>) -> Self {
        self.text.push(line.into());
        self
    }

    fn note(mut self, diag: impl Into<String>) -> Self {
        self.diagnostics.push(diag.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("status".into(), json!(self.status));
        obj.extend(self.payload.clone());
        obj.insert("diagnostics".into(), json!(self.diagnostics));
        Value::Object(obj)
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => EXIT_OK,
            Status::Violation => EXIT_VIOLATION,
            Status::Error => EXIT_ERROR,
        }
    }
}

/// Exact integer as a JSON number, whatever its size.
pub fn json_int(n: &BigInt) -> Value {
    Value::Number(serde_json::Number::from_str(&n.to_string()).expect("decimal integer"))
}

pub fn json_ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(json_int).collect())
}

pub fn json_poly(p: &IntPoly) -> Value {
    json_ints(p.coeffs())
}

fn factors_json(f: &[(u64, u32)]) -> Value {
    json!(f.iter().map(|&(n, m)| [n, m as u64]).collect::<Vec<_>>())
}

fn factors_text(f: &CyclotomicFactorization) -> String {
    let mut parts: Vec<String> = Vec::new();
    if f.unit_sign < 0 {
        parts.push("-1".into());
    }
    parts.extend(f.factors.iter().map(|&(n, m)| {
        if m == 1 {
            format!("Phi_{n}")
        } else {
            format!("Phi_{n}^{m}")
        }
    }));
    if !f.remainder.is_one() {
        parts.push(format!("({})", f.remainder));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

fn factorization_result(f: &CyclotomicFactorization, key: &str) -> CommandResult {
    let mut r = CommandResult::ok()
        .field(key, json!(f.is_kronecker()))
        .field("factors", factors_json(&f.factors))
        .field("remainder", json_poly(&f.remainder))
        .field("unit_sign", json!(f.unit_sign))
        .line(format!("{key}: {}", f.is_kronecker()))
        .line(format!("factorization: {}", factors_text(f)));
    if f.has_phi1() {
        r = r.note("Phi_1 = x - 1 divides the input; it vanishes at x = 1");
    }
    r
}

fn poly(cmd: PolyCommand) -> Result<CommandResult> {
    Ok(match cmd {
        PolyCommand::IsKronecker(a) => {
            factorization_result(&kronecker_factor(&a.coeffs)?, "kronecker")
        }
        PolyCommand::Factor(a) => {
            let f = kronecker_factor(&a.coeffs)?;
            factorization_result(&f, "kronecker")
        }
        PolyCommand::Exponents { poly, bound } => {
            let f = poly.coeffs;
            let deg = f.degree().unwrap_or(0);
            let bound = bound.unwrap_or((2 * deg * deg).max(1));
            let seq = exponent_sequence(&f, bound)?;
            let mut r = CommandResult::ok()
                .field("bound", json!(bound))
                .field("exponents", json_ints(&seq.values))
                .field("residual_is_trivial", json!(seq.residual_is_trivial))
                .line(format!("bound: {bound}"))
                .line(format!(
                    "exponents: {}",
                    seq.values
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ));
            let fac = kronecker_factor(&f)?;
            if fac.is_kronecker() && !fac.has_phi1() {
                let last = fac.largest_index().unwrap_or(0);
                r = r
                    .field("vanish_beyond", json!(last))
                    .line(format!("Kronecker: e_i = 0 for all i > {last}"));
            } else {
                r = r.field("vanish_beyond", Value::Null).note(
                    "not Kronecker: the exponents do not terminate; the prefix is diagnostic",
                );
            }
            r
        }
        PolyCommand::Cyclotomic { n } => {
            let p = cyclotomic(n);
            CommandResult::ok()
                .field("n", json!(n))
                .field("coeffs", json_poly(&p))
                .field("text", json!(p.to_string()))
                .line(p.to_string())
        }
    })
}

fn semigroup(gens: &[u64]) -> Result<NumericalSemigroup> {
    NumericalSemigroup::from_generators(gens)
}

fn sgp(cmd: SgpCommand) -> Result<CommandResult> {
    Ok(match cmd {
        SgpCommand::Info(a) => {
            let s = semigroup(&a.gens.0)?;
            let fac = s.cyclotomic_factorization();
            let witness = is_complete_intersection(&s);
            CommandResult::ok()
                .field("min_gens", json!(s.min_gens()))
                .field("frobenius", json!(s.frobenius()))
                .field("genus", json!(s.genus()))
                .field("gaps", json!(s.gaps()))
                .field("multiplicity", json!(s.multiplicity()))
                .field("apery", json!(s.apery()))
                .field("symmetric", json!(s.is_symmetric()))
                .field("ci", json!({ "ci": witness.is_some(), "witness": witness }))
                .field(
                    "cyclotomic",
                    json!({
                        "cyclotomic": fac.is_kronecker(),
                        "factors": factors_json(&fac.factors),
                        "remainder": json_poly(&fac.remainder),
                    }),
                )
                .line(format!("semigroup: {s}"))
                .line(format!("frobenius: {}", s.frobenius()))
                .line(format!("genus: {}", s.genus()))
                .line(format!("gaps: {:?}", s.gaps()))
                .line(format!("symmetric: {}", s.is_symmetric()))
                .line(format!("complete intersection: {}", witness.is_some()))
                .line(format!(
                    "cyclotomic: {} ({})",
                    fac.is_kronecker(),
                    factors_text(&fac)
                ))
        }
        SgpCommand::Poly(a) => {
            let p = semigroup(&a.gens.0)?.semigroup_polynomial();
            CommandResult::ok()
                .field("coeffs", json_poly(&p))
                .field("text", json!(p.to_string()))
                .line(p.to_string())
        }
        SgpCommand::IsCi(a) => {
            let s = semigroup(&a.gens.0)?;
            let w = is_complete_intersection(&s);
            let mut r = CommandResult::ok()
                .field("ci", json!(w.is_some()))
                .field("witness", json!(w))
                .line(format!("complete intersection: {}", w.is_some()));
            if let Some(w) = &w {
                r = r.line(format!("relation degrees: {:?}", w.relation_degrees()));
            }
            r
        }
        SgpCommand::IsCyclotomic(a) => {
            let fac = semigroup(&a.gens.0)?.cyclotomic_factorization();
            factorization_result(&fac, "cyclotomic")
        }
    })
}

fn series_result(h: &HilbertSeries) -> CommandResult {
    let reduced = h.reduce();
    let mut r = CommandResult::ok()
        .field("numerator", json_poly(reduced.numerator()))
        .field("denominator_orders", json!(reduced.den_orders()))
        .field(
            "denominator_factors",
            factors_json(&reduced.denominator_factors()),
        )
        .field("dimension", json!(reduced.pole_order_at_one()))
        .field(
            "numerator_kronecker",
            json!(kronecker_factor(reduced.numerator()).is_ok_and(|f| f.is_kronecker())),
        )
        .line(format!("reduced: {reduced}"))
        .line(format!("dimension: {}", reduced.pole_order_at_one()));
    if reduced.den_orders().is_none() {
        r = r.note("reduced denominator is not a product of (1 - x^d) factors");
    }
    r
}

fn hilbert(cmd: HilbertCommand) -> Result<CommandResult> {
    Ok(match cmd {
        HilbertCommand::Ci { vars, rels } => series_result(&ci_series(&vars.0, &rels.0)?),
        HilbertCommand::Deviations {
            h,
            dim,
            bound,
            window,
        } => {
            let eps = koszul_deviations(&h, dim, bound)?;
            let series = HilbertSeries::new(h.clone(), &vec![1; dim])?;
            let betti = poincare_coefficients(&series, bound)?;
            let check = deviations_from_poincare(&betti)?;
            let mut r = CommandResult::ok()
                .field("deviations", json_ints(&eps.values))
                .field("poincare", json_ints(betti.coeffs()))
                .field("poincare_roundtrip", json!(check == eps))
                .line(format!(
                    "deviations: {}",
                    eps.values
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ))
                .line(format!(
                    "betti: {}",
                    betti
                        .coeffs()
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ))
                .note("Koszulness is assumed, not checked");
            let fac = kronecker_factor(&h)?;
            if fac.is_kronecker() {
                let last = fac.largest_index().unwrap_or(0);
                r = r
                    .field("vanish_beyond", json!(last))
                    .line(format!("h is Kronecker: deviations vanish beyond {last}"));
            } else {
                r = r.field("vanish_beyond", Value::Null);
            }
            if window <= bound {
                let est = curvature_estimate(&betti, window)?;
                r = r
                    .field("curvature_estimate", json!(est.to_string()))
                    .line(format!("curvature estimate (diagnostic): {est}"))
                    .note("curvature estimate is a finite-prefix diagnostic, not a limsup");
            }
            r
        }
        HilbertCommand::H2f { h, dim } => {
            let hv = HVector(h.0);
            let f = h_to_f(&hv, dim)?;
            let mut r = CommandResult::ok()
                .field("f", json_ints(&f.0))
                .line(format!(
                    "f: {}",
                    f.0.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ));
            if dim >= 1 {
                let fd2 = f_d_minus_2(&hv, dim)?;
                r = r.field("f_d_minus_2", json_int(&fd2));
            }
            r
        }
        HilbertCommand::F2h { f } => {
            let h = f_to_h(&FVector(f.0));
            CommandResult::ok()
                .field("h", json_ints(&h.0))
                .line(format!(
                    "h: {}",
                    h.0.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ))
        }
        HilbertCommand::Detect { h } => match detect_irreducible_cyclotomic_h(&h) {
            Some((m, verdict)) => {
                let mut r = CommandResult::ok()
                    .field("m", json!(m))
                    .field("verdict", json!(verdict.to_string()))
                    .line(format!("h = Phi_{m}: {verdict}"));
                if verdict == Verdict::Inadmissible {
                    r.status = Status::Violation;
                    r = r.note(format!(
                        "no standard graded algebra has h-polynomial Phi_{m}"
                    ));
                }
                r
            }
            None => CommandResult::ok()
                .field("m", Value::Null)
                .field("verdict", Value::Null)
                .line("h is not an irreducible cyclotomic polynomial"),
        },
        HilbertCommand::PlaneMonoid { gens, bound } => {
            let fit = plane_monoid_hilbert(&gens.0, bound)?;
            CommandResult::ok()
                .field("degree", json!(fit.degree))
                .field("values", json!(fit.values))
                .field("h", json_poly(&fit.h))
                .line(format!("hilbert function: {:?}", fit.values))
                .line(format!("h-polynomial: {}", fit.h))
        }
    })
}

fn survey(a: SurveyArgs) -> Result<CommandResult> {
    let config = SurveyConfig {
        max_frobenius: a.max_frobenius,
        workers: a.workers,
        out_path: a.out.clone(),
        checkpoint_every: a.checkpoint_every,
        symmetric_prefilter: !a.no_symmetric_prefilter,
        emit_all: a.emit_all,
        resume: a.resume,
        root_budget: a.stop_after_roots,
    };
    let report = run_survey(&config)?;
    let t = report.totals;
    let mut r = CommandResult::ok()
        .field("bound", json!(report.bound))
        .field("totals", json!(t))
        .field("counterexamples", json!(report.counterexamples))
        .field("runtime_secs", json!(report.runtime_secs))
        .line(format!("max frobenius: {}", report.bound))
        .line(format!("semigroups: {}", t.semigroups))
        .line(format!("symmetric: {}", t.symmetric))
        .line(format!("cyclotomic: {}", t.cyclotomic))
        .line(format!("complete intersections: {}", t.ci))
        .line(format!("counterexamples: {}", report.counterexamples.len()));
    if let Some(dir) = &a.out {
        r = r
            .field("records", json!(dir.join(RECORDS_FILE)))
            .field("summary", json!(dir.join(SUMMARY_FILE)));
    }
    if !report.conjecture_holds() {
        r.status = Status::Violation;
        for c in &report.counterexamples {
            r = r.note(format!(
                "cyclotomic but not a complete intersection: {:?}",
                c.min_gens
            ));
        }
        if let Some(dir) = &a.out {
            r = r.note(format!("records: {}", dir.join(RECORDS_FILE).display()));
        }
    }
    Ok(r)
}

fn execute(cmd: Command) -> Result<CommandResult> {
    match cmd {
        Command::Poly(c) => poly(c),
        Command::Sgp(c) => sgp(c),
        Command::Hilbert(c) => hilbert(c),
        Command::Survey(a) => survey(a),
    }
}

/// Parses `argv` (program name first), runs the command and writes its
/// output. Returns the process exit code.
pub fn dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let json_mode = cli.json;
    let result = execute(cli.command).unwrap_or_else(|e| CommandResult {
        status: Status::Error,
        payload: Map::from_iter([("error".to_string(), json!(e.to_string()))]),
        text: Vec::new(),
        diagnostics: vec![e.to_string()],
    });
    if json_mode {
        let _ = writeln!(out, "{}", result.to_json());
    } else {
        for line in &result.text {
            let _ = writeln!(out, "{line}");
        }
        let tag = if result.status == Status::Error {
            "error"
        } else {
            "note"
        };
        for d in &result.diagnostics {
            let _ = writeln!(err, "{tag}: {d}");
        }
    }
    result.exit_code()
}
