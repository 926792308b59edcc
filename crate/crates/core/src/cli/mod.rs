//! The `avecond` command-line front end.
//!
//! Every command writes one report (JSON by default, `--format text` for a
//! key/value summary) to stdout. Exit status is 0 on success, 2 when the
//! answer is a mathematical verdict such as "not regular" or "method not
//! applicable", and 1 on input or internal errors.

pub mod io;
pub mod json;
mod selftest;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::ave::{self, AveProblem};
use crate::certify;
use crate::cond::{self, CondResult};
use crate::dense::{self, vec_ops, Matrix, NormSpec, PNorm};
use crate::error::{Error, Result};
use crate::lcp::{self, LcpProblem};
use crate::regularity::{self, Verdict};
use crate::tol;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "avecond", version, about = "Condition numbers and error bounds for Ax - b = |x|")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for vertex enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Seed for sampling-based checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Largest n for which `auto` falls back to vertex enumeration.
    #[arg(long, global = true, default_value_t = cond::DEFAULT_ENUM_THRESHOLD)]
    pub enum_threshold: usize,

    /// Tolerance override, e.g. `--tol det_zero=1e-10`. Repeatable.
    #[arg(long = "tol", global = true, value_name = "NAME=VALUE")]
    pub tolerances: Vec<String>,

    /// Include wall time in the report (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Condition number of A.
    Condnum(CondArgs),
    /// Certified error bounds for a candidate solution x of Ax - b = |x|.
    Certify(CertifyArgs),
    /// Regularity of the interval matrix [A - I, A + I].
    Regularity(RegularityArgs),
    /// Solve Ax - b = |x| by sign enumeration.
    Solve(SolveArgs),
    /// Transform an LCP (M, q) and evaluate its condition quantities.
    Lcp(LcpArgs),
    /// Run the built-in regression checks.
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Exact,
    Symmetric2,
    Sigma,
    Diagdom2,
    InvNonneg,
    Hmatrix,
    Neumann,
    Enclosure,
    ScaledDd,
    RowDd,
    ColDd,
    Scaled1Gamma,
}

#[derive(Debug, clap::Args)]
pub struct CondSelect {
    /// Norm: 1, 2, inf, or scaled[1|2|inf]:<vector file> (plain `scaled:` is inf).
    #[arg(long, default_value = "inf")]
    pub norm: String,

    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,

    /// gamma in (rho(|A^-1|), 1) for scaled1-gamma.
    #[arg(long)]
    pub gamma: Option<f64>,

    /// Positive weight vector file for scaled-dd.
    #[arg(long)]
    pub weights: Option<PathBuf>,

    /// Column permutation for diagdom2, comma separated and 0-based.
    #[arg(long, value_delimiter = ',')]
    pub permutation: Option<Vec<usize>>,
}

#[derive(Debug, clap::Args)]
pub struct CondArgs {
    #[command(flatten)]
    pub select: CondSelect,
    /// Matrix file.
    pub matrix: PathBuf,
}

#[derive(Debug, clap::Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub select: CondSelect,
    /// Also run the weak-sharp-minimum check with this many samples.
    #[arg(long)]
    pub weak_sharp: Option<usize>,
    pub matrix: PathBuf,
    pub rhs: PathBuf,
    pub point: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegularityMethod {
    Auto,
    Exact,
    Sufficient,
    Symmetric,
}

#[derive(Debug, clap::Args)]
pub struct RegularityArgs {
    #[arg(long, value_enum, default_value_t = RegularityMethod::Auto)]
    pub method: RegularityMethod,
    pub matrix: PathBuf,
}

#[derive(Debug, clap::Args)]
pub struct SolveArgs {
    pub matrix: PathBuf,
    pub rhs: PathBuf,
}

#[derive(Debug, clap::Args)]
pub struct LcpArgs {
    /// Norm for the condition quantities.
    #[arg(long, default_value = "inf")]
    pub norm: String,
    pub matrix: PathBuf,
    /// Optional q; when given the LCP is solved through the transformed equation.
    pub q: Option<PathBuf>,
}

/// Exit status, stdout and stderr of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Inputs {
    list: Vec<Value>,
}

impl Inputs {
    fn new() -> Self {
        Self { list: Vec::new() }
    }

    fn load(&mut self, role: &str, path: &Path) -> Result<String> {
        let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        self.list.push(json!({
            "role": role,
            "path": path.display().to_string(),
            "sha256": io::sha256_hex(&bytes),
        }));
        String::from_utf8(bytes).map_err(|_| Error::Io(format!("{}: not valid UTF-8", path.display())))
    }

    fn matrix(&mut self, role: &str, path: &Path) -> Result<Matrix> {
        io::parse_matrix_str(&self.load(role, path)?)
    }

    fn vector(&mut self, role: &str, path: &Path) -> Result<Vec<f64>> {
        io::parse_vector_str(&self.load(role, path)?)
    }
}

/// Command-specific fields merged into the report, plus the exit status.
struct Body {
    fields: Map<String, Value>,
    code: i32,
}

impl Body {
    fn ok(fields: Map<String, Value>) -> Self {
        Self { fields, code: 0 }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

/// `1`, `2`, `inf` (also `one`, `two`), or `scaled[1|2|inf]:<vector file>`.
fn parse_norm(spec: &str, inputs: &mut Inputs) -> Result<NormSpec> {
    let plain = |s: &str| match s {
        "1" | "one" => Some(PNorm::One),
        "2" | "two" => Some(PNorm::Two),
        "inf" | "infinity" => Some(PNorm::Inf),
        _ => None,
    };
    if let Some(p) = plain(spec) {
        return Ok(NormSpec::plain(p));
    }
    let (kind, path) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidArgument(format!("unknown norm {spec:?}")))?;
    let p = match kind {
        "scaled" => PNorm::Inf,
        k => k
            .strip_prefix("scaled")
            .and_then(plain)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown norm {spec:?}")))?,
    };
    let d = inputs.vector("scaling", Path::new(path))?;
    NormSpec::scaled(p, d)
}

fn need_norm(ns: &NormSpec, want: &NormSpec, method: &str) -> Result<()> {
    if ns != want {
        return Err(Error::InvalidArgument(format!(
            "{method} works in the {} norm, not {}",
            want.label(),
            ns.label()
        )));
    }
    Ok(())
}

fn compute_cond(
    a: &Matrix,
    ns: &NormSpec,
    sel: &CondSelect,
    cli: &Cli,
    inputs: &mut Inputs,
    extra: &mut Map<String, Value>,
) -> Result<CondResult> {
    match sel.method {
        Method::Auto => cond::cond_auto(a, ns, cli.enum_threshold),
        Method::Exact => cond::cond_exact(a, ns),
        Method::Symmetric2 => {
            need_norm(ns, &NormSpec::TWO, "symmetric2")?;
            cond::cond_symmetric2(a)
        }
        Method::Sigma => {
            need_norm(ns, &NormSpec::TWO, "sigma")?;
            cond::cond_sigma_upper(a)
        }
        Method::Diagdom2 => {
            need_norm(ns, &NormSpec::TWO, "diagdom2")?;
            let r = cond::cond_diagdom2(a, sel.permutation.as_deref())?;
            extra.insert("companion".into(), to_value(&r.companion));
            Ok(r.vertex)
        }
        Method::InvNonneg => {
            need_norm(ns, &NormSpec::INF, "inv-nonneg")?;
            cond::cond_inv_nonneg_inf(a)
        }
        Method::Hmatrix => {
            need_norm(ns, &NormSpec::INF, "hmatrix")?;
            cond::cond_hmatrix_inf(a)
        }
        Method::Neumann => cond::cond_neumann_upper(a, ns),
        Method::Enclosure => {
            need_norm(ns, &NormSpec::INF, "enclosure")?;
            cond::cond_enclosure_inf(a)
        }
        Method::RowDd => {
            need_norm(ns, &NormSpec::INF, "row-dd")?;
            cond::row_dd_inf(a)
        }
        Method::ColDd => {
            need_norm(ns, &NormSpec::ONE, "col-dd")?;
            cond::col_dd_1(a)
        }
        Method::ScaledDd => {
            let path = sel
                .weights
                .as_ref()
                .ok_or_else(|| Error::InvalidArgument("scaled-dd needs --weights".into()))?;
            let r = inputs.vector("weights", path)?;
            cond::cond_scaled_dd(a, &r)
        }
        Method::Scaled1Gamma => {
            let gamma = sel
                .gamma
                .ok_or_else(|| Error::InvalidArgument("scaled1-gamma needs --gamma".into()))?;
            let s = cond::cond_scaled1_gamma(a, gamma)?;
            extra.insert("weights".into(), to_value(&s.v));
            extra.insert("tau".into(), to_value(&s.tau));
            Ok(s.result)
        }
    }
}

fn cmd_condnum(cli: &Cli, args: &CondArgs, inputs: &mut Inputs) -> Result<Body> {
    let a = inputs.matrix("A", &args.matrix)?;
    let ns = parse_norm(&args.select.norm, inputs)?;
    let mut extra = Map::new();
    let r = compute_cond(&a, &ns, &args.select, cli, inputs, &mut extra)?;
    let mut fields = object(to_value(&r));
    fields.extend(extra);
    Ok(Body::ok(fields))
}

fn cmd_certify(cli: &Cli, args: &CertifyArgs, inputs: &mut Inputs) -> Result<Body> {
    let a = inputs.matrix("A", &args.matrix)?;
    let b = inputs.vector("b", &args.rhs)?;
    let x = inputs.vector("x", &args.point)?;
    let ns = parse_norm(&args.select.norm, inputs)?;
    let p = AveProblem::new(a, b)?;
    let mut extra = Map::new();
    let c = compute_cond(&p.a, &ns, &args.select, cli, inputs, &mut extra)?;
    let report = if ns.vector_norm(&p.b) > tol::current().zero_rhs {
        certify::certify_rel_with(&p, &x, &ns, &c)?
    } else {
        certify::certify_abs(&p, &x, &ns, &c)?
    };
    let mut fields = object(to_value(&report));
    fields.extend(extra);
    if let Some(samples) = args.weak_sharp {
        let w = certify::weak_sharp_check(&p, samples, cli.seed)?;
        fields.insert("weak_sharp".into(), to_value(&w));
    }
    Ok(Body::ok(fields))
}

fn cmd_regularity(cli: &Cli, args: &RegularityArgs, inputs: &mut Inputs) -> Result<Body> {
    let a = inputs.matrix("A", &args.matrix)?;
    let n = a.square_dim("regularity")?;
    let r = match args.method {
        RegularityMethod::Exact => regularity::regularity_exact(&a)?,
        RegularityMethod::Sufficient => regularity::regularity_sufficient(&a)?,
        RegularityMethod::Symmetric => regularity::regularity_symmetric(&a)?,
        RegularityMethod::Auto if n <= cli.enum_threshold => regularity::regularity_exact(&a)?,
        RegularityMethod::Auto if dense::is_symmetric(&a) => regularity::regularity_symmetric(&a)?,
        RegularityMethod::Auto => regularity::regularity_sufficient(&a)?,
    };
    let code = if r.verdict == Verdict::NotRegular { 2 } else { 0 };
    Ok(Body {
        fields: object(to_value(&r)),
        code,
    })
}

fn cmd_solve(args: &SolveArgs, inputs: &mut Inputs) -> Result<Body> {
    let a = inputs.matrix("A", &args.matrix)?;
    let b = inputs.vector("b", &args.rhs)?;
    let all = ave::solve_all(&AveProblem::new(a, b)?)?;
    let code = if all.solutions.len() == 1 { 0 } else { 2 };
    let mut fields = object(to_value(&all));
    fields.insert("count".into(), json!(all.solutions.len()));
    Ok(Body { fields, code })
}

fn outcome_value<T: Serialize>(r: Result<T>) -> Value {
    match r {
        Ok(v) => to_value(&v),
        Err(e) => json!({ "not_applicable": e.to_string() }),
    }
}

fn cmd_lcp(args: &LcpArgs, inputs: &mut Inputs) -> Result<Body> {
    let m = inputs.matrix("M", &args.matrix)?;
    let n = m.square_dim("lcp")?;
    let q = match &args.q {
        Some(path) => inputs.vector("q", path)?,
        None => vec![0.0; n],
    };
    let ns = parse_norm(&args.norm, inputs)?;
    let lp = LcpProblem::new(m, q)?;
    let p = lcp::lcp_to_ave(&lp)?;

    let mut f = Map::new();
    f.insert("transform_matrix".into(), to_value(&rows(&p.a)));
    if args.q.is_some() {
        f.insert("transform_rhs".into(), to_value(&p.b));
    }
    f.insert("norm".into(), to_value(&ns));
    f.insert("p_equivalence".into(), outcome_value(lcp::pmatrix_equivalence(&lp.m)));
    f.insert("chen_xiang".into(), outcome_value(lcp::chen_xiang_constant(&lp, &ns)));
    f.insert("cond_m_matrix".into(), outcome_value(lcp::lcp_cond_M_matrix(&lp, &ns)));
    f.insert("cond_h_matrix".into(), outcome_value(lcp::lcp_cond_H_matrix(&lp, &ns)));
    f.insert("chen_upper".into(), outcome_value(lcp::lcp_chen_upper(&lp, &ns)));
    f.insert(
        "inf_enclosure_upper".into(),
        outcome_value(lcp::lcp_inf_enclosure(&lp)),
    );
    f.insert("transform_cond".into(), outcome_value(cond::cond_exact(&p.a, &ns)));
    if args.q.is_some() {
        let sol = ave::solve_exact(&p).map(|s| {
            let lcp_sol = lcp::ave_to_lcp_solution(&s.x_star);
            let theta = lcp::natural_residual(&lp, &lcp_sol.z).unwrap_or_default();
            json!({
                "x": s.x_star,
                "z": lcp_sol.z,
                "w": lcp_sol.w,
                "complementarity_gap": lcp_sol.complementarity_gap,
                "natural_residual_inf": vec_ops::norm_inf(&theta),
            })
        });
        f.insert("solution".into(), outcome_value(sol));
    }
    Ok(Body::ok(f))
}

fn rows(m: &Matrix) -> Vec<Vec<f64>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn apply_tolerances(overrides: &[String]) -> Result<()> {
    if overrides.is_empty() {
        return Ok(());
    }
    let mut v = to_value(&tol::current());
    for o in overrides {
        let (k, val) = o
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("tolerance override {o:?} is not NAME=VALUE")))?;
        let slot = v
            .get_mut(k)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown tolerance {k:?}")))?;
        *slot = if slot.is_u64() {
            json!(val.parse::<u64>().map_err(|_| Error::InvalidArgument(format!("{k} needs an integer")))?)
        } else {
            json!(val.parse::<f64>().map_err(|_| Error::InvalidArgument(format!("{k} needs a number")))?)
        };
    }
    let t: tol::Tolerances =
        serde_json::from_value(v).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    tol::set(t);
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Condnum(_) => "condnum",
        Command::Certify(_) => "certify",
        Command::Regularity(_) => "regularity",
        Command::Solve(_) => "solve",
        Command::Lcp(_) => "lcp",
        Command::Selftest => "selftest",
    }
}

fn render(report: &Map<String, Value>, format: Format) -> String {
    match format {
        Format::Json => json::to_string(&Value::Object(report.clone())),
        Format::Text => {
            let mut s = String::new();
            for (k, v) in report {
                let shown = match v {
                    Value::String(t) => t.clone(),
                    other => other.to_string(),
                };
                s.push_str(&format!("{k}: {shown}\n"));
            }
            s
        }
    }
}

/// Execute a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    if let Some(t) = cli.threads {
        // Only the first pool configuration in a process takes effect.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    if let Err(e) = apply_tolerances(&cli.tolerances) {
        return Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        };
    }

    if let Command::Selftest = cli.command {
        return selftest::run(cli.format);
    }

    let mut inputs = Inputs::new();
    let result = match &cli.command {
        Command::Condnum(a) => cmd_condnum(cli, a, &mut inputs),
        Command::Certify(a) => cmd_certify(cli, a, &mut inputs),
        Command::Regularity(a) => cmd_regularity(cli, a, &mut inputs),
        Command::Solve(a) => cmd_solve(a, &mut inputs),
        Command::Lcp(a) => cmd_lcp(a, &mut inputs),
        Command::Selftest => unreachable!(),
    };

    let mut report = Map::new();
    report.insert("schema_version".into(), json!(SCHEMA_VERSION));
    report.insert("command".into(), json!(command_name(&cli.command)));
    report.insert("inputs".into(), Value::Array(inputs.list));
    let mut stderr = String::new();
    let code = match result {
        Ok(body) => {
            let status = if body.code == 0 { "ok" } else { "not_applicable" };
            report.insert("status".into(), json!(status));
            report.extend(body.fields);
            body.code
        }
        Err(e) => {
            let (status, code) = if e.is_inapplicability() {
                ("not_applicable", 2)
            } else {
                ("error", 1)
            };
            report.insert("status".into(), json!(status));
            report.insert("error".into(), json!(e.to_string()));
            if let Error::NotRegular { witness } = &e {
                report.insert("verdict".into(), json!("NotRegular"));
                report.insert("witness".into(), json!(witness));
            }
            stderr = format!("{status}: {e}\n");
            code
        }
    };
    if cli.timing {
        report.insert("wall_time_s".into(), json!(start.elapsed().as_secs_f64()));
    }
    Outcome {
        code,
        stdout: render(&report, cli.format),
        stderr,
    }
}

/// Parse `args` (including the program name), run, print and return the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let out = run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
