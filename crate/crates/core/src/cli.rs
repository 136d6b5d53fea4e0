//! Command-line front end. Every command produces a JSON report wrapped in
//! an envelope recording the tool version, seed and bounds; the text format
//! is a rendering of the same JSON.
//!
//! Exit codes: 0 when every assertion holds, 1 when a mathematical
//! assertion fails, 2 on input errors.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{gen_nakayama, Algebra, Decision};
use crate::error::{Error, Result};
use crate::homotopy::{shift_window, HomSpace, ProjComplex};
use crate::io::{
    algebra_from_json, algebra_to_json, complex_to_json, complexes_from_json, field_name, load_algebra,
    parse_builtin, parse_field, QuiverFile,
};
use crate::k0::dim_vector;
use crate::perm::Permutation;
use crate::tilting::{
    derived_invariance_report, end_algebra, enumerate_two_term_tilting, split_summands, verify_tilting, CheckStatus,
    Pruning, SearchBounds, TiltingCandidate, Verdict,
};
use exactla::Field;

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PruningArg {
    Orbits,
    Permutations,
}

/// Exact computations with self-injective algebras and tilting complexes.
///
/// ALGEBRA is `N(n,l)` (the Nakayama algebra on the cyclic quiver with n
/// vertices and paths of length l set to zero) or a path to an algebra or
/// quiver JSON file. COMPLEX is a path to a complex JSON file, or `A` /
/// `A[k]` for the regular stalk complex and its shifts.
#[derive(Debug, Parser)]
#[command(name = "selfinj", version)]
pub struct Cli {
    /// Base field for builtin algebras and quivers: Q or Fp:<p>.
    #[arg(long, global = true, default_value = "Fp:2")]
    pub field: String,
    /// Triangles allowed in a generation certificate.
    #[arg(long, global = true, default_value_t = 4)]
    pub depth: usize,
    /// Largest multiplicity of one projective in a term of a search candidate.
    #[arg(long, global = true, default_value_t = 1)]
    pub max_mult: usize,
    /// Coefficients in [-c, c] for searches over Q.
    #[arg(long, global = true, default_value_t = 2)]
    pub coeff_range: i64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the algebra axioms and Peirce data.
    Validate { algebra: String },
    /// Basis of the Jacobson radical.
    Radical { algebra: String },
    /// Cartan matrix.
    Cartan { algebra: String },
    /// Self-injective, Frobenius, weakly symmetric and symmetric verdicts.
    Classify { algebra: String },
    /// Nakayama permutation and its cycle type.
    Nakayama { algebra: String },
    /// Elementary divisors of the Cartan matrix.
    StableK0 { algebra: String },
    /// Dimensions of Hom(X, Y[k]) in the homotopy category for all k.
    Hom { algebra: String, x: String, y: String },
    /// Decide whether a complex is tilting.
    TiltVerify { algebra: String, complex: String },
    /// Enumerate two-term tilting complexes.
    TiltSearch {
        algebra: String,
        #[arg(long, value_enum, default_value_t = PruningArg::Orbits)]
        pruning: PruningArg,
    },
    /// Opposite endomorphism algebra of a complex.
    EndAlgebra { algebra: String, complex: String },
    /// Check the derived invariants carried across a tilting complex.
    VerifyTheorem { algebra: String, complex: String },
    /// Quiver presentation of N(n,l).
    Gen {
        n: usize,
        l: usize,
        /// Emit the algebra instead of the quiver.
        #[arg(long)]
        algebra: bool,
    },
    /// Tensor product of two algebras.
    Tensor { left: String, right: String },
    /// Extension of scalars from F_p to F_{p^m}.
    ExtendScalars { algebra: String, degree: u32 },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Radical { .. } => "radical",
            Command::Cartan { .. } => "cartan",
            Command::Classify { .. } => "classify",
            Command::Nakayama { .. } => "nakayama",
            Command::StableK0 { .. } => "stable-k0",
            Command::Hom { .. } => "hom",
            Command::TiltVerify { .. } => "tilt-verify",
            Command::TiltSearch { .. } => "tilt-search",
            Command::EndAlgebra { .. } => "end-algebra",
            Command::VerifyTheorem { .. } => "verify-theorem",
            Command::Gen { .. } => "gen",
            Command::Tensor { .. } => "tensor",
            Command::ExtendScalars { .. } => "extend-scalars",
        }
    }
}

/// Outcome of a command before wrapping.
struct Outcome {
    passed: bool,
    result: Value,
}

impl Outcome {
    fn ok(result: Value) -> Outcome {
        Outcome { passed: true, result }
    }
}

/// A finished run: exit code and rendered report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub code: i32,
    pub json: Value,
    pub rendered: String,
}

fn is_input_error(e: &Error) -> bool {
    !matches!(e, Error::NotSelfInjective | Error::NoFrobeniusForm | Error::NotBasic)
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))
}

struct Context {
    field: Field,
}

impl Context {
    fn algebra(&self, spec: &str) -> Result<Algebra> {
        if parse_builtin(spec).is_some() {
            return load_algebra(spec, None, &self.field);
        }
        load_algebra(spec, Some(&read(spec)?), &self.field)
    }
}

/// `A` or `A[k]`.
fn parse_regular(spec: &str) -> Option<i64> {
    let t = spec.trim();
    if t == "A" {
        return Some(0);
    }
    t.strip_prefix("A[")?.strip_suffix(']')?.trim().parse().ok()
}

/// The summands of a complex argument. A regular stalk is split into its
/// indecomposable projectives; a file holds either a summand list or one
/// complex, which is split along its radical form.
fn summands(alg: &Algebra, spec: &str) -> Result<Vec<ProjComplex>> {
    if let Some(k) = parse_regular(spec) {
        return Ok((0..alg.n_idempotents()).map(|i| ProjComplex::stalk(&[i], -k)).collect());
    }
    let text = read(spec)?;
    let list = complexes_from_json(&text, alg)?;
    if list.len() == 1 {
        return split_summands(alg, &list[0]);
    }
    Ok(list)
}

fn complex(alg: &Algebra, spec: &str) -> Result<ProjComplex> {
    if let Some(k) = parse_regular(spec) {
        return Ok(ProjComplex::regular(alg, 0).shift(alg, k));
    }
    let list = complexes_from_json(&read(spec)?, alg)?;
    Ok(list.iter().fold(ProjComplex::zero(), |acc, x| acc.direct_sum(alg, x)))
}

fn perm_json(s: &Permutation) -> Value {
    json!({
        "images": s.images(),
        "cycles": s.to_string(),
        "cycle_type": s.cycle_type(),
        "transitive": s.is_transitive(),
    })
}

fn decision(d: Decision) -> Value {
    serde_json::to_value(d).expect("serializable")
}

fn summands_json(alg: &Algebra, list: &[ProjComplex]) -> Value {
    let n = alg.n_idempotents();
    Value::Array(
        list.iter()
            .map(|x| json!({ "complex": complex_to_json(alg, x), "dim_vector": dim_vector(x, n) }))
            .collect(),
    )
}

fn candidate_json(alg: &Algebra, c: &TiltingCandidate) -> Value {
    json!({
        "summands": summands_json(alg, &c.summands),
        "two_term_summand": c.has_two_term_summand(),
        "one_degree": c.is_one_degree(),
        "report": c.report,
    })
}

fn cartan_json(alg: &Algebra) -> Result<Value> {
    Ok(json!(alg.cartan_matrix()?.to_i64_rows()))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let ctx = Context { field: parse_field(&cli.field)? };
    let f = &ctx.field;
    Ok(match &cli.command {
        Command::Validate { algebra } => {
            let a = ctx.algebra(algebra)?;
            a.check_axioms()?;
            Outcome::ok(json!({
                "valid": true,
                "dim": a.dim(),
                "basis": a.labels(),
                "idempotents": a.n_idempotents(),
                "basic": if a.has_peirce() { Some(a.is_basic()?) } else { None },
            }))
        }
        Command::Radical { algebra } => {
            let a = ctx.algebra(algebra)?;
            let j = a.radical()?;
            let basis: Vec<Vec<String>> =
                j.basis().iter().map(|v| v.iter().map(|c| a.field().format(c)).collect()).collect();
            Outcome::ok(json!({ "dim": j.dim(), "basis": basis }))
        }
        Command::Cartan { algebra } => {
            let a = ctx.algebra(algebra)?;
            Outcome::ok(json!({ "cartan": cartan_json(&a)? }))
        }
        Command::Classify { algebra } => {
            let a = ctx.algebra(algebra)?;
            let si = a.is_self_injective()?;
            let frob = a.frobenius_form()?.decision();
            let ws = if a.has_peirce() { Some(a.is_weakly_symmetric()?) } else { None };
            Outcome::ok(json!({
                "self_injective": si,
                "frobenius": decision(frob),
                "weakly_symmetric": ws,
                "symmetric": decision(a.is_symmetric()?),
            }))
        }
        Command::Nakayama { algebra } => {
            let a = ctx.algebra(algebra)?;
            let sigma = a.nakayama_permutation()?;
            Outcome::ok(json!({ "sigma": perm_json(&sigma) }))
        }
        Command::StableK0 { algebra } => {
            let a = ctx.algebra(algebra)?;
            let s = a.stable_k0()?;
            let divisors: Vec<String> = s.divisors.iter().map(|d| d.to_string()).collect();
            Outcome::ok(json!({ "elementary_divisors": divisors, "free": s.free }))
        }
        Command::Hom { algebra, x, y } => {
            let a = ctx.algebra(algebra)?;
            let (x, y) = (complex(&a, x)?, complex(&a, y)?);
            let dims: Vec<Value> = shift_window(&x, &y)
                .map(|k| json!({ "shift": k, "dim": HomSpace::new(&a, &x, &y, k).dim() }))
                .collect();
            Outcome::ok(json!({ "hom": dims }))
        }
        Command::TiltVerify { algebra, complex } => {
            let a = ctx.algebra(algebra)?;
            let list = summands(&a, complex)?;
            let report = verify_tilting(&a, &list, cli.depth)?;
            Outcome {
                passed: report.verdict == Verdict::Tilting,
                result: json!({ "summands": summands_json(&a, &list), "report": report }),
            }
        }
        Command::TiltSearch { algebra, pruning } => {
            let a = ctx.algebra(algebra)?;
            let bounds = SearchBounds {
                max_mult: cli.max_mult,
                coeff_range: cli.coeff_range,
                depth: cli.depth,
                pruning: match pruning {
                    PruningArg::Orbits => Pruning::Orbits,
                    PruningArg::Permutations => Pruning::Permutations,
                },
            };
            let r = enumerate_two_term_tilting(&a, bounds)?;
            Outcome::ok(json!({
                "codes": r.codes,
                "representatives": r.representatives,
                "indecomposables": r.indecomposables.len(),
                "unresolved_isos": r.unresolved_isos,
                "rejected": r.rejected,
                "tilting_count": r.tilting.len(),
                "two_term_count": r.tilting.iter().filter(|c| c.has_two_term_summand()).count(),
                "tilting": r.tilting.iter().map(|c| candidate_json(&a, c)).collect::<Vec<_>>(),
                "undecided": r.undecided.iter().map(|c| candidate_json(&a, c)).collect::<Vec<_>>(),
            }))
        }
        Command::EndAlgebra { algebra, complex } => {
            let a = ctx.algebra(algebra)?;
            let list = summands(&a, complex)?;
            let e = end_algebra(&a, &list)?;
            Outcome::ok(json!({
                "dim": e.algebra.dim(),
                "cartan": cartan_json(&e.algebra)?,
                "algebra": algebra_to_json(&e.algebra),
            }))
        }
        Command::VerifyTheorem { algebra, complex } => {
            let a = ctx.algebra(algebra)?;
            let list = summands(&a, complex)?;
            let r = derived_invariance_report(&a, &list, cli.depth)?;
            let failures: Vec<&str> = r.failures().iter().map(|c| c.name).collect();
            let undecided: Vec<&str> =
                r.checks.iter().filter(|c| c.status == CheckStatus::Undecided).map(|c| c.name).collect();
            Outcome {
                passed: r.all_pass(),
                result: json!({
                    "summands": summands_json(&a, &list),
                    "sigma_a": perm_json(&r.sigma_a),
                    "sigma_b": r.sigma_b.as_ref().map(perm_json),
                    "end_algebra": algebra_to_json(&r.end.algebra),
                    "checks": r.checks,
                    "failures": failures,
                    "undecided": undecided,
                    "tilting": r.tilting,
                }),
            }
        }
        Command::Gen { n, l, algebra } => {
            if *n == 0 || *l == 0 {
                return Err(Error::Invalid("gen needs n, l >= 1".into()));
            }
            let q = gen_nakayama(*n, *l);
            if *algebra {
                Outcome::ok(algebra_to_json(&q.to_algebra(f)?))
            } else {
                Outcome::ok(serde_json::to_value(QuiverFile::of(&q)).expect("serializable"))
            }
        }
        Command::Tensor { left, right } => {
            let (a, b) = (ctx.algebra(left)?, ctx.algebra(right)?);
            Outcome::ok(algebra_to_json(&a.tensor_product(&b)?))
        }
        Command::ExtendScalars { algebra, degree } => {
            let a = ctx.algebra(algebra)?;
            Outcome::ok(algebra_to_json(&a.extend_scalars(*degree)?))
        }
    })
}

/// Runs a parsed command line without touching standard output.
pub fn run(cli: &Cli) -> Report {
    let outcome = execute(cli);
    let (code, status, result, error) = match outcome {
        Ok(o) if o.passed => (0, "pass", o.result, None),
        Ok(o) => (1, "fail", o.result, None),
        Err(e) => {
            let code = if is_input_error(&e) { 2 } else { 1 };
            (code, if code == 2 { "error" } else { "fail" }, Value::Null, Some(e.to_string()))
        }
    };
    let json = json!({
        "tool": TOOL,
        "version": VERSION,
        "command": cli.command.name(),
        "seed": cli.seed,
        "field": parse_field(&cli.field).map(|f| field_name(&f)).unwrap_or_else(|_| cli.field.clone()),
        "bounds": { "depth": cli.depth, "max_mult": cli.max_mult, "coeff_range": cli.coeff_range },
        "status": status,
        "exit_code": code,
        "error": error,
        "result": result,
    });
    let rendered = match cli.format {
        Format::Json => serde_json::to_string_pretty(&json).expect("serializable") + "\n",
        Format::Text => render_text(&json),
    };
    Report { code, json, rendered }
}

/// Parses `args` (program name first), runs, and writes the report to
/// `--out` or standard output. Returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let report = run(&cli);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(Path::new(path), &report.rendered) {
                eprintln!("cannot write {path}: {e}");
                return 2;
            }
        }
        None => print!("{}", report.rendered),
    }
    if let Some(e) = report.json["error"].as_str() {
        eprintln!("error: {e}");
    }
    report.code
}

/// Indented `key: value` lines.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a) if a.iter().all(|x| x.as_array().is_some_and(|r| r.iter().all(|y| !y.is_object() && !y.is_array()))) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}- [{i}]");
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

/// Reads an algebra file as the CLI does; exposed for examples and tests.
pub fn read_algebra_file(path: &str, field: &Field) -> Result<Algebra> {
    algebra_from_json(&read(path)?, field)
}
