use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{error::ErrorKind, ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::eval::expr_to_words;
use super::parse::parse_expr;
use crate::colorheis::{
    build_three_rel, build_two_rel, check_closed_form_products, polynomial_nogo, recurrence_closed_form_check,
    sample, verify_relations, NoGoSystem, Realization,
};
use crate::error::{Error, Result};
use crate::numkit::{
    bernoulli_number, euler_number, parse_rational, stirling2, stirling_transform_g, GaussianRational, Rational,
};
use crate::polyop::{
    apply_series, block_residuals, block_triple, euler_interp_residual_truncated, realization_action_check,
    stirling_interp_residual_truncated, BlockKind, Poly,
};
use crate::weyl::{normal_order, ASeries, NormalSeries};
use crate::DEFAULT_WINDOW;

#[derive(Parser, Debug)]
#[command(name = "colorheis", version, about = "Exact computations with color Heisenberg realizations")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Emit::Text, global = true)]
    emit: Emit,
    /// Seed for the randomized commands.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Exact window for series constructions.
    #[arg(long, default_value_t = DEFAULT_WINDOW, global = true)]
    window: usize,
    /// Worker threads for independent cases.
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euler, Bernoulli or Stirling numbers.
    Numbers(NumbersArgs),
    /// Normal-order a word expression in A and B.
    NormalOrder {
        expr: String,
    },
    /// Build A1, A2, A3 from parameters.
    Build(RealizationArgs),
    /// Check the three relations for given or random parameters.
    Verify(VerifyArgs),
    /// Solve the polynomial no-go system for bidegree (M, N).
    Nogo {
        #[arg(long = "M")]
        m: usize,
        #[arg(long = "N")]
        n: usize,
    },
    /// Apply a series to a polynomial with A = d/dx, B = x.
    Apply(ApplyArgs),
    /// Check an interpolation identity on polynomials.
    Interp(InterpArgs),
    /// Check a 2x2 block realization on polynomial pairs.
    Blocks(BlocksArgs),
    /// Compare the diagonal recurrence with its closed form.
    RecurrenceCheck(RecurrenceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum NumberKind {
    Euler,
    Bernoulli,
    /// Row `S(n, k)`, `k = 0..=n`.
    Stirling,
    /// `sum_k (-1)^k k! 2^{-k} S(nu, k)` for `nu = 0..=n`.
    StirlingSum,
}

#[derive(Args, Debug)]
struct NumbersArgs {
    #[arg(long, value_enum)]
    kind: NumberKind,
    #[arg(long, default_value_t = 10)]
    n: usize,
}

#[derive(Args, Debug)]
struct RealizationArgs {
    /// Nonzero constant of the three-relation family.
    #[arg(long, conflicts_with_all = ["v", "w", "file"])]
    c: Option<String>,
    /// Odd series as `deg:coeff` pairs.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["v", "w", "file"])]
    phi: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["v", "w", "file"])]
    psi: Option<String>,
    /// Two-relation coefficient series as `deg:coeff` pairs.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "file")]
    v: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "file")]
    w: Option<String>,
    /// Parameter file as written by `build --emit json`, or `-` for stdin.
    #[arg(long)]
    file: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    params: RealizationArgs,
    /// Only the first two relations.
    #[arg(long)]
    first_two: bool,
    /// Verify this many random three-relation cases instead.
    #[arg(long, conflicts_with_all = ["c", "phi", "psi", "v", "w", "file"])]
    random: Option<usize>,
    /// Also check the action on x^n for n up to this degree.
    #[arg(long)]
    action: Option<usize>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("operator").required(true).args(["series", "expr", "t"])))]
struct ApplyArgs {
    /// Series JSON file, or `-` for stdin.
    #[arg(long)]
    series: Option<String>,
    /// Word expression in A and B.
    #[arg(long)]
    expr: Option<String>,
    /// The parity series T.
    #[arg(long)]
    t: bool,
    /// Polynomial in x, or `-` for stdin.
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InterpKind {
    Euler,
    Stirling,
}

#[derive(Args, Debug)]
struct InterpArgs {
    #[arg(long, value_enum)]
    kind: InterpKind,
    /// Scale of the Euler identity.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    alpha: String,
    /// Extra terms beyond the natural truncation.
    #[arg(long, default_value_t = 0)]
    extra: usize,
    /// Polynomial to test, or `-` for stdin; without it every x^k, k <= n.
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    #[arg(long, default_value_t = 12)]
    n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BlockKindArg {
    DirectSum,
    Pauli,
}

#[derive(Args, Debug)]
struct BlocksArgs {
    #[arg(long, value_enum)]
    kind: BlockKindArg,
    /// Use `B = x - (d/dx)^s` in the B slot.
    #[arg(long)]
    s: Option<u32>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "random")]
    p0: Option<String>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "random")]
    p1: Option<String>,
    /// Check this many random pairs of degree <= 8 instead.
    #[arg(long, conflicts_with_all = ["p0", "p1"])]
    random: Option<usize>,
}

#[derive(Args, Debug)]
struct RecurrenceArgs {
    /// Comma-separated `c_0, c_1, ...`; random from `--seed` when absent.
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    #[arg(long, default_value_t = 10)]
    j: usize,
    #[arg(long, default_value_t = 10)]
    l: usize,
}

/// What a command produced. `key` names the payload in JSON output.
struct Outcome {
    ok: bool,
    key: &'static str,
    payload: Value,
    input: Value,
    text: String,
}

impl Outcome {
    fn result(ok: bool, payload: Value, input: Value, text: String) -> Self {
        Outcome {
            ok,
            key: "result",
            payload,
            input,
            text,
        }
    }
}

/// Runs one command line (`args[0]` is the program name) and returns the
/// exit status: 0 on success, 1 when a check fails, 2 on usage, parse or
/// window errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{shown}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{shown}");
                    2
                }
            };
        }
    };
    let emit = cli.common.emit;
    match dispatch(&cli, stdin) {
        Ok(out) => {
            let written = match emit {
                Emit::Json => {
                    let mut obj = serde_json::Map::new();
                    obj.insert("ok".into(), Value::Bool(out.ok));
                    obj.insert(out.key.into(), out.payload);
                    obj.insert("input".into(), out.input);
                    writeln!(stdout, "{}", Value::Object(obj))
                }
                Emit::Text => write!(stdout, "{}", out.text),
            };
            if written.is_err() {
                return 2;
            }
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if emit == Emit::Json {
                let _ = writeln!(stdout, "{}", json!({ "ok": false, "error": e.to_string() }));
            }
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    let common = &cli.common;
    match &cli.command {
        Command::Numbers(a) => numbers(a),
        Command::NormalOrder { expr } => normal_order_cmd(expr),
        Command::Build(a) => build_cmd(a, common, stdin),
        Command::Verify(a) => verify_cmd(a, common, stdin),
        Command::Nogo { m, n } => nogo_cmd(*m, *n),
        Command::Apply(a) => apply_cmd(a, common, stdin),
        Command::Interp(a) => interp_cmd(a, stdin),
        Command::Blocks(a) => blocks_cmd(a, common),
        Command::RecurrenceCheck(a) => recurrence_cmd(a, common),
    }
}

fn read_stdin(stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    stdin
        .read_to_string(&mut s)
        .map_err(|e| Error::Format(format!("stdin: {e}")))?;
    Ok(s)
}

/// Contents of a file argument, with `-` meaning stdin.
fn read_file(path: &str, stdin: &mut dyn Read) -> Result<String> {
    if path == "-" {
        read_stdin(stdin)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{path}: {e}")))
    }
}

/// An inline polynomial, with `-` meaning stdin.
fn read_poly(text: &str, stdin: &mut dyn Read) -> Result<Poly> {
    if text == "-" {
        read_stdin(stdin)?.trim().parse()
    } else {
        text.parse()
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Format(format!("JSON: {e}")))
}

fn rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_rational)
        .collect()
}

fn numbers(a: &NumbersArgs) -> Result<Outcome> {
    let values: Vec<Rational> = match a.kind {
        NumberKind::Euler => (0..=a.n).map(euler_number).collect(),
        NumberKind::Bernoulli => (0..=a.n).map(bernoulli_number).collect(),
        NumberKind::Stirling => (0..=a.n as u64)
            .map(|k| Rational::from_integer(stirling2(a.n as u64, k)))
            .collect(),
        NumberKind::StirlingSum => (0..=a.n as u64).map(stirling_transform_g).collect(),
    };
    let strings: Vec<String> = values.iter().map(ToString::to_string).collect();
    let text = format!("{}\n", strings.join(" "));
    let kind = a.kind.to_possible_value().map(|v| v.get_name().to_string());
    Ok(Outcome::result(
        true,
        json!(strings),
        json!({ "kind": kind, "n": a.n }),
        text,
    ))
}

fn normal_order_cmd(expr: &str) -> Result<Outcome> {
    let series = normal_order(&expr_to_words(&parse_expr(expr)?)?);
    let mut payload = series.to_json();
    payload["text"] = Value::String(series.to_string());
    Ok(Outcome::result(
        true,
        payload,
        json!({ "expr": expr }),
        format!("{series}\n"),
    ))
}

fn pairs(text: Option<&str>, window: usize) -> Result<ASeries> {
    ASeries::parse_pairs(text.unwrap_or(""), window)
}

/// Polynomial literals are exact at every degree; `phi` needs one degree
/// past the window.
fn realization_from(a: &RealizationArgs, window: usize, stdin: &mut dyn Read) -> Result<Realization> {
    if let Some(path) = &a.file {
        let value = parse_json(&read_file(path, stdin)?)?;
        // accept the full `build --emit json` object as well as bare parameters
        let params = value
            .pointer("/result/params")
            .or_else(|| value.get("params"))
            .unwrap_or(&value);
        return Realization::from_params_json(params);
    }
    let three = a.c.is_some() || a.phi.is_some() || a.psi.is_some();
    let two = a.v.is_some() || a.w.is_some();
    match (three, two) {
        (true, _) => {
            let c: GaussianRational = a.c.as_deref().unwrap_or("1").parse()?;
            build_three_rel(
                &c,
                &pairs(a.phi.as_deref(), window + 1)?,
                &pairs(a.psi.as_deref(), window + 1)?,
                window,
            )
        }
        (false, true) => build_two_rel(
            &pairs(a.v.as_deref(), window)?,
            &pairs(a.w.as_deref(), window)?,
            window,
        ),
        (false, false) => Err(Error::Format(
            "give --c/--phi/--psi, --v/--w or --file".into(),
        )),
    }
}

fn realization_input(a: &RealizationArgs, window: usize) -> Value {
    let mut input = serde_json::Map::new();
    for (key, value) in [
        ("c", &a.c),
        ("phi", &a.phi),
        ("psi", &a.psi),
        ("v", &a.v),
        ("w", &a.w),
        ("file", &a.file),
    ] {
        if let Some(v) = value {
            input.insert(key.into(), Value::String(v.clone()));
        }
    }
    input.insert("window".into(), json!(window));
    Value::Object(input)
}

fn build_cmd(a: &RealizationArgs, common: &Common, stdin: &mut dyn Read) -> Result<Outcome> {
    let r = realization_from(a, common.window, stdin)?;
    let payload = json!({
        "params": r.params_json(),
        "a1": r.a1.to_json(),
        "a2": r.a2.to_json(),
        "a3": r.a3.to_json(),
    });
    let text = format!("A1 = {}\nA2 = {}\nA3 = {}\n", r.a1, r.a2, r.a3);
    Ok(Outcome::result(true, payload, realization_input(a, common.window), text))
}

struct CaseReport {
    relations: bool,
    closed_forms: bool,
    action: Option<bool>,
    residuals: Value,
    text: String,
}

impl CaseReport {
    fn ok(&self) -> bool {
        self.relations && self.closed_forms && self.action.unwrap_or(true)
    }
}

fn check_realization(r: &Realization, first_two: bool, action: Option<usize>) -> Result<CaseReport> {
    let res = verify_relations(r)?;
    let relations = if first_two {
        res.first_two_zero()
    } else {
        res.all_zero()
    };
    let closed_forms = check_closed_form_products(r)?;
    let action = action.map(|d| realization_action_check(r, d)).transpose()?;
    let mut text = format!("r1 = {}\nr2 = {}\n", res.r1, res.r2);
    if !first_two {
        let _ = writeln!(text, "r3 = {}", res.r3);
    }
    let _ = writeln!(text, "closed forms: {}", if closed_forms { "match" } else { "differ" });
    if let Some(a) = action {
        let _ = writeln!(text, "action: {}", if a { "holds" } else { "fails" });
    }
    let mut residuals = res.to_json();
    if first_two {
        residuals.as_object_mut().expect("object").remove("r3");
    }
    Ok(CaseReport {
        relations,
        closed_forms,
        action,
        residuals,
        text,
    })
}

fn verify_cmd(a: &VerifyArgs, common: &Common, stdin: &mut dyn Read) -> Result<Outcome> {
    if let Some(count) = a.random {
        return verify_random(count, a, common);
    }
    let r = realization_from(&a.params, common.window, stdin)?;
    let report = check_realization(&r, a.first_two, a.action)?;
    let ok = report.ok();
    let mut input = realization_input(&a.params, common.window);
    input["first_two"] = json!(a.first_two);
    if let Some(d) = a.action {
        input["action"] = json!(d);
    }
    Ok(Outcome {
        ok,
        key: "residuals",
        payload: report.residuals,
        input,
        text: format!("{}\n{}", if ok { "ok" } else { "FAILED" }, report.text),
    })
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Format(format!("thread pool: {e}")))
}

fn verify_random(count: usize, a: &VerifyArgs, common: &Common) -> Result<Outcome> {
    let window = common.window;
    // one generator per case keeps results independent of --jobs
    let cases: Vec<Result<Value>> = pool(common.jobs)?.install(|| {
        (0..count)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(common.seed.wrapping_add(i as u64));
                let (c, phi, psi) = sample::three_rel_case(&mut rng, window);
                let r = build_three_rel(&c, &phi, &psi, window)?;
                let report = check_realization(&r, a.first_two, a.action)?;
                Ok(json!({
                    "case": i,
                    "c": c.to_string(),
                    "phi": phi.to_string(),
                    "psi": psi.to_string(),
                    "ok": report.ok(),
                }))
            })
            .collect()
    });
    let cases: Vec<Value> = cases.into_iter().collect::<Result<_>>()?;
    let failures: Vec<&Value> = cases.iter().filter(|c| c["ok"] != Value::Bool(true)).collect();
    let ok = failures.is_empty();
    let mut text = format!("{} cases, {} failed\n", cases.len(), failures.len());
    for f in &failures {
        let _ = writeln!(text, "case {}: c = {}, phi = {}, psi = {}", f["case"], f["c"], f["phi"], f["psi"]);
    }
    Ok(Outcome::result(
        ok,
        json!({ "cases": cases.len(), "failures": failures }),
        json!({ "random": count, "seed": common.seed, "window": window, "first_two": a.first_two }),
        text,
    ))
}

fn nogo_cmd(m: usize, n: usize) -> Result<Outcome> {
    let report = polynomial_nogo(m, n)?;
    let boundary = NoGoSystem::build(m, n).boundary_rows_hold();
    let ok = report.nullity == 0 && boundary;
    let mut payload = report.to_json();
    payload["boundary_rows"] = json!(boundary);
    let text = format!(
        "{} equations in {} unknowns, nullity {}\nboundary rows: {}\n",
        report.system_rows,
        report.system_cols,
        report.nullity,
        if boundary { "hold" } else { "fail" }
    );
    Ok(Outcome::result(ok, payload, json!({ "M": m, "N": n }), text))
}

fn apply_cmd(a: &ApplyArgs, common: &Common, stdin: &mut dyn Read) -> Result<Outcome> {
    let poly_from_stdin = a.poly == "-";
    if poly_from_stdin && a.series.as_deref() == Some("-") {
        return Err(Error::Format("only one of --series and --poly can read stdin".into()));
    }
    let p = read_poly(&a.poly, stdin)?;
    let degree = p.degree().unwrap_or(0);
    let (series, source) = if let Some(path) = &a.series {
        (
            NormalSeries::from_json(&parse_json(&read_file(path, stdin)?)?)?,
            json!({ "series": path }),
        )
    } else if let Some(expr) = &a.expr {
        // a finite word sum is exact at every degree
        let s = normal_order(&expr_to_words(&parse_expr(expr)?)?);
        (s.declare_window(s.window().max(degree)), json!({ "expr": expr }))
    } else {
        (NormalSeries::t_series(common.window), json!({ "t": true, "window": common.window }))
    };
    let out = apply_series(&series, &p)?;
    let mut input = source;
    input["poly"] = Value::String(p.to_string());
    Ok(Outcome::result(
        true,
        Value::String(out.to_string()),
        input,
        format!("{out}\n"),
    ))
}

fn interp_cmd(a: &InterpArgs, stdin: &mut dyn Read) -> Result<Outcome> {
    let alpha: GaussianRational = a.alpha.parse()?;
    let polys: Vec<Poly> = match &a.poly {
        Some(text) => vec![read_poly(text, stdin)?],
        None => (0..=a.n)
            .map(|k| Poly::monomial(k, GaussianRational::from_int(1)))
            .collect(),
    };
    let residual = |p: &Poly| match a.kind {
        InterpKind::Euler => euler_interp_residual_truncated(p, &alpha, a.extra),
        InterpKind::Stirling => stirling_interp_residual_truncated(p, a.extra),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for p in &polys {
        let r = residual(p);
        ok &= r.is_zero();
        let _ = writeln!(text, "{p}: residual {r}");
        rows.push(json!({ "poly": p.to_string(), "residual": r.to_string() }));
    }
    let kind = a.kind.to_possible_value().map(|v| v.get_name().to_string());
    Ok(Outcome {
        ok,
        key: "residuals",
        payload: json!(rows),
        input: json!({ "kind": kind, "alpha": alpha.to_string(), "extra": a.extra, "poly": a.poly, "n": a.n }),
        text,
    })
}

fn blocks_cmd(a: &BlocksArgs, common: &Common) -> Result<Outcome> {
    let kind = match a.kind {
        BlockKindArg::DirectSum => BlockKind::DirectSum,
        BlockKindArg::Pauli => BlockKind::PauliTensor,
    };
    let triple = block_triple(kind, a.s);
    let pairs: Vec<(Poly, Poly)> = match a.random {
        Some(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
            (0..count)
                .map(|_| (sample::poly(&mut rng, 8), sample::poly(&mut rng, 8)))
                .collect()
        }
        None => vec![(
            a.p0.as_deref().unwrap_or("0").parse()?,
            a.p1.as_deref().unwrap_or("0").parse()?,
        )],
    };
    let mut ok = true;
    let mut rows = Vec::new();
    let mut text = String::new();
    for pair in &pairs {
        let res = block_residuals(&triple, pair)?;
        let zero = res.iter().all(|(x, y)| x.is_zero() && y.is_zero());
        ok &= zero;
        let shown: Vec<Value> = res
            .iter()
            .map(|(x, y)| json!([x.to_string(), y.to_string()]))
            .collect();
        let _ = writeln!(
            text,
            "({}, {}): {}",
            pair.0,
            pair.1,
            res.iter()
                .enumerate()
                .map(|(i, (x, y))| format!("r{} = ({x}, {y})", i + 1))
                .collect::<Vec<_>>()
                .join(", ")
        );
        rows.push(json!({ "p0": pair.0.to_string(), "p1": pair.1.to_string(), "residuals": shown }));
    }
    let kind_name = a.kind.to_possible_value().map(|v| v.get_name().to_string());
    Ok(Outcome {
        ok,
        key: "residuals",
        payload: json!(rows),
        input: json!({ "kind": kind_name, "s": a.s, "p0": a.p0, "p1": a.p1, "random": a.random, "seed": common.seed }),
        text,
    })
}

fn recurrence_cmd(a: &RecurrenceArgs, common: &Common) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
    let mut random_list = |first_zero: bool| -> Vec<Rational> {
        (0..=a.l)
            .map(|i| {
                if first_zero && i == 0 {
                    Rational::zero()
                } else {
                    sample::small_rational(&mut rng)
                }
            })
            .collect()
    };
    let c = match &a.c {
        Some(text) => rational_list(text)?,
        None => random_list(true),
    };
    let d = match &a.d {
        Some(text) => rational_list(text)?,
        None => random_list(false),
    };
    let ok = recurrence_closed_form_check(&c, &d, a.j, a.l);
    let show = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    Ok(Outcome::result(
        ok,
        json!(ok),
        json!({ "c": show(&c), "d": show(&d), "j": a.j, "l": a.l, "seed": common.seed }),
        format!("{}\n", if ok { "closed form matches" } else { "closed form differs" }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["colorheis"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn normal_order_text() {
        let (code, out, _) = run_args(&["normal-order", "A*B"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "B*A + 1\n");
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        let (code, _, err) = run_args(&["nogo", "--M", "1", "--N", "1", "--bogus"], "");
        assert_eq!(code, 2);
        assert!(err.contains("--bogus"));
    }

    #[test]
    fn poly_from_stdin() {
        let (code, out, _) = run_args(&["apply", "--t", "--poly", "-"], "x^3 + x^2\n");
        assert_eq!(code, 0);
        assert_eq!(out, "-x^3 + x^2\n");
    }

    #[test]
    fn window_overrun_fails_loudly() {
        let (code, _, err) = run_args(&["apply", "--t", "--window", "2", "--poly", "x^3"], "");
        assert_eq!(code, 2);
        assert!(err.contains("window"));
    }
}
