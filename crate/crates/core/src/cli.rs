//! Command-line front end. [`run`] parses arguments, does the work and returns
//! the process exit code: 0 when every check held, 1 when one failed and 2 on
//! usage or validation errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::corollaries::Corollary;
use crate::error::{Error, Result};
use crate::identities::{Case, VerifyOptions, VerifyReport, SCHEMA};
use crate::lgv::{build_lattice, lgv_check};
use crate::shapes::{Cell, Partition, ShapeRef, ShiftedSkewShape, SkewShape, StrictPartition};
use crate::strips::{decompose, CuttingStrip, OutsideDecomposition, StripSpec};
use crate::tableaux::{enumerate_primed, enumerate_ssyt};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIFFERENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "schur9",
    version,
    about = "Check determinant and Pfaffian identities for ninth-variation Schur and Q-functions"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Include elapsed times in reports. Off by default so output is reproducible.
    #[arg(long, global = true)]
    timing: bool,

    /// Debug: add 1 to one matrix entry before evaluating.
    #[arg(long, global = true, hide = true)]
    perturb: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare the tableau sum with the determinant or Pfaffian of a decomposition.
    Verify(VerifyArgs),
    /// Run a named closed-form corollary, or `all` of one kind.
    Corollary(CorollaryArgs),
    /// List the tableaux of a shape.
    Enumerate(EnumerateArgs),
    /// Draw a shape, a cutting strip or a decomposition.
    Render(RenderArgs),
    /// Check the tableau to lattice path bijection on a shape.
    LgvCheck(LgvArgs),
}

#[derive(Args, Debug, Clone)]
struct ShapeArgs {
    /// Outer partition, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Inner partition, comma separated.
    #[arg(long, default_value = "")]
    mu: String,
    /// Use strict partitions and Q-functions.
    #[arg(long)]
    qfun: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// row | col | hook | hook@M | inner | outer | profile:<cmin>:<EN...>
    #[arg(long, default_value = "row")]
    strip: String,
    #[arg(long, default_value_t = 3)]
    n: u32,
    /// JSON array of cases, or one JSON case per line.
    #[arg(long, conflicts_with = "lambda")]
    case_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CorollaryArgs {
    /// jt | djt | giambelli | giambelli@M | okada-inner | lp-outer | jpn | qcol | q-inner | q-outer | all
    name: String,
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, default_value_t = 3)]
    n: u32,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Print only the number of tableaux.
    #[arg(long)]
    count: bool,
    /// Stop after this many tableaux.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Show the decomposition by this strip, or the strip alone without --lambda.
    #[arg(long)]
    strip: Option<String>,
}

#[derive(Args, Debug)]
struct LgvArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, default_value = "row")]
    strip: String,
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Also check every filling, semistandard or not.
    #[arg(long)]
    all_fillings: bool,
    /// Print the lattice in DOT format instead of checking.
    #[arg(long)]
    dot: bool,
}

enum Shape {
    Skew(SkewShape),
    Shifted(ShiftedSkewShape),
}

impl Shape {
    fn as_ref(&self) -> ShapeRef<'_> {
        match self {
            Shape::Skew(s) => ShapeRef::Skew(s),
            Shape::Shifted(s) => ShapeRef::Shifted(s),
        }
    }
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}")))
        })
        .collect()
}

impl ShapeArgs {
    fn lambda(&self) -> Result<&str> {
        self.lambda
            .as_deref()
            .ok_or_else(|| Error::Parse("--lambda is required".into()))
    }

    fn shape(&self) -> Result<Shape> {
        let outer = parse_parts(self.lambda()?)?;
        let inner = parse_parts(&self.mu)?;
        Ok(if self.qfun {
            Shape::Shifted(ShiftedSkewShape::new(
                StrictPartition::new(outer)?,
                StrictPartition::new(inner)?,
            )?)
        } else {
            Shape::Skew(SkewShape::new(
                Partition::new(outer)?,
                Partition::new(inner)?,
            )?)
        })
    }
}

struct Output<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
    timing: bool,
}

impl Output<'_> {
    fn json(&mut self, v: &Value) {
        let _ = writeln!(self.out, "{}", serde_json::to_string_pretty(v).unwrap());
    }

    fn line(&mut self, s: &str) {
        let _ = writeln!(self.out, "{s}");
    }

    fn error(&mut self, e: &Error) -> i32 {
        let _ = writeln!(self.err, "{}: {e}", e.kind());
        EXIT_USAGE
    }
}

/// Parse `args` (program name first) and run, writing to stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let opts = VerifyOptions {
        perturb: cli.perturb,
    };
    let mut o = Output {
        out,
        err,
        format: cli.format,
        timing: cli.timing,
    };
    let result = match &cli.command {
        Command::Verify(a) => verify(a, &opts, &mut o),
        Command::Corollary(a) => corollary(a, &opts, &mut o),
        Command::Enumerate(a) => enumerate(a, &mut o),
        Command::Render(a) => render(a, &mut o),
        Command::LgvCheck(a) => lgv(a, &mut o),
    };
    result.unwrap_or_else(|e| o.error(&e))
}

fn thread_pool() -> Option<rayon::ThreadPool> {
    let n = std::env::var("SCHUR9_THREADS")
        .ok()?
        .trim()
        .parse::<usize>()
        .ok()?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n.max(1))
        .build()
        .ok()
}

/// Runs `jobs` in parallel, keeping input order.
fn run_all<J, F>(jobs: &[J], f: F) -> Vec<Result<VerifyReport>>
where
    J: Sync,
    F: Fn(&J) -> Result<VerifyReport> + Sync + Send,
{
    let go = || jobs.par_iter().map(&f).collect();
    match thread_pool() {
        Some(pool) => pool.install(go),
        None => go(),
    }
}

fn verify(a: &VerifyArgs, opts: &VerifyOptions, o: &mut Output<'_>) -> Result<i32> {
    if let Some(path) = &a.case_file {
        return Ok(run_case_file_with(path, opts, o));
    }
    let case = Case {
        lambda: a.shape.lambda()?.to_string(),
        mu: a.shape.mu.clone(),
        strip: a.strip.clone(),
        n: a.n,
        qfun: a.shape.qfun,
    };
    let report = case.run(opts)?;
    match o.format {
        Format::Json => o.json(&report.to_json(o.timing)),
        Format::Text => o.line(&report.summary(o.timing)),
    }
    Ok(if report.equal {
        EXIT_OK
    } else {
        EXIT_DIFFERENT
    })
}

/// Reads cases from `path`: a JSON array, or one JSON object per line with
/// blank lines and `#` comments skipped. Errors carry 1-based line numbers.
pub fn read_cases(path: &Path) -> std::result::Result<Vec<Case>, Vec<String>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| vec![format!("{}: {e}", path.display())])?;
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(&text).map_err(|e| vec![format!("line {}: {e}", e.line())]);
    }
    let mut cases = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        match serde_json::from_str(t) {
            Ok(c) => cases.push(c),
            Err(e) => errors.push(format!("line {}: {e}", i + 1)),
        }
    }
    if errors.is_empty() {
        Ok(cases)
    } else {
        Err(errors)
    }
}

/// Verifies every case of a case file and prints an aggregate report.
pub fn run_case_file(path: &Path, format: Format, opts: &VerifyOptions) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let mut o = Output {
        out: &mut out,
        err: &mut err,
        format,
        timing: false,
    };
    run_case_file_with(path, opts, &mut o)
}

fn run_case_file_with(path: &Path, opts: &VerifyOptions, o: &mut Output<'_>) -> i32 {
    let cases = match read_cases(path) {
        Ok(c) => c,
        Err(errors) => {
            for e in errors {
                let _ = writeln!(o.err, "ParseError: {e}");
            }
            return EXIT_USAGE;
        }
    };
    let results = run_all(&cases, |c| c.run(opts));
    report_all(&results, o)
}

fn report_all(results: &[Result<VerifyReport>], o: &mut Output<'_>) -> i32 {
    let equal = results
        .iter()
        .filter(|r| matches!(r, Ok(r) if r.equal))
        .count();
    let failed = results.iter().filter(|r| r.is_err()).count();
    let different = results.len() - equal - failed;
    match o.format {
        Format::Json => {
            let cases: Vec<Value> = results
                .iter()
                .map(|r| match r {
                    Ok(r) => r.to_json(o.timing),
                    Err(e) => json!({ "error": e.kind(), "message": e.to_string() }),
                })
                .collect();
            o.json(&json!({
                "schema": SCHEMA,
                "cases": cases,
                "total": results.len(),
                "equal": equal,
                "different": different,
                "errors": failed,
            }));
        }
        Format::Text => {
            for r in results {
                match r {
                    Ok(r) => {
                        let line = r.summary(o.timing);
                        o.line(&line);
                    }
                    Err(e) => o.line(&format!("ERROR {}: {e}", e.kind())),
                }
            }
            o.line(&format!(
                "total={} equal={equal} different={different} errors={failed}",
                results.len()
            ));
        }
    }
    if failed > 0 {
        EXIT_USAGE
    } else if different > 0 {
        EXIT_DIFFERENT
    } else {
        EXIT_OK
    }
}

fn corollary(a: &CorollaryArgs, opts: &VerifyOptions, o: &mut Output<'_>) -> Result<i32> {
    let lambda = a.shape.lambda()?;
    let chosen: Vec<Corollary> = if a.name == "all" {
        Corollary::ALL
            .into_iter()
            .filter(|c| c.is_shifted() == a.shape.qfun)
            .collect()
    } else {
        vec![a.name.parse()?]
    };
    let results = run_all(&chosen, |c| c.run(lambda, &a.shape.mu, a.n, opts));
    if let [Err(e)] = results.as_slice() {
        return Err(e.clone());
    }
    Ok(report_all(&results, o))
}

fn entry_grid(cells: &[Cell], labels: impl Iterator<Item = String>) -> BTreeMap<Cell, String> {
    cells.iter().copied().zip(labels).collect()
}

/// A tableau drawn as labelled cells, with its weight.
type Listing = (BTreeMap<Cell, String>, String);

fn enumerate(a: &EnumerateArgs, o: &mut Output<'_>) -> Result<i32> {
    let shape = a.shape.shape()?;
    let limit = a.limit.unwrap_or(usize::MAX);
    let (count, listed): (usize, Vec<Listing>) = match &shape {
        Shape::Skew(s) => {
            let cells = s.cells();
            let count = enumerate_ssyt(s, a.n).count();
            let listed = if a.count {
                Vec::new()
            } else {
                enumerate_ssyt(s, a.n)
                    .take(limit)
                    .map(|t| {
                        (
                            entry_grid(&cells, t.entries().iter().map(u32::to_string)),
                            t.weight().to_string(),
                        )
                    })
                    .collect()
            };
            (count, listed)
        }
        Shape::Shifted(s) => {
            let cells = s.cells();
            let count = enumerate_primed(s, a.n).count();
            let listed = if a.count {
                Vec::new()
            } else {
                enumerate_primed(s, a.n)
                    .take(limit)
                    .map(|t| {
                        (
                            entry_grid(&cells, t.entries().iter().map(|e| e.to_string())),
                            t.weight().to_string(),
                        )
                    })
                    .collect()
            };
            (count, listed)
        }
    };
    let inner = inner_cells(shape.as_ref());
    match o.format {
        Format::Json => {
            let rows: Vec<Value> = listed
                .iter()
                .map(|(g, w)| {
                    let mut by_row: BTreeMap<i32, Vec<&str>> = BTreeMap::new();
                    for (c, s) in g {
                        by_row.entry(c.row).or_default().push(s);
                    }
                    json!({ "rows": by_row.into_values().collect::<Vec<_>>(), "weight": w })
                })
                .collect();
            let mut v = json!({ "schema": SCHEMA, "n": a.n, "qfun": a.shape.qfun, "count": count });
            if !a.count {
                v["tableaux"] = Value::Array(rows);
            }
            o.json(&v);
        }
        Format::Text => {
            for (g, w) in &listed {
                let mut g = g.clone();
                g.extend(inner.iter().map(|c| (*c, "*".to_string())));
                o.line(&grid(&g));
                o.line(&format!("weight {w}"));
                o.line("");
            }
            o.line(&format!("count={count}"));
        }
    }
    Ok(EXIT_OK)
}

fn inner_cells(shape: ShapeRef<'_>) -> Vec<Cell> {
    match shape {
        ShapeRef::Skew(s) => SkewShape::straight(s.inner().clone()).cells(),
        ShapeRef::Shifted(s) => ShiftedSkewShape::new(s.inner().clone(), StrictPartition::empty())
            .map(|i| i.cells())
            .unwrap_or_default(),
    }
}

/// Lays out labelled boxes in rows, top row first, padding to a common width.
pub fn grid(labels: &BTreeMap<Cell, String>) -> String {
    if labels.is_empty() {
        return "(empty)".into();
    }
    let width = labels
        .values()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let rows = labels.keys().map(|c| c.row);
    let (r0, r1) = (rows.clone().min().unwrap(), rows.max().unwrap());
    let cols = labels.keys().map(|c| c.col);
    let (c0, c1) = (cols.clone().min().unwrap(), cols.max().unwrap());
    let mut lines = Vec::new();
    for r in r0..=r1 {
        let line: Vec<String> = (c0..=c1)
            .map(|c| {
                format!(
                    "{:>width$}",
                    labels
                        .get(&Cell::new(r, c))
                        .map(String::as_str)
                        .unwrap_or("")
                )
            })
            .collect();
        lines.push(line.join(" ").trim_end().to_string());
    }
    lines.join("\n")
}

/// Contents of the boxes of the shape, `*` on the removed inner boxes.
pub fn render_shape(shape: ShapeRef<'_>) -> String {
    let mut g: BTreeMap<Cell, String> = shape
        .cells()
        .into_iter()
        .map(|c| (c, c.content().to_string()))
        .collect();
    g.extend(inner_cells(shape).into_iter().map(|c| (c, "*".to_string())));
    grid(&g)
}

/// Strip numbers 1..s on the boxes each strip covers.
pub fn render_decomposition(shape: ShapeRef<'_>, d: &OutsideDecomposition) -> String {
    let mut g: BTreeMap<Cell, String> = d
        .cell_owner()
        .into_iter()
        .map(|(c, p)| (c, (p + 1).to_string()))
        .collect();
    g.extend(inner_cells(shape).into_iter().map(|c| (c, "*".to_string())));
    grid(&g)
}

/// The boxes of a cutting strip labelled by content.
pub fn render_strip(phi: &CuttingStrip) -> String {
    let top = 1
        - (phi.c_min()..=phi.c_max())
            .map(|c| phi.row_offset(c))
            .min()
            .unwrap_or(0);
    let g = (phi.c_min()..=phi.c_max())
        .map(|c| {
            let row = phi.row_offset(c) + top;
            (Cell::new(row, row + c), c.to_string())
        })
        .collect();
    grid(&g)
}

fn render(a: &RenderArgs, o: &mut Output<'_>) -> Result<i32> {
    let spec: Option<StripSpec> = a.strip.as_deref().map(str::parse).transpose()?;
    let mut parts: Vec<(&str, String)> = Vec::new();
    let mut pieces = Value::Null;
    if a.shape.lambda.is_none() {
        let Some(StripSpec::Profile(phi)) = &spec else {
            return Err(Error::Parse(
                "render needs --lambda, or --strip profile:<cmin>:<EN...>".into(),
            ));
        };
        parts.push(("strip", render_strip(phi)));
    } else {
        let shape = a.shape.shape()?;
        parts.push(("shape", render_shape(shape.as_ref())));
        if let Some(spec) = &spec {
            let phi = spec.resolve(shape.as_ref());
            let d = decompose(shape.as_ref(), &phi)?;
            parts.push(("strip", render_strip(&phi)));
            parts.push(("decomposition", render_decomposition(shape.as_ref(), &d)));
            pieces = json!(d
                .intervals()
                .iter()
                .map(|iv| format!("({},{})", iv.a, iv.b))
                .collect::<Vec<_>>());
        }
    }
    match o.format {
        Format::Json => {
            let mut v = json!({ "schema": SCHEMA });
            for (k, s) in &parts {
                v[*k] = json!(s);
            }
            if !pieces.is_null() {
                v["strips"] = pieces;
            }
            o.json(&v);
        }
        Format::Text => {
            let blocks: Vec<String> = parts.iter().map(|(_, s)| s.clone()).collect();
            o.line(&blocks.join("\n\n"));
        }
    }
    Ok(EXIT_OK)
}

fn lgv(a: &LgvArgs, o: &mut Output<'_>) -> Result<i32> {
    let shape = a.shape.shape()?;
    let phi = a.strip.parse::<StripSpec>()?.resolve(shape.as_ref());
    if a.dot {
        o.line(
            build_lattice(&phi, a.n, a.shape.qfun)
                .to_dot(None)
                .trim_end(),
        );
        return Ok(EXIT_OK);
    }
    let r = lgv_check(shape.as_ref(), &phi, a.n, a.all_fillings)?;
    match o.format {
        Format::Json => {
            let mut v = serde_json::to_value(&r).unwrap();
            v["schema"] = json!(SCHEMA);
            v["ok"] = json!(r.ok());
            o.json(&v);
        }
        Format::Text => {
            let fillings = r
                .fillings
                .map(|f| format!(" fillings={f} characterization={}", r.characterization));
            o.line(&format!(
                "{} lgv shape={} strip={} n={} tableaux={} path_tuples={} round_trip={} nonintersecting={} weights={}{}",
                if r.ok() { "OK" } else { "FAILED" },
                r.shape,
                r.strip,
                r.n,
                r.tableaux,
                r.path_tuples,
                r.round_trip,
                r.nonintersecting,
                r.weights,
                fillings.unwrap_or_default()
            ));
        }
    }
    Ok(if r.ok() { EXIT_OK } else { EXIT_DIFFERENT })
}
