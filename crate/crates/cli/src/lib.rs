//! Command-line front end for the `gonal-bn` library.
//!
//! [`run`] parses arguments, dispatches, and returns the rendered output with
//! an exit code instead of printing, so tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gonal_bn::error::Error;
use gonal_bn::ext::{ext_dim, secant_stability_test, segre_data, w1_dim};
use gonal_bn::numerics::{rho_rank2, CurveParams};
use gonal_bn::rank1::{pencil_table, stratify, GenericElement, Rank1Component};
use gonal_bn::rank2::{audit, classify, fixed_det_components, Classification, Rank2Component, Segre};
use gonal_bn::splitting::{
    admissible_shifts, balanced, brute_force_maximal, brute_force_maximal_auto, expected_splitting_dim, w_vector,
    SplittingType,
};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "gonal-bn", version, about = "Brill-Noether loci on general gonal curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank-two components of B^{k_2}_d.
    Classify(Triple),
    /// Components of W^r_d.
    Rank1(Rank1Args),
    /// The pencil table for W^1_t.
    Pencil(PencilArgs),
    /// Splitting-type utilities.
    Splitting {
        #[command(subcommand)]
        action: SplittingAction,
    },
    /// Extension-space dimension counts and the secant test.
    Ext(ExtArgs),
    /// Components of the fixed-determinant locus.
    FixedDet(Triple),
    /// Consistency sweep over a genus range.
    Audit(Range),
    /// Classification of every triple in a genus range.
    Sweep(Range),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct Triple {
    #[arg(long)]
    pub g: i64,
    #[arg(long)]
    pub nu: i64,
    #[arg(long)]
    pub d: i64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct Rank1Args {
    #[arg(long)]
    pub g: i64,
    #[arg(long)]
    pub nu: i64,
    #[arg(long)]
    pub r: i64,
    #[arg(long)]
    pub d: i64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct PencilArgs {
    #[arg(long)]
    pub g: i64,
    #[arg(long)]
    pub nu: i64,
    #[arg(long)]
    pub t: i64,
}

#[derive(Debug, Subcommand)]
pub enum SplittingAction {
    /// Maximal vectors with at least r+1 sections, by exhaustive search.
    Max(MaxArgs),
    /// The vector w_{r,l}.
    W(WArgs),
    /// Admissible shifts l.
    Shifts(ShiftArgs),
    /// The balanced vector of rank nu and degree total.
    Balanced(BalancedArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct MaxArgs {
    #[arg(long)]
    pub nu: i64,
    #[arg(long)]
    pub total: i64,
    #[arg(long)]
    pub r: i64,
    /// Smallest entry of the search window; widened automatically if omitted.
    #[arg(long, requires = "max_entry")]
    pub min_entry: Option<i64>,
    #[arg(long, requires = "min_entry")]
    pub max_entry: Option<i64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct WArgs {
    #[arg(long)]
    pub g: i64,
    #[arg(long)]
    pub nu: i64,
    #[arg(long)]
    pub r: i64,
    #[arg(long)]
    pub ell: i64,
    #[arg(long)]
    pub d: i64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ShiftArgs {
    #[arg(long)]
    pub g: i64,
    #[arg(long)]
    pub nu: i64,
    #[arg(long)]
    pub r: i64,
    #[arg(long)]
    pub d: i64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct BalancedArgs {
    #[arg(long)]
    pub nu: i64,
    #[arg(long)]
    pub total: i64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ExtArgs {
    #[arg(long)]
    pub g: i64,
    #[arg(long)]
    pub d: i64,
    /// Degree of the quotient line bundle.
    #[arg(long)]
    pub delta: i64,
    /// Quotient isomorphic to the kernel.
    #[arg(long)]
    pub iso: bool,
    /// h^0 of the quotient, for the W_1 count.
    #[arg(long, requires = "r")]
    pub l: Option<i64>,
    /// h^1 of the kernel, for the W_1 count.
    #[arg(long, requires = "l")]
    pub r: Option<i64>,
    #[arg(long, requires = "family_dim")]
    pub sigma: Option<i64>,
    /// Projective dimension of the family tested against the secant variety.
    #[arg(long, requires = "sigma")]
    pub family_dim: Option<i64>,
}

#[derive(Debug, Args)]
pub struct Range {
    #[arg(long)]
    pub g_min: i64,
    #[arg(long)]
    pub g_max: i64,
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        let line = message.to_string().lines().next().unwrap_or_default().to_string();
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {line}\n"),
        }
    }
}

/// Largest genus accepted by `audit` and `sweep`.
pub const SWEEP_G_MAX: i64 = 200;

/// Tabular rendering shared by the `table` and `csv` formats.
struct Table {
    preamble: Vec<(String, String)>,
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(headers: Vec<&'static str>) -> Self {
        Self {
            preamble: Vec::new(),
            headers,
            rows: Vec::new(),
        }
    }

    fn note(mut self, key: &str, value: impl ToString) -> Self {
        self.preamble.push((key.to_string(), value.to_string()));
        self
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        let key_w = self.preamble.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.preamble {
            let _ = writeln!(out, "{k:<key_w$}  {v}");
        }
        if self.rows.is_empty() {
            if self.preamble.is_empty() {
                out.push_str("(no rows)\n");
            }
            return out;
        }
        if !self.preamble.is_empty() {
            out.push('\n');
        }
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        out.push_str(&line(self.headers.clone()));
        out.push_str(&line(
            widths
                .iter()
                .map(|&w| "-".repeat(w))
                .collect::<Vec<_>>()
                .iter()
                .map(|s| s.as_str())
                .collect(),
        ));
        for row in &self.rows {
            out.push_str(&line(row.iter().map(|s| s.as_str()).collect()));
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }
}

struct Rendered {
    json: Value,
    table: Table,
    /// Set when the output itself reports an internal inconsistency.
    failed: bool,
}

impl Rendered {
    fn new(json: Value, table: Table) -> Self {
        Self {
            json,
            table,
            failed: false,
        }
    }
}

enum Failure {
    Validation(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Internal(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(e.to_string())
                }
                _ => Outcome::fail(2, one_line(&e.to_string())),
            }
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let rendered = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(Failure::Validation(m)) => return Outcome::fail(2, m),
        Err(Failure::Internal(m)) => return Outcome::fail(1, m),
    };
    let body = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rendered.json).expect("integer-only JSON");
            s.push('\n');
            s
        }
        Format::Table => rendered.table.render_table(),
        Format::Csv => rendered.table.render_csv(),
    };
    let code = if rendered.failed { 1 } else { 0 };
    match &cli.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::fail(2, format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome {
            code,
            stdout: body,
            stderr: String::new(),
        },
    }
}

/// Folds a multi-line clap diagnostic into one line.
fn one_line(message: &str) -> String {
    message
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with("Usage:") && !l.starts_with("For more information"))
        .collect::<Vec<_>>()
        .join(" ")
        .trim_start_matches("error: ")
        .to_string()
}

fn curve(g: i64, nu: i64) -> Result<CurveParams, Failure> {
    Ok(CurveParams::new(g, nu)?)
}

fn dispatch(cmd: &Command) -> Result<Rendered, Failure> {
    match cmd {
        Command::Classify(a) => {
            let c = classify(curve(a.g, a.nu)?, a.d)?;
            Ok(render_classification(&c))
        }
        Command::Rank1(a) => {
            let comps = stratify(curve(a.g, a.nu)?, a.r, a.d)?;
            let mut r = render_rank1(a.g, &comps);
            r.json = json!({
                "input": {"g": a.g, "nu": a.nu, "r": a.r, "d": a.d},
                "empty": comps.is_empty(),
                "components": r.json,
            });
            r.table = r
                .table
                .note("input", format!("g={} nu={} r={} d={}", a.g, a.nu, a.r, a.d));
            Ok(r)
        }
        Command::Pencil(a) => {
            let p = pencil_table(curve(a.g, a.nu)?, a.t)?;
            let case = serde_json::to_value(p.case).expect("unit enum");
            let case_str = case.as_str().unwrap_or_default().to_string();
            let mut r = render_rank1(a.g, &p.components);
            r.json = json!({
                "input": {"g": a.g, "nu": a.nu, "t": a.t},
                "case": case,
                "components": r.json,
            });
            r.table = r
                .table
                .note("input", format!("g={} nu={} t={}", a.g, a.nu, a.t))
                .note("case", case_str);
            Ok(r)
        }
        Command::Splitting { action } => splitting(action),
        Command::Ext(a) => ext(a),
        Command::FixedDet(a) => {
            let comps = fixed_det_components(curve(a.g, a.nu)?, a.d)?;
            let mut table = Table::new(vec!["kind", "dim", "note"])
                .note("input", format!("g={} nu={} d={}", a.g, a.nu, a.d))
                .note("expected_dim", 7 * a.g - 11 - 2 * a.d);
            let mut items = Vec::new();
            for c in &comps {
                items.push(json!({"kind": c.kind.to_string(), "dim": c.dimension, "note": c.note}));
                table
                    .rows
                    .push(vec![c.kind.to_string(), c.dimension.to_string(), c.note.clone()]);
            }
            let json = json!({
                "input": {"g": a.g, "nu": a.nu, "d": a.d},
                "expected_dim": 7 * a.g - 11 - 2 * a.d,
                "components": items,
            });
            Ok(Rendered::new(json, table))
        }
        Command::Audit(r) => {
            check_range(r)?;
            render_audit(r)
        }
        Command::Sweep(r) => {
            check_range(r)?;
            sweep(r)
        }
    }
}

fn check_range(r: &Range) -> Result<(), Failure> {
    if r.g_min < 4 {
        return Err(Failure::Validation(format!(
            "g_min = {} is out of range: g_min >= 4",
            r.g_min
        )));
    }
    if r.g_max < r.g_min || r.g_max > SWEEP_G_MAX {
        return Err(Failure::Validation(format!(
            "g_max = {} is out of range: g_min <= g_max <= {SWEEP_G_MAX}",
            r.g_max
        )));
    }
    Ok(())
}

fn segre_json(s: Segre) -> Value {
    match s {
        Segre::Exact(n) => json!({"exact": n}),
        Segre::LowerBound(n) => json!({"lower_bound": n}),
    }
}

fn segre_text(s: Segre) -> String {
    match s {
        Segre::Exact(n) => format!("= {n}"),
        Segre::LowerBound(n) => format!(">= {n}"),
    }
}

fn status_str(c: &Rank2Component) -> &'static str {
    match c.status {
        gonal_bn::rank2::Status::Regular => "regular",
        gonal_bn::rank2::Status::Superabundant => "superabundant",
    }
}

fn birational_str(c: &Rank2Component) -> &'static str {
    match c.birational_type {
        gonal_bn::rank2::Birational::Uniruled => "uniruled",
        gonal_bn::rank2::Birational::Ruled => "ruled",
    }
}

fn component_json(c: &Rank2Component) -> Value {
    let p = &c.presentation;
    json!({
        "kind": c.kind.to_string(),
        "dim": c.dimension,
        "expected_dim": c.expected_dimension,
        "status": status_str(c),
        "generically_smooth": c.generically_smooth,
        "birational": birational_str(c),
        "presentation": {
            "kernel": p.kernel.to_string(),
            "kernel_degree": p.kernel_degree,
            "quotient": p.quotient.to_string(),
            "quotient_degree": p.quotient_degree,
            "quotient_h1": p.quotient_speciality,
        },
        "segre": segre_json(c.segre),
        "proved_for_genus_at_least": c.proved_for_genus_at_least,
    })
}

pub fn classification_json(c: &Classification) -> Value {
    json!({
        "input": {"g": c.g, "nu": c.nu, "d": c.d},
        "case": c.case_label.as_str(),
        "empty": c.is_empty(),
        "components": c.components.iter().map(component_json).collect::<Vec<_>>(),
        "warnings": c.warnings,
        "ambiguous": c.ambiguous,
    })
}

fn render_classification(c: &Classification) -> Rendered {
    let mut table = Table::new(vec![
        "kind",
        "dim",
        "expected",
        "status",
        "birational",
        "kernel",
        "kernel_deg",
        "quotient",
        "quotient_deg",
        "h1",
        "segre",
        "g_min",
    ])
    .note("input", format!("g={} nu={} d={}", c.g, c.nu, c.d))
    .note("case", c.case_label)
    .note("empty", c.is_empty())
    .note("ambiguous", c.ambiguous);
    for w in &c.warnings {
        table = table.note("warning", w);
    }
    for comp in &c.components {
        let p = &comp.presentation;
        table.rows.push(vec![
            comp.kind.to_string(),
            comp.dimension.to_string(),
            comp.expected_dimension.to_string(),
            status_str(comp).into(),
            birational_str(comp).into(),
            p.kernel.to_string(),
            p.kernel_degree.to_string(),
            p.quotient.to_string(),
            p.quotient_degree.to_string(),
            p.quotient_speciality.to_string(),
            segre_text(comp.segre),
            comp.proved_for_genus_at_least.to_string(),
        ]);
    }
    Rendered::new(classification_json(c), table)
}

fn generic_str(e: GenericElement) -> String {
    match e {
        GenericElement::GonalPlusBasePoints { base_degree } => format!("A + B_{base_degree}"),
        GenericElement::BasePointFreePencil => "base-point-free pencil".into(),
        GenericElement::GeneralSeries => "general series".into(),
        GenericElement::FullPicard => "Pic^d".into(),
    }
}

fn vector_json(e: &SplittingType) -> Value {
    json!(e.entries())
}

fn render_rank1(g: i64, comps: &[Rank1Component]) -> Rendered {
    let mut table = Table::new(vec!["shift", "vector", "dim", "generic_element"]);
    let mut items = Vec::new();
    for c in comps {
        let rho_prime = g - c.vector.magnitude();
        items.push(json!({
            "shift": c.shift,
            "vector": vector_json(&c.vector),
            "dim": c.dimension,
            "rho_prime": rho_prime,
            "generic_element": generic_str(c.generic_element),
        }));
        table.rows.push(vec![
            c.shift.to_string(),
            c.vector.to_string(),
            c.dimension.to_string(),
            generic_str(c.generic_element),
        ]);
    }
    Rendered::new(Value::Array(items), table)
}

fn vectors_rendered(g: Option<i64>, vectors: &[SplittingType]) -> Result<(Vec<Value>, Table), Failure> {
    let mut table = Table::new(vec!["vector", "degree", "h0", "magnitude", "dim"]);
    let mut items = Vec::new();
    for e in vectors {
        let ed = e.euler_data();
        let dim = match g {
            Some(g) => expected_splitting_dim(g, e)?.dimension,
            None => None,
        };
        items.push(json!({
            "vector": vector_json(e),
            "degree": ed.degree,
            "h0": ed.h0,
            "magnitude": e.magnitude(),
            "dim": dim,
        }));
        table.rows.push(vec![
            e.to_string(),
            ed.degree.to_string(),
            ed.h0.to_string(),
            e.magnitude().to_string(),
            dim.map(|d| d.to_string()).unwrap_or_default(),
        ]);
    }
    Ok((items, table))
}

fn splitting(action: &SplittingAction) -> Result<Rendered, Failure> {
    match action {
        SplittingAction::Max(a) => {
            let (found, (lo, hi)) = match (a.min_entry, a.max_entry) {
                (Some(lo), Some(hi)) => (brute_force_maximal(a.nu, a.total, a.r, lo, hi)?, (lo, hi)),
                _ => brute_force_maximal_auto(a.nu, a.total, a.r)?,
            };
            let (items, table) = vectors_rendered(None, &found)?;
            let table = table
                .note("input", format!("nu={} total={} r={}", a.nu, a.total, a.r))
                .note("window", format!("[{lo}, {hi}]"));
            let json = json!({
                "input": {"nu": a.nu, "total": a.total, "r": a.r},
                "window": [lo, hi],
                "maximal": items,
            });
            Ok(Rendered::new(json, table))
        }
        SplittingAction::W(a) => {
            let w = w_vector(a.g, a.nu, a.r, a.ell, a.d)?;
            let (items, table) = vectors_rendered(Some(a.g), std::slice::from_ref(&w))?;
            let table = table.note(
                "input",
                format!("g={} nu={} r={} ell={} d={}", a.g, a.nu, a.r, a.ell, a.d),
            );
            let json = json!({
                "input": {"g": a.g, "nu": a.nu, "r": a.r, "ell": a.ell, "d": a.d},
                "w": items.into_iter().next().expect("one vector"),
            });
            Ok(Rendered::new(json, table))
        }
        SplittingAction::Shifts(a) => {
            let shifts = admissible_shifts(a.g, a.nu, a.r, a.d)?;
            let mut table = Table::new(vec!["ell"]).note("input", format!("g={} nu={} r={} d={}", a.g, a.nu, a.r, a.d));
            table.rows = shifts.iter().map(|l| vec![l.to_string()]).collect();
            let json = json!({
                "input": {"g": a.g, "nu": a.nu, "r": a.r, "d": a.d},
                "shifts": shifts,
            });
            Ok(Rendered::new(json, table))
        }
        SplittingAction::Balanced(a) => {
            let b = balanced(a.nu, a.total)?;
            let (items, table) = vectors_rendered(None, std::slice::from_ref(&b))?;
            let table = table.note("input", format!("nu={} total={}", a.nu, a.total));
            let json = json!({
                "input": {"nu": a.nu, "total": a.total},
                "balanced": items.into_iter().next().expect("one vector"),
            });
            Ok(Rendered::new(json, table))
        }
    }
}

fn ext(a: &ExtArgs) -> Result<Rendered, Failure> {
    let m = ext_dim(a.g, a.d, a.delta, a.iso)?;
    let segre = segre_data(a.d, a.delta)?;
    let w1 = match (a.l, a.r) {
        (Some(l), Some(r)) => Some(w1_dim(l, r, m)?),
        _ => None,
    };
    let secant = match (a.sigma, a.family_dim) {
        (Some(s), Some(f)) => Some(secant_stability_test(a.g, a.d, a.delta, s, f)?),
        _ => None,
    };

    let mut table = Table::new(vec!["quantity", "value"])
        .note("input", format!("g={} d={} delta={} iso={}", a.g, a.d, a.delta, a.iso));
    let mut push = |k: &str, v: String| table.rows.push(vec![k.to_string(), v]);
    push("ext_dim", m.to_string());
    push("gamma_sq", segre.gamma_sq.to_string());
    push("semistable_possible", segre.semistable_possible.to_string());
    if let Some(w) = &w1 {
        push("w1_dim", w.dimension.to_string());
    }
    let verdict = secant.map(|s| serde_json::to_value(s.verdict).expect("unit enum"));
    if let (Some(s), Some(v)) = (&secant, &verdict) {
        push("secant_h", s.h.to_string());
        push("secant_dim", s.sec_dim.to_string());
        push("proj_dim", s.proj_dim.to_string());
        push("verdict", v.as_str().unwrap_or_default().to_string());
    }

    let json = json!({
        "input": {"g": a.g, "d": a.d, "delta": a.delta, "iso": a.iso},
        "ext_dim": m,
        "gamma_sq": segre.gamma_sq,
        "semistable_possible": segre.semistable_possible,
        "w1": w1.map(|w| json!({
            "l": a.l,
            "r": a.r,
            "dim": w.dimension,
            "generic_corank_on_locus": w.generic_corank_on_locus,
            "generic_corank_ambient": w.generic_corank_ambient,
        })),
        "secant": secant.map(|s| json!({
            "sigma": a.sigma,
            "family_dim": a.family_dim,
            "h": s.h,
            "sec_dim": s.sec_dim,
            "proj_dim": s.proj_dim,
            "verdict": verdict,
        })),
    });
    Ok(Rendered::new(json, table))
}

fn triple_json(t: &gonal_bn::rank2::Triple) -> Value {
    json!({"g": t.g, "nu": t.nu, "d": t.d})
}

fn render_audit(r: &Range) -> Result<Rendered, Failure> {
    let rep = audit(r.g_min, r.g_max)?;
    let sliver = |s: Option<gonal_bn::rank2::Sliver>| s.map(|s| serde_json::to_value(s).expect("unit enum"));
    let mut counts = serde_json::Map::new();
    for (k, v) in &rep.case_counts {
        counts.insert(k.as_str().to_string(), json!(v));
    }
    let json = json!({
        "input": {"g_min": r.g_min, "g_max": r.g_max},
        "triples": rep.triples,
        "clean": rep.is_clean(),
        "case_counts": counts,
        "violations": rep.violations.iter().map(|v| json!({"at": triple_json(&v.at), "message": v.message})).collect::<Vec<_>>(),
        "mismatches": rep.mismatches.iter().map(|m| json!({
            "at": triple_json(&m.at),
            "reducible": m.reducible,
            "witness_n": m.witness_n,
            "proved_components": m.proved_components,
            "sliver": sliver(m.sliver),
        })).collect::<Vec<_>>(),
        "ambiguous": rep.ambiguous.iter().map(|a| json!({"at": triple_json(&a.at), "sliver": sliver(Some(a.sliver))})).collect::<Vec<_>>(),
        "overlaps": rep.overlaps.iter().map(triple_json).collect::<Vec<_>>(),
        "predicted_unconstructed": rep.predicted_unconstructed.iter().map(triple_json).collect::<Vec<_>>(),
    });

    let mut table = Table::new(vec!["kind", "g", "nu", "d", "detail"])
        .note("range", format!("{}..={}", r.g_min, r.g_max))
        .note("triples", rep.triples)
        .note("clean", rep.is_clean())
        .note("violations", rep.violations.len())
        .note("mismatches", rep.mismatches.len())
        .note("ambiguous", rep.ambiguous.len())
        .note("overlaps", rep.overlaps.len());
    let row = |kind: &str, t: &gonal_bn::rank2::Triple, detail: String| {
        vec![
            kind.to_string(),
            t.g.to_string(),
            t.nu.to_string(),
            t.d.to_string(),
            detail,
        ]
    };
    for v in &rep.violations {
        table.rows.push(row("violation", &v.at, v.message.clone()));
    }
    for m in &rep.mismatches {
        let detail = format!(
            "reducible={} witness_n={} proved={}",
            m.reducible,
            m.witness_n.map(|n| n.to_string()).unwrap_or_else(|| "-".into()),
            m.proved_components
        );
        table.rows.push(row("mismatch", &m.at, detail));
    }
    for a in &rep.ambiguous {
        table
            .rows
            .push(row("ambiguous", &a.at, a.sliver.describe().to_string()));
    }
    for o in &rep.overlaps {
        table.rows.push(row("overlap", o, "II and VI".into()));
    }
    let mut rendered = Rendered::new(json, table);
    rendered.failed = !rep.violations.is_empty();
    Ok(rendered)
}

/// One sweep row: `g,nu,d,case,dim_reg,dim_sup,rho,superabundant`.
fn sweep_rows(curve: CurveParams) -> Result<Vec<(Classification, i64)>, Error> {
    (2 * curve.g() - 2..=4 * curve.g() - 4)
        .map(|d| Ok((classify(curve, d)?, rho_rank2(curve.g(), d, 2)?)))
        .collect()
}

fn sweep(r: &Range) -> Result<Rendered, Failure> {
    let cells: Vec<Result<Vec<(Classification, i64)>, Error>> = CurveParams::grid(r.g_min, r.g_max)
        .into_par_iter()
        .map(sweep_rows)
        .collect();

    let mut table = Table::new(vec![
        "g",
        "nu",
        "d",
        "case",
        "dim_reg",
        "dim_sup",
        "rho",
        "superabundant",
    ]);
    let mut items = Vec::new();
    for cell in cells {
        for (c, rho) in cell? {
            let reg = c.component(gonal_bn::rank2::ComponentKind::Reg2).map(|x| x.dimension);
            let sup = c.component(gonal_bn::rank2::ComponentKind::Sup2);
            let superabundant = c
                .components
                .iter()
                .any(|x| x.status == gonal_bn::rank2::Status::Superabundant);
            let opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
            table.rows.push(vec![
                c.g.to_string(),
                c.nu.to_string(),
                c.d.to_string(),
                c.case_label.to_string(),
                opt(reg),
                opt(sup.map(|x| x.dimension)),
                rho.to_string(),
                superabundant.to_string(),
            ]);
            items.push(json!({
                "g": c.g,
                "nu": c.nu,
                "d": c.d,
                "case": c.case_label.as_str(),
                "dim_reg": reg,
                "dim_sup": sup.map(|x| x.dimension),
                "rho": rho,
                "superabundant": superabundant,
            }));
        }
    }
    let json = json!({
        "input": {"g_min": r.g_min, "g_max": r.g_max},
        "rows": items,
    });
    Ok(Rendered::new(json, table))
}
