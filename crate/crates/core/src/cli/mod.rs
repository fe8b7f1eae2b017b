//! Command-line front end: spec-file ingestion, command dispatch and output
//! rendering. The `homcount` binary is a thin wrapper around [`execute`].

mod check;
mod spec_file;

use std::path::PathBuf;

use clap::{Args, Parser, ValueEnum};
use serde_json::{json, Value};

use crate::arith::RatPoly;
use crate::engine::{count_all, count_at, count_polynomial, factorize, minimal_period, period_bound};
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::oracle::{conic_count, flag_count, glr_closed_form, p1_pair_count, twisted_torus_count, PairMode, SmallField};
use crate::reductions::{ReductionStep, ReductionTrace};

pub use check::{run_checks, CheckItem, CheckReport};
pub use spec_file::{load_spec, parse_spec_file, Metadata, OracleHint, SpecFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CommandName {
    Poly,
    Factor,
    Count,
    Check,
    Period,
    Oracle,
    Reduce,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleCase {
    Conic,
    Flags,
    #[value(name = "p1pairs")]
    P1Pairs,
    TwistedTorus,
    Glr,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    #[default]
    Ordered,
    #[value(name = "unordered_variety")]
    UnorderedVariety,
}

impl From<ModeArg> for PairMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Ordered => PairMode::Ordered,
            ModeArg::UnorderedVariety => PairMode::UnorderedVariety,
        }
    }
}

#[derive(Args, Clone, Debug, Default)]
pub struct Options {
    /// Oracle case (only for `oracle`).
    #[arg(value_enum)]
    pub case: Option<OracleCase>,
    /// Spec file path, or the name of a bundled spec.
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Largest q tried by `check` (default 5).
    #[arg(long)]
    pub qmax: Option<u64>,
    /// Largest n tried by `check` (default 3).
    #[arg(long)]
    pub nmax: Option<u32>,
    #[arg(long)]
    pub residue: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Write the document here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Conic coefficient `a` in `x² − a·y² = b`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<i64>,
    /// Conic right-hand side `b` (default 1).
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<i64>,
    /// Flag dimensions, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub dims: Vec<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub mode: ModeArg,
    /// Integer matrix as JSON, e.g. `[[0,1],[1,0]]`.
    #[arg(long)]
    pub matrix: Option<String>,
    /// Splitting degree `k` with `a^k = I`.
    #[arg(long)]
    pub split: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    /// Reduction steps as a JSON list.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Parser, Clone, Debug)]
#[command(name = "homcount", version, about = "Exact point counts of homogeneous varieties over finite fields")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: CommandName,
    #[command(flatten)]
    pub options: Options,
}

/// Exit status and the document a command emits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub document: String,
}

struct Doc {
    json: Value,
    text: String,
    latex: Option<String>,
    ok: bool,
}

impl Doc {
    fn new(json: Value, text: String) -> Self {
        Doc { json, text, latex: None, ok: true }
    }

    fn latex(mut self, latex: String) -> Self {
        self.latex = Some(latex);
        self
    }
}

fn error_document(e: &Error) -> String {
    let doc = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn run_command(command: CommandName, options: &Options) -> Outcome {
    let doc = match command {
        CommandName::Poly => poly(options),
        CommandName::Factor => factor(options),
        CommandName::Count => count(options),
        CommandName::Check => check(options),
        CommandName::Period => period(options),
        CommandName::Oracle => oracle(options),
        CommandName::Reduce => reduce(options),
    };
    match doc {
        Ok(doc) => {
            let document = match options.format {
                Format::Json => serde_json::to_string_pretty(&doc.json).expect("serializable"),
                Format::Text => doc.text,
                Format::Latex => doc.latex.unwrap_or(doc.text),
            };
            Outcome { status: if doc.ok { 0 } else { 1 }, document }
        }
        Err(e) => Outcome { status: 1, document: error_document(&e) },
    }
}

/// Run a parsed command line, write its document, and return the exit status.
pub fn execute(cli: &Cli) -> i32 {
    let outcome = run_command(cli.command, &cli.options);
    let text = format!("{}\n", outcome.document.trim_end());
    match &cli.options.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => outcome.status,
            Err(e) => {
                println!("{}", error_document(&Error::from(e)));
                1
            }
        },
        None => {
            print!("{text}");
            outcome.status
        }
    }
}

fn required<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidInput(format!("--{flag} is required")))
}

fn input(options: &Options) -> Result<SpecFile> {
    load_spec(options.input.as_deref().ok_or_else(|| Error::InvalidInput("--input is required".into()))?)
}

fn poly_json(p: &RatPoly) -> Value {
    json!(p.to_strings())
}

fn poly(options: &Options) -> Result<Doc> {
    let spec = input(options)?.validate()?;
    let result = count_all(&spec)?;
    if let Some(r) = options.residue {
        let p = result
            .polys
            .get(r as usize)
            .ok_or(Error::InvalidIndex { index: r as usize, bound: result.polys.len() })?;
        return Ok(Doc::new(json!({"residue": r, "coeffs": poly_json(p)}), format!("P_{r}(t) = {p}"))
            .latex(format!("P_{{{r}}}(t) = {}", p.to_latex())));
    }
    let text = result
        .polys
        .iter()
        .enumerate()
        .map(|(r, p)| format!("P_{r}(t) = {p}"))
        .collect::<Vec<_>>()
        .join("\n");
    let latex = result
        .polys
        .iter()
        .enumerate()
        .map(|(r, p)| format!("P_{{{r}}}(t) &= {}", p.to_latex()))
        .collect::<Vec<_>>()
        .join(" \\\\\n");
    let json = serde_json::to_value(&result).expect("serializable");
    Ok(Doc::new(json, text).latex(format!("\\begin{{aligned}}\n{latex}\n\\end{{aligned}}")))
}

fn factor(options: &Options) -> Result<Doc> {
    let spec = input(options)?.validate()?;
    let (r, q) = factorize(&spec)?;
    Ok(Doc::new(json!({"r": r, "Q": poly_json(&q)}), format!("r = {r}\nQ(t) = {q}"))
        .latex(format!("r = {r}, \\quad Q_X(t) = {}", q.to_latex())))
}

fn count(options: &Options) -> Result<Doc> {
    let spec = input(options)?.validate()?;
    let (q, n) = (required(options.q, "q")?, required(options.n, "n")?);
    let c = count_at(&spec, q, n)?;
    Ok(Doc::new(json!({"q": q, "n": n, "count": c.to_string()}), c.to_string()))
}

fn period(options: &Options) -> Result<Doc> {
    let spec = input(options)?.validate()?;
    let polys = (0..spec.period())
        .map(|r| count_polynomial(&spec, r))
        .collect::<Result<Vec<_>>>()?;
    let minimal = minimal_period(&polys);
    let bound = period_bound(spec.rank());
    let divides = (&bound % spec.period()) == 0u32.into() && spec.period() % minimal as u64 == 0;
    let json = json!({
        "period": spec.period(),
        "minimal_period": minimal,
        "period_bound": bound.to_string(),
        "divides_bound": divides,
    });
    let text = format!("period {} (minimal {minimal}), bound {bound}", spec.period());
    Ok(Doc { ok: divides, ..Doc::new(json, text) })
}

fn check(options: &Options) -> Result<Doc> {
    let file = input(options)?;
    let report = run_checks(&file, options.qmax.unwrap_or(5), options.nmax.unwrap_or(3));
    let text = report.to_text();
    let ok = report.all_passed();
    Ok(Doc { ok, ..Doc::new(serde_json::to_value(&report).expect("serializable"), text) })
}

fn oracle(options: &Options) -> Result<Doc> {
    let case = options
        .case
        .ok_or_else(|| Error::InvalidInput("oracle needs a case: conic, flags, p1pairs, twisted-torus, glr".into()))?;
    let q = required(options.q, "q")?;
    let field_info = |f: &SmallField| json!({"q": f.order(), "modulus": f.modulus()});
    let (mut json, count) = match case {
        OracleCase::Conic => {
            let f = SmallField::new(q)?;
            let (a, b) = (f.from_int(required(options.a, "a")?), f.from_int(options.b.unwrap_or(1)));
            let c = conic_count(a, b, &f)?;
            (json!({"case": "conic", "field": field_info(&f), "a": options.a, "b": options.b.unwrap_or(1)}), c.to_string())
        }
        OracleCase::Flags => {
            let f = SmallField::new(q)?;
            let n = required(options.n, "n")? as usize;
            let c = flag_count(&f, n, &options.dims)?;
            (json!({"case": "flags", "field": field_info(&f), "n": n, "dims": options.dims}), c.to_string())
        }
        OracleCase::P1Pairs => {
            let f = SmallField::new(q)?;
            let mode = PairMode::from(options.mode);
            let c = p1_pair_count(&f, mode)?;
            (json!({"case": "p1pairs", "field": field_info(&f), "mode": mode}), c.to_string())
        }
        OracleCase::TwistedTorus => {
            let text = options.matrix.as_deref().ok_or_else(|| Error::InvalidInput("--matrix is required".into()))?;
            let a: IntMatrix = serde_json::from_str(text)?;
            let k = required(options.split, "split")?;
            let c = twisted_torus_count(&a, q, k)?;
            (json!({"case": "twisted-torus", "q": q, "matrix": a, "split": k}), c.to_string())
        }
        OracleCase::Glr => {
            let r = required(options.r, "r")?;
            let c = glr_closed_form(r, q)?;
            (json!({"case": "glr", "q": q, "r": r}), c.to_string())
        }
    };
    json["count"] = json!(count);
    Ok(Doc::new(json, count))
}

fn reduce(options: &Options) -> Result<Doc> {
    let spec = input(options)?.validate()?;
    let path = options.trace.as_ref().ok_or_else(|| Error::InvalidInput("--trace is required".into()))?;
    let steps: Vec<ReductionStep> = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let residue = options.residue.unwrap_or(0);
    let base = count_polynomial(&spec, residue)?;
    let trace = ReductionTrace { base, steps };
    let mids = trace.intermediates()?;
    let result = mids.last().expect("non-empty").clone();
    let json = json!({
        "residue": residue,
        "base": poly_json(&trace.base),
        "steps": trace.steps,
        "intermediates": mids.iter().map(poly_json).collect::<Vec<_>>(),
        "result": poly_json(&result),
    });
    Ok(Doc::new(json, result.to_string()).latex(result.to_latex()))
}
