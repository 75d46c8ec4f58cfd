//! Command-line front end.
//!
//! Exit status: 0 when everything checks out, 1 on a verification
//! counterexample, 2 on invalid input.

pub mod crosscheck;
pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::arith::{parse_rational, rational_to_string, IndexSet};
use crate::aztec::{
    count_matchings, count_matchings_lowest_first, count_matchings_profile_dp, kept_from_removed,
    AztecRectangle, HoleyAztecGraph,
};
use crate::error::{Error, Result};
use crate::formulas::{evaluate, FormulaInput, Hypotheses, Theorem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "holey-aztec", version, about = "Perfect matchings of Aztec rectangles with holes on one row")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count perfect matchings exactly.
    Count(CountArgs),
    /// Evaluate a closed form.
    Formula(FormulaArgs),
    /// Run an identity or bijection sweep.
    Verify(verify::VerifyArgs),
    /// Compare every formula against the matching counter.
    Crosscheck(crosscheck::CrosscheckArgs),
    /// Draw a holey rectangle as SVG.
    Render(render::RenderArgs),
}

/// Rectangle and hole placement shared by `count` and `render`.
#[derive(Args, Debug, Clone)]
pub struct HoleArgs {
    #[arg(short = 'M', help = "Rows parameter M")]
    pub rows: usize,
    #[arg(short = 'N', help = "Columns parameter N")]
    pub cols: usize,
    /// Holey row is d rows below the central one.
    #[arg(short = 'd', default_value_t = 0)]
    pub d: usize,
    /// Holey row given directly (1 = top).
    #[arg(long, conflicts_with = "d")]
    pub row: Option<usize>,
    /// Positions kept on the holey row.
    #[arg(long, value_delimiter = ',', conflicts_with = "removed")]
    pub kept: Option<Vec<usize>>,
    /// Positions removed from the holey row.
    #[arg(long, value_delimiter = ',')]
    pub removed: Option<Vec<usize>>,
}

/// A validated hole specification.
pub struct Holes {
    pub rows: usize,
    pub cols: usize,
    pub row: usize,
    pub kept: IndexSet,
}

impl Holes {
    pub fn removed(&self) -> Vec<(usize, usize)> {
        let len = AztecRectangle { rows_param: self.rows, cols_param: self.cols }.row_length(self.row);
        (1..=len).filter(|k| !self.kept.contains(*k)).map(|k| (self.row, k)).collect()
    }

    pub fn graph(&self) -> Result<HoleyAztecGraph> {
        HoleyAztecGraph::with_removed(self.rows, self.cols, self.removed())
    }

    /// As [`Holes::graph`] but allows an odd number of survivors.
    pub fn graph_unchecked(&self) -> Result<HoleyAztecGraph> {
        HoleyAztecGraph::with_removed_unchecked(self.rows, self.cols, self.removed())
    }

    fn params(&self) -> serde_json::Value {
        json!({"M": self.rows, "N": self.cols, "row": self.row, "kept": self.kept.as_slice()})
    }
}

impl HoleArgs {
    pub fn resolve(&self) -> Result<Holes> {
        let base = AztecRectangle::new(self.rows, self.cols)?;
        let row = match self.row {
            Some(r) => r,
            None => crate::aztec::row_below(self.rows, self.d)?,
        };
        if !(1..=base.vertex_rows()).contains(&row) {
            return Err(Error::InvalidInput(format!("row {row} outside 1..={}", base.vertex_rows())));
        }
        let len = base.row_length(row);
        let kept = match (&self.kept, &self.removed) {
            (Some(k), _) => IndexSet::from_unsorted(k.clone())?,
            (None, Some(r)) => kept_from_removed(len, &IndexSet::from_unsorted(r.clone())?)?,
            (None, None) => IndexSet::full(len),
        };
        if kept.largest().is_some_and(|k| k > len) {
            return Err(Error::InvalidInput(format!("kept positions {kept} exceed row length {len}")));
        }
        Ok(Holes { rows: self.rows, cols: self.cols, row, kept })
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    /// Memoised elimination at a minimum-degree vertex.
    Recursive,
    /// Memoised elimination at the first surviving vertex.
    LowestFirst,
    /// Row-by-row transfer over matched-downward masks.
    Profile,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[command(flatten)]
    holes: HoleArgs,
    #[arg(long, value_enum, default_value_t = Method::Recursive)]
    method: Method,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct FormulaArgs {
    /// Formula id: top-row, second-row, thm7 ... thm16.
    id: String,
    #[arg(short = 'm', default_value_t = 0)]
    m: usize,
    #[arg(short = 'N', short_alias = 'n', default_value_t = 0)]
    n: usize,
    #[arg(short = 'd', default_value_t = 0)]
    d: usize,
    /// Kept positions (removed positions for second-row).
    #[arg(long = "t", value_delimiter = ',')]
    t: Option<Vec<usize>>,
    #[arg(short = 'C', allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(short = 'D', allow_hyphen_values = true)]
    step: Option<String>,
    #[arg(short = 'q', allow_hyphen_values = true)]
    q: Option<String>,
    /// Evaluate even when stated hypotheses fail, and report which.
    #[arg(long)]
    override_hypothesis: bool,
    #[arg(long)]
    json: bool,
}

/// Parses and runs a command line, printing to stdout and stderr.
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
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Count(a) => cmd_count(&a, out),
        Command::Formula(a) => cmd_formula(&a, out),
        Command::Verify(a) => verify::cmd_verify(&a, out),
        Command::Crosscheck(a) => crosscheck::cmd_crosscheck(&a, out),
        Command::Render(a) => render::cmd_render(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Integrality(_) => EXIT_COUNTEREXAMPLE,
        _ => EXIT_INVALID,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidInput(format!("write failed: {e}"))
}

pub(crate) fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    writeln!(out, "{text}").map_err(io)
}

pub(crate) fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    emit(out, &serde_json::to_string_pretty(value).expect("json value"))
}

fn cmd_count(a: &CountArgs, out: &mut dyn Write) -> Result<i32> {
    let holes = a.holes.resolve()?;
    let count = match holes.graph() {
        Ok(g) => match a.method {
            Method::Recursive => count_matchings(&g),
            Method::LowestFirst => count_matchings_lowest_first(&g),
            Method::Profile => count_matchings_profile_dp(&g),
        },
        Err(Error::OddVertexCount(_)) => BigInt::from(0),
        Err(e) => return Err(e),
    };
    if a.json {
        emit_json(out, &json!({"params": holes.params(), "count": count.to_string()}))?;
    } else {
        emit(out, &count.to_string())?;
    }
    Ok(EXIT_OK)
}

fn cmd_formula(a: &FormulaArgs, out: &mut dyn Write) -> Result<i32> {
    let theorem: Theorem = a.id.parse()?;
    let parse = |s: &Option<String>| s.as_deref().map(parse_rational).transpose();
    let input = FormulaInput {
        m: a.m,
        n: a.n,
        d: a.d,
        t: a.t.clone().map(IndexSet::from_unsorted).transpose()?,
        c: parse(&a.c)?,
        step: parse(&a.step)?,
        q: parse(&a.q)?,
    };
    let mode = if a.override_hypothesis { Hypotheses::Override } else { Hypotheses::Strict };
    let e = evaluate(theorem, &input, mode)?;
    if mode == Hypotheses::Strict {
        e.integer()?;
    }
    let value = rational_to_string(&e.value);
    if a.json {
        emit_json(
            out,
            &json!({
                "params": input.to_json(theorem),
                "formula": value,
                "integral": e.value.is_integer(),
                "hypotheses": {
                    "mode": if a.override_hypothesis { "override" } else { "strict" },
                    "violations": e.violations,
                },
            }),
        )?;
    } else {
        emit(out, &value)?;
        if e.violations.is_empty() {
            emit(out, "hypotheses: satisfied")?;
        } else {
            emit(out, &format!("hypotheses: violated ({})", e.violations.join("; ")))?;
        }
    }
    Ok(EXIT_OK)
}
