//! Formula-versus-oracle sweeps behind `crosscheck`.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{emit, emit_json, EXIT_COUNTEREXAMPLE, EXIT_OK};
use crate::arith::{ratio, rational, rational_to_string, IndexSet};
use crate::aztec::{count_matchings, count_matchings_profile_dp, row_below, AztecRectangle, HoleyAztecGraph};
use crate::error::{Error, Result};
use crate::formulas::{configuration, dispatch, evaluate, FormulaInput, Hypotheses, Theorem};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Oracle {
    #[default]
    Recursive,
    Profile,
}

#[derive(Args, Debug, Clone)]
pub struct CrosscheckArgs {
    /// Largest M and N for the general shapes.
    #[arg(long, default_value_t = 6)]
    pub max: usize,
    /// Largest M and N for the progression shapes.
    #[arg(long, default_value_t = 8)]
    pub max_progression: usize,
    /// Restrict to these groups: formula ids or `dispatch`.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Also sweep configurations violating the stated hypotheses of these formulas.
    #[arg(long, value_delimiter = ',')]
    pub override_hypothesis: Vec<String>,
    #[arg(long, value_enum, default_value_t = Oracle::Recursive)]
    pub oracle: Oracle,
    /// Record per-case runtimes (makes the report nondeterministic).
    #[arg(long)]
    pub timings: bool,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

impl Default for CrosscheckArgs {
    fn default() -> Self {
        CrosscheckArgs {
            max: 6,
            max_progression: 8,
            only: Vec::new(),
            override_hypothesis: Vec::new(),
            oracle: Oracle::Recursive,
            timings: false,
            out: None,
            json: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub group: String,
    pub params: serde_json::Value,
    pub oracle: String,
    pub formula: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct GroupSummary {
    pub group: String,
    pub total: usize,
    pub passed: usize,
}

/// How a hypothesis clause separates agreeing from disagreeing cases.
#[derive(Debug, Clone, Serialize)]
pub struct ClauseStudy {
    pub theorem: String,
    pub clause: String,
    pub satisfied: usize,
    pub passed_when_satisfied: usize,
    pub violated: usize,
    pub passed_when_violated: usize,
    /// The clause holds exactly on the agreeing cases.
    pub characterises_agreement: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub by_group: Vec<GroupSummary>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossCheckReport {
    pub bounds: serde_json::Value,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub hypothesis_study: Vec<ClauseStudy>,
}

impl CrossCheckReport {
    /// All hypothesis-respecting cases agree. Cases swept only because of an
    /// override are reported but never count as failures.
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass || !c.violations.is_empty())
    }
}

enum Job {
    Formula(Theorem, FormulaInput, Hypotheses),
    Dispatch { rows: usize, n: usize, d: usize, kept: IndexSet },
}

fn push_set_cases(jobs: &mut Vec<Job>, theorem: Theorem, m: usize, n: usize, d: usize, universe: usize, size: i64) {
    if size < 0 || size as usize > universe {
        return;
    }
    for t in IndexSet::subsets(universe, size as usize) {
        jobs.push(Job::Formula(theorem, FormulaInput::with_set(m, n, d, t), Hypotheses::Strict));
    }
}

/// The stated hypothesis clauses that the override sweep may violate.
fn relaxed(theorem: Theorem, m: i64, n: i64, d: i64) -> bool {
    match theorem {
        Theorem::Thm14 | Theorem::Thm16 => n - m - d + 1 >= 0,
        _ => true,
    }
}

fn arithmetic_jobs(theorem: Theorem, pmax: usize, overriding: bool, jobs: &mut Vec<Job>) {
    let wide = theorem == Theorem::Thm13;
    for m in 1..=pmax {
        for d in 0..=pmax {
            let rows = if wide { 2 * m + d } else { (2 * m + d).saturating_sub(1) };
            if rows == 0 || rows > pmax {
                continue;
            }
            for n in 1..=pmax {
                let (mi, ni, di) = (m as i64, n as i64, d as i64);
                let (k, top) = if wide { (2 * mi + di, ni) } else { (2 * ni - 2 * mi - di + 2, ni + 1) };
                if k < 0 || k > top || (!relaxed(theorem, mi, ni, di) && !overriding) {
                    continue;
                }
                let mode = if relaxed(theorem, mi, ni, di) { Hypotheses::Strict } else { Hypotheses::Override };
                for c in 1..=top.max(1) {
                    for step in 1..=top.max(1) {
                        let fits = k == 0 || c + (k - 1) * step <= top;
                        let canonical = (k > 0 || c == 1) && (k > 1 || step == 1);
                        if fits && canonical {
                            jobs.push(Job::Formula(theorem, FormulaInput::arithmetic(m, n, d, c, step), mode));
                        }
                    }
                }
            }
        }
    }
}

fn geometric_jobs(theorem: Theorem, pmax: usize, overriding: bool, jobs: &mut Vec<Job>) {
    let wide = theorem == Theorem::Thm15;
    for m in 1..=pmax {
        for d in 0..=pmax {
            let rows = if wide { 2 * m + d } else { (2 * m + d).saturating_sub(1) };
            if rows == 0 || rows > pmax {
                continue;
            }
            for n in 1..=pmax {
                let (mi, ni, di) = (m as i64, n as i64, d as i64);
                let (k, top) = if wide { (2 * mi + di, ni) } else { (2 * ni - 2 * mi - di + 2, ni + 1) };
                if k < 0 || k > top || (!relaxed(theorem, mi, ni, di) && !overriding) {
                    continue;
                }
                let mode = if relaxed(theorem, mi, ni, di) { Hypotheses::Strict } else { Hypotheses::Override };
                for q in [2i64, 3] {
                    for t1 in 1..=top.max(1) {
                        for gap in 1..=top.max(1) {
                            // t_i = t_1 + gap (q^{i-1} - 1) / (q - 1)
                            let last = if k == 0 { t1 } else { t1 + gap * (q.pow(k as u32 - 1) - 1) / (q - 1) };
                            let canonical = (k > 0 || t1 == 1) && (k > 1 || gap == 1);
                            if last > top || !canonical {
                                continue;
                            }
                            let step = ratio(gap, q - 1);
                            let c = rational(t1) - &step;
                            jobs.push(Job::Formula(theorem, FormulaInput::geometric(m, n, d, c, step, rational(q)), mode));
                        }
                    }
                }
            }
        }
    }
}

fn theorem_jobs(theorem: Theorem, a: &CrosscheckArgs) -> Vec<Job> {
    let max = a.max;
    let overriding = a.override_hypothesis.iter().any(|s| s == theorem.id());
    let mut jobs = Vec::new();
    match theorem {
        Theorem::TopRow => {
            for m in 1..=max {
                for n in m..=max {
                    push_set_cases(&mut jobs, theorem, m, n, 0, n, m as i64);
                }
            }
        }
        Theorem::SecondRow => {
            for m in 1..=max {
                for n in 1..=max {
                    push_set_cases(&mut jobs, theorem, m, n, 0, n + 1, m as i64);
                }
            }
        }
        Theorem::Thm7 | Theorem::Thm9 | Theorem::Thm11 => {
            let ds: Vec<usize> = match theorem {
                Theorem::Thm7 => vec![0],
                Theorem::Thm9 => vec![1],
                _ => (0..=max).collect(),
            };
            for d in ds {
                for m in 0..=max {
                    let rows = 2 * m + d;
                    if rows == 0 || rows > max || (m == 0 && theorem == Theorem::Thm7) {
                        continue;
                    }
                    for n in 1..=max {
                        push_set_cases(&mut jobs, theorem, m, n, d, n, rows as i64);
                    }
                }
            }
        }
        Theorem::Thm8 | Theorem::Thm10 | Theorem::Thm12 => {
            let ds: Vec<usize> = match theorem {
                Theorem::Thm8 => vec![0],
                Theorem::Thm10 => vec![1],
                _ => (0..=max).collect(),
            };
            for d in ds {
                for m in 1..=max {
                    let rows = 2 * m + d - 1;
                    if rows == 0 || rows > max {
                        continue;
                    }
                    for n in 1..=max {
                        let size = 2 * n as i64 - 2 * m as i64 - d as i64 + 2;
                        push_set_cases(&mut jobs, theorem, m, n, d, n + 1, size);
                    }
                }
            }
        }
        Theorem::Thm13 | Theorem::Thm14 => arithmetic_jobs(theorem, a.max_progression, overriding, &mut jobs),
        Theorem::Thm15 | Theorem::Thm16 => geometric_jobs(theorem, a.max_progression, overriding, &mut jobs),
    }
    jobs
}

fn dispatch_jobs(max: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for rows in 1..=max {
        for n in 1..=max {
            for d in 0..=rows {
                let row = row_below(rows, d).expect("d <= M");
                let len = AztecRectangle { rows_param: rows, cols_param: n }.row_length(row);
                let holes = rows.abs_diff(n);
                let odd_row = row % 2 == 1;
                if holes > len || (odd_row && rows > n) || (!odd_row && rows < n) {
                    continue;
                }
                for kept in IndexSet::subsets(len, len - holes) {
                    jobs.push(Job::Dispatch { rows, n, d, kept });
                }
            }
        }
    }
    jobs
}

fn oracle_count(g: &HoleyAztecGraph, oracle: Oracle) -> BigInt {
    match oracle {
        Oracle::Recursive => count_matchings(g),
        Oracle::Profile => count_matchings_profile_dp(g),
    }
}

fn count_or_zero(g: Result<HoleyAztecGraph>, oracle: Oracle) -> Result<BigInt> {
    match g {
        Ok(g) => Ok(oracle_count(&g, oracle)),
        Err(Error::OddVertexCount(_)) => Ok(BigInt::from(0)),
        Err(e) => Err(e),
    }
}

fn run_job(job: &Job, a: &CrosscheckArgs) -> CaseRecord {
    let start = Instant::now();
    let mut rec = match job {
        Job::Formula(theorem, input, mode) => {
            let params = input.to_json(*theorem);
            let oracle = count_or_zero(configuration(*theorem, input), a.oracle);
            let formula = evaluate(*theorem, input, *mode);
            let (formula_text, violations, value) = match formula {
                Ok(e) => (rational_to_string(&e.value), e.violations, Some(e.value)),
                Err(e) => (format!("error: {e}"), Vec::new(), None),
            };
            let (oracle_text, pass) = match oracle {
                Ok(o) => (o.to_string(), value.is_some_and(|v| v == BigRational::from_integer(o))),
                Err(e) => (format!("error: {e}"), false),
            };
            CaseRecord {
                group: theorem.id().to_string(),
                params,
                oracle: oracle_text,
                formula: formula_text,
                pass,
                violations,
                runtime_ms: None,
            }
        }
        Job::Dispatch { rows, n, d, kept } => {
            let row = row_below(*rows, *d).expect("d <= M");
            let oracle = count_or_zero(crate::aztec::build_holey_graph(*rows, *n, row, kept), a.oracle);
            let routed = dispatch(*rows, *n, *d, kept);
            let mut params = json!({"M": rows, "N": n, "d": d, "T": kept.as_slice()});
            let formula_text = match &routed {
                Ok(r) => {
                    params["theorem"] = r.theorem.id().into();
                    r.value.to_string()
                }
                Err(e) => format!("error: {e}"),
            };
            let oracle_text = oracle.as_ref().map(|o| o.to_string()).unwrap_or_else(|e| format!("error: {e}"));
            let pass = matches!((&routed, &oracle), (Ok(r), Ok(o)) if &r.value == o);
            CaseRecord {
                group: "dispatch".into(),
                params,
                oracle: oracle_text,
                formula: formula_text,
                pass,
                violations: Vec::new(),
                runtime_ms: None,
            }
        }
    };
    if a.timings {
        rec.runtime_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    rec
}

fn clause_holds(clause: &str, p: &serde_json::Value) -> bool {
    let get = |k: &str| p[k].as_i64().unwrap_or(0);
    let (m, n, d) = (get("m"), get("N"), get("d"));
    match clause {
        "2m + d - 1 <= N" => 2 * m + d - 1 <= n,
        "2m + d - 1 >= N" => 2 * m + d - 1 >= n,
        "N - m - d + 1 >= 0" => n - m - d + 1 >= 0,
        "2m + d - 1 >= N and N - m - d + 1 >= 0" => 2 * m + d - 1 >= n && n - m - d + 1 >= 0,
        _ => unreachable!("unknown clause {clause}"),
    }
}

fn study(theorem: &str, cases: &[CaseRecord]) -> Vec<ClauseStudy> {
    let relevant: Vec<&CaseRecord> = cases.iter().filter(|c| c.group == theorem).collect();
    ["2m + d - 1 <= N", "2m + d - 1 >= N", "N - m - d + 1 >= 0", "2m + d - 1 >= N and N - m - d + 1 >= 0"]
        .into_iter()
        .map(|clause| {
            let (mut s, mut ps, mut v, mut pv) = (0, 0, 0, 0);
            for c in &relevant {
                if clause_holds(clause, &c.params) {
                    s += 1;
                    ps += usize::from(c.pass);
                } else {
                    v += 1;
                    pv += usize::from(c.pass);
                }
            }
            ClauseStudy {
                theorem: theorem.to_string(),
                clause: clause.to_string(),
                satisfied: s,
                passed_when_satisfied: ps,
                violated: v,
                passed_when_violated: pv,
                characterises_agreement: ps == s && pv == 0,
            }
        })
        .collect()
}

fn selected(a: &CrosscheckArgs, group: &str) -> bool {
    a.only.is_empty() || a.only.iter().any(|s| s == group)
}

/// Runs the sweep. Cases keep their generation order, which is sorted by
/// group and then by parameters.
pub fn crosscheck(a: &CrosscheckArgs) -> Result<CrossCheckReport> {
    for id in a.only.iter().chain(&a.override_hypothesis) {
        if id != "dispatch" {
            id.parse::<Theorem>()?;
        }
    }
    let mut jobs = Vec::new();
    for theorem in Theorem::ALL {
        if selected(a, theorem.id()) {
            jobs.extend(theorem_jobs(theorem, a));
        }
    }
    if selected(a, "dispatch") {
        jobs.extend(dispatch_jobs(a.max));
    }
    let cases: Vec<CaseRecord> = jobs.par_iter().map(|j| run_job(j, a)).collect();
    let mut by_group: Vec<GroupSummary> = Vec::new();
    for c in &cases {
        if by_group.last().is_none_or(|g| g.group != c.group) {
            by_group.push(GroupSummary { group: c.group.clone(), ..Default::default() });
        }
        let g = by_group.last_mut().expect("just pushed");
        g.total += 1;
        g.passed += usize::from(c.pass);
    }
    let passed = cases.iter().filter(|c| c.pass).count();
    let hypothesis_study = a
        .override_hypothesis
        .iter()
        .filter(|id| matches!(id.as_str(), "thm12" | "thm14" | "thm16"))
        .flat_map(|id| study(id, &cases))
        .collect();
    Ok(CrossCheckReport {
        bounds: json!({"max": a.max, "max_progression": a.max_progression, "oracle": a.oracle}),
        summary: Summary { total: cases.len(), passed, failed: cases.len() - passed, by_group },
        cases,
        hypothesis_study,
    })
}

pub(crate) fn cmd_crosscheck(a: &CrosscheckArgs, out: &mut dyn Write) -> Result<i32> {
    let report = crosscheck(a)?;
    let value = serde_json::to_value(&report).expect("serialisable report");
    if let Some(path) = &a.out {
        let text = serde_json::to_string_pretty(&value).expect("json value") + "\n";
        std::fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    }
    if a.json {
        emit_json(out, &value)?;
    } else {
        for s in &report.summary.by_group {
            emit(out, &format!("{}: {}/{} agree", s.group, s.passed, s.total))?;
        }
        for s in &report.hypothesis_study {
            emit(
                out,
                &format!(
                    "{} [{}]: holds on {} ({} agree), fails on {} ({} agree){}",
                    s.theorem,
                    s.clause,
                    s.satisfied,
                    s.passed_when_satisfied,
                    s.violated,
                    s.passed_when_violated,
                    if s.characterises_agreement { "  <- matches agreement exactly" } else { "" }
                ),
            )?;
        }
        if let Some(c) = report.cases.iter().find(|c| !c.pass && c.violations.is_empty()) {
            emit(out, &format!("first disagreement: {} oracle {} formula {}", c.params, c.oracle, c.formula))?;
        }
        emit(out, &format!("total: {}/{} agree", report.summary.passed, report.summary.total))?;
    }
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}
