//! Exhaustive identity and bijection sweeps behind `verify`.

use std::collections::{BTreeMap, HashSet};
use std::io::Write;

use clap::{Args, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{emit, emit_json, EXIT_COUNTEREXAMPLE, EXIT_OK};
use crate::arith::{ratio, rational, IndexSet, Partition};
use crate::error::Result;
use crate::identities::{
    lhs_theorem3, lhs_theorem4, lhs_theorem5, q_selberg_product, q_selberg_sum, rhs_theorem3, rhs_theorem4,
    rhs_theorem5, selberg_product, selberg_sum,
};
use crate::paths::{
    downup_matching, enumerate_families, exchange_colours, exchange_colours_odd, restore_colours, Colour, PathFamily,
};
use crate::schur::{rectangle_complement, schur_polynomial, skew_schur_polynomial, verify_branching, Polynomial, SkewShape};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Equal-size split identity.
    Thm3,
    /// Split identity with one extra element and one extra variable.
    Thm4,
    /// Split identity with gap d.
    Thm5,
    /// Selberg-type summations and their q-analogues.
    Hyper,
    /// Colour exchange along down-up trails.
    Bijection,
    /// Branching rule and rectangle complements.
    Branching,
}

#[derive(Args, Debug, Clone, Default)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Option<Suite>,
    /// Largest element of T.
    #[arg(long)]
    pub tmax: Option<usize>,
    /// Largest number of variables.
    #[arg(long = "n")]
    pub n: Option<usize>,
    /// Largest m.
    #[arg(long = "m")]
    pub m: Option<usize>,
    /// Largest s (summation length).
    #[arg(long = "s")]
    pub s: Option<usize>,
    /// Largest gap d.
    #[arg(long = "d")]
    pub d: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

/// Outcome of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub bounds: BTreeMap<String, usize>,
    pub cases: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
    pub census: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }

    fn from_outcomes(suite: Suite, bounds: &[(&str, usize)], outcomes: Vec<Option<String>>) -> Self {
        let failures: Vec<String> = outcomes.into_iter().flatten().collect();
        SuiteReport {
            suite,
            bounds: bounds.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            cases: 0,
            failures: failures.len(),
            first_counterexample: failures.into_iter().next(),
            census: Vec::new(),
        }
    }
}

fn compare(label: String, lhs: Result<Polynomial>, rhs: Result<Polynomial>) -> Option<String> {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => l
            .first_difference(&r)
            .map(|(e, a, b)| format!("{label}: coefficient of {e:?} is {a} on the left, {b} on the right")),
        (Err(e), _) | (_, Err(e)) => Some(format!("{label}: {e}")),
    }
}

fn subsets_of_sizes(tmax: usize, sizes: impl IntoIterator<Item = usize>) -> Vec<IndexSet> {
    sizes.into_iter().filter(|&k| k <= tmax).flat_map(|k| IndexSet::subsets(tmax, k)).collect()
}

/// Equal-size splits: all `T ⊆ {1..tmax}` with `|T| ∈ {2, 4}`, `n <= nmax`.
pub fn split_even(tmax: usize, nmax: usize) -> SuiteReport {
    let cases: Vec<(IndexSet, usize)> = subsets_of_sizes(tmax, [2, 4])
        .into_iter()
        .flat_map(|t| (1..=nmax).map(move |n| (t.clone(), n)))
        .collect();
    let out = cases
        .par_iter()
        .map(|(t, n)| compare(format!("T={t}, n={n}"), lhs_theorem3(t, *n), rhs_theorem3(t, *n)))
        .collect();
    let mut r = SuiteReport::from_outcomes(Suite::Thm3, &[("tmax", tmax), ("n", nmax)], out);
    r.cases = cases.len();
    r
}

/// One extra element: `|T| ∈ {1, 3, 5}`, `n <= nmax`.
pub fn split_odd(tmax: usize, nmax: usize) -> SuiteReport {
    let cases: Vec<(IndexSet, usize)> = subsets_of_sizes(tmax, [1, 3, 5])
        .into_iter()
        .flat_map(|t| (1..=nmax).map(move |n| (t.clone(), n)))
        .collect();
    let out = cases
        .par_iter()
        .map(|(t, n)| compare(format!("T={t}, n={n}"), lhs_theorem4(t, *n), rhs_theorem4(t, *n)))
        .collect();
    let mut r = SuiteReport::from_outcomes(Suite::Thm4, &[("tmax", tmax), ("n", nmax)], out);
    r.cases = cases.len();
    r
}

/// Gap `d`: `|T| = 2m + d`, `m <= mmax`, `d <= dmax`, `n <= nmax`.
pub fn split_gap(tmax: usize, mmax: usize, dmax: usize, nmax: usize) -> SuiteReport {
    let mut cases = Vec::new();
    for d in 0..=dmax {
        for m in 0..=mmax {
            for t in subsets_of_sizes(tmax, [2 * m + d]) {
                for n in 1..=nmax {
                    cases.push((t.clone(), n, d));
                }
            }
        }
    }
    let out = cases
        .par_iter()
        .map(|(t, n, d)| compare(format!("T={t}, n={n}, d={d}"), lhs_theorem5(t, *n, *d), rhs_theorem5(t, *n, *d)))
        .collect();
    let mut r =
        SuiteReport::from_outcomes(Suite::Thm5, &[("tmax", tmax), ("m", mmax), ("d", dmax), ("n", nmax)], out);
    r.cases = cases.len();
    r
}

/// Rational sample points for the summations.
pub fn selberg_grid() -> Vec<BigRational> {
    vec![ratio(1, 2), rational(1), ratio(3, 2), rational(2), ratio(7, 3)]
}

/// Summations against their products: the rational grid for `m <= mmax`,
/// `s <= smax` (plus `s = m + 2`, where both sides vanish), the pairs
/// `(1/2, 3/2)` and `(3/2, 3/2)` for `m <= max(mmax, 6)` and every `s`, and
/// the q-analogue for `q ∈ {2, 1/2, 3}`, `x, y ∈ {q, q^2, q^3, 5}`.
pub fn summations(mmax: usize, smax: usize) -> SuiteReport {
    let mut plain: Vec<(BigRational, BigRational, usize, usize)> = Vec::new();
    let grid = selberg_grid();
    for x in &grid {
        for y in &grid {
            for m in 0..=mmax {
                for s in (1..=smax).chain([m + 2]) {
                    plain.push((x.clone(), y.clone(), m, s));
                }
            }
        }
    }
    for (x, y) in [(ratio(1, 2), ratio(3, 2)), (ratio(3, 2), ratio(3, 2))] {
        for m in 0..=mmax.max(6) {
            for s in 1..=m + 1 {
                plain.push((x.clone(), y.clone(), m, s));
            }
        }
    }
    let mut qcases = Vec::new();
    for q in [rational(2), ratio(1, 2), rational(3)] {
        let pts = [q.clone(), &q * &q, &q * &q * &q, rational(5)];
        for x in &pts {
            for y in &pts {
                for m in 0..=mmax {
                    for s in (1..=smax).chain([m + 2]) {
                        qcases.push((x.clone(), y.clone(), q.clone(), m, s));
                    }
                }
            }
        }
    }
    let mut out: Vec<Option<String>> = plain
        .par_iter()
        .map(|(x, y, m, s)| {
            let (l, r) = (selberg_sum(x, y, *m, *s), selberg_product(x, y, *m, *s));
            (l != r).then(|| format!("x={x}, y={y}, m={m}, s={s}: sum {l}, product {r}"))
        })
        .collect();
    let qout: Vec<Option<String>> = qcases.par_iter().map(|(x, y, q, m, s)| {
        match (q_selberg_sum(x, y, q, *m, *s), q_selberg_product(x, y, q, *m, *s)) {
            (Ok(l), Ok(r)) if l == r => None,
            (Ok(l), Ok(r)) => Some(format!("q={q}, x={x}, y={y}, m={m}, s={s}: sum {l}, product {r}")),
            (Err(e), _) | (_, Err(e)) => Some(format!("q={q}, x={x}, y={y}, m={m}, s={s}: {e}")),
        }
    }).collect();
    out.extend(qout);
    let mut r = SuiteReport::from_outcomes(Suite::Hyper, &[("m", mmax), ("s", smax)], out);
    r.cases = plain.len() + qcases.len();
    r.census = vec![format!("{} plain cases, {} q cases", plain.len(), qcases.len())];
    r
}

fn crossing(p: (usize, usize), q: (usize, usize)) -> bool {
    (p.0 < q.0 && q.0 < p.1 && p.1 < q.1) || (q.0 < p.0 && p.0 < q.1 && q.1 < p.1)
}

fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

type Image = (PathFamily, PathFamily, Vec<bool>);

/// Checks one `T` exhaustively; returns `(#inputs, #outputs x 2^m)` or the
/// first problem found.
fn bijection_case(t: &IndexSet, n: usize, odd: bool) -> std::result::Result<(usize, usize), String> {
    let m = t.len() / 2;
    let nvars = n + 1;
    let red_row = if odd { 0 } else { 1 };
    let label = |g: &PathFamily, r: &PathFamily| format!("T={t}, n={n}, green {:?}, red {:?}", g.ends(), r.ends());
    let mut seen: HashSet<Image> = HashSet::new();
    let mut inputs = 0usize;
    for pos in crate::arith::combinations(t.len(), m) {
        let a = IndexSet::new(pos.iter().map(|&i| t.as_slice()[i]).collect()).expect("subset");
        let b = t.difference(&a);
        let greens = enumerate_families(&a, n as i64, 1, Colour::Green);
        let reds = enumerate_families(&b, n as i64, red_row, Colour::Red);
        for g in &greens {
            for r in &reds {
                inputs += 1;
                let matching = downup_matching(g, r).map_err(|e| format!("{}: {e}", label(g, r)))?;
                if matching.pairs.iter().any(|&(i, j)| i % 2 == j % 2) {
                    return Err(format!("{}: pairs of equal parity {:?}", label(g, r), matching.pairs));
                }
                for (x, p) in matching.pairs.iter().enumerate() {
                    if matching.pairs[x + 1..].iter().any(|&q| crossing(*p, q)) {
                        return Err(format!("{}: crossing pairs {:?}", label(g, r), matching.pairs));
                    }
                }
                if odd {
                    match matching.distinguished {
                        Some(i) if i % 2 == 1 && b.contains(t.t(i)) => {}
                        other => return Err(format!("{}: distinguished end point {other:?}", label(g, r))),
                    }
                }
                let image = if odd { exchange_colours_odd(g, r) } else { exchange_colours(g, r) };
                let (g2, r2, bits) = image.map_err(|e| format!("{}: {e}", label(g, r)))?;
                if g2.ends() != t.even_indexed().as_slice().iter().map(|&x| x as i64).collect::<Vec<_>>()
                    || r2.ends() != t.odd_indexed().as_slice().iter().map(|&x| x as i64).collect::<Vec<_>>()
                {
                    return Err(format!("{}: image ends {:?} / {:?}", label(g, r), g2.ends(), r2.ends()));
                }
                if add(&g.weight(nvars), &r.weight(nvars)) != add(&g2.weight(nvars), &r2.weight(nvars)) {
                    return Err(format!("{}: weight changed", label(g, r)));
                }
                let back = restore_colours(&g2, &r2, &bits).map_err(|e| format!("{}: inverse: {e}", label(g, r)))?;
                if back != (g.clone(), r.clone()) {
                    return Err(format!("{}: inverse does not round-trip", label(g, r)));
                }
                if !seen.insert((g2, r2, bits)) {
                    return Err(format!("{}: image already hit", label(g, r)));
                }
            }
        }
    }
    let outputs = enumerate_families(&t.even_indexed(), n as i64, 1, Colour::Green).len()
        * enumerate_families(&t.odd_indexed(), n as i64, red_row, Colour::Red).len()
        << m;
    if outputs != inputs {
        return Err(format!("T={t}, n={n}: {inputs} inputs but {outputs} outputs times choices"));
    }
    let lhs = if odd { lhs_theorem4(t, n) } else { lhs_theorem3(t, n) }.map_err(|e| e.to_string())?;
    let rhs = if odd { rhs_theorem4(t, n) } else { rhs_theorem3(t, n) }.map_err(|e| e.to_string())?;
    if lhs.coefficient_sum() != BigInt::from(inputs) || rhs.coefficient_sum() != BigInt::from(outputs) {
        return Err(format!("T={t}, n={n}: census {inputs} disagrees with the split sums at x = 1"));
    }
    Ok((inputs, outputs))
}

/// Colour exchange for `m <= mmax`, `n <= nmax`, `T ⊆ {1..tmax}`, both the
/// equal-size and the one-extra-path cases.
pub fn bijection(mmax: usize, nmax: usize, tmax: usize) -> SuiteReport {
    let mut cases = Vec::new();
    for odd in [false, true] {
        for m in 0..=mmax {
            let size = 2 * m + usize::from(odd);
            if size == 0 {
                continue;
            }
            for n in 1..=nmax {
                for t in subsets_of_sizes(tmax, [size]) {
                    cases.push((t, n, odd, m));
                }
            }
        }
    }
    let results: Vec<_> = cases.par_iter().map(|(t, n, odd, _)| bijection_case(t, *n, *odd)).collect();
    let mut census: BTreeMap<(bool, usize, usize), (usize, usize, usize)> = BTreeMap::new();
    let mut outcomes = Vec::new();
    for ((_, n, odd, m), res) in cases.iter().zip(results) {
        match res {
            Ok((i, o)) => {
                let c = census.entry((*odd, *m, *n)).or_default();
                c.0 += 1;
                c.1 += i;
                c.2 += o;
                outcomes.push(None);
            }
            Err(e) => outcomes.push(Some(e)),
        }
    }
    let mut r = SuiteReport::from_outcomes(Suite::Bijection, &[("m", mmax), ("n", nmax), ("tmax", tmax)], outcomes);
    r.cases = cases.len();
    r.census = census
        .into_iter()
        .map(|((odd, m, n), (sets, i, o))| {
            format!(
                "{} m={m} n={n}: {sets} sets, {i} input pairs, {o} = 2^{m} x output pairs",
                if odd { "odd " } else { "even" }
            )
        })
        .collect();
    r
}

/// All partitions with at most `rows` parts, each at most `width`.
fn partitions_in(width: usize, rows: usize) -> Vec<Partition> {
    Partition::rectangle(width, rows).subpartitions()
}

/// Branching for `|lambda| <= size`, `alpha + beta <= vars`; complements
/// inside the `2 x 2` and `3 x 2` rectangles for `n <= 3`.
pub fn branching(size: usize, vars: usize) -> SuiteReport {
    let mut cases: Vec<(Partition, usize, usize)> = Vec::new();
    for lambda in partitions_in(size, vars).into_iter().filter(|l| l.size() <= size) {
        for alpha in 0..=vars {
            for beta in 0..=vars - alpha {
                if alpha + beta >= 1 && lambda.length() <= alpha + beta {
                    cases.push((lambda.clone(), alpha, beta));
                }
            }
        }
    }
    let mut out: Vec<Option<String>> = cases
        .par_iter()
        .map(|(l, a, b)| (!verify_branching(l, *a, *b)).then(|| format!("branching fails for {l}, alpha={a}, beta={b}")))
        .collect();
    let mut comp = 0;
    for (width, rows) in [(2, 2), (2, 3)] {
        let rect = Partition::rectangle(width, rows);
        for mu in partitions_in(width, rows) {
            for n in 1..=3 {
                comp += 1;
                let res = rectangle_complement(&mu, width, rows).and_then(|c| {
                    let skew = skew_schur_polynomial(&SkewShape::new(rect.clone(), mu.clone())?, n);
                    Ok((skew, schur_polynomial(&c, n)))
                });
                out.push(match res {
                    Ok((a, b)) if a == b => None,
                    Ok(_) => Some(format!("complement of {mu} in {rows}x{width} fails for n={n}")),
                    Err(e) => Some(format!("complement of {mu} in {rows}x{width}: {e}")),
                });
            }
        }
    }
    let mut r = SuiteReport::from_outcomes(Suite::Branching, &[("size", size), ("vars", vars)], out);
    r.cases = cases.len() + comp;
    r.census = vec![format!("{} branching cases, {comp} complement cases", cases.len())];
    r
}

pub fn suite_name(s: Suite) -> String {
    s.to_possible_value().expect("no skipped variants").get_name().to_string()
}

/// Runs a suite with the given bounds, filling in defaults.
pub fn run_suite(a: &VerifyArgs) -> Option<SuiteReport> {
    Some(match a.suite? {
        Suite::Thm3 => split_even(a.tmax.unwrap_or(6), a.n.unwrap_or(3)),
        Suite::Thm4 => split_odd(a.tmax.unwrap_or(6), a.n.unwrap_or(2)),
        Suite::Thm5 => split_gap(a.tmax.unwrap_or(6), a.m.unwrap_or(2), a.d.unwrap_or(3), a.n.unwrap_or(2)),
        Suite::Hyper => summations(a.m.unwrap_or(5), a.s.unwrap_or(3)),
        Suite::Bijection => bijection(a.m.unwrap_or(2), a.n.unwrap_or(2), a.tmax.unwrap_or(5)),
        Suite::Branching => branching(a.s.unwrap_or(4), a.n.unwrap_or(3)),
    })
}

pub(crate) fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let suites: Vec<Suite> = match a.suite {
        Some(s) => vec![s],
        None => Suite::value_variants().to_vec(),
    };
    let reports: Vec<SuiteReport> =
        suites.into_iter().filter_map(|s| run_suite(&VerifyArgs { suite: Some(s), ..a.clone() })).collect();
    if a.json {
        emit_json(out, &json!(reports))?;
    } else {
        for r in &reports {
            let status = if r.passed() { "pass" } else { "FAIL" };
            emit(out, &format!("{}: {status} ({} cases, {} failures)", suite_name(r.suite), r.cases, r.failures))?;
            for line in &r.census {
                emit(out, &format!("  {line}"))?;
            }
            if let Some(c) = &r.first_counterexample {
                emit(out, &format!("  first counterexample: {c}"))?;
            }
        }
    }
    Ok(if reports.iter().all(SuiteReport::passed) { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}
