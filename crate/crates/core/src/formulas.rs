//! Closed forms and multi-sums for holey Aztec rectangles.
//!
//! Shapes, with `t_1 < t_2 < ...` the kept positions on the holey row:
//!
//! | id      | rectangle            | holey row             | kept |
//! |---------|----------------------|-----------------------|------|
//! | top-row | `m x n`              | 1                     | `m` of `n` |
//! | second-row | `m x n`           | 1 removed, row 2 loses `a` | `n+1-m` of `n+1` |
//! | thm7    | `2m x N`             | central               | `2m` |
//! | thm8    | `(2m-1) x N`         | central               | `2N-2m+2` |
//! | thm9    | `(2m+1) x N`         | 1 below central       | `2m+1` |
//! | thm10   | `2m x N`             | 1 below central       | `2N-2m+1` |
//! | thm11   | `(2m+d) x N`         | `d` below central     | `2m+d` |
//! | thm12   | `(2m+d-1) x N`       | `d` below central     | `2N-2m-d+2` |
//!
//! `thm13`/`thm14` specialise `thm11`/`thm12` to arithmetic progressions
//! `t_i = C + D(i-1)`, and `thm15`/`thm16` to shifted geometric progressions
//! `t_i = C + D q^{i-1}`.
//!
//! Every value is computed over the rationals and must come out integral.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{
    binom2, combinations, exact_div, factorial, factorial_product, is_positive, pow2, pow_rational,
    q_shifted_factorial, rational, rational_to_string, to_integer, vandermonde_product, IndexSet,
};
use crate::aztec::{build_holey_graph, HoleyAztecGraph};
use crate::error::{invalid, Error, Result};

/// How stated hypotheses are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Hypotheses {
    /// Reject inputs that violate a hypothesis.
    #[default]
    Strict,
    /// Evaluate anyway (only structural requirements are enforced) and report
    /// the violated clauses.
    Override,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Theorem {
    TopRow,
    SecondRow,
    Thm7,
    Thm8,
    Thm9,
    Thm10,
    Thm11,
    Thm12,
    Thm13,
    Thm14,
    Thm15,
    Thm16,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::TopRow,
        Theorem::SecondRow,
        Theorem::Thm7,
        Theorem::Thm8,
        Theorem::Thm9,
        Theorem::Thm10,
        Theorem::Thm11,
        Theorem::Thm12,
        Theorem::Thm13,
        Theorem::Thm14,
        Theorem::Thm15,
        Theorem::Thm16,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::TopRow => "top-row",
            Theorem::SecondRow => "second-row",
            Theorem::Thm7 => "thm7",
            Theorem::Thm8 => "thm8",
            Theorem::Thm9 => "thm9",
            Theorem::Thm10 => "thm10",
            Theorem::Thm11 => "thm11",
            Theorem::Thm12 => "thm12",
            Theorem::Thm13 => "thm13",
            Theorem::Thm14 => "thm14",
            Theorem::Thm15 => "thm15",
            Theorem::Thm16 => "thm16",
        }
    }

    /// The family whose holes sit on an odd row (`M <= N`) or even row (`M >= N`).
    fn wide(self) -> bool {
        matches!(self, Theorem::Thm7 | Theorem::Thm9 | Theorem::Thm11 | Theorem::Thm13 | Theorem::Thm15)
    }

    fn gap(self, input: &FormulaInput) -> usize {
        match self {
            Theorem::Thm7 | Theorem::Thm8 => 0,
            Theorem::Thm9 | Theorem::Thm10 => 1,
            _ => input.d,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown formula id {s}")))
    }
}

/// Parameters for any formula; unused fields are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FormulaInput {
    pub m: usize,
    /// `N` (or `n` for the top-row shapes).
    pub n: usize,
    pub d: usize,
    /// Kept positions (removed positions for `second-row`).
    pub t: Option<IndexSet>,
    pub c: Option<BigRational>,
    pub step: Option<BigRational>,
    pub q: Option<BigRational>,
}

impl FormulaInput {
    pub fn with_set(m: usize, n: usize, d: usize, t: IndexSet) -> Self {
        FormulaInput { m, n, d, t: Some(t), ..Default::default() }
    }

    pub fn arithmetic(m: usize, n: usize, d: usize, c: i64, step: i64) -> Self {
        FormulaInput { m, n, d, c: Some(rational(c)), step: Some(rational(step)), ..Default::default() }
    }

    pub fn geometric(m: usize, n: usize, d: usize, c: BigRational, step: BigRational, q: BigRational) -> Self {
        FormulaInput { m, n, d, c: Some(c), step: Some(step), q: Some(q), ..Default::default() }
    }

    /// Parameters as JSON, for reports.
    pub fn to_json(&self, theorem: Theorem) -> serde_json::Value {
        let mut o = serde_json::Map::new();
        o.insert("theorem".into(), theorem.id().into());
        o.insert("m".into(), self.m.into());
        o.insert(if matches!(theorem, Theorem::TopRow | Theorem::SecondRow) { "n" } else { "N" }.into(), self.n.into());
        if !matches!(theorem, Theorem::TopRow | Theorem::SecondRow | Theorem::Thm7 | Theorem::Thm8 | Theorem::Thm9 | Theorem::Thm10) {
            o.insert("d".into(), self.d.into());
        }
        if let Some(t) = &self.t {
            o.insert("T".into(), serde_json::to_value(t.as_slice()).unwrap());
        }
        for (k, v) in [("C", &self.c), ("D", &self.step), ("q", &self.q)] {
            if let Some(v) = v {
                o.insert(k.into(), rational_to_string(v).into());
            }
        }
        serde_json::Value::Object(o)
    }
}

/// A formula value together with the hypothesis clauses it violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: BigRational,
    pub violations: Vec<String>,
}

impl Evaluation {
    pub fn integer(&self) -> Result<BigInt> {
        to_integer(&self.value, "formula")
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidInput(msg()))
    }
}

fn check(violations: &mut Vec<String>, cond: bool, clause: &str) {
    if !cond {
        violations.push(clause.to_string());
    }
}

fn vander(values: &[i64]) -> BigRational {
    BigRational::from_integer(vandermonde_product(values))
}

fn big(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

fn sf(lo: i64, hi: i64) -> BigRational {
    big(factorial_product(lo, hi))
}

/// `prod_i (t_i - 1)! (N + 1 - t_i)!`.
fn boundary_factorials(t: &[i64], n: i64) -> BigRational {
    t.iter()
        .fold(BigInt::one(), |acc, &x| acc * factorial((x - 1) as u64) * factorial((n + 1 - x) as u64))
        .into()
}

/// Elements `t_2, t_4, ..., t_{2e}` and `t_1, t_3, ..., t_{2o-1}`.
fn parity_parts(t: &[i64], e: i64, o: i64) -> (Vec<i64>, Vec<i64>) {
    let ev = (1..=e.max(0)).map(|j| t[2 * j as usize - 1]).collect();
    let od = (1..=o.max(0)).map(|j| t[2 * j as usize - 2]).collect();
    (ev, od)
}

/// The `floor(d/2)`-fold sum over positions `k_1 < ... < k_f` of the even
/// elements:
/// `prod_{i<j} (t_{2k_j} - t_{2k_i})^2 prod_i prod_j |t_{2k_i} - t_{2j-1}|
///  / prod_{j != k_i} |t_{2k_i} - t_{2j}|`.
fn selection_sum(ev: &[i64], od: &[i64], f: usize) -> BigRational {
    let mut total = BigRational::zero();
    for ks in combinations(ev.len(), f) {
        let mut term = BigRational::one();
        for j in 0..ks.len() {
            for i in 0..j {
                let diff = ev[ks[j]] - ev[ks[i]];
                term *= rational(diff * diff);
            }
        }
        for &k in &ks {
            let x = ev[k];
            let num: BigInt = od.iter().map(|&o| BigInt::from((x - o).abs())).product();
            let den: BigInt =
                ev.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &e)| BigInt::from((x - e).abs())).product();
            term *= BigRational::new(num, den);
        }
        total += term;
    }
    total
}

fn kept_values(input: &FormulaInput, theorem: Theorem) -> Result<Vec<i64>> {
    match theorem {
        Theorem::Thm13 | Theorem::Thm14 => arithmetic_positions(input, theorem),
        Theorem::Thm15 | Theorem::Thm16 => geometric_positions(input, theorem),
        _ => input
            .t
            .as_ref()
            .map(|t| t.as_slice().iter().map(|&x| x as i64).collect())
            .ok_or_else(|| Error::InvalidInput(format!("{theorem} needs a position set T"))),
    }
}

/// Number of kept positions the shape demands (possibly negative).
fn kept_len(theorem: Theorem, input: &FormulaInput) -> i64 {
    let (m, n, d) = (input.m as i64, input.n as i64, theorem.gap(input) as i64);
    match theorem {
        Theorem::TopRow | Theorem::SecondRow => m,
        _ if theorem.wide() => 2 * m + d,
        _ => 2 * n - 2 * m - d + 2,
    }
}

fn integer_param(v: &Option<BigRational>, name: &str) -> Result<i64> {
    let v = v.as_ref().ok_or_else(|| Error::InvalidInput(format!("missing parameter {name}")))?;
    if !v.is_integer() {
        return invalid(format!("{name} = {v} must be an integer"));
    }
    v.to_integer().to_i64().ok_or_else(|| Error::InvalidInput(format!("{name} out of range")))
}

/// `C, C + D, ..., C + (k-1)D` for the arithmetic-progression shapes.
pub fn arithmetic_positions(input: &FormulaInput, theorem: Theorem) -> Result<Vec<i64>> {
    let c = integer_param(&input.c, "C")?;
    let step = integer_param(&input.step, "D")?;
    let k = kept_len(theorem, input);
    require(k >= 0, || format!("{theorem} with these parameters keeps {k} vertices"))?;
    Ok((0..k).map(|i| c + step * i).collect())
}

/// `C + D, C + Dq, ..., C + Dq^{k-1}`; every position must be an integer.
pub fn geometric_positions(input: &FormulaInput, theorem: Theorem) -> Result<Vec<i64>> {
    let get = |v: &Option<BigRational>, name: &str| {
        v.clone().ok_or_else(|| Error::InvalidInput(format!("missing parameter {name}")))
    };
    let (c, step, q) = (get(&input.c, "C")?, get(&input.step, "D")?, get(&input.q, "q")?);
    let k = kept_len(theorem, input);
    require(k >= 0, || format!("{theorem} with these parameters keeps {k} vertices"))?;
    let mut out = Vec::new();
    for i in 0..k {
        let p = &c + &step * pow_rational(&q, i)?;
        if !p.is_integer() {
            return invalid(format!("position C + D q^{i} = {p} is not an integer"));
        }
        out.push(p.to_integer().to_i64().ok_or_else(|| Error::InvalidInput("position out of range".into()))?);
    }
    Ok(out)
}

/// Geometry of the graph a formula counts: `(M, N, removed vertices)`.
pub fn configuration(theorem: Theorem, input: &FormulaInput) -> Result<HoleyAztecGraph> {
    let (m, n) = (input.m, input.n);
    let t = kept_values(input, theorem)?;
    let set = IndexSet::new(t.iter().map(|&x| x.max(0) as usize).collect())?;
    match theorem {
        Theorem::TopRow => build_holey_graph(m, n, 1, &set),
        Theorem::SecondRow => {
            let removed = (1..=n).map(|k| (1, k)).chain(set.as_slice().iter().map(|&k| (2, k)));
            HoleyAztecGraph::with_removed(m, n, removed)
        }
        _ => {
            let d = theorem.gap(input);
            let rows = if theorem.wide() { 2 * m + d } else { (2 * m + d).checked_sub(1).unwrap_or(0) };
            build_holey_graph(rows, n, rows + 1 + d, &set)
        }
    }
}

fn validate_positions(t: &[i64], theorem: Theorem, input: &FormulaInput) -> Result<()> {
    let len = kept_len(theorem, input);
    require(t.len() as i64 == len, || format!("{theorem} needs {len} positions, got {}", t.len()))?;
    require(t.windows(2).all(|w| w[0] < w[1]), || format!("positions {t:?} must increase strictly"))?;
    let top = match theorem {
        Theorem::TopRow => input.n,
        Theorem::SecondRow => input.n + 1,
        _ if theorem.wide() => input.n,
        _ => input.n + 1,
    } as i64;
    require(t.iter().all(|&x| 1 <= x && x <= top), || format!("positions {t:?} must lie in 1..={top}"))
}

/// Evaluates a formula, enforcing its hypotheses according to `mode`.
pub fn evaluate(theorem: Theorem, input: &FormulaInput, mode: Hypotheses) -> Result<Evaluation> {
    let (m, n, d) = (input.m as i64, input.n as i64, theorem.gap(input) as i64);
    let t = kept_values(input, theorem)?;
    validate_positions(&t, theorem, input)?;
    let mut v = Vec::new();
    let value = match theorem {
        Theorem::TopRow => {
            check(&mut v, m <= n, "m <= n");
            pow2(binom2(m + 1)) * vander(&t) / sf(1, m)
        }
        Theorem::SecondRow => {
            check(&mut v, m <= n + 1, "m <= n + 1");
            pow2(binom2(m)) * vander(&t) / sf(1, m)
        }
        Theorem::Thm7 | Theorem::Thm9 | Theorem::Thm11 => {
            check(&mut v, 2 * m + d <= n, "2m + d <= N");
            wide_value(&t, m, d)
        }
        Theorem::Thm8 | Theorem::Thm10 | Theorem::Thm12 => {
            check(&mut v, m >= 1, "m >= 1");
            check(&mut v, 2 * m + d - 1 >= n, "2m + d - 1 >= N");
            narrow_value(&t, m, n, d)
        }
        Theorem::Thm13 => {
            let step = integer_param(&input.step, "D")?;
            check(&mut v, m >= 1, "m >= 1");
            check(&mut v, 2 * m + d <= n, "2m + d <= N");
            check(&mut v, t.last().is_none_or(|&x| x <= n), "C + (2m+d-1)D <= N");
            pow2(binom2(2 * m + d + 1)) * pow_rational(&rational(step), m * m + (d - 1) * m + binom2(d))?
        }
        Theorem::Thm14 => {
            let step = rational(integer_param(&input.step, "D")?);
            check(&mut v, m >= 1, "m >= 1");
            check(&mut v, 2 * m + d - 1 >= n, "2m + d - 1 >= N");
            check(&mut v, n - m - d + 1 >= 0, "N - m - d + 1 >= 0");
            let excess = n - 2 * m - d + 1;
            pow2(binom2(2 * m + d) + (n + 1) * excess)
                * pow_rational(&step, m * m + (d - 1) * m + binom2(d) + n * excess)?
                * sf(m + 1, n + 1)
                * sf(m + d + 1, n + 1)
                * sf(1, n - m + 1)
                * sf(1, n - m - d + 1)
                / boundary_factorials(&t, n)
        }
        Theorem::Thm15 | Theorem::Thm16 => geometric_value(theorem, input, &t, &mut v)?,
    };
    if mode == Hypotheses::Strict && !v.is_empty() {
        return Err(Error::Hypothesis(format!("{theorem}: {}", v.join(", "))));
    }
    Ok(Evaluation { value, violations: v })
}

/// `(2m+d) x N`, holes `d` rows below the centre.
fn wide_value(t: &[i64], m: i64, d: i64) -> BigRational {
    let (f, c) = (d / 2, (d + 1) / 2);
    let (ev, od) = parity_parts(t, m + f, m + c);
    pow2(m * m + (d + 2) * m + binom2(d + 1)) / (sf(1, m) * sf(1, m + d))
        * vander(&ev)
        * vander(&od)
        * selection_sum(&ev, &od, f as usize)
}

/// `(2m+d-1) x N`, holes `d` rows below the centre.
fn narrow_value(t: &[i64], m: i64, n: i64, d: i64) -> BigRational {
    let (f, c) = (d / 2, (d + 1) / 2);
    let (ev, od) = parity_parts(t, n - m + 1 - c, n - m + 1 - f);
    pow2(m * m + (d - 2) * m + binom2(d - 1) + n) * sf(m + 1, n + 1) * sf(m + d + 1, n + 1)
        / boundary_factorials(t, n)
        * vander(&ev)
        * vander(&od)
        * selection_sum(&ev, &od, f as usize)
}

fn geometric_value(theorem: Theorem, input: &FormulaInput, t: &[i64], v: &mut Vec<String>) -> Result<BigRational> {
    let (m, n, d) = (input.m as i64, input.n as i64, input.d as i64);
    let q = input.q.clone().expect("checked by geometric_positions");
    let step = input.step.clone().expect("checked by geometric_positions");
    check(v, m >= 1, "m >= 1");
    check(v, q > rational(1), "q > 1");
    if !is_positive(&q) {
        return invalid("q must be positive");
    }
    let q2 = &q * &q;
    let abs_qq = |k: i64| q_shifted_factorial(&q2, &q2, k as usize).abs();
    let mut neg_q = BigRational::one();
    for i in 1..=d {
        neg_q *= q_shifted_factorial(&-q.clone(), &q, (i - 1) as usize);
    }
    let d_exp = m * m + (d - 1) * m + binom2(d);
    let value = if theorem == Theorem::Thm15 {
        check(v, 2 * m + d <= n, "2m + d <= N");
        check(v, t.last().is_none_or(|&x| x <= n), "C + D q^{2m+d-1} <= N");
        let q_exp = exact_div(
            &BigInt::from((m + d - 1) * (4 * m * m + (2 * d - 5) * m + d * (d - 2))),
            &BigInt::from(6),
            "q exponent",
        )?;
        let mut num = BigRational::one();
        for i in 1..=m {
            num *= abs_qq(i - 1);
        }
        for i in 1..=m + d {
            num *= abs_qq(i - 1);
        }
        pow2(m * m + (d + 2) * m + binom2(d + 1))
            * pow_rational(&step, d_exp)?
            * pow_rational(&q, q_exp.to_i64().expect("small exponent"))?
            * num
            / (neg_q * sf(1, m) * sf(1, m + d))
    } else {
        check(v, 2 * m + d - 1 >= n, "2m + d - 1 >= N");
        check(v, n - m - d + 1 >= 0, "N - m - d + 1 >= 0");
        let e = n - m - d + 1;
        let q_exp = exact_div(
            &BigInt::from((n - m) * (4 * e * e + (2 * d - 5) * e + d * (d - 2))),
            &BigInt::from(6),
            "q exponent",
        )?;
        let mut num = sf(m + 1, n + 1) * sf(m + d + 1, n + 1);
        for i in 1..=n - m + 1 {
            num *= abs_qq(i - 1);
        }
        for i in 1..=e {
            num *= abs_qq(i - 1);
        }
        pow2(m * m + (d - 2) * m + binom2(d - 1) + n)
            * pow_rational(&step, d_exp + n * (n - 2 * m - d + 1))?
            * pow_rational(&q, q_exp.to_i64().expect("small exponent"))?
            * num
            / (neg_q * boundary_factorials(t, n))
    };
    Ok(value)
}

fn integer_value(theorem: Theorem, input: &FormulaInput, mode: Hypotheses) -> Result<BigInt> {
    let e = evaluate(theorem, input, mode)?;
    let value = e.integer()?;
    if !value.is_positive() && !matches!(theorem, Theorem::Thm12 | Theorem::Thm14 | Theorem::Thm16) {
        return Err(Error::Integrality(format!("{theorem} evaluated to {value}")));
    }
    Ok(value)
}

/// Holes in the top row of an `m x n` rectangle, `a` kept:
/// `2^{C(m+1,2)} prod_{i<j}(a_j - a_i) / prod_{i=1}^m (i-1)!`.
pub fn top_row_count(m: usize, n: usize, a: &IndexSet) -> Result<BigInt> {
    integer_value(Theorem::TopRow, &FormulaInput::with_set(m, n, 0, a.clone()), Hypotheses::Strict)
}

/// Top row removed and the vertices `a` of the second row removed:
/// `2^{C(m,2)} prod_{i<j}(a_j - a_i) / prod_{i=1}^m (i-1)!`.
pub fn half_row_count(m: usize, n: usize, a: &IndexSet) -> Result<BigInt> {
    integer_value(Theorem::SecondRow, &FormulaInput::with_set(m, n, 0, a.clone()), Hypotheses::Strict)
}

pub fn thm7(m: usize, n: usize, t: &IndexSet) -> Result<BigInt> {
    integer_value(Theorem::Thm7, &FormulaInput::with_set(m, n, 0, t.clone()), Hypotheses::Strict)
}

pub fn thm8(m: usize, n: usize, t: &IndexSet) -> Result<BigInt> {
    integer_value(Theorem::Thm8, &FormulaInput::with_set(m, n, 0, t.clone()), Hypotheses::Strict)
}

pub fn thm9(m: usize, n: usize, t: &IndexSet) -> Result<BigInt> {
    integer_value(Theorem::Thm9, &FormulaInput::with_set(m, n, 1, t.clone()), Hypotheses::Strict)
}

pub fn thm10(m: usize, n: usize, t: &IndexSet) -> Result<BigInt> {
    integer_value(Theorem::Thm10, &FormulaInput::with_set(m, n, 1, t.clone()), Hypotheses::Strict)
}

pub fn thm11(m: usize, n: usize, d: usize, t: &IndexSet) -> Result<BigInt> {
    integer_value(Theorem::Thm11, &FormulaInput::with_set(m, n, d, t.clone()), Hypotheses::Strict)
}

/// Zero when `N - m - d + 1 < 0`: the selection sum is then empty, matching
/// the absence of perfect matchings.
pub fn thm12(m: usize, n: usize, d: usize, t: &IndexSet) -> Result<BigInt> {
    integer_value(Theorem::Thm12, &FormulaInput::with_set(m, n, d, t.clone()), Hypotheses::Strict)
}

pub fn thm13(m: usize, n: usize, c: i64, step: i64, d: usize) -> Result<BigInt> {
    integer_value(Theorem::Thm13, &FormulaInput::arithmetic(m, n, d, c, step), Hypotheses::Strict)
}

pub fn thm14(m: usize, n: usize, c: i64, step: i64, d: usize, mode: Hypotheses) -> Result<BigInt> {
    integer_value(Theorem::Thm14, &FormulaInput::arithmetic(m, n, d, c, step), mode)
}

pub fn thm15(m: usize, n: usize, c: &BigRational, step: &BigRational, q: &BigRational, d: usize) -> Result<BigInt> {
    let input = FormulaInput::geometric(m, n, d, c.clone(), step.clone(), q.clone());
    integer_value(Theorem::Thm15, &input, Hypotheses::Strict)
}

pub fn thm16(
    m: usize,
    n: usize,
    c: &BigRational,
    step: &BigRational,
    q: &BigRational,
    d: usize,
    mode: Hypotheses,
) -> Result<BigInt> {
    let input = FormulaInput::geometric(m, n, d, c.clone(), step.clone(), q.clone());
    integer_value(Theorem::Thm16, &input, mode)
}

/// Which formula governs holes on row `M + 1 + d` of an `M x N` rectangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Routed {
    pub theorem: Theorem,
    pub m: usize,
    pub value: BigInt,
}

/// Routes `(M, N, d, T)` to the most specific applicable formula: holes on
/// an odd row need `M <= N`, on an even row `M >= N`, and exactly `|M - N|`
/// vertices must be missing.
pub fn dispatch(rows: usize, n: usize, d: usize, t: &IndexSet) -> Result<Routed> {
    if rows == 0 || n == 0 || d > rows {
        return invalid(format!("need M, N >= 1 and d <= M, got M={rows}, N={n}, d={d}"));
    }
    let holey_row_odd = (rows + d) % 2 == 0;
    let len = if holey_row_odd { n } else { n + 1 };
    let expected = len as i64 - (rows as i64 - n as i64).abs();
    if t.len() as i64 != expected {
        return Err(Error::NoApplicableTheorem(format!(
            "{} kept of {len}; the hole count must be |M - N| = {}",
            t.len(),
            (rows as i64 - n as i64).abs()
        )));
    }
    let (theorem, m) = match (holey_row_odd, rows <= n, rows >= n) {
        (true, true, _) => {
            let m = (rows - d) / 2;
            (
                match d {
                    0 => Theorem::Thm7,
                    1 => Theorem::Thm9,
                    _ => Theorem::Thm11,
                },
                m,
            )
        }
        (false, _, true) => {
            let m = (rows - d + 1) / 2;
            (
                match d {
                    0 => Theorem::Thm8,
                    1 => Theorem::Thm10,
                    _ => Theorem::Thm12,
                },
                m,
            )
        }
        _ => {
            return Err(Error::NoApplicableTheorem(format!(
                "holes on {} row {} need M {} N",
                if holey_row_odd { "odd" } else { "even" },
                rows + 1 + d,
                if holey_row_odd { "<=" } else { ">=" }
            )))
        }
    };
    let value = integer_value(theorem, &FormulaInput::with_set(m, n, d, t.clone()), Hypotheses::Strict)?;
    Ok(Routed { theorem, m, value })
}
