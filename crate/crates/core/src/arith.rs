//! Exact arithmetic primitives and the index types shared by the other modules.
//!
//! Integers are [`BigInt`], rationals are [`BigRational`] (always reduced,
//! positive denominator). Nothing in the crate touches floating point.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A strictly increasing set of positive integers `a_1 < ... < a_m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.iter().any(|&a| a == 0) {
            return invalid(format!("index set {elements:?} contains 0"));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return invalid(format!("index set {elements:?} is not strictly increasing"));
        }
        Ok(IndexSet(elements))
    }

    /// Sorts and deduplicates before validating.
    pub fn from_unsorted(mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        Self::new(elements)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        IndexSet((1..=n).collect())
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0.binary_search(&a).is_ok()
    }

    /// 1-based access, `t(i) = t_i`.
    pub fn t(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Elements in odd positions `t_1, t_3, ...`.
    pub fn odd_indexed(&self) -> IndexSet {
        IndexSet(self.0.iter().step_by(2).copied().collect())
    }

    /// Elements in even positions `t_2, t_4, ...`.
    pub fn even_indexed(&self) -> IndexSet {
        IndexSet(self.0.iter().skip(1).step_by(2).copied().collect())
    }

    pub fn union(&self, other: &IndexSet) -> Result<IndexSet> {
        let mut v: Vec<usize> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return invalid("union of overlapping index sets");
        }
        Ok(IndexSet(v))
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0.iter().copied().filter(|a| !other.contains(*a)).collect())
    }

    /// Mirror image `a -> len + 1 - a` inside `{1, ..., len}`.
    pub fn mirror(&self, len: usize) -> IndexSet {
        let mut v: Vec<usize> = self.0.iter().map(|&a| len + 1 - a).collect();
        v.reverse();
        IndexSet(v)
    }

    /// All `k`-element subsets of `{1, ..., n}` in lexicographic order.
    pub fn subsets(n: usize, k: usize) -> Vec<IndexSet> {
        combinations(n, k)
            .into_iter()
            .map(|c| IndexSet(c.into_iter().map(|i| i + 1).collect()))
            .collect()
    }
}

impl TryFrom<Vec<usize>> for IndexSet {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        IndexSet::new(v)
    }
}

impl From<IndexSet> for Vec<usize> {
    fn from(s: IndexSet) -> Self {
        s.0
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// Weakly decreasing nonnegative parts with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("{parts:?} is not weakly decreasing"));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(width^rows)`.
    pub fn rectangle(width: usize, rows: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition(vec![width; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner.length() <= self.length() && (1..=inner.length()).all(|i| inner.part(i) <= self.part(i))
    }

    /// Every partition fitting inside `self`, in lexicographic order of parts.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
                return;
            }
            for p in 0..=cap.min(outer[i]) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `lambda(A) = (a_m - m + 1, ..., a_2 - 1, a_1)`.
///
/// Part `j` is `a_{m+1-j} - (m+1-j) + 1`, so `{1, 2, 3}` gives `(1,1,1)`
/// and only the empty set gives the empty partition.
pub fn partition_from_index_set(a: &IndexSet) -> Partition {
    let m = a.len();
    let parts = (1..=m).map(|j| a.t(m + 1 - j) + 1 - (m + 1 - j)).collect();
    Partition::new(parts).expect("strictly increasing sets give weakly decreasing parts")
}

/// All `k`-subsets of `0..n` as increasing index vectors, lexicographic.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..n {
            if n - i < need {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `prod_{i=lo}^{hi} (i-1)!`, empty (hence 1) when `lo > hi`.
pub fn factorial_product(lo: i64, hi: i64) -> BigInt {
    let mut p = BigInt::one();
    for i in lo.max(1)..=hi {
        p *= factorial((i - 1) as u64);
    }
    p
}

/// `C(n, k)` for nonnegative `n`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The polynomial `C(x, 2) = x(x-1)/2`, valid for every integer `x`.
pub fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// The polynomial `C(x, 3) = x(x-1)(x-2)/6`.
pub fn binom3(x: i64) -> i64 {
    x * (x - 1) * (x - 2) / 6
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `base^e` for any integer `e`; negative powers of zero are rejected.
pub fn pow_rational(base: &BigRational, e: i64) -> Result<BigRational> {
    if e < 0 && base.is_zero() {
        return Err(Error::DivisionByZero("negative power of zero".into()));
    }
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= base;
    }
    Ok(if e < 0 { acc.recip() } else { acc })
}

pub fn pow2(e: i64) -> BigRational {
    pow_rational(&rational(2), e).expect("2 is nonzero")
}

/// Rising factorial `(a)_k = a(a+1)...(a+k-1)`, `(a)_0 = 1`.
pub fn shifted_factorial(a: &BigRational, k: usize) -> BigRational {
    let mut p = BigRational::one();
    let mut x = a.clone();
    for _ in 0..k {
        p *= &x;
        x += BigRational::one();
    }
    p
}

/// `(a;q)_k = (1-a)(1-aq)...(1-aq^{k-1})`, `(a;q)_0 = 1`.
pub fn q_shifted_factorial(a: &BigRational, q: &BigRational, k: usize) -> BigRational {
    let mut p = BigRational::one();
    let mut x = a.clone();
    for _ in 0..k {
        p *= BigRational::one() - &x;
        x *= q;
    }
    p
}

/// `prod_{i<j} (v_j - v_i)`.
pub fn vandermonde_product(v: &[i64]) -> BigInt {
    let mut p = BigInt::one();
    for j in 0..v.len() {
        for i in 0..j {
            p *= v[j] - v[i];
        }
    }
    p
}

/// Exact quotient, or an integrality error if `den` does not divide `num`.
pub fn exact_div(num: &BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::DivisionByZero(what.to_string()));
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Integrality(format!("{what}: {num}/{den} is not an integer")));
    }
    Ok(q)
}

/// Converts an integral rational to an integer, failing otherwise.
pub fn to_integer(r: &BigRational, what: &str) -> Result<BigInt> {
    if !r.is_integer() {
        return Err(Error::Integrality(format!("{what} evaluated to {r}")));
    }
    Ok(r.to_integer())
}

/// `s_{lambda(A)}(1^m) = prod_{i<j}(a_j - a_i) / prod_{i=1}^m (i-1)!`.
pub fn vandermonde_specialization(a: &IndexSet) -> Result<BigInt> {
    let v: Vec<i64> = a.as_slice().iter().map(|&x| x as i64).collect();
    exact_div(
        &vandermonde_product(&v),
        &factorial_product(1, a.len() as i64),
        "Vandermonde specialization",
    )
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        BigInt::from_str(t.trim()).map_err(|_| Error::InvalidInput(format!("not a rational number: {s}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero(format!("rational literal {s}")));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Decimal text of an integral rational, `p/q` otherwise.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn is_positive(r: &BigRational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lambda_follows_definition() {
        assert_eq!(partition_from_index_set(&set(&[1, 3])).parts(), &[2, 1]);
        assert_eq!(partition_from_index_set(&set(&[2])).parts(), &[2]);
        assert_eq!(partition_from_index_set(&set(&[1, 2, 3])).parts(), &[1, 1, 1]);
        assert_eq!(partition_from_index_set(&IndexSet::empty()), Partition::empty());
    }

    #[test]
    fn shifted_factorials() {
        assert_eq!(shifted_factorial(&ratio(7, 3), 0), rational(1));
        assert_eq!(shifted_factorial(&ratio(1, 2), 2), ratio(3, 4));
        assert_eq!(shifted_factorial(&rational(3), 3), rational(60));
        assert_eq!(q_shifted_factorial(&rational(5), &rational(2), 0), rational(1));
        assert_eq!(q_shifted_factorial(&rational(2), &rational(2), 2), rational(3));
        assert_eq!(q_shifted_factorial(&rational(3), &rational(3), 1), rational(-2));
    }

    #[test]
    fn vandermonde_values() {
        assert_eq!(vandermonde_specialization(&set(&[1, 2, 3, 4])).unwrap(), BigInt::from(1));
        assert_eq!(vandermonde_specialization(&set(&[1, 3])).unwrap(), BigInt::from(2));
        assert_eq!(vandermonde_specialization(&set(&[1, 3, 5])).unwrap(), BigInt::from(8));
    }

    #[test]
    fn index_set_validation() {
        assert!(IndexSet::new(vec![2, 1]).is_err());
        assert!(IndexSet::new(vec![0, 1]).is_err());
        assert!(IndexSet::new(vec![1, 1]).is_err());
        let t = set(&[1, 2, 4, 5, 7]);
        assert_eq!(t.odd_indexed().as_slice(), &[1, 4, 7]);
        assert_eq!(t.even_indexed().as_slice(), &[2, 5]);
        assert_eq!(t.mirror(7).as_slice(), &[1, 3, 4, 6, 7]);
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(binom2(-1), 1);
        assert_eq!(binom2(0), 0);
        assert_eq!(binom2(5), 10);
        assert_eq!(binom3(2), 0);
        assert_eq!(binom3(5), 10);
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(2, 3), BigInt::zero());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rational(-4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let big = num_traits::pow(BigInt::from(2), 200);
        let r = parse_rational(&big.to_string()).unwrap();
        assert_eq!(rational_to_string(&r), big.to_string());
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow2(-3), ratio(1, 8));
        assert!(pow_rational(&rational(0), -1).is_err());
    }
}
