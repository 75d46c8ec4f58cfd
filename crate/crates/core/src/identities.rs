//! Exact checks of the Schur-function split identities and of the discrete
//! Selberg-type summations together with their q-analogues.
//!
//! For an index set `T` and a split `T = A ∪ B` the split sums are
//! `sum s_{lambda(A)}(X_n) s_{lambda(B)}(X_{n+d})` over all `A` of size `m`,
//! with `|T| = 2m + d`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{
    binom2, binom3, combinations, factorial, partition_from_index_set, pow_rational, q_shifted_factorial,
    shifted_factorial, IndexSet,
};
use crate::error::{invalid, Error, Result};
use crate::schur::{schur_polynomial, Polynomial};

fn s(a: &IndexSet, n: usize) -> Polynomial {
    schur_polynomial(&partition_from_index_set(a), n)
}

fn split_m(t: &IndexSet, d: usize) -> Result<usize> {
    if t.len() < d || (t.len() - d) % 2 != 0 {
        return invalid(format!("|T| = {} is not 2m + {d}", t.len()));
    }
    Ok((t.len() - d) / 2)
}

fn pick(t: &IndexSet, positions: &[usize]) -> IndexSet {
    IndexSet::new(positions.iter().map(|&i| t.as_slice()[i]).collect()).expect("subset of an index set")
}

/// `sum_{|A| = m} s_{lambda(A)}(X_n) s_{lambda(T \ A)}(X_{n+d})`, with the
/// `X_n` factor embedded in `n + d` variables.
pub fn lhs_theorem5(t: &IndexSet, n: usize, d: usize) -> Result<Polynomial> {
    let m = split_m(t, d)?;
    let mut acc = Polynomial::zero(n + d);
    for pos in combinations(t.len(), m) {
        let a = pick(t, &pos);
        let b = t.difference(&a);
        acc = &acc + &(&s(&a, n).embed(n + d, 0) * &s(&b, n + d));
    }
    Ok(acc)
}

/// `2^m sum_k s_{lambda(E \ K)}(X_n) s_{lambda(O ∪ K)}(X_{n+d})`, where `E`
/// and `O` are the even- and odd-indexed elements of `T` and `K` runs over
/// the `floor(d/2)`-subsets of `E`.
pub fn rhs_theorem5(t: &IndexSet, n: usize, d: usize) -> Result<Polynomial> {
    let m = split_m(t, d)?;
    let evens = t.even_indexed();
    let odds = t.odd_indexed();
    let mut acc = Polynomial::zero(n + d);
    for pos in combinations(evens.len(), d / 2) {
        let k = pick(&evens, &pos);
        let left = s(&evens.difference(&k), n).embed(n + d, 0);
        let right = s(&odds.union(&k)?, n + d);
        acc = &acc + &(&left * &right);
    }
    Ok(acc.scale(&(BigInt::one() << m)))
}

pub fn lhs_theorem3(t: &IndexSet, n: usize) -> Result<Polynomial> {
    lhs_theorem5(t, n, 0)
}

/// `2^m s_{lambda(t_2, t_4, ...)}(X_n) s_{lambda(t_1, t_3, ...)}(X_n)`.
pub fn rhs_theorem3(t: &IndexSet, n: usize) -> Result<Polynomial> {
    let m = split_m(t, 0)?;
    Ok((&s(&t.even_indexed(), n) * &s(&t.odd_indexed(), n)).scale(&(BigInt::one() << m)))
}

pub fn lhs_theorem4(t: &IndexSet, n: usize) -> Result<Polynomial> {
    lhs_theorem5(t, n, 1)
}

/// `2^m s_{lambda(t_2, ...)}(X_n) s_{lambda(t_1, t_3, ...)}(X_{n+1})`.
pub fn rhs_theorem4(t: &IndexSet, n: usize) -> Result<Polynomial> {
    let m = split_m(t, 1)?;
    let left = s(&t.even_indexed(), n).embed(n + 1, 0);
    Ok((&left * &s(&t.odd_indexed(), n + 1)).scale(&(BigInt::one() << m)))
}

pub fn verify_theorem3(t: &IndexSet, n: usize) -> Result<bool> {
    Ok(lhs_theorem3(t, n)? == rhs_theorem3(t, n)?)
}

pub fn verify_theorem4(t: &IndexSet, n: usize) -> Result<bool> {
    Ok(lhs_theorem4(t, n)? == rhs_theorem4(t, n)?)
}

pub fn verify_theorem5(t: &IndexSet, n: usize, d: usize) -> Result<bool> {
    Ok(lhs_theorem5(t, n, d)? == rhs_theorem5(t, n, d)?)
}

fn fact_q(k: usize) -> BigRational {
    BigRational::from_integer(factorial(k as u64))
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// `sum_{0 <= k_1 < ... < k_s <= m} prod_{i<j} (k_j - k_i)^2
///  prod_i (x)_{k_i} (y)_{m-k_i} / (k_i! (m-k_i)!)`; zero when `s > m + 1`.
pub fn selberg_sum(x: &BigRational, y: &BigRational, m: usize, s: usize) -> BigRational {
    let mut total = BigRational::zero();
    for ks in combinations(m + 1, s) {
        let mut term = BigRational::one();
        for j in 0..s {
            for i in 0..j {
                term *= int(((ks[j] - ks[i]) * (ks[j] - ks[i])) as i64);
            }
        }
        for &k in &ks {
            term *= shifted_factorial(x, k) * shifted_factorial(y, m - k) / (fact_q(k) * fact_q(m - k));
        }
        total += term;
    }
    total
}

/// `prod_{i=1}^s (x)_{i-1} (y)_{i-1} (x+y+i+s-2)_{m-s+1} (i-1)! / (m-i+1)!`;
/// zero when `s > m + 1`.
pub fn selberg_product(x: &BigRational, y: &BigRational, m: usize, s: usize) -> BigRational {
    if s > m + 1 {
        return BigRational::zero();
    }
    let mut p = BigRational::one();
    for i in 1..=s {
        let shift = x + y + int(i as i64 + s as i64 - 2);
        p *= shifted_factorial(x, i - 1)
            * shifted_factorial(y, i - 1)
            * shifted_factorial(&shift, m + 1 - s)
            * fact_q(i - 1)
            / fact_q(m + 1 - i);
    }
    p
}

/// `sum y^{sum k_i} prod_{i<j} (q^{k_j} - q^{k_i})^2
///  prod_i (x;q)_{k_i} (y;q)_{m-k_i} / ((q;q)_{k_i} (q;q)_{m-k_i})`.
pub fn q_selberg_sum(x: &BigRational, y: &BigRational, q: &BigRational, m: usize, s: usize) -> Result<BigRational> {
    if q.is_zero() {
        return Err(Error::DivisionByZero("q = 0".into()));
    }
    let qq: Vec<BigRational> = (0..=m).map(|k| q_shifted_factorial(q, q, k)).collect();
    if qq.iter().any(Zero::is_zero) {
        return Err(Error::DivisionByZero(format!("(q;q)_k vanishes for q = {q}")));
    }
    let mut total = BigRational::zero();
    for ks in combinations(m + 1, s) {
        let mut term = pow_rational(y, ks.iter().sum::<usize>() as i64)?;
        for j in 0..s {
            for i in 0..j {
                let d = pow_rational(q, ks[j] as i64)? - pow_rational(q, ks[i] as i64)?;
                term *= &d * &d;
            }
        }
        for &k in &ks {
            term *= q_shifted_factorial(x, q, k) * q_shifted_factorial(y, q, m - k) / (&qq[k] * &qq[m - k]);
        }
        total += term;
    }
    Ok(total)
}

/// `q^{2 C(s,3)} y^{C(s,2)} prod_{i=1}^s (x;q)_{i-1} (y;q)_{i-1}
///  (x y q^{i+s-2};q)_{m-s+1} (q;q)_{i-1} / (q;q)_{m-i+1}`.
pub fn q_selberg_product(x: &BigRational, y: &BigRational, q: &BigRational, m: usize, s: usize) -> Result<BigRational> {
    if s > m + 1 {
        return Ok(BigRational::zero());
    }
    if q.is_zero() {
        return Err(Error::DivisionByZero("q = 0".into()));
    }
    let si = s as i64;
    let mut p = pow_rational(q, 2 * binom3(si))? * pow_rational(y, binom2(si))?;
    for i in 1..=s {
        let den = q_shifted_factorial(q, q, m + 1 - i);
        if den.is_zero() {
            return Err(Error::DivisionByZero(format!("(q;q)_{} vanishes for q = {q}", m + 1 - i)));
        }
        let shift = x * y * pow_rational(q, i as i64 + si - 2)?;
        p *= q_shifted_factorial(x, q, i - 1)
            * q_shifted_factorial(y, q, i - 1)
            * q_shifted_factorial(&shift, q, m + 1 - s)
            * q_shifted_factorial(q, q, i - 1)
            / den;
    }
    Ok(p)
}
