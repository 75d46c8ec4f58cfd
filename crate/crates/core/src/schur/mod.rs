//! Schur and skew Schur polynomials by tableau enumeration, with the
//! Jacobi-Trudi determinant as an independent second evaluation.

mod poly;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binom3, pow_rational, q_shifted_factorial, Partition};
use crate::error::{invalid, Error, Result};

pub use poly::Polynomial;

/// The skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return invalid(format!("{inner} does not fit inside {outer}"));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape { outer: shape, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }
}

/// Generating function of semistandard fillings of `shape` with entries in
/// `1..=n`: rows weakly increase, columns strictly increase.
pub fn skew_schur_polynomial(shape: &SkewShape, n: usize) -> Polynomial {
    let rows = shape.outer.length();
    let start: Vec<usize> = (1..=rows).map(|r| shape.inner.part(r)).collect();
    let end: Vec<usize> = shape.outer.parts().to_vec();
    let cells: Vec<(usize, usize)> = (0..rows).flat_map(|r| (start[r]..end[r]).map(move |c| (r, c))).collect();

    // `filled[r][c]` holds the entry of cell (r, c); inner cells stay 0.
    let mut filled: Vec<Vec<u32>> = end.iter().map(|&w| vec![0; w]).collect();
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut content = vec![0u32; n];

    fn fill(
        i: usize,
        cells: &[(usize, usize)],
        start: &[usize],
        n: usize,
        filled: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        counts: &mut HashMap<Vec<u32>, u64>,
    ) {
        if i == cells.len() {
            *counts.entry(content.clone()).or_default() += 1;
            return;
        }
        let (r, c) = cells[i];
        let mut lo = 1;
        if c > start[r] {
            lo = lo.max(filled[r][c - 1]);
        }
        if r > 0 && c >= start[r - 1] {
            lo = lo.max(filled[r - 1][c] + 1);
        }
        for v in lo..=n as u32 {
            filled[r][c] = v;
            content[v as usize - 1] += 1;
            fill(i + 1, cells, start, n, filled, content, counts);
            content[v as usize - 1] -= 1;
        }
        filled[r][c] = 0;
    }

    fill(0, &cells, &start, n, &mut filled, &mut content, &mut counts);
    let mut p = Polynomial::zero(n);
    for (e, k) in counts {
        p.add_term(e, BigInt::from(k));
    }
    p
}

/// `s_lambda(x_1, ..., x_n)`; the zero polynomial when `lambda` has more
/// than `n` parts (see [`schur_vanishes`]).
pub fn schur_polynomial(lambda: &Partition, n: usize) -> Polynomial {
    skew_schur_polynomial(&SkewShape::straight(lambda.clone()), n)
}

/// True when `s_lambda` in `n` variables is identically zero.
pub fn schur_vanishes(lambda: &Partition, n: usize) -> bool {
    lambda.length() > n
}

/// `mu' = (M - mu_s, ..., M - mu_1)`, the complement of `mu` in `(M^s)`.
pub fn rectangle_complement(mu: &Partition, width: usize, rows: usize) -> Result<Partition> {
    if mu.length() > rows || mu.part(1) > width {
        return invalid(format!("{mu} does not fit in a {rows}x{width} rectangle"));
    }
    Partition::new((1..=rows).rev().map(|i| width - mu.part(i)).collect())
}

/// Complete homogeneous symmetric polynomial `h_k(x_1, ..., x_n)`.
pub fn complete_homogeneous(k: i64, n: usize) -> Polynomial {
    if k < 0 {
        return Polynomial::zero(n);
    }
    let mut p = Polynomial::zero(n);
    let mut e = vec![0u32; n];
    fn go(i: usize, left: u32, e: &mut Vec<u32>, p: &mut Polynomial) {
        if i + 1 == e.len() {
            e[i] = left;
            p.add_term(e.clone(), BigInt::one());
            e[i] = 0;
            return;
        }
        for x in 0..=left {
            e[i] = x;
            go(i + 1, left - x, e, p);
        }
        e[i] = 0;
    }
    if n == 0 {
        return if k == 0 { Polynomial::one(0) } else { p };
    }
    go(0, k as u32, &mut e, &mut p);
    p
}

/// `det(h_{lambda_i - i + j})`, expanded over permutations.
pub fn jacobi_trudi(lambda: &Partition, n: usize) -> Polynomial {
    let l = lambda.length();
    if l == 0 {
        return Polynomial::one(n);
    }
    let entry = |i: usize, j: usize| complete_homogeneous(lambda.part(i + 1) as i64 - i as i64 + j as i64, n);
    let matrix: Vec<Vec<Polynomial>> = (0..l).map(|i| (0..l).map(|j| entry(i, j)).collect()).collect();

    fn expand(row: usize, used: &mut Vec<bool>, m: &[Vec<Polynomial>], n: usize) -> Polynomial {
        if row == m.len() {
            return Polynomial::one(n);
        }
        let mut acc = Polynomial::zero(n);
        let mut sign = 1i64;
        for j in 0..m.len() {
            if used[j] {
                continue;
            }
            if !m[row][j].is_zero() {
                used[j] = true;
                let minor = expand(row + 1, used, m, n);
                used[j] = false;
                acc = &acc + &(&m[row][j] * &minor).scale(&BigInt::from(sign));
            }
            sign = -sign;
        }
        acc
    }
    expand(0, &mut vec![false; l], &matrix, n)
}

/// Tableau evaluation and determinant evaluation agree.
pub fn jacobi_trudi_check(lambda: &Partition, n: usize) -> bool {
    jacobi_trudi(lambda, n) == schur_polynomial(lambda, n)
}

/// Checks `s_lambda(x, y) = sum_{mu in lambda} s_{lambda/mu}(x) s_mu(y)` with
/// `alpha` variables `x` followed by `beta` variables `y`.
pub fn verify_branching(lambda: &Partition, alpha: usize, beta: usize) -> bool {
    let total = alpha + beta;
    let lhs = schur_polynomial(lambda, total);
    let mut rhs = Polynomial::zero(total);
    for mu in lambda.subpartitions() {
        let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("sub-partition");
        let x = skew_schur_polynomial(&shape, alpha).embed(total, 0);
        let y = schur_polynomial(&mu, beta).embed(total, alpha);
        rhs = &rhs + &(&x * &y);
    }
    lhs == rhs
}

/// Closed form of `s_mu(q^{K+1}, ..., q^{K+L})` for `mu` with at most `s` parts:
///
/// `q^{2 C(s+1,3) + (K+1)|mu|} prod_{i<j}(q^{mu_j-j} - q^{mu_i-i})
///  prod_i (q^{L+1-i};q)_{mu_i} / prod_i (q;q)_{mu_i-i+s}`.
pub fn schur_principal_q(mu: &Partition, k: i64, l: usize, q: &BigRational, s: usize) -> Result<BigRational> {
    if mu.length() > s {
        return invalid(format!("{mu} has more than {s} parts"));
    }
    if q.is_zero() {
        return Err(Error::DivisionByZero("q = 0".into()));
    }
    let part = |i: usize| mu.part(i) as i64;
    let e = 2 * binom3(s as i64 + 1) + (k + 1) * mu.size() as i64;
    let mut num = pow_rational(q, e)?;
    for j in 1..=s {
        for i in 1..j {
            num *= pow_rational(q, part(j) - j as i64)? - pow_rational(q, part(i) - i as i64)?;
        }
    }
    let mut den = BigRational::one();
    for i in 1..=s {
        num *= q_shifted_factorial(&pow_rational(q, l as i64 + 1 - i as i64)?, q, mu.part(i));
        den *= q_shifted_factorial(q, q, (part(i) - i as i64 + s as i64) as usize);
    }
    if den.is_zero() {
        return Err(Error::DivisionByZero(format!("(q;q) factor vanishes at q = {q}")));
    }
    Ok(num / den)
}

/// `s_mu(q^{K+1}, ..., q^{K+L})` by direct substitution into the tableau sum.
pub fn schur_principal_direct(mu: &Partition, k: i64, l: usize, q: &BigRational) -> BigRational {
    let point: Vec<BigRational> = (1..=l as i64)
        .map(|i| pow_rational(q, k + i).expect("q nonzero"))
        .collect();
    schur_polynomial(mu, l).evaluate(&point)
}
