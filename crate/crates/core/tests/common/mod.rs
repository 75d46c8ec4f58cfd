#![allow(dead_code)]

use std::collections::BTreeSet;

use holey_aztec::arith::Partition;
use holey_aztec::aztec::HoleyAztecGraph;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Neighbours of `(r, k)` in the `m x n` rectangle, from the chessboard
/// picture: vertex `(r, k)` sits at column `2k` (odd r) or `2k - 1` (even r)
/// and touches the squares diagonally above and below it.
fn board_neighbours(m: usize, n: usize, (r, k): (usize, usize)) -> Vec<(usize, usize)> {
    let col = |r: usize, k: usize| if r % 2 == 1 { 2 * k } else { 2 * k - 1 };
    let len = |r: usize| if r % 2 == 1 { n } else { n + 1 };
    let c = col(r, k) as i64;
    let mut out = Vec::new();
    for r2 in [r.wrapping_sub(1), r + 1] {
        if r2 == 0 || r2 > 2 * m + 1 {
            continue;
        }
        for k2 in 1..=len(r2) {
            if (col(r2, k2) as i64 - c).abs() == 1 {
                out.push((r2, k2));
            }
        }
    }
    out
}

/// Plain exhaustive matching count: match the first free vertex with each
/// free neighbour in turn. No memoisation; keep instances small.
pub fn brute_matchings(g: &HoleyAztecGraph) -> u128 {
    let base = g.base();
    let (m, n) = (base.rows_param, base.cols_param);
    let mut free: BTreeSet<(usize, usize)> = BTreeSet::new();
    for r in 1..=2 * m + 1 {
        let len = if r % 2 == 1 { n } else { n + 1 };
        for k in 1..=len {
            if !g.is_removed((r, k)) {
                free.insert((r, k));
            }
        }
    }
    fn go(m: usize, n: usize, free: &mut BTreeSet<(usize, usize)>) -> u128 {
        let Some(&v) = free.iter().next() else { return 1 };
        free.remove(&v);
        let mut total = 0;
        for w in board_neighbours(m, n, v) {
            if free.remove(&w) {
                total += go(m, n, free);
                free.insert(w);
            }
        }
        free.insert(v);
        total
    }
    if free.len() % 2 == 1 {
        return 0;
    }
    go(m, n, &mut free)
}

/// `s_lambda(1^n)` by the hook-content formula.
pub fn hook_content(lambda: &Partition, n: usize) -> BigInt {
    let parts = lambda.parts();
    let conj = |j: usize| parts.iter().filter(|&&p| p > j).count();
    let mut value = BigRational::from_integer(BigInt::from(1));
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p {
            let content = n as i64 + j as i64 - i as i64;
            let hook = (p - j - 1) + (conj(j) - i - 1) + 1;
            value = value * BigRational::new(BigInt::from(content), BigInt::from(hook as i64));
        }
    }
    assert!(value.is_integer());
    value.to_integer()
}

pub fn set(v: &[usize]) -> holey_aztec::arith::IndexSet {
    holey_aztec::arith::IndexSet::new(v.to_vec()).unwrap()
}

pub fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}
