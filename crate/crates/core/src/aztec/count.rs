//! Perfect-matching counters: memoised elimination and a row-profile
//! transfer computation.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{HoleyAztecGraph, Vertex};

type Mask = Vec<u64>;

fn full_mask(n: usize) -> Mask {
    let mut m = vec![u64::MAX; n.div_ceil(64)];
    if n % 64 != 0 {
        *m.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
    }
    m
}

fn has(m: &Mask, i: usize) -> bool {
    m[i / 64] >> (i % 64) & 1 == 1
}

fn without(m: &Mask, a: usize, b: usize) -> Mask {
    let mut out = m.clone();
    out[a / 64] &= !(1u64 << (a % 64));
    out[b / 64] &= !(1u64 << (b % 64));
    out
}

fn members(m: &Mask) -> impl Iterator<Item = usize> + '_ {
    m.iter().enumerate().flat_map(|(w, &bits)| {
        let mut b = bits;
        std::iter::from_fn(move || {
            if b == 0 {
                return None;
            }
            let i = b.trailing_zeros() as usize;
            b &= b - 1;
            Some(w * 64 + i)
        })
    })
}

struct Eliminator<'a> {
    adj: &'a [Vec<usize>],
    min_degree: bool,
    memo: HashMap<Mask, BigInt>,
}

impl Eliminator<'_> {
    /// Vertex to branch on; `None` once the mask is empty.
    fn pivot(&self, mask: &Mask) -> Option<usize> {
        if !self.min_degree {
            return members(mask).next();
        }
        let mut best: Option<(usize, usize)> = None;
        for v in members(mask) {
            let deg = self.adj[v].iter().filter(|&&w| has(mask, w)).count();
            if best.is_none_or(|(d, _)| deg < d) {
                best = Some((deg, v));
                if deg <= 1 {
                    break;
                }
            }
        }
        best.map(|(_, v)| v)
    }

    fn count(&mut self, mask: &Mask) -> BigInt {
        let Some(v) = self.pivot(mask) else {
            return BigInt::one();
        };
        if let Some(c) = self.memo.get(mask) {
            return c.clone();
        }
        let mut total = BigInt::zero();
        for &w in self.adj[v].iter() {
            if has(mask, w) {
                total += self.count(&without(mask, v, w));
            }
        }
        self.memo.insert(mask.clone(), total.clone());
        total
    }
}

/// Number of perfect matchings by memoised elimination, always branching on
/// a surviving vertex of minimum remaining degree.
pub fn count_matchings(g: &HoleyAztecGraph) -> BigInt {
    eliminate(g, true)
}

/// As [`count_matchings`] but branching on the lowest-indexed vertex.
pub fn count_matchings_lowest_first(g: &HoleyAztecGraph) -> BigInt {
    eliminate(g, false)
}

fn eliminate(g: &HoleyAztecGraph, min_degree: bool) -> BigInt {
    let n = g.vertices().len();
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let mut e = Eliminator { adj: g.adjacency(), min_degree, memo: HashMap::new() };
    e.count(&full_mask(n))
}

/// The matching with position `index` in the lowest-first enumeration order
/// (pivot on the lowest surviving vertex, partners in increasing order).
pub fn nth_matching(g: &HoleyAztecGraph, index: &BigInt) -> Option<Vec<(Vertex, Vertex)>> {
    let n = g.vertices().len();
    if n % 2 == 1 || index < &BigInt::zero() {
        return None;
    }
    let mut e = Eliminator { adj: g.adjacency(), min_degree: false, memo: HashMap::new() };
    let mut mask = full_mask(n);
    let mut rest = index.clone();
    if rest >= e.count(&mask) {
        return None;
    }
    let mut out = Vec::with_capacity(n / 2);
    while let Some(v) = e.pivot(&mask) {
        let mut chosen = None;
        for &w in g.adjacency()[v].iter() {
            if !has(&mask, w) {
                continue;
            }
            let next = without(&mask, v, w);
            let c = e.count(&next);
            if rest < c {
                chosen = Some((w, next));
                break;
            }
            rest -= c;
        }
        let (w, next) = chosen?;
        out.push((g.vertices()[v], g.vertices()[w]));
        mask = next;
    }
    Some(out)
}

/// Number of perfect matchings by sweeping vertex rows top to bottom. The
/// state is the set of vertices in the current row already covered from
/// above (removed vertices count as covered); every uncovered vertex must be
/// matched into the next row.
pub fn count_matchings_profile_dp(g: &HoleyAztecGraph) -> BigInt {
    let base = g.base();
    let rows = base.vertex_rows();
    if g.vertices().len() % 2 == 1 {
        return BigInt::zero();
    }
    let removed_mask = |r: usize| -> u32 {
        (1..=base.row_length(r)).filter(|&k| g.is_removed((r, k))).fold(0, |m, k| m | 1 << (k - 1))
    };

    let mut states: HashMap<u32, BigInt> = HashMap::from([(removed_mask(1), BigInt::one())]);
    for r in 1..rows {
        let len = base.row_length(r);
        let blocked = removed_mask(r + 1);
        let options: Vec<Vec<usize>> =
            (1..=len).map(|k| base.down_neighbours((r, k)).into_iter().map(|(_, j)| j - 1).collect()).collect();
        let mut next: HashMap<u32, BigInt> = HashMap::new();
        for (state, ways) in &states {
            let open: Vec<usize> = (0..len).filter(|k| state >> k & 1 == 0).collect();
            assign(&open, 0, blocked, &options, &mut |taken| {
                *next.entry(taken).or_default() += ways;
            });
        }
        states = next;
    }
    let full = (1u32 << base.row_length(rows)) - 1;
    states.remove(&full).unwrap_or_default()
}

/// Enumerates injective choices of a lower neighbour for every open vertex.
fn assign(open: &[usize], i: usize, taken: u32, options: &[Vec<usize>], emit: &mut impl FnMut(u32)) {
    if i == open.len() {
        emit(taken);
        return;
    }
    for &j in &options[open[i]] {
        if taken >> j & 1 == 0 {
            assign(open, i + 1, taken | 1 << j, options, emit);
        }
    }
}
