//! Nonintersecting lattice-path families and the colour-exchange bijection
//! along down-up trails.
//!
//! Path `i` of a family starts at `(i-1, start_row)` and ends at `(a_i, n)`
//! using unit east and north steps. An east step at height `h` carries the
//! variable attached to `h`. Same-colour paths are vertex-disjoint; paths of
//! different colours may share vertices and edges.

mod trail;

use std::collections::HashSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::IndexSet;
use crate::error::{invalid, Result};
use crate::schur::Polynomial;

pub use trail::{
    downup_matching, exchange_colours, exchange_colours_odd, restore_colours, trail_report, Trail, TrailEnd,
    TrailMatching,
};

pub type Point = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Colour {
    Green,
    Red,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::Green => Colour::Red,
            Colour::Red => Colour::Green,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Step {
    East,
    North,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePath {
    start: Point,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Rebuilds a path from consecutive unit-step vertices.
    pub fn from_vertices(vertices: &[Point]) -> Result<Self> {
        let Some(&start) = vertices.first() else {
            return invalid("empty vertex list");
        };
        let mut steps = Vec::with_capacity(vertices.len() - 1);
        for w in vertices.windows(2) {
            steps.push(match (w[1].0 - w[0].0, w[1].1 - w[0].1) {
                (1, 0) => Step::East,
                (0, 1) => Step::North,
                _ => return invalid(format!("{:?} -> {:?} is not a unit step", w[0], w[1])),
            });
        }
        Ok(LatticePath { start, steps })
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn vertices(&self) -> Vec<Point> {
        let mut v = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        v.push(p);
        for s in &self.steps {
            p = match s {
                Step::East => (p.0 + 1, p.1),
                Step::North => (p.0, p.1 + 1),
            };
            v.push(p);
        }
        v
    }

    pub fn end(&self) -> Point {
        *self.vertices().last().expect("nonempty")
    }

    /// Heights of the east steps, bottom to top.
    pub fn east_heights(&self) -> Vec<i64> {
        let mut y = self.start.1;
        let mut out = Vec::new();
        for s in &self.steps {
            match s {
                Step::East => out.push(y),
                Step::North => y += 1,
            }
        }
        out
    }
}

/// A coloured family; path `i` starts at `(i-1, start_row)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PathFamily {
    colour: Colour,
    start_row: i64,
    paths: Vec<LatticePath>,
}

impl PathFamily {
    pub fn new(colour: Colour, start_row: i64, paths: Vec<LatticePath>) -> Result<Self> {
        for (i, p) in paths.iter().enumerate() {
            if p.start() != (i as i64, start_row) {
                return invalid(format!("path {} starts at {:?}", i + 1, p.start()));
            }
        }
        let fam = PathFamily { colour, start_row, paths };
        if !fam.is_nonintersecting() {
            return invalid("same-colour paths share a vertex");
        }
        Ok(fam)
    }

    pub fn colour(&self) -> Colour {
        self.colour
    }

    pub fn start_row(&self) -> i64 {
        self.start_row
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// x-coordinates of the end points.
    pub fn ends(&self) -> Vec<i64> {
        self.paths.iter().map(|p| p.end().0).collect()
    }

    pub fn is_nonintersecting(&self) -> bool {
        let mut seen = HashSet::new();
        self.paths.iter().all(|p| p.vertices().into_iter().all(|v| seen.insert(v)))
    }

    /// Exponent vector of the weight. Height `h >= 1` maps to `x_h`; height 0
    /// maps to the extra variable `x_{n+1}`, so `nvars` must be `n + 1` when
    /// height-0 east steps occur.
    pub fn weight(&self, nvars: usize) -> Vec<u32> {
        let mut e = vec![0u32; nvars];
        for p in &self.paths {
            for h in p.east_heights() {
                e[height_variable(h, nvars)] += 1;
            }
        }
        e
    }
}

pub(crate) fn height_variable(h: i64, nvars: usize) -> usize {
    if h == 0 {
        nvars - 1
    } else {
        h as usize - 1
    }
}

/// Every monotone path from `from` to `to`, east-first lexicographic.
fn all_paths(from: Point, to: Point) -> Vec<LatticePath> {
    let (e, nn) = (to.0 - from.0, to.1 - from.1);
    if e < 0 || nn < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    fn go(e: i64, n: i64, cur: &mut Vec<Step>, from: Point, out: &mut Vec<LatticePath>) {
        if e == 0 && n == 0 {
            out.push(LatticePath::new(from, cur.clone()));
            return;
        }
        for (s, left) in [(Step::East, e), (Step::North, n)] {
            if left > 0 {
                cur.push(s);
                let (e2, n2) = if s == Step::East { (e - 1, n) } else { (e, n - 1) };
                go(e2, n2, cur, from, out);
                cur.pop();
            }
        }
    }
    go(e, nn, &mut Vec::new(), from, &mut out);
    out
}

/// All vertex-disjoint families with starts `(i-1, start_row)` and ends
/// `(a_i, n)`.
pub fn enumerate_families(a: &IndexSet, n: i64, start_row: i64, colour: Colour) -> Vec<PathFamily> {
    let candidates: Vec<Vec<LatticePath>> = a
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &ai)| all_paths((i as i64, start_row), (ai as i64, n)))
        .collect();
    let mut out = Vec::new();
    fn go(
        i: usize,
        cands: &[Vec<LatticePath>],
        used: &mut HashSet<Point>,
        cur: &mut Vec<LatticePath>,
        colour: Colour,
        start_row: i64,
        out: &mut Vec<PathFamily>,
    ) {
        if i == cands.len() {
            out.push(PathFamily { colour, start_row, paths: cur.clone() });
            return;
        }
        for p in &cands[i] {
            let vs = p.vertices();
            if vs.iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(vs.iter().copied());
            cur.push(p.clone());
            go(i + 1, cands, used, cur, colour, start_row, out);
            cur.pop();
            for v in &vs {
                used.remove(v);
            }
        }
    }
    go(0, &candidates, &mut HashSet::new(), &mut Vec::new(), colour, start_row, &mut out);
    out
}

/// Sum of family weights. With `start_row = 1` this is a polynomial in `n`
/// variables; with `start_row = 0` it is in `n + 1` variables.
pub fn family_weight_sum(a: &IndexSet, n: i64, start_row: i64) -> Polynomial {
    let nvars = if start_row == 0 { n as usize + 1 } else { n as usize };
    let mut p = Polynomial::zero(nvars);
    for f in enumerate_families(a, n, start_row, Colour::Green) {
        p.add_term(f.weight(nvars), BigInt::from(1));
    }
    p
}
