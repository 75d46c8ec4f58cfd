//! Down-up trails through a green family overlaid with a red family.
//!
//! Every path is extended by a virtual top vertex `(a, n+1)`. At a vertex
//! used by both colours the two edges above it are paired with each other,
//! and likewise the two edges below it. Elsewhere an edge continues along its
//! own path. The pairing splits the coloured edges into closed cycles (an
//! edge used by both colours forms a 2-cycle) and open trails whose ends are
//! virtual tops or an unshared start point. Walking such a trail from a top,
//! one moves down, and at every vertex shared with the other colour one
//! transfers to the other path and reverses direction.
//!
//! Exchanging the colours of all edges along a trail yields two new families
//! on the same edge multiset, so weights are preserved, and the trails of the
//! new pair are the same trails. Hence flipping a trail twice is the identity.

use std::collections::{HashMap, HashSet};

use super::{Colour, LatticePath, PathFamily, Point};
use crate::error::{invalid, Error, Result};

/// Where a trail terminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TrailEnd {
    /// The virtual top above the endpoint `t_i` (1-based index into `T`).
    Top(usize),
    /// An unshared start point.
    Start(Point),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    pub ends: (TrailEnd, TrailEnd),
    /// Vertices where the trail changed path, in travel order.
    pub switches: Vec<Point>,
    edges: Vec<(usize, usize)>,
}

/// Endpoint pairs joined by trails, plus the endpoint joined to the extra
/// start point when the red family has one more path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailMatching {
    pub pairs: Vec<(usize, usize)>,
    pub distinguished: Option<usize>,
}

struct Strand {
    colour: Colour,
    verts: Vec<Point>,
}

struct Overlay {
    n: i64,
    m: usize,
    odd: bool,
    strands: Vec<Strand>,
    at: HashMap<Point, Vec<(usize, usize)>>,
    ends: Vec<i64>,
    top_strand: Vec<usize>,
}

impl Overlay {
    fn build(green: &PathFamily, red: &PathFamily) -> Result<Overlay> {
        let m = green.len();
        if green.start_row() != 1 {
            return invalid("green paths must start on row 1");
        }
        let odd = match (red.start_row(), red.len()) {
            (1, r) if r == m => false,
            (0, r) if r == m + 1 => true,
            _ => return invalid("red family must match green (row 1) or have one extra path (row 0)"),
        };
        let all = green.paths().iter().chain(red.paths());
        let heights: HashSet<i64> = all.clone().map(|p| p.end().1).collect();
        if heights.len() > 1 {
            return invalid("paths end on different rows");
        }
        let n = heights.into_iter().next().unwrap_or(1);

        let mut strands = Vec::new();
        for p in green.paths() {
            strands.push(Strand { colour: Colour::Green, verts: p.vertices() });
        }
        for (i, p) in red.paths().iter().enumerate() {
            let mut verts = p.vertices();
            if odd && i < m {
                if verts.get(1) != Some(&(i as i64, 1)) {
                    return invalid(format!("red path {} must leave its start northwards", i + 1));
                }
                verts.remove(0);
            }
            strands.push(Strand { colour: Colour::Red, verts });
        }
        for s in &mut strands {
            let top = *s.verts.last().expect("nonempty");
            s.verts.push((top.0, n + 1));
        }

        let mut ends: Vec<i64> = strands.iter().map(|s| s.verts.last().unwrap().0).collect();
        ends.sort_unstable();
        if ends.windows(2).any(|w| w[0] == w[1]) {
            return invalid("green and red end points overlap");
        }
        let mut top_strand = vec![0; ends.len()];
        for (k, s) in strands.iter().enumerate() {
            let x = s.verts.last().unwrap().0;
            top_strand[ends.binary_search(&x).unwrap()] = k;
        }

        let mut at: HashMap<Point, Vec<(usize, usize)>> = HashMap::new();
        for (k, s) in strands.iter().enumerate() {
            for (pos, &v) in s.verts.iter().enumerate() {
                at.entry(v).or_default().push((k, pos));
            }
        }
        if at.values().any(|occ| occ.len() > 2) {
            return invalid("a vertex is used twice by one colour");
        }
        Ok(Overlay { n, m, odd, strands, at, ends, top_strand })
    }

    fn partner(&self, v: Point, k: usize) -> Option<(usize, usize)> {
        self.at[&v].iter().copied().find(|&(q, _)| q != k)
    }

    /// The trail entered from the virtual top of strand `k`.
    fn walk(&self, k: usize) -> Result<Trail> {
        let mut edges = Vec::new();
        let mut switches = Vec::new();
        let (mut p, mut j, mut down) = (k, self.strands[k].verts.len() - 2, true);
        let first = TrailEnd::Top(self.top_index(k));
        loop {
            edges.push((p, j));
            let verts = &self.strands[p].verts;
            if down {
                let v = verts[j];
                if let Some((q, pos)) = self.partner(v, p) {
                    switches.push(v);
                    (p, j, down) = (q, pos, false);
                } else if j == 0 {
                    return Ok(Trail { ends: (first, TrailEnd::Start(v)), switches, edges });
                } else {
                    j -= 1;
                }
            } else {
                if j + 2 == verts.len() {
                    return Ok(Trail { ends: (first, TrailEnd::Top(self.top_index(p))), switches, edges });
                }
                let v = verts[j + 1];
                if let Some((q, pos)) = self.partner(v, p) {
                    if pos == 0 {
                        return invalid(format!("trail reaches the start {v:?} from above"));
                    }
                    switches.push(v);
                    (p, j, down) = (q, pos - 1, true);
                } else {
                    j += 1;
                }
            }
        }
    }

    fn top_index(&self, k: usize) -> usize {
        let x = self.strands[k].verts.last().unwrap().0;
        self.ends.binary_search(&x).unwrap() + 1
    }

    fn trails(&self) -> Result<Vec<Trail>> {
        let mut seen = vec![false; self.ends.len()];
        let mut out = Vec::new();
        for i in 0..self.ends.len() {
            if seen[i] {
                continue;
            }
            let t = self.walk(self.top_strand[i])?;
            for e in [t.ends.0, t.ends.1] {
                if let TrailEnd::Top(j) = e {
                    seen[j - 1] = true;
                }
            }
            out.push(t);
        }
        Ok(out)
    }

    fn colour_of_top(&self, i: usize) -> Colour {
        self.strands[self.top_strand[i - 1]].colour
    }

    /// Reassembles both families after exchanging colours on `flip`.
    fn recolour(&self, flip: &HashSet<(usize, usize)>) -> Result<(PathFamily, PathFamily)> {
        let mut next: HashMap<(Colour, Point), Vec<Point>> = HashMap::new();
        for (k, s) in self.strands.iter().enumerate() {
            for j in 0..s.verts.len() - 1 {
                let c = if flip.contains(&(k, j)) { s.colour.other() } else { s.colour };
                next.entry((c, s.verts[j])).or_default().push(s.verts[j + 1]);
            }
        }
        let follow = |c: Colour, start: Point| -> Result<Vec<Point>> {
            let mut verts = vec![start];
            let mut cur = start;
            while cur.1 <= self.n {
                match next.get(&(c, cur)).map(Vec::as_slice) {
                    Some([w]) => cur = *w,
                    _ => return Err(Error::InvalidInput(format!("no unique {c:?} continuation at {cur:?}"))),
                }
                verts.push(cur);
            }
            verts.pop();
            Ok(verts)
        };
        let mut green = Vec::new();
        let mut red = Vec::new();
        for i in 0..self.m as i64 {
            green.push(LatticePath::from_vertices(&follow(Colour::Green, (i, 1))?)?);
            let mut r = follow(Colour::Red, (i, 1))?;
            if self.odd {
                r.insert(0, (i, 0));
            }
            red.push(LatticePath::from_vertices(&r)?);
        }
        if self.odd {
            red.push(LatticePath::from_vertices(&follow(Colour::Red, (self.m as i64, 0))?)?);
        }
        let red_row = if self.odd { 0 } else { 1 };
        Ok((PathFamily::new(Colour::Green, 1, green)?, PathFamily::new(Colour::Red, red_row, red)?))
    }

    /// Odd-indexed endpoints that carry a colour bit, and the distinguished
    /// endpoint joined to the extra start.
    fn odd_slots(&self, trails: &[Trail]) -> Result<(Vec<usize>, Option<usize>)> {
        let mut distinguished = None;
        for t in trails {
            if let (TrailEnd::Top(i), TrailEnd::Start(_)) = t.ends {
                if i % 2 == 0 || self.colour_of_top(i) != Colour::Red {
                    return invalid(format!("endpoint t_{i} joined to the extra start is not an odd red endpoint"));
                }
                distinguished = Some(i);
            }
        }
        if self.odd != distinguished.is_some() {
            return invalid("extra start point is not reached by exactly one trail");
        }
        let slots = (1..=self.ends.len()).step_by(2).filter(|&i| Some(i) != distinguished).collect();
        Ok((slots, distinguished))
    }

    fn trail_through(trails: &[Trail], i: usize) -> &Trail {
        trails
            .iter()
            .find(|t| t.ends.0 == TrailEnd::Top(i) || t.ends.1 == TrailEnd::Top(i))
            .expect("every top lies on a trail")
    }
}

fn trail_set(trails: &[Trail], slots: &[usize], bits: &[bool]) -> HashSet<(usize, usize)> {
    let mut flip = HashSet::new();
    for (&i, &b) in slots.iter().zip(bits) {
        if b {
            flip.extend(Overlay::trail_through(trails, i).edges.iter().copied());
        }
    }
    flip
}

/// Pairs of endpoint indices joined by down-up trails.
pub fn downup_matching(green: &PathFamily, red: &PathFamily) -> Result<TrailMatching> {
    let ov = Overlay::build(green, red)?;
    let trails = ov.trails()?;
    let mut pairs = Vec::new();
    let mut distinguished = None;
    for t in &trails {
        match t.ends {
            (TrailEnd::Top(a), TrailEnd::Top(b)) => pairs.push((a.min(b), a.max(b))),
            (TrailEnd::Top(a), TrailEnd::Start(_)) => distinguished = Some(a),
            _ => return invalid("trail without a top end"),
        }
    }
    pairs.sort_unstable();
    Ok(TrailMatching { pairs, distinguished })
}

/// One line per trail: its two ends and the vertices where it switched paths.
pub fn trail_report(green: &PathFamily, red: &PathFamily) -> Result<Vec<String>> {
    let ov = Overlay::build(green, red)?;
    let fmt_end = |e: TrailEnd| match e {
        TrailEnd::Top(i) => format!("t{i}"),
        TrailEnd::Start(p) => format!("start({},{})", p.0, p.1),
    };
    Ok(ov
        .trails()?
        .into_iter()
        .map(|t| {
            let sw: Vec<String> = t.switches.iter().map(|p| format!("({},{})", p.0, p.1)).collect();
            format!("{} - {}: switches [{}]", fmt_end(t.ends.0), fmt_end(t.ends.1), sw.join(" "))
        })
        .collect())
}

fn forward(green: &PathFamily, red: &PathFamily, odd: bool) -> Result<(PathFamily, PathFamily, Vec<bool>)> {
    let ov = Overlay::build(green, red)?;
    if ov.odd != odd {
        return invalid(if odd { "expected a red family with one extra path" } else { "expected equal family sizes" });
    }
    let trails = ov.trails()?;
    let (slots, _) = ov.odd_slots(&trails)?;
    let bits: Vec<bool> = slots.iter().map(|&i| ov.colour_of_top(i) == Colour::Green).collect();
    let (g, r) = ov.recolour(&trail_set(&trails, &slots, &bits))?;
    let t: Vec<i64> = ov.ends.clone();
    let evens: Vec<i64> = t.iter().skip(1).step_by(2).copied().collect();
    if g.ends() != evens {
        return invalid("recoloured green family does not end at the even-indexed points");
    }
    Ok((g, r, bits))
}

/// Colour exchange for equal-size families: afterwards green ends at
/// `t_2, t_4, ...`; bit `i` records whether `t_{2i-1}` was green.
pub fn exchange_colours(green: &PathFamily, red: &PathFamily) -> Result<(PathFamily, PathFamily, Vec<bool>)> {
    forward(green, red, false)
}

/// Colour exchange when red has `m+1` paths starting on row 0. The endpoint
/// joined to `(m, 0)` is odd-indexed and red and is left alone; bits are
/// assigned to the remaining odd-indexed endpoints in increasing order.
pub fn exchange_colours_odd(green: &PathFamily, red: &PathFamily) -> Result<(PathFamily, PathFamily, Vec<bool>)> {
    forward(green, red, true)
}

/// Inverse of [`exchange_colours`] and [`exchange_colours_odd`].
pub fn restore_colours(green: &PathFamily, red: &PathFamily, bits: &[bool]) -> Result<(PathFamily, PathFamily)> {
    let ov = Overlay::build(green, red)?;
    let evens: Vec<i64> = ov.ends.iter().skip(1).step_by(2).copied().collect();
    if green.ends() != evens {
        return invalid("green end points are not the even-indexed points");
    }
    if bits.len() != ov.m {
        return invalid(format!("expected {} bits, got {}", ov.m, bits.len()));
    }
    let trails = ov.trails()?;
    let (slots, _) = ov.odd_slots(&trails)?;
    ov.recolour(&trail_set(&trails, &slots, bits))
}
