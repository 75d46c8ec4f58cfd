//! SVG drawing of a holey Aztec rectangle.
//!
//! Vertex `(r, k)` sits at board column `2k` on odd rows and `2k - 1` on even
//! rows; both coordinates are scaled by [`SPACING`], row 1 at the top.

use std::fmt::Write as _;
use std::io::Write;

use clap::Args;
use num_bigint::BigInt;
use serde_json::json;

use super::{emit_json, HoleArgs, EXIT_OK};
use crate::aztec::{count_matchings, nth_matching, AztecRectangle, HoleyAztecGraph, Vertex};
use crate::error::{Error, Result};

pub const SPACING: usize = 20;

#[derive(Args, Debug)]
pub struct RenderArgs {
    #[command(flatten)]
    holes: HoleArgs,
    /// Overlay the perfect matching with this index (0-based, lowest-first order).
    #[arg(long)]
    matching: Option<String>,
    /// Emit adjacency JSON instead of SVG.
    #[arg(long)]
    json: bool,
}

fn position(base: &AztecRectangle, v: Vertex) -> (usize, usize) {
    (base.column(v) * SPACING, v.0 * SPACING)
}

/// Deterministic SVG: edges as lines, vertices as filled dots, removed
/// vertices as hollow circles, matched edges drawn thick on top.
pub fn render_svg(g: &HoleyAztecGraph, matching: Option<&[(Vertex, Vertex)]>) -> String {
    let base = g.base();
    let width = (2 * base.cols_param + 2) * SPACING;
    let height = (2 * base.rows_param + 2) * SPACING;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    let line = |s: &mut String, a: Vertex, b: Vertex, class: &str, style: &str| {
        let ((x1, y1), (x2, y2)) = (position(&base, a), position(&base, b));
        let _ = writeln!(s, r#"<line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>"#);
    };
    for (a, b) in g.edges() {
        line(&mut s, a, b, "edge", r##"stroke="#999999" stroke-width="1""##);
    }
    if let Some(m) = matching {
        for &(a, b) in m {
            line(&mut s, a, b, "matching", r##"stroke="#c0392b" stroke-width="4" stroke-linecap="round""##);
        }
    }
    for &v in g.vertices() {
        let (x, y) = position(&base, v);
        let _ = writeln!(s, r#"<circle class="vertex" cx="{x}" cy="{y}" r="3" fill="black"/>"#);
    }
    for &v in g.removed() {
        let (x, y) = position(&base, v);
        let _ = writeln!(s, r#"<circle class="hole" cx="{x}" cy="{y}" r="4" fill="none" stroke="black" stroke-width="1"/>"#);
    }
    s.push_str("</svg>\n");
    s
}

pub(crate) fn cmd_render(a: &RenderArgs, out: &mut dyn Write) -> Result<i32> {
    let holes = a.holes.resolve()?;
    let g = if a.matching.is_some() { holes.graph()? } else { holes.graph_unchecked()? };
    let matching = match &a.matching {
        None => None,
        Some(idx) => {
            let index: BigInt =
                idx.parse().map_err(|_| Error::InvalidInput(format!("matching index {idx} is not an integer")))?;
            Some(nth_matching(&g, &index).ok_or_else(|| {
                Error::InvalidInput(format!("matching index {index} out of range (count {})", count_matchings(&g)))
            })?)
        }
    };
    if a.json {
        let mut v = g.to_json();
        if let Some(m) = &matching {
            v["matching"] = json!(m.iter().map(|&(p, q)| [[p.0, p.1], [q.0, q.1]]).collect::<Vec<_>>());
        }
        emit_json(out, &v)?;
    } else {
        write!(out, "{}", render_svg(&g, matching.as_deref())).map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    Ok(EXIT_OK)
}
