//! Braid diagrams as TikZ row text and SVG.

use std::fmt::Write as _;

use crate::braid::BraidWord;
use crate::cabling::WidthVector;
use crate::error::{BraidError, Result};
use crate::notation::pack_rows;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Tikz,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub format: Format,
    pub strand_spacing: f64,
    pub row_height: f64,
    /// Printed above the strands, one label per strand.
    pub labels: Option<WidthVector>,
    /// Fraction of a crossing's height left open in the under-strand.
    pub crossing_gap: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            format: Format::Svg,
            strand_spacing: 40.0,
            row_height: 40.0,
            labels: None,
            crossing_gap: 0.25,
        }
    }
}

impl RenderOptions {
    fn validate(&self, strands: usize) -> Result<()> {
        if !(self.strand_spacing > 0.0 && self.strand_spacing.is_finite()) {
            return Err(BraidError::RenderOptions("strand spacing must be positive".into()));
        }
        if !(self.row_height > 0.0 && self.row_height.is_finite()) {
            return Err(BraidError::RenderOptions("row height must be positive".into()));
        }
        if !(self.crossing_gap > 0.0 && self.crossing_gap < 1.0) {
            return Err(BraidError::RenderOptions("crossing gap must lie in (0, 1)".into()));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != strands {
                return Err(BraidError::RenderOptions(format!(
                    "{} labels for {strands} strands",
                    labels.len()
                )));
            }
        }
        Ok(())
    }
}

pub fn to_tikz(b: &BraidWord) -> String {
    format!("braid={{ {}}}", pack_rows(b))
}

pub fn render(b: &BraidWord, opts: &RenderOptions) -> Result<String> {
    match opts.format {
        Format::Tikz => Ok(to_tikz(b)),
        Format::Svg => to_svg(b, opts),
    }
}

fn point(path: &mut String, cmd: char, x: f64, y: f64) {
    let _ = write!(path, "{cmd}{x:.2} {y:.2} ");
}

/// One `<path class="strand">` per strand; each crossing breaks exactly one
/// path (the under-strand) with an extra `M`.
pub fn to_svg(b: &BraidWord, opts: &RenderOptions) -> Result<String> {
    let n = b.strands();
    opts.validate(n)?;
    let rows = pack_rows(b);
    let spacing = opts.strand_spacing;
    let margin = spacing / 2.0;
    let label_band = if opts.labels.is_some() { opts.row_height * 0.6 } else { 0.0 };
    let top = margin + label_band;
    let row_count = rows.rows().len().max(1);
    let width = 2.0 * margin + spacing * (n as f64 - 1.0);
    let height = top + opts.row_height * row_count as f64 + margin;
    let x_of = |pos: usize| margin + spacing * pos as f64;

    // strand_at[pos] = strand currently at position pos (0-based)
    let mut strand_at: Vec<usize> = (0..n).collect();
    let mut paths: Vec<String> = vec![String::new(); n];
    for (s, path) in paths.iter_mut().enumerate() {
        point(path, 'M', x_of(s), top);
    }
    if rows.rows().is_empty() {
        for (s, path) in paths.iter_mut().enumerate() {
            point(path, 'L', x_of(s), top + opts.row_height);
        }
    }
    let half_gap = opts.crossing_gap / 2.0;
    for (r, row) in rows.rows().iter().enumerate() {
        let y0 = top + opts.row_height * r as f64;
        let y1 = y0 + opts.row_height;
        let mut crossing_at = vec![None; n];
        for &g in row.entries() {
            crossing_at[g.unsigned_abs() as usize - 1] = Some(g > 0);
        }
        let mut pos = 0;
        while pos < n {
            if let Some(positive) = crossing_at[pos] {
                let left = strand_at[pos];
                let right = strand_at[pos + 1];
                // positive: the strand moving right passes over
                let (over, over_from, under, under_from) = if positive {
                    (left, pos, right, pos + 1)
                } else {
                    (right, pos + 1, left, pos)
                };
                let over_to = if over_from == pos { pos + 1 } else { pos };
                let under_to = if under_from == pos { pos + 1 } else { pos };
                point(&mut paths[over], 'L', x_of(over_to), y1);
                let (xa, xb) = (x_of(under_from), x_of(under_to));
                let lerp = |t: f64| (xa + (xb - xa) * t, y0 + (y1 - y0) * t);
                let (ux1, uy1) = lerp(0.5 - half_gap);
                let (ux2, uy2) = lerp(0.5 + half_gap);
                let p = &mut paths[under];
                point(p, 'L', ux1, uy1);
                point(p, 'M', ux2, uy2);
                point(p, 'L', xb, y1);
                strand_at.swap(pos, pos + 1);
                pos += 2;
            } else {
                point(&mut paths[strand_at[pos]], 'L', x_of(pos), y1);
                pos += 1;
            }
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}" data-strands="{n}" data-crossings="{}">"#,
        b.len()
    );
    let _ = writeln!(
        svg,
        r#"<g fill="none" stroke="black" stroke-width="3" stroke-linecap="round" stroke-linejoin="round">"#
    );
    for (s, path) in paths.iter().enumerate() {
        let _ = writeln!(svg, r#"<path class="strand" data-strand="{}" d="{}"/>"#, s + 1, path.trim_end());
    }
    svg.push_str("</g>\n");
    if let Some(labels) = &opts.labels {
        let y = margin + label_band * 0.6;
        let font = (opts.row_height * 0.4).max(1.0);
        for (s, w) in labels.as_slice().iter().enumerate() {
            let _ = writeln!(
                svg,
                r#"<text x="{:.2}" y="{y:.2}" font-size="{font:.2}" text-anchor="middle" font-family="serif">{w}</text>"#,
                x_of(s)
            );
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
