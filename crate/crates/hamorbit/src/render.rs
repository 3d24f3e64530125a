//! Deterministic SVG drawings of geometric realizations.
//!
//! Vertices sit on a circle with vertex 0 at the top and indices
//! increasing clockwise, so the reflection axis `s` is vertical.  All
//! coordinates are emitted with exactly three decimal places; identical
//! inputs produce byte-identical documents.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::Mode;
use crate::orbit::enumerate_classes_capped;
use crate::perm::DEFAULT_CAP;
use crate::shape::ShapeKey;

/// Positions of the n circle vertices in screen coordinates (y down).
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    n: usize,
    points: Vec<(f64, f64)>,
}

impl Layout {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }
}

/// Places vertex i at angle i·2π/n clockwise from the top of a circle
/// with the given radius and center.
pub fn layout(n: usize, radius: f64, center: (f64, f64)) -> Result<Layout> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if !(radius > 0.0) {
        return Err(Error::BadRadius { radius });
    }
    let points = (0..n)
        .map(|i| {
            let theta = i as f64 * std::f64::consts::TAU / n as f64;
            (
                center.0 + radius * theta.sin(),
                center.1 - radius * theta.cos(),
            )
        })
        .collect();
    Ok(Layout { n, points })
}

/// Visual options; every field has a sensible default.
#[derive(Debug, Clone, PartialEq)]
pub struct Style {
    /// Width and height of one square drawing cell, in px.
    pub cell: f64,
    /// Gap between the vertex circle and the cell border, in px.
    pub margin: f64,
    /// Radius of the vertex dots, in px.
    pub vertex_radius: f64,
    pub stroke_width: f64,
    /// Edge color.
    pub stroke: String,
    /// Vertex dot color.
    pub fill: String,
}

impl Default for Style {
    fn default() -> Style {
        Style {
            cell: 120.0,
            margin: 14.0,
            vertex_radius: 3.0,
            stroke_width: 1.5,
            stroke: "#1a1a1a".to_owned(),
            fill: "#1a1a1a".to_owned(),
        }
    }
}

/// Three fixed decimal places, with negative zero normalized away.
fn fmt3(v: f64) -> String {
    let s = format!("{:.3}", v);
    if s == "-0.000" {
        "0.000".to_owned()
    } else {
        s
    }
}

fn svg_open(w: f64, h: f64) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
        w = fmt3(w),
        h = fmt3(h),
    )
}

fn cell_layout(n: usize, style: &Style) -> Result<Layout> {
    layout(
        n,
        style.cell / 2.0 - style.margin,
        (style.cell / 2.0, style.cell / 2.0),
    )
}

fn push_shape(out: &mut String, key: &ShapeKey, lay: &Layout, style: &Style) {
    let _ = writeln!(
        out,
        "<g class=\"shape\" stroke=\"{}\" stroke-width=\"{}\" fill=\"{}\">",
        style.stroke,
        fmt3(style.stroke_width),
        style.fill
    );
    for &(a, b) in key.edges() {
        let (x1, y1) = lay.points[a as usize];
        let (x2, y2) = lay.points[b as usize];
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            fmt3(x1),
            fmt3(y1),
            fmt3(x2),
            fmt3(y2)
        );
    }
    for &(x, y) in lay.points() {
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" stroke=\"none\"/>",
            fmt3(x),
            fmt3(y),
            fmt3(style.vertex_radius)
        );
    }
    out.push_str("</g>\n");
}

/// One figure as a standalone SVG document: |edges| line segments under
/// n vertex dots.
pub fn render_shape(key: &ShapeKey, style: &Style) -> Result<String> {
    let lay = cell_layout(key.n(), style)?;
    let mut out = svg_open(style.cell, style.cell);
    push_shape(&mut out, key, &lay, style);
    out.push_str("</svg>\n");
    Ok(out)
}

/// Grid of the class representatives of `mode`, row-major in
/// representative order, one `<g class="cell">` per class.
pub fn render_gallery(mode: Mode, columns: usize, style: &Style) -> Result<String> {
    render_gallery_capped(mode, columns, style, DEFAULT_CAP)
}

/// [`render_gallery`] with an explicit enumeration cap.
pub fn render_gallery_capped(
    mode: Mode,
    columns: usize,
    style: &Style,
    cap: usize,
) -> Result<String> {
    if columns == 0 {
        return Err(Error::NonPositive);
    }
    let classes = enumerate_classes_capped(mode, cap)?;
    let lay = cell_layout(mode.n(), style)?;
    let cols = columns.min(classes.len().max(1));
    let rows = classes.len().div_ceil(cols);
    let mut out = svg_open(cols as f64 * style.cell, rows as f64 * style.cell);
    for (k, (_, key)) in classes.iter().enumerate() {
        let _ = writeln!(
            out,
            "<g class=\"cell\" transform=\"translate({} {})\">",
            fmt3((k % cols) as f64 * style.cell),
            fmt3((k / cols) as f64 * style.cell)
        );
        push_shape(&mut out, key, &lay, style);
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
