//! SVG rendering of addition and negation traces.
//!
//! Coordinate models are drawn in the plane with the frame line rotated to
//! horizontal; finite models are drawn as a labelled `p × p` grid with the
//! point sets of the constructed lines highlighted. Output is a pure
//! function of the trace, so identical traces give identical bytes.

use std::fmt::Write as _;

use crate::arithmetic::{AdditionTrace, LineFrame, NegationTrace};
use crate::error::{GeometryError, Result};
use crate::incidence::AffinePlane;
use crate::rational::to_f64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    /// The frame line and the points on it.
    Frame,
    /// Joining lines the construction takes parallels of.
    Reference,
    /// Auxiliary points and constructed parallels.
    Construction,
    /// The result point.
    Result,
}

impl Layer {
    fn id(self) -> &'static str {
        match self {
            Layer::Frame => "frame",
            Layer::Reference => "reference",
            Layer::Construction => "construction",
            Layer::Result => "result",
        }
    }
}

/// What to draw: labelled trace points and lines, each on a layer.
#[derive(Debug, Clone)]
pub struct DiagramSpec<P, L> {
    pub title: String,
    pub points: Vec<(String, P, Layer)>,
    pub lines: Vec<(String, L, Layer)>,
    /// Model-space viewport `(xmin, xmax, ymin, ymax)` after rotation;
    /// fitted to the points when `None`.
    pub viewport: Option<(f64, f64, f64, f64)>,
}

impl<P: Clone, L: Clone> DiagramSpec<P, L> {
    pub fn from_addition<M>(frame: &LineFrame<'_, M>, t: &AdditionTrace<P, L>) -> Self
    where
        M: AffinePlane<Point = P, Line = L>,
    {
        DiagramSpec {
            title: format!("A + B = C on {}", frame.plane().model_id()),
            points: vec![
                ("O".into(), frame.origin().clone(), Layer::Frame),
                ("I".into(), frame.unit().clone(), Layer::Frame),
                ("A".into(), t.a.clone(), Layer::Frame),
                ("B".into(), t.b.clone(), Layer::Frame),
                ("B1".into(), t.aux.clone(), Layer::Construction),
                ("P1".into(), t.helper.clone(), Layer::Construction),
                ("C".into(), t.result.clone(), Layer::Result),
            ],
            lines: vec![
                ("OI".into(), frame.line().clone(), Layer::Frame),
                ("OB1".into(), t.origin_aux.clone(), Layer::Reference),
                ("BB1".into(), t.operand_aux.clone(), Layer::Reference),
                ("B1 || OI".into(), t.aux_parallel.clone(), Layer::Construction),
                ("A || OB1".into(), t.operand_parallel.clone(), Layer::Construction),
                ("P1 || BB1".into(), t.result_parallel.clone(), Layer::Construction),
            ],
            viewport: None,
        }
    }

    pub fn from_negation<M>(frame: &LineFrame<'_, M>, t: &NegationTrace<P, L>) -> Self
    where
        M: AffinePlane<Point = P, Line = L>,
    {
        let mut points = vec![
            ("O".into(), frame.origin().clone(), Layer::Frame),
            ("I".into(), frame.unit().clone(), Layer::Frame),
            ("A".into(), t.a.clone(), Layer::Frame),
        ];
        let mut lines = vec![("OI".into(), frame.line().clone(), Layer::Frame)];
        if let Some(s) = &t.steps {
            points.push(("A1".into(), s.aux.clone(), Layer::Construction));
            points.push(("P1".into(), s.helper.clone(), Layer::Construction));
            lines.push(("OA1".into(), s.origin_aux.clone(), Layer::Reference));
            lines.push(("OP1".into(), s.origin_helper.clone(), Layer::Reference));
            lines.push(("A1 || OI".into(), s.aux_parallel.clone(), Layer::Construction));
            lines.push(("A || OA1".into(), s.operand_parallel.clone(), Layer::Construction));
            lines.push(("A1 || OP1".into(), s.result_parallel.clone(), Layer::Construction));
        }
        points.push(("-A".into(), t.result.clone(), Layer::Result));
        DiagramSpec {
            title: format!("negative of A on {}", frame.plane().model_id()),
            points,
            lines,
            viewport: None,
        }
    }
}

const CONSTRUCTION_COLORS: [&str; 3] = ["#1f77b4", "#2ca02c", "#ff7f0e"];
const CANVAS: f64 = 640.0;
const PAD: f64 = 40.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn line_style(layer: Layer, k: usize) -> String {
    match layer {
        Layer::Frame => r##"stroke="#000000" stroke-width="2""##.to_string(),
        Layer::Reference => r##"stroke="#888888" stroke-width="1" stroke-dasharray="6 4""##.to_string(),
        Layer::Construction => {
            format!(r#"stroke="{}" stroke-width="1.5""#, CONSTRUCTION_COLORS[k % CONSTRUCTION_COLORS.len()])
        }
        Layer::Result => r##"stroke="#d62728" stroke-width="2""##.to_string(),
    }
}

fn point_fill(layer: Layer) -> &'static str {
    match layer {
        Layer::Frame => "#000000",
        Layer::Reference | Layer::Construction => "#1f77b4",
        Layer::Result => "#d62728",
    }
}

/// Renders a `DiagramSpec` as an SVG document.
pub fn emit_svg<M: AffinePlane>(plane: &M, spec: &DiagramSpec<M::Point, M::Line>) -> Result<String> {
    if plane.is_finite() {
        emit_grid(plane, spec)
    } else {
        emit_plane(plane, spec)
    }
}

fn emit_plane<M: AffinePlane>(plane: &M, spec: &DiagramSpec<M::Point, M::Line>) -> Result<String> {
    let coords = |p: &M::Point| -> Result<(f64, f64)> {
        let (x, y) = plane.coords(p).ok_or(GeometryError::UnsupportedModel)?;
        Ok((to_f64(&x), to_f64(&y)))
    };
    // rotate about O so that OI is horizontal
    let origin = spec.points.iter().find(|(l, _, _)| l == "O").map(|(_, p, _)| p);
    let unit = spec.points.iter().find(|(l, _, _)| l == "I").map(|(_, p, _)| p);
    let (center, (cos, sin)) = match (origin, unit) {
        (Some(o), Some(i)) => {
            let (ox, oy) = coords(o)?;
            let (ix, iy) = coords(i)?;
            let exact = plane.coords(o).zip(plane.coords(i)).map(|(a, b)| a.1 == b.1).unwrap_or(false);
            if exact && ix > ox {
                ((ox, oy), (1.0, 0.0))
            } else {
                let len = ((ix - ox).powi(2) + (iy - oy).powi(2)).sqrt();
                ((ox, oy), ((ix - ox) / len, (iy - oy) / len))
            }
        }
        _ => ((0.0, 0.0), (1.0, 0.0)),
    };
    let rot = |(x, y): (f64, f64)| {
        let (dx, dy) = (x - center.0, y - center.1);
        (center.0 + cos * dx + sin * dy, center.1 - sin * dx + cos * dy)
    };

    let placed: Vec<(f64, f64)> = spec.points.iter().map(|(_, p, _)| coords(p).map(rot)).collect::<Result<_>>()?;
    let (xmin, xmax, ymin, ymax) = spec.viewport.unwrap_or_else(|| {
        let xs = placed.iter().map(|p| p.0);
        let ys = placed.iter().map(|p| p.1);
        let (x0, x1) = (xs.clone().fold(f64::INFINITY, f64::min), xs.fold(f64::NEG_INFINITY, f64::max));
        let (y0, y1) = (ys.clone().fold(f64::INFINITY, f64::min), ys.fold(f64::NEG_INFINITY, f64::max));
        let span = (x1 - x0).max(y1 - y0).max(1.0);
        let m = 0.2 * span;
        (x0 - m, x1 + m, y0 - m, y1 + m)
    });
    // square viewport
    let span = (xmax - xmin).max(ymax - ymin);
    let (cx, cy) = ((xmin + xmax) / 2.0, (ymin + ymax) / 2.0);
    let (xmin, ymax) = (cx - span / 2.0, cy + span / 2.0);
    let scale = (CANVAS - 2.0 * PAD) / span;
    let to_svg = |(x, y): (f64, f64)| (PAD + (x - xmin) * scale, PAD + (ymax - y) * scale);

    // polylines are generated over a box containing the rotated viewport
    let reach = span * 2.0;
    let gen_x = (center.0 - reach - (cx - center.0).abs(), center.0 + reach + (cx - center.0).abs());
    let gen_y = (center.1 - reach - (cy - center.1).abs(), center.1 + reach + (cy - center.1).abs());

    let size = CANVAS;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(&spec.title));
    let _ = writeln!(
        out,
        r#"  <defs><clipPath id="view"><rect x="{PAD}" y="{PAD}" width="{w:.2}" height="{w:.2}"/></clipPath></defs>"#,
        w = size - 2.0 * PAD
    );
    let _ = writeln!(out, r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##);

    for layer in [Layer::Frame, Layer::Reference, Layer::Construction, Layer::Result] {
        let items: Vec<_> = spec.lines.iter().filter(|(_, _, l)| *l == layer).collect();
        if items.is_empty() {
            continue;
        }
        let _ = writeln!(out, r#"  <g id="{}-lines" clip-path="url(#view)" fill="none">"#, layer.id());
        for (k, (label, line, _)) in items.into_iter().enumerate() {
            let poly = plane.line_polyline(line, gen_x, gen_y).ok_or(GeometryError::UnsupportedModel)?;
            let d: Vec<String> = poly
                .into_iter()
                .map(|p| {
                    let (x, y) = to_svg(rot(p));
                    format!("{:.2},{:.2}", x.clamp(-1e6, 1e6), y.clamp(-1e6, 1e6))
                })
                .collect();
            let _ = writeln!(
                out,
                r#"    <path data-label="{}" d="M {}" {}/>"#,
                escape(label),
                d.join(" L "),
                line_style(layer, k)
            );
        }
        let _ = writeln!(out, "  </g>");
    }

    let _ = writeln!(out, r#"  <g id="points" font-family="sans-serif" font-size="13">"#);
    for ((label, _, layer), pos) in spec.points.iter().zip(&placed) {
        let (x, y) = to_svg(*pos);
        let r = if *layer == Layer::Result { 5.0 } else { 3.5 };
        let _ = writeln!(
            out,
            r#"    <circle data-label="{l}" cx="{x:.2}" cy="{y:.2}" r="{r}" fill="{f}"/><text x="{tx:.2}" y="{ty:.2}" fill="{f}">{l}</text>"#,
            l = escape(label),
            f = point_fill(*layer),
            tx = x + 6.0,
            ty = y - 6.0
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

fn emit_grid<M: AffinePlane>(plane: &M, spec: &DiagramSpec<M::Point, M::Line>) -> Result<String> {
    let pts = plane.points().ok_or(GeometryError::UnsupportedModel)?;
    let cell = 48.0;
    let xy = |p: &M::Point| -> Result<(f64, f64)> {
        let (x, y) = plane.coords(p).ok_or(GeometryError::UnsupportedModel)?;
        Ok((to_f64(&x), to_f64(&y)))
    };
    let n = pts.iter().map(|p| xy(p).map(|c| c.0.max(c.1))).collect::<Result<Vec<_>>>()?.into_iter().fold(0.0, f64::max) + 1.0;
    let legend_h = 18.0 * (spec.lines.len() as f64 + 1.0);
    let (w, h) = (2.0 * PAD + n * cell, 2.0 * PAD + n * cell + legend_h);
    let at = |(x, y): (f64, f64)| (PAD + (x + 0.5) * cell, PAD + (n - y - 0.5) * cell);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(out, "  <title>{}</title>", escape(&spec.title));
    let _ = writeln!(out, r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(out, r#"  <g id="grid">"#);
    for p in &pts {
        let (x, y) = at(xy(p)?);
        let _ = writeln!(out, r##"    <circle cx="{x:.2}" cy="{y:.2}" r="2" fill="#bbbbbb"/>"##);
    }
    let _ = writeln!(out, "  </g>");

    // one ring per line, growing radius so overlapping point sets stay visible
    let mut construction = 0;
    for (k, (label, line, layer)) in spec.lines.iter().enumerate() {
        let members = plane.points_on(line).ok_or(GeometryError::UnsupportedModel)?;
        let style = line_style(*layer, construction);
        if *layer == Layer::Construction {
            construction += 1;
        }
        let r = 6.0 + 3.0 * k as f64;
        let _ = writeln!(out, r#"  <g id="line-{k}" data-label="{}" fill="none" {style}>"#, escape(label));
        for p in &members {
            let (x, y) = at(xy(p)?);
            let _ = writeln!(out, r#"    <circle cx="{x:.2}" cy="{y:.2}" r="{r}"/>"#);
        }
        let _ = writeln!(out, "  </g>");
        let ly = PAD + n * cell + 18.0 * (k as f64 + 1.0);
        let _ = writeln!(
            out,
            r#"  <g fill="none" {style}><line x1="{PAD}" y1="{ly:.2}" x2="{x2:.2}" y2="{ly:.2}"/></g><text x="{tx:.2}" y="{ty:.2}" font-family="sans-serif" font-size="12">{} : {}</text>"#,
            escape(label),
            escape(&line.to_string()),
            x2 = PAD + 30.0,
            tx = PAD + 36.0,
            ty = ly + 4.0
        );
    }

    let _ = writeln!(out, r#"  <g id="points" font-family="sans-serif" font-size="13">"#);
    for (label, p, layer) in &spec.points {
        let (x, y) = at(xy(p)?);
        let r = if *layer == Layer::Result { 5.0 } else { 3.5 };
        let _ = writeln!(
            out,
            r#"    <circle data-label="{l}" cx="{x:.2}" cy="{y:.2}" r="{r}" fill="{f}"/><text x="{tx:.2}" y="{ty:.2}" fill="{f}">{l}</text>"#,
            l = escape(label),
            f = point_fill(*layer),
            tx = x + 6.0,
            ty = y - 8.0
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
