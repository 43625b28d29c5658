//! SVG rendering of wall arrangements. Geometry stays exact up to this
//! point; coordinates become decimals only when written out.

use std::collections::BTreeMap;
use std::fmt::Write;

use flopkit_core::arrangement::{Wall, WallArrangement, Window, Q};
use num_rational::Ratio;

#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub window: Window,
    /// Stroke width per wall label (1D only).
    pub stroke_by_label: BTreeMap<u32, f64>,
    /// Pixels per unit.
    pub scale: f64,
}

impl RenderSpec {
    pub fn new(window: Window, scale: f64) -> Result<Self, String> {
        if !(scale.is_finite() && scale > 0.0) {
            return Err(format!("scale must be positive, got {scale}"));
        }
        // label 1 heaviest, label 6 lightest
        let stroke_by_label = (1..=6).map(|l| (l, 0.5 + 0.5 * f64::from(7 - l))).collect();
        Ok(RenderSpec {
            window,
            stroke_by_label,
            scale,
        })
    }
}

fn to_f64(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn header(out: &mut String, width: f64, height: f64, spec: &RenderSpec, one_dim: bool) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">"#,
        w = num(width),
        h = num(height)
    );
    let _ = writeln!(out, "<style>");
    let _ = writeln!(out, ".wall {{ stroke: black; fill: none; }}");
    if one_dim {
        for (label, width) in &spec.stroke_by_label {
            let _ = writeln!(out, ".label-{label} {{ stroke-width: {}; }}", num(*width));
        }
        let _ = writeln!(out, ".axis {{ stroke: gray; stroke-dasharray: 4 2; }}");
        let _ = writeln!(out, "text {{ font: 12px sans-serif; text-anchor: middle; }}");
    } else {
        let _ = writeln!(out, ".wall {{ stroke-width: 1; }}");
    }
    let _ = writeln!(out, "</style>");
}

pub fn render(arrangement: &WallArrangement, spec: &RenderSpec) -> String {
    let window = &spec.window;
    let mut out = String::new();
    if arrangement.dimension == 1 {
        let (lo, hi) = (window.lo[0], window.hi[0]);
        let width = to_f64(hi - lo) * spec.scale;
        let height = spec.scale / 2.0;
        header(&mut out, width, height, spec, true);
        let mid = num(height / 2.0);
        let _ = writeln!(
            out,
            r#"<polyline class="axis" points="0,{mid} {},{mid}"/>"#,
            num(width)
        );
        let mut walls: Vec<&Wall> = arrangement
            .walls
            .iter()
            .filter(|w| lo <= w.position() && w.position() < hi)
            .collect();
        walls.sort_by_key(|w| w.position());
        for w in walls {
            let x = num(to_f64(w.position() - lo) * spec.scale);
            let label = w.label.unwrap_or(1);
            let _ = writeln!(
                out,
                r#"<polyline class="wall label-{label}" points="{x},{top} {x},{bottom}"/>"#,
                top = num(height * 0.1),
                bottom = num(height * 0.7),
            );
            let _ = writeln!(out, r#"<text x="{x}" y="{}">{label}</text>"#, num(height * 0.9));
        }
    } else {
        let (x0, y1) = (window.lo[0], window.hi[1]);
        let width = to_f64(window.hi[0] - x0) * spec.scale;
        let height = to_f64(y1 - window.lo[1]) * spec.scale;
        header(&mut out, width, height, spec, false);
        let point = |p: (Q, Q)| {
            format!(
                "{},{}",
                num(to_f64(p.0 - x0) * spec.scale),
                num(to_f64(y1 - p.1) * spec.scale)
            )
        };
        for w in &arrangement.walls {
            if let Some([a, b]) = w.segment_in(window) {
                let _ = writeln!(
                    out,
                    r#"<polyline class="wall" data-normal="{},{}" data-level="{}" points="{} {}"/>"#,
                    w.normal[0],
                    w.normal[1],
                    w.level,
                    point(a),
                    point(b)
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

pub fn parse_window(s: &str) -> Result<Window, String> {
    let parts: Vec<Q> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<Ratio<i64>>()
                .map_err(|_| format!("bad number `{t}` in window"))
        })
        .collect::<Result<_, _>>()?;
    let (lo, hi) = match parts.len() {
        2 => (vec![parts[0]], vec![parts[1]]),
        4 => (vec![parts[0], parts[1]], vec![parts[2], parts[3]]),
        n => return Err(format!("window needs 2 (lo,hi) or 4 (x0,y0,x1,y1) numbers, got {n}")),
    };
    Window::new(lo, hi).map_err(|e| e.to_string())
}
