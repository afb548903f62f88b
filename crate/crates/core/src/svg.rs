//! Minimal deterministic SVG for planar colored configurations.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geometry::planar::convex_hull_indices;
use crate::geometry::rational::{to_f64, RationalPoint};
use crate::nerve::ColoredConfig;

pub const CANVAS: f64 = 800.0;
const MARGIN: f64 = 60.0;
const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

/// Points as dots, each class hull as a translucent polygon (a segment for
/// two points), and a legend. Colors follow the sorted label order.
pub fn render_svg(config: &ColoredConfig) -> Result<String> {
    if config.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: config.dim(),
        });
    }
    let xy: Vec<(f64, f64)> = config
        .points()
        .iter()
        .map(|p| (to_f64(&p.coords[0]), to_f64(&p.coords[1])))
        .collect();
    let (min_x, max_x) = bounds(xy.iter().map(|p| p.0));
    let (min_y, max_y) = bounds(xy.iter().map(|p| p.1));
    let span = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
    let scale = (CANVAS - 2.0 * MARGIN) / span;
    // y grows downwards in SVG
    let map = |(x, y): (f64, f64)| (MARGIN + (x - min_x) * scale, CANVAS - MARGIN - (y - min_y) * scale);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#,
        c = CANVAS
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let classes = config.classes();
    for (k, (label, pts)) in classes.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let hull: Vec<&RationalPoint> = convex_hull_indices(pts).into_iter().map(|i| &pts[i]).collect();
        let corners: Vec<String> = hull
            .iter()
            .map(|p| {
                let (x, y) = map((to_f64(&p.coords[0]), to_f64(&p.coords[1])));
                format!("{x:.2},{y:.2}")
            })
            .collect();
        match corners.len() {
            0 | 1 => {}
            2 => {
                let _ = writeln!(
                    out,
                    r#"<polyline class="hull" data-label="{}" points="{}" stroke="{color}" stroke-width="3" stroke-opacity="0.6" fill="none"/>"#,
                    escape(label),
                    corners.join(" ")
                );
            }
            _ => {
                let _ = writeln!(
                    out,
                    r#"<polygon class="hull" data-label="{}" points="{}" fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="1.5"/>"#,
                    escape(label),
                    corners.join(" ")
                );
            }
        }
    }
    for (p, label) in xy.iter().zip(config.colors()) {
        let k = classes.keys().position(|l| l == label).expect("label has a class");
        let (x, y) = map(*p);
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="{}"/>"#,
            PALETTE[k % PALETTE.len()]
        );
    }
    for (k, label) in classes.keys().enumerate() {
        let y = 20.0 + 18.0 * k as f64;
        let _ = writeln!(
            out,
            r#"<rect x="10" y="{:.2}" width="12" height="12" fill="{}"/><text x="28" y="{:.2}" font-family="monospace" font-size="13">{}</text>"#,
            y - 10.0,
            PALETTE[k % PALETTE.len()],
            y,
            escape(label)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn bounds(it: impl Iterator<Item = f64>) -> (f64, f64) {
    it.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
