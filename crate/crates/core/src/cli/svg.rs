//! Deterministic SVG 1.1 pictures. Layout only; no numeric data is altered.
//!
//! Chip configurations draw every loop as a circle between its two vertices, with
//! the `m` arc as the lower half and the `ell` arc as the upper half, each
//! stretched to a semicircle. Lattice paths draw coordinate `j` as the polyline
//! through `(i, p_i(j))`.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::divisor::DivisorSeq;
use crate::path::LatticePath;
use crate::rational::Rational;

pub const MARGIN: f64 = 40.0;
pub const LOOP_RADIUS: f64 = 50.0;
pub const LABEL_BAND: f64 = 30.0;
pub const VERTEX_RADIUS: f64 = 3.5;
pub const CHIP_RADIUS: f64 = 6.0;
pub const GRID_SCALE: f64 = 40.0;
pub const CUSP_RADIUS: f64 = 3.0;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Style {
    ChipConfig,
    LatticePath,
}

fn header(out: &mut String, width: f64, height: f64) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.2}\" height=\"{height:.2}\" viewBox=\"0 0 {width:.2} {height:.2}\">"
    );
    let _ = writeln!(out, "<rect width=\"{width:.2}\" height=\"{height:.2}\" fill=\"white\"/>");
}

/// Point at counter-clockwise distance `s` from the left vertex of a loop.
fn loop_point(cx: f64, cy: f64, s: &Rational, ell: &Rational, m: &Rational) -> (f64, f64) {
    if s <= m {
        let theta = PI * (s / m).to_f64();
        (cx - LOOP_RADIUS * theta.cos(), cy + LOOP_RADIUS * theta.sin())
    } else {
        let theta = PI * ((s - m) / ell).to_f64();
        (cx + LOOP_RADIUS * theta.cos(), cy - LOOP_RADIUS * theta.sin())
    }
}

pub fn render_chip_config(c: &DivisorSeq) -> String {
    let graph = c.graph();
    let g = graph.genus();
    let width = 2.0 * MARGIN + 2.0 * LOOP_RADIUS * g as f64;
    let height = 2.0 * MARGIN + 2.0 * LOOP_RADIUS + 2.0 * LABEL_BAND;
    let cy = MARGIN + LABEL_BAND + LOOP_RADIUS;
    let vx = |i: usize| MARGIN + 2.0 * LOOP_RADIUS * i as f64;

    let mut out = String::new();
    header(&mut out, width, height);
    out.push_str("<g class=\"loops\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n");
    for (idx, lp) in graph.loops().iter().enumerate() {
        let cx = vx(idx) + LOOP_RADIUS;
        let _ = writeln!(
            out,
            "<circle class=\"loop\" data-loop=\"{}\" data-ell=\"{}\" data-m=\"{}\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{LOOP_RADIUS:.2}\"/>",
            idx + 1,
            lp.ell,
            lp.m
        );
    }
    out.push_str("</g>\n<g class=\"labels\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n");
    for (idx, lp) in graph.loops().iter().enumerate() {
        let cx = vx(idx) + LOOP_RADIUS;
        let _ = writeln!(out, "<text x=\"{cx:.2}\" y=\"{:.2}\">{}</text>", MARGIN + LABEL_BAND / 2.0, lp.ell);
        let _ = writeln!(out, "<text x=\"{cx:.2}\" y=\"{:.2}\">{}</text>", cy + LOOP_RADIUS + LABEL_BAND / 2.0, lp.m);
    }
    for i in 0..=g {
        let _ = writeln!(out, "<text x=\"{:.2}\" y=\"{:.2}\">v{i}</text>", vx(i), cy + LABEL_BAND / 2.0);
    }
    let _ = writeln!(
        out,
        "<text class=\"head\" x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"start\">d0 = {}</text>",
        MARGIN / 4.0,
        height - MARGIN / 2.0,
        c.d0()
    );
    out.push_str("</g>\n<g class=\"vertices\" fill=\"black\">\n");
    for i in 0..=g {
        let _ = writeln!(out, "<circle cx=\"{:.2}\" cy=\"{cy:.2}\" r=\"{VERTEX_RADIUS:.2}\"/>", vx(i));
    }
    out.push_str("</g>\n<g class=\"chips\" fill=\"#d62728\" stroke=\"black\">\n");
    if c.d0() != 0 {
        let _ = writeln!(
            out,
            "<circle class=\"chip\" data-loop=\"0\" data-count=\"{}\" cx=\"{:.2}\" cy=\"{:.2}\" r=\"{CHIP_RADIUS:.2}\"/>",
            c.d0(),
            vx(0),
            cy - 2.0 * CHIP_RADIUS
        );
    }
    for (idx, (pos, lp)) in c.positions().iter().zip(graph.loops()).enumerate() {
        if pos.is_zero() {
            continue;
        }
        let (x, y) = loop_point(vx(idx) + LOOP_RADIUS, cy, pos, &lp.ell, &lp.m);
        let _ = writeln!(
            out,
            "<circle class=\"chip\" data-loop=\"{}\" data-position=\"{pos}\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{CHIP_RADIUS:.2}\"/>",
            idx + 1
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

pub fn render_lattice_path(path: &LatticePath) -> String {
    let g = path.len();
    let coords = path.points().iter().flatten().copied();
    let top = coords.clone().max().unwrap_or(0).max(0);
    let bottom = coords.min().unwrap_or(0).min(0);
    let width = 2.0 * MARGIN + GRID_SCALE * g as f64;
    let height = 2.0 * MARGIN + GRID_SCALE * (top - bottom) as f64;
    let px = |i: usize| MARGIN + GRID_SCALE * i as f64;
    let py = |v: i64| MARGIN + GRID_SCALE * (top - v) as f64;

    let mut out = String::new();
    header(&mut out, width, height);
    out.push_str("<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n");
    for v in bottom..=top {
        let _ =
            writeln!(out, "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"/>", px(0), py(v), px(g), py(v));
    }
    for i in 0..=g {
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"/>",
            px(i),
            py(top),
            px(i),
            py(bottom)
        );
    }
    out.push_str("</g>\n");
    let _ = writeln!(
        out,
        "<line class=\"axis\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" stroke-width=\"1.5\"/>",
        px(0),
        py(0),
        px(g),
        py(0)
    );
    for j in 1..=path.dim() {
        let trace = path.coordinate_trace(j);
        let color = PALETTE[(j - 1) % PALETTE.len()];
        let cusps: Vec<String> = trace.iter().enumerate().map(|(i, v)| format!("{i},{v}")).collect();
        let points: Vec<String> =
            trace.iter().enumerate().map(|(i, &v)| format!("{:.2},{:.2}", px(i), py(v))).collect();
        let _ = writeln!(
            out,
            "<polyline class=\"coordinate\" data-coordinate=\"{j}\" data-cusps=\"{}\" points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>",
            cusps.join(" "),
            points.join(" ")
        );
        let _ = writeln!(out, "<g class=\"cusps\" fill=\"{color}\">");
        for (i, &v) in trace.iter().enumerate() {
            let _ = writeln!(out, "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{CUSP_RADIUS:.2}\"/>", px(i), py(v));
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
