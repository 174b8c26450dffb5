//! SVG line plot of the reciprocal score series, with the target pair
//! marked by a vertical red line.

use std::fmt::Write;

use anyhow::Result;
use ccuc::analysis::{reciprocal_series, SequenceReport};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Picks a tick step of 1, 2 or 5 times a power of ten giving about `target` ticks.
fn nice_step(span: f64, target: f64) -> f64 {
    let raw = (span / target).max(f64::MIN_POSITIVE);
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let nice = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * mag
}

pub fn reciprocal_svg(report: &SequenceReport, cap: f64) -> Result<String> {
    let points = reciprocal_series(&report.pairs, cap)?;
    let n = points.len();
    let y_max = points.iter().map(|p| p.value).fold(1.0f64, f64::max) * 1.1;
    let x_span = (n.saturating_sub(1)).max(1) as f64;
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |t: f64| LEFT + t / x_span * plot_w;
    let sy = |v: f64| TOP + plot_h - v / y_max * plot_h;

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    )?;
    writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#)?;
    writeln!(
        svg,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
        WIDTH / 2.0,
        escape(&report.id)
    )?;

    // axes
    writeln!(
        svg,
        r#"<path d="M{LEFT:.2},{TOP:.2} V{:.2} H{:.2}" fill="none" stroke="black"/>"#,
        TOP + plot_h,
        LEFT + plot_w
    )?;
    let y_step = nice_step(y_max, 5.0);
    let mut v = 0.0;
    while v <= y_max + 1e-12 {
        let y = sy(v);
        writeln!(
            svg,
            r##"<line x1="{:.2}" y1="{y:.2}" x2="{LEFT:.2}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"##,
            LEFT - 5.0,
            LEFT - 8.0,
            y + 4.0,
            trim(v)
        )?;
        v += y_step;
    }
    let x_step = nice_step(x_span, 10.0).max(1.0);
    let mut t = 0.0;
    while t <= x_span + 1e-12 {
        let x = sx(t);
        writeln!(
            svg,
            r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            TOP + plot_h,
            TOP + plot_h + 5.0,
            TOP + plot_h + 18.0,
            trim(t)
        )?;
        t += x_step;
    }
    writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">pair t</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    )?;
    writeln!(
        svg,
        r#"<text x="16" y="{:.2}" text-anchor="middle" transform="rotate(-90 16 {:.2})">1 / {}</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0,
        report.mode
    )?;

    // target marker
    let tx = sx(report.target_index as f64);
    writeln!(
        svg,
        r#"<line x1="{tx:.2}" y1="{TOP:.2}" x2="{tx:.2}" y2="{:.2}" stroke="red" stroke-width="2"/>"#,
        TOP + plot_h
    )?;

    let coords: Vec<String> = points
        .iter()
        .enumerate()
        .map(|(i, p)| format!("{:.2},{:.2}", sx(i as f64), sy(p.value)))
        .collect();
    writeln!(
        svg,
        r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="1.5"/>"#,
        coords.join(" ")
    )?;
    for (i, p) in points.iter().enumerate() {
        let fill = if p.capped { "white" } else { "steelblue" };
        writeln!(
            svg,
            r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{fill}" stroke="steelblue"/>"#,
            sx(i as f64),
            sy(p.value)
        )?;
    }
    writeln!(svg, "</svg>")?;
    Ok(svg)
}

fn trim(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() || s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}
