//! Minimal static SVG line charts for scan tables. No dependencies, fully
//! deterministic output.

use std::fmt::Write as _;

use crate::scan::ScanTable;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 50.0;
const PALETTE: [&str; 5] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];

fn fmt_coord(v: f64) -> String {
    format!("{v:.2}")
}

fn fmt_tick(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else if v.abs() >= 1e-3 && v.abs() < 1e4 {
        let s = format!("{v:.4}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        s.to_string()
    } else {
        format!("{v:.2e}")
    }
}

/// Renders a polyline chart of every column against the first column.
/// `title` names the chart; the axis labels come from the column headers.
pub fn render_chart(title: &str, table: &ScanTable) -> String {
    let n_series = table.columns.len().saturating_sub(1);
    let xs: Vec<f64> = table.rows.iter().map(|r| r[0]).collect();
    let (x_min, x_max) = bounds(&xs);
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for row in &table.rows {
        for &v in &row[1..] {
            y_min = y_min.min(v);
            y_max = y_max.max(v);
        }
    }
    if !y_min.is_finite() || y_min == y_max {
        y_min -= 0.5;
        y_max += 0.5;
    }
    let pad = 0.05 * (y_max - y_min);
    let (y_min, y_max) = (y_min - pad, y_max + pad);

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let to_px = |x: f64, y: f64| -> (f64, f64) {
        (
            MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w,
            MARGIN_TOP + (y_max - y) / (y_max - y_min) * plot_h,
        )
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" \
         font-family=\"sans-serif\" font-size=\"13\">"
    );
    let _ = writeln!(
        svg,
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">{}</text>",
        WIDTH / 2.0,
        escape(title)
    );

    // axes
    let (x0, y0) = (MARGIN_LEFT, MARGIN_TOP + plot_h);
    let _ = writeln!(
        svg,
        "<path d=\"M {x0} {MARGIN_TOP} L {x0} {y0} L {} {y0}\" stroke=\"black\" fill=\"none\"/>",
        MARGIN_LEFT + plot_w
    );

    // ticks: 5 per axis
    for i in 0..=4 {
        let fx = i as f64 / 4.0;
        let xv = x_min + fx * (x_max - x_min);
        let yv = y_min + fx * (y_max - y_min);
        let (px, _) = to_px(xv, y_min);
        let (_, py) = to_px(x_min, yv);
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{y0}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
            fmt_coord(px),
            fmt_coord(px),
            fmt_coord(y0 + 5.0)
        );
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
            fmt_coord(px),
            fmt_coord(y0 + 20.0),
            fmt_tick(xv)
        );
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{x0}\" y2=\"{}\" stroke=\"black\"/>",
            fmt_coord(x0 - 5.0),
            fmt_coord(py),
            fmt_coord(py)
        );
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\" dominant-baseline=\"middle\">{}</text>",
            fmt_coord(x0 - 9.0),
            fmt_coord(py),
            fmt_tick(yv)
        );
    }

    // x-axis label
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 10.0,
        escape(table.columns[0])
    );

    // series polylines
    for s in 0..n_series {
        let color = PALETTE[s % PALETTE.len()];
        let mut d = String::new();
        for row in &table.rows {
            let (px, py) = to_px(row[0], row[s + 1]);
            let _ = write!(d, "{},{} ", fmt_coord(px), fmt_coord(py));
        }
        let _ = writeln!(
            svg,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
            d.trim_end()
        );
    }

    // legend, top-right inside the plot area
    for s in 0..n_series {
        let color = PALETTE[s % PALETTE.len()];
        let ly = MARGIN_TOP + 12.0 + 18.0 * s as f64;
        let lx = MARGIN_LEFT + plot_w - 120.0;
        let _ = writeln!(
            svg,
            "<line x1=\"{lx}\" y1=\"{ly}\" x2=\"{}\" y2=\"{ly}\" stroke=\"{color}\" stroke-width=\"2\"/>",
            lx + 24.0
        );
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{}\" dominant-baseline=\"middle\">{}</text>",
            lx + 30.0,
            ly,
            escape(table.columns[s + 1])
        );
    }

    svg.push_str("</svg>\n");
    svg
}

fn bounds(xs: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &x in xs {
        lo = lo.min(x);
        hi = hi.max(x);
    }
    if lo == hi {
        (lo - 0.5, hi + 0.5)
    } else {
        (lo, hi)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scan::{run_scan, ScanConfig, ScanKind};

    #[test]
    fn chart_is_wellformed_and_deterministic() {
        let mut c = ScanConfig::defaults(ScanKind::Alpha);
        c.points = 17;
        let table = run_scan(&c).unwrap();
        let svg = render_chart("alpha scan", &table);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<polyline").count(), 4);
        assert!(svg.contains("alpha_rad"));
        assert_eq!(svg, render_chart("alpha scan", &table));
    }

    #[test]
    fn degenerate_flat_series_still_renders() {
        let table = ScanTable {
            columns: vec!["x", "y"],
            rows: vec![vec![0.0, 1.0], vec![1.0, 1.0]],
            summary: None,
        };
        let svg = render_chart("flat", &table);
        assert!(svg.contains("<polyline"));
    }
}
