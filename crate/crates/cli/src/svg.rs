//! τ₄(t, α) heatmap as a standalone SVG: one `rect` per grid point, a
//! single-hue ramp over the fixed range [0, 1], and min/max annotations.

use std::fmt::Write;

use djc::SweepRow;

use crate::csv::fmt;

const PLOT_W: f64 = 640.0;
const PLOT_H: f64 = 360.0;
const LEFT: f64 = 70.0;
const TOP: f64 = 50.0;
const BAR_W: f64 = 18.0;

/// Light to dark blue; luminance decreases monotonically.
const RAMP: [(f64, [f64; 3]); 3] = [
    (0.0, [247.0, 251.0, 255.0]),
    (0.5, [107.0, 174.0, 214.0]),
    (1.0, [8.0, 48.0, 107.0]),
];

pub fn ramp(value: f64) -> String {
    let v = if value.is_nan() {
        0.0
    } else {
        value.clamp(0.0, 1.0)
    };
    let (lo, hi) = if v <= RAMP[1].0 {
        (RAMP[0], RAMP[1])
    } else {
        (RAMP[1], RAMP[2])
    };
    let s = (v - lo.0) / (hi.0 - lo.0);
    let c: Vec<u8> = (0..3)
        .map(|i| (lo.1[i] + s * (hi.1[i] - lo.1[i])).round() as u8)
        .collect();
    format!("#{:02x}{:02x}{:02x}", c[0], c[1], c[2])
}

fn extreme(rows: &[SweepRow], pick_max: bool) -> &SweepRow {
    let mut best = &rows[0];
    for r in rows {
        let (a, b) = (r.invariants.tau4, best.invariants.tau4);
        if (pick_max && a > b) || (!pick_max && a < b) {
            best = r;
        }
    }
    best
}

fn short(x: f64) -> String {
    format!("{x:.4}")
}

/// Render rows in `t`-outer, `α`-inner order over `nt × na` points.
pub fn render(rows: &[SweepRow], nt: usize, na: usize, title: &str) -> String {
    assert_eq!(rows.len(), nt * na, "grid shape");
    assert!(!rows.is_empty(), "empty grid");
    let cw = PLOT_W / nt as f64;
    let ch = PLOT_H / na as f64;
    let width = LEFT + PLOT_W + 110.0;
    let height = TOP + PLOT_H + 90.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<title>{title}</title>"#);
    let _ = writeln!(
        s,
        r#"<defs><linearGradient id="ramp" x1="0" y1="1" x2="0" y2="0"><stop offset="0" stop-color="{}"/><stop offset="0.5" stop-color="{}"/><stop offset="1" stop-color="{}"/></linearGradient></defs>"#,
        ramp(0.0),
        ramp(0.5),
        ramp(1.0)
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{LEFT}" y="24" font-size="15">{title}</text>"#
    );

    let _ = writeln!(s, r#"<g id="cells" shape-rendering="crispEdges">"#);
    for (idx, row) in rows.iter().enumerate() {
        let (i, j) = (idx / na, idx % na);
        let x = LEFT + i as f64 * cw;
        let y = TOP + PLOT_H - (j + 1) as f64 * ch;
        let _ = writeln!(
            s,
            r#"<rect class="cell" x="{x}" y="{y}" width="{cw}" height="{ch}" fill="{}" data-t="{}" data-alpha="{}" data-tau4="{}"/>"#,
            ramp(row.invariants.tau4),
            fmt(row.t),
            fmt(row.alpha),
            fmt(row.invariants.tau4)
        );
    }
    let _ = writeln!(s, "</g>");

    // frame and axes
    let (x0, x1, y0, y1) = (LEFT, LEFT + PLOT_W, TOP + PLOT_H, TOP);
    let _ = writeln!(
        s,
        r#"<rect x="{x0}" y="{y1}" width="{PLOT_W}" height="{PLOT_H}" fill="none" stroke="black"/>"#
    );
    let (t_first, t_last) = (rows[0].t, rows[rows.len() - 1].t);
    let (a_first, a_last) = (rows[0].alpha, rows[na - 1].alpha);
    for (frac, anchor) in [(0.0, "start"), (0.5, "middle"), (1.0, "end")] {
        let x = x0 + frac * PLOT_W;
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{}" text-anchor="{anchor}">{}</text>"#,
            y0 + 16.0,
            short(t_first + frac * (t_last - t_first))
        );
        let y = y0 - frac * PLOT_H;
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{y}" text-anchor="end" dominant-baseline="middle">{}</text>"#,
            x0 - 6.0,
            short(a_first + frac * (a_last - a_first))
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">t</text>"#,
        x0 + PLOT_W / 2.0,
        y0 + 34.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle" transform="rotate(-90 {} {})">α</text>"#,
        x0 - 48.0,
        TOP + PLOT_H / 2.0,
        x0 - 48.0,
        TOP + PLOT_H / 2.0
    );

    // colour scale
    let bx = x1 + 24.0;
    let _ = writeln!(
        s,
        r#"<rect id="scale" x="{bx}" y="{y1}" width="{BAR_W}" height="{PLOT_H}" fill="url(#ramp)" stroke="black"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" dominant-baseline="middle">1</text>"#,
        bx + BAR_W + 6.0,
        y1
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" dominant-baseline="middle">0</text>"#,
        bx + BAR_W + 6.0,
        y0
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">τ₄</text>"#,
        bx + BAR_W / 2.0,
        y1 - 10.0
    );

    let lo = extreme(rows, false);
    let hi = extreme(rows, true);
    for (k, (label, r)) in [("max", hi), ("min", lo)].into_iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<text class="annotation" x="{x0}" y="{}" data-{label}="{}">{label} τ₄ = {} at t = {}, α = {}</text>"#,
            y0 + 56.0 + 16.0 * k as f64,
            fmt(r.invariants.tau4),
            fmt(r.invariants.tau4),
            short(r.t),
            short(r.alpha)
        );
    }
    s.push_str("</svg>\n");
    s
}
