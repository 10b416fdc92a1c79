//! Minimal SVG rendering of a horizontal section.

use std::fmt::Write;

use crate::equilateral::Disc;

const SCALE: f64 = 200.0;

/// Renders discs as circles, labelled by index, with the y-axis pointing up.
pub fn discs_to_svg(discs: &[Option<Disc>], z0: f64) -> String {
    let present: Vec<(usize, Disc)> = discs
        .iter()
        .enumerate()
        .filter_map(|(i, d)| d.map(|d| (i, d)))
        .collect();
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (-0.5f64, -0.5f64, 0.5f64, 0.5f64);
    for (_, d) in &present {
        lo_x = lo_x.min(d.cx - d.rho);
        hi_x = hi_x.max(d.cx + d.rho);
        lo_y = lo_y.min(d.cy - d.rho);
        hi_y = hi_y.max(d.cy + d.rho);
    }
    let pad = 0.1;
    let (w, h) = (
        (hi_x - lo_x + 2.0 * pad) * SCALE,
        (hi_y - lo_y + 2.0 * pad) * SCALE,
    );
    let px = |x: f64| (x - lo_x + pad) * SCALE;
    let py = |y: f64| (hi_y + pad - y) * SCALE;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    );
    let _ = writeln!(s, r#"<title>section z = {z0}</title>"#);
    for (i, d) in &present {
        let _ = writeln!(
            s,
            r#"<circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="1"/>"#,
            px(d.cx),
            py(d.cy),
            d.rho * SCALE
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" font-size="12" text-anchor="middle">{i}</text>"#,
            px(d.cx),
            py(d.cy)
        );
    }
    s.push_str("</svg>\n");
    s
}
