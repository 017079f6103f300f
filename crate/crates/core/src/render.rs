//! SVG pictures of a path family on its lozenge tiling.
//!
//! Lattice point `(x, y)` is drawn at `x*v1 - y*v2` with `v1 = (s, 1/2)`,
//! `v2 = (s, -1/2)` and `s = sqrt(3)/2`, so right steps follow `v1` and down
//! steps follow `v2`. Each right step crosses a vertical lozenge carrying the
//! step label, each down step a left-tilted one; points not on any path get
//! a right-tilted lozenge.

use std::collections::HashSet;
use std::fmt::Write;

use crate::oracle::{PathFamily, RegionSpec};
use crate::paths::{step_label, LatticePoint};

pub const VERTICAL_FILL: &str = "#D2B48C";
pub const LEFT_FILL: &str = "#C04000";
pub const RIGHT_FILL: &str = "#FBCEB1";

const UNIT: f64 = 40.0;
const S: f64 = 0.866_025_403_784_438_6;
const V1: (f64, f64) = (S, 0.5);
const V2: (f64, f64) = (S, -0.5);
const V3: (f64, f64) = (0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SvgOptions {
    /// Draw only the tiling, without the path overlay.
    pub tiling_only: bool,
}

fn at(p: LatticePoint) -> (f64, f64) {
    (p.a as f64 * V1.0 - p.b as f64 * V2.0, p.a as f64 * V1.1 - p.b as f64 * V2.1)
}

fn add(p: (f64, f64), q: (f64, f64), t: f64) -> (f64, f64) {
    (p.0 + t * q.0, p.1 + t * q.1)
}

struct Canvas {
    body: String,
    min: (f64, f64),
    max: (f64, f64),
}

impl Canvas {
    fn new() -> Self {
        Self { body: String::new(), min: (f64::INFINITY, f64::INFINITY), max: (f64::NEG_INFINITY, f64::NEG_INFINITY) }
    }

    // y grows upwards in lattice coordinates and downwards in SVG
    fn pt(&mut self, p: (f64, f64)) -> String {
        let (x, y) = (p.0 * UNIT, -p.1 * UNIT);
        self.min = (self.min.0.min(x), self.min.1.min(y));
        self.max = (self.max.0.max(x), self.max.1.max(y));
        format!("{x:.2},{y:.2}")
    }

    fn polygon(&mut self, corners: &[(f64, f64)], class: &str, fill: &str) {
        let pts: Vec<String> = corners.iter().map(|&c| self.pt(c)).collect();
        let _ = writeln!(
            self.body,
            r#"<polygon class="{class}" points="{}" fill="{fill}" stroke="black" stroke-width="1"/>"#,
            pts.join(" ")
        );
    }

    fn rhombus(&mut self, centre: (f64, f64), u: (f64, f64), w: (f64, f64), class: &str, fill: &str) {
        let c = [
            add(add(centre, u, -0.5), w, -0.5),
            add(add(centre, u, 0.5), w, -0.5),
            add(add(centre, u, 0.5), w, 0.5),
            add(add(centre, u, -0.5), w, 0.5),
        ];
        self.polygon(&c, class, fill);
    }

    fn text(&mut self, p: (f64, f64), label: i64) {
        let xy = self.pt(p);
        let (x, y) = xy.split_once(',').expect("formatted point");
        let _ = writeln!(
            self.body,
            r#"<text class="label" x="{x}" y="{y}" font-size="14" text-anchor="middle" dominant-baseline="central">{label}</text>"#
        );
    }

    fn finish(self) -> String {
        let pad = UNIT;
        let (x0, y0) = if self.min.0.is_finite() { (self.min.0 - pad, self.min.1 - pad) } else { (-pad, -pad) };
        let (x1, y1) = if self.max.0.is_finite() { (self.max.0 + pad, self.max.1 + pad) } else { (pad, pad) };
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{:.2} {:.2} {:.2} {:.2}\">\n{}</svg>\n",
            x0,
            y0,
            x1 - x0,
            y1 - y0,
            self.body
        )
    }
}

/// Render `family` (assumed valid for `region`) as a standalone SVG document.
pub fn render_svg(region: &RegionSpec, family: &PathFamily, options: SvgOptions) -> String {
    let mut canvas = Canvas::new();
    let on_path: HashSet<LatticePoint> = family.paths().iter().flat_map(|p| p.vertices().iter().copied()).collect();

    let m = region.m() as i64;
    let x_max = 2 * m - 1 + region.k() as i64;
    let dents = region.dents().values();
    let y_lo = dents.first().copied().unwrap_or(0).min(0);
    let y_hi = (m - 1).max(dents.last().copied().unwrap_or(0));
    for x in 1..=x_max {
        for y in y_lo..=y_hi {
            let p = LatticePoint::new(x, y);
            if !on_path.contains(&p) {
                canvas.rhombus(at(p), V1, V2, "right", RIGHT_FILL);
            }
        }
    }
    for path in family.paths() {
        for w in path.vertices().windows(2) {
            let p = at(w[0]);
            if w[1].a == w[0].a + 1 {
                let centre = add(p, V1, 0.5);
                canvas.rhombus(centre, V3, V1, "vertical", VERTICAL_FILL);
                canvas.text(centre, step_label(w[0]));
            } else {
                canvas.rhombus(add(p, V2, 0.5), V3, V2, "left", LEFT_FILL);
            }
        }
    }
    if !options.tiling_only {
        for path in family.paths() {
            let pts: Vec<String> = path.vertices().iter().map(|&v| canvas.pt(at(v))).collect();
            let _ = writeln!(
                canvas.body,
                r#"<polyline class="path" points="{}" fill="none" stroke="white" stroke-width="3"/>"#,
                pts.join(" ")
            );
        }
    }
    for i in 0..region.m() {
        let e = at(region.end(i));
        canvas.polygon(&[add(e, V3, 0.3), add(e, V1, 0.35), add(e, V3, -0.3)], "dent", "black");
    }
    canvas.finish()
}
