use std::fmt::Write;

use super::{CopySide, Point, RectLayout};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    /// Pixels per layout unit.
    pub scale: f64,
    pub labels: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            scale: 20.0,
            labels: true,
        }
    }
}

const MARGIN: f64 = 10.0;

struct Frame {
    xmin: f64,
    ymax: f64,
    scale: f64,
}

impl Frame {
    fn x(&self, x: &Rational) -> f64 {
        (x.to_f64() - self.xmin) * self.scale + MARGIN
    }

    // SVG y grows downward
    fn y(&self, y: &Rational) -> f64 {
        (self.ymax - y.to_f64()) * self.scale + MARGIN
    }

    fn pt(&self, p: &Point) -> (f64, f64) {
        (self.x(&p.x), self.y(&p.y))
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Deterministic SVG drawing of a layout. Works on unvalidated layouts;
/// references that do not resolve are skipped.
pub fn render_svg(l: &RectLayout, opts: &SvgOptions) -> String {
    let f = Frame {
        xmin: l.rect.xmin.to_f64(),
        ymax: l.rect.ymax.to_f64(),
        scale: opts.scale,
    };
    let width = (l.rect.xmax.to_f64() - f.xmin) * opts.scale + 2.0 * MARGIN;
    let height = (f.ymax - l.rect.ymin.to_f64()) * opts.scale + 2.0 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect class="boundary" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        MARGIN,
        MARGIN,
        width - 2.0 * MARGIN,
        height - 2.0 * MARGIN
    );

    let mut alphas: Vec<_> = l.alpha.iter().collect();
    alphas.sort_by_key(|a| a.index);
    for a in &alphas {
        for copy in [CopySide::Prime, CopySide::Second] {
            let c = a.circle(copy);
            let (cx, cy) = f.pt(&c.center);
            let r = c.radius.to_f64() * opts.scale;
            let _ = writeln!(
                s,
                r#"<circle class="alpha {copy}" cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" fill="none" stroke="red"/>"#
            );
            // orientation arrowhead at the top of the circle: leftward for
            // the counterclockwise prime copy, rightward for the second
            let dir = if copy == CopySide::Prime { -1.0 } else { 1.0 };
            let (tx, ty) = (cx, cy - r);
            let _ = writeln!(
                s,
                r#"<path class="orientation" d="M {:.2} {:.2} L {:.2} {:.2} L {:.2} {:.2} Z" fill="red"/>"#,
                tx + dir * 5.0,
                ty,
                tx - dir * 3.0,
                ty - 4.0,
                tx - dir * 3.0,
                ty + 4.0
            );
            if opts.labels {
                let mark = if copy == CopySide::Prime { "'" } else { "''" };
                let _ = writeln!(
                    s,
                    r#"<text class="alpha-label" x="{cx:.2}" y="{:.2}" text-anchor="middle" font-size="12">alpha{mark}_{}</text>"#,
                    cy + r + 14.0,
                    a.index
                );
            }
        }
    }

    let mut betas: Vec<_> = l.beta.iter().collect();
    betas.sort_by_key(|b| b.index);
    for b in &betas {
        for (k, arc) in b.arcs.iter().enumerate() {
            let Some(points) = l.arc_points(arc) else {
                continue;
            };
            let coords: Vec<String> = points
                .iter()
                .map(|p| {
                    let (x, y) = f.pt(p);
                    format!("{x:.2},{y:.2}")
                })
                .collect();
            let _ = writeln!(
                s,
                r#"<polyline class="beta" data-beta="{}" data-arc="{}" points="{}" fill="none" stroke="blue"/>"#,
                b.index,
                k + 1,
                coords.join(" ")
            );
        }
    }

    let mut crossings: Vec<_> = l.crossings.iter().collect();
    crossings.sort_by(|a, b| a.id.cmp(&b.id));
    for x in crossings {
        let favourite = l.matching.contains(&x.id);
        let class = if favourite {
            "attachment favourite"
        } else {
            "attachment"
        };
        let fill = if favourite { "orange" } else { "black" };
        for copy in [CopySide::Prime, CopySide::Second] {
            let (px, py) = f.pt(x.point(copy));
            let h = if favourite { 4.0 } else { 3.0 };
            let _ = writeln!(
                s,
                r#"<path class="{class}" d="M {:.2} {py:.2} L {px:.2} {:.2} L {:.2} {py:.2} L {px:.2} {:.2} Z" fill="{fill}"/>"#,
                px - h,
                py - h,
                px + h,
                py + h
            );
            if opts.labels {
                let _ = writeln!(
                    s,
                    r#"<text class="crossing-label" x="{:.2}" y="{:.2}" font-size="11">{}</text>"#,
                    px + 4.0,
                    py - 4.0,
                    escape(&x.id)
                );
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
