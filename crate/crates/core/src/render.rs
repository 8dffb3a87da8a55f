//! Static SVG figures of bodies, enclosing triangles and trisections.
//!
//! Output is byte-for-byte deterministic: coordinates are printed with six
//! decimals and the y axis is flipped so the figure reads with y up.

use std::f64::consts::TAU;
use std::fmt::Write;

use crate::bodies::{OutlinePiece, SymmetricBody};
use crate::error::Result;
use crate::geometry::Point;
use crate::trisection::{smallest_enclosing_triangle, standard_trisection, TrisectionRecord};

/// What to draw on top of the body outline.
#[derive(Clone, Copy, Debug)]
pub enum Figure<'a> {
    /// Outline only.
    Body,
    /// Outline, enclosing triangle and inscribed ball.
    Triangle,
    /// The triangle figure plus the standard trisection.
    Standard,
    /// The triangle figure plus the given trisection's curves.
    Trisection(&'a TrisectionRecord),
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn xy(p: Point) -> (String, String) {
    (num(p.x), num(-p.y))
}

struct Svg {
    out: String,
}

impl Svg {
    fn line(&mut self, class: &str, a: Point, b: Point) {
        let ((x1, y1), (x2, y2)) = (xy(a), xy(b));
        let _ = writeln!(self.out, r#"  <line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    }

    fn polyline(&mut self, class: &str, pts: &[Point]) {
        let coords: Vec<String> = pts.iter().map(|&p| xy(p)).map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(self.out, r#"  <polyline class="{class}" points="{}"/>"#, coords.join(" "));
    }

    fn polygon(&mut self, class: &str, pts: &[Point]) {
        let coords: Vec<String> = pts.iter().map(|&p| xy(p)).map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(self.out, r#"  <polygon class="{class}" points="{}"/>"#, coords.join(" "));
    }

    fn circle(&mut self, class: &str, c: Point, r: f64) {
        let (cx, cy) = xy(c);
        let _ = writeln!(self.out, r#"  <circle class="{class}" cx="{cx}" cy="{cy}" r="{}"/>"#, num(r));
    }

    /// Counterclockwise arc in body coordinates. The y flip turns it
    /// clockwise on screen, hence sweep flag 0.
    fn arc(&mut self, from: Point, to: Point, center: Point, radius: f64) {
        let span = ((to - center).angle() - (from - center).angle()).rem_euclid(TAU);
        let large = u8::from(span > TAU / 2.0);
        let ((x1, y1), (x2, y2)) = (xy(from), xy(to));
        let r = num(radius);
        let _ = writeln!(self.out, r#"  <path class="arc" d="M {x1} {y1} A {r} {r} 0 {large} 0 {x2} {y2}"/>"#);
    }

    fn label(&mut self, at: Point, text: &str) {
        let (x, y) = xy(at);
        let _ = writeln!(self.out, r#"  <text class="label" x="{x}" y="{y}">{text}</text>"#);
    }
}

fn draw_curves(svg: &mut Svg, curves: &[Vec<Point>]) {
    for (k, curve) in curves.iter().enumerate() {
        if curve.len() == 2 {
            svg.line("curve", curve[0], curve[1]);
        } else {
            svg.polyline("curve", curve);
        }
        if let Some(&end) = curve.last() {
            svg.circle("endpoint", end, 0.012);
            svg.label(end * 1.08, &format!("v{}", k + 1));
        }
    }
    if let Some(c) = curves.first().and_then(|c| c.first()) {
        svg.circle("common-point", *c, 0.012);
    }
}

/// Renders `figure` for `body` as a standalone SVG document.
pub fn render_svg(body: &SymmetricBody, figure: Figure<'_>) -> Result<String> {
    let tri = smallest_enclosing_triangle(body);
    let with_triangle = !matches!(figure, Figure::Body);
    let extent = if with_triangle { 2.0 * tri.apothem } else { 0.0f64 }.max(body.max_radius()) * 1.15;
    let size = num(2.0 * extent);
    let corner = num(-extent);
    let mut svg = Svg { out: String::new() };
    let _ = writeln!(
        svg.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{corner} {corner} {size} {size}" width="600" height="600">"#
    );
    let _ = writeln!(svg.out, "  <title>{}</title>", body.label());
    svg.out.push_str(
        "  <style>line,polyline,polygon,path,circle{fill:none;stroke:black;stroke-width:0.004}\
         .triangle-edge{stroke:gray}.ball{stroke:gray;stroke-dasharray:0.02}\
         .curve{stroke:crimson;stroke-width:0.006}.endpoint,.common-point{fill:crimson;stroke:none}\
         .label{font-size:0.06px;font-family:sans-serif}</style>\n",
    );

    if body.outline().is_empty() {
        svg.polygon("body", body.boundary().points());
    } else {
        for piece in body.outline() {
            match *piece {
                OutlinePiece::Segment { from, to } => svg.line("edge", from, to),
                OutlinePiece::Arc { from, to, center, radius } => svg.arc(from, to, center, radius),
            }
        }
    }

    if with_triangle {
        let v = tri.vertices();
        for k in 0..3 {
            svg.line("triangle-edge", v[k], v[(k + 1) % 3]);
        }
        svg.circle("ball", tri.center, tri.apothem);
    }
    match figure {
        Figure::Body | Figure::Triangle => {}
        Figure::Standard => {
            let standard = standard_trisection(body)?;
            draw_curves(&mut svg, standard.curves());
        }
        Figure::Trisection(record) => draw_curves(&mut svg, &record.curves),
    }
    svg.out.push_str("</svg>\n");
    Ok(svg.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{make_h_tilde, make_regular_polygon};

    #[test]
    fn hexagon_standard_has_three_segments_from_origin() {
        let hex = make_regular_polygon(2).unwrap();
        let svg = render_svg(&hex, Figure::Standard).unwrap();
        let curves: Vec<&str> = svg.lines().filter(|l| l.contains(r#"class="curve""#)).collect();
        assert_eq!(curves.len(), 3);
        assert!(curves.iter().all(|l| l.contains(r#"x1="0.000000" y1="0.000000""#)));
        assert!(svg.contains(">v3<"));
    }

    #[test]
    fn triangle_figure_has_three_triangle_edges() {
        let svg = render_svg(&make_regular_polygon(3).unwrap(), Figure::Triangle).unwrap();
        assert_eq!(svg.matches(r#"class="triangle-edge""#).count(), 3);
        assert_eq!(svg.matches(r#"class="curve""#).count(), 0);
    }

    #[test]
    fn h_tilde_outline_is_three_edges_and_three_arcs() {
        let svg = render_svg(&make_h_tilde().unwrap(), Figure::Body).unwrap();
        assert_eq!(svg.matches(r#"class="edge""#).count(), 3);
        assert_eq!(svg.matches(r#"class="arc""#).count(), 3);
        assert!(!svg.contains("-0.000000"));
    }

    #[test]
    fn output_is_deterministic() {
        let body = make_h_tilde().unwrap();
        assert_eq!(render_svg(&body, Figure::Standard).unwrap(), render_svg(&body, Figure::Standard).unwrap());
    }
}
