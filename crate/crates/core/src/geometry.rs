//! Planar primitives: points, convex polygons, regions, hulls, areas and
//! diameters.
//!
//! Lengths are O(1) for unit-area bodies, so predicates use the absolute
//! slack [`EPS`].

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Predicate slack in length units.
pub const EPS: f64 = 1e-9;

/// Sine threshold below which three hull points count as collinear.
const COLLINEAR_SIN: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn polar(r: f64, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(r * c, r * s)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    /// Polar angle in `[0, 2π)`.
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x).rem_euclid(TAU)
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        self + (other - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Orientation of `c` relative to the directed line `a -> b` (twice the
/// signed triangle area).
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// Rotation about the origin.
pub fn rotate(pt: Point, angle: f64) -> Point {
    let (s, c) = angle.sin_cos();
    Point::new(c * pt.x - s * pt.y, s * pt.x + c * pt.y)
}

/// Shoelace area with sign: positive for counterclockwise boundaries.
pub fn signed_area(boundary: &[Point]) -> f64 {
    let n = boundary.len();
    if n < 3 {
        return 0.0;
    }
    let mut twice = 0.0;
    for i in 0..n {
        twice += boundary[i].cross(boundary[(i + 1) % n]);
    }
    0.5 * twice
}

/// Absolute shoelace area of a closed, non-self-intersecting boundary.
/// Self-intersection is not checked.
pub fn polygon_area(boundary: &[Point]) -> f64 {
    signed_area(boundary).abs()
}

/// Distance from `p` to the closed segment `[a, b]`.
pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let e = b - a;
    let len2 = e.dot(e);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(e) / len2).clamp(0.0, 1.0);
    p.dist(a + e * t)
}

/// Symmetric Hausdorff distance between two closed polylines.
pub fn hausdorff_distance(a: &[Point], b: &[Point]) -> f64 {
    fn one_sided(from: &[Point], to: &[Point]) -> f64 {
        let m = to.len();
        from.iter()
            .map(|&p| {
                (0..m)
                    .map(|j| point_segment_distance(p, to[j], to[(j + 1) % m]))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    }
    one_sided(a, b).max(one_sided(b, a))
}

/// Counterclockwise convex polygon without collinear consecutive vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Checks the counterclockwise convexity invariant.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::Degenerate(format!("{n} vertices")));
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidParameter("non-finite vertex".into()));
        }
        for i in 0..n {
            let turn = orient(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
            if turn < 0.0 {
                return Err(Error::Degenerate(format!("reflex turn at vertex {}", (i + 1) % n)));
            }
        }
        if signed_area(&vertices) <= 0.0 {
            return Err(Error::Degenerate("non-positive area".into()));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn diameter(&self) -> f64 {
        polygon_diameter(self)
    }
}

/// Andrew's monotone chain. Collinear points are dropped.
pub fn convex_hull(points: &[Point]) -> Result<ConvexPolygon> {
    if points.len() < 3 {
        return Err(Error::Degenerate(format!("{} points", points.len())));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::InvalidParameter("non-finite point".into()));
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();

    let keeps_left_turn = |o: Point, a: Point, b: Point| {
        let (u, v) = (a - o, b - o);
        u.cross(v) > COLLINEAR_SIN * u.norm() * v.norm()
    };

    let mut hull: Vec<Point> = Vec::with_capacity(pts.len() + 1);
    for &p in &pts {
        while hull.len() >= 2 && !keeps_left_turn(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && !keeps_left_turn(hull[hull.len() - 2], hull[hull.len() - 1], p)
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();

    if hull.len() < 3 {
        return Err(Error::Degenerate("all points collinear".into()));
    }
    Ok(ConvexPolygon { vertices: hull })
}

/// Rotating calipers over antipodal vertex pairs, O(n).
pub fn polygon_diameter(poly: &ConvexPolygon) -> f64 {
    let v = &poly.vertices;
    let n = v.len();
    let mut best = 0.0f64;
    let mut j = 1;
    for i in 0..n {
        let ni = (i + 1) % n;
        let edge = v[ni] - v[i];
        let mut steps = 0;
        while steps < n && edge.cross(v[(j + 1) % n] - v[j]) > 0.0 {
            j = (j + 1) % n;
            steps += 1;
        }
        best = best
            .max(v[i].dist(v[j]))
            .max(v[ni].dist(v[j]))
            // parallel edges leave a second antipodal pair
            .max(v[i].dist(v[(j + 1) % n]));
    }
    best
}

/// A closed boundary of one subset of a partition. The closing edge is
/// implicit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Region {
    boundary: Vec<Point>,
}

impl Region {
    /// Drops an explicit closing point and consecutive duplicates; rejects
    /// boundaries with non-positive signed area. Self-intersection is not
    /// checked.
    pub fn new(mut boundary: Vec<Point>) -> Result<Self> {
        boundary.dedup_by(|a, b| a.dist(*b) <= f64::EPSILON);
        while boundary.len() > 1 && boundary[0].dist(boundary[boundary.len() - 1]) <= f64::EPSILON {
            boundary.pop();
        }
        if boundary.len() < 3 {
            return Err(Error::Degenerate("region with fewer than 3 points".into()));
        }
        if boundary.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidParameter("non-finite region point".into()));
        }
        let area = signed_area(&boundary);
        if area <= EPS * EPS {
            return Err(Error::Degenerate(format!("region signed area {area:e}")));
        }
        Ok(Self { boundary })
    }

    pub fn boundary(&self) -> &[Point] {
        &self.boundary
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.boundary)
    }

    pub fn perimeter(&self) -> f64 {
        let n = self.boundary.len();
        (0..n).map(|i| self.boundary[i].dist(self.boundary[(i + 1) % n])).sum()
    }
}

/// Diameter of a region from at least `sample_count` boundary samples
/// (always including every stored vertex), through the convex hull.
pub fn region_diameter(region: &Region, sample_count: usize) -> Result<f64> {
    let pts = &region.boundary;
    let n = pts.len();
    if region.area() <= EPS * EPS {
        return Err(Error::Degenerate("zero-area region".into()));
    }
    let perimeter = region.perimeter();
    let extra = sample_count.saturating_sub(n);
    let mut samples = Vec::with_capacity(n + extra + n);
    for i in 0..n {
        let (a, b) = (pts[i], pts[(i + 1) % n]);
        samples.push(a);
        if extra > 0 && perimeter > 0.0 {
            let k = (extra as f64 * a.dist(b) / perimeter).ceil() as usize;
            for s in 1..=k {
                samples.push(a.lerp(b, s as f64 / (k + 1) as f64));
            }
        }
    }
    Ok(polygon_diameter(&convex_hull(&samples)?))
}

/// Closed counterclockwise boundary polygon of a convex body with arc-length
/// and shoelace prefix sums. Arc positions are measured from vertex 0.
#[derive(Clone, Debug)]
pub struct Boundary {
    points: Vec<Point>,
    cum_len: Vec<f64>,
    cum_cross: Vec<f64>,
}

impl Boundary {
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        points.dedup_by(|a, b| a.dist(*b) <= f64::EPSILON);
        while points.len() > 1 && points[0].dist(points[points.len() - 1]) <= f64::EPSILON {
            points.pop();
        }
        let n = points.len();
        if n < 3 {
            return Err(Error::Degenerate("boundary with fewer than 3 points".into()));
        }
        if signed_area(&points) <= 0.0 {
            return Err(Error::Degenerate("boundary is not counterclockwise".into()));
        }
        let mut cum_len = Vec::with_capacity(n + 1);
        let mut cum_cross = Vec::with_capacity(n + 1);
        cum_len.push(0.0);
        cum_cross.push(0.0);
        for i in 0..n {
            let (a, b) = (points[i], points[(i + 1) % n]);
            cum_len.push(cum_len[i] + a.dist(b));
            cum_cross.push(cum_cross[i] + a.cross(b));
        }
        Ok(Self { points, cum_len, cum_cross })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn perimeter(&self) -> f64 {
        self.cum_len[self.points.len()]
    }

    pub fn area(&self) -> f64 {
        0.5 * self.cum_cross[self.points.len()]
    }

    /// Arc position of vertex `i`.
    pub fn vertex_position(&self, i: usize) -> f64 {
        self.cum_len[i % self.points.len()]
    }

    /// Segment index and fraction for an arc position (taken modulo the
    /// perimeter).
    pub fn locate(&self, s: f64) -> (usize, f64) {
        let n = self.points.len();
        let p = self.perimeter();
        let s = s.rem_euclid(p);
        let i = match self.cum_len.partition_point(|&c| c <= s) {
            0 => 0,
            k => (k - 1).min(n - 1),
        };
        let len = self.cum_len[i + 1] - self.cum_len[i];
        let t = if len > 0.0 { ((s - self.cum_len[i]) / len).clamp(0.0, 1.0) } else { 0.0 };
        (i, t)
    }

    pub fn point_at(&self, s: f64) -> Point {
        let (i, t) = self.locate(s);
        let n = self.points.len();
        self.points[i].lerp(self.points[(i + 1) % n], t)
    }

    /// Arc position of the boundary point hit by the ray from `origin` in
    /// direction `angle`. `origin` must be interior.
    pub fn ray_hit(&self, origin: Point, angle: f64) -> Option<f64> {
        let n = self.points.len();
        let u = Point::polar(1.0, angle);
        let mut best: Option<(f64, f64)> = None;
        for i in 0..n {
            let a = self.points[i];
            let e = self.points[(i + 1) % n] - a;
            let denom = u.cross(e);
            if denom.abs() < f64::MIN_POSITIVE {
                continue;
            }
            let w = a - origin;
            let t = w.cross(e) / denom;
            let lambda = w.cross(u) / denom;
            if t > 0.0 && (-1e-12..=1.0 + 1e-12).contains(&lambda) {
                let s = self.cum_len[i] + lambda.clamp(0.0, 1.0) * (self.cum_len[i + 1] - self.cum_len[i]);
                if best.is_none_or(|(bt, _)| t > bt) {
                    best = Some((t, s));
                }
            }
        }
        best.map(|(_, s)| s.rem_euclid(self.perimeter()))
    }

    /// Sum of `cross(q_k, q_{k+1})` over `k < upto` along the vertex sequence
    /// extended periodically past `n`.
    fn unwrapped_cross(&self, upto: usize) -> f64 {
        let n = self.points.len();
        (upto / n) as f64 * self.cum_cross[n] + self.cum_cross[upto % n]
    }

    /// Unwrapped segment indices `(a, b)` and endpoint fractions for the
    /// chain starting at `s` and running `length` counterclockwise.
    fn chain_span(&self, s: f64, length: f64) -> (usize, f64, usize, f64) {
        let n = self.points.len();
        let p = self.perimeter();
        let (a, ta) = self.locate(s);
        let s_start = s.rem_euclid(p);
        let end = s_start + length;
        let wraps = (end / p).floor() as usize;
        let (mut b, tb) = self.locate(end);
        b += wraps * n;
        if b < a || (b == a && tb < ta) {
            b += n;
        }
        (a, ta, b, tb)
    }

    /// The boundary chain from arc position `s` running `length` (in
    /// `(0, perimeter]`) counterclockwise, both endpoints included.
    pub fn chain(&self, s: f64, length: f64) -> Vec<Point> {
        let n = self.points.len();
        let (a, _, b, tb) = self.chain_span(s, length);
        let start = self.point_at(s);
        let end = self.point_at(s + length);
        let mut out = Vec::with_capacity(b - a + 2);
        out.push(start);
        let last = if tb == 0.0 { b } else { b + 1 };
        for k in (a + 1)..last {
            out.push(self.points[k % n]);
        }
        out.push(end);
        out
    }

    /// `Σ cross(q_k, q_{k+1})` over [`Boundary::chain`], in O(log n).
    pub fn chain_cross(&self, s: f64, length: f64) -> f64 {
        let n = self.points.len();
        let (a, _, b, _) = self.chain_span(s, length);
        let start = self.point_at(s);
        let end = self.point_at(s + length);
        if b == a {
            return start.cross(end);
        }
        let first = self.points[(a + 1) % n];
        let last = self.points[b % n];
        start.cross(first) + (self.unwrapped_cross(b) - self.unwrapped_cross(a + 1)) + last.cross(end)
    }

    /// Whether `pt` lies inside with at least `margin` clearance from every
    /// edge line.
    pub fn contains(&self, pt: Point, margin: f64) -> bool {
        let n = self.points.len();
        (0..n).all(|i| {
            let a = self.points[i];
            let e = self.points[(i + 1) % n] - a;
            let len = e.norm();
            len == 0.0 || e.cross(pt - a) / len >= margin
        })
    }

    /// Largest distance from `c` to the boundary (attained at a vertex).
    pub fn max_distance(&self, c: Point) -> f64 {
        self.points.iter().map(|p| p.dist(c)).fold(0.0, f64::max)
    }

    /// Nearest boundary point to `c`, its distance and its arc position.
    /// Candidates within [`EPS`] of the minimum are tied; the one with the
    /// smallest polar angle about `c` wins.
    pub fn nearest(&self, c: Point) -> (Point, f64, f64) {
        let n = self.points.len();
        let mut cands: Vec<(Point, f64, f64)> = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.points[i];
            let e = self.points[(i + 1) % n] - a;
            let len2 = e.dot(e);
            let t = if len2 > 0.0 { ((c - a).dot(e) / len2).clamp(0.0, 1.0) } else { 0.0 };
            let q = a + e * t;
            let s = self.cum_len[i] + t * (self.cum_len[i + 1] - self.cum_len[i]);
            cands.push((q, q.dist(c), s));
        }
        let dmin = cands.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
        cands
            .into_iter()
            .filter(|cand| cand.1 <= dmin + EPS)
            .min_by(|x, y| {
                (x.0 - c).angle().total_cmp(&(y.0 - c).angle()).then(x.1.total_cmp(&y.1))
            })
            .map(|(q, d, s)| (q, d, s.rem_euclid(self.perimeter())))
            .expect("boundary has at least three edges")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, SQRT_2};

    fn unit_square() -> Vec<Point> {
        vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(1.0, 1.0), Point::new(0.0, 1.0)]
    }

    fn regular(n: usize, r: f64) -> Vec<Point> {
        (0..n).map(|k| Point::polar(r, TAU * k as f64 / n as f64)).collect()
    }

    #[test]
    fn hull_drops_interior_point() {
        let pts = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0), Point::new(0.25, 0.25)];
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.vertices(), &[Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)]);
    }

    #[test]
    fn hull_of_square_corners_is_the_square() {
        let hull = convex_hull(&unit_square()).unwrap();
        assert_eq!(hull.vertices(), unit_square().as_slice());
    }

    #[test]
    fn hull_drops_collinear_points() {
        let mut pts = unit_square();
        pts.push(Point::new(0.5, 0.0));
        pts.push(Point::new(1.0, 0.5));
        assert_eq!(convex_hull(&pts).unwrap().vertices().len(), 4);
    }

    #[test]
    fn collinear_input_is_degenerate() {
        let pts: Vec<Point> = (0..5).map(|i| Point::new(i as f64, 2.0 * i as f64)).collect();
        assert!(matches!(convex_hull(&pts), Err(Error::Degenerate(_))));
        assert!(matches!(convex_hull(&pts[..2]), Err(Error::Degenerate(_))));
    }

    #[test]
    fn convex_polygon_rejects_reflex_and_clockwise() {
        let mut cw = unit_square();
        cw.reverse();
        assert!(ConvexPolygon::new(cw).is_err());
        let dart = vec![Point::new(0.0, 0.0), Point::new(2.0, 1.0), Point::new(0.0, 2.0), Point::new(0.5, 1.0)];
        assert!(ConvexPolygon::new(dart).is_err());
    }

    #[test]
    fn diameters_of_simple_polygons() {
        let square = ConvexPolygon::new(unit_square()).unwrap();
        assert!((polygon_diameter(&square) - SQRT_2).abs() < 1e-15);
        let tri = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, 3f64.sqrt() / 2.0),
        ])
        .unwrap();
        assert!((polygon_diameter(&tri) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn diameter_of_slanted_parallelogram() {
        let poly = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(4.0, 1.0),
            Point::new(3.0, 1.0),
        ])
        .unwrap();
        assert!((polygon_diameter(&poly) - 17f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn areas() {
        assert!((polygon_area(&unit_square()) - 1.0).abs() < 1e-15);
        let tri = [Point::new(0.0, 0.0), Point::new(2.0, 0.0), Point::new(1.0, 3f64.sqrt())];
        assert!((polygon_area(&tri) - 3f64.sqrt()).abs() < 1e-15);
        let mut rev = tri.to_vec();
        rev.reverse();
        assert!((polygon_area(&rev) - 3f64.sqrt()).abs() < 1e-15);
        let circle = regular(4096, 1.0);
        assert!((polygon_area(&circle) - PI).abs() < 1e-5);
    }

    #[test]
    fn rotation_examples() {
        let p = rotate(Point::new(1.0, 0.0), TAU / 3.0);
        assert!((p.x + 0.5).abs() < 1e-15 && (p.y - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert_eq!(rotate(Point::ORIGIN, 1.234), Point::ORIGIN);
        let q = Point::new(0.3, -1.7);
        let back = rotate(rotate(rotate(q, TAU / 3.0), TAU / 3.0), TAU / 3.0);
        assert!(back.dist(q) < 1e-12);
    }

    #[test]
    fn region_diameter_examples() {
        let disk = Region::new(regular(4096, 1.0)).unwrap();
        assert!((region_diameter(&disk, 4096).unwrap() - 2.0).abs() < 1e-5);
        let square = Region::new(unit_square()).unwrap();
        assert!((region_diameter(&square, 64).unwrap() - SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn region_rejects_degenerate_boundaries() {
        let flat = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 0.0)];
        assert!(matches!(Region::new(flat), Err(Error::Degenerate(_))));
        let mut cw = unit_square();
        cw.reverse();
        assert!(Region::new(cw).is_err());
    }

    #[test]
    fn region_accepts_explicit_closing_point() {
        let mut closed = unit_square();
        closed.push(closed[0]);
        assert_eq!(Region::new(closed).unwrap().boundary().len(), 4);
    }

    #[test]
    fn boundary_chain_and_cross_agree() {
        let b = Boundary::new(regular(12, 1.0)).unwrap();
        let p = b.perimeter();
        for &(s, len) in &[(0.1, 0.5), (p - 0.2, 0.9), (0.0, p), (1.3, p * 0.999), (0.75, 0.0001)] {
            let chain = b.chain(s, len);
            let direct: f64 = chain.windows(2).map(|w| w[0].cross(w[1])).sum();
            assert!((direct - b.chain_cross(s, len)).abs() < 1e-12, "s={s} len={len}");
        }
        let full = b.chain(0.0, p);
        assert!((signed_area(&full) - b.area()).abs() < 1e-12);
    }

    #[test]
    fn boundary_ray_hits_and_nearest() {
        let b = Boundary::new(unit_square().iter().map(|&q| q - Point::new(0.5, 0.5)).collect()).unwrap();
        let s = b.ray_hit(Point::ORIGIN, 0.0).unwrap();
        assert!(b.point_at(s).dist(Point::new(0.5, 0.0)) < 1e-12);
        let s = b.ray_hit(Point::ORIGIN, PI / 4.0).unwrap();
        assert!(b.point_at(s).dist(Point::new(0.5, 0.5)) < 1e-12);
        let (q, d, _) = b.nearest(Point::ORIGIN);
        assert!((d - 0.5).abs() < 1e-15);
        // ties between the four edge midpoints go to the smallest polar angle
        assert!(q.dist(Point::new(0.5, 0.0)) < 1e-15);
        assert!(b.contains(Point::new(0.4, 0.4), 0.05));
        assert!(!b.contains(Point::new(0.49, 0.0), 0.05));
    }

    #[test]
    fn hausdorff_of_shifted_square() {
        let a = unit_square();
        let b: Vec<Point> = a.iter().map(|&p| p + Point::new(0.1, 0.0)).collect();
        assert!((hausdorff_distance(&a, &b) - 0.1).abs() < 1e-12);
        assert_eq!(hausdorff_distance(&a, &a), 0.0);
    }
}
