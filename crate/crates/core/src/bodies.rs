//! Threefold-symmetric convex bodies, normalized to unit area.
//!
//! A [`SymmetricBody`] is a radial profile sampled over the fundamental
//! sector `[0, 2π/3)` about the center of symmetry (the origin), plus exact
//! corner points in that sector. The full boundary polygon replicates the
//! sector at `+2π/3` and `+4π/3`.
//!
//! Canonical orientation for the constructed bodies other than the regular
//! polygons: the boundary point nearest the center lies on the negative
//! y-axis. Regular polygons put one vertex on the positive x-axis.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, orient, rotate, Boundary, Point, EPS};
use crate::trisection;

/// Angular width of the fundamental sector.
pub const SECTOR: f64 = TAU / 3.0;

/// Profile samples per sector used by the constructors.
pub const DEFAULT_SECTOR_SAMPLES: usize = 1024;

/// Largest admissible gap between consecutive profile angles.
pub const MAX_PROFILE_SPACING: f64 = SECTOR / 256.0;

/// Tolerance on the unit-area normalization.
pub const AREA_TOL: f64 = 1e-6;

/// Tolerance for profile samples outside the sector disagreeing with the
/// replicated boundary.
pub const SYMMETRY_TOL: f64 = 1e-9;

/// Upper end of the `H_ε` short-side range, `2^{1/2} 3^{-3/4}` (the regular
/// hexagon).
pub fn h_eps_max_side() -> f64 {
    2f64.sqrt() * 3f64.powf(-0.75)
}

/// A piece of an exactly known outline, used for rendering.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum OutlinePiece {
    Segment { from: Point, to: Point },
    /// Counterclockwise arc from `from` to `to`.
    Arc { from: Point, to: Point, center: Point, radius: f64 },
}

impl OutlinePiece {
    fn map(&self, f: impl Fn(Point) -> Point, scale: f64) -> Self {
        match *self {
            OutlinePiece::Segment { from, to } => OutlinePiece::Segment { from: f(from), to: f(to) },
            OutlinePiece::Arc { from, to, center, radius } => OutlinePiece::Arc {
                from: f(from),
                to: f(to),
                center: f(center),
                radius: radius * scale,
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct SymmetricBody {
    label: String,
    sector_profile: Vec<(f64, f64)>,
    vertices_hint: Vec<Point>,
    outline: Vec<OutlinePiece>,
    boundary: Boundary,
}

/// On-disk form of a body: `{"label": ..., "sector_profile": [[theta, r], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BodyDocument {
    pub label: String,
    pub sector_profile: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertices_hint: Vec<Point>,
}

/// Maps a point into the fundamental sector by a rotation through a
/// multiple of `2π/3`; returns its polar angle there and the rotated point.
/// Angles within `1e-12` of the sector end wrap to 0.
fn into_sector(p: Point) -> (f64, Point) {
    let a = p.angle();
    let mut t = a.rem_euclid(SECTOR);
    if t > SECTOR - 1e-12 {
        t = 0.0;
    }
    let k = ((a - t) / SECTOR).round();
    (t, rotate(p, -k * SECTOR))
}

impl SymmetricBody {
    /// Builds a body from a sector profile and optional exact corners.
    ///
    /// Profile angles must be finite, strictly increasing and within
    /// `[0, 2π)`; radii must be positive. Only samples inside the sector
    /// shape the boundary; samples beyond it are kept for [`validate`] to
    /// compare against the replicated boundary.
    pub fn new(label: impl Into<String>, sector_profile: Vec<(f64, f64)>, vertices_hint: Vec<Point>) -> Result<Self> {
        let label = label.into();
        for (i, &(theta, r)) in sector_profile.iter().enumerate() {
            if !theta.is_finite() || !r.is_finite() {
                return Err(Error::Format(format!("{label}: non-finite profile sample {i}")));
            }
            if !(0.0..TAU).contains(&theta) {
                return Err(Error::Format(format!("{label}: profile angle {theta} outside [0, 2π)")));
            }
            if r <= 0.0 {
                return Err(Error::Format(format!("{label}: non-positive radius {r} at sample {i}")));
            }
        }
        if sector_profile.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::Format(format!("{label}: profile angles not strictly increasing")));
        }
        if vertices_hint.iter().any(|p| !p.is_finite() || p.norm() == 0.0) {
            return Err(Error::Format(format!("{label}: invalid vertex hint")));
        }
        let mut hints: Vec<(f64, Point)> = vertices_hint.into_iter().map(into_sector).collect();
        hints.sort_by(|a, b| a.0.total_cmp(&b.0));
        hints.dedup_by(|later, earlier| (later.0 - earlier.0).abs() < 1e-12);
        let vertices_hint: Vec<Point> = hints.iter().map(|h| h.1).collect();

        let mut sector: Vec<(f64, Point, bool)> = sector_profile
            .iter()
            .filter(|(theta, _)| *theta < SECTOR)
            .map(|&(theta, r)| (theta, Point::polar(r, theta), false))
            .chain(hints.iter().map(|&(t, p)| (t, p, true)))
            .collect();
        sector.sort_by(|a, b| a.0.total_cmp(&b.0).then(b.2.cmp(&a.2)));
        // hints take precedence over samples at the same angle
        sector.dedup_by(|later, earlier| (later.0 - earlier.0).abs() < 1e-12);
        if sector.len() < 2 {
            return Err(Error::Format(format!("{label}: fewer than two points in the sector")));
        }
        let mut points = Vec::with_capacity(3 * sector.len());
        for k in 0..3 {
            let angle = k as f64 * SECTOR;
            points.extend(sector.iter().map(|&(_, p, _)| if k == 0 { p } else { rotate(p, angle) }));
        }
        let boundary = Boundary::new(points)?;
        Ok(Self { label, sector_profile, vertices_hint, outline: Vec::new(), boundary })
    }

    /// Samples `radial` at `samples` uniform angles over the sector.
    pub fn from_radial(
        label: impl Into<String>,
        samples: usize,
        radial: impl Fn(f64) -> f64,
        vertices_hint: Vec<Point>,
    ) -> Result<Self> {
        if samples < 2 {
            return Err(Error::InvalidParameter("need at least two profile samples".into()));
        }
        let profile = (0..samples)
            .map(|k| {
                let theta = SECTOR * k as f64 / samples as f64;
                (theta, radial(theta))
            })
            .collect();
        Self::new(label, profile, vertices_hint)
    }

    pub fn with_outline(mut self, outline: Vec<OutlinePiece>) -> Self {
        self.outline = outline;
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn sector_profile(&self) -> &[(f64, f64)] {
        &self.sector_profile
    }

    pub fn vertices_hint(&self) -> &[Point] {
        &self.vertices_hint
    }

    /// Exact outline pieces, empty for bodies known only by their profile.
    pub fn outline(&self) -> &[OutlinePiece] {
        &self.outline
    }

    /// Reconstructed full boundary polygon.
    pub fn boundary(&self) -> &Boundary {
        &self.boundary
    }

    pub fn area(&self) -> f64 {
        self.boundary.area()
    }

    /// Largest distance from the center to the boundary.
    pub fn max_radius(&self) -> f64 {
        self.boundary.max_distance(Point::ORIGIN)
    }

    /// Distance from the center to the boundary along direction `theta`.
    pub fn radius_at(&self, theta: f64) -> f64 {
        let s = self.boundary.ray_hit(Point::ORIGIN, theta).expect("center is interior");
        self.boundary.point_at(s).norm()
    }

    /// Uniform dilation about the center.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(Error::InvalidParameter(format!("dilation factor {factor}")));
        }
        let profile = self.sector_profile.iter().map(|&(t, r)| (t, r * factor)).collect();
        let hints = self.vertices_hint.iter().map(|&p| p * factor).collect();
        let outline = self.outline.iter().map(|o| o.map(|p| p * factor, factor)).collect();
        Ok(Self::new(self.label.clone(), profile, hints)?.with_outline(outline))
    }

    /// Rotation about the center by `angle`.
    pub fn rotated(&self, angle: f64) -> Result<Self> {
        let mut profile: Vec<(f64, f64)> = self
            .sector_profile
            .iter()
            .filter(|(t, _)| *t < SECTOR)
            .map(|&(t, r)| ((t + angle).rem_euclid(SECTOR), r))
            .collect();
        profile.sort_by(|a, b| a.0.total_cmp(&b.0));
        profile.dedup_by(|a, b| a.0 == b.0);
        let hints = self.vertices_hint.iter().map(|&p| rotate(p, angle)).collect();
        let outline = self.outline.iter().map(|o| o.map(|p| rotate(p, angle), 1.0)).collect();
        Ok(Self::new(self.label.clone(), profile, hints)?.with_outline(outline))
    }

    pub fn to_document(&self) -> BodyDocument {
        BodyDocument {
            label: self.label.clone(),
            sector_profile: self.sector_profile.iter().map(|&(t, r)| [t, r]).collect(),
            vertices_hint: self.vertices_hint.clone(),
        }
    }

    pub fn from_document(doc: BodyDocument) -> Result<Self> {
        let profile = doc.sector_profile.iter().map(|&[t, r]| (t, r)).collect();
        Self::new(doc.label, profile, doc.vertices_hint)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_document())?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_document(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

/// Convex constraints whose intersection is a body; the radial function is
/// the smallest exit distance along a ray from the origin.
#[derive(Clone, Copy, Debug)]
enum Constraint {
    /// `{x : <x, normal> <= offset}` with unit `normal`.
    HalfPlane { normal: Point, offset: f64 },
    Disk { center: Point, radius: f64 },
}

impl Constraint {
    fn exit(&self, u: Point) -> f64 {
        match *self {
            Constraint::HalfPlane { normal, offset } => {
                let c = u.dot(normal);
                if c > 0.0 {
                    offset / c
                } else {
                    f64::INFINITY
                }
            }
            Constraint::Disk { center, radius } => {
                let b = u.dot(center);
                b + (b * b + radius * radius - center.dot(center)).sqrt()
            }
        }
    }
}

fn radial_of(constraints: &[Constraint]) -> impl Fn(f64) -> f64 + '_ {
    move |theta| {
        let u = Point::polar(1.0, theta);
        constraints.iter().map(|c| c.exit(u)).fold(f64::INFINITY, f64::min)
    }
}

fn polygon_constraints(vertices: &[Point]) -> Vec<Constraint> {
    let n = vertices.len();
    (0..n)
        .filter_map(|i| {
            let e = vertices[(i + 1) % n] - vertices[i];
            let len = e.norm();
            (len > 0.0).then(|| {
                let normal = Point::new(e.y / len, -e.x / len);
                Constraint::HalfPlane { normal, offset: normal.dot(vertices[i]) }
            })
        })
        .collect()
}

fn segment_outline(vertices: &[Point]) -> Vec<OutlinePiece> {
    let n = vertices.len();
    (0..n)
        .map(|i| OutlinePiece::Segment { from: vertices[i], to: vertices[(i + 1) % n] })
        .filter(|s| matches!(s, OutlinePiece::Segment { from, to } if from.dist(*to) > EPS))
        .collect()
}

/// Body bounded by a counterclockwise threefold-symmetric convex polygon
/// containing the origin.
pub fn polygon_body(label: impl Into<String>, vertices: &[Point], samples: usize) -> Result<SymmetricBody> {
    let constraints = polygon_constraints(vertices);
    if constraints.iter().any(|c| matches!(c, Constraint::HalfPlane { offset, .. } if *offset <= 0.0)) {
        return Err(Error::InvalidParameter("polygon does not contain the center".into()));
    }
    Ok(SymmetricBody::from_radial(label, samples, radial_of(&constraints), vertices.to_vec())?
        .with_outline(segment_outline(vertices)))
}

/// Apothem of the unit-area regular `m`-gon, `m^{-1/2} cot^{1/2}(π/m)`.
pub fn regular_apothem(m: usize) -> f64 {
    let m = m as f64;
    m.powf(-0.5) * (1.0 / (PI / m).tan()).sqrt()
}

fn regular_label(m: usize) -> String {
    match m {
        3 => "triangle".into(),
        6 => "hexagon".into(),
        9 => "enneagon".into(),
        12 => "dodecagon".into(),
        _ => format!("regular-{m}"),
    }
}

/// Unit-area regular `3n`-gon with a vertex on the positive x-axis.
pub fn make_regular_polygon(n: usize) -> Result<SymmetricBody> {
    if n == 0 {
        return Err(Error::InvalidParameter("regular polygon needs n >= 1".into()));
    }
    let m = 3 * n;
    let circumradius = regular_apothem(m) / (PI / m as f64).cos();
    let vertices: Vec<Point> =
        (0..m).map(|k| Point::polar(circumradius, TAU * k as f64 / m as f64)).collect();
    polygon_body(regular_label(m), &vertices, DEFAULT_SECTOR_SAMPLES)
}

/// Unit-area Reuleaux triangle: the intersection of three disks of radius
/// `(2/(π-√3))^{1/2}` centered at the vertices of an equilateral triangle.
pub fn make_reuleaux() -> SymmetricBody {
    let width = reuleaux_width();
    let corners: Vec<Point> = (0..3)
        .map(|k| Point::polar(width / 3f64.sqrt(), FRAC_PI_2 + k as f64 * SECTOR))
        .collect();
    let constraints: Vec<Constraint> =
        corners.iter().map(|&center| Constraint::Disk { center, radius: width }).collect();
    let outline = (0..3)
        .map(|k| OutlinePiece::Arc {
            from: corners[(k + 1) % 3],
            to: corners[(k + 2) % 3],
            center: corners[k],
            radius: width,
        })
        .collect();
    SymmetricBody::from_radial("reuleaux", DEFAULT_SECTOR_SAMPLES, radial_of(&constraints), corners.clone())
        .expect("reuleaux profile is well formed")
        .with_outline(outline)
}

/// Constant width of the unit-area Reuleaux triangle.
pub fn reuleaux_width() -> f64 {
    (2.0 / (PI - 3f64.sqrt())).sqrt()
}

fn check_h_eps_side(a: f64) -> Result<f64> {
    let max = h_eps_max_side();
    if !(a.is_finite() && (-1e-12..=max + 1e-12).contains(&a)) {
        return Err(Error::InvalidParameter(format!("H_eps side a = {a} outside [0, {max}]")));
    }
    Ok(a.clamp(0.0, max))
}

/// Long side `b` of the unit-area hexagon with alternating sides `a`, `b`.
pub fn h_eps_side_b(a: f64) -> Result<f64> {
    let a = check_h_eps_side(a)?;
    Ok(-2.0 * a + (4.0 / 3f64.sqrt() + 3.0 * a * a).sqrt())
}

/// Vertices of the unit-area `H_ε` hexagon, counterclockwise, coincident
/// corners merged (three vertices at `a = 0`).
pub fn h_eps_vertices(a: f64) -> Result<Vec<Point>> {
    let a = check_h_eps_side(a)?;
    let b = h_eps_side_b(a)?;
    let side = b + 2.0 * a;
    let apothem = side / (2.0 * 3f64.sqrt());
    let corners: Vec<Point> = (0..3)
        .map(|k| Point::polar(2.0 * apothem, FRAC_PI_2 + k as f64 * SECTOR))
        .collect();
    let mut vertices = Vec::with_capacity(6);
    for k in 0..3 {
        let c = corners[k];
        let prev = corners[(k + 2) % 3];
        let next = corners[(k + 1) % 3];
        let toward_prev = (prev - c) * (a / side);
        let toward_next = (next - c) * (a / side);
        vertices.push(c + toward_prev);
        if a > 0.0 {
            vertices.push(c + toward_next);
        }
    }
    Ok(vertices)
}

/// Unit-area hexagon with three short sides `a` cutting the corners of an
/// equilateral triangle and three long sides `b`.
pub fn make_h_eps(a: f64) -> Result<SymmetricBody> {
    let vertices = h_eps_vertices(a)?;
    polygon_body(format!("h_eps(a={a:.6})"), &vertices, DEFAULT_SECTOR_SAMPLES)
}

/// The pieces of the `H̃` construction.
#[derive(Clone, Debug)]
pub struct HTildeConstruction {
    /// Short side of the `H_ε` it starts from.
    pub a0: f64,
    /// Arc radius before shrinking: the center-to-vertex distance of `H_{a0}`.
    pub radius: f64,
    /// Uniform shrink factor restoring unit area.
    pub scale: f64,
    pub body: SymmetricBody,
}

/// Builds `H̃`: take `H_ε` at `a = a0`, replace each short side by the arc of
/// radius `d(p, vertex)` centered at `p`, then shrink to unit area.
pub fn h_tilde_construction() -> Result<HTildeConstruction> {
    let a0 = trisection::solve_a0()?;
    let hexagon = h_eps_vertices(a0)?;
    let radius = hexagon[0].norm();

    // Each arc replaces a chord of length a0 and adds a circular segment.
    let half_angle = (a0 / (2.0 * radius)).asin();
    let segment = 0.5 * radius * radius * (2.0 * half_angle - (2.0 * half_angle).sin());
    let rounded_area = crate::geometry::polygon_area(&hexagon) + 3.0 * segment;
    let scale = rounded_area.powf(-0.5);

    // Long sides run from vertex 2k+1 to vertex 2k+2; short sides become arcs.
    let mut outline = Vec::with_capacity(6);
    let mut constraints = vec![Constraint::Disk { center: Point::ORIGIN, radius: radius * scale }];
    for k in 0..3 {
        let from = hexagon[2 * k + 1] * scale;
        let to = hexagon[(2 * k + 2) % 6] * scale;
        let e = to - from;
        let normal = Point::new(e.y, -e.x) * (1.0 / e.norm());
        constraints.push(Constraint::HalfPlane { normal, offset: normal.dot(from) });
        outline.push(OutlinePiece::Segment { from, to });
        let next = hexagon[(2 * k + 3) % 6] * scale;
        outline.push(OutlinePiece::Arc { from: to, to: next, center: Point::ORIGIN, radius: radius * scale });
    }
    let hints = hexagon.iter().map(|&p| p * scale).collect();
    let body = SymmetricBody::from_radial("h_tilde", DEFAULT_SECTOR_SAMPLES, radial_of(&constraints), hints)?
        .with_outline(outline);
    Ok(HTildeConstruction { a0, radius, scale, body })
}

pub fn make_h_tilde() -> Result<SymmetricBody> {
    Ok(h_tilde_construction()?.body)
}

/// Unit-area intersection of an equilateral triangle with a concentric disk
/// whose radius is `ratio` times the triangle's apothem, `ratio` in
/// `(1, 2)`. The long edges have outward normals at `-π/2 + 2πk/3`.
pub fn make_truncated_triangle(ratio: f64) -> Result<SymmetricBody> {
    if !(ratio > 1.0 && ratio < 2.0) {
        return Err(Error::InvalidParameter(format!("truncation ratio {ratio} outside (1, 2)")));
    }
    let half_chord = (ratio * ratio - 1.0).sqrt();
    let mut constraints = vec![Constraint::Disk { center: Point::ORIGIN, radius: ratio }];
    let mut corners = Vec::with_capacity(6);
    for k in 0..3 {
        let normal = Point::polar(1.0, -FRAC_PI_2 + k as f64 * SECTOR);
        let along = rotate(normal, FRAC_PI_2);
        constraints.push(Constraint::HalfPlane { normal, offset: 1.0 });
        corners.push(normal - along * half_chord);
        corners.push(normal + along * half_chord);
    }
    let mut outline = Vec::with_capacity(6);
    for k in 0..3 {
        outline.push(OutlinePiece::Segment { from: corners[2 * k], to: corners[2 * k + 1] });
        outline.push(OutlinePiece::Arc {
            from: corners[2 * k + 1],
            to: corners[(2 * k + 2) % 6],
            center: Point::ORIGIN,
            radius: ratio,
        });
    }
    let hints = corners.clone();
    let body = SymmetricBody::from_radial(
        format!("truncated_triangle(ratio={ratio:.6})"),
        DEFAULT_SECTOR_SAMPLES,
        radial_of(&constraints),
        hints,
    )?
    .with_outline(outline);
    normalize_unit_area(&body)
}

/// Convex hull of the threefold orbit of `1..=6` random points, normalized
/// to unit area.
pub fn random_orbit_polygon<R: Rng>(rng: &mut R, label: impl Into<String>) -> Result<SymmetricBody> {
    let count = rng.gen_range(1..=6);
    let mut orbit = Vec::with_capacity(3 * count);
    for _ in 0..count {
        let p = Point::polar(rng.gen_range(0.5..1.0), rng.gen_range(0.0..SECTOR));
        orbit.extend((0..3).map(|k| rotate(p, k as f64 * SECTOR)));
    }
    let hull = convex_hull(&orbit)?;
    let body = polygon_body(label, hull.vertices(), DEFAULT_SECTOR_SAMPLES)?;
    normalize_unit_area(&body)
}

/// A seeded random valid body: alternately an orbit-hull polygon and a
/// truncated triangle.
pub fn random_body<R: Rng>(rng: &mut R, index: usize) -> Result<SymmetricBody> {
    if index.is_multiple_of(2) {
        random_orbit_polygon(rng, format!("random-{index}"))
    } else {
        let ratio = rng.gen_range(1.05..1.95);
        let body = make_truncated_triangle(ratio)?;
        Ok(SymmetricBody { label: format!("random-{index}"), ..body })
    }
}

/// Uniform dilation to unit area.
pub fn normalize_unit_area(body: &SymmetricBody) -> Result<SymmetricBody> {
    let area = body.area();
    if !(area.is_finite() && area > 0.0) {
        return Err(Error::Degenerate(format!("{}: area {area}", body.label)));
    }
    if (area - 1.0).abs() <= f64::EPSILON {
        return Ok(body.clone());
    }
    body.scaled(area.powf(-0.5))
}

/// Outcome of [`validate`]; a report, never an error.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub label: String,
    /// Boundary vertices where the turn is below `-1e-9`.
    pub convexity_violations: Vec<usize>,
    /// Angles of profile samples beyond the sector that disagree with the
    /// replicated boundary by more than `1e-9`.
    pub symmetry_violations: Vec<f64>,
    /// `(start, end)` of sector gaps wider than [`MAX_PROFILE_SPACING`].
    pub coverage_violations: Vec<(f64, f64)>,
    pub area: f64,
    pub area_deviation: f64,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.convexity_violations.is_empty()
            && self.symmetry_violations.is_empty()
            && self.coverage_violations.is_empty()
            && self.area_deviation <= AREA_TOL
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            return write!(f, "{}: clean (area {:.6})", self.label, self.area);
        }
        write!(
            f,
            "{}: {} convexity, {} symmetry, {} coverage violations; area {:.6}",
            self.label,
            self.convexity_violations.len(),
            self.symmetry_violations.len(),
            self.coverage_violations.len(),
            self.area
        )
    }
}

pub fn validate(body: &SymmetricBody) -> ValidationReport {
    let pts = body.boundary.points();
    let n = pts.len();
    let convexity_violations = (0..n)
        .filter(|&i| orient(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]) < -EPS)
        .collect();

    let sector: Vec<f64> = body.sector_profile.iter().map(|s| s.0).filter(|&t| t < SECTOR).collect();
    let mut coverage_violations = Vec::new();
    match (sector.first(), sector.last()) {
        (Some(&first), Some(&last)) => {
            for w in sector.windows(2) {
                if w[1] - w[0] > MAX_PROFILE_SPACING + 1e-12 {
                    coverage_violations.push((w[0], w[1]));
                }
            }
            if first + SECTOR - last > MAX_PROFILE_SPACING + 1e-12 {
                coverage_violations.push((last, first + SECTOR));
            }
        }
        _ => coverage_violations.push((0.0, SECTOR)),
    }

    let symmetry_violations = body
        .sector_profile
        .iter()
        .filter(|(t, _)| *t >= SECTOR)
        .filter(|&&(t, r)| (body.radius_at(t) - r).abs() > SYMMETRY_TOL)
        .map(|&(t, _)| t)
        .collect();

    let area = body.area();
    ValidationReport {
        label: body.label.clone(),
        convexity_violations,
        symmetry_violations,
        coverage_violations,
        area,
        area_deviation: (area - 1.0).abs(),
    }
}

/// What to build: a named preset or a profile file.
#[derive(Clone, Debug, PartialEq)]
pub enum BodySpec {
    /// Regular polygon with `edges` a positive multiple of 3.
    RegularPolygon { edges: usize },
    Reuleaux,
    /// `a` in `[0, 2^{1/2} 3^{-3/4}]`.
    HEps { a: f64 },
    HTilde,
    CustomProfile { path: PathBuf },
}

impl BodySpec {
    /// Builds the body; custom profiles are normalized to unit area.
    pub fn build(&self) -> Result<SymmetricBody> {
        match self {
            BodySpec::RegularPolygon { edges } => make_regular_polygon(edges / 3),
            BodySpec::Reuleaux => Ok(make_reuleaux()),
            BodySpec::HEps { a } => make_h_eps(*a),
            BodySpec::HTilde => make_h_tilde(),
            BodySpec::CustomProfile { path } => normalize_unit_area(&SymmetricBody::load(path)?),
        }
    }
}

impl FromStr for BodySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_num = |v: &str| -> Result<f64> {
            v.parse::<f64>().map_err(|_| Error::InvalidParameter(format!("bad number in body spec {s:?}")))
        };
        Ok(match s {
            "triangle" => BodySpec::RegularPolygon { edges: 3 },
            "hexagon" => BodySpec::RegularPolygon { edges: 6 },
            "enneagon" => BodySpec::RegularPolygon { edges: 9 },
            "dodecagon" => BodySpec::RegularPolygon { edges: 12 },
            "reuleaux" => BodySpec::Reuleaux,
            "h_tilde" => BodySpec::HTilde,
            _ => {
                if let Some(v) = s.strip_prefix("h_eps:") {
                    let a = parse_num(v)?;
                    check_h_eps_side(a)?;
                    BodySpec::HEps { a }
                } else if let Some(v) = s.strip_prefix("regular:") {
                    let edges: usize = v
                        .parse()
                        .map_err(|_| Error::InvalidParameter(format!("bad edge count in {s:?}")))?;
                    if edges == 0 || !edges.is_multiple_of(3) {
                        return Err(Error::InvalidParameter(format!(
                            "regular polygon needs a positive multiple of 3 edges, got {edges}"
                        )));
                    }
                    BodySpec::RegularPolygon { edges }
                } else if s.ends_with(".json") {
                    BodySpec::CustomProfile { path: PathBuf::from(s) }
                } else {
                    return Err(Error::InvalidParameter(format!("unknown body preset {s:?}")));
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{hausdorff_distance, polygon_area};

    #[test]
    fn regular_polygon_apothems() {
        let tri = make_regular_polygon(1).unwrap();
        let min_r = tri.sector_profile().iter().map(|s| s.1).fold(f64::INFINITY, f64::min);
        assert!((regular_apothem(3) - 3f64.powf(-0.75)).abs() < 1e-15);
        assert!((min_r - 0.438691).abs() < 1e-6);
        assert!((regular_apothem(6) - 0.537285).abs() < 1e-6);
        for n in 1..=6 {
            let body = make_regular_polygon(n).unwrap();
            assert!((polygon_area(body.boundary().points()) - 1.0).abs() < 1e-6, "n={n}");
        }
    }

    #[test]
    fn zero_edges_rejected() {
        assert!(matches!(make_regular_polygon(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn h_eps_side_endpoints() {
        assert!(h_eps_side_b(0.0).unwrap() - 2.0 * 3f64.powf(-0.25) < 1e-12);
        let amax = h_eps_max_side();
        assert!((h_eps_side_b(amax).unwrap() - amax).abs() < 1e-12);
        assert!(h_eps_side_b(-0.01).is_err());
        assert!(h_eps_side_b(amax + 0.01).is_err());
        assert!(make_h_eps(1.0).is_err());
    }

    #[test]
    fn h_eps_endpoints_match_regular_polygons() {
        // H_0 has its corners at 90°, 210°, 330°; the triangle at 0°, 120°, 240°.
        let h0 = make_h_eps(0.0).unwrap();
        let tri = make_regular_polygon(1).unwrap().rotated(FRAC_PI_2).unwrap();
        assert!(hausdorff_distance(h0.boundary().points(), tri.boundary().points()) < 1e-9);
        let hmax = make_h_eps(h_eps_max_side()).unwrap();
        let hex = make_regular_polygon(2).unwrap();
        assert!(hausdorff_distance(hmax.boundary().points(), hex.boundary().points()) < 1e-9);
    }

    #[test]
    fn constructors_validate_clean() {
        let bodies = [
            make_regular_polygon(1).unwrap(),
            make_regular_polygon(3).unwrap(),
            make_reuleaux(),
            make_h_eps(0.3).unwrap(),
            make_h_tilde().unwrap(),
            make_truncated_triangle(1.5).unwrap(),
        ];
        for body in &bodies {
            let report = validate(body);
            assert!(report.is_clean(), "{report}");
        }
    }

    #[test]
    fn validation_flags_convexity_coverage_and_symmetry() {
        let body = make_regular_polygon(3).unwrap();
        let mut profile = body.sector_profile().to_vec();
        profile[100].1 *= 2.0;
        let bumped = SymmetricBody::new("bumped", profile, vec![]).unwrap();
        assert!(!validate(&bumped).convexity_violations.is_empty());

        let truncated: Vec<(f64, f64)> =
            body.sector_profile().iter().copied().filter(|s| s.0 < FRAC_PI_2).collect();
        let short = SymmetricBody::new("short", truncated, vec![]).unwrap();
        assert!(!validate(&short).coverage_violations.is_empty());

        let mut full: Vec<(f64, f64)> = body.sector_profile().to_vec();
        full.push((SECTOR + 0.1, body.radius_at(0.1) * 1.01));
        let lopsided = SymmetricBody::new("lopsided", full, body.vertices_hint().to_vec()).unwrap();
        assert_eq!(validate(&lopsided).symmetry_violations.len(), 1);
    }

    #[test]
    fn malformed_profiles_rejected() {
        assert!(SymmetricBody::new("x", vec![(0.0, 1.0), (0.0, 1.0), (1.0, 1.0)], vec![]).is_err());
        assert!(SymmetricBody::new("x", vec![(0.0, 1.0), (0.5, -1.0), (1.0, 1.0)], vec![]).is_err());
        assert!(SymmetricBody::new("x", vec![(0.0, 1.0), (7.0, 1.0)], vec![]).is_err());
        assert!(SymmetricBody::new("x", vec![(0.0, f64::NAN), (1.0, 1.0)], vec![]).is_err());
    }

    #[test]
    fn normalization_is_idempotent_and_inverts_dilation() {
        let body = make_reuleaux();
        let once = normalize_unit_area(&body).unwrap();
        let twice = normalize_unit_area(&once).unwrap();
        for (a, b) in once.sector_profile().iter().zip(twice.sector_profile()) {
            assert!((a.1 - b.1).abs() < 1e-12);
        }
        let back = normalize_unit_area(&once.scaled(2.0).unwrap()).unwrap();
        for (a, b) in once.sector_profile().iter().zip(back.sector_profile()) {
            assert!((a.1 - b.1).abs() < 1e-9);
        }
        assert_eq!(back.label(), "reuleaux");
    }

    #[test]
    fn json_document_round_trip() {
        let body = make_h_eps(0.2).unwrap();
        let text = body.to_json().unwrap();
        let back = SymmetricBody::from_json(&text).unwrap();
        assert_eq!(back.to_json().unwrap(), text);
        assert_eq!(back.boundary().points(), body.boundary().points());
    }

    #[test]
    fn body_spec_parsing() {
        assert_eq!("triangle".parse::<BodySpec>().unwrap(), BodySpec::RegularPolygon { edges: 3 });
        assert_eq!("regular:15".parse::<BodySpec>().unwrap(), BodySpec::RegularPolygon { edges: 15 });
        assert_eq!("h_eps:0.25".parse::<BodySpec>().unwrap(), BodySpec::HEps { a: 0.25 });
        assert!(matches!("bodies/x.json".parse::<BodySpec>().unwrap(), BodySpec::CustomProfile { .. }));
        assert!("regular:10".parse::<BodySpec>().is_err());
        assert!("h_eps:0.9".parse::<BodySpec>().is_err());
        assert!("pentagon".parse::<BodySpec>().is_err());
    }

    #[test]
    fn truncated_triangle_range() {
        assert!(make_truncated_triangle(1.0).is_err());
        assert!(make_truncated_triangle(2.0).is_err());
        let body = make_truncated_triangle(1.3).unwrap();
        assert!((body.area() - 1.0).abs() < 1e-12);
    }
}
