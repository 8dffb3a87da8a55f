//! Brute-force checks of the minimality and optimality statements.
//!
//! Sweeps build equal-area trisections over a grid of common points and
//! first-endpoint directions and compare their `d_M` with the standard
//! trisection's closed form. The remaining operations cover the `H_ε`
//! family, the dilation-invariant quotient `d_M² / area`, the antipodal
//! bound and the non-uniqueness probes.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bodies::{
    h_eps_max_side, make_h_eps, make_h_tilde, make_regular_polygon, make_reuleaux, random_body, SymmetricBody,
};
use crate::error::{Error, Result};
use crate::geometry::{orient, polygon_area, region_diameter, Point, Region, EPS};
use crate::roots::bisect;
use crate::trisection::{
    closed_form_dm_standard, h_eps_dm, h_eps_dpx, h_eps_dv12, inscribed_ball_radius, max_relative_diameter_with,
    solve_a0, standard_trisection, Trisection, TrisectionRecord,
};

/// Sweep results below the closed form by more than this are violations.
pub const VIOLATION_TOL: f64 = 1e-3;

/// Slack on the two lower bounds `R` and `√3 ρ`.
pub const FLOOR_TOL: f64 = 1e-6;

/// Reported optimal value of `d_M² / area`, attained by `H̃`.
pub const QUOTIENT_BOUND: f64 = 0.591764;

/// Tolerance on [`QUOTIENT_BOUND`].
pub const QUOTIENT_TOL: f64 = 1e-4;

/// Two `d_M` values closer than this count as the same optimum.
pub const MINIMIZER_TOL: f64 = 1e-4;

/// Halvings of the arc-position bracket when solving for an endpoint.
const ENDPOINT_BISECTIONS: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveMode {
    Segments,
    PerturbedPolylines,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepGrid {
    pub c_points: Vec<Point>,
    pub theta1_count: usize,
    pub curve_mode: CurveMode,
    /// Largest perpendicular jitter of polyline mid-vertices.
    pub perturbation_magnitude: f64,
    pub seed: u64,
    /// Boundary samples per region for the diameters.
    pub region_samples: usize,
}

impl SweepGrid {
    /// Segment-mode grid of `c_count` common points: a hexagonal lattice over
    /// the inscribed ball (80%) plus points between the ball and the boundary
    /// (20%).
    pub fn default_for(body: &SymmetricBody, c_count: usize, theta1_count: usize) -> Result<Self> {
        if c_count == 0 {
            return Err(Error::InvalidParameter("grid needs at least one common point".into()));
        }
        let rho = inscribed_ball_radius(body);
        let outer = c_count / 5;
        let inner = c_count - outer;

        let mut lattice = Vec::new();
        let mut spacing = rho;
        while lattice.len() < inner {
            lattice = hex_lattice(0.95 * rho, spacing);
            spacing *= 0.85;
        }
        lattice.sort_by(|a, b| a.norm().total_cmp(&b.norm()).then(a.angle().total_cmp(&b.angle())));
        lattice.truncate(inner);

        let golden = PI * (3.0 - 5f64.sqrt());
        for k in 0..outer {
            let theta = golden * k as f64;
            let reach = body.radius_at(theta.rem_euclid(TAU));
            let frac = 0.1 + 0.75 * (k as f64 + 0.5) / outer as f64;
            lattice.push(Point::polar(rho + frac * (reach - rho), theta));
        }
        let grid = Self {
            c_points: lattice,
            theta1_count,
            curve_mode: CurveMode::Segments,
            perturbation_magnitude: 0.0,
            seed: 42,
            region_samples: 1024,
        };
        grid.check(body)?;
        Ok(grid)
    }

    pub fn perturbed(mut self, magnitude: f64, seed: u64) -> Self {
        self.curve_mode = CurveMode::PerturbedPolylines;
        self.perturbation_magnitude = magnitude;
        self.seed = seed;
        self
    }

    pub fn check(&self, body: &SymmetricBody) -> Result<()> {
        if self.theta1_count < 8 {
            return Err(Error::InvalidParameter(format!(
                "theta1_count must be at least 8, got {}",
                self.theta1_count
            )));
        }
        if self.c_points.is_empty() {
            return Err(Error::InvalidParameter("grid has no common points".into()));
        }
        if let Some(c) = self.c_points.iter().find(|&&c| !body.boundary().contains(c, EPS)) {
            return Err(Error::InvalidParameter(format!("common point ({}, {}) is not interior", c.x, c.y)));
        }
        if !(self.perturbation_magnitude >= 0.0 && self.perturbation_magnitude.is_finite()) {
            return Err(Error::InvalidParameter("perturbation magnitude must be finite and >= 0".into()));
        }
        Ok(())
    }
}

fn hex_lattice(radius: f64, spacing: f64) -> Vec<Point> {
    let steps = (radius / spacing).ceil() as i64 + 1;
    let (ex, ey) = (Point::new(spacing, 0.0), Point::polar(spacing, PI / 3.0));
    let mut out = Vec::new();
    for i in -2 * steps..=2 * steps {
        for j in -2 * steps..=2 * steps {
            let p = ex * i as f64 + ey * j as f64;
            if p.norm() <= radius {
                out.push(p);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub trisection: TrisectionRecord,
    /// How far `d_M` fell below the reference value.
    pub deficit: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub body_label: String,
    pub grid: SweepGrid,
    pub evaluated: usize,
    pub infeasible: usize,
    pub min_dm: f64,
    pub argmin: TrisectionRecord,
    pub dm_standard: f64,
    pub tolerance: f64,
    /// Trisections with `d_M < dm_standard - tolerance`.
    pub violations: Vec<Violation>,
    /// `max(R, √3 ρ)`.
    pub floor: f64,
    /// Trisections with `d_M < floor - FLOOR_TOL`.
    pub floor_violations: Vec<Violation>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.floor_violations.is_empty()
    }
}

fn path_cross(points: &[Point]) -> f64 {
    points.windows(2).map(|w| w[0].cross(w[1])).sum()
}

/// Solves the second and third endpoints so that the first two regions
/// each take a third of the area. Curve `i` runs from `c` through
/// `interior[i]` to its endpoint; interior vertices stay fixed.
fn solve_positions(body: &SymmetricBody, c: Point, s1: f64, interior: &[Vec<Point>; 3]) -> Result<[f64; 3]> {
    let boundary = body.boundary();
    let perimeter = boundary.perimeter();
    let target = body.area() / 3.0;
    let mut positions = [s1, 0.0, 0.0];
    for i in 0..2 {
        let start = positions[i];
        let w_start = boundary.point_at(start);
        let mut head = Vec::with_capacity(interior[i].len() + 2);
        head.push(c);
        head.extend_from_slice(&interior[i]);
        head.push(w_start);
        let head_cross = path_cross(&head);
        let tail_rev: Vec<Point> = interior[i + 1].iter().rev().copied().chain([c]).collect();
        let area = |gap: f64| {
            let w_end = boundary.point_at(start + gap);
            let mut tail_cross = 0.0;
            let mut prev = w_end;
            for &q in &tail_rev {
                tail_cross += prev.cross(q);
                prev = q;
            }
            0.5 * (head_cross + boundary.chain_cross(start, gap) + tail_cross) - target
        };
        let (lo, hi) = (perimeter * 1e-12, perimeter * (1.0 - 1e-12));
        let gap = bisect(area, lo, hi, 0.0, ENDPOINT_BISECTIONS)
            .map_err(|e| Error::Infeasible(format!("no equal-area endpoint for region {i}: {e}")))?;
        positions[i + 1] = start + gap;
    }
    Ok(positions)
}

fn assemble(body: &SymmetricBody, c: Point, interior: [Vec<Point>; 3], positions: [f64; 3]) -> Result<Trisection> {
    let tri = Trisection::from_parts(body, c, interior, positions).map_err(|e| match e {
        Error::InvalidTrisection(m) | Error::Degenerate(m) => Error::Infeasible(m),
        other => other,
    })?;
    let third = body.area() / 3.0;
    let last = tri.region_areas()[2];
    if (last - third).abs() > 2e-6 {
        return Err(Error::Infeasible(format!("third region area {last:.9} off by more than 2e-6")));
    }
    Ok(tri)
}

/// Trisection by three segments from `c`, the first ending where the ray
/// from `c` at angle `theta1` leaves the body.
pub fn equal_area_segment_trisection(body: &SymmetricBody, c: Point, theta1: f64) -> Result<Trisection> {
    let boundary = body.boundary();
    if !boundary.contains(c, EPS) {
        return Err(Error::Infeasible(format!("common point ({}, {}) is not interior", c.x, c.y)));
    }
    let s1 = boundary
        .ray_hit(c, theta1)
        .ok_or_else(|| Error::Infeasible("ray from the common point misses the boundary".into()))?;
    let interior: [Vec<Point>; 3] = Default::default();
    let positions = solve_positions(body, c, s1, &interior)?;
    assemble(body, c, interior, positions)
}

fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = orient(a, b, c);
    let d2 = orient(a, b, d);
    let d3 = orient(c, d, a);
    let d4 = orient(c, d, b);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

/// Whether two curves (sharing their first point) intersect elsewhere.
fn curves_cross(a: &[Point], b: &[Point]) -> bool {
    for (i, sa) in a.windows(2).enumerate() {
        for (j, sb) in b.windows(2).enumerate() {
            if i == 0 && j == 0 {
                // both leave the common point; only a fold-back counts
                let (u, v) = (sa[1] - sa[0], sb[1] - sb[0]);
                if u.cross(v).abs() <= 1e-15 * u.norm() * v.norm() && u.dot(v) > 0.0 {
                    return true;
                }
                continue;
            }
            if segments_cross(sa[0], sa[1], sb[0], sb[1]) {
                return true;
            }
        }
    }
    false
}

/// Replaces each segment of `base` by a polyline whose two mid-vertices are
/// jittered perpendicular by at most `magnitude`, then restores the equal
/// areas by moving the second and third endpoints.
pub fn perturbed_polyline_trisection<R: Rng>(
    body: &SymmetricBody,
    base: &Trisection,
    magnitude: f64,
    rng: &mut R,
) -> Result<Trisection> {
    let boundary = body.boundary();
    let c = base.common_point();
    let endpoints = base.endpoints();
    let interior: [Vec<Point>; 3] = std::array::from_fn(|k| {
        let dir = endpoints[k] - c;
        let len = dir.norm();
        let normal = if len > 0.0 { Point::new(-dir.y / len, dir.x / len) } else { Point::ORIGIN };
        [1.0 / 3.0, 2.0 / 3.0]
            .iter()
            .map(|&f| c + dir * f + normal * rng.gen_range(-magnitude..=magnitude))
            .collect()
    });
    if interior.iter().flatten().any(|&q| !boundary.contains(q, EPS)) {
        return Err(Error::Infeasible("jittered vertex left the body".into()));
    }
    let positions = solve_positions(body, c, base.positions()[0], &interior)?;
    let tri = assemble(body, c, interior, positions)?;
    let curves = tri.curves();
    for i in 0..3 {
        if curves_cross(&curves[i], &curves[(i + 1) % 3]) {
            return Err(Error::Infeasible("jittered curves intersect".into()));
        }
    }
    Ok(tri)
}

/// Whether `d_M(tri)` clears `R` and `√3 ρ`, each less [`FLOOR_TOL`].
pub fn lemma_floor_checks(body: &SymmetricBody, tri: &Trisection) -> Result<(bool, bool)> {
    let dm = max_relative_diameter_with(body, tri, crate::trisection::DEFAULT_REGION_SAMPLES)?;
    Ok(floor_flags(body, dm))
}

fn floor_flags(body: &SymmetricBody, dm: f64) -> (bool, bool) {
    let far = body.max_radius();
    let endpoints = 3f64.sqrt() * inscribed_ball_radius(body);
    (dm >= far - FLOOR_TOL, dm >= endpoints - FLOOR_TOL)
}

enum Cell {
    Feasible { dm: f64, record: TrisectionRecord },
    Infeasible,
}

fn cell_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Evaluates `d_M` on every feasible grid cell and compares with the
/// standard trisection's closed form.
pub fn sweep_segment_trisections(body: &SymmetricBody, grid: &SweepGrid) -> Result<SweepReport> {
    grid.check(body)?;
    let thetas = grid.theta1_count;
    let cells = grid.c_points.len() * thetas;

    let results: Vec<Result<Cell>> = (0..cells)
        .into_par_iter()
        .map(|index| {
            let c = grid.c_points[index / thetas];
            let theta1 = TAU * (index % thetas) as f64 / thetas as f64;
            let built = equal_area_segment_trisection(body, c, theta1).and_then(|tri| match grid.curve_mode {
                CurveMode::Segments => Ok(tri),
                CurveMode::PerturbedPolylines => {
                    let mut rng = cell_rng(grid.seed, index);
                    perturbed_polyline_trisection(body, &tri, grid.perturbation_magnitude, &mut rng)
                }
            });
            match built {
                Ok(tri) => {
                    let dm = max_relative_diameter_with(body, &tri, grid.region_samples)?;
                    Ok(Cell::Feasible { dm, record: tri.record(dm) })
                }
                Err(Error::Infeasible(_)) => Ok(Cell::Infeasible),
                Err(e) => Err(e),
            }
        })
        .collect();

    let dm_standard = closed_form_dm_standard(body);
    let floor = body.max_radius().max(3f64.sqrt() * inscribed_ball_radius(body));
    let mut evaluated = 0;
    let mut infeasible = 0;
    let mut best: Option<(f64, TrisectionRecord)> = None;
    let mut violations = Vec::new();
    let mut floor_violations = Vec::new();
    for cell in results {
        match cell? {
            Cell::Infeasible => infeasible += 1,
            Cell::Feasible { dm, record } => {
                evaluated += 1;
                if dm < dm_standard - VIOLATION_TOL {
                    violations.push(Violation { trisection: record.clone(), deficit: dm_standard - dm });
                }
                let (far, ends) = floor_flags(body, dm);
                if !(far && ends) {
                    floor_violations.push(Violation { trisection: record.clone(), deficit: floor - dm });
                }
                if best.as_ref().is_none_or(|(b, _)| dm < *b) {
                    best = Some((dm, record));
                }
            }
        }
    }
    let (min_dm, argmin) =
        best.ok_or_else(|| Error::Infeasible(format!("no feasible cell among {cells} for {}", body.label())))?;
    Ok(SweepReport {
        body_label: body.label().to_string(),
        grid: grid.clone(),
        evaluated,
        infeasible,
        min_dm,
        argmin,
        dm_standard,
        tolerance: VIOLATION_TOL,
        violations,
        floor,
        floor_violations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HEpsRow {
    pub a: f64,
    pub dpx: f64,
    pub dv12: f64,
    pub dm: f64,
}

/// `count` uniform samples of the `H_ε` family, from the triangle (`a = 0`)
/// to the regular hexagon.
pub fn sweep_h_eps(count: usize) -> Result<Vec<HEpsRow>> {
    if count < 16 {
        return Err(Error::InvalidParameter(format!("need at least 16 samples, got {count}")));
    }
    let amax = h_eps_max_side();
    (0..count)
        .map(|k| {
            let a = amax * k as f64 / (count - 1) as f64;
            Ok(HEpsRow { a, dpx: h_eps_dpx(a)?, dv12: h_eps_dv12(a)?, dm: h_eps_dm(a)? })
        })
        .collect()
}

/// CSV with header `a,dpx,dv12,dm`, values to 6 decimals.
pub fn h_eps_csv(rows: &[HEpsRow]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["a", "dpx", "dv12", "dm"]).map_err(csv_error)?;
    for r in rows {
        writer
            .write_record([r.a, r.dpx, r.dv12, r.dm].map(|v| format!("{v:.6}")))
            .map_err(csv_error)?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Format(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
}

/// Parses the rows written by [`h_eps_csv`]; stops at the first line that
/// is not a four-column record (the `key=value` footer).
pub fn parse_h_eps_csv(text: &str) -> Result<Vec<HEpsRow>> {
    let mut reader = csv::ReaderBuilder::new().flexible(true).from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        if record.len() != 4 {
            break;
        }
        let v: Vec<f64> = record
            .iter()
            .map(|f| f.parse::<f64>().map_err(|_| Error::Format(format!("bad number {f:?}"))))
            .collect::<Result<_>>()?;
        rows.push(HEpsRow { a: v[0], dpx: v[1], dv12: v[2], dm: v[3] });
    }
    Ok(rows)
}

fn csv_error(e: csv::Error) -> Error {
    Error::Format(e.to_string())
}

/// `d_M(T_b)² / area`, invariant under dilation.
pub fn functional_quotient(body: &SymmetricBody) -> f64 {
    closed_form_dm_standard(body).powi(2) / body.area()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientEntry {
    pub label: String,
    pub quotient: f64,
    /// `quotient >= QUOTIENT_BOUND - QUOTIENT_TOL`.
    pub above_bound: bool,
    /// `|quotient - QUOTIENT_BOUND| <= QUOTIENT_TOL`.
    pub equality: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimalityReport {
    pub bound: f64,
    pub entries: Vec<QuotientEntry>,
}

impl OptimalityReport {
    /// Every candidate clears the bound and only `h_tilde` meets it.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.above_bound && (!e.equality || e.label == "h_tilde"))
    }

    pub fn failures(&self) -> Vec<&QuotientEntry> {
        self.entries.iter().filter(|e| !e.above_bound || (e.equality && e.label != "h_tilde")).collect()
    }
}

pub fn verify_h_tilde_optimal(candidates: &[SymmetricBody]) -> OptimalityReport {
    let entries = candidates
        .iter()
        .map(|body| {
            let quotient = functional_quotient(body);
            QuotientEntry {
                label: body.label().to_string(),
                quotient,
                above_bound: quotient >= QUOTIENT_BOUND - QUOTIENT_TOL,
                equality: (quotient - QUOTIENT_BOUND).abs() <= QUOTIENT_TOL,
            }
        })
        .collect();
    OptimalityReport { bound: QUOTIENT_BOUND, entries }
}

/// Triangle, hexagon, enneagon, Reuleaux and `H̃`, then `h_eps_count`
/// uniform `H_ε` samples and `random_count` seeded random bodies.
pub fn candidate_pool(seed: u64, h_eps_count: usize, random_count: usize) -> Result<Vec<SymmetricBody>> {
    let mut pool = vec![
        make_regular_polygon(1)?,
        make_regular_polygon(2)?,
        make_regular_polygon(3)?,
        make_reuleaux(),
        make_h_tilde()?,
    ];
    let amax = h_eps_max_side();
    for k in 0..h_eps_count {
        let a = if h_eps_count > 1 { amax * k as f64 / (h_eps_count - 1) as f64 } else { solve_a0()? };
        pool.push(make_h_eps(a)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..random_count {
        pool.push(random_body(&mut rng, i)?);
    }
    Ok(pool)
}

/// Smallest `d(y, ȳ) - √3 ρ` over `sample_count` lines through the center,
/// `y` and `ȳ` being where a line leaves the body on either side.
pub fn antipodal_gap(body: &SymmetricBody, sample_count: usize) -> Result<f64> {
    if sample_count < 64 {
        return Err(Error::InvalidParameter(format!("need at least 64 directions, got {sample_count}")));
    }
    let reference = 3f64.sqrt() * inscribed_ball_radius(body);
    let min = (0..sample_count)
        .map(|k| {
            let phi = PI * k as f64 / sample_count as f64;
            body.radius_at(phi) + body.radius_at(phi + PI)
        })
        .fold(f64::INFINITY, f64::min);
    Ok(min - reference)
}

/// Largest vertex displacement between two trisections with matching curve
/// shapes; infinite when the shapes differ.
fn trisection_distance(a: &Trisection, b: &Trisection) -> f64 {
    let mut worst = a.common_point().dist(b.common_point());
    for (ca, cb) in a.curves().iter().zip(b.curves()) {
        if ca.len() != cb.len() {
            return f64::INFINITY;
        }
        for (p, q) in ca.iter().zip(cb) {
            worst = worst.max(p.dist(*q));
        }
    }
    worst
}

/// Deforms the standard trisection and keeps the deformations whose `d_M`
/// matches it within [`MINIMIZER_TOL`].
///
/// When `d_M(T_b)` comes from the endpoints (`√3 ρ >= R`), each curve gets an
/// area-neutral S-bend that leaves the endpoints and the center in place.
/// Otherwise the three segments rotate rigidly about the center.
pub fn uniqueness_probe(body: &SymmetricBody, samples: usize) -> Result<Vec<Trisection>> {
    if samples < 10 {
        return Err(Error::InvalidParameter(format!("need at least 10 samples, got {samples}")));
    }
    let standard = standard_trisection(body)?;
    let samples_per_region = crate::trisection::DEFAULT_REGION_SAMPLES;
    let dm_standard = max_relative_diameter_with(body, &standard, samples_per_region)?;
    let rho = inscribed_ball_radius(body);
    let endpoint_dominated = 3f64.sqrt() * rho >= body.max_radius() - EPS;

    let mut found: Vec<Trisection> = Vec::new();
    for k in 0..samples {
        let step = (k / 2 + 1) as f64 / samples as f64;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let candidate = if endpoint_dominated {
            let bend = sign * 0.1 * rho * step;
            let ends = standard.endpoints();
            let interior: [Vec<Point>; 3] = std::array::from_fn(|i| {
                let dir = ends[i];
                let normal = Point::new(-dir.y, dir.x) * (1.0 / dir.norm());
                vec![dir * (1.0 / 3.0) + normal * bend, dir * (2.0 / 3.0) - normal * bend]
            });
            Trisection::from_parts(body, Point::ORIGIN, interior, standard.positions())
        } else {
            let angle = sign * 0.2 * step;
            equal_area_segment_trisection(body, Point::ORIGIN, standard.endpoints()[0].angle() + angle)
        };
        let Ok(candidate) = candidate else { continue };
        let Ok(dm) = max_relative_diameter_with(body, &candidate, samples_per_region) else { continue };
        if (dm - dm_standard).abs() > MINIMIZER_TOL {
            continue;
        }
        let distinct = std::iter::once(&standard)
            .chain(found.iter())
            .all(|other| trisection_distance(&candidate, other) > 1e-6);
        if distinct {
            found.push(candidate);
        }
    }
    Ok(found)
}

/// Keeps the part of a convex polygon with `<x, u> >= t`.
fn clip_half_plane(poly: &[Point], u: Point, t: f64) -> Vec<Point> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        let (fa, fb) = (a.dot(u) - t, b.dot(u) - t);
        if fa >= 0.0 {
            out.push(a);
        }
        if (fa >= 0.0) != (fb >= 0.0) {
            out.push(a.lerp(b, fa / (fa - fb)));
        }
    }
    out
}

/// Splits the body by two chords perpendicular to direction `angle` into
/// three equal-area slabs and returns their largest diameter.
pub fn two_chord_partition_dm(body: &SymmetricBody, angle: f64) -> Result<f64> {
    let pts = body.boundary().points();
    let target = body.area() / 3.0;
    let u = Point::polar(1.0, angle);
    let reach = body.max_radius();
    let cut = |dir: Point| -> Result<f64> {
        bisect(|t| polygon_area(&clip_half_plane(pts, dir, t)) - target, -reach, reach, 1e-14, 200)
    };
    let t_hi = cut(u)?;
    let t_lo = cut(-u)?;
    let top = clip_half_plane(pts, u, t_hi);
    let bottom = clip_half_plane(pts, -u, t_lo);
    let middle = clip_half_plane(&clip_half_plane(pts, u, -t_lo), -u, -t_hi);
    [top, middle, bottom].into_iter().try_fold(0.0f64, |acc, part| {
        Ok(acc.max(region_diameter(&Region::new(part)?, 0)?))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::hausdorff_distance;
    use crate::geometry::rotate;

    #[test]
    fn centered_segment_trisection_reproduces_standard() {
        let hex = make_regular_polygon(2).unwrap();
        let standard = standard_trisection(&hex).unwrap();
        let angle = standard.endpoints()[0].angle();
        let tri = equal_area_segment_trisection(&hex, Point::ORIGIN, angle).unwrap();
        for (a, b) in tri.endpoints().iter().zip(standard.endpoints()) {
            assert!(a.dist(b) < 1e-6);
        }
    }

    #[test]
    fn centered_trisections_are_congruent() {
        let body = make_reuleaux();
        let tri = equal_area_segment_trisection(&body, Point::ORIGIN, 0.4).unwrap();
        let regions = tri.regions();
        for i in 0..3 {
            let rotated: Vec<Point> =
                regions[i].boundary().iter().map(|&p| rotate(p, TAU / 3.0)).collect();
            assert!(hausdorff_distance(&rotated, regions[(i + 1) % 3].boundary()) < 1e-6);
            assert!((tri.region_areas()[i] - 1.0 / 3.0).abs() < 2e-6);
        }
    }

    #[test]
    fn boundary_common_point_is_infeasible() {
        let hex = make_regular_polygon(2).unwrap();
        let on_boundary = hex.boundary().points()[0];
        assert!(matches!(
            equal_area_segment_trisection(&hex, on_boundary, 1.0),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn grid_rejects_too_few_angles() {
        let hex = make_regular_polygon(2).unwrap();
        assert!(SweepGrid::default_for(&hex, 10, 0).is_err());
        assert!(SweepGrid::default_for(&hex, 10, 7).is_err());
        let grid = SweepGrid::default_for(&hex, 50, 8).unwrap();
        assert_eq!(grid.c_points.len(), 50);
        assert!(grid.c_points.contains(&Point::ORIGIN));
    }

    #[test]
    fn antipodal_gap_of_constant_radius_profile() {
        let r = 0.6;
        let disk = SymmetricBody::from_radial("disk", 1024, |_| r, vec![]).unwrap();
        let gap = antipodal_gap(&disk, 256).unwrap();
        assert!((gap - (2.0 - 3f64.sqrt()) * r).abs() < 1e-5);
        assert!(antipodal_gap(&disk, 10).is_err());
    }

    #[test]
    fn h_eps_table_shape() {
        let rows = sweep_h_eps(32).unwrap();
        assert!(rows.windows(2).all(|w| w[1].dpx < w[0].dpx && w[1].dv12 > w[0].dv12));
        assert!(sweep_h_eps(15).is_err());
        let csv = h_eps_csv(&rows).unwrap();
        assert!(csv.starts_with("a,dpx,dv12,dm\n"));
        assert_eq!(parse_h_eps_csv(&csv).unwrap().len(), 32);
    }

    #[test]
    fn two_chord_partitions_respect_the_bound() {
        for body in [make_regular_polygon(2).unwrap(), make_reuleaux()] {
            let floor = closed_form_dm_standard(&body);
            for k in 0..24 {
                let dm = two_chord_partition_dm(&body, TAU * k as f64 / 24.0).unwrap();
                assert!(dm >= floor - FLOOR_TOL, "{}: {dm} < {floor}", body.label());
            }
        }
    }
}
