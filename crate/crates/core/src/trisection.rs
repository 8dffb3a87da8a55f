//! Smallest enclosing equilateral triangle, standard trisection and the
//! maximum relative diameter `d_M`.
//!
//! For the standard trisection `d_M` is `max(√3 ρ, R)`, where `ρ` is the
//! distance from the center to the boundary (the apothem of the enclosing
//! triangle) and `R` the largest center-to-boundary distance.
//! [`closed_form_dm_standard`] evaluates that identity directly;
//! [`max_relative_diameter`] measures the three regions.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::bodies::{h_eps_max_side, h_eps_side_b, SymmetricBody};
use crate::error::{Error, Result};
use crate::geometry::{region_diameter, rotate, Point, Region, EPS};
use crate::roots::bisect;

/// Region areas may deviate from a third of the body by this fraction of
/// its area.
pub const AREA_TOL: f64 = 1e-4;

/// Boundary samples per region when measuring diameters.
pub const DEFAULT_REGION_SAMPLES: usize = 4096;

/// Equilateral triangle given by center, apothem and the direction from the
/// center to one edge midpoint.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquiTriangle {
    pub center: Point,
    pub apothem: f64,
    pub orientation: f64,
}

impl EquiTriangle {
    pub fn side(&self) -> f64 {
        2.0 * 3f64.sqrt() * self.apothem
    }

    /// Edge midpoints, counterclockwise from the one at `orientation`.
    pub fn edge_midpoints(&self) -> [Point; 3] {
        std::array::from_fn(|k| {
            self.center + Point::polar(self.apothem, self.orientation + k as f64 * TAU / 3.0)
        })
    }

    /// Vertices, counterclockwise; vertex `k` lies opposite midpoint `k`.
    pub fn vertices(&self) -> [Point; 3] {
        std::array::from_fn(|k| {
            self.center + Point::polar(2.0 * self.apothem, self.orientation + PI + k as f64 * TAU / 3.0)
        })
    }

    /// Whether `pt` is inside, allowing `slack` beyond each edge.
    pub fn contains(&self, pt: Point, slack: f64) -> bool {
        (0..3).all(|k| {
            let normal = Point::polar(1.0, self.orientation + k as f64 * TAU / 3.0);
            (pt - self.center).dot(normal) <= self.apothem + slack
        })
    }
}

/// A common point joined to three boundary points by polylines, with the
/// three regions they cut out.
#[derive(Clone, Debug, PartialEq)]
pub struct Trisection {
    common_point: Point,
    /// Each curve runs from the common point to its endpoint.
    curves: [Vec<Point>; 3],
    endpoints: [Point; 3],
    /// Boundary arc positions of the endpoints.
    positions: [f64; 3],
    regions: [Region; 3],
}

impl Trisection {
    /// Assembles a trisection from the common point, interior polyline
    /// vertices of each curve and endpoint arc positions, which must be in
    /// counterclockwise order along the boundary. Region `i` lies between
    /// curves `i` and `i + 1`.
    pub fn from_parts(
        body: &SymmetricBody,
        common_point: Point,
        interior: [Vec<Point>; 3],
        positions: [f64; 3],
    ) -> Result<Self> {
        let boundary = body.boundary();
        let perimeter = boundary.perimeter();
        if !boundary.contains(common_point, EPS) {
            return Err(Error::InvalidTrisection(format!(
                "common point ({}, {}) is not interior",
                common_point.x, common_point.y
            )));
        }
        let positions = positions.map(|s| s.rem_euclid(perimeter));
        let gaps: [f64; 3] =
            std::array::from_fn(|i| (positions[(i + 1) % 3] - positions[i]).rem_euclid(perimeter));
        let total: f64 = gaps.iter().sum();
        if gaps.iter().any(|&g| g <= 0.0) || (total - perimeter).abs() > 1e-9 * perimeter.max(1.0) {
            return Err(Error::InvalidTrisection("endpoints are not in counterclockwise order".into()));
        }
        let endpoints = positions.map(|s| boundary.point_at(s));
        let curves: [Vec<Point>; 3] = std::array::from_fn(|i| {
            let mut c = Vec::with_capacity(interior[i].len() + 2);
            c.push(common_point);
            c.extend_from_slice(&interior[i]);
            c.push(endpoints[i]);
            c
        });
        let mut regions = Vec::with_capacity(3);
        for i in 0..3 {
            let next = (i + 1) % 3;
            let mut pts = boundary.chain(positions[i], gaps[i]);
            pts.extend(curves[next].iter().rev().skip(1));
            pts.extend(curves[i].iter().take(curves[i].len() - 1));
            regions.push(Region::new(pts)?);
        }
        let regions: [Region; 3] = regions.try_into().expect("three regions");
        Ok(Self { common_point, curves, endpoints, positions, regions })
    }

    pub fn common_point(&self) -> Point {
        self.common_point
    }

    pub fn curves(&self) -> &[Vec<Point>; 3] {
        &self.curves
    }

    pub fn endpoints(&self) -> [Point; 3] {
        self.endpoints
    }

    pub fn positions(&self) -> [f64; 3] {
        self.positions
    }

    pub fn regions(&self) -> &[Region; 3] {
        &self.regions
    }

    pub fn region_areas(&self) -> [f64; 3] {
        std::array::from_fn(|i| self.regions[i].area())
    }

    /// Checks the equal-area condition against `body` within [`AREA_TOL`].
    pub fn check_areas(&self, body: &SymmetricBody) -> Result<()> {
        let third = body.area() / 3.0;
        for (i, area) in self.region_areas().iter().enumerate() {
            if (area - third).abs() > AREA_TOL * body.area() {
                return Err(Error::InvalidTrisection(format!(
                    "region {i} has area {area:.9}, expected {third:.9}"
                )));
            }
        }
        Ok(())
    }

    pub fn record(&self, d_m: f64) -> TrisectionRecord {
        TrisectionRecord {
            common_point: self.common_point,
            endpoint_angles: self.endpoints.map(|p| p.angle()),
            curves: self.curves.to_vec(),
            region_areas: self.region_areas(),
            d_m,
        }
    }
}

/// Serializable summary of a trisection. Endpoint angles are polar angles
/// about the center of symmetry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrisectionRecord {
    pub common_point: Point,
    pub endpoint_angles: [f64; 3],
    pub curves: Vec<Vec<Point>>,
    pub region_areas: [f64; 3],
    pub d_m: f64,
}

/// Boundary point nearest the center and its distance `ρ`.
pub fn nearest_boundary_point(body: &SymmetricBody) -> (Point, f64) {
    let (m, rho, _) = body.boundary().nearest(Point::ORIGIN);
    (m, rho)
}

/// The smallest equilateral triangle containing the body: its edges are
/// tangent at the nearest boundary point and at that point's two rotations.
pub fn smallest_enclosing_triangle(body: &SymmetricBody) -> EquiTriangle {
    let (m, rho) = nearest_boundary_point(body);
    EquiTriangle { center: Point::ORIGIN, apothem: rho, orientation: m.angle() }
}

/// Radius of the inscribed ball of the enclosing triangle.
pub fn inscribed_ball_radius(body: &SymmetricBody) -> f64 {
    nearest_boundary_point(body).1
}

/// Joins the center to the three edge midpoints of the enclosing triangle.
pub fn standard_trisection(body: &SymmetricBody) -> Result<Trisection> {
    let boundary = body.boundary();
    let (m, _, s0) = boundary.nearest(Point::ORIGIN);
    let mut positions = [s0; 3];
    for (k, pos) in positions.iter_mut().enumerate().skip(1) {
        let v = rotate(m, k as f64 * TAU / 3.0);
        *pos = boundary
            .ray_hit(Point::ORIGIN, v.angle())
            .ok_or_else(|| Error::Degenerate("no boundary hit from the center".into()))?;
    }
    Trisection::from_parts(body, Point::ORIGIN, Default::default(), positions)
}

/// `d_M`: the largest region diameter, at [`DEFAULT_REGION_SAMPLES`].
pub fn max_relative_diameter(body: &SymmetricBody, tri: &Trisection) -> Result<f64> {
    max_relative_diameter_with(body, tri, DEFAULT_REGION_SAMPLES)
}

pub fn max_relative_diameter_with(body: &SymmetricBody, tri: &Trisection, samples: usize) -> Result<f64> {
    tri.check_areas(body)?;
    tri.regions.iter().try_fold(0.0f64, |acc, r| Ok(acc.max(region_diameter(r, samples)?)))
}

/// `max(√3 ρ, R)`.
pub fn closed_form_dm_standard(body: &SymmetricBody) -> f64 {
    (3f64.sqrt() * inscribed_ball_radius(body)).max(body.max_radius())
}

/// `d_M` of the standard trisection of the unit-area regular `m`-gon.
pub fn dm_regular_closed_form(m: usize) -> Result<f64> {
    if m == 0 || !m.is_multiple_of(3) {
        return Err(Error::InvalidParameter(format!("{m} is not a positive multiple of 3")));
    }
    let mf = m as f64;
    let cot = 1.0 / (PI / mf).tan();
    Ok(if m == 3 {
        2.0 * cot.sqrt() / 3f64.sqrt()
    } else {
        3f64.sqrt() * mf.powf(-0.5) * cot.sqrt()
    })
}

fn check_side(a: f64) -> Result<()> {
    h_eps_side_b(a).map(|_| ())
}

/// Center-to-vertex distance of the unit-area `H_ε` with short side `a`.
pub fn h_eps_dpx(a: f64) -> Result<f64> {
    check_side(a)?;
    let s3 = 3f64.sqrt();
    let inner = 4.0 * s3 + 18.0 * a * a - 3.0 * a * (12.0 * s3 + 27.0 * a * a).sqrt();
    Ok(inner.sqrt() / 3.0)
}

/// Distance between two standard-trisection endpoints of `H_ε`.
pub fn h_eps_dv12(a: f64) -> Result<f64> {
    check_side(a)?;
    Ok(0.5 * (3.0 * a * a + 4.0 / 3f64.sqrt()).sqrt())
}

/// `max(dpx, dv12)`, the standard-trisection `d_M` of `H_ε`.
pub fn h_eps_dm(a: f64) -> Result<f64> {
    Ok(h_eps_dpx(a)?.max(h_eps_dv12(a)?))
}

/// The short side where the two `H_ε` distances cross.
pub fn solve_a0() -> Result<f64> {
    let f = |a: f64| h_eps_dpx(a).unwrap_or(f64::NAN) - h_eps_dv12(a).unwrap_or(f64::NAN);
    bisect(f, 0.0, h_eps_max_side(), 1e-13, 200)
}
