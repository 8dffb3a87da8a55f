//! Standard trisections of 3-rotationally symmetric planar convex bodies.
//!
//! A body is stored as a sampled radial profile over one 120° sector about
//! its center of symmetry (always the origin) and replicated three times.
//! The crate builds the smallest enclosing equilateral triangle, the
//! standard trisection joining the origin to that triangle's edge
//! midpoints, and evaluates the maximum relative diameter `d_M` both
//! geometrically and in closed form. The [`search`] module checks the
//! minimality and optimality statements over brute-force sweeps.
//!
//! ```
//! use trisect::{bodies, trisection};
//!
//! let triangle = bodies::make_regular_polygon(1).unwrap();
//! let dm = trisection::closed_form_dm_standard(&triangle);
//! assert!((dm - 0.877383).abs() < 1e-6);
//! ```

pub mod bodies;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod render;
pub mod roots;
pub mod search;
pub mod trisection;

pub use bodies::{BodySpec, SymmetricBody};
pub use error::{Error, Result};
pub use geometry::{ConvexPolygon, Point, Region};
pub use search::{SweepGrid, SweepReport};
pub use trisection::{EquiTriangle, Trisection};
