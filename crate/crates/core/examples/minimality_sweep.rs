//! Brute-force minimality check: equal-area segment trisections over a grid
//! of common points and first directions, then jittered polylines.
//!
//!     cargo run --release --example minimality_sweep -- hexagon 50 120

use trisect::search::{sweep_segment_trisections, SweepGrid};
use trisect::BodySpec;

fn main() -> trisect::Result<()> {
    let mut args = std::env::args().skip(1);
    let body = args.next().unwrap_or_else(|| "hexagon".into()).parse::<BodySpec>()?.build()?;
    let c_count = args.next().and_then(|s| s.parse().ok()).unwrap_or(50);
    let thetas = args.next().and_then(|s| s.parse().ok()).unwrap_or(120);

    let grid = SweepGrid::default_for(&body, c_count, thetas)?;
    let segments = sweep_segment_trisections(&body, &grid)?;
    let polylines = sweep_segment_trisections(&body, &SweepGrid::default_for(&body, 25, 20)?.perturbed(0.02, 7))?;

    for (kind, r) in [("segments", &segments), ("polylines", &polylines)] {
        println!(
            "{kind:>9}: {} cells, {} infeasible, min d_M {:.6} vs standard {:.6}, {} violations",
            r.evaluated,
            r.infeasible,
            r.min_dm,
            r.dm_standard,
            r.violations.len()
        );
    }
    let best = &segments.argmin;
    println!(
        "argmin: common point ({:.6}, {:.6}), endpoint angles {:.4} {:.4} {:.4}",
        best.common_point.x, best.common_point.y, best.endpoint_angles[0], best.endpoint_angles[1], best.endpoint_angles[2]
    );
    Ok(())
}
