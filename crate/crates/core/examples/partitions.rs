//! Lower bounds that hold beyond trisections: the antipodal gap and
//! three-slab partitions cut by two parallel chords.

use std::f64::consts::PI;

use trisect::bodies::{make_regular_polygon, make_reuleaux, make_h_tilde};
use trisect::search::{antipodal_gap, two_chord_partition_dm};
use trisect::trisection::closed_form_dm_standard;

fn main() -> trisect::Result<()> {
    for body in [make_regular_polygon(1)?, make_regular_polygon(2)?, make_reuleaux(), make_h_tilde()?] {
        let worst = (0..36)
            .map(|k| two_chord_partition_dm(&body, PI * k as f64 / 36.0))
            .collect::<trisect::Result<Vec<_>>>()?
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        println!(
            "{:<9} antipodal gap {:.6}; best two-chord d_M {:.6} vs standard {:.6}",
            body.label(),
            antipodal_gap(&body, 1024)?,
            worst,
            closed_form_dm_standard(&body)
        );
    }
    Ok(())
}
