//! Other trisections with the same d_M as the standard one: S-bent curves
//! for the hexagon, rotated segments for the triangle.

use trisect::bodies::make_regular_polygon;
use trisect::search::uniqueness_probe;
use trisect::trisection::max_relative_diameter;

fn main() -> trisect::Result<()> {
    for n in [2, 1] {
        let body = make_regular_polygon(n)?;
        let found = uniqueness_probe(&body, 12)?;
        println!("{}: {} alternative minimizers", body.label(), found.len());
        for tri in found.iter().take(3) {
            let shape = if tri.curves()[0].len() > 2 { "polyline" } else { "segments" };
            println!(
                "  {shape}, v1 at angle {:.4}, d_M {:.6}",
                tri.endpoints()[0].angle(),
                max_relative_diameter(&body, tri)?
            );
        }
    }
    Ok(())
}
