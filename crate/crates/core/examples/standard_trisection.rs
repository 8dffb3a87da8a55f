//! Standard trisection of a named body: enclosing triangle, endpoints,
//! region areas and d_M both ways.
//!
//!     cargo run --example standard_trisection -- reuleaux

use trisect::trisection::{
    closed_form_dm_standard, max_relative_diameter, smallest_enclosing_triangle, standard_trisection,
};
use trisect::BodySpec;

fn main() -> trisect::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "triangle".into());
    let body = name.parse::<BodySpec>()?.build()?;
    let tri = smallest_enclosing_triangle(&body);
    let standard = standard_trisection(&body)?;

    println!("{}: area {:.6}", body.label(), body.area());
    println!("enclosing triangle apothem {:.6}, side {:.6}", tri.apothem, tri.side());
    for (k, v) in standard.endpoints().iter().enumerate() {
        println!("v{} = ({:.6}, {:.6})", k + 1, v.x, v.y);
    }
    let areas = standard.region_areas();
    println!("region areas {:.6} {:.6} {:.6}", areas[0], areas[1], areas[2]);
    println!("d_M closed form {:.6}", closed_form_dm_standard(&body));
    println!("d_M geometric   {:.6}", max_relative_diameter(&body, &standard)?);
    Ok(())
}
