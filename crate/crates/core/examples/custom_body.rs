//! Round trip of a body through the JSON profile format, and what
//! validation reports when the file breaks the symmetry.

use std::f64::consts::TAU;

use trisect::bodies::{normalize_unit_area, validate, BodyDocument};
use trisect::trisection::closed_form_dm_standard;
use trisect::SymmetricBody;

fn main() -> trisect::Result<()> {
    // a rounded triangle: r(θ) = 1 + 0.05 cos(3θ)
    let body = SymmetricBody::from_radial("rounded", 512, |t| 1.0 + 0.05 * (3.0 * t).cos(), vec![])?;
    let body = normalize_unit_area(&body)?;
    let text = body.to_json()?;
    let back = SymmetricBody::from_json(&text)?;
    println!("{} bytes of JSON; d_M {:.6} -> {:.6}", text.len(), closed_form_dm_standard(&body), closed_form_dm_standard(&back));
    println!("{}", validate(&back));

    // the same profile written out over the full turn, one sample nudged
    let mut doc: BodyDocument = back.to_document();
    let sector: Vec<[f64; 2]> = doc.sector_profile.clone();
    for k in 1..3 {
        doc.sector_profile.extend(sector.iter().map(|&[t, r]| [t + k as f64 * TAU / 3.0, r]));
    }
    let last = doc.sector_profile.len() - 1;
    doc.sector_profile[last][1] *= 1.01;
    let broken = SymmetricBody::from_document(doc)?;
    println!("{}", validate(&broken));
    Ok(())
}
