//! The optimal body: its construction, the quotient d_M^2/area, and the
//! ranking of a seeded candidate pool.

use trisect::bodies::h_tilde_construction;
use trisect::search::{candidate_pool, verify_h_tilde_optimal, QUOTIENT_BOUND};
use trisect::trisection::{closed_form_dm_standard, inscribed_ball_radius};

fn main() -> trisect::Result<()> {
    let h = h_tilde_construction()?;
    println!("start from H_a at a0 = {:.6}; arc radius {:.6}; shrink by {:.6}", h.a0, h.radius, h.scale);
    let body = &h.body;
    println!(
        "rho {:.6}, R {:.6}, d_M {:.6}",
        inscribed_ball_radius(body),
        body.max_radius(),
        closed_form_dm_standard(body)
    );

    let pool = candidate_pool(42, 40, 100)?;
    let report = verify_h_tilde_optimal(&pool);
    let mut ranked = report.entries.clone();
    ranked.sort_by(|a, b| a.quotient.total_cmp(&b.quotient));
    println!("bound {QUOTIENT_BOUND}; five smallest of {}:", ranked.len());
    for e in ranked.iter().take(5) {
        println!("  {:<32} {:.6}{}", e.label, e.quotient, if e.equality { "  (equality)" } else { "" });
    }
    println!("passed: {}", report.passed());
    Ok(())
}
