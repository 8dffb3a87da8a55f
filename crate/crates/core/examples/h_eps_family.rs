//! The hexagon family between the triangle and the regular hexagon: the
//! two competing distances, where they cross, and the check against the
//! geometric d_M.

use trisect::bodies::{h_eps_max_side, make_h_eps};
use trisect::search::sweep_h_eps;
use trisect::trisection::{h_eps_dm, max_relative_diameter, solve_a0, standard_trisection};

fn main() -> trisect::Result<()> {
    println!("{:>9} {:>9} {:>9} {:>9} {:>9}", "a", "dpx", "dv12", "dm", "geometric");
    for row in sweep_h_eps(17)? {
        let body = make_h_eps(row.a)?;
        let geometric = max_relative_diameter(&body, &standard_trisection(&body)?)?;
        println!("{:9.6} {:9.6} {:9.6} {:9.6} {:9.6}", row.a, row.dpx, row.dv12, row.dm, geometric);
    }
    let a0 = solve_a0()?;
    println!("a0 = {a0:.6} of {:.6}, min d_M = {:.6}", h_eps_max_side(), h_eps_dm(a0)?);
    Ok(())
}
