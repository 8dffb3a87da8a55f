//! Writes SVG figures for the named bodies into a directory.
//!
//!     cargo run --example render_figures -- /tmp/figures

use std::path::PathBuf;

use trisect::render::{render_svg, Figure};
use trisect::BodySpec;

fn main() -> trisect::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;
    for name in ["triangle", "hexagon", "reuleaux", "h_eps:0.141227", "h_tilde"] {
        let body = name.parse::<BodySpec>()?.build()?;
        let file = dir.join(format!("{}.svg", name.replace(':', "_")));
        std::fs::write(&file, render_svg(&body, Figure::Standard)?)?;
        println!("{}", file.display());
    }
    Ok(())
}
