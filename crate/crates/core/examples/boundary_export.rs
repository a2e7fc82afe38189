//! Boundary samples of IP: a CSV polyline for a polygon and an OFF mesh for
//! a polytope, written to the system temp directory.

use interbody::catalog;
use interbody::export::{boundary_2d, boundary_3d, to_csv, to_off};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir();
    let csv = to_csv(&boundary_2d(&catalog::triangle(), 64)?, false);
    let off = to_off(&boundary_3d(&catalog::cube(3, 0, 2), 162)?, false);
    std::fs::write(dir.join("triangle_ip.csv"), &csv)?;
    std::fs::write(dir.join("cube_ip.off"), &off)?;
    println!("{}", csv.lines().take(4).collect::<Vec<_>>().join("\n"));
    println!("{}", off.lines().take(2).collect::<Vec<_>>().join("\n"));
    println!("wrote {}", dir.display());
    Ok(())
}
