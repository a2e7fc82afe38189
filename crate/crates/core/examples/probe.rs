//! Random midpoint test of convexity in any dimension.

use interbody::catalog;
use interbody::probe::{midpoint_convexity_probe, seed_from_env};

fn main() -> interbody::Result<()> {
    let seed = seed_from_env();
    for (name, p) in [
        ("[0,2]^2", catalog::cube(2, 0, 2)),
        ("[-1,1]^3", catalog::cube(3, -1, 1)),
        ("icosahedron", catalog::icosahedron()),
    ] {
        let r = midpoint_convexity_probe(&p, 300, seed)?;
        match &r.violator {
            Some((x, y, m)) => println!("{name}: violated at x = {x}, y = {y}, margin {m}"),
            None => println!("{name}: no violation in {} pairs, min margin {:?}", r.evaluated, r.min_margin),
        }
    }
    Ok(())
}
