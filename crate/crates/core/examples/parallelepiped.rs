//! Boxes: IP is convex exactly for symmetric boxes, otherwise a chain of
//! prism slices reduces to a non-convex planar face.

use interbody::catalog;
use interbody::convexity::{parallelepiped_report, NonConvexReason, Verdict};

fn main() -> interbody::Result<()> {
    for (name, p) in [("[-1,1]^3", catalog::cube(3, -1, 1)), ("[0,2]^3", catalog::cube(3, 0, 2))] {
        let report = parallelepiped_report(&p)?;
        println!("{name}: {}", report.verdict.name());
        if let Verdict::NonConvex(NonConvexReason::SliceChain(chain)) = &report.verdict {
            for s in &chain.steps {
                println!("  slice x{} = 0, scale {}", s.axis + 1, s.factor);
            }
            let bounds = p.box_bounds().expect("box");
            println!("  base axes {:?}, chain verified: {}", chain.base_axes, chain.verify(&bounds, 50, 1)?);
        }
    }
    Ok(())
}
