//! Edges whose midpoint, used as the origin, makes P ∪ -P convex.

use interbody::catalog;
use interbody::convexity::admissible_edge_positions;

fn main() -> interbody::Result<()> {
    for (name, p) in [
        ("parallelogram", catalog::parallelogram()),
        ("acute triangle", catalog::acute_triangle()),
        ("obtuse triangle", catalog::obtuse_triangle()),
        ("hexagon", catalog::hexagon()),
    ] {
        let pos = admissible_edge_positions(&p)?;
        let mids: Vec<String> = pos.iter().map(|(_, m)| m.to_string()).collect();
        println!("{name}: {} admissible edges {}", pos.len(), mids.join(" "));
    }
    Ok(())
}
