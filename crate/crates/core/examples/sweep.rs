//! Verdicts of I(P + t) over a grid of translations of the square.

use interbody::catalog;
use interbody::sweep::{parse_grid, sweep};

fn main() -> interbody::Result<()> {
    let (xs, ys) = parse_grid("-1.5:1.5:5,-1.5:1.5:5")?;
    let rows = sweep(&catalog::square(), &xs, &ys)?;
    for j in (0..ys.steps).rev() {
        let line: String = rows
            .iter()
            .filter(|r| r.j == j)
            .map(|r| if r.verdict == "convex" { " C" } else { " ." })
            .collect();
        println!("{line}");
    }
    let regions = rows.iter().map(|r| r.region_id).max().map_or(0, |m| m + 1);
    println!("{} nodes in {regions} regions of L(P)", rows.len());
    Ok(())
}
