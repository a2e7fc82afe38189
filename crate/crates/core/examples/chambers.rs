//! Chambers of the central arrangement and the boundary piece of IP in each.

use interbody::arrangement::enumerate_chambers;
use interbody::catalog;
use interbody::radial::chamber_radial_piece;

fn main() -> interbody::Result<()> {
    let p = catalog::triangle();
    for c in enumerate_chambers(&p)? {
        let piece = chamber_radial_piece(&p, &c)?;
        println!(
            "{}  witness {:8}  edges {:?}  boundary {} = 0  (degree {})",
            c.cocircuit,
            c.witness.to_string(),
            c.crossed_edges,
            piece.boundary,
            piece.degree()
        );
    }
    let cube = catalog::cube(3, -1, 1);
    println!("[-1,1]^3 has {} chambers", enumerate_chambers(&cube)?.len());
    Ok(())
}
