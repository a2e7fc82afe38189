//! The arrangement L(P) of translations and the polynomial dependence of
//! rho on the translation inside one region.

use interbody::arrangement::cocircuit_of;
use interbody::catalog;
use interbody::io::parse_vector;
use interbody::translation::{affine_arrangement, radial_polynomial_in_t, region_of, verify_cocircuit_stability};
use interbody::vector;

fn main() -> interbody::Result<()> {
    let p = catalog::triangle();
    let lines = affine_arrangement(&p);
    for h in &lines {
        println!("line <{}, t> = {}", h.normal, h.offset);
    }
    for t in [vector![0, 0], vector![0, 2], vector![0, -2]] {
        println!("t = {t}: region {}", region_of(&lines, &t)?.label());
    }
    println!(
        "same chambers at (0,2) and (1/10,2): {}",
        verify_cocircuit_stability(&p, &vector![0, 2], &parse_vector("1/10,2")?)?
    );

    let region = region_of(&lines, &vector![0, 2])?;
    let x = vector![2, 1];
    let s = cocircuit_of(&p.translate(&region.witness)?, &x)?;
    let poly = radial_polynomial_in_t(&p, &region, &s, &x)?;
    println!("rho_(I(P+t))({x}) = {poly} for t near (0,2)");
    Ok(())
}
