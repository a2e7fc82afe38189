//! For a centrally symmetric polygon, IP is the doubled quarter turn of P.

use interbody::catalog;
use interbody::convexity::gardner_check;
use interbody::export::boundary_2d;

fn main() -> interbody::Result<()> {
    for (name, p) in [
        ("square", catalog::square()),
        ("hexagon", catalog::hexagon()),
        ("skew hexagon", catalog::skew_hexagon()),
    ] {
        println!("{name}: IP = 2 r(P) exactly: {}", gardner_check(&p)?);
    }
    let rotated: Vec<String> = catalog::hexagon()
        .vertices()
        .iter()
        .map(|v| v.rot90().scale(&interbody::rational::int(2)).to_string())
        .collect();
    println!("vertices of 2 r(hexagon): {}", rotated.join(" "));
    let on_boundary = boundary_2d(&catalog::hexagon(), 12)?;
    println!("first sampled boundary point: {}", on_boundary[0].point);
    Ok(())
}
