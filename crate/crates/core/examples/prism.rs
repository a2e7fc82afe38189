//! The slice of I(L x [a, b]) through x_d = 0 is (b - a) IL.

use interbody::catalog;
use interbody::convexity::prism_slice_check;
use interbody::radial::radial_value;
use interbody::rational::{int, rat};
use interbody::vector;

fn main() -> interbody::Result<()> {
    let l = catalog::triangle();
    let k = l.prism(&int(-1), &rat(1, 2))?;
    let u = vector![2, 1];
    println!("rho_IL(u) = {}", radial_value(&l, &u)?);
    println!("rho_IK((u, 0)) = {}", radial_value(&k, &u.extend(int(0)))?);
    println!("identity on 200 directions: {}", prism_slice_check(&l, &int(-1), &rat(1, 2), 200, 3)?);
    Ok(())
}
