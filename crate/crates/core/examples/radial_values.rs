//! Exact radial function of the intersection body next to the float oracle.

use interbody::catalog;
use interbody::radial::{radial_oracle, radial_value};
use interbody::rational::{fmt_rat, to_f64};
use interbody::vector;

fn main() -> interbody::Result<()> {
    let shapes = [
        ("triangle", catalog::triangle()),
        ("square", catalog::square()),
        ("cube", catalog::cube(3, -1, 1)),
    ];
    for (name, p) in &shapes {
        let dirs = if p.dim() == 2 {
            vec![vector![1, 0], vector![1, 2], vector![-3, 1]]
        } else {
            vec![vector![1, 0, 0], vector![1, 1, 1], vector![5, 2, 4]]
        };
        for x in dirs {
            let exact = radial_value(p, &x)?;
            let float = radial_oracle(p, &x)?;
            println!("{name:9} x = {:12} rho = {:>10}  ({:.12} vs oracle {float:.12})", x.to_string(), fmt_rat(&exact), to_f64(&exact));
        }
    }
    Ok(())
}
