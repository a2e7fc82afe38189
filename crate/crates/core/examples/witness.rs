//! Certificate that IP is not convex for a polygon with P != -P.

use interbody::catalog;
use interbody::convexity::{convexity_report_2d, gap_multiplier, NonConvexReason, Verdict};
use interbody::rational::{fmt_rat, int};

fn main() -> interbody::Result<()> {
    println!("gap multiplier m(1, 2) = {}", fmt_rat(&gap_multiplier(&int(1), &int(2))));

    let p = catalog::triangle();
    let report = convexity_report_2d(&p)?;
    let Verdict::NonConvex(NonConvexReason::Witness(w)) = &report.verdict else {
        unreachable!("triangle is not symmetric");
    };
    let g = &w.geometry;
    println!("chamber {} with alpha = {}, beta = {}", w.chamber.cocircuit, g.alpha, g.beta);
    println!("p_a = {}, p_b = {}", g.p_a, g.p_b);
    println!("chord point q = {} lies beyond p_ab = {}", g.q, g.p_ab);
    println!("|q|^2 = {}, |p_ab|^2 = {}", g.q.norm_squared(), g.p_ab.norm_squared());
    println!("certificate rechecked against P: {}", w.verify(&p)?);
    Ok(())
}
