//! In two variables every form hyperbolic in (1, 0) with p(1, 0) = 1 equals
//! det(xI + yG) for the diagonal G holding the roots of t -> p(-t, 1).
//!
//! cargo run -p hypercone --example bivariate_diagonal

use hypercone::rational::frac;
use hypercone::{bivariate_representation, Polynomial};

fn main() -> hypercone::Result<()> {
    for s in ["x^2 - y^2", "x^2 - x*y - 6*y^2", "x^3 - 2*x*y^2", "x^4 - 5*x^2*y^2 + 4*y^4", "x^2"] {
        let p = Polynomial::parse(s, 2)?;
        let rep = bivariate_representation(&p, &frac(1, 1_000_000))?;
        println!("{p}");
        println!("  diag = {:?}", rep.diag);
        println!("  residual = {:e}", rep.residual);
    }
    let bad = Polynomial::parse("x^2 + y^2", 2)?;
    println!("{bad}: {}", bivariate_representation(&bad, &frac(1, 100)).unwrap_err());
    Ok(())
}
