//! The product of coordinates is hyperbolic in direction (1, .., 1) and its
//! hyperbolicity cone is the open positive orthant.
//!
//! cargo run -p hypercone --example orthant_cone

use hypercone::{cone_contains, test_hyperbolic, Polynomial, SamplerConfig, Vector};

fn main() -> hypercone::Result<()> {
    let p = Polynomial::parse("w1*w2*w3*w4", 4)?;
    let e = Vector::from_ints(&[1, 1, 1, 1]);

    let w = Vector::from_ints(&[1, 2, 3, 4]);
    println!("p = {p}");
    println!("restriction through {w:?}: {}", p.restrict_line(&w, &e)?);

    let verdict = test_hyperbolic(&p, &e, &SamplerConfig::default())?;
    println!("hyperbolicity test: {}", serde_json::to_string(&verdict).unwrap());

    for point in [[1, 2, 3, 4], [1, -1, 1, 1], [0, 1, 1, 1], [5, 5, 5, 1]] {
        let w = Vector::from_ints(&point);
        println!("  {w:?} in cone: {}", cone_contains(&p, &e, &w)?);
    }
    Ok(())
}
