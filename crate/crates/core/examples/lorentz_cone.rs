//! The Lorentz form w1^2 - w2^2 - .. - wn^2: hyperbolicity, membership,
//! convexity probing and moving an arbitrary direction to (1, 0, .., 0).
//!
//! cargo run -p hypercone --example lorentz_cone

use hypercone::dimcheck::lorentz_polynomial;
use hypercone::{cone_contains, cone_convexity_probe, test_hyperbolic, SamplerConfig, Vector};

fn main() -> hypercone::Result<()> {
    let p = lorentz_polynomial(3)?;
    let e = Vector::unit(3, 0);
    let cfg = SamplerConfig::default().with_trials(300);

    println!("p = {p}");
    println!("hyperbolic in (1,0,0): {:?}", test_hyperbolic(&p, &e, &cfg)?.outcome);
    println!("cone convexity probe:  {:?}", cone_convexity_probe(&p, &e, &cfg)?.outcome);
    for point in [[2, 1, 0], [1, 1, 0], [5, 3, 4], [5, 3, 3], [-2, 0, 1]] {
        let w = Vector::from_ints(&point);
        println!("  {w:?} in cone: {}", cone_contains(&p, &e, &w)?);
    }

    // (2, 1, 1) is inside the cone; after the change of variables it becomes
    // the first basis vector and p takes the value 1 there
    let inner = Vector::from_ints(&[2, 1, 1]);
    let (q, a) = p.normalize_direction(&inner)?;
    println!("normalized at {inner:?}: q = {q}");
    println!("change of basis: {a:?}");
    println!("q(1,0,0) = {}", q.eval(&e)?);

    // not a hyperbolic direction: p vanishes there
    match test_hyperbolic(&p, &Vector::from_ints(&[1, 1, 0]), &cfg) {
        Err(err) => println!("direction (1,1,0): {err}"),
        Ok(v) => println!("direction (1,1,0): {:?}", v.outcome),
    }
    Ok(())
}
