//! Certify real-rootedness and isolate roots of univariate polynomials.
//!
//! cargo run -p hypercone --example sturm_roots

use hypercone::rational::{frac, int};
use hypercone::realroots::squarefree_decomposition;
use hypercone::{all_roots_positive, all_roots_real, count_distinct_real_roots, isolate_real_roots, Bound, UniPoly};

fn main() -> hypercone::Result<()> {
    // (t-1)^2 (t-2) (t^2 - 2)
    let u = &UniPoly::from_roots(&[int(1), int(1), int(2)]) * &UniPoly::from_ints(&[-2, 0, 1]);
    println!("u(t) = {u}");
    println!("square-free factors:");
    for (k, f) in squarefree_decomposition(&u)? {
        println!("  ({f})^{k}");
    }
    println!(
        "distinct real roots: {}",
        count_distinct_real_roots(&u, &Bound::NegInf, &Bound::PosInf)?
    );
    println!("all roots real: {}, all positive: {}", all_roots_real(&u)?, all_roots_positive(&u)?);

    let iso = isolate_real_roots(&u, &frac(1, 1000))?;
    for r in &iso.roots {
        println!("  root in ({}, {}] multiplicity {}", r.lo, r.hi, r.multiplicity);
    }

    let v = &u * &UniPoly::from_ints(&[1, 0, 1]);
    println!("after multiplying by t^2 + 1: all roots real = {}", all_roots_real(&v)?);
    Ok(())
}
