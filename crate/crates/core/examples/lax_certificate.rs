//! Verify p(x,y,z) = det(xI + yB + zC) exactly, and the matching real-zero
//! form q(y,z) = det(I + yB + zC).
//!
//! cargo run -p hypercone --example lax_certificate

use hypercone::rational::int;
use hypercone::{expand_det, is_real_zero, verify_lax, verify_real_zero_form, LaxTriple, Pencil, Polynomial, SamplerConfig, SymMatrix};

fn main() -> hypercone::Result<()> {
    let b = SymMatrix::diag_ints(&[1, -1]);
    let c = SymMatrix::from_ints(&[&[0, 1], &[1, 0]])?;
    let triple = LaxTriple::new(b.clone(), c)?;

    let p = Polynomial::parse("x^2 - y^2 - z^2", 3)?;
    println!("det(xI + yB + zC) = {}", expand_det(&Pencil::lax(&triple)));
    println!("certificate for {p}: {}", verify_lax(&p, &triple)?);

    let q = Polynomial::parse("1 - y^2 - z^2", 2)?;
    println!("real-zero form for {q}: {}", verify_real_zero_form(&q, &triple)?);
    println!("sampled real-zero test: {:?}", is_real_zero(&q, &SamplerConfig::default())?.outcome);

    let nudged = LaxTriple::new(b.with_entry(0, 1, int(1)), triple.c().clone())?;
    println!("after nudging B[0][1]: {}", verify_lax(&p, &nudged)?);
    Ok(())
}
