//! Move between hyperbolic forms on R^3 and real zero polynomials on R^2,
//! carrying determinantal certificates across, including the degree drop
//! of x^d.
//!
//! cargo run -p hypercone --example bridge_transport

use hypercone::rational::int;
use hypercone::{transport_lax_to_rz, transport_rz_to_lax, LaxTriple, Polynomial, SymMatrix};

fn main() -> hypercone::Result<()> {
    let p = Polynomial::parse("x^3 - x*y^2 - x*z^2 + 2*y*z^2", 3)?;
    let q = p.dehomogenize()?;
    println!("p = {p}");
    println!("q = p(1, ., .) = {q}");
    println!("x^3 q(y/x, z/x) = {}", q.homogenize(3)?);

    let triple = LaxTriple::new(SymMatrix::diag_ints(&[2]), SymMatrix::diag_ints(&[-1]))?;
    let q = Polynomial::parse("1 + 2*y - z", 2)?;
    let (lifted, padded) = transport_rz_to_lax(&q, &triple, 3)?;
    println!("lifting {q} to degree 3: {lifted}, B = {:?}", padded.b());
    let (back, _) = transport_lax_to_rz(&lifted, &padded)?;
    println!("and back: {back}");

    let x4 = Polynomial::monomial(vec![4, 0, 0], int(1));
    let zeros = LaxTriple::new(SymMatrix::zeros(4), SymMatrix::zeros(4))?;
    let (one, _) = transport_lax_to_rz(&x4, &zeros)?;
    println!("{x4} restricts to q = {one} of degree {}", one.degree()?);
    Ok(())
}
