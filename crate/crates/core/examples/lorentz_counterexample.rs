//! For n > 3 the Lorentz form is not det(sum_j w_j G_j) for any 2 x 2
//! symmetric G_j: a nonzero w with w1 = 0 zeroing the first row of the
//! pencil makes the determinant vanish while the form is negative. The
//! dimension count shows the same obstruction in general for large d.
//!
//! cargo run -p hypercone --example lorentz_counterexample

use hypercone::dimcheck::lorentz_polynomial;
use hypercone::rational::int;
use hypercone::{dimension_report, expand_det, refute_2x2_pencil, Pencil, SymMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> hypercone::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let n = 5;
    let pencil = Pencil::new(
        (0..n)
            .map(|_| {
                let (a, b, c) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3));
                SymMatrix::new(vec![vec![int(a), int(b)], vec![int(b), int(c)]])
            })
            .collect::<hypercone::Result<_>>()?,
    )?;
    let w = refute_2x2_pencil(&pencil)?;
    let lorentz = lorentz_polynomial(n)?;
    println!("witness w = {w:?}");
    println!("det(sum w_j G_j) = {}", expand_det(&pencil).eval(&w)?);
    println!("{lorentz} at w = {}", lorentz.eval(&w)?);

    println!("\n n  d  n*C(d+1,2)  C(n+d-1,d)  smaller");
    for (n, d) in [(3, 2), (3, 10), (4, 6), (4, 7), (4, 10), (5, 3), (6, 2)] {
        let r = dimension_report(n, d)?;
        println!("{:>2} {:>2} {:>11} {:>11}  {}", r.n, r.d, r.det_image_dim, r.poly_space_dim, r.det_smaller);
    }
    Ok(())
}
