//! A nonempty semidefinite slice {w : sum_j w_j G_j > 0} is the
//! hyperbolicity cone of det(sum_j w_j G_j). This example expands a random
//! pencil and compares cone membership with positive definiteness.
//!
//! cargo run -p hypercone --example slice_cone

use hypercone::rational::int;
use hypercone::{all_roots_real, cone_contains, expand_det, slice_membership, Pencil, SymMatrix, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> hypercone::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut random_sym = |d: usize| {
        let mut rows = vec![vec![int(0); d]; d];
        for i in 0..d {
            for j in i..d {
                let x = int(rng.gen_range(-3..=3));
                rows[i][j] = x.clone();
                rows[j][i] = x;
            }
        }
        SymMatrix::new(rows)
    };
    let pencil = Pencil::new(vec![SymMatrix::identity(3), random_sym(3)?, random_sym(3)?])?;
    for (j, g) in pencil.matrices().iter().enumerate() {
        println!("G{} = {g:?}", j + 1);
    }
    let p = expand_det(&pencil);
    println!("det = {p}");

    let e = Vector::unit(3, 0);
    let mut agree = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let w = Vector::from_ints(&[rng.gen_range(0..=12), rng.gen_range(-3..=3), rng.gen_range(-3..=3)]);
        assert!(all_roots_real(&p.restrict_line(&w, &e)?)?);
        if cone_contains(&p, &e, &w)? == slice_membership(&pencil, &w)? {
            agree += 1;
        }
    }
    println!("cone membership matched positive definiteness on {agree}/200 points");
    Ok(())
}
