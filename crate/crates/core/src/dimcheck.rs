//! Dimension counts for determinantal polynomials and the explicit
//! counterexample showing the Lorentz quadratic in `n > 3` variables has no
//! `2 x 2` symmetric determinantal representation.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lax::Pencil;
use crate::poly::{Polynomial, Vector};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub n: u64,
    pub d: u64,
    /// Upper bound `n * C(d+1, 2)` on the dimension of polynomials
    /// `det(sum_j w_j G_j)` with `G_j` in `S^d`.
    pub det_image_dim: u64,
    /// `C(n+d-1, d)`, the dimension of degree-`d` forms in `n` variables.
    pub poly_space_dim: u64,
    pub det_smaller: bool,
}

fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // exact at every step: acc * (n - i) / (i + 1) is C(n, i + 1)
        acc = acc
            .checked_mul(n as u128 - i)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial coefficient"))
}

pub fn dimension_report(n: u64, d: u64) -> Result<DimReport> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be at least 1".into()));
    }
    let det_image_dim = n
        .checked_mul(binomial(d + 1, 2)?)
        .ok_or(Error::Overflow("n * C(d+1, 2)"))?;
    let poly_space_dim = binomial(n + d - 1, d)?;
    Ok(DimReport { n, d, det_image_dim, poly_space_dim, det_smaller: det_image_dim < poly_space_dim })
}

/// `w_1^2 - w_2^2 - .. - w_n^2`
pub fn lorentz_polynomial(n: usize) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Lorentz polynomial needs n >= 2, got {n}")));
    }
    Polynomial::from_terms(
        n,
        (0..n).map(|i| {
            let mut exps = vec![0; n];
            exps[i] = 2;
            let c = if i == 0 { Rational::one() } else { -Rational::one() };
            (exps, c)
        }),
    )
}

/// Finds `w != 0` with `w_1 = 0` such that the first row of
/// `sum_j w_j G_j` vanishes. Then `det(sum_j w_j G_j) = 0` while the Lorentz
/// polynomial at `w` is `-(w_2^2 + .. + w_n^2) < 0`, so the `2 x 2` pencil
/// cannot represent it.
///
/// The witness is the kernel vector of the `2 x (n-1)` first-row system
/// obtained from its reduced row echelon form with the first free variable
/// set to 1 and the others to 0.
pub fn refute_2x2_pencil(pencil: &Pencil) -> Result<Vector> {
    let n = pencil.n();
    if pencil.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: pencil.dim() });
    }
    if n <= 3 {
        return Err(Error::NoWitnessGuaranteed(n));
    }
    let cols = n - 1;
    let mut rows: Vec<Vec<Rational>> = (0..2)
        .map(|r| pencil.matrices()[1..].iter().map(|g| g.get(0, r).clone()).collect())
        .collect();

    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][c].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                for k in 0..cols {
                    let delta = &f * &rows[rank][k];
                    rows[r][k] -= delta;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let free = (0..cols)
        .find(|c| !pivots.contains(c))
        .expect("n - 1 >= 3 unknowns in 2 equations leave a free variable");

    let mut w = vec![Rational::zero(); n];
    w[1 + free] = Rational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        w[1 + pc] = -rows[r][free].clone();
    }
    Ok(Vector::new(w))
}
