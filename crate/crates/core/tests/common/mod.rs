#![allow(dead_code)]

use hypercone::rational::{frac, int};
use hypercone::{Pencil, Polynomial, Rational, SymMatrix, Vector};
use rand::Rng;

/// Every exponent vector of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|a| {
            monomials(n - 1, d - a).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}

/// Homogeneous form of degree `d` with integer coefficients in
/// `[-range, range]`, roughly half of them zero. Never the zero polynomial.
pub fn random_form(rng: &mut impl Rng, n: usize, d: u32, range: i64) -> Polynomial {
    loop {
        let terms = monomials(n, d).into_iter().filter_map(|m| {
            let c = rng.gen_range(-range..=range);
            (rng.gen_bool(0.5) && c != 0).then(|| (m, int(c)))
        });
        let p = Polynomial::from_terms(n, terms.collect::<Vec<_>>()).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// Polynomial in `n` variables with terms of every degree up to `d`.
pub fn random_poly(rng: &mut impl Rng, n: usize, d: u32, range: i64) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for k in 0..=d {
        if rng.gen_bool(0.7) {
            p = &p + &random_form(rng, n, k, range);
        }
    }
    if p.is_zero() {
        p = Polynomial::constant(n, int(1));
    }
    p
}

pub fn random_sym(rng: &mut impl Rng, d: usize, range: i64) -> SymMatrix {
    let mut rows = vec![vec![int(0); d]; d];
    for i in 0..d {
        for j in i..d {
            let x = int(rng.gen_range(-range..=range));
            rows[i][j] = x.clone();
            rows[j][i] = x;
        }
    }
    SymMatrix::new(rows).unwrap()
}

/// `G_1 = I`, the rest integer symmetric with entries in `[-3, 3]`, so
/// `(1, 0, .., 0)` is always in the slice.
pub fn random_pencil(rng: &mut impl Rng, n: usize, d: usize) -> Pencil {
    let mut ms = vec![SymMatrix::identity(d)];
    ms.extend((1..n).map(|_| random_sym(rng, d, 3)));
    Pencil::new(ms).unwrap()
}

pub fn random_int_vector(rng: &mut impl Rng, n: usize, range: i64) -> Vector {
    Vector::from_ints(&(0..n).map(|_| rng.gen_range(-range..=range)).collect::<Vec<_>>())
}

/// Rational in `[-bound, bound]` with denominator in `1..=den`.
pub fn random_rational(rng: &mut impl Rng, bound: i64, den: i64) -> Rational {
    let q = rng.gen_range(1..=den);
    frac(rng.gen_range(-bound * q..=bound * q), q)
}
