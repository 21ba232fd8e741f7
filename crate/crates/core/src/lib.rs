//! Exact arithmetic for hyperbolic polynomials and their hyperbolicity cones.
//!
//! The crate certifies real-rootedness of line restrictions with Sturm
//! chains, tests cone membership exactly, expands and verifies determinantal
//! representations `p(w) = det(sum_j w_j G_j)`, moves between hyperbolic
//! forms on `R^3` and real zero polynomials on `R^2`, and builds the
//! dimension-count counterexample for the Lorentz quadratic in `n > 3`
//! variables.
//!
//! ```
//! use hypercone::{cone_contains, Polynomial, Vector};
//!
//! let orthant = Polynomial::parse("x*y*z", 3).unwrap();
//! let e = Vector::from_ints(&[1, 1, 1]);
//! assert!(cone_contains(&orthant, &e, &Vector::from_ints(&[1, 2, 3])).unwrap());
//! assert!(!cone_contains(&orthant, &e, &Vector::from_ints(&[1, -1, 1])).unwrap());
//! ```

pub mod cli;
pub mod dimcheck;
pub mod error;
pub mod hyperb;
pub mod lax;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod realroots;
pub mod unipoly;

pub use dimcheck::{dimension_report, lorentz_polynomial, refute_2x2_pencil, DimReport};
pub use error::{Error, Result};
pub use hyperb::{
    cone_contains, cone_convexity_probe, is_real_zero, test_hyperbolic, Outcome, SamplerConfig,
    Verdict,
};
pub use lax::{
    bivariate_representation, expand_det, pad_block_diag, pd_check, slice_membership,
    transport_lax_to_rz, transport_rz_to_lax, verify_lax, verify_real_zero_form,
    verify_representation, LaxTriple, NumericDiagonal, Pencil,
};
pub use matrix::{Matrix, SymMatrix};
pub use poly::{Polynomial, Vector};
pub use rational::Rational;
pub use realroots::{
    all_roots_positive, all_roots_real, count_distinct_real_roots, isolate_real_roots,
    squarefree_part, Bound, RootIsolation, SturmChain,
};
pub use unipoly::UniPoly;
