//! Determinantal representations `p(w) = det(sum_j w_j G_j)`.
//!
//! Covers symbolic expansion of a symmetric pencil, exact verification of
//! Lax-form certificates `p(x,y,z) = det(xI + yB + zC)` and their real-zero
//! counterparts `q(y,z) = det(I + yB + zC)`, the diagonal construction in two
//! variables, block padding, and positive-definite slice membership.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;
use crate::poly::{Polynomial, Vector};
use crate::rational::{self, Rational};
use crate::realroots::{self, IsolatedRoot};

/// A tuple `(G_1, .., G_n)` of equally sized symmetric matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PencilWire", into = "PencilWire")]
pub struct Pencil {
    matrices: Vec<SymMatrix>,
}

#[derive(Serialize, Deserialize)]
struct PencilWire {
    n: usize,
    matrices: Vec<SymMatrix>,
}

impl TryFrom<PencilWire> for Pencil {
    type Error = Error;
    fn try_from(w: PencilWire) -> Result<Self> {
        if w.matrices.len() != w.n {
            return Err(Error::DimensionMismatch { expected: w.n, found: w.matrices.len() });
        }
        Pencil::new(w.matrices)
    }
}

impl From<Pencil> for PencilWire {
    fn from(p: Pencil) -> Self {
        PencilWire { n: p.matrices.len(), matrices: p.matrices }
    }
}

impl Pencil {
    pub fn new(matrices: Vec<SymMatrix>) -> Result<Self> {
        let first = matrices.first().ok_or(Error::EmptyPencil)?;
        let d = first.dim();
        if let Some(m) = matrices.iter().find(|m| m.dim() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: m.dim() });
        }
        Ok(Pencil { matrices })
    }

    /// The pencil `(I, B, C)` of the Lax form.
    pub fn lax(triple: &LaxTriple) -> Self {
        Pencil {
            matrices: vec![SymMatrix::identity(triple.dim()), triple.b.clone(), triple.c.clone()],
        }
    }

    pub fn n(&self) -> usize {
        self.matrices.len()
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].dim()
    }

    pub fn matrices(&self) -> &[SymMatrix] {
        &self.matrices
    }

    /// `sum_j w_j G_j`
    pub fn combine(&self, w: &Vector) -> Result<SymMatrix> {
        if w.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: w.len() });
        }
        let mut acc = SymMatrix::zeros(self.dim());
        for (g, wj) in self.matrices.iter().zip(w.entries()) {
            if !wj.is_zero() {
                acc = acc.add(&g.scaled(wj))?;
            }
        }
        Ok(acc)
    }
}

/// The pair `(B, C)` of a Lax-form certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LaxTripleWire", into = "LaxTripleWire")]
pub struct LaxTriple {
    b: SymMatrix,
    c: SymMatrix,
}

#[derive(Serialize, Deserialize)]
struct LaxTripleWire {
    d: usize,
    #[serde(rename = "B")]
    b: SymMatrix,
    #[serde(rename = "C")]
    c: SymMatrix,
}

impl TryFrom<LaxTripleWire> for LaxTriple {
    type Error = Error;
    fn try_from(w: LaxTripleWire) -> Result<Self> {
        if w.b.dim() != w.d {
            return Err(Error::DimensionMismatch { expected: w.d, found: w.b.dim() });
        }
        LaxTriple::new(w.b, w.c)
    }
}

impl From<LaxTriple> for LaxTripleWire {
    fn from(t: LaxTriple) -> Self {
        LaxTripleWire { d: t.dim(), b: t.b, c: t.c }
    }
}

impl LaxTriple {
    pub fn new(b: SymMatrix, c: SymMatrix) -> Result<Self> {
        if b.dim() != c.dim() {
            return Err(Error::DimensionMismatch { expected: b.dim(), found: c.dim() });
        }
        Ok(LaxTriple { b, c })
    }

    pub fn dim(&self) -> usize {
        self.b.dim()
    }

    pub fn b(&self) -> &SymMatrix {
        &self.b
    }

    pub fn c(&self) -> &SymMatrix {
        &self.c
    }

    /// Both matrices padded to `d x d` with zero blocks.
    pub fn padded(&self, d: usize) -> Result<LaxTriple> {
        Ok(LaxTriple { b: pad_block_diag(&self.b, d)?, c: pad_block_diag(&self.c, d)? })
    }
}

/// Expands `det(sum_j w_j G_j)` as a polynomial in `w_1 .. w_n`.
///
/// Laplace expansion along successive rows, memoized on the set of columns
/// still available, so each of the `2^d` minors is computed once.
pub fn expand_det(pencil: &Pencil) -> Polynomial {
    let n = pencil.n();
    let d = pencil.dim();
    assert!(d < 64, "pencil dimension {d} too large for cofactor expansion");
    let entries: Vec<Vec<Polynomial>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let terms = pencil.matrices().iter().enumerate().map(|(k, g)| {
                        let mut exps = vec![0; n];
                        exps[k] = 1;
                        (exps, g.get(i, j).clone())
                    });
                    Polynomial::from_terms(n, terms).expect("exponent vectors sized to n")
                })
                .collect()
        })
        .collect();
    let mut memo = HashMap::new();
    minor(&entries, n, (1u64 << d) - 1, &mut memo)
}

fn minor(
    entries: &[Vec<Polynomial>],
    n: usize,
    cols: u64,
    memo: &mut HashMap<u64, Polynomial>,
) -> Polynomial {
    if cols == 0 {
        return Polynomial::constant(n, Rational::one());
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let d = entries.len();
    let row = d - cols.count_ones() as usize;
    let mut acc = Polynomial::zero(n);
    let mut position = 0;
    for c in 0..d {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &entries[row][c];
        if !entry.is_zero() {
            let sub = minor(entries, n, cols & !(1 << c), memo);
            let term = entry * &sub;
            acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Exact coefficient-wise check `p == det(sum_j w_j G_j)`.
pub fn verify_representation(p: &Polynomial, pencil: &Pencil) -> Result<bool> {
    if p.nvars() != pencil.n() {
        return Err(Error::DimensionMismatch { expected: pencil.n(), found: p.nvars() });
    }
    Ok(*p == expand_det(pencil))
}

/// `p(x,y,z) == det(xI + yB + zC)`
pub fn verify_lax(p: &Polynomial, triple: &LaxTriple) -> Result<bool> {
    verify_representation(p, &Pencil::lax(triple))
}

/// `q(y,z) == det(I + yB + zC)`, checked through the degree-`d`
/// homogenization of `q`.
pub fn verify_real_zero_form(q: &Polynomial, triple: &LaxTriple) -> Result<bool> {
    if q.nvars() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: q.nvars() });
    }
    if q.is_zero() || q.degree()? > triple.dim() {
        return Ok(false);
    }
    verify_lax(&q.homogenize(triple.dim())?, triple)
}

/// Sylvester's criterion: every leading principal minor is strictly
/// positive. Uses elimination without pivoting, where the `k`-th pivot is
/// the ratio of consecutive leading minors.
pub fn pd_check(m: &SymMatrix) -> bool {
    let d = m.dim();
    let mut a: Vec<Vec<Rational>> = m.rows().to_vec();
    for k in 0..d {
        if !a[k][k].is_positive() {
            return false;
        }
        let p = a[k][k].clone();
        for r in k + 1..d {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &p;
            for c in k..d {
                let delta = &f * &a[k][c];
                a[r][c] -= delta;
            }
        }
    }
    true
}

/// Whether `sum_j w_j G_j` is positive definite.
pub fn slice_membership(pencil: &Pencil, w: &Vector) -> Result<bool> {
    Ok(pd_check(&pencil.combine(w)?))
}

/// Embeds `m` as the leading block of a `d x d` zero matrix.
pub fn pad_block_diag(m: &SymMatrix, d: usize) -> Result<SymMatrix> {
    let k = m.dim();
    if d < k {
        return Err(Error::DegreeTooSmall { target: d, degree: k });
    }
    let rows = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i < k && j < k { m.get(i, j).clone() } else { Rational::zero() })
                .collect()
        })
        .collect();
    SymMatrix::new(rows)
}

/// Approximate diagonal certificate `p(x,y) = det(xI + y diag(g))` with an
/// exact isolating interval behind every entry.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericDiagonal {
    pub d: usize,
    /// Ascending, repeated according to multiplicity.
    pub diag: Vec<f64>,
    /// `intervals[i]` encloses the root behind `diag[i]`, width at most the
    /// requested width.
    pub intervals: Vec<IsolatedRoot>,
    /// Largest absolute coefficient gap between `p` and the expansion of
    /// `det(xI + y diag(g))` in double precision.
    pub residual: f64,
}

impl NumericDiagonal {
    /// Coefficients of `prod_j (x + g_j y)`; entry `k` multiplies
    /// `x^(d-k) y^k`.
    pub fn expand_coefficients(&self) -> Vec<f64> {
        let mut coeffs = vec![1.0];
        for &g in &self.diag {
            let mut next = vec![0.0; coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k] += c;
                next[k + 1] += c * g;
            }
            coeffs = next;
        }
        coeffs
    }
}

// Roots are refined to this width before conversion to f64.
fn double_precision_width(bound: &Rational) -> Rational {
    let scale = if bound > &Rational::one() { bound.clone() } else { Rational::one() };
    scale / Rational::from_integer(num_bigint::BigInt::one() << 60u32)
}

/// The diagonal construction for a binary form hyperbolic in `(1, 0)`.
///
/// The roots `g_1 <= .. <= g_d` of `t -> p(-t, 1)` give
/// `p(x, y) = prod_j (x + g_j y) = det(xI + y diag(g))`.
pub fn bivariate_representation(p: &Polynomial, width: &Rational) -> Result<NumericDiagonal> {
    if p.nvars() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: p.nvars() });
    }
    if !p.is_homogeneous()? {
        return Err(Error::NotHomogeneous);
    }
    let d = p.degree()?;
    let at_e = p.eval(&Vector::from_ints(&[1, 0]))?;
    if !at_e.is_one() {
        return Err(Error::NotNormalized(rational::to_string(&at_e)));
    }
    let u = p.restrict_line(&Vector::from_ints(&[0, 1]), &Vector::from_ints(&[1, 0]))?;
    if !realroots::all_roots_real(&u)? {
        return Err(Error::NonRealRoots);
    }
    let iso = realroots::isolate_real_roots(&u, width)?;
    debug_assert_eq!(iso.total_multiplicity(), d);
    let s = realroots::squarefree_part(&u)?;
    let fine_width = double_precision_width(&realroots::cauchy_bound(&s)?);

    let mut diag = Vec::with_capacity(d);
    let mut intervals = Vec::with_capacity(d);
    for root in &iso.roots {
        let fine = realroots::refine_root(&s, root, &fine_width)?;
        let value = rational::to_f64(&fine.midpoint());
        for _ in 0..root.multiplicity {
            diag.push(value);
            intervals.push(root.clone());
        }
    }
    let mut out = NumericDiagonal { d, diag, intervals, residual: 0.0 };
    out.residual = out
        .expand_coefficients()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let exact = p.coeff(&[(d - k) as u32, k as u32]);
            (rational::to_f64(&exact) - c).abs()
        })
        .fold(0.0, f64::max);
    Ok(out)
}

/// Lifts a real-zero certificate `q = det(I + yB + zC)` to the Lax form of
/// `p = x^d q(y/x, z/x)`, padding `(B, C)` to `d x d`.
pub fn transport_rz_to_lax(
    q: &Polynomial,
    triple: &LaxTriple,
    degree: usize,
) -> Result<(Polynomial, LaxTriple)> {
    if q.nvars() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: q.nvars() });
    }
    if !q.eval(&Vector::zeros(2))?.is_one() {
        return Err(Error::InvalidCertificate("q(0,0) must equal 1".into()));
    }
    if degree < triple.dim() {
        return Err(Error::DegreeTooSmall { target: degree, degree: triple.dim() });
    }
    if !verify_real_zero_form(q, triple)? {
        return Err(Error::InvalidCertificate("q(y,z) != det(I + yB + zC)".into()));
    }
    let padded = triple.padded(degree)?;
    let p = q.homogenize(degree)?;
    if !verify_lax(&p, &padded)? {
        return Err(Error::InvalidCertificate("padded Lax form does not verify".into()));
    }
    Ok((p, padded))
}

/// Restricts a Lax certificate `p = det(xI + yB + zC)` to `q(y,z) = p(1,y,z)`.
pub fn transport_lax_to_rz(p: &Polynomial, triple: &LaxTriple) -> Result<(Polynomial, LaxTriple)> {
    if p.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: p.nvars() });
    }
    if !p.is_homogeneous()? {
        return Err(Error::NotHomogeneous);
    }
    if p.degree()? != triple.dim() {
        return Err(Error::InvalidCertificate(format!(
            "degree {} does not match matrix size {}",
            p.degree()?,
            triple.dim()
        )));
    }
    if !p.eval(&Vector::from_ints(&[1, 0, 0]))?.is_one() {
        return Err(Error::InvalidCertificate("p(1,0,0) must equal 1".into()));
    }
    if !verify_lax(p, triple)? {
        return Err(Error::InvalidCertificate("p(x,y,z) != det(xI + yB + zC)".into()));
    }
    let q = p.dehomogenize()?;
    if !verify_real_zero_form(&q, triple)? {
        return Err(Error::InvalidCertificate("real-zero form does not verify".into()));
    }
    Ok((q, triple.clone()))
}
