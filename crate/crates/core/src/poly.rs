//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are keyed by exponent vectors under graded lexicographic order, so
//! iteration, display and serialization are deterministic. The zero
//! polynomial stores no terms and has no degree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{self, Rational};
use crate::unipoly::UniPoly;

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A point or direction in `Q^n`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Vector {
    #[serde(with = "crate::rational::serde_str::vec")]
    entries: Vec<Rational>,
}

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector { entries }
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector::new(xs.iter().map(|&x| rational::int(x)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Vector::new(vec![Rational::zero(); n])
    }

    /// The `i`-th standard basis vector of `Q^n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.entries[i] = Rational::one();
        v
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, s: &Rational) -> Vector {
        Vector::new(self.entries.iter().map(|x| x * s).collect())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect())
    }

    /// True if `self` and `other` are linearly dependent.
    pub fn is_parallel_to(&self, other: &Vector) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                &self.entries[i] * &other.entries[j] == &self.entries[j] * &other.entries[i]
            })
        })
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(rational::to_f64).collect()
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolynomialWire", into = "PolynomialWire")]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialWire {
    nvars: usize,
    terms: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    exps: Vec<u32>,
    #[serde(with = "crate::rational::serde_str")]
    coef: Rational,
}

impl TryFrom<PolynomialWire> for Polynomial {
    type Error = Error;
    fn try_from(w: PolynomialWire) -> Result<Self> {
        Polynomial::from_terms(w.nvars, w.terms.into_iter().map(|t| (t.exps, t.coef)))
    }
}

impl From<Polynomial> for PolynomialWire {
    fn from(p: Polynomial) -> Self {
        PolynomialWire {
            nvars: p.nvars,
            terms: p
                .terms
                .into_iter()
                .rev()
                .map(|(m, c)| TermWire { exps: m.0, coef: c })
                .collect(),
        }
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The coordinate function `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(exps, Rational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(Monomial(exps), c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs. Repeated
    /// exponent vectors are summed; zero coefficients are dropped.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidArgument("polynomial needs at least one variable".into()));
        }
        let mut p = Self::zero(nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: exps.len() });
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    /// Parses expressions such as `x^2 - y^2 - 1/2*z^2` or `w1*w2*w3`.
    ///
    /// Variables are `x, y, z` (for `nvars <= 3`) or `w1 .. wn`. With two
    /// variables an expression mentioning `x` is read as `p(x, y)`, otherwise
    /// as `q(y, z)`. Only sums of monomials are accepted; there are no
    /// parentheses.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let err = |m: &str| Error::Parse(format!("{m} in {s:?}"));
        let mut p = Self::zero(nvars);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let names: &[&str] = match nvars {
            2 if !compact.contains('x') => &["y", "z"],
            1..=3 => &["x", "y", "z"][..nvars],
            _ => &[],
        };
        if compact.is_empty() {
            return Err(err("empty expression"));
        }
        let mut chunks = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                chunks.push(&compact[start..i]);
                start = i;
            }
        }
        chunks.push(&compact[start..]);
        for chunk in chunks {
            let (neg, body) = match chunk.as_bytes()[0] {
                b'-' => (true, &chunk[1..]),
                b'+' => (false, &chunk[1..]),
                _ => (false, chunk),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let mut coef = Rational::one();
            let mut exps = vec![0u32; nvars];
            for factor in body.split('*') {
                let (base, power) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                if let Some(i) = var_index(base, names, nvars) {
                    exps[i] += power;
                } else {
                    let c = rational::parse(base).map_err(|_| err("unknown factor"))?;
                    coef *= rational::pow(&c, power as usize);
                }
            }
            if neg {
                coef = -coef;
            }
            p.add_term(Monomial(exps), coef);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().rev().map(|(m, c)| (m.exps(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Maximum total degree over the terms.
    pub fn degree(&self) -> Result<usize> {
        self.terms
            .keys()
            .next_back()
            .map(Monomial::total_degree)
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn is_homogeneous(&self) -> Result<bool> {
        let d = self.degree()?;
        Ok(self.terms.keys().all(|m| m.total_degree() == d))
    }

    fn check_len(&self, w: &Vector) -> Result<()> {
        if w.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: w.len() });
        }
        Ok(())
    }

    pub fn eval(&self, w: &Vector) -> Result<Rational> {
        self.check_len(w)?;
        let x = w.entries();
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&e, xi)| acc * rational::pow(xi, e as usize))
            })
            .sum())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::constant(self.nvars, Rational::one()), |acc, _| &acc * self)
    }

    /// The univariate restriction `t -> p(w - t e)`.
    ///
    /// For homogeneous `p` of degree `d` the coefficient of `t^d` is
    /// `(-1)^d p(e)`.
    pub fn restrict_line(&self, w: &Vector, e: &Vector) -> Result<UniPoly> {
        self.check_len(w)?;
        self.check_len(e)?;
        let lines: Vec<UniPoly> = w
            .entries()
            .iter()
            .zip(e.entries())
            .map(|(wi, ei)| UniPoly::new(vec![wi.clone(), -ei.clone()]))
            .collect();
        let powers = power_tables(&lines, self.max_exponents(), UniPoly::constant(Rational::one()));
        let mut out = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut term = UniPoly::constant(c.clone());
            for (i, &a) in m.0.iter().enumerate() {
                if a > 0 {
                    term = &term * &powers[i][a as usize];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    fn max_exponents(&self) -> Vec<u32> {
        let mut maxes = vec![0; self.nvars];
        for m in self.terms.keys() {
            for (mx, &a) in maxes.iter_mut().zip(&m.0) {
                *mx = (*mx).max(a);
            }
        }
        maxes
    }

    /// `q(y, z) = p(1, y, z)` for `p` on `R^3`. The degree may drop.
    pub fn dehomogenize(&self) -> Result<Polynomial> {
        if self.nvars != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: self.nvars });
        }
        let mut q = Polynomial::zero(2);
        for (m, c) in &self.terms {
            q.add_term(Monomial(m.0[1..].to_vec()), c.clone());
        }
        Ok(q)
    }

    /// `p(x, y, z) = x^d q(y/x, z/x)` for `q` on `R^2`.
    pub fn homogenize(&self, d: usize) -> Result<Polynomial> {
        if self.nvars != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: self.nvars });
        }
        let degree = self.degree()?;
        if d < degree {
            return Err(Error::DegreeTooSmall { target: d, degree });
        }
        let mut p = Polynomial::zero(3);
        for (m, c) in &self.terms {
            let x = (d - m.total_degree()) as u32;
            p.add_term(Monomial(vec![x, m.0[0], m.0[1]]), c.clone());
        }
        Ok(p)
    }

    /// Returns `p o A`, i.e. `u -> p(A u)`. `A` must be invertible.
    pub fn apply_linear_change(&self, a: &Matrix) -> Result<Polynomial> {
        let n = self.nvars;
        if a.size() != n {
            return Err(Error::DimensionMismatch { expected: n, found: a.size() });
        }
        if a.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                let mut l = Polynomial::zero(n);
                for j in 0..n {
                    l.add_term(Monomial(unit_exps(n, j)), a.get(i, j).clone());
                }
                l
            })
            .collect();
        let powers = power_tables(
            &images,
            self.max_exponents(),
            Polynomial::constant(n, Rational::one()),
        );
        let mut out = Polynomial::zero(n);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(n, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Moves the direction `e` to the first basis vector and scales so the
    /// value there is one.
    ///
    /// Returns `(p', A)` with `A (1,0,..,0) = e` and `p' = (p o A) / p(e)`.
    /// `A` has `e` as its first column; the remaining columns are the
    /// standard basis vectors except the one at the largest-magnitude entry
    /// of `e` (first such index on ties), in increasing order.
    pub fn normalize_direction(&self, e: &Vector) -> Result<(Polynomial, Matrix)> {
        if !self.is_homogeneous()? {
            return Err(Error::NotHomogeneous);
        }
        let pe = self.eval(e)?;
        if pe.is_zero() {
            return Err(Error::VanishesAtDirection);
        }
        let n = self.nvars;
        let mut pivot = 0;
        for (i, x) in e.entries().iter().enumerate() {
            if x.abs() > e.entries()[pivot].abs() {
                pivot = i;
            }
        }
        let mut columns = vec![e.clone()];
        columns.extend((0..n).filter(|&j| j != pivot).map(|j| Vector::unit(n, j)));
        let rows = (0..n)
            .map(|i| columns.iter().map(|c| c.entries()[i].clone()).collect())
            .collect();
        let a = Matrix::from_rows(rows)?;
        let changed = self.apply_linear_change(&a)?;
        Ok((changed.scale(&pe.recip()), a))
    }
}

fn unit_exps(n: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

fn var_index(name: &str, names: &[&str], nvars: usize) -> Option<usize> {
    if let Some(i) = names.iter().position(|v| *v == name) {
        return Some(i);
    }
    let i: usize = name.strip_prefix('w')?.parse().ok()?;
    (1..=nvars).contains(&i).then(|| i - 1)
}

/// `tables[i][k] = bases[i]^k` for `k <= max[i]`.
fn power_tables<T>(bases: &[T], max: Vec<u32>, one: T) -> Vec<Vec<T>>
where
    T: Clone,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    bases
        .iter()
        .zip(max)
        .map(|(b, m)| {
            let mut row = vec![one.clone()];
            for k in 1..=m as usize {
                let next = &row[k - 1] * b;
                row.push(next);
            }
            row
        })
        .collect()
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials in different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "multiplying polynomials in different rings");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names: Vec<String> = if self.nvars <= 3 {
            ["x", "y", "z"][..self.nvars].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=self.nvars).map(|i| format!("w{i}")).collect()
        };
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let a = c.abs();
            let vars: Vec<String> = m
                .0
                .iter()
                .zip(&names)
                .filter(|(e, _)| **e > 0)
                .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{a}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.nvars)
    }
}
