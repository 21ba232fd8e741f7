//! Exact real-root counting and isolation for univariate rational
//! polynomials, via square-free decomposition and Sturm chains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::unipoly::UniPoly;

/// An interval endpoint, possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

/// Signed remainder sequence `u, u', -rem(u, u'), ...`.
///
/// Every entry after the first two is scaled by a positive constant to
/// keep coefficients small; positive scaling does not change any sign.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UniPoly>,
    signs: Vec<SignEval>,
}

/// Integer multiple (by a positive factor) of a rational polynomial, for
/// division-free sign evaluation at rational points.
#[derive(Clone, Debug)]
struct SignEval {
    coeffs: Vec<BigInt>,
}

impl SignEval {
    fn new(u: &UniPoly) -> Self {
        let lcm = u
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let coeffs = u
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        SignEval { coeffs }
    }

    /// Sign of `u(a/b)` from `sum c_i a^i b^(n-i)`, valid since `b > 0`.
    fn sign_at(&self, x: &Rational) -> i8 {
        let Some((lead, rest)) = self.coeffs.split_last() else {
            return 0;
        };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = lead.clone();
        let mut pow_b = BigInt::one();
        for c in rest.iter().rev() {
            pow_b *= b;
            acc = acc * a + c * &pow_b;
        }
        match acc.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        }
    }
}

impl SturmChain {
    pub fn new(u: &UniPoly) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![u.clone()];
        let d = u.derivative();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let k = chain.len();
            let (_, r) = chain[k - 2].div_rem(&chain[k - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push((-&r).positive_normalized());
        }
        let signs = chain.iter().map(SignEval::new).collect();
        Ok(SturmChain { chain, signs })
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.chain
    }

    /// Sign variations at `at`, ignoring zeros.
    pub fn variations(&self, at: &Bound) -> usize {
        let signs = self.chain.iter().zip(&self.signs).map(|(p, ev)| match at {
            Bound::NegInf => p.sign_at_infinity(false),
            Bound::PosInf => p.sign_at_infinity(true),
            Bound::Finite(x) => ev.sign_at(x),
        });
        let mut count = 0;
        let mut last = 0i8;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots of the chain's first polynomial in `(lo, hi]`.
    ///
    /// Exact for a square-free first polynomial even when an endpoint is a
    /// root: at a simple root `c`, dropping the zero gives `V(c) = V(c+)`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// `u / gcd(u, u')`, monic: the same distinct roots, all simple.
pub fn squarefree_part(u: &UniPoly) -> Result<UniPoly> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = u.gcd(&u.derivative());
    if g.is_zero() {
        return Ok(u.monic());
    }
    Ok(u.div_exact(&g)?.monic())
}

/// Yun's decomposition: returns `(k, s_k)` with `u = c * prod s_k^k`, each
/// `s_k` monic, square-free and pairwise coprime. Constant factors omitted.
pub fn squarefree_decomposition(u: &UniPoly) -> Result<Vec<(usize, UniPoly)>> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if u.degree() == Some(0) {
        return Ok(out);
    }
    let du = u.derivative();
    let a0 = u.gcd(&du);
    let mut b = u.div_exact(&a0)?;
    let mut c = du.div_exact(&a0)?;
    let mut d = &c - &b.derivative();
    let mut k = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = b.gcd(&d);
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((k, a.clone()));
        }
        b = b.div_exact(&a)?;
        c = d.div_exact(&a)?;
        d = &c - &b.derivative();
        k += 1;
    }
    Ok(out)
}

/// Number of distinct real roots of `u` in `(lo, hi]`.
pub fn count_distinct_real_roots(u: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    let s = squarefree_part(u)?;
    Ok(SturmChain::new(&s)?.count(lo, hi))
}

/// True iff every complex root of `u` is real. Constants pass vacuously.
pub fn all_roots_real(u: &UniPoly) -> Result<bool> {
    let s = squarefree_part(u)?;
    let deg = s.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(true);
    }
    Ok(SturmChain::new(&s)?.count(&Bound::NegInf, &Bound::PosInf) == deg)
}

/// True iff all roots are real and strictly positive. A root at zero fails,
/// matching open-cone semantics.
pub fn all_roots_positive(u: &UniPoly) -> Result<bool> {
    let s = squarefree_part(u)?;
    if u.coeff(0).is_zero() {
        return Ok(false);
    }
    let deg = s.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(true);
    }
    let chain = SturmChain::new(&s)?;
    Ok(chain.count(&Bound::Finite(Rational::zero()), &Bound::PosInf) == deg)
}

/// `(all_roots_real(u), all_roots_positive(u))` from a single Sturm chain.
pub fn real_and_positive(u: &UniPoly) -> Result<(bool, bool)> {
    let s = squarefree_part(u)?;
    let deg = s.degree().unwrap_or(0);
    if deg == 0 {
        return Ok((true, true));
    }
    let chain = SturmChain::new(&s)?;
    let real = chain.count(&Bound::NegInf, &Bound::PosInf) == deg;
    let positive = real
        && !u.coeff(0).is_zero()
        && chain.count(&Bound::Finite(Rational::zero()), &Bound::PosInf) == deg;
    Ok((real, positive))
}

/// Cauchy bound `1 + max |c_i / c_lead|`: every root has smaller modulus.
pub fn cauchy_bound(u: &UniPoly) -> Result<Rational> {
    let lc = u.leading_coeff().ok_or(Error::ZeroPolynomial)?;
    let rest = &u.coeffs()[..u.coeffs().len() - 1];
    Ok(Rational::one() + rational::max_abs(rest) / lc.abs())
}

/// One isolated distinct real root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatedRoot {
    #[serde(with = "crate::rational::serde_str")]
    pub lo: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub hi: Rational,
    pub multiplicity: usize,
}

impl IsolatedRoot {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rational::int(2)
    }
}

/// Sorted, pairwise disjoint isolating intervals, one per distinct real root.
///
/// An interval with `lo < hi` is half-open `(lo, hi]`; an interval with
/// `lo == hi` is an exactly located rational root. Consecutive intervals may
/// share an endpoint but never a root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootIsolation {
    pub roots: Vec<IsolatedRoot>,
}

impl RootIsolation {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

/// Isolates every distinct real root of `u` in an interval of width at most
/// `width`, with multiplicities from the square-free decomposition.
pub fn isolate_real_roots(u: &UniPoly, width: &Rational) -> Result<RootIsolation> {
    if !width.is_positive() {
        return Err(Error::InvalidArgument("isolation width must be positive".into()));
    }
    let factors = squarefree_decomposition(u)?;
    let s = squarefree_part(u)?;
    if s.degree() == Some(0) {
        return Ok(RootIsolation { roots: Vec::new() });
    }
    let chain = SturmChain::new(&s)?;
    let b = cauchy_bound(&s)?;
    let mut found = Vec::new();
    bisect(&chain, -b.clone(), b, width, &mut found);

    let factor_chains: Vec<(usize, SturmChain)> = factors
        .iter()
        .map(|(k, f)| Ok((*k, SturmChain::new(f)?)))
        .collect::<Result<_>>()?;
    let roots = found
        .into_iter()
        .map(|(lo, hi)| {
            let (l, h) = (Bound::Finite(lo.clone()), Bound::Finite(hi.clone()));
            let multiplicity = factor_chains
                .iter()
                .find(|(_, c)| {
                    if lo == hi {
                        c.signs[0].sign_at(&hi) == 0
                    } else {
                        c.count(&l, &h) == 1
                    }
                })
                .map(|(k, _)| *k)
                .expect("every root of the square-free part belongs to one factor");
            IsolatedRoot { lo, hi, multiplicity }
        })
        .collect();
    Ok(RootIsolation { roots })
}

fn bisect(
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    width: &Rational,
    out: &mut Vec<(Rational, Rational)>,
) {
    let n = chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(shrink(&chain.signs[0], lo, hi, width));
        return;
    }
    let mid = (&lo + &hi) / rational::int(2);
    bisect(chain, lo, mid.clone(), width, out);
    bisect(chain, mid, hi, width, out);
}

/// Bisects `(lo, hi]`, known to hold exactly one simple root of the
/// square-free polynomial behind `ev`, down to width `width`. The sign just
/// right of `lo` is opposite to the sign at `hi`, so `lo` itself is never
/// evaluated and may be a neighbouring root.
fn shrink(ev: &SignEval, mut lo: Rational, mut hi: Rational, width: &Rational) -> (Rational, Rational) {
    let hi_sign = ev.sign_at(&hi);
    if hi_sign == 0 {
        return (hi.clone(), hi);
    }
    let two = rational::int(2);
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        match ev.sign_at(&mid) {
            0 => return (mid.clone(), mid),
            s if s == hi_sign => hi = mid,
            _ => lo = mid,
        }
    }
    (lo, hi)
}

/// Shrinks an isolating interval of a root of the square-free `s` until its
/// width is at most `width`. Exact roots stay exact.
pub fn refine_root(s: &UniPoly, root: &IsolatedRoot, width: &Rational) -> Result<IsolatedRoot> {
    if s.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (lo, hi) = shrink(&SignEval::new(s), root.lo.clone(), root.hi.clone(), width);
    Ok(IsolatedRoot { lo, hi, multiplicity: root.multiplicity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn roots(rs: &[i64]) -> UniPoly {
        UniPoly::from_roots(&rs.iter().map(|&r| int(r)).collect::<Vec<_>>())
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&roots(&[1, 1, 2])).unwrap(), UniPoly::from_ints(&[2, -3, 1]));
        assert_eq!(squarefree_part(&UniPoly::from_ints(&[-1, 0, 1])).unwrap(), UniPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(squarefree_part(&UniPoly::from_ints(&[0, 0, 0, 1])).unwrap(), UniPoly::from_ints(&[0, 1]));
        assert_eq!(squarefree_part(&UniPoly::zero()), Err(Error::ZeroPolynomial));
        // non-monic input still yields a monic result
        assert_eq!(squarefree_part(&UniPoly::from_ints(&[-2, 0, 2])).unwrap(), UniPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn decomposition_multiplicities() {
        let u = roots(&[1, 1, 2, 3, 3, 3]).scale(&int(-5));
        let dec = squarefree_decomposition(&u).unwrap();
        assert_eq!(dec, vec![(1, roots(&[2])), (2, roots(&[1])), (3, roots(&[3]))]);
        assert!(squarefree_decomposition(&UniPoly::from_ints(&[7])).unwrap().is_empty());
    }

    #[test]
    fn counting_examples() {
        let all = (Bound::NegInf, Bound::PosInf);
        assert_eq!(count_distinct_real_roots(&UniPoly::from_ints(&[-1, 0, 1]), &all.0, &all.1), Ok(2));
        assert_eq!(count_distinct_real_roots(&UniPoly::from_ints(&[1, 0, 1]), &all.0, &all.1), Ok(0));
        let orth = UniPoly::from_ints(&[6, -11, 6, -1]);
        assert_eq!(count_distinct_real_roots(&orth, &Bound::Finite(int(0)), &Bound::PosInf), Ok(3));
    }

    #[test]
    fn counting_half_open_at_roots() {
        let u = roots(&[1, 2, 3]);
        let f = |a: i64, b: i64| {
            count_distinct_real_roots(&u, &Bound::Finite(int(a)), &Bound::Finite(int(b))).unwrap()
        };
        assert_eq!(f(1, 3), 2);
        assert_eq!(f(0, 1), 1);
        assert_eq!(f(1, 2), 1);
        assert_eq!(f(2, 2), 0);
        // repeated roots at the endpoint
        let v = roots(&[1, 1, 1, 4]);
        assert_eq!(count_distinct_real_roots(&v, &Bound::Finite(int(0)), &Bound::Finite(int(1))), Ok(1));
        assert_eq!(count_distinct_real_roots(&v, &Bound::Finite(int(1)), &Bound::Finite(int(4))), Ok(1));
    }

    #[test]
    fn real_and_positive_examples() {
        assert_eq!(all_roots_real(&roots(&[1, 2, 3])), Ok(true));
        assert_eq!(all_roots_real(&UniPoly::from_ints(&[1, 0, 1])), Ok(false));
        let mixed = &roots(&[1, 1]) * &UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(all_roots_real(&mixed), Ok(false));
        assert_eq!(all_roots_real(&UniPoly::from_ints(&[5])), Ok(true));

        assert_eq!(all_roots_positive(&roots(&[1, 2, 3])), Ok(true));
        assert_eq!(all_roots_positive(&UniPoly::from_ints(&[-1, 0, 1])), Ok(false));
        assert_eq!(all_roots_positive(&UniPoly::from_ints(&[0, 0, 1])), Ok(false));
        assert_eq!(all_roots_positive(&UniPoly::from_ints(&[2, 0, 1])), Ok(false));
        assert_eq!(all_roots_real(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn combined_profile_matches_separate_checks() {
        for u in [
            roots(&[1, 2, 3]),
            roots(&[-1, 2]),
            roots(&[0, 4]),
            UniPoly::from_ints(&[1, 0, 1]),
            &roots(&[2, 2]) * &UniPoly::from_ints(&[3, 0, 1]),
            UniPoly::from_ints(&[-4]),
        ] {
            let expected = (all_roots_real(&u).unwrap(), all_roots_positive(&u).unwrap());
            assert_eq!(real_and_positive(&u).unwrap(), expected, "{u}");
        }
    }

    #[test]
    fn isolation_examples() {
        let iso = isolate_real_roots(&UniPoly::from_ints(&[-1, 0, 1]), &frac(1, 100)).unwrap();
        assert_eq!(iso.len(), 2);
        assert!(iso.roots[0].contains(&int(-1)) && iso.roots[1].contains(&int(1)));
        assert!(iso.roots.iter().all(|r| r.multiplicity == 1 && r.width() <= frac(1, 100)));

        // sqrt(2) = 1.41421356...; bracket checked against exact squares
        let iso = isolate_real_roots(&UniPoly::from_ints(&[-2, 0, 1]), &frac(1, 1000)).unwrap();
        assert_eq!(iso.len(), 2);
        let pos = &iso.roots[1];
        assert!(pos.width() <= frac(1, 1000));
        assert!(&pos.lo * &pos.lo < int(2) && &pos.hi * &pos.hi > int(2));
        assert!(pos.contains(&frac(141421, 100000)));
        let neg = &iso.roots[0];
        assert!(neg.contains(&frac(-141421, 100000)));

        let iso = isolate_real_roots(&roots(&[2, -3]), &frac(1, 100)).unwrap();
        assert!(iso.roots[0].contains(&int(-3)) && iso.roots[1].contains(&int(2)));

        let iso = isolate_real_roots(&roots(&[0, 0, 5]), &frac(1, 10)).unwrap();
        assert_eq!(iso.roots[0], IsolatedRoot { lo: int(0), hi: int(0), multiplicity: 2 });
        assert_eq!(iso.roots[1].multiplicity, 1);
        assert_eq!(iso.total_multiplicity(), 3);

        assert!(isolate_real_roots(&UniPoly::from_ints(&[1, 0, 1]), &frac(1, 10)).unwrap().is_empty());
        assert!(isolate_real_roots(&UniPoly::from_ints(&[1, 1]), &int(0)).is_err());
    }

    #[test]
    fn refinement_keeps_root() {
        let s = UniPoly::from_ints(&[-2, 0, 1]);
        let iso = isolate_real_roots(&s, &frac(1, 10)).unwrap();
        let fine = refine_root(&s, &iso.roots[1], &frac(1, 1_000_000)).unwrap();
        assert!(fine.width() <= frac(1, 1_000_000));
        assert!(&fine.lo * &fine.lo < int(2) && &fine.hi * &fine.hi >= int(2));
    }
}
