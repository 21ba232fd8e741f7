//! Refutation-based hyperbolicity testing and exact hyperbolicity-cone
//! membership.
//!
//! A polynomial `p` is hyperbolic in direction `e` when `p(e) != 0` and every
//! restriction `t -> p(w - t e)` has only real roots. Universal checks are out
//! of reach, so [`test_hyperbolic`] and [`is_real_zero`] sample lines on an
//! integer grid and certify each sampled restriction exactly. A pass is
//! evidence; a refutation comes with a witness that re-fails
//! deterministically.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Vector};
use crate::rational::{self, Rational};
use crate::realroots::{all_roots_real, real_and_positive};
use crate::unipoly::UniPoly;

pub const DEFAULT_RADIUS: u32 = 10;
pub const DEFAULT_TRIALS: u32 = 1000;
pub const DEFAULT_SEED: u64 = 42;

// Rejection sampling gives up on excluding multiples of `e` after this many
// draws (only reachable when n = 1, where every point is such a multiple).
const MAX_REJECTIONS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub radius: u32,
    pub trials: u32,
    pub seed: u64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig { radius: DEFAULT_RADIUS, trials: DEFAULT_TRIALS, seed: DEFAULT_SEED }
    }
}

impl SamplerConfig {
    pub fn new(radius: u32, trials: u32, seed: u64) -> Result<Self> {
        if radius == 0 || trials == 0 {
            return Err(Error::InvalidArgument("radius and trials must be at least 1".into()));
        }
        Ok(SamplerConfig { radius, trials, seed })
    }

    pub fn with_trials(self, trials: u32) -> Self {
        SamplerConfig { trials, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        SamplerConfig { seed, ..self }
    }

    fn validate(&self) -> Result<()> {
        Self::new(self.radius, self.trials, self.seed).map(|_| ())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Refuted,
}

/// Result of a sampled refutation test.
///
/// `trials` is the number of trials executed: the full budget on a pass, or
/// the 1-based index of the failing trial on a refutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    #[serde(
        with = "opt_vec",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub witness: Option<Vector>,
    /// Second point of a violating pair (convexity probe only).
    #[serde(
        with = "opt_vec",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub companion: Option<Vector>,
    pub trials: u32,
    pub seed: u64,
}

impl Verdict {
    fn pass(cfg: &SamplerConfig) -> Self {
        Verdict { outcome: Outcome::Pass, witness: None, companion: None, trials: cfg.trials, seed: cfg.seed }
    }

    fn refuted(cfg: &SamplerConfig, trial: u32, witness: Vector, companion: Option<Vector>) -> Self {
        Verdict { outcome: Outcome::Refuted, witness: Some(witness), companion, trials: trial + 1, seed: cfg.seed }
    }

    pub fn is_pass(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

mod opt_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(transparent)]
    struct Flat(#[serde(with = "crate::rational::serde_str::vec")] Vec<Rational>);

    pub fn serialize<S: Serializer>(v: &Option<Vector>, s: S) -> std::result::Result<S::Ok, S::Error> {
        v.as_ref().map(|v| Flat(v.entries().to_vec())).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Vector>, D::Error> {
        Ok(Option::<Flat>::deserialize(d)?.map(|f| Vector::new(f.0)))
    }
}

/// Deterministic stream of integer grid points: the standard basis vectors
/// first, then seeded uniform draws from `[-R, R]^n`. The zero vector and
/// multiples of `avoid` are skipped.
struct GridSampler {
    n: usize,
    radius: i64,
    avoid: Option<Vector>,
    next_unit: usize,
    rng: ChaCha8Rng,
}

impl GridSampler {
    fn new(n: usize, cfg: &SamplerConfig, avoid: Option<Vector>) -> Self {
        GridSampler {
            n,
            radius: cfg.radius as i64,
            avoid,
            next_unit: 0,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        }
    }

    fn excluded(&self, w: &Vector) -> bool {
        w.is_zero() || self.avoid.as_ref().is_some_and(|e| w.is_parallel_to(e))
    }

    fn random_point(&mut self) -> Vector {
        let r = self.radius;
        let xs: Vec<i64> = (0..self.n).map(|_| self.rng.gen_range(-r..=r)).collect();
        Vector::from_ints(&xs)
    }

    fn next_point(&mut self) -> Vector {
        while self.next_unit < self.n {
            let u = Vector::unit(self.n, self.next_unit);
            self.next_unit += 1;
            if !self.excluded(&u) {
                return u;
            }
        }
        let mut w = self.random_point();
        for _ in 0..MAX_REJECTIONS {
            if !self.excluded(&w) {
                break;
            }
            w = self.random_point();
        }
        w
    }
}

/// Checks that `p` is a nonzero homogeneous polynomial with `p(e) != 0`.
fn check_direction(p: &Polynomial, e: &Vector) -> Result<()> {
    if e.len() != p.nvars() {
        return Err(Error::DimensionMismatch { expected: p.nvars(), found: e.len() });
    }
    if !p.is_homogeneous()? {
        return Err(Error::NotHomogeneous);
    }
    if p.eval(e)?.is_zero() {
        return Err(Error::VanishesAtDirection);
    }
    Ok(())
}

/// Whether the restriction of `p` to the line through `w` in direction `e`
/// has only real roots.
pub fn line_is_real_rooted(p: &Polynomial, w: &Vector, e: &Vector) -> Result<bool> {
    let u = p.restrict_line(w, e)?;
    if u.is_zero() {
        return Ok(true);
    }
    all_roots_real(&u)
}

pub fn test_hyperbolic(p: &Polynomial, e: &Vector, cfg: &SamplerConfig) -> Result<Verdict> {
    cfg.validate()?;
    check_direction(p, e)?;
    let mut sampler = GridSampler::new(p.nvars(), cfg, Some(e.clone()));
    for trial in 0..cfg.trials {
        let w = sampler.next_point();
        if !line_is_real_rooted(p, &w, e)? {
            return Ok(Verdict::refuted(cfg, trial, w, None));
        }
    }
    Ok(Verdict::pass(cfg))
}

/// Exact membership of `w` in the open hyperbolicity cone of `p` at `e`.
///
/// Returns [`Error::NonRealRoots`] when the restriction through `w` has a
/// non-real root, which means `p` is not hyperbolic in direction `e`.
pub fn cone_contains(p: &Polynomial, e: &Vector, w: &Vector) -> Result<bool> {
    check_direction(p, e)?;
    let u = p.restrict_line(w, e)?;
    match real_and_positive(&u)? {
        (false, _) => Err(Error::NonRealRoots),
        (true, positive) => Ok(positive),
    }
}

/// `t -> q(t y, t z)` for a point `w = (y, z)`.
pub fn radial_restriction(q: &Polynomial, w: &Vector) -> Result<UniPoly> {
    q.restrict_line(&Vector::zeros(q.nvars()), &w.scaled(&rational::int(-1)))
}

/// Sampled test that `t -> q(t y, t z)` is real-rooted for every `(y, z)`.
pub fn is_real_zero(q: &Polynomial, cfg: &SamplerConfig) -> Result<Verdict> {
    cfg.validate()?;
    if q.nvars() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: q.nvars() });
    }
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut sampler = GridSampler::new(2, cfg, None);
    for trial in 0..cfg.trials {
        let w = sampler.next_point();
        let u = radial_restriction(q, &w)?;
        if !u.is_zero() && !all_roots_real(&u)? {
            return Ok(Verdict::refuted(cfg, trial, w, None));
        }
    }
    Ok(Verdict::pass(cfg))
}

/// Scalings applied to each sampled member.
const PROBE_SCALES: [(i64, i64); 3] = [(1, 2), (2, 1), (3, 1)];

/// Samples pairs of cone members and checks closure under midpoints, sums
/// and positive scalings. Convexity is a theorem, so a refutation signals an
/// input that is not hyperbolic or a defect in the membership test.
pub fn cone_convexity_probe(p: &Polynomial, e: &Vector, cfg: &SamplerConfig) -> Result<Verdict> {
    cfg.validate()?;
    check_direction(p, e)?;
    let n = p.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let r = cfg.radius as i64;
    let draw_member = |rng: &mut ChaCha8Rng| -> Result<Vector> {
        for _ in 0..MAX_REJECTIONS {
            let g: Vec<i64> = (0..n).map(|_| rng.gen_range(-r..=r)).collect();
            let shift = rational::int(rng.gen_range(0..=2) * r);
            let cand = Vector::from_ints(&g).add(&e.scaled(&shift));
            if !cand.is_zero() && cone_contains(p, e, &cand)? {
                return Ok(cand);
            }
        }
        Ok(e.clone())
    };
    let half = rational::frac(1, 2);
    for trial in 0..cfg.trials {
        let u = draw_member(&mut rng)?;
        let v = draw_member(&mut rng)?;
        let mut derived = vec![u.add(&v).scaled(&half), u.add(&v)];
        derived.extend(PROBE_SCALES.iter().map(|&(a, b)| u.scaled(&rational::frac(a, b))));
        for x in &derived {
            if !cone_contains(p, e, x)? {
                return Ok(Verdict::refuted(cfg, trial, u, Some(v)));
            }
        }
    }
    Ok(Verdict::pass(cfg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use num_traits::Signed;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n).unwrap()
    }

    fn small() -> SamplerConfig {
        SamplerConfig::default().with_trials(200)
    }

    #[test]
    fn hyperbolic_examples() {
        let orth = p("w1*w2*w3*w4", 4);
        let v = test_hyperbolic(&orth, &Vector::from_ints(&[1, 1, 1, 1]), &small()).unwrap();
        assert!(v.is_pass());
        assert_eq!(v.trials, 200);

        let lor = p("x^2 - y^2 - z^2", 3);
        assert!(test_hyperbolic(&lor, &Vector::from_ints(&[1, 0, 0]), &small()).unwrap().is_pass());

        let circ = p("x^2 + y^2", 2);
        let v = test_hyperbolic(&circ, &Vector::from_ints(&[1, 0]), &small()).unwrap();
        assert_eq!(v.outcome, Outcome::Refuted);
        assert_eq!(v.witness, Some(Vector::from_ints(&[0, 1])));
        assert_eq!(v.trials, 1);
    }

    #[test]
    fn hyperbolic_errors() {
        let lor = p("x^2 - y^2 - z^2", 3);
        assert_eq!(
            test_hyperbolic(&lor, &Vector::from_ints(&[1, 1, 0]), &small()),
            Err(Error::VanishesAtDirection)
        );
        assert_eq!(
            test_hyperbolic(&p("x^2 + y", 2), &Vector::from_ints(&[1, 0]), &small()),
            Err(Error::NotHomogeneous)
        );
        assert!(test_hyperbolic(&lor, &Vector::from_ints(&[1, 0, 0]), &small().with_trials(0)).is_err());
    }

    #[test]
    fn sampler_skips_multiples_of_direction() {
        let cfg = SamplerConfig::new(2, 1, 7).unwrap();
        let e = Vector::from_ints(&[1, 1]);
        let mut s = GridSampler::new(2, &cfg, Some(e.clone()));
        for _ in 0..500 {
            let w = s.next_point();
            assert!(!w.is_zero() && !w.is_parallel_to(&e));
            assert!(w.entries().iter().all(|x| x.abs() <= int(2)));
        }
    }

    #[test]
    fn cone_examples() {
        let orth = p("x*y*z", 3);
        let ones = Vector::from_ints(&[1, 1, 1]);
        assert_eq!(cone_contains(&orth, &ones, &Vector::from_ints(&[1, 2, 3])), Ok(true));
        assert_eq!(cone_contains(&orth, &ones, &Vector::from_ints(&[1, -1, 1])), Ok(false));
        assert_eq!(cone_contains(&orth, &ones, &Vector::zeros(3)), Ok(false));
        assert_eq!(cone_contains(&orth, &ones, &ones), Ok(true));

        let circ = p("x^2 + y^2", 2);
        assert_eq!(
            cone_contains(&circ, &Vector::from_ints(&[1, 0]), &Vector::from_ints(&[0, 1])),
            Err(Error::NonRealRoots)
        );
    }

    #[test]
    fn real_zero_examples() {
        assert!(is_real_zero(&p("1 - y^2 - z^2", 2), &small()).unwrap().is_pass());
        let v = is_real_zero(&p("1 + y^2", 2), &small()).unwrap();
        assert_eq!(v.witness, Some(Vector::from_ints(&[1, 0])));
        assert!(is_real_zero(&Polynomial::constant(2, int(1)), &small()).unwrap().is_pass());
        assert_eq!(is_real_zero(&Polynomial::zero(2), &small()), Err(Error::ZeroPolynomial));
        assert!(is_real_zero(&p("x", 3), &small()).is_err());
    }

    #[test]
    fn convexity_examples() {
        let cfg = SamplerConfig::default().with_trials(60);
        assert!(cone_convexity_probe(&p("x*y*z", 3), &Vector::from_ints(&[1, 1, 1]), &cfg).unwrap().is_pass());
        assert!(cone_convexity_probe(&p("x^2 - y^2 - z^2", 3), &Vector::from_ints(&[1, 0, 0]), &cfg).unwrap().is_pass());
        assert!(cone_convexity_probe(&p("x^2", 3), &Vector::from_ints(&[1, 0, 0]), &cfg).unwrap().is_pass());
    }

    #[test]
    fn verdict_json() {
        let v = Verdict::refuted(&SamplerConfig::default(), 0, Vector::from_ints(&[0, 1]), None);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"outcome":"refuted","witness":["0/1","1/1"],"trials":1,"seed":42}"#
        );
        let back: Verdict = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(back, v);
        let pass = Verdict::pass(&SamplerConfig::default());
        assert_eq!(
            serde_json::to_string(&pass).unwrap(),
            r#"{"outcome":"pass","trials":1000,"seed":42}"#
        );
    }
}
