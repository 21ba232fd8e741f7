//! Acceptance criteria. Run with
//! `cargo test -p hypercone --test acceptance -- --nocapture --test-threads 1`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::process::Command;

use common::*;
use hypercone::rational::{self, frac, int};
use hypercone::*;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, title: &str, ok: bool, detail: String) {
    println!("[{}] criterion {id}: {title} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {detail}");
}

fn lorentz_triple() -> LaxTriple {
    LaxTriple::new(
        SymMatrix::diag_ints(&[1, -1]),
        SymMatrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap(),
    )
    .unwrap()
}

#[test]
fn criterion_1_slice_is_hyperbolicity_cone() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut restrictions, mut non_real, mut disagreements, mut members) = (0, 0, 0, 0);
    for _ in 0..100 {
        let n = rng.gen_range(3..=5);
        let d = rng.gen_range(2..=4);
        let pencil = random_pencil(&mut rng, n, d);
        let p = expand_det(&pencil);
        let e = Vector::unit(n, 0);
        for _ in 0..50 {
            let shift = int(rng.gen_range(0..=8));
            let w = random_int_vector(&mut rng, n, 3).add(&e.scaled(&shift));
            let u = p.restrict_line(&w, &e).unwrap();
            restrictions += 1;
            if !all_roots_real(&u).unwrap() {
                non_real += 1;
                continue;
            }
            let in_slice = slice_membership(&pencil, &w).unwrap();
            members += in_slice as usize;
            if cone_contains(&p, &e, &w).unwrap() != in_slice {
                disagreements += 1;
            }
        }
    }
    report(
        1,
        "semidefinite slice = hyperbolicity cone",
        non_real == 0 && disagreements == 0 && restrictions == 5000,
        format!("{restrictions} restrictions, {non_real} non-real, {disagreements} disagreements, {members} slice members"),
    );
}

#[test]
fn criterion_2_lax_certificate_is_exact() {
    let p = Polynomial::parse("x^2 - y^2 - z^2", 3).unwrap();
    let pencil = Pencil::lax(&lorentz_triple());
    let verified = verify_representation(&p, &pencil).unwrap();
    let mut perturbations = 0;
    let mut still_verified = 0;
    for (k, g) in pencil.matrices().iter().enumerate() {
        for i in 0..2 {
            for j in i..2 {
                for delta in [int(1), int(-1)] {
                    let mut ms = pencil.matrices().to_vec();
                    ms[k] = g.with_entry(i, j, g.get(i, j) + &delta);
                    perturbations += 1;
                    if verify_representation(&p, &Pencil::new(ms).unwrap()).unwrap() {
                        still_verified += 1;
                    }
                }
            }
        }
    }
    report(
        2,
        "Lax certificate for x^2 - y^2 - z^2",
        verified && still_verified == 0,
        format!("verified = {verified}, {perturbations} perturbations, {still_verified} still verified"),
    );
}

#[test]
fn criterion_3_bivariate_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let width = frac(1, 1_000_000);
    let mut worst: f64 = 0.0;
    let mut worst_diag: f64 = 0.0;
    for _ in 0..100 {
        let d = rng.gen_range(1..=6);
        let roots: Vec<Rational> = (0..d).map(|_| random_rational(&mut rng, 5, 12)).collect();
        // u(t) = prod (t - r_i), homogenized: p(x, y) = y^d u(x / y)
        let u = UniPoly::from_roots(&roots);
        let p = Polynomial::from_terms(
            2,
            (0..=d).map(|k| (vec![k as u32, (d - k) as u32], u.coeff(k))),
        )
        .unwrap();
        let rep = bivariate_representation(&p, &width).unwrap();
        let expanded = rep.expand_coefficients();
        for (k, c) in expanded.iter().enumerate() {
            let exact = rational::to_f64(&p.coeff(&[(d - k) as u32, k as u32]));
            worst = worst.max((exact - c).abs());
        }
        let mut expected: Vec<f64> = roots.iter().map(|r| -rational::to_f64(r)).collect();
        expected.sort_by(f64::total_cmp);
        for (g, x) in rep.diag.iter().zip(&expected) {
            worst_diag = worst_diag.max((g - x).abs());
        }
        assert!(rep.intervals.iter().all(|iv| iv.width() <= width));
    }
    report(
        3,
        "bivariate diagonal representation",
        worst <= 1e-8,
        format!("max coefficient gap {worst:.3e}, max diagonal error {worst_diag:.3e}, tolerance 1e-8"),
    );
}

#[test]
fn criterion_4_bridge_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut failures = 0;
    for _ in 0..100 {
        let p = random_form(&mut rng, 3, 3, 9);
        if p.dehomogenize().unwrap().homogenize(3).unwrap() != p {
            failures += 1;
        }
    }
    for _ in 0..100 {
        let deg = rng.gen_range(0..=5);
        let q = random_poly(&mut rng, 2, deg, 9);
        let d = q.degree().unwrap() + rng.gen_range(0..=3);
        if q.homogenize(d).unwrap().dehomogenize().unwrap() != q {
            failures += 1;
        }
    }
    let mut drop_ok = 0;
    for d in 1..=6usize {
        let xd = Polynomial::monomial(vec![d as u32, 0, 0], int(1));
        let zeros = LaxTriple::new(SymMatrix::zeros(d), SymMatrix::zeros(d)).unwrap();
        let (q, t) = transport_lax_to_rz(&xd, &zeros).unwrap();
        let one = Polynomial::constant(2, int(1));
        let small = LaxTriple::new(SymMatrix::zeros(1), SymMatrix::zeros(1)).unwrap();
        let (back, padded) = transport_rz_to_lax(&q, &small, d).unwrap();
        if q == one && t == zeros && back == xd && padded == zeros {
            drop_ok += 1;
        }
    }
    report(
        4,
        "homogenize/dehomogenize round trips and x^d degree drop",
        failures == 0 && drop_ok == 6,
        format!("{failures} round-trip failures over 200 cases, {drop_ok}/6 degree-drop transports"),
    );
}

#[test]
fn criterion_5_lorentz_counterexample() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    let mut bad = 0;
    for n in 4..=6 {
        let lorentz = dimcheck::lorentz_polynomial(n).unwrap();
        for trial in 0..100 {
            // every fourth pencil has rational entries
            let ms: Vec<SymMatrix> = (0..n)
                .map(|_| {
                    let m = random_sym(&mut rng, 2, 3);
                    if trial % 4 == 0 { m.scaled(&frac(1, rng.gen_range(1..=5))) } else { m }
                })
                .collect();
            let pencil = Pencil::new(ms).unwrap();
            let w = refute_2x2_pencil(&pencil).unwrap();
            let det_value = expand_det(&pencil).eval(&w).unwrap();
            let lorentz_value = lorentz.eval(&w).unwrap();
            checked += 1;
            if w.is_zero() || !w.entries()[0].is_zero() || !det_value.is_zero() || !lorentz_value.is_negative() {
                bad += 1;
            }
        }
    }
    let n3 = verify_lax(&dimcheck::lorentz_polynomial(3).unwrap(), &lorentz_triple()).unwrap();
    report(
        5,
        "no 2x2 representation of the Lorentz form for n > 3",
        bad == 0 && checked == 300 && n3,
        format!("{checked} pencils, {bad} bad witnesses, n = 3 certificate verifies: {n3}"),
    );
}

#[test]
fn criterion_6_dimension_table() {
    // Pascal's triangle as the independent oracle
    let mut pascal: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=40usize {
        let row = (0..=m)
            .map(|k| if k == 0 || k == m { 1 } else { pascal[m - 1][k - 1] + pascal[m - 1][k] })
            .collect();
        pascal.push(row);
    }
    let mut mismatches = 0;
    let mut non_monotone = 0;
    let mut crossovers = Vec::new();
    for n in 1..=6u64 {
        let mut seen_smaller = false;
        let mut crossover = None;
        for d in 1..=30u64 {
            let r = dimension_report(n, d).unwrap();
            let det_dim = n * pascal[(d + 1) as usize][2];
            let space_dim = pascal[(n + d - 1) as usize][d as usize];
            if r.det_image_dim != det_dim || r.poly_space_dim != space_dim || r.det_smaller != (det_dim < space_dim) {
                mismatches += 1;
            }
            if seen_smaller && !r.det_smaller && n >= 2 {
                non_monotone += 1;
            }
            if r.det_smaller && !seen_smaller {
                crossover = Some(d);
            }
            seen_smaller |= r.det_smaller;
        }
        crossovers.push(format!("n={n}:{}", crossover.map_or("-".into(), |d| d.to_string())));
    }
    report(
        6,
        "dimension table 1 <= n <= 6, 1 <= d <= 30",
        mismatches == 0 && non_monotone == 0,
        format!("{mismatches} mismatches, {non_monotone} monotonicity breaks, first d with det_smaller {}", crossovers.join(" ")),
    );
}

#[test]
fn criterion_7_orthant_golden() {
    let p = Polynomial::parse("x*y*z", 3).unwrap();
    let e = Vector::from_ints(&[1, 1, 1]);
    let verdict = test_hyperbolic(&p, &e, &SamplerConfig::default().with_trials(1000)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut disagreements = 0;
    let mut inside = 0;
    for _ in 0..1000 {
        let w = Vector::new(
            (0..3)
                .map(|_| match rng.gen_range(0..10) {
                    0 => int(0),
                    1..=5 => random_rational(&mut rng, 4, 5).abs(),
                    _ => random_rational(&mut rng, 4, 5),
                })
                .collect(),
        );
        let positive = w.entries().iter().all(|x| x.is_positive());
        inside += positive as usize;
        if cone_contains(&p, &e, &w).unwrap() != positive {
            disagreements += 1;
        }
    }
    report(
        7,
        "positive orthant",
        verdict.is_pass() && verdict.trials == 1000 && disagreements == 0,
        format!("hyperbolicity {:?} after {} trials, {disagreements} disagreements on 1000 samples ({inside} inside)", verdict.outcome, verdict.trials),
    );
}

#[test]
fn criterion_8_refutation_determinism() {
    let dir = std::env::temp_dir().join(format!("hypercone-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let poly = dir.join("circle.json");
    let direction = dir.join("dir.json");
    let circle = Polynomial::parse("x^2 + y^2", 2).unwrap();
    std::fs::write(&poly, serde_json::to_string(&circle).unwrap()).unwrap();
    std::fs::write(&direction, r#"{"entries": ["1/1", "0/1"]}"#).unwrap();

    let mut outputs = Vec::new();
    let mut codes = Vec::new();
    for _ in 0..10 {
        let out = Command::new(env!("CARGO_BIN_EXE_hypercone"))
            .args(["hyperbolic", "check", "--poly"])
            .arg(&poly)
            .arg("--dir")
            .arg(&direction)
            .args(["--seed", "1234"])
            .output()
            .unwrap();
        codes.push(out.status.code());
        outputs.push(out.stdout);
    }
    std::fs::remove_dir_all(&dir).ok();
    let identical = outputs.iter().all(|o| *o == outputs[0]);
    let doc: serde_json::Value = serde_json::from_slice(&outputs[0]).unwrap();
    let witness = &doc["payload"]["witness"];
    let ok = identical
        && codes.iter().all(|c| *c == Some(1))
        && doc["status"] == "refuted"
        && *witness == serde_json::json!(["0/1", "1/1"]);
    report(
        8,
        "deterministic refutation of x^2 + y^2",
        ok,
        format!("10 runs byte-identical: {identical}, exit codes {:?}, witness {witness}", codes[0]),
    );
}
