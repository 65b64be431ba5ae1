use hypercert::corpus::{random_coloring, random_multigraph};
use hypercert::oracle::{
    exact_rho_expectation, is_k_colorable, is_proper_coloring, min_mono_edges, mono_bichromatic_counts,
    monte_carlo_rho, Expectation, OracleLimits,
};
use hypercert::spectra::graph_spectrum;
use hypercert::{Coloring, EigenOptions, Multigraph, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn closed_form(g: &Multigraph, c: &Coloring) -> Rational {
    let (m, b) = mono_bichromatic_counts(g, c);
    let k = c.k() as i64;
    let mono = Rational::from_integer(2 * m as i64);
    if k == 1 {
        mono
    } else {
        mono - Rational::new(2 * b as i64, k - 1)
    }
}

#[test]
fn expectation_identity_exact_and_float() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let n = rng.gen_range(1..=8);
        let g = random_multigraph(&mut rng, n, 0.5, 3);
        for k in [1, 2, 3, 4, 5, 6, 7] {
            let c = random_coloring(&mut rng, n, k);
            match exact_rho_expectation(&g, &c).unwrap() {
                Expectation::Exact(e) => assert_eq!(e, closed_form(&g, &c)),
                Expectation::Approx(x) => {
                    let want = hypercert::to_f64(closed_form(&g, &c));
                    assert!((x - want).abs() < 1e-12 * want.abs().max(1.0), "k={k}");
                }
            }
        }
    }
}

#[test]
fn expectation_lies_between_scaled_extremes() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..30 {
        let n = rng.gen_range(2..=10);
        let g = random_multigraph(&mut rng, n, 0.6, 2);
        let s = graph_spectrum(&g, &EigenOptions::default()).unwrap();
        for k in [2, 3] {
            let c = random_coloring(&mut rng, n, k);
            let e = exact_rho_expectation(&g, &c).unwrap().to_f64();
            let n = n as f64;
            assert!(s.lambda_min * n <= e + 1e-9 && e <= s.lambda_max * n + 1e-9);
        }
    }
}

#[test]
fn monte_carlo_tracks_the_exact_mean() {
    let p = Multigraph::petersen();
    let limits = OracleLimits::default();
    let c = is_k_colorable(&p, 3, &limits).unwrap().witness.unwrap();
    assert!(is_proper_coloring(&p, &c));
    let exact = exact_rho_expectation(&p, &c).unwrap().to_f64();
    assert_eq!(exact, -15.0);
    // a proper coloring makes every sample equal; use an improper one too
    let improper = Coloring::new(vec![0, 1, 2, 0, 0, 1, 2, 2, 1, 0], 3).unwrap();
    let exact_improper = exact_rho_expectation(&p, &improper).unwrap().to_f64();
    for (col, want) in [(&c, exact), (&improper, exact_improper)] {
        let est = monte_carlo_rho(&p, col, 100_000, 42).unwrap();
        assert!((est.mean - want).abs() <= 4.0 * est.std_error + 1e-9, "{est:?} vs {want}");
    }
    let four = Coloring::new(vec![0, 1, 2, 3, 0, 1, 2, 3, 0, 1], 4).unwrap();
    let exact4 = exact_rho_expectation(&p, &four).unwrap().to_f64();
    let est = monte_carlo_rho(&p, &four, 100_000, 1).unwrap();
    assert!((est.mean - exact4).abs() <= 4.0 * est.std_error + 1e-9);
}

#[test]
fn witnesses_reverify() {
    let limits = OracleLimits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..30 {
        let n = rng.gen_range(2..=9);
        let g = random_multigraph(&mut rng, n, 0.5, 2);
        let r = min_mono_edges(&g, 2, &limits).unwrap();
        let w = r.witness.unwrap();
        assert_eq!(mono_bichromatic_counts(&g, &w).0, r.answer);
        // brute force over all 2^n colorings agrees on the minimum
        let brute = (0u64..1 << n)
            .map(|m| mono_bichromatic_counts(&g, &Coloring::from_bits(m, n)).0)
            .min()
            .unwrap();
        assert_eq!(brute, r.answer);
    }
}
