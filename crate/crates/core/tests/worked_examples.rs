use schurweyl_core::analysis::{
    aligned_tables, distances, two_point_error, variance_scaling_check, wright_chisq,
};
use schurweyl_core::estimators::{
    eyd_renyi, eyd_von_neumann, integral_renyi_estimate, median_amplified_estimate, Estimator,
};
use schurweyl_core::oracle::chi_square_direct;
use schurweyl_core::partitions::{falling_power_f64, partitions_of};
use schurweyl_core::sampling::{
    exact_sw_distribution, sample_sw, sample_word, spectrum_integral_lb, spectrum_small_alpha_lb,
    spectrum_uniform, stream_rng,
};
use schurweyl_core::scalar::approx_eq;
use schurweyl_core::symmetric::{p_sharp, power_sum_product};
use schurweyl_core::{partition, Spectrum};

fn skewed(d: usize) -> Spectrum {
    let w: Vec<f64> = (1..=d).map(|i| 1.0 / (i * i) as f64).collect();
    let s: f64 = w.iter().sum();
    Spectrum::new(w.into_iter().map(|x| x / s).collect()).unwrap()
}

#[test]
fn p_sharp_is_unbiased() {
    for eta in [skewed(3), spectrum_uniform(2).unwrap(), Spectrum::new(vec![0.5, 0.3, 0.2]).unwrap()] {
        for n in 1..=8 {
            let sw = exact_sw_distribution(&eta, n).unwrap();
            for r in 1..=4.min(n) {
                for mu in partitions_of(r, None) {
                    let mean = sw.expectation(|l| p_sharp(&mu, l));
                    let expect = falling_power_f64(n, r) * power_sum_product(eta.probs(), &mu);
                    assert!(approx_eq(mean, expect, 1e-8, 1e-8), "n={n} mu={mu}");
                }
            }
        }
    }
}

#[test]
fn integral_estimator_mean_is_the_moment() {
    let eta = skewed(4);
    for alpha in [2u32, 3] {
        for n in alpha as usize..=8 {
            let sw = exact_sw_distribution(&eta, n).unwrap();
            let mean = sw.expectation(|l| {
                integral_renyi_estimate(l, alpha).unwrap().moment_estimate.unwrap()
            });
            let m: f64 = eta.probs().iter().map(|p| p.powi(alpha as i32)).sum();
            assert!(approx_eq(mean, m, 1e-9, 1e-12));
        }
    }
}

#[test]
fn estimator_examples() {
    let r = integral_renyi_estimate(&partition![2], 2).unwrap();
    assert_eq!(r.moment_estimate, Some(1.0));
    assert_eq!(r.entropy_estimate, 0.0);
    let r = integral_renyi_estimate(&partition![1, 1], 2).unwrap();
    assert_eq!(r.moment_estimate, Some(-1.0));
    assert!(!r.valid);
    assert!(integral_renyi_estimate(&partition![1], 2).is_err());
    let vn = eyd_von_neumann(&partition![2, 1]).unwrap().entropy_estimate;
    assert!(approx_eq(vn, 2.0 / 3.0 * 1.5f64.ln() + 3f64.ln() / 3.0, 1e-12, 0.0));
    let r2 = eyd_renyi(&partition![2, 1], 2.0).unwrap().entropy_estimate;
    assert!(approx_eq(r2, -(5.0f64 / 9.0).ln(), 1e-12, 0.0));
    assert!(eyd_renyi(&partition![2, 1], 1.0).is_err());
}

#[test]
fn spectrum_examples() {
    let eta = spectrum_integral_lb(16, 0.5, 2.0).unwrap();
    assert!(approx_eq(eta.probs()[0], (1.0 + 8f64.sqrt()) / 16.0, 1e-12, 0.0));
    let nu = spectrum_small_alpha_lb(4, 0.2, 0.5).unwrap();
    assert_eq!(nu.dimension(), 5);
    assert!(approx_eq(nu.probs()[0], 0.95, 1e-12, 0.0));
    let sw = exact_sw_distribution(&spectrum_uniform::<f64>(2).unwrap(), 2).unwrap();
    assert!(approx_eq(sw.probability(&partition![2]), 0.75, 1e-12, 0.0));
    assert!(approx_eq(sw.probability(&partition![1, 1]), 0.25, 1e-12, 0.0));
}

#[test]
fn word_frequencies_concentrate() {
    let eta = skewed(4);
    let n = 100_000;
    let word = sample_word(&eta, n, &mut stream_rng(3, 0)).unwrap();
    for (i, &p) in eta.probs().iter().enumerate() {
        let f = word.iter().filter(|&&w| w as usize == i + 1).count() as f64 / n as f64;
        assert!((f - p).abs() <= 4.0 * (p / n as f64).sqrt());
    }
    assert_eq!(word, sample_word(&eta, n, &mut stream_rng(3, 0)).unwrap());
}

#[test]
fn sampled_shape_frequency() {
    let u = spectrum_uniform::<f64>(2).unwrap();
    let mut rng = stream_rng(5, 0);
    let trials = 100_000;
    let rows = (0..trials)
        .filter(|_| sample_sw(&u, 2, &mut rng).unwrap() == partition![2])
        .count();
    assert!((rows as f64 / trials as f64 - 0.75).abs() < 0.01);
}

#[test]
fn wright_series_matches_direct_chi_square() {
    for d in 2..=3usize {
        let lb = {
            let a = (0.3 * d as f64).sqrt();
            let mut x = vec![-a / (d as f64 - 1.0); d];
            x[0] = a;
            x
        };
        let mut xs = vec![lb];
        xs.push((0..d).map(|i| if i == 0 { 0.5 } else { -0.5 / (d - 1) as f64 }).collect());
        xs.push((0..d).map(|i| 0.3 * (i as f64 - (d as f64 - 1.0) / 2.0)).collect());
        for x in xs {
            let eta = Spectrum::new(x.iter().map(|v| (1.0 + v) / d as f64).collect()).unwrap();
            let u = spectrum_uniform::<f64>(d).unwrap();
            for n in 1..=5 {
                let (series, _) = wright_chisq(&x, n, d, 10).unwrap();
                let a = exact_sw_distribution(&eta, n).unwrap();
                let b = exact_sw_distribution(&u, n).unwrap();
                let (_, pa, pb) = aligned_tables(&a, &b);
                let direct = chi_square_direct(&pa, &pb).unwrap();
                assert!((series - direct).abs() < 1e-8, "d={d} n={n}: {series} vs {direct}");
                assert!((distances(&pa, &pb).chisq - direct).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn two_point_error_is_monotone() {
    let eta = Spectrum::new(vec![0.9, 0.1]).unwrap();
    let u = spectrum_uniform::<f64>(2).unwrap();
    let mut prev = 0.5;
    for n in 1..=9 {
        let e = two_point_error(&eta, &u, n).unwrap();
        assert!(e <= prev + 1e-9);
        prev = e;
    }
}

#[test]
fn variance_ratio_bounded_on_exact_grid() {
    let u = spectrum_uniform::<f64>(2).unwrap();
    let table = variance_scaling_check(&u, 2, &[4, 5, 6, 7, 8, 9, 10], None).unwrap();
    let first = table.rows[0].ratio;
    for row in &table.rows {
        assert!(row.ratio <= 4.0 * first, "{row:?}");
    }
    assert!(table.trend_residual < 1e-6 * table.rows.last().unwrap().variance);
}

#[test]
fn median_amplification_calibration() {
    let u = spectrum_uniform::<f64>(2).unwrap();
    let runs = 500;
    let hits = (0..runs)
        .filter(|&t| {
            let mut rng = stream_rng(17, t);
            let r = median_amplified_estimate(&u, 200, Estimator::IntegralRenyi(2), 9, &mut rng).unwrap();
            r.valid && (r.entropy_estimate - 2f64.ln()).abs() < 0.1
        })
        .count();
    assert!(hits as f64 / runs as f64 >= 0.99, "{hits}/{runs}");
    let mut a = stream_rng(1, 1);
    let mut b = stream_rng(1, 1);
    let single = median_amplified_estimate(&u, 50, Estimator::VonNeumann, 1, &mut a).unwrap();
    let lambda = sample_sw(&u, 50, &mut b).unwrap();
    assert_eq!(single, eyd_von_neumann(&lambda).unwrap().with_dimension(2));
}
