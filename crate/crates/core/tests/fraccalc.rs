use frax_core::fraccalc::*;
use frax_core::relaxation::{laplace_transform_real, psi, RelaxationModel as M};
use frax_core::specfun::gamma;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn grid<F: Fn(f64) -> f64>(f: F, h: f64, n: usize) -> L1Grid {
    L1Grid::sample(|t| Ok(f(t)), h, n).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn l1_of_t_matches_quadrature() {
    let g = grid(|t| t, 1.0 / 32.0, 32);
    let d = caputo_l1(&g, 0.5).unwrap();
    for m in [8usize, 16, 32] {
        let t = m as f64 / 32.0;
        let oracle = caputo_quad(|_| 1.0, t, 0.5).unwrap();
        assert!((oracle - t.sqrt() / gamma(1.5)).abs() < 1e-13);
        assert!((d[m - 1] - oracle).abs() < 1e-12, "t={t}");
    }
}

#[test]
fn l1_of_t_squared_converges_at_two_minus_nu() {
    let nu = 0.4;
    let oracle = caputo_quad(|s| 2.0 * s, 1.0, nu).unwrap();
    assert!(rel(oracle, 2.0 / gamma(3.0 - nu)) < 1e-12);
    let errs: Vec<f64> = [32usize, 64, 128]
        .iter()
        .map(|&n| {
            let g = grid(|t| t * t, 1.0 / n as f64, n);
            (caputo_l1(&g, nu).unwrap()[n - 1] - oracle).abs()
        })
        .collect();
    for w in errs.windows(2) {
        let p = (w[0] / w[1]).log2();
        assert!((p - (2.0 - nu)).abs() < 0.1, "order {p}");
    }
}

#[test]
fn mittag_leffler_relaxation_residual_order() {
    let m = M::Fractional { nu: 0.5, lambda: 1.0 };
    let g = L1Grid::sample(|t| psi(&m, t), 1.0 / 32.0, 64).unwrap();
    let r = ode_residual(&m, &g).unwrap();
    assert_eq!(r.levels.len(), 3);
    assert!(r.order >= 1.3, "order {}", r.order);
    assert!(r.levels.windows(2).all(|w| w[1].max_norm < w[0].max_norm));
    // the L1 scheme itself: d^ν ψ ≈ −λψ
    let d = caputo_l1(&g, 0.5).unwrap();
    assert!((d[63] + g.values[64]).abs() < 1e-2);
}

#[test]
fn standard_residual_is_first_order() {
    let m = M::Standard { lambda: 1.0 };
    let h = 1.0 / 64.0;
    let g = L1Grid::sample(|t| psi(&m, t), h, 128).unwrap();
    let r = ode_residual(&m, &g).unwrap();
    assert!((r.order - 1.0).abs() < 0.05);
    // backward difference of e^{−t}: residual ≤ h/2 · max|ψ''|
    assert!(r.levels[0].max_norm <= 0.5 * h);
}

#[test]
fn gamma_boundary_k2_residual_decreases() {
    let m = M::GammaBoundary { k: 2, lambda: 1.0 };
    let g = L1Grid::sample(|t| psi(&m, t), 1.0 / 32.0, 64).unwrap();
    let r = ode_residual(&m, &g).unwrap();
    assert!(r.levels.windows(2).all(|w| w[1].max_norm < 0.6 * w[0].max_norm), "{:?}", r.levels);
}

#[test]
fn residual_needs_three_levels() {
    let m = M::Standard { lambda: 1.0 };
    let g = L1Grid::sample(|t| psi(&m, t), 0.1, 16).unwrap();
    assert!(ode_residual_levels(&m, &g, 2).is_err());
}

#[test]
fn rl_integral_examples() {
    let n = 256;
    let one = grid(|_| 1.0, 1.0 / n as f64, n);
    let i = rl_integral(&one, 0.5).unwrap();
    assert!((i[n - 1] - 1.1283792).abs() < 1e-7);
    assert!((i[n - 1] - 1.0 / gamma(1.5)).abs() < 1e-14);
    // power rule I^ν t = Γ(2)/Γ(2+ν) t^{1+ν}
    let exact = 1.0 / gamma(2.5);
    assert!((exact - 0.7522528).abs() < 1e-7);
    let mut prev = f64::INFINITY;
    for n in [64usize, 128, 256] {
        let g = grid(|t| t, 1.0 / n as f64, n);
        let e = (rl_integral(&g, 0.5).unwrap()[n - 1] - exact).abs();
        assert!(e < prev && e < 1e-3, "n={n} err={e}");
        prev = e;
    }
}

#[test]
fn laplace_forward_examples() {
    assert!((laplace_forward(|t| (-t).exp(), 1.0).unwrap() - 0.5).abs() < 1e-14);
    let half = M::Fractional { nu: 0.5, lambda: 1.0 };
    let v = laplace_forward(|t| psi(&half, t).unwrap(), 1.0).unwrap();
    assert!((v - 0.5).abs() < 1e-9);
    let el = M::Elastic { alpha: 1.0, lambda: 1.0 };
    let v = laplace_forward(|t| psi(&el, t).unwrap(), 2.0).unwrap();
    assert!((v - 3.5 / 9.0).abs() < 1e-6);
}

#[test]
fn laplace_invert_examples() {
    let inv = laplace_invert(|s| 1.0 / (s + 1.0), 1.0).unwrap();
    assert!((inv.value - (-1f64).exp()).abs() < 1e-7);
    assert!(inv.disagreement <= 1e-4);
    let ma2 = |s: f64| ((s.sqrt() + 1.0).powi(2) - 1.0) / (s * (s.sqrt() + 1.0).powi(2));
    let v = laplace_invert(ma2, 1.0).unwrap().value;
    assert!((v - psi(&M::GammaBoundary { k: 2, lambda: 1.0 }, 1.0).unwrap()).abs() < 1e-6);
    let bi = |s: f64| {
        let a = 0.5 * s.sqrt() + 0.5 * s;
        a / (s * (1.0 + a))
    };
    let d = M::Distributed { nu1: 0.5, nu2: 1.0, n1: 0.5, n2: 0.5, lambda: 1.0 };
    let v = laplace_invert(bi, 1.0).unwrap().value;
    assert!((v - psi(&d, 1.0).unwrap()).abs() < 1e-5);
}

#[test]
fn laplace_invert_flags_instability() {
    // e^{−t} far out: the orders never settle
    let e = laplace_invert(|s| 1.0 / (s + 1.0), 10.0);
    assert!(matches!(e, Err(frax_core::FraxError::Unstable(_))));
}

// Closed forms written out independently of the crate's transform module.
fn elastic_closed(alpha: f64, lambda: f64, eta: f64) -> f64 {
    let r = (2.0 * eta).sqrt();
    (alpha * lambda / eta + 2f64.sqrt() * alpha / eta.sqrt() + 2.0) / ((r + alpha) * (r + lambda))
}

fn gamma_boundary_closed(k: i32, lambda: f64, eta: f64) -> f64 {
    let r = eta.sqrt() + lambda;
    (r.powi(k) - lambda.powi(k)) / (eta * r.powi(k))
}

fn elastic_gamma_closed(k: i32, alpha: f64, lambda: f64, eta: f64) -> f64 {
    let r = (2.0 * eta).sqrt();
    1.0 / eta - 2f64.sqrt() * lambda.powi(k) / (eta.sqrt() * (r + alpha) * (r + lambda).powi(k))
}

#[test]
fn transform_identities_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let alpha = rng.random_range(0.2..3.0);
        let lambda = rng.random_range(0.2..3.0);
        let eta = rng.random_range(0.5..20.0);
        let k = rng.random_range(1..=3);
        let cases = [
            (M::Elastic { alpha, lambda }, elastic_closed(alpha, lambda, eta)),
            (M::GammaBoundary { k: k as u32, lambda }, gamma_boundary_closed(k, lambda, eta)),
            (M::ElasticGamma { k: k as u32, alpha, lambda }, elastic_gamma_closed(k, alpha, lambda, eta)),
        ];
        for (m, closed) in cases {
            let num = laplace_forward(|t| psi(&m, t).unwrap(), eta).unwrap();
            assert!(rel(num, closed) < 1e-6, "{m:?} eta={eta}: {num} vs {closed}");
            assert!(rel(laplace_transform_real(&m, eta).unwrap(), closed) < 1e-12);
        }
    }
}

#[test]
fn caputo_laplace_law() {
    let nu = 0.5;
    for eta in [0.7, 1.0, 3.0] {
        let lhs = laplace_forward(|t| if t == 0.0 { 0.0 } else { caputo_quad(|s| 2.0 * s, t, nu).unwrap() }, eta).unwrap();
        let lg = laplace_forward(|t| t * t, eta).unwrap();
        let rhs = eta.powf(nu) * lg - eta.powf(nu - 1.0) * 0.0;
        assert!(rel(lhs, rhs) < 1e-5, "eta={eta}");
        assert!(rel(lg, 2.0 / eta.powi(3)) < 1e-12);
    }
}

#[test]
fn half_derivative_recursion_converges() {
    for k in [2u32, 3] {
        let m = M::GammaBoundary { k, lambda: 1.0 };
        let g = L1Grid::sample(|t| psi(&m, t), 1.0 / 32.0, 64).unwrap();
        let r = half_derivative_recursion(k, 1.0, &g, 3).unwrap();
        assert!(r.levels.windows(2).all(|w| w[1].max_norm < 0.6 * w[0].max_norm), "k={k} {:?}", r.levels);
        assert!(r.max_norm < 1e-3);
    }
}

fn round_trip_worst<F: Fn(f64) -> f64>(f: F) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..=20 {
        let t = 0.1 * 100f64.powf(i as f64 / 20.0);
        let v = laplace_invert(|eta| laplace_forward(&f, eta).unwrap(), t).map(|x| x.value).unwrap_or(f64::NAN);
        worst = worst.max(if v.is_nan() { f64::INFINITY } else { rel(v, f(t)) });
    }
    worst
}

#[test]
fn round_trip_half_order() {
    let m = M::Fractional { nu: 0.5, lambda: 1.0 };
    let w = round_trip_worst(|t| psi(&m, t).unwrap());
    assert!(w < 1e-5, "worst {w:e}");
}

// Gaver–Stehfest with N ≤ 18 in double precision cannot follow e^{−t} past
// t ≈ 3 (the best order is off by 4e-4 at t = 4), and ψ⁺ is off by 2.4e-5
// at t = 10 where two wrong orders agree.
#[test]
#[ignore = "Gaver-Stehfest N <= 18 cannot reach 1e-5 on e^-t and the sojourn law at t = 10"]
fn round_trip_exponential_and_sojourn() {
    let m = M::Sojourn { lambda: 1.0 };
    let we = round_trip_worst(|t| (-t).exp());
    let ws = round_trip_worst(|t| psi(&m, t).unwrap());
    assert!(we < 1e-5 && ws < 1e-5, "exp {we:e} sojourn {ws:e}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn l1_kills_constants(c in -5.0f64..5.0, h in 0.001f64..1.0, n in 8usize..200, nu in 0.05f64..0.95) {
        let g = grid(|_| c, h, n);
        prop_assert!(caputo_l1(&g, nu).unwrap().iter().all(|&x| x == 0.0));
    }

    #[test]
    fn rl_integral_is_linear(a in -3.0f64..3.0, b in -3.0f64..3.0, nu in 0.05f64..0.95) {
        let (h, n) = (0.05, 40);
        let f1 = |t: f64| t.sin();
        let f2 = |t: f64| (t * t).exp().recip();
        let i1 = rl_integral(&grid(f1, h, n), nu).unwrap();
        let i2 = rl_integral(&grid(f2, h, n), nu).unwrap();
        let ic = rl_integral(&grid(|t| a * f1(t) + b * f2(t), h, n), nu).unwrap();
        for m in 0..n {
            let lin = a * i1[m] + b * i2[m];
            prop_assert!((ic[m] - lin).abs() <= 1e-14 * (1.0 + lin.abs()));
        }
    }

    #[test]
    fn rl_of_constant_is_exact(c in 0.1f64..5.0, nu in 0.05f64..0.95, n in 8usize..100) {
        let h = 1.0 / n as f64;
        let i = rl_integral(&grid(|_| c, h, n), nu).unwrap();
        let exact = c / gamma(1.0 + nu);
        prop_assert!((i[n - 1] - exact).abs() < 1e-13 * exact);
    }
}
