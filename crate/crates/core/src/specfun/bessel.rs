use std::f64::consts::PI;

use super::gamma::{gamma, rgamma};
use super::sum::Compensated;
use crate::error::{domain, nonconv, Result};

/// Series/asymptotic crossover for [`bessel_i`].
pub const BESSEL_ASYMPTOTIC_X: f64 = 20.0;

// ζ above which Ai uses the K_{1/3} integral instead of the I difference.
const AIRY_K_ZETA: f64 = 2.0;

fn check_order(order: f64) -> Result<()> {
    let third = 1.0 / 3.0;
    if [0.0, third, -third].iter().any(|o| (order - o).abs() < 1e-12) {
        Ok(())
    } else {
        domain(format!("Bessel order must be 0 or ±1/3, got {order}"))
    }
}

fn ascending(order: f64, x: f64) -> f64 {
    let h = 0.5 * x;
    let q = h * h;
    let mut t = h.powf(order) * rgamma(order + 1.0);
    let mut acc = Compensated::new();
    acc.add(t);
    let mut k = 0.0;
    while t > f64::EPSILON * 0.25 * acc.value() {
        k += 1.0;
        t *= q / (k * (k + order));
        acc.add(t);
    }
    acc.value()
}

// Σ (−1)^k a_k(ν)/x^k of the Hankel expansion I_ν(x) ~ e^x/√(2πx) Σ ...
fn hankel_sum(order: f64, x: f64) -> Result<f64> {
    let mu = 4.0 * order * order;
    let mut t = 1.0;
    let mut acc = Compensated::new();
    acc.add(t);
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        let next = -t * (mu - odd * odd) / (kf * 8.0 * x);
        if next.abs() > t.abs() {
            break;
        }
        t = next;
        acc.add(t);
        if t.abs() <= f64::EPSILON * 0.25 * acc.value().abs() {
            return Ok(acc.value());
        }
    }
    if t.abs() < 1e-15 {
        Ok(acc.value())
    } else {
        nonconv(format!("Hankel expansion for I_{order}({x})"))
    }
}

/// Modified Bessel function I_ν(x) for ν ∈ {0, 1/3, −1/3}, x ≥ 0.
pub fn bessel_i(order: f64, x: f64) -> Result<f64> {
    check_order(order)?;
    if !(x >= 0.0) || !x.is_finite() {
        return domain(format!("Bessel argument must be finite and >= 0, got {x}"));
    }
    if x == 0.0 {
        return Ok(if order == 0.0 {
            1.0
        } else if order > 0.0 {
            0.0
        } else {
            f64::INFINITY
        });
    }
    if x <= BESSEL_ASYMPTOTIC_X {
        return Ok(ascending(order, x));
    }
    Ok(x.exp() / (2.0 * PI * x).sqrt() * hankel_sum(order, x)?)
}

/// e^{−x} I_ν(x), finite for all x ≥ 0.
pub fn bessel_i_scaled(order: f64, x: f64) -> Result<f64> {
    check_order(order)?;
    if !(x >= 0.0) || !x.is_finite() {
        return domain(format!("Bessel argument must be finite and >= 0, got {x}"));
    }
    if x <= BESSEL_ASYMPTOTIC_X {
        return Ok(bessel_i(order, x)? * (-x).exp());
    }
    Ok(hankel_sum(order, x)? / (2.0 * PI * x).sqrt())
}

// e^{ζ} K_{1/3}(ζ) = ∫₀^∞ e^{−ζ(cosh s − 1)} cosh(s/3) ds, trapezoid rule.
fn k13_scaled(zeta: f64) -> f64 {
    let h = 0.05;
    let mut acc = Compensated::new();
    acc.add(0.5);
    let mut k = 1.0;
    loop {
        let s: f64 = k * h;
        let v = (-zeta * (s.cosh() - 1.0)).exp() * (s / 3.0).cosh();
        acc.add(v);
        if v < 1e-18 * acc.value() {
            break;
        }
        k += 1.0;
    }
    h * acc.value()
}

/// Airy function Ai(w) for w ≥ 0.
pub fn airy_ai(w: f64) -> Result<f64> {
    if !(w >= 0.0) || !w.is_finite() {
        return domain(format!("airy_ai is implemented for finite w >= 0, got {w}"));
    }
    if w == 0.0 {
        return Ok(3f64.powf(-2.0 / 3.0) / gamma(2.0 / 3.0));
    }
    let zeta = 2.0 / 3.0 * w.powf(1.5);
    if zeta <= AIRY_K_ZETA {
        let third = 1.0 / 3.0;
        return Ok(w.sqrt() / 3.0 * (ascending(-third, zeta) - ascending(third, zeta)));
    }
    Ok(w.sqrt() / (PI * 3f64.sqrt()) * k13_scaled(zeta) * (-zeta).exp())
}
