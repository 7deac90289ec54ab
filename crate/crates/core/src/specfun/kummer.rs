use super::gamma::ln_gamma;
use super::sum::Compensated;
use crate::error::{domain, nonconv, Result};

/// Below −KUMMER_ASYMPTOTIC_X the large-argument expansion is used.
pub const KUMMER_ASYMPTOTIC_X: f64 = 50.0;

fn is_nonpos_int(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn series(a: f64, c: f64, x: f64) -> Result<f64> {
    let mut acc = Compensated::new();
    let mut t = 1.0;
    let mut small = 0;
    acc.add(t);
    for j in 0..20_000 {
        let jf = j as f64;
        t *= (a + jf) / (c + jf) * x / (jf + 1.0);
        if !t.is_finite() {
            return nonconv(format!("1F1({a};{c};{x}) series overflow"));
        }
        acc.add(t);
        if t.abs() <= f64::EPSILON * acc.value().abs() {
            small += 1;
            if small >= 3 {
                return Ok(acc.value());
            }
        } else {
            small = 0;
        }
    }
    nonconv(format!("1F1({a};{c};{x}) series did not converge"))
}

fn asymptotic(a: f64, c: f64, x: f64) -> Result<f64> {
    let big = -x;
    let (lc, sc) = ln_gamma(c);
    let (lca, sca) = ln_gamma(c - a);
    let lead = sc * sca * (lc - lca - a * big.ln()).exp();
    let b = a - c + 1.0;
    let mut acc = Compensated::new();
    let mut t = 1.0;
    acc.add(t);
    let mut last = f64::INFINITY;
    for s in 0..200 {
        let sf = s as f64;
        let next = t * (a + sf) * (b + sf) / ((sf + 1.0) * big);
        if next.abs() >= last || next == 0.0 {
            break;
        }
        if next.abs() <= f64::EPSILON * acc.value().abs() {
            return Ok(lead * acc.value());
        }
        last = next.abs();
        t = next;
        acc.add(t);
    }
    if last <= 1e-12 * acc.value().abs() {
        return Ok(lead * acc.value());
    }
    nonconv(format!("1F1({a};{c};{x}) asymptotic expansion too coarse"))
}

/// Confluent hypergeometric ₁F₁(a; c; x).
///
/// * x ≥ 0: power series.
/// * −50 ≤ x < 0: Kummer's transformation e^x ₁F₁(c−a; c; −x).
/// * x < −50: Γ(c)/Γ(c−a) |x|^{−a} Σ_s (a)_s (a−c+1)_s / (s! |x|^s).
pub fn kummer_1f1(a: f64, c: f64, x: f64) -> Result<f64> {
    if !(a.is_finite() && c.is_finite() && x.is_finite()) {
        return domain("1F1 arguments must be finite");
    }
    if is_nonpos_int(c) {
        return domain(format!("1F1 undefined for c = {c}"));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if a == c {
        return Ok(x.exp());
    }
    if x > 0.0 || is_nonpos_int(a) {
        return series(a, c, x);
    }
    if x >= -KUMMER_ASYMPTOTIC_X || is_nonpos_int(c - a) {
        return Ok(x.exp() * series(c - a, c, -x)?);
    }
    asymptotic(a, c, x)
}
