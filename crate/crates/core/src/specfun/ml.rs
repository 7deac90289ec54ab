//! Two- and three-parameter Mittag-Leffler functions on the real line.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::gamma::{ln_gamma, rgamma, sin_pi};
use super::kummer::kummer_1f1;
use super::quad::integrate_breaks;
use super::sum::Compensated;
use super::talbot;
use crate::error::{domain, nonconv, Result};

/// Parameters (α, β, γ) of E^γ_{α,β}. γ = 1 is the two-parameter function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl MLParams {
    pub fn new(alpha: f64, beta: f64) -> Self {
        Self { alpha, beta, gamma: 1.0 }
    }

    pub fn generalized(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self { alpha, beta, gamma }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |x: f64| x.is_finite() && x > 0.0;
        if ok(self.alpha) && ok(self.beta) && ok(self.gamma) {
            Ok(())
        } else {
            domain(format!("Mittag-Leffler parameters must be positive, got {self:?}"))
        }
    }
}

/// Truncation and algorithm-switch settings for the power series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPolicy {
    pub rel_tol: f64,
    pub max_terms: usize,
    /// |z| above which negative arguments use the integral representation.
    /// For α < 1 the switch happens no later than [`ml_switch_point`].
    pub switch_threshold: f64,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        Self { rel_tol: f64::EPSILON, max_terms: 10_000, switch_threshold: 5.0 }
    }
}

impl SeriesPolicy {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-6) {
            return domain(format!("rel_tol must lie in (0, 1e-6], got {}", self.rel_tol));
        }
        if self.max_terms < 64 {
            return domain(format!("max_terms must be >= 64, got {}", self.max_terms));
        }
        if !(self.switch_threshold > 0.0) {
            return domain("switch_threshold must be positive");
        }
        Ok(())
    }
}

/// A series value with its absolute-term sum and a rounding-error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub abs_sum: f64,
    pub error: f64,
    pub terms: usize,
}

// Relative rounding bound accepted before a series result is rejected.
const SERIES_ACCEPT: f64 = 1e-11;

/// |z| at which `mittag_leffler` leaves the series for negative z.
///
/// The double-precision series loses about exp(|z|^{1/α}) ulps, so the
/// fixed threshold is capped at 7^α/2.
pub fn ml_switch_point(alpha: f64, policy: &SeriesPolicy) -> f64 {
    if alpha < 1.0 {
        policy.switch_threshold.min(0.5 * 7f64.powf(alpha))
    } else {
        policy.switch_threshold
    }
}

/// Sums Σ_j sign_j·exp(log_j) where `term(j)` yields `(sign, log|t_j|, scale)`;
/// `scale` is the magnitude of the logs combined into `log|t_j|`, used for
/// the rounding bound.
pub(crate) fn sum_series<F>(mut term: F, policy: &SeriesPolicy, what: &str) -> Result<SeriesValue>
where
    F: FnMut(usize) -> (f64, f64, f64),
{
    let mut acc = Compensated::new();
    let mut abs_sum = 0.0;
    let mut err = 0.0;
    let mut small = 0;
    for j in 0..policy.max_terms {
        let (sign, lg, scale) = term(j);
        let t = if sign == 0.0 { 0.0 } else { sign * lg.exp() };
        if !t.is_finite() {
            return nonconv(format!("{what}: term {j} overflowed"));
        }
        acc.add(t);
        let a = t.abs();
        abs_sum += a;
        err += a * f64::EPSILON * (4.0 + scale);
        let s = acc.value();
        if a <= policy.rel_tol * s.abs() {
            small += 1;
            if small >= 3 {
                return Ok(SeriesValue {
                    value: s,
                    abs_sum,
                    error: err + abs_sum * f64::EPSILON,
                    terms: j + 1,
                });
            }
        } else {
            small = 0;
        }
    }
    nonconv(format!("{what}: {} terms without reaching tolerance", policy.max_terms))
}

/// Power series of E^γ_{α,β}(z), Pochhammer symbols in log space.
pub fn gml_series(p: &MLParams, z: f64, policy: &SeriesPolicy) -> Result<SeriesValue> {
    p.validate()?;
    policy.validate()?;
    if !z.is_finite() {
        return domain("argument must be finite");
    }
    if z == 0.0 {
        let v = rgamma(p.beta);
        return Ok(SeriesValue { value: v, abs_sum: v.abs(), error: 0.0, terms: 1 });
    }
    let lz = z.abs().ln();
    let neg = z < 0.0;
    let lg_g = ln_gamma(p.gamma).0;
    let unit = p.gamma == 1.0;
    sum_series(
        |j| {
            let jf = j as f64;
            let (lgd, sd) = ln_gamma(p.alpha * jf + p.beta);
            let poch = if unit { 0.0 } else { ln_gamma(p.gamma + jf).0 - lg_g - ln_gamma(jf + 1.0).0 };
            let lg = jf * lz + poch - lgd;
            let sign = if neg && j % 2 == 1 { -sd } else { sd };
            let scale = (jf * lz).abs() + lgd.abs() + if unit { 0.0 } else { 2.0 * poch.abs() + lg_g.abs() };
            (sign, lg, scale)
        },
        policy,
        "Mittag-Leffler series",
    )
}

/// Power series of E_{α,β}(z).
pub fn ml_series(p: &MLParams, z: f64, policy: &SeriesPolicy) -> Result<SeriesValue> {
    gml_series(&MLParams { gamma: 1.0, ..*p }, z, policy)
}

/// E_{α,β}(−c), c > 0, 0 < α < 1, from the real integral representation
///
/// E_{α,β}(−c) = (1/π) ∫₀^∞ r^{α−β} e^{−r} (r^α sin βπ + c sin(β−α)π)
///               / (r^{2α} + 2 r^α c cos απ + c²) dr,
///
/// integrated in u = r^α. β > 1 is first lowered with
/// E_{α,β}(z) = (E_{α,β−α}(z) − 1/Γ(β−α)) / z.
pub fn ml_integral(alpha: f64, beta: f64, c: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0) || !(c > 0.0) || !c.is_finite() {
        return domain(format!("integral representation needs 0<α<1, β>0, c>0 (α={alpha}, β={beta}, c={c})"));
    }
    if beta > 1.0 {
        let lower = ml_integral(alpha, beta - alpha, c)?;
        return Ok((lower - rgamma(beta - alpha)) / (-c));
    }
    let sb = sin_pi(beta);
    let sba = sin_pi(beta - alpha);
    let ca = (PI * alpha).cos();
    let p = (1.0 - beta) / alpha;
    let inv_a = 1.0 / alpha;
    let f = move |u: f64| {
        if u <= 0.0 {
            return 0.0;
        }
        let den = u * u + 2.0 * u * c * ca + c * c;
        u.powf(p) * (-u.powf(inv_a)).exp() * (u * sb + c * sba) / den * inv_a / PI
    };
    let upper = 50f64.powf(alpha);
    let mut pts = vec![0.0];
    for x in [0.25 * c, c, 4.0 * c] {
        if x < upper {
            pts.push(x);
        }
    }
    pts.push(upper);
    let r = integrate_breaks(f, &pts, 1e-17, 1e-14)?;
    Ok(r.value)
}

/// E_{α,β}(z) with the default policy.
pub fn mittag_leffler(p: &MLParams, z: f64) -> Result<f64> {
    mittag_leffler_with(p, z, &SeriesPolicy::default())
}

/// E_{α,β}(z). `p.gamma` is ignored.
pub fn mittag_leffler_with(p: &MLParams, z: f64, policy: &SeriesPolicy) -> Result<f64> {
    ml_eval(&MLParams { gamma: 1.0, ..*p }, z, policy).map(|s| s.value)
}

fn ml_eval(p: &MLParams, z: f64, policy: &SeriesPolicy) -> Result<SeriesValue> {
    p.validate()?;
    policy.validate()?;
    if !z.is_finite() {
        return domain("argument must be finite");
    }
    let negative_route = |z: f64| -> Result<Option<SeriesValue>> {
        let v = if p.alpha < 1.0 {
            ml_integral(p.alpha, p.beta, -z)?
        } else if p.alpha == 1.0 {
            kummer_1f1(1.0, p.beta, z)? * rgamma(p.beta)
        } else {
            return Ok(None);
        };
        Ok(Some(SeriesValue { value: v, abs_sum: v.abs(), error: 1e-13 * v.abs(), terms: 0 }))
    };
    if z < 0.0 && -z >= ml_switch_point(p.alpha, policy) {
        if let Some(v) = negative_route(z)? {
            return Ok(v);
        }
    }
    let s = gml_series(p, z, policy)?;
    if s.error > SERIES_ACCEPT * s.value.abs() {
        // below the switch point the series can still lose to a nearby zero
        if z < 0.0 {
            if let Some(v) = negative_route(z)? {
                return Ok(v);
            }
        }
        return nonconv(format!(
            "series cancellation at z={z}: bound {:e} against value {:e}",
            s.error, s.value
        ));
    }
    Ok(s)
}

/// E^γ_{α,β}(z) with the default policy.
pub fn gml(p: &MLParams, z: f64) -> Result<f64> {
    gml_with(p, z, &SeriesPolicy::default())
}

/// E^γ_{α,β}(z). Exactly [`mittag_leffler_with`] when γ = 1.
pub fn gml_with(p: &MLParams, z: f64, policy: &SeriesPolicy) -> Result<f64> {
    gml_eval(p, z, policy).map(|s| s.value)
}

/// E^γ_{α,β}(z) together with an error bound.
///
/// Large negative arguments are handled by Talbot inversion of
/// s^{αγ−β}/(s^α+1)^γ at t = |z|^{1/α} when α < 1, and through
/// E^γ_{1,β}(z) = ₁F₁(γ; β; z)/Γ(β) when α = 1.
pub fn gml_eval(p: &MLParams, z: f64, policy: &SeriesPolicy) -> Result<SeriesValue> {
    p.validate()?;
    policy.validate()?;
    if p.gamma == 1.0 {
        return ml_eval(p, z, policy);
    }
    if !z.is_finite() {
        return domain("argument must be finite");
    }
    let hopeless = z < 0.0 && (-z).powf(1.0 / p.alpha) > 30.0;
    if !hopeless {
        match gml_series(p, z, policy) {
            Ok(s) if s.error <= SERIES_ACCEPT * s.value.abs() || z >= 0.0 => return Ok(s),
            Ok(_) | Err(_) if z < 0.0 => {}
            other => return other,
        }
    }
    if p.alpha < 1.0 {
        let x = -z;
        let t = x.powf(1.0 / p.alpha);
        let (a, b, g) = (p.alpha, p.beta, p.gamma);
        let f = talbot::invert(
            |s: Complex64| s.powf(a * g - b) / (s.powf(a) + 1.0).powf(g),
            t,
            talbot::DEFAULT_NODES,
        );
        let v = f * t.powf(1.0 - b);
        return Ok(SeriesValue { value: v, abs_sum: v.abs(), error: 1e-12 * v.abs().max(1e-300), terms: 0 });
    }
    if p.alpha == 1.0 {
        let v = kummer_1f1(p.gamma, p.beta, z)? * rgamma(p.beta);
        return Ok(SeriesValue { value: v, abs_sum: v.abs(), error: 1e-13 * v.abs(), terms: 0 });
    }
    nonconv(format!("generalized Mittag-Leffler with α={} at z={z}", p.alpha))
}
