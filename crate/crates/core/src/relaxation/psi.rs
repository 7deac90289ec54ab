use num_complex::Complex64;

use super::model::{RelaxationModel, TimeGrid};
use super::transform::laplace_transform;
use crate::error::{domain, nonconv, FraxError, Result};
use crate::specfun::{
    bessel_i_scaled, gml_eval, ln_gamma, mittag_leffler, talbot, Compensated, MLParams, SeriesPolicy,
};

// |α − λ| below this fraction of λ uses the equal-rate elastic formulas.
const EQUAL_RATE_REL: f64 = 1e-8;
// Series results with a larger relative rounding bound are replaced by
// Talbot inversion of the closed-form transform.
const SERIES_TRUST: f64 = 1e-10;
const OUTER_CAP: usize = 500;

fn e_half(x: f64) -> Result<f64> {
    mittag_leffler(&MLParams::new(0.5, 1.0), -x)
}

/// ψ(t) of `model`. ψ(0) = 1.
pub fn psi(model: &RelaxationModel, t: f64) -> Result<f64> {
    model.validate()?;
    if !(t >= 0.0) || !t.is_finite() {
        return domain(format!("time must be finite and >= 0, got {t}"));
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    use RelaxationModel::*;
    let v = match *model {
        Standard { lambda } => (-lambda * t).exp(),
        Fractional { nu, lambda } => mittag_leffler(&MLParams::new(nu, 1.0), -lambda * t.powf(nu))?,
        Sojourn { lambda } => bessel_i_scaled(0.0, 0.5 * lambda * t)?,
        FirstPassage { lambda, n } => (-RelaxationModel::first_passage_rate(lambda, n) * t).exp(),
        BesselSq { gamma, lambda } => (2.0 * lambda * t + 1.0).powf(-0.5 * gamma),
        Elastic { alpha, lambda } => elastic(alpha, lambda, t)?,
        GammaBoundary { k, lambda } => {
            let x = lambda * t.sqrt();
            let kf = k as f64;
            let g = gml_eval(&MLParams::generalized(0.5, 0.5 * kf + 1.0, kf), -x, &SeriesPolicy::default())?;
            1.0 - x.powi(k as i32) * g.value
        }
        ElasticGamma { k, alpha, lambda } => elastic_gamma(model, k, alpha, lambda, t)?,
        Distributed { nu1, nu2, n1, n2, lambda } => distributed(model, nu1, nu2, n1, n2, lambda, t)?,
    };
    if !v.is_finite() {
        return nonconv(format!("{} at t={t} is not finite", model.name()));
    }
    Ok(v)
}

/// ψ evaluated on every point of `grid`, in grid order.
pub fn psi_grid(model: &RelaxationModel, grid: &TimeGrid) -> Result<Vec<(f64, f64)>> {
    grid.times().iter().map(|&t| psi(model, t).map(|v| (t, v))).collect()
}

/// ψ(t) by Talbot inversion of the closed-form transform.
pub fn psi_via_transform(model: &RelaxationModel, t: f64) -> Result<f64> {
    model.validate()?;
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("time must be positive, got {t}"));
    }
    laplace_transform(model, Complex64::new(1.0, 0.0))?;
    Ok(talbot::invert(
        |s| laplace_transform(model, s).unwrap_or(Complex64::new(f64::NAN, 0.0)),
        t,
        talbot::DEFAULT_NODES,
    ))
}

fn elastic(alpha: f64, lambda: f64, t: f64) -> Result<f64> {
    let h = (0.5 * t).sqrt();
    if (alpha - lambda).abs() < EQUAL_RATE_REL * lambda {
        let e = mittag_leffler(&MLParams::new(0.5, 0.5), -lambda * h)?;
        return Ok(1.0 - lambda * (2.0 * t).sqrt() * e);
    }
    let d = e_half(alpha * h)? - e_half(lambda * h)?;
    Ok(1.0 - lambda / (lambda - alpha) * d)
}

/// Value and rounding bound of the double series
/// 1 − x^k Σ_l (−y)^l E^k_{1/2,(l+k)/2+1}(−x), x = λ√(t/2), y = α√(t/2),
/// summed along anti-diagonals m = j + l of the inner GML expansion.
pub fn elastic_gamma_series(k: u32, alpha: f64, lambda: f64, t: f64) -> Result<(f64, f64)> {
    let h = (0.5 * t).sqrt();
    let (x, y) = (lambda * h, alpha * h);
    let kf = k as f64;
    let (lx, ly) = (x.ln(), y.ln());
    let lg_k = ln_gamma(kf).0;
    // ln C_m with C_m = y C_{m−1} + (k)_m x^m / m!
    let mut ln_c = f64::NEG_INFINITY;
    let mut acc = Compensated::new();
    let mut abs = 0.0;
    let mut small = 0;
    for m in 0..20_000usize {
        let mf = m as f64;
        let ln_p = ln_gamma(kf + mf).0 - lg_k - ln_gamma(mf + 1.0).0 + mf * lx;
        ln_c = if m == 0 {
            ln_p
        } else {
            let a = ly + ln_c;
            let hi = a.max(ln_p);
            hi + ((a - hi).exp() + (ln_p - hi).exp()).ln()
        };
        let lt = ln_c - ln_gamma(0.5 * (mf + kf) + 1.0).0;
        let term = if m % 2 == 1 { -lt.exp() } else { lt.exp() };
        if !term.is_finite() {
            return nonconv("elastic-Gamma series overflow");
        }
        acc.add(term);
        abs += term.abs() * (4.0 + lt.abs() + mf * (lx.abs() + ly.abs()));
        if term.abs() <= 1e-17 * acc.value().abs() {
            small += 1;
            if small >= 3 {
                let xk = x.powi(k as i32);
                return Ok((1.0 - xk * acc.value(), xk * abs * f64::EPSILON));
            }
        } else {
            small = 0;
        }
    }
    nonconv("elastic-Gamma series did not converge")
}

/// Value and error bound from the partial-fraction form
/// 1 − (x/(x−y))^k [E_{1/2}(−y) − Σ_{j=1}^k (x−y)^{j−1} E^j_{1/2,(j+1)/2}(−x)].
pub fn elastic_gamma_partial_fractions(k: u32, alpha: f64, lambda: f64, t: f64) -> Result<(f64, f64)> {
    let h = (0.5 * t).sqrt();
    let (x, y) = (lambda * h, alpha * h);
    let d = x - y;
    let pol = SeriesPolicy::default();
    let first = gml_eval(&MLParams::new(0.5, 1.0), -y, &pol)?;
    let mut acc = Compensated::new();
    acc.add(first.value);
    let mut abs = first.value.abs();
    let mut err = first.error;
    for j in 1..=k {
        let jf = j as f64;
        let g = gml_eval(&MLParams::generalized(0.5, 0.5 * (jf + 1.0), jf), -x, &pol)?;
        let w = d.powi(j as i32 - 1);
        acc.add(-w * g.value);
        abs += (w * g.value).abs();
        err += w.abs() * g.error;
    }
    let f = (x / d).powi(k as i32);
    let err = f.abs() * (err + 4.0 * f64::EPSILON * abs);
    Ok((1.0 - f * acc.value(), err))
}

fn elastic_gamma(model: &RelaxationModel, k: u32, alpha: f64, lambda: f64, t: f64) -> Result<f64> {
    let h = (0.5 * t).sqrt();
    if (alpha - lambda).abs() < EQUAL_RATE_REL * lambda {
        let x = lambda * h;
        let kf = k as f64;
        let g = gml_eval(&MLParams::generalized(0.5, 0.5 * kf + 1.0, kf + 1.0), -x, &SeriesPolicy::default())?;
        return Ok(1.0 - x.powi(k as i32) * g.value);
    }
    let mut best: Option<(f64, f64)> = None;
    let mut consider = |r: Result<(f64, f64)>| {
        if let Ok((v, e)) = r {
            if v.is_finite() && e.is_finite() && best.map_or(true, |(_, be)| e < be) {
                best = Some((v, e));
            }
        }
    };
    if ((alpha + lambda) * h).powi(2) < 60.0 {
        consider(elastic_gamma_series(k, alpha, lambda, t));
    }
    consider(elastic_gamma_partial_fractions(k, alpha, lambda, t));
    match best {
        Some((v, e)) if e <= SERIES_TRUST * v.abs() => Ok(v),
        _ => psi_via_transform(model, t),
    }
}

fn distributed(
    model: &RelaxationModel,
    nu1: f64,
    nu2: f64,
    n1: f64,
    n2: f64,
    lambda: f64,
    t: f64,
) -> Result<f64> {
    if n2 == 0.0 {
        return mittag_leffler(&MLParams::new(nu1, 1.0), -lambda * t.powf(nu1) / n1);
    }
    if n1 == 0.0 {
        if nu2 == 1.0 {
            return Ok((-lambda * t / n2).exp());
        }
        return mittag_leffler(&MLParams::new(nu2, 1.0), -lambda * t.powf(nu2) / n2);
    }
    match distributed_series(nu1, nu2, n1, n2, lambda, t) {
        Ok((v, e)) if e <= SERIES_TRUST * v.abs() => Ok(v),
        Ok(_) | Err(FraxError::NonConvergence(_)) => psi_via_transform(model, t),
        Err(e) => Err(e),
    }
}

// 1 − x Σ_r (−y)^r E^{r+1}_{ν₂, ν₂+(ν₂−ν₁)r+1}(−x), x = λt^{ν₂}/n₂, y = n₁t^{ν₂−ν₁}/n₂.
fn distributed_series(nu1: f64, nu2: f64, n1: f64, n2: f64, lambda: f64, t: f64) -> Result<(f64, f64)> {
    let x = lambda * t.powf(nu2) / n2;
    let y = n1 * t.powf(nu2 - nu1) / n2;
    let delta = nu2 - nu1;
    // the double series carries terms of size about exp(y^{1/δ}); give up early
    if y.powf(1.0 / delta) > 40.0 {
        return nonconv("distributed-order series would cancel catastrophically");
    }
    let pol = SeriesPolicy::default();
    let mut acc = Compensated::new();
    let mut err = 0.0;
    let mut abs = 0.0;
    let mut yr = 1.0;
    let mut small = 0;
    for r in 0..OUTER_CAP {
        let rf = r as f64;
        let g = gml_eval(&MLParams::generalized(nu2, nu2 + delta * rf + 1.0, rf + 1.0), -x, &pol)?;
        let term = yr * g.value;
        acc.add(term);
        abs += term.abs();
        err += yr.abs() * g.error;
        if term.abs() < 1e-14 * acc.value().abs() {
            small += 1;
            if small >= 2 {
                let e = x * (err + 4.0 * f64::EPSILON * abs);
                return Ok((1.0 - x * acc.value(), e));
            }
        } else {
            small = 0;
        }
        yr *= -y;
    }
    nonconv("distributed-order outer series reached its term cap")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_values() {
        let e1 = (-1f64).exp();
        assert!((psi(&RelaxationModel::Standard { lambda: 1.0 }, 1.0).unwrap() - e1).abs() < 1e-16);
        assert_eq!(psi(&RelaxationModel::BesselSq { gamma: 2.0, lambda: 1.0 }, 0.5).unwrap(), 0.5);
        let fp = psi(&RelaxationModel::FirstPassage { lambda: 0.5, n: 1 }, 1.0).unwrap();
        assert!((fp - e1).abs() < 1e-16);
        let d = RelaxationModel::Distributed { nu1: 0.5, nu2: 1.0, n1: 0.0, n2: 1.0, lambda: 1.0 };
        assert!((psi(&d, 1.0).unwrap() - e1).abs() < 1e-16);
    }

    #[test]
    fn time_zero_is_one() {
        let m = RelaxationModel::ElasticGamma { k: 3, alpha: 1.0, lambda: 2.0 };
        assert_eq!(psi(&m, 0.0).unwrap(), 1.0);
        assert!(psi(&m, -1.0).is_err());
    }

    #[test]
    fn routes_agree_on_overlap() {
        for &(k, a, l, t) in &[(1, 0.5, 1.0, 1.0), (2, 2.0, 1.0, 0.7), (3, 1.0, 0.3, 4.0), (2, 0.9, 1.1, 2.0)] {
            let (s, es) = elastic_gamma_series(k, a, l, t).unwrap();
            let (p, ep) = elastic_gamma_partial_fractions(k, a, l, t).unwrap();
            assert!((s - p).abs() < 1e-11 + es + ep, "k={k} a={a} l={l} t={t}: {s} {p}");
            let m = RelaxationModel::ElasticGamma { k, alpha: a, lambda: l };
            let v = psi_via_transform(&m, t).unwrap();
            assert!((s - v).abs() < 1e-11, "transform {v} vs {s}");
        }
    }
}
