use std::f64::consts::PI;

use super::spec::{BoundarySpec, CrossingEstimate, Method, ProcessSpec};
use crate::error::{domain, FraxError, Result};
use crate::relaxation::DiffusionScale;
use crate::specfun::{airy_ai, ln_gamma, mittag_leffler, quad, wright_m_density, MLParams};

fn e_half(x: f64) -> Result<f64> {
    mittag_leffler(&MLParams::new(0.5, 1.0), -x)
}

/// Mass of the atom at 0 of the elastic process: the probability that it
/// has been killed by time t, 1 − e^{α²t/2} erfc(α√(t/2)).
pub fn elastic_atom(alpha: f64, t: f64) -> Result<f64> {
    ProcessSpec::ElasticBM { alpha }.validate()?;
    if !(t > 0.0) {
        return domain(format!("time must be positive, got {t}"));
    }
    Ok(1.0 - e_half(alpha * (0.5 * t).sqrt())?)
}

fn support(spec: &ProcessSpec, t: f64) -> (f64, f64) {
    match *spec {
        ProcessSpec::SojournTime => (0.0, t),
        ProcessSpec::DistributedTime { n2, .. } => (0.0, t / n2),
        _ => (0.0, f64::INFINITY),
    }
}

/// Density of X(t) at y. For the elastic process this is the absolutely
/// continuous part only; see [`elastic_atom`].
pub fn density(spec: &ProcessSpec, y: f64, t: f64) -> Result<f64> {
    spec.validate()?;
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("time must be positive, got {t}"));
    }
    let (lo, hi) = support(spec, t);
    if !(y > lo) || y.is_nan() {
        return domain(format!("y={y} outside the support of {}", spec.name()));
    }
    if y >= hi {
        return Ok(0.0);
    }
    use ProcessSpec::*;
    Ok(match *spec {
        ReflectedBM { scale } => {
            let var = if scale == DiffusionScale::Var2t { 2.0 * t } else { t };
            2.0 * (-y * y / (2.0 * var)).exp() / (2.0 * PI * var).sqrt()
        }
        SojournTime => 1.0 / (PI * (y * (t - y)).sqrt()),
        FirstPassageChain { depth: 1 } => t * (-t * t / (2.0 * y)).exp() / (2.0 * PI * y.powi(3)).sqrt(),
        BesselSquared { gamma: g } => {
            let a = 0.5 * g;
            let ln = (a - 1.0) * y.ln() - y / (2.0 * t) - a * (2.0 * t).ln() - ln_gamma(a).0;
            ln.exp()
        }
        ElasticBM { alpha } => {
            // 2e^{αy}∫_y^∞ w e^{−αw} e^{−w²/2t}/√(2πt³) dw, in closed form
            let u = (y + alpha * t) / (2.0 * t).sqrt();
            2.0 * (-y * y / (2.0 * t)).exp() / (2.0 * PI * t).sqrt() * (1.0 - alpha * (0.5 * PI * t).sqrt() * e_half(u)?)
        }
        WrightTime { nu } => {
            let s = t.powf(nu);
            wright_m_density(nu, y / s)? / s
        }
        AiryTime => {
            let c = (3.0 * t).cbrt();
            (9.0 / t).cbrt() * airy_ai(y / c)?
        }
        DistributedTime { n1, n2 } => {
            let r = t - n2 * y;
            n1 * (t - 0.5 * n2 * y) / PI.sqrt() * (-n1 * n1 * y * y / (4.0 * r)).exp() / r.powf(1.5)
        }
        IteratedBM { .. } | FirstPassageChain { .. } => {
            return Err(FraxError::Unsupported(format!("no density for {}", spec.name())))
        }
    })
}

/// Pr{X(t) < boundary} = ∫ Pr{boundary > y} q(y,t) dy by adaptive
/// quadrature, plus the elastic atom where present.
pub fn quadrature_crossing(spec: &ProcessSpec, boundary: &BoundarySpec, t: f64) -> Result<CrossingEstimate> {
    spec.validate()?;
    boundary.validate()?;
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("time must be positive, got {t}"));
    }
    if matches!(spec, ProcessSpec::IteratedBM { .. } | ProcessSpec::FirstPassageChain { depth: 2.. }) {
        return Err(FraxError::Unsupported(format!("no density for {}", spec.name())));
    }
    let f = |y: f64| {
        if y <= 0.0 {
            return 0.0;
        }
        boundary.survivor(y) * density(spec, y, t).unwrap_or(f64::NAN)
    };
    let (value, error) = match *spec {
        ProcessSpec::WrightTime { nu } => {
            // in x = y/t^ν the density is M_ν(x)
            let s = t.powf(nu);
            let g = |x: f64| boundary.survivor(x * s) * wright_m_density(nu, x).unwrap_or(f64::NAN);
            let r = quad::integrate_breaks(g, &[0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 40.0], 1e-15, 1e-12)?;
            (r.value, r.error)
        }
        ProcessSpec::AiryTime => {
            let c = (3.0 * t).cbrt();
            let g = |w: f64| 3.0 * boundary.survivor(w * c) * airy_ai(w).unwrap_or(f64::NAN);
            let r = quad::integrate_breaks(g, &[0.0, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0], 1e-15, 1e-12)?;
            (r.value, r.error)
        }
        ProcessSpec::SojournTime => {
            // y = t sin²(θ/2) takes the arcsine density to the uniform one
            let g = |th: f64| {
                let s = (0.5 * th).sin();
                boundary.survivor(t * s * s) / PI
            };
            let r = quad::integrate(g, 0.0, PI, 1e-15, 1e-12)?;
            (r.value, r.error)
        }
        _ => {
            let (_, hi) = support(spec, t);
            let scale = match *spec {
                ProcessSpec::DistributedTime { .. } => hi,
                ProcessSpec::BesselSquared { gamma: g } => 2.0 * t * (0.5 * g).max(1.0),
                _ => t.sqrt().max(t),
            };
            let mut pts: Vec<f64> = [0.0, 0.125, 0.25, 0.5, 1.0].iter().map(|k| k * scale).collect();
            if hi.is_finite() {
                pts.push(hi);
            } else {
                let lam = boundary.lambda();
                let mut x = scale;
                while x < 60.0 * scale.max(1.0 / lam) {
                    x *= 2.0;
                    pts.push(x);
                }
            }
            let r = quad::integrate_breaks(f, &pts, 1e-15, 1e-12)?;
            (r.value, r.error)
        }
    };
    let atom = match *spec {
        ProcessSpec::ElasticBM { alpha } => elastic_atom(alpha, t)?,
        _ => 0.0,
    };
    if !value.is_finite() {
        return Err(FraxError::NonConvergence(format!("{} density not finite", spec.name())));
    }
    Ok(CrossingEstimate {
        p_hat: (value + atom).clamp(0.0, 1.0),
        stderr: error,
        n_paths: 1,
        seed: 0,
        method: Method::Quadrature,
    })
}
