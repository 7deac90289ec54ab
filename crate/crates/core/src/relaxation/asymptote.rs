use super::model::RelaxationModel;
use super::psi::psi;
use crate::error::{domain, FraxError, Result};
use crate::specfun::gamma;
use std::f64::consts::PI;

/// Which end of the time axis a limiting law describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    SmallT,
    LargeT,
}

fn unsupported<T>(model: &RelaxationModel, regime: Regime) -> Result<T> {
    Err(FraxError::Unsupported(format!("no {regime:?} law for {model:?}")))
}

// ln of the law when it is an exponential, so ratios survive underflow.
fn log_exponential(model: &RelaxationModel, regime: Regime, t: f64) -> Option<f64> {
    match (*model, regime) {
        (RelaxationModel::Standard { lambda }, Regime::LargeT) => Some(-lambda * t),
        (RelaxationModel::FirstPassage { lambda, n }, Regime::LargeT) => {
            Some(-RelaxationModel::first_passage_rate(lambda, n) * t)
        }
        _ => None,
    }
}

/// Leading-order law of ψ as t → 0 (`SmallT`) or t → ∞ (`LargeT`).
pub fn asymptote(model: &RelaxationModel, regime: Regime, t: f64) -> Result<f64> {
    use Regime::*;
    use RelaxationModel::*;
    model.validate()?;
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("time must be positive, got {t}"));
    }
    if let Some(l) = log_exponential(model, regime, t) {
        return Ok(l.exp());
    }
    let st = t.sqrt();
    Ok(match (*model, regime) {
        (Standard { lambda }, SmallT) => 1.0 - lambda * t,
        (Fractional { nu, lambda }, SmallT) => 1.0 - lambda * t.powf(nu) / gamma(1.0 + nu),
        (Fractional { nu, lambda }, LargeT) => 1.0 / (lambda * t.powf(nu) * gamma(1.0 - nu)),
        (Sojourn { lambda }, SmallT) => 1.0 - 0.5 * lambda * t,
        (Sojourn { lambda }, LargeT) => 1.0 / (lambda * PI * t).sqrt(),
        (FirstPassage { lambda, n }, SmallT) => 1.0 - RelaxationModel::first_passage_rate(lambda, n) * t,
        (BesselSq { gamma: g, lambda }, _) => (1.0 + 2.0 * lambda * t).powf(-0.5 * g),
        (Elastic { lambda, .. }, SmallT) => 1.0 - lambda * (2.0 * t).sqrt() / PI.sqrt(),
        (Elastic { alpha, .. }, LargeT) | (ElasticGamma { alpha, .. }, LargeT) => {
            1.0 - std::f64::consts::SQRT_2 / (alpha * (PI * t).sqrt())
        }
        (GammaBoundary { k, lambda }, SmallT) => {
            1.0 - (lambda * st).powi(k as i32) / gamma(0.5 * k as f64 + 1.0)
        }
        (GammaBoundary { k, lambda }, LargeT) => k as f64 / (lambda * (PI * t).sqrt()),
        (ElasticGamma { k, lambda, .. }, SmallT) => {
            1.0 - (lambda * (0.5 * t).sqrt()).powi(k as i32) / gamma(0.5 * k as f64 + 1.0)
        }
        (Distributed { nu2, n2, lambda, .. }, SmallT) if n2 > 0.0 => {
            1.0 - lambda * t.powf(nu2) / (n2 * gamma(1.0 + nu2))
        }
        (Distributed { nu1, n1, lambda, .. }, LargeT) if n1 > 0.0 => {
            n1 / (lambda * t.powf(nu1) * gamma(1.0 - nu1))
        }
        _ => return unsupported(model, regime),
    })
}

/// ψ(t) / asymptote(t), computed in log space for exponential laws.
pub fn asymptote_ratio(model: &RelaxationModel, regime: Regime, t: f64) -> Result<f64> {
    if let Some(l) = log_exponential(model, regime, t) {
        model.validate()?;
        // ψ is the same exponential here
        let lp = match *model {
            RelaxationModel::Standard { lambda } => -lambda * t,
            RelaxationModel::FirstPassage { lambda, n } => -RelaxationModel::first_passage_rate(lambda, n) * t,
            _ => unreachable!(),
        };
        return Ok((lp - l).exp());
    }
    let a = asymptote(model, regime, t)?;
    Ok(psi(model, t)? / a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabulated_examples() {
        let f = RelaxationModel::Fractional { nu: 0.5, lambda: 1.0 };
        let v = asymptote(&f, Regime::SmallT, 1e-4).unwrap();
        assert!((v - (1.0 - 1e-2 / gamma(1.5))).abs() < 1e-15);
        assert!((v - 0.988_716_6).abs() < 1e-6);
        let s = RelaxationModel::Sojourn { lambda: 1.0 };
        assert!((asymptote(&s, Regime::LargeT, 1e4).unwrap() - 0.005_641_9).abs() < 1e-7);
        let st = RelaxationModel::Standard { lambda: 1.0 };
        assert_eq!(asymptote(&st, Regime::LargeT, 10.0).unwrap(), (-10f64).exp());
    }

    #[test]
    fn exponential_ratio_survives_underflow() {
        let st = RelaxationModel::Standard { lambda: 1.0 };
        assert_eq!(asymptote_ratio(&st, Regime::LargeT, 1e4).unwrap(), 1.0);
    }

    #[test]
    fn missing_rows() {
        let d = RelaxationModel::Distributed { nu1: 0.5, nu2: 1.0, n1: 0.0, n2: 1.0, lambda: 1.0 };
        assert!(matches!(asymptote(&d, Regime::LargeT, 10.0), Err(FraxError::Unsupported(_))));
    }
}
