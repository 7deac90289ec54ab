use num_complex::Complex64;

use super::model::RelaxationModel;
use crate::error::{FraxError, Result};

/// Laplace transform ∫₀^∞ e^{−st} ψ(t) dt of a family, principal branches.
/// Not available for the squared Bessel family.
pub fn laplace_transform(model: &RelaxationModel, s: Complex64) -> Result<Complex64> {
    use RelaxationModel::*;
    model.validate()?;
    let one = Complex64::new(1.0, 0.0);
    let r2 = std::f64::consts::SQRT_2;
    Ok(match *model {
        Standard { lambda } => one / (s + lambda),
        Fractional { nu, lambda } => s.powf(nu - 1.0) / (s.powf(nu) + lambda),
        Sojourn { lambda } => one / (s.sqrt() * (s + lambda).sqrt()),
        FirstPassage { lambda, n } => one / (s + RelaxationModel::first_passage_rate(lambda, n)),
        BesselSq { .. } => {
            return Err(FraxError::Unsupported("no closed transform for the squared Bessel family".into()))
        }
        Elastic { alpha, lambda } => {
            let q = (s * 2.0).sqrt();
            (alpha * lambda / s + r2 * alpha / s.sqrt() + 2.0) / ((q + alpha) * (q + lambda))
        }
        GammaBoundary { k, lambda } => {
            let q = s.sqrt() + lambda;
            one / s - lambda.powi(k as i32) / (s * q.powi(k as i32))
        }
        ElasticGamma { k, alpha, lambda } => {
            let q = (s * 2.0).sqrt();
            one / s - r2 * lambda.powi(k as i32) / (s.sqrt() * (q + alpha) * (q + lambda).powi(k as i32))
        }
        Distributed { nu1, nu2, n1, n2, lambda } => {
            let d = s.powf(nu1) * n1 + s.powf(nu2) * n2;
            d / (s * (d + lambda))
        }
    })
}

/// [`laplace_transform`] at a real η > 0.
pub fn laplace_transform_real(model: &RelaxationModel, eta: f64) -> Result<f64> {
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(FraxError::Domain(format!("transform variable must be positive, got {eta}")));
    }
    laplace_transform(model, Complex64::new(eta, 0.0)).map(|z| z.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elastic_equal_rates_at_two() {
        // (1/2 + 1 + 2)/(2 + 1)^2
        let m = RelaxationModel::Elastic { alpha: 1.0, lambda: 1.0 };
        let v = laplace_transform_real(&m, 2.0).unwrap();
        assert!((v - 3.5 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn elastic_gamma_k1_is_elastic() {
        for &(a, l, e) in &[(0.3, 1.7, 0.5), (2.0, 0.4, 7.0)] {
            let x = laplace_transform_real(&RelaxationModel::Elastic { alpha: a, lambda: l }, e).unwrap();
            let y = laplace_transform_real(&RelaxationModel::ElasticGamma { k: 1, alpha: a, lambda: l }, e).unwrap();
            assert!((x - y).abs() < 1e-14 * x);
        }
    }

    #[test]
    fn half_order_gamma_k1() {
        let m = RelaxationModel::GammaBoundary { k: 1, lambda: 1.0 };
        assert!((laplace_transform_real(&m, 1.0).unwrap() - 0.5).abs() < 1e-15);
    }
}
