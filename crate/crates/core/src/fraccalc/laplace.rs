use crate::error::{domain, nonconv, FraxError, Result};
use crate::specfun::quad;

/// Gaver–Stehfest orders tried by [`laplace_invert`].
pub const STEHFEST_ORDERS: [usize; 5] = [10, 12, 14, 16, 18];

// Relative disagreement between consecutive orders that counts as unstable.
const UNSTABLE_REL: f64 = 1e-4;

/// ∫₀^∞ e^{−ηt} f(t) dt by adaptive quadrature on [0, 40/η], split at k/η.
pub fn laplace_forward<F: Fn(f64) -> f64>(f: F, eta: f64) -> Result<f64> {
    if !(eta > 0.0 && eta.is_finite()) {
        return domain(format!("transform variable must be positive, got {eta}"));
    }
    let pts: Vec<f64> = (0..=40).map(|k| k as f64 / eta).collect();
    let r = quad::integrate_breaks(|t| (-eta * t).exp() * f(t), &pts, 1e-300, 1e-14)?;
    // e^{−40} bound on the remainder for |f| not growing past its last sample
    let tail = f(40.0 / eta).abs() * (-40f64).exp() / eta;
    if !tail.is_finite() || tail > 1e-9 * r.value.abs().max(1e-300) {
        return nonconv(format!("transform tail bound {tail:e} too large at eta={eta}"));
    }
    Ok(r.value)
}

/// Stehfest weights V₁ … V_N for even N.
pub fn stehfest_weights(n: usize) -> Vec<f64> {
    let half = n / 2;
    let fact = |k: usize| (1..=k).fold(1.0f64, |a, i| a * i as f64);
    (1..=n)
        .map(|k| {
            let mut s = 0.0;
            for j in (k + 1) / 2..=k.min(half) {
                s += (j as f64).powi(half as i32) * fact(2 * j)
                    / (fact(half - j) * fact(j) * fact(j - 1) * fact(k - j) * fact(2 * j - k));
            }
            if (k + half) % 2 == 1 {
                -s
            } else {
                s
            }
        })
        .collect()
}

/// Result of a Gaver–Stehfest inversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Inversion {
    pub value: f64,
    /// the higher order of the best-agreeing consecutive pair
    pub order: usize,
    /// relative disagreement of that pair
    pub disagreement: f64,
}

/// Gaver–Stehfest inversion of a transform sampled on the real axis.
///
/// Orders 10 … 18 are tried; the consecutive pair that agrees best gives
/// the value (its higher order) and the reported disagreement.
pub fn laplace_invert<F: Fn(f64) -> f64>(transform: F, t: f64) -> Result<Inversion> {
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("inversion time must be positive, got {t}"));
    }
    let ln2 = std::f64::consts::LN_2;
    let samples: Vec<f64> = (1..=*STEHFEST_ORDERS.last().unwrap())
        .map(|k| transform(k as f64 * ln2 / t))
        .collect();
    let estimates: Vec<f64> = STEHFEST_ORDERS
        .iter()
        .map(|&n| {
            let w = stehfest_weights(n);
            w.iter().zip(&samples).map(|(v, f)| v * f).sum::<f64>() * ln2 / t
        })
        .collect();
    let mut best: Option<Inversion> = None;
    for i in 1..estimates.len() {
        let (a, b) = (estimates[i - 1], estimates[i]);
        let dis = (b - a).abs() / b.abs().max(f64::MIN_POSITIVE);
        if !dis.is_finite() {
            continue;
        }
        if best.map_or(true, |x| dis < x.disagreement) {
            best = Some(Inversion { value: b, order: STEHFEST_ORDERS[i], disagreement: dis });
        }
    }
    match best {
        Some(inv) if inv.disagreement <= UNSTABLE_REL => Ok(inv),
        Some(inv) => Err(FraxError::Unstable(format!(
            "Gaver-Stehfest orders disagree by {:e} at t={t}",
            inv.disagreement
        ))),
        None => Err(FraxError::Unstable(format!("transform not finite at t={t}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_zero() {
        for n in STEHFEST_ORDERS {
            let s: f64 = stehfest_weights(n).iter().sum();
            assert!(s.abs() < 1e-3, "n={n} sum={s}");
        }
        assert_eq!(stehfest_weights(2), vec![2.0, -2.0]);
    }

    #[test]
    fn exponential_pair() {
        let inv = laplace_invert(|s| 1.0 / (s + 1.0), 1.0).unwrap();
        assert!((inv.value - (-1f64).exp()).abs() < 1e-7, "{inv:?}");
        let f = laplace_forward(|t| (-t).exp(), 1.0).unwrap();
        assert!((f - 0.5).abs() < 1e-15);
    }

    #[test]
    fn bad_arguments() {
        assert!(laplace_forward(|t| t, -1.0).is_err());
        assert!(laplace_invert(|s| 1.0 / s, 0.0).is_err());
    }
}
