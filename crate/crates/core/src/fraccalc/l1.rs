use crate::error::{domain, Result};
use crate::specfun::{gamma, quad};

/// Samples g(0), g(h), …, g(nh) of a function on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct L1Grid {
    pub h: f64,
    pub values: Vec<f64>,
}

impl L1Grid {
    pub fn new(h: f64, values: Vec<f64>) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return domain(format!("grid step must be positive, got {h}"));
        }
        if values.len() < 9 {
            return domain(format!("grid needs at least 8 steps, got {}", values.len().saturating_sub(1)));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return domain("grid values must be finite");
        }
        Ok(Self { h, values })
    }

    /// Samples `f` at 0, h, …, nh.
    pub fn sample<F: FnMut(f64) -> Result<f64>>(mut f: F, h: f64, n: usize) -> Result<Self> {
        let values = (0..=n).map(|i| f(i as f64 * h)).collect::<Result<Vec<_>>>()?;
        Self::new(h, values)
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn t(&self, i: usize) -> f64 {
        i as f64 * self.h
    }
}

// b_j = (j+1)^p − j^p
fn weights(p: f64, n: usize) -> Vec<f64> {
    (0..n).map(|j| ((j + 1) as f64).powf(p) - (j as f64).powf(p)).collect()
}

fn convolve(b: &[f64], d: &[f64], scale: f64) -> Vec<f64> {
    // out[m-1] = scale · Σ_{j<m} b_j d_{m−j}, with d indexed from 1
    let n = d.len();
    let mut out = vec![0.0; n];
    for m in 1..=n {
        let mut s = 0.0;
        for j in 0..m {
            s += b[j] * d[m - j - 1];
        }
        out[m - 1] = s * scale;
    }
    out
}

/// L1 approximation of the Caputo derivative of order ν ∈ (0,1) at t₁ … tₙ.
pub fn caputo_l1(g: &L1Grid, nu: f64) -> Result<Vec<f64>> {
    if !(nu > 0.0 && nu < 1.0) {
        return domain(format!("L1 order must lie in (0,1), got {nu}"));
    }
    let d: Vec<f64> = g.values.windows(2).map(|w| w[1] - w[0]).collect();
    let b = weights(1.0 - nu, d.len());
    Ok(convolve(&b, &d, g.h.powf(-nu) / gamma(2.0 - nu)))
}

/// Caputo derivative of any order in (0, 2] at t₁ … tₙ.
///
/// Orders in (0,1) use L1, order 1 the backward difference, orders in (1,2)
/// the L2 stencil on second differences and order 2 the backward second
/// difference. Orders above 1 need the initial slope g'(0) for the ghost
/// value g(−h) = g(0) − h g'(0).
pub fn caputo(g: &L1Grid, order: f64, slope0: Option<f64>) -> Result<Vec<f64>> {
    let h = g.h;
    let v = &g.values;
    if order > 0.0 && order < 1.0 {
        return caputo_l1(g, order);
    }
    if order == 1.0 {
        return Ok(v.windows(2).map(|w| (w[1] - w[0]) / h).collect());
    }
    if !(order > 1.0 && order <= 2.0) {
        return domain(format!("Caputo order must lie in (0,2], got {order}"));
    }
    let Some(s0) = slope0 else {
        return domain(format!("Caputo order {order} needs the initial slope"));
    };
    let ghost = v[0] - h * s0;
    let at = |i: isize| if i < 0 { ghost } else { v[i as usize] };
    let d2: Vec<f64> = (1..v.len() as isize).map(|i| at(i) - 2.0 * at(i - 1) + at(i - 2)).collect();
    if order == 2.0 {
        return Ok(d2.iter().map(|x| x / (h * h)).collect());
    }
    let b = weights(2.0 - order, d2.len());
    Ok(convolve(&b, &d2, h.powf(-order) / gamma(3.0 - order)))
}

/// Product-rectangle Riemann–Liouville integral I^ν g at t₁ … tₙ, using the
/// cell mean of g on each cell.
pub fn rl_integral(g: &L1Grid, nu: f64) -> Result<Vec<f64>> {
    if !(nu > 0.0 && nu < 1.0) {
        return domain(format!("integral order must lie in (0,1), got {nu}"));
    }
    let mean: Vec<f64> = g.values.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    let b = weights(nu, mean.len());
    Ok(convolve(&b, &mean, g.h.powf(nu) / gamma(1.0 + nu)))
}

/// Caputo derivative of order ν ∈ (0,1) at `t` by adaptive quadrature of
/// ∫₀^t g'(s)(t−s)^{−ν} ds / Γ(1−ν), after u = (t−s)^{1−ν}.
pub fn caputo_quad<F: Fn(f64) -> f64>(gprime: F, t: f64, nu: f64) -> Result<f64> {
    if !(nu > 0.0 && nu < 1.0) || !(t > 0.0) {
        return domain("caputo_quad needs 0 < nu < 1 and t > 0");
    }
    let p = 1.0 / (1.0 - nu);
    let r = quad::integrate(|u: f64| gprime(t - u.powf(p)), 0.0, t.powf(1.0 - nu), 1e-15, 1e-13)?;
    Ok(r.value * p / gamma(1.0 - nu))
}
