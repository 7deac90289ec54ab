use std::f64::consts::PI;

use super::l1::{caputo, L1Grid};
use crate::error::{domain, FraxError, Result};
use crate::relaxation::{psi, RelaxationModel};

/// Max-norm of the residual at one grid level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualLevel {
    pub h: f64,
    pub max_norm: f64,
}

/// Residual of a governing equation under grid halving.
///
/// `times` and `residuals` belong to the finest level. Residuals are taken
/// on the window t ≥ T/4, away from the start-up layer at t = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub times: Vec<f64>,
    pub residuals: Vec<f64>,
    pub max_norm: f64,
    pub levels: Vec<ResidualLevel>,
    /// least-squares slope of −log₂(max-norm) against the level index
    pub order: f64,
}

/// Residual study of `model`'s governing equation on `grid`, `grid.h/2` and
/// `grid.h/4`. The coarse level uses `grid.values` as given; finer levels
/// are sampled from [`psi`].
pub fn ode_residual(model: &RelaxationModel, grid: &L1Grid) -> Result<ResidualReport> {
    ode_residual_levels(model, grid, 3)
}

/// As [`ode_residual`] with `levels ≥ 3` halvings.
pub fn ode_residual_levels(model: &RelaxationModel, grid: &L1Grid, levels: usize) -> Result<ResidualReport> {
    model.validate()?;
    study(grid, levels, |t| psi(model, t), |g| residual(model, g))
}

/// Residual of d^{1/2}ψᵏ + λ(ψᵏ − ψᵏ⁻¹) for the gamma-boundary pair
/// (k, k−1), with ψ⁰ = 0. `grid` samples ψᵏ.
pub fn half_derivative_recursion(k: u32, lambda: f64, grid: &L1Grid, levels: usize) -> Result<ResidualReport> {
    let upper = RelaxationModel::GammaBoundary { k, lambda };
    upper.validate()?;
    let lower = move |t: f64| {
        if k == 1 {
            Ok(0.0)
        } else {
            psi(&RelaxationModel::GammaBoundary { k: k - 1, lambda }, t)
        }
    };
    study(grid, levels, |t| psi(&upper, t), |g| {
        let d = caputo(g, 0.5, None)?;
        (1..=g.n())
            .map(|m| Ok(d[m - 1] + lambda * (g.values[m] - lower(g.t(m))?)))
            .collect()
    })
}

fn study<S, R>(grid: &L1Grid, levels: usize, sample: S, residual: R) -> Result<ResidualReport>
where
    S: Fn(f64) -> Result<f64>,
    R: Fn(&L1Grid) -> Result<Vec<f64>>,
{
    if levels < 3 {
        return domain(format!("order estimate needs at least 3 levels, got {levels}"));
    }
    let n0 = grid.n();
    let mut levels_out = Vec::with_capacity(levels);
    let mut last = (Vec::new(), Vec::new());
    for l in 0..levels {
        let g = if l == 0 {
            grid.clone()
        } else {
            L1Grid::sample(&sample, grid.h / (1u64 << l) as f64, n0 << l)?
        };
        let r = residual(&g)?;
        let end = g.t(g.n());
        let (ts, rs): (Vec<f64>, Vec<f64>) = r
            .iter()
            .enumerate()
            .map(|(i, &v)| (g.t(i + 1), v))
            .filter(|&(t, v)| t >= 0.25 * end && v.is_finite())
            .unzip();
        if ts.is_empty() {
            return domain("residual window is empty");
        }
        let max_norm = rs.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        levels_out.push(ResidualLevel { h: g.h, max_norm });
        last = (ts, rs);
    }
    let order = slope(&levels_out);
    let (times, residuals) = last;
    Ok(ResidualReport { times, residuals, max_norm: levels_out[levels - 1].max_norm, levels: levels_out, order })
}

fn slope(levels: &[ResidualLevel]) -> f64 {
    let n = levels.len() as f64;
    let ys: Vec<f64> = levels.iter().map(|l| -l.max_norm.max(f64::MIN_POSITIVE).log2()).collect();
    let xm = (n - 1.0) / 2.0;
    let ym = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (i, y) in ys.iter().enumerate() {
        let dx = i as f64 - xm;
        sxy += dx * (y - ym);
        sxx += dx * dx;
    }
    sxy / sxx
}

fn binom(k: u32, j: u32) -> f64 {
    (0..j).fold(1.0, |a, i| a * (k - i) as f64 / (i + 1) as f64)
}

// ψ'(0) where a stencil of order above 1 needs it
fn initial_slope(model: &RelaxationModel) -> Option<f64> {
    match *model {
        RelaxationModel::GammaBoundary { k, lambda } => Some(match k {
            1 => return None,
            2 => -lambda * lambda,
            _ => 0.0,
        }),
        RelaxationModel::ElasticGamma { k, lambda, .. } => Some(match k {
            1 => return None,
            2 => -0.5 * lambda * lambda,
            _ => 0.0,
        }),
        _ => None,
    }
}

fn residual(model: &RelaxationModel, g: &L1Grid) -> Result<Vec<f64>> {
    use RelaxationModel::*;
    let n = g.n();
    let v = &g.values;
    let first = |d: &[f64], rate: f64| -> Vec<f64> { (1..=n).map(|m| d[m - 1] + rate * v[m]).collect() };
    let slope0 = initial_slope(model);
    let d = |order: f64| caputo(g, order, slope0);
    Ok(match *model {
        Standard { lambda } => first(&d(1.0)?, lambda),
        Fractional { nu, lambda } => first(&d(nu)?, lambda),
        FirstPassage { lambda, n: depth } => first(&d(1.0)?, RelaxationModel::first_passage_rate(lambda, depth)),
        BesselSq { gamma, lambda } => {
            let d1 = d(1.0)?;
            (1..=n).map(|m| d1[m - 1] + gamma * lambda / (2.0 * lambda * g.t(m) + 1.0) * v[m]).collect()
        }
        Sojourn { lambda } => {
            // central differences; the last node has no right neighbour
            let h = g.h;
            let mut r: Vec<f64> = (1..n)
                .map(|m| {
                    let t = g.t(m);
                    let d2 = (v[m + 1] - 2.0 * v[m] + v[m - 1]) / (h * h);
                    let d1 = (v[m + 1] - v[m - 1]) / (2.0 * h);
                    d2 + (lambda + 1.0 / t) * d1 + lambda / (2.0 * t) * v[m]
                })
                .collect();
            r.push(f64::NAN);
            r
        }
        Elastic { alpha, lambda } => {
            let d1 = d(1.0)?;
            let dh = d(0.5)?;
            (1..=n)
                .map(|m| {
                    let t = g.t(m);
                    d1[m - 1] + (alpha + lambda) / 2f64.sqrt() * dh[m - 1] - 0.5 * alpha * lambda * (1.0 - v[m])
                        + lambda / (2.0 * PI * t).sqrt()
                })
                .collect()
        }
        GammaBoundary { k, lambda } => {
            if k > 4 {
                return Err(FraxError::Unsupported(format!("gamma-boundary residual needs k <= 4, got {k}")));
            }
            let mut r: Vec<f64> = v[1..].to_vec();
            for j in 1..=k {
                let dj = d(0.5 * j as f64)?;
                let c = binom(k, j) * lambda.powi(-(j as i32));
                for m in 0..n {
                    r[m] += c * dj[m];
                }
            }
            r
        }
        ElasticGamma { k, alpha, lambda } => {
            if k > 3 {
                return Err(FraxError::Unsupported(format!("elastic-gamma residual needs k <= 3, got {k}")));
            }
            let q = 2f64.sqrt() / lambda;
            let a = alpha / 2f64.sqrt();
            let ck = if k % 2 == 1 { 1.0 } else { 0.0 };
            let mut r: Vec<f64> = (1..=n).map(|m| -a * (1.0 - v[m]) + ck / (PI * g.t(m)).sqrt()).collect();
            for j in 0..=k {
                let c = binom(k, j) * q.powi(j as i32);
                let dj = d(0.5 * (j + 1) as f64)?;
                for m in 0..n {
                    r[m] += c * dj[m];
                }
                if j >= 1 {
                    let dj = d(0.5 * j as f64)?;
                    for m in 0..n {
                        r[m] += a * c * dj[m];
                    }
                }
            }
            r
        }
        Distributed { nu1, nu2, n1, n2, lambda } => {
            let d1 = d(nu1)?;
            let d2 = d(nu2)?;
            (1..=n).map(|m| n1 * d1[m - 1] + n2 * d2[m - 1] + lambda * v[m]).collect()
        }
    })
}
