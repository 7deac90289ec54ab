use crate::error::{domain, Result};
use crate::relaxation::{psi, DiffusionScale, RelaxationModel};
use crate::specfun::{gml, MLParams};

/// A random process observed at a fixed time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProcessSpec {
    /// |B(t)|
    ReflectedBM { scale: DiffusionScale },
    /// I_{n−1}: reflected Brownian motion run at the absolute value of
    /// another, nested n−1 times. Depth 1 is |B(t)|. Every level has
    /// variance 2s.
    IteratedBM { depth: u32 },
    /// time spent positive by a standard Brownian motion up to t (arcsine law)
    SojournTime,
    /// first passage through level t, subordinated n−1 more times
    FirstPassageChain { depth: u32 },
    /// squared Bessel process of dimension γ from 0
    BesselSquared { gamma: f64 },
    /// reflected Brownian motion killed at rate α per unit of local time at 0;
    /// a killed path sits at 0
    ElasticBM { alpha: f64 },
    /// inverse ν-stable time, folded M-Wright density (quadrature only)
    WrightTime { nu: f64 },
    /// process with Airy-function density, order 1/3 (quadrature only)
    AiryTime,
    /// distributed-order time with orders 1/2 and 1 (quadrature only)
    DistributedTime { n1: f64, n2: f64 },
}

impl ProcessSpec {
    pub fn validate(&self) -> Result<()> {
        use ProcessSpec::*;
        match *self {
            IteratedBM { depth } | FirstPassageChain { depth } if !(1..=30).contains(&depth) => {
                domain(format!("depth must lie in 1..=30, got {depth}"))
            }
            BesselSquared { gamma } if !(gamma > 0.0 && gamma.is_finite()) => {
                domain(format!("Bessel dimension must be positive, got {gamma}"))
            }
            ElasticBM { alpha } if !(alpha > 0.0 && alpha.is_finite()) => {
                domain(format!("killing rate must be positive, got {alpha}"))
            }
            WrightTime { nu } if !(nu > 0.0 && nu < 1.0) => domain(format!("nu must lie in (0,1), got {nu}")),
            DistributedTime { n1, n2 } if !(n1 > 0.0 && n2 > 0.0) || (n1 + n2 - 1.0).abs() > 1e-12 => {
                domain(format!("need n1, n2 > 0 with n1 + n2 = 1, got {n1}, {n2}"))
            }
            _ => Ok(()),
        }
    }

    pub fn monte_carlo_capable(&self) -> bool {
        !matches!(self, ProcessSpec::WrightTime { .. } | ProcessSpec::AiryTime | ProcessSpec::DistributedTime { .. })
    }

    pub fn name(&self) -> &'static str {
        use ProcessSpec::*;
        match self {
            ReflectedBM { .. } => "reflected",
            IteratedBM { .. } => "iterated",
            SojournTime => "sojourn",
            FirstPassageChain { .. } => "first-passage",
            BesselSquared { .. } => "bessel-squared",
            ElasticBM { .. } => "elastic",
            WrightTime { .. } => "wright",
            AiryTime => "airy",
            DistributedTime { .. } => "distributed",
        }
    }
}

/// Random level the process is compared with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundarySpec {
    Exponential { lambda: f64 },
    /// shape k, rate λ
    Gamma { k: u32, lambda: f64 },
}

impl BoundarySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            BoundarySpec::Exponential { lambda } | BoundarySpec::Gamma { lambda, .. }
                if !(lambda > 0.0 && lambda.is_finite()) =>
            {
                domain(format!("boundary rate must be positive, got {lambda}"))
            }
            BoundarySpec::Gamma { k: 0, .. } => domain("gamma boundary shape must be >= 1"),
            _ => Ok(()),
        }
    }

    pub fn lambda(&self) -> f64 {
        match *self {
            BoundarySpec::Exponential { lambda } | BoundarySpec::Gamma { lambda, .. } => lambda,
        }
    }

    /// Pr{boundary > y}.
    pub fn survivor(&self, y: f64) -> f64 {
        match *self {
            BoundarySpec::Exponential { lambda } => (-lambda * y).exp(),
            BoundarySpec::Gamma { k, lambda } => {
                let x = lambda * y;
                let mut term = (-x).exp();
                let mut s = term;
                for j in 1..k {
                    term *= x / j as f64;
                    s += term;
                }
                s
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    MonteCarlo,
    Quadrature,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::MonteCarlo => "monte_carlo",
            Method::Quadrature => "quadrature",
        }
    }
}

/// Estimate of Pr{X(t) < boundary}.
///
/// Monte Carlo: binomial stderr √(p̂(1−p̂)/n). Quadrature: the integration
/// error estimate, with `n_paths` = 1 and `seed` = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossingEstimate {
    pub p_hat: f64,
    pub stderr: f64,
    pub n_paths: u64,
    pub seed: u64,
    pub method: Method,
}

/// The relaxation law equal to Pr{X(t) < boundary}, where one exists.
pub fn analytic_model(spec: &ProcessSpec, boundary: &BoundarySpec) -> Option<RelaxationModel> {
    use BoundarySpec::*;
    use ProcessSpec::*;
    use RelaxationModel as M;
    let sq2 = std::f64::consts::SQRT_2;
    Some(match (*spec, *boundary) {
        (ReflectedBM { scale }, Exponential { lambda }) => M::Fractional {
            nu: 0.5,
            lambda: if scale == DiffusionScale::Var2t { lambda } else { lambda / sq2 },
        },
        (ReflectedBM { scale }, Gamma { k, lambda }) => M::GammaBoundary {
            k,
            lambda: if scale == DiffusionScale::Var2t { lambda } else { lambda / sq2 },
        },
        (IteratedBM { depth: 1 }, Gamma { k, lambda }) => M::GammaBoundary { k, lambda },
        (IteratedBM { depth }, Exponential { lambda }) => M::Fractional { nu: 0.5f64.powi(depth as i32), lambda },
        (SojournTime, Exponential { lambda }) => M::Sojourn { lambda },
        (FirstPassageChain { depth }, Exponential { lambda }) => M::FirstPassage { lambda, n: depth },
        (BesselSquared { gamma }, Exponential { lambda }) => M::BesselSq { gamma, lambda },
        (ElasticBM { alpha }, Exponential { lambda }) => M::Elastic { alpha, lambda },
        (ElasticBM { alpha }, Gamma { k, lambda }) => M::ElasticGamma { k, alpha, lambda },
        (WrightTime { nu }, Exponential { lambda }) => M::Fractional { nu, lambda },
        (AiryTime, Exponential { lambda }) => M::Fractional { nu: 1.0 / 3.0, lambda },
        (DistributedTime { n1, n2 }, Exponential { lambda }) => {
            M::Distributed { nu1: 0.5, nu2: 1.0, n1, n2, lambda }
        }
        _ => return None,
    })
}

/// Closed-form Pr{X(t) < boundary}: the matching relaxation law, or
/// 1 − (λt^ν)^k E^k_{ν,νk+1}(−λt^ν) for a folded M-Wright time (including
/// iterated reflection, ν = 1/2ⁿ) against a Gamma(k, λ) boundary.
pub fn analytic_crossing(spec: &ProcessSpec, boundary: &BoundarySpec, t: f64) -> Result<f64> {
    spec.validate()?;
    boundary.validate()?;
    if let Some(m) = analytic_model(spec, boundary) {
        return psi(&m, t);
    }
    let nu = match *spec {
        ProcessSpec::WrightTime { nu } => nu,
        ProcessSpec::IteratedBM { depth } => 0.5f64.powi(depth as i32),
        ProcessSpec::AiryTime => 1.0 / 3.0,
        _ => return Err(crate::FraxError::Unsupported(format!("no closed form for {} with this boundary", spec.name()))),
    };
    let BoundarySpec::Gamma { k, lambda } = *boundary else { unreachable!() };
    if !(t > 0.0) {
        return domain(format!("time must be positive, got {t}"));
    }
    let x = lambda * t.powf(nu);
    let kf = k as f64;
    Ok(1.0 - x.powi(k as i32) * gml(&MLParams::generalized(nu, nu * kf + 1.0, kf), -x)?)
}
