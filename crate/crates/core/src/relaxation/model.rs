use crate::error::{domain, Result};

/// Variance convention of the Brownian motion behind a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffusionScale {
    /// Var B(t) = 2t, density e^{−y²/4t}/√(πt).
    Var2t,
    /// Var B(t) = t.
    VarT,
}

/// One of the nine solution families with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RelaxationModel {
    /// e^{−λt}
    Standard { lambda: f64 },
    /// E_{ν,1}(−λt^ν)
    Fractional { nu: f64, lambda: f64 },
    /// e^{−λt/2} I₀(λt/2)
    Sojourn { lambda: f64 },
    /// exp(−λ^{1/2ⁿ} 2^{1−1/2ⁿ} t), n subordinations of first-passage times
    FirstPassage { lambda: f64, n: u32 },
    /// (2λt + 1)^{−γ/2}
    BesselSq { gamma: f64, lambda: f64 },
    /// elastic Brownian motion killed at rate α, exponential boundary λ
    Elastic { alpha: f64, lambda: f64 },
    /// reflecting Brownian motion against a Gamma(k, λ) boundary
    GammaBoundary { k: u32, lambda: f64 },
    /// elastic Brownian motion against a Gamma(k, λ) boundary
    ElasticGamma { k: u32, alpha: f64, lambda: f64 },
    /// two-term distributed order n₁ d^{ν₁} + n₂ d^{ν₂}
    Distributed { nu1: f64, nu2: f64, n1: f64, n2: f64, lambda: f64 },
}

fn positive(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        domain(format!("{name} must be positive and finite, got {x}"))
    }
}

impl RelaxationModel {
    pub fn validate(&self) -> Result<()> {
        use RelaxationModel::*;
        match *self {
            Standard { lambda } | Sojourn { lambda } => positive("lambda", lambda),
            Fractional { nu, lambda } => {
                positive("lambda", lambda)?;
                if nu > 0.0 && nu < 1.0 {
                    Ok(())
                } else {
                    domain(format!("nu must lie in (0,1), got {nu}"))
                }
            }
            FirstPassage { lambda, n } => {
                positive("lambda", lambda)?;
                if (1..=30).contains(&n) {
                    Ok(())
                } else {
                    domain(format!("subordination depth must lie in 1..=30, got {n}"))
                }
            }
            BesselSq { gamma, lambda } => {
                positive("gamma", gamma)?;
                positive("lambda", lambda)
            }
            Elastic { alpha, lambda } => {
                positive("alpha", alpha)?;
                positive("lambda", lambda)
            }
            GammaBoundary { k, lambda } => {
                positive("lambda", lambda)?;
                if k >= 1 {
                    Ok(())
                } else {
                    domain("k must be >= 1")
                }
            }
            ElasticGamma { k, alpha, lambda } => {
                positive("alpha", alpha)?;
                positive("lambda", lambda)?;
                if k >= 1 {
                    Ok(())
                } else {
                    domain("k must be >= 1")
                }
            }
            Distributed { nu1, nu2, n1, n2, lambda } => {
                positive("lambda", lambda)?;
                if !(nu1 > 0.0 && nu1 < nu2 && nu2 <= 1.0) {
                    return domain(format!("need 0 < nu1 < nu2 <= 1, got nu1={nu1}, nu2={nu2}"));
                }
                if !(n1 >= 0.0 && n2 >= 0.0) || (n1 + n2 - 1.0).abs() > 1e-12 {
                    return domain(format!("need n1, n2 >= 0 with n1 + n2 = 1, got {n1}, {n2}"));
                }
                Ok(())
            }
        }
    }

    pub fn lambda(&self) -> f64 {
        use RelaxationModel::*;
        match *self {
            Standard { lambda }
            | Fractional { lambda, .. }
            | Sojourn { lambda }
            | FirstPassage { lambda, .. }
            | BesselSq { lambda, .. }
            | Elastic { lambda, .. }
            | GammaBoundary { lambda, .. }
            | ElasticGamma { lambda, .. }
            | Distributed { lambda, .. } => lambda,
        }
    }

    pub fn name(&self) -> &'static str {
        use RelaxationModel::*;
        match self {
            Standard { .. } => "standard",
            Fractional { .. } => "fractional",
            Sojourn { .. } => "sojourn",
            FirstPassage { .. } => "firstpassage",
            BesselSq { .. } => "besselsq",
            Elastic { .. } => "elastic",
            GammaBoundary { .. } => "gammaboundary",
            ElasticGamma { .. } => "elasticgamma",
            Distributed { .. } => "distributed",
        }
    }

    /// Variance convention of the process whose crossing probability the
    /// family equals. `None` for the exponential law.
    pub fn diffusion_scale(&self) -> Option<DiffusionScale> {
        use RelaxationModel::*;
        match self {
            Standard { .. } => None,
            Fractional { .. } | GammaBoundary { .. } | Distributed { .. } => Some(DiffusionScale::Var2t),
            Sojourn { .. } | FirstPassage { .. } | BesselSq { .. } | Elastic { .. } | ElasticGamma { .. } => {
                Some(DiffusionScale::VarT)
            }
        }
    }

    /// Rate of the exponential law e^{−rate·t} for [`RelaxationModel::FirstPassage`].
    pub fn first_passage_rate(lambda: f64, n: u32) -> f64 {
        let e = 0.5f64.powi(n as i32);
        2.0 * (0.5 * lambda).powf(e)
    }
}

/// Strictly increasing positive evaluation times.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    ts: Vec<f64>,
}

impl TimeGrid {
    pub fn new(ts: Vec<f64>) -> Result<Self> {
        if ts.is_empty() {
            return domain("time grid is empty");
        }
        if ts.iter().any(|t| !(t.is_finite() && *t > 0.0)) {
            return domain("time grid values must be finite and positive");
        }
        if ts.windows(2).any(|w| w[1] <= w[0]) {
            return domain("time grid must be strictly increasing");
        }
        Ok(Self { ts })
    }

    pub fn linear(start: f64, stop: f64, count: usize) -> Result<Self> {
        if count == 1 {
            return Self::new(vec![start]);
        }
        if count == 0 {
            return domain("time grid count must be >= 1");
        }
        let h = (stop - start) / (count - 1) as f64;
        Self::new((0..count).map(|i| if i + 1 == count { stop } else { start + h * i as f64 }).collect())
    }

    pub fn log(start: f64, stop: f64, count: usize) -> Result<Self> {
        if !(start > 0.0 && stop > 0.0) {
            return domain("log grid needs positive end points");
        }
        if count == 1 {
            return Self::new(vec![start]);
        }
        if count == 0 {
            return domain("time grid count must be >= 1");
        }
        let (a, b) = (start.log10(), stop.log10());
        let h = (b - a) / (count - 1) as f64;
        Self::new(
            (0..count)
                .map(|i| if i + 1 == count { stop } else { 10f64.powf(a + h * i as f64) })
                .collect(),
        )
    }

    pub fn times(&self) -> &[f64] {
        &self.ts
    }

    pub fn len(&self) -> usize {
        self.ts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ts.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distributed_weights_must_sum_to_one() {
        let m = RelaxationModel::Distributed { nu1: 0.5, nu2: 1.0, n1: 0.5, n2: 0.6, lambda: 1.0 };
        assert!(m.validate().is_err());
        let m = RelaxationModel::Distributed { nu1: 0.6, nu2: 0.5, n1: 0.5, n2: 0.5, lambda: 1.0 };
        assert!(m.validate().is_err());
    }

    #[test]
    fn grids() {
        assert!(TimeGrid::new(vec![1.0, 1.0]).is_err());
        assert!(TimeGrid::new(vec![0.0, 1.0]).is_err());
        let g = TimeGrid::log(1e-3, 1e3, 7).unwrap();
        assert_eq!(g.times()[0], 1e-3);
        assert_eq!(g.times()[6], 1e3);
        assert!((g.times()[3] - 1.0).abs() < 1e-15);
        assert_eq!(TimeGrid::linear(1.0, 2.0, 1).unwrap().len(), 1);
    }

    #[test]
    fn first_passage_rate_depth_one() {
        assert_eq!(RelaxationModel::first_passage_rate(0.5, 1), 1.0);
    }
}
