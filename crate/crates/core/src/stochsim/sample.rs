use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp, Gamma, StandardNormal};
use rayon::prelude::*;

use super::spec::{BoundarySpec, CrossingEstimate, Method, ProcessSpec};
use crate::error::{domain, FraxError, Result};
use crate::relaxation::DiffusionScale;

/// Smallest accepted Monte Carlo sample size.
pub const MIN_PATHS: u64 = 1000;

/// The generator for path `index` under `seed`: one ChaCha8 key per seed,
/// one stream per path.
pub fn path_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let key = ChaCha8Rng::seed_from_u64(seed).get_seed();
    keyed_rng(key, index)
}

fn keyed_rng(key: [u8; 32], index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(index);
    rng
}

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

// uniform on (0,1], safe under ln
fn open_uniform<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    1.0 - rng.random::<f64>()
}

/// One draw of X(t) for a Monte Carlo-capable process.
pub fn sample_process<R: Rng + ?Sized>(spec: &ProcessSpec, t: f64, rng: &mut R) -> Result<f64> {
    spec.validate()?;
    if !spec.monte_carlo_capable() {
        return domain(format!("{} is quadrature-only", spec.name()));
    }
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("time must be positive, got {t}"));
    }
    Ok(draw(spec, t, rng))
}

fn draw<R: Rng + ?Sized>(spec: &ProcessSpec, t: f64, rng: &mut R) -> f64 {
    use ProcessSpec::*;
    match *spec {
        ReflectedBM { scale } => {
            let var = if scale == DiffusionScale::Var2t { 2.0 * t } else { t };
            (var.sqrt() * normal(rng)).abs()
        }
        IteratedBM { depth } => {
            let mut s = t;
            for _ in 0..depth {
                s = ((2.0 * s).sqrt() * normal(rng)).abs();
            }
            s
        }
        SojournTime => {
            let u: f64 = rng.random();
            let s = (0.5 * std::f64::consts::PI * u).sin();
            t * s * s
        }
        FirstPassageChain { depth } => {
            let mut s = t;
            for _ in 0..depth {
                let z = normal(rng);
                s = (s / z).powi(2);
            }
            s
        }
        BesselSquared { gamma } => {
            let g = Gamma::new(0.5 * gamma, 1.0).expect("validated shape");
            2.0 * t * g.sample(rng)
        }
        ElasticBM { alpha } => {
            // (B_t, S_t) exactly: B ~ N(0,t), then S | B from
            // Pr{S > s | B = b} = exp(−2s(s−b)/t); (|B|, L) =d (S − B, S)
            let b = t.sqrt() * normal(rng);
            let s = 0.5 * (b + (b * b - 2.0 * t * open_uniform(rng).ln()).sqrt());
            let killed = open_uniform(rng) > (-alpha * s).exp();
            if killed {
                0.0
            } else {
                s - b
            }
        }
        WrightTime { .. } | AiryTime | DistributedTime { .. } => f64::NAN,
    }
}

/// One draw of the boundary.
pub fn sample_boundary<R: Rng + ?Sized>(boundary: &BoundarySpec, rng: &mut R) -> Result<f64> {
    boundary.validate()?;
    Ok(match *boundary {
        BoundarySpec::Exponential { lambda } => Exp::new(lambda).expect("validated rate").sample(rng),
        BoundarySpec::Gamma { k, lambda } => Gamma::new(k as f64, 1.0 / lambda).expect("validated shape").sample(rng),
    })
}

/// Fraction of `n_paths` paths with X(t) < boundary. Each path draws the
/// process first, then the boundary, from its own stream.
pub fn estimate_crossing(
    spec: &ProcessSpec,
    boundary: &BoundarySpec,
    t: f64,
    n_paths: u64,
    seed: u64,
) -> Result<CrossingEstimate> {
    spec.validate()?;
    boundary.validate()?;
    if !spec.monte_carlo_capable() {
        return domain(format!("{} is quadrature-only", spec.name()));
    }
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("time must be positive, got {t}"));
    }
    if n_paths < MIN_PATHS {
        return domain(format!("need at least {MIN_PATHS} paths, got {n_paths}"));
    }
    let key = ChaCha8Rng::seed_from_u64(seed).get_seed();
    let (spec, boundary) = (*spec, *boundary);
    let exp = match boundary {
        BoundarySpec::Exponential { lambda } => Some(Exp::new(lambda).map_err(|e| FraxError::Domain(e.to_string()))?),
        BoundarySpec::Gamma { .. } => None,
    };
    let gam = match boundary {
        BoundarySpec::Gamma { k, lambda } => {
            Some(Gamma::new(k as f64, 1.0 / lambda).map_err(|e| FraxError::Domain(e.to_string()))?)
        }
        BoundarySpec::Exponential { .. } => None,
    };
    let hits: u64 = (0..n_paths)
        .into_par_iter()
        .map(|i| {
            let mut rng = keyed_rng(key, i);
            let x = draw(&spec, t, &mut rng);
            let u = match (&exp, &gam) {
                (Some(e), _) => e.sample(&mut rng),
                (_, Some(g)) => g.sample(&mut rng),
                _ => unreachable!(),
            };
            u64::from(x < u)
        })
        .sum();
    let p = hits as f64 / n_paths as f64;
    Ok(CrossingEstimate {
        p_hat: p,
        stderr: (p * (1.0 - p) / n_paths as f64).sqrt(),
        n_paths,
        seed,
        method: Method::MonteCarlo,
    })
}
