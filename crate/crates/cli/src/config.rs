use frax_core::relaxation::{DiffusionScale, RelaxationModel as M, TimeGrid};
use frax_core::stochsim::{BoundarySpec, ProcessSpec};

use crate::args::{BoundaryKind, GridArgs, GridScale, ModelKind, ParamArgs, ProcessKind, Scale};
use crate::error::{CliError, CliResult};

fn need<T>(v: Option<T>, flag: &str, what: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("{what} needs --{flag}")))
}

pub fn model(kind: ModelKind, p: &ParamArgs) -> CliResult<M> {
    let lambda = p.lambda;
    let m = match kind {
        ModelKind::Standard => M::Standard { lambda },
        ModelKind::Fractional => M::Fractional { nu: need(p.nu, "nu", "fractional")?, lambda },
        ModelKind::Sojourn => M::Sojourn { lambda },
        ModelKind::Firstpassage => M::FirstPassage { lambda, n: p.depth.unwrap_or(1) },
        ModelKind::Besselsq => M::BesselSq { gamma: need(p.gamma, "gamma", "besselsq")?, lambda },
        ModelKind::Elastic => M::Elastic { alpha: need(p.alpha, "alpha", "elastic")?, lambda },
        ModelKind::Gammaboundary => M::GammaBoundary { k: need(p.k, "k", "gammaboundary")?, lambda },
        ModelKind::Elasticgamma => M::ElasticGamma {
            k: need(p.k, "k", "elasticgamma")?,
            alpha: need(p.alpha, "alpha", "elasticgamma")?,
            lambda,
        },
        ModelKind::Distributed => {
            let n1 = need(p.n1, "n1", "distributed")?;
            M::Distributed { nu1: p.nu1.unwrap_or(0.5), nu2: p.nu2.unwrap_or(1.0), n1, n2: p.n2.unwrap_or(1.0 - n1), lambda }
        }
    };
    m.validate()?;
    Ok(m)
}

pub fn process(kind: ProcessKind, p: &ParamArgs) -> CliResult<ProcessSpec> {
    let s = match kind {
        ProcessKind::Reflected => ProcessSpec::ReflectedBM {
            scale: match p.scale.unwrap_or(Scale::Var2t) {
                Scale::Var2t => DiffusionScale::Var2t,
                Scale::VarT => DiffusionScale::VarT,
            },
        },
        ProcessKind::Iterated => ProcessSpec::IteratedBM { depth: p.depth.unwrap_or(1) },
        ProcessKind::Sojourn => ProcessSpec::SojournTime,
        ProcessKind::Firstpassage => ProcessSpec::FirstPassageChain { depth: p.depth.unwrap_or(1) },
        ProcessKind::Besselsq => ProcessSpec::BesselSquared { gamma: need(p.gamma, "gamma", "besselsq")? },
        ProcessKind::Elastic => ProcessSpec::ElasticBM { alpha: need(p.alpha, "alpha", "elastic")? },
        ProcessKind::Wright => ProcessSpec::WrightTime { nu: need(p.nu, "nu", "wright")? },
        ProcessKind::Airy => ProcessSpec::AiryTime,
        ProcessKind::Distributed => {
            let n1 = need(p.n1, "n1", "distributed")?;
            ProcessSpec::DistributedTime { n1, n2: p.n2.unwrap_or(1.0 - n1) }
        }
    };
    s.validate()?;
    Ok(s)
}

pub fn boundary(kind: BoundaryKind, p: &ParamArgs) -> CliResult<BoundarySpec> {
    let b = match kind {
        BoundaryKind::Exp => BoundarySpec::Exponential { lambda: p.lambda },
        BoundaryKind::Gamma => BoundarySpec::Gamma { k: need(p.k, "k", "gamma boundary")?, lambda: p.lambda },
    };
    b.validate()?;
    Ok(b)
}

pub fn grid(g: &GridArgs) -> CliResult<TimeGrid> {
    if !g.t.is_empty() {
        return Ok(TimeGrid::new(g.t.clone())?);
    }
    let (Some(a), Some(b), Some(n)) = (g.t_start, g.t_stop, g.t_count) else {
        return Err(CliError::Usage("give --t or all of --t-start, --t-stop, --t-count".into()));
    };
    Ok(match g.t_scale {
        GridScale::Linear => TimeGrid::linear(a, b, n)?,
        GridScale::Log => TimeGrid::log(a, b, n)?,
    })
}
