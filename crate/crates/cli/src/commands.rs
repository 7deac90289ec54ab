use frax_core::fraccalc::{
    half_derivative_recursion, laplace_forward, laplace_invert, ode_residual_levels, L1Grid, ResidualReport,
};
use frax_core::relaxation::{asymptote, asymptote_ratio, laplace_transform_real, psi, Regime, RelaxationModel as M};
use frax_core::specfun::{gml, rgamma, MLParams};
use frax_core::stochsim::{analytic_crossing, estimate_crossing, path_rng, quadrature_crossing, MIN_PATHS};
use frax_core::FraxError;
use rand::Rng;
use serde::Serialize;

use crate::args::{EvalArgs, SimulateArgs, Suite};
use crate::config;
use crate::error::{CliError, CliResult};
use crate::table::{Cell, Table};

fn optional(r: frax_core::Result<f64>, t: f64) -> CliResult<Cell> {
    match r {
        Ok(v) => Ok(Cell::Num(v)),
        Err(FraxError::Unsupported(_)) => Ok(Cell::Missing),
        Err(e) => Err(CliError::at(t, e)),
    }
}

pub fn eval(a: &EvalArgs) -> CliResult<Table> {
    let m = config::model(a.model, &a.params)?;
    let grid = config::grid(&a.grid)?;
    let mut table = Table::new(&["t", "psi", "asymptote_small", "asymptote_large"]);
    let mut failed = Vec::new();
    for &t in grid.times() {
        let v = match psi(&m, t) {
            Ok(v) => v,
            Err(FraxError::Domain(msg)) => return Err(CliError::Usage(msg)),
            Err(e) => {
                failed.push(format!("t={t}: {e}"));
                continue;
            }
        };
        let small = optional(asymptote(&m, Regime::SmallT, t), t)?;
        let large = optional(asymptote(&m, Regime::LargeT, t), t)?;
        table.push(vec![Cell::Num(t), Cell::Num(v), small, large]);
    }
    if !failed.is_empty() {
        return Err(CliError::Numeric(failed.join("; ")));
    }
    Ok(table)
}

pub const SIMULATE_HEADER: [&str; 8] = ["t", "p_hat", "stderr", "analytic", "z_score", "method", "n_paths", "seed"];

/// Monte Carlo where the process has a sampler, quadrature otherwise. With
/// `strict`, any Monte Carlo row with |z| > 4 is an error after the table
/// has been built; the table comes back alongside it.
pub fn simulate(a: &SimulateArgs) -> CliResult<(Table, Option<CliError>)> {
    let spec = config::process(a.process, &a.params)?;
    let boundary = config::boundary(a.boundary, &a.params)?;
    let grid = config::grid(&a.grid)?;
    let mc = spec.monte_carlo_capable();
    if mc && a.paths < MIN_PATHS {
        return Err(CliError::Usage(format!("--paths must be at least {MIN_PATHS}, got {}", a.paths)));
    }
    let mut table = Table::new(&SIMULATE_HEADER);
    let mut misses = Vec::new();
    for &t in grid.times() {
        let est = if mc {
            estimate_crossing(&spec, &boundary, t, a.paths, a.seed)
        } else {
            quadrature_crossing(&spec, &boundary, t)
        }
        .map_err(|e| CliError::at(t, e))?;
        let analytic = match analytic_crossing(&spec, &boundary, t) {
            Ok(v) => Some(v),
            Err(FraxError::Unsupported(_)) => None,
            Err(e) => return Err(CliError::at(t, e)),
        };
        let z = analytic.filter(|_| mc).map(|v| (est.p_hat - v) / est.stderr);
        if let Some(z) = z {
            if !(z.abs() <= 4.0) {
                misses.push(format!("t={t}: z={z:.3}"));
            }
        }
        table.push(vec![
            Cell::Num(t),
            Cell::Num(est.p_hat),
            Cell::Num(est.stderr),
            analytic.map_or(Cell::Missing, Cell::Num),
            z.map_or(Cell::Missing, Cell::Num),
            Cell::Text(est.method.as_str().into()),
            Cell::Int(est.n_paths),
            Cell::Int(est.seed),
        ]);
    }
    let err = (a.strict && !misses.is_empty()).then(|| CliError::Statistical(misses.join("; ")));
    Ok((table, err))
}

pub const SMALL_T: [f64; 4] = [1e-1, 1e-2, 1e-3, 1e-4];
pub const LARGE_T: [f64; 4] = [1e1, 1e2, 1e3, 1e4];

/// One representative parameter set per table row.
pub fn table_models() -> Vec<(String, M)> {
    let rows = [
        M::Standard { lambda: 1.0 },
        M::Fractional { nu: 0.5, lambda: 1.0 },
        M::Sojourn { lambda: 1.0 },
        M::FirstPassage { lambda: 1.0, n: 1 },
        M::FirstPassage { lambda: 1.0, n: 2 },
        M::BesselSq { gamma: 2.0, lambda: 1.0 },
        M::Elastic { alpha: 1.0, lambda: 1.0 },
        M::GammaBoundary { k: 2, lambda: 1.0 },
        M::GammaBoundary { k: 3, lambda: 1.0 },
        M::ElasticGamma { k: 2, alpha: 0.5, lambda: 1.0 },
        M::Distributed { nu1: 0.5, nu2: 1.0, n1: 0.5, n2: 0.5, lambda: 1.0 },
    ];
    rows.into_iter().map(|m| (label(&m), m)).collect()
}

pub fn label(m: &M) -> String {
    let p = match *m {
        M::Standard { lambda } | M::Sojourn { lambda } => format!("lambda={lambda}"),
        M::Fractional { nu, lambda } => format!("nu={nu} lambda={lambda}"),
        M::FirstPassage { lambda, n } => format!("n={n} lambda={lambda}"),
        M::BesselSq { gamma, lambda } => format!("gamma={gamma} lambda={lambda}"),
        M::Elastic { alpha, lambda } => format!("alpha={alpha} lambda={lambda}"),
        M::GammaBoundary { k, lambda } => format!("k={k} lambda={lambda}"),
        M::ElasticGamma { k, alpha, lambda } => format!("k={k} alpha={alpha} lambda={lambda}"),
        M::Distributed { nu1, nu2, n1, n2, lambda } => {
            format!("nu1={nu1} nu2={nu2} n1={n1} n2={n2} lambda={lambda}")
        }
    };
    format!("{} {p}", m.name())
}

/// Exact law against its limiting law for one regime. Rows whose law is
/// absent for the regime are skipped.
pub fn comparison_table(regime: Regime) -> CliResult<Table> {
    let ts: &[f64] = if regime == Regime::SmallT { &SMALL_T } else { &LARGE_T };
    let mut table = Table::new(&["model", "t", "exact", "asymptotic", "ratio"]);
    for (name, m) in table_models() {
        for &t in ts {
            let a = match asymptote(&m, regime, t) {
                Ok(a) => a,
                Err(FraxError::Unsupported(_)) => break,
                Err(e) => return Err(CliError::at(t, e)),
            };
            let exact = psi(&m, t).map_err(|e| CliError::at(t, e))?;
            let ratio = asymptote_ratio(&m, regime, t).map_err(|e| CliError::at(t, e))?;
            table.push(vec![Cell::Text(name.clone()), Cell::Num(t), Cell::Num(exact), Cell::Num(a), Cell::Num(ratio)]);
        }
    }
    Ok(table)
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub passed: bool,
    /// measured quantity: an error, or an observed order
    pub measured: f64,
    /// `measured <= bound` passes, or `measured >= bound` for orders
    pub bound: f64,
    pub relation: &'static str,
}

impl Check {
    fn at_most(name: &str, anchor: &str, measured: f64, bound: f64) -> Self {
        Self { name: name.into(), anchor: anchor.into(), passed: measured <= bound, measured, bound, relation: "<=" }
    }

    fn at_least(name: &str, anchor: &str, measured: f64, bound: f64) -> Self {
        Self { name: name.into(), anchor: anchor.into(), passed: measured >= bound, measured, bound, relation: ">=" }
    }

    fn failed(name: &str, anchor: &str, e: impl std::fmt::Display) -> Self {
        Self {
            name: format!("{name}: {e}"),
            anchor: anchor.into(),
            passed: false,
            measured: f64::NAN,
            bound: f64::NAN,
            relation: "<=",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

fn guard(name: &str, anchor: &str, f: impl FnOnce() -> frax_core::Result<Check>) -> Check {
    f().unwrap_or_else(|e| Check::failed(name, anchor, e))
}

fn identities() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(guard("GML recursion", "three-parameter Mittag-Leffler recursion in the upper index", || {
        let (nu, z) = (0.5, 0.5);
        let mut worst: f64 = 0.0;
        for k in 1..=5u32 {
            let (n, kf) = (k as i32, k as f64);
            for x in [0.3f64, 1.0, 2.5, 4.0] {
                let b0 = kf * nu + z;
                let lhs = x.powi(n) * gml(&MLParams::generalized(nu, b0, kf), -x)?
                    + x.powi(n + 1) * gml(&MLParams::generalized(nu, b0 + nu, kf), -x)?;
                let lower = if k == 1 { rgamma(b0) } else { gml(&MLParams::generalized(nu, b0, kf - 1.0), -x)? };
                worst = worst.max(rel(lhs, x.powi(n) * lower));
            }
        }
        Ok(Check::at_most("GML recursion", "three-parameter Mittag-Leffler recursion in the upper index", worst, 1e-10))
    }));
    let anchor = "derivative of t^(b-1) E^r_(a,b)(c t^a) lowers b by one";
    out.push(guard("GML derivative law", anchor, || {
        let (a, b, rho, lam, t): (f64, f64, f64, f64, f64) = (0.6, 2.2, 1.7, -1.3, 1.1);
        let f = |s: f64| gml(&MLParams::generalized(a, b, rho), lam * s.powf(a)).map(|g| s.powf(b - 1.0) * g);
        let exact = t.powf(b - 2.0) * gml(&MLParams::generalized(a, b - 1.0, rho), lam * t.powf(a))?;
        let err = |h: f64| -> frax_core::Result<f64> { Ok(((f(t + h)? - f(t - h)?) / (2.0 * h) - exact).abs()) };
        let order = (err(0.02)? / err(0.01)?).log2();
        Ok(Check::at_least("GML derivative law (central-difference order)", anchor, order, 1.9))
    }));
    for k in [2u32, 3] {
        let name = format!("half-derivative recursion k={k}");
        let anchor = "gamma-boundary laws: d^(1/2) psi_k = -lambda (psi_k - psi_(k-1))";
        out.push(guard(&name, anchor, || {
            let m = M::GammaBoundary { k, lambda: 1.0 };
            let g = L1Grid::sample(|t| psi(&m, t), 1.0 / 32.0, 64)?;
            let r = half_derivative_recursion(k, 1.0, &g, 3)?;
            Ok(Check::at_most(&name, anchor, r.max_norm, 1e-3))
        }));
    }
    let anchor = "elastic law against a Gamma(1) boundary is the exponential-boundary elastic law";
    out.push(guard("reduction k=1", anchor, || {
        let mut worst: f64 = 0.0;
        for (alpha, lambda, t) in [(0.3, 1.0, 0.5), (1.0, 2.0, 1.0), (2.5, 0.7, 4.0)] {
            let a = psi(&M::ElasticGamma { k: 1, alpha, lambda }, t)?;
            worst = worst.max((a - psi(&M::Elastic { alpha, lambda }, t)?).abs());
        }
        Ok(Check::at_most("reduction k=1", anchor, worst, 1e-10))
    }));
    let anchor = "no killing: elastic Gamma-boundary law with lambda*sqrt(2) is the reflected one";
    out.push(guard("reduction alpha=0", anchor, || {
        let mut worst: f64 = 0.0;
        for k in 1..=4u32 {
            for t in [0.3, 1.0, 4.0] {
                let a = psi(&M::ElasticGamma { k, alpha: 1e-12, lambda: 2f64.sqrt() }, t)?;
                worst = worst.max((a - psi(&M::GammaBoundary { k, lambda: 1.0 }, t)?).abs());
            }
        }
        Ok(Check::at_most("reduction alpha=0", anchor, worst, 1e-9))
    }));
    let anchor = "equal killing and boundary rates: limit of the elastic law";
    out.push(guard("reduction alpha=lambda", anchor, || {
        let t = 1.3;
        let eq = psi(&M::Elastic { alpha: 1.0, lambda: 1.0 }, t)?;
        let near = psi(&M::Elastic { alpha: 1.0 + 1e-7, lambda: 1.0 }, t)?;
        Ok(Check::at_most("reduction alpha=lambda", anchor, (eq - near).abs(), 1e-6))
    }));
    let anchor = "distributed order with n1=0 is the single-order law";
    out.push(guard("reduction n1=0", anchor, || {
        let mut worst: f64 = 0.0;
        for t in [0.25, 1.0, 4.0] {
            let a = psi(&M::Distributed { nu1: 0.5, nu2: 1.0, n1: 0.0, n2: 1.0, lambda: 0.8 }, t)?;
            worst = worst.max((a - (-0.8 * t).exp()).abs());
            let b = psi(&M::Distributed { nu1: 0.3, nu2: 0.7, n1: 0.0, n2: 1.0, lambda: 0.8 }, t)?;
            worst = worst.max((b - psi(&M::Fractional { nu: 0.7, lambda: 0.8 }, t)?).abs());
        }
        Ok(Check::at_most("reduction n1=0", anchor, worst, 1e-12))
    }));
    out
}

/// Governing equations checked by residual, with the highest derivative
/// order in each.
pub fn residual_models() -> Vec<(&'static str, &'static str, M, f64)> {
    vec![
        ("fractional relaxation nu=0.5", "Caputo relaxation equation", M::Fractional { nu: 0.5, lambda: 1.0 }, 0.5),
        ("fractional relaxation nu=0.7", "Caputo relaxation equation", M::Fractional { nu: 0.7, lambda: 1.0 }, 0.7),
        ("gamma boundary k=2", "gamma-boundary equation of order k/2", M::GammaBoundary { k: 2, lambda: 1.0 }, 1.0),
        ("elastic gamma k=1", "elastic equation of orders 1/2 and 1", M::ElasticGamma { k: 1, alpha: 1.0, lambda: 1.0 }, 1.0),
        (
            "distributed order (1/2, 1)",
            "two-term distributed-order equation",
            M::Distributed { nu1: 0.5, nu2: 1.0, n1: 0.5, n2: 0.5, lambda: 1.0 },
            1.0,
        ),
    ]
}

pub fn residual_study(m: &M) -> frax_core::Result<ResidualReport> {
    let g = L1Grid::sample(|t| psi(m, t), 1.0 / 32.0, 64)?;
    ode_residual_levels(m, &g, 4)
}

fn residuals() -> Vec<Check> {
    let mut out: Vec<Check> = residual_models()
        .into_iter()
        .map(|(name, anchor, m, nu_max)| {
            guard(name, anchor, || {
                let r = residual_study(&m)?;
                let target = 2.0 - nu_max;
                let mut c = Check::at_most(&format!("{name}: |order - {target}|"), anchor, (r.order - target).abs(), 0.4);
                c.passed &= r.levels.windows(2).all(|w| w[1].max_norm < w[0].max_norm);
                Ok(c)
            })
        })
        .collect();
    let anchor = "second-order sojourn-law equation";
    out.push(guard("sojourn equation", anchor, || {
        let r = residual_study(&M::Sojourn { lambda: 1.0 })?;
        Ok(Check::at_least("sojourn equation order", anchor, r.order, 1.0))
    }));
    out
}

pub fn laplace_models() -> Vec<(&'static str, M)> {
    vec![
        ("elastic", M::Elastic { alpha: 0.5, lambda: 1.0 }),
        ("gamma boundary k=2", M::GammaBoundary { k: 2, lambda: 1.0 }),
        ("elastic gamma k=2", M::ElasticGamma { k: 2, alpha: 0.5, lambda: 1.0 }),
        ("distributed order (1/2, 1)", M::Distributed { nu1: 0.5, nu2: 1.0, n1: 0.5, n2: 0.5, lambda: 1.0 }),
    ]
}

fn laplace() -> Vec<Check> {
    let mut out = Vec::new();
    let mut rng = path_rng(0x1A91, 0);
    let etas: Vec<f64> = (0..20).map(|_| rng.random_range(0.5..20.0)).collect();
    for (name, m) in laplace_models() {
        let anchor = "closed-form Laplace transform";
        out.push(guard(name, anchor, || {
            let mut worst: f64 = 0.0;
            for &eta in &etas {
                let num = laplace_forward(|t| psi(&m, t).unwrap_or(f64::NAN), eta)?;
                worst = worst.max(rel(num, laplace_transform_real(&m, eta)?));
            }
            Ok(Check::at_most(&format!("{name}: transform"), anchor, worst, 1e-6))
        }));
        let anchor = "Gaver-Stehfest inversion of the closed-form transform";
        out.push(guard(name, anchor, || {
            let mut worst: f64 = 0.0;
            for t in [0.25, 0.5, 1.0, 2.0, 4.0] {
                let inv = laplace_invert(|eta| laplace_transform_real(&m, eta).unwrap_or(f64::NAN), t)?;
                worst = worst.max((inv.value - psi(&m, t)?).abs());
            }
            Ok(Check::at_most(&format!("{name}: inversion"), anchor, worst, 1e-5))
        }));
    }
    out
}

fn asymptotics() -> Vec<Check> {
    let mut out = Vec::new();
    for (regime, which) in [(Regime::SmallT, "t -> 0"), (Regime::LargeT, "t -> infinity")] {
        let anchor = format!("limiting behaviour for {which}");
        let table = match comparison_table(regime) {
            Ok(t) => t,
            Err(e) => {
                out.push(Check::failed("comparison table", &anchor, e));
                continue;
            }
        };
        for (name, _) in table_models() {
            let errs: Vec<f64> = table
                .rows
                .iter()
                .filter(|r| r[0] == Cell::Text(name.clone()))
                .map(|r| match r[4] {
                    Cell::Num(x) => (x - 1.0).abs(),
                    _ => f64::NAN,
                })
                .collect();
            let Some(&last) = errs.last() else { continue };
            let mut c = Check::at_most(&format!("{name} ({which}): ratio error at the extreme point"), &anchor, last, 0.02);
            c.passed &= errs.windows(2).all(|w| w[1] <= w[0]);
            out.push(c);
        }
    }
    out
}

pub fn verify(suite: Suite) -> Report {
    let checks = match suite {
        Suite::Identities => identities(),
        Suite::Residuals => residuals(),
        Suite::Laplace => laplace(),
        Suite::Asymptotics => asymptotics(),
        Suite::All => [identities(), residuals(), laplace(), asymptotics()].concat(),
    };
    Report {
        suite: format!("{suite:?}").to_lowercase(),
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}
