//! Monte Carlo and quadrature estimates of crossing probabilities
//! Pr{X(t) < boundary}, computed from the processes rather than from the
//! closed forms in [`crate::relaxation`].
//!
//! Every Monte Carlo-capable process is sampled exactly at the fixed time t;
//! there is no path discretization. Each path owns a ChaCha8 stream keyed by
//! (seed, path index), so results do not depend on thread count.

mod density;
mod sample;
mod spec;

pub use density::{density, elastic_atom, quadrature_crossing};
pub use sample::{estimate_crossing, path_rng, sample_boundary, sample_process, MIN_PATHS};
pub use spec::{analytic_crossing, analytic_model, BoundarySpec, CrossingEstimate, Method, ProcessSpec};
