//! The nine relaxation families, their Laplace transforms and limiting laws.
//!
//! Every family is a survival function ψ(t) with ψ(0) = 1 that solves a
//! (fractional) relaxation equation and equals Pr{X(t) < boundary} for a
//! Brownian-type process X and an independent random boundary.

mod asymptote;
mod model;
mod psi;
mod transform;

pub use asymptote::{asymptote, asymptote_ratio, Regime};
pub use model::{DiffusionScale, RelaxationModel, TimeGrid};
pub use psi::{elastic_gamma_partial_fractions, elastic_gamma_series, psi, psi_grid, psi_via_transform};
pub use transform::{laplace_transform, laplace_transform_real};
