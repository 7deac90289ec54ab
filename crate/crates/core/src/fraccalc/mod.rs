//! Discrete Caputo derivatives, the Riemann–Liouville integral, a numerical
//! Laplace pair and governing-equation residuals for the relaxation laws.

mod l1;
mod laplace;
mod residual;

pub use l1::{caputo, caputo_l1, caputo_quad, rl_integral, L1Grid};
pub use laplace::{laplace_forward, laplace_invert, stehfest_weights, Inversion, STEHFEST_ORDERS};
pub use residual::{
    half_derivative_recursion, ode_residual, ode_residual_levels, ResidualLevel, ResidualReport,
};
