//! Closed-form fractional relaxation laws, the special functions they are
//! built from, transform and Caputo-derivative numerics to check them, and
//! crossing-probability estimators that re-derive them from random processes.
//!
//! Module map:
//!
//! | module       | contents                                                   |
//! |--------------|------------------------------------------------------------|
//! | [`specfun`]    | Gamma, Mittag-Leffler (two and three parameter), M-Wright, Airy, Bessel I, 1F1, quadrature, Talbot inversion |
//! | [`relaxation`] | the nine relaxation families, their transforms and limiting laws |
//! | [`fraccalc`]   | L1 Caputo scheme, Riemann-Liouville integral, Laplace pair, governing-equation residuals |
//! | [`stochsim`]   | exact endpoint samplers, Monte Carlo and quadrature crossing estimates |

pub mod error;
pub mod fraccalc;
pub mod relaxation;
pub mod specfun;
pub mod stochsim;

pub use error::{FraxError, Result};
