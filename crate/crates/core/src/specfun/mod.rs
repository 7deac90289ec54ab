//! Special functions used by the relaxation laws.
//!
//! | function                    | method                                                   |
//! |-----------------------------|----------------------------------------------------------|
//! | [`gamma`], [`ln_gamma`]      | Lanczos on [1,2) with recurrence, Stirling above 15, reflection below 1/2 |
//! | [`mittag_leffler`]           | compensated power series; integral representation for large negative argument |
//! | [`gml`]                      | log-space Pochhammer series; Talbot inversion or 1F1 for large negative argument |
//! | [`wright_m`]                 | power series with cancellation bound; Zolotarev-type integral for large argument |
//! | [`bessel_i`]                 | ascending series, Hankel asymptotic above [`BESSEL_ASYMPTOTIC_X`] |
//! | [`airy_ai`]                  | Bessel I difference near 0, K_{1/3} integral beyond        |
//! | [`kummer_1f1`]               | series, Kummer transformation, large-negative asymptotic  |

mod bessel;
mod gamma;
mod kummer;
mod ml;
pub mod quad;
mod sum;
pub mod talbot;
mod wright;

pub use bessel::{airy_ai, bessel_i, bessel_i_scaled, BESSEL_ASYMPTOTIC_X};
pub use gamma::{gamma, ln_gamma, rgamma, sin_pi};
pub use kummer::{kummer_1f1, KUMMER_ASYMPTOTIC_X};
pub use ml::{
    gml, gml_eval, gml_series, gml_with, mittag_leffler, mittag_leffler_with, ml_integral, ml_series,
    ml_switch_point, MLParams, SeriesPolicy, SeriesValue,
};
pub use sum::Compensated;
pub use wright::{wright_m, wright_m_bounded, wright_m_density, wright_m_integral};
