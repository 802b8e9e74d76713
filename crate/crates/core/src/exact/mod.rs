//! Exact arithmetic over the rationals in one formal parameter `a`.

pub mod param_poly;
pub mod rational;
pub mod roots;
pub mod series;
pub mod symmetric;
pub mod uni_poly;

pub use param_poly::ParamPoly;
pub use rational::{binomial, int, parse_rational, pow_i, rat, GaussianRational, Rational};
pub use roots::{rational_roots, roots_affine_in_param, AffineRoot};
pub use series::{series_eq, ParamSeries};
pub use symmetric::{extend_power_sums, power_sums_of_monic, power_sums_to_monic, PowerSums};
pub use uni_poly::{power_sum, UniPoly};
