//! Exact Farey series, fractal classes of quantum Hall filling factors,
//! fracton occupation statistics, and divider dimension of fractal curves.
//!
//! The crate revolves around one observation: nonnegative filling factors
//! organize into classes labeled by a Hausdorff dimension h in [1, 2]
//! (one plus the distance to the nearest odd integer), the classes pair
//! under the duality h ↔ 3 − h, and the interior of any Farey series
//! enumerates the labels — each Farey fraction's class starts with the
//! fraction itself followed by its label. Everything number-theoretic is
//! computed in exact rational arithmetic.
//!
//! On the statistical-mechanics side, the same label h interpolates
//! between Fermi-Dirac (h = 1) and Bose-Einstein (h = 2) occupation via a
//! transcendental distribution function, with a matching entropy per
//! state. On the geometric side, a divider walk estimates the dimension of
//! fractal curves such as generalized Koch curves, which realize any
//! dimension in (1, 2).
//!
//! Start with the runnable examples (`cargo run --example farey_series`)
//! or the `fracton` binary, which exposes every module as a subcommand.

pub mod cli;
pub mod curve;
pub mod entropy;
pub mod error;
pub mod farey;
pub mod rational;
pub mod spectrum;
pub mod statistics;

pub use error::{Error, Result};
pub use farey::FareySequence;
pub use rational::Fraction;
pub use spectrum::{FillingFactor, FractalClass, HausdorffLabel};
pub use statistics::{FractonPoint, ThermoInput};
