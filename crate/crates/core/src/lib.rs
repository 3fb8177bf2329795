//! Exact verification of central binomial convolution identities.
//!
//! The crate provides
//!
//! * [`exactnum`]: rationals, polynomials in `ℓ`, falling factorials,
//!   generalized binomials and finite differences;
//! * [`configuration`]: two-row colored grids, their text formats, subset
//!   pair encoding and exhaustive enumeration;
//! * [`bijection`]: the map from ordered configurations onto tower-free ones
//!   and its inverse;
//! * [`identities`]: exact checkers for the convolution identities;
//! * [`series`]: truncated power series and the generating-function and
//!   certificate checks;
//! * [`sweep`]: exhaustive and batched checks, run data-parallel when the
//!   `parallel` feature is enabled.

pub mod bijection;
pub mod configuration;
pub mod error;
pub mod exactnum;
pub mod exec;
pub mod identities;
pub mod sampling;
pub mod series;
pub mod sweep;

pub use configuration::{Color, Column, Configuration, Profile, RenderMode, Row};
pub use error::{Error, Result};
pub use exactnum::{Polynomial, Rational};
pub use exec::Execution;
