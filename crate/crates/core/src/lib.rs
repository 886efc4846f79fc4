//! Exact combinatorial engine for fractional Dehn twist coefficients of
//! surface mapping classes and closed braids, open book foliation
//! certificates, and the topology criteria built on them.

pub mod curves;
pub mod error;
pub mod fdtc;
pub mod foliation;
pub mod mcg;
pub mod surface;
pub mod topology;
pub mod word;

pub use error::{Error, Result};
pub use num_rational::BigRational as Rational;
