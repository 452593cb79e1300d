//! Exact-arithmetic toolkit for computing genera of algebraic curves and
//! verifying the Riemann-Roch identity on explicit models.
//!
//! Everything runs over arbitrary-precision rationals: polynomial algebra
//! and factorization, places and divisors of the rational function field,
//! Riemann-Roch spaces on the line, hyperelliptic and superelliptic curve
//! models, Newton polygons, and the Riemann-Hurwitz genus formula.

pub mod bpoly;
pub mod divisor;
pub mod error;
pub mod factor;
pub mod hyperelliptic;
pub mod parse;
pub mod plane_curve;
pub mod rat;
pub mod ratfun;
pub mod report;
pub mod riemann_hurwitz;
pub mod riemann_roch;
pub mod series;
pub mod superelliptic;
pub mod upoly;

pub use bpoly::BPoly;
pub use divisor::{Divisor, Place};
pub use error::{Error, Result};
pub use hyperelliptic::{CurveFun, CurvePlace, HypCurve};
pub use rat::Rat;
pub use ratfun::RatFun;
pub use report::GenusReport;
pub use riemann_hurwitz::CoveringData;
pub use superelliptic::{RamificationProfile, SuperCurve};
pub use upoly::UPoly;
