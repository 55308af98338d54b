//! Numerical toolkit for the class of starlike functions subordinate to
//! `cosh(sigma sqrt z)`.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod acceptance;
pub mod criteria;
pub mod error;
pub mod numerics;
pub mod radii;
pub mod region;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
