//! Exact Brauer-character arithmetic for `GL2(F_q)` and `l^× = F_{q²}^×`.
//!
//! Values live in `Z[ζ_n]`, `n = q² - 1`, and are compared exactly. On top of
//! the character tables sit the mod `p` Jacquet–Langlands map and its adjoint,
//! tame inertial types, and transport of integer functionals.

pub mod bmfunc;
pub mod chars;
pub mod classfn;
pub mod cli;
pub mod error;
pub mod jl;
pub mod json;
pub mod scalars;
pub mod suites;

pub use error::{Error, Result};
pub use scalars::{CycInt, FieldCtx, FlElem};
