//! Exact computations around alternating sign matrices: sparse Laurent
//! polynomial symmetrization, difference-operator calculus, monotone-triangle
//! enumeration and refined ASM/VSASM number families.

pub mod check;
pub mod error;
pub mod exactpoly;
pub mod genfun;
pub mod linalg;
pub mod mt;
pub mod opwords;
pub mod random;
pub mod refined;
pub mod report;
pub mod shiftcalc;
pub mod suite;
pub mod symmetrize;

pub use check::{CheckOutcome, Status};
pub use error::{Error, Result};
