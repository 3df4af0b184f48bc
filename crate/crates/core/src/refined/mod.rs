//! Refined enumeration families of ASMs and VSASMs, their linear equation
//! systems and related identities.

mod checks;
mod formulas;

pub use checks::*;
pub use formulas::*;
