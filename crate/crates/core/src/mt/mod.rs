//! Monotone triangles: enumeration with statistics, the polynomial `α` that
//! counts them, its `X`-weighted generalization and the pattern generating
//! function.

mod alpha;
mod checks;
mod triangle;

pub use alpha::*;
pub use checks::*;
pub use triangle::*;
