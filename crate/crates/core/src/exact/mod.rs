//! Exact number tower: big rationals, extended naturals, the quadratic field
//! Q(sqrt 5), and guarded cosine-square values for Coxeter edge weights.
//!
//! Everything here is immutable after construction and never rounds.

mod degree;
mod extnat;
mod hat;
mod quad;
pub(crate) mod qfrac;
mod rat;

pub use degree::DegreeValue;
pub use extnat::ExtNat;
pub use hat::HatValue;
pub use quad::QuadRat;
pub use rat::{Rat, RatOrInf};
