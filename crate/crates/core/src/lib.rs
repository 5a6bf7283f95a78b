//! Exact arithmetic for the norm of a binary relation and the classifiers
//! built on top of it.
//!
//! The crate computes, with big-rational arithmetic throughout:
//!
//! * the norm of a binary relation (the minimum of its quadratic form on the
//!   standard simplex) together with a minimal vector certificate,
//! * the separating functions `rho` and `mu` on extended naturals,
//! * representation type (finite / tame / wild) of posets, posets with an
//!   equivalence, dyadic sets, integral and Coxeter edge-labeled graphs, and
//!   semilinearly marked quivers,
//! * brute-force and floating-point oracles that cross-check every classifier
//!   at small sizes.

pub mod doc;
pub mod dyadic;
pub mod eqposet;
mod error;
pub mod exact;
pub mod graph;
pub mod oracle;
pub mod poset;
pub mod quiver;
pub mod relation;
pub mod rho;

pub use error::Error;
pub use exact::{ExtNat, HatValue, QuadRat, Rat, RatOrInf};

/// Representation type of a classified object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepType {
    Finite,
    Tame,
    Wild,
}

impl std::fmt::Display for RepType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepType::Finite => write!(f, "finite"),
            RepType::Tame => write!(f, "tame"),
            RepType::Wild => write!(f, "wild"),
        }
    }
}
