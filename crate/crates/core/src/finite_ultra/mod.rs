//! Finite pseudo-ultrametric spaces, their quotients, the distance between
//! two metrics on one carrier, and amalgamation.

mod amalgam;
mod quotient;
mod space;
mod ud;

pub use amalgam::{amalgamate, AmalgamationSystem};
pub use quotient::{closed_quotient, ClosedQuotient};
pub use space::{validate, validate_isosceles, FiniteUltraSpace, Verdict, Violation};
pub use ud::{pair_encoding, ud_direct, ud_via_quotients};
