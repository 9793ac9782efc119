//! Exact scalars, range sets and the nearly discrete metric on them.

mod range;
mod rat;

pub use range::{nearly_discrete, sep_infimum, tenuous_union, RangeSet, TenuousList};
pub use rat::Rat;
