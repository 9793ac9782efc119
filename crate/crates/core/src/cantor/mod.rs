//! Finite models of the Cantor set and of locally constant maps on it.

mod cell;
mod nabla;
mod step;

pub use cell::{CellPath, Partition};
pub use nabla::{common_refinement, isolated_radius, matches_at, nabla_sup, nabla_threshold};
pub use step::StepFunction;

pub(crate) use step::fields_with_columns;
