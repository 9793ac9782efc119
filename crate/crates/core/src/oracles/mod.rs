//! Brute-force references, exhaustive enumerators and seeded generators.

mod brute;
mod dendrogram;
mod enumerate;
pub mod random;
mod rng;
mod selftest;

pub use brute::{brute_attachable, brute_is_attachable_witness, brute_nabla, brute_ud};
pub use dendrogram::{all_strict_spaces, point_labels, random_dendrogram, Dendrogram, DendrogramNode};
pub use enumerate::{enumerate_on_partition, enumerate_step_functions, DEFAULT_BUDGET};
pub use rng::Lcg;
pub use selftest::{run_selftest, SelftestCheck};
