//! Finite, exact constructions of universal ultrametric spaces.
//!
//! Two models are provided. In the first, points are locally constant maps
//! from the Cantor set into a finite range set, at distance
//! `∇(f, g) = max_x M(f(x), g(x))` where `M` is the nearly discrete metric.
//! In the second, points are pseudo-ultrametrics on a finite leaf set of the
//! Cantor set, compared by the same rule pairwise. Both admit one-point
//! extension, so every finite ultrametric space with values in the range set
//! embeds isometrically; [`injectivity`] carries out those embeddings and the
//! isolated-point counterexample, and [`oracles`] holds brute-force
//! references used to check everything else.

pub mod cantor;
pub mod cli;
pub mod error;
pub mod finite_ultra;
pub mod injectivity;
pub mod oracles;
pub mod ultra_core;

pub use error::{Error, ParseError, Result};
