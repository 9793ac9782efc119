//! Constructive one-point extension in both models, full embeddings of
//! finite ultrametric spaces, the isolated-point obstruction, and the
//! decreasing-sequence space.

mod counterexample;
mod functions;
mod metrics;
mod vestfrid;

pub use counterexample::{discrete_partition, isolated_counterexample, CounterexampleReport};
pub use functions::{attach_function, audit_attach, embed_space, extend_function, function_distances, AttachRequest};
pub use metrics::{
    attach_metric, embed_space_into_metrics, leaf_partition, metric_distances, split_leaf, zero_leaf_metric,
    MetricAttachment,
};
pub use vestfrid::{vestfrid_distance, vestfrid_embed, DecreasingSequence};
