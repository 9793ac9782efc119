use super::FiniteUltraSpace;
use crate::error::{Error, Result};
use crate::ultra_core::RangeSet;

/// Disjoint blocks of a finite carrier, each with its own pseudo-ultrametric
/// and basepoint, glued along a metric on the block indices.
#[derive(Debug, Clone)]
pub struct AmalgamationSystem {
    labels: Vec<String>,
    range: RangeSet,
    blocks: Vec<Vec<usize>>,
    index_metric: FiniteUltraSpace,
    block_metrics: Vec<FiniteUltraSpace>,
    basepoints: Vec<usize>,
}

impl AmalgamationSystem {
    /// `blocks` hold carrier indices; `block_metrics[i]` is indexed by position
    /// within `blocks[i]`; `basepoints[i]` is a carrier index inside `blocks[i]`.
    pub fn new(
        labels: Vec<String>,
        range: RangeSet,
        blocks: Vec<Vec<usize>>,
        index_metric: FiniteUltraSpace,
        block_metrics: Vec<FiniteUltraSpace>,
        basepoints: Vec<usize>,
    ) -> Result<AmalgamationSystem> {
        let k = blocks.len();
        if k == 0 {
            return Err(Error::Precondition("no blocks".into()));
        }
        let mut owner = vec![None; labels.len()];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Precondition(format!("block {i} is empty")));
            }
            for &x in block {
                match owner.get_mut(x) {
                    None => return Err(Error::Precondition(format!("block {i} names unknown point {x}"))),
                    Some(Some(j)) => {
                        return Err(Error::Precondition(format!(
                            "point {} lies in blocks {j} and {i}",
                            labels[x]
                        )))
                    }
                    Some(slot) => *slot = Some(i),
                }
            }
        }
        if let Some(x) = owner.iter().position(Option::is_none) {
            return Err(Error::Precondition(format!("point {} is in no block", labels[x])));
        }
        if index_metric.len() != k || !index_metric.is_strict() {
            return Err(Error::Precondition(format!(
                "index metric must be a strict metric on {k} indices"
            )));
        }
        index_metric.ensure_valid()?;
        range.check_same(index_metric.range_set())?;
        if block_metrics.len() != k || basepoints.len() != k {
            return Err(Error::Precondition("one block metric and one basepoint per block".into()));
        }
        for (i, (e, block)) in block_metrics.iter().zip(&blocks).enumerate() {
            e.ensure_valid()?;
            range.check_same(e.range_set())?;
            if e.len() != block.len() {
                return Err(Error::Precondition(format!("block metric {i} has the wrong size")));
            }
            if !block.contains(&basepoints[i]) {
                return Err(Error::Precondition(format!("basepoint of block {i} lies outside it")));
            }
        }
        Ok(AmalgamationSystem {
            labels,
            range,
            blocks,
            index_metric,
            block_metrics,
            basepoints,
        })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn basepoints(&self) -> &[usize] {
        &self.basepoints
    }

    pub fn index_metric(&self) -> &FiniteUltraSpace {
        &self.index_metric
    }

    pub fn block_metrics(&self) -> &[FiniteUltraSpace] {
        &self.block_metrics
    }
}

/// The associated pseudo-ultrametric: `e_i` inside block `i`, and
/// `e_i(x, p_i) ∨ r(i, j) ∨ e_j(p_j, y)` across blocks.
pub fn amalgamate(sys: &AmalgamationSystem) -> Result<FiniteUltraSpace> {
    let n = sys.labels.len();
    // (block, position within block) for each carrier point
    let mut place = vec![(0, 0); n];
    for (i, block) in sys.blocks.iter().enumerate() {
        for (pos, &x) in block.iter().enumerate() {
            place[x] = (i, pos);
        }
    }
    let base_pos: Vec<usize> = sys
        .blocks
        .iter()
        .zip(&sys.basepoints)
        .map(|(block, p)| block.iter().position(|x| x == p).unwrap())
        .collect();
    FiniteUltraSpace::from_fn(sys.labels.clone(), false, sys.range.clone(), |x, y| {
        let ((i, px), (j, py)) = (place[x], place[y]);
        let (ei, ej) = (&sys.block_metrics[i], &sys.block_metrics[j]);
        if i == j {
            ei.dist(px, py)
        } else {
            ei.dist(px, base_pos[i])
                .max(sys.index_metric.dist(i, j))
                .max(ej.dist(base_pos[j], py))
        }
    })
}
