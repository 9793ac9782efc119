use super::{attach_function, AttachRequest};
use crate::cantor::{Partition, StepFunction};
use crate::error::{Error, Result};
use crate::oracles::{brute_attachable, enumerate_on_partition, DEFAULT_BUDGET};
use crate::ultra_core::{RangeSet, Rat};

/// Exhaustive certificate that a finite discrete domain admits no one-point
/// extension for a particular request, alongside the successful construction
/// for the same request once cells may be refined.
#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub points: usize,
    pub range: RangeSet,
    /// 0 at the first point, `high` everywhere else.
    pub zeta: StepFunction,
    pub radius: Rat,
    pub high: Rat,
    pub candidates_checked: usize,
    /// An attachable function among the candidates; `None` certifies absence.
    pub witness: Option<StepFunction>,
    /// The refinable-model answer to the same request.
    pub refinable_witness: StepFunction,
}

impl CounterexampleReport {
    pub fn absence_certified(&self) -> bool {
        self.witness.is_none()
    }
}

/// The discrete space on `points` atomic cells `0, 10, 110, …`.
pub fn discrete_partition(points: usize) -> Result<Partition> {
    if points == 0 {
        return Err(Error::Precondition("need at least one point".into()));
    }
    Ok(Partition::chain(points - 1))
}

/// With `r` the least positive range value and `high` the largest, the map
/// `ζ = 0` at one isolated point and `high` elsewhere has no `({ζ}, ζ, r)`
/// attachable partner among functions on the unrefined cells.
pub fn isolated_counterexample(points: usize, range: &RangeSet) -> Result<CounterexampleReport> {
    if range.len() < 3 {
        return Err(Error::Precondition(format!(
            "range set {range} needs at least 3 values"
        )));
    }
    let partition = discrete_partition(points)?;
    let (radius, high) = (range.positive()[0], range.max());
    let values = (0..points)
        .map(|i| if i == 0 { Rat::ZERO } else { high })
        .collect();
    let zeta = StepFunction::on_partition(partition.clone(), values, range.clone())?;
    let family = vec![zeta.clone()];

    let mut candidates_checked = 0;
    let candidates = enumerate_on_partition(&partition, range, true, DEFAULT_BUDGET)?
        .inspect(|_| candidates_checked += 1);
    let witness = brute_attachable(candidates, &family, 0, radius)?;

    let refinable_witness = attach_function(&AttachRequest::new(family, 0, radius)?)?;
    Ok(CounterexampleReport {
        points,
        range: range.clone(),
        zeta,
        radius,
        high,
        candidates_checked,
        witness,
        refinable_witness,
    })
}
