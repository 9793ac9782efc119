use crate::cantor::{Partition, StepFunction};
use crate::error::{Error, Result};
use crate::ultra_core::{RangeSet, Rat};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Every assignment of range values to the cells of `partition`, in
/// mixed-radix order with the last cell varying fastest.
///
/// Fails before producing anything if `|R|^cells` exceeds `budget`.
pub fn enumerate_on_partition(
    partition: &Partition,
    range: &RangeSet,
    anchored_only: bool,
    budget: u64,
) -> Result<impl Iterator<Item = StepFunction>> {
    let cells = partition.len();
    let base = range.len() as u128;
    let needed = u32::try_from(cells)
        .ok()
        .and_then(|c| base.checked_pow(c))
        .unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let partition = partition.clone();
    let range = range.clone();
    let values: Vec<Rat> = range.values().to_vec();
    let mut digits = vec![0usize; cells];
    let mut done = false;
    Ok(std::iter::from_fn(move || loop {
        if done {
            return None;
        }
        let assignment: Vec<Rat> = digits.iter().map(|&d| values[d]).collect();
        // advance the odometer
        done = true;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < values.len() {
                done = false;
                break;
            }
            *d = 0;
        }
        if anchored_only && !assignment.iter().any(Rat::is_zero) {
            continue;
        }
        return Some(
            StepFunction::on_partition(partition.clone(), assignment, range.clone())
                .expect("range values on a valid partition"),
        );
    }))
}

/// All step functions on the uniform partition of the given depth.
pub fn enumerate_step_functions(
    depth: usize,
    range: &RangeSet,
    anchored_only: bool,
    budget: u64,
) -> Result<impl Iterator<Item = StepFunction>> {
    if depth >= 32 {
        return Err(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        });
    }
    enumerate_on_partition(&Partition::uniform(depth), range, anchored_only, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let r01 = RangeSet::integers(1);
        let r012 = RangeSet::integers(2);
        assert_eq!(enumerate_step_functions(1, &r01, false, DEFAULT_BUDGET).unwrap().count(), 4);
        assert_eq!(enumerate_step_functions(1, &r01, true, DEFAULT_BUDGET).unwrap().count(), 3);
        assert_eq!(enumerate_step_functions(0, &r012, false, DEFAULT_BUDGET).unwrap().count(), 3);
        assert_eq!(enumerate_step_functions(0, &r012, true, DEFAULT_BUDGET).unwrap().count(), 1);
        assert_eq!(enumerate_step_functions(1, &r012, true, DEFAULT_BUDGET).unwrap().count(), 5);
    }

    #[test]
    fn each_assignment_once() {
        let all: Vec<_> = enumerate_step_functions(2, &RangeSet::integers(2), false, DEFAULT_BUDGET)
            .unwrap()
            .map(|f| f.values().to_vec())
            .collect();
        let mut unique = all.clone();
        unique.sort();
        unique.dedup();
        assert_eq!(all.len(), 81);
        assert_eq!(unique.len(), 81);
    }

    #[test]
    fn budget_is_enforced() {
        let r = RangeSet::integers(2);
        assert!(matches!(
            enumerate_step_functions(2, &r, false, 80),
            Err(Error::BudgetExceeded { needed: 81, budget: 80 })
        ));
        assert!(enumerate_step_functions(2, &r, false, 81).is_ok());
        assert!(enumerate_step_functions(5, &r, false, DEFAULT_BUDGET).is_err());
    }
}
