//! Seeded generators for property checks.

use super::{random_dendrogram, Lcg};
use crate::cantor::{CellPath, StepFunction};
use crate::error::Result;
use crate::finite_ultra::{closed_quotient, AmalgamationSystem, FiniteUltraSpace};
use crate::ultra_core::{RangeSet, Rat};

/// Random partition of depth at most `max_depth` (each cell splits with
/// probability 1/2) with uniformly drawn values.
pub fn random_step_function(max_depth: usize, range: &RangeSet, rng: &mut Lcg) -> StepFunction {
    fn cells(at: CellPath, remaining: usize, rng: &mut Lcg, out: &mut Vec<CellPath>) {
        if remaining > 0 && rng.chance(1, 2) {
            let [l, r] = at.children();
            cells(l, remaining - 1, rng, out);
            cells(r, remaining - 1, rng, out);
        } else {
            out.push(at);
        }
    }
    let mut out = Vec::new();
    cells(CellPath::root(), max_depth, rng, &mut out);
    let pieces = out
        .into_iter()
        .map(|c| (c, *rng.pick(range.values())))
        .collect();
    StepFunction::new(pieces, range.clone()).expect("generated cells form a partition")
}

/// Random range set `{0} ∪` up to `max_positive` distinct positive values with small denominators.
pub fn random_range_set(max_positive: usize, rng: &mut Lcg) -> RangeSet {
    let k = rng.between(1, max_positive);
    RangeSet::from_values((0..k).map(|_| Rat::new(rng.between(1, 12) as u64, rng.between(1, 4) as u64)))
}

/// Strict random ultrametric space via a seeded dendrogram.
pub fn random_space(n: usize, range: &RangeSet, rng: &mut Lcg) -> Result<FiniteUltraSpace> {
    random_dendrogram(n, range, rng.next_u32() as u64)?.to_space()
}

/// Random pseudo-ultrametric: a dendrogram metric with some levels collapsed to 0.
pub fn random_pseudo_space(labels: Vec<String>, range: &RangeSet, rng: &mut Lcg) -> Result<FiniteUltraSpace> {
    let strict = random_dendrogram(labels.len(), range, rng.next_u32() as u64)?.to_space()?;
    let cutoff = *rng.pick(range.values());
    FiniteUltraSpace::from_fn(labels, false, range.clone(), |i, j| {
        let v = strict.dist(i, j);
        if v <= cutoff { Rat::ZERO } else { v }
    })
}

/// Random system: up to `max_blocks` blocks of up to `max_leaves` points each.
pub fn random_amalgamation_system(max_blocks: usize, max_leaves: usize, range: &RangeSet, rng: &mut Lcg) -> Result<AmalgamationSystem> {
    let k = rng.between(1, max_blocks);
    let sizes: Vec<usize> = (0..k).map(|_| rng.between(1, max_leaves)).collect();
    let n: usize = sizes.iter().sum();
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    let mut blocks = Vec::with_capacity(k);
    let mut start = 0;
    for &s in &sizes {
        let mut block = order[start..start + s].to_vec();
        block.sort();
        blocks.push(block);
        start += s;
    }
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let index_metric = random_space(k, range, rng)?;
    let block_metrics = blocks
        .iter()
        .map(|b| random_pseudo_space(b.iter().map(|&i| labels[i].clone()).collect(), range, rng))
        .collect::<Result<Vec<_>>>()?;
    let basepoints = blocks.iter().map(|b| *rng.pick(b)).collect();
    AmalgamationSystem::new(labels, range.clone(), blocks, index_metric, block_metrics, basepoints)
}

/// System built from the closed `eps`-balls of `ambient`: basepoints are
/// the first point of each ball, the index metric is `ambient` between
/// basepoints, and each block gets a random ultrametric of diameter ≤ `eps`.
pub fn ball_decomposition_system(ambient: &FiniteUltraSpace, eps: Rat, rng: &mut Lcg) -> Result<AmalgamationSystem> {
    let quotient = closed_quotient(ambient, eps)?;
    let range = ambient.range_set();
    let small = RangeSet::from_values(range.values().iter().copied().filter(|&v| v <= eps));
    let block_metrics = quotient
        .classes
        .iter()
        .map(|block| {
            let labels: Vec<String> = block.iter().map(|&i| ambient.label(i).to_string()).collect();
            let e = if small.len() > 1 {
                random_space(block.len(), &small, rng)?.matrix()
            } else {
                vec![vec![Rat::ZERO; block.len()]; block.len()]
            };
            FiniteUltraSpace::new(labels, e, false, range.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    let basepoints = quotient.classes.iter().map(|c| c[0]).collect();
    AmalgamationSystem::new(
        ambient.labels().to_vec(),
        range.clone(),
        quotient.classes.clone(),
        quotient.space,
        block_metrics,
        basepoints,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_reproducible() {
        let r = RangeSet::integers(4);
        let (mut a, mut b) = (Lcg::new(9), Lcg::new(9));
        for _ in 0..20 {
            assert_eq!(random_step_function(3, &r, &mut a), random_step_function(3, &r, &mut b));
        }
        let f = random_step_function(0, &r, &mut a);
        assert_eq!(f.partition().len(), 1);
    }

    #[test]
    fn random_systems_are_well_formed() {
        let mut rng = Lcg::new(3);
        for _ in 0..50 {
            let r = random_range_set(5, &mut rng);
            let sys = random_amalgamation_system(4, 3, &r, &mut rng).unwrap();
            assert!(sys.blocks().len() <= 4);
            assert!(sys.blocks().iter().all(|b| !b.is_empty() && b.len() <= 3));
        }
    }
}
