#![allow(dead_code)]

use ultra_urysohn::cantor::StepFunction;
use ultra_urysohn::finite_ultra::FiniteUltraSpace;
use ultra_urysohn::oracles::random::{random_range_set, random_space, random_step_function};
use ultra_urysohn::oracles::Lcg;
use ultra_urysohn::ultra_core::{RangeSet, Rat};

pub fn step_pair(seed: u64, depth: usize, max_positive: usize) -> (StepFunction, StepFunction) {
    let mut rng = Lcg::new(seed);
    let range = random_range_set(max_positive, &mut rng);
    let f = random_step_function(depth, &range, &mut rng);
    let g = random_step_function(depth, &range, &mut rng);
    (f, g)
}

pub fn step_triple(seed: u64, depth: usize, max_positive: usize) -> [StepFunction; 3] {
    let mut rng = Lcg::new(seed);
    let range = random_range_set(max_positive, &mut rng);
    [(); 3].map(|_| random_step_function(depth, &range, &mut rng))
}

/// Two strict spaces on the same labels and range set.
pub fn space_pair(seed: u64, max_n: usize) -> (FiniteUltraSpace, FiniteUltraSpace) {
    let mut rng = Lcg::new(seed);
    let range = random_range_set(5, &mut rng);
    let n = rng.between(1, max_n);
    (
        random_space(n, &range, &mut rng).unwrap(),
        random_space(n, &range, &mut rng).unwrap(),
    )
}

pub fn space(seed: u64, max_n: usize, max_positive: usize) -> FiniteUltraSpace {
    let mut rng = Lcg::new(seed);
    let range = random_range_set(max_positive, &mut rng);
    let n = rng.between(1, max_n);
    random_space(n, &range, &mut rng).unwrap()
}

/// Symmetric zero-diagonal matrix with arbitrary positive entries; usually not ultrametric.
pub fn arbitrary_matrix(seed: u64, n: usize, range: &RangeSet) -> FiniteUltraSpace {
    let mut rng = Lcg::new(seed);
    let mut m = vec![vec![Rat::ZERO; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = *rng.pick(range.positive());
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    let labels = (0..n).map(|i| format!("p{i}")).collect();
    FiniteUltraSpace::unchecked(labels, m, true, range.clone()).unwrap()
}
