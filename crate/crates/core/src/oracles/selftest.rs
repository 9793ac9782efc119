use super::random::{random_range_set, random_space, random_step_function};
use super::{brute_attachable, brute_nabla, brute_ud, enumerate_step_functions, Lcg, DEFAULT_BUDGET};
use crate::cantor::{nabla_sup, nabla_threshold, StepFunction};
use crate::error::Result;
use crate::finite_ultra::{ud_direct, ud_via_quotients, FiniteUltraSpace};
use crate::injectivity::{
    attach_function, embed_space, embed_space_into_metrics, function_distances, isolated_counterexample,
    metric_distances, vestfrid_distance, vestfrid_embed, AttachRequest,
};
use crate::ultra_core::RangeSet;

#[derive(Debug, Clone)]
pub struct SelftestCheck {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, cases: usize, outcome: Result<Option<String>>) -> SelftestCheck {
    let (passed, detail) = match outcome {
        Ok(None) => (true, String::new()),
        Ok(Some(mismatch)) => (false, mismatch),
        Err(e) => (false, e.to_string()),
    };
    SelftestCheck {
        name,
        cases,
        passed,
        detail,
    }
}

/// Fast paths against their brute-force references on seeded inputs.
pub fn run_selftest(seed: u64) -> Vec<SelftestCheck> {
    let mut rng = Lcg::new(seed);
    let mut out = Vec::new();

    let cases = 300;
    out.push(check("nabla", cases, (|| {
        for _ in 0..cases {
            let range = random_range_set(5, &mut rng);
            let f = random_step_function(4, &range, &mut rng);
            let g = random_step_function(4, &range, &mut rng);
            let (a, b, c) = (nabla_sup(&f, &g), nabla_threshold(&f, &g), brute_nabla(&f, &g));
            if a != b || b != c {
                return Ok(Some(format!("{f:?} vs {g:?}: sup {a}, threshold {b}, brute {c}")));
            }
        }
        Ok(None)
    })()));

    let cases = 150;
    out.push(check("ud", cases, (|| {
        for _ in 0..cases {
            let range = random_range_set(5, &mut rng);
            let n = rng.between(1, 8);
            let d = random_space(n, &range, &mut rng)?;
            let e = random_space(n, &range, &mut rng)?;
            let (a, b, c) = (ud_direct(&d, &e)?, ud_via_quotients(&d, &e)?, brute_ud(&d, &e)?);
            if a != b || b != c {
                return Ok(Some(format!("direct {a}, quotients {b}, brute {c}")));
            }
        }
        Ok(None)
    })()));

    let cases = 60;
    out.push(check("embed", cases, (|| {
        for _ in 0..cases {
            let range = random_range_set(4, &mut rng);
            let space = random_space(rng.between(1, 6), &range, &mut rng)?;
            if let Some(m) = embedding_mismatch(&space)? {
                return Ok(Some(m));
            }
        }
        Ok(None)
    })()));

    let cases = 40;
    out.push(check("attach-vs-brute", cases, (|| {
        let range = RangeSet::integers(2);
        let candidates: Vec<StepFunction> = enumerate_step_functions(2, &range, true, DEFAULT_BUDGET)?.collect();
        for _ in 0..cases {
            let zeta = random_step_function(1, &range, &mut rng);
            if !zeta.is_anchored() {
                continue;
            }
            let family = vec![zeta];
            let g = attach_function(&AttachRequest::new(family.clone(), 0, 1.into())?)?;
            let brute = brute_attachable(candidates.iter().cloned(), &family, 0, 1.into())?;
            if brute.is_none() || !super::brute_is_attachable_witness(&family, &family[0], 1.into(), &g) {
                return Ok(Some(format!("attach disagrees with exhaustive search for {:?}", family[0])));
            }
        }
        Ok(None)
    })()));

    out.push(check("isolated-point", 2, (|| {
        for points in [2, 3] {
            let report = isolated_counterexample(points, &RangeSet::integers(2))?;
            if !report.absence_certified() {
                return Ok(Some(format!("found a witness on {points} isolated points")));
            }
        }
        Ok(None)
    })()));

    out
}

/// Embeds into all three models and compares recomputed matrices.
pub(crate) fn embedding_mismatch(space: &FiniteUltraSpace) -> Result<Option<String>> {
    let range = space.range_set();
    let want = space.matrix();
    let functions = embed_space(space, &StepFunction::zero(range.clone()))?;
    if function_distances(&functions, range)?.matrix() != want {
        return Ok(Some(format!("function model inexact on\n{space}")));
    }
    let metrics = embed_space_into_metrics(space)?;
    if metric_distances(&metrics, range)?.matrix() != want {
        return Ok(Some(format!("metric model inexact on\n{space}")));
    }
    let seqs = vestfrid_embed(space)?;
    for i in 0..seqs.len() {
        for j in 0..seqs.len() {
            if vestfrid_distance(&seqs[i], &seqs[j]) != want[i][j] {
                return Ok(Some(format!("sequence model inexact on\n{space}")));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes() {
        for c in run_selftest(1) {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
