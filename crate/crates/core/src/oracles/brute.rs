//! Reference computations straight from the definitions. They share no code
//! with the fast paths beyond point evaluation and are exponential in the
//! partition depth; use them on small inputs.

use crate::cantor::StepFunction;
use crate::error::{Error, Result};
use crate::finite_ultra::FiniteUltraSpace;
use crate::ultra_core::Rat;

/// All binary words of length `depth`, in lexicographic order.
fn words(depth: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << depth).map(move |code| (0..depth).rev().map(|b| code >> b & 1 == 1).collect())
}

fn max_depth(fs: &[&StepFunction]) -> usize {
    fs.iter().map(|f| f.partition().max_depth()).max().unwrap_or(0)
}

/// `sup_x M(f(x), g(x))`, evaluating both functions at every word of the
/// finest uniform depth used by either.
pub fn brute_nabla(f: &StepFunction, g: &StepFunction) -> Rat {
    let mut best = Rat::ZERO;
    for w in words(max_depth(&[f, g])) {
        let (a, b) = (f.eval(&w).unwrap(), g.eval(&w).unwrap());
        if a != b && a.max(b) > best {
            best = a.max(b);
        }
    }
    best
}

/// The infimum definition: the first `ε` in the range set, ascending, with
/// `d ≤ e ∨ ε` and `e ≤ d ∨ ε` at every pair.
pub fn brute_ud(d: &FiniteUltraSpace, e: &FiniteUltraSpace) -> Result<Rat> {
    if d.labels() != e.labels() {
        return Err(Error::CarrierMismatch("label lists differ".into()));
    }
    let n = d.len();
    for &eps in d.range_set().values() {
        let ok = (0..n).all(|x| {
            (0..n).all(|y| d.dist(x, y) <= e.dist(x, y).max(eps) && e.dist(x, y) <= d.dist(x, y).max(eps))
        });
        if ok {
            return Ok(eps);
        }
    }
    Err(Error::Construction("no range value separates the two metrics".into()))
}

/// Both attachability conditions for `(A, ζ, r)`, checked word by word.
pub fn brute_is_attachable_witness(family: &[StepFunction], zeta: &StepFunction, r: Rat, g: &StepFunction) -> bool {
    let mut all: Vec<&StepFunction> = family.iter().collect();
    all.push(zeta);
    all.push(g);
    let depth = max_depth(&all);
    let ws: Vec<Vec<bool>> = words(depth).collect();
    let at = |f: &StepFunction, w: &[bool]| f.eval(w).unwrap();

    let agrees_above = ws.iter().all(|w| {
        let (z, gv) = (at(zeta, w), at(g, w));
        !(r < z.max(gv)) || z == gv
    });
    if !agrees_above {
        return false;
    }
    family.iter().all(|h| {
        let near = brute_nabla(h, zeta) <= r;
        !near || ws.iter().any(|w| (at(h, w) == r) != (at(g, w) == r))
    })
}

/// First member of `candidates` witnessing `(A, ζ, r)`-attachability, or
/// `None` after exhausting them.
pub fn brute_attachable<I>(candidates: I, family: &[StepFunction], pivot: usize, r: Rat) -> Result<Option<StepFunction>>
where
    I: IntoIterator<Item = StepFunction>,
{
    if family.is_empty() {
        return Err(Error::Precondition("the family must be non-empty".into()));
    }
    let zeta = family
        .get(pivot)
        .ok_or_else(|| Error::Precondition(format!("pivot {pivot} is not a family member")))?;
    if r.is_zero() {
        return Err(Error::Precondition("radius must be positive".into()));
    }
    Ok(candidates
        .into_iter()
        .find(|g| brute_is_attachable_witness(family, zeta, r, g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{enumerate_step_functions, DEFAULT_BUDGET};
    use crate::ultra_core::RangeSet;

    fn sf(text: &str) -> StepFunction {
        StepFunction::parse(&text.replace(';', "\n"), &RangeSet::integers(3)).unwrap()
    }

    #[test]
    fn brute_nabla_examples() {
        let f = sf("0 2;1 0");
        assert_eq!(brute_nabla(&f, &f), Rat::ZERO);
        assert_eq!(brute_nabla(&sf("- 0"), &f), 2.into());
        assert_eq!(brute_nabla(&sf("0 1;1 0"), &sf("00 1;01 0;1 0")), 1.into());
    }

    #[test]
    fn brute_ud_examples() {
        let r = RangeSet::integers(3);
        let sp = |t: &str| FiniteUltraSpace::parse(t, false, Some(&r)).unwrap();
        let d = sp("a b c\n1\n2 2\n");
        assert_eq!(brute_ud(&d, &d).unwrap(), Rat::ZERO);
        assert_eq!(brute_ud(&sp("a b\n2\n"), &sp("a b\n3\n")).unwrap(), 3.into());
        assert_eq!(brute_ud(&d, &sp("a b c\n2\n2 2\n")).unwrap(), 2.into());
    }

    #[test]
    fn brute_attachable_examples() {
        let range = RangeSet::integers(2);
        let zero = StepFunction::zero(range.clone());
        let depth2 = enumerate_step_functions(2, &range, true, DEFAULT_BUDGET).unwrap();
        let w = brute_attachable(depth2, std::slice::from_ref(&zero), 0, 1.into()).unwrap();
        assert!(w.is_some());

        let none: Vec<StepFunction> = vec![];
        assert!(matches!(brute_attachable(none, &[], 0, 1.into()), Err(Error::Precondition(_))));
    }
}
