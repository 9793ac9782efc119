//! The sup-type ultrametric on step functions, computed two ways.

use super::{CellPath, StepFunction};
use crate::error::{Error, Result};
use crate::ultra_core::{nearly_discrete, tenuous_union, Rat};

/// Coarsest partition refining both domains, each cell tagged with `(f, g)` values.
pub fn common_refinement(f: &StepFunction, g: &StepFunction) -> Vec<(CellPath, Rat, Rat)> {
    let (fc, gc) = (f.partition().cells(), g.partition().cells());
    let (fv, gv) = (f.values(), g.values());
    let mut out = Vec::with_capacity(fc.len().max(gc.len()));
    let (mut i, mut j) = (0, 0);
    // Both cell lists are sorted and cover the space in the same order, so the
    // current heads are always nested; emit the finer one and advance past it.
    while i < fc.len() && j < gc.len() {
        let (a, b) = (&fc[i], &gc[j]);
        if a == b {
            out.push((a.clone(), fv[i], gv[j]));
            i += 1;
            j += 1;
        } else if a.contains(b) {
            out.push((b.clone(), fv[i], gv[j]));
            j += 1;
            if gc.get(j).is_none_or(|next| !a.contains(next)) {
                i += 1;
            }
        } else {
            debug_assert!(b.contains(a));
            out.push((a.clone(), fv[i], gv[j]));
            i += 1;
            if fc.get(i).is_none_or(|next| !b.contains(next)) {
                j += 1;
            }
        }
    }
    out
}

/// `max` of the nearly discrete distance between the two values over every cell.
pub fn nabla_sup(f: &StepFunction, g: &StepFunction) -> Rat {
    common_refinement(f, g)
        .into_iter()
        .map(|(_, a, b)| nearly_discrete(a, b))
        .max()
        .unwrap_or(Rat::ZERO)
}

/// Least `t ∈ im f ∪ im g ∪ {0}` such that `f = g` wherever `t < f ∨ g`.
pub fn nabla_threshold(f: &StepFunction, g: &StepFunction) -> Rat {
    let cells = common_refinement(f, g);
    tenuous_union(&f.image(), &g.image())
        .ascending_with_zero()
        .find(|&t| cells.iter().all(|&(_, a, b)| a.max(b) <= t || a == b))
        .expect("the largest image value always qualifies")
}

/// Decides `r = ∇(f, g)` from the level sets at `r` and agreement strictly above `r`.
pub fn matches_at(f: &StepFunction, g: &StepFunction, r: Rat) -> Result<bool> {
    if r.is_zero() {
        return Err(Error::Precondition("matches_at needs r > 0".into()));
    }
    f.range_set().check(r)?;
    let cells = common_refinement(f, g);
    let level_sets_differ = cells.iter().any(|&(_, a, b)| (a == r) != (b == r));
    let agree_above = cells.iter().all(|&(_, a, b)| a.max(b) <= r || a == b);
    Ok(level_sets_differ && agree_above)
}

/// For a function missing 0, the least image value `l`: the open `l`-ball
/// around it is a singleton.
pub fn isolated_radius(f: &StepFunction) -> Option<Rat> {
    if f.is_anchored() {
        None
    } else {
        f.image().min_positive()
    }
}
