//! One-point extension and isometric embedding in the step-function model.

use crate::cantor::{common_refinement, nabla_sup, CellPath, StepFunction};
use crate::error::{Error, Result};
use crate::finite_ultra::FiniteUltraSpace;
use crate::ultra_core::{RangeSet, Rat};

/// A finite family, a pivot member and a positive radius.
#[derive(Debug, Clone)]
pub struct AttachRequest {
    family: Vec<StepFunction>,
    pivot: usize,
    radius: Rat,
}

impl AttachRequest {
    pub fn new(family: Vec<StepFunction>, pivot: usize, radius: Rat) -> Result<AttachRequest> {
        let zeta = family
            .get(pivot)
            .ok_or_else(|| Error::Precondition(format!("pivot {pivot} is not a family member")))?;
        if radius.is_zero() {
            return Err(Error::Precondition("radius must be positive".into()));
        }
        zeta.range_set().check(radius)?;
        for h in &family {
            h.range_set().check_same(zeta.range_set())?;
        }
        Ok(AttachRequest {
            family,
            pivot,
            radius,
        })
    }

    pub fn family(&self) -> &[StepFunction] {
        &self.family
    }

    pub fn pivot(&self) -> &StepFunction {
        &self.family[self.pivot]
    }

    pub fn radius(&self) -> Rat {
        self.radius
    }

    /// Members within `radius` of the pivot; these are the ones the new
    /// function has to sit at distance exactly `radius` from.
    pub fn near_members(&self) -> impl Iterator<Item = &StepFunction> + '_ {
        let zeta = self.pivot();
        self.family
            .iter()
            .filter(move |h| nabla_sup(h, zeta) <= self.radius)
    }
}

/// Checks the two attachability conditions for `g` directly: its level set at
/// `r` differs from that of every near member, and it agrees with the pivot
/// wherever either exceeds `r`.
pub fn audit_attach(req: &AttachRequest, g: &StepFunction) -> bool {
    let r = req.radius;
    let level_sets_differ = req.near_members().all(|h| {
        common_refinement(h, g)
            .iter()
            .any(|&(_, hv, gv)| (hv == r) != (gv == r))
    });
    let agrees_above = common_refinement(req.pivot(), g)
        .iter()
        .all(|&(_, zv, gv)| zv.max(gv) <= r || zv == gv);
    level_sets_differ && agrees_above
}

/// Builds `g` equal to the pivot off `B = ζ⁻¹([0, r])`, equal to `r` on one
/// cell `K` of `B` and 0 on the rest of `B`.
///
/// `B` is first refined to at least `|A| + 1` cells, so some single-cell `K`
/// avoids every near member's level set at `r`; candidates are tried in cell
/// order and the first one passing [`audit_attach`] is returned.
pub fn attach_function(req: &AttachRequest) -> Result<StepFunction> {
    let r = req.radius;
    if let Some(h) = req.family.iter().find(|h| !h.is_anchored()) {
        return Err(Error::Precondition(format!("family member {h:?} does not attain 0")));
    }
    let mut zeta = req.pivot().clone();
    let in_b = |z: &StepFunction| -> Vec<CellPath> {
        z.pieces().filter(|(_, v)| *v <= r).map(|(c, _)| c.clone()).collect()
    };
    let mut b = in_b(&zeta);
    if b.is_empty() {
        return Err(Error::Precondition("pivot never takes a value ≤ r".into()));
    }
    let wanted = req.family.len() + 1;
    while b.len() < wanted {
        let shallowest = b.iter().min_by_key(|c| c.depth()).unwrap().clone();
        zeta = zeta.split(&shallowest)?;
        b = in_b(&zeta);
    }

    for k in &b {
        let pieces = zeta
            .pieces()
            .map(|(cell, v)| {
                let value = if v > r {
                    v
                } else if cell == k {
                    r
                } else {
                    Rat::ZERO
                };
                (cell.clone(), value)
            })
            .collect();
        let g = StepFunction::new(pieces, zeta.range_set().clone())?;
        if audit_attach(req, &g) {
            return Ok(g);
        }
    }
    Err(Error::Construction(format!(
        "no single-cell split of {} cells passed the audit",
        b.len()
    )))
}

/// Pairwise `∇` distances of labelled functions, as a pseudo-metric space.
pub fn function_distances(points: &[(String, StepFunction)], range: &RangeSet) -> Result<FiniteUltraSpace> {
    let labels = points.iter().map(|(l, _)| l.clone()).collect();
    FiniteUltraSpace::from_fn(labels, false, range.clone(), |i, j| {
        nabla_sup(&points[i].1, &points[j].1)
    })
}

fn check_realizes(points: &[(String, StepFunction)], target: &FiniteUltraSpace) -> Result<Vec<usize>> {
    let idx = points
        .iter()
        .map(|(l, _)| target.index_of(l))
        .collect::<Result<Vec<_>>>()?;
    for (i, (la, fa)) in points.iter().enumerate() {
        for (j, (lb, fb)) in points.iter().enumerate().skip(i + 1) {
            let got = nabla_sup(fa, fb);
            let want = target.dist(idx[i], idx[j]);
            if got != want {
                return Err(Error::Precondition(format!(
                    "embedding is inexact: ∇({la}, {lb}) = {got} but the target has {want}"
                )));
            }
        }
    }
    Ok(idx)
}

/// Finds the image of the new point `omega` given an exact embedding of some
/// other points of `target`.
///
/// Only the points nearest to `omega` are handed to [`attach_function`]; the
/// remaining distances follow from the isosceles property and are re-checked.
pub fn extend_function(
    embedded: &[(String, StepFunction)],
    target: &FiniteUltraSpace,
    omega: &str,
) -> Result<StepFunction> {
    let w = target.index_of(omega)?;
    if embedded.is_empty() {
        return Err(Error::Precondition("nothing embedded yet".into()));
    }
    if embedded.iter().any(|(l, _)| l == omega) {
        return Err(Error::Precondition(format!("{omega} is already embedded")));
    }
    let idx = check_realizes(embedded, target)?;
    if let Some(pos) = idx.iter().position(|&a| target.dist(a, w).is_zero()) {
        return Err(Error::Precondition(format!(
            "{omega} is at distance 0 from {}",
            embedded[pos].0
        )));
    }
    let to_omega: Vec<Rat> = idx.iter().map(|&a| target.dist(a, w)).collect();
    let r = *to_omega.iter().min().unwrap();
    let p = to_omega.iter().position(|&v| v == r).unwrap();

    let nearest: Vec<usize> = (0..embedded.len()).filter(|&a| to_omega[a] == r).collect();
    let family = nearest.iter().map(|&a| embedded[a].1.clone()).collect();
    let pivot = nearest.iter().position(|&a| a == p).unwrap();
    let g = attach_function(&AttachRequest::new(family, pivot, r)?)?;

    for (a, (label, f)) in embedded.iter().enumerate() {
        let got = nabla_sup(f, &g);
        if got != to_omega[a] {
            return Err(Error::Construction(format!(
                "∇({label}, {omega}) came out {got}, wanted {}",
                to_omega[a]
            )));
        }
    }
    Ok(g)
}

/// Embeds a strict space point by point, starting from `seed` for the first point.
pub fn embed_space(space: &FiniteUltraSpace, seed: &StepFunction) -> Result<Vec<(String, StepFunction)>> {
    let space = space.with_strict(true)?;
    seed.range_set().check_same(space.range_set())?;
    if !seed.is_anchored() {
        return Err(Error::Precondition("seed must attain 0".into()));
    }
    let mut embedded = vec![(space.label(0).to_string(), seed.clone())];
    for label in &space.labels()[1..] {
        let g = extend_function(&embedded, &space, label)?;
        embedded.push((label.clone(), g));
    }
    check_realizes(&embedded, &space)?;
    Ok(embedded)
}
