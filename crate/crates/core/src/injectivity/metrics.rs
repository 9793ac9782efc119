//! One-point extension and embedding in the model whose points are
//! pseudo-ultrametrics on the leaves of a Cantor partition.
//!
//! Every metric in a family shares the same leaf labels (cell paths). When a
//! leaf has to be split, all members are lifted together: both children
//! inherit the parent's row and sit at distance 0 from each other, which
//! leaves every pairwise distance between members unchanged.

use crate::cantor::{CellPath, Partition};
use crate::error::{Error, Result};
use crate::finite_ultra::{amalgamate, closed_quotient, ud_direct, AmalgamationSystem, FiniteUltraSpace};
use crate::ultra_core::{RangeSet, Rat};

/// Result of [`attach_metric`].
#[derive(Debug, Clone)]
pub struct MetricAttachment {
    /// The input family, lifted to the (possibly refined) leaf set.
    pub family: Vec<FiniteUltraSpace>,
    /// The new metric.
    pub metric: FiniteUltraSpace,
    /// Leaf whose `r`-sphere separates the new metric from each near member.
    pub focus: usize,
    /// Indices into `family` of the members within `r` of the pivot.
    pub near: Vec<usize>,
}

pub fn leaf_partition(space: &FiniteUltraSpace) -> Result<Partition> {
    let cells = space
        .labels()
        .iter()
        .map(|l| l.parse::<CellPath>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Error::Precondition(format!("leaf labels must be cell paths: {e}")))?;
    let partition = Partition::new(cells)?;
    let sorted: Vec<String> = partition.cells().iter().map(ToString::to_string).collect();
    if sorted != space.labels() {
        return Err(Error::Precondition("leaf labels must be listed in cell order".into()));
    }
    Ok(partition)
}

/// The zero pseudo-metric on the one-leaf carrier `-`.
pub fn zero_leaf_metric(range: &RangeSet) -> FiniteUltraSpace {
    FiniteUltraSpace::zero(vec![CellPath::root().to_string()], range.clone()).expect("zero metric is valid")
}

/// Splits leaf `at` into its two children in every member.
pub fn split_leaf(family: &[FiniteUltraSpace], at: usize) -> Result<Vec<FiniteUltraSpace>> {
    let first = family
        .first()
        .ok_or_else(|| Error::Precondition("empty family".into()))?;
    let cell: CellPath = first.label(at).parse().map_err(|e| Error::Precondition(format!("{e}")))?;
    let mut labels: Vec<String> = first.labels().to_vec();
    let [left, right] = cell.children();
    labels.splice(at..=at, [left.to_string(), right.to_string()]);
    let parent = |i: usize| if i <= at { i } else { i - 1 };
    family
        .iter()
        .map(|m| {
            FiniteUltraSpace::from_fn(labels.clone(), false, m.range_set().clone(), |i, j| {
                m.dist(parent(i), parent(j))
            })
        })
        .collect()
}

fn check_family(family: &[FiniteUltraSpace], pivot: usize) -> Result<()> {
    let zeta = family
        .get(pivot)
        .ok_or_else(|| Error::Precondition(format!("pivot {pivot} is not a family member")))?;
    leaf_partition(zeta)?;
    for m in family {
        ud_direct(m, zeta)?;
    }
    Ok(())
}

/// Produces `g` within `r` of the pivot `ζ` such that, at a focus leaf `p`,
/// the `r`-sphere of `g` differs from the `r`-sphere of every member within
/// `r` of `ζ`.
///
/// The carrier is cut into the closed `r`-balls of `ζ`. The ball around `p`
/// gets the split metric that is 0 inside `N = {p}` and inside its complement
/// and `r` across; the other balls keep `ζ`. Gluing along `ζ`'s distances
/// between basepoints gives `g`. If every other leaf of the ball already lies
/// on some member's `r`-sphere around `p`, the leaf `p` is split first.
pub fn attach_metric(family: &[FiniteUltraSpace], pivot: usize, r: Rat) -> Result<MetricAttachment> {
    check_family(family, pivot)?;
    if r.is_zero() {
        return Err(Error::Precondition("radius must be positive".into()));
    }
    family[pivot].range_set().check(r)?;

    let near: Vec<usize> = (0..family.len())
        .filter(|&h| ud_direct(&family[h], &family[pivot]).map(|v| v <= r).unwrap_or(false))
        .collect();
    let p = 0;
    let free_leaf = |family: &[FiniteUltraSpace]| -> Option<usize> {
        let zeta = &family[pivot];
        zeta.ball_at(p, r).into_iter().find(|&q| {
            q != p && near.iter().all(|&h| family[h].dist(p, q) != r)
        })
    };
    let mut family = family.to_vec();
    if free_leaf(&family).is_none() {
        family = split_leaf(&family, p)?;
    }
    let q = free_leaf(&family)
        .ok_or_else(|| Error::Construction("split leaf did not free a sphere point".into()))?;
    debug_assert_ne!(q, p);

    let zeta = &family[pivot];
    let range = zeta.range_set().clone();
    let quotient = closed_quotient(zeta, r)?;
    let blocks = quotient.classes.clone();
    debug_assert!(blocks[0].contains(&p));
    let basepoints: Vec<usize> = blocks.iter().map(|b| b[0]).collect();

    let mut block_metrics = Vec::with_capacity(blocks.len());
    for (i, block) in blocks.iter().enumerate() {
        let local = zeta.subspace(block);
        if i == 0 {
            // split metric: p against everything else in its ball
            let labels = local.labels().to_vec();
            block_metrics.push(FiniteUltraSpace::from_fn(labels, false, range.clone(), |x, y| {
                if (block[x] == p) == (block[y] == p) {
                    Rat::ZERO
                } else {
                    r
                }
            })?);
        } else {
            block_metrics.push(local);
        }
    }
    let index_metric = quotient.space.clone();
    let system = AmalgamationSystem::new(
        zeta.labels().to_vec(),
        range,
        blocks,
        index_metric,
        block_metrics,
        basepoints,
    )?;
    let g = amalgamate(&system)?;

    if ud_direct(zeta, &g)? > r {
        return Err(Error::Construction("glued metric is farther than r from the pivot".into()));
    }
    let g_sphere = g.sphere_at(p, r);
    if let Some(&h) = near.iter().find(|&&h| family[h].sphere_at(p, r) == g_sphere) {
        return Err(Error::Construction(format!(
            "r-sphere at the focus leaf does not separate member {h}"
        )));
    }
    Ok(MetricAttachment {
        family,
        metric: g,
        focus: p,
        near,
    })
}

/// Embeds a strict space into pseudo-ultrametrics on a refinable leaf set.
/// All returned metrics share one carrier.
pub fn embed_space_into_metrics(space: &FiniteUltraSpace) -> Result<Vec<(String, FiniteUltraSpace)>> {
    let space = space.with_strict(true)?;
    let range = space.range_set();
    let mut metrics = vec![zero_leaf_metric(range)];
    for w in 1..space.len() {
        let to_omega: Vec<Rat> = (0..w).map(|a| space.dist(a, w)).collect();
        let r = *to_omega.iter().min().unwrap();
        let p = to_omega.iter().position(|&v| v == r).unwrap();
        let attached = attach_metric(&metrics, p, r)?;
        metrics = attached.family;
        let g = attached.metric;
        for (a, m) in metrics.iter().enumerate() {
            let got = ud_direct(m, &g)?;
            if got != to_omega[a] {
                return Err(Error::Construction(format!(
                    "UD({}, {}) came out {got}, wanted {}",
                    space.label(a),
                    space.label(w),
                    to_omega[a]
                )));
            }
        }
        metrics.push(g);
    }
    Ok(space.labels().iter().cloned().zip(metrics).collect())
}

/// Pairwise UD distances of labelled leaf metrics.
pub fn metric_distances(points: &[(String, FiniteUltraSpace)], range: &RangeSet) -> Result<FiniteUltraSpace> {
    let labels = points.iter().map(|(l, _)| l.clone()).collect();
    let mut matrix = vec![vec![Rat::ZERO; points.len()]; points.len()];
    for i in 0..points.len() {
        for j in 0..points.len() {
            matrix[i][j] = ud_direct(&points[i].1, &points[j].1)?;
        }
    }
    FiniteUltraSpace::new(labels, matrix, false, range.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_ultra::validate;

    fn leaves4(range: &RangeSet) -> FiniteUltraSpace {
        FiniteUltraSpace::zero(
            ["00", "01", "10", "11"].iter().map(|s| s.to_string()).collect(),
            range.clone(),
        )
        .unwrap()
    }

    #[test]
    fn attach_to_zero_on_four_leaves() {
        let range = RangeSet::integers(2);
        let zeta = leaves4(&range);
        let out = attach_metric(std::slice::from_ref(&zeta), 0, 1.into()).unwrap();
        assert_eq!(out.family[0], zeta, "no refinement needed");
        let g = &out.metric;
        assert_eq!(ud_direct(&zeta, g).unwrap(), 1.into());
        let classes = closed_quotient(g, Rat::ZERO).unwrap().classes;
        assert_eq!(classes, [vec![0], vec![1, 2, 3]]);
        assert!(validate(g).is_accept());
    }

    #[test]
    fn attach_far_members_are_ignored() {
        let range = RangeSet::integers(3);
        let zeta = leaves4(&range);
        let far = FiniteUltraSpace::parse("00 01 10 11\n3\n3 3\n3 3 3\n", false, Some(&range)).unwrap();
        let out = attach_metric(&[zeta.clone(), far], 0, 1.into()).unwrap();
        assert_eq!(out.near, [0]);
        assert!(ud_direct(&zeta, &out.metric).unwrap() <= 1.into());
    }

    #[test]
    fn attach_two_near_members() {
        let range = RangeSet::integers(2);
        let zeta = leaves4(&range);
        let h = FiniteUltraSpace::parse("00 01 10 11\n1\n1 1\n1 1 1\n", false, Some(&range)).unwrap();
        let out = attach_metric(&[zeta, h], 0, 1.into()).unwrap();
        assert_eq!(out.near, [0, 1]);
        // h's 1-sphere at 00 is everything else, so the leaf had to be split
        assert_eq!(out.metric.len(), 5);
        for m in &out.family {
            assert_ne!(m.sphere_at(out.focus, 1.into()), out.metric.sphere_at(out.focus, 1.into()));
            assert_eq!(ud_direct(m, &out.metric).unwrap(), 1.into());
        }
    }

    #[test]
    fn split_leaf_preserves_distances() {
        let range = RangeSet::integers(2);
        let a = FiniteUltraSpace::parse("0 1\n2\n", false, Some(&range)).unwrap();
        let b = FiniteUltraSpace::parse("0 1\n1\n", false, Some(&range)).unwrap();
        let lifted = split_leaf(&[a.clone(), b.clone()], 1).unwrap();
        assert_eq!(lifted[0].labels(), ["0", "10", "11"]);
        assert_eq!(lifted[0].dist(1, 2), Rat::ZERO);
        assert_eq!(lifted[0].dist(0, 2), 2.into());
        assert_eq!(ud_direct(&lifted[0], &lifted[1]).unwrap(), ud_direct(&a, &b).unwrap());
    }

    #[test]
    fn embed_examples() {
        let range = RangeSet::integers(2);
        let one = FiniteUltraSpace::parse("a\n", true, Some(&range)).unwrap();
        let e = embed_space_into_metrics(&one).unwrap();
        assert_eq!(e[0].1, zero_leaf_metric(&range));

        let tri = FiniteUltraSpace::parse("a b c\n1\n2 2\n", true, Some(&range)).unwrap();
        let e = embed_space_into_metrics(&tri).unwrap();
        assert_eq!(metric_distances(&e, &range).unwrap().matrix(), tri.matrix());
        let carrier = e[0].1.labels();
        assert!(e.iter().all(|(_, m)| m.labels() == carrier));
    }

    #[test]
    fn rejects_non_cell_leaves() {
        let range = RangeSet::integers(2);
        let bad = FiniteUltraSpace::zero(vec!["a".into()], range.clone()).unwrap();
        assert!(matches!(attach_metric(&[bad], 0, 1.into()), Err(Error::Precondition(_))));
        let gap = FiniteUltraSpace::zero(vec!["0".into(), "10".into()], range).unwrap();
        assert!(attach_metric(&[gap], 0, 1.into()).is_err());
    }
}
