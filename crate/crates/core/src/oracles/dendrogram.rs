use super::Lcg;
use crate::error::{Error, Result};
use crate::finite_ultra::FiniteUltraSpace;
use crate::ultra_core::{RangeSet, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DendrogramNode {
    Leaf(usize),
    Merge { level: Rat, children: Vec<DendrogramNode> },
}

/// Rooted merge tree over labelled leaves. Levels strictly decrease towards
/// the leaves, so the level of the lowest common ancestor is a strict ultrametric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dendrogram {
    labels: Vec<String>,
    root: DendrogramNode,
    range: RangeSet,
}

impl Dendrogram {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn root(&self) -> &DendrogramNode {
        &self.root
    }

    /// Level of the lowest common ancestor of every pair.
    pub fn to_space(&self) -> Result<FiniteUltraSpace> {
        let n = self.labels.len();
        let mut m = vec![vec![Rat::ZERO; n]; n];
        fn leaves(node: &DendrogramNode, out: &mut Vec<usize>) {
            match node {
                DendrogramNode::Leaf(i) => out.push(*i),
                DendrogramNode::Merge { children, .. } => children.iter().for_each(|c| leaves(c, out)),
            }
        }
        fn fill(node: &DendrogramNode, m: &mut [Vec<Rat>]) {
            if let DendrogramNode::Merge { level, children } = node {
                let groups: Vec<Vec<usize>> = children
                    .iter()
                    .map(|c| {
                        let mut v = Vec::new();
                        leaves(c, &mut v);
                        v
                    })
                    .collect();
                for (a, ga) in groups.iter().enumerate() {
                    for gb in &groups[a + 1..] {
                        for &x in ga {
                            for &y in gb {
                                m[x][y] = *level;
                                m[y][x] = *level;
                            }
                        }
                    }
                }
                children.iter().for_each(|c| fill(c, m));
            }
        }
        fill(&self.root, &mut m);
        FiniteUltraSpace::new(self.labels.clone(), m, true, self.range.clone())
    }
}

/// Default labels `p0, p1, …`.
pub fn point_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

/// Reproducible random dendrogram on `n` leaves with levels from the positive
/// part of `range`.
///
/// Each internal node picks a level below its parent's. A node at the lowest
/// available level merges all its leaves at once; otherwise the leaves are
/// shuffled and dealt into a random number (at least two) of non-empty groups.
pub fn random_dendrogram(n: usize, range: &RangeSet, seed: u64) -> Result<Dendrogram> {
    if n == 0 {
        return Err(Error::Precondition("need at least one point".into()));
    }
    if range.len() < 2 {
        return Err(Error::Precondition("range set needs a positive value".into()));
    }
    let mut rng = Lcg::new(seed);
    let points: Vec<usize> = (0..n).collect();
    let root = grow(&points, range.positive(), &mut rng);
    Ok(Dendrogram {
        labels: point_labels(n),
        root,
        range: range.clone(),
    })
}

fn grow(points: &[usize], levels: &[Rat], rng: &mut Lcg) -> DendrogramNode {
    if let [single] = points {
        return DendrogramNode::Leaf(*single);
    }
    let li = rng.below(levels.len());
    let level = levels[li];
    if li == 0 {
        return DendrogramNode::Merge {
            level,
            children: points.iter().map(|&p| DendrogramNode::Leaf(p)).collect(),
        };
    }
    let mut shuffled = points.to_vec();
    rng.shuffle(&mut shuffled);
    let k = rng.between(2, points.len());
    let mut groups: Vec<Vec<usize>> = shuffled[..k].iter().map(|&p| vec![p]).collect();
    for &p in &shuffled[k..] {
        let g = rng.below(k);
        groups[g].push(p);
    }
    for g in &mut groups {
        g.sort();
    }
    groups.sort();
    DendrogramNode::Merge {
        level,
        children: groups.iter().map(|g| grow(g, &levels[..li], rng)).collect(),
    }
}

/// Every strict ultrametric on `n` labelled points with values in `range`,
/// by filtering all symmetric matrices with positive off-diagonal entries.
pub fn all_strict_spaces(n: usize, range: &RangeSet) -> Result<Vec<FiniteUltraSpace>> {
    let positive = range.positive();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = (positive.len() as u128).checked_pow(pairs.len() as u32).unwrap_or(u128::MAX);
    if total > super::DEFAULT_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget: super::DEFAULT_BUDGET,
        });
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; pairs.len()];
    loop {
        let mut m = vec![vec![Rat::ZERO; n]; n];
        for (&(i, j), &d) in pairs.iter().zip(&digits) {
            m[i][j] = positive[d];
            m[j][i] = positive[d];
        }
        if let Ok(space) = FiniteUltraSpace::new(point_labels(n), m, true, range.clone()) {
            out.push(space);
        }
        let mut carry = true;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < positive.len() {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            return Ok(out);
        }
    }
}
