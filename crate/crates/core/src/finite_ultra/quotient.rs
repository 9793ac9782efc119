use super::FiniteUltraSpace;
use crate::error::Result;
use crate::ultra_core::Rat;

/// Points identified when within distance `r`; classes are the closed `r`-balls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedQuotient {
    pub radius: Rat,
    /// Sorted members; classes ordered by least member.
    pub classes: Vec<Vec<usize>>,
    /// Induced metric on the classes, labelled `{a,b,…}`.
    pub space: FiniteUltraSpace,
}

impl ClosedQuotient {
    pub fn representatives(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.iter().map(|c| c[0])
    }

    /// Same classes and same induced distances.
    pub fn same_as(&self, other: &ClosedQuotient) -> bool {
        self.classes == other.classes && self.space.matrix() == other.space.matrix()
    }
}

/// Closed-ball decomposition at radius `r`, the first point of each ball
/// serving as its representative.
pub fn closed_quotient(space: &FiniteUltraSpace, r: Rat) -> Result<ClosedQuotient> {
    space.ensure_valid()?;
    let mut assigned = vec![false; space.len()];
    let mut classes = Vec::new();
    for p in 0..space.len() {
        if !assigned[p] {
            let class = space.ball_at(p, r);
            for &q in &class {
                assigned[q] = true;
            }
            classes.push(class);
        }
    }
    let labels = classes
        .iter()
        .map(|c| {
            let names: Vec<&str> = c.iter().map(|&i| space.label(i)).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let induced = FiniteUltraSpace::from_fn(labels, true, space.range_set().clone(), |i, j| {
        space.dist(reps[i], reps[j])
    })?;
    Ok(ClosedQuotient {
        radius: r,
        classes,
        space: induced,
    })
}
