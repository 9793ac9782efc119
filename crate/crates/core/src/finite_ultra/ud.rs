//! Distance between two pseudo-ultrametrics on a common finite carrier.

use super::{closed_quotient, FiniteUltraSpace};
use crate::cantor::{CellPath, Partition, StepFunction};
use crate::error::{Error, Result};
use crate::ultra_core::{nearly_discrete, Rat};

/// Largest nearly discrete disagreement `M(d(x, y), e(x, y))` over point pairs.
pub fn ud_direct(d: &FiniteUltraSpace, e: &FiniteUltraSpace) -> Result<Rat> {
    d.same_carrier(e)?;
    let n = d.len();
    Ok((0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| nearly_discrete(d.dist(x, y), e.dist(x, y)))
        .max()
        .unwrap_or(Rat::ZERO))
}

/// Least radius at which both spaces have the same closed quotient.
pub fn ud_via_quotients(d: &FiniteUltraSpace, e: &FiniteUltraSpace) -> Result<Rat> {
    d.same_carrier(e)?;
    let top = d.max_distance().max(e.max_distance());
    for &r in d.range_set().values().iter().take_while(|&&r| r <= top) {
        if closed_quotient(d, r)?.same_as(&closed_quotient(e, r)?) {
            return Ok(r);
        }
    }
    Err(Error::Construction(format!(
        "quotients still differ at radius {top}, the largest distance"
    )))
}

/// The distance matrix as a step function on `X × X`: the pair `(i, j)` is the
/// cell `code(i) ++ code(j)` with fixed-width binary codes. Codes beyond the
/// last point repeat it.
pub fn pair_encoding(space: &FiniteUltraSpace) -> StepFunction {
    let n = space.len();
    let width = usize::BITS as usize - (n - 1).leading_zeros() as usize;
    let code_point = |bits: &[bool]| {
        let code = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        code.min(n - 1)
    };
    let partition = Partition::uniform(2 * width);
    let values = partition
        .cells()
        .iter()
        .map(|cell: &CellPath| {
            let (x, y) = cell.bits().split_at(width);
            space.dist(code_point(x), code_point(y))
        })
        .collect();
    StepFunction::on_partition(partition, values, space.range_set().clone())
        .expect("distances lie in the range set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cantor::nabla_sup;
    use crate::ultra_core::RangeSet;

    fn sp(text: &str) -> FiniteUltraSpace {
        FiniteUltraSpace::parse(text, false, Some(&RangeSet::integers(3))).unwrap()
    }

    #[test]
    fn ud_examples() {
        let d = sp("a b c\n1\n2 2\n");
        assert_eq!(ud_direct(&d, &d).unwrap(), Rat::ZERO);
        assert_eq!(ud_via_quotients(&d, &d).unwrap(), Rat::ZERO);

        let (d2, e2) = (sp("a b\n2\n"), sp("a b\n3\n"));
        assert_eq!(ud_direct(&d2, &e2).unwrap(), 3.into());
        assert_eq!(ud_via_quotients(&d2, &e2).unwrap(), 3.into());

        let e = sp("a b c\n2\n2 2\n");
        assert_eq!(ud_direct(&d, &e).unwrap(), 2.into());
        assert_eq!(ud_via_quotients(&d, &e).unwrap(), 2.into());
    }

    #[test]
    fn mismatched_carriers() {
        let d = sp("a b\n1\n");
        assert!(matches!(ud_direct(&d, &sp("a c\n1\n")), Err(Error::CarrierMismatch(_))));
        let other_range = FiniteUltraSpace::parse("a b\n1\n", false, None).unwrap();
        assert!(matches!(ud_via_quotients(&d, &other_range), Err(Error::RangeMismatch(..))));
    }

    #[test]
    fn pair_encoding_reads_back() {
        let d = sp("a b c\n1\n2 2\n");
        let f = pair_encoding(&d);
        assert_eq!(f.partition().len(), 16);
        assert_eq!(f.eval(&[false, true, true, false]), Some(2.into()));
        assert_eq!(f.eval(&[true, true, false, false]), Some(2.into()));
        let e = sp("a b c\n1\n3 3\n");
        assert_eq!(nabla_sup(&f, &pair_encoding(&e)), ud_direct(&d, &e).unwrap());
        let one = sp("a\n");
        assert_eq!(pair_encoding(&one).partition().len(), 1);
    }
}
