//! Decreasing sequences tending to 0, viewed as maps on the one-point
//! compactification of the naturals.

use std::fmt;
use std::str::FromStr;

use crate::cantor::{Partition, StepFunction};
use crate::error::{Error, ParseError, Result};
use crate::finite_ultra::FiniteUltraSpace;
use crate::ultra_core::{RangeSet, Rat};

/// Weakly decreasing sequence with a zero tail; stores the positive prefix.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct DecreasingSequence {
    entries: Vec<Rat>,
}

impl DecreasingSequence {
    pub fn new(mut entries: Vec<Rat>) -> Result<DecreasingSequence> {
        if let Some(w) = entries.windows(2).find(|w| w[1] > w[0]) {
            return Err(Error::Precondition(format!("sequence increases from {} to {}", w[0], w[1])));
        }
        while entries.last().is_some_and(Rat::is_zero) {
            entries.pop();
        }
        Ok(DecreasingSequence { entries })
    }

    pub fn zero() -> DecreasingSequence {
        DecreasingSequence::default()
    }

    /// Positive entries; everything after them is 0.
    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn get(&self, k: usize) -> Rat {
        self.entries.get(k).copied().unwrap_or(Rat::ZERO)
    }

    /// Value at index `k` of `0, 10, 110, …` with `1^len` as the tail cell.
    pub fn chain_encoding(&self, len: usize, range: &RangeSet) -> Result<StepFunction> {
        if len < self.entries.len() {
            return Err(Error::Precondition("chain shorter than the sequence".into()));
        }
        let values = (0..=len).map(|k| self.get(k)).collect();
        StepFunction::on_partition(Partition::chain(len), values, range.clone())
    }
}

impl fmt::Display for DecreasingSequence {
    /// Comma-separated, always ending in the terminal `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.entries {
            write!(f, "{v},")?;
        }
        f.write_str("0")
    }
}

impl fmt::Debug for DecreasingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self},…)")
    }
}

impl FromStr for DecreasingSequence {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut entries = Vec::new();
        let mut column = 1;
        for part in s.trim().split(',') {
            let value: Rat = part.trim().parse().map_err(|e: ParseError| e.at_line(1, column - 1))?;
            if entries.last().is_some_and(|&last| value > last) {
                return Err(ParseError::new(1, column, "sequence must be decreasing"));
            }
            entries.push(value);
            column += part.len() + 1;
        }
        Ok(DecreasingSequence::new(entries).expect("checked decreasing"))
    }
}

/// `max{x_k ∨ y_k : x_k ≠ y_k}`, or 0 for equal sequences. For decreasing
/// sequences this is attained at the first index where they differ.
pub fn vestfrid_distance(x: &DecreasingSequence, y: &DecreasingSequence) -> Rat {
    let len = x.entries.len().max(y.entries.len());
    (0..len)
        .filter(|&k| x.get(k) != y.get(k))
        .map(|k| x.get(k).max(y.get(k)))
        .max()
        .unwrap_or(Rat::ZERO)
}

/// Embeds a strict space. The new point copies its nearest neighbour's
/// entries above `r`, then repeats `r` a number of times not used by any
/// other point sharing that prefix.
pub fn vestfrid_embed(space: &FiniteUltraSpace) -> Result<Vec<DecreasingSequence>> {
    let space = space.with_strict(true)?;
    let mut seqs = vec![DecreasingSequence::zero()];
    for w in 1..space.len() {
        let to_omega: Vec<Rat> = (0..w).map(|a| space.dist(a, w)).collect();
        let r = *to_omega.iter().min().unwrap();
        let p = to_omega.iter().position(|&v| v == r).unwrap();
        let prefix: Vec<Rat> = seqs[p].entries.iter().copied().take_while(|&v| v > r).collect();
        let m = prefix.len();
        let taken: Vec<usize> = (0..w)
            .filter(|&a| to_omega[a] == r)
            .map(|a| seqs[a].entries[m..].iter().take_while(|&&v| v == r).count())
            .collect();
        let repeats = (1..).find(|c| !taken.contains(c)).unwrap();
        let mut entries = prefix;
        entries.extend(std::iter::repeat_n(r, repeats));
        let g = DecreasingSequence::new(entries)?;
        for (a, s) in seqs.iter().enumerate() {
            let got = vestfrid_distance(s, &g);
            if got != to_omega[a] {
                return Err(Error::Construction(format!(
                    "u({}, {}) came out {got}, wanted {}",
                    space.label(a),
                    space.label(w),
                    to_omega[a]
                )));
            }
        }
        seqs.push(g);
    }
    Ok(seqs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cantor::nabla_sup;

    fn seq(s: &str) -> DecreasingSequence {
        s.parse().unwrap()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(vestfrid_distance(&seq("3,1,0"), &seq("3,1,0")), Rat::ZERO);
        assert_eq!(vestfrid_distance(&seq("3,1,0"), &seq("3,2,0")), 2.into());
        assert_eq!(vestfrid_distance(&seq("3,0"), &seq("2,0")), 3.into());
        assert_eq!(vestfrid_distance(&seq("2,2,1"), &seq("2,2")), 1.into());
    }

    #[test]
    fn text_form() {
        assert_eq!(seq("3,1/2,0,0").to_string(), "3,1/2,0");
        assert_eq!(seq("0").to_string(), "0");
        assert_eq!("3,4".parse::<DecreasingSequence>().unwrap_err().column, 3);
        assert!(DecreasingSequence::new(vec![1.into(), 2.into()]).is_err());
    }

    #[test]
    fn chain_encoding_matches_distance() {
        let range = RangeSet::integers(3);
        let (x, y) = (seq("3,1"), seq("3,2,2"));
        let n = 3;
        let (fx, fy) = (x.chain_encoding(n, &range).unwrap(), y.chain_encoding(n, &range).unwrap());
        assert_eq!(fx.to_string(), "0 3\n10 1\n110 0\n111 0\n");
        assert_eq!(nabla_sup(&fx, &fy), vestfrid_distance(&x, &y));
        assert!(y.chain_encoding(2, &range).is_err());
    }

    #[test]
    fn embed_examples() {
        let r = RangeSet::integers(2);
        let one = FiniteUltraSpace::parse("a\n", true, Some(&r)).unwrap();
        assert_eq!(vestfrid_embed(&one).unwrap(), [DecreasingSequence::zero()]);

        let two = FiniteUltraSpace::parse("a b\n2\n", true, Some(&r)).unwrap();
        let e = vestfrid_embed(&two).unwrap();
        assert_eq!(e[1].to_string(), "2,0");
        assert_eq!(vestfrid_distance(&e[0], &e[1]), 2.into());

        let tri = FiniteUltraSpace::parse("a b c\n1\n2 2\n", true, Some(&r)).unwrap();
        let e = vestfrid_embed(&tri).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(vestfrid_distance(&e[i], &e[j]), tri.dist(i, j));
            }
        }
    }
}
