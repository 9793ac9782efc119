use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};

/// A clopen cell of the Cantor set: all infinite binary words with this prefix.
///
/// The empty word is the whole space and is written `-`. The derived order
/// is lexicographic with a prefix sorting before its extensions.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellPath(Vec<bool>);

impl CellPath {
    pub fn root() -> CellPath {
        CellPath(Vec::new())
    }

    pub fn from_bits(bits: Vec<bool>) -> CellPath {
        CellPath(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn child(&self, bit: bool) -> CellPath {
        let mut bits = self.0.clone();
        bits.push(bit);
        CellPath(bits)
    }

    pub fn children(&self) -> [CellPath; 2] {
        [self.child(false), self.child(true)]
    }

    /// `self ⊇ other` as subsets of the Cantor set.
    pub fn contains(&self, other: &CellPath) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Two cells are nested or disjoint.
    pub fn is_disjoint(&self, other: &CellPath) -> bool {
        !self.contains(other) && !other.contains(self)
    }
}

impl fmt::Display for CellPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for CellPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CellPath {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "-" {
            return Ok(CellPath::root());
        }
        if s.is_empty() {
            return Err(ParseError::new(1, 1, "empty cell; write `-` for the whole space"));
        }
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(ParseError::new(1, i + 1, format!("unexpected `{c}` in cell path"))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(CellPath)
    }
}

/// A finite clopen partition of the Cantor set: prefix-free and exhaustive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    cells: Vec<CellPath>,
}

impl Partition {
    pub fn new(mut cells: Vec<CellPath>) -> Result<Partition> {
        cells.sort();
        for w in cells.windows(2) {
            if w[0].contains(&w[1]) {
                return Err(Error::InvalidPartition(format!(
                    "cells {} and {} overlap",
                    w[0], w[1]
                )));
            }
        }
        if let Some(gap) = first_gap(&cells, &CellPath::root()) {
            return Err(Error::InvalidPartition(format!("cell {gap} is not covered")));
        }
        Ok(Partition { cells })
    }

    pub fn root() -> Partition {
        Partition {
            cells: vec![CellPath::root()],
        }
    }

    /// All `2^depth` words of length `depth`.
    pub fn uniform(depth: usize) -> Partition {
        let mut cells = vec![CellPath::root()];
        for _ in 0..depth {
            cells = cells.iter().flat_map(CellPath::children).collect();
        }
        Partition { cells }
    }

    /// Cells `0, 10, 110, …, 1^(n-1)0, 1^n`: the one-point compactification
    /// of the first `n` naturals, with `1^n` standing for the tail.
    pub fn chain(n: usize) -> Partition {
        let mut cells = Vec::with_capacity(n + 1);
        let mut prefix = CellPath::root();
        for _ in 0..n {
            cells.push(prefix.child(false));
            prefix = prefix.child(true);
        }
        cells.push(prefix);
        cells.sort();
        Partition { cells }
    }

    pub fn cells(&self) -> &[CellPath] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn max_depth(&self) -> usize {
        self.cells.iter().map(CellPath::depth).max().unwrap_or(0)
    }

    /// The unique cell containing the point whose binary expansion starts with `word`.
    /// `None` if `word` is too short to decide.
    pub fn locate(&self, word: &[bool]) -> Option<usize> {
        self.cells.iter().position(|c| word.starts_with(c.bits()))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.cells).finish()
    }
}

/// Sorted prefix-free `cells`, all inside `region`: returns a sub-cell of
/// `region` they leave uncovered.
fn first_gap(cells: &[CellPath], region: &CellPath) -> Option<CellPath> {
    match cells {
        [] => Some(region.clone()),
        [only] if only == region => None,
        _ => {
            let [left, right] = region.children();
            let split = cells.partition_point(|c| !right.contains(c));
            first_gap(&cells[..split], &left).or_else(|| first_gap(&cells[split..], &right))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(words: &[&str]) -> Vec<CellPath> {
        words.iter().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn nested_or_disjoint() {
        let [a, b, c]: [CellPath; 3] = cells(&["0", "01", "1"]).try_into().unwrap();
        assert!(a.contains(&b));
        assert!(!b.contains(&a));
        assert!(a.is_disjoint(&c));
        assert!(CellPath::root().contains(&c));
    }

    #[test]
    fn partition_checks() {
        assert!(Partition::new(cells(&["-"])).is_ok());
        assert!(Partition::new(cells(&["1", "00", "01"])).is_ok());
        assert!(matches!(
            Partition::new(cells(&["0", "00", "1"])),
            Err(Error::InvalidPartition(_))
        ));
        let err = Partition::new(cells(&["00", "1"])).unwrap_err().to_string();
        assert!(err.contains("01"), "{err}");
        assert!(Partition::new(vec![]).is_err());
    }

    #[test]
    fn uniform_and_chain_are_partitions() {
        for d in 0..5 {
            let p = Partition::uniform(d);
            assert_eq!(p.len(), 1 << d);
            assert!(Partition::new(p.cells().to_vec()).is_ok());
        }
        for n in 0..6 {
            let p = Partition::chain(n);
            assert_eq!(p.len(), n + 1);
            assert!(Partition::new(p.cells().to_vec()).is_ok());
        }
    }

    #[test]
    fn cell_text() {
        assert_eq!("-".parse::<CellPath>().unwrap(), CellPath::root());
        assert_eq!("0110".parse::<CellPath>().unwrap().to_string(), "0110");
        assert_eq!("012".parse::<CellPath>().unwrap_err().column, 3);
        assert!("".parse::<CellPath>().is_err());
    }
}
