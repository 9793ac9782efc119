use std::fmt;
use std::str::FromStr;

use super::Rat;
use crate::error::{Error, ParseError, Result};

/// Finite set of admissible distance values. Always contains 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RangeSet {
    values: Vec<Rat>,
}

impl RangeSet {
    /// `values` must be strictly increasing and start with 0.
    pub fn new(values: Vec<Rat>) -> Result<RangeSet> {
        match values.first() {
            None => return Err(Error::InvalidRangeSet("empty".into())),
            Some(first) if !first.is_zero() => {
                return Err(Error::InvalidRangeSet(format!(
                    "first value must be 0, found {first}"
                )))
            }
            _ => {}
        }
        if let Some(w) = values.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidRangeSet(format!(
                "values not strictly increasing at {} then {}",
                w[0], w[1]
            )));
        }
        Ok(RangeSet { values })
    }

    /// Sorts, deduplicates and adds 0.
    pub fn from_values<I: IntoIterator<Item = Rat>>(values: I) -> RangeSet {
        let mut values: Vec<Rat> = values.into_iter().chain([Rat::ZERO]).collect();
        values.sort();
        values.dedup();
        RangeSet { values }
    }

    pub fn integers(max: u64) -> RangeSet {
        RangeSet {
            values: (0..=max).map(Rat::integer).collect(),
        }
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn positive(&self) -> &[Rat] {
        &self.values[1..]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, value: Rat) -> bool {
        self.values.binary_search(&value).is_ok()
    }

    pub fn max(&self) -> Rat {
        *self.values.last().unwrap()
    }

    pub(crate) fn check(&self, value: Rat) -> Result<()> {
        if self.contains(value) {
            Ok(())
        } else {
            Err(Error::ValueOutsideRange {
                value: value.to_string(),
                range: self.to_string(),
            })
        }
    }

    pub(crate) fn check_same(&self, other: &RangeSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RangeMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl fmt::Display for RangeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RangeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RangeSet({self})")
    }
}

impl FromStr for RangeSet {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let mut values = Vec::new();
        let mut column = 1;
        for part in s.split(',') {
            let trimmed = part.trim_start();
            let lead = part.len() - trimmed.len();
            let value: Rat = trimmed
                .trim_end()
                .parse()
                .map_err(|e: ParseError| e.at_line(1, column - 1 + lead))?;
            if values.is_empty() && !value.is_zero() {
                return Err(ParseError::new(1, column + lead, "range set must start with 0"));
            }
            if values.last().is_some_and(|last| *last >= value) {
                return Err(ParseError::new(1, column + lead, "range set values must be strictly increasing"));
            }
            values.push(value);
            column += part.len() + 1;
        }
        Ok(RangeSet { values })
    }
}

/// Positive values in strictly decreasing order; the terminal 0 is implicit.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TenuousList {
    values: Vec<Rat>,
}

impl TenuousList {
    pub fn new() -> TenuousList {
        TenuousList::default()
    }

    /// Drops zeros and duplicates, then orders decreasingly.
    pub fn from_values<I: IntoIterator<Item = Rat>>(values: I) -> TenuousList {
        let mut values: Vec<Rat> = values.into_iter().filter(Rat::is_positive).collect();
        values.sort_by(|a, b| b.cmp(a));
        values.dedup();
        TenuousList { values }
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, value: Rat) -> bool {
        value.is_zero() || self.values.contains(&value)
    }

    /// Least positive member.
    pub fn min_positive(&self) -> Option<Rat> {
        self.values.last().copied()
    }

    /// Members together with the terminal 0, ascending.
    pub fn ascending_with_zero(&self) -> impl Iterator<Item = Rat> + '_ {
        std::iter::once(Rat::ZERO).chain(self.values.iter().rev().copied())
    }
}

impl fmt::Debug for TenuousList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.values).finish()
    }
}

/// The nearly discrete ultrametric on values: `x ∨ y` when they differ, 0 otherwise.
pub fn nearly_discrete(x: Rat, y: Rat) -> Rat {
    if x == y {
        Rat::ZERO
    } else {
        x.max(y)
    }
}

/// Least `ε` with `x ≤ y ∨ ε` and `y ≤ x ∨ ε`. The infimum is attained in `{0, x, y}`.
pub fn sep_infimum(x: Rat, y: Rat) -> Rat {
    let mut candidates = [Rat::ZERO, x, y];
    candidates.sort();
    candidates
        .into_iter()
        .find(|&eps| x <= y.max(eps) && y <= x.max(eps))
        .expect("max(x, y) always separates")
}

pub fn tenuous_union(a: &TenuousList, b: &TenuousList) -> TenuousList {
    let mut values = Vec::with_capacity(a.values.len() + b.values.len());
    let (mut i, mut j) = (0, 0);
    while i < a.values.len() || j < b.values.len() {
        let next = match (a.values.get(i), b.values.get(j)) {
            (Some(&x), Some(&y)) if x == y => {
                i += 1;
                j += 1;
                x
            }
            (Some(&x), Some(&y)) if x > y => {
                i += 1;
                x
            }
            (Some(_), Some(&y)) => {
                j += 1;
                y
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        values.push(next);
    }
    TenuousList { values }
}
