use std::collections::HashSet;
use std::fmt;

use crate::cantor::fields_with_columns;
use crate::error::{Error, ParseError, Result};
use crate::ultra_core::{RangeSet, Rat};

/// A finite (pseudo-)ultrametric space stored as a full symmetric matrix.
///
/// [`FiniteUltraSpace::new`] only admits spaces that pass [`validate`];
/// [`FiniteUltraSpace::unchecked`] checks shape alone so that arbitrary
/// matrices can be handed to the validators.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteUltraSpace {
    labels: Vec<String>,
    dist: Vec<Rat>,
    strict: bool,
    range: RangeSet,
}

/// Outcome of a validation pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(Violation),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

/// First defect found, by point index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonzeroDiagonal { x: usize },
    Asymmetric { x: usize, y: usize },
    OutsideRange { x: usize, y: usize },
    /// `d(x, y) > d(x, z) ∨ d(z, y)`.
    StrongTriangle { x: usize, y: usize, z: usize },
    /// `d(x, z) < d(z, y)` but `d(z, y) ≠ d(x, y)`.
    Isosceles { x: usize, y: usize, z: usize },
    /// Distinct points at distance 0 in a strict space.
    ZeroDistance { x: usize, y: usize },
}

impl Violation {
    pub fn describe(&self, space: &FiniteUltraSpace) -> String {
        let l = |i: usize| space.label(i);
        match *self {
            Violation::NonzeroDiagonal { x } => format!("nonzero diagonal at {}", l(x)),
            Violation::Asymmetric { x, y } => format!("asymmetric pair ({}, {})", l(x), l(y)),
            Violation::OutsideRange { x, y } => format!(
                "distance {} between {} and {} is outside the range set",
                space.dist(x, y),
                l(x),
                l(y)
            ),
            Violation::StrongTriangle { x, y, z } => format!(
                "strong triangle inequality fails on triple ({}, {}, {}): d({0},{1}) = {} > {}",
                l(x),
                l(y),
                l(z),
                space.dist(x, y),
                space.dist(x, z).max(space.dist(z, y))
            ),
            Violation::Isosceles { x, y, z } => format!(
                "isosceles property fails on triple ({}, {}, {})",
                l(x),
                l(y),
                l(z)
            ),
            Violation::ZeroDistance { x, y } => {
                format!("distinct points {} and {} at distance 0 in a strict space", l(x), l(y))
            }
        }
    }
}

impl FiniteUltraSpace {
    /// Checks shape and labels only.
    pub fn unchecked(
        labels: Vec<String>,
        matrix: Vec<Vec<Rat>>,
        strict: bool,
        range: RangeSet,
    ) -> Result<FiniteUltraSpace> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidSpace("no points".into()));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if label.is_empty() || label.contains(char::is_whitespace) || label.starts_with('#') {
                return Err(Error::InvalidSpace(format!("bad label `{label}`")));
            }
            if !seen.insert(label.as_str()) {
                return Err(Error::InvalidSpace(format!("duplicate label `{label}`")));
            }
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidSpace(format!("matrix is not {n}x{n}")));
        }
        Ok(FiniteUltraSpace {
            labels,
            dist: matrix.into_iter().flatten().collect(),
            strict,
            range,
        })
    }

    /// Builds a space and rejects it unless [`validate`] accepts.
    pub fn new(labels: Vec<String>, matrix: Vec<Vec<Rat>>, strict: bool, range: RangeSet) -> Result<FiniteUltraSpace> {
        let space = FiniteUltraSpace::unchecked(labels, matrix, strict, range)?;
        space.ensure_valid()?;
        Ok(space)
    }

    /// Builds a validated space from a distance function on indices.
    pub fn from_fn(
        labels: Vec<String>,
        strict: bool,
        range: RangeSet,
        d: impl Fn(usize, usize) -> Rat,
    ) -> Result<FiniteUltraSpace> {
        let n = labels.len();
        let matrix = (0..n).map(|i| (0..n).map(|j| d(i, j)).collect()).collect();
        FiniteUltraSpace::new(labels, matrix, strict, range)
    }

    /// Zero pseudo-metric.
    pub fn zero(labels: Vec<String>, range: RangeSet) -> Result<FiniteUltraSpace> {
        FiniteUltraSpace::from_fn(labels, false, range, |_, _| Rat::ZERO)
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        match validate(self) {
            Verdict::Accept => Ok(()),
            Verdict::Reject(v) => Err(Error::InvalidSpace(v.describe(self))),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn range_set(&self) -> &RangeSet {
        &self.range
    }

    pub fn dist(&self, x: usize, y: usize) -> Rat {
        self.dist[x * self.len() + y]
    }

    pub fn row(&self, x: usize) -> &[Rat] {
        let n = self.len();
        &self.dist[x * n..(x + 1) * n]
    }

    pub fn matrix(&self) -> Vec<Vec<Rat>> {
        (0..self.len()).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn max_distance(&self) -> Rat {
        self.dist.iter().copied().max().unwrap_or(Rat::ZERO)
    }

    pub fn diameter(&self, points: &[usize]) -> Rat {
        points
            .iter()
            .flat_map(|&x| points.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.dist(x, y))
            .max()
            .unwrap_or(Rat::ZERO)
    }

    /// Same matrix, different strictness flag. Re-validated.
    pub fn with_strict(&self, strict: bool) -> Result<FiniteUltraSpace> {
        let space = FiniteUltraSpace {
            strict,
            ..self.clone()
        };
        space.ensure_valid()?;
        Ok(space)
    }

    /// Restriction to `points`, in the given order.
    pub fn subspace(&self, points: &[usize]) -> FiniteUltraSpace {
        FiniteUltraSpace {
            labels: points.iter().map(|&i| self.labels[i].clone()).collect(),
            dist: points
                .iter()
                .flat_map(|&x| points.iter().map(move |&y| (x, y)))
                .map(|(x, y)| self.dist(x, y))
                .collect(),
            strict: self.strict,
            range: self.range.clone(),
        }
    }

    /// Closed ball `{x | d(x, a) ≤ r}` by index.
    pub fn ball_at(&self, a: usize, r: Rat) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.dist(a, x) <= r).collect()
    }

    /// Sphere `{x | d(x, a) = r}` by index.
    pub fn sphere_at(&self, a: usize, r: Rat) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.dist(a, x) == r).collect()
    }

    pub fn ball(&self, a: &str, r: Rat) -> Result<Vec<usize>> {
        Ok(self.ball_at(self.index_of(a)?, r))
    }

    pub fn sphere(&self, a: &str, r: Rat) -> Result<Vec<usize>> {
        Ok(self.sphere_at(self.index_of(a)?, r))
    }

    pub(crate) fn same_carrier(&self, other: &FiniteUltraSpace) -> Result<()> {
        if self.labels != other.labels {
            return Err(Error::CarrierMismatch(format!(
                "[{}] vs [{}]",
                self.labels.join(" "),
                other.labels.join(" ")
            )));
        }
        self.range.check_same(&other.range)
    }

    /// Parses the matrix text format: a line of labels followed by the strict
    /// lower triangle, row `i` holding `d(i, 0) … d(i, i-1)`.
    ///
    /// With `range = None` the range set is the entries together with 0.
    pub fn parse(text: &str, strict: bool, range: Option<&RangeSet>) -> Result<FiniteUltraSpace> {
        let space = FiniteUltraSpace::parse_unchecked(text, strict, range)?;
        space.ensure_valid()?;
        Ok(space)
    }

    /// Like [`parse`](Self::parse) but skips metric validation, so that the
    /// result can be handed to [`validate`].
    pub fn parse_unchecked(text: &str, strict: bool, range: Option<&RangeSet>) -> Result<FiniteUltraSpace> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, raw)| (n + 1, raw.split('#').next().unwrap()))
            .filter(|(_, content)| !content.trim().is_empty());

        let (label_line, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(1, 1, "expected a line of point labels"))?;
        let labels: Vec<String> = header.split_whitespace().map(str::to_string).collect();
        let n = labels.len();
        let mut seen = HashSet::new();
        for (col, label) in fields_with_columns(header) {
            if !seen.insert(label) {
                return Err(ParseError::new(label_line, col, format!("duplicate label `{label}`")).into());
            }
        }

        let mut matrix = vec![vec![Rat::ZERO; n]; n];
        let mut last_line = label_line;
        for i in 1..n {
            let (line, content) = lines.next().ok_or_else(|| {
                ParseError::new(last_line + 1, 1, format!("expected row {} with {} entries", i + 1, i))
            })?;
            last_line = line;
            let fields: Vec<(usize, &str)> = fields_with_columns(content).collect();
            if fields.len() != i {
                let column = fields.get(i).map_or(content.trim_end().len() + 1, |f| f.0);
                return Err(ParseError::new(
                    line,
                    column,
                    format!("row {} needs {} entries, found {}", i + 1, i, fields.len()),
                )
                .into());
            }
            for (j, (col, text)) in fields.into_iter().enumerate() {
                let value: Rat = text.parse().map_err(|e: ParseError| e.at_line(line, col - 1))?;
                if let Some(range) = range {
                    if !range.contains(value) {
                        return Err(ParseError::new(
                            line,
                            col,
                            format!("value {value} is outside the range set {range}"),
                        )
                        .into());
                    }
                }
                matrix[i][j] = value;
                matrix[j][i] = value;
            }
        }
        if let Some((line, content)) = lines.next() {
            return Err(ParseError::new(line, content.len() - content.trim_start().len() + 1, "unexpected extra row").into());
        }
        let range = match range {
            Some(r) => r.clone(),
            None => RangeSet::from_values(matrix.iter().flatten().copied()),
        };
        FiniteUltraSpace::unchecked(labels, matrix, strict, range)
    }
}

impl fmt::Display for FiniteUltraSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.labels.join(" "))?;
        for i in 1..self.len() {
            let row: Vec<String> = (0..i).map(|j| self.dist(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteUltraSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteUltraSpace(strict={}, range={})\n{}", self.strict, self.range, self)
    }
}

fn structural(space: &FiniteUltraSpace) -> Option<Violation> {
    let n = space.len();
    for x in 0..n {
        if !space.dist(x, x).is_zero() {
            return Some(Violation::NonzeroDiagonal { x });
        }
    }
    for x in 0..n {
        for y in 0..n {
            if space.dist(x, y) != space.dist(y, x) {
                return Some(Violation::Asymmetric { x, y });
            }
            if !space.range.contains(space.dist(x, y)) {
                return Some(Violation::OutsideRange { x, y });
            }
            if space.strict && x != y && space.dist(x, y).is_zero() {
                return Some(Violation::ZeroDistance { x, y });
            }
        }
    }
    None
}

/// Checks every invariant, reporting the first strong-triangle violation as
/// a triple `(x, y, z)` with `d(x, y) > d(x, z) ∨ d(z, y)`.
pub fn validate(space: &FiniteUltraSpace) -> Verdict {
    if let Some(v) = structural(space) {
        return Verdict::Reject(v);
    }
    let n = space.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if space.dist(x, y) > space.dist(x, z).max(space.dist(z, y)) {
                    return Verdict::Reject(Violation::StrongTriangle { x, y, z });
                }
            }
        }
    }
    Verdict::Accept
}

/// Same structural checks as [`validate`], but the metric condition is the
/// isosceles form: `d(x, z) < d(z, y)` forces `d(z, y) = d(x, y)`.
pub fn validate_isosceles(space: &FiniteUltraSpace) -> Verdict {
    if let Some(v) = structural(space) {
        return Verdict::Reject(v);
    }
    let n = space.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if space.dist(x, z) < space.dist(z, y) && space.dist(z, y) != space.dist(x, y) {
                    return Verdict::Reject(Violation::Isosceles { x, y, z });
                }
            }
        }
    }
    Verdict::Accept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(n: usize, entries: &[(usize, usize, u64)]) -> FiniteUltraSpace {
        let labels = ["a", "b", "c", "d", "e"][..n].iter().map(|s| s.to_string()).collect();
        let mut m = vec![vec![Rat::ZERO; n]; n];
        for &(i, j, v) in entries {
            m[i][j] = v.into();
            m[j][i] = v.into();
        }
        FiniteUltraSpace::unchecked(labels, m, true, RangeSet::integers(3)).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&raw(3, &[(0, 1, 1), (0, 2, 1), (1, 2, 1)])).is_accept());
        let bad = raw(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 3)]);
        assert_eq!(validate(&bad), Verdict::Reject(Violation::StrongTriangle { x: 0, y: 2, z: 1 }));
        assert!(validate(&raw(1, &[])).is_accept());
    }

    #[test]
    fn isosceles_examples() {
        assert!(validate_isosceles(&raw(3, &[(0, 1, 1), (0, 2, 1), (1, 2, 1)])).is_accept());
        assert!(validate_isosceles(&raw(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 2)])).is_accept());
        assert!(!validate_isosceles(&raw(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)])).is_accept());
    }

    #[test]
    fn structural_defects() {
        let mut s = raw(2, &[(0, 1, 1)]);
        s.dist[1] = 2.into();
        assert_eq!(validate(&s), Verdict::Reject(Violation::Asymmetric { x: 0, y: 1 }));
        let s = raw(2, &[]);
        assert_eq!(validate(&s), Verdict::Reject(Violation::ZeroDistance { x: 0, y: 1 }));
        assert!(validate(&FiniteUltraSpace { strict: false, ..s }).is_accept());
        let mut s = raw(2, &[(0, 1, 1)]);
        s.dist[0] = 1.into();
        assert_eq!(validate(&s), Verdict::Reject(Violation::NonzeroDiagonal { x: 0 }));
        let s = FiniteUltraSpace { range: RangeSet::integers(1), ..raw(2, &[(0, 1, 2)]) };
        assert_eq!(validate(&s), Verdict::Reject(Violation::OutsideRange { x: 0, y: 1 }));
    }

    #[test]
    fn balls_and_spheres() {
        let s = raw(3, &[(0, 1, 1), (0, 2, 2), (1, 2, 2)]);
        assert_eq!(s.ball("a", 3.into()).unwrap(), [0, 1, 2]);
        assert_eq!(s.ball("a", Rat::ZERO).unwrap(), [0]);
        assert_eq!(s.sphere("a", 2.into()).unwrap(), [2]);
        assert_eq!(s.ball("b", 1.into()).unwrap(), [0, 1]);
        assert!(matches!(s.ball("z", 1.into()), Err(Error::UnknownPoint(_))));
    }

    #[test]
    fn matrix_text() {
        let s = FiniteUltraSpace::parse("a b c\n1\n2 2\n", true, None).unwrap();
        assert_eq!(s.dist(0, 1), 1.into());
        assert_eq!(s.dist(2, 1), 2.into());
        assert_eq!(s.range_set().to_string(), "0,1,2");
        assert_eq!(s.to_string(), "a b c\n1\n2 2\n");
        assert_eq!(FiniteUltraSpace::parse(&s.to_string(), true, None).unwrap(), s);

        let single = FiniteUltraSpace::parse("a\n", true, None).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single.to_string(), "a\n");
    }

    #[test]
    fn matrix_text_errors() {
        let err = |text: &str| match FiniteUltraSpace::parse(text, true, Some(&RangeSet::integers(3))) {
            Err(Error::Parse(p)) => (p.line, p.column),
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("a b c\n1\n2 x\n"), (3, 3));
        assert_eq!(err("a b c\n1\n2\n"), (3, 2));
        assert_eq!(err("a b\n1 1\n"), (2, 3));
        assert_eq!(err("a b\n"), (2, 1));
        assert_eq!(err("a b\n7\n"), (2, 1));
        assert_eq!(err("a a\n1\n"), (1, 3));
        assert_eq!(err("a b\n1\n1\n"), (3, 1));
        assert_eq!(err(""), (1, 1));

        let violation = FiniteUltraSpace::parse("a b c\n1\n3 1\n", true, None).unwrap_err();
        assert!(violation.to_string().contains("(a, c, b)"), "{violation}");
        assert!(FiniteUltraSpace::parse("a b\n0\n", true, None).is_err());
        assert!(FiniteUltraSpace::parse("a b\n0\n", false, None).is_ok());
    }
}
