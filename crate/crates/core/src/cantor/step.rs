use std::fmt;

use super::{CellPath, Partition};
use crate::error::{Error, ParseError, Result};
use crate::ultra_core::{RangeSet, Rat, TenuousList};

/// A locally constant map from the Cantor set into a range set, given by its
/// value on each cell of a finite clopen partition.
///
/// Equality is representation-sensitive; use [`StepFunction::same_function`]
/// for equality as functions.
#[derive(Clone, PartialEq, Eq)]
pub struct StepFunction {
    partition: Partition,
    values: Vec<Rat>,
    range: RangeSet,
}

impl StepFunction {
    pub fn new(pieces: Vec<(CellPath, Rat)>, range: RangeSet) -> Result<StepFunction> {
        let mut pieces = pieces;
        pieces.sort_by(|a, b| a.0.cmp(&b.0));
        for (_, v) in &pieces {
            range.check(*v)?;
        }
        let (cells, values): (Vec<_>, Vec<_>) = pieces.into_iter().unzip();
        let partition = Partition::new(cells)?;
        Ok(StepFunction {
            partition,
            values,
            range,
        })
    }

    pub fn on_partition(partition: Partition, values: Vec<Rat>, range: RangeSet) -> Result<StepFunction> {
        if partition.len() != values.len() {
            return Err(Error::Precondition(format!(
                "{} cells but {} values",
                partition.len(),
                values.len()
            )));
        }
        for v in &values {
            range.check(*v)?;
        }
        Ok(StepFunction {
            partition,
            values,
            range,
        })
    }

    pub fn constant(value: Rat, range: RangeSet) -> Result<StepFunction> {
        StepFunction::on_partition(Partition::root(), vec![value], range)
    }

    pub fn zero(range: RangeSet) -> StepFunction {
        StepFunction {
            partition: Partition::root(),
            values: vec![Rat::ZERO],
            range,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn range_set(&self) -> &RangeSet {
        &self.range
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn pieces(&self) -> impl Iterator<Item = (&CellPath, Rat)> + '_ {
        self.partition.cells().iter().zip(self.values.iter().copied())
    }

    /// Value on the cell containing the point with binary expansion starting with `word`.
    pub fn eval(&self, word: &[bool]) -> Option<Rat> {
        self.partition.locate(word).map(|i| self.values[i])
    }

    /// Member of the anchored space: 0 is attained.
    pub fn is_anchored(&self) -> bool {
        self.values.iter().any(Rat::is_zero)
    }

    /// Positive part of the image; 0 is reported by [`is_anchored`](Self::is_anchored).
    pub fn image(&self) -> TenuousList {
        TenuousList::from_values(self.values.iter().copied())
    }

    /// Splits `cell` into its two children, both keeping the same value.
    pub fn split(&self, cell: &CellPath) -> Result<StepFunction> {
        let i = self
            .partition
            .cells()
            .iter()
            .position(|c| c == cell)
            .ok_or_else(|| Error::InvalidPartition(format!("{cell} is not a cell of this function")))?;
        let mut pieces: Vec<(CellPath, Rat)> = self.pieces().map(|(c, v)| (c.clone(), v)).collect();
        let (_, v) = pieces.remove(i);
        pieces.extend(cell.children().into_iter().map(|c| (c, v)));
        StepFunction::new(pieces, self.range.clone())
    }

    /// Re-expresses the same function on a partition refining its own.
    pub fn refine_to(&self, target: &Partition) -> Result<StepFunction> {
        let values = target
            .cells()
            .iter()
            .map(|cell| {
                self.partition
                    .cells()
                    .iter()
                    .position(|own| own.contains(cell))
                    .map(|i| self.values[i])
                    .ok_or_else(|| Error::InvalidPartition(format!("{cell} does not refine this function's partition")))
            })
            .collect::<Result<Vec<_>>>()?;
        StepFunction::on_partition(target.clone(), values, self.range.clone())
    }

    /// Equality as maps on the Cantor set.
    pub fn same_function(&self, other: &StepFunction) -> bool {
        super::common_refinement(self, other)
            .iter()
            .all(|(_, a, b)| a == b)
    }

    /// Parses the `bits value` line format. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str, range: &RangeSet) -> std::result::Result<StepFunction, ParseError> {
        let mut pieces = Vec::new();
        let mut last_line = 0;
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap();
            if content.trim().is_empty() {
                continue;
            }
            let mut fields = fields_with_columns(content);
            let (cell_col, cell_text) = fields.next().unwrap();
            let (value_col, value_text) = fields
                .next()
                .ok_or_else(|| ParseError::new(line, content.trim_end().len() + 1, "expected `cell value`"))?;
            if let Some((col, _)) = fields.next() {
                return Err(ParseError::new(line, col, "unexpected trailing field"));
            }
            let cell: CellPath = cell_text
                .parse()
                .map_err(|e: ParseError| e.at_line(line, cell_col - 1))?;
            let value: Rat = value_text
                .parse()
                .map_err(|e: ParseError| e.at_line(line, value_col - 1))?;
            if !range.contains(value) {
                return Err(ParseError::new(
                    line,
                    value_col,
                    format!("value {value} is outside the range set {range}"),
                ));
            }
            pieces.push((cell, value));
        }
        StepFunction::new(pieces, range.clone())
            .map_err(|e| ParseError::new(last_line.max(1), 1, e.to_string()))
    }
}

/// Whitespace-separated fields with their 1-based starting column.
pub(crate) fn fields_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |field| {
        let offset = field.as_ptr() as usize - line.as_ptr() as usize;
        (offset + 1, field)
    })
}

impl fmt::Display for StepFunction {
    /// One `cell value` line per piece, in cell order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (cell, v) in self.pieces() {
            writeln!(f, "{cell} {v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StepFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("StepFunction{")?;
        for (i, (cell, v)) in self.pieces().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{cell}:{v}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r012() -> RangeSet {
        RangeSet::integers(2)
    }

    #[test]
    fn image_examples() {
        let zero = StepFunction::zero(r012());
        assert!(zero.image().is_empty());
        assert!(zero.is_anchored());

        let g = StepFunction::parse("0 2\n1 0\n", &r012()).unwrap();
        assert_eq!(g.image().values(), &[Rat::integer(2)]);
        assert!(g.is_anchored());

        let h = StepFunction::parse("0 3\n1 1\n", &RangeSet::integers(3)).unwrap();
        assert_eq!(h.image().values(), &[Rat::integer(3), Rat::integer(1)]);
        assert!(!h.is_anchored());
    }

    #[test]
    fn parse_rejects_bad_input() {
        let range = r012();
        let e = StepFunction::parse("0 1\n1 5\n", &range).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = StepFunction::parse("0 1\n00 1\n1 0\n", &range).unwrap_err();
        assert!(e.message.contains("overlap"), "{e}");
        let e = StepFunction::parse("00 1\n1 0\n", &range).unwrap_err();
        assert!(e.message.contains("not covered"), "{e}");
        let e = StepFunction::parse("0 1\n1x 0\n", &range).unwrap_err();
        assert_eq!((e.line, e.column), (2, 2));
        let e = StepFunction::parse("0\n", &range).unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn text_round_trip() {
        let text = "# comment\n  00 1/2 \n01 0\n\n1 2\n";
        let range: RangeSet = "0,1/2,2".parse().unwrap();
        let f = StepFunction::parse(text, &range).unwrap();
        assert_eq!(f.to_string(), "00 1/2\n01 0\n1 2\n");
        assert_eq!(StepFunction::parse(&f.to_string(), &range).unwrap(), f);
        assert_eq!(StepFunction::zero(range).to_string(), "- 0\n");
    }

    #[test]
    fn split_and_refine_keep_function() {
        let f = StepFunction::parse("0 2\n1 0\n", &r012()).unwrap();
        let g = f.split(&"1".parse().unwrap()).unwrap();
        assert_eq!(g.partition().len(), 3);
        assert!(f.same_function(&g));
        let h = f.refine_to(&Partition::uniform(3)).unwrap();
        assert!(h.same_function(&f));
        assert!(h.refine_to(&Partition::root()).is_err());
        assert!(f.split(&"11".parse().unwrap()).is_err());
    }

    #[test]
    fn eval_locates_cells() {
        let f = StepFunction::parse("00 1\n01 2\n1 0\n", &r012()).unwrap();
        assert_eq!(f.eval(&[false, true, true]), Some(Rat::integer(2)));
        assert_eq!(f.eval(&[true]), Some(Rat::ZERO));
        assert_eq!(f.eval(&[false]), None);
    }
}
