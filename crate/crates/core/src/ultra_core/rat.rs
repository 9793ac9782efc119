use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::ParseError;

/// Exact non-negative rational, always held in lowest terms.
///
/// Only comparison, `max` and `min` are ever needed on distances, so no
/// field arithmetic is exposed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(Ratio<u64>);

impl Rat {
    pub const ZERO: Rat = Rat(Ratio::new_raw(0, 1));

    /// Panics if `denominator` is zero.
    pub fn new(numerator: u64, denominator: u64) -> Rat {
        assert!(denominator != 0, "zero denominator");
        Rat(Ratio::new(numerator, denominator))
    }

    pub fn integer(value: u64) -> Rat {
        Rat(Ratio::from_integer(value))
    }

    pub fn numerator(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero()
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl From<u64> for Rat {
    fn from(value: u64) -> Self {
        Rat::integer(value)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator() == 1 {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = ParseError;

    /// Accepts `p` or `p/q` with decimal digits only. Columns in the error
    /// are 1-based offsets into `s`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        fn digits(part: &str, column: usize) -> Result<u64, ParseError> {
            if part.is_empty() {
                return Err(ParseError::new(1, column, "expected digits"));
            }
            if let Some(pos) = part.find(|c: char| !c.is_ascii_digit()) {
                return Err(ParseError::new(
                    1,
                    column + pos,
                    format!("unexpected character `{}`", part[pos..].chars().next().unwrap()),
                ));
            }
            part.parse::<u64>()
                .map_err(|_| ParseError::new(1, column, "integer out of range"))
        }

        match s.split_once('/') {
            None => Ok(Rat::integer(digits(s, 1)?)),
            Some((p, q)) => {
                let numerator = digits(p, 1)?;
                let denominator = digits(q, p.len() + 2)?;
                if denominator == 0 {
                    return Err(ParseError::new(1, p.len() + 2, "zero denominator"));
                }
                Ok(Rat::new(numerator, denominator))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_on_construction() {
        let r = Rat::new(6, 4);
        assert_eq!((r.numerator(), r.denominator()), (3, 2));
        assert_eq!(Rat::new(0, 7), Rat::ZERO);
        assert_eq!(Rat::ZERO.denominator(), 1);
    }

    #[test]
    fn text_form_omits_unit_denominator() {
        assert_eq!(Rat::new(4, 2).to_string(), "2");
        assert_eq!(Rat::new(1, 2).to_string(), "1/2");
        assert_eq!("10/4".parse::<Rat>().unwrap(), Rat::new(5, 2));
        assert_eq!("7".parse::<Rat>().unwrap(), Rat::integer(7));
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!("1/0".parse::<Rat>().unwrap_err().column, 3);
        assert_eq!("-1".parse::<Rat>().unwrap_err().column, 1);
        assert_eq!("3/x".parse::<Rat>().unwrap_err().column, 3);
        assert!("".parse::<Rat>().is_err());
        assert!("1.5".parse::<Rat>().is_err());
    }

    #[test]
    fn order_is_exact() {
        // 1/3 < 333333333/999999998 would be lost in f32
        assert!(Rat::new(1, 3) < Rat::new(333_333_333, 999_999_998));
        assert!(Rat::new(u64::MAX - 1, u64::MAX) < Rat::integer(1));
        assert_eq!(Rat::new(3, 5).max(Rat::new(2, 3)), Rat::new(2, 3));
    }
}
