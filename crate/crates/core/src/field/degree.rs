use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

/// A degree that may be `-∞` (the degree of zero).
///
/// `NegInf` orders below every finite degree, and `-∞ + k = -∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(k) => Some(k),
        }
    }

    pub fn is_neg_inf(self) -> bool {
        self == Degree::NegInf
    }

    /// Finite degree or `0` for `-∞`; handy for sizing buffers.
    pub fn or_zero(self) -> usize {
        self.finite().unwrap_or(0)
    }

    /// True when `self <= bound`, with `-∞` below every bound.
    pub fn at_most(self, bound: usize) -> bool {
        match self {
            Degree::NegInf => true,
            Degree::Finite(k) => k <= bound,
        }
    }
}

impl From<Option<usize>> for Degree {
    fn from(d: Option<usize>) -> Self {
        match d {
            None => Degree::NegInf,
            Some(k) => Degree::Finite(k),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInf, Degree::NegInf) => Ordering::Equal,
            (Degree::NegInf, _) => Ordering::Less,
            (_, Degree::NegInf) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(k) => write!(f, "{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neg_inf_is_below_everything() {
        assert!(Degree::NegInf < Degree::Finite(0));
        assert!(Degree::Finite(3) > Degree::Finite(2));
        assert_eq!(Degree::NegInf + Degree::Finite(4), Degree::NegInf);
        assert_eq!(Degree::Finite(1) + Degree::Finite(4), Degree::Finite(5));
        assert!(Degree::NegInf.at_most(0));
        assert!(!Degree::Finite(3).at_most(2));
    }
}
