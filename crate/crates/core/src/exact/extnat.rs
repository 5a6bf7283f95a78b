use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Sub};
use std::str::FromStr;

/// A natural number (including zero) or infinity, with absorbing arithmetic:
/// `inf + n = inf - n = inf + inf = inf`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            ExtNat::Fin(n) => Some(*n),
            ExtNat::Inf => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtNat::Fin(0))
    }
}

impl PartialOrd for ExtNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtNat::Inf, ExtNat::Inf) => Ordering::Equal,
            (ExtNat::Inf, _) => Ordering::Greater,
            (_, ExtNat::Inf) => Ordering::Less,
            (ExtNat::Fin(a), ExtNat::Fin(b)) => a.cmp(b),
        }
    }
}

impl Add for ExtNat {
    type Output = ExtNat;
    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => {
                ExtNat::Fin(a.checked_add(b).expect("extended natural overflow"))
            }
            _ => ExtNat::Inf,
        }
    }
}

impl Sub for ExtNat {
    type Output = ExtNat;
    fn sub(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Inf, _) => ExtNat::Inf,
            (ExtNat::Fin(a), ExtNat::Fin(b)) => {
                ExtNat::Fin(a.checked_sub(b).expect("extended natural underflow"))
            }
            (ExtNat::Fin(_), ExtNat::Inf) => panic!("finite minus infinity is undefined"),
        }
    }
}

impl Sum for ExtNat {
    fn sum<I: Iterator<Item = ExtNat>>(iter: I) -> ExtNat {
        iter.fold(ExtNat::Fin(0), |a, b| a + b)
    }
}

impl From<u64> for ExtNat {
    fn from(n: u64) -> ExtNat {
        ExtNat::Fin(n)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(n) => write!(f, "{}", n),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtNat {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            Ok(ExtNat::Inf)
        } else {
            t.parse::<u64>()
                .map(ExtNat::Fin)
                .map_err(|_| crate::Error::Parse(format!("bad extended natural: {s:?}")))
        }
    }
}
