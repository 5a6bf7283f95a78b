use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Arbitrary-precision rational, always in canonical reduced form with a
/// positive denominator. Equality is structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new<N: Into<BigInt>, D: Into<BigInt>>(numer: N, denom: D) -> Self {
        let d: BigInt = denom.into();
        assert!(!d.is_zero(), "zero denominator");
        Rat(BigRational::new(numer.into(), d))
    }

    pub fn int<N: Into<BigInt>>(n: N) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rat::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            self.numer().to_f64().unwrap_or(f64::NAN) / self.denom().to_f64().unwrap_or(f64::NAN)
        })
    }

}

impl fmt::Display for Rat {
    /// Textual form is `p/q`, with `/q` omitted when the value is an integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rat {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |_| crate::Error::Parse(format!("bad rational: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(bad)?;
                let d = BigInt::from_str(d.trim()).map_err(bad)?;
                if d.is_zero() {
                    return Err(crate::Error::Parse(format!("zero denominator: {s:?}")));
                }
                Ok(Rat::new(n, d))
            }
            None => Ok(Rat::int(
                BigInt::from_str(s.trim()).map_err(bad)?,
            )),
        }
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

impl From<u64> for Rat {
    fn from(n: u64) -> Self {
        Rat::int(n)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(&self.0 $op rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

/// A rational extended with plus infinity; the value domain of weighted
/// `rho` computations, where an infinite weight can enter a plain sum.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum RatOrInf {
    Fin(Rat),
    Inf,
}

impl RatOrInf {
    pub fn is_finite(&self) -> bool {
        matches!(self, RatOrInf::Fin(_))
    }

    pub fn cmp_rat(&self, other: &Rat) -> Ordering {
        match self {
            RatOrInf::Fin(r) => r.cmp(other),
            RatOrInf::Inf => Ordering::Greater,
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl PartialOrd for RatOrInf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RatOrInf {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RatOrInf::Inf, RatOrInf::Inf) => Ordering::Equal,
            (RatOrInf::Inf, RatOrInf::Fin(_)) => Ordering::Greater,
            (RatOrInf::Fin(_), RatOrInf::Inf) => Ordering::Less,
            (RatOrInf::Fin(a), RatOrInf::Fin(b)) => a.cmp(b),
        }
    }
}

impl From<Rat> for RatOrInf {
    fn from(r: Rat) -> Self {
        RatOrInf::Fin(r)
    }
}

impl fmt::Display for RatOrInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatOrInf::Fin(r) => write!(f, "{}", r),
            RatOrInf::Inf => write!(f, "inf"),
        }
    }
}
