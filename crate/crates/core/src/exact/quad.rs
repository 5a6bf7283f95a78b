use super::Rat;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// An element `a + b*sqrt(5)` of the real quadratic field Q(sqrt 5).
/// Arithmetic is closed and exact; the sign is decided by comparing
/// `a^2` against `5 b^2`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct QuadRat {
    pub a: Rat,
    pub b: Rat,
}

impl QuadRat {
    pub fn new(a: Rat, b: Rat) -> Self {
        QuadRat { a, b }
    }

    pub fn from_rat(a: Rat) -> Self {
        QuadRat {
            a,
            b: Rat::zero(),
        }
    }

    pub fn zero() -> Self {
        QuadRat::from_rat(Rat::zero())
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.b.is_zero() {
            return if self.a.is_zero() {
                0
            } else if self.a.is_positive() {
                1
            } else {
                -1
            };
        }
        if self.a.is_zero() {
            return if self.b.is_positive() { 1 } else { -1 };
        }
        let a_pos = self.a.is_positive();
        let b_pos = self.b.is_positive();
        if a_pos && b_pos {
            return 1;
        }
        if !a_pos && !b_pos {
            return -1;
        }
        // Opposite signs: a + b*sqrt(5) > 0 iff |a| vs 5|b|^2 decides.
        let a2 = &self.a * &self.a;
        let b2 = &(&self.b * &self.b) * &Rat::int(5);
        match (a_pos, a2.cmp(&b2)) {
            (true, Ordering::Greater) => 1,
            (true, _) => -1, // equality impossible: sqrt 5 irrational
            (false, Ordering::Greater) => -1,
            (false, _) => 1,
        }
    }

    pub fn cmp_rat(&self, rhs: &Rat) -> Ordering {
        let diff = self - &QuadRat::from_rat(rhs.clone());
        match diff.signum() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    pub fn cmp_quad(&self, rhs: &QuadRat) -> Ordering {
        match (self - rhs).signum() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * 5f64.sqrt()
    }
}

impl Add<&QuadRat> for &QuadRat {
    type Output = QuadRat;
    fn add(self, rhs: &QuadRat) -> QuadRat {
        QuadRat {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub<&QuadRat> for &QuadRat {
    type Output = QuadRat;
    fn sub(self, rhs: &QuadRat) -> QuadRat {
        QuadRat {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul<&QuadRat> for &QuadRat {
    type Output = QuadRat;
    fn mul(self, rhs: &QuadRat) -> QuadRat {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 5 b1 b2 + (a1 b2 + a2 b1) s
        QuadRat {
            a: &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &Rat::int(5)),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }
}

impl Mul<&Rat> for &QuadRat {
    type Output = QuadRat;
    fn mul(self, rhs: &Rat) -> QuadRat {
        QuadRat {
            a: &self.a * rhs,
            b: &self.b * rhs,
        }
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt(5)", self.b)
        } else {
            write!(f, "{} + {}*sqrt(5)", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    // sqrt(5) to 60 decimal digits, for the decimal cross-check only.
    const SQRT5_DIGITS: &str =
        "2.236067977499789696409173668731276235440618359611525724270897";

    fn sqrt5_approx() -> Rat {
        let digits = SQRT5_DIGITS.replace('.', "");
        let numer: num_bigint::BigInt = digits.parse().unwrap();
        let denom = num_bigint::BigInt::from(10u8).pow(60);
        Rat::new(numer, denom)
    }

    #[test]
    fn golden_weight_comparison() {
        // (3 + sqrt 5)/2 vs 5/2: difference is (sqrt 5 - 2)/2 > 0.
        let w = QuadRat::new(Rat::new(3, 2), Rat::new(1, 2));
        assert_eq!(w.cmp_rat(&Rat::new(5, 2)), Ordering::Greater);
        assert_eq!(w.cmp_rat(&Rat::int(3)), Ordering::Less);
        assert_eq!(
            QuadRat::from_rat(Rat::new(12, 5)).cmp_rat(&Rat::new(12, 5)),
            Ordering::Equal
        );
    }

    #[test]
    fn sign_agrees_with_decimal_evaluation() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        let s = sqrt5_approx();
        for _ in 0..1000 {
            let a = Rat::new(rng.gen_range(-500i64..=500), rng.gen_range(1i64..=40));
            let b = Rat::new(rng.gen_range(-500i64..=500), rng.gen_range(1i64..=40));
            let q = QuadRat::new(a.clone(), b.clone());
            let approx = &a + &(&b * &s);
            // The decimal evaluation is exact to ~1e-57; skip only the
            // exact-zero case, where the approximation may carry the sign
            // of the truncation.
            if q.a.is_zero() && q.b.is_zero() {
                assert_eq!(q.signum(), 0);
                continue;
            }
            let expected = if approx.is_positive() { 1 } else { -1 };
            assert_eq!(q.signum(), expected, "a={a} b={b}");
        }
    }

    #[test]
    fn field_arithmetic() {
        let w = QuadRat::new(Rat::new(3, 2), Rat::new(1, 2)); // (3+sqrt5)/2
        let conj = QuadRat::new(Rat::new(3, 2), Rat::new(-1, 2));
        // (3+sqrt5)/2 * (3-sqrt5)/2 = (9-5)/4 = 1
        assert_eq!(&w * &conj, QuadRat::from_rat(Rat::one()));
        // ((1+sqrt5)/2)^2 = (3+sqrt5)/2
        let phi = QuadRat::new(Rat::new(1, 2), Rat::new(1, 2));
        assert_eq!(&phi * &phi, w);
    }
}
