use super::Rat;

/// Small exact fraction used in hot enumeration loops; always reduced with a
/// positive denominator. Values that occur are sums of at most a few dozen
/// `rho` terms, far inside `i64`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Q {
    n: i64,
    d: i64,
}

impl Q {
    pub fn new(n: i64, d: i64) -> Q {
        assert!(d != 0);
        let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
        let g = gcd(n.unsigned_abs(), d.unsigned_abs());
        if g > 1 {
            n /= g as i64;
            d /= g as i64;
        }
        Q { n, d }
    }

    pub fn int(n: i64) -> Q {
        Q { n, d: 1 }
    }

    pub fn zero() -> Q {
        Q { n: 0, d: 1 }
    }

    pub fn add(self, other: Q) -> Q {
        let n = (self.n as i128) * (other.d as i128) + (other.n as i128) * (self.d as i128);
        let d = (self.d as i128) * (other.d as i128);
        let g = gcd128(n.unsigned_abs(), d.unsigned_abs()) as i128;
        Q {
            n: i64::try_from(n / g).expect("fraction overflow"),
            d: i64::try_from(d / g).expect("fraction overflow"),
        }
    }

    pub fn cmp(&self, other: &Q) -> std::cmp::Ordering {
        ((self.n as i128) * (other.d as i128)).cmp(&((other.n as i128) * (self.d as i128)))
    }

    pub fn to_rat(self) -> Rat {
        Rat::new(self.n, self.d)
    }
}

/// `rho` as a small fraction.
pub(crate) fn rho_q(n: super::ExtNat) -> Q {
    match n {
        super::ExtNat::Fin(0) => Q::zero(),
        super::ExtNat::Fin(k) => Q::new(2 * k as i64, k as i64 + 1),
        super::ExtNat::Inf => Q::int(2),
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a.max(1)
}

fn gcd128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExtNat;

    #[test]
    fn matches_rat() {
        let q = rho_q(ExtNat::Fin(5))
            .add(rho_q(ExtNat::Fin(2)))
            .add(rho_q(ExtNat::Fin(1)));
        assert_eq!(q.to_rat(), Rat::int(4));
        assert_eq!(
            rho_q(ExtNat::Inf).add(rho_q(ExtNat::Fin(3))).to_rat(),
            Rat::new(7, 2)
        );
    }
}
