use super::{QuadRat, Rat};
use crate::Error;
use num_bigint::BigInt;
use std::cmp::Ordering;
use std::fmt;

/// Maximum number of interval refinement steps before giving up. Thresholds
/// actually used by the classifiers (3 and 4) separate at step zero.
pub const REFINE_CAP: u32 = 128;

// 100 decimal digits of pi; enough to outlast every refinement step the cap
// allows for the denominators that occur here.
const PI_DIGITS: &str = "31415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170";

/// A Coxeter hat weight `4 cos^2(pi / f)`. For `f` in `{3,4,6,inf}` the value
/// is rational and stored elsewhere; `f = 5` gives the exact quadratic
/// `(3+sqrt 5)/2`; for finite `f > 6` the value is irrational of higher degree
/// and is compared against rationals through certified interval refinement,
/// anchored by `3 < 4cos^2(pi/f) < 4`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum HatValue {
    Exact(QuadRat),
    CosSq(u32),
}

impl HatValue {
    /// The hat weight of a Coxeter edge label (`None` encodes infinity).
    pub fn from_coxeter_label(f: Option<u32>) -> Result<HatValue, Error> {
        match f {
            None => Ok(HatValue::Exact(QuadRat::from_rat(Rat::int(4)))),
            Some(3) => Ok(HatValue::Exact(QuadRat::from_rat(Rat::one()))),
            Some(4) => Ok(HatValue::Exact(QuadRat::from_rat(Rat::int(2)))),
            Some(5) => Ok(HatValue::Exact(QuadRat::new(Rat::new(3, 2), Rat::new(1, 2)))),
            Some(6) => Ok(HatValue::Exact(QuadRat::from_rat(Rat::int(3)))),
            Some(p) if p >= 7 => Ok(HatValue::CosSq(p)),
            Some(p) => Err(Error::NotCoxeter(format!("edge label {p} < 3"))),
        }
    }

    pub fn cmp_rat(&self, threshold: &Rat) -> Result<Ordering, Error> {
        match self {
            HatValue::Exact(q) => Ok(q.cmp_rat(threshold)),
            HatValue::CosSq(p) => cos_sq_cmp_rat(*p, threshold),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            HatValue::Exact(q) => q.to_f64(),
            HatValue::CosSq(p) => {
                let c = (std::f64::consts::PI / *p as f64).cos();
                4.0 * c * c
            }
        }
    }
}

impl fmt::Display for HatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HatValue::Exact(q) => write!(f, "{}", q),
            HatValue::CosSq(p) => write!(f, "4cos^2(pi/{})", p),
        }
    }
}

/// Certified rational enclosure of pi.
fn pi_bounds() -> (Rat, Rat) {
    let n: BigInt = PI_DIGITS.parse().unwrap();
    let d = BigInt::from(10u8).pow(PI_DIGITS.len() as u32 - 1);
    (
        Rat::new(n.clone(), d.clone()),
        Rat::new(n + BigInt::from(1u8), d),
    )
}

/// Lower/upper partial sums of the cosine series at a rational point
/// `0 < x < 1`. The series alternates with strictly decreasing terms there,
/// so an even number of terms under-shoots and an odd number over-shoots.
fn cos_partial(x: &Rat, terms: usize) -> Rat {
    let x2 = x * x;
    let mut term = Rat::one();
    let mut sum = Rat::one();
    for k in 1..terms {
        let denom = Rat::int((2 * k as i64 - 1) * 2 * k as i64);
        term = &(&term * &x2) / &denom;
        if k % 2 == 1 {
            sum = &sum - &term;
        } else {
            sum = &sum + &term;
        }
    }
    sum
}

fn cos_bounds(x_lo: &Rat, x_hi: &Rat, terms: usize) -> (Rat, Rat) {
    let even = terms - terms % 2;
    let odd = even + 1;
    // cos is decreasing on (0, 1].
    (cos_partial(x_hi, even), cos_partial(x_lo, odd))
}

/// Certified bounds for `4 cos^2(pi/p)`, `p >= 7`; wider `terms` tightens.
pub(crate) fn cos_sq_bounds(p: u32, terms: usize) -> (Rat, Rat) {
    let (pi_lo, pi_hi) = pi_bounds();
    let den = Rat::int(p as i64);
    let (c_lo, c_hi) = cos_bounds(&(&pi_lo / &den), &(&pi_hi / &den), terms);
    // 0 < c_lo <= cos <= c_hi, so squaring preserves the enclosure.
    debug_assert!(c_lo.is_positive());
    let four = Rat::int(4);
    (&(&c_lo * &c_lo) * &four, &(&c_hi * &c_hi) * &four)
}

fn cos_sq_cmp_rat(p: u32, threshold: &Rat) -> Result<Ordering, Error> {
    // Proven enclosure: 3 < 4cos^2(pi/p) < 4 for all finite p > 6.
    if threshold <= &Rat::int(3) {
        return Ok(Ordering::Greater);
    }
    if threshold >= &Rat::int(4) {
        return Ok(Ordering::Less);
    }
    for step in 0..REFINE_CAP {
        let (lo, hi) = cos_sq_bounds(p, 3 + step as usize);
        if threshold < &lo {
            return Ok(Ordering::Greater);
        }
        if threshold > &hi {
            return Ok(Ordering::Less);
        }
    }
    // Unreachable for rational thresholds: the value is irrational, so the
    // shrinking enclosure must eventually exclude the threshold.
    Err(Error::Parse(format!(
        "interval refinement for 4cos^2(pi/{p}) vs {threshold} did not separate after {REFINE_CAP} steps"
    )))
}

/// Certified rational bounds for `sqrt 5`, tightened by bisection.
pub(crate) fn sqrt5_bounds(halvings: u32) -> (Rat, Rat) {
    let five = Rat::int(5);
    let mut lo = Rat::int(2);
    let mut hi = Rat::new(9, 4);
    for _ in 0..halvings {
        let mid = &(&lo + &hi) * &Rat::new(1, 2);
        if (&mid * &mid) <= five {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors_at_three_and_four() {
        assert_eq!(
            HatValue::CosSq(7).cmp_rat(&Rat::int(3)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            HatValue::CosSq(7).cmp_rat(&Rat::int(4)).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            HatValue::CosSq(1000).cmp_rat(&Rat::int(4)).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn genuine_refinement() {
        // 4cos^2(pi/7) = 3.24697...; 13/4 = 3.25 sits 0.003 above it.
        assert_eq!(
            HatValue::CosSq(7).cmp_rat(&Rat::new(13, 4)).unwrap(),
            Ordering::Less
        );
        // 4cos^2(pi/8) = 2 + sqrt 2 = 3.41421... > 13/4.
        assert_eq!(
            HatValue::CosSq(8).cmp_rat(&Rat::new(13, 4)).unwrap(),
            Ordering::Greater
        );
        // A very tight threshold: 4cos^2(pi/7) vs 2847/877 = 3.246294...
        assert_eq!(
            HatValue::CosSq(7).cmp_rat(&Rat::new(2847, 877)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn monotone_in_p() {
        // 4cos^2(pi/p) is strictly increasing in p; check via a ladder of
        // rational midpoints.
        let mid = Rat::new(33, 10); // between p=7 (3.2470) and p=9 (3.5321)
        assert_eq!(
            HatValue::CosSq(7).cmp_rat(&mid).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            HatValue::CosSq(9).cmp_rat(&mid).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn hat_weights() {
        assert_eq!(
            HatValue::from_coxeter_label(Some(6)).unwrap(),
            HatValue::Exact(QuadRat::from_rat(Rat::int(3)))
        );
        assert_eq!(
            HatValue::from_coxeter_label(None).unwrap(),
            HatValue::Exact(QuadRat::from_rat(Rat::int(4)))
        );
        let five = HatValue::from_coxeter_label(Some(5)).unwrap();
        assert_eq!(
            five,
            HatValue::Exact(QuadRat::new(Rat::new(3, 2), Rat::new(1, 2)))
        );
        assert!(HatValue::from_coxeter_label(Some(2)).is_err());
    }

    #[test]
    fn sqrt5_enclosure() {
        let (lo, hi) = sqrt5_bounds(40);
        assert!(&(&lo * &lo) < &Rat::int(5));
        assert!(&(&hi * &hi) > &Rat::int(5));
        assert!((&hi - &lo).to_f64() < 1e-10);
    }
}
