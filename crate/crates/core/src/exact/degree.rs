use super::hat::{cos_sq_bounds, sqrt5_bounds, REFINE_CAP};
use super::{HatValue, QuadRat, Rat};
use crate::Error;
use std::cmp::Ordering;
use std::fmt;

/// The value of a rho-degree: a rational, possibly plus a Q(sqrt 5) part and
/// positive multiples of `4cos^2(pi/p)` terms, or infinity outright (an
/// infinite edge weight). Comparisons against rational thresholds are exact;
/// irrational mixtures are separated by interval refinement.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeValue {
    quad: QuadRat,
    /// Sorted by `p`; coefficients are strictly positive.
    cos: Vec<(u32, Rat)>,
    infinite: bool,
}

impl DegreeValue {
    pub fn zero() -> Self {
        DegreeValue {
            quad: QuadRat::zero(),
            cos: Vec::new(),
            infinite: false,
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        DegreeValue {
            quad: QuadRat::from_rat(r),
            cos: Vec::new(),
            infinite: false,
        }
    }

    pub fn infinite() -> Self {
        DegreeValue {
            quad: QuadRat::zero(),
            cos: Vec::new(),
            infinite: true,
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.infinite
    }

    /// Exact rational value, when the degree has no irrational part.
    pub fn as_rat(&self) -> Option<&Rat> {
        if !self.infinite && self.cos.is_empty() && self.quad.is_rational() {
            Some(&self.quad.a)
        } else {
            None
        }
    }

    pub fn add_rat(&mut self, r: &Rat) {
        self.quad = &self.quad + &QuadRat::from_rat(r.clone());
    }

    /// Adds `coeff * weight` to the degree; `coeff` must be nonnegative.
    pub fn add_hat_multiple(&mut self, weight: &HatValue, coeff: &Rat) {
        debug_assert!(!coeff.is_negative());
        if coeff.is_zero() {
            return;
        }
        match weight {
            HatValue::Exact(q) => self.quad = &self.quad + &(q * coeff),
            HatValue::CosSq(p) => {
                match self.cos.binary_search_by_key(p, |(q, _)| *q) {
                    Ok(i) => self.cos[i].1 = &self.cos[i].1 + coeff,
                    Err(i) => self.cos.insert(i, (*p, coeff.clone())),
                }
            }
        }
    }

    pub fn add(&mut self, other: &DegreeValue) {
        if other.infinite {
            self.infinite = true;
        }
        self.quad = &self.quad + &other.quad;
        for (p, c) in &other.cos {
            self.add_hat_multiple(&HatValue::CosSq(*p), c);
        }
    }

    /// Rational enclosure at a given refinement step.
    fn bounds(&self, step: u32) -> (Rat, Rat) {
        let (mut lo, mut hi) = (self.quad.a.clone(), self.quad.a.clone());
        if !self.quad.b.is_zero() {
            let (s_lo, s_hi) = sqrt5_bounds(20 + 4 * step);
            if self.quad.b.is_positive() {
                lo = lo + &self.quad.b * &s_lo;
                hi = hi + &self.quad.b * &s_hi;
            } else {
                lo = lo + &self.quad.b * &s_hi;
                hi = hi + &self.quad.b * &s_lo;
            }
        }
        for (p, c) in &self.cos {
            let (c_lo, c_hi) = cos_sq_bounds(*p, 3 + step as usize);
            lo = lo + c * &c_lo;
            hi = hi + c * &c_hi;
        }
        (lo, hi)
    }

    /// Exact comparison against a rational threshold.
    pub fn cmp_rat(&self, threshold: &Rat) -> Result<Ordering, Error> {
        if self.infinite {
            return Ok(Ordering::Greater);
        }
        if self.cos.is_empty() {
            return Ok(self.quad.cmp_rat(threshold));
        }
        for step in 0..REFINE_CAP {
            let (lo, hi) = self.bounds(step);
            if threshold < &lo {
                return Ok(Ordering::Greater);
            }
            if threshold > &hi {
                return Ok(Ordering::Less);
            }
        }
        // A value with cosine-square terms over p >= 7 is irrational, so the
        // enclosure must eventually exclude any rational threshold.
        Err(Error::Parse(format!(
            "interval refinement for {self} vs {threshold} did not separate after {REFINE_CAP} steps"
        )))
    }

    pub fn to_f64(&self) -> f64 {
        if self.infinite {
            return f64::INFINITY;
        }
        let mut v = self.quad.to_f64();
        for (p, c) in &self.cos {
            let cc = (std::f64::consts::PI / *p as f64).cos();
            v += c.to_f64() * 4.0 * cc * cc;
        }
        v
    }
}

impl fmt::Display for DegreeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.infinite {
            return write!(f, "inf");
        }
        write!(f, "{}", self.quad)?;
        for (p, c) in &self.cos {
            if c == &Rat::one() {
                write!(f, " + 4cos^2(pi/{})", p)?;
            } else {
                write!(f, " + {}*4cos^2(pi/{})", c, p)?;
            }
        }
        Ok(())
    }
}
