//! The norm of a binary relation: the exact minimum of its quadratic form on
//! the standard simplex, found by enumerating supports and solving each
//! stationarity system exactly.
//!
//! For a support `T` the bordered system is
//! `sum_{j in T} r_ij x_j = 2 lambda` for `i in T`, `sum_{j in T} x_j = 1`,
//! where `r_ij = R(i,j) + R(j,i)`. Nonsingular systems with nonnegative
//! solutions are candidates with value `lambda`; vertices arise as singleton
//! supports. Singular faces are skipped: along a kernel direction the form is
//! constant, so the value recurs on a smaller support.

use crate::exact::{Rat, RatOrInf};
use crate::Error;
use rayon::prelude::*;

/// Default cap on the number of elements; face enumeration is `2^n`.
pub const DEFAULT_CAP: usize = 20;

/// A reflexivity-tracked boolean incidence structure on `{0..n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    n: usize,
    inc: Vec<bool>,
}

impl Relation {
    /// Empty (all-false) incidence on `n` elements.
    pub fn empty(n: usize) -> Self {
        Relation {
            n,
            inc: vec![false; n * n],
        }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, Error> {
        let mut r = Relation::empty(n);
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch { expected: n, got: i.max(j) + 1 });
            }
            r.set(i, j, true);
        }
        Ok(r)
    }

    pub fn from_matrix_rows(rows: &[&str]) -> Result<Self, Error> {
        let n = rows.len();
        let mut r = Relation::empty(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!("matrix row {i} has length {} != {n}", row.len())));
            }
            for (j, c) in row.chars().enumerate() {
                match c {
                    '1' => r.set(i, j, true),
                    '0' => {}
                    _ => return Err(Error::Parse(format!("bad matrix character {c:?}"))),
                }
            }
        }
        Ok(r)
    }

    /// Complete relation: every pair related.
    pub fn complete(n: usize) -> Self {
        Relation {
            n,
            inc: vec![true; n * n],
        }
    }

    /// Equality relation: exactly the diagonal.
    pub fn equality(n: usize) -> Self {
        let mut r = Relation::empty(n);
        for i in 0..n {
            r.set(i, i, true);
        }
        r
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.inc[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.inc[i * self.n + j] = v;
    }

    /// Symmetrized incidence `r(i,j) = R(i,j) + R(j,i)`, in `{0,1,2}`.
    pub fn r(&self, i: usize, j: usize) -> i64 {
        self.get(i, j) as i64 + self.get(j, i) as i64
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i))
    }

    /// Block-diagonal union on `n1 + n2` elements.
    pub fn disjoint_union(&self, other: &Relation) -> Relation {
        let n = self.n + other.n;
        let mut r = Relation::empty(n);
        for i in 0..self.n {
            for j in 0..self.n {
                r.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                r.set(self.n + i, self.n + j, other.get(i, j));
            }
        }
        r
    }

    /// Restriction to the given elements, in order.
    pub fn restrict(&self, keep: &[usize]) -> Relation {
        let mut r = Relation::empty(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                r.set(a, b, self.get(i, j));
            }
        }
        r
    }

    /// Exact value of the quadratic form `sum R(i,j) x_i x_j`.
    pub fn quadratic_value(&self, x: &[Rat]) -> Result<Rat, Error> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: x.len() });
        }
        let mut v = Rat::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    v = v + &x[i] * &x[j];
                }
            }
        }
        Ok(v)
    }

    /// All pairs `(a, b)` with `a < b` that agree with every third element
    /// under the symmetrized incidence.
    pub fn twins(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if (0..self.n)
                    .filter(|&s| s != a && s != b)
                    .all(|s| self.r(a, s) == self.r(b, s))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Exact norm with the default cap.
    pub fn norm(&self) -> Result<NormCertificate, Error> {
        self.norm_with(DEFAULT_CAP)
    }

    pub fn norm_with(&self, cap: usize) -> Result<NormCertificate, Error> {
        assert!(self.n >= 1, "norm of an empty relation");
        if self.n > cap || self.n >= 63 {
            return Err(Error::SizeCap { n: self.n, cap });
        }
        let best = (1..(1u64 << self.n))
            .into_par_iter()
            .filter_map(|mask| self.solve_face(mask))
            .min_by(|a, b| a.order_key(b))
            .expect("vertices always produce candidates");
        Ok(best.into_certificate(self.n))
    }

    /// `P = 1 / norm`; infinite (with the reflexivity flag down) when the
    /// relation is not reflexive, since then the norm is zero.
    pub fn p_value(&self) -> Result<PValue, Error> {
        self.p_value_with(DEFAULT_CAP)
    }

    pub fn p_value_with(&self, cap: usize) -> Result<PValue, Error> {
        let reflexive = self.is_reflexive();
        let cert = self.norm_with(cap)?;
        let value = if cert.value.is_zero() {
            RatOrInf::Inf
        } else {
            RatOrInf::Fin(Rat::one() / cert.value.clone())
        };
        Ok(PValue { value, reflexive })
    }

    /// Every nonsingular-face stationary solution with nonnegative
    /// coordinates, with its support and multiplier (which equals the value
    /// of the form there).
    pub fn stationary_candidates(&self) -> Vec<(Vec<usize>, Vec<Rat>, Rat)> {
        let mut out: Vec<(Vec<usize>, Vec<Rat>, Rat)> = self
            .face_candidates()
            .into_iter()
            .map(|c| {
                let support: Vec<usize> =
                    (0..self.n).filter(|i| c.mask >> i & 1 == 1).collect();
                let cert = c.into_certificate(self.n);
                (support, cert.witness, cert.value)
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// True when deleting any single element strictly lowers `P`. By subset
    /// monotonicity of `P` this is equivalent to all proper subsets being
    /// strictly lower. On failure the witness element is returned.
    pub fn is_p_faithful(&self) -> Result<(bool, Option<usize>), Error> {
        assert!(self.is_reflexive(), "P-faithfulness is defined for reflexive relations");
        if self.n == 1 {
            return Ok((true, None));
        }
        let full = self.p_value()?.value;
        for s in 0..self.n {
            let keep: Vec<usize> = (0..self.n).filter(|&i| i != s).collect();
            let sub = self.restrict(&keep).p_value()?.value;
            debug_assert!(sub <= full);
            if sub == full {
                return Ok((false, Some(s)));
            }
        }
        Ok((true, None))
    }

    fn face_candidates(&self) -> Vec<Candidate> {
        (1..(1u64 << self.n))
            .filter_map(|mask| self.solve_face(mask))
            .collect()
    }

    /// Solves the bordered stationarity system on one support. Returns a
    /// candidate only when the system is nonsingular and the solution is
    /// coordinatewise nonnegative.
    fn solve_face(&self, mask: u64) -> Option<Candidate> {
        let support: Vec<usize> = (0..self.n).filter(|i| mask >> i & 1 == 1).collect();
        let k = support.len();
        let m = k + 1;
        // Rows 0..k: stationarity; row k: the simplex constraint.
        let mut a = vec![0i128; m * m];
        let mut b = vec![0i128; m];
        for (ri, &i) in support.iter().enumerate() {
            for (ci, &j) in support.iter().enumerate() {
                a[ri * m + ci] = self.r(i, j) as i128;
            }
            a[ri * m + k] = -2;
        }
        for ci in 0..k {
            a[k * m + ci] = 1;
        }
        b[k] = 1;

        match solve_fraction_free(&mut a, &mut b, m) {
            Ok(Some((mut nums, mut den))) => {
                if den < 0 {
                    den = -den;
                    for v in nums.iter_mut() {
                        *v = -*v;
                    }
                }
                if nums[..k].iter().any(|&v| v < 0) {
                    return None;
                }
                Some(Candidate {
                    mask,
                    support,
                    nums,
                    den,
                })
            }
            Ok(None) => None,
            Err(Overflow) => self.solve_face_big(mask, &support),
        }
    }

    /// Big-rational fallback for supports whose minors exceed `i128`.
    fn solve_face_big(&self, mask: u64, support: &[usize]) -> Option<Candidate> {
        let k = support.len();
        let m = k + 1;
        let mut a = vec![Rat::zero(); m * m];
        let mut b = vec![Rat::zero(); m];
        for (ri, &i) in support.iter().enumerate() {
            for (ci, &j) in support.iter().enumerate() {
                a[ri * m + ci] = Rat::int(self.r(i, j));
            }
            a[ri * m + k] = Rat::int(-2);
        }
        for ci in 0..k {
            a[k * m + ci] = Rat::one();
        }
        b[k] = Rat::one();
        let sol = solve_linear_rat(a, b, m)?;
        if sol[..k].iter().any(|v| v.is_negative()) {
            return None;
        }
        Some(Candidate::from_rats(mask, support.to_vec(), sol))
    }
}

/// The norm with a witness attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormCertificate {
    pub value: Rat,
    pub witness: Vec<Rat>,
    pub support: Vec<usize>,
}

/// `P`-value with the reflexivity flag (an infinite value means the relation
/// was not reflexive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PValue {
    pub value: RatOrInf,
    pub reflexive: bool,
}

impl PValue {
    pub fn expect_finite(&self) -> &Rat {
        match &self.value {
            RatOrInf::Fin(r) => r,
            RatOrInf::Inf => panic!("P-value is infinite (relation not reflexive)"),
        }
    }
}

struct Candidate {
    mask: u64,
    support: Vec<usize>,
    /// Numerators of the support coordinates followed by lambda, over `den`.
    nums: Vec<i128>,
    /// Always positive.
    den: i128,
}

impl Candidate {
    fn from_rats(mask: u64, support: Vec<usize>, sol: Vec<Rat>) -> Candidate {
        // Rebuild an integer representation over a common denominator.
        let mut den_big = num_bigint::BigInt::from(1u8);
        for v in &sol {
            den_big = num_integer::lcm(den_big, v.denom().clone());
        }
        let den: i128 = (&den_big)
            .try_into()
            .expect("fallback denominators stay within i128");
        let nums = sol
            .iter()
            .map(|v| {
                let scaled = v * &Rat::int(den_big.clone());
                let n: i128 = scaled
                    .numer()
                    .try_into()
                    .expect("fallback numerators stay within i128");
                n
            })
            .collect();
        Candidate {
            mask,
            support,
            nums,
            den,
        }
    }

    fn lambda_pair(&self) -> (i128, i128) {
        let k = self.support.len();
        (self.nums[k], self.den)
    }

    /// Total order: value ascending, then witness lexicographically, then
    /// support mask for full determinism.
    fn order_key(&self, other: &Candidate) -> std::cmp::Ordering {
        let (an, ad) = self.lambda_pair();
        let (bn, bd) = other.lambda_pair();
        cmp_frac(an, ad, bn, bd)
            .then_with(|| {
                let mut ai = self.support.iter().peekable();
                let mut bi = other.support.iter().peekable();
                let mut aidx = 0;
                let mut bidx = 0;
                loop {
                    let av = match ai.peek() {
                        Some(&&i) => i,
                        None => usize::MAX,
                    };
                    let bv = match bi.peek() {
                        Some(&&i) => i,
                        None => usize::MAX,
                    };
                    if av == usize::MAX && bv == usize::MAX {
                        return std::cmp::Ordering::Equal;
                    }
                    // Coordinate at the next populated index of either side.
                    let idx = av.min(bv);
                    let a_val = if av == idx {
                        ai.next();
                        let v = (self.nums[aidx], self.den);
                        aidx += 1;
                        v
                    } else {
                        (0, 1)
                    };
                    let b_val = if bv == idx {
                        bi.next();
                        let v = (other.nums[bidx], other.den);
                        bidx += 1;
                        v
                    } else {
                        (0, 1)
                    };
                    let c = cmp_frac(a_val.0, a_val.1, b_val.0, b_val.1);
                    if c != std::cmp::Ordering::Equal {
                        return c;
                    }
                }
            })
            .then(self.mask.cmp(&other.mask))
    }

    fn into_certificate(self, n: usize) -> NormCertificate {
        let k = self.support.len();
        let mut witness = vec![Rat::zero(); n];
        for (pos, &i) in self.support.iter().enumerate() {
            witness[i] = Rat::new(self.nums[pos], self.den);
        }
        NormCertificate {
            value: Rat::new(self.nums[k], self.den),
            witness,
            support: self.support,
        }
    }
}

/// Compares `a/b` and `c/d` for positive `b, d`, exactly; falls back to
/// big integers if the cross products overflow.
fn cmp_frac(a: i128, b: i128, c: i128, d: i128) -> std::cmp::Ordering {
    debug_assert!(b > 0 && d > 0);
    match (a.checked_mul(d), c.checked_mul(b)) {
        (Some(x), Some(y)) => x.cmp(&y),
        _ => {
            use num_bigint::BigInt;
            (BigInt::from(a) * BigInt::from(d)).cmp(&(BigInt::from(c) * BigInt::from(b)))
        }
    }
}

struct Overflow;

/// Fraction-free forward elimination (Bareiss) followed by exact back
/// substitution over the common denominator `det`. All divisions are exact;
/// intermediate entries are minors of the augmented matrix, so with the
/// bounded entries used here they stay inside `i128` up to 19 unknowns.
/// Returns `Ok(None)` for singular systems, otherwise `(nums, det)` with
/// solution `nums[i] / det`.
fn solve_fraction_free(
    a: &mut [i128],
    b: &mut [i128],
    m: usize,
) -> Result<Option<(Vec<i128>, i128)>, Overflow> {
    let mut prev: i128 = 1;
    for p in 0..m.saturating_sub(1) {
        if a[p * m + p] == 0 {
            match (p + 1..m).find(|&q| a[q * m + p] != 0) {
                Some(q) => {
                    for j in 0..m {
                        a.swap(p * m + j, q * m + j);
                    }
                    b.swap(p, q);
                }
                None => return Ok(None),
            }
        }
        let pivot = a[p * m + p];
        for i in p + 1..m {
            let factor = a[i * m + p];
            for j in p + 1..m {
                let t = pivot
                    .checked_mul(a[i * m + j])
                    .ok_or(Overflow)?
                    .checked_sub(factor.checked_mul(a[p * m + j]).ok_or(Overflow)?)
                    .ok_or(Overflow)?;
                debug_assert_eq!(t % prev, 0);
                a[i * m + j] = t / prev;
            }
            let t = pivot
                .checked_mul(b[i])
                .ok_or(Overflow)?
                .checked_sub(factor.checked_mul(b[p]).ok_or(Overflow)?)
                .ok_or(Overflow)?;
            debug_assert_eq!(t % prev, 0);
            b[i] = t / prev;
            a[i * m + p] = 0;
        }
        prev = pivot;
    }
    let det = a[(m - 1) * m + (m - 1)];
    if det == 0 {
        return Ok(None);
    }
    // Back substitution; nums[i] = x_i * det is an integer by Cramer's rule.
    let mut nums = vec![0i128; m];
    for i in (0..m).rev() {
        let mut acc = b[i].checked_mul(det).ok_or(Overflow)?;
        for j in i + 1..m {
            acc = acc
                .checked_sub(a[i * m + j].checked_mul(nums[j]).ok_or(Overflow)?)
                .ok_or(Overflow)?;
        }
        debug_assert_eq!(acc % a[i * m + i], 0);
        nums[i] = acc / a[i * m + i];
    }
    Ok(Some((nums, det)))
}

/// Plain big-rational Gaussian elimination; `None` when singular.
pub(crate) fn solve_linear_rat(mut a: Vec<Rat>, mut b: Vec<Rat>, m: usize) -> Option<Vec<Rat>> {
    for p in 0..m {
        let pivot_row = (p..m).find(|&q| !a[q * m + p].is_zero())?;
        if pivot_row != p {
            for j in 0..m {
                a.swap(p * m + j, pivot_row * m + j);
            }
            b.swap(p, pivot_row);
        }
        let pivot = a[p * m + p].clone();
        for j in 0..m {
            a[p * m + j] = &a[p * m + j] / &pivot;
        }
        b[p] = &b[p] / &pivot;
        for i in 0..m {
            if i == p || a[i * m + p].is_zero() {
                continue;
            }
            let f = a[i * m + p].clone();
            for j in 0..m {
                a[i * m + j] = &a[i * m + j] - &(&f * &a[p * m + j]);
            }
            b[i] = &b[i] - &(&f * &b[p]);
        }
    }
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reflexive order relation of a chain `0 < 1 < ... < n-1`.
    fn chain(n: usize) -> Relation {
        let mut r = Relation::empty(n);
        for i in 0..n {
            for j in i..n {
                r.set(i, j, true);
            }
        }
        r
    }

    /// The four-point poset of two 2-chains `a<b`, `c<d` with the single
    /// extra comparison `a<d`, as a reflexive relation.
    fn n_hat() -> Relation {
        let mut r = Relation::equality(4);
        r.set(0, 1, true); // a < b
        r.set(2, 3, true); // c < d
        r.set(0, 3, true); // a < d
        r
    }

    #[test]
    fn quadratic_values() {
        let half = Rat::new(1, 2);
        let c2 = Relation::complete(2);
        assert_eq!(
            c2.quadratic_value(&[half.clone(), half.clone()]).unwrap(),
            Rat::one()
        );
        let l2 = chain(2);
        assert_eq!(
            l2.quadratic_value(&[half.clone(), half]).unwrap(),
            Rat::new(3, 4)
        );
        let e3 = Relation::equality(3);
        assert_eq!(
            e3.quadratic_value(&[Rat::one(), Rat::zero(), Rat::zero()])
                .unwrap(),
            Rat::one()
        );
        assert!(e3.quadratic_value(&[Rat::one()]).is_err());
    }

    #[test]
    fn norm_complete_and_nonreflexive() {
        for n in 1..=5 {
            assert_eq!(Relation::complete(n).norm().unwrap().value, Rat::one());
        }
        let mut r = chain(3);
        r.set(1, 1, false);
        assert_eq!(r.norm().unwrap().value, Rat::zero());
        assert_eq!(Relation::equality(3).norm().unwrap().value, Rat::new(1, 3));
    }

    #[test]
    fn chain_law() {
        for n in 1..=8usize {
            let p = chain(n).p_value().unwrap();
            assert!(p.reflexive);
            assert_eq!(
                p.value,
                RatOrInf::Fin(Rat::new(2 * n as i64, n as i64 + 1))
            );
        }
    }

    #[test]
    fn n_hat_p_value() {
        let p = n_hat().p_value().unwrap();
        assert_eq!(p.value, RatOrInf::Fin(Rat::new(12, 5)));
    }

    #[test]
    fn additivity() {
        let l2 = chain(2);
        let l1 = chain(1);
        let u = l2.disjoint_union(&l1);
        assert_eq!(
            u.p_value().unwrap().expect_finite(),
            &Rat::new(7, 3)
        );
        // identity with an empty block
        let e = Relation::empty(0);
        assert_eq!(l2.disjoint_union(&e), l2);
        // K5 = (4) U n_hat has P = 8/5 + 12/5 = 4
        let k5 = chain(4).disjoint_union(&n_hat());
        assert_eq!(k5.p_value().unwrap().expect_finite(), &Rat::int(4));
    }

    #[test]
    fn twin_pairs() {
        assert_eq!(Relation::equality(2).twins(), vec![(0, 1)]);
        assert_eq!(chain(2).twins(), vec![(0, 1)]);
        // In a chain the symmetrized incidence makes every pair twins; this
        // is what forces the uniform minimal vector.
        assert_eq!(chain(3).twins(), vec![(0, 1), (0, 2), (1, 2)]);
        let w = n_hat();
        let mins = w.norm().unwrap();
        for (a, b) in w.twins() {
            if w.r(a, b) <= 1 {
                assert_eq!(mins.witness[a], mins.witness[b]);
            }
        }
    }

    #[test]
    fn twin_coordinates_equal() {
        // On random reflexive relations every minimal
        // vector equalizes twins with symmetrized incidence at most 1.
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(99);
        for _ in 0..60 {
            let n = rng.gen_range(2..=5);
            let mut r = Relation::equality(n);
            for i in 0..n {
                for j in 0..n {
                    if i != j && rng.gen_bool(0.4) {
                        r.set(i, j, true);
                    }
                }
            }
            let cert = r.norm().unwrap();
            for (a, b) in r.twins() {
                if r.r(a, b) <= 1 {
                    assert_eq!(cert.witness[a], cert.witness[b], "{r:?}");
                }
            }
        }
    }

    #[test]
    fn stationary_candidate_surface() {
        let l2 = chain(2);
        let cands = l2.stationary_candidates();
        let full: Vec<_> = cands.iter().filter(|(s, _, _)| s.len() == 2).collect();
        assert_eq!(full.len(), 1);
        let (_, x, lam) = full[0];
        assert_eq!(x, &vec![Rat::new(1, 2), Rat::new(1, 2)]);
        assert_eq!(lam, &Rat::new(3, 4));
        // the multiplier equals the value of the form at the candidate
        for (_, x, lam) in &cands {
            assert_eq!(&l2.quadratic_value(x).unwrap(), lam);
        }

        let c2 = Relation::complete(2);
        for (s, _, lam) in c2.stationary_candidates() {
            if s.len() == 1 {
                assert_eq!(lam, Rat::one());
            }
        }

        // (2,2,2): three incomparable 2-chains, norm 1/4
        let k2 = chain(2)
            .disjoint_union(&chain(2))
            .disjoint_union(&chain(2));
        assert_eq!(k2.norm().unwrap().value, Rat::new(1, 4));
    }

    #[test]
    fn witness_attains_value() {
        let w = n_hat();
        let cert = w.norm().unwrap();
        assert_eq!(w.quadratic_value(&cert.witness).unwrap(), cert.value);
        let total: Rat = cert.witness.iter().cloned().sum();
        assert_eq!(total, Rat::one());
        assert!(cert.witness.iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn subset_monotonicity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for _ in 0..20 {
            let n = rng.gen_range(2..=5usize);
            let mut r = Relation::equality(n);
            for i in 0..n {
                for j in 0..n {
                    if i != j && rng.gen_bool(0.35) {
                        r.set(i, j, true);
                    }
                }
            }
            let full = r.p_value().unwrap().expect_finite().clone();
            let norm = r.norm().unwrap().value;
            assert!(!norm.is_negative() && norm <= Rat::one());
            for mask in 1u32..(1 << n) {
                let keep: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let sub = r.restrict(&keep).p_value().unwrap().expect_finite().clone();
                assert!(sub <= full);
            }
        }
    }

    #[test]
    fn faithfulness_basics() {
        assert!(chain(4).is_p_faithful().unwrap().0);
        // complete relation is P-faithful only for n = 1
        assert!(Relation::complete(1).is_p_faithful().unwrap().0);
        assert!(!Relation::complete(3).is_p_faithful().unwrap().0);
        // equality relation: faithful iff all classes singletons; equality
        // itself always is (each deletion removes a class).
        assert!(Relation::equality(3).is_p_faithful().unwrap().0);
    }

    #[test]
    fn cap_respected() {
        let r = Relation::equality(3);
        assert!(matches!(
            r.norm_with(2),
            Err(Error::SizeCap { n: 3, cap: 2 })
        ));
    }
}
