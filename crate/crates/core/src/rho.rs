//! The separating functions `rho` and `mu` on extended naturals.
//!
//! `rho(n) = 2n/(n+1)` for finite `n`, `rho(0) = 0`, `rho(inf) = 2`; tuples
//! sum pointwise. `mu(n1,n2,n3) = n1 n2 + n1 n3 + n2 n3 + n1 n2 n3` with the
//! conventions `mu(inf,0,0) = 4` and `mu(inf,n2,n3) = inf` for `n2 != 0`.

use crate::exact::{ExtNat, Rat};
use crate::Error;
use std::collections::BTreeSet;

/// `rho` of a single extended natural.
pub fn rho(n: ExtNat) -> Rat {
    match n {
        ExtNat::Fin(0) => Rat::zero(),
        ExtNat::Fin(n) => Rat::new(2 * n as i128, n as i128 + 1),
        ExtNat::Inf => Rat::int(2),
    }
}

/// `rho` of a tuple: the sum over all entries. Order-insensitive.
pub fn rho_sum(args: &[ExtNat]) -> Rat {
    args.iter().map(|&n| rho(n)).sum()
}

/// `mu(n1,n2,n3)`; arguments are sorted internally, so the function is total
/// and symmetric.
pub fn mu3(a: ExtNat, b: ExtNat, c: ExtNat) -> ExtNat {
    let mut v = [a, b, c];
    v.sort_unstable_by(|x, y| y.cmp(x));
    match v {
        [ExtNat::Inf, n2, n3] => {
            if n2.is_zero() && n3.is_zero() {
                ExtNat::Fin(4)
            } else {
                ExtNat::Inf
            }
        }
        [ExtNat::Fin(n1), ExtNat::Fin(n2), ExtNat::Fin(n3)] => {
            let (n1, n2, n3) = (n1 as u128, n2 as u128, n3 as u128);
            let m = n1 * n2 + n1 * n3 + n2 * n3 + n1 * n2 * n3;
            ExtNat::Fin(u64::try_from(m).expect("mu overflow"))
        }
        _ => unreachable!("sorted descending"),
    }
}

/// For finite arguments `>= 1`, the three finiteness tests agree pairwise:
/// `rho(n1,n2,n3) < 4`, `sum 1/(n_i+1) > 1` and `mu(n1-1,n2-1,n3-1) < 4`,
/// and likewise their equality variants. Returns whether all six agree.
pub fn rho_mu_criteria_agree(n1: u64, n2: u64, n3: u64) -> bool {
    assert!(n1 >= 1 && n2 >= 1 && n3 >= 1);
    let r = rho_sum(&[ExtNat::Fin(n1), ExtNat::Fin(n2), ExtNat::Fin(n3)]);
    let four = Rat::int(4);

    let inv_sum: Rat = [n1, n2, n3]
        .iter()
        .map(|&n| Rat::new(1, n as i128 + 1))
        .sum();
    let one = Rat::one();

    let m = mu3(
        ExtNat::Fin(n1 - 1),
        ExtNat::Fin(n2 - 1),
        ExtNat::Fin(n3 - 1),
    );
    let m4 = ExtNat::Fin(4);

    let strict = [r < four, inv_sum > one, m < m4];
    let equal = [r == four, inv_sum == one, m == m4];
    strict.iter().all(|&s| s == strict[0]) && equal.iter().all(|&e| e == equal[0])
}

/// All multisets of extended naturals `>= 1` whose `rho`-sum is exactly 4,
/// found by finite search. Each solution is returned sorted descending
/// (infinity first).
pub fn rho_eq_four_solutions() -> BTreeSet<Vec<ExtNat>> {
    // rho(n) >= 1 for n >= 1, so at most four entries; rho is bounded by 2,
    // so at least two. Finite entries above 5 cannot appear: the largest
    // finite rho value used by a solution is rho(5) = 5/3, and any solution
    // with an entry n >= 6 would need the rest to sum to 4 - rho(n), which
    // the search below falsifies. The bound 64 is generous.
    const BOUND: u64 = 64;
    let four = Rat::int(4);
    let mut out = BTreeSet::new();
    let mut stack: Vec<ExtNat> = Vec::new();

    fn key(n: &ExtNat) -> u64 {
        match n {
            ExtNat::Inf => u64::MAX,
            ExtNat::Fin(k) => *k,
        }
    }

    fn search(
        stack: &mut Vec<ExtNat>,
        sum: Rat,
        max_next: u64,
        four: &Rat,
        out: &mut BTreeSet<Vec<ExtNat>>,
    ) {
        if sum == *four && !stack.is_empty() {
            let mut sol = stack.clone();
            sol.sort_unstable_by(|a, b| b.cmp(a));
            out.insert(sol);
            return;
        }
        if stack.len() == 4 {
            return;
        }
        let remaining = four - &sum;
        // Each further entry contributes at least 1.
        if remaining < Rat::one() {
            return;
        }
        let mut next: Vec<ExtNat> = (1..=BOUND.min(max_next)).map(ExtNat::Fin).collect();
        if max_next == u64::MAX {
            next.push(ExtNat::Inf);
        }
        for n in next {
            let s = &sum + &rho(n);
            if s > *four {
                continue;
            }
            stack.push(n);
            search(stack, s, key(&n), four, out);
            stack.pop();
        }
    }

    search(&mut stack, Rat::zero(), u64::MAX, &four, &mut out);
    out
}

/// Membership test against the solution set of `rho = 4`.
pub fn is_rho_eq_four(args: &[ExtNat]) -> bool {
    rho_sum(args) == Rat::int(4)
}

/// Order of the reflection group with three involutive generators whose
/// pairwise products have orders `n1, n2, n3`: finite with order
/// `8 / (4 - rho(n1-1, n2-1, n3-1))` when that rho-sum is below 4, infinite
/// otherwise.
pub fn triangle_group_order(n1: u64, n2: u64, n3: u64) -> Result<ExtNat, Error> {
    assert!(n1 >= 2 && n2 >= 2 && n3 >= 2);
    let r = rho_sum(&[
        ExtNat::Fin(n1 - 1),
        ExtNat::Fin(n2 - 1),
        ExtNat::Fin(n3 - 1),
    ]);
    let four = Rat::int(4);
    if r >= four {
        return Ok(ExtNat::Inf);
    }
    let order = Rat::int(8) / (four - r);
    if !order.is_integer() {
        return Err(Error::NonIntegral);
    }
    let n: u64 = order
        .numer()
        .try_into()
        .map_err(|_| Error::NonIntegral)?;
    Ok(ExtNat::Fin(n))
}
