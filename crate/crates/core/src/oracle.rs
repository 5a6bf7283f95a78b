//! Independent oracles used by the test suite: a floating-point descent
//! minimizer for the norm (feasible probes only, hence a certified upper
//! bound), exhaustive poset enumeration up to isomorphism, and the
//! subset-exclusion classifier.

use crate::poset::{critical_patterns, Poset};
use crate::relation::Relation;
use crate::{Error, RepType};

/// Result of the numeric minimizer. Every probe is a feasible simplex point,
/// so `value` is always an upper bound on the exact norm.
#[derive(Clone, Copy, Debug)]
pub struct NumericResult {
    pub value: f64,
    pub iterations: usize,
    pub residual: f64,
}

/// Upper bound on the norm by multistart pairwise-coordinate descent from a
/// coarse barycentric grid; `depth` controls the number of descent sweeps.
pub fn numeric_norm(rel: &Relation, depth: usize) -> Result<NumericResult, Error> {
    let n = rel.len();
    if n > 8 {
        return Err(Error::SizeCap { n, cap: 8 });
    }
    assert!(n >= 1);
    // symmetrized coefficient matrix
    let mut m = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = rel.r(i, j) as f64 / 2.0;
        }
    }
    let f = |x: &[f64]| -> f64 {
        let mut v = 0.0;
        for i in 0..n {
            for j in 0..n {
                v += m[i * n + j] * x[i] * x[j];
            }
        }
        v
    };

    let mut best = f64::INFINITY;
    let mut iterations = 0;
    let mut residual = 0.0;
    for start in grid_points(n, 6) {
        let mut x = start;
        let mut last_improvement = 0.0;
        for _ in 0..depth.max(1) {
            iterations += 1;
            let before = f(&x);
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    // minimize f(x + t (e_i - e_j)) for t in [-x_i, x_j]
                    let mut g = 0.0;
                    for k in 0..n {
                        g += m[i * n + k] * x[k] - m[j * n + k] * x[k];
                    }
                    g *= 2.0;
                    let h = m[i * n + i] + m[j * n + j] - 2.0 * m[i * n + j];
                    let lo = -x[i];
                    let hi = x[j];
                    let t = if h > 0.0 {
                        (-g / (2.0 * h)).clamp(lo, hi)
                    } else if g > 0.0 {
                        lo
                    } else {
                        hi
                    };
                    x[i] += t;
                    x[j] -= t;
                    if x[i] < 0.0 {
                        x[i] = 0.0;
                    }
                    if x[j] < 0.0 {
                        x[j] = 0.0;
                    }
                }
            }
            let total: f64 = x.iter().sum();
            for v in x.iter_mut() {
                *v /= total;
            }
            last_improvement = before - f(&x);
            if last_improvement <= 0.0 {
                break;
            }
        }
        let v = f(&x);
        if v < best {
            best = v;
            residual = last_improvement.max(0.0);
        }
    }
    Ok(NumericResult {
        value: best,
        iterations,
        residual,
    })
}

/// All barycentric grid points with denominator `m`.
fn grid_points(n: usize, m: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn go(n: usize, m: usize, idx: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<f64>>) {
        if idx == n - 1 {
            cur[idx] = left;
            out.push(cur.iter().map(|&k| k as f64 / m as f64).collect());
            return;
        }
        for k in 0..=left {
            cur[idx] = k;
            go(n, m, idx + 1, left - k, cur, out);
        }
    }
    go(n, m, 0, m, &mut cur, &mut out);
    out
}

/// All posets on `n` elements, one per isomorphism class, generated by
/// repeatedly adjoining a maximal element over a down-set.
pub fn all_posets(n: usize) -> Result<Vec<Poset>, Error> {
    if n > 7 {
        return Err(Error::SizeCap { n, cap: 7 });
    }
    if n == 0 {
        return Ok(vec![Poset::antichain(0)]);
    }
    let mut layer = vec![Poset::antichain(1)];
    for _ in 1..n {
        let mut next: Vec<Poset> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for p in &layer {
            for d in down_sets(p) {
                let q = extend_with_max(p, &d);
                let key = q.canonical_key()?;
                if seen.insert(key) {
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    Ok(layer)
}

pub fn connected_posets(n: usize) -> Result<Vec<Poset>, Error> {
    Ok(all_posets(n)?.into_iter().filter(|p| p.is_connected()).collect())
}

/// Djoint count of isomorphism classes computed with an independent
/// (maximum-key) canonical form; used as a self-consistency cross-check.
pub fn all_posets_count_independent(n: usize) -> Result<usize, Error> {
    if n > 7 {
        return Err(Error::SizeCap { n, cap: 7 });
    }
    if n == 0 {
        return Ok(1);
    }
    let mut layer = vec![Poset::antichain(1)];
    if n > 1 {
        for _ in 1..n {
            let mut next: Vec<Poset> = Vec::new();
            let mut seen = std::collections::HashSet::new();
            for p in &layer {
                for d in down_sets(p) {
                    let q = extend_with_max(p, &d);
                    if seen.insert(max_canonical_key(&q)) {
                        next.push(q);
                    }
                }
            }
            layer = next;
        }
    }
    Ok(layer.len())
}

fn max_canonical_key(p: &Poset) -> u128 {
    let n = p.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = 0u128;
    fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, f);
            perm.swap(k, i);
        }
    }
    permute(&mut perm, 0, &mut |pm| {
        let mut key: u128 = 0;
        for i in 0..n {
            for j in 0..n {
                if p.lt(pm[i], pm[j]) {
                    key |= 1 << (i * n + j);
                }
            }
        }
        if key > best {
            best = key;
        }
    });
    best
}

/// All downward-closed subsets, as sorted element lists.
fn down_sets(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut out = Vec::new();
    'mask: for mask in 0u64..(1 << n) {
        for x in 0..n {
            if mask >> x & 1 == 1 {
                for y in 0..n {
                    if p.lt(y, x) && mask >> y & 1 == 0 {
                        continue 'mask;
                    }
                }
            }
        }
        out.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
    }
    out
}

fn extend_with_max(p: &Poset, below: &[usize]) -> Poset {
    let n = p.len() + 1;
    let mut lt = vec![false; n * n];
    for i in 0..p.len() {
        for j in 0..p.len() {
            if p.lt(i, j) {
                lt[i * n + j] = true;
            }
        }
    }
    for &d in below {
        lt[d * n + (n - 1)] = true;
    }
    Poset::from_lt_unchecked(n, lt)
}

/// The original exclusion form of the classification: wild when one of the
/// N-list posets embeds, else tame when one of the K-list posets embeds,
/// else finite.
pub fn exclusion_classify(poset: &Poset) -> RepType {
    let pats = critical_patterns();
    let wild = pats
        .iter()
        .filter(|(name, _)| name.starts_with('N'))
        .any(|(_, p)| p.embeds(poset));
    if wild {
        return RepType::Wild;
    }
    let tame = pats
        .iter()
        .filter(|(name, _)| name.starts_with('K'))
        .any(|(_, p)| p.embeds(poset));
    if tame {
        RepType::Tame
    } else {
        RepType::Finite
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::n_hat;

    #[test]
    fn poset_counts() {
        // isomorphism classes of posets on 1..=6 elements
        let expect = [1usize, 2, 5, 16, 63, 318];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(all_posets(i + 1).unwrap().len(), e, "n = {}", i + 1);
        }
        // connected classes at small sizes
        assert_eq!(connected_posets(1).unwrap().len(), 1);
        assert_eq!(connected_posets(3).unwrap().len(), 3);
    }

    #[test]
    fn poset_counts_cross_check() {
        for n in 1..=5 {
            assert_eq!(
                all_posets(n).unwrap().len(),
                all_posets_count_independent(n).unwrap()
            );
        }
    }

    #[test]
    fn numeric_norm_basics() {
        let l3 = Poset::chain(3).to_relation();
        let r = numeric_norm(&l3, 12).unwrap();
        assert!((r.value - 2.0 / 3.0).abs() < 1e-6, "{}", r.value);

        let c4 = Relation::complete(4);
        assert!((numeric_norm(&c4, 12).unwrap().value - 1.0).abs() < 1e-9);

        let k1 = Relation::equality(4);
        assert!((numeric_norm(&k1, 12).unwrap().value - 0.25).abs() < 1e-6);

        // n-hat: exact norm 5/12
        let nh = n_hat().to_relation();
        assert!((numeric_norm(&nh, 12).unwrap().value - 5.0 / 12.0).abs() < 1e-6);
    }

    #[test]
    fn numeric_is_upper_bound() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(41);
        for _ in 0..25 {
            let n = rng.gen_range(2..=5);
            let mut rel = Relation::equality(n);
            for i in 0..n {
                for j in 0..n {
                    if i != j && rng.gen_bool(0.4) {
                        rel.set(i, j, true);
                    }
                }
            }
            let exact = rel.norm().unwrap().value.to_f64();
            let num = numeric_norm(&rel, 12).unwrap().value;
            assert!(num >= exact - 1e-9);
            assert!(num - exact < 1e-6);
        }
    }

    #[test]
    fn exclusion_examples() {
        assert_eq!(exclusion_classify(&Poset::primitive(&[2, 2, 2])), RepType::Tame);
        assert_eq!(exclusion_classify(&Poset::chain(9)), RepType::Finite);
        assert_eq!(
            exclusion_classify(&Poset::primitive(&[1, 1, 1, 2])),
            RepType::Wild
        );
        let k5 = Poset::chain(4).disjoint_union(&n_hat());
        assert_eq!(exclusion_classify(&k5), RepType::Tame);
    }
}
