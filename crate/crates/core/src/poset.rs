//! Finite posets: construction from covers, width, the separating value
//! `rho(S)`, critical-subset detection, wattles, and the P-faithfulness scan.

use crate::exact::qfrac::{rho_q, Q};
use crate::exact::{ExtNat, Rat, RatOrInf};
use crate::relation::Relation;
use crate::{Error, RepType};

pub const ENUM_CAP: usize = 20;

/// A finite poset on `{0..n}`, stored as its strict-order matrix
/// (irreflexive, antisymmetric, transitively closed).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poset {
    n: usize,
    lt: Vec<bool>,
}

impl Poset {
    /// Builds the poset generated by a cover list; rejects cycles.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset, Error> {
        let mut lt = vec![false; n * n];
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::DimensionMismatch { expected: n, got: a.max(b) + 1 });
            }
            lt[a * n + b] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if lt[i * n + k] {
                    for j in 0..n {
                        if lt[k * n + j] {
                            lt[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            if lt[i * n + i] {
                return Err(Error::CycleDetected);
            }
        }
        Ok(Poset { n, lt })
    }

    /// Antichain on `n` points.
    pub fn antichain(n: usize) -> Poset {
        Poset { n, lt: vec![false; n * n] }
    }

    /// Chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Poset {
        let mut lt = vec![false; n * n];
        for i in 0..n {
            for j in i + 1..n {
                lt[i * n + j] = true;
            }
        }
        Poset { n, lt }
    }

    /// Disjoint union of pairwise-incomparable chains.
    pub fn primitive(sizes: &[usize]) -> Poset {
        let n: usize = sizes.iter().sum();
        let mut p = Poset::antichain(n);
        let mut off = 0;
        for &s in sizes {
            for a in 0..s {
                for b in a + 1..s {
                    p.set_lt(off + a, off + b);
                }
            }
            off += s;
        }
        p
    }

    pub(crate) fn from_lt_unchecked(n: usize, lt: Vec<bool>) -> Poset {
        debug_assert_eq!(lt.len(), n * n);
        Poset { n, lt }
    }

    fn set_lt(&mut self, a: usize, b: usize) {
        self.lt[a * self.n + b] = true;
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a * self.n + b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b) || self.lt(b, a)
    }

    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        !self.comparable(a, b)
    }

    /// Elements incomparable to `x`.
    pub fn incomparables(&self, x: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| self.incomparable(x, y))
            .collect()
    }

    /// Elements incomparable to every element of `set`.
    pub fn incomparables_of_set(&self, set: &[usize]) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| set.iter().all(|&x| self.incomparable(x, y)))
            .collect()
    }

    /// Hasse cover pairs.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b) && !(0..self.n).any(|z| self.lt(a, z) && self.lt(z, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The reflexive order relation of the poset.
    pub fn to_relation(&self) -> Relation {
        let mut r = Relation::equality(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.lt(i, j) {
                    r.set(i, j, true);
                }
            }
        }
        r
    }

    /// Order dual.
    pub fn dual(&self) -> Poset {
        let mut lt = vec![false; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if self.lt(i, j) {
                    lt[j * self.n + i] = true;
                }
            }
        }
        Poset { n: self.n, lt }
    }

    /// Induced subposet on the listed elements (in order).
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let m = keep.len();
        let mut lt = vec![false; m * m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.lt(i, j) {
                    lt[a * m + b] = true;
                }
            }
        }
        Poset { n: m, lt }
    }

    /// Disjoint (cardinal) sum.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let n = self.n + other.n;
        let mut p = Poset::antichain(n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.lt(i, j) {
                    p.set_lt(i, j);
                }
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                if other.lt(i, j) {
                    p.set_lt(self.n + i, self.n + j);
                }
            }
        }
        p
    }

    /// Cardinal product: pairs compare when both coordinates do.
    pub fn product(&self, other: &Poset) -> Poset {
        let n = self.n * other.n;
        let mut p = Poset::antichain(n);
        for a1 in 0..self.n {
            for b1 in 0..other.n {
                for a2 in 0..self.n {
                    for b2 in 0..other.n {
                        if self.leq(a1, a2) && other.leq(b1, b2) && (a1, b1) != (a2, b2) {
                            p.set_lt(a1 * other.n + b1, a2 * other.n + b2);
                        }
                    }
                }
            }
        }
        p
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.comparable(a, b)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for y in 0..self.n {
                if !seen[y] && x != y && self.comparable(x, y) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Width: size of a maximum antichain, via a minimum chain cover
    /// (Dilworth) computed as a maximum bipartite matching.
    pub fn width(&self) -> usize {
        let n = self.n;
        let mut match_right: Vec<Option<usize>> = vec![None; n];
        let mut matched = 0;
        for i in 0..n {
            let mut visited = vec![false; n];
            if self.augment(i, &mut visited, &mut match_right) {
                matched += 1;
            }
        }
        n - matched
    }

    fn augment(&self, i: usize, visited: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for j in 0..self.n {
            if self.lt(i, j) && !visited[j] {
                visited[j] = true;
                if match_right[j].is_none()
                    || self.augment(match_right[j].unwrap(), visited, match_right)
                {
                    match_right[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }

    /// Number of elements of the longest chain.
    pub fn longest_chain(&self) -> usize {
        match self.max_weight_chain(&vec![ExtNat::Fin(1); self.n]) {
            ExtNat::Fin(v) => v as usize,
            ExtNat::Inf => unreachable!(),
        }
    }

    /// Maximum total weight of a chain; infinite as soon as an
    /// infinite-weight element exists (a singleton chain attains it).
    pub fn max_weight_chain(&self, w: &[ExtNat]) -> ExtNat {
        if self.n == 0 {
            return ExtNat::Fin(0);
        }
        if w.iter().any(|v| !v.is_finite()) {
            return ExtNat::Inf;
        }
        let order = self.linear_extension();
        let mut best = vec![0u64; self.n];
        let mut overall = 0u64;
        for &x in &order {
            let wx = w[x].finite().unwrap();
            let mut b = wx;
            for &y in &order {
                if self.lt(y, x) {
                    b = b.max(best[y] + wx);
                }
            }
            best[x] = b;
            overall = overall.max(b);
        }
        ExtNat::Fin(overall)
    }

    /// Any topological order of the strict order.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| (0..self.n).filter(|&y| self.lt(y, x)).count());
        order
    }

    /// `P(S)` of the order relation.
    pub fn p_value(&self) -> Result<Rat, Error> {
        Ok(self.to_relation().p_value()?.expect_finite().clone())
    }

    pub fn is_p_faithful(&self) -> Result<(bool, Option<usize>), Error> {
        self.to_relation().is_p_faithful()
    }

    /// Maximum of `sum rho(|component|)` over primitive subsets.
    pub fn primitive_value(&self) -> Result<Rat, Error> {
        let w = vec![ExtNat::Fin(1); self.n];
        match rho_weighted_parts(self, &w, &|_| true, ENUM_CAP)?.0 {
            RatOrInf::Fin(r) => Ok(r),
            RatOrInf::Inf => unreachable!("primitive values are finite"),
        }
    }

    /// Maximum chain size over embedded quasiprimitive subsets (a four-point
    /// hook plus an incomparable chain); zero when no hook embeds.
    pub fn quasiprimitive_value(&self) -> Result<Rat, Error> {
        let w = vec![ExtNat::Fin(1); self.n];
        match rho_weighted_parts(self, &w, &|_| true, ENUM_CAP)?.1 {
            RatOrInf::Fin(r) => Ok(r),
            RatOrInf::Inf => unreachable!("unit weights are finite"),
        }
    }

    /// `rho(S)`: the larger of the primitive and quasiprimitive values.
    pub fn rho_value(&self) -> Result<Rat, Error> {
        self.rho_value_with(ENUM_CAP)
    }

    pub fn rho_value_with(&self, cap: usize) -> Result<Rat, Error> {
        let w = vec![ExtNat::Fin(1); self.n];
        let (p, q) = rho_weighted_parts(self, &w, &|_| true, cap)?;
        match p.max(q) {
            RatOrInf::Fin(r) => Ok(r),
            RatOrInf::Inf => unreachable!("unit weights are finite"),
        }
    }

    /// Finite iff `rho(S) < 4`, tame iff `= 4`, wild otherwise.
    pub fn classify(&self) -> Result<RepType, Error> {
        self.classify_with(ENUM_CAP)
    }

    pub fn classify_with(&self, cap: usize) -> Result<RepType, Error> {
        let r = self.rho_value_with(cap)?;
        let four = Rat::int(4);
        Ok(if r < four {
            RepType::Finite
        } else if r == four {
            RepType::Tame
        } else {
            RepType::Wild
        })
    }

    /// All embeddings (as element sets) of the critical posets K1..K5 and
    /// N0..N5 into this poset.
    pub fn contains_critical(&self) -> Vec<(&'static str, Vec<usize>)> {
        let mut out = Vec::new();
        for (name, pat) in critical_patterns() {
            for emb in pat.embeddings(self, true) {
                out.push((name, emb));
            }
        }
        out
    }

    /// Canonical isomorphism key: the minimum strict-order bit matrix over
    /// all relabelings. Capped at 8 elements.
    pub fn canonical_key(&self) -> Result<u128, Error> {
        if self.n > 8 {
            return Err(Error::SizeCap { n: self.n, cap: 8 });
        }
        let n = self.n;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u128::MAX;
        permute(&mut perm, 0, &mut |p| {
            let mut key: u128 = 0;
            for i in 0..n {
                for j in 0..n {
                    if self.lt(p[i], p[j]) {
                        key |= 1 << (i * n + j);
                    }
                }
            }
            if key < best {
                best = key;
            }
        });
        Ok(best)
    }

    pub fn isomorphic(&self, other: &Poset) -> Result<bool, Error> {
        if self.n != other.n {
            return Ok(false);
        }
        Ok(self.canonical_key()? == other.canonical_key()?)
    }
}

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

/// Shared engine for weighted `rho`: the maxima of the primitive and
/// quasiprimitive values over all subsets. `chain_ok` decides whether a
/// chain's weights may be summed; otherwise the chain weighs infinity and
/// contributes the limit value 2.
pub(crate) fn rho_weighted_parts(
    poset: &Poset,
    weights: &[ExtNat],
    chain_ok: &dyn Fn(&[usize]) -> bool,
    cap: usize,
) -> Result<(RatOrInf, RatOrInf), Error> {
    let n = poset.len();
    assert_eq!(weights.len(), n);
    if n > cap || n >= 63 {
        return Err(Error::SizeCap { n, cap });
    }

    let mut best_prim: Option<Q> = None;
    'subsets: for mask in 1u64..(1 << n) {
        let elems: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let mut seen = vec![false; elems.len()];
        let mut total = Q::zero();
        for s in 0..elems.len() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(a) = stack.pop() {
                for b in 0..elems.len() {
                    if !seen[b] && poset.comparable(elems[a], elems[b]) {
                        seen[b] = true;
                        comp.push(b);
                        stack.push(b);
                    }
                }
            }
            // the component must be a chain for the subset to be primitive
            for x in 0..comp.len() {
                for y in x + 1..comp.len() {
                    if poset.incomparable(elems[comp[x]], elems[comp[y]]) {
                        continue 'subsets;
                    }
                }
            }
            let members: Vec<usize> = comp.iter().map(|&i| elems[i]).collect();
            let wsum: ExtNat = if chain_ok(&members) {
                members.iter().map(|&m| weights[m]).sum()
            } else {
                ExtNat::Inf
            };
            total = total.add(rho_q(wsum));
        }
        best_prim = Some(match best_prim {
            None => total,
            Some(b) if b.cmp(&total) == std::cmp::Ordering::Less => total,
            Some(b) => b,
        });
    }
    let prim = RatOrInf::Fin(best_prim.map(|q| q.to_rat()).unwrap_or_else(Rat::zero));

    // Quasiprimitive part: a hook copy plus the heaviest incomparable chain
    // (weights summed pointwise, no rho).
    let mut quasi = RatOrInf::Fin(Rat::zero());
    if n >= 4 {
        for hook in hook_embeddings(poset, false) {
            let free = poset.incomparables_of_set(&hook);
            let sub = poset.induced(&free);
            let w: Vec<ExtNat> = free.iter().map(|&i| weights[i]).collect();
            let val = match sub.max_weight_chain(&w) {
                ExtNat::Fin(v) => RatOrInf::Fin(Rat::int(v as i64)),
                ExtNat::Inf => RatOrInf::Inf,
            };
            quasi = quasi.max(val);
            if matches!(quasi, RatOrInf::Inf) {
                break;
            }
        }
    }
    Ok((prim, quasi))
}

/// All induced copies of the four-point hook (two 2-chains `a<b`, `c<d`
/// with the single extra comparison `a<d`), as `[a, b, c, d]`.
pub(crate) fn hook_embeddings(poset: &Poset, first_only: bool) -> Vec<[usize; 4]> {
    let n = poset.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !poset.lt(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c || !poset.lt(c, d) {
                        continue;
                    }
                    if poset.lt(a, d)
                        && poset.incomparable(a, c)
                        && poset.incomparable(b, c)
                        && poset.incomparable(b, d)
                    {
                        out.push([a, b, c, d]);
                        if first_only {
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}

/// A critical pattern: a primitive poset, or a hook plus a chain.
pub enum Pattern {
    Primitive(Vec<usize>),
    HookPlusChain(usize),
}

impl Pattern {
    pub fn size(&self) -> usize {
        match self {
            Pattern::Primitive(sizes) => sizes.iter().sum(),
            Pattern::HookPlusChain(k) => 4 + k,
        }
    }

    pub fn embeds(&self, host: &Poset) -> bool {
        !self.embeddings(host, false).is_empty()
    }

    /// Element sets of induced embeddings; with `all = false` stops at the
    /// first hit.
    pub fn embeddings(&self, host: &Poset, all: bool) -> Vec<Vec<usize>> {
        if self.size() > host.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        match self {
            Pattern::Primitive(sizes) => {
                let mut sorted = sizes.clone();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                let allowed: Vec<usize> = (0..host.len()).collect();
                let mut chosen: Vec<Vec<usize>> = Vec::new();
                search_chains(host, &sorted, &allowed, &mut chosen, &mut out, all);
            }
            Pattern::HookPlusChain(k) => {
                for hook in hook_embeddings(host, false) {
                    let free = host.incomparables_of_set(&hook);
                    let sub = host.induced(&free);
                    for chain in chains_of_len(&sub, *k, all) {
                        let mut emb: Vec<usize> = hook.to_vec();
                        emb.extend(chain.iter().map(|&i| free[i]));
                        emb.sort_unstable();
                        out.push(emb);
                        if !all {
                            return dedup_sorted(out);
                        }
                    }
                }
            }
        }
        dedup_sorted(out)
    }
}

fn dedup_sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort();
    v.dedup();
    v
}

/// Recursively picks pairwise-incomparable chains of the given sizes.
fn search_chains(
    host: &Poset,
    sizes: &[usize],
    allowed: &[usize],
    chosen: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<usize>>,
    all: bool,
) {
    if sizes.is_empty() {
        let mut emb: Vec<usize> = chosen.iter().flatten().copied().collect();
        emb.sort_unstable();
        out.push(emb);
        return;
    }
    let sub = host.induced(allowed);
    for chain in chains_of_len(&sub, sizes[0], true) {
        let chain_elems: Vec<usize> = chain.iter().map(|&i| allowed[i]).collect();
        let rest: Vec<usize> = allowed
            .iter()
            .copied()
            .filter(|&x| chain_elems.iter().all(|&c| host.incomparable(x, c)))
            .collect();
        chosen.push(chain_elems);
        search_chains(host, &sizes[1..], &rest, chosen, out, all);
        chosen.pop();
        if !all && !out.is_empty() {
            return;
        }
    }
}

/// All chains with exactly `k` elements, as index sets into the poset.
fn chains_of_len(poset: &Poset, k: usize, all: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    fn extend(
        poset: &Poset,
        k: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        all: bool,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for x in start..poset.len() {
            if current.iter().all(|&c| poset.comparable(c, x)) {
                current.push(x);
                extend(poset, k, x + 1, current, out, all);
                current.pop();
                if !all && !out.is_empty() {
                    return;
                }
            }
        }
    }
    let mut current = Vec::new();
    extend(poset, k, 0, &mut current, &mut out, all);
    out
}

/// The named critical posets: presence of a K bounds finite type, presence
/// of an N bounds tameness.
pub fn critical_patterns() -> Vec<(&'static str, Pattern)> {
    vec![
        ("K1", Pattern::Primitive(vec![1, 1, 1, 1])),
        ("K2", Pattern::Primitive(vec![2, 2, 2])),
        ("K3", Pattern::Primitive(vec![1, 3, 3])),
        ("K4", Pattern::Primitive(vec![1, 2, 5])),
        ("K5", Pattern::HookPlusChain(4)),
        ("N0", Pattern::Primitive(vec![1, 1, 1, 1, 1])),
        ("N1", Pattern::Primitive(vec![1, 1, 1, 2])),
        ("N2", Pattern::Primitive(vec![3, 2, 2])),
        ("N3", Pattern::Primitive(vec![1, 3, 4])),
        ("N4", Pattern::Primitive(vec![1, 2, 6])),
        ("N5", Pattern::HookPlusChain(5)),
    ]
}

/// The four-point hook `a<b, c<d, a<d` (the smallest wattle).
pub fn n_hat() -> Poset {
    Wattle::new(&[2, 2]).unwrap().poset().clone()
}

/// A wattle: disjoint chains `Z_1..Z_t`, each of size at least 2, where the
/// minimal element of `Z_i` sits below the maximal element of `Z_{i+1}` and
/// there are no other cross comparisons. Elements are numbered chain-major,
/// bottom to top.
pub struct Wattle {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    poset: Poset,
}

impl Wattle {
    pub fn new(sizes: &[usize]) -> Result<Wattle, Error> {
        if sizes.len() < 2 || sizes.iter().any(|&s| s < 2) {
            return Err(Error::BadSizes);
        }
        let t = sizes.len();
        let mut offsets = Vec::with_capacity(t);
        let mut off = 0;
        for &s in sizes {
            offsets.push(off);
            off += s;
        }
        let n = off;
        let mut covers = Vec::new();
        for (i, &s) in sizes.iter().enumerate() {
            for a in 0..s - 1 {
                covers.push((offsets[i] + a, offsets[i] + a + 1));
            }
            if i + 1 < t {
                // minimal of Z_i below maximal of Z_{i+1}
                covers.push((offsets[i], offsets[i + 1] + sizes[i + 1] - 1));
            }
        }
        let poset = Poset::from_covers(n, &covers)?;
        Ok(Wattle {
            sizes: sizes.to_vec(),
            offsets,
            poset,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Minimal point of chain `i` (a named point for `i < t-1`).
    pub fn z_minus(&self, i: usize) -> usize {
        self.offsets[i]
    }

    /// Maximal point of chain `i` (a named point for `i > 0`).
    pub fn z_plus(&self, i: usize) -> usize {
        self.offsets[i] + self.sizes[i] - 1
    }

    /// Points that are neither a named `z^-` nor a named `z^+`.
    pub fn common_points(&self) -> Vec<usize> {
        let t = self.sizes.len();
        let named: std::collections::BTreeSet<usize> = (0..t - 1)
            .map(|i| self.z_minus(i))
            .chain((1..t).map(|i| self.z_plus(i)))
            .collect();
        (0..self.poset.len())
            .filter(|x| !named.contains(x))
            .collect()
    }

    /// The balancedness conditions under which a wattle can be P-faithful:
    /// with `k = |Z_1|`,
    ///   a) interior chains have size `k` or `k+1`,
    ///   b) the last chain has size `k`,
    ///   c) `m+1` and `t` are coprime, where `m` counts the long chains,
    ///   d) the long chains sit at the 1-based positions
    ///      `floor(i*t/(m+1)) + 1`.
    pub fn is_uniform(&self) -> bool {
        let t = self.sizes.len();
        let k = self.sizes[0];
        if self.sizes[t - 1] != k {
            return false;
        }
        for i in 1..t - 1 {
            if self.sizes[i] != k && self.sizes[i] != k + 1 {
                return false;
            }
        }
        let longs: Vec<usize> = (0..t).filter(|&i| self.sizes[i] == k + 1).collect();
        let m = longs.len();
        if gcd_usize(m + 1, t) != 1 {
            return false;
        }
        for (idx, &pos) in longs.iter().enumerate() {
            let i = idx + 1;
            if pos + 1 != (i * t) / (m + 1) + 1 {
                return false;
            }
        }
        true
    }

    /// Number of long chains among the first `i` chains (`i` 1-based); the
    /// running-count form cross-validated against the position form above.
    pub fn long_count_upto(&self, i: usize) -> usize {
        let k = self.sizes[0];
        (0..i).filter(|&j| self.sizes[j] == k + 1).count()
    }

    /// The unique positive full-support stationary vector, when one exists,
    /// normalized to total 1, together with the common-point weight `alpha`,
    /// the per-chain sum `beta`, and `gamma = x(z_1^-)`.
    pub fn positive_vector(&self) -> Option<(Vec<Rat>, Rat, Rat, Rat)> {
        let rel = self.poset.to_relation();
        let full: Vec<usize> = (0..self.poset.len()).collect();
        let cands = rel.stationary_candidates();
        let (_, x, _) = cands.into_iter().find(|(s, _, _)| s == &full)?;
        if !x.iter().all(|v| v.is_positive()) {
            return None;
        }
        let commons = self.common_points();
        let alpha = x[*commons.first()?].clone();
        let beta: Rat = (0..self.sizes[0])
            .map(|a| x[self.offsets[0] + a].clone())
            .sum();
        let gamma = x[self.z_minus(0)].clone();
        Some((x, alpha, beta, gamma))
    }
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_usize(b, a % b)
    }
}

/// Outcome of the semilinearity test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SemilinearCheck {
    /// The poset is a chain, to which the notion does not apply.
    AlreadyLinear,
    Semilinear,
    NotSemilinear,
}

/// A non-chain poset is semilinear when every element is incomparable to at
/// most one other element.
pub fn is_semilinear_poset(poset: &Poset) -> SemilinearCheck {
    if poset.is_chain() {
        return SemilinearCheck::AlreadyLinear;
    }
    if (0..poset.len()).all(|x| poset.incomparables(x).len() <= 1) {
        SemilinearCheck::Semilinear
    } else {
        SemilinearCheck::NotSemilinear
    }
}

/// The finest ordinal-sum decomposition: consecutive blocks where everything
/// in an earlier block lies below everything in a later one.
pub fn ordinal_blocks(poset: &Poset) -> Vec<Vec<usize>> {
    let n = poset.len();
    if n == 0 {
        return Vec::new();
    }
    let order = poset.linear_extension();
    let mut blocks = Vec::new();
    let mut start = 0;
    for cut in 1..=n {
        if cut < n {
            let lower = &order[start.min(cut)..cut];
            let _ = lower;
            let valid = order[..cut]
                .iter()
                .all(|&a| order[cut..].iter().all(|&b| poset.lt(a, b)));
            if !valid {
                continue;
            }
        }
        let mut block: Vec<usize> = order[start..cut].to_vec();
        block.sort_unstable();
        blocks.push(block);
        start = cut;
    }
    blocks
}

/// Whether the poset is an ordinal sum of blocks isomorphic to the given
/// primitive shapes, e.g. `(1)`, `(1,1)`, `(1,2)`.
pub fn is_ordinal_sum_of(poset: &Poset, shapes: &[&[usize]]) -> bool {
    for block in ordinal_blocks(poset) {
        let sub = poset.induced(&block);
        let matched = shapes.iter().any(|shape| {
            let pat = Poset::primitive(shape);
            sub.len() == pat.len()
                && matches!(
                    (sub.canonical_key(), pat.canonical_key()),
                    (Ok(a), Ok(b)) if a == b
                )
        });
        if !matched {
            return false;
        }
    }
    true
}

/// Recognizes the poset as a wattle, returning chain sizes if so.
pub fn as_wattle(poset: &Poset) -> Result<Option<Vec<usize>>, Error> {
    let n = poset.len();
    if n < 4 {
        return Ok(None);
    }
    let key = poset.canonical_key()?;
    for comp in compositions_min2(n) {
        if comp.len() < 2 {
            continue;
        }
        let w = Wattle::new(&comp)?;
        if w.poset().canonical_key()? == key {
            return Ok(Some(comp));
        }
    }
    Ok(None)
}

/// Compositions of `n` into parts of size at least 2.
pub fn compositions_min2(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in 2..=rem {
            cur.push(part);
            go(rem - part, cur, out);
            cur.pop();
        }
    }
    go(n, &mut cur, &mut out);
    out
}

/// Report of the exhaustive faithfulness scan.
#[derive(Debug, Default)]
pub struct FaithfulScan {
    pub checked: usize,
    pub faithful_chains: usize,
    pub faithful_uniform_wattles: usize,
    /// Connected P-faithful posets that are neither chains nor uniform
    /// wattles. Expected empty.
    pub counterexamples: Vec<Poset>,
}

/// Scans all connected posets with up to `max_n` elements (one per
/// isomorphism class) and verifies that every P-faithful one is a chain or a
/// uniform wattle.
pub fn faithful_poset_scan(max_n: usize) -> Result<FaithfulScan, Error> {
    if max_n > 7 {
        return Err(Error::SizeCap { n: max_n, cap: 7 });
    }
    let mut report = FaithfulScan::default();
    for n in 1..=max_n {
        for p in crate::oracle::connected_posets(n)? {
            report.checked += 1;
            if !p.is_p_faithful()?.0 {
                continue;
            }
            if p.is_chain() {
                report.faithful_chains += 1;
            } else if let Some(sizes) = as_wattle(&p)? {
                if Wattle::new(&sizes)?.is_uniform() {
                    report.faithful_uniform_wattles += 1;
                } else {
                    report.counterexamples.push(p);
                }
            } else {
                report.counterexamples.push(p);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_closure() {
        let l3 = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(l3.lt(0, 2));
        assert!(l3.is_chain());
        assert_eq!(l3.covers(), vec![(0, 1), (1, 2)]);

        let a2 = Poset::from_covers(2, &[]).unwrap();
        assert!(a2.incomparable(0, 1));

        assert!(matches!(
            Poset::from_covers(2, &[(0, 1), (1, 0)]),
            Err(Error::CycleDetected)
        ));
    }

    #[test]
    fn widths() {
        assert_eq!(Poset::chain(5).width(), 1);
        assert_eq!(Poset::primitive(&[1, 2, 5]).width(), 3);
        assert_eq!(n_hat().width(), 2);
        assert_eq!(Poset::antichain(4).width(), 4);
    }

    #[test]
    fn rho_values() {
        assert_eq!(
            Poset::primitive(&[1, 3, 3]).primitive_value().unwrap(),
            Rat::int(4)
        );
        assert_eq!(Poset::chain(4).primitive_value().unwrap(), Rat::new(8, 5));
        // the hook: a 2-chain plus one incomparable point
        assert_eq!(n_hat().primitive_value().unwrap(), Rat::new(7, 3));
        assert_eq!(n_hat().quasiprimitive_value().unwrap(), Rat::zero());

        let k5 = Poset::chain(4).disjoint_union(&n_hat());
        assert_eq!(k5.quasiprimitive_value().unwrap(), Rat::int(4));
        let n5 = Poset::chain(5).disjoint_union(&n_hat());
        assert_eq!(n5.quasiprimitive_value().unwrap(), Rat::int(5));

        assert_eq!(Poset::primitive(&[1, 2, 5]).rho_value().unwrap(), Rat::int(4));
        assert_eq!(
            Poset::primitive(&[1, 2, 3]).rho_value().unwrap(),
            Rat::new(23, 6)
        );
        assert_eq!(
            Poset::primitive(&[1, 1, 1, 1, 1]).rho_value().unwrap(),
            Rat::int(5)
        );
    }

    #[test]
    fn classification() {
        assert_eq!(Poset::primitive(&[2, 2, 2]).classify().unwrap(), RepType::Tame);
        assert_eq!(Poset::primitive(&[1, 2, 4]).classify().unwrap(), RepType::Finite);
        assert_eq!(Poset::primitive(&[1, 2, 6]).classify().unwrap(), RepType::Wild);
    }

    #[test]
    fn critical_subsets() {
        let k5 = Poset::chain(4).disjoint_union(&n_hat());
        let found = k5.contains_critical();
        assert_eq!(found.iter().filter(|(n, _)| *n == "K5").count(), 1);
        assert!(found.iter().all(|(n, _)| !n.starts_with('N')));

        assert!(Poset::chain(3).contains_critical().is_empty());

        let n1 = Poset::primitive(&[1, 1, 1, 2]);
        assert!(n1.contains_critical().iter().any(|(n, _)| *n == "K1"));
    }

    #[test]
    fn wattle_construction() {
        let w = Wattle::new(&[2, 2]).unwrap();
        assert_eq!(w.poset().len(), 4);
        assert!(w.poset().lt(0, 1));
        assert!(w.poset().lt(2, 3));
        assert!(w.poset().lt(0, 3));
        assert!(w.poset().incomparable(1, 2));
        assert!(w.poset().incomparable(1, 3));
        assert!(w.poset().incomparable(0, 2));

        assert_eq!(Wattle::new(&[2, 3, 2]).unwrap().poset().len(), 7);

        assert!(matches!(Wattle::new(&[1, 2]), Err(Error::BadSizes)));
        assert!(matches!(Wattle::new(&[3]), Err(Error::BadSizes)));
    }

    #[test]
    fn uniform_wattles() {
        assert!(Wattle::new(&[2, 3, 2, 3, 2, 3, 2]).unwrap().is_uniform());
        assert!(Wattle::new(&[3, 3]).unwrap().is_uniform());
        assert!(!Wattle::new(&[2, 3]).unwrap().is_uniform());
        assert!(!Wattle::new(&[2, 4]).unwrap().is_uniform());
        assert!(Wattle::new(&[2, 2]).unwrap().is_uniform());
        assert!(!Wattle::new(&[3, 2, 3]).unwrap().is_uniform());
    }

    #[test]
    fn uniform_wattle_position_and_count_forms_agree() {
        for sizes in [
            vec![2, 3, 2, 3, 2, 3, 2],
            vec![3, 3],
            vec![2, 2],
            vec![2, 3, 2],
        ] {
            let w = Wattle::new(&sizes).unwrap();
            assert!(w.is_uniform());
            let t = sizes.len();
            let k = sizes[0];
            let m = sizes.iter().filter(|&&s| s == k + 1).count();
            for i in 1..t {
                assert_eq!(
                    w.long_count_upto(i),
                    (i * (1 + m)) / t,
                    "sizes {sizes:?} at i={i}"
                );
            }
        }
    }

    #[test]
    fn positive_vectors() {
        let w = Wattle::new(&[2, 2]).unwrap();
        let (x, alpha, beta, gamma) = w.positive_vector().unwrap();
        let value = w.poset().to_relation().quadratic_value(&x).unwrap();
        assert_eq!(Rat::one() / value, Rat::new(12, 5));
        // named-point pair sums to alpha; chain sums to beta
        assert_eq!(&x[w.z_minus(0)] + &x[w.z_plus(1)], alpha);
        assert_eq!(&x[0] + &x[1], beta);
        assert_eq!(x[w.z_minus(0)], gamma);

        assert!(Wattle::new(&[2, 3, 2]).unwrap().positive_vector().is_some());
        assert!(Wattle::new(&[2, 4]).unwrap().positive_vector().is_none());
    }

    #[test]
    fn positive_vector_iff_uniform_small() {
        for total in 4..=9usize {
            for comp in compositions_min2(total) {
                if comp.len() < 2 {
                    continue;
                }
                let w = Wattle::new(&comp).unwrap();
                assert_eq!(
                    w.positive_vector().is_some(),
                    w.is_uniform(),
                    "sizes {comp:?}"
                );
            }
        }
    }

    #[test]
    fn faithfulness_of_wattles() {
        assert!(Wattle::new(&[2, 2]).unwrap().poset().is_p_faithful().unwrap().0);
        assert!(Wattle::new(&[2, 3, 2]).unwrap().poset().is_p_faithful().unwrap().0);
        let (ok, witness) = Wattle::new(&[2, 3]).unwrap().poset().is_p_faithful().unwrap();
        assert!(!ok);
        assert!(witness.is_some());
    }

    #[test]
    fn semilinear() {
        // ordinal sum (1,1) then (1): two incomparable points below a third
        let p = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(is_semilinear_poset(&p), SemilinearCheck::Semilinear);
        assert_eq!(p.p_value().unwrap(), Rat::int(2));

        let a3 = Poset::antichain(3);
        assert_eq!(is_semilinear_poset(&a3), SemilinearCheck::NotSemilinear);
        assert_eq!(a3.p_value().unwrap(), Rat::int(3));

        assert_eq!(
            is_semilinear_poset(&Poset::chain(4)),
            SemilinearCheck::AlreadyLinear
        );
    }

    #[test]
    fn ordinal_decomposition() {
        let p = Poset::from_covers(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(ordinal_blocks(&p), vec![vec![0, 1], vec![2]]);
        assert!(is_ordinal_sum_of(&p, &[&[1], &[1, 1]]));
        assert!(!is_ordinal_sum_of(&Poset::antichain(3), &[&[1], &[1, 1]]));
        assert!(is_ordinal_sum_of(
            &Poset::primitive(&[1, 2]),
            &[&[1], &[1, 1], &[1, 2]]
        ));
    }

    #[test]
    fn wattle_recognition() {
        let w = Wattle::new(&[2, 3]).unwrap();
        let found = as_wattle(w.poset()).unwrap().unwrap();
        let mut sorted = found.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![2, 3]);
        assert_eq!(as_wattle(&Poset::chain(5)).unwrap(), None);
    }

    #[test]
    fn grid_products() {
        let g = Poset::chain(2).product(&Poset::chain(2));
        assert_eq!(g.len(), 4);
        assert_eq!(g.width(), 2);
        assert_eq!(g.longest_chain(), 3);
    }
}
