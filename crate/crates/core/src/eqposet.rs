//! Posets with an equivalence: normality and conormality degrees, the
//! induced weight function, the weighted `rho` and the class function `mu`,
//! the finite/tame/wild classification, and the two reductions that replace
//! a normal point (or a three-element class) by small points.

use crate::exact::{ExtNat, Rat, RatOrInf};
use crate::poset::{rho_weighted_parts, Poset, ENUM_CAP};
use crate::rho::rho;
use crate::{Error, RepType};

/// A poset together with an equivalence partition of its elements. The class
/// size of an element is its dimension; dimension-1 points are "small".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivPoset {
    poset: Poset,
    class_of: Vec<usize>,
}

/// Normality of a point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Normality {
    /// Dimension-1 points are outside the notion.
    Small,
    /// Least degree at which the point is normal.
    Normal(usize),
    NotNormal,
}

impl EquivPoset {
    /// Classes list elements; unlisted elements become singleton classes.
    pub fn new(poset: Poset, classes: &[Vec<usize>]) -> Result<EquivPoset, Error> {
        let n = poset.len();
        let mut class_of = vec![usize::MAX; n];
        let mut next = 0;
        for class in classes {
            if class.is_empty() {
                continue;
            }
            for &x in class {
                if x >= n {
                    return Err(Error::DimensionMismatch { expected: n, got: x + 1 });
                }
                if class_of[x] != usize::MAX {
                    return Err(Error::Schema(format!("element {x} in two classes")));
                }
                class_of[x] = next;
            }
            next += 1;
        }
        for c in class_of.iter_mut() {
            if *c == usize::MAX {
                *c = next;
                next += 1;
            }
        }
        Ok(EquivPoset { poset, class_of })
    }

    /// All classes singletons.
    pub fn trivial(poset: Poset) -> EquivPoset {
        let n = poset.len();
        EquivPoset {
            poset,
            class_of: (0..n).collect(),
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_members(&self, x: usize) -> Vec<usize> {
        let c = self.class_of[x];
        (0..self.len()).filter(|&y| self.class_of[y] == c).collect()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let count = self.class_of.iter().copied().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); count];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out.retain(|c| !c.is_empty());
        out
    }

    pub fn dim_of(&self, x: usize) -> usize {
        self.class_members(x).len()
    }

    pub fn dim(&self) -> usize {
        (0..self.len()).map(|x| self.dim_of(x)).max().unwrap_or(0)
    }

    pub fn is_small(&self, x: usize) -> bool {
        self.dim_of(x) == 1
    }

    /// The partner of a dimension-2 point.
    pub fn partner(&self, x: usize) -> Option<usize> {
        let members = self.class_members(x);
        if members.len() == 2 {
            Some(if members[0] == x { members[1] } else { members[0] })
        } else {
            None
        }
    }

    /// Elements incomparable to `x` in the underlying order.
    pub fn incomparables(&self, x: usize) -> Vec<usize> {
        self.poset.incomparables(x)
    }

    /// Order dual with the same classes.
    pub fn dual(&self) -> EquivPoset {
        EquivPoset {
            poset: self.poset.dual(),
            class_of: self.class_of.clone(),
        }
    }

    fn analysis(&self) -> NormalityData<'_> {
        conormal_weights(&self.poset, &self.class_of, &|_| true)
    }

    pub fn normality(&self, x: usize) -> Normality {
        if self.is_small(x) {
            return Normality::Small;
        }
        match self.analysis().degree[x] {
            Some(i) => Normality::Normal(i),
            None => Normality::NotNormal,
        }
    }

    /// The induced weights: 1 on small points, `2 + sum of weights over the
    /// partner's incomparables` on conormal points, infinity elsewhere.
    pub fn weights(&self) -> Vec<ExtNat> {
        self.analysis().weights
    }

    /// Weighted `rho` of the structure.
    pub fn rho_value(&self) -> Result<RatOrInf, Error> {
        self.rho_value_with(ENUM_CAP)
    }

    pub fn rho_value_with(&self, cap: usize) -> Result<RatOrInf, Error> {
        let w = self.weights();
        let (p, q) = rho_weighted_parts(&self.poset, &w, &|_| true, cap)?;
        Ok(p.max(q))
    }

    /// `mu` of one equivalence class (given by a representative); requires
    /// more than two members.
    pub fn mu_class(&self, rep: usize) -> Result<Rat, Error> {
        let members = self.class_members(rep);
        if members.len() <= 2 {
            return Err(Error::ClassTooSmall);
        }
        Ok(self.mu_of(&members, &self.analysis()))
    }

    fn mu_of(&self, members: &[usize], data: &NormalityData) -> Rat {
        members
            .iter()
            .map(|&d| {
                let inc = self.poset.incomparables(d);
                let w = set_weight(&self.poset, &inc, &data.weights, &|ch| {
                    (data.chain_ok)(ch)
                });
                rho(w + ExtNat::Fin(1))
            })
            .sum()
    }

    /// Maximum of `mu` over classes with more than two members; zero when
    /// there are none.
    pub fn mu_value(&self) -> Rat {
        let data = self.analysis();
        self.classes()
            .iter()
            .filter(|c| c.len() > 2)
            .map(|c| self.mu_of(c, &data))
            .fold(Rat::zero(), Rat::max)
    }

    /// Finite iff both the weighted `rho` and `mu` are below 4; tame iff
    /// their maximum is exactly 4; wild otherwise.
    pub fn classify(&self) -> Result<RepType, Error> {
        self.classify_with(ENUM_CAP)
    }

    pub fn classify_with(&self, cap: usize) -> Result<RepType, Error> {
        let rho_v = self.rho_value_with(cap)?;
        let mu_v = RatOrInf::Fin(self.mu_value());
        let four = Rat::int(4);
        let max = rho_v.max(mu_v);
        Ok(match max.cmp_rat(&four) {
            std::cmp::Ordering::Less => RepType::Finite,
            std::cmp::Ordering::Equal => RepType::Tame,
            std::cmp::Ordering::Greater => RepType::Wild,
        })
    }

    /// Replaces a 1-normal dimension-2 point `x` and its partner by a chain
    /// of `weight(x*)` small points carrying the partner's comparabilities.
    /// Returns the reduced structure and the index map for surviving
    /// elements.
    pub fn reduce_normal_pair(&self, x: usize) -> Result<(EquivPoset, Vec<Option<usize>>), Error> {
        if self.dim_of(x) != 2 {
            return Err(Error::NotReducible(format!("dim of {x} is not 2")));
        }
        let data = self.analysis();
        if data.degree[x] != Some(1) {
            return Err(Error::NotReducible(format!("{x} is not 1-normal")));
        }
        let partner = self.partner(x).expect("dimension 2");
        let t = match data.weights[partner] {
            ExtNat::Fin(t) => t as usize,
            ExtNat::Inf => {
                return Err(Error::NotReducible(format!(
                    "partner {partner} has infinite weight"
                )))
            }
        };

        let old: Vec<usize> = (0..self.len()).filter(|&e| e != x && e != partner).collect();
        let n_new = old.len() + t;
        let mut covers: Vec<(usize, usize)> = Vec::new();
        for (a, &i) in old.iter().enumerate() {
            for (b, &j) in old.iter().enumerate() {
                if self.poset.lt(i, j) {
                    covers.push((a, b));
                }
            }
        }
        // the fresh chain
        for c in 0..t.saturating_sub(1) {
            covers.push((old.len() + c, old.len() + c + 1));
        }
        // the chain inherits the partner's comparabilities
        for (a, &i) in old.iter().enumerate() {
            if self.poset.lt(partner, i) {
                for c in 0..t {
                    covers.push((old.len() + c, a));
                }
            }
            if self.poset.lt(i, partner) {
                for c in 0..t {
                    covers.push((a, old.len() + c));
                }
            }
        }
        let poset = Poset::from_covers(n_new, &covers)?;

        let mut classes: Vec<Vec<usize>> = Vec::new();
        for class in self.classes() {
            let mapped: Vec<usize> = class
                .iter()
                .filter(|&&e| e != x && e != partner)
                .map(|&e| old.iter().position(|&o| o == e).unwrap())
                .collect();
            if mapped.len() > 1 {
                classes.push(mapped);
            }
        }
        let reduced = EquivPoset::new(poset, &classes)?;
        let mut old_to_new = vec![None; self.len()];
        for (a, &i) in old.iter().enumerate() {
            old_to_new[i] = Some(a);
        }
        Ok((reduced, old_to_new))
    }

    /// Replaces a dimension-3 class `{y, u, v}` with `u, v` 1-normal by the
    /// grid of small points of shape `(2+|inc(u)|) x (2+|inc(v)|)` carrying
    /// `y`'s comparabilities.
    pub fn reduce_triple_class(&self, y: usize) -> Result<(EquivPoset, Vec<Option<usize>>), Error> {
        let members = self.class_members(y);
        if members.len() != 3 {
            return Err(Error::NotReducible(format!("class of {y} has size {}", members.len())));
        }
        let others: Vec<usize> = members.iter().copied().filter(|&m| m != y).collect();
        let data = self.analysis();
        let (u, v) = (others[0], others[1]);
        if data.degree[u] != Some(1) || data.degree[v] != Some(1) {
            return Err(Error::NotReducible(
                "the two remaining class members must be 1-normal".into(),
            ));
        }
        let rows = 2 + self.poset.incomparables(u).len();
        let cols = 2 + self.poset.incomparables(v).len();

        let old: Vec<usize> = (0..self.len())
            .filter(|&e| e != y && e != u && e != v)
            .collect();
        let base = old.len();
        let n_new = base + rows * cols;
        let mut covers: Vec<(usize, usize)> = Vec::new();
        for (a, &i) in old.iter().enumerate() {
            for (b, &j) in old.iter().enumerate() {
                if self.poset.lt(i, j) {
                    covers.push((a, b));
                }
            }
        }
        // the grid: (r1,c1) < (r2,c2) iff both coordinates rise
        let cell = |r: usize, c: usize| base + r * cols + c;
        for r in 0..rows {
            for c in 0..cols {
                if r + 1 < rows {
                    covers.push((cell(r, c), cell(r + 1, c)));
                }
                if c + 1 < cols {
                    covers.push((cell(r, c), cell(r, c + 1)));
                }
            }
        }
        for (a, &i) in old.iter().enumerate() {
            if self.poset.lt(y, i) {
                for r in 0..rows {
                    for c in 0..cols {
                        covers.push((cell(r, c), a));
                    }
                }
            }
            if self.poset.lt(i, y) {
                for r in 0..rows {
                    for c in 0..cols {
                        covers.push((a, cell(r, c)));
                    }
                }
            }
        }
        let poset = Poset::from_covers(n_new, &covers)?;
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for class in self.classes() {
            if class.contains(&y) {
                continue;
            }
            let mapped: Vec<usize> = class
                .iter()
                .map(|&e| old.iter().position(|&o| o == e).unwrap())
                .collect();
            if mapped.len() > 1 {
                classes.push(mapped);
            }
        }
        let reduced = EquivPoset::new(poset, &classes)?;
        let mut old_to_new = vec![None; self.len()];
        for (a, &i) in old.iter().enumerate() {
            old_to_new[i] = Some(a);
        }
        Ok((reduced, old_to_new))
    }

    /// Condition for reducibility to a poset: every dimension-2 class has a
    /// normal member, and every dimension-3 class has at least two 1-normal
    /// members.
    pub fn is_perfectly_chain(&self) -> bool {
        let data = self.analysis();
        for class in self.classes() {
            match class.len() {
                2 => {
                    if !class.iter().any(|&x| data.degree[x].is_some()) {
                        return false;
                    }
                }
                3 => {
                    let ones = class
                        .iter()
                        .filter(|&&x| data.degree[x] == Some(1))
                        .count();
                    if ones < 2 {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }

    /// Dimension exactly 2 with no normal points; equivalently every big
    /// point lies in a big-big incomparable pair or together with two
    /// incomparable small points.
    pub fn is_quasiantichain(&self) -> bool {
        if self.dim() != 2 {
            return false;
        }
        for t in 0..self.len() {
            if self.is_small(t) {
                continue;
            }
            let inc = self.poset.incomparables(t);
            let has_big = inc.iter().any(|&z| !self.is_small(z));
            let has_small_pair = inc.iter().enumerate().any(|(i, &z1)| {
                self.is_small(z1)
                    && inc[i + 1..]
                        .iter()
                        .any(|&z2| self.is_small(z2) && self.poset.incomparable(z1, z2))
            });
            if !has_big && !has_small_pair {
                return false;
            }
        }
        true
    }

    /// Exclusion oracle for the antichain-style critical patterns: one of
    /// N0..N5 embedded in the small points, or one of the four big-point
    /// patterns (big big small; big small plus a small 2-chain; three bigs;
    /// big plus three smalls, all pairwise incomparable as components).
    pub fn contains_antichain_critical(&self) -> bool {
        let small: Vec<usize> = (0..self.len()).filter(|&x| self.is_small(x)).collect();
        let small_sub = self.poset.induced(&small);
        for (name, pat) in crate::poset::critical_patterns() {
            if name.starts_with('N') && pat.embeds(&small_sub) {
                return true;
            }
        }
        let bigs: Vec<usize> = (0..self.len()).filter(|&x| !self.is_small(x)).collect();
        // components: lists of (size, big?) chains, pairwise incomparable
        let patterns: [&[(usize, bool)]; 4] = [
            &[(1, true), (1, true), (1, false)],
            &[(1, true), (1, false), (2, false)],
            &[(1, true), (1, true), (1, true)],
            &[(1, true), (1, false), (1, false), (1, false)],
        ];
        for pat in patterns {
            if self.embeds_mixed(pat, &bigs, &small) {
                return true;
            }
        }
        false
    }

    fn embeds_mixed(&self, pat: &[(usize, bool)], _bigs: &[usize], _small: &[usize]) -> bool {
        // backtracking over components
        fn go(
            s: &EquivPoset,
            pat: &[(usize, bool)],
            used: &mut Vec<usize>,
        ) -> bool {
            if pat.is_empty() {
                return true;
            }
            let (len, big) = pat[0];
            // enumerate chains of the requested length among allowed points
            let allowed: Vec<usize> = (0..s.len())
                .filter(|&x| {
                    (s.is_small(x) != big)
                        && used.iter().all(|&u| s.poset.incomparable(u, x))
                })
                .collect();
            let sub = s.poset.induced(&allowed);
            for chain in chains_of_len_local(&sub, len) {
                let elems: Vec<usize> = chain.iter().map(|&i| allowed[i]).collect();
                used.extend(&elems);
                if go(s, &pat[1..], used) {
                    return true;
                }
                for _ in 0..elems.len() {
                    used.pop();
                }
            }
            false
        }
        let mut used = Vec::new();
        go(self, pat, &mut used)
    }
}

fn chains_of_len_local(poset: &Poset, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn extend(
        poset: &Poset,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..poset.len() {
            if cur.iter().all(|&c| poset.comparable(c, x)) {
                cur.push(x);
                extend(poset, k, x + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut cur = Vec::new();
    extend(poset, k, 0, &mut cur, &mut out);
    out
}

/// `(u-1)`-chain together with the cardinal product of an `(a+1)`-chain and
/// a `(b+1)`-chain.
pub fn grid_union_poset(u: usize, a: usize, b: usize) -> Poset {
    assert!(u >= 1 && a >= 1 && b >= 1);
    let grid = Poset::chain(a + 1).product(&Poset::chain(b + 1));
    Poset::chain(u - 1).disjoint_union(&grid)
}

/// Shared normality/weight analysis, parameterized by the extra chain
/// condition (`|_| true` for plain equivalences; the rank-1 test for
/// biequivalences).
pub(crate) struct NormalityData<'a> {
    pub degree: Vec<Option<usize>>,
    pub weights: Vec<ExtNat>,
    pub chain_ok: &'a dyn Fn(&[usize]) -> bool,
}

/// Total weight of a set: the sum of member weights when the set is a chain
/// satisfying `chain_ok`, infinity otherwise.
pub(crate) fn set_weight(
    poset: &Poset,
    set: &[usize],
    weights: &[ExtNat],
    chain_ok: &dyn Fn(&[usize]) -> bool,
) -> ExtNat {
    for (i, &x) in set.iter().enumerate() {
        for &y in &set[i + 1..] {
            if poset.incomparable(x, y) {
                return ExtNat::Inf;
            }
        }
    }
    if !chain_ok(set) {
        return ExtNat::Inf;
    }
    set.iter().map(|&x| weights[x]).sum()
}

pub(crate) fn conormal_weights<'a>(
    poset: &Poset,
    class_of: &[usize],
    chain_ok: &'a dyn Fn(&[usize]) -> bool,
) -> NormalityData<'a> {
    let n = poset.len();
    let mut dim = vec![0usize; n];
    for x in 0..n {
        dim[x] = class_of.iter().filter(|&&c| c == class_of[x]).count();
    }
    let partner = |x: usize| -> Option<usize> {
        if dim[x] != 2 {
            return None;
        }
        (0..n).find(|&y| y != x && class_of[y] == class_of[x])
    };
    let incs: Vec<Vec<usize>> = (0..n).map(|x| poset.incomparables(x)).collect();
    let is_chain = |set: &[usize]| -> bool {
        set.iter().enumerate().all(|(i, &x)| {
            set[i + 1..].iter().all(|&y| poset.comparable(x, y))
        }) && chain_ok(set)
    };

    // normality degrees for big points, by rounds
    let mut degree: Vec<Option<usize>> = vec![None; n];
    for round in 1..=n.max(1) {
        let mut changed = false;
        for t in 0..n {
            if dim[t] <= 1 || degree[t].is_some() {
                continue;
            }
            if !is_chain(&incs[t]) {
                continue;
            }
            let ok = if round == 1 {
                incs[t].iter().all(|&x| dim[x] == 1)
            } else {
                incs[t].iter().all(|&x| {
                    dim[x] == 1
                        || (dim[x] == 2
                            && partner(x)
                                .and_then(|p| degree[p])
                                .is_some_and(|j| j < round))
                })
            };
            if ok {
                degree[t] = Some(round);
                changed = true;
            }
        }
        if !changed && round > 1 {
            break;
        }
    }

    // weights: small 1, conormal 2 + sum over the partner's incomparables,
    // infinite otherwise; computed in increasing conormality degree
    let mut weights: Vec<ExtNat> = (0..n)
        .map(|x| if dim[x] == 1 { ExtNat::Fin(1) } else { ExtNat::Inf })
        .collect();
    let mut conormals: Vec<(usize, usize)> = (0..n)
        .filter_map(|x| {
            if dim[x] == 2 {
                partner(x).and_then(|p| degree[p]).map(|d| (d, x))
            } else {
                None
            }
        })
        .collect();
    conormals.sort_unstable();
    for (_, x) in conormals {
        let p = partner(x).expect("dimension 2");
        let w = set_weight(poset, &incs[p], &weights, chain_ok);
        weights[x] = ExtNat::Fin(2) + w;
    }

    NormalityData {
        degree,
        weights,
        chain_ok,
    }
}
