//! Posets with a biequivalence and dyadic sets.
//!
//! A biequivalence is an equivalence on the closed pairs `(s,t)`, `s <= t`,
//! subject to two axioms: distinct pairs in a class share no first and no
//! second component, and classes interpolate (an element between `s1` and
//! `t1` has a unique counterpart between `s2` and `t2`). A dyadic set is such
//! a structure of dimension at most 2 whose induced element equivalence only
//! relates comparable points.

use crate::eqposet::{conormal_weights, set_weight, EquivPoset};
use crate::exact::{ExtNat, Rat, RatOrInf};
use crate::poset::{rho_weighted_parts, Poset, ENUM_CAP};
use crate::rho::{mu3, rho};
use crate::Error;
use std::collections::{BTreeMap, BTreeSet};

/// A poset with a biequivalence on its closed pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiequivPoset {
    poset: Poset,
    pairs: Vec<(usize, usize)>,
    pair_class: Vec<usize>,
    index: BTreeMap<(usize, usize), usize>,
}

/// How two elements sit relative to each other.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairRelation {
    /// `x < y` with rank 1.
    Triangle,
    /// `x < y` with rank above 1 (an edge in a dyadic set).
    DoubleArrow,
    /// `x > y`.
    Above,
    Incomparable,
}

impl BiequivPoset {
    /// Builds the structure from the nontrivial classes of closed pairs;
    /// unlisted closed pairs become singletons. Axioms are not yet checked;
    /// call `validate`.
    pub fn new(poset: Poset, classes: &[Vec<(usize, usize)>]) -> Result<BiequivPoset, Error> {
        let n = poset.len();
        let mut pairs = Vec::new();
        for s in 0..n {
            for t in 0..n {
                if poset.leq(s, t) {
                    pairs.push((s, t));
                }
            }
        }
        let index: BTreeMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut pair_class = vec![usize::MAX; pairs.len()];
        let mut next = 0;
        for class in classes {
            if class.is_empty() {
                continue;
            }
            for &(s, t) in class {
                let &i = index
                    .get(&(s, t))
                    .ok_or_else(|| Error::Schema(format!("({s},{t}) is not a closed pair")))?;
                if pair_class[i] != usize::MAX {
                    return Err(Error::Schema(format!("pair ({s},{t}) in two classes")));
                }
                pair_class[i] = next;
            }
            next += 1;
        }
        for c in pair_class.iter_mut() {
            if *c == usize::MAX {
                *c = next;
                next += 1;
            }
        }
        Ok(BiequivPoset {
            poset,
            pairs,
            pair_class,
            index,
        })
    }

    /// The trivial biequivalence: all classes singletons.
    pub fn trivial(poset: Poset) -> BiequivPoset {
        BiequivPoset::new(poset, &[]).expect("no classes to reject")
    }

    /// Lifts a poset with an element equivalence: `(a,b) ~ (c,d)` iff
    /// `a = b`, `c = d` and `a ~ c`.
    pub fn from_equiv(s: &EquivPoset) -> BiequivPoset {
        let classes: Vec<Vec<(usize, usize)>> = s
            .classes()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.into_iter().map(|x| (x, x)).collect())
            .collect();
        BiequivPoset::new(s.poset().clone(), &classes).expect("closed diagonal pairs")
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

    fn class_id(&self, s: usize, t: usize) -> Option<usize> {
        self.index.get(&(s, t)).map(|&i| self.pair_class[i])
    }

    pub fn pairs_equivalent(&self, p: (usize, usize), q: (usize, usize)) -> bool {
        match (self.class_id(p.0, p.1), self.class_id(q.0, q.1)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    fn class_members(&self, s: usize, t: usize) -> Vec<(usize, usize)> {
        match self.class_id(s, t) {
            None => Vec::new(),
            Some(c) => self
                .pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| self.pair_class[i] == c)
                .map(|(_, &p)| p)
                .collect(),
        }
    }

    /// Nontrivial classes, each sorted.
    pub fn nontrivial_classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut by_class: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (i, &p) in self.pairs.iter().enumerate() {
            by_class.entry(self.pair_class[i]).or_default().push(p);
        }
        by_class
            .into_values()
            .filter(|c| c.len() > 1)
            .collect()
    }

    /// Element equivalence induced by the degenerate pairs.
    pub fn element_classes(&self) -> Vec<usize> {
        let n = self.len();
        let mut class_of: Vec<usize> = (0..n).collect();
        for x in 0..n {
            for y in 0..x {
                if self.pairs_equivalent((x, x), (y, y)) {
                    class_of[x] = class_of[y];
                    break;
                }
            }
        }
        class_of
    }

    pub fn as_equiv_poset(&self) -> EquivPoset {
        let class_of = self.element_classes();
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, &c) in class_of.iter().enumerate() {
            groups.entry(c).or_default().push(x);
        }
        let classes: Vec<Vec<usize>> = groups.into_values().filter(|g| g.len() > 1).collect();
        EquivPoset::new(self.poset.clone(), &classes).expect("partition by construction")
    }

    pub fn dim_of(&self, x: usize) -> usize {
        (0..self.len())
            .filter(|&y| self.pairs_equivalent((x, x), (y, y)))
            .count()
    }

    pub fn dim(&self) -> usize {
        (0..self.len()).map(|x| self.dim_of(x)).max().unwrap_or(0)
    }

    pub fn is_small(&self, x: usize) -> bool {
        self.dim_of(x) == 1
    }

    /// The unique other member of a dimension-2 class.
    pub fn partner(&self, x: usize) -> Option<usize> {
        let cls: Vec<usize> = (0..self.len())
            .filter(|&y| self.pairs_equivalent((x, x), (y, y)))
            .collect();
        if cls.len() == 2 {
            Some(if cls[0] == x { cls[1] } else { cls[0] })
        } else {
            None
        }
    }

    /// Rank of a strict pair `x < y`: the size of its class within the
    /// strict pairs.
    pub fn rank(&self, x: usize, y: usize) -> Result<usize, Error> {
        if !self.poset.lt(x, y) {
            return Err(Error::Schema(format!("{x} is not below {y}")));
        }
        Ok(self
            .class_members(x, y)
            .iter()
            .filter(|(a, b)| a != b)
            .count())
    }

    pub fn relation(&self, x: usize, y: usize) -> PairRelation {
        if self.poset.lt(x, y) {
            if self.rank(x, y).unwrap() == 1 {
                PairRelation::Triangle
            } else {
                PairRelation::DoubleArrow
            }
        } else if self.poset.lt(y, x) {
            PairRelation::Above
        } else {
            PairRelation::Incomparable
        }
    }

    /// `x` below `y` with rank 1.
    pub fn lhd(&self, x: usize, y: usize) -> bool {
        self.poset.lt(x, y) && self.rank(x, y).unwrap() == 1
    }

    /// A set is a 1-chain when it is a chain and all its strict pairs have
    /// rank 1.
    pub fn is_one_chain(&self, set: &[usize]) -> bool {
        for (i, &x) in set.iter().enumerate() {
            for &y in &set[i + 1..] {
                if self.poset.lt(x, y) {
                    if self.rank(x, y).unwrap() != 1 {
                        return false;
                    }
                } else if self.poset.lt(y, x) {
                    if self.rank(y, x).unwrap() != 1 {
                        return false;
                    }
                } else {
                    return false;
                }
            }
        }
        true
    }

    /// Checks the two defining axioms, then the two derived properties.
    pub fn validate(&self) -> Result<(), Error> {
        self.check_defining_axioms()?;
        self.check_derived_properties()
    }

    /// Only the two defining axioms.
    pub(crate) fn check_defining_axioms(&self) -> Result<(), Error> {
        // axiom i: distinct equivalent pairs differ in both components
        for class in self.nontrivial_classes() {
            for (i, &(s1, t1)) in class.iter().enumerate() {
                for &(s2, t2) in &class[i + 1..] {
                    if s1 == s2 || t1 == t2 {
                        return Err(Error::AxiomViolation {
                            axiom: "i",
                            detail: format!("({s1},{t1}) ~ ({s2},{t2}) share a component"),
                        });
                    }
                }
            }
        }
        // axiom ii: unique interpolation
        for class in self.nontrivial_classes() {
            for &(s1, t1) in &class {
                for &(s2, t2) in &class {
                    if (s1, t1) == (s2, t2) {
                        continue;
                    }
                    for x1 in 0..self.len() {
                        if !(self.poset.leq(s1, x1) && self.poset.leq(x1, t1)) {
                            continue;
                        }
                        let matches = (0..self.len())
                            .filter(|&x2| {
                                self.poset.leq(s2, x2)
                                    && self.poset.leq(x2, t2)
                                    && self.pairs_equivalent((s1, x1), (s2, x2))
                                    && self.pairs_equivalent((x1, t1), (x2, t2))
                            })
                            .count();
                        if matches != 1 {
                            return Err(Error::AxiomViolation {
                                axiom: "ii",
                                detail: format!(
                                    "({s1},{t1}) ~ ({s2},{t2}): {matches} interpolants for {x1}"
                                ),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The two consequences of the axioms, checked rather than assumed.
    pub(crate) fn check_derived_properties(&self) -> Result<(), Error> {
        // iii: a degenerate pair is equivalent only to degenerate ones
        for (i, &(s, t)) in self.pairs.iter().enumerate() {
            if s == t {
                for (j, &(u, v)) in self.pairs.iter().enumerate() {
                    if self.pair_class[i] == self.pair_class[j] && u != v {
                        return Err(Error::AxiomViolation {
                            axiom: "iii",
                            detail: format!("({s},{s}) ~ ({u},{v}) with {u} != {v}"),
                        });
                    }
                }
            }
        }
        // derived iv: equivalent pairs have equivalent endpoints
        for class in self.nontrivial_classes() {
            for (i, &(s1, t1)) in class.iter().enumerate() {
                for &(s2, t2) in &class[i + 1..] {
                    if s1 != s2 && !self.pairs_equivalent((s1, s1), (s2, s2)) {
                        return Err(Error::AxiomViolation {
                            axiom: "iv",
                            detail: format!("first components {s1}, {s2} not equivalent"),
                        });
                    }
                    if t1 != t2 && !self.pairs_equivalent((t1, t1), (t2, t2)) {
                        return Err(Error::AxiomViolation {
                            axiom: "iv",
                            detail: format!("second components {t1}, {t2} not equivalent"),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Transitivity: chained equivalences compose.
    pub fn is_transitive(&self) -> bool {
        let classes = self.nontrivial_classes();
        for c1 in &classes {
            for &(s1, t1) in c1 {
                for &(s2, t2) in c1 {
                    for c2 in &classes {
                        for &(a1, u1) in c2 {
                            if a1 != t1 {
                                continue;
                            }
                            for &(a2, u2) in c2 {
                                if a2 != t2 {
                                    continue;
                                }
                                if !self.pairs_equivalent((s1, u1), (s2, u2)) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Weights over 1-chains (small points weigh 1, conormal points
    /// `2 + sum over the partner's incomparables`, infinity otherwise).
    pub fn weights(&self) -> Vec<ExtNat> {
        let class_of = self.element_classes();
        let chain_ok = |set: &[usize]| self.is_one_chain(set);
        conormal_weights(&self.poset, &class_of, &chain_ok).weights
    }

    /// Weighted `rho` over 1-chains.
    pub fn rho_value(&self) -> Result<RatOrInf, Error> {
        self.rho_value_with(ENUM_CAP)
    }

    pub fn rho_value_with(&self, cap: usize) -> Result<RatOrInf, Error> {
        let w = self.weights();
        let chain_ok = |set: &[usize]| self.is_one_chain(set);
        let (p, q) = rho_weighted_parts(&self.poset, &w, &chain_ok, cap)?;
        Ok(p.max(q))
    }

    /// `mu` over classes with more than two members, with these weights.
    pub fn mu_value(&self) -> Rat {
        let w = self.weights();
        let chain_ok = |set: &[usize]| self.is_one_chain(set);
        let class_of = self.element_classes();
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, &c) in class_of.iter().enumerate() {
            groups.entry(c).or_default().push(x);
        }
        groups
            .values()
            .filter(|g| g.len() > 2)
            .map(|g| {
                g.iter()
                    .map(|&d| {
                        let inc = self.poset.incomparables(d);
                        let s = set_weight(&self.poset, &inc, &w, &chain_ok);
                        rho(s + ExtNat::Fin(1))
                    })
                    .sum()
            })
            .fold(Rat::zero(), Rat::max)
    }

    /// The two necessary finiteness bounds: weighted `rho < 4` and
    /// `mu < 4`. Necessary, not sufficient.
    pub fn necessary_bounds_hold(&self) -> Result<bool, Error> {
        let four = Rat::int(4);
        Ok(self.rho_value()?.cmp_rat(&four) == std::cmp::Ordering::Less
            && self.mu_value() < four)
    }

    /// A split `S = U + V` with every nontrivial class and every
    /// incomparability confined to one side, when one exists.
    pub fn split_components(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.len();
        if n < 2 {
            return None;
        }
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let r = find(dsu, dsu[x]);
                dsu[x] = r;
            }
            dsu[x]
        }
        let union = |dsu: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(dsu, a), find(dsu, b));
            if ra != rb {
                dsu[ra] = rb;
            }
        };
        for x in 0..n {
            for y in x + 1..n {
                if self.poset.incomparable(x, y) {
                    union(&mut dsu, x, y);
                }
            }
        }
        for class in self.nontrivial_classes() {
            let elems: Vec<usize> = class.iter().flat_map(|&(a, b)| [a, b]).collect();
            for w in elems.windows(2) {
                union(&mut dsu, w[0], w[1]);
            }
        }
        let root0 = find(&mut dsu, 0);
        let u: Vec<usize> = (0..n).filter(|&x| find(&mut dsu, x) == root0).collect();
        if u.len() == n {
            return None;
        }
        let v: Vec<usize> = (0..n).filter(|&x| find(&mut dsu, x) != root0).collect();
        Some((u, v))
    }
}

/// An edge of a dyadic set: a strict pair of rank 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Edge {
    pub x: usize,
    pub y: usize,
}

/// Which partial order to put on edges.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum EdgeOrder {
    /// Interval containment: an edge precedes another when its interval is
    /// contained in the other's. Keeps consecutive strip edges incomparable.
    #[default]
    Containment,
    /// The literal componentwise form (kept for audit).
    Literal,
}

/// Scope of the bordered `mu` condition.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum CondAScope {
    #[default]
    AllEdges,
    LongOnly,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    pub edge_order: EdgeOrder,
    pub cond_a_scope: CondAScope,
    pub cap: Option<usize>,
}

/// A bordering configuration of an edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BorderingSet {
    pub z_minus: Vec<usize>,
    pub z_plus: Vec<usize>,
    pub z_e: Vec<usize>,
}

impl BorderingSet {
    pub fn elements(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .z_minus
            .iter()
            .chain(&self.z_plus)
            .chain(&self.z_e)
            .copied()
            .collect();
        v.sort_unstable();
        v
    }
}

/// Why a dyadic set failed the finiteness test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NotFiniteReason {
    /// The underlying poset-with-equivalence is already not finite.
    UnderlyingRho,
    BorderedMu {
        edge: Edge,
        bordering: BorderingSet,
        mu: ExtNat,
    },
    EquippedSqueeze {
        edge: Edge,
        witness: usize,
    },
    ChainedStrips {
        first: Edge,
        second: Edge,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DyadicVerdict {
    Finite,
    NotFinite(NotFiniteReason),
}

impl DyadicVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, DyadicVerdict::Finite)
    }
}

/// A biequivalence poset of dimension at most 2 whose equivalent elements
/// are comparable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DyadicSet {
    inner: BiequivPoset,
}

impl DyadicSet {
    pub fn new(inner: BiequivPoset) -> Result<DyadicSet, Error> {
        inner.validate()?;
        if inner.dim() > 2 {
            return Err(Error::NotDyadic(format!("dimension {} > 2", inner.dim())));
        }
        for x in 0..inner.len() {
            if let Some(p) = inner.partner(x) {
                if inner.poset().incomparable(x, p) {
                    return Err(Error::NotDyadic(format!(
                        "equivalent points {x}, {p} are incomparable"
                    )));
                }
            }
        }
        Ok(DyadicSet { inner })
    }

    pub fn inner(&self) -> &BiequivPoset {
        &self.inner
    }

    pub fn poset(&self) -> &Poset {
        self.inner.poset()
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    /// Order dual with the biequivalence transported.
    pub fn dual(&self) -> DyadicSet {
        let classes: Vec<Vec<(usize, usize)>> = self
            .inner
            .nontrivial_classes()
            .into_iter()
            .map(|c| c.into_iter().map(|(a, b)| (b, a)).collect())
            .collect();
        let inner = BiequivPoset::new(self.poset().dual(), &classes)
            .expect("dual closed pairs");
        DyadicSet::new(inner).expect("duality preserves the axioms")
    }

    /// All edges: strict pairs of rank 2.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.poset().lt(x, y) && self.inner.rank(x, y).unwrap() > 1 {
                    out.push(Edge { x, y });
                }
            }
        }
        out
    }

    /// The dual edge `(x*, y*)`.
    pub fn dual_edge(&self, e: Edge) -> Edge {
        let x = self.inner.partner(e.x).expect("edge endpoints are big");
        let y = self.inner.partner(e.y).expect("edge endpoints are big");
        Edge { x, y }
    }

    /// Interior of the edge interval.
    pub fn interval(&self, e: Edge) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| self.poset().lt(e.x, z) && self.poset().lt(z, e.y))
            .collect()
    }

    pub fn interval_len(&self, e: Edge) -> usize {
        self.interval(e).len()
    }

    fn edge_below(&self, a: Edge, b: Edge, order: EdgeOrder) -> bool {
        match order {
            // a's interval inside b's
            EdgeOrder::Containment => self.poset().leq(b.x, a.x) && self.poset().leq(a.y, b.y),
            EdgeOrder::Literal => self.poset().leq(b.x, a.x) && self.poset().leq(b.y, a.y),
        }
    }

    /// An edge is short when no other edge lies strictly below it in the
    /// edge order, maximal when none lies strictly above.
    pub fn is_short(&self, e: Edge, order: EdgeOrder) -> bool {
        !self
            .edges()
            .into_iter()
            .any(|f| f != e && self.edge_below(f, e, order))
    }

    pub fn is_maximal(&self, e: Edge, order: EdgeOrder) -> bool {
        !self
            .edges()
            .into_iter()
            .any(|f| f != e && self.edge_below(e, f, order))
    }

    /// Maximal runs of short edges with no edge entering the head and none
    /// leaving the tail; isolated big points count as one-point strips.
    pub fn strips(&self, order: EdgeOrder) -> Vec<Vec<usize>> {
        let edges = self.edges();
        let short: Vec<Edge> = edges
            .iter()
            .copied()
            .filter(|&e| self.is_short(e, order))
            .collect();
        let has_in = |d: usize| edges.iter().any(|e| e.y == d);
        let has_out = |d: usize| edges.iter().any(|e| e.x == d);

        let mut out: Vec<Vec<usize>> = Vec::new();
        // isolated big points
        for d in 0..self.len() {
            if self.inner.dim_of(d) == 2 && !has_in(d) && !has_out(d) {
                out.push(vec![d]);
            }
        }
        // walks over short edges
        fn walk(
            d: usize,
            short: &[Edge],
            path: &mut Vec<usize>,
            has_out: &dyn Fn(usize) -> bool,
            out: &mut Vec<Vec<usize>>,
        ) {
            if !has_out(d) {
                out.push(path.clone());
                return;
            }
            for e in short {
                if e.x == d {
                    path.push(e.y);
                    walk(e.y, short, path, has_out, out);
                    path.pop();
                }
            }
        }
        for d in 0..self.len() {
            if has_out(d) && !has_in(d) {
                let mut path = vec![d];
                walk(d, &short, &mut path, &has_out, &mut out);
            }
        }
        out.sort();
        out
    }

    /// Points incomparable to both endpoints of a pair `x < y`.
    pub fn equipment_set(&self, x: usize, y: usize) -> Vec<usize> {
        self.poset().incomparables_of_set(&[x, y])
    }

    /// Weight of the equipment of a pair: the summed weights when the set is
    /// a 1-chain, infinity otherwise.
    pub fn eq_pair(&self, x: usize, y: usize) -> ExtNat {
        let w = self.inner.weights();
        let set = self.equipment_set(x, y);
        set_weight(self.poset(), &set, &w, &|s| self.inner.is_one_chain(s))
    }

    /// Equipment of an edge: the set, its weight, and the one-sided sets
    /// (incomparable to the head resp. tail together with the interval).
    pub fn equipment(&self, e: Edge) -> (Vec<usize>, ExtNat, Vec<usize>, Vec<usize>) {
        let eq = self.equipment_set(e.x, e.y);
        let val = self.eq_pair(e.x, e.y);
        let interval = self.interval(e);
        let mut with_y = interval.clone();
        with_y.push(e.y);
        let eq_minus = self.poset().incomparables_of_set(&with_y);
        let mut with_x = interval;
        with_x.push(e.x);
        let eq_plus = self.poset().incomparables_of_set(&with_x);
        (eq, val, eq_minus, eq_plus)
    }

    pub fn is_equipped(&self, e: Edge) -> bool {
        !self.equipment_set(e.x, e.y).is_empty()
    }

    pub fn is_linearly_equipped(&self) -> bool {
        self.edges().into_iter().all(|e| self.eq_pair(e.x, e.y).is_finite())
    }

    /// All bordering sets of an edge: three pairwise-incomparable 1-chains
    /// of finite-weight points, drawn from the equipment and the one-sided
    /// sets; the one-sided parts must be empty when the interval has two or
    /// more points.
    pub fn bordering_sets(&self, e: Edge) -> Result<Vec<BorderingSet>, Error> {
        let w = self.inner.weights();
        let finite = |x: usize| w[x].is_finite();
        let (eq, _, eq_minus, eq_plus) = self.equipment(e);
        let l = self.interval_len(e);
        let cand_e: Vec<usize> = eq.into_iter().filter(|&x| finite(x)).collect();
        let (cand_m, cand_p): (Vec<usize>, Vec<usize>) = if l >= 2 {
            (Vec::new(), Vec::new())
        } else {
            (
                eq_minus.into_iter().filter(|&x| finite(x)).collect(),
                eq_plus.into_iter().filter(|&x| finite(x)).collect(),
            )
        };
        for cand in [&cand_e, &cand_m, &cand_p] {
            if cand.len() > 16 {
                return Err(Error::SizeCap { n: cand.len(), cap: 16 });
            }
        }
        let one_chains = |cand: &[usize]| -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            for mask in 0u32..(1 << cand.len()) {
                let set: Vec<usize> = (0..cand.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| cand[i])
                    .collect();
                if self.inner.is_one_chain(&set) {
                    out.push(set);
                }
            }
            out
        };
        let mut out = Vec::new();
        for zm in one_chains(&cand_m) {
            for zp in one_chains(&cand_p) {
                for ze in one_chains(&cand_e) {
                    let cross_ok = |a: &[usize], b: &[usize]| {
                        a.iter()
                            .all(|&x| b.iter().all(|&y| self.poset().incomparable(x, y)))
                    };
                    if cross_ok(&zm, &zp) && cross_ok(&zm, &ze) && cross_ok(&zp, &ze) {
                        out.push(BorderingSet {
                            z_minus: zm.clone(),
                            z_plus: zp.clone(),
                            z_e: ze.clone(),
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// The bordered `mu` of an edge and bordering set.
    pub fn mu_sigma(&self, e: Edge, x: &BorderingSet) -> ExtNat {
        let w = self.inner.weights();
        let chain = |s: &[usize]| self.inner.is_one_chain(s);
        let l = self.interval_len(e) as u64;
        let eq_sx = set_weight(self.poset(), &x.z_e, &w, &chain);
        let dual = self.dual_edge(e);
        let eq_dual = self.eq_pair(dual.x, dual.y);
        let clamp = ExtNat::Fin(2u64.abs_diff(l));
        let m = set_weight(self.poset(), &x.z_minus, &w, &chain).min(clamp);
        let p = set_weight(self.poset(), &x.z_plus, &w, &chain).min(clamp);
        let eq_star = eq_dual + m + p;
        mu3(eq_sx, eq_star, ExtNat::Fin(l))
    }

    /// Finiteness per the reformulated criterion: the underlying structure
    /// must satisfy `rho < 4`, every bordered `mu` stays below 4, an edge
    /// with a one-point interval and equipment weight 3 admits no point
    /// incomparable to an endpoint together with its equipment, and chained
    /// edges force zero equipment around the chain.
    pub fn classify(&self) -> Result<DyadicVerdict, Error> {
        self.classify_with(ClassifyOptions::default())
    }

    pub fn classify_with(&self, opts: ClassifyOptions) -> Result<DyadicVerdict, Error> {
        let cap = opts.cap.unwrap_or(ENUM_CAP);
        let four = Rat::int(4);
        let tilde = self.inner.as_equiv_poset();
        if tilde.rho_value_with(cap)?.cmp_rat(&four) != std::cmp::Ordering::Less {
            return Ok(DyadicVerdict::NotFinite(NotFiniteReason::UnderlyingRho));
        }
        let edges = self.edges();
        // bordered mu
        for &e in &edges {
            if opts.cond_a_scope == CondAScope::LongOnly && self.is_short(e, opts.edge_order) {
                continue;
            }
            for b in self.bordering_sets(e)? {
                let mu = self.mu_sigma(e, &b);
                if mu >= ExtNat::Fin(4) {
                    return Ok(DyadicVerdict::NotFinite(NotFiniteReason::BorderedMu {
                        edge: e,
                        bordering: b,
                        mu,
                    }));
                }
            }
        }
        // squeezed equipped edge
        for &e in &edges {
            if self.interval_len(e) == 1 && self.eq_pair(e.x, e.y) == ExtNat::Fin(3) {
                let eq = self.equipment_set(e.x, e.y);
                for end in [e.x, e.y] {
                    let mut set = eq.clone();
                    set.push(end);
                    if let Some(&witness) =
                        self.poset().incomparables_of_set(&set).first()
                    {
                        return Ok(DyadicVerdict::NotFinite(
                            NotFiniteReason::EquippedSqueeze { edge: e, witness },
                        ));
                    }
                }
            }
        }
        // chained edges from distinct strip pairs: the three equipment
        // numbers must make the polynomial vanish. Junctions inside one
        // equivalence class belong to a single strip pair and are exempt
        // (critical sets of this kind carry two pairs of dual strips).
        for &e1 in &edges {
            for &e2 in &edges {
                if !self.poset().leq(e1.y, e2.x) {
                    continue;
                }
                if self.inner.pairs_equivalent((e1.y, e1.y), (e2.x, e2.x)) {
                    continue;
                }
                let d1 = self.dual_edge(e1);
                let d2 = self.dual_edge(e2);
                let a = self.eq_pair(e1.x, e2.y);
                let b = self.eq_pair(d1.x, d1.y);
                let c = self.eq_pair(d2.x, d2.y);
                if mu3(a, b, c) != ExtNat::Fin(0) {
                    return Ok(DyadicVerdict::NotFinite(NotFiniteReason::ChainedStrips {
                        first: e1,
                        second: e2,
                    }));
                }
            }
        }
        Ok(DyadicVerdict::Finite)
    }

    /// All proper subsets closed under partners, as element lists.
    pub fn star_subsets(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut unit_of: Vec<usize> = (0..n).collect();
        for x in 0..n {
            if let Some(p) = self.inner.partner(x) {
                let r = x.min(p);
                unit_of[x] = r;
            }
        }
        let units: Vec<usize> = {
            let mut u: Vec<usize> = unit_of.clone();
            u.sort_unstable();
            u.dedup();
            u
        };
        let mut out = Vec::new();
        for mask in 0u32..(1 << units.len()) {
            let keep_units: BTreeSet<usize> = units
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &u)| u)
                .collect();
            let elems: Vec<usize> = (0..n).filter(|&x| keep_units.contains(&unit_of[x])).collect();
            if elems.len() < n && !elems.is_empty() {
                out.push(elems);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// The induced dyadic set on a partner-closed element set.
    pub fn restrict(&self, keep: &[usize]) -> Result<DyadicSet, Error> {
        let pos: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let poset = self.poset().induced(keep);
        let classes: Vec<Vec<(usize, usize)>> = self
            .inner
            .nontrivial_classes()
            .into_iter()
            .filter_map(|class| {
                let mapped: Vec<(usize, usize)> = class
                    .iter()
                    .filter_map(|&(a, b)| Some((*pos.get(&a)?, *pos.get(&b)?)))
                    .collect();
                if mapped.len() > 1 {
                    Some(mapped)
                } else {
                    None
                }
            })
            .collect();
        DyadicSet::new(BiequivPoset::new(poset, &classes)?)
    }

    /// One-step order strengthenings that stay valid dyadic sets.
    pub fn strengthenings(&self) -> Vec<DyadicSet> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.poset().incomparable(a, b) {
                    continue;
                }
                let mut covers = self.poset().covers();
                covers.push((a, b));
                let poset = match Poset::from_covers(n, &covers) {
                    Ok(p) => p,
                    Err(_) => continue,
                };
                let classes = self.inner.nontrivial_classes();
                let inner = match BiequivPoset::new(poset, &classes) {
                    Ok(i) => i,
                    Err(_) => continue,
                };
                if let Ok(d) = DyadicSet::new(inner) {
                    out.push(d);
                }
            }
        }
        out
    }

    /// One-step biequivalence weakenings (one class split into singletons)
    /// that stay valid dyadic sets.
    pub fn weakenings(&self) -> Vec<DyadicSet> {
        let classes = self.inner.nontrivial_classes();
        let mut out = Vec::new();
        for skip in 0..classes.len() {
            let kept: Vec<Vec<(usize, usize)>> = classes
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, c)| c.clone())
                .collect();
            let inner = match BiequivPoset::new(self.poset().clone(), &kept) {
                Ok(i) => i,
                Err(_) => continue,
            };
            if let Ok(d) = DyadicSet::new(inner) {
                out.push(d);
            }
        }
        out
    }

    /// Critical: not finite, while every proper partner-closed subset, every
    /// valid one-step order strengthening and every valid one-step
    /// equivalence weakening is finite.
    pub fn is_critical(&self) -> Result<bool, Error> {
        if self.len() > 8 {
            return Err(Error::SizeCap { n: self.len(), cap: 8 });
        }
        if self.classify()?.is_finite() {
            return Ok(false);
        }
        for sub in self.star_subsets() {
            if !self.restrict(&sub)?.classify()?.is_finite() {
                return Ok(false);
            }
        }
        for d in self.strengthenings() {
            if !d.classify()?.is_finite() {
                return Ok(false);
            }
        }
        for d in self.weakenings() {
            if !d.classify()?.is_finite() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One boundary case of the bordered `mu` condition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MuFourCase {
    pub l: u64,
    pub eq: u64,
    pub eq_star: u64,
    pub eq_minus: u64,
    pub eq_plus: u64,
}

/// All parameter tuples with bordered `mu` exactly 4 under the
/// `eq_minus >= eq_plus` normalization, folded over the duality that swaps
/// the edge with its dual when both one-sided weights vanish. The classical
/// seventeen-case table further has `eq_plus <= 1`; see
/// `mu_four_boundary_cases_raw` for the unconstrained enumeration.
pub fn mu_four_boundary_cases() -> Vec<MuFourCase> {
    enumerate_mu_four(true)
}

/// The unconstrained enumeration (one extra tuple beyond the classical
/// seventeen: `l=0, eq=1, eq*=0, eq- = eq+ = 2`).
pub fn mu_four_boundary_cases_raw() -> Vec<MuFourCase> {
    enumerate_mu_four(false)
}

fn enumerate_mu_four(clip_plus: bool) -> Vec<MuFourCase> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for l in 0u64..=5 {
        let clamp = 2u64.abs_diff(l);
        let side_max = if l >= 2 { 0 } else { clamp };
        for eq in 0..=5u64 {
            for eq_star in 0..=5u64 {
                for em in 0..=side_max {
                    for ep in 0..=em.min(if clip_plus { 1 } else { u64::MAX }) {
                        let b = eq_star + em + ep;
                        if mu3(ExtNat::Fin(eq), ExtNat::Fin(b), ExtNat::Fin(l))
                            != ExtNat::Fin(4)
                        {
                            continue;
                        }
                        // fold the edge/dual-edge swap when only the
                        // equipment weights are involved
                        let key = if em == 0 && ep == 0 {
                            (l, eq.min(eq_star), eq.max(eq_star), 0, 0)
                        } else {
                            (l, eq, eq_star, em, ep)
                        };
                        if seen.insert(key) {
                            out.push(MuFourCase {
                                l,
                                eq,
                                eq_star,
                                eq_minus: em,
                                eq_plus: ep,
                            });
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Enumerates every dyadic set on the posets with `n` elements (one poset
/// per isomorphism class; all equivalence and edge structures on top).
pub fn all_dyadic_sets(n: usize) -> Result<Vec<DyadicSet>, Error> {
    if n > 6 {
        return Err(Error::SizeCap { n, cap: 6 });
    }
    let mut out = Vec::new();
    for poset in crate::oracle::all_posets(n)? {
        for matching in comparable_matchings(&poset) {
            let element_classes: Vec<Vec<(usize, usize)>> = matching
                .iter()
                .map(|&(a, b)| vec![(a, a), (b, b)])
                .collect();
            // candidate edge classes {(x,y),(x*,y*)}
            let partner = |x: usize| -> Option<usize> {
                matching.iter().find_map(|&(a, b)| {
                    if a == x {
                        Some(b)
                    } else if b == x {
                        Some(a)
                    } else {
                        None
                    }
                })
            };
            let mut slots: Vec<((usize, usize), (usize, usize))> = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    if !poset.lt(x, y) {
                        continue;
                    }
                    let (Some(xs), Some(ys)) = (partner(x), partner(y)) else {
                        continue;
                    };
                    if ys == x || xs == y || xs == x || ys == y {
                        continue;
                    }
                    if y == xs {
                        continue;
                    }
                    if !poset.lt(xs, ys) {
                        continue;
                    }
                    let a = (x, y);
                    let b = (xs, ys);
                    if a < b {
                        slots.push((a, b));
                    }
                }
            }
            slots.sort();
            slots.dedup();
            if slots.len() > 12 {
                return Err(Error::SizeCap { n: slots.len(), cap: 12 });
            }
            for mask in 0u32..(1 << slots.len()) {
                let mut classes = element_classes.clone();
                for (i, &(a, b)) in slots.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        classes.push(vec![a, b]);
                    }
                }
                let inner = match BiequivPoset::new(poset.clone(), &classes) {
                    Ok(i) => i,
                    Err(_) => continue,
                };
                if inner.validate().is_err() {
                    continue;
                }
                if let Ok(d) = DyadicSet::new(inner) {
                    out.push(d);
                }
            }
        }
    }
    Ok(out)
}

/// All partial matchings of comparable element pairs.
fn comparable_matchings(poset: &Poset) -> Vec<Vec<(usize, usize)>> {
    let n = poset.len();
    let mut out = Vec::new();
    let mut cur: Vec<(usize, usize)> = Vec::new();
    fn go(
        poset: &Poset,
        x: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let n = poset.len();
        if x == n {
            out.push(cur.clone());
            return;
        }
        if used[x] {
            go(poset, x + 1, used, cur, out);
            return;
        }
        // leave x single
        go(poset, x + 1, used, cur, out);
        // pair x with a later comparable element
        for y in x + 1..n {
            if !used[y] && poset.comparable(x, y) && x != y {
                used[x] = true;
                used[y] = true;
                cur.push((x, y));
                go(poset, x + 1, used, cur, out);
                cur.pop();
                used[x] = false;
                used[y] = false;
            }
        }
    }
    let mut used = vec![false; n];
    go(poset, 0, &mut used, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The four-point strip pair: chain a<b<a*<b* with (a,b) ~ (a*,b*).
    fn strip_pair() -> DyadicSet {
        let poset = Poset::chain(4);
        let inner = BiequivPoset::new(
            poset,
            &[
                vec![(0, 0), (2, 2)],
                vec![(1, 1), (3, 3)],
                vec![(0, 1), (2, 3)],
            ],
        )
        .unwrap();
        DyadicSet::new(inner).unwrap()
    }

    #[test]
    fn derived_properties_follow_from_axioms() {
        // random pairings of closed pairs that happen to satisfy the two
        // defining axioms always satisfy the two derived properties
        use rand::{seq::SliceRandom, Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(2718);
        let mut passing = 0;
        for _ in 0..4000 {
            let n = rng.gen_range(2..=5);
            let mut covers = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.4) {
                        covers.push((a, b));
                    }
                }
            }
            let Ok(poset) = Poset::from_covers(n, &covers) else {
                continue;
            };
            let mut closed: Vec<(usize, usize)> = Vec::new();
            for s in 0..n {
                for t in 0..n {
                    if poset.leq(s, t) {
                        closed.push((s, t));
                    }
                }
            }
            closed.shuffle(&mut rng);
            let mut classes = Vec::new();
            for chunk in closed.chunks(2).take(rng.gen_range(1..=3)) {
                if chunk.len() == 2 {
                    classes.push(chunk.to_vec());
                }
            }
            let Ok(b) = BiequivPoset::new(poset, &classes) else {
                continue;
            };
            if b.check_defining_axioms().is_ok() {
                passing += 1;
                assert!(
                    b.check_derived_properties().is_ok(),
                    "axioms i+ii held but a derived property failed"
                );
            }
        }
        assert!(passing > 20, "only {passing} random structures passed");
    }

    #[test]
    fn trivial_and_lifted_validate() {
        let b = BiequivPoset::trivial(Poset::chain(3));
        assert!(b.validate().is_ok());
        assert!(b.is_transitive());

        let s = EquivPoset::new(Poset::chain(4), &[vec![0, 2]]).unwrap();
        let lifted = BiequivPoset::from_equiv(&s);
        assert!(lifted.validate().is_ok());
        assert!(lifted.is_transitive());
        assert_eq!(lifted.dim(), 2);
    }

    #[test]
    fn axiom_i_violation_detected() {
        // class {(a,b),(a,c)} shares the first component
        let poset = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        let b = BiequivPoset::new(poset, &[vec![(0, 1), (0, 2)]]).unwrap();
        assert!(matches!(
            b.validate(),
            Err(Error::AxiomViolation { axiom: "i", .. })
        ));
    }

    #[test]
    fn ranks_and_relations() {
        let d = strip_pair();
        assert_eq!(d.inner().rank(0, 1).unwrap(), 2);
        assert_eq!(d.inner().rank(0, 2).unwrap(), 1);
        assert_eq!(d.inner().relation(0, 1), PairRelation::DoubleArrow);
        assert_eq!(d.inner().relation(0, 2), PairRelation::Triangle);
        assert_eq!(d.inner().relation(2, 0), PairRelation::Above);

        let b = BiequivPoset::trivial(Poset::chain(2));
        assert_eq!(b.rank(0, 1).unwrap(), 1);
        assert_eq!(b.relation(0, 1), PairRelation::Triangle);
    }

    #[test]
    fn triangle_composes_through_order() {
        // on valid structures x lhd y <= z forces x lhd z
        let d = strip_pair();
        let b = d.inner();
        let n = d.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if b.lhd(x, y) && b.poset().leq(y, z) && b.poset().lt(x, z) {
                        assert!(b.lhd(x, z));
                    }
                    if b.poset().leq(x, y) && b.lhd(y, z) && b.poset().lt(x, z) {
                        assert!(b.lhd(x, z));
                    }
                }
            }
        }
    }

    #[test]
    fn edges_and_duality() {
        let d = strip_pair();
        let edges = d.edges();
        assert_eq!(
            edges,
            vec![Edge { x: 0, y: 1 }, Edge { x: 2, y: 3 }]
        );
        assert_eq!(d.dual_edge(Edge { x: 0, y: 1 }), Edge { x: 2, y: 3 });
        assert_eq!(d.dual_edge(Edge { x: 2, y: 3 }), Edge { x: 0, y: 1 });
        // a pair (x, x*) is never an edge
        for e in &edges {
            assert_ne!(d.inner().partner(e.x), Some(e.y));
        }
        // if x < x* then y < y*
        for e in &edges {
            let de = d.dual_edge(*e);
            if d.poset().lt(e.x, de.x) {
                assert!(d.poset().lt(e.y, de.y));
            }
        }

        let t = DyadicSet::new(BiequivPoset::trivial(Poset::chain(3))).unwrap();
        assert!(t.edges().is_empty());
    }

    #[test]
    fn shortness_and_strips() {
        let d = strip_pair();
        let e1 = Edge { x: 0, y: 1 };
        let e2 = Edge { x: 2, y: 3 };
        assert!(d.is_short(e1, EdgeOrder::Containment));
        assert!(d.is_short(e2, EdgeOrder::Containment));
        assert!(d.is_maximal(e1, EdgeOrder::Containment));
        // in the literal order the two edges compare
        assert!(!d.is_short(e1, EdgeOrder::Literal) || !d.is_short(e2, EdgeOrder::Literal));

        let strips = d.strips(EdgeOrder::Containment);
        assert_eq!(strips, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn equipment_and_bordering() {
        let d = strip_pair();
        let e = Edge { x: 0, y: 1 };
        let (eq, val, eq_minus, eq_plus) = d.equipment(e);
        assert!(eq.is_empty());
        assert_eq!(val, ExtNat::Fin(0));
        assert!(eq_minus.is_empty());
        assert!(eq_plus.is_empty());
        assert!(!d.is_equipped(e));
        assert!(d.is_linearly_equipped());

        let borders = d.bordering_sets(e).unwrap();
        assert_eq!(borders.len(), 1);
        assert!(borders[0].elements().is_empty());
        assert_eq!(d.mu_sigma(e, &borders[0]), ExtNat::Fin(0));
    }

    #[test]
    fn strip_pair_is_finite() {
        let d = strip_pair();
        // underlying rho: a 4-chain of weights 2 gives rho(8) = 16/9 < 4
        let tilde = d.inner().as_equiv_poset();
        assert_eq!(
            tilde.rho_value().unwrap(),
            RatOrInf::Fin(Rat::new(16, 9))
        );
        assert_eq!(d.classify().unwrap(), DyadicVerdict::Finite);
        assert!(!d.is_critical().unwrap());
    }

    #[test]
    fn transitivity_counterexample() {
        // chain of 6 with classes {(0,1),(2,3)} and {(1,4),(3,5)} but the
        // composites (0,4), (2,5) inequivalent
        let poset = Poset::chain(6);
        let inner = BiequivPoset::new(
            poset,
            &[
                vec![(0, 0), (2, 2)],
                vec![(1, 1), (3, 3)],
                vec![(4, 4), (5, 5)],
                vec![(0, 1), (2, 3)],
                vec![(1, 4), (3, 5)],
            ],
        )
        .unwrap();
        assert!(!inner.is_transitive());
    }

    #[test]
    fn mu_four_case_table() {
        let cases = mu_four_boundary_cases();
        assert_eq!(cases.len(), 17);
        // the classical seventeen cases, under eq- >= eq+ and with
        // equipment-only entries folded to (min, max)
        let expect: Vec<(u64, u64, u64, u64, u64)> = vec![
            (0, 1, 4, 0, 0),
            (0, 2, 2, 0, 0),
            (0, 1, 3, 1, 0),
            (0, 1, 2, 2, 0),
            (0, 1, 2, 1, 1),
            (0, 1, 1, 2, 1),
            (0, 2, 1, 1, 0),
            (0, 2, 0, 2, 0),
            (0, 2, 0, 1, 1),
            (0, 4, 0, 1, 0),
            (1, 0, 4, 0, 0),
            (1, 0, 3, 1, 0),
            (1, 0, 2, 1, 1),
            (1, 1, 1, 0, 0),
            (1, 1, 0, 1, 0),
            (2, 0, 2, 0, 0),
            (4, 0, 1, 0, 0),
        ];
        let got: BTreeSet<(u64, u64, u64, u64, u64)> = cases
            .iter()
            .map(|c| {
                if c.eq_minus == 0 && c.eq_plus == 0 {
                    (c.l, c.eq.min(c.eq_star), c.eq.max(c.eq_star), 0, 0)
                } else {
                    (c.l, c.eq, c.eq_star, c.eq_minus, c.eq_plus)
                }
            })
            .collect();
        let want: BTreeSet<(u64, u64, u64, u64, u64)> = expect
            .into_iter()
            .map(|(l, a, b, m, p)| {
                if m == 0 && p == 0 {
                    (l, a.min(b), a.max(b), 0, 0)
                } else {
                    (l, a, b, m, p)
                }
            })
            .collect();
        assert_eq!(got, want);
        assert!(got.contains(&(1, 1, 1, 0, 0)));
        assert!(got.contains(&(4, 0, 1, 0, 0)));

        // the raw enumeration carries exactly one extra tuple
        let raw = mu_four_boundary_cases_raw();
        assert_eq!(raw.len(), 18);
        assert!(raw.contains(&MuFourCase {
            l: 0,
            eq: 1,
            eq_star: 0,
            eq_minus: 2,
            eq_plus: 2
        }));
    }

    #[test]
    fn heavily_equipped_edge_is_not_finite() {
        // chain x < y < x* < y* with an edge (x,y); a 1-chain of four small
        // points incomparable to both endpoints, and one more small point
        // above x but incomparable to y. The bordered mu reaches 4 with
        // equipment weight 4 and one one-sided point.
        // elements: x=0, y=1, x*=2, y*=3, e1..e4 = 4..7, u=8
        let covers = vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 2), // the chain sits below x*
            (0, 8),
            (8, 2), // u above x, below x*
        ];
        let poset = Poset::from_covers(9, &covers).unwrap();
        let inner = BiequivPoset::new(
            poset,
            &[
                vec![(0, 0), (2, 2)],
                vec![(1, 1), (3, 3)],
                vec![(0, 1), (2, 3)],
            ],
        )
        .unwrap();
        let d = DyadicSet::new(inner).unwrap();
        let e = Edge { x: 0, y: 1 };
        assert_eq!(d.eq_pair(0, 1), ExtNat::Fin(4));
        let (_, _, eq_minus, _) = d.equipment(e);
        assert!(eq_minus.contains(&8));
        match d.classify().unwrap() {
            DyadicVerdict::NotFinite(NotFiniteReason::BorderedMu { mu, .. }) => {
                assert_eq!(mu, ExtNat::Fin(4));
            }
            other => panic!("expected a bordered-mu failure, got {other:?}"),
        }
    }

    #[test]
    fn squeezed_equipped_edge_is_not_finite() {
        // an edge with a one-point interval and equipment weight 3, plus a
        // point incomparable to the tail together with the equipment
        // elements: a=0, m=1, b=2, a*=3, m'=4, b*=5, s1..s3=6..8, w=9
        let covers = vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (6, 7),
            (7, 8),
            (8, 3), // the equipment chain sits below a*
            (9, 1), // w below the interval point
        ];
        let poset = Poset::from_covers(10, &covers).unwrap();
        let inner = BiequivPoset::new(
            poset,
            &[
                vec![(0, 0), (3, 3)],
                vec![(1, 1), (4, 4)],
                vec![(2, 2), (5, 5)],
                vec![(0, 2), (3, 5)],
                vec![(0, 1), (3, 4)],
                vec![(1, 2), (4, 5)],
            ],
        )
        .unwrap();
        let d = DyadicSet::new(inner).unwrap();
        let e = Edge { x: 0, y: 2 };
        assert_eq!(d.interval_len(e), 1);
        assert_eq!(d.eq_pair(0, 2), ExtNat::Fin(3));
        match d.classify().unwrap() {
            DyadicVerdict::NotFinite(NotFiniteReason::EquippedSqueeze { witness, .. }) => {
                assert_eq!(witness, 9);
            }
            other => panic!("expected an equipped-squeeze failure, got {other:?}"),
        }
    }

    #[test]
    fn split_components_on_ordinal_sum() {
        // two strip pairs stacked ordinally
        let poset = Poset::chain(8);
        let inner = BiequivPoset::new(
            poset,
            &[
                vec![(0, 0), (2, 2)],
                vec![(1, 1), (3, 3)],
                vec![(0, 1), (2, 3)],
                vec![(4, 4), (6, 6)],
                vec![(5, 5), (7, 7)],
                vec![(4, 5), (6, 7)],
            ],
        )
        .unwrap();
        let (u, v) = inner.split_components().unwrap();
        assert_eq!(u.len() + v.len(), 8);
        let us: BTreeSet<usize> = u.iter().copied().collect();
        assert!(us == [0, 1, 2, 3].into() || us == [4, 5, 6, 7].into());

        // a connected-by-incomparability structure does not split
        let nh = crate::poset::n_hat();
        assert!(BiequivPoset::trivial(nh).split_components().is_none());
    }

    #[test]
    fn restriction_and_neighbors() {
        let d = strip_pair();
        let subs = d.star_subsets();
        // units: {0,2}, {1,3}: proper nonempty unions: two
        assert_eq!(subs.len(), 2);
        for sub in subs {
            let r = d.restrict(&sub).unwrap();
            assert_eq!(r.len(), 2);
            assert!(r.classify().unwrap().is_finite());
        }
        assert!(!d.strengthenings().is_empty() || d.poset().is_chain());
        assert_eq!(d.weakenings().len(), 1);
    }

    #[test]
    fn enumeration_is_well_formed() {
        let all = all_dyadic_sets(4).unwrap();
        assert!(all.iter().any(|d| !d.edges().is_empty()));
        for d in &all {
            assert!(d.inner().validate().is_ok());
            assert!(d.dim() <= 2);
        }
    }

    impl DyadicSet {
        fn dim(&self) -> usize {
            self.inner.dim()
        }
    }
}
