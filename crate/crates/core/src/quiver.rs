//! Marked quivers: a finite quiver whose vertices carry aggregates given by
//! chains, semilinear posets-with-equivalence, general posets-with-
//! equivalence, or dyadic sets. Semilinearly marked quivers classify through
//! the rho-degrees of the induced vertex-weighted graph; a single properly
//! non-semilinear vertex classifies through the path reduction and the
//! explicit threshold criteria.

use crate::dyadic::{DyadicSet, EdgeOrder};
use crate::eqposet::EquivPoset;
use crate::exact::{ExtNat, Rat, RatOrInf};
use crate::graph::{FWeight, LabeledGraph};
use crate::poset::{is_ordinal_sum_of, ordinal_blocks};
use crate::{Error, RepType};

/// A finite oriented multigraph; loops and parallel arrows allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// `arrows` are `(tail, head)` pairs. The quiver must be connected and
    /// carry at least one arrow.
    pub fn new(n: usize, arrows: &[(usize, usize)]) -> Result<Quiver, Error> {
        if arrows.is_empty() {
            return Err(Error::Schema("a quiver needs at least one arrow".into()));
        }
        for &(t, h) in arrows {
            if t >= n || h >= n {
                return Err(Error::DimensionMismatch { expected: n, got: t.max(h) + 1 });
            }
        }
        let q = Quiver { n, arrows: arrows.to_vec() };
        if !q.underlying_graph().is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(q)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// The underlying undirected multigraph with unit weights.
    pub fn underlying_graph(&self) -> LabeledGraph {
        let mut g = LabeledGraph::new(self.n);
        for &(t, h) in &self.arrows {
            g.add_edge(t, h, FWeight::one());
        }
        g
    }
}

/// The aggregate attached to a vertex.
#[derive(Clone, Debug)]
pub enum Marking {
    /// A chain of the given length (length 0 is the empty aggregate).
    Linear(u64),
    /// A semilinear poset-with-equivalence: dimension at most 2, every
    /// element comparable to at most one other, and a comparable element is
    /// small. Chains count as the linear special case.
    Semilinear(EquivPoset),
    /// An arbitrary poset with equivalence.
    EqPoset(EquivPoset),
    /// A dyadic set.
    Dyadic(DyadicSet),
}

/// Checks the semilinearity conditions for a marking body.
pub fn is_semilinear_content(s: &EquivPoset) -> bool {
    if s.dim() == 1 && s.poset().is_chain() {
        return true;
    }
    if s.dim() > 2 {
        return false;
    }
    (0..s.len()).all(|x| {
        let comp: Vec<usize> = (0..s.len())
            .filter(|&y| y != x && s.poset().comparable(x, y))
            .collect();
        comp.len() <= 1 && (comp.is_empty() || s.dim_of(x) == 1)
    })
}

impl Marking {
    /// The vertex weight when the marking is (effectively) semilinear: the
    /// chain length for linear content, infinity for properly semilinear
    /// content, `None` when the marking genuinely escapes semilinearity.
    pub fn semilinear_v(&self) -> Option<ExtNat> {
        match self {
            Marking::Linear(n) => Some(ExtNat::Fin(*n)),
            Marking::Semilinear(s) | Marking::EqPoset(s) => {
                if s.dim() == 1 && s.poset().is_chain() {
                    Some(ExtNat::Fin(s.len() as u64))
                } else if is_semilinear_content(s) {
                    Some(ExtNat::Inf)
                } else {
                    None
                }
            }
            Marking::Dyadic(d) => {
                if d.edges().is_empty() {
                    Marking::EqPoset(d.inner().as_equiv_poset()).semilinear_v()
                } else {
                    None
                }
            }
        }
    }
}

/// A quiver with one marking per vertex.
#[derive(Clone, Debug)]
pub struct MarkedQuiver {
    pub quiver: Quiver,
    pub marks: Vec<Marking>,
}

/// Verdict of the classification: a full representation type where the
/// theory provides one, or a bare finiteness answer for dyadic markings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QuiverVerdict {
    Type(RepType),
    Finiteness(bool),
}

#[derive(Clone, Debug)]
pub struct QuiverReport {
    pub verdict: QuiverVerdict,
    pub notes: Vec<String>,
}

/// Shape data of the path reduction: the chain budget `t` and whether the
/// anchored marking must be dualized (the anchor is the tail of its arrow).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PathAnchor {
    pub t: u64,
    pub dualize: bool,
}

impl MarkedQuiver {
    pub fn new(quiver: Quiver, marks: Vec<Marking>) -> Result<MarkedQuiver, Error> {
        if marks.len() != quiver.len() {
            return Err(Error::DimensionMismatch {
                expected: quiver.len(),
                got: marks.len(),
            });
        }
        for m in &marks {
            if let Marking::Semilinear(s) = m {
                if !is_semilinear_content(s) {
                    return Err(Error::NotSemilinear(
                        "marking declared semilinear is not".into(),
                    ));
                }
            }
        }
        Ok(MarkedQuiver { quiver, marks })
    }

    /// The induced vertex-weighted graph, defined when every marking is
    /// (effectively) semilinear.
    pub fn gamma_vgraph(&self) -> Result<LabeledGraph, Error> {
        let mut g = self.quiver.underlying_graph();
        for x in 0..self.quiver.len() {
            match self.marks[x].semilinear_v() {
                Some(ExtNat::Fin(0)) => {
                    return Err(Error::NotSemilinear(format!(
                        "vertex {x} carries the empty aggregate"
                    )))
                }
                Some(v) => g.set_v(x, v),
                None => {
                    return Err(Error::NotSemilinear(format!(
                        "vertex {x} carries a non-semilinear marking"
                    )))
                }
            }
        }
        Ok(g)
    }

    /// Classification of a semilinearly marked quiver: finite iff every
    /// rho-degree of the induced graph is below 4, tame iff the maximum is
    /// exactly 4.
    pub fn classify_semilinear(&self) -> Result<RepType, Error> {
        self.gamma_vgraph()?.type_by_max_degree()
    }

    /// Verifies the path-reduction shape around a non-semilinear vertex:
    /// the underlying graph is a plain path with `x` at one end, interior
    /// vertices carry unit chains, the far end carries a finite chain.
    /// Returns the chain budget `t = l + v(far) - 3`.
    pub fn path_anchor(&self, x: usize) -> Result<PathAnchor, Error> {
        let n = self.quiver.len();
        let g = self.quiver.underlying_graph();
        if n < 2 {
            return Err(Error::ShapeViolation("the path needs at least 2 vertices".into()));
        }
        // simple path: n-1 edges, no loops/parallels, degrees fit a path
        if g.edges().len() != n - 1 {
            return Err(Error::ShapeViolation("not a path (edge count)".into()));
        }
        if g.degree(x) != 1 {
            return Err(Error::ShapeViolation(format!(
                "the marked vertex {x} is not an endpoint"
            )));
        }
        let mut order = vec![x];
        let mut prev = x;
        while order.len() < n {
            let nexts: Vec<usize> = g
                .edges()
                .iter()
                .filter(|e| e.a == prev || e.b == prev)
                .map(|e| if e.a == prev { e.b } else { e.a })
                .filter(|&y| Some(&y) != order.get(order.len().wrapping_sub(2)))
                .collect();
            let step = match nexts.as_slice() {
                [y] => *y,
                _ => return Err(Error::ShapeViolation("not a path (branching)".into())),
            };
            if order.contains(&step) {
                return Err(Error::ShapeViolation("not a path (cycle)".into()));
            }
            order.push(step);
            prev = step;
        }
        // interior vertices carry unit chains, the far end a finite chain
        for &a in &order[1..n - 1] {
            if self.marks[a].semilinear_v() != Some(ExtNat::Fin(1)) {
                return Err(Error::ShapeViolation(format!(
                    "interior vertex {a} does not carry a unit chain"
                )));
            }
        }
        let far = order[n - 1];
        let v_far = match self.marks[far].semilinear_v() {
            Some(ExtNat::Fin(v)) if v >= 1 => v,
            _ => {
                return Err(Error::ShapeViolation(format!(
                    "end vertex {far} does not carry a finite chain"
                )))
            }
        };
        let arrow = self
            .quiver
            .arrows()
            .iter()
            .find(|&&(t, h)| t == x || h == x)
            .expect("endpoint has an incident arrow");
        let dualize = arrow.0 == x;
        Ok(PathAnchor {
            t: n as u64 + v_far - 3,
            dualize,
        })
    }

    /// Full dispatcher: all-semilinear quivers go through the graph
    /// criterion, a single properly non-semilinear vertex goes through the
    /// path reduction, two or more are wild.
    pub fn classify(&self) -> Result<QuiverReport, Error> {
        let mut notes = Vec::new();
        let hard: Vec<usize> = (0..self.quiver.len())
            .filter(|&x| self.marks[x].semilinear_v().is_none())
            .collect();
        if hard.is_empty() {
            for (x, m) in self.marks.iter().enumerate() {
                if matches!(m, Marking::EqPoset(_) | Marking::Dyadic(_)) {
                    notes.push(format!(
                        "vertex {x}: marking content is semilinear; classified through the graph criterion"
                    ));
                }
            }
            return Ok(QuiverReport {
                verdict: QuiverVerdict::Type(self.classify_semilinear()?),
                notes,
            });
        }
        if hard.len() > 1 {
            notes.push(format!(
                "{} non-semilinear vertices cannot satisfy the path shape",
                hard.len()
            ));
            return Ok(QuiverReport {
                verdict: QuiverVerdict::Type(RepType::Wild),
                notes,
            });
        }
        let x = hard[0];
        let anchor = match self.path_anchor(x) {
            Ok(a) => a,
            Err(Error::ShapeViolation(why)) => {
                notes.push(format!("path shape violated ({why}); wild"));
                return Ok(QuiverReport {
                    verdict: QuiverVerdict::Type(RepType::Wild),
                    notes,
                });
            }
            Err(e) => return Err(e),
        };
        if anchor.dualize {
            notes.push(
                "marking dualized (anchor is an arrow tail); the dual aggregate is assumed to share the representation type"
                    .into(),
            );
        }
        match &self.marks[x] {
            Marking::EqPoset(s) => {
                let s = if anchor.dualize { s.dual() } else { s.clone() };
                Ok(QuiverReport {
                    verdict: QuiverVerdict::Type(classify_eqposet_anchored(&s, anchor.t)?),
                    notes,
                })
            }
            Marking::Dyadic(d) => {
                let d = if anchor.dualize { d.dual() } else { d.clone() };
                Ok(QuiverReport {
                    verdict: QuiverVerdict::Finiteness(classify_dyadic_anchored(&d, anchor.t)?),
                    notes,
                })
            }
            _ => unreachable!("semilinear markings are never in `hard`"),
        }
    }
}

/// Threshold `3 - (t-1)/(t+1)`.
fn threshold(t: u64) -> Rat {
    Rat::int(3) - Rat::new(t as i64 - 1, t as i64 + 1)
}

/// Structural side condition used at `t = 4` (finite) and `t = 5` (tame):
/// the underlying poset is an ordinal sum of blocks `(1)`, `(1,1)`,
/// `(1,2)`; no dimension-2 point sits in a `(1,2)` block; and a dimension-2
/// point in a `(1,1)` block has a partner with no incomparable elements.
fn anchored_shape_ok(s: &EquivPoset) -> bool {
    let poset = s.poset();
    if !is_ordinal_sum_of(poset, &[&[1], &[1, 1], &[1, 2]]) {
        return false;
    }
    for block in ordinal_blocks(poset) {
        for &x in &block {
            if s.dim_of(x) != 2 {
                continue;
            }
            match block.len() {
                3 => return false, // the (1,2) block
                2 => {
                    let partner = s.partner(x).expect("dimension 2");
                    if !poset.incomparables(partner).is_empty() {
                        return false;
                    }
                }
                _ => {}
            }
        }
    }
    true
}

/// The explicit criteria for a path-anchored poset-with-equivalence
/// marking.
pub fn classify_eqposet_anchored(s: &EquivPoset, t: u64) -> Result<RepType, Error> {
    if t == 0 {
        // an empty chain budget leaves the bare aggregate
        return s.classify();
    }
    let rho = s.rho_value()?;
    let dim = s.dim();
    let three = Rat::int(3);

    let finite = match t {
        1 => dim <= 2 && rho.cmp_rat(&three) == std::cmp::Ordering::Less,
        2 | 3 => dim <= 2 && rho.cmp_rat(&threshold(t)) == std::cmp::Ordering::Less,
        4 => {
            dim <= 2
                && rho.cmp_rat(&threshold(4)) == std::cmp::Ordering::Less
                && anchored_shape_ok(s)
        }
        _ => false,
    };
    if finite {
        return Ok(RepType::Finite);
    }

    let tame = match t {
        1 => {
            if dim < 3 {
                rho == RatOrInf::Fin(three)
            } else if dim == 3 {
                let dim3_isolated = (0..s.len()).all(|x| {
                    s.dim_of(x) != 3 || s.poset().incomparables(x).is_empty()
                });
                dim3_isolated && s.poset().rho_value()? <= three
            } else {
                false
            }
        }
        2..=5 => {
            dim <= 2
                && rho == RatOrInf::Fin(threshold(t))
                && (t != 5 || anchored_shape_ok(s))
        }
        _ => false,
    };
    Ok(if tame { RepType::Tame } else { RepType::Wild })
}

/// The finiteness criterion for a path-anchored dyadic marking with at
/// least one edge: unit chain budget, weighted `rho` below 3, every edge
/// short and unequipped, and two-sided borderings only with weight 1 on
/// both sides.
pub fn classify_dyadic_anchored(d: &DyadicSet, t: u64) -> Result<bool, Error> {
    if t != 1 {
        return Ok(false);
    }
    let three = Rat::int(3);
    if d.inner().rho_value()?.cmp_rat(&three) != std::cmp::Ordering::Less {
        return Ok(false);
    }
    for e in d.edges() {
        if !d.is_short(e, EdgeOrder::Containment) || d.is_equipped(e) {
            return Ok(false);
        }
        for b in d.bordering_sets(e)? {
            if !b.z_minus.is_empty() && !b.z_plus.is_empty() {
                let w = d.inner().weights();
                let wm: ExtNat = b.z_minus.iter().map(|&z| w[z]).sum();
                let wp: ExtNat = b.z_plus.iter().map(|&z| w[z]).sum();
                if wm != ExtNat::Fin(1) || wp != ExtNat::Fin(1) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
