//! Kind-tagged JSON documents for every object the tools consume, with
//! conversion into the core types. One convention throughout: utf-8 JSON,
//! 0-based indices, `"inf"` for infinity, rationals as `"p/q"` strings.

use crate::dyadic::{BiequivPoset, DyadicSet};
use crate::eqposet::EquivPoset;
use crate::exact::{ExtNat, Rat};
use crate::graph::{FWeight, LabeledGraph};
use crate::poset::Poset;
use crate::quiver::{Marking, MarkedQuiver, Quiver};
use crate::relation::Relation;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A JSON number or a textual value such as `"inf"` or `"3/2"`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumOrText {
    Int(i64),
    Text(String),
}

impl NumOrText {
    pub fn to_extnat(&self) -> Result<ExtNat, Error> {
        match self {
            NumOrText::Int(n) if *n >= 0 => Ok(ExtNat::Fin(*n as u64)),
            NumOrText::Int(n) => Err(Error::Schema(format!("negative value {n}"))),
            NumOrText::Text(s) => s.parse(),
        }
    }

    pub fn to_fweight(&self) -> Result<FWeight, Error> {
        match self {
            NumOrText::Int(n) if *n >= 1 => Ok(FWeight::int(*n)),
            NumOrText::Int(n) => Err(Error::Schema(format!("edge weight {n} below 1"))),
            NumOrText::Text(s) if s.eq_ignore_ascii_case("inf") => Ok(FWeight::Inf),
            NumOrText::Text(s) => {
                let r: Rat = s.parse()?;
                if r < Rat::one() {
                    return Err(Error::Schema(format!("edge weight {r} below 1")));
                }
                Ok(FWeight::Rational(r))
            }
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct RelationDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<String>>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct PosetDoc {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct EqPosetDoc {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<Vec<usize>>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct DyadicDoc {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
    /// Element classes (each lifted to a class of degenerate pairs).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<Vec<usize>>,
    /// Classes of closed pairs, e.g. `[[[0,1],[2,3]]]`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pair_classes: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct GraphEdgeDoc {
    pub ends: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<NumOrText>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<GraphEdgeDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub v: BTreeMap<String, NumOrText>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub t: String,
    pub h: String,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MarkDoc {
    Linear {
        n: u64,
    },
    Semilinear {
        n: usize,
        #[serde(default)]
        covers: Vec<(usize, usize)>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        classes: Vec<Vec<usize>>,
    },
    Eqposet {
        n: usize,
        #[serde(default)]
        covers: Vec<(usize, usize)>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        classes: Vec<Vec<usize>>,
    },
    Dyadic {
        n: usize,
        #[serde(default)]
        covers: Vec<(usize, usize)>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        classes: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        pair_classes: Vec<Vec<(usize, usize)>>,
    },
    Triadic {},
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub marks: BTreeMap<String, MarkDoc>,
}

/// A kind-tagged document.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Relation(RelationDoc),
    Poset(PosetDoc),
    Eqposet(EqPosetDoc),
    Dyadic(DyadicDoc),
    Graph(GraphDoc),
    Quiver(QuiverDoc),
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Relation(_) => "relation",
            Document::Poset(_) => "poset",
            Document::Eqposet(_) => "eqposet",
            Document::Dyadic(_) => "dyadic",
            Document::Graph(_) => "graph",
            Document::Quiver(_) => "quiver",
        }
    }
}

impl RelationDoc {
    pub fn to_relation(&self) -> Result<Relation, Error> {
        match (&self.pairs, &self.matrix) {
            (Some(pairs), None) => {
                let n = self
                    .n
                    .ok_or_else(|| Error::Schema("\"pairs\" needs \"n\"".into()))?;
                Relation::from_pairs(n, pairs)
            }
            (None, Some(rows)) => {
                let rows: Vec<&str> = rows.iter().map(|s| s.as_str()).collect();
                Relation::from_matrix_rows(&rows)
            }
            _ => Err(Error::Schema(
                "a relation needs exactly one of \"pairs\" or \"matrix\"".into(),
            )),
        }
    }
}

impl PosetDoc {
    pub fn to_poset(&self) -> Result<Poset, Error> {
        Poset::from_covers(self.n, &self.covers)
    }
}

impl EqPosetDoc {
    pub fn to_eqposet(&self) -> Result<EquivPoset, Error> {
        EquivPoset::new(Poset::from_covers(self.n, &self.covers)?, &self.classes)
    }
}

impl DyadicDoc {
    pub fn to_dyadic(&self) -> Result<DyadicSet, Error> {
        let poset = Poset::from_covers(self.n, &self.covers)?;
        let mut pair_classes: Vec<Vec<(usize, usize)>> = self
            .classes
            .iter()
            .map(|c| c.iter().map(|&x| (x, x)).collect())
            .collect();
        pair_classes.extend(self.pair_classes.iter().cloned());
        DyadicSet::new(BiequivPoset::new(poset, &pair_classes)?)
    }
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<LabeledGraph, Error> {
        let index: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        if index.len() != self.vertices.len() {
            return Err(Error::Schema("duplicate vertex names".into()));
        }
        let mut g = LabeledGraph::new(self.vertices.len());
        for e in &self.edges {
            let ids: Vec<usize> = e
                .ends
                .iter()
                .map(|s| {
                    index
                        .get(s.as_str())
                        .copied()
                        .ok_or_else(|| Error::Schema(format!("unknown vertex {s:?}")))
                })
                .collect::<Result<_, _>>()?;
            let f = match &e.f {
                Some(w) => w.to_fweight()?,
                None => FWeight::one(),
            };
            match ids.as_slice() {
                [a] => g.add_edge(*a, *a, f),
                [a, b] => g.add_edge(*a, *b, f),
                _ => {
                    return Err(Error::Schema(
                        "an edge has one or two endpoints".into(),
                    ))
                }
            }
        }
        for (name, w) in &self.v {
            let &x = index
                .get(name.as_str())
                .ok_or_else(|| Error::Schema(format!("unknown vertex {name:?}")))?;
            let w = w.to_extnat()?;
            if w.is_zero() {
                return Err(Error::Schema("vertex weights are at least 1".into()));
            }
            g.set_v(x, w);
        }
        Ok(g)
    }
}

impl MarkDoc {
    pub fn to_marking(&self) -> Result<Marking, Error> {
        match self {
            MarkDoc::Linear { n } => Ok(Marking::Linear(*n)),
            MarkDoc::Semilinear { n, covers, classes } => Ok(Marking::Semilinear(
                EquivPoset::new(Poset::from_covers(*n, covers)?, classes)?,
            )),
            MarkDoc::Eqposet { n, covers, classes } => Ok(Marking::EqPoset(EquivPoset::new(
                Poset::from_covers(*n, covers)?,
                classes,
            )?)),
            MarkDoc::Dyadic {
                n,
                covers,
                classes,
                pair_classes,
            } => {
                let doc = DyadicDoc {
                    n: *n,
                    covers: covers.clone(),
                    classes: classes.clone(),
                    pair_classes: pair_classes.clone(),
                };
                Ok(Marking::Dyadic(doc.to_dyadic()?))
            }
            MarkDoc::Triadic {} => Err(Error::Unsupported(
                "triadic markings are out of scope".into(),
            )),
        }
    }
}

impl QuiverDoc {
    pub fn to_marked_quiver(&self) -> Result<MarkedQuiver, Error> {
        let index: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        if index.len() != self.vertices.len() {
            return Err(Error::Schema("duplicate vertex names".into()));
        }
        let arrows: Vec<(usize, usize)> = self
            .arrows
            .iter()
            .map(|a| {
                let t = index
                    .get(a.t.as_str())
                    .ok_or_else(|| Error::Schema(format!("unknown vertex {:?}", a.t)))?;
                let h = index
                    .get(a.h.as_str())
                    .ok_or_else(|| Error::Schema(format!("unknown vertex {:?}", a.h)))?;
                Ok::<_, Error>((*t, *h))
            })
            .collect::<Result<_, _>>()?;
        let quiver = Quiver::new(self.vertices.len(), &arrows)?;
        let mut marks: Vec<Marking> = vec![Marking::Linear(1); self.vertices.len()];
        for (name, mark) in &self.marks {
            let &x = index
                .get(name.as_str())
                .ok_or_else(|| Error::Schema(format!("unknown vertex {name:?}")))?;
            marks[x] = mark.to_marking()?;
        }
        MarkedQuiver::new(quiver, marks)
    }
}
