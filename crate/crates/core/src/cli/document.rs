//! JSON interchange documents.
//!
//! ```json
//! {"kind":"tableau","rows":[[1,3,4],[2,5,6]]}
//! {"kind":"path","r":2,"points":[[2,1],[3,1]]}
//! {"kind":"graph","loops":[["10","1"],["7/2","1"]]}
//! {"kind":"divisor","graph":{"kind":"graph","loops":[...]},"head":2,
//!  "underline":[2,3,1,0,1,0],"raw":["3","4","2","0","2","0"]}
//! ```
//!
//! Rationals are strings (`"num/den"` or an integer); plain JSON integers are
//! accepted on input. Every document may carry a free-form `meta` value.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::divisor::{DivisorSeq, UnderlineSeq};
use crate::error::{invalid, Error, Result};
use crate::graph::ChainOfLoops;
use crate::path::LatticePath;
use crate::rational::Rational;
use crate::tableau::RectTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Tableau,
    Path,
    Divisor,
    Graph,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Tableau => "tableau",
            Kind::Path => "path",
            Kind::Divisor => "divisor",
            Kind::Graph => "graph",
        })
    }
}

/// A divisor as carried by a document. `underline` is present whenever the raw
/// positions have an underline form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorPayload {
    pub raw: DivisorSeq,
    pub underline: Option<UnderlineSeq>,
}

impl DivisorPayload {
    pub fn from_underline(c: UnderlineSeq) -> Self {
        DivisorPayload { raw: c.to_raw(), underline: Some(c) }
    }

    pub fn from_raw(raw: DivisorSeq) -> Self {
        let underline = raw.to_underline().ok();
        DivisorPayload { raw, underline }
    }

    pub fn require_underline(&self) -> Result<&UnderlineSeq> {
        self.underline.as_ref().ok_or_else(|| invalid!("divisor positions are not whole multiples of m_i"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Tableau(RectTableau),
    Path(LatticePath),
    Divisor(DivisorPayload),
    Graph(ChainOfLoops),
}

impl Payload {
    pub fn kind(&self) -> Kind {
        match self {
            Payload::Tableau(_) => Kind::Tableau,
            Payload::Path(_) => Kind::Path,
            Payload::Divisor(_) => Kind::Divisor,
            Payload::Graph(_) => Kind::Graph,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub payload: Payload,
    pub meta: Option<Value>,
}

impl From<Payload> for Document {
    fn from(payload: Payload) -> Self {
        Document { payload, meta: None }
    }
}

impl Document {
    pub fn kind(&self) -> Kind {
        self.payload.kind()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let wire: Wire = serde_json::from_str(text).map_err(|e| invalid!("bad document: {e}"))?;
        wire.into_document()
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&Wire::from_document(self)).expect("documents always serialize")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphWire {
    #[serde(default = "graph_kind")]
    kind: String,
    loops: Vec<(Rational, Rational)>,
}

fn graph_kind() -> String {
    "graph".into()
}

impl GraphWire {
    fn from_graph(graph: &ChainOfLoops) -> Self {
        GraphWire { kind: graph_kind(), loops: graph.loops().iter().map(|lp| (lp.ell.clone(), lp.m.clone())).collect() }
    }

    fn into_graph(self) -> Result<ChainOfLoops> {
        if self.kind != "graph" {
            return Err(invalid!("expected a graph, found kind {:?}", self.kind));
        }
        ChainOfLoops::new(self.loops)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Wire {
    Tableau {
        rows: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        meta: Option<Value>,
    },
    Path {
        r: usize,
        points: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        meta: Option<Value>,
    },
    Divisor {
        graph: GraphWire,
        head: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        underline: Option<Vec<u64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        raw: Option<Vec<Rational>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        meta: Option<Value>,
    },
    Graph {
        loops: Vec<(Rational, Rational)>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        meta: Option<Value>,
    },
}

impl Wire {
    fn into_document(self) -> Result<Document> {
        let (payload, meta) = match self {
            Wire::Tableau { rows, meta } => (Payload::Tableau(RectTableau::from_rows(rows)?), meta),
            Wire::Path { r, points, meta } => (Payload::Path(LatticePath::new(r, points)?), meta),
            Wire::Graph { loops, meta } => (Payload::Graph(ChainOfLoops::new(loops)?), meta),
            Wire::Divisor { graph, head, underline, raw, meta } => {
                let graph = graph.into_graph()?;
                let payload = match (underline, raw) {
                    (Some(xu), raw) => {
                        let c = UnderlineSeq::new(graph.clone(), head, xu)?;
                        let payload = DivisorPayload::from_underline(c);
                        if let Some(raw) = raw {
                            if DivisorSeq::new(graph, head, raw)? != payload.raw {
                                return Err(invalid!("underline and raw sequences describe different divisors"));
                            }
                        }
                        payload
                    }
                    (None, Some(raw)) => DivisorPayload::from_raw(DivisorSeq::new(graph, head, raw)?),
                    (None, None) => return Err(invalid!("a divisor needs `underline` or `raw`")),
                };
                (Payload::Divisor(payload), meta)
            }
        };
        Ok(Document { payload, meta })
    }

    fn from_document(doc: &Document) -> Self {
        let meta = doc.meta.clone();
        match &doc.payload {
            Payload::Tableau(t) => Wire::Tableau { rows: t.to_rows(), meta },
            Payload::Path(p) => Wire::Path { r: p.dim(), points: p.points().to_vec(), meta },
            Payload::Graph(g) => Wire::Graph { loops: GraphWire::from_graph(g).loops, meta },
            Payload::Divisor(d) => Wire::Divisor {
                graph: GraphWire::from_graph(d.raw.graph()),
                head: d.raw.d0(),
                underline: d.underline.as_ref().map(|u| u.distances().to_vec()),
                raw: Some(d.raw.positions().to_vec()),
                meta,
            },
        }
    }
}

impl std::str::FromStr for Document {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Document::parse(s)
    }
}
