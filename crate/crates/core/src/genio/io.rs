use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::witnesses::{
    HRopeLadder, InducedMinorModel, InducedSubgraphWitness, Prism, RopeLadder, ShuffledRopeLadder, StrongBramble,
    Theta, TreeDecomposition, Violation,
};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `{"n": .., "edges": [[u, v], ..]}` with edges sorted and `u < v`.
pub fn to_graph_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graphs serialize")
}

pub fn parse_graph_json(text: &str) -> Result<Graph, FormatError> {
    Ok(serde_json::from_str(text)?)
}

/// A `p n m` header and one `e u v` line per edge, 1-indexed.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Reads the edge-list format; `c` lines are comments and a `p edge n m`
/// header is accepted as well.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let bad = |message: &str| FormatError::Parse { line, message: message.to_string() };
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let number = |s: &str| s.parse::<usize>().map_err(|_| bad("expected a number"));
        match fields.as_slice() {
            [] | ["c", ..] => {}
            ["p", rest @ ..] => {
                let counts = if rest.len() == 3 { &rest[1..] } else { rest };
                let [vertices, _] = counts else { return Err(bad("header is `p n m`")) };
                if n.is_some() {
                    return Err(bad("repeated header"));
                }
                n = Some(number(vertices)?);
            }
            ["e", u, v] => {
                let (u, v) = (number(u)?, number(v)?);
                if u == 0 || v == 0 {
                    return Err(bad("vertices are 1-indexed"));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(bad("expected `p`, `e` or `c`")),
        }
    }
    let n = n.ok_or(FormatError::Parse { line: 0, message: "missing `p n m` header".to_string() })?;
    Ok(Graph::from_edges(n, edges)?)
}

/// Every certificate kind, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    TreeDecomposition(TreeDecomposition),
    StrongBramble(StrongBramble),
    InducedMinorModel(InducedMinorModel),
    InducedSubgraph(InducedSubgraphWitness),
    ShuffledRopeLadder(ShuffledRopeLadder),
    RopeLadder(RopeLadder),
    HRopeLadder(HRopeLadder),
    Theta(Theta),
    Prism(Prism),
}

impl Witness {
    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        match self {
            Witness::TreeDecomposition(w) => w.validate(g),
            Witness::StrongBramble(w) => w.validate(g),
            Witness::InducedMinorModel(w) => w.validate(g),
            Witness::InducedSubgraph(w) => w.validate(g),
            Witness::ShuffledRopeLadder(w) => w.validate(g),
            Witness::RopeLadder(w) => w.validate(g),
            Witness::HRopeLadder(w) => w.validate(g),
            Witness::Theta(w) => w.validate(g),
            Witness::Prism(w) => w.validate(g),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_length: Option<usize>,
}

impl Params {
    fn is_empty(&self) -> bool {
        *self == Params::default()
    }
}

/// A witness file: the tagged witness fields next to a `params` object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    #[serde(flatten)]
    pub witness: Witness,
    #[serde(default, skip_serializing_if = "Params::is_empty")]
    pub params: Params,
}

impl WitnessDoc {
    pub fn new(witness: Witness) -> Self {
        WitnessDoc { witness, params: Params::default() }
    }

    pub fn with_params(mut self, k: Option<usize>, d: Option<usize>) -> Self {
        self.params.k = k;
        self.params.d = d;
        self.params.min_length = match &self.witness {
            Witness::Theta(t) => Some(t.min_length),
            Witness::Prism(p) => Some(p.min_length),
            _ => None,
        };
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witnesses serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genio::gen_theta;
    use proptest::prelude::*;

    #[test]
    fn formats_are_canonical() {
        let g = Graph::from_edges(4, [(2, 1), (0, 3), (1, 0)]).unwrap();
        assert_eq!(to_graph_json(&g), r#"{"n":4,"edges":[[0,1],[0,3],[1,2]]}"#);
        assert_eq!(to_edge_list(&g), "p 4 3\ne 1 2\ne 1 4\ne 2 3\n");
        assert_eq!(parse_edge_list("c hi\np edge 4 3\ne 1 2\ne 1 4\ne 2 3\n").unwrap(), g);
        assert!(parse_edge_list("e 1 2\n").is_err());
        assert!(parse_edge_list("p 2 1\ne 0 1\n").is_err());
        assert!(parse_graph_json(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
    }

    #[test]
    fn witness_documents_round_trip() {
        let (g, t) = gen_theta(3, [3, 4, 5]).unwrap();
        let doc = WitnessDoc::new(Witness::Theta(t)).with_params(Some(3), None);
        let text = doc.to_json();
        assert!(text.contains(r#""kind": "theta""#) && text.contains(r#""min_length": 3"#));
        let back = WitnessDoc::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert!(back.witness.validate(&g).is_empty());
    }

    proptest! {
        #[test]
        fn both_formats_round_trip(n in 2usize..30, pairs in prop::collection::vec((0usize..30, 0usize..30), 0..80)) {
            let g = Graph::from_edges(n, pairs.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v)).unwrap();
            prop_assert_eq!(parse_graph_json(&to_graph_json(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
