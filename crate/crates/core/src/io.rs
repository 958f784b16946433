//! JSON documents: graphs, signed graphs, networks, certificates, point lists.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::circle::RationalAngle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::relalg::{ra_56_65, Certificate, Network, RelationAlgebra};
use crate::signed::SignedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Graph(Graph),
    SignedGraph(SignedGraph),
    /// Networks are always over 56_65.
    Network(Network),
    Certificate(Certificate),
    Points(Vec<RationalAngle>),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Graph(_) => "graph",
            Document::SignedGraph(_) => "signed-graph",
            Document::Network(_) => "network",
            Document::Certificate(_) => "certificate",
            Document::Points(_) => "points",
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SignedDoc {
    n: usize,
    edges: Vec<(usize, usize, u8)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstraintDoc {
    x: usize,
    y: usize,
    atoms: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkDoc {
    vars: usize,
    constraints: Vec<ConstraintDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsDoc {
    points: Vec<RationalAngle>,
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
}

fn validation(e: Error) -> Error {
    match e {
        Error::Validation(_) | Error::Parse(_) => e,
        other => Error::Validation(other.to_string()),
    }
}

fn typed<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses and validates a document. A network may omit `"kind"`.
pub fn parse(text: &str) -> Result<Document> {
    let mut v: Value = serde_json::from_str(text).map_err(parse_error)?;
    let obj = v
        .as_object_mut()
        .ok_or_else(|| Error::Parse("document must be a JSON object".into()))?;
    let kind = match obj.remove("kind") {
        Some(Value::String(k)) => k,
        Some(_) => return Err(Error::Parse("field \"kind\" must be a string".into())),
        None if obj.contains_key("vars") => "network".to_string(),
        None => return Err(Error::Parse("missing field \"kind\"".into())),
    };
    match kind.as_str() {
        "graph" => {
            let d: GraphDoc = typed(v)?;
            Ok(Document::Graph(Graph::new(d.n, d.edges).map_err(validation)?))
        }
        "signed-graph" => {
            let d: SignedDoc = typed(v)?;
            Ok(Document::SignedGraph(
                SignedGraph::from_labelled_edges(d.n, &d.edges).map_err(validation)?,
            ))
        }
        "network" => {
            let d: NetworkDoc = typed(v)?;
            let ra = ra_56_65();
            let mut net = Network::new(&ra, d.vars);
            for c in &d.constraints {
                let set = ra.parse_set(&c.atoms).map_err(validation)?;
                net.constrain(&ra, c.x, c.y, set).map_err(validation)?;
            }
            Ok(Document::Network(net))
        }
        "certificate" => Ok(Document::Certificate(
            serde_json::from_value(v).map_err(|e| validation(Error::Parse(e.to_string())))?,
        )),
        "points" => {
            let d: PointsDoc = typed(v)?;
            crate::circle::check_distinct(&d.points).map_err(validation)?;
            Ok(Document::Points(d.points))
        }
        other => Err(Error::Parse(format!("unknown kind {other:?}"))),
    }
}

fn tagged<T: Serialize>(kind: &str, body: &T) -> Value {
    let mut v = serde_json::to_value(body).expect("documents serialize");
    let obj = v.as_object_mut().expect("documents are objects");
    let mut out = serde_json::Map::new();
    out.insert("kind".into(), Value::String(kind.into()));
    out.append(obj);
    Value::Object(out)
}

fn network_doc(ra: &RelationAlgebra, net: &Network) -> NetworkDoc {
    NetworkDoc {
        vars: net.vars(),
        constraints: net
            .constraints(ra)
            .into_iter()
            .map(|(x, y, s)| ConstraintDoc {
                x,
                y,
                atoms: ra.set_names(s),
            })
            .collect(),
    }
}

/// Canonical JSON for a document: a `"kind"` field first, edges sorted,
/// network constraints listed once per unordered pair.
pub fn emit(doc: &Document) -> String {
    let v = match doc {
        Document::Graph(g) => tagged(
            "graph",
            &GraphDoc {
                n: g.order(),
                edges: g.edges().to_vec(),
            },
        ),
        Document::SignedGraph(sg) => tagged(
            "signed-graph",
            &SignedDoc {
                n: sg.graph().order(),
                edges: sg.labelled_edges().collect(),
            },
        ),
        Document::Network(net) => tagged("network", &network_doc(&ra_56_65(), net)),
        Document::Certificate(c) => tagged("certificate", c),
        Document::Points(p) => tagged("points", &PointsDoc { points: p.clone() }),
    };
    serde_json::to_string(&v).expect("json values serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let k3 = parse(r#"{"kind":"graph","n":3,"edges":[[0,1],[1,2],[0,2]]}"#).unwrap();
        assert_eq!(k3, Document::Graph(Graph::complete(3)));
        assert!(matches!(parse("{\"kind\":"), Err(Error::Parse(_))));
        let bad_atom = r#"{"kind":"network","vars":2,"constraints":[{"x":0,"y":1,"atoms":["X"]}]}"#;
        assert!(matches!(parse(bad_atom), Err(Error::Validation(_))));
        let loop_edge = r#"{"kind":"graph","n":2,"edges":[[1,1]]}"#;
        assert!(matches!(parse(loop_edge), Err(Error::Validation(_))));
    }

    #[test]
    fn untagged_network() {
        let text = r#"{"vars":2,"constraints":[{"x":0,"y":1,"atoms":["N","0"]}]}"#;
        let Document::Network(net) = parse(text).unwrap() else {
            panic!("network expected");
        };
        let ra = ra_56_65();
        assert_eq!(ra.set_names(net.get(1, 0)), vec!["N", "0"]);
    }

    #[test]
    fn round_trips() {
        let docs = [
            r#"{"kind":"graph","n":3,"edges":[[0,1],[0,2],[1,2]]}"#,
            r#"{"kind":"signed-graph","n":3,"edges":[[0,1,1],[1,2,0]]}"#,
            r#"{"kind":"network","vars":3,"constraints":[{"x":0,"y":1,"atoms":["N","0"]},{"x":1,"y":1,"atoms":["id"]}]}"#,
            r#"{"kind":"certificate","assignment":[{"angle":"0/1","parity":0},{"angle":"1/10","parity":1}],"merged":[[0],[1]]}"#,
            r#"{"kind":"points","points":["0/1","2/7"]}"#,
        ];
        for text in docs {
            assert_eq!(emit(&parse(text).unwrap()), text);
        }
    }
}
