//! Graph serialization: DIMACS `.col`, a JSON edge-list schema, and DOT.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;

/// DIMACS edge format, 1-based, each edge once with `u < v`.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn from_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let mut fields = line.split_whitespace();
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(err("duplicate problem line"));
                }
                let kind = fields.next().ok_or_else(|| err("missing format"))?;
                if kind != "edge" && kind != "col" {
                    return Err(err("expected 'p edge <n> <m>'"));
                }
                let n = parse_num(fields.next(), &err)?;
                let m = parse_num(fields.next(), &err)?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| err("edge before problem line"))?;
                let u = parse_num(fields.next(), &err)?;
                let v = parse_num(fields.next(), &err)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err("vertex index out of range (indices are 1-based)"));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(err(&format!("unknown line type '{other}'"))),
        }
    }
    let (n, _) = header.ok_or_else(|| Error::Parse("missing problem line".into()))?;
    Graph::from_edges(n, &edges)
}

fn parse_num(field: Option<&str>, err: &dyn Fn(&str) -> Error) -> Result<usize> {
    field
        .ok_or_else(|| err("missing number"))?
        .parse()
        .map_err(|_| err("not a non-negative integer"))
}

/// On-disk JSON graph document, 0-based.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GraphDocument {
    pub family: Option<String>,
    #[serde(default)]
    pub params: Value,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn new(g: &Graph, spec: Option<&FamilySpec>) -> Self {
        GraphDocument {
            family: spec.map(|s| s.family().name().to_string()),
            params: spec.map_or_else(
                || Value::Object(Default::default()),
                FamilySpec::params_json,
            ),
            n: g.vertex_count(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Rebuilds the graph; when the document names a family, the family's
    /// labels are restored provided its edge set matches.
    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let plain = Graph::from_edges(self.n, &edges)?;
        if let Some(family) = &self.family {
            if let Ok(labelled) =
                FamilySpec::from_json(family, &self.params).and_then(|s| s.build())
            {
                if labelled.edges() == plain.edges() {
                    return Ok(labelled);
                }
            }
        }
        Ok(plain)
    }
}

pub fn to_json(g: &Graph, spec: Option<&FamilySpec>) -> String {
    serde_json::to_string_pretty(&GraphDocument::new(g, spec)).expect("graph document serializes")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
    doc.to_graph()
}

/// Reads either format, sniffing JSON by its leading brace.
pub fn read_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_dimacs(text)
    }
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph \"{}\" {{\n", name.replace('"', "'"));
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.display_name(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn dimacs_header_and_edges() {
        let text = to_dimacs(&graph::cycle_square(10).unwrap());
        assert!(text.starts_with("p edge 10 20\n"));
        assert!(text.contains("\ne 1 2\n"));
        assert_eq!(text.lines().count(), 21);
    }

    #[test]
    fn dimacs_accepts_comments_and_duplicate_orientations() {
        let g = from_dimacs("c demo\np edge 3 3\ne 1 2\ne 2 1\ne 2 3\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn dimacs_rejects_bad_input() {
        assert!(from_dimacs("e 1 2\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 1 x\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 1 1\n").is_err());
        assert!(from_dimacs("").is_err());
    }

    #[test]
    fn json_schema_shape() {
        let spec = FamilySpec::Web { t: 2, n: 4 };
        let g = spec.build().unwrap();
        let v: Value = serde_json::from_str(&to_json(&g, Some(&spec))).unwrap();
        assert_eq!(v["family"], "web");
        assert_eq!(v["params"]["t"], 2);
        assert_eq!(v["n"], 9);
        assert_eq!(v["edges"].as_array().unwrap().len(), 16);
        assert_eq!(v["edges"][0], serde_json::json!([0, 1]));
        let back = from_json(&to_json(&g, Some(&spec))).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn json_without_family() {
        let g = graph::cycle(4).unwrap();
        let text = to_json(&g, None);
        assert!(text.contains("\"family\": null"));
        assert_eq!(read_graph(&text).unwrap().edges(), g.edges());
    }

    #[test]
    fn dot_uses_labels() {
        let dot = to_dot(&graph::strong_grid(2, 2).unwrap(), "sg");
        assert!(dot.contains("label=\"(1,0)\""));
        assert!(dot.contains("0 -- 1;"));
    }
}
