//! Graph file formats.
//!
//! Edge list: one edge per line as two whitespace-separated labels; a line
//! with a single label declares an isolated vertex; blank lines and `#`
//! comments are ignored. JSON: an object with `"vertices"` (array of
//! labels) and `"edges"` (array of two-element label arrays).

use std::fmt;

use serde_json::Value;
use wtoll_core::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line: Some(line),
            message: message.into(),
        }
    }

    fn plain(message: impl Into<String>) -> Self {
        ParseError {
            line: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ParseError {}

pub fn parse_graph(text: &str, format: InputFormat) -> Result<Graph, ParseError> {
    match format {
        InputFormat::EdgeList => parse_edge_list(text),
        InputFormat::Json => parse_json(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut b = Graph::builder();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [vertex] => {
                b.vertex(vertex)
                    .map_err(|e: GraphError| ParseError::at(line_no, e.to_string()))?;
            }
            [a, c] => {
                b.edge(a, c)
                    .map_err(|e| ParseError::at(line_no, e.to_string()))?;
            }
            more => {
                return Err(ParseError::at(
                    line_no,
                    format!("expected one or two labels, found {}", more.len()),
                ));
            }
        }
    }
    Ok(b.build())
}

pub fn parse_json(text: &str) -> Result<Graph, ParseError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| ParseError::plain(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| ParseError::plain("expected a JSON object"))?;
    let mut b = Graph::builder();
    if let Some(vertices) = obj.get("vertices") {
        let arr = vertices
            .as_array()
            .ok_or_else(|| ParseError::plain("'vertices' must be an array"))?;
        for (i, v) in arr.iter().enumerate() {
            let label = v
                .as_str()
                .ok_or_else(|| ParseError::plain(format!("vertex {i} is not a string")))?;
            b.new_vertex(label)
                .map_err(|e| ParseError::plain(e.to_string()))?;
        }
    }
    let edges = obj
        .get("edges")
        .ok_or_else(|| ParseError::plain("missing 'edges' array"))?
        .as_array()
        .ok_or_else(|| ParseError::plain("'edges' must be an array"))?;
    for (i, e) in edges.iter().enumerate() {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| ParseError::plain(format!("edge {i} is not a two-element array")))?;
        let (a, c) = (pair[0].as_str(), pair[1].as_str());
        match (a, c) {
            (Some(a), Some(c)) => b
                .edge(a, c)
                .map_err(|e| ParseError::plain(format!("edge {i}: {e}")))?,
            _ => return Err(ParseError::plain(format!("edge {i} has non-string labels"))),
        }
    }
    Ok(b.build())
}

/// Canonical edge-list text: isolated vertices first, then edges in id
/// order, one per line.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        if g.degree(v) == 0 {
            out.push_str(g.label(v));
            out.push('\n');
        }
    }
    for (u, v) in g.edges() {
        out.push_str(g.label(u));
        out.push(' ');
        out.push_str(g.label(v));
        out.push('\n');
    }
    out
}

pub fn graph_json(g: &Graph) -> Value {
    let vertices: Vec<Value> = g.vertices().map(|v| g.label(v).into()).collect();
    let edges: Vec<Value> = g
        .edges()
        .map(|(u, v)| Value::Array(vec![g.label(u).into(), g.label(v).into()]))
        .collect();
    serde_json::json!({ "vertices": vertices, "edges": edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_paths_and_isolated_vertices() {
        let g = parse_edge_list("a b\nb c\n\n# comment\nlonely\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(g.vertex("lonely").unwrap()), 0);
    }

    #[test]
    fn rejects_bad_lines_with_numbers() {
        let err = parse_edge_list("a b\nb a\n").unwrap_err();
        assert_eq!(err.line, Some(2));
        assert!(err.message.contains("duplicate edge"));

        let err = parse_edge_list("a b\nx x\n").unwrap_err();
        assert_eq!(err.line, Some(2));
        assert!(err.message.contains("self-loop"));

        let err = parse_edge_list("a b c\n").unwrap_err();
        assert_eq!(err.line, Some(1));
    }

    #[test]
    fn json_round_trip() {
        let g = wtoll_core::generate::fig5_1();
        let text = serde_json::to_string(&graph_json(&g)).unwrap();
        let back = parse_json(&text).unwrap();
        assert_eq!(back.n(), g.n());
        assert_eq!(back.edge_count(), g.edge_count());
        for (u, v) in g.edges() {
            let bu = back.vertex(g.label(u)).unwrap();
            let bv = back.vertex(g.label(v)).unwrap();
            assert!(back.adjacent(bu, bv));
        }
    }

    #[test]
    fn json_rejects_duplicates_and_shape_errors() {
        assert!(parse_json(r#"{"vertices": ["a", "a"], "edges": []}"#).is_err());
        assert!(parse_json(r#"{"edges": [["a"]]}"#).is_err());
        assert!(parse_json(r#"[1, 2]"#).is_err());
    }

    #[test]
    fn edge_list_round_trip_over_generated_graphs() {
        for seed in 0..30u64 {
            let (g, _) = wtoll_core::generate::random_interval_graph(
                1 + (seed as usize % 9),
                seed % 2 == 0,
                3000 + seed,
            );
            let back = parse_edge_list(&to_edge_list(&g)).unwrap();
            assert_eq!(back.n(), g.n());
            assert_eq!(back.edge_count(), g.edge_count());
            for (u, v) in g.edges() {
                assert!(back.adjacent(
                    back.vertex(g.label(u)).unwrap(),
                    back.vertex(g.label(v)).unwrap()
                ));
            }
        }
    }
}
