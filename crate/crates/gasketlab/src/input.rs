//! Base-graph ingestion: JSON edge lists, graph6 records and the inline
//! `1-2,2-3` shorthand.

use std::fs;
use std::path::Path;

use gasket_core::graph6::parse_graph6;
use gasket_core::BaseGraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON edge list: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph6 record: {0}")]
    Graph6(gasket_core::Error),
    #[error("invalid edge list: {0}")]
    Graph(gasket_core::Error),
    #[error("bad edge {0:?} (expected u-v with 1-based vertices)")]
    Shorthand(String),
    #[error("{0} contains no graph")]
    Empty(String),
}

/// `{"n": 3, "edges": [[1,2],[2,3]]}`, vertices 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl EdgeListFile {
    pub fn from_graph(g: &BaseGraph) -> Self {
        EdgeListFile {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u + 1, v + 1]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<BaseGraph, InputError> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        BaseGraph::from_edge_list(self.n, &edges).map_err(InputError::Graph)
    }
}

pub fn parse_json(text: &str) -> Result<BaseGraph, InputError> {
    serde_json::from_str::<EdgeListFile>(text)?.to_graph()
}

/// First non-blank line of a graph6 file.
pub fn parse_graph6_text(text: &str, origin: &str) -> Result<BaseGraph, InputError> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| InputError::Empty(origin.to_string()))?;
    parse_graph6(line.as_bytes()).map_err(InputError::Graph6)
}

/// `"1-2,2-3"`. Without `n` the order is the largest vertex mentioned.
pub fn parse_shorthand(spec: &str, n: Option<usize>) -> Result<BaseGraph, InputError> {
    let mut edges = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (u, v) = item
            .split_once('-')
            .and_then(|(u, v)| Some((u.trim().parse().ok()?, v.trim().parse().ok()?)))
            .ok_or_else(|| InputError::Shorthand(item.to_string()))?;
        edges.push((u, v));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v): &(usize, usize)| u.max(v)).max().unwrap_or(0));
    BaseGraph::from_edge_list(n, &edges).map_err(InputError::Graph)
}

/// A path to a `.json`/graph6 file, or a graph6 record given inline.
pub fn load_base(arg: &str) -> Result<BaseGraph, InputError> {
    let path = Path::new(arg);
    if !path.exists() {
        // '/' and '.' never occur in graph6, so this was meant as a path
        if arg.contains(['/', '.']) {
            return Err(InputError::Read {
                path: arg.to_string(),
                source: std::io::Error::from(std::io::ErrorKind::NotFound),
            });
        }
        return parse_graph6(arg.trim().as_bytes()).map_err(InputError::Graph6);
    }
    let text = fs::read_to_string(path).map_err(|source| InputError::Read {
        path: arg.to_string(),
        source,
    })?;
    let is_json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
    if is_json {
        parse_json(&text)
    } else {
        parse_graph6_text(&text, arg)
    }
}

/// One corpus line that failed to parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MalformedLine {
    pub line: usize,
    pub message: String,
}

/// Parses a graph6 corpus. Blank lines are ignored; bad records are
/// returned separately with their 1-based line numbers.
pub fn read_corpus(text: &str) -> (Vec<(usize, String, BaseGraph)>, Vec<MalformedLine>) {
    let mut graphs = Vec::new();
    let mut bad = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match parse_graph6(line.as_bytes()) {
            Ok(g) => graphs.push((k + 1, line.to_string(), g)),
            Err(e) => bad.push(MalformedLine {
                line: k + 1,
                message: e.to_string(),
            }),
        }
    }
    (graphs, bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_agree() {
        let a = parse_json(r#"{"n":3,"edges":[[1,2],[2,3],[1,3]]}"#).unwrap();
        let b = parse_shorthand("1-2, 2-3,1-3", None).unwrap();
        let c = load_base("Bw").unwrap();
        for g in [&a, &b, &c] {
            assert_eq!((g.order(), g.edge_count()), (3, 3));
        }
        assert_eq!(parse_shorthand("1-2", Some(4)).unwrap().order(), 4);
    }

    #[test]
    fn errors_are_specific() {
        assert!(matches!(parse_shorthand("1-2,2_3", None), Err(InputError::Shorthand(_))));
        assert!(matches!(parse_shorthand("1-1", None), Err(InputError::Graph(_))));
        assert!(matches!(parse_json(r#"{"n":1,"edges":[]}"#), Err(InputError::Graph(_))));
        assert!(matches!(load_base("missing/file.json"), Err(InputError::Read { .. })));
        assert!(matches!(load_base("B"), Err(InputError::Graph6(_))));
    }

    #[test]
    fn corpus_lines() {
        let (ok, bad) = read_corpus("Bw\n\nB\nA_\n");
        assert_eq!(ok.iter().map(|r| r.0).collect::<Vec<_>>(), [1, 4]);
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].line, 3);
    }
}
