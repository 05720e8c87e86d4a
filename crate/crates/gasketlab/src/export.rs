//! DOT and JSON renderings of materialized graphs, and the JSON reader.

use std::fmt::Write;

use gasket_core::label::format_label;
use gasket_core::{GraphKind, MaterializedGraph};
use serde::{Deserialize, Serialize};

/// JSON form of a materialized graph. Vertices are label strings in label
/// order; edges index into `vertices` with the smaller index first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDump {
    pub kind: String,
    pub n: usize,
    pub t: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, thiserror::Error)]
pub enum DumpError {
    #[error("invalid graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown kind {0:?}")]
    Kind(String),
    #[error("edge {0:?} refers to a missing vertex")]
    Dangling([usize; 2]),
    #[error("edge {0:?} is a loop or repeated")]
    NotSimple([usize; 2]),
    #[error("vertex {0:?} listed twice")]
    DuplicateVertex(String),
}

impl GraphDump {
    pub fn of(m: &MaterializedGraph) -> Self {
        GraphDump {
            kind: m.kind().name().to_string(),
            n: m.base().order(),
            t: m.depth(),
            vertices: m.labels().map(|l| format_label(&l)).collect(),
            edges: m.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dump serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, DumpError> {
        let mut dump: GraphDump = serde_json::from_str(text)?;
        if ![GraphKind::Sierpinski, GraphKind::Gasket]
            .iter()
            .any(|k| k.name() == dump.kind)
        {
            return Err(DumpError::Kind(dump.kind));
        }
        let mut seen = std::collections::HashSet::new();
        for v in &dump.vertices {
            if !seen.insert(v) {
                return Err(DumpError::DuplicateVertex(v.clone()));
            }
        }
        for e in dump.edges.iter_mut() {
            if e.iter().any(|&x| x >= dump.vertices.len()) {
                return Err(DumpError::Dangling(*e));
            }
            if e[0] == e[1] {
                return Err(DumpError::NotSimple(*e));
            }
            e.sort_unstable();
        }
        dump.edges.sort_unstable();
        if let Some(w) = dump.edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(DumpError::NotSimple(w[0]));
        }
        Ok(dump)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", self.title());
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for [u, v] in &self.edges {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.vertices[*u], self.vertices[*v]);
        }
        out.push_str("}\n");
        out
    }

    fn title(&self) -> String {
        match self.kind.as_str() {
            "sierpinski" => format!("S(G,{})", self.t),
            _ => format!("S[G,{}]", self.t),
        }
    }
}

pub fn to_dot(m: &MaterializedGraph) -> String {
    GraphDump::of(m).to_dot()
}

pub fn to_json(m: &MaterializedGraph) -> String {
    GraphDump::of(m).to_json()
}
