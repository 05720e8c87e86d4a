//! Explicit construction of `S(G,t)` and `S[G,t]`.
//!
//! `S(G,t)` is built recursively from `n` relabelled copies of `S(G,t-1)`
//! plus one linking edge `i·j^(t-1) ~ j·i^(t-1)` per base edge. The gasket
//! is its quotient under the word-to-label map of [`crate::label`]; every
//! linking edge collapses into a contracted vertex and the remaining edges
//! (the `n^(t-1)` copies of `G`) are carried over.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::base::BaseGraph;
use crate::dsu::UnionFind;
use crate::error::Result;
use crate::label::{self, canonicalize, VertexLabel, Word};
use crate::solve::Adjacency;

pub const DEFAULT_VERTEX_CAP: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Sierpinski,
    Gasket,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Sierpinski => "sierpinski",
            GraphKind::Gasket => "gasket",
        }
    }
}

/// Immutable vertex/edge store with label <-> index maps.
///
/// Vertex indices follow label order. Labels are not stored; each vertex
/// keeps the rank of its representative word and the label is rebuilt on
/// demand.
#[derive(Clone, Debug)]
pub struct MaterializedGraph {
    kind: GraphKind,
    base: BaseGraph,
    depth: usize,
    reps: Vec<u64>,
    word_to_vertex: Vec<u32>,
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl MaterializedGraph {
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn size(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn representative(&self, v: usize) -> Word {
        Word::from_rank(self.reps[v], self.base.order(), self.depth)
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        let w = self.representative(v);
        match self.kind {
            GraphKind::Sierpinski => VertexLabel::Plain(w),
            GraphKind::Gasket => canonicalize(&w.0, &self.base),
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = VertexLabel> + '_ {
        (0..self.order()).map(|v| self.label(v))
    }

    /// Vertex holding the given word of `S(G,t)`.
    pub fn vertex_of_word(&self, letters: &[u8]) -> Option<usize> {
        let n = self.base.order();
        if letters.len() != self.depth || letters.iter().any(|&l| l as usize >= n) {
            return None;
        }
        Some(self.word_to_vertex[label::rank_of(letters, n) as usize] as usize)
    }

    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        let n = self.base.order();
        if label.depth() != self.depth || label.representative().any(|l| l as usize >= n) {
            return None;
        }
        if self.kind == GraphKind::Sierpinski && label.is_contracted() {
            return None;
        }
        let v = self.word_to_vertex[label.representative_rank(n) as usize] as usize;
        (self.label(v) == *label).then_some(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.order());
        for (u, v) in self.edges() {
            uf.union(u, v);
        }
        uf.set_count()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangles().next().is_none()
    }

    /// Triangles `(a, b, c)` with `a < b < c`.
    pub fn triangles(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges().flat_map(move |(a, b)| {
            let (na, nb) = (self.neighbors(a), self.neighbors(b));
            sorted_intersection(na, nb)
                .filter(move |&c| c > b)
                .map(move |c| (a, b, c))
        })
    }

    fn from_edges(
        kind: GraphKind,
        base: BaseGraph,
        depth: usize,
        reps: Vec<u64>,
        word_to_vertex: Vec<u32>,
        edges: &[(u32, u32)],
    ) -> Self {
        let order = reps.len();
        let mut offsets = vec![0usize; order + 1];
        for &(u, v) in edges {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..order {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; offsets[order]];
        for &(u, v) in edges {
            assert_ne!(u, v, "construction produced a loop");
            targets[fill[u as usize]] = v;
            fill[u as usize] += 1;
            targets[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for v in 0..order {
            let list = &mut targets[offsets[v]..offsets[v + 1]];
            list.sort_unstable();
            assert!(
                list.windows(2).all(|p| p[0] != p[1]),
                "construction produced a parallel edge"
            );
        }
        MaterializedGraph {
            kind,
            base,
            depth,
            reps,
            word_to_vertex,
            offsets,
            targets,
        }
    }
}

impl Adjacency for MaterializedGraph {
    fn order(&self) -> usize {
        self.reps.len()
    }

    fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

fn sorted_intersection<'a>(a: &'a [u32], b: &'a [u32]) -> impl Iterator<Item = usize> + 'a {
    let (mut i, mut j) = (0, 0);
    core::iter::from_fn(move || {
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    return Some(a[i - 1] as usize);
                }
            }
        }
        None
    })
}

/// Edges of `S(G,t)` as word-rank pairs, built copy by copy.
fn sierpinski_edges(g: &BaseGraph, t: usize) -> Vec<(u64, u64)> {
    let n = g.order() as u64;
    if t == 1 {
        return g.edges().map(|(u, v)| (u as u64, v as u64)).collect();
    }
    let inner = sierpinski_edges(g, t - 1);
    let block = n.pow(t as u32 - 1);
    // rank of j^(t-1) is j * repunit
    let repunit = (block - 1) / (n - 1);
    let mut out = Vec::with_capacity(inner.len() * n as usize + g.edge_count());
    for copy in 0..n {
        out.extend(inner.iter().map(|&(a, b)| (copy * block + a, copy * block + b)));
    }
    for (i, j) in g.edges() {
        let (i, j) = (i as u64, j as u64);
        out.push((i * block + j * repunit, j * block + i * repunit));
    }
    out
}

pub fn build_sierpinski(g: &BaseGraph, t: usize, cap: u64) -> Result<MaterializedGraph> {
    let total = label::check_cap(g.order(), t, cap.min(u32::MAX as u64))?;
    let edges: Vec<(u32, u32)> = sierpinski_edges(g, t)
        .into_iter()
        .map(|(a, b)| (a as u32, b as u32))
        .collect();
    Ok(MaterializedGraph::from_edges(
        GraphKind::Sierpinski,
        g.clone(),
        t,
        (0..total).collect(),
        (0..total as u32).collect(),
        &edges,
    ))
}

/// The quotient of [`build_sierpinski`] that contracts every linking edge.
pub fn build_gasket(g: &BaseGraph, t: usize, cap: u64) -> Result<MaterializedGraph> {
    let sierpinski = build_sierpinski(g, t, cap)?;
    let n = g.order();
    let total = sierpinski.order();

    let mut word_to_vertex = vec![u32::MAX; total];
    let mut reps = Vec::new();
    let mut letters = vec![0u8; t];
    for rank in 0..total {
        if rank > 0 {
            odometer(&mut letters, n);
        }
        let rep = label::representative_rank(&letters, g) as usize;
        if rep == rank {
            word_to_vertex[rank] = reps.len() as u32;
            reps.push(rank as u64);
        } else {
            debug_assert!(rep < rank);
            word_to_vertex[rank] = word_to_vertex[rep];
        }
    }

    let mut edges = Vec::with_capacity(g.edge_count() * total / n);
    let mut contracted = 0usize;
    for (u, v) in sierpinski.edges() {
        // a linking edge joins words that differ before the last letter
        let linking = u / n != v / n;
        let (cu, cv) = (word_to_vertex[u], word_to_vertex[v]);
        if linking {
            assert_eq!(cu, cv, "linking edge endpoints must merge");
            contracted += 1;
        } else {
            assert_ne!(cu, cv, "copy edge endpoints must stay distinct");
            edges.push((cu, cv));
        }
    }
    debug_assert_eq!(contracted, total - reps.len());

    Ok(MaterializedGraph::from_edges(
        GraphKind::Gasket,
        g.clone(),
        t,
        reps,
        word_to_vertex,
        &edges,
    ))
}

fn odometer(letters: &mut [u8], n: usize) {
    for slot in letters.iter_mut().rev() {
        if (*slot as usize) + 1 < n {
            *slot += 1;
            return;
        }
        *slot = 0;
    }
}

/// Adjacency in `S(G,t)` straight from the defining rule: at the first
/// position `i` where the words differ, `u_i v_i` is a base edge, and every
/// later letter of `u` is `v_i` while every later letter of `v` is `u_i`.
pub fn word_adjacent(g: &BaseGraph, u: &[u8], v: &[u8]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    let Some(i) = (0..u.len()).find(|&i| u[i] != v[i]) else {
        return false;
    };
    g.has_edge(u[i] as usize, v[i] as usize)
        && u[i + 1..].iter().all(|&x| x == v[i])
        && v[i + 1..].iter().all(|&x| x == u[i])
}

/// Neighbors of a word in `S(G,t)` generated from the adjacency rule.
pub fn word_neighbors(g: &BaseGraph, u: &[u8]) -> Vec<Word> {
    let t = u.len();
    let mut out = Vec::new();
    for i in (0..t).rev() {
        let a = u[i];
        if i + 1 == t {
            for &b in g.neighbor_list(a as usize) {
                let mut w = u.to_vec();
                w[i] = b as u8;
                out.push(Word(w));
            }
            continue;
        }
        let b = u[i + 1];
        if u[i + 1..].iter().any(|&x| x != b) {
            // longer suffixes are not constant either
            break;
        }
        if g.has_edge(a as usize, b as usize) {
            let mut w = u[..i].to_vec();
            w.push(b);
            w.extend(core::iter::repeat_n(a, t - i - 1));
            out.push(Word(w));
        }
    }
    out.sort();
    out
}

/// One line of a [`CountReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountCheck {
    pub name: &'static str,
    pub expected: u64,
    pub actual: u64,
}

impl CountCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub checks: Vec<CountCheck>,
}

impl CountReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CountCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CountCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&alloc::format!(
                "{} {}: expected {} actual {}\n",
                if c.passed() { "ok  " } else { "FAIL" },
                c.name,
                c.expected,
                c.actual
            ));
        }
        s
    }
}

/// `n^t |E| ...` closed forms for the order, size and component count.
pub fn expected_counts(kind: GraphKind, g: &BaseGraph, t: usize) -> (u64, u64, u64) {
    let n = g.order() as u64;
    let e = g.edge_count() as u64;
    let t32 = t as u32;
    let cc = g.components() as u64;
    let order = match kind {
        GraphKind::Sierpinski => n.pow(t32),
        GraphKind::Gasket => label::gasket_order(g.order(), g.edge_count(), t),
    };
    let size = match kind {
        GraphKind::Sierpinski => e * (n.pow(t32) - 1) / (n - 1),
        GraphKind::Gasket => e * n.pow(t32 - 1),
    };
    let components = (n.pow(t32) * (cc - 1) + n - cc) / (n - 1);
    (order, size, components)
}

/// Recomputes order, size and component count and compares them with the
/// closed forms; also probes simplicity and, for `S(G,t)`, the adjacency rule.
pub fn verify_counts(m: &MaterializedGraph) -> CountReport {
    let (order, size, components) = expected_counts(m.kind, &m.base, m.depth);
    let mut checks = vec![
        CountCheck {
            name: "vertices",
            expected: order,
            actual: m.order() as u64,
        },
        CountCheck {
            name: "edges",
            expected: size,
            actual: m.size() as u64,
        },
        CountCheck {
            name: "components",
            expected: components,
            actual: m.components() as u64,
        },
    ];
    let asymmetric = (0..m.order())
        .filter(|&v| {
            let list = m.neighbors(v);
            list.iter().any(|&u| u as usize == v || !m.has_edge(u as usize, v))
                || list.windows(2).any(|p| p[0] >= p[1])
        })
        .count();
    checks.push(CountCheck {
        name: "vertices with non-simple adjacency",
        expected: 0,
        actual: asymmetric as u64,
    });
    if m.kind == GraphKind::Sierpinski {
        let mismatched = (0..m.order())
            .filter(|&v| {
                let w = m.representative(v);
                let by_rule: Vec<u32> = word_neighbors(&m.base, &w.0)
                    .iter()
                    .map(|x| x.rank(m.base.order()) as u32)
                    .collect();
                by_rule != m.neighbors(v)
            })
            .count();
        checks.push(CountCheck {
            name: "vertices disagreeing with the adjacency rule",
            expected: 0,
            actual: mismatched as u64,
        });
    }
    CountReport { checks }
}
