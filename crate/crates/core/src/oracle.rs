//! Neighbor queries on `S[G,t]` computed from labels, without building the
//! graph.
//!
//! For `t >= 3` the neighborhood splits into four label shapes:
//!
//! 1. top contraction `{i,j}@t`: the step-2 contractions
//!    `i·j^(t-3)·{j,l}@2` for `l ∈ N(j)` and `j·i^(t-3)·{i,l}@2` for
//!    `l ∈ N(i)`;
//! 2. plain word `y`: `y_1..y_{t-1}·l` for `l ∈ N(y_t)` with `l y_{t-1}`
//!    not an edge, and `y_1..y_{t-2}·{y_{t-1},l}@2` when it is;
//! 3. deeper contraction `x·{i,j}@L` with `L >= 3`: as in 1, under prefix `x`;
//! 4. step-2 contraction `x·{i,j}@2`: the plain/contracted sets over
//!    `l ∈ N(j)` (after `x·i`) and `l ∈ N(i)` (after `x·j`), plus `{i,j}@t`
//!    when `x` is `i·j^(t-3)` or `j·i^(t-3)`.
//!
//! Some words listed by these formulas are themselves expanded forms of
//! deeper contractions (for example `x·i·i`), and the extra `{i,j}@t` term
//! can coincide with one of them. Every emitted word is therefore passed
//! through [`canonicalize`] and the result is deduplicated.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::base::BaseGraph;
use crate::build::word_adjacent;
use crate::error::{Error, Result};
use crate::label::{canonicalize, VertexLabel, Word};

#[derive(Clone, Debug)]
pub struct OracleContext {
    base: BaseGraph,
    depth: usize,
}

impl OracleContext {
    pub fn new(base: BaseGraph, depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::ZeroDepth);
        }
        Ok(OracleContext { base, depth })
    }

    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn neighbors(&self, v: &VertexLabel) -> Result<BTreeSet<VertexLabel>> {
        v.validate(&self.base, self.depth)?;
        Ok(self.neighbors_unchecked(v))
    }

    /// [`Self::neighbors`] for labels already known to be valid.
    pub fn neighbors_unchecked(&self, v: &VertexLabel) -> BTreeSet<VertexLabel> {
        let g = &self.base;
        let t = self.depth;
        let mut out = BTreeSet::new();
        match v {
            VertexLabel::Plain(y) if t == 1 => {
                for &l in g.neighbor_list(y.0[0] as usize) {
                    out.insert(VertexLabel::Plain(Word(alloc::vec![l as u8])));
                }
            }
            VertexLabel::Plain(y) => self.plain_neighbors(&y.0, &mut out),
            VertexLabel::Contracted { prefix, pair, level: 2 } => {
                self.step2_neighbors(prefix, *pair, &mut out)
            }
            VertexLabel::Contracted { prefix, pair, level } => {
                self.deep_neighbors(prefix, *pair, *level, &mut out)
            }
        }
        out
    }

    fn plain_neighbors(&self, y: &[u8], out: &mut BTreeSet<VertexLabel>) {
        let g = &self.base;
        let t = y.len();
        let last = y[t - 1] as usize;
        let before = y[t - 2] as usize;
        for &l in g.neighbor_list(last) {
            let l = l as u8;
            if g.has_edge(l as usize, before) {
                out.insert(step2(&y[..t - 2], before as u8, l));
            } else {
                let mut w = y[..t - 1].to_vec();
                w.push(l);
                out.insert(canonicalize(&w, g));
            }
        }
    }

    /// Contraction of level `>= 3`: its expanded forms `x·i·j^(L-1)` and
    /// `x·j·i^(L-1)` each meet one copy edge per neighbor of the repeated
    /// letter, and every such edge ends in a step-2 contraction.
    fn deep_neighbors(&self, x: &[u8], (i, j): (u8, u8), level: usize, out: &mut BTreeSet<VertexLabel>) {
        let g = &self.base;
        for (a, b) in [(i, j), (j, i)] {
            let mut head = x.to_vec();
            head.push(a);
            head.extend(core::iter::repeat_n(b, level - 3));
            for &l in g.neighbor_list(b as usize) {
                out.insert(step2(&head, b, l as u8));
            }
        }
    }

    fn step2_neighbors(&self, x: &[u8], (i, j): (u8, u8), out: &mut BTreeSet<VertexLabel>) {
        let g = &self.base;
        let t = self.depth;
        for (a, b) in [(i, j), (j, i)] {
            // expanded form x·a·b: copy edges to x·a·l for l ∈ N(b)
            for &l in g.neighbor_list(b as usize) {
                let l = l as u8;
                if g.has_edge(a as usize, l as usize) {
                    out.insert(step2(x, a, l));
                } else {
                    let mut w = x.to_vec();
                    w.push(a);
                    w.push(l);
                    out.insert(canonicalize(&w, g));
                }
            }
        }
        if t >= 3 && x.len() == t - 2 {
            let matches = |a: u8, b: u8| x[0] == a && x[1..].iter().all(|&c| c == b);
            if matches(i, j) || matches(j, i) {
                out.insert(VertexLabel::Contracted {
                    prefix: Vec::new(),
                    pair: (i, j),
                    level: t,
                });
            }
        }
    }

    /// Adjacency decided on expanded words with the `S(G,t)` rule,
    /// independently of [`Self::neighbors`].
    pub fn adjacent(&self, u: &VertexLabel, v: &VertexLabel) -> Result<bool> {
        u.validate(&self.base, self.depth)?;
        v.validate(&self.base, self.depth)?;
        if u == v {
            return Ok(false);
        }
        let (eu, ev) = (u.expand(), v.expand());
        Ok(eu
            .iter()
            .any(|a| ev.iter().any(|b| word_adjacent(&self.base, &a.0, &b.0))))
    }

    pub fn degree(&self, v: &VertexLabel) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }
}

fn step2(prefix: &[u8], a: u8, b: u8) -> VertexLabel {
    VertexLabel::Contracted {
        prefix: prefix.to_vec(),
        pair: (a.min(b), a.max(b)),
        level: 2,
    }
}

/// Whether two step-2 contractions `{i,j}` and `{l,k}` inside one copy of
/// `S[G,2]` are adjacent: they share exactly one vertex and the three
/// vertices involved span a triangle of `g`.
pub fn step2_contracted_adjacent(g: &BaseGraph, p: (usize, usize), q: (usize, usize)) -> Result<bool> {
    for (a, b) in [p, q] {
        let n = g.order();
        for x in [a, b] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x + 1, n });
            }
        }
        if !g.has_edge(a, b) {
            return Err(Error::InvalidLabel {
                label: alloc::format!("{{{},{}}}", a + 1, b + 1),
                reason: "pair is not an edge of the base graph",
            });
        }
    }
    let mut verts: Vec<usize> = [p.0, p.1, q.0, q.1].into_iter().collect();
    verts.sort_unstable();
    verts.dedup();
    if verts.len() != 3 {
        return Ok(false);
    }
    let (x, y, z) = (verts[0], verts[1], verts[2]);
    Ok(g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z))
}
