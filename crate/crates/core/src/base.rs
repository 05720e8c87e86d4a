//! Small simple base graphs.
//!
//! Vertices are `0..n` internally and `1..=n` in every textual interface.
//! Adjacency is stored twice: as one `u64` bitmask per vertex (hence the
//! 64-vertex limit) and as sorted neighbor lists for the generic solvers.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::solve::{self, Adjacency};

pub const MAX_BASE_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseGraph {
    adj: Vec<u64>,
    lists: Vec<Vec<u32>>,
    edge_count: usize,
}

impl BaseGraph {
    /// Builds a graph from 1-based vertex pairs. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        Ok(Self::from_masks(adj))
    }

    /// Builds a graph from 0-based adjacency masks; the masks must already be
    /// symmetric and loop-free.
    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, m)| m >> v & 1 == 0 && iter_bits(*m).all(|u| adj[u] >> v & 1 == 1)));
        let lists: Vec<Vec<u32>> = adj
            .iter()
            .map(|&m| iter_bits(m).map(|u| u as u32).collect())
            .collect();
        let degree_sum: usize = adj.iter().map(|m| m.count_ones() as usize).sum();
        BaseGraph {
            adj,
            lists,
            edge_count: degree_sum / 2,
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Self::from_masks((0..n).map(|v| full & !(1 << v)).collect()))
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
        Self::from_edge_list(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
        if n >= 3 {
            edges.push((n, 1));
        }
        Self::from_edge_list(n, &edges)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Self::from_edge_list(n, &[])
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// 0-based adjacency test.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// 0-based neighbors in increasing order.
    pub fn neighbor_list(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }

    /// Edges as 0-based pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            iter_bits(self.adj[u] & above(u)).map(move |v| (u, v))
        })
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.order());
        for (u, v) in self.edges() {
            uf.union(u, v);
        }
        uf.set_count()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    pub fn triangle_count(&self) -> usize {
        self.edges()
            .map(|(u, v)| (self.adj[u] & self.adj[v] & above(v)).count_ones() as usize)
            .sum()
    }

    /// BFS 2-coloring; each component's smallest vertex receives color 0.
    pub fn two_coloring(&self) -> Option<Vec<u32>> {
        let n = self.order();
        let mut color = vec![u32::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s] != u32::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in iter_bits(self.adj[u]) {
                    if color[v] == u32::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn clique_number(&self) -> usize {
        solve::clique_number(self)
    }

    pub fn chromatic_number(&self) -> usize {
        solve::chromatic_number(self)
    }

    /// Lexicographically smallest proper `k`-coloring under vertex order
    /// `0..n` and color order `0..k`, if one exists.
    pub fn find_coloring(&self, k: usize) -> Option<Vec<u32>> {
        if k == 0 {
            return None;
        }
        if k > 64 {
            return self.find_coloring(64);
        }
        let n = self.order();
        let mut color = vec![0u32; n];
        // forbidden[v]: colors taken by already-colored neighbors, per depth
        let mut forbidden = vec![vec![0u64; n]; n + 1];
        let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let mut next = vec![0u32; n];
        let mut depth = 0usize;
        loop {
            if depth == n {
                return Some(color);
            }
            let v = depth;
            let candidates = if (next[v] as usize) < k {
                all & !forbidden[depth][v] & !((1u64 << next[v]) - 1)
            } else {
                0
            };
            if candidates == 0 {
                next[v] = 0;
                if depth == 0 {
                    return None;
                }
                depth -= 1;
                continue;
            }
            let c = candidates.trailing_zeros();
            next[v] = c + 1;
            color[v] = c;
            let (head, tail) = forbidden.split_at_mut(depth + 1);
            let cur = &head[depth];
            let nxt = &mut tail[0];
            nxt.copy_from_slice(cur);
            let mut dead = false;
            for u in iter_bits(self.adj[v] & above(v)) {
                nxt[u] |= 1 << c;
                if nxt[u] & all == all {
                    dead = true;
                }
            }
            if !dead {
                depth += 1;
            }
        }
    }

    pub fn classify(&self) -> GraphClass {
        let cc = self.components();
        GraphClass {
            cc,
            triangle_free: self.is_triangle_free(),
            acyclic: self.edge_count + cc == self.order(),
            bipartite: self.is_bipartite(),
            omega: self.clique_number(),
            chi: self.chromatic_number(),
        }
    }
}

impl Adjacency for BaseGraph {
    fn order(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }
}

/// Structural summary of a base graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphClass {
    pub cc: usize,
    pub triangle_free: bool,
    pub acyclic: bool,
    pub bipartite: bool,
    pub omega: usize,
    pub chi: usize,
}

fn check_order(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::TooFewVertices(n))
    } else if n > MAX_BASE_ORDER {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

#[inline]
fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !((2u64 << v) - 1)
    }
}

pub(crate) fn iter_bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}
