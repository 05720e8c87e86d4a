//! Exact combinatorial solvers used as ground truth.
//!
//! All searches are deterministic: vertex orders, branching and tie-breaks
//! depend only on the input graph.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Undirected simple graph given by sorted neighbor slices.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn neighbors(&self, v: usize) -> &[u32];

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }
}

/// Smallest-last (degeneracy) ordering. Returns the order and each
/// vertex's position in it.
pub fn degeneracy_order<A: Adjacency + ?Sized>(g: &A) -> (Vec<usize>, Vec<usize>) {
    let n = g.order();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in (0..n).rev() {
        buckets[degree[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut low = 0;
    while order.len() < n {
        low = low.min(max_deg);
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop().unwrap();
        // stale entries are skipped
        if removed[v] || degree[v] != low {
            continue;
        }
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            let u = u as usize;
            if !removed[u] {
                degree[u] -= 1;
                buckets[degree[u]].push(u);
                low = low.min(degree[u]);
            }
        }
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    (order, position)
}

/// Local view of the graph induced on a vertex subset, as bitset rows.
struct Local {
    vertices: Vec<usize>,
    rows: Vec<BitSet>,
}

impl Local {
    fn induced<A: Adjacency + ?Sized>(g: &A, vertices: Vec<usize>, slot: &mut [u32]) -> Local {
        let m = vertices.len();
        for (i, &v) in vertices.iter().enumerate() {
            slot[v] = i as u32;
        }
        let rows = vertices
            .iter()
            .map(|&v| {
                let mut row = BitSet::new(m);
                for &u in g.neighbors(v) {
                    let s = slot[u as usize];
                    if s != u32::MAX && vertices[s as usize] == u as usize {
                        row.insert(s as usize);
                    }
                }
                row
            })
            .collect();
        for &v in &vertices {
            slot[v] = u32::MAX;
        }
        Local { vertices, rows }
    }
}

pub fn clique_number<A: Adjacency + ?Sized>(g: &A) -> usize {
    maximum_clique(g).len()
}

/// A maximum clique, found by a colour-bounded branch and bound run on each
/// vertex's later neighbourhood in degeneracy order.
pub fn maximum_clique<A: Adjacency + ?Sized>(g: &A) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let (order, position) = degeneracy_order(g);
    let mut best: Vec<usize> = vec![order[0]];
    let mut slot = vec![u32::MAX; n];
    for &v in order.iter() {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&u| u as usize)
            .filter(|&u| position[u] > position[v])
            .collect();
        if later.len() < best.len() {
            continue;
        }
        let local = Local::induced(g, later, &mut slot);
        let m = local.vertices.len();
        let mut all = BitSet::new(m);
        for i in 0..m {
            all.insert(i);
        }
        let mut current = Vec::new();
        let mut local_best: Vec<usize> = Vec::new();
        let floor = best.len() - 1;
        expand_clique(&local.rows, &mut current, all, floor, &mut local_best);
        if local_best.len() + 1 > best.len() {
            best = core::iter::once(v)
                .chain(local_best.iter().map(|&i| local.vertices[i]))
                .collect();
        }
    }
    best.sort_unstable();
    best
}

/// Tomita-style search: candidates are greedily coloured and visited in
/// reverse colour order so the colour count bounds the remaining gain.
fn expand_clique(
    rows: &[BitSet],
    current: &mut Vec<usize>,
    candidates: BitSet,
    floor: usize,
    best: &mut Vec<usize>,
) {
    let (order, bounds) = colour_sort(rows, &candidates);
    let mut candidates = candidates;
    for idx in (0..order.len()).rev() {
        let target = best.len().max(floor);
        if current.len() + bounds[idx] <= target {
            return;
        }
        let v = order[idx];
        current.push(v);
        let next = candidates.intersection(&rows[v]);
        if next.is_empty() {
            if current.len() > best.len().max(floor) {
                best.clear();
                best.extend_from_slice(current);
            }
        } else {
            expand_clique(rows, current, next, floor, best);
        }
        current.pop();
        candidates.remove(v);
    }
}

fn colour_sort(rows: &[BitSet], candidates: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut uncoloured = candidates.clone();
    let mut order = Vec::new();
    let mut bounds = Vec::new();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q = q.difference(&rows[v]);
            uncoloured.remove(v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

/// Every maximal clique with at least `min_size` vertices (Bron–Kerbosch
/// with pivoting, outer loop in degeneracy order). Each clique is sorted.
pub fn maximal_cliques<A: Adjacency + ?Sized>(g: &A, min_size: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    let (order, position) = degeneracy_order(g);
    let mut slot = vec![u32::MAX; n];
    let mut out = Vec::new();
    for &v in &order {
        let nbrs: Vec<usize> = g.neighbors(v).iter().map(|&u| u as usize).collect();
        if nbrs.len() + 1 < min_size {
            continue;
        }
        let local = Local::induced(g, nbrs, &mut slot);
        let m = local.vertices.len();
        let mut p = BitSet::new(m);
        let mut x = BitSet::new(m);
        for (i, &u) in local.vertices.iter().enumerate() {
            if position[u] > position[v] {
                p.insert(i);
            } else {
                x.insert(i);
            }
        }
        let mut r = Vec::new();
        bron_kerbosch(&local.rows, &mut r, p, x, &mut |clique| {
            if clique.len() + 1 >= min_size {
                let mut c: Vec<usize> = core::iter::once(v)
                    .chain(clique.iter().map(|&i| local.vertices[i]))
                    .collect();
                c.sort_unstable();
                out.push(c);
            }
        });
    }
    out.sort();
    out
}

fn bron_kerbosch(
    rows: &[BitSet],
    r: &mut Vec<usize>,
    mut p: BitSet,
    mut x: BitSet,
    report: &mut dyn FnMut(&[usize]),
) {
    if p.is_empty() {
        if x.is_empty() {
            report(r);
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (rows[u].intersection_len(&p), core::cmp::Reverse(u)))
        .unwrap();
    let branch: Vec<usize> = p.difference(&rows[pivot]).iter().collect();
    for v in branch {
        r.push(v);
        bron_kerbosch(rows, r, p.intersection(&rows[v]), x.intersection(&rows[v]), report);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Greedy DSATUR coloring (no backtracking). Colors are `0..k`.
pub fn dsatur_greedy<A: Adjacency + ?Sized>(g: &A) -> Vec<u32> {
    let n = g.order();
    let max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut state = Dsatur::new(g, max_degree + 1);
    for _ in 0..n {
        let v = state.select(g).expect("uncolored vertex remains");
        let c = state.first_free(v, 0).expect("palette of n colors never runs out");
        state.assign(g, v, c);
    }
    state.color
}

/// Decides `k`-colorability exactly with DSATUR branching.
///
/// `abort` is polled periodically; returning `true` stops the search with
/// [`Error::Aborted`].
pub fn k_coloring<A: Adjacency + ?Sized>(
    g: &A,
    k: usize,
    abort: &mut dyn FnMut() -> bool,
) -> Result<Option<Vec<u32>>> {
    let n = g.order();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut state = Dsatur::new(g, k);
    // (vertex, next color to try, highest color in use before this vertex)
    let mut stack: Vec<(usize, u32, u32)> = Vec::with_capacity(n);
    let mut polls = 0u32;
    let mut descend = true;
    loop {
        polls = polls.wrapping_add(1);
        if polls.is_multiple_of(1024) && abort() {
            return Err(Error::Aborted);
        }
        if descend {
            match state.select(g) {
                None => return Ok(Some(state.color)),
                Some(v) => {
                    let used = state.used;
                    stack.push((v, 0, used));
                }
            }
        }
        let Some(&mut (v, ref mut next, used)) = stack.last_mut() else {
            return Ok(None);
        };
        if state.color[v] != u32::MAX {
            state.unassign(g, v);
            state.used = used;
        }
        // symmetry: a fresh color is only ever the next unused one
        let limit = (used as usize + 1).min(k) as u32;
        match state.first_free(v, *next).filter(|&c| c < limit) {
            Some(c) => {
                *next = c + 1;
                state.assign(g, v, c);
                state.used = used.max(c + 1);
                descend = true;
            }
            None => {
                stack.pop();
                descend = false;
            }
        }
    }
}

struct Dsatur {
    k: usize,
    color: Vec<u32>,
    /// counts[v * k + c]: colored neighbors of v with color c
    counts: Vec<u32>,
    saturation: Vec<u32>,
    uncolored: usize,
    used: u32,
}

impl Dsatur {
    fn new<A: Adjacency + ?Sized>(g: &A, k: usize) -> Self {
        let n = g.order();
        Dsatur {
            k,
            color: vec![u32::MAX; n],
            counts: vec![0; n * k],
            saturation: vec![0; n],
            uncolored: n,
            used: 0,
        }
    }

    /// Max saturation, then max degree, then smallest index.
    fn select<A: Adjacency + ?Sized>(&self, g: &A) -> Option<usize> {
        if self.uncolored == 0 {
            return None;
        }
        let mut best: Option<(u32, usize, usize)> = None;
        for v in 0..self.color.len() {
            if self.color[v] != u32::MAX {
                continue;
            }
            let key = (self.saturation[v], g.degree(v));
            match best {
                Some((s, d, _)) if (s, d) >= key => {}
                _ => best = Some((key.0, key.1, v)),
            }
        }
        best.map(|b| b.2)
    }

    fn first_free(&self, v: usize, from: u32) -> Option<u32> {
        let row = &self.counts[v * self.k..(v + 1) * self.k];
        (from as usize..self.k).find(|&c| row[c] == 0).map(|c| c as u32)
    }

    fn assign<A: Adjacency + ?Sized>(&mut self, g: &A, v: usize, c: u32) {
        self.color[v] = c;
        self.uncolored -= 1;
        for &u in g.neighbors(v) {
            let slot = &mut self.counts[u as usize * self.k + c as usize];
            if *slot == 0 {
                self.saturation[u as usize] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign<A: Adjacency + ?Sized>(&mut self, g: &A, v: usize) {
        let c = self.color[v];
        self.color[v] = u32::MAX;
        self.uncolored += 1;
        for &u in g.neighbors(v) {
            let slot = &mut self.counts[u as usize * self.k + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u as usize] -= 1;
            }
        }
    }
}

pub fn chromatic_number<A: Adjacency + ?Sized>(g: &A) -> usize {
    match optimal_coloring(g, 0, &mut || false) {
        Ok((k, _)) => k,
        Err(_) => unreachable!("search without abort hook cannot abort"),
    }
}

/// Exact chromatic number and a witness coloring.
///
/// The search runs `k`-colorability for increasing `k` from
/// `max(lower_hint, ω)` up to the greedy DSATUR palette. `lower_hint` must
/// be a valid lower bound.
pub fn optimal_coloring<A: Adjacency + ?Sized>(
    g: &A,
    lower_hint: usize,
    abort: &mut dyn FnMut() -> bool,
) -> Result<(usize, Vec<u32>)> {
    let n = g.order();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().map_or(0, |&c| c as usize + 1);
    let lower = clique_number(g).max(lower_hint);
    for k in lower..upper {
        if let Some(c) = k_coloring(g, k, abort)? {
            return Ok((k, c));
        }
    }
    Ok((upper, greedy))
}

/// Plain adjacency-list graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdjList {
    lists: Vec<Vec<u32>>,
}

impl AdjList {
    /// Builds from 0-based undirected edges; duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut lists = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u != v {
                lists[u].push(v as u32);
                lists[v].push(u as u32);
            }
        }
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        AdjList { lists }
    }
}

impl Adjacency for AdjList {
    fn order(&self) -> usize {
        self.lists.len()
    }

    fn neighbors(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }
}
