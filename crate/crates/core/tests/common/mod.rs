//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the library except to build a `BaseGraph`.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use gasket_core::BaseGraph;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 0..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

/// The labelled graph on `n` vertices whose edge set is the bit pattern
/// `mask` over [`pairs`]. Edges are 0-based.
pub fn edges_of(n: usize, mask: u64) -> Vec<(usize, usize)> {
    pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect()
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> BaseGraph {
    let one_based: Vec<_> = edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect();
    BaseGraph::from_edge_list(n, &one_based).unwrap()
}

pub fn labelled_graphs(n: usize) -> impl Iterator<Item = (Vec<(usize, usize)>, BaseGraph)> {
    let m = n * (n - 1) / 2;
    (0..1u64 << m).map(move |mask| {
        let e = edges_of(n, mask);
        let g = graph(n, &e);
        (e, g)
    })
}

/// One representative per isomorphism class: the edge masks that are
/// minimal over all vertex permutations.
pub fn unlabelled_graphs(n: usize) -> Vec<(Vec<(usize, usize)>, BaseGraph)> {
    let perms = permutations(n);
    let index: BTreeMap<(usize, usize), usize> =
        pairs(n).into_iter().enumerate().map(|(k, e)| (e, k)).collect();
    let m = n * (n - 1) / 2;
    let mut out = Vec::new();
    for mask in 0..1u64 << m {
        let e = edges_of(n, mask);
        let minimal = perms.iter().all(|p| {
            let image = e.iter().fold(0u64, |acc, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                acc | 1 << index[&(a, b)]
            });
            image >= mask
        });
        if minimal {
            let g = graph(n, &e);
            out.push((e, g));
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn has(edges: &[(usize, usize)], a: usize, b: usize) -> bool {
    edges.contains(&(a.min(b), a.max(b)))
}

pub fn words(n: usize, t: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..t {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n as u8).map(move |a| {
                    let mut x = w.clone();
                    x.push(a);
                    x
                })
            })
            .collect();
    }
    out
}

/// `S(G,t)` from the adjacency rule by comparing every pair of words.
/// Returns sorted edges as word pairs with `u < v`, plus a flag per edge
/// saying whether it is a linking edge.
pub fn sierpinski_pairs(n: usize, edges: &[(usize, usize)], t: usize) -> Vec<(Vec<u8>, Vec<u8>, bool)> {
    let ws = words(n, t);
    let mut out = Vec::new();
    for (a, u) in ws.iter().enumerate() {
        for v in &ws[a + 1..] {
            let i = (0..t).find(|&i| u[i] != v[i]).unwrap();
            let rule = has(edges, u[i] as usize, v[i] as usize)
                && u[i + 1..].iter().all(|&x| x == v[i])
                && v[i + 1..].iter().all(|&x| x == u[i]);
            if rule {
                out.push((u.clone(), v.clone(), i + 1 < t));
            }
        }
    }
    out
}

/// The gasket as a quotient: classes of words joined by linking edges,
/// and the edges between distinct classes.
pub struct Quotient {
    pub class_of: BTreeMap<Vec<u8>, usize>,
    pub classes: Vec<BTreeSet<Vec<u8>>>,
    pub edges: BTreeSet<(usize, usize)>,
}

pub fn quotient(n: usize, edges: &[(usize, usize)], t: usize) -> Quotient {
    let all = sierpinski_pairs(n, edges, t);
    let mut rep: BTreeMap<Vec<u8>, Vec<u8>> = words(n, t).into_iter().map(|w| (w.clone(), w)).collect();
    fn root(rep: &BTreeMap<Vec<u8>, Vec<u8>>, mut w: Vec<u8>) -> Vec<u8> {
        while rep[&w] != w {
            w = rep[&w].clone();
        }
        w
    }
    for (u, v, linking) in &all {
        if *linking {
            let (ru, rv) = (root(&rep, u.clone()), root(&rep, v.clone()));
            if ru != rv {
                let (lo, hi) = if ru < rv { (ru, rv) } else { (rv, ru) };
                rep.insert(hi, lo);
            }
        }
    }
    let mut by_root: BTreeMap<Vec<u8>, BTreeSet<Vec<u8>>> = BTreeMap::new();
    for w in rep.keys() {
        by_root.entry(root(&rep, w.clone())).or_default().insert(w.clone());
    }
    let classes: Vec<BTreeSet<Vec<u8>>> = by_root.into_values().collect();
    let mut class_of = BTreeMap::new();
    for (k, c) in classes.iter().enumerate() {
        for w in c {
            class_of.insert(w.clone(), k);
        }
    }
    let mut qe = BTreeSet::new();
    for (u, v, linking) in &all {
        if !linking {
            let (a, b) = (class_of[u], class_of[v]);
            assert_ne!(a, b);
            qe.insert((a.min(b), a.max(b)));
        }
    }
    Quotient { class_of, classes, edges: qe }
}

pub fn is_proper(edges: &[(usize, usize)], colors: &[u32]) -> bool {
    edges.iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Smallest `k` with a proper `k`-coloring, by trying every assignment.
pub fn brute_chromatic(n: usize, edges: &[(usize, usize)]) -> usize {
    (1..=n.max(1)).find(|&k| brute_lex_coloring(n, edges, k).is_some()).unwrap()
}

/// First proper `k`-coloring in lexicographic order of color vectors.
pub fn brute_lex_coloring(n: usize, edges: &[(usize, usize)], k: usize) -> Option<Vec<u32>> {
    let total = (k as u64).pow(n as u32);
    (0..total).find_map(|mut code| {
        let mut c = vec![0u32; n];
        for slot in c.iter_mut().rev() {
            *slot = (code % k as u64) as u32;
            code /= k as u64;
        }
        is_proper(edges, &c).then_some(c)
    })
}

pub fn brute_clique(n: usize, edges: &[(usize, usize)]) -> usize {
    (0u64..1 << n)
        .filter(|&s| {
            edges_of_subset(n, s)
                .iter()
                .all(|&(u, v)| has(edges, u, v))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn edges_of_subset(n: usize, s: u64) -> Vec<(usize, usize)> {
    pairs(n).into_iter().filter(|&(u, v)| s >> u & 1 == 1 && s >> v & 1 == 1).collect()
}

/// Cycle detection by DFS looking for a back edge.
pub fn has_cycle(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    fn dfs(v: usize, parent: Option<usize>, adj: &[Vec<usize>], seen: &mut [bool]) -> bool {
        seen[v] = true;
        for &u in &adj[v] {
            if Some(u) == parent {
                continue;
            }
            if seen[u] || dfs(u, Some(v), adj, seen) {
                return true;
            }
        }
        false
    }
    (0..n).any(|v| !seen[v] && dfs(v, None, &adj, &mut seen))
}

pub fn components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] == x { x } else { let r = find(p, p[x]); p[x] = r; r }
    }
    let mut count = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}
