#![allow(dead_code)]

use std::path::PathBuf;

use gasket_core::graph6::parse_graph6;
use gasket_core::BaseGraph;

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

pub fn read_corpus(name: &str) -> Vec<(String, BaseGraph)> {
    std::fs::read_to_string(corpus_path(name))
        .unwrap()
        .lines()
        .map(|l| (l.to_string(), parse_graph6(l.as_bytes()).unwrap()))
        .collect()
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> BaseGraph {
    let one_based: Vec<_> = edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect();
    BaseGraph::from_edge_list(n, &one_based).unwrap()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
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

/// Smallest edge mask over all relabellings.
pub fn canonical_mask(n: usize, edges: &[(usize, usize)]) -> u64 {
    let ps = pairs(n);
    let index = |a: usize, b: usize| ps.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    permutations(n)
        .iter()
        .map(|p| edges.iter().fold(0u64, |acc, &(u, v)| acc | 1 << index(p[u], p[v])))
        .min()
        .unwrap_or(0)
}

/// One graph per isomorphism class on `n` vertices, as 0-based edge lists.
pub fn unlabelled(n: usize) -> Vec<Vec<(usize, usize)>> {
    let ps = pairs(n);
    (0..1u64 << ps.len())
        .map(|mask| {
            ps.iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect::<Vec<_>>()
        })
        .filter(|e| {
            let mask = e.iter().fold(0u64, |acc, &(u, v)| acc | 1 << ps.iter().position(|&x| x == (u, v)).unwrap());
            canonical_mask(n, e) == mask
        })
        .collect()
}

pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}

pub fn edge_list(g: &BaseGraph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

/// Runs the CLI in-process with the given environment.
pub fn cli(args: &[&str], env: &[(&str, &str)]) -> (u8, String, String) {
    let vars: Vec<(String, String)> = env.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    let lookup = move |k: &str| vars.iter().find(|p| p.0 == k).map(|p| p.1.clone());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("gasketlab").chain(args.iter().copied());
    let code = gasketlab::cli::run(argv, &lookup, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
