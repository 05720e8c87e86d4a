//! Exact `k`-colorability of `S[G,t]` through the colors of its corners.
//!
//! The copies `S_i` (labels whose expanded forms start with `i`) are copies
//! of `S[G,t-1]`, and two copies `S_i`, `S_j` meet only in the vertex
//! `{i,j}@t`, which is the corner `j^(t-1)` of `S_i` and the corner
//! `i^(t-1)` of `S_j`. No edge runs between copies. So if `F_s` is the set
//! of color tuples `(c(1^s), …, c(n^s))` over all proper `k`-colorings of
//! `S[G,s]`, then `F_1` is the set of proper `k`-colorings of `G` and
//! `F_(s+1)` collects `(y_1, …, y_n)` such that there are tuples
//! `f_i ∈ F_s` with `f_i[i] = y_i` and `f_i[j] = f_j[i]` for every edge
//! `ij`. `S[G,t]` is `k`-colorable iff `F_t` is nonempty.
//!
//! Every `F_s` is closed under permutations of the colors, so only tuples
//! in first-occurrence normal form are decided and the rest are obtained
//! by relabelling.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::base::BaseGraph;
use crate::error::{Error, Result};

/// Largest `k^n` for which the corner sets are materialized.
pub const MAX_TUPLES: u64 = 1 << 22;

pub type Tuple = Vec<u8>;

/// Whether `F_t` fits under [`MAX_TUPLES`].
pub fn feasible(g: &BaseGraph, k: usize) -> bool {
    (k as u64).checked_pow(g.order() as u32).is_some_and(|c| c <= MAX_TUPLES)
}

/// `F_1`: proper colorings of `g` with colors `< k`.
fn base_tuples(g: &BaseGraph, k: usize, abort: &mut dyn FnMut() -> bool) -> Result<BTreeSet<Tuple>> {
    struct Walk<'a> {
        g: &'a BaseGraph,
        k: usize,
        c: Vec<u8>,
        normal: BTreeSet<Tuple>,
        polls: u32,
        abort: &'a mut dyn FnMut() -> bool,
    }
    // all normal-form colorings by depth-first search, then relabel
    fn go(w: &mut Walk, v: usize, used: usize) -> Result<()> {
        w.polls = w.polls.wrapping_add(1);
        if w.polls.is_multiple_of(4096) && (w.abort)() {
            return Err(Error::Aborted);
        }
        if v == w.c.len() {
            w.normal.insert(w.c.clone());
            return Ok(());
        }
        for col in 0..w.k.min(used + 1) {
            if w.g.neighbor_list(v).iter().any(|&u| (u as usize) < v && w.c[u as usize] == col as u8) {
                continue;
            }
            w.c[v] = col as u8;
            go(w, v + 1, used.max(col + 1))?;
        }
        Ok(())
    }
    let mut w = Walk {
        g,
        k,
        c: vec![0u8; g.order()],
        normal: BTreeSet::new(),
        polls: 0,
        abort,
    };
    go(&mut w, 0, 0)?;
    let normal = w.normal;
    let mut out = BTreeSet::new();
    for t in &normal {
        relabellings(t, k, &mut out);
    }
    Ok(out)
}

/// Inserts every image of `t` under an injective recoloring into `[0,k)`.
fn relabellings(t: &[u8], k: usize, out: &mut BTreeSet<Tuple>) {
    let used = t.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    let mut image = vec![0u8; used];
    let mut taken = vec![false; k];
    fn go(i: usize, t: &[u8], image: &mut Vec<u8>, taken: &mut Vec<bool>, out: &mut BTreeSet<Tuple>) {
        if i == image.len() {
            out.insert(t.iter().map(|&c| image[c as usize]).collect());
            return;
        }
        for c in 0..taken.len() {
            if !taken[c] {
                taken[c] = true;
                image[i] = c as u8;
                go(i + 1, t, image, taken, out);
                taken[c] = false;
            }
        }
    }
    go(0, t, &mut image, &mut taken, out);
}

/// Normal-form tuples of length `n` over `k` colors.
fn normal_forms(n: usize, k: usize) -> Vec<Tuple> {
    let mut out = Vec::new();
    let mut c = vec![0u8; n];
    fn go(i: usize, used: usize, k: usize, c: &mut Vec<u8>, out: &mut Vec<Tuple>) {
        if i == c.len() {
            out.push(c.clone());
            return;
        }
        for col in 0..k.min(used + 1) {
            c[i] = col as u8;
            go(i + 1, used.max(col + 1), k, c, out);
        }
    }
    go(0, 0, k, &mut c, &mut out);
    out
}

struct Step<'a> {
    g: &'a BaseGraph,
    /// per copy `i` and corner color `c`: the admissible colors of the
    /// shared corners `N(i)`, in neighbor-list order
    options: Vec<BTreeMap<u8, BTreeSet<Tuple>>>,
}

impl<'a> Step<'a> {
    fn new(g: &'a BaseGraph, prev: &BTreeSet<Tuple>) -> Self {
        let n = g.order();
        let mut options = vec![BTreeMap::new(); n];
        for f in prev {
            for (i, slot) in options.iter_mut().enumerate() {
                let shared: Tuple = g.neighbor_list(i).iter().map(|&a| f[a as usize]).collect();
                slot.entry(f[i]).or_insert_with(BTreeSet::new).insert(shared);
            }
        }
        Step { g, options }
    }

    /// Whether some choice of shared corner colors realizes `y`.
    fn realizable(&self, y: &[u8], polls: &mut u32, abort: &mut dyn FnMut() -> bool) -> Result<bool> {
        let n = self.g.order();
        // shared[i][j] for edges, u8::MAX when unset
        let mut shared = vec![u8::MAX; n * n];
        self.assign(0, y, &mut shared, polls, abort)
    }

    fn has_option(&self, j: usize, y: &[u8], shared: &[u8]) -> bool {
        let n = self.g.order();
        let nbrs = self.g.neighbor_list(j);
        self.options[j].get(&y[j]).is_some_and(|choices| {
            choices.iter().any(|choice| {
                nbrs.iter().enumerate().all(|(slot, &a)| {
                    let fixed = shared[j * n + a as usize];
                    fixed == u8::MAX || fixed == choice[slot]
                })
            })
        })
    }

    fn assign(
        &self,
        i: usize,
        y: &[u8],
        shared: &mut Vec<u8>,
        polls: &mut u32,
        abort: &mut dyn FnMut() -> bool,
    ) -> Result<bool> {
        let n = self.g.order();
        if i == n {
            return Ok(true);
        }
        *polls = polls.wrapping_add(1);
        if polls.is_multiple_of(4096) && abort() {
            return Err(Error::Aborted);
        }
        let Some(choices) = self.options[i].get(&y[i]) else {
            return Ok(false);
        };
        let nbrs = self.g.neighbor_list(i);
        'next: for choice in choices {
            for (slot, &a) in nbrs.iter().enumerate() {
                let fixed = shared[i * n + a as usize];
                if fixed != u8::MAX && fixed != choice[slot] {
                    continue 'next;
                }
            }
            let mut set = Vec::new();
            for (slot, &a) in nbrs.iter().enumerate() {
                let a = a as usize;
                if shared[i * n + a] == u8::MAX {
                    shared[i * n + a] = choice[slot];
                    shared[a * n + i] = choice[slot];
                    set.push(a);
                }
            }
            // forward check: every later copy touched here keeps an option
            let alive = set.iter().all(|&j| self.has_option(j, y, shared));
            let found = alive && self.assign(i + 1, y, shared, polls, abort)?;
            for a in set {
                shared[i * n + a] = u8::MAX;
                shared[a * n + i] = u8::MAX;
            }
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// `F_t` for `k` colors. Fails with [`Error::CapExceeded`] when `k^n`
/// exceeds [`MAX_TUPLES`].
pub fn corner_tuples(
    g: &BaseGraph,
    t: usize,
    k: usize,
    abort: &mut dyn FnMut() -> bool,
) -> Result<BTreeSet<Tuple>> {
    if t == 0 {
        return Err(Error::ZeroDepth);
    }
    if !feasible(g, k) {
        return Err(Error::CapExceeded {
            required: (k as u128).saturating_pow(g.order() as u32),
            cap: MAX_TUPLES,
        });
    }
    let mut current = base_tuples(g, k, abort)?;
    let forms = normal_forms(g.order(), k);
    let mut polls = 0u32;
    for _ in 1..t {
        if current.is_empty() {
            break;
        }
        let step = Step::new(g, &current);
        let mut next = BTreeSet::new();
        for y in &forms {
            if step.realizable(y, &mut polls, abort)? {
                relabellings(y, k, &mut next);
            }
        }
        if next == current {
            // the recurrence has reached a fixed point
            break;
        }
        current = next;
    }
    Ok(current)
}

/// Whether `S[G,t]` has a proper `k`-coloring.
pub fn is_colorable(g: &BaseGraph, t: usize, k: usize, abort: &mut dyn FnMut() -> bool) -> Result<bool> {
    Ok(!corner_tuples(g, t, k, abort)?.is_empty())
}

/// `χ(S[G,t])`, searching `k` upward from `χ(G)`.
pub fn chromatic_number(g: &BaseGraph, t: usize, abort: &mut dyn FnMut() -> bool) -> Result<usize> {
    let mut k = g.chromatic_number();
    while !is_colorable(g, t, k, abort)? {
        k += 1;
    }
    Ok(k)
}
