//! Structural checks of gasket theorems against exact computation, and the
//! per-instance chromatic profile used by conjecture sweeps.
//!
//! Every check builds the gasket explicitly and compares a closed-form or
//! proved statement with what the exact solvers observe. A failing check
//! means either an implementation bug or, for the equality
//! `χ(S[G,t]) = χ(G)`, a counterexample to an open conjecture; the two are
//! kept apart by [`Verdict`].

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::base::BaseGraph;
use crate::build::{build_gasket, build_sierpinski, verify_counts, MaterializedGraph};
use crate::coloring::{self, verify_proper, LabelColoring};
use crate::corners;
use crate::error::{Error, Result};
use crate::label::{canonicalize, VertexLabel};
use crate::oracle::OracleContext;
use crate::solve::{self, Adjacency};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Set by the chromatic check when `χ(S[G,t]) = χ(G) + 1`.
    pub finding: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        CheckOutcome {
            name,
            passed,
            finding: false,
            detail,
        }
    }
}

/// `ω(S[G,t]) = ω(G)`.
pub fn check_clique_theorem(g: &BaseGraph, t: usize, cap: u64) -> Result<CheckOutcome> {
    let m = build_gasket(g, t, cap)?;
    Ok(clique_theorem_on(g, &m))
}

fn clique_theorem_on(g: &BaseGraph, m: &MaterializedGraph) -> CheckOutcome {
    let (base, gasket) = (g.clique_number(), solve::clique_number(m));
    CheckOutcome::new(
        "clique number",
        base == gasket,
        format!("omega(G)={base} omega(S[G,{}])={gasket}", m.depth()),
    )
}

/// `G` is triangle-free exactly when `S[G,t]` is, and the gasket has at
/// least `triangles(G)·n^(t-1)` triangles.
pub fn check_triangle_preservation(g: &BaseGraph, t: usize, cap: u64) -> Result<CheckOutcome> {
    let m = build_gasket(g, t, cap)?;
    Ok(triangle_preservation_on(g, &m))
}

fn triangle_preservation_on(g: &BaseGraph, m: &MaterializedGraph) -> CheckOutcome {
    let base_free = g.is_triangle_free();
    let gasket_triangles = m.triangles().count() as u64;
    let floor = g.triangle_count() as u64 * (g.order() as u64).pow(m.depth() as u32 - 1);
    CheckOutcome::new(
        "triangle preservation",
        base_free == (gasket_triangles == 0) && gasket_triangles >= floor,
        format!(
            "triangle-free(G)={base_free} triangles(S[G,{}])={gasket_triangles} inherited>={floor}",
            m.depth()
        ),
    )
}

/// Every maximal clique of size at least 4 lies inside one copy of `G`:
/// all its vertices have expanded forms sharing one length-`(t-1)` prefix.
pub fn check_clique_localization(g: &BaseGraph, t: usize, cap: u64) -> Result<CheckOutcome> {
    let m = build_gasket(g, t, cap)?;
    Ok(clique_localization_on(&m))
}

fn clique_localization_on(m: &MaterializedGraph) -> CheckOutcome {
    let t = m.depth();
    let cliques = solve::maximal_cliques(m, 4);
    let mut stray = 0;
    for clique in &cliques {
        let mut common: Option<BTreeSet<Vec<u8>>> = None;
        for &v in clique {
            let prefixes: BTreeSet<Vec<u8>> = m
                .label(v)
                .expand()
                .into_iter()
                .map(|w| w.0[..t - 1].to_vec())
                .collect();
            common = Some(match common {
                None => prefixes,
                Some(c) => c.intersection(&prefixes).cloned().collect(),
            });
        }
        if common.is_none_or(|c| c.is_empty()) {
            stray += 1;
        }
    }
    CheckOutcome::new(
        "clique localization",
        stray == 0,
        format!("{} maximal cliques of size >= 4, {stray} not inside a copy of G", cliques.len()),
    )
}

/// Acyclic bases give acyclic gaskets; trees give trees.
pub fn check_tree_preservation(g: &BaseGraph, t: usize, cap: u64) -> Result<CheckOutcome> {
    let m = build_gasket(g, t, cap)?;
    Ok(tree_preservation_on(g, &m))
}

fn tree_preservation_on(g: &BaseGraph, m: &MaterializedGraph) -> CheckOutcome {
    let class_acyclic = g.edge_count() + g.components() == g.order();
    let cc = m.components();
    let gasket_acyclic = m.size() + cc == m.order();
    let tree = class_acyclic && g.components() == 1;
    let passed = !class_acyclic || (gasket_acyclic && (!tree || cc == 1));
    CheckOutcome::new(
        "tree preservation",
        passed,
        if class_acyclic {
            format!("acyclic base: gasket acyclic={gasket_acyclic} components={cc}")
        } else {
            String::from("base has a cycle (vacuous)")
        },
    )
}

/// For `t >= 3` the contractions `{i,j}@t` form an independent set.
pub fn check_top_contractions_independent(g: &BaseGraph, t: usize, cap: u64) -> Result<CheckOutcome> {
    let m = build_gasket(g, t, cap)?;
    Ok(top_contractions_on(&m))
}

fn top_contractions_on(m: &MaterializedGraph) -> CheckOutcome {
    let t = m.depth();
    let top: Vec<usize> = (0..m.order())
        .filter(|&v| m.label(v).level() == Some(t))
        .collect();
    let adjacent_pairs = if t >= 3 {
        top.iter()
            .flat_map(|&u| top.iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| u < v && m.has_edge(u, v))
            .count()
    } else {
        0
    };
    CheckOutcome::new(
        "step-t contractions independent",
        adjacent_pairs == 0,
        if t >= 3 {
            format!("{} contractions at step {t}, {adjacent_pairs} adjacent pairs", top.len())
        } else {
            String::from("t < 3 (vacuous)")
        },
    )
}

/// For `t >= 3` every neighbor of a contraction of level `>= 3` is a
/// contraction of level exactly 2.
pub fn check_deep_contraction_neighbors(g: &BaseGraph, t: usize, cap: u64) -> Result<CheckOutcome> {
    let m = build_gasket(g, t, cap)?;
    Ok(deep_neighbors_on(&m))
}

fn deep_neighbors_on(m: &MaterializedGraph) -> CheckOutcome {
    let mut deep = 0;
    let mut bad = 0;
    for v in 0..m.order() {
        if m.label(v).level().is_some_and(|l| l >= 3) {
            deep += 1;
            bad += m
                .neighbors(v)
                .iter()
                .filter(|&&u| m.label(u as usize).level() != Some(2))
                .count();
        }
    }
    CheckOutcome::new(
        "deep contractions touch only step-2 contractions",
        bad == 0,
        format!("{deep} deep contractions, {bad} other neighbors"),
    )
}

/// Oracle neighbor sets equal the materialized ones for every vertex.
pub fn check_oracle_equivalence(g: &BaseGraph, t: usize, cap: u64) -> Result<CheckOutcome> {
    let m = build_gasket(g, t, cap)?;
    oracle_equivalence_on(g, &m)
}

fn oracle_equivalence_on(g: &BaseGraph, m: &MaterializedGraph) -> Result<CheckOutcome> {
    let ctx = OracleContext::new(g.clone(), m.depth())?;
    let mut mismatched = 0;
    let mut first = None;
    for v in 0..m.order() {
        let label = m.label(v);
        let implicit = ctx.neighbors(&label)?;
        let explicit: BTreeSet<VertexLabel> =
            m.neighbors(v).iter().map(|&u| m.label(u as usize)).collect();
        if implicit != explicit {
            mismatched += 1;
            first.get_or_insert(label);
        }
    }
    Ok(CheckOutcome::new(
        "oracle equivalence",
        mismatched == 0,
        match first {
            None => format!("{} vertices agree", m.order()),
            Some(l) => format!("{mismatched} vertices disagree, first {l}"),
        },
    ))
}

/// Closed forms for order, size and components of both families.
pub fn check_counts(g: &BaseGraph, t: usize, cap: u64) -> Result<CheckOutcome> {
    let s = verify_counts(&build_sierpinski(g, t, cap)?);
    let m = verify_counts(&build_gasket(g, t, cap)?);
    let failures: Vec<String> = s
        .failures()
        .map(|c| format!("S(G,t) {}", c.name))
        .chain(m.failures().map(|c| format!("S[G,t] {}", c.name)))
        .collect();
    Ok(CheckOutcome::new(
        "order/size/component formulas",
        failures.is_empty(),
        if failures.is_empty() {
            String::from("all closed forms match")
        } else {
            failures.join(", ")
        },
    ))
}

/// The induced subgraph on copy `i` is `S[G,t-1]` after dropping the
/// leading letter.
pub fn check_copy_decomposition(g: &BaseGraph, t: usize, cap: u64) -> Result<CheckOutcome> {
    if t < 2 {
        return Ok(CheckOutcome::new("copy decomposition", true, String::from("t < 2 (vacuous)")));
    }
    let m = build_gasket(g, t, cap)?;
    let inner = build_gasket(g, t - 1, cap)?;
    let mut broken = 0;
    for i in 0..g.order() as u8 {
        // copy vertex -> inner vertex
        let mut map = alloc::vec![usize::MAX; m.order()];
        let mut hit = alloc::vec![false; inner.order()];
        for (v, slot) in map.iter_mut().enumerate() {
            if let Some(w) = m.label(v).expand().into_iter().find(|w| w.0[0] == i) {
                let stripped = canonicalize(&w.0[1..], g);
                let u = inner.index_of(&stripped).expect("stripped label exists");
                *slot = u;
                hit[u] = true;
            }
        }
        let members: Vec<usize> = (0..m.order()).filter(|&v| map[v] != usize::MAX).collect();
        if members.len() != inner.order() || hit.iter().any(|h| !h) {
            broken += 1;
            continue;
        }
        let induced: BTreeSet<(usize, usize)> = members
            .iter()
            .flat_map(|&v| m.neighbors(v).iter().map(move |&u| (v, u as usize)))
            .filter(|&(v, u)| map[u] != usize::MAX && v < u)
            .map(|(v, u)| (map[v].min(map[u]), map[v].max(map[u])))
            .collect();
        let expected: BTreeSet<(usize, usize)> = inner.edges().collect();
        if induced != expected {
            broken += 1;
        }
    }
    Ok(CheckOutcome::new(
        "copy decomposition",
        broken == 0,
        format!("{broken} of {} copies differ from S[G,{}]", g.order(), t - 1),
    ))
}

/// The constructive colorings are proper with their stated palettes.
pub fn check_colorings(g: &BaseGraph, t: usize, cap: u64) -> Result<CheckOutcome> {
    let m = build_gasket(g, t, cap)?;
    colorings_on(g, &m)
}

fn colorings_on(g: &BaseGraph, m: &MaterializedGraph) -> Result<CheckOutcome> {
    let t = m.depth();
    let k = g.chromatic_number() as u32;
    let mut problems: Vec<String> = Vec::new();

    let rec = coloring::color_recursive(g, t)?;
    let rec_col = rec.materialize(m);
    let report = verify_proper(m, &rec_col)?;
    if !report.proper {
        problems.push(format!("recursive: {} violations", report.violation_count));
    }
    if rec.palette() > k + 1 || (t <= 2 && rec.palette() != k) {
        problems.push(format!("recursive: palette {}", rec.palette()));
    }
    let extra_outside = (0..m.order())
        .filter(|&v| rec_col.color(v) == k && m.label(v).level().is_none_or(|l| l < 3))
        .count();
    if extra_outside > 0 {
        problems.push(format!("recursive: extra color on {extra_outside} shallow vertices"));
    }

    if t == 2 {
        let f = coloring::Coloring::new(k, g.find_coloring(k as usize).expect("chi-coloring"))?;
        let c = coloring::color_level2(g, &f)?;
        let r = verify_proper(m, &c.materialize(m))?;
        if !r.proper || r.colors_used > k as usize {
            problems.push(format!("level2: proper={} colors={}", r.proper, r.colors_used));
        }
    }

    if g.is_bipartite() && g.edge_count() > 0 {
        let c = coloring::color_bipartite(g, t)?;
        let col = c.materialize(m);
        let r = verify_proper(m, &col)?;
        if !r.proper || r.colors_used != 2 {
            problems.push(format!("bipartite: proper={} colors={}", r.proper, r.colors_used));
        }
        let misplaced = (0..m.order())
            .filter(|&v| match m.label(v) {
                VertexLabel::Contracted { level: 2, .. } => col.color(v) != 1,
                VertexLabel::Plain(w) if t >= 2 => {
                    let extreme = w.0[t - 2..].iter().all(|&x| x == w.0[t - 1]);
                    extreme && col.color(v) != 0
                }
                _ => false,
            })
            .count();
        if misplaced > 0 {
            problems.push(format!("bipartite: {misplaced} vertices off the expected class"));
        }
    }

    Ok(CheckOutcome::new(
        "constructive colorings",
        problems.is_empty(),
        if problems.is_empty() {
            format!("recursive palette {}", rec.palette())
        } else {
            problems.join("; ")
        },
    ))
}

/// How a gasket's clique/chromatic numbers relate to the proved results.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// `ω` and `χ` both equal the base values.
    Consistent,
    /// `χ(S[G,t]) = χ(G) + 1`: allowed by the proved bounds, refutes the
    /// equality conjecture.
    Finding,
    /// Contradicts a proved statement; indicates an implementation bug.
    Bug,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Consistent => "ok",
            Verdict::Finding => "finding",
            Verdict::Bug => "bug",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GasketProfile {
    pub depth: usize,
    pub order: usize,
    pub size: usize,
    pub chi_base: usize,
    pub omega_base: usize,
    pub chi_gasket: usize,
    pub omega_gasket: usize,
    /// The recursive coloring verified proper with at most `χ(G)+1` colors.
    pub construction_proper: bool,
}

impl GasketProfile {
    pub fn verdict(&self) -> Verdict {
        let sandwich = self.chi_base <= self.chi_gasket && self.chi_gasket <= self.chi_base + 1;
        if self.omega_base != self.omega_gasket || !sandwich || !self.construction_proper {
            Verdict::Bug
        } else if self.chi_gasket != self.chi_base {
            Verdict::Finding
        } else {
            Verdict::Consistent
        }
    }
}

/// Exact `ω` and `χ` of `S[G,t]`.
///
/// `G` is a subgraph of the gasket, so `χ(G)` and the gasket's clique
/// number bound `χ` from below; the recursive construction, once verified,
/// bounds it from above. In the expected case only the single question
/// "is the gasket `χ(G)`-colorable?" reaches the exact search.
pub fn gasket_profile(
    g: &BaseGraph,
    t: usize,
    cap: u64,
    abort: &mut dyn FnMut() -> bool,
) -> Result<GasketProfile> {
    let m = build_gasket(g, t, cap)?;
    profile_of(g, &m, abort)
}

pub fn profile_of(
    g: &BaseGraph,
    m: &MaterializedGraph,
    abort: &mut dyn FnMut() -> bool,
) -> Result<GasketProfile> {
    let chi_base = g.chromatic_number();
    let omega_base = g.clique_number();
    let omega_gasket = solve::clique_number(m);

    let rec = coloring::color_recursive(g, m.depth())?;
    let cert = rec.materialize(m);
    let construction_proper =
        verify_proper(m, &cert)?.proper && rec.palette() as usize <= chi_base + 1;
    let upper = if construction_proper {
        rec.palette() as usize
    } else {
        let greedy = solve::dsatur_greedy(m);
        greedy.iter().max().map_or(0, |&c| c as usize + 1)
    };
    let lower = chi_base.max(omega_gasket).min(upper);
    let mut chi_gasket = upper;
    for k in lower..upper {
        if abort() {
            return Err(Error::Aborted);
        }
        if decide_colorable(g, m, k, abort)? {
            chi_gasket = k;
            break;
        }
    }
    Ok(GasketProfile {
        depth: m.depth(),
        order: m.order(),
        size: m.size(),
        chi_base,
        omega_base,
        chi_gasket,
        omega_gasket,
        construction_proper,
    })
}

/// Search steps (in units of 1024) given to the backtracking search before
/// the corner recurrence is tried.
const SEARCH_POLLS: u32 = 256;

/// Decides `χ(S[G,t]) <= k` exactly. The backtracking search settles most
/// instances at once but can stall on dense bases; the corner recurrence
/// of [`crate::corners`] handles those, while it is itself slow when the
/// corner sets grow large. Each gets a turn before the search runs on
/// unbounded.
fn decide_colorable(
    g: &BaseGraph,
    m: &MaterializedGraph,
    k: usize,
    abort: &mut dyn FnMut() -> bool,
) -> Result<bool> {
    let mut polls = 0u32;
    let mut limited = || {
        polls += 1;
        polls > SEARCH_POLLS || abort()
    };
    match solve::k_coloring(m, k, &mut limited) {
        Ok(found) => return Ok(found.is_some()),
        Err(Error::Aborted) if polls > SEARCH_POLLS => {}
        Err(e) => return Err(e),
    }
    if corners::feasible(g, k) {
        return corners::is_colorable(g, m.depth(), k, abort);
    }
    Ok(solve::k_coloring(m, k, abort)?.is_some())
}

/// Named suites for [`run_suite`].
pub const SUITES: &[&str] = &[
    "counts",
    "clique",
    "triangle",
    "localization",
    "trees",
    "structure",
    "oracle",
    "coloring",
    "copies",
    "chromatic",
];

/// Runs one suite by name (or `all`) on `S[G,t]`.
pub fn run_suite(g: &BaseGraph, t: usize, cap: u64, suite: &str) -> Result<Vec<CheckOutcome>> {
    let all = suite == "all";
    if !all && !SUITES.contains(&suite) {
        return Err(Error::InvalidLabel {
            label: String::from(suite),
            reason: "unknown check suite",
        });
    }
    let want = |name: &str| all || suite == name;
    let m = build_gasket(g, t, cap)?;
    let mut out = Vec::new();
    if want("counts") {
        out.push(check_counts(g, t, cap)?);
    }
    if want("clique") {
        out.push(clique_theorem_on(g, &m));
    }
    if want("triangle") {
        out.push(triangle_preservation_on(g, &m));
    }
    if want("localization") {
        out.push(clique_localization_on(&m));
    }
    if want("trees") {
        out.push(tree_preservation_on(g, &m));
    }
    if want("structure") {
        out.push(top_contractions_on(&m));
        out.push(deep_neighbors_on(&m));
    }
    if want("oracle") {
        out.push(oracle_equivalence_on(g, &m)?);
    }
    if want("coloring") {
        out.push(colorings_on(g, &m)?);
    }
    if want("copies") {
        out.push(check_copy_decomposition(g, t, cap)?);
    }
    if want("chromatic") {
        let p = profile_of(g, &m, &mut || false)?;
        let mut outcome = CheckOutcome::new(
            "chromatic sandwich",
            p.verdict() != Verdict::Bug,
            format!(
                "chi(G)={} chi(S[G,{t}])={} ({})",
                p.chi_base,
                p.chi_gasket,
                p.verdict().name()
            ),
        );
        outcome.finding = p.verdict() == Verdict::Finding;
        out.push(outcome);
    }
    Ok(out)
}
