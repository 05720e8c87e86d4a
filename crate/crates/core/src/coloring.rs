//! Constructive colorings of `S[G,t]` and a properness verifier.
//!
//! Colors are residues `0..k`. The constructions are closed-form functions
//! of a vertex label, so they can color gaskets far too large to build:
//!
//! * level 2: `x·y` and `{x,y}@2` both get `f(x) + f(y) mod k`;
//! * recursive: every copy is colored like `S[G,t-1]` and the step-`t`
//!   contractions get the extra color `k`;
//! * bipartite: as recursive, but step-`t` contractions get color `0`,
//!   which both of their expanded forms already carry.
//!
//! `f` is always the lexicographically smallest proper `χ(G)`-coloring (or
//! the BFS 2-coloring for the bipartite scheme).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::base::BaseGraph;
use crate::build::MaterializedGraph;
use crate::error::{Error, Result};
use crate::label::{self, VertexLabel, Word};
use crate::oracle::OracleContext;
use crate::solve::{self, Adjacency};

/// Palette size plus one color per vertex index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    palette: u32,
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(palette: u32, colors: Vec<u32>) -> Result<Self> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= palette) {
            return Err(Error::ColorOutOfRange {
                vertex,
                color,
                palette,
            });
        }
        Ok(Coloring { palette, colors })
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }
}

/// A coloring given as a function of vertex labels.
pub trait LabelColoring {
    fn palette(&self) -> u32;
    fn color_of(&self, v: &VertexLabel) -> u32;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    Level2,
    Recursive,
    Bipartite,
}

#[derive(Clone, Debug)]
pub struct GasketColoring {
    scheme: Scheme,
    depth: usize,
    base_colors: Vec<u32>,
    k: u32,
}

impl GasketColoring {
    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// The base coloring `f`.
    pub fn base_colors(&self) -> &[u32] {
        &self.base_colors
    }

    /// Palette of `f`.
    pub fn base_palette(&self) -> u32 {
        self.k
    }

    pub fn materialize(&self, m: &MaterializedGraph) -> Coloring {
        assert_eq!(m.depth(), self.depth, "coloring built for a different depth");
        Coloring {
            palette: self.palette(),
            colors: m.labels().map(|l| self.color_of(&l)).collect(),
        }
    }

    fn sum(&self, a: u8, b: u8) -> u32 {
        (self.base_colors[a as usize] + self.base_colors[b as usize]) % self.k
    }

    fn extra(&self) -> u32 {
        match self.scheme {
            Scheme::Bipartite => 0,
            _ => self.k,
        }
    }

    /// Color of `v` read as a vertex of `S[G,depth]`.
    fn color_at(&self, v: &VertexLabel, depth: usize) -> u32 {
        let f = &self.base_colors;
        // `skip` leading letters have been stripped: we are inside nested copies
        let mut skip = v.depth() - depth;
        loop {
            let d = v.depth() - skip;
            match v {
                VertexLabel::Plain(w) => {
                    let rest = &w.0[skip..];
                    match d {
                        1 => return f[rest[0] as usize],
                        2 => return self.sum(rest[0], rest[1]),
                        _ => skip += 1,
                    }
                }
                VertexLabel::Contracted { prefix, pair, .. } => {
                    if skip < prefix.len() {
                        skip += 1;
                        continue;
                    }
                    if d == 2 {
                        return self.sum(pair.0, pair.1);
                    }
                    if self.scheme == Scheme::Bipartite {
                        // both expanded forms carry color 0 in their own copies
                        for corner in [pair.0, pair.1] {
                            let corner = VertexLabel::Plain(Word(vec![corner; d - 1]));
                            assert_eq!(self.color_at(&corner, d - 1), 0, "expanded forms disagree in color");
                        }
                    }
                    return self.extra();
                }
            }
        }
    }
}

impl LabelColoring for GasketColoring {
    fn palette(&self) -> u32 {
        match self.scheme {
            Scheme::Level2 => self.k,
            Scheme::Recursive if self.depth >= 3 => self.k + 1,
            Scheme::Recursive => self.k,
            Scheme::Bipartite => 2,
        }
    }

    fn color_of(&self, v: &VertexLabel) -> u32 {
        debug_assert_eq!(v.depth(), self.depth);
        self.color_at(v, self.depth)
    }
}

fn check_base_coloring(g: &BaseGraph, f: &Coloring) -> Result<()> {
    if f.len() != g.order() {
        return Err(Error::PartialColoring {
            expected: g.order(),
            got: f.len(),
        });
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| f.color(u) == f.color(v)) {
        return Err(Error::NotProper(u + 1, v + 1));
    }
    Ok(())
}

/// `xy ↦ f(x)+f(y) mod k` on `S[G,2]`.
pub fn color_level2(g: &BaseGraph, f: &Coloring) -> Result<GasketColoring> {
    check_base_coloring(g, f)?;
    Ok(GasketColoring {
        scheme: Scheme::Level2,
        depth: 2,
        base_colors: f.colors.clone(),
        k: f.palette.max(1),
    })
}

/// The `χ(G)+1` construction for any depth.
pub fn color_recursive(g: &BaseGraph, t: usize) -> Result<GasketColoring> {
    if t == 0 {
        return Err(Error::ZeroDepth);
    }
    let k = g.chromatic_number();
    let f = g.find_coloring(k).expect("a chi-coloring exists");
    Ok(GasketColoring {
        scheme: Scheme::Recursive,
        depth: t,
        base_colors: f,
        k: k as u32,
    })
}

/// Proper 2-coloring of `S[G,t]` for bipartite `G` with at least one edge.
pub fn color_bipartite(g: &BaseGraph, t: usize) -> Result<GasketColoring> {
    if t == 0 {
        return Err(Error::ZeroDepth);
    }
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let f = g.two_coloring().ok_or(Error::NotBipartite)?;
    Ok(GasketColoring {
        scheme: Scheme::Bipartite,
        depth: t,
        base_colors: f,
        k: 2,
    })
}

/// Optimal coloring of an explicit graph from the exact solver.
pub fn exact_coloring<A: Adjacency + ?Sized>(g: &A) -> Coloring {
    let (k, colors) = solve::optimal_coloring(g, 0, &mut || false).expect("no abort hook");
    Coloring {
        palette: k as u32,
        colors,
    }
}

pub const MAX_REPORTED_VIOLATIONS: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperReport {
    pub proper: bool,
    pub colors_used: usize,
    /// Monochromatic edges, each counted once.
    pub violation_count: usize,
    /// The first [`MAX_REPORTED_VIOLATIONS`] monochromatic edges.
    pub violations: Vec<(VertexLabel, VertexLabel)>,
}

fn check_indexed<A: Adjacency + ?Sized>(
    g: &A,
    c: &Coloring,
    label_of: impl Fn(usize) -> VertexLabel,
) -> Result<ProperReport> {
    if c.len() != g.order() {
        return Err(Error::PartialColoring {
            expected: g.order(),
            got: c.len(),
        });
    }
    let mut violations = Vec::new();
    let mut violation_count = 0;
    for u in 0..g.order() {
        for &v in g.neighbors(u) {
            let v = v as usize;
            if v > u && c.color(u) == c.color(v) {
                violation_count += 1;
                if violations.len() < MAX_REPORTED_VIOLATIONS {
                    violations.push((label_of(u), label_of(v)));
                }
            }
        }
    }
    Ok(ProperReport {
        proper: violation_count == 0,
        colors_used: c.colors_used(),
        violation_count,
        violations,
    })
}

/// Checks every edge of a materialized graph.
pub fn verify_proper(m: &MaterializedGraph, c: &Coloring) -> Result<ProperReport> {
    check_indexed(m, c, |v| m.label(v))
}

pub fn verify_base(g: &BaseGraph, c: &Coloring) -> Result<ProperReport> {
    check_indexed(g, c, |v| VertexLabel::Plain(Word(vec![v as u8])))
}

/// Checks every neighbor set produced by the oracle; the graph is never
/// materialized. Colors outside the palette are reported as errors.
pub fn verify_proper_oracle<C: LabelColoring + ?Sized>(
    ctx: &OracleContext,
    c: &C,
    cap: u64,
) -> Result<ProperReport> {
    let palette = c.palette();
    let mut used = BTreeSet::new();
    let mut violations = Vec::new();
    let mut violation_count = 0;
    for (index, u) in label::enumerate_labels(ctx.base(), ctx.depth(), cap)?.enumerate() {
        let cu = c.color_of(&u);
        if cu >= palette {
            return Err(Error::ColorOutOfRange {
                vertex: index,
                color: cu,
                palette,
            });
        }
        used.insert(cu);
        for v in ctx.neighbors_unchecked(&u) {
            if v > u && c.color_of(&v) == cu {
                violation_count += 1;
                if violations.len() < MAX_REPORTED_VIOLATIONS {
                    violations.push((u.clone(), v));
                }
            }
        }
    }
    Ok(ProperReport {
        proper: violation_count == 0,
        colors_used: used.len(),
        violation_count,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::build_gasket;
    use crate::label::parse_label;

    const CAP: u64 = 1 << 20;

    fn k3() -> BaseGraph {
        BaseGraph::complete(3).unwrap()
    }

    #[test]
    fn level2_on_k3() {
        let g = k3();
        let f = Coloring::new(3, vec![0, 1, 2]).unwrap();
        let c = color_level2(&g, &f).unwrap();
        let expect = [("1.1", 0), ("2.2", 2), ("3.3", 1), ("{1,2}@2", 1), ("{1,3}@2", 2), ("{2,3}@2", 0)];
        for (s, color) in expect {
            assert_eq!(c.color_of(&parse_label(s, &g, 2).unwrap()), color, "{s}");
        }
        let m = build_gasket(&g, 2, CAP).unwrap();
        let r = verify_proper(&m, &c.materialize(&m)).unwrap();
        assert!(r.proper);
        assert_eq!(r.colors_used, 3);
    }

    #[test]
    fn level2_small_bases() {
        let p3 = BaseGraph::path(3).unwrap();
        let c = color_level2(&p3, &Coloring::new(2, vec![0, 1, 0]).unwrap()).unwrap();
        let m = build_gasket(&p3, 2, CAP).unwrap();
        assert_eq!(m.order(), 7);
        assert!(verify_proper(&m, &c.materialize(&m)).unwrap().proper);

        let k2 = BaseGraph::complete(2).unwrap();
        let c = color_level2(&k2, &Coloring::new(2, vec![0, 1]).unwrap()).unwrap();
        let m = build_gasket(&k2, 2, CAP).unwrap();
        assert_eq!(c.materialize(&m).colors(), &[0, 1, 0]);
    }

    #[test]
    fn level2_rejects_improper_base() {
        let f = Coloring::new(3, vec![0, 0, 1]).unwrap();
        assert_eq!(color_level2(&k3(), &f).unwrap_err(), Error::NotProper(1, 2));
        let short = Coloring::new(3, vec![0, 1]).unwrap();
        assert!(matches!(color_level2(&k3(), &short), Err(Error::PartialColoring { .. })));
        assert!(matches!(Coloring::new(2, vec![0, 2]), Err(Error::ColorOutOfRange { .. })));
    }

    #[test]
    fn recursive_on_k3_depth3() {
        let g = k3();
        let c = color_recursive(&g, 3).unwrap();
        let m = build_gasket(&g, 3, CAP).unwrap();
        let col = c.materialize(&m);
        assert!(verify_proper(&m, &col).unwrap().proper);
        assert_eq!(c.palette(), 4);
        let extra: Vec<String> = (0..m.order())
            .filter(|&v| col.color(v) == 3)
            .map(|v| m.label(v).to_string())
            .collect();
        assert_eq!(extra, ["{1,2}@3", "{1,3}@3", "{2,3}@3"]);
    }

    #[test]
    fn recursive_depth2_matches_level2() {
        let g = BaseGraph::cycle(5).unwrap();
        let f = Coloring::new(3, g.find_coloring(3).unwrap()).unwrap();
        let a = color_recursive(&g, 2).unwrap();
        let b = color_level2(&g, &f).unwrap();
        for l in label::enumerate_labels(&g, 2, CAP).unwrap() {
            assert_eq!(a.color_of(&l), b.color_of(&l));
        }
        assert_eq!(a.palette(), 3);
    }

    #[test]
    fn bipartite_examples() {
        let k2 = BaseGraph::complete(2).unwrap();
        let m = build_gasket(&k2, 3, CAP).unwrap();
        let col = color_bipartite(&k2, 3).unwrap().materialize(&m);
        assert_eq!(m.order(), 5);
        assert_eq!(col.colors(), &[0, 1, 0, 1, 0]);

        let p3 = BaseGraph::path(3).unwrap();
        let m = build_gasket(&p3, 3, CAP).unwrap();
        let r = verify_proper(&m, &color_bipartite(&p3, 3).unwrap().materialize(&m)).unwrap();
        assert!(r.proper);
        assert_eq!(r.colors_used, 2);

        let c4 = BaseGraph::cycle(4).unwrap();
        let m = build_gasket(&c4, 2, CAP).unwrap();
        assert_eq!(m.size(), 16);
        assert!(verify_proper(&m, &color_bipartite(&c4, 2).unwrap().materialize(&m)).unwrap().proper);
    }

    #[test]
    fn bipartite_errors() {
        assert_eq!(color_bipartite(&k3(), 2).unwrap_err(), Error::NotBipartite);
        assert_eq!(color_bipartite(&BaseGraph::edgeless(3).unwrap(), 2).unwrap_err(), Error::Edgeless);
    }

    #[test]
    fn constant_coloring_violates_every_edge() {
        let m = build_gasket(&k3(), 2, CAP).unwrap();
        let c = Coloring::new(1, vec![0; 6]).unwrap();
        let r = verify_proper(&m, &c).unwrap();
        assert!(!r.proper);
        assert_eq!(r.violation_count, 9);
        assert_eq!(r.violations.len(), 9);
        assert!(matches!(
            verify_proper(&m, &Coloring::new(1, vec![0; 5]).unwrap()),
            Err(Error::PartialColoring { .. })
        ));
    }

    #[test]
    fn oracle_mode_agrees() {
        let g = BaseGraph::from_edge_list(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        let ctx = OracleContext::new(g.clone(), 3).unwrap();
        let c = color_recursive(&g, 3).unwrap();
        let r = verify_proper_oracle(&ctx, &c, CAP).unwrap();
        let m = build_gasket(&g, 3, CAP).unwrap();
        assert_eq!(r, verify_proper(&m, &c.materialize(&m)).unwrap());
    }

    use alloc::string::{String, ToString};
}
