mod common;

use common::*;
use gasket_core::solve::{self, AdjList};

#[test]
fn base_invariants_against_brute_force() {
    for n in 2..=5 {
        for (e, g) in labelled_graphs(n) {
            let chi = brute_chromatic(n, &e);
            assert_eq!(g.chromatic_number(), chi, "{e:?}");
            assert_eq!(g.clique_number(), brute_clique(n, &e), "{e:?}");
            assert_eq!(g.find_coloring(chi), brute_lex_coloring(n, &e, chi), "{e:?}");
            if chi > 1 {
                assert_eq!(g.find_coloring(chi - 1), None);
            }
            assert_eq!(g.components(), components(n, &e));
            let class = g.classify();
            assert_eq!(class.acyclic, !has_cycle(n, &e), "{e:?}");
            assert_eq!(class.bipartite, chi <= 2);
            let triangles = (0..n)
                .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c))))
                .filter(|&(a, b, c)| has(&e, a, b) && has(&e, b, c) && has(&e, a, c))
                .count();
            assert_eq!(g.triangle_count(), triangles);
        }
    }
}

#[test]
fn general_solvers_against_brute_force() {
    for (e, _) in labelled_graphs(6).step_by(7) {
        let a = AdjList::from_edges(6, &e);
        let chi = brute_chromatic(6, &e);
        assert_eq!(solve::chromatic_number(&a), chi);
        assert_eq!(solve::clique_number(&a), brute_clique(6, &e));
        let clique = solve::maximum_clique(&a);
        assert!(clique.iter().all(|&u| clique.iter().all(|&v| u == v || has(&e, u, v))));
        let witness = solve::k_coloring(&a, chi, &mut || false).unwrap().unwrap();
        assert!(is_proper(&e, &witness));
        if chi > 1 {
            assert_eq!(solve::k_coloring(&a, chi - 1, &mut || false).unwrap(), None);
        }
        let greedy = solve::dsatur_greedy(&a);
        assert!(is_proper(&e, &greedy));
    }
}

#[test]
fn maximal_cliques_are_maximal_and_complete() {
    for (e, _) in labelled_graphs(5).step_by(3) {
        let a = AdjList::from_edges(5, &e);
        let listed = solve::maximal_cliques(&a, 1);
        let brute: Vec<Vec<usize>> = {
            let mut out: Vec<Vec<usize>> = (1u32..32)
                .map(|s| (0..5).filter(|&v| s >> v & 1 == 1).collect::<Vec<_>>())
                .filter(|c: &Vec<usize>| c.iter().all(|&u| c.iter().all(|&v| u == v || has(&e, u, v))))
                .filter(|c| (0..5).all(|x| c.contains(&x) || !c.iter().all(|&u| has(&e, u, x))))
                .collect();
            out.sort();
            out
        };
        assert_eq!(listed, brute, "{e:?}");
    }
}
