mod common;

use common::*;
use gasket_core::{build_gasket, corners, solve};

#[test]
fn corner_recurrence_matches_exact_search() {
    for n in 2..=5 {
        for (e, g) in unlabelled_graphs(n) {
            for t in 1..=3 {
                let m = build_gasket(&g, t, 1 << 20).unwrap();
                let exact = solve::chromatic_number(&m);
                assert_eq!(corners::chromatic_number(&g, t, &mut || false).unwrap(), exact, "{e:?} t={t}");
                assert!(!corners::is_colorable(&g, t, exact - 1, &mut || false).unwrap() || exact == 1);
            }
        }
    }
}

#[test]
fn corner_tuples_are_colorings_of_the_corners() {
    // every tuple is realized by some coloring, checked by brute force on S[G,2]
    let e = [(0, 1), (1, 2), (2, 0), (2, 3)];
    let g = graph(4, &e);
    let m = build_gasket(&g, 2, 1000).unwrap();
    let corner_ids: Vec<usize> = (0..4u8).map(|a| m.vertex_of_word(&[a, a]).unwrap()).collect();
    let mut seen = std::collections::BTreeSet::new();
    let k = 3u64;
    let edges: Vec<(usize, usize)> = m.edges().collect();
    for mut code in 0..k.pow(m.order() as u32) {
        let c: Vec<u8> = (0..m.order())
            .map(|_| {
                let x = (code % k) as u8;
                code /= k;
                x
            })
            .collect();
        if edges.iter().all(|&(u, v)| c[u] != c[v]) {
            seen.insert(corner_ids.iter().map(|&v| c[v]).collect::<Vec<u8>>());
        }
    }
    assert_eq!(corners::corner_tuples(&g, 2, 3, &mut || false).unwrap(), seen);
}
