use uncrossed::certify::{verify_certificate, verify_drawing};
use uncrossed::formulas::*;
use uncrossed::graph::{complete_bipartite, complete_graph, cycle_graph, path_graph};
use uncrossed::oracle::*;
use uncrossed::Graph;

fn opts() -> OracleOptions {
    OracleOptions::default()
}

#[test]
fn h_matches_closed_forms() {
    for n in [4u64, 5] {
        assert_eq!(exact_h(&complete_graph(n as usize).unwrap(), opts()).unwrap() as u64, h_complete(n).unwrap());
    }
    for (m, n) in [(2u64, 2u64), (2, 3), (3, 3)] {
        let g = complete_bipartite(m as usize, n as usize).unwrap();
        assert_eq!(exact_h(&g, opts()).unwrap() as u64, h_complete_bipartite(m, n).unwrap(), "({m},{n})");
    }
}

#[test]
fn ecr_values() {
    assert_eq!(exact_ecr(&complete_graph(5).unwrap(), opts()).unwrap(), 2);
    assert_eq!(exact_ecr(&complete_graph(4).unwrap(), opts()).unwrap(), 0);
    assert_eq!(exact_ecr(&complete_bipartite(3, 3).unwrap(), opts()).unwrap(), 2);
}

#[test]
fn mus_thresholds() {
    let k5 = complete_graph(5).unwrap();
    assert!(max_uncrossed_subgraph(&k5, 8, opts()).unwrap());
    assert!(!max_uncrossed_subgraph(&k5, 9, opts()).unwrap());
    let c6 = cycle_graph(6).unwrap();
    assert!(max_uncrossed_subgraph(&c6, 6, opts()).unwrap());
}

fn check_unc(g: &Graph, expected: u64) {
    let sol = exact_unc(g, opts()).unwrap();
    assert_eq!(sol.value as u64, expected, "{:?}", g.edges());
    assert_eq!(sol.certificate.len(), sol.value);
    assert!(verify_certificate(&sol.certificate).unwrap().passes());
    let h = exact_h(g, opts()).unwrap() as u64;
    assert!(sol.value as u64 >= (g.m() as u64).div_ceil(h));
    if g.n() >= 3 {
        assert!(sol.value as u64 >= unc_lower_bound_density(g.n() as u64, g.m() as u64).unwrap_or(0));
    }
}

#[test]
fn unc_matches_closed_forms() {
    for n in [3u64, 4, 5] {
        check_unc(&complete_graph(n as usize).unwrap(), unc_complete(n).unwrap());
    }
    for k in 1..=4u64 {
        check_unc(&complete_bipartite(2, k as usize).unwrap(), unc_complete_bipartite(2, k).unwrap());
    }
    check_unc(&complete_bipartite(3, 3).unwrap(), unc_complete_bipartite(3, 3).unwrap());
    check_unc(&path_graph(5).unwrap(), 1);
}

fn is_wheel(g: &Graph, pairs: &[(usize, usize)]) -> bool {
    let sub = Graph::new(g.n(), pairs.to_vec()).unwrap();
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| sub.degree(v)).collect();
    let hub = (0..g.n()).find(|&v| sub.degree(v) == 4);
    degrees.sort_unstable();
    let Some(hub) = hub else { return false };
    // The rim must be 2-regular on four vertices, which forces a 4-cycle.
    let rim: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(a, b)| a != hub && b != hub).collect();
    let rim_graph = Graph::new(g.n(), rim).unwrap();
    degrees == vec![3, 3, 3, 3, 4] && (0..g.n()).filter(|&v| v != hub).all(|v| rim_graph.degree(v) == 2)
}

#[test]
fn maximum_members_of_k5_are_wheels() {
    let k5 = complete_graph(5).unwrap();
    let fam = enumerate_admissible(&k5, opts()).unwrap();
    let best = fam.members.iter().map(|m| m.edges.len()).max().unwrap();
    assert_eq!(best, 8);
    let maximum: Vec<_> = fam.members.iter().filter(|m| m.edges.len() == 8).collect();
    // Five hubs, three 4-cycles on the remaining vertices each.
    assert_eq!(maximum.len(), 15);
    for m in maximum {
        let pairs: Vec<_> = m.edges.pairs(&k5).collect();
        assert!(is_wheel(&k5, &pairs), "{pairs:?}");
    }
}

#[test]
fn members_are_verified_and_down_closed() {
    let hosts = [
        complete_graph(4).unwrap(),
        complete_bipartite(2, 4).unwrap(),
        complete_bipartite(3, 3).unwrap(),
        cycle_graph(7).unwrap(),
    ];
    for g in &hosts {
        assert!(g.m() <= 9);
        let fam = enumerate_admissible(g, opts()).unwrap();
        for (i, a) in fam.members.iter().enumerate() {
            assert!(verify_drawing(g, &a.witness).unwrap().passes());
            assert_eq!(a.witness.drawn_edges(g).unwrap(), a.edges);
            for (j, b) in fam.members.iter().enumerate() {
                if i != j && fam.maximal_only {
                    assert!(!a.edges.is_subset(&b.edges), "member {i} inside member {j}");
                }
            }
            for e in a.edges.iter() {
                let mut smaller = a.edges.clone();
                smaller.remove(e);
                if !g.spanning_subgraph(&smaller).is_connected() {
                    continue;
                }
                let w = admissible_witness(g, &smaller).expect("deleting an edge keeps admissibility");
                assert!(verify_drawing(g, &w).unwrap().passes());
            }
        }
    }
}

#[test]
fn refusals_are_explicit() {
    let k7 = complete_graph(7).unwrap();
    assert!(matches!(exact_unc(&k7, opts()), Err(OracleError::TooLarge { edges: 21, cap: 12, .. })));
    let split = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
    assert_eq!(exact_h(&split, opts()), Err(OracleError::Disconnected));
}
