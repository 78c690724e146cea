use std::collections::HashMap;

use proptest::prelude::*;
use uncrossed::embedding::{is_outerplanar, is_planar_graph, outerplanar_embedding, planar_embedding};
use uncrossed::{Graph, RotationSystem};

/// Adjacency bitmasks of a simple graph on at most 8 vertices.
type Adj = Vec<u8>;

fn adj_of(g: &Graph) -> Adj {
    let mut a = vec![0u8; g.n()];
    for &(u, v) in g.edges() {
        a[u] |= 1 << v;
        a[v] |= 1 << u;
    }
    a
}

fn has_clique(a: &Adj, k: usize) -> bool {
    let n = a.len();
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .any(|s| (0..n).filter(|&v| s >> v & 1 == 1).all(|v| (a[v] as u32 | 1 << v) & s == s))
}

/// Does the graph contain `K_{p,q}` as a subgraph?
fn has_biclique(a: &Adj, p: usize, q: usize) -> bool {
    let n = a.len();
    (0u32..1 << n).filter(|s| s.count_ones() as usize == p).any(|s| {
        let common = (0..n).filter(|&v| s >> v & 1 == 1).fold(u32::MAX >> (32 - n), |acc, v| acc & a[v] as u32);
        (common & !s).count_ones() as usize >= q
    })
}

fn contract(a: &Adj, u: usize, v: usize) -> Adj {
    // Merge v into u, then drop v and shift higher vertices down.
    let n = a.len();
    let mut merged: Vec<u8> = a.clone();
    merged[u] |= merged[v];
    for row in merged.iter_mut() {
        if *row >> v & 1 == 1 {
            *row = (*row & !(1 << v)) | 1 << u;
        }
    }
    merged[u] &= !(1 << u);
    let squeeze = |mask: u8| -> u8 {
        let low = mask & ((1u16 << v) - 1) as u8;
        let high = (mask as u16 >> (v + 1)) << v;
        low | high as u8
    };
    (0..n).filter(|&w| w != v).map(|w| squeeze(merged[w])).collect()
}

/// Minor test by contraction: `H` is a minor of `G` iff some contraction of `G`
/// contains `H` as a subgraph.
fn has_minor(a: &Adj, contains: &dyn Fn(&Adj) -> bool, memo: &mut HashMap<Adj, bool>) -> bool {
    if let Some(&r) = memo.get(a) {
        return r;
    }
    let mut r = contains(a);
    let n = a.len();
    'outer: for u in 0..n {
        for v in u + 1..n {
            if !r && a[u] >> v & 1 == 1 && has_minor(&contract(a, u, v), contains, memo) {
                r = true;
                break 'outer;
            }
        }
    }
    memo.insert(a.clone(), r);
    r
}

fn planar_by_minors(g: &Graph) -> bool {
    let a = adj_of(g);
    !has_minor(&a, &|a: &Adj| has_clique(a, 5) || has_biclique(a, 3, 3), &mut HashMap::new())
}

fn outerplanar_by_minors(g: &Graph) -> bool {
    let a = adj_of(g);
    !has_minor(&a, &|a: &Adj| has_clique(a, 4) || has_biclique(a, 2, 3), &mut HashMap::new())
}

/// Euler's formula per component: `n - e + f = 2c`, each isolated vertex having its own face.
fn euler_per_component(rot: &RotationSystem) -> bool {
    rot.n() + rot.trace_faces().len() == rot.edge_count() + 2 * rot.component_count()
}

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
    Graph::new(n, edges).unwrap()
}

#[test]
fn every_graph_on_six_vertices() {
    for mask in 0u32..1 << 15 {
        let g = graph_from_mask(6, mask);
        assert_eq!(is_planar_graph(&g), planar_by_minors(&g), "{:?}", g.edges());
        assert_eq!(is_outerplanar(&g), outerplanar_by_minors(&g), "{:?}", g.edges());
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::bits::u32::between(0, pairs.max(1)))
        })
        .prop_map(|(n, mask)| graph_from_mask(n, mask))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn planarity_matches_minor_oracle_on_seven_vertices(g in arb_graph(7)) {
        prop_assert_eq!(is_planar_graph(&g), planar_by_minors(&g));
        prop_assert_eq!(is_outerplanar(&g), outerplanar_by_minors(&g));
    }

    #[test]
    fn embeddings_are_planar(g in arb_graph(8)) {
        if let Some(rot) = planar_embedding(&g) {
            prop_assert!(euler_per_component(&rot));
            prop_assert_eq!(rot.edges(), g.edges().to_vec());
        }
        if let Some(emb) = outerplanar_embedding(&g) {
            prop_assert!(euler_per_component(emb.rotation()));
            // Every vertex sits on the outer face of its component.
            for v in 0..g.n() {
                if let Some(d) = emb.outer_dart(v) {
                    let walk = emb.rotation().face_walk(d);
                    prop_assert!(walk.iter().any(|x| x.tail == v));
                }
            }
        }
    }
}
