//! Double cycles with leaves, and covers of `K_{m,n}` by them.
//!
//! A double cycle runs through blacks `b_0, ..., b_{k-1}` and replaces each cycle edge
//! `b_i b_{i+1}` by a 4-cycle through two whites. In the embedding one white of each
//! pair sits inside the black cycle and one outside, so every white sees every black on
//! either the inner or the outer face. Leaves go into the inner face.

use serde::Serialize;

use super::ConstructionError;
use crate::embedding::{Dart, PlaneDrawing, RotationSystem};
use crate::graph::{EdgeSet, Graph};

/// One double cycle on canonical `K_{m,n}` ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCycle {
    /// Black vertices in cycle order.
    pub black_cycle: Vec<usize>,
    /// For cycle edge `i` (between positions `i` and `i+1`), the inner and outer white.
    /// The outer white is `None` where a white was removed.
    pub quad_whites: Vec<(usize, Option<usize>)>,
    /// Leaf whites of the black at each cycle position.
    pub leaves: Vec<Vec<usize>>,
    /// Cycle edge whose 4-cycle lost its outer white, if any.
    pub removed_white: Option<usize>,
}

impl DoubleCycle {
    pub fn len(&self) -> usize {
        self.black_cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.black_cycle.is_empty()
    }

    /// Edges as sorted `(black, white)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for (i, &(x, y)) in self.quad_whites.iter().enumerate() {
            let (a, b) = (self.black_cycle[i], self.black_cycle[(i + 1) % k]);
            out.push((a, x));
            out.push((b, x));
            if let Some(y) = y {
                out.push((a, y));
                out.push((b, y));
            }
        }
        for (i, ls) in self.leaves.iter().enumerate() {
            out.extend(ls.iter().map(|&w| (self.black_cycle[i], w)));
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Degree of the black at each position.
    pub fn black_degrees(&self) -> Vec<usize> {
        let k = self.len();
        (0..k)
            .map(|i| {
                let prev = self.quad_whites[(i + k - 1) % k];
                let next = self.quad_whites[i];
                let q = |p: (usize, Option<usize>)| 1 + p.1.is_some() as usize;
                q(prev) + q(next) + self.leaves[i].len()
            })
            .collect()
    }

    fn check(&self) -> Result<(), ConstructionError> {
        let k = self.len();
        if k < 2 || self.quad_whites.len() != k || self.leaves.len() != k {
            return Err(ConstructionError::Invalid(
                "double cycle needs k >= 2 and one white pair per cycle edge".into(),
            ));
        }
        let mut whites: Vec<usize> = self.quad_whites.iter().flat_map(|&(x, y)| std::iter::once(x).chain(y)).collect();
        whites.extend(self.leaves.iter().flatten());
        let total = whites.len();
        whites.sort_unstable();
        whites.dedup();
        let mut blacks = self.black_cycle.clone();
        blacks.sort_unstable();
        blacks.dedup();
        if whites.len() != total || blacks.len() != k || whites.iter().any(|w| blacks.binary_search(w).is_ok()) {
            return Err(ConstructionError::Invalid("double cycle reuses a vertex".into()));
        }
        Ok(())
    }
}

/// A family of double cycles covering `K_{m,n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCycleCover {
    pub m: usize,
    pub n: usize,
    /// Black degrees per cycle, by cycle position.
    pub degree_sequences: Vec<Vec<usize>>,
    /// Starting white index (or black shift) per cycle.
    pub start_indices: Vec<usize>,
    pub cycles: Vec<DoubleCycle>,
}

impl DoubleCycleCover {
    /// Union of the cycles' edges inside `K_{m,n}`.
    pub fn covered(&self, host: &Graph) -> EdgeSet {
        let mut set = EdgeSet::new(host.m());
        for c in &self.cycles {
            for (u, v) in c.edges() {
                if let Some(i) = host.edge_index(u, v) {
                    set.insert(i);
                }
            }
        }
        set
    }

    pub fn covers(&self, host: &Graph) -> bool {
        self.covered(host).len() == host.m()
    }
}

/// Initial black degrees `floor(i*t/m) - floor((i-1)*t/m)` for `i = 1..=m`.
pub fn spread_degrees(m: usize, total: usize) -> Vec<usize> {
    (1..=m).map(|i| i * total / m - (i - 1) * total / m).collect()
}

/// Cover of `K_{m,n}`, `n >= 2m`, by `ceil(mn / (2m+n))` double cycles with leaves.
pub fn double_cycle_cover(m: usize, n: usize) -> Result<DoubleCycleCover, ConstructionError> {
    if m < 3 {
        return Err(ConstructionError::TooSmall { what: "black count", min: 3, got: m });
    }
    if n == 2 * m - 1 {
        return Err(ConstructionError::Invalid("n = 2m-1: use double_cycle_cover_minus_one".into()));
    }
    if n < 2 * m {
        return Err(ConstructionError::Invalid("n <= 2m-2: use the outerplanar cover".into()));
    }
    let ell = (m * n).div_ceil(2 * m + n);
    let mut degrees = spread_degrees(m, 2 * m + n);
    let mut s = 0usize;
    let mut cover =
        DoubleCycleCover { m, n, degree_sequences: Vec::new(), start_indices: Vec::new(), cycles: Vec::new() };
    for _ in 0..ell {
        let white = |j: usize| m + j % n;
        let mut starts = Vec::with_capacity(m);
        let mut at = s;
        for &d in &degrees {
            starts.push(at);
            at += d - 2;
        }
        // The last two whites of each block are shared with the next black.
        let quad_whites: Vec<_> = (0..m)
            .map(|i| {
                let first = if i + 1 == m { s + n } else { starts[i + 1] };
                (white(first), Some(white(first + 1)))
            })
            .collect();
        let leaves = (0..m).map(|i| (starts[i] + 2..starts[i] + degrees[i] - 2).map(white).collect()).collect();
        cover.cycles.push(DoubleCycle { black_cycle: (0..m).collect(), quad_whites, leaves, removed_white: None });
        cover.degree_sequences.push(degrees.clone());
        cover.start_indices.push(s % n);
        s += degrees[0];
        degrees.rotate_left(1);
    }
    Ok(cover)
}

/// Cover of `K_{m,2m-1}` by `ceil(m/2)` double cycles with one white removed.
pub fn double_cycle_cover_minus_one(m: usize) -> Result<DoubleCycleCover, ConstructionError> {
    if m < 3 {
        return Err(ConstructionError::TooSmall { what: "black count", min: 3, got: m });
    }
    let n = 2 * m - 1;
    // Pair p holds whites 2p and 2p+1 between positions p and p+1; the last pair has
    // only white 2m-2.
    let quad_whites: Vec<_> =
        (0..m).map(|p| if p + 1 == m { (m + 2 * p, None) } else { (m + 2 * p, Some(m + 2 * p + 1)) }).collect();
    let mut cover =
        DoubleCycleCover { m, n, degree_sequences: Vec::new(), start_indices: Vec::new(), cycles: Vec::new() };
    for c in 0..m.div_ceil(2) {
        let cycle = DoubleCycle {
            black_cycle: (0..m).map(|p| (p + 2 * c) % m).collect(),
            quad_whites: quad_whites.clone(),
            leaves: vec![Vec::new(); m],
            removed_white: Some(m - 1),
        };
        cover.degree_sequences.push(cycle.black_degrees());
        cover.start_indices.push(2 * c % m);
        cover.cycles.push(cycle);
    }
    Ok(cover)
}

/// Embeds a double cycle on `n_total` vertices. Vertices outside the cycle are left
/// isolated; callers join them before certifying.
pub fn embed_double_cycle(c: &DoubleCycle, n_total: usize) -> Result<PlaneDrawing, ConstructionError> {
    c.check()?;
    let k = c.len();
    let mut rot = vec![Vec::new(); n_total];
    for i in 0..k {
        let b = c.black_cycle[i];
        let (xi, yi) = c.quad_whites[i];
        let (xp, yp) = c.quad_whites[(i + k - 1) % k];
        let list = &mut rot[b];
        list.extend(yi);
        list.push(xi);
        list.extend(c.leaves[i].iter().copied());
        list.push(xp);
        list.extend(yp);
        let next = c.black_cycle[(i + 1) % k];
        rot[xi] = vec![b, next];
        if let Some(y) = yi {
            rot[y] = vec![b, next];
        }
        for &l in &c.leaves[i] {
            rot[l] = vec![b];
        }
    }
    let outer = c
        .quad_whites
        .iter()
        .position(|p| p.1.is_some())
        .map(|i| Dart::new(c.black_cycle[i], c.quad_whites[i].1.unwrap()));
    let rotation = RotationSystem::new(rot).map_err(|e| ConstructionError::Invalid(e.to_string()))?;
    PlaneDrawing::new(rotation, outer).map_err(|e| ConstructionError::Invalid(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::verify_drawing;
    use crate::graph::complete_bipartite;

    #[test]
    fn fig_degree_sequence() {
        let c = double_cycle_cover(9, 24).unwrap();
        assert_eq!(c.cycles.len(), 6);
        assert_eq!(c.degree_sequences[0], vec![4, 5, 5, 4, 5, 5, 4, 5, 5]);
        assert!(c.covers(&complete_bipartite(9, 24).unwrap()));
    }

    #[test]
    fn small_covers() {
        for (m, n, ell) in [(3, 6, 2), (4, 8, 2)] {
            let c = double_cycle_cover(m, n).unwrap();
            assert_eq!(c.cycles.len(), ell);
            assert!(c.degree_sequences[0].iter().all(|&d| d == 4));
            assert!(c.covers(&complete_bipartite(m, n).unwrap()));
        }
        assert!(double_cycle_cover(3, 5).is_err());
        assert!(double_cycle_cover(3, 4).is_err());
    }

    #[test]
    fn minus_one_covers() {
        for (m, ell) in [(3, 2), (4, 2), (5, 3)] {
            let c = double_cycle_cover_minus_one(m).unwrap();
            assert_eq!(c.cycles.len(), ell);
            let host = complete_bipartite(m, 2 * m - 1).unwrap();
            assert!(c.covers(&host));
            for cyc in &c.cycles {
                let mut degs = cyc.black_degrees();
                degs.sort();
                assert_eq!(&degs[..2], &[3, 3]);
                assert!(degs[2..].iter().all(|&d| d == 4));
            }
        }
    }

    #[test]
    fn cycles_embed_admissibly() {
        let host = complete_bipartite(3, 6).unwrap();
        for cyc in &double_cycle_cover(3, 6).unwrap().cycles {
            let d = embed_double_cycle(cyc, 9).unwrap();
            let r = verify_drawing(&host, &d).unwrap();
            assert!(r.passes(), "{r:?}");
        }
        let host = complete_bipartite(4, 7).unwrap();
        for cyc in &double_cycle_cover_minus_one(4).unwrap().cycles {
            let d = embed_double_cycle(cyc, 11).unwrap();
            assert!(verify_drawing(&host, &d).unwrap().passes());
        }
    }

    #[test]
    fn two_black_double_cycle() {
        let cyc = DoubleCycle {
            black_cycle: vec![0, 1],
            quad_whites: vec![(2, Some(3)), (4, Some(5))],
            leaves: vec![vec![6], vec![]],
            removed_white: None,
        };
        let host = complete_bipartite(2, 5).unwrap();
        let d = embed_double_cycle(&cyc, 7).unwrap();
        assert!(verify_drawing(&host, &d).unwrap().passes());
    }
}
