//! Extremal drawings and uncrossed collections.

mod cover;
mod ladder;
mod outerplanar_cover;
mod wheel;

use thiserror::Error;

pub use cover::{
    double_cycle_cover, double_cycle_cover_minus_one, embed_double_cycle, spread_degrees, DoubleCycle, DoubleCycleCover,
};
pub use ladder::{ladder_edges, ladder_with_leaves};
pub use outerplanar_cover::{outerplanar_cover_parts, outerplanar_part_count};
pub use wheel::{wheel_drawing, wheel_on};

use crate::certify::UncrossedCertificate;
use crate::embedding::{
    connect_through_outer_face, outerplanar_embedding, planar_drawing, OuterplanarEmbedding, PlaneDrawing,
};
use crate::graph::{complete_bipartite, complete_graph, EdgeSet, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall { what: &'static str, min: usize, got: usize },
    #[error("{0}")]
    Invalid(String),
    #[error("part {0} is not outerplanar")]
    NotOuterplanar(usize),
    #[error("parts leave {0} host edges uncovered")]
    NotCovering(usize),
    #[error("host graph is disconnected")]
    DisconnectedHost,
    #[error("decomposition not found for K_{{{m},{n}}}")]
    DecompositionNotFound { m: usize, n: usize },
}

/// The two-wheel uncrossed collection of `K_5`: hub 4 with rim `(0,1,2,3)`, then
/// hub 0 with rim `(1,2,4,3)`.
pub fn k5_example() -> UncrossedCertificate {
    let host = complete_graph(5).expect("K_5");
    let d1 = wheel_on(5, 4, &[0, 1, 2, 3]).expect("wheel");
    let d2 = wheel_on(5, 0, &[1, 2, 4, 3]).expect("wheel");
    UncrossedCertificate::new(host, vec![d1, d2])
}

/// Turns an outerplanar embedding of part of `host` into a connected admissible drawing.
pub fn drawing_from_outerplanar(host: &Graph, emb: OuterplanarEmbedding) -> Result<PlaneDrawing, ConstructionError> {
    connect_through_outer_face(host, emb).map_err(|_| ConstructionError::DisconnectedHost)
}

/// One drawing per part: each part's outerplanar embedding, joined into a connected
/// spanning drawing through outer faces. The parts must cover the host's edges.
pub fn collection_from_outerplanar_decomposition(
    g: &Graph,
    parts: &[EdgeSet],
) -> Result<UncrossedCertificate, ConstructionError> {
    if !g.is_connected() {
        return Err(ConstructionError::DisconnectedHost);
    }
    let mut union = EdgeSet::new(g.m());
    let mut drawings = Vec::with_capacity(parts.len());
    for (k, part) in parts.iter().enumerate() {
        let sub = g.spanning_subgraph(part);
        let emb = outerplanar_embedding(&sub).ok_or(ConstructionError::NotOuterplanar(k))?;
        drawings.push(drawing_from_outerplanar(g, emb)?);
        union.union_with(part);
    }
    let missing = g.m() - union.len();
    if missing > 0 {
        return Err(ConstructionError::NotCovering(missing));
    }
    Ok(UncrossedCertificate::new(g.clone(), drawings))
}

/// An uncrossed collection of `K_{m,n}` of size `unc(K_{m,n})`.
///
/// Parts are `min(m,n) <= 2`: one planar drawing; `n <= 2m-2`: an outerplanar cover;
/// `n = 2m-1` and `n >= 2m`: double cycle covers, one drawing per cycle.
pub fn bipartite_uncrossed_collection(m: usize, n: usize) -> Result<UncrossedCertificate, ConstructionError> {
    if m == 0 || n == 0 {
        return Err(ConstructionError::TooSmall { what: "part size", min: 1, got: 0 });
    }
    if m > n {
        return Err(ConstructionError::Invalid(format!("need m <= n, got ({m}, {n})")));
    }
    let host = complete_bipartite(m, n).expect("positive parts");
    if m <= 2 {
        let d =
            planar_drawing(&host).ok_or(ConstructionError::Invalid("K_{m,n} with m <= 2 should be planar".into()))?;
        return Ok(UncrossedCertificate::new(host, vec![d]));
    }
    if n <= 2 * m - 2 {
        let parts = outerplanar_cover_parts(m, n)?;
        let sets: Vec<EdgeSet> =
            parts.iter().map(|p| EdgeSet::from_pairs(&host, p.iter().copied()).expect("bipartite edges")).collect();
        return collection_from_outerplanar_decomposition(&host, &sets).map_err(|e| match e {
            ConstructionError::NotOuterplanar(_) | ConstructionError::NotCovering(_) => {
                ConstructionError::DecompositionNotFound { m, n }
            }
            other => other,
        });
    }
    let cover = if n == 2 * m - 1 { double_cycle_cover_minus_one(m)? } else { double_cycle_cover(m, n)? };
    if !cover.covers(&host) {
        return Err(ConstructionError::DecompositionNotFound { m, n });
    }
    let drawings = cover
        .cycles
        .iter()
        .map(|c| {
            let d = embed_double_cycle(c, m + n)?;
            join_isolated(&host, d)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(UncrossedCertificate::new(host, drawings))
}

/// Attaches vertices missing from a double-cycle drawing. A double cycle on all
/// blacks sees every white on the inner or outer face, so a missing white can hang
/// from any black as a pendant in the outer face.
fn join_isolated(host: &Graph, d: PlaneDrawing) -> Result<PlaneDrawing, ConstructionError> {
    let outer = d.outer_dart();
    let mut rotation = d.into_rotation();
    let isolated: Vec<usize> = (0..host.n()).filter(|&v| rotation.degree(v) == 0).collect();
    if !isolated.is_empty() {
        let start = outer.ok_or(ConstructionError::DisconnectedHost)?;
        let walk = rotation.face_walk(start);
        for v in isolated {
            let dart = walk.iter().find(|d| host.has_edge(d.head, v)).ok_or(ConstructionError::DisconnectedHost)?;
            rotation.insert_after(dart.head, Some(dart.tail), v);
            rotation.insert_after(v, None, dart.head);
        }
    }
    PlaneDrawing::new(rotation, outer).map_err(|e| ConstructionError::Invalid(e.to_string()))
}
