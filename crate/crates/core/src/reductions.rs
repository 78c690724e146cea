//! Hardness-reduction instance generators with constructive forward witnesses.
//!
//! * Maximum outerplanar subgraph to edge crossing number: add a center joined to
//!   every vertex, then replace each original edge by `M = 2|V|` parallel paths of
//!   length two (an `M`-bundle). Budget `M(|E| - k) + |V|`.
//! * Outerthickness to uncrossed number: join a new center to every vertex by a path
//!   of length two. Budget `k`.
//!
//! Witnesses draw the outerplanar part, hang the center off the outer face, and leave
//! the remaining edges undrawn with both ends on that shared face.

use serde::Serialize;
use thiserror::Error;

use crate::certify::{verify_certificate, verify_drawing, UncrossedCertificate};
use crate::embedding::{outerplanar_embedding, EmbeddingError, OuterplanarEmbedding, PlaneDrawing, RotationSystem};
use crate::graph::{EdgeSet, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("k = {k} exceeds the {edges} source edges")]
    KTooLarge { k: usize, edges: usize },
    #[error("k must be at least 1")]
    KZero,
    #[error("wrong instance kind for this witness")]
    WrongKind,
    #[error("edge set has {got} edges, fewer than k = {k}")]
    TooFewEdges { got: usize, k: usize },
    #[error("part {0} is not outerplanar")]
    NotOuterplanar(usize),
    #[error("parts leave {0} source edges uncovered")]
    NotCovering(usize),
    #[error("need at least two parts, got {0}")]
    TooFewParts(usize),
    #[error("{parts} parts exceed the budget {budget}")]
    OverBudget { parts: usize, budget: usize },
    #[error("edge set does not belong to the source graph")]
    WrongUniverse,
    #[error("source has {edges} edges; exhaustive validation is limited to {cap}")]
    TooLarge { edges: usize, cap: usize },
    #[error("{0}")]
    Embedding(#[from] EmbeddingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionKind {
    Ecr,
    Unc,
}

/// What a target vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GadgetRole {
    /// A vertex of the source graph.
    Original(usize),
    /// The center of the added star.
    Center,
    /// Middle vertex of path `path` in the bundle of source edge `edge`.
    BundleMiddle { edge: usize, path: usize },
    /// Subdivision vertex of the star path to source vertex `vertex`.
    StarMiddle { vertex: usize },
}

/// What a target edge stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeRole {
    /// Center to source vertex (direct star edge).
    Star { vertex: usize },
    /// One half of a bundle path.
    BundleHalf { edge: usize, path: usize },
    /// Source edge kept as is.
    Original { edge: usize },
    /// Star path half at the source vertex.
    StarVertexSide { vertex: usize },
    /// Star path half at the center.
    StarCenterSide { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub kind: ReductionKind,
    pub source: Graph,
    pub k: usize,
    pub target: Graph,
    pub budget: usize,
    /// Role of every target vertex.
    pub gadget_map: Vec<GadgetRole>,
    /// Bundle size (ecr only; 0 otherwise).
    pub bundle: usize,
}

impl ReductionInstance {
    pub fn center(&self) -> usize {
        self.source.n()
    }

    /// Role of target edge `(u, v)`, if it is one.
    pub fn edge_role(&self, u: usize, v: usize) -> Option<EdgeRole> {
        if !self.target.has_edge(u, v) {
            return None;
        }
        let roles = (self.gadget_map[u], self.gadget_map[v]);
        use GadgetRole::*;
        Some(match roles {
            (Original(a), Original(b)) => EdgeRole::Original { edge: self.source.edge_index(a, b)? },
            (Original(x), Center) | (Center, Original(x)) => EdgeRole::Star { vertex: x },
            (BundleMiddle { edge, path }, _) | (_, BundleMiddle { edge, path }) => EdgeRole::BundleHalf { edge, path },
            (StarMiddle { vertex }, Center) | (Center, StarMiddle { vertex }) => EdgeRole::StarCenterSide { vertex },
            (StarMiddle { vertex }, _) | (_, StarMiddle { vertex }) => EdgeRole::StarVertexSide { vertex },
            (Center, Center) => return None,
        })
    }
}

/// Maximum outerplanar subgraph (`g`, `k`) to edge crossing number.
pub fn reduce_mos_to_ecr(g: &Graph, k: usize) -> Result<ReductionInstance, ReductionError> {
    if k > g.m() {
        return Err(ReductionError::KTooLarge { k, edges: g.m() });
    }
    let n = g.n();
    let bundle = 2 * n;
    let center = n;
    let mid = |e: usize, p: usize| n + 1 + e * bundle + p;
    let mut roles: Vec<GadgetRole> = (0..n).map(GadgetRole::Original).collect();
    roles.push(GadgetRole::Center);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v, center)).collect();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        for p in 0..bundle {
            roles.push(GadgetRole::BundleMiddle { edge: e, path: p });
            edges.push((a, mid(e, p)));
            edges.push((b, mid(e, p)));
        }
    }
    let target = Graph::new(roles.len(), edges).expect("bundle construction is simple");
    Ok(ReductionInstance {
        kind: ReductionKind::Ecr,
        source: g.clone(),
        k,
        target,
        budget: bundle * (g.m() - k) + n,
        gadget_map: roles,
        bundle,
    })
}

/// Outerthickness (`g`, `k`) to uncrossed number.
pub fn reduce_ot_to_unc(g: &Graph, k: usize) -> Result<ReductionInstance, ReductionError> {
    if k == 0 {
        return Err(ReductionError::KZero);
    }
    let n = g.n();
    let center = n;
    let mut roles: Vec<GadgetRole> = (0..n).map(GadgetRole::Original).collect();
    roles.push(GadgetRole::Center);
    roles.extend((0..n).map(|v| GadgetRole::StarMiddle { vertex: v }));
    let mut edges = g.edges().to_vec();
    for v in 0..n {
        edges.push((v, n + 1 + v));
        edges.push((n + 1 + v, center));
    }
    let target = Graph::new(2 * n + 1, edges).expect("star construction is simple");
    Ok(ReductionInstance {
        kind: ReductionKind::Unc,
        source: g.clone(),
        k,
        target,
        budget: k,
        gadget_map: roles,
        bundle: 0,
    })
}

/// Rotation lists over the target's vertices seeded with an outerplanar embedding of
/// part of the source, plus for each source vertex a neighbor `x` such that `x -> v`
/// runs along the outer face (`None` for isolated vertices).
struct Skeleton {
    rot: Vec<Vec<usize>>,
    arrival: Vec<Option<usize>>,
    reps: Vec<usize>,
}

impl Skeleton {
    fn new(emb: &OuterplanarEmbedding, source_n: usize, target_n: usize) -> Self {
        let mut rot = vec![Vec::new(); target_n];
        rot[..source_n].clone_from_slice(emb.rotation().as_lists());
        let mut arrival = vec![None; source_n];
        let mut reps = Vec::new();
        let mut seen = vec![false; source_n];
        for v in 0..source_n {
            if seen[v] {
                continue;
            }
            reps.push(v);
            seen[v] = true;
            if let Some(d) = emb.outer_dart(v) {
                for dart in emb.rotation().face_walk(d) {
                    seen[dart.head] = true;
                    arrival[dart.head].get_or_insert(dart.tail);
                }
            }
        }
        Skeleton { rot, arrival, reps }
    }

    /// Hangs `leaf` off source vertex `v` inside the outer face.
    fn hang(&mut self, v: usize, leaf: usize) {
        let at = match self.arrival[v] {
            Some(x) => self.rot[v].iter().position(|&y| y == x).expect("arrival neighbor") + 1,
            None => 0,
        };
        self.rot[v].insert(at, leaf);
        self.rot[leaf].push(v);
    }

    /// Joins `a` and `b`, both outside the source part.
    fn join(&mut self, a: usize, b: usize) {
        self.rot[a].push(b);
        self.rot[b].push(a);
    }

    fn finish(self) -> Result<PlaneDrawing, ReductionError> {
        Ok(PlaneDrawing::new(RotationSystem::new(self.rot)?, None)?)
    }
}

fn embed_part(source: &Graph, part: &EdgeSet, index: usize) -> Result<OuterplanarEmbedding, ReductionError> {
    if part.universe() != source.m() {
        return Err(ReductionError::WrongUniverse);
    }
    outerplanar_embedding(&source.spanning_subgraph(part)).ok_or(ReductionError::NotOuterplanar(index))
}

/// Drawing of the ecr target from an outerplanar edge set `h` of the source with
/// `|h| >= k`. Bundles of `h` are drawn in full; every other bundle path keeps one
/// drawn half; the center is joined to one vertex per component of `h`.
pub fn ecr_forward_witness(inst: &ReductionInstance, h: &EdgeSet) -> Result<PlaneDrawing, ReductionError> {
    if inst.kind != ReductionKind::Ecr {
        return Err(ReductionError::WrongKind);
    }
    if h.len() < inst.k {
        return Err(ReductionError::TooFewEdges { got: h.len(), k: inst.k });
    }
    let emb = embed_part(&inst.source, h, 0)?;
    let n = inst.source.n();
    let m_b = inst.bundle;
    let mid = |e: usize, p: usize| n + 1 + e * m_b + p;
    let mut sk = Skeleton::new(&emb, n, inst.target.n());
    let center = inst.center();
    for r in sk.reps.clone() {
        sk.hang(r, center);
    }
    // Pendants first: bundle expansion renames the neighbors that `hang` looks up.
    for (e, &(a, _)) in inst.source.edges().iter().enumerate() {
        if !h.contains(e) {
            for p in 0..m_b {
                sk.hang(a, mid(e, p));
            }
        }
    }
    for (e, &(a, b)) in inst.source.edges().iter().enumerate() {
        if h.contains(e) {
            // Replace the drawn edge a-b by the bundle, mirrored at the two ends.
            let ia = sk.rot[a].iter().position(|&x| x == b).expect("drawn edge");
            sk.rot[a].splice(ia..=ia, (0..m_b).map(|p| mid(e, p)));
            let ib = sk.rot[b].iter().position(|&x| x == a).expect("drawn edge");
            sk.rot[b].splice(ib..=ib, (0..m_b).rev().map(|p| mid(e, p)));
            for p in 0..m_b {
                sk.rot[mid(e, p)] = vec![a, b];
            }
        }
    }
    sk.finish()
}

/// Uncrossed collection of the unc target from an outerplanar cover of the source by
/// at least two and at most `k` parts.
///
/// Drawing 0 draws every center-side star edge and the vertex-side edge at one vertex
/// per component; the other drawings draw every vertex-side edge and the center-side
/// edge at one vertex per component.
pub fn unc_forward_witness(
    inst: &ReductionInstance,
    parts: &[EdgeSet],
) -> Result<UncrossedCertificate, ReductionError> {
    if inst.kind != ReductionKind::Unc {
        return Err(ReductionError::WrongKind);
    }
    if parts.len() < 2 {
        return Err(ReductionError::TooFewParts(parts.len()));
    }
    if parts.len() > inst.budget {
        return Err(ReductionError::OverBudget { parts: parts.len(), budget: inst.budget });
    }
    let src = &inst.source;
    let n = src.n();
    let center = inst.center();
    let star = |v: usize| n + 1 + v;
    let mut union = EdgeSet::new(src.m());
    let mut drawings = Vec::with_capacity(parts.len());
    for (i, part) in parts.iter().enumerate() {
        let emb = embed_part(src, part, i)?;
        union.union_with(part);
        let mut sk = Skeleton::new(&emb, n, inst.target.n());
        let reps = sk.reps.clone();
        if i == 0 {
            for v in 0..n {
                sk.join(center, star(v));
            }
            for r in reps {
                sk.hang(r, star(r));
            }
        } else {
            for v in 0..n {
                sk.hang(v, star(v));
            }
            for r in reps {
                sk.join(star(r), center);
            }
        }
        drawings.push(sk.finish()?);
    }
    let missing = src.m() - union.len();
    if missing > 0 {
        return Err(ReductionError::NotCovering(missing));
    }
    Ok(UncrossedCertificate::new(inst.target.clone(), drawings))
}

/// Largest outerplanar edge set of `g`, by exhaustive search from the top size down.
pub fn max_outerplanar_subgraph(g: &Graph, cap: usize) -> Result<EdgeSet, ReductionError> {
    let m = g.m();
    if m > cap {
        return Err(ReductionError::TooLarge { edges: m, cap });
    }
    for size in (0..=m).rev() {
        let mut found = None;
        for_each_subset(m, size, &mut |set: &EdgeSet| {
            if found.is_none() && outerplanar_embedding(&g.spanning_subgraph(set)).is_some() {
                found = Some(set.clone());
            }
            found.is_none()
        });
        if let Some(set) = found {
            return Ok(set);
        }
    }
    unreachable!("the empty edge set is outerplanar")
}

fn for_each_subset(m: usize, k: usize, f: &mut dyn FnMut(&EdgeSet) -> bool) {
    fn rec(start: usize, m: usize, left: usize, set: &mut EdgeSet, f: &mut dyn FnMut(&EdgeSet) -> bool) -> bool {
        if left == 0 {
            return f(set);
        }
        for i in start..=m - left {
            set.insert(i);
            let go = rec(i + 1, m, left - 1, set, f);
            set.remove(i);
            if !go {
                return false;
            }
        }
        true
    }
    let mut set = EdgeSet::new(m);
    rec(0, m, k, &mut set, f);
}

/// Greedy cover of `g`'s edges by outerplanar edge sets: each part takes, in edge
/// order, every remaining edge that keeps it outerplanar.
pub fn greedy_outerplanar_decomposition(g: &Graph) -> Vec<EdgeSet> {
    let mut rest = EdgeSet::full(g.m());
    let mut parts = Vec::new();
    while !rest.is_empty() {
        let mut part = EdgeSet::new(g.m());
        for i in rest.iter() {
            part.insert(i);
            if outerplanar_embedding(&g.spanning_subgraph(&part)).is_none() {
                part.remove(i);
            }
        }
        rest = rest.difference(&part);
        parts.push(part);
    }
    parts
}

/// One forward-witness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub k: usize,
    pub budget: usize,
    /// Crossed edges (ecr) or drawings (unc) used by the witness.
    pub used: usize,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub kind: ReductionKind,
    /// Size of a maximum outerplanar subgraph of the source.
    pub max_outerplanar: usize,
    /// Parts in the outerplanar cover used for unc witnesses.
    pub parts: usize,
    pub checks: Vec<WitnessCheck>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.passes)
    }
}

/// Edge cap for [`validate_reduction_small`].
pub const VALIDATION_CAP: usize = 16;

/// Builds and verifies forward witnesses on a small source graph. For ecr, every
/// `k` up to the maximum outerplanar subgraph size is checked; for unc, budgets from
/// the size of a greedy outerplanar cover (padded to two parts) up to one more.
pub fn validate_reduction_small(g: &Graph, kind: ReductionKind) -> Result<ValidationReport, ReductionError> {
    let best = max_outerplanar_subgraph(g, VALIDATION_CAP)?;
    let mut checks = Vec::new();
    let mut parts_used = 0;
    match kind {
        ReductionKind::Ecr => {
            for k in 0..=best.len() {
                let inst = reduce_mos_to_ecr(g, k)?;
                let d = ecr_forward_witness(&inst, &best)?;
                let report = verify_drawing(&inst.target, &d).map_err(|_| ReductionError::WrongUniverse)?;
                let used = inst.target.m() - report.drawn_edges;
                checks.push(WitnessCheck {
                    k,
                    budget: inst.budget,
                    used,
                    passes: report.passes() && used <= inst.budget,
                });
            }
        }
        ReductionKind::Unc => {
            let mut parts = greedy_outerplanar_decomposition(g);
            while parts.len() < 2 {
                parts.push(EdgeSet::new(g.m()));
            }
            parts_used = parts.len();
            for k in parts.len()..=parts.len() + 1 {
                let inst = reduce_ot_to_unc(g, k)?;
                let c = unc_forward_witness(&inst, &parts)?;
                let ok = verify_certificate(&c).map(|r| r.passes()).unwrap_or(false);
                checks.push(WitnessCheck { k, budget: k, used: c.len(), passes: ok && c.len() <= k });
            }
        }
    }
    Ok(ValidationReport { kind, max_outerplanar: best.len(), parts: parts_used, checks })
}

/// The 8-vertex example source graph (vertices renumbered from 0) and its two-part
/// outerplanar cover.
pub fn example_outerthickness_two() -> (Graph, Vec<EdgeSet>) {
    let one =
        |pairs: &[(usize, usize)]| -> Vec<(usize, usize)> { pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect() };
    let edges = one(&[
        (1, 2),
        (1, 8),
        (2, 3),
        (3, 4),
        (3, 5),
        (3, 8),
        (5, 6),
        (5, 7),
        (5, 8),
        (6, 7),
        (7, 8),
        (1, 4),
        (1, 7),
        (2, 6),
        (3, 7),
        (4, 6),
    ]);
    let g = Graph::new(8, edges).expect("simple");
    let p1 = one(&[(2, 3), (3, 8), (5, 6), (5, 7), (5, 8), (6, 7), (7, 8), (1, 2), (1, 8), (3, 4), (3, 5)]);
    let p2 = one(&[(1, 4), (1, 7), (2, 6), (3, 7), (4, 6), (1, 2), (1, 8), (3, 4), (7, 8), (3, 5)]);
    let parts = [p1, p2].iter().map(|p| EdgeSet::from_pairs(&g, p.iter().copied()).expect("source edges")).collect();
    (g, parts)
}
