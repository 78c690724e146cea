//! Combinatorial embeddings: rotation systems, face tracing, planarity and
//! outerplanarity.
//!
//! Faces are traced with the successor rule: the dart following `u -> v` is
//! `v -> w`, where `w` comes right after `u` in the cyclic order at `v`. Whether the
//! lists are read clockwise or counter-clockwise only mirrors the embedding, which
//! changes neither face count nor face vertex sets.

mod lr;
mod outerplanar;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{components_of, EdgeSet, Graph};

pub use lr::planar_embedding;
pub use outerplanar::{connect_through_outer_face, outerplanar_embedding, OuterplanarEmbedding};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("vertex {vertex}: neighbor {neighbor} is out of range")]
    OutOfRange { vertex: usize, neighbor: usize },
    #[error("vertex {0} lists itself as a neighbor")]
    SelfLoop(usize),
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    #[error("vertex {vertex} lists {neighbor}, but {neighbor} does not list {vertex}")]
    Asymmetric { vertex: usize, neighbor: usize },
    #[error("outer dart {0} is not a dart of the rotation system")]
    UnknownDart(Dart),
    #[error("rotation covers {got} vertices, host has {expected}")]
    VertexCount { expected: usize, got: usize },
    #[error("the drawing is not connected")]
    Disconnected,
    #[error("no face contains every vertex")]
    NoOuterFace,
}

/// Directed copy of an edge, `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Dart {
    pub tail: usize,
    pub head: usize,
}

impl Dart {
    pub fn new(tail: usize, head: usize) -> Self {
        Dart { tail, head }
    }

    pub fn reversed(self) -> Self {
        Dart { tail: self.head, head: self.tail }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

/// Cyclic neighbor order at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rot: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Validates that the lists describe a simple undirected graph.
    pub fn new(rot: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        let n = rot.len();
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        for (v, list) in rot.iter().enumerate() {
            for &w in list {
                if w >= n {
                    return Err(EmbeddingError::OutOfRange { vertex: v, neighbor: w });
                }
                if w == v {
                    return Err(EmbeddingError::SelfLoop(v));
                }
                if seen.insert((v, w), ()).is_some() {
                    return Err(EmbeddingError::RepeatedNeighbor { vertex: v, neighbor: w });
                }
            }
        }
        for &(v, w) in seen.keys() {
            if !seen.contains_key(&(w, v)) {
                return Err(EmbeddingError::Asymmetric { vertex: v, neighbor: w });
            }
        }
        Ok(RotationSystem { rot })
    }

    /// Rotation read off a straight-line drawing: neighbors sorted by angle.
    pub fn from_coordinates(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        coords: &[(f64, f64)],
    ) -> Result<Self, EmbeddingError> {
        let mut rot = vec![Vec::new(); n];
        for (u, v) in edges {
            rot[u].push(v);
            rot[v].push(u);
        }
        for (v, list) in rot.iter_mut().enumerate() {
            let (x, y) = coords[v];
            list.sort_by(|&a, &b| {
                let ta = (coords[a].1 - y).atan2(coords[a].0 - x);
                let tb = (coords[b].1 - y).atan2(coords[b].0 - x);
                ta.total_cmp(&tb)
            });
        }
        RotationSystem::new(rot)
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn as_lists(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn into_lists(self) -> Vec<Vec<usize>> {
        self.rot
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .rot
            .iter()
            .enumerate()
            .flat_map(|(v, l)| l.iter().filter(move |&&w| v < w).map(move |&w| (v, w)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn has_dart(&self, d: Dart) -> bool {
        d.tail < self.n() && self.rot[d.tail].contains(&d.head)
    }

    /// Neighbor following `u` in the cyclic order at `v`.
    pub fn successor(&self, v: usize, u: usize) -> usize {
        let list = &self.rot[v];
        let i = list.iter().position(|&x| x == u).expect("dart of the rotation");
        list[(i + 1) % list.len()]
    }

    /// The dart that follows `d` on its face.
    pub fn next_dart(&self, d: Dart) -> Dart {
        Dart::new(d.head, self.successor(d.head, d.tail))
    }

    /// Face walk starting at `start`.
    pub fn face_walk(&self, start: Dart) -> Vec<Dart> {
        let mut walk = vec![start];
        let mut d = self.next_dart(start);
        while d != start {
            walk.push(d);
            d = self.next_dart(d);
        }
        walk
    }

    /// Traces every face. Each dart lands in exactly one walk; isolated vertices get a
    /// face with an empty walk of their own.
    pub fn trace_faces(&self) -> Vec<Face> {
        let n = self.n();
        let offsets: Vec<usize> = self
            .rot
            .iter()
            .scan(0, |acc, l| {
                let here = *acc;
                *acc += l.len();
                Some(here)
            })
            .collect();
        let pos: Vec<HashMap<usize, usize>> =
            self.rot.iter().map(|l| l.iter().enumerate().map(|(i, &w)| (w, i)).collect()).collect();
        let total: usize = self.rot.iter().map(Vec::len).sum();
        let mut visited = vec![false; total];
        let mut faces = Vec::new();
        for v in 0..n {
            if self.rot[v].is_empty() {
                faces.push(Face { id: faces.len(), darts: Vec::new(), vertices: vec![v] });
                continue;
            }
            for i in 0..self.rot[v].len() {
                if visited[offsets[v] + i] {
                    continue;
                }
                let start = Dart::new(v, self.rot[v][i]);
                let mut darts = Vec::new();
                let mut d = start;
                loop {
                    let slot = offsets[d.tail] + pos[d.tail][&d.head];
                    visited[slot] = true;
                    darts.push(d);
                    let at = &self.rot[d.head];
                    let j = pos[d.head][&d.tail];
                    d = Dart::new(d.head, at[(j + 1) % at.len()]);
                    if d == start {
                        break;
                    }
                }
                let mut vertices: Vec<usize> = darts.iter().map(|d| d.tail).collect();
                vertices.sort_unstable();
                vertices.dedup();
                faces.push(Face { id: faces.len(), darts, vertices });
            }
        }
        faces
    }

    pub fn component_count(&self) -> usize {
        let labels = components_of(self.n(), self.edges().into_iter());
        labels.iter().copied().max().map_or(0, |c| c + 1)
    }

    /// Inserts `w` right after `after` in the list at `v`, or as the only entry when
    /// `after` is `None`.
    pub(crate) fn insert_after(&mut self, v: usize, after: Option<usize>, w: usize) {
        match after {
            None => self.rot[v].insert(0, w),
            Some(a) => {
                let i = self.rot[v].iter().position(|&x| x == a).expect("reference neighbor");
                self.rot[v].insert(i + 1, w);
            }
        }
    }
}

/// One face of a traced embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: usize,
    /// Boundary walk.
    pub darts: Vec<Dart>,
    /// Distinct vertices on the boundary, sorted.
    pub vertices: Vec<usize>,
}

impl Face {
    /// Number of edge sides met along the walk.
    pub fn walk_length(&self) -> usize {
        self.darts.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// The uncrossed part of a drawing: a rotation system over all host vertices, with an
/// optional designated outer face.
///
/// Well-formedness of the rotation is checked on construction. Connectivity and the
/// Euler condition are properties queried separately ([`PlaneDrawing::is_planar_embedding`]),
/// so that a verifier can report them instead of failing to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneDrawing {
    rotation: RotationSystem,
    outer: Option<Dart>,
}

impl PlaneDrawing {
    pub fn new(rotation: RotationSystem, outer: Option<Dart>) -> Result<Self, EmbeddingError> {
        if let Some(d) = outer {
            if !rotation.has_dart(d) {
                return Err(EmbeddingError::UnknownDart(d));
            }
        }
        Ok(PlaneDrawing { rotation, outer })
    }

    pub fn from_lists(rot: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        PlaneDrawing::new(RotationSystem::new(rot)?, None)
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn n(&self) -> usize {
        self.rotation.n()
    }

    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer
    }

    pub fn set_outer_dart(&mut self, d: Option<Dart>) -> Result<(), EmbeddingError> {
        if let Some(d) = d {
            if !self.rotation.has_dart(d) {
                return Err(EmbeddingError::UnknownDart(d));
            }
        }
        self.outer = d;
        Ok(())
    }

    /// Designates as outer face a face that contains every vertex.
    pub fn with_outer_face_on_all_vertices(mut self) -> Result<Self, EmbeddingError> {
        let n = self.n();
        let face = self.faces().into_iter().find(|f| f.vertices.len() == n).ok_or(EmbeddingError::NoOuterFace)?;
        self.outer = face.darts.first().copied();
        Ok(self)
    }

    pub fn drawn_pairs(&self) -> Vec<(usize, usize)> {
        self.rotation.edges()
    }

    pub fn drawn_edge_count(&self) -> usize {
        self.rotation.edge_count()
    }

    /// Drawn edges as a subset of the host's edges; `None` if an edge is not in the host.
    pub fn drawn_edges(&self, host: &Graph) -> Option<EdgeSet> {
        EdgeSet::from_pairs(host, self.drawn_pairs())
    }

    pub fn faces(&self) -> Vec<Face> {
        self.rotation.trace_faces()
    }

    pub fn outer_face(&self) -> Option<Face> {
        let d = self.outer?;
        self.faces().into_iter().find(|f| f.darts.contains(&d))
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.rotation.component_count() == 1
    }

    /// Connected and satisfying `n - e + f = 2`.
    pub fn is_planar_embedding(&self) -> bool {
        self.is_connected() && euler_holds(self.n(), self.drawn_edge_count(), self.faces().len())
    }

    pub fn cofacial(&self, u: usize, v: usize) -> bool {
        cofacial_in(&self.faces(), u, v)
    }

    pub fn into_rotation(self) -> RotationSystem {
        self.rotation
    }
}

pub(crate) fn euler_holds(n: usize, e: usize, f: usize) -> bool {
    n + f == e + 2
}

pub(crate) fn cofacial_in(faces: &[Face], u: usize, v: usize) -> bool {
    faces.iter().any(|f| f.contains(u) && f.contains(v))
}

pub fn trace_faces(d: &PlaneDrawing) -> Vec<Face> {
    d.faces()
}

pub fn is_planar_embedding(d: &PlaneDrawing) -> bool {
    d.is_planar_embedding()
}

pub fn cofacial(d: &PlaneDrawing, u: usize, v: usize) -> bool {
    d.cofacial(u, v)
}

/// Planarity test; see [`planar_embedding`] for a witness rotation.
pub fn is_planar_graph(g: &Graph) -> bool {
    planar_embedding(g).is_some()
}

/// Planar witness as a drawing, available when `g` is planar and connected.
pub fn planar_drawing(g: &Graph) -> Option<PlaneDrawing> {
    let rot = planar_embedding(g)?;
    let d = PlaneDrawing::new(rot, None).ok()?;
    d.is_connected().then_some(d)
}

pub fn is_outerplanar(g: &Graph) -> bool {
    outerplanar_embedding(g).is_some()
}
