//! Outerplanarity via an apex vertex, and joining components through outer faces.

use super::{Dart, EmbeddingError, PlaneDrawing, RotationSystem};
use crate::graph::{components_of, Graph};

/// An embedding with every vertex on the outer face of its component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterplanarEmbedding {
    rotation: RotationSystem,
    /// A dart on the outer walk of each vertex's component, `None` for isolated vertices.
    outer: Vec<Option<Dart>>,
}

impl OuterplanarEmbedding {
    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn outer_dart(&self, v: usize) -> Option<Dart> {
        self.outer[v]
    }

    /// The embedding as a drawing; fails unless it is connected.
    pub fn drawing(&self) -> Result<PlaneDrawing, EmbeddingError> {
        if self.rotation.n() == 0 || self.rotation.component_count() != 1 {
            return Err(EmbeddingError::Disconnected);
        }
        PlaneDrawing::new(self.rotation.clone(), self.outer[0])
    }
}

/// Outerplanar embedding of `g`, or `None` if `g` is not outerplanar.
pub fn outerplanar_embedding(g: &Graph) -> Option<OuterplanarEmbedding> {
    let n = g.n();
    let apex = n;
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).map(|v| (v, apex)));
    let with_apex = Graph::new(n + 1, edges).ok()?;
    let rot = super::planar_embedding(&with_apex)?;
    let mut outer = vec![None; n];
    for (v, slot) in outer.iter_mut().enumerate() {
        let w = rot.successor(v, apex);
        if w != apex {
            *slot = Some(Dart::new(v, w));
        }
    }
    let mut lists = rot.into_lists();
    lists.pop();
    for list in lists.iter_mut() {
        list.retain(|&x| x != apex);
    }
    let rotation = RotationSystem::new(lists).expect("subrotation of a valid rotation");
    Some(OuterplanarEmbedding { rotation, outer })
}

/// Joins the components of an outerplanar embedding into one drawing by adding host
/// edges inside outer faces. Every added edge keeps all vertices on the outer face.
pub fn connect_through_outer_face(host: &Graph, emb: OuterplanarEmbedding) -> Result<PlaneDrawing, EmbeddingError> {
    let n = emb.rotation.n();
    if n != host.n() {
        return Err(EmbeddingError::VertexCount { expected: host.n(), got: n });
    }
    let OuterplanarEmbedding { mut rotation, mut outer } = emb;
    loop {
        let labels = components_of(n, rotation.edges().into_iter());
        let Some(&(u, v)) = host.edges().iter().find(|&&(u, v)| labels[u] != labels[v]) else {
            break;
        };
        let before_u = arrival(&rotation, outer[u], u);
        let before_v = arrival(&rotation, outer[v], v);
        rotation.insert_after(u, before_u, v);
        rotation.insert_after(v, before_v, u);
        let merged = outer[u].or(outer[v]).unwrap_or(Dart::new(u, v));
        let (lu, lv) = (labels[u], labels[v]);
        for (x, slot) in outer.iter_mut().enumerate() {
            if labels[x] == lu || labels[x] == lv {
                *slot = Some(merged);
            }
        }
    }
    if n == 0 || rotation.component_count() != 1 {
        return Err(EmbeddingError::Disconnected);
    }
    PlaneDrawing::new(rotation, outer[0])
}

/// The neighbor `x` such that `x -> v` lies on the outer walk through `start`.
fn arrival(rotation: &RotationSystem, start: Option<Dart>, v: usize) -> Option<usize> {
    let start = start?;
    rotation.face_walk(start).into_iter().find(|d| d.head == v).map(|d| d.tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle_graph, path_graph};

    fn assert_outer_faces_cover(emb: &OuterplanarEmbedding) {
        let rot = emb.rotation();
        let labels = components_of(rot.n(), rot.edges().into_iter());
        for v in 0..rot.n() {
            if let Some(d) = emb.outer_dart(v) {
                let walk = rot.face_walk(d);
                for x in (0..rot.n()).filter(|&x| labels[x] == labels[v]) {
                    assert!(walk.iter().any(|d| d.tail == x), "vertex {x} off outer walk");
                }
            }
        }
    }

    #[test]
    fn fan_and_cycle_are_outerplanar() {
        let mut edges: Vec<_> = (1..6).map(|i| (0, i)).collect();
        edges.extend((1..5).map(|i| (i, i + 1)));
        let fan = Graph::new(6, edges).unwrap();
        let emb = outerplanar_embedding(&fan).unwrap();
        assert_outer_faces_cover(&emb);
        let d = emb.drawing().unwrap();
        assert!(d.is_planar_embedding());
        assert_eq!(d.outer_face().unwrap().vertices.len(), 6);
        assert!(outerplanar_embedding(&cycle_graph(7).unwrap()).is_some());
    }

    #[test]
    fn k23_is_not_outerplanar() {
        assert!(outerplanar_embedding(&complete_bipartite(2, 3).unwrap()).is_none());
    }

    #[test]
    fn components_are_joined_on_outer_faces() {
        // Two triangles and an isolated vertex inside K_7.
        let host = crate::graph::complete_graph(7).unwrap();
        let part = Graph::new(7, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let emb = outerplanar_embedding(&part).unwrap();
        assert_outer_faces_cover(&emb);
        let d = connect_through_outer_face(&host, emb).unwrap();
        assert!(d.is_planar_embedding());
        assert_eq!(d.drawn_edge_count(), 8);
        assert_eq!(d.outer_face().unwrap().vertices.len(), 7);
    }

    #[test]
    fn edgeless_part_becomes_a_tree() {
        let host = path_graph(5).unwrap();
        let emb = outerplanar_embedding(&Graph::new(5, vec![]).unwrap()).unwrap();
        let d = connect_through_outer_face(&host, emb).unwrap();
        assert_eq!(d.drawn_edge_count(), 4);
        assert!(d.is_planar_embedding());
    }

    #[test]
    fn disconnected_host_is_reported() {
        let host = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let emb = outerplanar_embedding(&host).unwrap();
        assert_eq!(connect_through_outer_face(&host, emb), Err(EmbeddingError::Disconnected));
    }
}
