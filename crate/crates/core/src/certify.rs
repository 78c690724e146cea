//! Uncrossed-collection certificates and their verifier.
//!
//! A drawing is admissible for a host graph when its drawn part is a connected,
//! spanning, planar embedding and the endpoints of every host edge left undrawn share
//! a face. Each undrawn edge can then be routed inside such a face, crossing only other
//! undrawn edges, so the drawn edges stay uncrossed. A certificate is a list of
//! admissible drawings whose drawn edges together cover the host.

use serde::Serialize;
use thiserror::Error;

use crate::embedding::{cofacial_in, euler_holds, PlaneDrawing};
use crate::formulas::{bound_report, BoundReport, Quantity};
use crate::graph::{EdgeSet, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("drawing {drawing}: rotation covers {got} vertices, host has {expected}")]
    VertexCount { drawing: usize, expected: usize, got: usize },
    #[error("drawing {drawing}: edge {u}-{v} is not a host edge")]
    ForeignEdge { drawing: usize, u: usize, v: usize },
    #[error("host graph is disconnected; only connected hosts are supported")]
    UnsupportedHost,
}

/// An ordered list of drawings over one host, claimed to be an uncrossed collection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncrossedCertificate {
    pub host: Graph,
    pub drawings: Vec<PlaneDrawing>,
}

impl UncrossedCertificate {
    pub fn new(host: Graph, drawings: Vec<PlaneDrawing>) -> Self {
        UncrossedCertificate { host, drawings }
    }

    pub fn len(&self) -> usize {
        self.drawings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.drawings.is_empty()
    }
}

/// Outcome of checking one drawing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub drawn_edges: usize,
    pub face_count: usize,
    pub connected: bool,
    pub euler: bool,
    /// Undrawn host edges whose endpoints share no face.
    pub non_cofacial: Vec<(usize, usize)>,
}

impl AdmissibilityReport {
    pub fn passes(&self) -> bool {
        self.connected && self.euler && self.non_cofacial.is_empty()
    }
}

/// Outcome of checking a whole certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub size: usize,
    pub drawings: Vec<AdmissibilityReport>,
    /// For every host edge in canonical order, the first drawing that draws it.
    pub witness: Vec<Option<usize>>,
    pub uncovered: Vec<(usize, usize)>,
}

impl CertificateReport {
    pub fn passes(&self) -> bool {
        self.uncovered.is_empty() && self.drawings.iter().all(AdmissibilityReport::passes)
    }
}

fn drawn_set(host: &Graph, d: &PlaneDrawing, index: usize) -> Result<EdgeSet, CertifyError> {
    if d.n() != host.n() {
        return Err(CertifyError::VertexCount { drawing: index, expected: host.n(), got: d.n() });
    }
    let mut set = EdgeSet::new(host.m());
    for (u, v) in d.drawn_pairs() {
        let i = host.edge_index(u, v).ok_or(CertifyError::ForeignEdge { drawing: index, u, v })?;
        set.insert(i);
    }
    Ok(set)
}

fn check(host: &Graph, d: &PlaneDrawing, index: usize) -> Result<(AdmissibilityReport, EdgeSet), CertifyError> {
    let drawn = drawn_set(host, d, index)?;
    let faces = d.faces();
    let connected = d.is_connected();
    let euler = euler_holds(d.n(), drawn.len(), faces.len());
    let non_cofacial = host
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, &(u, v))| !drawn.contains(i) && !cofacial_in(&faces, u, v))
        .map(|(_, &e)| e)
        .collect();
    let report =
        AdmissibilityReport { drawn_edges: drawn.len(), face_count: faces.len(), connected, euler, non_cofacial };
    Ok((report, drawn))
}

/// Checks one drawing against its host. Structural problems (wrong vertex count,
/// edges outside the host) are errors; admissibility failures are reported.
pub fn verify_drawing(host: &Graph, d: &PlaneDrawing) -> Result<AdmissibilityReport, CertifyError> {
    check(host, d, 0).map(|(r, _)| r)
}

/// Checks every drawing and the coverage of the host's edges.
pub fn verify_certificate(c: &UncrossedCertificate) -> Result<CertificateReport, CertifyError> {
    if !c.host.is_connected() {
        return Err(CertifyError::UnsupportedHost);
    }
    let mut witness = vec![None; c.host.m()];
    let mut drawings = Vec::with_capacity(c.drawings.len());
    for (k, d) in c.drawings.iter().enumerate() {
        let (report, drawn) = check(&c.host, d, k)?;
        for i in drawn.iter() {
            witness[i].get_or_insert(k);
        }
        drawings.push(report);
    }
    let uncovered = witness.iter().enumerate().filter(|(_, w)| w.is_none()).map(|(i, _)| c.host.edge(i)).collect();
    Ok(CertificateReport { size: c.drawings.len(), drawings, witness, uncovered })
}

/// Places the certificate size against the lower bounds known for its host: the
/// upper bound is the certificate size, and `exact` is set when the two meet.
pub fn certificate_size_vs_bounds(c: &UncrossedCertificate) -> BoundReport {
    let base = bound_report(&c.host);
    let size = c.drawings.len() as u64;
    let mut quantities = base.quantities;
    quantities.push(Quantity { name: "certificate size".into(), value: size, tag: "certificate".into() });
    let mut provenance = base.provenance;
    provenance.push("certificate".into());
    BoundReport {
        lower: base.lower,
        upper: Some(size),
        exact: (base.lower == size).then_some(size),
        provenance,
        quantities,
    }
}
