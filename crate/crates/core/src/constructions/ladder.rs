//! Ladder with leaves: an outerplanar subgraph of `K_{m,n}` with `2m + n - 2` edges.

use super::ConstructionError;
use crate::embedding::{PlaneDrawing, RotationSystem};

/// Edges of the ladder with leaves on the canonical `K_{m,n}` ids (blacks `0..m`,
/// whites `m..m+n`). Column `i` holds black `i` and white `m+i`; the remaining whites
/// are leaves handed out to blacks in turn.
pub fn ladder_edges(m: usize, n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(2 * m + n);
    for i in 0..m {
        edges.push((i, m + i));
        if i + 1 < m {
            edges.push((i, m + i + 1));
            edges.push((i + 1, m + i));
        }
    }
    for (j, w) in (2 * m..m + n).enumerate() {
        edges.push((j % m, w));
    }
    edges.sort_unstable();
    edges
}

/// The ladder with leaves as an outerplanar drawing of `K_{m,n}`'s vertex set.
pub fn ladder_with_leaves(m: usize, n: usize) -> Result<PlaneDrawing, ConstructionError> {
    if m == 0 || n == 0 {
        return Err(ConstructionError::TooSmall { what: "part size", min: 1, got: 0 });
    }
    if m > n {
        return Err(ConstructionError::Invalid(format!("need m <= n, got ({m}, {n})")));
    }
    // Column i at x = i; black on row i % 2, white on the other row, so rungs are
    // vertical and the path edges horizontal. Leaves hang off the far side of their black.
    let mut coords = vec![(0.0, 0.0); m + n];
    for i in 0..m {
        let row = (i % 2) as f64;
        coords[i] = (i as f64, row);
        coords[m + i] = (i as f64, 1.0 - row);
    }
    let leaves_per_black = (n - m).div_ceil(m).max(1) as f64;
    for (j, w) in (2 * m..m + n).enumerate() {
        let b = j % m;
        let slot = (j / m) as f64;
        let dx = 0.8 * ((slot + 0.5) / leaves_per_black - 0.5);
        let y = if b.is_multiple_of(2) { -1.0 } else { 2.0 };
        coords[w] = (b as f64 + dx, y);
    }
    let rotation = RotationSystem::from_coordinates(m + n, ladder_edges(m, n), &coords)
        .map_err(|e| ConstructionError::Invalid(e.to_string()))?;
    PlaneDrawing::new(rotation, None)
        .and_then(PlaneDrawing::with_outer_face_on_all_vertices)
        .map_err(|e| ConstructionError::Invalid(e.to_string()))
}
