//! Wheel drawings: a hub joined to a rim cycle, all rim vertices on the outer face.

use super::ConstructionError;
use crate::embedding::{Dart, PlaneDrawing, RotationSystem};

/// Wheel on `n` vertices with hub 0 and rim `1, 2, ..., n-1`.
pub fn wheel_drawing(n: usize) -> Result<PlaneDrawing, ConstructionError> {
    if n < 4 {
        return Err(ConstructionError::TooSmall { what: "wheel order", min: 4, got: n });
    }
    let rim: Vec<usize> = (1..n).collect();
    wheel_on(n, 0, &rim)
}

/// Wheel on vertices `0..n` with the given hub and rim order; the rim must list every
/// other vertex exactly once. The outer face is the rim.
pub fn wheel_on(n: usize, hub: usize, rim: &[usize]) -> Result<PlaneDrawing, ConstructionError> {
    let k = rim.len();
    if k < 3 {
        return Err(ConstructionError::TooSmall { what: "wheel rim", min: 3, got: k });
    }
    if k + 1 != n {
        return Err(ConstructionError::Invalid(format!("rim of {k} vertices does not span {n} vertices")));
    }
    let mut rot = vec![Vec::new(); n];
    rot[hub] = rim.to_vec();
    for i in 0..k {
        rot[rim[i]] = vec![rim[(i + 1) % k], hub, rim[(i + k - 1) % k]];
    }
    let rotation = RotationSystem::new(rot).map_err(|e| ConstructionError::Invalid(e.to_string()))?;
    PlaneDrawing::new(rotation, Some(Dart::new(rim[0], rim[1]))).map_err(|e| ConstructionError::Invalid(e.to_string()))
}
