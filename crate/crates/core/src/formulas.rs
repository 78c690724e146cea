//! Closed-form values and lower bounds.
//!
//! Quantities are tagged with short descriptive names (`unc-complete`,
//! `density-bound`, ...) so reports can say where each number comes from.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::embedding::is_planar_graph;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("order must be positive")]
    ZeroOrder,
    #[error("needs at least {min} vertices, got {got}")]
    TooFewVertices { min: u64, got: u64 },
    #[error("(3n-5)^2 - 4m is negative for n = {n}, m = {m}")]
    NegativeDiscriminant { n: u64, m: u64 },
    #[error("h must be positive")]
    ZeroH,
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn ordered(m: u64, n: u64) -> Result<(u64, u64), FormulaError> {
    if m == 0 || n == 0 {
        return Err(FormulaError::ZeroOrder);
    }
    Ok((m.min(n), m.max(n)))
}

/// `unc(K_n)`.
pub fn unc_complete(n: u64) -> Result<u64, FormulaError> {
    match n {
        0 => Err(FormulaError::ZeroOrder),
        4 => Ok(1),
        7 => Ok(3),
        _ => Ok(ceil_div(n + 1, 4)),
    }
}

/// `unc(K_{m,n})`; the arguments may come in either order.
pub fn unc_complete_bipartite(m: u64, n: u64) -> Result<u64, FormulaError> {
    let (m, n) = ordered(m, n)?;
    let mn = m * n;
    Ok(if m <= 2 {
        1
    } else if n <= 2 * m - 2 {
        ceil_div(mn, 2 * m + n - 2)
    } else if n == 2 * m - 1 {
        ceil_div(mn, 2 * m + n - 1)
    } else {
        ceil_div(mn, 2 * m + n)
    })
}

/// Maximum number of uncrossed edges in a drawing of `K_n`, for `n >= 4`.
pub fn h_complete(n: u64) -> Result<u64, FormulaError> {
    if n < 4 {
        return Err(FormulaError::TooFewVertices { min: 4, got: n });
    }
    Ok(2 * n - 2)
}

/// Maximum number of uncrossed edges in a drawing of `K_{m,n}`.
///
/// For `min(m, n) <= 2` the graph is planar and every edge can be uncrossed, so the
/// answer is `mn`.
pub fn h_complete_bipartite(m: u64, n: u64) -> Result<u64, FormulaError> {
    let (m, n) = ordered(m, n)?;
    Ok(if m <= 2 {
        m * n
    } else if m == n {
        2 * m + n - 2
    } else if n < 2 * m {
        2 * m + n - 1
    } else {
        2 * m + n
    })
}

/// Outerthickness of `K_n`.
pub fn outerthickness_complete(n: u64) -> Result<u64, FormulaError> {
    match n {
        0 => Err(FormulaError::ZeroOrder),
        7 => Ok(3),
        _ => Ok(ceil_div(n + 1, 4)),
    }
}

/// Outerthickness of `K_{m,n}`; the arguments may come in either order.
pub fn outerthickness_complete_bipartite(m: u64, n: u64) -> Result<u64, FormulaError> {
    let (m, n) = ordered(m, n)?;
    Ok(ceil_div(m * n, 2 * m + n - 2))
}

/// The density `f(n, m) = (A + sqrt(D)) / 2` with `A = 3n - 5`, `D = A^2 - 4m`, kept
/// symbolically so comparisons are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityF {
    a: i128,
    d: i128,
}

impl DensityF {
    pub fn new(n: u64, m: u64) -> Result<Self, FormulaError> {
        if n < 3 {
            return Err(FormulaError::TooFewVertices { min: 3, got: n });
        }
        let a = 3 * n as i128 - 5;
        let d = a * a - 4 * m as i128;
        if d < 0 {
            return Err(FormulaError::NegativeDiscriminant { n, m });
        }
        Ok(DensityF { a, d })
    }

    pub fn value(&self) -> f64 {
        (self.a as f64 + (self.d as f64).sqrt()) / 2.0
    }

    /// `Some(k)` when `f` is exactly the integer `k`.
    pub fn exact_integer(&self) -> Option<i128> {
        let r = isqrt(self.d);
        (r * r == self.d && (self.a + r) % 2 == 0).then_some((self.a + r) / 2)
    }

    /// Compares `k * f` with the integer `t`.
    pub fn scaled_cmp(&self, k: i128, t: i128) -> Ordering {
        // k*f vs t  <=>  k*sqrt(D) vs 2t - kA
        let lhs_sq = k * k * self.d;
        let rhs = 2 * t - k * self.a;
        if rhs < 0 {
            return Ordering::Greater;
        }
        lhs_sq.cmp(&(rhs * rhs))
    }

    /// Compares `f` with the integer `t`.
    pub fn cmp_int(&self, t: i128) -> Ordering {
        self.scaled_cmp(1, t)
    }
}

impl fmt::Display for DensityF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact_integer() {
            Some(k) => write!(f, "{k}"),
            None => write!(f, "({} + sqrt({}))/2 ~ {:.4}", self.a, self.d, self.value()),
        }
    }
}

fn isqrt(x: i128) -> i128 {
    if x < 2 {
        return x.max(0);
    }
    let mut r = (x as f64).sqrt() as i128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Lower bound `ceil(m / f(n, m))` for connected graphs with `n` vertices and `m` edges.
pub fn unc_lower_bound_density(n: u64, m: u64) -> Result<u64, FormulaError> {
    let f = DensityF::new(n, m)?;
    let mut k = 0u64;
    while f.scaled_cmp(k as i128, m as i128) == Ordering::Less {
        k += 1;
    }
    Ok(k)
}

/// Lower bound `ceil(m / h)` from the maximum number `h` of uncrossed edges.
pub fn unc_lower_bound_h(m_edges: u64, h: u64) -> Result<u64, FormulaError> {
    if h == 0 {
        return Err(FormulaError::ZeroH);
    }
    Ok(ceil_div(m_edges, h))
}

/// One reported quantity with its source tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quantity {
    pub name: String,
    pub value: u64,
    pub tag: String,
}

/// Bounds on `unc(G)` together with the quantities that produced them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub lower: u64,
    pub upper: Option<u64>,
    pub exact: Option<u64>,
    /// Tags of the formulas that were used, plus notes such as argument swaps.
    pub provenance: Vec<String>,
    pub quantities: Vec<Quantity>,
}

impl BoundReport {
    fn new() -> Self {
        BoundReport { lower: 0, upper: None, exact: None, provenance: Vec::new(), quantities: Vec::new() }
    }

    fn push(&mut self, name: &str, value: u64, tag: &str) {
        self.quantities.push(Quantity { name: name.to_string(), value, tag: tag.to_string() });
        if !self.provenance.iter().any(|t| t == tag) {
            self.provenance.push(tag.to_string());
        }
    }

    fn note(&mut self, tag: &str) {
        self.provenance.push(tag.to_string());
    }

    /// Tightens the upper bound, for example with the size of a known outerplanar
    /// decomposition or a verified certificate.
    pub fn with_upper(mut self, k: u64, tag: &str) -> Self {
        self.upper = Some(self.upper.map_or(k, |u| u.min(k)));
        self.note(tag);
        if self.upper == Some(self.lower) {
            self.exact = Some(self.lower);
        }
        self
    }

    pub fn is_consistent(&self) -> bool {
        let lo_ok = self.exact.is_none_or(|e| self.lower <= e);
        let hi_ok = match (self.exact, self.upper) {
            (Some(e), Some(u)) => e <= u,
            (None, Some(u)) => self.lower <= u,
            _ => true,
        };
        lo_ok && hi_ok
    }
}

/// Report for `K_n`.
pub fn report_complete(n: u64) -> Result<BoundReport, FormulaError> {
    let mut r = BoundReport::new();
    let unc = unc_complete(n)?;
    let to = outerthickness_complete(n)?;
    r.push(&format!("unc(K_{n})"), unc, "unc-complete");
    r.push(&format!("outerthickness(K_{n})"), to, "outerthickness-complete");
    if n >= 4 {
        let h = h_complete(n)?;
        let edges = n * (n - 1) / 2;
        r.push(&format!("h(K_{n})"), h, "h-complete");
        r.push("edge bound", unc_lower_bound_h(edges, h)?, "edge-bound");
    }
    if n >= 3 {
        r.push("density bound", unc_lower_bound_density(n, n * (n - 1) / 2)?, "density-bound");
    }
    r.lower = unc;
    r.exact = Some(unc);
    r.upper = Some(to);
    Ok(r)
}

/// Report for `K_{m,n}`.
pub fn report_complete_bipartite(m: u64, n: u64) -> Result<BoundReport, FormulaError> {
    let (a, b) = ordered(m, n)?;
    let mut r = BoundReport::new();
    if (a, b) != (m, n) {
        r.note("swapped");
    }
    let unc = unc_complete_bipartite(a, b)?;
    let to = outerthickness_complete_bipartite(a, b)?;
    let h = h_complete_bipartite(a, b)?;
    r.push(&format!("unc(K_{{{a},{b}}})"), unc, "unc-complete-bipartite");
    r.push(&format!("outerthickness(K_{{{a},{b}}})"), to, "outerthickness-complete-bipartite");
    r.push(&format!("h(K_{{{a},{b}}})"), h, "h-complete-bipartite");
    r.push("edge bound", unc_lower_bound_h(a * b, h)?, "edge-bound");
    if a + b >= 3 {
        r.push("density bound", unc_lower_bound_density(a + b, a * b)?, "density-bound");
    }
    r.lower = unc;
    r.exact = Some(unc);
    r.upper = Some(to);
    Ok(r)
}

/// Bounds for an arbitrary graph. Complete and complete bipartite graphs get their
/// exact values; other graphs get lower bounds, and planar graphs are settled at 1.
pub fn bound_report(g: &Graph) -> BoundReport {
    let n = g.n() as u64;
    let m = g.m() as u64;
    if n >= 1 && m == n * (n - 1) / 2 {
        return report_complete(n).expect("positive order");
    }
    if let Some((a, b)) = complete_bipartite_parts(g) {
        return report_complete_bipartite(a, b).expect("positive parts");
    }
    let mut r = BoundReport::new();
    if m == 0 {
        return r;
    }
    r.lower = 1;
    if n >= 3 {
        let k = ceil_div(m, 3 * n - 6);
        r.push("planar edge bound", k, "planar-edge-bound");
        r.lower = r.lower.max(k);
    }
    if g.is_connected() {
        if n >= 3 {
            let k = unc_lower_bound_density(n, m).expect("simple graphs have a real density");
            r.push("density bound", k, "density-bound");
            r.lower = r.lower.max(k);
        }
    } else {
        let k = per_component_density(g);
        r.push("density bound per component", k, "density-bound-per-component");
        r.note("per-component maximum for disconnected graphs");
        r.lower = r.lower.max(k);
    }
    if is_planar_graph(g) {
        r.note("planar");
        r.upper = Some(1);
        r.exact = Some(1);
    }
    r
}

fn per_component_density(g: &Graph) -> u64 {
    let labels = g.components();
    let count = labels.iter().copied().max().map_or(0, |c| c + 1);
    let mut sizes = vec![(0u64, 0u64); count];
    for &c in &labels {
        sizes[c].0 += 1;
    }
    for &(u, _) in g.edges() {
        sizes[labels[u]].1 += 1;
    }
    sizes
        .into_iter()
        .filter(|&(n, _)| n >= 3)
        .map(|(n, m)| unc_lower_bound_density(n, m).unwrap_or(0))
        .max()
        .unwrap_or(0)
        .max(1)
}

/// Part sizes `(smaller, larger)` when `g` is a complete bipartite graph.
pub fn complete_bipartite_parts(g: &Graph) -> Option<(u64, u64)> {
    if g.n() < 2 || !g.is_connected() {
        return None;
    }
    let colors = match g.coloring() {
        Some(c) => c.to_vec(),
        None => g.bipartition()?,
    };
    let black = colors.iter().filter(|&&c| c == crate::graph::Color::Black).count() as u64;
    let white = g.n() as u64 - black;
    (black * white == g.m() as u64).then_some((black.min(white), black.max(white)))
}
