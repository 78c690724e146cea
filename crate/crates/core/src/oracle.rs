//! Exhaustive ground truth for tiny connected graphs.
//!
//! Admissible edge sets are found by enumerating connected spanning subgraphs from
//! the largest size down and searching their rotation systems for one that is planar
//! and leaves every other host edge with cofacial endpoints. Only maximal sets are
//! kept. `unc` is then a minimum set cover by these sets.

use serde::Serialize;
use thiserror::Error;

use crate::certify::UncrossedCertificate;
use crate::embedding::{planar_embedding, PlaneDrawing, RotationSystem};
use crate::graph::{components_of, EdgeSet, Graph};

/// Default limit on host edges.
pub const DEFAULT_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("host has {edges} edges, above the cap of {cap} (about 2^{edges} = {subsets} edge subsets); raise the cap to proceed")]
    TooLarge { edges: usize, cap: usize, subsets: u128 },
    #[error("host has {0} vertices; the oracle handles at most 64")]
    TooManyVertices(usize),
    #[error("host graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    /// Refuse hosts with more edges than this.
    pub cap: usize,
    /// Only consider subgraphs with at most this many edges.
    pub max_edges: Option<usize>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { cap: DEFAULT_CAP, max_edges: None }
    }
}

/// An admissible edge set with a witness drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub edges: EdgeSet,
    pub witness: PlaneDrawing,
}

/// All maximal admissible edge sets of a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleFamily {
    pub host: Graph,
    /// Sorted by decreasing size, then by enumeration order.
    pub members: Vec<Member>,
    pub maximal_only: bool,
}

/// Result of the exact `unc` computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncSolution {
    pub value: usize,
    /// Indices into the family's members.
    pub chosen: Vec<usize>,
    pub certificate: UncrossedCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub h: usize,
    pub ecr: usize,
    pub members: usize,
}

fn check_host(host: &Graph, cap: usize) -> Result<(), OracleError> {
    if host.m() > cap {
        return Err(OracleError::TooLarge { edges: host.m(), cap, subsets: 1u128 << host.m().min(127) });
    }
    if host.n() > 64 {
        return Err(OracleError::TooManyVertices(host.n()));
    }
    if !host.is_connected() {
        return Err(OracleError::Disconnected);
    }
    Ok(())
}

fn mask_of(set: &EdgeSet) -> u64 {
    set.iter().fold(0u64, |acc, i| acc | 1 << i)
}

fn set_of(mask: u64, m: usize) -> EdgeSet {
    EdgeSet::from_indices(m, (0..m).filter(|&i| mask >> i & 1 == 1))
}

/// Subsets of `0..m` with exactly `k` elements, in increasing numeric order.
fn subsets_of_size(m: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut next = if k == 0 {
        Some(0u64)
    } else if k > m {
        None
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur.checked_add(c);
            match r {
                Some(r) if r <= limit && r != 0 => Some((((r ^ cur) >> 2) / c) | r),
                _ => None,
            }
        };
        Some(cur)
    })
}

/// Enumerates the maximal admissible edge sets of a connected host.
pub fn enumerate_admissible(host: &Graph, opts: OracleOptions) -> Result<AdmissibleFamily, OracleError> {
    check_host(host, opts.cap)?;
    let n = host.n();
    let m = host.m();
    let mut limit = opts.max_edges.unwrap_or(m).min(m);
    if n >= 3 {
        limit = limit.min(3 * n - 6);
    }
    let mut members: Vec<Member> = Vec::new();
    let mut masks: Vec<u64> = Vec::new();
    let lowest = n.saturating_sub(1);
    for size in (lowest..=limit).rev() {
        for mask in subsets_of_size(m, size) {
            if masks.iter().any(|&big| mask & !big == 0) {
                continue;
            }
            let set = set_of(mask, m);
            if let Some(witness) = admissible_witness(host, &set) {
                masks.push(mask);
                members.push(Member { edges: set, witness });
            }
        }
    }
    Ok(AdmissibleFamily { host: host.clone(), members, maximal_only: true })
}

/// Searches for a connected, spanning, planar rotation of `set` under which every
/// other host edge has cofacial endpoints. Returns the first one found.
pub fn admissible_witness(host: &Graph, set: &EdgeSet) -> Option<PlaneDrawing> {
    let n = host.n();
    let drawn: Vec<(usize, usize)> = set.pairs(host).collect();
    if n == 0 || components_of(n, drawn.iter().copied()).iter().any(|&c| c != 0) {
        return None;
    }
    let sub = host.spanning_subgraph(set);
    planar_embedding(&sub)?;
    let undrawn: Vec<(usize, usize)> =
        host.edges().iter().enumerate().filter(|&(i, _)| !set.contains(i)).map(|(_, &e)| e).collect();
    let rot = search_rotations(&sub, &undrawn)?;
    PlaneDrawing::new(RotationSystem::new(rot).ok()?, None).ok()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn search_rotations(sub: &Graph, undrawn: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let n = sub.n();
    let e = sub.m();
    // Vertices by decreasing degree; the first one with degree >= 3 only takes one of
    // each mirror pair of cyclic orders.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(sub.degree(v)));
    let mirror_fixed = order.first().copied().filter(|&v| sub.degree(v) >= 3);
    let options: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| {
            let adj = sub.neighbors(v);
            if adj.is_empty() {
                return vec![Vec::new()];
            }
            permutations(&adj[1..])
                .into_iter()
                .filter(|p| Some(v) != mirror_fixed || p[0] < p[p.len() - 1])
                .map(|p| std::iter::once(adj[0]).chain(p).collect())
                .collect()
        })
        .collect();
    let mut offsets = vec![0usize; n + 1];
    for v in 0..n {
        offsets[v + 1] = offsets[v] + sub.degree(v);
    }
    let mut idx = vec![0usize; n];
    let mut pos = vec![0usize; n * n];
    let mut visited = vec![false; 2 * e];
    let mut faces: Vec<u64> = Vec::with_capacity(e + 2);
    loop {
        let rot: Vec<&Vec<usize>> = (0..n).map(|v| &options[v][idx[v]]).collect();
        for v in 0..n {
            for (i, &w) in rot[v].iter().enumerate() {
                pos[v * n + w] = i;
            }
        }
        visited.iter_mut().for_each(|x| *x = false);
        faces.clear();
        for v in 0..n {
            for i in 0..rot[v].len() {
                if visited[offsets[v] + i] {
                    continue;
                }
                let mut mask = 0u64;
                let (mut a, mut j) = (v, i);
                while !visited[offsets[a] + j] {
                    visited[offsets[a] + j] = true;
                    mask |= 1 << a;
                    let b = rot[a][j];
                    let k = pos[b * n + a];
                    j = (k + 1) % rot[b].len();
                    a = b;
                }
                faces.push(mask);
            }
        }
        let face_count = if e == 0 { 1 } else { faces.len() };
        if n + face_count == e + 2
            && undrawn.iter().all(|&(u, w)| {
                let both = 1u64 << u | 1u64 << w;
                faces.iter().any(|&f| f & both == both)
            })
        {
            return Some(rot.into_iter().cloned().collect());
        }
        // Odometer over the degree order, last vertex fastest.
        let mut t = n;
        loop {
            if t == 0 {
                return None;
            }
            t -= 1;
            let v = order[t];
            idx[v] += 1;
            if idx[v] < options[v].len() {
                break;
            }
            idx[v] = 0;
        }
    }
}

/// Maximum number of uncrossed edges over all drawings of the host.
pub fn exact_h(host: &Graph, opts: OracleOptions) -> Result<usize, OracleError> {
    let fam = enumerate_admissible(host, opts)?;
    Ok(fam.members.iter().map(|mb| mb.edges.len()).max().unwrap_or(0))
}

/// Minimum number of crossed edges: `|E| - h`.
pub fn exact_ecr(host: &Graph, opts: OracleOptions) -> Result<usize, OracleError> {
    Ok(host.m() - exact_h(host, opts)?)
}

/// Whether some drawing leaves at least `k` edges uncrossed.
pub fn max_uncrossed_subgraph(host: &Graph, k: usize, opts: OracleOptions) -> Result<bool, OracleError> {
    Ok(exact_h(host, opts)? >= k)
}

/// Exact `unc` with a witness certificate.
pub fn exact_unc(host: &Graph, opts: OracleOptions) -> Result<UncSolution, OracleError> {
    let fam = enumerate_admissible(host, opts)?;
    Ok(solve_cover(&fam))
}

/// Minimum set cover of the host's edges by family members. Ties go to the
/// lexicographically smallest list of member indices.
pub fn solve_cover(fam: &AdmissibleFamily) -> UncSolution {
    let m = fam.host.m();
    let masks: Vec<u64> = fam.members.iter().map(|mb| mask_of(&mb.edges)).collect();
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let chosen = if m == 0 {
        vec![0]
    } else {
        let max_size = masks.iter().map(|x| x.count_ones()).max().unwrap_or(1).max(1);
        let mut best: Option<Vec<usize>> = None;
        let mut stack = Vec::new();
        cover_search(&masks, full, max_size, &mut stack, &mut best);
        best.expect("every edge lies in some admissible set")
    };
    let drawings = chosen.iter().map(|&i| fam.members[i].witness.clone()).collect();
    UncSolution { value: chosen.len(), chosen, certificate: UncrossedCertificate::new(fam.host.clone(), drawings) }
}

fn cover_search(masks: &[u64], uncovered: u64, max_size: u32, stack: &mut Vec<usize>, best: &mut Option<Vec<usize>>) {
    if uncovered == 0 {
        let mut cand = stack.clone();
        cand.sort_unstable();
        let better = match best {
            None => true,
            Some(b) => cand.len() < b.len() || (cand.len() == b.len() && cand < *b),
        };
        if better {
            *best = Some(cand);
        }
        return;
    }
    let need = uncovered.count_ones().div_ceil(max_size) as usize;
    if let Some(b) = best {
        if stack.len() + need > b.len() {
            return;
        }
    }
    // Branch on the uncovered edge with the fewest covering members.
    let mut pick = None;
    let mut rest = uncovered;
    while rest != 0 {
        let e = rest.trailing_zeros();
        rest &= rest - 1;
        let count = masks.iter().filter(|&&x| x >> e & 1 == 1).count();
        if pick.is_none_or(|(_, c)| count < c) {
            pick = Some((e, count));
        }
    }
    let (e, _) = pick.expect("non-empty");
    for (i, &x) in masks.iter().enumerate() {
        if x >> e & 1 == 1 {
            stack.push(i);
            cover_search(masks, uncovered & !x, max_size, stack, best);
            stack.pop();
        }
    }
}

/// `h`, `ecr` and the member count in one pass.
pub fn summary(host: &Graph, opts: OracleOptions) -> Result<OracleSummary, OracleError> {
    let fam = enumerate_admissible(host, opts)?;
    let h = fam.members.iter().map(|mb| mb.edges.len()).max().unwrap_or(0);
    Ok(OracleSummary { h, ecr: host.m() - h, members: fam.members.len() })
}
