//! Outerplanar covers of `K_{m,n}` for `3 <= m <= n <= 2m-2` with
//! `ceil(mn / (2m+n-2))` parts.
//!
//! Path blocks: blacks `0..m` form a path, black `i` takes a block of `d_i`
//! consecutive whites (cyclically), and neighboring blocks overlap in two whites.
//! The degrees sum to `2m+n-2`, so one part spans all `n` whites. Successive parts
//! start `d_1` whites later and rotate the degree sequence left. Each part is a chain
//! of 4-cycles and pendant whites, hence outerplanar.
//!
//! For `n = m+1`, and for `n = m` with `m mod 3 != 2`, the cover of `K_{m,m+2}` is
//! restricted to the first `n` whites. For `n = m = 3q+2` edges are grouped by cyclic
//! diagonal `(j - i) mod m` (black `i`, white `j`). Band `k` takes diagonals
//! `{3k, 3k+1, 3k+2}`, which form a circular ladder; cutting it between two columns
//! leaves an ordinary ladder and two spare edges. The last part is the Hamiltonian
//! cycle on the two remaining diagonals, with the `2q` spare edges as chords. Cutting
//! band `k` at column `-k` makes those chords nested, so the cycle stays outerplanar.
//!
//! Every part is checked for outerplanarity and the union for coverage; failure is
//! reported as an error.

use super::{cover::spread_degrees, ConstructionError};

/// Target part count `ceil(mn / (2m+n-2))`.
pub fn outerplanar_part_count(m: usize, n: usize) -> usize {
    (m * n).div_ceil(2 * m + n - 2)
}

fn path_blocks(m: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut degrees = spread_degrees(m, 2 * m + n - 2);
    let mut s = 0usize;
    let mut parts = Vec::new();
    for _ in 0..outerplanar_part_count(m, n) {
        let mut part = Vec::with_capacity(2 * m + n - 2);
        let mut at = s;
        for (b, &d) in degrees.iter().enumerate() {
            part.extend((at..at + d).map(|j| (b, m + j % n)));
            at += d - 2;
        }
        part.sort_unstable();
        part.dedup();
        parts.push(part);
        s += degrees[0];
        degrees.rotate_left(1);
    }
    parts
}

fn cyclic_bands(m: usize) -> Vec<Vec<(usize, usize)>> {
    let q = (m - 2) / 3;
    let w = |i: usize, t: usize| m + (i + t) % m;
    let mut spare = Vec::new();
    let mut parts = Vec::new();
    for k in 0..q {
        let c = 3 * k + 1;
        let r = (m - k) % m;
        let prev = (r + m - 1) % m;
        let cut = [(r, w(r, c + m - 1)), (prev, w(prev, c + 1))];
        let mut part = Vec::with_capacity(3 * m);
        for i in 0..m {
            for t in [c - 1, c, c + 1] {
                let e = (i, w(i, t));
                if !cut.contains(&e) {
                    part.push(e);
                }
            }
        }
        spare.extend(cut);
        part.sort_unstable();
        parts.push(part);
    }
    let mut last: Vec<_> = (0..m).flat_map(|i| [(i, w(i, m - 2)), (i, w(i, m - 1))]).collect();
    last.extend(spare);
    last.sort_unstable();
    parts.push(last);
    parts
}

/// Edge lists of the parts, on canonical `K_{m,n}` ids. Parts are not yet checked.
pub fn outerplanar_cover_parts(m: usize, n: usize) -> Result<Vec<Vec<(usize, usize)>>, ConstructionError> {
    if m < 3 || n < m || n > 2 * m - 2 {
        return Err(ConstructionError::Invalid(format!("outerplanar cover needs 3 <= m <= n <= 2m-2, got ({m}, {n})")));
    }
    if n >= m + 2 {
        return Ok(path_blocks(m, n));
    }
    if n == m && m % 3 == 2 {
        return Ok(cyclic_bands(m));
    }
    // Restrict the K_{m,m+2} blocks; white ids shift by nothing since whites start at m.
    let wider = path_blocks(m, m + 2);
    Ok(wider.into_iter().map(|p| p.into_iter().filter(|&(_, w)| w < m + n).collect()).collect())
}
