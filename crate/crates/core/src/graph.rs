//! Simple undirected graphs with a canonical edge order, plus edge subsets.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be positive")]
    Empty,
    #[error("part sizes must be positive, got {0} and {1}")]
    EmptyPart(usize, usize),
    #[error("edge {0}-{1} references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    Duplicate(usize, usize),
    #[error("coloring has {got} entries for {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
    #[error("edge {0}-{1} joins two vertices of the same color")]
    Monochromatic(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Color {
    Black,
    White,
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; the position
/// of an edge in that order is its index, which is what [`EdgeSet`] refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    coloring: Option<Vec<Color>>,
}

impl Graph {
    /// Builds a graph, normalizing each edge to `u < v`. Loops and repeated edges are
    /// rejected. `n = 0` is allowed here (the generators reject it).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::Duplicate(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj, coloring: None })
    }

    /// Attaches a black/white coloring; every edge must be bichromatic.
    pub fn with_coloring(mut self, coloring: Vec<Color>) -> Result<Self, GraphError> {
        if coloring.len() != self.n {
            return Err(GraphError::ColoringLength { expected: self.n, got: coloring.len() });
        }
        if let Some(&(u, v)) = self.edges.iter().find(|&&(u, v)| coloring[u] == coloring[v]) {
            return Err(GraphError::Monochromatic(u, v));
        }
        self.coloring = Some(coloring);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn coloring(&self) -> Option<&[Color]> {
        self.coloring.as_deref()
    }

    /// Index of edge `{u, v}` in the canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    /// Spanning subgraph with the given edges (coloring is kept).
    pub fn spanning_subgraph(&self, set: &EdgeSet) -> Graph {
        let mut g = Graph::new(self.n, set.iter().map(|i| self.edges[i])).expect("subset of a simple graph");
        g.coloring = self.coloring.clone();
        g
    }

    /// Connected component label per vertex, labels in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        components_of(self.n, self.edges.iter().copied())
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().copied().max().map_or(0, |c| c + 1)
    }

    /// True iff the graph has exactly one component. A single vertex is connected,
    /// the empty graph on several vertices is not.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    /// A proper two-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<Color>> {
        let mut color: Vec<Option<Color>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(Color::Black);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let other = match color[v] {
                    Some(Color::Black) => Color::White,
                    _ => Color::Black,
                };
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(other);
                            queue.push_back(w);
                        }
                        Some(c) if c != other => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={})", self.n, self.m())
    }
}

pub(crate) fn components_of(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    (0..n)
        .map(|v| {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[r]
        })
        .collect()
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges)
}

/// `K_{m,n}` with blacks `0..m` and whites `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::EmptyPart(m, n));
    }
    let edges = (0..m).flat_map(|b| (m..m + n).map(move |w| (b, w)));
    let coloring = (0..m + n).map(|v| if v < m { Color::Black } else { Color::White }).collect();
    Graph::new(m + n, edges)?.with_coloring(coloring)
}

/// Cycle `C_n` on `0..n`, `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Empty);
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on `0..n`.
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// Subset of a host graph's edge indices, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet {
    words: Vec<u64>,
    universe: usize,
}

impl EdgeSet {
    pub fn new(universe: usize) -> Self {
        EdgeSet { words: vec![0; universe.div_ceil(64)], universe }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = EdgeSet::new(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = EdgeSet::new(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Edge set of `pairs` inside `host`; `None` if some pair is not a host edge.
    pub fn from_pairs(host: &Graph, pairs: impl IntoIterator<Item = (usize, usize)>) -> Option<Self> {
        let mut s = EdgeSet::new(host.m());
        for (u, v) in pairs {
            s.insert(host.edge_index(u, v)?);
        }
        Some(s)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe, "edge index {i} outside universe {}", self.universe);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    pub fn pairs<'a>(&'a self, host: &'a Graph) -> impl Iterator<Item = (usize, usize)> + 'a {
        self.iter().map(move |i| host.edge(i))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
