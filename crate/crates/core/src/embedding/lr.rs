//! Left-right planarity test with embedding extraction.

use std::collections::HashMap;

use super::RotationSystem;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State {
    adjs: Vec<Vec<usize>>,
    // Oriented edges, indexed by id.
    tail: Vec<usize>,
    head: Vec<usize>,
    edge_id: HashMap<(usize, usize), usize>,
    out: Vec<Vec<usize>>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    ordered_out: Vec<Vec<usize>>,
    reference: Vec<usize>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
    rot: Vec<Vec<usize>>,
}

/// Returns a planar rotation system for `g`, or `None` if `g` is not planar.
pub fn planar_embedding(g: &Graph) -> Option<RotationSystem> {
    let n = g.n();
    let m = g.m();
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut st = State {
        adjs: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
        tail: Vec::with_capacity(m),
        head: Vec::with_capacity(m),
        edge_id: HashMap::with_capacity(2 * m),
        out: vec![Vec::new(); n],
        height: vec![None; n],
        parent_edge: vec![None; n],
        lowpt: Vec::with_capacity(m),
        lowpt2: Vec::with_capacity(m),
        nesting_depth: Vec::with_capacity(m),
        ordered_out: Vec::new(),
        reference: Vec::new(),
        side: Vec::new(),
        stack: Vec::new(),
        stack_bottom: Vec::new(),
        lowpt_edge: Vec::new(),
        left_ref: vec![NONE; n],
        right_ref: vec![NONE; n],
        rot: vec![Vec::new(); n],
    };
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v].is_none() {
            st.height[v] = Some(0);
            roots.push(v);
            st.dfs_orientation(v);
        }
    }
    let e = st.tail.len();
    st.reference = vec![NONE; e];
    st.side = vec![1; e];
    st.stack_bottom = vec![0; e];
    st.lowpt_edge = vec![NONE; e];
    st.sort_out_edges();
    for &r in &roots {
        if !st.dfs_testing(r) {
            return None;
        }
    }
    for ei in 0..e {
        let s = st.sign(ei);
        st.nesting_depth[ei] *= s;
    }
    st.sort_out_edges();
    for v in 0..n {
        st.rot[v] = st.ordered_out[v].iter().map(|&ei| st.head[ei]).collect();
    }
    for &r in &roots {
        st.dfs_embedding(r);
    }
    Some(RotationSystem::new(st.rot).expect("planarity embedding is well formed"))
}

impl State {
    fn sort_out_edges(&mut self) {
        self.ordered_out = self
            .out
            .iter()
            .map(|l| {
                let mut l = l.clone();
                l.sort_by_key(|&ei| self.nesting_depth[ei]);
                l
            })
            .collect();
    }

    fn h(&self, v: usize) -> usize {
        self.height[v].expect("visited vertex")
    }

    fn dfs_orientation(&mut self, v: usize) {
        let e = self.parent_edge[v];
        let hv = self.h(v);
        for i in 0..self.adjs[v].len() {
            let w = self.adjs[v][i];
            if self.edge_id.contains_key(&(v, w)) || self.edge_id.contains_key(&(w, v)) {
                continue;
            }
            let vw = self.tail.len();
            self.tail.push(v);
            self.head.push(w);
            self.edge_id.insert((v, w), vw);
            self.out[v].push(vw);
            self.lowpt.push(hv);
            self.lowpt2.push(hv);
            self.nesting_depth.push(0);
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.dfs_orientation(w);
                }
                Some(hw) => self.lowpt[vw] = hw,
            }
            let mut depth = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < hv {
                depth += 1;
            }
            self.nesting_depth[vw] = depth;
            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(hi) => !i.is_empty() && self.lowpt[hi] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.expect("non-empty pair")];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.expect("non-empty pair")];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn dfs_testing(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let hv = self.h(v);
        let order = self.ordered_out[v].clone();
        for (k, &ei) in order.iter().enumerate() {
            let w = self.head[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.dfs_testing(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval { low: Some(ei), high: Some(ei) },
                });
            }
            if self.lowpt[ei] < hv {
                let e = e.expect("return edge below a root");
                if k == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("pending return edges");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qrl = q.right.low.expect("non-empty interval");
            if self.lowpt[qrl] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high.map_or(NONE, |x| x);
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qrl] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(prl) = p.right.low {
                self.reference[prl] = q.right.high.map_or(NONE, |x| x);
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pll) = p.left.low {
                self.reference[pll] = q.left.high.map_or(NONE, |x| x);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        let hu = self.h(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(pll) = p.left.low {
                self.side[pll] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(hi) = p.left.high {
                if self.head[hi] != u {
                    break;
                }
                p.left.high = self.ref_of(hi);
            }
            if p.left.high.is_none() {
                if let Some(pll) = p.left.low {
                    self.reference[pll] = p.right.low.map_or(NONE, |x| x);
                    self.side[pll] = -1;
                    p.left.low = None;
                }
            }
            while let Some(hi) = p.right.high {
                if self.head[hi] != u {
                    break;
                }
                p.right.high = self.ref_of(hi);
            }
            if p.right.high.is_none() {
                if let Some(prl) = p.right.low {
                    self.reference[prl] = p.left.low.map_or(NONE, |x| x);
                    self.side[prl] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            let top = self.stack.last().expect("return edge of e");
            let (hl, hr) = (top.left.high, top.right.high);
            let pick = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
            self.reference[e] = pick.map_or(NONE, |x| x);
        }
    }

    fn ref_of(&self, e: usize) -> Option<usize> {
        let r = self.reference[e];
        (r != NONE).then_some(r)
    }

    fn sign(&mut self, e: usize) -> i64 {
        // Iterative form of the recursive sign resolution along reference chains.
        let mut chain = vec![e];
        while let Some(r) = self.ref_of(*chain.last().unwrap()) {
            chain.push(r);
        }
        let mut acc = self.side[*chain.last().unwrap()];
        for &x in chain.iter().rev().skip(1) {
            self.side[x] *= acc;
            self.reference[x] = NONE;
            acc = self.side[x];
        }
        acc
    }

    fn dfs_embedding(&mut self, v: usize) {
        let order = self.ordered_out[v].clone();
        for ei in order {
            let w = self.head[ei];
            if self.parent_edge[w] == Some(ei) {
                self.rot[w].insert(0, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.dfs_embedding(w);
            } else if self.side[ei] == 1 {
                let r = self.right_ref[w];
                let i = self.rot[w].iter().position(|&x| x == r).expect("right reference");
                self.rot[w].insert(i + 1, v);
            } else {
                let r = self.left_ref[w];
                let i = self.rot[w].iter().position(|&x| x == r).expect("left reference");
                self.rot[w].insert(i, v);
                self.left_ref[w] = v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::PlaneDrawing;
    use crate::graph::{complete_bipartite, complete_graph};

    fn check_planar(g: &Graph) {
        let rot = planar_embedding(g).expect("planar");
        assert_eq!(rot.edges(), g.edges().to_vec());
        let d = PlaneDrawing::new(rot, None).unwrap();
        if g.is_connected() {
            assert!(d.is_planar_embedding());
        }
    }

    #[test]
    fn small_planar_graphs_embed() {
        check_planar(&complete_graph(4).unwrap());
        check_planar(&complete_bipartite(2, 7).unwrap());
        let mut edges = complete_graph(5).unwrap().edges().to_vec();
        edges.pop();
        check_planar(&Graph::new(5, edges).unwrap());
    }

    #[test]
    fn kuratowski_graphs_rejected() {
        assert!(planar_embedding(&complete_graph(5).unwrap()).is_none());
        assert!(planar_embedding(&complete_bipartite(3, 3).unwrap()).is_none());
        // Petersen graph.
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        assert!(planar_embedding(&Graph::new(10, edges).unwrap()).is_none());
    }
}
