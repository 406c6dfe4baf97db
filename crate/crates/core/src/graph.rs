//! Multigraphs with loops and parallel edges, and an exact spanning-tree
//! counter. `tau` is the independent oracle behind every tree construction:
//! a Laplacian minor determinant evaluated by Bareiss fraction-free
//! elimination over big integers, bit-exact at any size.

use crate::bits::SubsetMask;
use crate::error::{Error, Result};
use crate::{Int, Rat};
use num::{One, Signed, Zero};

pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub w: usize,
    pub id: EdgeId,
}

/// Edge ids are stable across deletion and contraction: surviving edges keep
/// their ids, so a marked edge can be tracked through construction steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    v: usize,
    edges: Vec<Edge>,
    next_id: EdgeId,
    pub marked: Option<EdgeId>,
}

impl Multigraph {
    pub fn new(v: usize) -> Self {
        assert!(v >= 1, "graphs have at least one vertex");
        Multigraph {
            v,
            edges: Vec::new(),
            next_id: 0,
            marked: None,
        }
    }

    pub fn add_edge(&mut self, u: usize, w: usize) -> EdgeId {
        assert!(u < self.v && w < self.v);
        let id = self.next_id;
        self.next_id += 1;
        self.edges.push(Edge { u, w, id });
        id
    }

    pub fn vertex_count(&self) -> usize {
        self.v
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edges
            .iter()
            .find(|e| e.id == id)
            .ok_or(Error::UnknownEdge(id))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.v];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for e in &self.edges {
                for (a, b) in [(e.u, e.w), (e.w, e.u)] {
                    if a == x && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Exact number of spanning trees; 0 when disconnected.
    pub fn tau(&self) -> Int {
        if !self.is_connected() {
            return Int::zero();
        }
        if self.v == 1 {
            return Int::one();
        }
        let n = self.v - 1;
        let mut lap = vec![vec![Int::zero(); n]; n];
        for e in &self.edges {
            if e.u == e.w {
                continue;
            }
            let (a, b) = (e.u, e.w);
            if a < n {
                lap[a][a] += 1;
            }
            if b < n {
                lap[b][b] += 1;
            }
            if a < n && b < n {
                lap[a][b] -= 1;
                lap[b][a] -= 1;
            }
        }
        let det = bareiss_determinant(lap);
        debug_assert!(!det.is_negative(), "Laplacian minor determinant is a count");
        det
    }

    pub fn delete_edge(&self, id: EdgeId) -> Result<Self> {
        self.edge(id)?;
        let mut g = self.clone();
        g.edges.retain(|e| e.id != id);
        if g.marked == Some(id) {
            g.marked = None;
        }
        Ok(g)
    }

    /// Contract `id`: identify its endpoints and drop the loops this creates
    /// (edges parallel to `id`). Contracting a loop is deleting it.
    pub fn contract_edge(&self, id: EdgeId) -> Result<Self> {
        let &Edge { u, w, .. } = self.edge(id)?;
        if u == w {
            return self.delete_edge(id);
        }
        let (keep, gone) = (u.min(w), u.max(w));
        let remap = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut g = Multigraph::new(self.v - 1);
        g.next_id = self.next_id;
        g.marked = self.marked;
        for e in &self.edges {
            if e.id == id {
                continue;
            }
            let (a, b) = (remap(e.u), remap(e.w));
            let was_parallel = (e.u == u && e.w == w) || (e.u == w && e.w == u);
            if was_parallel {
                // becomes a loop at the merged vertex; removed
                if g.marked == Some(e.id) {
                    g.marked = None;
                }
                continue;
            }
            g.edges.push(Edge { u: a, w: b, id: e.id });
        }
        if g.marked == Some(id) {
            g.marked = None;
        }
        Ok(g)
    }

    /// rho(G, e) = tau(G - e) / tau(G / e), exact; defined only when `e` is
    /// neither a loop nor a bridge.
    pub fn tree_ratio(&self, id: EdgeId) -> Result<Rat> {
        let e = self.edge(id)?;
        if e.u == e.w {
            return Err(Error::DegenerateEdge(id));
        }
        let del = self.delete_edge(id)?.tau();
        let con = self.contract_edge(id)?.tau();
        if del.is_zero() || con.is_zero() {
            return Err(Error::DegenerateEdge(id));
        }
        Ok(Rat::new(del, con))
    }

    /// One-point union: identify `hv` of `other` with `gv` of `self`.
    /// tau multiplies.
    pub fn wedge(&self, other: &Multigraph, gv: usize, hv: usize) -> Self {
        assert!(gv < self.v && hv < other.v);
        let mut g = self.clone();
        let offset = self.v;
        // other's vertices keep their order, except hv which maps to gv
        let remap = |x: usize| {
            use std::cmp::Ordering::*;
            match x.cmp(&hv) {
                Equal => gv,
                Less => offset + x,
                Greater => offset + x - 1,
            }
        };
        g.v = self.v + other.v - 1;
        for e in other.edges() {
            let id = g.next_id;
            g.next_id += 1;
            g.edges.push(Edge {
                u: remap(e.u),
                w: remap(e.w),
                id,
            });
        }
        g
    }

    /// Spanning trees by brute force; test oracle for `tau` on small graphs.
    pub fn tau_brute(&self) -> Int {
        if self.v == 1 {
            return Int::one();
        }
        let m = self.edges.len();
        if self.v > 64 || m > 20 {
            panic!("tau_brute is for small graphs only");
        }
        let mut count = 0u64;
        for pick in crate::bits::subsets_of(SubsetMask::full(m)) {
            if pick.card() != self.v - 1 {
                continue;
            }
            if self.is_spanning_forest(pick) {
                count += 1;
            }
        }
        Int::from(count)
    }

    fn is_spanning_forest(&self, pick: SubsetMask) -> bool {
        let mut parent: Vec<usize> = (0..self.v).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                parent[x] = find(parent, parent[x]);
            }
            parent[x]
        }
        for (k, e) in self.edges.iter().enumerate() {
            if !pick.contains(k) {
                continue;
            }
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.w));
            if a == b {
                return false; // cycle (loops included)
            }
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        (0..self.v).all(|x| find(&mut parent, x) == root)
    }
}

/// Exact determinant by Bareiss fraction-free elimination. Row swaps only;
/// every division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}

pub fn cycle_graph(n: usize) -> Multigraph {
    assert!(n >= 2);
    let mut g = Multigraph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

pub fn bundle_graph(k: usize) -> Multigraph {
    assert!(k >= 1);
    let mut g = Multigraph::new(2);
    for _ in 0..k {
        g.add_edge(0, 1);
    }
    g
}

pub fn complete_graph(n: usize) -> Multigraph {
    let mut g = Multigraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(i, j);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn tau_closed_forms() {
        for n in 2..=8 {
            assert_eq!(cycle_graph(n).tau(), Int::from(n as u64));
        }
        assert_eq!(complete_graph(4).tau(), Int::from(16));
        for k in 1..=6 {
            assert_eq!(bundle_graph(k).tau(), Int::from(k as u64));
        }
        let single = Multigraph::new(1);
        assert_eq!(single.tau(), Int::one());
    }

    #[test]
    fn tau_matches_brute_force() {
        let mut rng = SplitMix64::new(42);
        for _ in 0..200 {
            let v = rng.range(2, 5) as usize;
            let e = rng.range(1, 8) as usize;
            let mut g = Multigraph::new(v);
            for _ in 0..e {
                let a = rng.below(v as u64) as usize;
                let b = rng.below(v as u64) as usize;
                g.add_edge(a, b);
            }
            assert_eq!(g.tau(), g.tau_brute(), "graph {g:?}");
        }
    }

    #[test]
    fn deletion_contraction_recurrence() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..150 {
            let v = rng.range(2, 12) as usize;
            let mut g = Multigraph::new(v);
            for i in 1..v {
                g.add_edge(rng.below(i as u64) as usize, i); // spanning backbone
            }
            for _ in 0..rng.range(0, 6) {
                let a = rng.below(v as u64) as usize;
                let b = rng.below(v as u64) as usize;
                g.add_edge(a, b);
            }
            for e in g.edges().to_vec() {
                if e.u == e.w {
                    continue;
                }
                let lhs = g.tau();
                let rhs = g.delete_edge(e.id).unwrap().tau() + g.contract_edge(e.id).unwrap().tau();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn contract_cycle_edge_gives_smaller_cycle() {
        let c4 = cycle_graph(4);
        let c3 = c4.contract_edge(0).unwrap();
        assert_eq!(c3.vertex_count(), 3);
        assert_eq!(c3.tau(), Int::from(3));
    }

    #[test]
    fn deleting_a_bridge_disconnects() {
        let mut g = Multigraph::new(3);
        g.add_edge(0, 1);
        let bridge = g.add_edge(1, 2);
        g.add_edge(0, 1);
        assert_eq!(g.delete_edge(bridge).unwrap().tau(), Int::zero());
    }

    #[test]
    fn tree_ratio_examples() {
        let k3 = cycle_graph(3);
        assert_eq!(
            k3.tree_ratio(0).unwrap(),
            Rat::new(Int::one(), Int::from(2))
        );
        // bundle of k+1 edges: ratio k/1
        for k in 1..=5u64 {
            let g = bundle_graph(k as usize + 1);
            assert_eq!(g.tree_ratio(0).unwrap(), Rat::from_integer(Int::from(k)));
        }
        // cycle on a0+1 vertices: tau(H/f) = a0, tau(H-f) = 1
        for a0 in 2..=6u64 {
            let h = cycle_graph(a0 as usize + 1);
            assert_eq!(h.contract_edge(0).unwrap().tau(), Int::from(a0));
            assert_eq!(h.delete_edge(0).unwrap().tau(), Int::one());
        }
    }

    #[test]
    fn tree_ratio_degenerate_edges_error() {
        let mut g = Multigraph::new(2);
        let loop_id = {
            g.add_edge(0, 1);
            g.add_edge(0, 0)
        };
        assert_eq!(g.tree_ratio(loop_id), Err(Error::DegenerateEdge(loop_id)));
        let mut h = Multigraph::new(2);
        let bridge = h.add_edge(0, 1);
        assert_eq!(h.tree_ratio(bridge), Err(Error::DegenerateEdge(bridge)));
        assert_eq!(h.tree_ratio(99), Err(Error::UnknownEdge(99)));
    }

    #[test]
    fn wedge_multiplies_tau() {
        let a = cycle_graph(2);
        let b = cycle_graph(3);
        assert_eq!(a.wedge(&b, 0, 0).tau(), Int::from(6));
        let c5 = cycle_graph(5);
        assert_eq!(c5.wedge(&c5, 1, 3).tau(), Int::from(25));
        let single = Multigraph::new(1);
        let w = c5.wedge(&single, 0, 0);
        assert_eq!(w.tau(), c5.tau());
        assert_eq!(w.edge_count(), c5.edge_count());
    }

    #[test]
    fn edge_ids_stable_across_ops() {
        let mut g = cycle_graph(4);
        let extra = g.add_edge(0, 1);
        g.marked = Some(extra);
        let d = g.delete_edge(0).unwrap();
        assert!(d.edge(extra).is_ok());
        assert_eq!(d.marked, Some(extra));
        let c = g.contract_edge(1).unwrap();
        assert!(c.edge(extra).is_ok());
        // contracting an edge parallel to the marked one unmarks it
        let c2 = g.contract_edge(extra).unwrap();
        assert_eq!(c2.marked, None);
    }

    #[test]
    fn bareiss_matches_small_hand_determinants() {
        let m = vec![
            vec![Int::from(2), Int::from(-1)],
            vec![Int::from(-1), Int::from(2)],
        ];
        assert_eq!(bareiss_determinant(m), Int::from(3));
        let zero_row = vec![
            vec![Int::zero(), Int::zero()],
            vec![Int::zero(), Int::one()],
        ];
        assert_eq!(bareiss_determinant(zero_row), Int::zero());
        let needs_swap = vec![
            vec![Int::zero(), Int::one()],
            vec![Int::one(), Int::zero()],
        ];
        assert_eq!(bareiss_determinant(needs_swap), Int::from(-1));
    }
}
