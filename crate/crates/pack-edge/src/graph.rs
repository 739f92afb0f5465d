//! Loopless undirected multigraphs and the structural queries the rest of the
//! crate is built on: degrees, line-graph distances, girth, threads,
//! components and edge-induced subgraphs.

use std::collections::VecDeque;
use thiserror::Error;

/// Vertices are dense ids `0..n`.
pub type VertexId = usize;
/// Edges are dense ids `0..m`, assigned in construction order. Parallel edges
/// keep distinct ids.
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {u} (edge index {index})")]
    LoopEdge { u: VertexId, index: usize },
    #[error("edge index {index} references vertex {v}, but the graph has {n} vertices")]
    VertexOutOfRange { v: VertexId, index: usize, n: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
}

/// Undirected multigraph without loops. Immutable after construction, so it
/// can be shared freely between threads and all queries are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

/// Result of [`MultiGraph::induced_by_edges`]: the subgraph on the endpoints
/// of the selected edges, with maps back to the host graph's ids.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: MultiGraph,
    /// new vertex id -> original vertex id
    pub vertex_map: Vec<VertexId>,
    /// new edge id -> original edge id
    pub edge_map: Vec<EdgeId>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(GraphError::LoopEdge { u, index });
            }
            for &w in &[u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, index, n });
                }
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(MultiGraph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Incident `(neighbor, edge)` pairs in edge-insertion order.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    /// Degree counts parallel edges with multiplicity.
    pub fn degree(&self, v: VertexId) -> usize {
        assert!(v < self.n, "vertex id {v} out of range");
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_simple(&self) -> bool {
        self.parallel_pair().is_none()
    }

    /// Some pair of parallel edges `(e1, e2)` with `e1 < e2`, if any.
    pub fn parallel_pair(&self) -> Option<(EdgeId, EdgeId)> {
        let mut sorted: Vec<(VertexId, VertexId, EdgeId)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| (u.min(v), u.max(v), id))
            .collect();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                let (a, b) = (w[0].2, w[1].2);
                return Some((a.min(b), a.max(b)));
            }
        }
        None
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].iter().any(|&(w, _)| w == v)
    }

    /// Distinct neighbors of `v`, ascending.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut ns: Vec<VertexId> = self.adj[v].iter().map(|&(w, _)| w).collect();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    /// No two adjacent vertices both have degree exactly `d`.
    pub fn is_d_irregular(&self, d: usize) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| !(self.degree(u) == d && self.degree(v) == d))
    }

    /// Line-graph distance between two edges; `None` when they lie in
    /// different components. Adjacent edges (sharing an endpoint) are at
    /// distance 1, an edge is at distance 0 from itself.
    pub fn edge_distance(&self, e1: EdgeId, e2: EdgeId) -> Option<usize> {
        assert!(e1 < self.edge_count() && e2 < self.edge_count(), "edge id out of range");
        if e1 == e2 {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.edge_count()];
        dist[e1] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(e1);
        while let Some(e) = queue.pop_front() {
            let (u, v) = self.edges[e];
            for &w in &[u, v] {
                for &(_, f) in &self.adj[w] {
                    if dist[f] == usize::MAX {
                        dist[f] = dist[e] + 1;
                        if f == e2 {
                            return Some(dist[f]);
                        }
                        queue.push_back(f);
                    }
                }
            }
        }
        None
    }

    /// Bounded variant of [`edge_distance`](Self::edge_distance).
    pub fn edge_distance_at_most(&self, e1: EdgeId, e2: EdgeId, d: usize) -> bool {
        if e1 == e2 {
            return true;
        }
        if d == 0 {
            return false;
        }
        let mut dist = vec![usize::MAX; self.edge_count()];
        dist[e1] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(e1);
        while let Some(e) = queue.pop_front() {
            if dist[e] == d {
                continue;
            }
            let (u, v) = self.edges[e];
            for &w in &[u, v] {
                for &(_, f) in &self.adj[w] {
                    if dist[f] == usize::MAX {
                        dist[f] = dist[e] + 1;
                        if f == e2 {
                            return true;
                        }
                        queue.push_back(f);
                    }
                }
            }
        }
        false
    }

    /// For every edge, the edges at line-graph distance `1..=radius`
    /// (the edge itself excluded), ascending.
    pub fn edge_balls(&self, radius: usize) -> Vec<Vec<EdgeId>> {
        let m = self.edge_count();
        let mut balls = vec![Vec::new(); m];
        let mut dist = vec![usize::MAX; m];
        for e in 0..m {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[e] = 0;
            let mut queue = VecDeque::new();
            queue.push_back(e);
            while let Some(g) = queue.pop_front() {
                if dist[g] == radius {
                    continue;
                }
                let (u, v) = self.edges[g];
                for &w in &[u, v] {
                    for &(_, f) in &self.adj[w] {
                        if dist[f] == usize::MAX {
                            dist[f] = dist[g] + 1;
                            balls[e].push(f);
                            queue.push_back(f);
                        }
                    }
                }
            }
            balls[e].sort_unstable();
        }
        balls
    }

    /// Length of a shortest cycle; a pair of parallel edges is a 2-cycle.
    /// `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent_edge = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent_edge[root] = usize::MAX;
            let mut queue = VecDeque::new();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for &(y, e) in &self.adj[x] {
                    if e == parent_edge[x] {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent_edge[y] = e;
                        queue.push_back(y);
                    } else {
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Some path on `k` vertices, each of degree exactly 2 in `self`.
    /// Scans lowest vertex ids first, so the witness is deterministic.
    pub fn find_k_thread(&self, k: usize) -> Option<Vec<VertexId>> {
        assert!(k >= 1, "thread length must be positive");
        let deg2: Vec<bool> = (0..self.n).map(|v| self.degree(v) == 2).collect();
        let mut path = Vec::with_capacity(k);
        let mut on_path = vec![false; self.n];
        for start in 0..self.n {
            if !deg2[start] {
                continue;
            }
            path.push(start);
            on_path[start] = true;
            if self.extend_thread(k, &deg2, &mut path, &mut on_path) {
                return Some(path);
            }
            on_path[start] = false;
            path.pop();
        }
        None
    }

    fn extend_thread(
        &self,
        k: usize,
        deg2: &[bool],
        path: &mut Vec<VertexId>,
        on_path: &mut Vec<bool>,
    ) -> bool {
        if path.len() == k {
            return true;
        }
        let tail = *path.last().unwrap();
        for y in self.neighbors(tail) {
            if !deg2[y] || on_path[y] {
                continue;
            }
            path.push(y);
            on_path[y] = true;
            if self.extend_thread(k, deg2, path, on_path) {
                return true;
            }
            on_path[y] = false;
            path.pop();
        }
        false
    }

    /// For each incident edge of `u` (in incident order), the run of
    /// degree-2 vertices reached by walking away from `u` through that edge.
    /// A walk stops at the first vertex of degree other than 2 (or back at
    /// `u`), so a pendant cycle of 2-vertices at `u` shows up as the same
    /// run from both of its attachment directions.
    pub fn thread_runs(&self, u: VertexId) -> Vec<Vec<VertexId>> {
        self.incident(u)
            .iter()
            .map(|&(first, _)| {
                let mut run = Vec::new();
                let mut prev = u;
                let mut cur = first;
                while cur != u && self.degree(cur) == 2 {
                    run.push(cur);
                    let next = self.adj[cur]
                        .iter()
                        .map(|&(w, _)| w)
                        .find(|&w| w != prev)
                        .unwrap_or(prev);
                    prev = cur;
                    cur = next;
                }
                run
            })
            .collect()
    }

    /// Size of the largest thread: the longest path of degree-2 vertices.
    pub fn longest_thread(&self) -> usize {
        // The degree-2 subgraph decomposes into paths and cycles, and either
        // shape carries a path on all of its vertices.
        let deg2: Vec<bool> = (0..self.n).map(|v| self.degree(v) == 2).collect();
        let mut seen = vec![false; self.n];
        let mut best = 0;
        for v in 0..self.n {
            if !deg2[v] || seen[v] {
                continue;
            }
            let mut size = 0;
            let mut queue = VecDeque::new();
            queue.push_back(v);
            seen[v] = true;
            while let Some(x) = queue.pop_front() {
                size += 1;
                for y in self.neighbors(x) {
                    if deg2[y] && !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            best = best.max(size);
        }
        best
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member. Isolated vertices form their own components.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for v in 0..self.n {
            if seen[v] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::new();
            queue.push_back(v);
            seen[v] = true;
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Subgraph consisting of the given edges and their endpoints only.
    /// Vertices are relabeled compactly; the maps record the original ids.
    pub fn induced_by_edges(&self, edge_ids: &[EdgeId]) -> InducedSubgraph {
        let mut ids: Vec<EdgeId> = edge_ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut vertex_map = Vec::new();
        for &e in &ids {
            let (u, v) = self.edges[e];
            vertex_map.push(u);
            vertex_map.push(v);
        }
        vertex_map.sort_unstable();
        vertex_map.dedup();
        let index_of = |v: VertexId| vertex_map.binary_search(&v).unwrap();
        let edges: Vec<(VertexId, VertexId)> = ids
            .iter()
            .map(|&e| {
                let (u, v) = self.edges[e];
                (index_of(u), index_of(v))
            })
            .collect();
        let graph = MultiGraph::new(vertex_map.len(), edges).expect("induced subgraph is well formed");
        InducedSubgraph { graph, vertex_map, edge_map: ids }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path_graph(n: usize) -> MultiGraph {
        MultiGraph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    pub(crate) fn cycle_graph(n: usize) -> MultiGraph {
        MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    fn k4() -> MultiGraph {
        MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_bad_ids() {
        assert_eq!(
            MultiGraph::new(2, vec![(1, 1)]),
            Err(GraphError::LoopEdge { u: 1, index: 0 })
        );
        assert_eq!(
            MultiGraph::new(2, vec![(0, 2)]),
            Err(GraphError::VertexOutOfRange { v: 2, index: 0, n: 2 })
        );
    }

    #[test]
    fn degree_counts_multiplicity() {
        let g = MultiGraph::new(3, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree(2), 0);
        assert!(!g.is_simple());
        assert_eq!(g.parallel_pair(), Some((0, 1)));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn degree_panics_out_of_range() {
        let g = path_graph(2);
        g.degree(5);
    }

    #[test]
    fn edge_distance_basics() {
        let p3 = path_graph(3);
        assert_eq!(p3.edge_distance(0, 0), Some(0));
        assert_eq!(p3.edge_distance(0, 1), Some(1));

        let p5 = path_graph(5);
        assert_eq!(p5.edge_distance(0, 3), Some(3));
        assert!(p5.edge_distance_at_most(0, 3, 3));
        assert!(!p5.edge_distance_at_most(0, 3, 2));

        let two = MultiGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.edge_distance(0, 1), None);
    }

    #[test]
    fn parallel_edges_are_line_adjacent() {
        let g = MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_distance(0, 1), Some(1));
        assert_eq!(g.girth(), Some(2));
    }

    #[test]
    fn girth_values() {
        assert_eq!(path_graph(6).girth(), None);
        assert_eq!(cycle_graph(5).girth(), Some(5));
        assert_eq!(k4().girth(), Some(3));
        // cycle with a chord
        let g = MultiGraph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn irregularity() {
        assert!(!k4().is_d_irregular(3));
        assert!(cycle_graph(5).is_d_irregular(3));
        assert!(!cycle_graph(5).is_d_irregular(2));
    }

    #[test]
    fn threads() {
        assert_eq!(cycle_graph(6).find_k_thread(4), Some(vec![0, 1, 2, 3]));
        assert_eq!(k4().find_k_thread(1), None);
        // u1-v1-v2-v3-v4-u2 with u1, u2 of degree 3
        let g = MultiGraph::new(
            8,
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 6), (0, 7), (5, 6), (5, 7)],
        )
        .unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(5), 3);
        assert_eq!(g.find_k_thread(4), Some(vec![1, 2, 3, 4]));
        assert_eq!(g.longest_thread(), 4);
        assert_eq!(cycle_graph(6).longest_thread(), 6);
    }

    #[test]
    fn components_and_induced() {
        let two = MultiGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);

        let sub = two.induced_by_edges(&[]);
        assert_eq!(sub.graph.vertex_count(), 0);
        assert_eq!(sub.graph.edge_count(), 0);

        let sub = two.induced_by_edges(&[1]);
        assert_eq!(sub.graph.vertex_count(), 2);
        assert_eq!(sub.vertex_map, vec![2, 3]);
        assert_eq!(sub.edge_map, vec![1]);
    }

    #[test]
    fn edge_balls_match_pairwise_distance() {
        let g = MultiGraph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let balls = g.edge_balls(2);
        for e in 0..g.edge_count() {
            for f in 0..g.edge_count() {
                if e == f {
                    continue;
                }
                let within = g.edge_distance(e, f).map(|d| d <= 2).unwrap_or(false);
                assert_eq!(balls[e].contains(&f), within, "edges {e} {f}");
            }
        }
    }
}
