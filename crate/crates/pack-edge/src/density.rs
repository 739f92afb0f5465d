//! Exact maximum average degree via maximum-density-subgraph feasibility
//! tests. Everything is computed in integer/rational arithmetic; no floating
//! point enters the result.

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::graph::{GraphError, MultiGraph};

/// Exact `mad(g) = max over nonempty subgraphs H of 2|E(H)|/|V(H)|`.
///
/// The maximizing ratio `|E(H)|/|V(H)|` is a rational with denominator at
/// most `n`, so a feasibility bisection ("is there a subgraph denser than
/// p/q?", answered by a max-flow cut) narrows the density to an interval
/// containing exactly one such rational, which is then recovered exactly.
pub fn mad_exact(g: &MultiGraph) -> Result<Rational64, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::EmptyGraph);
    }
    if g.edge_count() == 0 {
        return Ok(Rational64::zero());
    }
    let m = g.edge_count() as i64;
    let n_i = n as i64;

    // Invariant: some subgraph is denser than `lo`, none is denser than `hi`.
    let mut lo = Rational64::new(-1, 1);
    let mut hi = Rational64::from_integer(m + 1);
    let gap = Rational64::new(1, n_i * n_i + 1);
    while hi - lo > gap {
        let mid = (lo + hi) / 2;
        if has_denser_subgraph(g, mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // The density lies in (lo, hi], an interval shorter than 1/n^2, so it is
    // the unique rational there with denominator <= n.
    for q in 1..=n_i {
        let p = (hi * q).floor().to_integer();
        let cand = Rational64::new(p, q);
        if cand > lo {
            return Ok(cand * 2);
        }
    }
    unreachable!("density recovery: no rational with denominator <= n in the final interval")
}

/// True iff some nonempty subgraph H has |E(H)|/|V(H)| > guess.
///
/// Cut construction: source -> every edge node (capacity q), edge node -> its
/// two endpoints (infinite), vertex -> sink (capacity p), for guess = p/q.
/// Keeping an edge node on the source side saves q but forces its endpoints
/// to the source side at p each, so min cut < m*q iff a denser subgraph
/// exists.
fn has_denser_subgraph(g: &MultiGraph, guess: Rational64) -> bool {
    if guess.is_negative() {
        return true;
    }
    let m = g.edge_count();
    let n = g.vertex_count();
    let p = *guess.numer();
    let q = *guess.denom();
    let total = m as i64 * q;
    let inf = total + p * n as i64 + 1;

    let mut net = Dinic::new(2 + m + n);
    let source = 0;
    let sink = 1 + m + n;
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        let enode = 1 + idx;
        net.add_edge(source, enode, q);
        net.add_edge(enode, 1 + m + u, inf);
        net.add_edge(enode, 1 + m + v, inf);
    }
    for v in 0..n {
        net.add_edge(1 + m + v, sink, p);
    }
    net.max_flow(source, sink) < total
}

struct Dinic {
    // arcs as (to, cap); arc i^1 is the reverse of arc i
    to: Vec<usize>,
    cap: Vec<i64>,
    head: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(nodes: usize) -> Self {
        Dinic {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); nodes],
            level: vec![-1; nodes],
            iter: vec![0; nodes],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: i64) {
        let a = self.to.len();
        self.to.push(to);
        self.cap.push(cap);
        self.to.push(from);
        self.cap.push(0);
        self.head[from].push(a);
        self.head[to].push(a + 1);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = std::collections::VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &a in &self.head[v] {
                let w = self.to[a];
                if self.cap[a] > 0 && self.level[w] < 0 {
                    self.level[w] = self.level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, f: i64) -> i64 {
        if v == t {
            return f;
        }
        while self.iter[v] < self.head[v].len() {
            let a = self.head[v][self.iter[v]];
            let w = self.to[a];
            if self.cap[a] > 0 && self.level[w] == self.level[v] + 1 {
                let d = self.dfs(w, t, f.min(self.cap[a]));
                if d > 0 {
                    self.cap[a] -= d;
                    self.cap[a ^ 1] += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> MultiGraph {
        MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    /// Independent oracle: maximize 2 e(S) / |S| over all nonempty vertex subsets.
    pub(crate) fn mad_brute_force(g: &MultiGraph) -> Rational64 {
        let n = g.vertex_count();
        assert!(n <= 20, "brute force oracle is exponential");
        let mut best = Rational64::zero();
        for mask in 1u32..(1 << n) {
            let inside = |v: usize| mask & (1 << v) != 0;
            let from_edges = g.edges().iter().filter(|&&(u, v)| inside(u) && inside(v)).count() as i64;
            let size = mask.count_ones() as i64;
            let density = Rational64::new(2 * from_edges, size);
            if density > best {
                best = density;
            }
        }
        best
    }

    #[test]
    fn single_edge_is_one() {
        let g = MultiGraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(mad_exact(&g).unwrap(), Rational64::from_integer(1));
    }

    #[test]
    fn cycles_have_mad_two() {
        assert_eq!(mad_exact(&cycle(5)).unwrap(), Rational64::from_integer(2));
    }

    #[test]
    fn k4_has_mad_three() {
        let k4 = MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(mad_exact(&k4).unwrap(), mad_brute_force(&k4));
        assert_eq!(mad_exact(&k4).unwrap(), Rational64::from_integer(3));
    }

    #[test]
    fn empty_graph_is_an_error() {
        let g = MultiGraph::new(0, vec![]).unwrap();
        assert_eq!(mad_exact(&g), Err(GraphError::EmptyGraph));
        let isolated = MultiGraph::new(3, vec![]).unwrap();
        assert_eq!(mad_exact(&isolated).unwrap(), Rational64::zero());
    }

    #[test]
    fn parallel_edges_count() {
        // two vertices, double edge: densest subgraph is the whole graph, 2*2/2 = 2
        let g = MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(mad_exact(&g).unwrap(), Rational64::from_integer(2));
    }

    #[test]
    fn matches_brute_force_on_mixed_graphs() {
        // tree plus one chord, pendant triangle, disjoint union
        let graphs = vec![
            MultiGraph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap(),
            MultiGraph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap(),
            MultiGraph::new(7, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3), (3, 5)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(mad_exact(g).unwrap(), mad_brute_force(g));
        }
    }
}
