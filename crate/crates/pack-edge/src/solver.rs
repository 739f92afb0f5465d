//! Exhaustive backtracking decision procedure for packing edge-colorings.
//! This is the oracle the counterexample certificates and the cross-checks of
//! the constructive colorers rest on, so soundness is asserted on every exit.

use std::time::{Duration, Instant};

use crate::coloring::{
    validate, validate_good, EdgeColoring, PackingSpec, CLASS_2A, CLASS_2B,
};
use crate::graph::{EdgeId, MultiGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrder {
    /// Edges in breadth-first order starting from a maximum-degree vertex.
    /// Keeps the conflict frontier dense, which distance-2 constraints reward.
    BfsFromMaxDegree,
    /// Edges ordered by the degeneracy removal order of their endpoints.
    Degeneracy,
    /// Input order.
    Input,
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub order: EdgeOrder,
    /// Node budget; a node is one attempted class assignment. `None` means
    /// unlimited. Node counts, not wall clock, so runs are reproducible.
    pub budget: Option<u64>,
    /// Prune with the good-coloring conditions during search, not post-hoc.
    pub good_mode: bool,
    /// Classes of equal strength are interchangeable; when set, class j+1 of
    /// a strength may be used only after class j of the same strength.
    pub symmetry_breaking: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            order: EdgeOrder::BfsFromMaxDegree,
            budget: None,
            good_mode: false,
            symmetry_breaking: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Colorable(EdgeColoring),
    NotColorable,
    BudgetExhausted,
}

impl Verdict {
    pub fn is_colorable(&self) -> bool {
        matches!(self, Verdict::Colorable(_))
    }
}

#[derive(Debug, Clone)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub verdict: Verdict,
    pub stats: SolveStats,
}

struct Search<'a> {
    g: &'a MultiGraph,
    spec: &'a PackingSpec,
    order: Vec<EdgeId>,
    /// conflicts[s-1][e] = edges within line distance s of e
    conflicts: Vec<Vec<Vec<EdgeId>>>,
    /// edges f such that {e: 2_a, f: 2_b} violates a good condition
    good_conflicts: Vec<Vec<EdgeId>>,
    colors: Vec<Option<usize>>,
    /// per class, how many edges currently use it
    usage: Vec<u64>,
    /// classes grouped by strength: (first class index, group length)
    groups: Vec<(usize, usize)>,
    group_of: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
    good_mode: bool,
    symmetry_breaking: bool,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn feasible(&self, e: EdgeId, class: usize) -> bool {
        let s = self.spec.strength(class) as usize;
        for &f in &self.conflicts[s - 1][e] {
            if self.colors[f] == Some(class) {
                return false;
            }
        }
        if self.good_mode && (class == CLASS_2A || class == CLASS_2B) {
            let other = CLASS_2A + CLASS_2B - class;
            for &f in &self.good_conflicts[e] {
                if self.colors[f] == Some(other) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, idx: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let e = self.order[idx];
        for class in 0..self.spec.len() {
            if self.symmetry_breaking {
                let (start, len) = self.groups[self.group_of[class]];
                let used = (start..start + len).take_while(|&c| self.usage[c] > 0).count();
                if class > start + used {
                    continue;
                }
            }
            if let Some(budget) = self.budget {
                if self.nodes >= budget {
                    self.exhausted = true;
                    return false;
                }
            }
            self.nodes += 1;
            if !self.feasible(e, class) {
                continue;
            }
            self.colors[e] = Some(class);
            self.usage[class] += 1;
            if self.run(idx + 1) {
                return true;
            }
            self.usage[class] -= 1;
            self.colors[e] = None;
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

fn edge_order(g: &MultiGraph, order: EdgeOrder) -> Vec<EdgeId> {
    match order {
        EdgeOrder::Input => (0..g.edge_count()).collect(),
        EdgeOrder::BfsFromMaxDegree => {
            let n = g.vertex_count();
            let mut seen_v = vec![false; n];
            let mut seen_e = vec![false; g.edge_count()];
            let mut out = Vec::with_capacity(g.edge_count());
            // visit components by descending max degree, lowest id first
            let mut roots: Vec<usize> = (0..n).collect();
            roots.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
            for root in roots {
                if seen_v[root] {
                    continue;
                }
                let mut queue = std::collections::VecDeque::new();
                queue.push_back(root);
                seen_v[root] = true;
                while let Some(x) = queue.pop_front() {
                    let mut incident: Vec<(usize, EdgeId)> = g.incident(x).to_vec();
                    incident.sort_by_key(|&(_, e)| e);
                    for (y, e) in incident {
                        if !seen_e[e] {
                            seen_e[e] = true;
                            out.push(e);
                        }
                        if !seen_v[y] {
                            seen_v[y] = true;
                            queue.push_back(y);
                        }
                    }
                }
            }
            out
        }
        EdgeOrder::Degeneracy => {
            let n = g.vertex_count();
            let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
            let mut removed = vec![false; n];
            let mut pos = vec![0usize; n];
            for step in 0..n {
                let v = (0..n)
                    .filter(|&v| !removed[v])
                    .min_by_key(|&v| (deg[v], v))
                    .unwrap();
                removed[v] = true;
                pos[v] = step;
                for &(w, _) in g.incident(v) {
                    if !removed[w] {
                        deg[w] = deg[w].saturating_sub(1);
                    }
                }
            }
            let mut ids: Vec<EdgeId> = (0..g.edge_count()).collect();
            ids.sort_by_key(|&e| {
                let (u, v) = g.endpoints(e);
                (pos[u].min(pos[v]), pos[u].max(pos[v]), e)
            });
            ids
        }
    }
}

/// Edges f that cannot take the opposite 2-color of e in a good coloring:
/// f shares an endpoint with e, or some vertex outside both edges is adjacent
/// to an endpoint of each.
fn good_conflict_sets(g: &MultiGraph) -> Vec<Vec<EdgeId>> {
    let m = g.edge_count();
    let mut out = vec![Vec::new(); m];
    for e in 0..m {
        let (u1, u2) = g.endpoints(e);
        for f in 0..m {
            if f == e {
                continue;
            }
            let (v1, v2) = g.endpoints(f);
            let shares = u1 == v1 || u1 == v2 || u2 == v1 || u2 == v2;
            let linked = shares
                || [u1, u2].iter().any(|&ui| {
                    g.neighbors(ui).into_iter().any(|w| {
                        w != u1 && w != u2 && w != v1 && w != v2 && (g.adjacent(w, v1) || g.adjacent(w, v2))
                    })
                });
            if linked {
                out[e].push(f);
            }
        }
    }
    out
}

/// Decides whether `g` admits an `spec`-packing edge-coloring. Sound and
/// complete within the node budget; a `Colorable` verdict carries a witness
/// that is re-validated before returning.
pub fn decide(g: &MultiGraph, spec: &PackingSpec, cfg: &SolverConfig) -> SolveResult {
    let start = Instant::now();
    let max_strength = spec.strengths().iter().copied().max().unwrap() as usize;
    let mut conflicts = Vec::with_capacity(max_strength);
    for s in 1..=max_strength {
        conflicts.push(g.edge_balls(s));
    }
    let good_conflicts = if cfg.good_mode { good_conflict_sets(g) } else { Vec::new() };

    let mut groups = Vec::new();
    let mut group_of = vec![0; spec.len()];
    let mut i = 0;
    while i < spec.len() {
        let mut j = i;
        while j < spec.len() && spec.strength(j) == spec.strength(i) {
            group_of[j] = groups.len();
            j += 1;
        }
        groups.push((i, j - i));
        i = j;
    }

    let mut search = Search {
        g,
        spec,
        order: edge_order(g, cfg.order),
        conflicts,
        good_conflicts,
        colors: vec![None; g.edge_count()],
        usage: vec![0; spec.len()],
        groups,
        group_of,
        nodes: 0,
        budget: cfg.budget,
        good_mode: cfg.good_mode,
        symmetry_breaking: cfg.symmetry_breaking,
        exhausted: false,
    };

    let found = search.run(0);
    let stats = SolveStats { nodes: search.nodes, elapsed: start.elapsed() };
    let verdict = if found {
        let mut witness = EdgeColoring::new(g.edge_count());
        for (e, c) in search.colors.iter().enumerate() {
            witness.set(e, c.expect("complete assignment"));
        }
        let violations = validate(g, spec, &witness, true).expect("witness uses spec classes");
        assert!(violations.is_empty(), "solver produced an invalid witness: {violations:?}");
        if cfg.good_mode {
            let violations = validate_good(g, &witness).expect("witness uses good classes");
            assert!(violations.is_empty(), "solver produced a non-good witness: {violations:?}");
        }
        Verdict::Colorable(witness)
    } else if search.exhausted {
        Verdict::BudgetExhausted
    } else {
        Verdict::NotColorable
    };
    SolveResult { verdict, stats }
}

/// Decides existence of a good `(1^2, 2^2)` coloring.
pub fn decide_good(g: &MultiGraph, cfg: &SolverConfig) -> SolveResult {
    let mut cfg = cfg.clone();
    cfg.good_mode = true;
    decide(g, &PackingSpec::good(), &cfg)
}

/// All maximum matchings, by exhaustive enumeration. Intended for small
/// graphs; the certificate tests rely on the exact list.
pub fn count_maximum_matchings(g: &MultiGraph) -> (usize, Vec<Vec<EdgeId>>) {
    let m = g.edge_count();
    let mut matched = vec![false; g.vertex_count()];
    let mut current = Vec::new();
    let mut best = 0usize;
    let mut out: Vec<Vec<EdgeId>> = Vec::new();
    fn rec(
        g: &MultiGraph,
        e: EdgeId,
        matched: &mut Vec<bool>,
        current: &mut Vec<EdgeId>,
        best: &mut usize,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        if e == g.edge_count() {
            if current.len() > *best {
                *best = current.len();
                out.clear();
            }
            if current.len() == *best {
                out.push(current.clone());
            }
            return;
        }
        if current.len() + (g.edge_count() - e) < *best {
            return;
        }
        rec(g, e + 1, matched, current, best, out);
        let (u, v) = g.endpoints(e);
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            current.push(e);
            rec(g, e + 1, matched, current, best, out);
            current.pop();
            matched[u] = false;
            matched[v] = false;
        }
    }
    rec(g, 0, &mut matched, &mut current, &mut best, &mut out);
    let _ = m;
    out.sort();
    out.dedup();
    (best, out)
}

/// A pair of disjoint matchings maximizing |M1 ∪ M2|, by exhaustive search.
/// The union of two disjoint matchings is exactly a subgraph with maximum
/// degree two and no odd cycle, so the search branches over edges under those
/// two constraints and splits the best subgraph afterwards.
pub fn max_two_disjoint_matchings(g: &MultiGraph) -> (Vec<EdgeId>, Vec<EdgeId>) {
    struct State {
        deg: Vec<usize>,
        parent: Vec<usize>,
        parity: Vec<bool>,
    }
    impl State {
        fn find(&mut self, v: usize) -> (usize, bool) {
            if self.parent[v] == v {
                return (v, false);
            }
            let (root, par) = self.find(self.parent[v]);
            self.parent[v] = root;
            self.parity[v] ^= par;
            (root, self.parity[v])
        }
    }
    fn rec(
        g: &MultiGraph,
        e: EdgeId,
        state: &mut State,
        current: &mut Vec<EdgeId>,
        best: &mut Vec<EdgeId>,
    ) {
        if current.len() + (g.edge_count() - e) <= best.len() {
            return;
        }
        if e == g.edge_count() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        let (u, v) = g.endpoints(e);
        if state.deg[u] < 2 && state.deg[v] < 2 {
            let (ru, pu) = state.find(u);
            let (rv, pv) = state.find(v);
            // joining within a component with equal parity closes an odd cycle
            if ru != rv || pu != pv {
                let saved_parent = state.parent.clone();
                let saved_parity = state.parity.clone();
                if ru != rv {
                    state.parent[ru] = rv;
                    state.parity[ru] = !(pu ^ pv);
                }
                state.deg[u] += 1;
                state.deg[v] += 1;
                current.push(e);
                rec(g, e + 1, state, current, best);
                current.pop();
                state.deg[u] -= 1;
                state.deg[v] -= 1;
                state.parent = saved_parent;
                state.parity = saved_parity;
            }
        }
        rec(g, e + 1, state, current, best);
    }
    let mut state = State {
        deg: vec![0; g.vertex_count()],
        parent: (0..g.vertex_count()).collect(),
        parity: vec![false; g.vertex_count()],
    };
    let mut best = Vec::new();
    rec(g, 0, &mut state, &mut Vec::new(), &mut best);

    // Split the union into two matchings: alternate along each path or even
    // cycle, starting from the lowest vertex.
    let chosen: std::collections::BTreeSet<EdgeId> = best.iter().copied().collect();
    let mut m1 = Vec::new();
    let mut m2 = Vec::new();
    let mut seen = vec![false; g.edge_count()];
    for &start_edge in &chosen {
        if seen[start_edge] {
            continue;
        }
        // walk the component edge by edge
        let mut stack = vec![(start_edge, true)];
        seen[start_edge] = true;
        while let Some((e, into_m1)) = stack.pop() {
            if into_m1 {
                m1.push(e);
            } else {
                m2.push(e);
            }
            let (u, v) = g.endpoints(e);
            for &w in &[u, v] {
                for &(_, f) in g.incident(w) {
                    if chosen.contains(&f) && !seen[f] {
                        seen[f] = true;
                        stack.push((f, !into_m1));
                    }
                }
            }
        }
    }
    m1.sort_unstable();
    m2.sort_unstable();
    (m1, m2)
}
