//! Packing edge-colorings: class specifications, (partial) colorings, and the
//! validators, including the strengthened conditions used by the sparse
//! colorer.

use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, MultiGraph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("strengths must be a non-decreasing, non-empty list of positive integers")]
    BadSpec,
    #[error("edge {edge} is assigned class {class}, but the spec has only {len} classes")]
    ClassOutOfRange { edge: EdgeId, class: usize, len: usize },
    #[error("coloring uses class {class}, but the good-coloring check expects the four classes 1_a, 1_b, 2_a, 2_b")]
    NotGoodShape { class: usize },
    #[error("edge {edge} is not assigned a 1-color")]
    NotOneColored { edge: EdgeId },
}

/// The sequence of class strengths: class `i` requires pairwise line-graph
/// distance at least `strength(i) + 1`. Strength-1 classes are matchings,
/// strength-2 classes induced matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingSpec {
    strengths: Vec<u8>,
}

impl PackingSpec {
    pub fn new(strengths: Vec<u8>) -> Result<Self, ColoringError> {
        if strengths.is_empty()
            || strengths.windows(2).any(|w| w[0] > w[1])
            || strengths.iter().any(|&s| s == 0)
        {
            return Err(ColoringError::BadSpec);
        }
        Ok(PackingSpec { strengths })
    }

    /// `ones` matchings followed by `twos` induced matchings.
    pub fn ones_twos(ones: usize, twos: usize) -> Self {
        let mut strengths = vec![1; ones];
        strengths.extend(std::iter::repeat(2).take(twos));
        PackingSpec::new(strengths).expect("counts give a valid spec")
    }

    /// Parses a comma separated strength list such as `1,1,2,2`.
    pub fn parse(text: &str) -> Result<Self, ColoringError> {
        let strengths = text
            .split(',')
            .map(|tok| tok.trim().parse::<u8>().map_err(|_| ColoringError::BadSpec))
            .collect::<Result<Vec<_>, _>>()?;
        PackingSpec::new(strengths)
    }

    pub fn len(&self) -> usize {
        self.strengths.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn strength(&self, class: usize) -> u8 {
        self.strengths[class]
    }

    pub fn strengths(&self) -> &[u8] {
        &self.strengths
    }

    /// Human-readable class names: a lone class of strength `s` is called
    /// `s`; repeated strengths get letter suffixes (`1_a`, `1_b`, `2_a`, ...).
    pub fn class_name(&self, class: usize) -> String {
        let s = self.strengths[class];
        let group: Vec<usize> = (0..self.len()).filter(|&i| self.strengths[i] == s).collect();
        if group.len() == 1 {
            return format!("{s}");
        }
        let pos = group.iter().position(|&i| i == class).unwrap();
        let letter = (b'a' + pos as u8) as char;
        format!("{s}_{letter}")
    }

    pub fn class_by_name(&self, name: &str) -> Option<usize> {
        (0..self.len()).find(|&i| self.class_name(i) == name)
    }

    /// The (1^2, 2^2) spec with classes 1_a, 1_b, 2_a, 2_b.
    pub fn good() -> Self {
        PackingSpec::ones_twos(2, 2)
    }
}

impl fmt::Display for PackingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.strengths.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Class indices for the (1^2, 2^2) spec.
pub const CLASS_1A: usize = 0;
pub const CLASS_1B: usize = 1;
pub const CLASS_2A: usize = 2;
pub const CLASS_2B: usize = 3;

/// A partial or total assignment of edges to class indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    classes: Vec<Option<usize>>,
}

impl EdgeColoring {
    pub fn new(edge_count: usize) -> Self {
        EdgeColoring { classes: vec![None; edge_count] }
    }

    pub fn edge_count(&self) -> usize {
        self.classes.len()
    }

    pub fn get(&self, e: EdgeId) -> Option<usize> {
        self.classes[e]
    }

    pub fn set(&mut self, e: EdgeId, class: usize) {
        self.classes[e] = Some(class);
    }

    pub fn clear(&mut self, e: EdgeId) {
        self.classes[e] = None;
    }

    pub fn is_total(&self) -> bool {
        self.classes.iter().all(|c| c.is_some())
    }

    pub fn assigned(&self) -> impl Iterator<Item = (EdgeId, usize)> + '_ {
        self.classes.iter().enumerate().filter_map(|(e, c)| c.map(|c| (e, c)))
    }

    /// Applies a permutation of class indices (`class -> perm[class]`).
    pub fn relabel_classes(&self, perm: &[usize]) -> EdgeColoring {
        EdgeColoring {
            classes: self.classes.iter().map(|c| c.map(|c| perm[c])).collect(),
        }
    }
}

/// A violated constraint, with a minimal witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two same-class edges closer than the class strength allows.
    Distance { class: usize, e1: EdgeId, e2: EdgeId },
    /// A 2_a edge and a 2_b edge share an endpoint.
    GoodConditionI { e2a: EdgeId, e2b: EdgeId, vertex: VertexId },
    /// A 2_a edge and a 2_b edge joined by a path through a middle vertex
    /// outside both edges.
    GoodConditionII { e2a: EdgeId, e2b: EdgeId, middle: VertexId },
    /// Totality was required and this edge is unassigned.
    UncoloredEdge { edge: EdgeId },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::Distance { .. } => "distance",
            Violation::GoodConditionI { .. } => "good-condition-I",
            Violation::GoodConditionII { .. } => "good-condition-II",
            Violation::UncoloredEdge { .. } => "uncolored-edge",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Distance { class, e1, e2 } => {
                write!(f, "distance class{class} e{e1} e{e2}")
            }
            Violation::GoodConditionI { e2a, e2b, vertex } => {
                write!(f, "good-condition-I e{e2a} e{e2b} vertex {vertex}")
            }
            Violation::GoodConditionII { e2a, e2b, middle } => {
                write!(f, "good-condition-II e{e2a} e{e2b} via {middle}")
            }
            Violation::UncoloredEdge { edge } => write!(f, "uncolored-edge e{edge}"),
        }
    }
}

/// Checks that `c` is a valid (partial) packing edge-coloring of `g` for
/// `spec`. With `require_total`, every edge must be assigned. Returns all
/// violations; an empty list means the coloring is valid.
pub fn validate(
    g: &MultiGraph,
    spec: &PackingSpec,
    c: &EdgeColoring,
    require_total: bool,
) -> Result<Vec<Violation>, ColoringError> {
    assert_eq!(c.edge_count(), g.edge_count(), "coloring size mismatch");
    for (edge, class) in c.assigned() {
        if class >= spec.len() {
            return Err(ColoringError::ClassOutOfRange { edge, class, len: spec.len() });
        }
    }
    let mut violations = Vec::new();
    if require_total {
        for e in 0..g.edge_count() {
            if c.get(e).is_none() {
                violations.push(Violation::UncoloredEdge { edge: e });
            }
        }
    }
    let mut by_class: Vec<Vec<EdgeId>> = vec![Vec::new(); spec.len()];
    for (e, class) in c.assigned() {
        by_class[class].push(e);
    }
    for (class, members) in by_class.iter().enumerate() {
        let s = spec.strength(class) as usize;
        for (i, &e1) in members.iter().enumerate() {
            for &e2 in &members[i + 1..] {
                if g.edge_distance_at_most(e1, e2, s) {
                    violations.push(Violation::Distance { class, e1, e2 });
                }
            }
        }
    }
    Ok(violations)
}

/// Checks the strengthened predicate for (1^2, 2^2) colorings: plain validity
/// plus Condition (I) (no 2_a edge shares an endpoint with a 2_b edge) and
/// Condition (II) (no 2_a edge and 2_b edge are joined by a two-edge path
/// through a vertex outside both).
pub fn validate_good(g: &MultiGraph, c: &EdgeColoring) -> Result<Vec<Violation>, ColoringError> {
    for (_, class) in c.assigned() {
        if class > CLASS_2B {
            return Err(ColoringError::NotGoodShape { class });
        }
    }
    let spec = PackingSpec::good();
    let mut violations = validate(g, &spec, c, false)?;
    let twos_a: Vec<EdgeId> = c.assigned().filter(|&(_, cl)| cl == CLASS_2A).map(|(e, _)| e).collect();
    let twos_b: Vec<EdgeId> = c.assigned().filter(|&(_, cl)| cl == CLASS_2B).map(|(e, _)| e).collect();
    for &ea in &twos_a {
        let (u1, u2) = g.endpoints(ea);
        for &eb in &twos_b {
            let (v1, v2) = g.endpoints(eb);
            let shared = [u1, u2].iter().find(|&&u| u == v1 || u == v2).copied();
            if let Some(vertex) = shared {
                violations.push(Violation::GoodConditionI { e2a: ea, e2b: eb, vertex });
                continue;
            }
            // lowest middle vertex first, for a deterministic witness
            let mut middle: Option<VertexId> = None;
            for &ui in &[u1, u2] {
                for w in g.neighbors(ui) {
                    if w == u1 || w == u2 || w == v1 || w == v2 {
                        continue;
                    }
                    if g.adjacent(w, v1) || g.adjacent(w, v2) {
                        middle = Some(middle.map_or(w, |cur| cur.min(w)));
                    }
                }
            }
            if let Some(middle) = middle {
                violations.push(Violation::GoodConditionII { e2a: ea, e2b: eb, middle });
            }
        }
    }
    Ok(violations)
}

/// True iff some edge incident to `v` is assigned `class`.
pub fn vertex_sees(g: &MultiGraph, c: &EdgeColoring, v: VertexId, class: usize) -> bool {
    g.incident(v).iter().any(|&(_, e)| c.get(e) == Some(class))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> MultiGraph {
        MultiGraph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    #[test]
    fn spec_names() {
        let s = PackingSpec::good();
        assert_eq!(s.class_name(0), "1_a");
        assert_eq!(s.class_name(3), "2_b");
        let s = PackingSpec::ones_twos(1, 3);
        assert_eq!(s.class_name(0), "1");
        assert_eq!(s.class_name(1), "2_a");
        assert_eq!(s.class_name(3), "2_c");
        assert_eq!(s.class_by_name("2_c"), Some(3));
        assert_eq!(s.class_by_name("1_a"), None);
        assert_eq!(s.to_string(), "1,2,2,2");
    }

    #[test]
    fn spec_rejects_bad_lists() {
        assert_eq!(PackingSpec::new(vec![]), Err(ColoringError::BadSpec));
        assert_eq!(PackingSpec::new(vec![2, 1]), Err(ColoringError::BadSpec));
        assert_eq!(PackingSpec::parse("1,x"), Err(ColoringError::BadSpec));
    }

    #[test]
    fn k2_single_class_is_valid() {
        let g = path(2);
        let spec = PackingSpec::new(vec![1]).unwrap();
        let mut c = EdgeColoring::new(1);
        c.set(0, 0);
        assert!(validate(&g, &spec, &c, true).unwrap().is_empty());
    }

    #[test]
    fn adjacent_edges_in_a_matching_class_violate() {
        let g = path(3);
        let spec = PackingSpec::new(vec![1]).unwrap();
        let mut c = EdgeColoring::new(2);
        c.set(0, 0);
        c.set(1, 0);
        let violations = validate(&g, &spec, &c, false).unwrap();
        assert_eq!(violations, vec![Violation::Distance { class: 0, e1: 0, e2: 1 }]);
    }

    #[test]
    fn strength_two_needs_distance_three() {
        // path a-b-c-d: edges 0,1,2; edges 0 and 2 are at distance 2
        let g = path(4);
        let spec = PackingSpec::new(vec![2]).unwrap();
        let mut c = EdgeColoring::new(3);
        c.set(0, 0);
        c.set(2, 0);
        let violations = validate(&g, &spec, &c, false).unwrap();
        assert_eq!(violations.len(), 1);
        // path on 5 vertices: end edges are at distance 3, fine
        let g = path(5);
        let mut c = EdgeColoring::new(4);
        c.set(0, 0);
        c.set(3, 0);
        assert!(validate(&g, &spec, &c, false).unwrap().is_empty());
    }

    #[test]
    fn totality_reported() {
        let g = path(3);
        let spec = PackingSpec::good();
        let c = EdgeColoring::new(2);
        let violations = validate(&g, &spec, &c, true).unwrap();
        assert_eq!(violations.len(), 2);
        assert!(matches!(violations[0], Violation::UncoloredEdge { edge: 0 }));
    }

    #[test]
    fn class_out_of_range_is_an_error() {
        let g = path(2);
        let spec = PackingSpec::new(vec![1]).unwrap();
        let mut c = EdgeColoring::new(1);
        c.set(0, 4);
        assert_eq!(
            validate(&g, &spec, &c, false),
            Err(ColoringError::ClassOutOfRange { edge: 0, class: 4, len: 1 })
        );
        assert_eq!(validate_good(&g, &c), Err(ColoringError::NotGoodShape { class: 4 }));
    }

    #[test]
    fn good_condition_one() {
        // star: 2_a and 2_b meeting at the center
        let g = MultiGraph::new(3, vec![(0, 1), (0, 2)]).unwrap();
        let mut c = EdgeColoring::new(2);
        c.set(0, CLASS_2A);
        c.set(1, CLASS_2B);
        let violations = validate_good(&g, &c).unwrap();
        assert_eq!(
            violations,
            vec![Violation::GoodConditionI { e2a: 0, e2b: 1, vertex: 0 }]
        );
    }

    #[test]
    fn good_condition_two() {
        // u1-u2, u2-w, w-v1, v1-v2; 2_a and 2_b linked through w
        let g = path(5);
        let mut c = EdgeColoring::new(4);
        c.set(0, CLASS_2A);
        c.set(1, CLASS_1A);
        c.set(2, CLASS_1B);
        c.set(3, CLASS_2B);
        let violations = validate_good(&g, &c).unwrap();
        assert_eq!(
            violations,
            vec![Violation::GoodConditionII { e2a: 0, e2b: 3, middle: 2 }]
        );
    }

    #[test]
    fn middle_vertex_must_be_outside_both_edges() {
        // a-b-c-d: edges ab (2_a) and cd (2_b) joined only through c and b,
        // which lie inside the edges, so condition II does not fire; the pair
        // is not a violation even though the line distance is 2.
        let g = path(4);
        let mut c = EdgeColoring::new(3);
        c.set(0, CLASS_2A);
        c.set(2, CLASS_2B);
        assert!(validate_good(&g, &c).unwrap().is_empty());
    }

    #[test]
    fn single_two_color_has_no_good_violations() {
        let g = path(4);
        let mut c = EdgeColoring::new(3);
        c.set(0, CLASS_2A);
        c.set(1, CLASS_1A);
        c.set(2, CLASS_2A);
        // distance violation for the repeated 2_a, but no good-condition ones
        let violations = validate_good(&g, &c).unwrap();
        assert!(violations.iter().all(|v| v.kind() == "distance"));
    }

    #[test]
    fn sees() {
        let g = path(3);
        let mut c = EdgeColoring::new(2);
        assert!(!vertex_sees(&g, &c, 0, CLASS_2A));
        c.set(0, CLASS_2A);
        assert!(vertex_sees(&g, &c, 0, CLASS_2A));
        assert!(vertex_sees(&g, &c, 1, CLASS_2A));
        assert!(!vertex_sees(&g, &c, 2, CLASS_2A));
    }
}
