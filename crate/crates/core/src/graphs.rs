//! Graphs, uniform hypergraphs, forbidden target patterns, edge colorings,
//! copy enumeration, canonical forms, and the coloring-matrix text format.

mod canon;
mod copies;
mod matrix;

pub use canon::{
    canonical_coloring_code, canonical_form, canonical_form_with_limit, DEFAULT_CANON_LIMIT,
};
pub use copies::{contains_monochromatic, enumerate_copies};
pub(crate) use copies::for_each_copy;
pub use matrix::{emit_coloring_matrix, parse_coloring_matrix};

use crate::util;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A (hyper)edge of a complete host: a strictly increasing list of vertex ids.
pub type Edge = Vec<usize>;
/// A copy of a pattern inside a host: its sorted list of (hyper)edges.
pub type EdgeSet = Vec<Edge>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (vertex count {vertex_count})")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("hyperedge {edge:?} does not have {arity} distinct vertices")]
    BadHyperedge { edge: Vec<usize>, arity: usize },
    #[error("arity must be at least 2, got {0}")]
    BadArity(usize),
    #[error("pattern has no edges")]
    EmptyPattern,
    #[error("unknown pattern kind '{0}'")]
    UnknownPatternKind(String),
    #[error("invalid parameter for pattern {kind}: {reason}")]
    BadPatternParams { kind: String, reason: String },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("color {color} out of range (color count {color_count})")]
    ColorOutOfRange { color: usize, color_count: usize },
    #[error("coloring needs {expected} entries, got {got}")]
    BadColorVector { expected: usize, got: usize },
    #[error("color count must be at least 1")]
    NoColors,
    #[error("vertex count {vertex_count} exceeds canonicalization limit {limit}")]
    CanonLimitExceeded { vertex_count: usize, limit: usize },
    #[error("coloring matrix is empty")]
    MatrixEmpty,
    #[error("coloring matrix row {row} has {got} characters, expected {expected}")]
    MatrixNotSquare { row: usize, got: usize, expected: usize },
    #[error("coloring matrix diagonal entry ({0},{0}) is not 'x'")]
    MatrixBadDiagonal(usize),
    #[error("coloring matrix entry ({row},{col}) is '{ch}', expected a digit 0-9")]
    MatrixInvalidChar { row: usize, col: usize, ch: char },
    #[error("coloring matrix is asymmetric at ({i},{j})")]
    MatrixAsymmetric { i: usize, j: usize },
    #[error("matrix format supports at most 10 colors, coloring has {0}")]
    MatrixTooManyColors(usize),
    #[error("matrix format is defined for graphs only (arity 2), coloring has arity {0}")]
    MatrixArityUnsupported(usize),
}

// ---------------------------------------------------------------------------
// Simple graphs and uniform hypergraphs
// ---------------------------------------------------------------------------

/// A loopless simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if v >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    vertex_count,
                });
            }
            set.insert((u, v));
        }
        Ok(Self {
            vertex_count,
            edges: set,
        })
    }

    /// The subgraph of a complete host formed by the edges of one color.
    pub fn color_class(coloring: &EdgeColoring, color: usize) -> Result<Self, GraphError> {
        if coloring.arity() != 2 {
            return Err(GraphError::ArityMismatch {
                expected: 2,
                got: coloring.arity(),
            });
        }
        if color >= coloring.color_count() {
            return Err(GraphError::ColorOutOfRange {
                color,
                color_count: coloring.color_count(),
            });
        }
        let n = coloring.vertex_count();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if coloring.color_of(&[u, v]) == color {
                    edges.push((u, v));
                }
            }
        }
        Self::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Adjacency bitmask per vertex; requires `vertex_count <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count <= 64);
        let mut adj = vec![0u64; self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    /// Relabels vertices through `perm` (vertex v becomes perm[v]).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        Self::new(
            self.vertex_count,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }
}

/// An r-uniform hypergraph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformHypergraph {
    vertex_count: usize,
    arity: usize,
    hyperedges: BTreeSet<Vec<usize>>,
}

impl UniformHypergraph {
    pub fn new(
        vertex_count: usize,
        arity: usize,
        hyperedges: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, GraphError> {
        if arity < 2 {
            return Err(GraphError::BadArity(arity));
        }
        let mut set = BTreeSet::new();
        for mut e in hyperedges {
            e.sort_unstable();
            let distinct = e.windows(2).all(|w| w[0] != w[1]);
            if e.len() != arity || !distinct {
                return Err(GraphError::BadHyperedge { edge: e, arity });
            }
            if let Some(&v) = e.last() {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            set.insert(e);
        }
        Ok(Self {
            vertex_count,
            arity,
            hyperedges: set,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn edge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn hyperedges(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.hyperedges.iter()
    }
}

// ---------------------------------------------------------------------------
// Target patterns
// ---------------------------------------------------------------------------

/// A forbidden structure for one color: a simple graph or a uniform hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetPattern {
    Graph(SimpleGraph),
    Hypergraph(UniformHypergraph),
}

impl TargetPattern {
    pub fn from_graph(g: SimpleGraph) -> Result<Self, GraphError> {
        if g.edge_count() == 0 {
            return Err(GraphError::EmptyPattern);
        }
        Ok(Self::Graph(g))
    }

    pub fn from_hypergraph(h: UniformHypergraph) -> Result<Self, GraphError> {
        if h.edge_count() == 0 {
            return Err(GraphError::EmptyPattern);
        }
        Ok(Self::Hypergraph(h))
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Self::Graph(g) => g.vertex_count(),
            Self::Hypergraph(h) => h.vertex_count(),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Self::Graph(_) => 2,
            Self::Hypergraph(h) => h.arity(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            Self::Graph(g) => g.edge_count(),
            Self::Hypergraph(h) => h.edge_count(),
        }
    }

    /// Edges as sorted vertex lists, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        match self {
            Self::Graph(g) => g.edges().map(|(u, v)| vec![u, v]).collect(),
            Self::Hypergraph(h) => h.hyperedges().cloned().collect(),
        }
    }

    /// A short structural name: `K4`, `K4-e`, `C5`, `K1s:3`, `B2`, `K4m3`,
    /// or a generic fallback for unrecognized shapes.
    pub fn describe(&self) -> String {
        self.classify().1
    }

    /// (family rank, label); the rank orders pattern lists in reports.
    pub(crate) fn classify(&self) -> (u8, String) {
        match self {
            Self::Hypergraph(h) => {
                if h.arity() == 3 && h.vertex_count() == 4 && h.edge_count() == 3 {
                    (5, "K4m3".to_string())
                } else {
                    (
                        6,
                        format!("H{}u{}v{}e", h.arity(), h.vertex_count(), h.edge_count()),
                    )
                }
            }
            Self::Graph(g) => {
                let p = g.vertex_count();
                let m = g.edge_count();
                let full = util::binomial(p, 2) as usize;
                if p >= 2 && m == full {
                    return (0, format!("K{p}"));
                }
                if p >= 3 && m == full - 1 {
                    return (1, format!("K{p}-e"));
                }
                let degrees: Vec<usize> = (0..p).map(|v| g.degree(v)).collect();
                if p >= 3 && m == 2 * (p - 2) + 1 {
                    let spine: Vec<usize> = (0..p).filter(|&v| degrees[v] == p - 1).collect();
                    let pages = degrees.iter().filter(|&&d| d == 2).count();
                    if spine.len() == 2 && pages == p - 2 && g.has_edge(spine[0], spine[1]) {
                        return (2, format!("B{}", p - 2));
                    }
                }
                if p >= 3 && m == p && degrees.iter().all(|&d| d == 2) && is_connected(g) {
                    return (3, format!("C{p}"));
                }
                if p >= 2 && m == p - 1 && degrees.iter().any(|&d| d == p - 1) {
                    return (4, format!("K1s:{}", p - 1));
                }
                (6, format!("G{p}v{m}e"))
            }
        }
    }

    /// Key used to order target lists in bound statements.
    pub(crate) fn sort_key(&self) -> (u8, usize, usize, String) {
        let (rank, label) = self.classify();
        (rank, self.vertex_count(), self.edge_count(), label)
    }
}

impl fmt::Display for TargetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

fn is_connected(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if !seen[u] && g.has_edge(v, u) {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Constructible pattern families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternKind {
    /// Complete graph `K_t`.
    Complete(usize),
    /// Complete graph minus one edge.
    CompleteMinusEdge(usize),
    /// Cycle `C_m`.
    Cycle(usize),
    /// Star `K_{1,s}`.
    Star(usize),
    /// Book `B_s`: s triangles sharing a common edge.
    Book(usize),
    /// 3-uniform hypergraph on 4 vertices with 3 of the 4 triples present.
    K4MinusHyper,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Complete(t) => write!(f, "K{t}"),
            Self::CompleteMinusEdge(t) => write!(f, "K{t}-e"),
            Self::Cycle(m) => write!(f, "C{m}"),
            Self::Star(s) => write!(f, "K1s:{s}"),
            Self::Book(s) => write!(f, "B{s}"),
            Self::K4MinusHyper => write!(f, "K4m3"),
        }
    }
}

impl FromStr for PatternKind {
    type Err = GraphError;

    /// Parses the pattern mini-language: `K<t>`, `K<t>-e`, `C<m>`,
    /// `K1s:<s>`, `B<s>`, `K4m3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::UnknownPatternKind(s.to_string());
        if s == "K4m3" {
            return Ok(Self::K4MinusHyper);
        }
        if let Some(rest) = s.strip_prefix("K1s:") {
            return Ok(Self::Star(rest.parse().map_err(|_| bad())?));
        }
        if let Some(rest) = s.strip_prefix('K') {
            if let Some(t) = rest.strip_suffix("-e") {
                return Ok(Self::CompleteMinusEdge(t.parse().map_err(|_| bad())?));
            }
            return Ok(Self::Complete(rest.parse().map_err(|_| bad())?));
        }
        if let Some(rest) = s.strip_prefix('C') {
            return Ok(Self::Cycle(rest.parse().map_err(|_| bad())?));
        }
        if let Some(rest) = s.strip_prefix('B') {
            return Ok(Self::Book(rest.parse().map_err(|_| bad())?));
        }
        Err(bad())
    }
}

/// Builds the canonical pattern for a family on its minimal vertex set.
pub fn make_pattern(kind: PatternKind) -> Result<TargetPattern, GraphError> {
    let params = |kind: PatternKind, reason: &str| GraphError::BadPatternParams {
        kind: kind.to_string(),
        reason: reason.to_string(),
    };
    match kind {
        PatternKind::Complete(t) => {
            if t < 2 {
                return Err(params(kind, "need t >= 2"));
            }
            let edges = (0..t).flat_map(|u| (u + 1..t).map(move |v| (u, v)));
            TargetPattern::from_graph(SimpleGraph::new(t, edges)?)
        }
        PatternKind::CompleteMinusEdge(t) => {
            if t < 3 {
                return Err(params(kind, "need t >= 3"));
            }
            let edges = (0..t)
                .flat_map(|u| (u + 1..t).map(move |v| (u, v)))
                .filter(|&(u, v)| (u, v) != (t - 2, t - 1));
            TargetPattern::from_graph(SimpleGraph::new(t, edges)?)
        }
        PatternKind::Cycle(m) => {
            if m < 3 {
                return Err(params(kind, "need length >= 3"));
            }
            let edges = (0..m).map(|i| (i, (i + 1) % m));
            TargetPattern::from_graph(SimpleGraph::new(m, edges)?)
        }
        PatternKind::Star(s) => {
            if s < 1 {
                return Err(params(kind, "need s >= 1"));
            }
            let edges = (1..=s).map(|leaf| (0, leaf));
            TargetPattern::from_graph(SimpleGraph::new(s + 1, edges)?)
        }
        PatternKind::Book(s) => {
            if s < 1 {
                return Err(params(kind, "need s >= 1"));
            }
            let mut edges = vec![(0, 1)];
            for page in 2..s + 2 {
                edges.push((0, page));
                edges.push((1, page));
            }
            TargetPattern::from_graph(SimpleGraph::new(s + 2, edges)?)
        }
        PatternKind::K4MinusHyper => {
            let triples = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3]];
            TargetPattern::from_hypergraph(UniformHypergraph::new(4, 3, triples)?)
        }
    }
}

// ---------------------------------------------------------------------------
// Edge colorings
// ---------------------------------------------------------------------------

/// A k-coloring of all r-subsets of `{0, …, n-1}`.
///
/// Colors are stored in lexicographic r-subset order, the same order used by
/// the CNF variable map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    vertex_count: usize,
    color_count: usize,
    arity: usize,
    colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn from_colors(
        vertex_count: usize,
        color_count: usize,
        arity: usize,
        colors: Vec<u8>,
    ) -> Result<Self, GraphError> {
        if arity < 2 {
            return Err(GraphError::BadArity(arity));
        }
        if color_count == 0 {
            return Err(GraphError::NoColors);
        }
        let expected = util::binomial(vertex_count, arity) as usize;
        if colors.len() != expected {
            return Err(GraphError::BadColorVector {
                expected,
                got: colors.len(),
            });
        }
        if let Some(&c) = colors.iter().find(|&&c| (c as usize) >= color_count) {
            return Err(GraphError::ColorOutOfRange {
                color: c as usize,
                color_count,
            });
        }
        Ok(Self {
            vertex_count,
            color_count,
            arity,
            colors,
        })
    }

    /// Coloring with every edge the same color.
    pub fn constant(
        vertex_count: usize,
        color_count: usize,
        arity: usize,
        color: usize,
    ) -> Result<Self, GraphError> {
        let len = util::binomial(vertex_count, arity) as usize;
        Self::from_colors(vertex_count, color_count, arity, vec![color as u8; len])
    }

    /// Builds a coloring by evaluating `f` on every r-subset in lex order.
    pub fn from_fn(
        vertex_count: usize,
        color_count: usize,
        arity: usize,
        mut f: impl FnMut(&[usize]) -> usize,
    ) -> Result<Self, GraphError> {
        let mut colors = Vec::with_capacity(util::binomial(vertex_count, arity) as usize);
        util::for_each_subset(vertex_count, arity, |s| colors.push(f(s) as u8));
        Self::from_colors(vertex_count, color_count, arity, colors)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    fn rank(&self, edge: &[usize]) -> usize {
        debug_assert_eq!(edge.len(), self.arity);
        debug_assert!(edge.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edge.iter().all(|&v| v < self.vertex_count));
        if self.arity == 2 {
            let (u, v, n) = (edge[0], edge[1], self.vertex_count);
            u * (2 * n - u - 1) / 2 + (v - u - 1)
        } else {
            util::subset_rank(self.vertex_count, edge)
        }
    }

    /// The color of a sorted r-subset.
    #[inline]
    pub fn color_of(&self, edge: &[usize]) -> usize {
        self.colors[self.rank(edge)] as usize
    }

    pub fn set_color(&mut self, edge: &[usize], color: usize) -> Result<(), GraphError> {
        if color >= self.color_count {
            return Err(GraphError::ColorOutOfRange {
                color,
                color_count: self.color_count,
            });
        }
        let r = self.rank(edge);
        self.colors[r] = color as u8;
        Ok(())
    }

    /// The induced coloring on the first `m` vertices.
    pub fn restrict(&self, m: usize) -> Result<Self, GraphError> {
        if m > self.vertex_count {
            return Err(GraphError::VertexOutOfRange {
                vertex: m,
                vertex_count: self.vertex_count,
            });
        }
        Self::from_fn(m, self.color_count, self.arity, |s| self.color_of(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_graph_rejects_loops_and_range() {
        assert_eq!(
            SimpleGraph::new(3, vec![(1, 1)]),
            Err(GraphError::LoopEdge(1))
        );
        assert!(matches!(
            SimpleGraph::new(3, vec![(0, 3)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        let g = SimpleGraph::new(3, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complete_pattern_has_all_edges() {
        let k3 = make_pattern(PatternKind::Complete(3)).unwrap();
        assert_eq!(k3.vertex_count(), 3);
        assert_eq!(
            k3.edges(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
            "K3 is the triangle 01,02,12"
        );
        for t in 2..=7 {
            let k = make_pattern(PatternKind::Complete(t)).unwrap();
            assert_eq!(k.edge_count() as u64, util::binomial(t, 2));
        }
    }

    #[test]
    fn k4_minus_hyper_shape() {
        let h = make_pattern(PatternKind::K4MinusHyper).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.arity(), 3);
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn book_one_is_a_triangle() {
        // Expanding K_2 joined with a single extra vertex by hand gives K_3.
        let b1 = make_pattern(PatternKind::Book(1)).unwrap();
        let k3 = make_pattern(PatternKind::Complete(3)).unwrap();
        assert_eq!(b1.edges(), k3.edges());
        assert_eq!(b1.describe(), "K3");
    }

    #[test]
    fn pattern_param_validation() {
        assert!(make_pattern(PatternKind::Cycle(2)).is_err());
        assert!(make_pattern(PatternKind::Complete(1)).is_err());
        assert!(make_pattern(PatternKind::CompleteMinusEdge(2)).is_err());
        assert!(make_pattern(PatternKind::Star(0)).is_err());
        assert!(make_pattern(PatternKind::Book(0)).is_err());
    }

    #[test]
    fn pattern_minilanguage_round_trip() {
        for s in ["K4", "K4-e", "C6", "K1s:5", "B3", "K4m3"] {
            let kind: PatternKind = s.parse().unwrap();
            assert_eq!(kind.to_string(), s);
            let pat = make_pattern(kind).unwrap();
            assert_eq!(pat.describe(), s);
        }
        assert!("K".parse::<PatternKind>().is_err());
        assert!("Q5".parse::<PatternKind>().is_err());
        assert!("K4-f".parse::<PatternKind>().is_err());
    }

    #[test]
    fn describe_recognizes_families() {
        let c4 = make_pattern(PatternKind::Cycle(4)).unwrap();
        assert_eq!(c4.describe(), "C4");
        let star = make_pattern(PatternKind::Star(3)).unwrap();
        assert_eq!(star.describe(), "K1s:3");
        // B2 is K4 minus an edge, so the K-family label wins
        let book2 = make_pattern(PatternKind::Book(2)).unwrap();
        assert_eq!(book2.describe(), "K4-e");
        let book3 = make_pattern(PatternKind::Book(3)).unwrap();
        assert_eq!(book3.describe(), "B3");
        let k4e = make_pattern(PatternKind::CompleteMinusEdge(4)).unwrap();
        assert_eq!(k4e.describe(), "K4-e");
        // a 4-vertex path is in no named family
        let p4 =
            TargetPattern::from_graph(SimpleGraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap())
                .unwrap();
        assert_eq!(p4.describe(), "G4v3e");
    }

    #[test]
    fn coloring_rank_and_access() {
        let c = EdgeColoring::from_fn(5, 3, 2, |e| (e[0] + e[1]) % 3).unwrap();
        for u in 0..5 {
            for v in u + 1..5 {
                assert_eq!(c.color_of(&[u, v]), (u + v) % 3);
            }
        }
        let mut c = c;
        c.set_color(&[1, 3], 2).unwrap();
        assert_eq!(c.color_of(&[1, 3]), 2);
        assert!(c.set_color(&[1, 3], 3).is_err());
    }

    #[test]
    fn coloring_restrict_keeps_colors() {
        let c = EdgeColoring::from_fn(6, 4, 2, |e| (3 * e[0] + e[1]) % 4).unwrap();
        let r = c.restrict(4).unwrap();
        assert_eq!(r.vertex_count(), 4);
        for u in 0..4 {
            for v in u + 1..4 {
                assert_eq!(r.color_of(&[u, v]), c.color_of(&[u, v]));
            }
        }
    }

    #[test]
    fn hypergraph_coloring_rank() {
        let c = EdgeColoring::from_fn(6, 2, 3, |e| (e[0] + e[1] + e[2]) % 2).unwrap();
        assert_eq!(c.edge_count(), 20);
        assert_eq!(c.color_of(&[1, 2, 5]), 0);
        assert_eq!(c.color_of(&[0, 2, 5]), 1);
    }
}
