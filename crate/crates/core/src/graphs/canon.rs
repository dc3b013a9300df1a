//! Canonical forms for small graphs and colorings.
//!
//! The canonical code is the lexicographically minimal matrix string over all
//! vertex orderings, read column by column above the diagonal. The search
//! places vertices one position at a time, prunes any branch whose partial
//! string exceeds the best known prefix, and explores only one representative
//! among mutually twin vertices (vertices whose transposition is an
//! automorphism), which collapses the worst symmetric cases.

use super::{EdgeColoring, GraphError, SimpleGraph};

/// Default vertex-count cap for canonicalization.
pub const DEFAULT_CANON_LIMIT: usize = 16;

const SENTINEL: u8 = u8::MAX;

struct Search {
    n: usize,
    labels: Vec<u8>, // n*n symmetric matrix
    best: Vec<u8>,   // C(n,2) entries, column-major upper triangle
    cur: Vec<u8>,
    placed: Vec<usize>,
    used: u32,
    twin_class: Vec<usize>,
}

impl Search {
    fn label(&self, u: usize, v: usize) -> u8 {
        self.labels[u * self.n + v]
    }

    fn run(mut self) -> Vec<u8> {
        self.descend(0);
        self.best
    }

    fn descend(&mut self, pos: usize) {
        let n = self.n;
        if pos == n {
            return;
        }
        let base = pos * (pos.wrapping_sub(1)) / 2;

        // candidates: one vertex per twin class among the unused, each with
        // its column against the placed prefix, sorted ascending by column
        let mut cands: Vec<(Vec<u8>, usize)> = Vec::new();
        let mut class_seen = 0u64;
        for v in 0..n {
            if self.used & (1 << v) != 0 {
                continue;
            }
            let class = self.twin_class[v];
            if class_seen & (1 << class) != 0 {
                continue;
            }
            class_seen |= 1 << class;
            let col: Vec<u8> = self.placed.iter().map(|&p| self.label(p, v)).collect();
            cands.push((col, v));
        }
        cands.sort_unstable();

        for (col, v) in cands {
            match col.as_slice().cmp(&self.best[base..base + pos]) {
                std::cmp::Ordering::Greater => break, // later columns only larger
                std::cmp::Ordering::Less => {
                    // better prefix found: adopt it, reset the tail
                    self.best[base..base + pos].copy_from_slice(&col);
                    for b in self.best[base + pos..].iter_mut() {
                        *b = SENTINEL;
                    }
                }
                std::cmp::Ordering::Equal => {}
            }
            self.cur[base..base + pos].copy_from_slice(&col);
            self.placed.push(v);
            self.used |= 1 << v;
            self.descend(pos + 1);
            self.placed.pop();
            self.used &= !(1 << v);
        }
    }
}

/// Minimal column-major upper-triangle string of the symmetric label matrix.
fn minimal_matrix_code(n: usize, labels: Vec<u8>) -> Vec<u8> {
    if n == 0 {
        return Vec::new();
    }
    // twin classes: u ~ v when swapping them fixes the labeling
    let mut twin_class: Vec<usize> = (0..n).collect();
    for u in 0..n {
        if twin_class[u] != u {
            continue;
        }
        for v in u + 1..n {
            if twin_class[v] != v {
                continue;
            }
            let twins = (0..n)
                .filter(|&w| w != u && w != v)
                .all(|w| labels[u * n + w] == labels[v * n + w]);
            if twins {
                twin_class[v] = u;
            }
        }
    }

    let len = n * (n - 1) / 2;
    let search = Search {
        n,
        labels,
        best: vec![SENTINEL; len],
        cur: vec![0; len],
        placed: Vec::with_capacity(n),
        used: 0,
        twin_class,
    };
    search.run()
}

fn check_limit(vertex_count: usize, limit: usize) -> Result<(), GraphError> {
    let limit = limit.min(DEFAULT_CANON_LIMIT);
    if vertex_count > limit {
        return Err(GraphError::CanonLimitExceeded {
            vertex_count,
            limit,
        });
    }
    Ok(())
}

/// Canonical code of a graph under the default vertex-count limit.
/// Two graphs have equal codes iff they are isomorphic.
pub fn canonical_form(graph: &SimpleGraph) -> Result<Vec<u8>, GraphError> {
    canonical_form_with_limit(graph, DEFAULT_CANON_LIMIT)
}

/// Canonical code with an explicit limit (capped at [`DEFAULT_CANON_LIMIT`]).
pub fn canonical_form_with_limit(
    graph: &SimpleGraph,
    limit: usize,
) -> Result<Vec<u8>, GraphError> {
    let n = graph.vertex_count();
    check_limit(n, limit)?;
    let mut labels = vec![0u8; n * n];
    for (u, v) in graph.edges() {
        labels[u * n + v] = 1;
        labels[v * n + u] = 1;
    }
    let bits = minimal_matrix_code(n, labels);
    // pack: vertex count, then the bit string MSB-first
    let mut out = vec![n as u8];
    for chunk in bits.chunks(8) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            byte |= b << (7 - i);
        }
        out.push(byte);
    }
    Ok(out)
}

/// Canonical code of a full edge coloring (arity 2): colorings have equal
/// codes iff one is a vertex relabeling of the other with colors fixed.
pub fn canonical_coloring_code(coloring: &EdgeColoring) -> Result<Vec<u8>, GraphError> {
    if coloring.arity() != 2 {
        return Err(GraphError::ArityMismatch {
            expected: 2,
            got: coloring.arity(),
        });
    }
    let n = coloring.vertex_count();
    check_limit(n, DEFAULT_CANON_LIMIT)?;
    let mut labels = vec![0u8; n * n];
    for u in 0..n {
        for v in u + 1..n {
            let c = coloring.color_of(&[u, v]) as u8;
            labels[u * n + v] = c;
            labels[v * n + u] = c;
        }
    }
    let mut out = vec![n as u8, coloring.color_count() as u8];
    out.extend(minimal_matrix_code(n, labels));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util;

    fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask & (1 << bit) != 0 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        SimpleGraph::new(n, edges).unwrap()
    }

    /// Oracle: minimum over all n! orderings, computed directly.
    fn canon_brute(g: &SimpleGraph) -> Vec<u8> {
        let n = g.vertex_count();
        let mut best: Option<Vec<u8>> = None;
        util::for_each_permutation(n, |perm| {
            let mut code = Vec::with_capacity(n * (n - 1) / 2);
            for j in 0..n {
                for i in 0..j {
                    code.push(g.has_edge(perm[i], perm[j]) as u8);
                }
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        });
        best.unwrap_or_default()
    }

    fn unpack(code: &[u8]) -> (usize, Vec<u8>) {
        let n = code[0] as usize;
        let len = n * (n - 1) / 2;
        let mut bits = Vec::with_capacity(len);
        for i in 0..len {
            let byte = code[1 + i / 8];
            bits.push((byte >> (7 - i % 8)) & 1);
        }
        (n, bits)
    }

    #[test]
    fn search_matches_brute_minimum() {
        let mut rng = util::XorShift64::new(99);
        for n in 1..=6 {
            let pairs = n * (n - 1) / 2;
            for _ in 0..30 {
                let mask = rng.next_u64() & ((1u64 << pairs) - 1);
                let g = graph_from_mask(n, mask);
                let (got_n, got_bits) = unpack(&canonical_form(&g).unwrap());
                assert_eq!(got_n, n);
                assert_eq!(got_bits, canon_brute(&g), "n={n} mask={mask:b}");
            }
        }
    }

    #[test]
    fn relabeled_paths_share_a_code() {
        let a = SimpleGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let b = SimpleGraph::new(3, vec![(1, 2), (2, 0)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn edge_counts_distinguish() {
        let c4 = graph_from_mask(4, 0b011011); // 4-cycle 01,03,12,23
        let k3_iso = SimpleGraph::new(4, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_ne!(canonical_form(&c4).unwrap(), canonical_form(&k3_iso).unwrap());
    }

    #[test]
    fn four_vertex_graphs_have_eleven_classes() {
        // brute-force partition of all 2^6 labeled graphs on 4 vertices
        let mut codes = std::collections::BTreeSet::new();
        for mask in 0..64u64 {
            codes.insert(canonical_form(&graph_from_mask(4, mask)).unwrap());
        }
        assert_eq!(codes.len(), 11);
    }

    #[test]
    fn permutation_invariance_on_random_graphs() {
        let mut rng = util::XorShift64::new(4242);
        for _ in 0..60 {
            let n = 2 + rng.below(7); // up to 8 vertices
            let pairs = n * (n - 1) / 2;
            let g = graph_from_mask(n, rng.next_u64() & ((1u64 << pairs) - 1));
            // random permutation via sorting random keys
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.below(i + 1));
            }
            let h = g.relabel(&perm).unwrap();
            assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }
    }

    #[test]
    fn symmetric_worst_cases_stay_fast() {
        // all-twin graphs: empty and complete on 16 vertices
        let empty = SimpleGraph::new(16, Vec::new()).unwrap();
        canonical_form(&empty).unwrap();
        let complete =
            SimpleGraph::new(16, (0..16).flat_map(|u| (u + 1..16).map(move |v| (u, v)))).unwrap();
        canonical_form(&complete).unwrap();
    }

    #[test]
    fn limit_is_enforced() {
        let g = SimpleGraph::new(17, Vec::new()).unwrap();
        assert!(matches!(
            canonical_form(&g),
            Err(GraphError::CanonLimitExceeded { .. })
        ));
        let small = SimpleGraph::new(5, vec![(0, 1)]).unwrap();
        assert!(canonical_form_with_limit(&small, 4).is_err());
    }

    #[test]
    fn coloring_codes_respect_colors() {
        let a = EdgeColoring::from_fn(4, 3, 2, |e| (e[0] + e[1]) % 3).unwrap();
        // relabeling by the 4-cycle (0 1 2 3)
        let perm = [1usize, 2, 3, 0];
        let b = EdgeColoring::from_fn(4, 3, 2, |e| {
            let mut m = [perm[e[0]], perm[e[1]]];
            m.sort_unstable();
            a.color_of(&m)
        })
        .unwrap();
        assert_eq!(
            canonical_coloring_code(&a).unwrap(),
            canonical_coloring_code(&b).unwrap()
        );
        // swapping two colors must change the code
        let swapped = EdgeColoring::from_fn(4, 3, 2, |e| match a.color_of(e) {
            0 => 1,
            1 => 0,
            c => c,
        })
        .unwrap();
        assert_ne!(
            canonical_coloring_code(&a).unwrap(),
            canonical_coloring_code(&swapped).unwrap()
        );
    }
}
