//! Enumeration of pattern copies inside complete hosts.
//!
//! Copies are identified by their (hyper)edge sets: automorphic embeddings of
//! a pattern onto the same vertex image are counted once. Enumeration walks
//! one injection per left coset of the pattern's automorphism group, so no
//! duplicate edge sets are ever produced.

use super::{Edge, EdgeColoring, EdgeSet, GraphError, TargetPattern};
use crate::util;

/// Largest pattern vertex count supported by copy enumeration. The coset
/// construction scans all p! pattern-vertex permutations once.
const MAX_PATTERN_VERTICES: usize = 10;

/// Embedding skeleton for a pattern: its edges plus one injection
/// representative per automorphism coset.
struct Embedder {
    pattern_edges: Vec<Vec<usize>>,
    coset_reps: Vec<Vec<usize>>,
}

fn perm_key(perm: &[usize]) -> u64 {
    // 4 bits per image; enough for MAX_PATTERN_VERTICES
    perm.iter()
        .enumerate()
        .fold(0u64, |acc, (i, &v)| acc | ((v as u64) << (4 * i)))
}

impl Embedder {
    fn new(pattern: &TargetPattern) -> Self {
        let p = pattern.vertex_count();
        assert!(
            p <= MAX_PATTERN_VERTICES,
            "copy enumeration supports patterns on at most {MAX_PATTERN_VERTICES} vertices, got {p}"
        );
        let pattern_edges = pattern.edges();

        // normalized edge list of the pattern under a vertex permutation
        let mapped = |perm: &[usize]| -> Vec<Vec<usize>> {
            let mut es: Vec<Vec<usize>> = pattern_edges
                .iter()
                .map(|e| {
                    let mut m: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
                    m.sort_unstable();
                    m
                })
                .collect();
            es.sort_unstable();
            es
        };

        let mut automorphisms = Vec::new();
        util::for_each_permutation(p, |perm| {
            if mapped(perm) == pattern_edges {
                automorphisms.push(perm.to_vec());
            }
        });

        // First permutation seen in each left coset perm∘aut is its representative.
        let mut seen = std::collections::HashSet::with_capacity(1 << p);
        let mut coset_reps = Vec::new();
        util::for_each_permutation(p, |perm| {
            if seen.contains(&perm_key(perm)) {
                return;
            }
            coset_reps.push(perm.to_vec());
            let mut composed = vec![0usize; p];
            for aut in &automorphisms {
                for v in 0..p {
                    composed[v] = perm[aut[v]];
                }
                seen.insert(perm_key(&composed));
            }
        });

        Self {
            pattern_edges,
            coset_reps,
        }
    }
}

/// Calls `f` with every distinct copy of `pattern` in the complete host on
/// `n` vertices. The buffer passed to `f` is a sorted edge list; copy order
/// is deterministic but not lexicographic.
pub(crate) fn for_each_copy(pattern: &TargetPattern, n: usize, mut f: impl FnMut(&[Edge])) {
    let p = pattern.vertex_count();
    assert!(n >= p, "host on {n} vertices cannot contain a {p}-vertex pattern");
    let emb = Embedder::new(pattern);
    let r = pattern.arity();
    let mut copy: Vec<Edge> = emb.pattern_edges.iter().map(|_| vec![0usize; r]).collect();
    util::for_each_subset(n, p, |subset| {
        for rep in &emb.coset_reps {
            for (slot, pe) in copy.iter_mut().zip(&emb.pattern_edges) {
                for (dst, &v) in slot.iter_mut().zip(pe) {
                    *dst = subset[rep[v]];
                }
                slot.sort_unstable();
            }
            copy.sort_unstable();
            f(&copy);
        }
    });
}

/// Every distinct copy of `pattern` in the complete host on `n` vertices,
/// in lexicographic order of sorted edge lists.
pub fn enumerate_copies(pattern: &TargetPattern, n: usize) -> Vec<EdgeSet> {
    let mut out = Vec::new();
    for_each_copy(pattern, n, |copy| out.push(copy.to_vec()));
    out.sort_unstable();
    out
}

/// Searches the coloring for a copy of `pattern` entirely in `color`.
/// Returns the lexicographically smallest such copy, or `None`.
pub fn contains_monochromatic(
    coloring: &EdgeColoring,
    pattern: &TargetPattern,
    color: usize,
) -> Result<Option<EdgeSet>, GraphError> {
    if pattern.arity() != coloring.arity() {
        return Err(GraphError::ArityMismatch {
            expected: coloring.arity(),
            got: pattern.arity(),
        });
    }
    if color >= coloring.color_count() {
        return Err(GraphError::ColorOutOfRange {
            color,
            color_count: coloring.color_count(),
        });
    }
    let mut witness: Option<EdgeSet> = None;
    for_each_copy(pattern, coloring.vertex_count(), |copy| {
        if copy.iter().all(|e| coloring.color_of(e) == color) {
            match &witness {
                Some(best) if best.as_slice() <= copy => {}
                _ => witness = Some(copy.to_vec()),
            }
        }
    });
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{make_pattern, PatternKind, SimpleGraph};
    use std::collections::BTreeSet;

    /// Brute-force oracle: all distinct copies via subset × permutation scan
    /// with set-based deduplication, sharing nothing with the coset walk.
    fn copies_brute(pattern: &TargetPattern, n: usize) -> BTreeSet<EdgeSet> {
        let p = pattern.vertex_count();
        let pattern_edges = pattern.edges();
        let mut out = BTreeSet::new();
        for subset in util::subsets_lex(n, p) {
            util::for_each_permutation(p, |perm| {
                let mut copy: EdgeSet = pattern_edges
                    .iter()
                    .map(|e| {
                        let mut m: Vec<usize> = e.iter().map(|&v| subset[perm[v]]).collect();
                        m.sort_unstable();
                        m
                    })
                    .collect();
                copy.sort_unstable();
                out.insert(copy);
            });
        }
        out
    }

    #[test]
    fn triangle_copies_in_k4() {
        let k3 = make_pattern(PatternKind::Complete(3)).unwrap();
        assert_eq!(enumerate_copies(&k3, 4).len(), 4);
    }

    #[test]
    fn complete_copy_counts_are_binomials() {
        for t in 2..=5 {
            let kt = make_pattern(PatternKind::Complete(t)).unwrap();
            for n in t..=9 {
                assert_eq!(
                    enumerate_copies(&kt, n).len() as u64,
                    util::binomial(n, t),
                    "K{t} in K{n}"
                );
            }
        }
    }

    #[test]
    fn small_copy_counts_match_brute_force() {
        // frozen counts: C4 in K4 -> 3, K4-e in K4 -> 6, K4m3 in K4 -> 4
        let c4 = make_pattern(PatternKind::Cycle(4)).unwrap();
        let k4e = make_pattern(PatternKind::CompleteMinusEdge(4)).unwrap();
        let k4m3 = make_pattern(PatternKind::K4MinusHyper).unwrap();
        assert_eq!(enumerate_copies(&c4, 4).len(), 3);
        assert_eq!(enumerate_copies(&k4e, 4).len(), 6);
        assert_eq!(enumerate_copies(&k4m3, 4).len(), 4);
        for (pat, n) in [(&c4, 6), (&k4e, 6), (&k4m3, 6)] {
            let brute = copies_brute(pat, n);
            let fast: Vec<EdgeSet> = enumerate_copies(pat, n);
            assert_eq!(fast.len(), brute.len());
            assert!(fast.iter().all(|c| brute.contains(c)));
        }
    }

    #[test]
    fn copies_are_sorted_and_duplicate_free() {
        for kind in [
            PatternKind::Cycle(5),
            PatternKind::Star(3),
            PatternKind::Book(2),
            PatternKind::Complete(3),
        ] {
            let pat = make_pattern(kind).unwrap();
            let copies = enumerate_copies(&pat, 7);
            for w in copies.windows(2) {
                assert!(w[0] < w[1], "{kind}: order/duplicate violation");
            }
        }
    }

    #[test]
    fn every_copy_is_isomorphic_to_the_pattern() {
        use crate::graphs::canonical_form;
        for kind in [PatternKind::Cycle(4), PatternKind::Book(2), PatternKind::Star(3)] {
            let pat = make_pattern(kind).unwrap();
            let p = pat.vertex_count();
            let pat_graph = match &pat {
                TargetPattern::Graph(g) => g.clone(),
                _ => unreachable!(),
            };
            let pat_code = canonical_form(&pat_graph).unwrap();
            for copy in enumerate_copies(&pat, p + 2) {
                // compress the copy onto its support vertices
                let mut support: Vec<usize> = copy.iter().flatten().copied().collect();
                support.sort_unstable();
                support.dedup();
                assert_eq!(support.len(), p);
                let idx =
                    |v: usize| support.iter().position(|&s| s == v).unwrap();
                let g = SimpleGraph::new(
                    p,
                    copy.iter().map(|e| (idx(e[0]), idx(e[1]))),
                )
                .unwrap();
                assert_eq!(canonical_form(&g).unwrap(), pat_code);
            }
        }
    }

    #[test]
    fn monochromatic_search_finds_and_misses() {
        let k3 = make_pattern(PatternKind::Complete(3)).unwrap();
        let all0 = EdgeColoring::constant(6, 2, 2, 0).unwrap();
        let w = contains_monochromatic(&all0, &k3, 0).unwrap().unwrap();
        assert_eq!(w, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(contains_monochromatic(&all0, &k3, 1).unwrap(), None);
    }

    #[test]
    fn monochromatic_agrees_with_subset_scan() {
        // independent oracle: scan all pattern-sized subsets directly
        let patterns = [
            make_pattern(PatternKind::Complete(3)).unwrap(),
            make_pattern(PatternKind::Cycle(4)).unwrap(),
            make_pattern(PatternKind::Star(2)).unwrap(),
        ];
        let mut rng = util::XorShift64::new(20240811);
        for trial in 0..40 {
            let n = 5 + (trial % 4);
            let k = 2 + (trial % 2);
            let coloring = EdgeColoring::from_fn(n, k, 2, |_| rng.below(k)).unwrap();
            for pat in &patterns {
                for color in 0..k {
                    let got = contains_monochromatic(&coloring, pat, color)
                        .unwrap()
                        .is_some();
                    let brute = copies_brute(pat, n)
                        .iter()
                        .any(|c| c.iter().all(|e| coloring.color_of(e) == color));
                    assert_eq!(got, brute, "pattern {} color {color}", pat.describe());
                }
            }
        }
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let k4m3 = make_pattern(PatternKind::K4MinusHyper).unwrap();
        let coloring = EdgeColoring::constant(5, 2, 2, 0).unwrap();
        assert!(matches!(
            contains_monochromatic(&coloring, &k4m3, 0),
            Err(GraphError::ArityMismatch { .. })
        ));
    }
}
