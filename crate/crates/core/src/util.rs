//! Small combinatorial helpers shared across modules.

/// Binomial coefficient `C(n, k)`, 0 when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u128 / i as u128;
    }
    acc as u64
}

/// All r-subsets of `{0, …, n-1}` in lexicographic order, each sorted ascending.
pub fn subsets_lex(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, r) as usize);
    for_each_subset(n, r, |s| out.push(s.to_vec()));
    out
}

/// Visits every r-subset of `{0, …, n-1}` in lexicographic order without
/// allocating per subset.
pub fn for_each_subset(n: usize, r: usize, mut f: impl FnMut(&[usize])) {
    if r > n {
        return;
    }
    if r == 0 {
        f(&[]);
        return;
    }
    let mut s: Vec<usize> = (0..r).collect();
    loop {
        f(&s);
        // advance to the next combination
        let mut i = r;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if s[i] != i + n - r {
                break;
            }
            if i == 0 {
                return;
            }
        }
        s[i] += 1;
        for j in i + 1..r {
            s[j] = s[j - 1] + 1;
        }
    }
}

/// Lexicographic rank of a sorted r-subset among all r-subsets of `{0, …, n-1}`.
pub fn subset_rank(n: usize, subset: &[usize]) -> usize {
    let r = subset.len();
    let mut rank = 0u64;
    let mut lo = 0usize;
    for (i, &s) in subset.iter().enumerate() {
        for v in lo..s {
            rank += binomial(n - 1 - v, r - 1 - i);
        }
        lo = s + 1;
    }
    rank as usize
}

/// Visits every permutation of `0..k` exactly once (Heap's algorithm).
/// The first permutation visited is the identity.
pub fn for_each_permutation(k: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    f(&perm);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Deterministic xorshift64* generator; used where seed-reproducible
/// pseudo-randomness is needed without pulling in an RNG crate.
#[derive(Debug, Clone)]
pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        // state must be nonzero
        Self {
            state: seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).max(1) | 1,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    /// Uniform value in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(48, 4), 194_580);
        assert_eq!(binomial(17, 2), 136);
    }

    #[test]
    fn subsets_lex_order_and_count() {
        let s = subsets_lex(4, 2);
        assert_eq!(
            s,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        for n in 0..=8 {
            for r in 0..=n {
                assert_eq!(subsets_lex(n, r).len() as u64, binomial(n, r));
            }
        }
    }

    #[test]
    fn subset_rank_matches_enumeration() {
        for n in 1..=9 {
            for r in 1..=n.min(4) {
                for (i, s) in subsets_lex(n, r).iter().enumerate() {
                    assert_eq!(subset_rank(n, s), i, "n={n} r={r} s={s:?}");
                }
            }
        }
    }

    #[test]
    fn permutations_visit_all() {
        let mut seen = std::collections::BTreeSet::new();
        for_each_permutation(4, |p| {
            assert!(seen.insert(p.to_vec()));
        });
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn xorshift_is_deterministic() {
        let mut a = XorShift64::new(7);
        let mut b = XorShift64::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }
}
