//! Finite groups as explicit operation tables.
//!
//! Element 0 is always the identity. Every constructor and import validates
//! the full set of group axioms, associativity included, because a corrupted
//! table would silently invalidate every structured search built on it.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be at least 1")]
    ZeroOrder,
    #[error("symmetric group order {0}! exceeds the supported range (m <= 6)")]
    SymmetricTooLarge(usize),
    #[error("table entry op({a},{b}) = {value} is out of range for order {order}")]
    ClosureViolation {
        a: usize,
        b: usize,
        value: usize,
        order: usize,
    },
    #[error("associativity fails at ({a},{b},{c}): op(op(a,b),c) = {left}, op(a,op(b,c)) = {right}")]
    AssociativityViolation {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
    #[error("element 0 is not a two-sided identity: op(0,{a}) = {left}, op({a},0) = {right}")]
    IdentityViolation { a: usize, left: usize, right: usize },
    #[error("element {0} has no two-sided inverse")]
    InverseViolation(usize),
    #[error("cayley table parse error: {0}")]
    Parse(String),
}

/// A finite group of order n given by its full operation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>, // row-major n×n
    inverse: Vec<usize>,
    name: String,
}

impl FiniteGroup {
    /// Validates all group axioms and computes the inverse table.
    pub fn from_table(
        table: Vec<usize>,
        order: usize,
        name: impl Into<String>,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::ZeroOrder);
        }
        assert_eq!(table.len(), order * order, "table size mismatch");
        let at = |a: usize, b: usize| table[a * order + b];

        for a in 0..order {
            for b in 0..order {
                let v = at(a, b);
                if v >= order {
                    return Err(GroupError::ClosureViolation {
                        a,
                        b,
                        value: v,
                        order,
                    });
                }
            }
        }
        for a in 0..order {
            if at(0, a) != a || at(a, 0) != a {
                return Err(GroupError::IdentityViolation {
                    a,
                    left: at(0, a),
                    right: at(a, 0),
                });
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    let left = at(ab, c);
                    let right = at(a, at(b, c));
                    if left != right {
                        return Err(GroupError::AssociativityViolation {
                            a,
                            b,
                            c,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| at(a, b) == 0 && at(b, a) == 0) {
                Some(b) => inverse[a] = b,
                None => return Err(GroupError::InverseViolation(a)),
            }
        }
        Ok(Self {
            order,
            table,
            inverse,
            name: name.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Serializes to the Cayley-table text format.
    pub fn to_cayley_table(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for a in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|b| self.op(a, b).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if !self.name.is_empty() {
            out.push_str(&format!("# {}\n", self.name));
        }
        out
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.name.is_empty() {
            write!(f, "group of order {}", self.order)
        } else {
            write!(f, "{} (order {})", self.name, self.order)
        }
    }
}

/// The cyclic group Z_n.
pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::ZeroOrder);
    }
    let mut table = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = (a + b) % n;
        }
    }
    FiniteGroup::from_table(table, n, format!("Z{n}"))
}

/// The dihedral group of order 2m. Element `b*m + a` stands for r^a s^b,
/// with s r s = r^{-1}.
pub fn dihedral(m: usize) -> Result<FiniteGroup, GroupError> {
    if m == 0 {
        return Err(GroupError::ZeroOrder);
    }
    let n = 2 * m;
    let id = |rot: usize, flip: usize| flip * m + rot;
    let mut table = vec![0usize; n * n];
    for a1 in 0..m {
        for b1 in 0..2 {
            for a2 in 0..m {
                for b2 in 0..2 {
                    // r^a1 s^b1 · r^a2 s^b2 = r^(a1 ± a2) s^(b1+b2)
                    let rot = if b1 == 0 {
                        (a1 + a2) % m
                    } else {
                        (a1 + m - a2 % m) % m
                    };
                    table[id(a1, b1) * n + id(a2, b2)] = id(rot, (b1 + b2) % 2);
                }
            }
        }
    }
    FiniteGroup::from_table(table, n, format!("D{m}"))
}

/// The symmetric group S_m (m <= 6), elements ordered lexicographically as
/// permutation words; the identity word sorts first.
pub fn symmetric(m: usize) -> Result<FiniteGroup, GroupError> {
    if m == 0 {
        return Err(GroupError::ZeroOrder);
    }
    if m > 6 {
        return Err(GroupError::SymmetricTooLarge(m));
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    crate::util::for_each_permutation(m, |p| perms.push(p.to_vec()));
    perms.sort_unstable();
    let index: std::collections::HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let n = perms.len();
    let mut table = vec![0usize; n * n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // composition p∘q: apply q first
            let composed: Vec<usize> = (0..m).map(|x| p[q[x]]).collect();
            table[i * n + j] = index[&composed];
        }
    }
    FiniteGroup::from_table(table, n, format!("S{m}"))
}

/// Direct product; the element id of (g, h) is `g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let n = g.order() * h.order();
    let hn = h.order();
    let mut table = vec![0usize; n * n];
    for g1 in 0..g.order() {
        for h1 in 0..hn {
            for g2 in 0..g.order() {
                for h2 in 0..hn {
                    let a = g1 * hn + h1;
                    let b = g2 * hn + h2;
                    table[a * n + b] = g.op(g1, g2) * hn + h.op(h1, h2);
                }
            }
        }
    }
    FiniteGroup::from_table(table, n, format!("{}x{}", g.name(), h.name()))
}

/// Parses the Cayley-table text format: first line the order n, then n rows
/// of n element ids, optionally followed by a `# name` comment line.
pub fn from_cayley_table(text: &str) -> Result<FiniteGroup, GroupError> {
    let mut name = String::new();
    let mut numbers: Vec<usize> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if name.is_empty() {
                name = rest.trim().to_string();
            }
            continue;
        }
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| GroupError::Parse(format!("invalid token '{tok}'")))?;
            numbers.push(v);
        }
    }
    let Some((&order, rest)) = numbers.split_first() else {
        return Err(GroupError::Parse("empty input".to_string()));
    };
    if order == 0 {
        return Err(GroupError::ZeroOrder);
    }
    if rest.len() != order * order {
        return Err(GroupError::Parse(format!(
            "expected {} table entries for order {order}, found {}",
            order * order,
            rest.len()
        )));
    }
    FiniteGroup::from_table(rest.to_vec(), order, name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.op(0, 0), 0);
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn cyclic_five_arithmetic() {
        let g = cyclic(5).unwrap();
        assert_eq!(g.op(3, 4), 2);
        assert_eq!(g.inv(3), 2);
        assert!(g.is_abelian());
    }

    #[test]
    fn cyclic_groups_are_abelian_up_to_48() {
        for n in 1..=48 {
            assert!(cyclic(n).unwrap().is_abelian(), "Z{n}");
        }
    }

    #[test]
    fn dihedral_three_is_nonabelian_order_six() {
        let g = dihedral(3).unwrap();
        assert_eq!(g.order(), 6);
        // brute-force commutativity scan
        let witness = (0..6)
            .flat_map(|a| (0..6).map(move |b| (a, b)))
            .find(|&(a, b)| g.op(a, b) != g.op(b, a));
        assert!(witness.is_some());
    }

    #[test]
    fn symmetric_three_matches_dihedral_three_size() {
        let s3 = symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert!(symmetric(7).is_err());
    }

    #[test]
    fn latin_square_and_inverse_properties() {
        for g in [
            cyclic(7).unwrap(),
            dihedral(4).unwrap(),
            symmetric(4).unwrap(),
            direct_product(&cyclic(4).unwrap(), &cyclic(4).unwrap()).unwrap(),
        ] {
            let n = g.order();
            for a in 0..n {
                assert_eq!(g.op(a, g.inv(a)), 0);
                assert_eq!(g.op(g.inv(a), a), 0);
                let mut row: Vec<usize> = (0..n).map(|b| g.op(a, b)).collect();
                let mut col: Vec<usize> = (0..n).map(|b| g.op(b, a)).collect();
                row.sort_unstable();
                col.sort_unstable();
                let idseq: Vec<usize> = (0..n).collect();
                assert_eq!(row, idseq);
                assert_eq!(col, idseq);
            }
        }
    }

    #[test]
    fn product_of_z8_and_s3_has_order_48() {
        let g = direct_product(&cyclic(8).unwrap(), &symmetric(3).unwrap()).unwrap();
        assert_eq!(g.order(), 48);
        assert!(!g.is_abelian());
    }

    #[test]
    fn z4_times_z4_is_abelian_order_16() {
        let g = direct_product(&cyclic(4).unwrap(), &cyclic(4).unwrap()).unwrap();
        assert_eq!(g.order(), 16);
        assert!(g.is_abelian());
    }

    #[test]
    fn parse_z2_table() {
        let g = from_cayley_table("2\n0 1\n1 0").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.op(1, 1), 0);
    }

    #[test]
    fn parse_reports_axiom_violations_with_witnesses() {
        // op(1,1) = 1 breaks the latin square; element 1 has no inverse
        let err = from_cayley_table("2\n0 1\n1 1").unwrap_err();
        assert!(matches!(err, GroupError::InverseViolation(1)), "{err:?}");
        // non-associative quasigroup with identity 0 (order 5 loop)
        let text = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0";
        let err = from_cayley_table(text).unwrap_err();
        match err {
            GroupError::AssociativityViolation { a, b, c, left, right } => {
                assert_ne!(left, right);
                assert!(a < 5 && b < 5 && c < 5);
            }
            other => panic!("expected associativity violation, got {other:?}"),
        }
        // identity violations are caught before anything else
        let err = from_cayley_table("2\n1 0\n0 1").unwrap_err();
        assert!(matches!(err, GroupError::IdentityViolation { .. }));
        // wrong shape
        assert!(matches!(
            from_cayley_table("3\n0 1 2\n1 2 0"),
            Err(GroupError::Parse(_))
        ));
    }

    #[test]
    fn cayley_table_round_trip() {
        let g = direct_product(&cyclic(8).unwrap(), &symmetric(3).unwrap()).unwrap();
        let text = g.to_cayley_table();
        let h = from_cayley_table(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(h.name(), "Z8xS3");
    }
}
