//! The coloring-matrix text format: n lines of n characters, 'x' on the
//! diagonal, color digits 0-9 off it. Input must be symmetric; asymmetry is
//! rejected rather than repaired so transcription errors cannot slip through.

use super::{EdgeColoring, GraphError};

/// Parses a coloring matrix. The color count is `max digit + 1`.
pub fn parse_coloring_matrix(text: &str) -> Result<EdgeColoring, GraphError> {
    let lines: Vec<&str> = text.lines().collect();
    let n = lines.len();
    if n == 0 {
        return Err(GraphError::MatrixEmpty);
    }
    let mut grid: Vec<Vec<u8>> = Vec::with_capacity(n);
    for (row, line) in lines.iter().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        if chars.len() != n {
            return Err(GraphError::MatrixNotSquare {
                row,
                got: chars.len(),
                expected: n,
            });
        }
        let mut out = Vec::with_capacity(n);
        for (col, &ch) in chars.iter().enumerate() {
            if row == col {
                if ch != 'x' {
                    return Err(GraphError::MatrixBadDiagonal(row));
                }
                out.push(0);
            } else if let Some(d) = ch.to_digit(10) {
                out.push(d as u8);
            } else {
                return Err(GraphError::MatrixInvalidChar { row, col, ch });
            }
        }
        grid.push(out);
    }
    for i in 0..n {
        for j in i + 1..n {
            if grid[i][j] != grid[j][i] {
                return Err(GraphError::MatrixAsymmetric { i, j });
            }
        }
    }
    let k = grid
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(move |&(j, _)| i != j)
                .map(|(_, &c)| c)
        })
        .max()
        .map_or(1, |m| m as usize + 1);
    EdgeColoring::from_fn(n, k, 2, |e| grid[e[0]][e[1]] as usize)
}

/// Emits the matrix text: '\n'-joined lines, no trailing newline.
/// Inverse of [`parse_coloring_matrix`] on valid inputs.
pub fn emit_coloring_matrix(coloring: &EdgeColoring) -> Result<String, GraphError> {
    if coloring.arity() != 2 {
        return Err(GraphError::MatrixArityUnsupported(coloring.arity()));
    }
    if coloring.color_count() > 10 {
        return Err(GraphError::MatrixTooManyColors(coloring.color_count()));
    }
    let n = coloring.vertex_count();
    let mut lines = Vec::with_capacity(n);
    for i in 0..n {
        let mut line = String::with_capacity(n);
        for j in 0..n {
            if i == j {
                line.push('x');
            } else {
                let e = [i.min(j), i.max(j)];
                line.push(char::from_digit(coloring.color_of(&e) as u32, 10).unwrap());
            }
        }
        lines.push(line);
    }
    Ok(lines.join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util;
    use proptest::prelude::*;

    #[test]
    fn smallest_legal_matrix() {
        let c = parse_coloring_matrix("x0\n0x").unwrap();
        assert_eq!(c.vertex_count(), 2);
        assert_eq!(c.color_count(), 1);
        assert_eq!(c.color_of(&[0, 1]), 0);
        assert_eq!(emit_coloring_matrix(&c).unwrap(), "x0\n0x");
    }

    #[test]
    fn trailing_newline_is_tolerated() {
        let c = parse_coloring_matrix("x1\n1x\n").unwrap();
        assert_eq!(c.color_count(), 2);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert!(matches!(
            parse_coloring_matrix(""),
            Err(GraphError::MatrixEmpty)
        ));
        assert!(matches!(
            parse_coloring_matrix("x0\n0"),
            Err(GraphError::MatrixNotSquare { row: 1, .. })
        ));
        assert!(matches!(
            parse_coloring_matrix("00\n0x"),
            Err(GraphError::MatrixBadDiagonal(0))
        ));
        assert!(matches!(
            parse_coloring_matrix("x1\n2x"),
            Err(GraphError::MatrixAsymmetric { i: 0, j: 1 })
        ));
        assert!(matches!(
            parse_coloring_matrix("xa\nax"),
            Err(GraphError::MatrixInvalidChar { .. })
        ));
    }

    #[test]
    fn emit_rejects_unsupported() {
        let hyper = EdgeColoring::constant(4, 2, 3, 0).unwrap();
        assert!(matches!(
            emit_coloring_matrix(&hyper),
            Err(GraphError::MatrixArityUnsupported(3))
        ));
        let wide = EdgeColoring::constant(3, 11, 2, 0).unwrap();
        assert!(matches!(
            emit_coloring_matrix(&wide),
            Err(GraphError::MatrixTooManyColors(11))
        ));
    }

    proptest! {
        #[test]
        fn parse_emit_round_trip(seed in any::<u64>(), n in 2usize..7, k in 1usize..5) {
            let mut rng = util::XorShift64::new(seed);
            let coloring = EdgeColoring::from_fn(n, k, 2, |_| rng.below(k)).unwrap();
            let text = emit_coloring_matrix(&coloring).unwrap();
            let parsed = parse_coloring_matrix(&text).unwrap();
            // parse infers k from the digits actually present
            prop_assert_eq!(parsed.vertex_count(), n);
            for u in 0..n {
                for v in u + 1..n {
                    prop_assert_eq!(parsed.color_of(&[u, v]), coloring.color_of(&[u, v]));
                }
            }
            prop_assert_eq!(emit_coloring_matrix(&parsed).unwrap(), text);
        }
    }
}
