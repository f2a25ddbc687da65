//! Parser for run-length endomorphism literals such as `(0)_2(2)_2(4)_1`.
//!
//! ```text
//! endo := run+
//! run  := "(" INT ")" "_" count
//! count := INT | "{" INT "}"
//! ```
//!
//! Vertices must be strictly increasing, every count at least 1, and the
//! counts must sum to the chain size. Whitespace between tokens is ignored.

use chain_endo::Endo;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotationError {
    #[error("syntax error at column {}: {message}", .position + 1)]
    Syntax { position: usize, message: String },
    #[error("run lengths sum to {got}, expected {expected}")]
    BadSum { expected: usize, got: usize },
    #[error("vertex {vertex} at column {} does not exceed the previous vertex {previous}", .position + 1)]
    NonIncreasingVertices {
        position: usize,
        previous: usize,
        vertex: usize,
    },
    #[error("vertex {value} is outside the chain [0, {}]", .n.saturating_sub(1))]
    OutOfRange { value: usize, n: usize },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> NotationError {
        NotationError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), NotationError> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.error(format!(
                "expected `{}`, found `{}`",
                byte as char, b as char
            ))),
            None => Err(self.error(format!("expected `{}`, found end of input", byte as char))),
        }
    }

    fn integer(&mut self) -> Result<(usize, usize), NotationError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII digits");
        let value = digits.parse().map_err(|_| NotationError::Syntax {
            position: start,
            message: format!("integer `{digits}` is too large"),
        })?;
        Ok((start, value))
    }

    /// `"(" INT ")" "_" count`, returning the vertex position, vertex and count.
    fn run(&mut self) -> Result<(usize, usize, usize), NotationError> {
        self.expect(b'(')?;
        let (at, vertex) = self.integer()?;
        self.expect(b')')?;
        self.expect(b'_')?;
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
        }
        let (count_at, count) = self.integer()?;
        if braced {
            self.expect(b'}')?;
        }
        if count == 0 {
            return Err(NotationError::Syntax {
                position: count_at,
                message: "run length must be at least 1".into(),
            });
        }
        Ok((at, vertex, count))
    }
}

/// Parses a run-length literal into the endomorphism of `C_n` it denotes.
pub fn parse_endo(text: &str, n: usize) -> Result<Endo, NotationError> {
    let mut parser = Parser::new(text);
    let mut runs: Vec<(usize, usize)> = Vec::new();
    let mut total = 0usize;
    loop {
        let (position, vertex, count) = parser.run()?;
        if let Some(&(previous, _)) = runs.last().filter(|&&(p, _)| vertex <= p) {
            return Err(NotationError::NonIncreasingVertices {
                position,
                previous,
                vertex,
            });
        }
        if vertex >= n {
            return Err(NotationError::OutOfRange { value: vertex, n });
        }
        total = total.saturating_add(count);
        runs.push((vertex, count));
        if parser.peek().is_none() {
            break;
        }
    }
    if total != n {
        return Err(NotationError::BadSum {
            expected: n,
            got: total,
        });
    }
    let values = runs
        .into_iter()
        .flat_map(|(vertex, count)| std::iter::repeat_n(vertex, count))
        .collect();
    Ok(Endo::from_table(n, values).expect("increasing vertices below n form a monotone table"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_notation() {
        assert_eq!(
            parse_endo("(0)_2(2)_2(4)_1", 5).unwrap().values(),
            &[0, 0, 2, 2, 4]
        );
        assert_eq!(parse_endo("(4)_5", 5).unwrap().values(), &[4, 4, 4, 4, 4]);
        assert_eq!(
            parse_endo(" (0)_{2} (2)_{3} ", 5).unwrap().values(),
            &[0, 0, 2, 2, 2]
        );
    }

    #[test]
    fn reports_bad_sums() {
        assert_eq!(
            parse_endo("(0)_2(2)_2", 5),
            Err(NotationError::BadSum {
                expected: 5,
                got: 4
            })
        );
        assert_eq!(
            parse_endo("(0)_4(2)_4", 5),
            Err(NotationError::BadSum {
                expected: 5,
                got: 8
            })
        );
    }

    #[test]
    fn rejects_non_increasing_vertices() {
        assert_eq!(
            parse_endo("(2)_2(2)_3", 5),
            Err(NotationError::NonIncreasingVertices {
                position: 6,
                previous: 2,
                vertex: 2
            })
        );
        assert!(matches!(
            parse_endo("(3)_2(1)_3", 5),
            Err(NotationError::NonIncreasingVertices { .. })
        ));
    }

    #[test]
    fn rejects_out_of_range_vertices() {
        assert_eq!(
            parse_endo("(0)_2(5)_3", 5),
            Err(NotationError::OutOfRange { value: 5, n: 5 })
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_endo("(0)2", 2),
            Err(NotationError::Syntax {
                position: 3,
                message: "expected `_`, found `2`".into()
            })
        );
        assert!(matches!(
            parse_endo("", 2),
            Err(NotationError::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_endo("(0)_0(1)_2", 2),
            Err(NotationError::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_endo("(0)_{2", 2),
            Err(NotationError::Syntax { position: 6, .. })
        ));
        assert!(matches!(
            parse_endo("(x)_2", 2),
            Err(NotationError::Syntax { position: 1, .. })
        ));
    }
}
