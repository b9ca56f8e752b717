//! Parser for continued-fraction literals: `[a0; a1, a2, (p1, p2, ...)]`
//! where the parenthesized suffix is the period. The shorthand `1_s` expands
//! to s consecutive ones, e.g. `[0; 1_2, (2, 1_5)]`.

use num::bigint::BigInt;

use super::expansion::CFExpansion;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(format!("expected {:?}", b as char)))
        }
    }

    fn error(&self, message: String) -> Error {
        Error::Parse {
            offset: self.pos,
            message,
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(Error::Parse {
                offset: start,
                message: "expected an integer".to_string(),
            });
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(text.parse().expect("digit run parses"))
    }

    /// One quotient item: an integer, or the `1_s` run shorthand.
    fn items(&mut self, out: &mut Vec<BigInt>) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(b"1_") {
            let shorthand_at = self.pos;
            self.pos += 2;
            let count = self.integer()?;
            let count = usize::try_from(&count).map_err(|_| Error::Parse {
                offset: shorthand_at,
                message: format!("run length {count} out of range"),
            })?;
            out.extend(std::iter::repeat_with(|| BigInt::from(1)).take(count));
            return Ok(());
        }
        out.push(self.integer()?);
        Ok(())
    }
}

/// Parses a CF literal to its canonical expansion.
pub fn parse_cf(input: &str) -> Result<CFExpansion> {
    let mut cur = Cursor {
        src: input.as_bytes(),
        pos: 0,
    };
    cur.expect(b'[')?;
    let a0 = cur.integer()?;
    let mut pre = vec![a0];
    let mut period: Vec<BigInt> = Vec::new();
    if cur.eat(b';') {
        loop {
            if cur.peek() == Some(b'(') {
                cur.expect(b'(')?;
                loop {
                    cur.items(&mut period)?;
                    if !cur.eat(b',') {
                        break;
                    }
                }
                cur.expect(b')')?;
                if period.is_empty() {
                    return Err(cur.error("empty period".to_string()));
                }
                break;
            }
            cur.items(&mut pre)?;
            if !cur.eat(b',') {
                break;
            }
        }
    }
    cur.expect(b']')?;
    cur.skip_ws();
    if cur.pos != cur.src.len() {
        return Err(cur.error("trailing input".to_string()));
    }
    CFExpansion::new(pre, period)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(pre: Vec<i64>, period: Vec<i64>) -> CFExpansion {
        CFExpansion::new(pre, period).unwrap()
    }

    #[test]
    fn parses_basic_forms() {
        assert_eq!(parse_cf("[1; (1)]").unwrap(), cf(vec![1], vec![1]));
        assert_eq!(parse_cf("[3; 7, 16]").unwrap(), cf(vec![3, 7, 16], vec![]));
        assert_eq!(parse_cf("[-2]").unwrap(), cf(vec![-2], vec![]));
        assert_eq!(
            parse_cf("[0; (2, 1)]").unwrap(),
            cf(vec![0], vec![2, 1])
        );
    }

    #[test]
    fn expands_run_shorthand() {
        // beta_3 = [0; 1_2, (2, 1_5)]
        assert_eq!(
            parse_cf("[0; 1_2, (2, 1_5)]").unwrap(),
            cf(vec![0, 1, 1], vec![2, 1, 1, 1, 1, 1])
        );
        assert_eq!(parse_cf("[2; (1_1, 2)]").unwrap(), cf(vec![2], vec![1, 2]));
    }

    #[test]
    fn round_trips_display() {
        for text in ["[1; (1)]", "[3; 7, 16]", "[0; 1, 1, (2, 1, 1, 1, 1, 1)]"] {
            let e = parse_cf(text).unwrap();
            assert_eq!(parse_cf(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_cf("[1; 0, 2]"), Err(Error::Domain(_))));
        for bad in ["", "[", "[1; (2,)]", "[1)", "[1; ()]", "[1] junk"] {
            assert!(
                matches!(parse_cf(bad), Err(Error::Parse { .. })),
                "should reject {bad:?}"
            );
        }
    }
}
