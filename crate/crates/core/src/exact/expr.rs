//! Parser for exact surd expressions: integers, `sqrt(n)`, `+ - * /` and
//! parentheses, e.g. `(1+sqrt(5))/2`. Errors carry the byte offset.

use num::bigint::BigInt;

use super::surd::QuadSurd;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Sqrt,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(usize, Token)>> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while let Some((off, tok)) = lx.next_token()? {
            out.push((off, tok));
        }
        Ok(out)
    }

    fn next_token(&mut self) -> Result<Option<(usize, Token)>> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let b = self.src[self.pos];
        let tok = match b {
            b'(' => {
                self.pos += 1;
                Token::LParen
            }
            b')' => {
                self.pos += 1;
                Token::RParen
            }
            b'+' => {
                self.pos += 1;
                Token::Plus
            }
            b'-' => {
                self.pos += 1;
                Token::Minus
            }
            b'*' => {
                self.pos += 1;
                Token::Star
            }
            b'/' => {
                self.pos += 1;
                Token::Slash
            }
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).expect("ascii digits");
                self.pos = end;
                Token::Int(text.parse().expect("digit run parses"))
            }
            _ if self.src[self.pos..].starts_with(b"sqrt") => {
                self.pos += 4;
                Token::Sqrt
            }
            other => {
                return Err(Error::Parse {
                    offset: start,
                    message: format!("unexpected character {:?}", other as char),
                })
            }
        };
        Ok(Some((start, tok)))
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_rparen(&mut self) -> Result<()> {
        match self.bump() {
            Some((_, Token::RParen)) => Ok(()),
            Some((off, _)) => Err(Error::Parse {
                offset: off,
                message: "expected ')'".to_string(),
            }),
            None => Err(Error::Parse {
                offset: self.len,
                message: "expected ')' before end of input".to_string(),
            }),
        }
    }

    fn expr(&mut self) -> Result<QuadSurd> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some((off, Token::Plus)) => {
                    let off = *off;
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.checked_add(&rhs).map_err(|e| at_offset(e, off))?;
                }
                Some((off, Token::Minus)) => {
                    let off = *off;
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.checked_sub(&rhs).map_err(|e| at_offset(e, off))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QuadSurd> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some((off, Token::Star)) => {
                    let off = *off;
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.checked_mul(&rhs).map_err(|e| at_offset(e, off))?;
                }
                Some((off, Token::Slash)) => {
                    let off = *off;
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.checked_div(&rhs).map_err(|e| at_offset(e, off))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<QuadSurd> {
        match self.peek() {
            Some((_, Token::Minus)) => {
                self.bump();
                Ok(self.factor()?.neg())
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<QuadSurd> {
        match self.bump() {
            Some((_, Token::Int(n))) => Ok(QuadSurd::from_int(n)),
            Some((off, Token::Sqrt)) => {
                match self.bump() {
                    Some((_, Token::LParen)) => {}
                    _ => {
                        return Err(Error::Parse {
                            offset: off + 4,
                            message: "expected '(' after sqrt".to_string(),
                        })
                    }
                }
                let inner = self.expr()?;
                self.expect_rparen()?;
                if inner.sign() < 0 {
                    return Err(Error::Parse {
                        offset: off,
                        message: "unsupported field: sqrt of a negative value".to_string(),
                    });
                }
                inner.sqrt_exact().ok_or_else(|| Error::Parse {
                    offset: off,
                    message: "sqrt does not stay in a quadratic field".to_string(),
                })
            }
            Some((_, Token::LParen)) => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Some((off, tok)) => Err(Error::Parse {
                offset: off,
                message: format!("unexpected token {tok:?}"),
            }),
            None => Err(Error::Parse {
                offset: self.len,
                message: "unexpected end of input".to_string(),
            }),
        }
    }
}

fn at_offset(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => Error::Parse {
            offset,
            message: other.to_string(),
        },
    }
}

/// Parses an exact surd expression such as `(1+sqrt(5))/2`.
pub fn parse_surd(input: &str) -> Result<QuadSurd> {
    let tokens = Lexer::tokens(input)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        len: input.len(),
    };
    let value = parser.expr()?;
    if let Some((off, tok)) = parser.peek() {
        return Err(Error::Parse {
            offset: *off,
            message: format!("trailing input {tok:?}"),
        });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bigrat::rat;

    #[test]
    fn parses_golden_ratio() {
        let x = parse_surd("(1+sqrt(5))/2").unwrap();
        assert_eq!(x, QuadSurd::new(1, 1, 2, 5).unwrap());
    }

    #[test]
    fn parses_rationals_and_products() {
        assert_eq!(
            parse_surd("355/113").unwrap().to_rational(),
            Some(rat(355, 113))
        );
        assert_eq!(
            parse_surd("2*sqrt(2)").unwrap(),
            QuadSurd::new(0, 2, 1, 2).unwrap()
        );
        assert_eq!(
            parse_surd("sqrt(8)").unwrap(),
            QuadSurd::new(0, 2, 1, 2).unwrap()
        );
        assert_eq!(
            parse_surd("-1 + sqrt(9/4)").unwrap().to_rational(),
            Some(rat(1, 2))
        );
    }

    #[test]
    fn reports_byte_offsets() {
        match parse_surd("(1+sqrt(-3))/2") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 3);
                assert!(message.contains("unsupported field"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_surd("1 + ") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_surd("2 ^ 3") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn division_by_zero_is_positioned() {
        match parse_surd("1/(2-2)") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 1);
                assert!(message.contains("division by zero"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
