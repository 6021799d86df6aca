//! LL(1) recursive-descent parser for the term syntax.
//!
//! ```text
//! term  := item ('+' item)*
//! item  := '0' | numeral | 'W' | 'G' '[' nat ']'
//!        | 'psi' '(' term ')' | 'phi' '(' term ',' term ')'
//!        | 'w' ('^' item)? | '(' term ')'
//! ```
//!
//! Whitespace is insignificant. `w^a` is sugar for `phi(0,a)` and the
//! numeral `n` for the n-fold sum of `phi(0,0)`. The parser produces raw
//! trees (nested sums are flattened); normal-form checking is the
//! validator's job.

use std::fmt;

use crate::term::Term;

/// A syntax error with the byte offset it occurred at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Number(u64),
    UpperW,
    LowerW,
    UpperG,
    Psi,
    Phi,
    Plus,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokenize(src: &'a str) -> Result<Vec<(usize, Tok)>, ParseError> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while let Some(t) = lx.next_token()? {
            out.push(t);
        }
        Ok(out)
    }

    fn next_token(&mut self) -> Result<Option<(usize, Tok)>, ParseError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b'W' => Tok::UpperW,
            b'G' => Tok::UpperG,
            b'w' => Tok::LowerW,
            b'0'..=b'9' => {
                let mut n: u64 = 0;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add((self.src[self.pos] - b'0') as u64))
                        .ok_or_else(|| ParseError {
                            pos: start,
                            message: "numeral too large".into(),
                        })?;
                    self.pos += 1;
                }
                return Ok(Some((start, Tok::Number(n))));
            }
            b'a'..=b'z' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_alphabetic() {
                    end += 1;
                }
                let word = &self.src[self.pos..end];
                let tok = match word {
                    b"psi" => Tok::Psi,
                    b"phi" => Tok::Phi,
                    b"w" => Tok::LowerW,
                    _ => {
                        return Err(ParseError {
                            pos: start,
                            message: format!(
                                "unknown word `{}`",
                                String::from_utf8_lossy(word)
                            ),
                        })
                    }
                };
                self.pos = end;
                return Ok(Some((start, tok)));
            }
            other => {
                return Err(ParseError {
                    pos: start,
                    message: format!("unexpected character `{}`", other as char),
                })
            }
        };
        self.pos += 1;
        Ok(Some((start, tok)))
    }
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(ParseError {
                pos,
                message: format!("expected {what}"),
            }),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut parts = vec![self.item()?];
        while self.peek() == Some(&Tok::Plus) {
            self.bump();
            parts.push(self.item()?);
        }
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            Ok(Term::sum(parts))
        }
    }

    fn item(&mut self) -> Result<Term, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Number(n)) => Ok(Term::numeral(n)),
            Some(Tok::UpperW) => Ok(Term::Omega),
            Some(Tok::UpperG) => {
                self.expect(Tok::LBracket, "`[` after G")?;
                let pos = self.here();
                let idx = match self.bump() {
                    Some(Tok::Number(n)) => n,
                    _ => {
                        return Err(ParseError {
                            pos,
                            message: "expected a Gamma index".into(),
                        })
                    }
                };
                self.expect(Tok::RBracket, "`]` closing the Gamma index")?;
                Ok(Term::Gamma(idx))
            }
            Some(Tok::Psi) => {
                self.expect(Tok::LParen, "`(` after psi")?;
                let a = self.term()?;
                self.expect(Tok::RParen, "`)` closing psi")?;
                Ok(Term::psi(a))
            }
            Some(Tok::Phi) => {
                self.expect(Tok::LParen, "`(` after phi")?;
                let a = self.term()?;
                self.expect(Tok::Comma, "`,` between phi arguments")?;
                let b = self.term()?;
                self.expect(Tok::RParen, "`)` closing phi")?;
                Ok(Term::phi(a, b))
            }
            Some(Tok::LowerW) => {
                if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    let e = self.item()?;
                    Ok(Term::phi(Term::Zero, e))
                } else {
                    Ok(Term::omega())
                }
            }
            Some(Tok::LParen) => {
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(ParseError {
                pos,
                message: "expected a term".into(),
            }),
        }
    }
}

/// Parses a raw term from the shared concrete syntax.
pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let tokens = Lexer::tokenize(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: src.len(),
    };
    let t = p.term()?;
    if p.pos != p.tokens.len() {
        return Err(ParseError {
            pos: p.here(),
            message: "trailing input after term".into(),
        });
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms_and_sugar() {
        assert_eq!(parse_term("0").unwrap(), Term::Zero);
        assert_eq!(parse_term("W").unwrap(), Term::Omega);
        assert_eq!(parse_term("G[3]").unwrap(), Term::Gamma(3));
        assert_eq!(parse_term("1").unwrap(), Term::one());
        assert_eq!(parse_term("w").unwrap(), Term::omega());
        assert_eq!(parse_term("3").unwrap(), Term::numeral(3));
        assert_eq!(
            parse_term("w^2").unwrap(),
            Term::phi(Term::Zero, Term::numeral(2))
        );
    }

    #[test]
    fn whitespace_insignificant() {
        assert_eq!(
            parse_term(" psi( W ) ").unwrap(),
            Term::psi(Term::Omega)
        );
        assert_eq!(
            parse_term("W + 1").unwrap(),
            parse_term("W+1").unwrap()
        );
    }

    #[test]
    fn sums_flatten() {
        assert_eq!(
            parse_term("(w+1)+1").unwrap(),
            Term::Sum(vec![Term::omega(), Term::one(), Term::one()])
        );
    }

    #[test]
    fn caret_binds_item() {
        // w^w+1 is (w^w)+1
        let t = parse_term("w^w+1").unwrap();
        assert_eq!(
            t,
            Term::Sum(vec![
                Term::phi(Term::Zero, Term::omega()),
                Term::one()
            ])
        );
        // right-nesting via items
        let t = parse_term("w^w^w").unwrap();
        assert_eq!(
            t,
            Term::phi(Term::Zero, Term::phi(Term::Zero, Term::omega()))
        );
    }

    #[test]
    fn errors_have_positions() {
        assert!(parse_term("").is_err());
        assert!(parse_term("psi(").is_err());
        assert!(parse_term("q").is_err());
        assert!(parse_term("1+").is_err());
        assert!(parse_term("w 2").is_err());
    }

    #[test]
    fn parses_raw_disorder() {
        // 1+w is syntactically fine; only validation rejects it.
        assert_eq!(
            parse_term("1+w").unwrap(),
            Term::Sum(vec![Term::one(), Term::omega()])
        );
    }
}
