//! Recursive-descent parser for the expression language
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := base ('^' uint)?
//! base   := 'A' | 'B' | 'x' | literal | '(' expr ')'
//! literal:= uint ('/' uint)? | 'i'
//! ```
//!
//! Juxtaposition is multiplication and the order of `A`, `B` is kept.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    A,
    B,
    X,
    /// `num` or `num/den` as written.
    Number { num: BigUint, den: Option<BigUint> },
    I,
    Paren(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub base: Base,
    pub exp: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<(Sign, Term)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected {}, found {}", expected.join(" or "), found.map_or("end of input".to_string(), |c| format!("{c:?}")))]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: Option<char>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

const BASE_START: [&str; 6] = ["A", "B", "x", "number", "i", "("];

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn error(&mut self, expected: &[&'static str]) -> ParseError {
        let found = self.peek();
        let mut expected = expected.to_vec();
        expected.sort_unstable();
        expected.dedup();
        ParseError {
            offset: self.pos,
            expected,
            found,
        }
    }

    fn uint(&mut self) -> Option<BigUint> {
        self.skip_ws();
        let digits: &str = {
            let rest = &self.src[self.pos..];
            let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            &rest[..end]
        };
        if digits.is_empty() {
            return None;
        }
        self.pos += digits.len();
        digits.parse().ok()
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some('-') => {
                self.bump();
                Sign::Minus
            }
            Some('+') => {
                self.bump();
                Sign::Plus
            }
            _ => Sign::Plus,
        };
        loop {
            terms.push((sign, self.term()?));
            sign = match self.peek() {
                Some('+') => Sign::Plus,
                Some('-') => Sign::Minus,
                _ => break,
            };
            self.bump();
        }
        Ok(Expr { terms })
    }

    fn starts_base(c: Option<char>) -> bool {
        matches!(c, Some('A' | 'B' | 'x' | 'i' | '(' | '0'..='9'))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                c if Self::starts_base(c) => factors.push(self.factor()?),
                _ => break,
            }
        }
        Ok(Term { factors })
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        let base = self.base()?;
        let exp = if self.peek() == Some('^') {
            self.bump();
            let n = self.uint().ok_or_else(|| self.error(&["exponent"]))?;
            Some(u32::try_from(n).map_err(|_| self.error(&["exponent below 2^32"]))?)
        } else {
            None
        };
        Ok(Factor { base, exp })
    }

    fn base(&mut self) -> Result<Base, ParseError> {
        match self.peek() {
            Some('A') => {
                self.bump();
                Ok(Base::A)
            }
            Some('B') => {
                self.bump();
                Ok(Base::B)
            }
            Some('x') => {
                self.bump();
                Ok(Base::X)
            }
            Some('i') => {
                self.bump();
                Ok(Base::I)
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error(&[")", "+", "-", "*"]));
                }
                self.bump();
                Ok(Base::Paren(Box::new(inner)))
            }
            Some('0'..='9') => {
                let num = self.uint().expect("digit present");
                let den = if self.peek() == Some('/') {
                    self.bump();
                    Some(self.uint().ok_or_else(|| self.error(&["denominator"]))?)
                } else {
                    None
                };
                Ok(Base::Number { num, den })
            }
            _ => Err(self.error(&BASE_START)),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let expr = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error(&["+", "-", "*", "end of input"]));
    }
    Ok(expr)
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::A => write!(f, "A"),
            Base::B => write!(f, "B"),
            Base::X => write!(f, "x"),
            Base::I => write!(f, "i"),
            Base::Number { num, den: None } => write!(f, "{num}"),
            Base::Number { num, den: Some(d) } => write!(f, "{num}/{d}"),
            Base::Paren(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if let Some(e) = self.exp {
            write!(f, "^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Canonical form: `*` between factors, ` + ` / ` - ` between terms, a
/// bare `-` before a negative first term.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (sign, term)) in self.terms.iter().enumerate() {
            match (i, sign) {
                (0, Sign::Plus) => {}
                (0, Sign::Minus) => write!(f, "-")?,
                (_, Sign::Plus) => write!(f, " + ")?,
                (_, Sign::Minus) => write!(f, " - ")?,
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}
