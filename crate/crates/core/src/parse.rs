//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (no implicit multiplication):
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' natural)?
//! base     := rational | ident | '(' expr ')' | '-' factor
//! rational := integer ('/' positive-integer)?
//! ```
//!
//! Identifiers are ASCII letters followed by letters, digits or underscores.
//! Every reported error carries a line and column.

use crate::poly::{rat, Integer, PolyError, Polynomial, Rational, VarSet};
use num_traits::Zero;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown identifier `{name}`")]
    UnknownIdent { line: usize, col: usize, name: String },
    #[error("{line}:{col}: exponent must be a non-negative integer literal")]
    BadExponent { line: usize, col: usize },
    #[error("{line}:{col}: denominator must be a positive integer")]
    BadDenominator { line: usize, col: usize },
    #[error("invalid family: {0}")]
    BadFamily(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Int(Integer),
    Ident(String),
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = *self.src.get(self.pos)?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn next_token(&mut self) -> Result<Spanned, ParseError> {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.bump();
        }
        let (line, col) = (self.line, self.col);
        let tok = match self.peek() {
            None => Tok::End,
            Some(b'+') => {
                self.bump();
                Tok::Plus
            }
            Some(b'-') => {
                self.bump();
                Tok::Minus
            }
            Some(b'*') => {
                self.bump();
                Tok::Star
            }
            Some(b'^') => {
                self.bump();
                Tok::Caret
            }
            Some(b'/') => {
                self.bump();
                Tok::Slash
            }
            Some(b'(') => {
                self.bump();
                Tok::LParen
            }
            Some(b')') => {
                self.bump();
                Tok::RParen
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                    self.bump();
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Int(Integer::from_str(text).unwrap())
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                self.bump();
                while matches!(self.peek(), Some(d) if d.is_ascii_alphanumeric() || d == b'_') {
                    self.bump();
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Tok::Ident(text.to_string())
            }
            Some(b) => {
                return Err(ParseError::Syntax {
                    line,
                    col,
                    msg: format!("unexpected character `{}`", b as char),
                })
            }
        };
        Ok(Spanned { tok, line, col })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    cur: Spanned,
    vars: &'a Arc<VarSet>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: &'a Arc<VarSet>) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(src);
        let cur = lexer.next_token()?;
        Ok(Parser { lexer, cur, vars })
    }

    fn advance(&mut self) -> Result<(), ParseError> {
        self.cur = self.lexer.next_token()?;
        Ok(())
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { line: self.cur.line, col: self.cur.col, msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.cur.tok {
                Tok::Plus => {
                    self.advance()?;
                    acc = acc.try_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.advance()?;
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.cur.tok == Tok::Star {
            self.advance()?;
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if self.cur.tok == Tok::Caret {
            self.advance()?;
            let (line, col) = (self.cur.line, self.cur.col);
            match std::mem::replace(&mut self.cur.tok, Tok::End) {
                Tok::Int(n) => {
                    self.advance()?;
                    let e = u32::try_from(&n)
                        .map_err(|_| ParseError::BadExponent { line, col })?;
                    Ok(base.pow(e))
                }
                _ => Err(ParseError::BadExponent { line, col }),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let (line, col) = (self.cur.line, self.cur.col);
        match std::mem::replace(&mut self.cur.tok, Tok::End) {
            Tok::Int(n) => {
                self.advance()?;
                let value = self.maybe_fraction(n)?;
                Ok(Polynomial::constant(self.vars, value))
            }
            Tok::Ident(name) => {
                self.advance()?;
                match self.vars.index_of(&name) {
                    Some(i) => Ok(Polynomial::variable(self.vars, i)),
                    None => Err(ParseError::UnknownIdent { line, col, name }),
                }
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.cur.tok != Tok::RParen {
                    return self.syntax("expected `)`");
                }
                self.advance()?;
                Ok(inner)
            }
            Tok::Minus => {
                self.advance()?;
                Ok(self.factor()?.neg())
            }
            tok => {
                self.cur.tok = tok;
                self.syntax("expected a number, identifier, `(` or `-`")
            }
        }
    }

    fn maybe_fraction(&mut self, numer: Integer) -> Result<Rational, ParseError> {
        if self.cur.tok != Tok::Slash {
            return Ok(rat(numer));
        }
        self.advance()?;
        let (line, col) = (self.cur.line, self.cur.col);
        match std::mem::replace(&mut self.cur.tok, Tok::End) {
            Tok::Int(d) if !d.is_zero() => {
                self.advance()?;
                Ok(Rational::new(numer, d))
            }
            _ => Err(ParseError::BadDenominator { line, col }),
        }
    }
}

/// Parse an expression into an exact polynomial over the given variables.
pub fn parse_polynomial(text: &str, vars: &Arc<VarSet>) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(text, vars)?;
    let poly = p.expr()?;
    if p.cur.tok != Tok::End {
        return p.syntax("trailing input");
    }
    Ok(poly)
}

/// Parse a standalone rational like `3`, `-2/5`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let empty = VarSet::space_only(&[]).map_err(ParseError::Poly)?;
    let poly = parse_polynomial(text, &empty)?;
    poly.constant_value()
        .ok_or_else(|| ParseError::BadFamily("expected a rational constant".into()))
}

/// How the family polynomial is specified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyMode {
    /// f(x) is given; the family is F = f(x) - parameter.
    Fiber,
    /// F(parameter, x) is given directly.
    General,
}

/// Textual description of a one-parameter family of hypersurfaces.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub mode: FamilyMode,
    pub expression: String,
    pub space_vars: Vec<String>,
    pub parameter: String,
}

impl FamilySpec {
    /// Parse into the family polynomial F over [space..., parameter].
    pub fn parse(&self) -> Result<Polynomial, ParseError> {
        if self.space_vars.is_empty() {
            return Err(ParseError::BadFamily("at least one space variable is required".into()));
        }
        if self.space_vars.contains(&self.parameter) {
            return Err(ParseError::BadFamily(format!(
                "parameter `{}` collides with a space variable",
                self.parameter
            )));
        }
        let space: Vec<&str> = self.space_vars.iter().map(|s| s.as_str()).collect();
        let vars = VarSet::family(&space, &self.parameter)?;
        let poly = parse_polynomial(&self.expression, &vars)?;
        match self.mode {
            FamilyMode::General => Ok(poly),
            FamilyMode::Fiber => {
                let pidx = vars.parameter_index().expect("family varset");
                if poly.involves(pidx) {
                    return Err(ParseError::BadFamily(format!(
                        "parameter `{}` must not appear in a fiber-mode expression",
                        self.parameter
                    )));
                }
                let tau = Polynomial::variable(&vars, pidx);
                Ok(poly.try_sub(&tau)?)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_frac;

    fn xy() -> Arc<VarSet> {
        VarSet::space_only(&["x", "y"]).unwrap()
    }

    #[test]
    fn parses_paper_example() {
        let v = xy();
        let f = parse_polynomial("x + x^2*y", &v).unwrap();
        assert_eq!(f.to_string(), "x^2*y + x");
    }

    #[test]
    fn zero_from_cancellation() {
        let v = xy();
        let f = parse_polynomial("(x+y)^2 - (x^2+2*x*y+y^2)", &v).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn rational_coefficients() {
        let v = xy();
        let f = parse_polynomial("1/2*x - 3/4", &v).unwrap();
        let half_x = Polynomial::variable(&v, 0).scale(&rat_frac(1, 2));
        let expected = half_x
            .try_sub(&Polynomial::constant(&v, rat_frac(3, 4)))
            .unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn precedence() {
        let v = VarSet::space_only(&["a", "b", "c"]).unwrap();
        let f = parse_polynomial("a+b*c^2", &v).unwrap();
        let g = parse_polynomial("a+(b*(c^2))", &v).unwrap();
        assert_eq!(f, g);
        // unary minus binds looser than ^
        let h = parse_polynomial("-a^2", &v).unwrap();
        assert_eq!(h, parse_polynomial("0 - a^2", &v).unwrap());
    }

    #[test]
    fn error_positions() {
        let v = xy();
        match parse_polynomial("x + $", &v) {
            Err(ParseError::Syntax { line: 1, col: 5, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match parse_polynomial("x + q", &v) {
            Err(ParseError::UnknownIdent { col: 5, name, .. }) => assert_eq!(name, "q"),
            other => panic!("unexpected: {other:?}"),
        }
        assert!(matches!(
            parse_polynomial("x^y", &v),
            Err(ParseError::BadExponent { .. })
        ));
        assert!(matches!(
            parse_polynomial("x^(2)", &v),
            Err(ParseError::BadExponent { .. })
        ));
        assert!(matches!(
            parse_polynomial("1/0", &v),
            Err(ParseError::BadDenominator { .. })
        ));
        assert!(matches!(
            parse_polynomial("x y", &v),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn family_modes() {
        let spec = FamilySpec {
            mode: FamilyMode::Fiber,
            expression: "x + x^2*y".into(),
            space_vars: vec!["x".into(), "y".into()],
            parameter: "t".into(),
        };
        let f = spec.parse().unwrap();
        assert_eq!(f.to_string(), "x^2*y + x - t");

        let spec = FamilySpec {
            mode: FamilyMode::General,
            expression: "x^2 + y^2 - t".into(),
            space_vars: vec!["x".into(), "y".into()],
            parameter: "t".into(),
        };
        assert_eq!(spec.parse().unwrap().to_string(), "x^2 + y^2 - t");

        let spec = FamilySpec {
            mode: FamilyMode::Fiber,
            expression: "x + x^2*y*z".into(),
            space_vars: vec!["x".into(), "y".into(), "z".into()],
            parameter: "t".into(),
        };
        assert_eq!(spec.parse().unwrap().to_string(), "x^2*y*z + x - t");

        // parameter may not appear in fiber mode
        let spec = FamilySpec {
            mode: FamilyMode::Fiber,
            expression: "x - t".into(),
            space_vars: vec!["x".into()],
            parameter: "t".into(),
        };
        assert!(spec.parse().is_err());

        // at least one space variable
        let spec = FamilySpec {
            mode: FamilyMode::Fiber,
            expression: "1".into(),
            space_vars: vec![],
            parameter: "t".into(),
        };
        assert!(spec.parse().is_err());
    }
}
