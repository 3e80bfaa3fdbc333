//! Form expressions: `P(..)` points, `V(..)` vectors, rationals, `+ - * ^`.
//!
//! Precedence from loosest to tightest: `+ -`, `*`, `^`, unary `-`. All
//! binary operators are left-associative. `∧` is accepted for `^`.

use std::fmt;

use pointform_core::{Blade, Frame, GeometricForm, Scalar};

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct ExprError {
    pub pos: Pos,
    pub message: String,
}

fn fail<T>(pos: Pos, message: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError { pos, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(Scalar),
    Point(Vec<Scalar>),
    Vector(Vec<Scalar>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    /// Scalar multiplication; one side must evaluate to a scalar.
    Mul(Box<Expr>, Box<Expr>, Pos),
    Wedge(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(Scalar),
    Ident(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(c) => format!("'{c}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ExprError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut pos = Pos { line: 1, col: 1 };
    while let Some(&c) = chars.peek() {
        let start = pos;
        if c == '\n' {
            chars.next();
            pos = Pos { line: pos.line + 1, col: 1 };
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            pos.col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                pos.col += 1;
            }
            let value = digits.parse().expect("nonempty ascii digits");
            out.push((Tok::Int(value), start));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' | '∧' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            'P' | 'V' => Tok::Ident(c),
            other => return fail(start, format!("unexpected character '{other}'")),
        };
        chars.next();
        pos.col += 1;
        out.push((tok, start));
    }
    out.push((Tok::End, pos));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    dim: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Pos, ExprError> {
        let (tok, pos) = self.bump();
        if tok == want {
            Ok(pos)
        } else {
            fail(pos, format!("expected {}, found {}", want.describe(), tok.describe()))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.wedge()?;
        while *self.peek() == Tok::Star {
            let (_, pos) = self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.wedge()?), pos);
        }
        Ok(lhs)
    }

    fn wedge(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            lhs = Expr::Wedge(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek().clone() {
            Tok::Int(_) => Ok(Expr::Scalar(self.rational()?)),
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(kind) => {
                let (_, pos) = self.bump();
                self.expect(Tok::LParen)?;
                let mut coords = vec![self.signed_rational()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    coords.push(self.signed_rational()?);
                }
                self.expect(Tok::RParen)?;
                if coords.len() != self.dim {
                    return fail(
                        pos,
                        format!("{kind}(..) takes {} coordinates in dimension {}, found {}", self.dim, self.dim, coords.len()),
                    );
                }
                Ok(if kind == 'P' { Expr::Point(coords) } else { Expr::Vector(coords) })
            }
            other => fail(self.pos(), format!("expected an operand, found {}", other.describe())),
        }
    }

    fn signed_rational(&mut self) -> Result<Scalar, ExprError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.rational()?)
            }
            Tok::Plus => {
                self.bump();
                self.rational()
            }
            _ => self.rational(),
        }
    }

    fn rational(&mut self) -> Result<Scalar, ExprError> {
        let (tok, pos) = self.bump();
        let Tok::Int(numer) = tok else {
            return fail(pos, format!("expected a number, found {}", tok.describe()));
        };
        if *self.peek() != Tok::Slash {
            return Ok(numer);
        }
        self.bump();
        let (tok, dpos) = self.bump();
        let Tok::Int(denom) = tok else {
            return fail(dpos, format!("expected a denominator, found {}", tok.describe()));
        };
        numer.checked_div(&denom).ok_or(ExprError { pos: dpos, message: "zero denominator".into() })
    }
}

/// Parses `text` with point and vector literals of arity `dim`.
pub fn parse_form(text: &str, dim: usize) -> Result<Expr, ExprError> {
    let mut parser = Parser { toks: lex(text)?, at: 0, dim };
    let expr = parser.expr()?;
    if *parser.peek() != Tok::End {
        return fail(parser.pos(), format!("unexpected {}", parser.peek().describe()));
    }
    Ok(expr)
}

/// Scalar value of a form with no terms above grade 0.
fn as_scalar(x: &GeometricForm) -> Option<Scalar> {
    x.terms().all(|(b, _)| b.grade() == 0).then(|| x.coefficient(Blade::SCALAR))
}

/// Evaluates in `frame`, whose dimension must match the parse dimension.
pub fn evaluate(expr: &Expr, frame: Frame) -> Result<GeometricForm, ExprError> {
    let origin = Pos { line: 1, col: 1 };
    Ok(match expr {
        Expr::Scalar(s) => GeometricForm::scalar(frame, s.clone()),
        Expr::Point(c) => GeometricForm::point(frame, c).map_err(|e| ExprError { pos: origin, message: e.to_string() })?,
        Expr::Vector(c) => GeometricForm::vector(frame, c).map_err(|e| ExprError { pos: origin, message: e.to_string() })?,
        Expr::Neg(x) => -&evaluate(x, frame)?,
        Expr::Add(a, b) => &evaluate(a, frame)? + &evaluate(b, frame)?,
        Expr::Sub(a, b) => &evaluate(a, frame)? - &evaluate(b, frame)?,
        Expr::Wedge(a, b) => &evaluate(a, frame)? ^ &evaluate(b, frame)?,
        Expr::Mul(a, b, pos) => {
            let (a, b) = (evaluate(a, frame)?, evaluate(b, frame)?);
            match (as_scalar(&a), as_scalar(&b)) {
                (Some(s), _) => b.scale(&s),
                (None, Some(s)) => a.scale(&s),
                (None, None) => return fail(*pos, "'*' needs a scalar operand; use '^' for the exterior product"),
            }
        }
    })
}
