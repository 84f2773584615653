//! A small language for Weyl-algebra expressions.
//!
//! ```text
//! expr     := term (('+' | '-') term)* ;
//! term     := factor ('*' factor)* ;
//! factor   := '-' factor | atom ['^' uint] ;
//! atom     := 'a' | 'ad' | 'I' | 'L' | rational | '(' expr ')'
//!           | 'dpow' '(' expr ',' uint ')' ;
//! rational := uint ['/' uint] ;
//! ```
//!
//! `a` is the annihilation operator, `ad` the creation operator, `I` the
//! identity, `L` the parameter λ and `dpow(e, n)` the degenerate power
//! `(e)_{n,λ}`. Products must be written with `*` and are order-significant.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::falling::lambda;
use crate::format::{lambda_poly_json, render_terms};
use crate::weyl::degenerate_power;
use crate::{LambdaPoly, NormalForm, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown token {text:?} at offset {offset}")]
    UnknownToken { offset: usize, text: String },
    #[error("expected {} at offset {offset}, found {found}", .expected.join(" or "))]
    Unexpected {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("exponent at offset {offset} must be a nonnegative integer literal")]
    BadExponent { offset: usize },
    #[error("denominator at offset {offset} is zero")]
    ZeroDenominator { offset: usize },
    #[error("expression nested deeper than {MAX_DEPTH} levels at offset {offset}")]
    TooDeep { offset: usize },
}

/// Bound on nesting of parentheses, `dpow` and unary minus.
pub const MAX_DEPTH: usize = 200;

impl ParseError {
    /// Byte offset into the input.
    pub fn offset(&self) -> usize {
        match self {
            ParseError::UnknownToken { offset, .. }
            | ParseError::Unexpected { offset, .. }
            | ParseError::BadExponent { offset }
            | ParseError::ZeroDenominator { offset }
            | ParseError::TooDeep { offset } => *offset,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    /// `a`
    A,
    /// `ad`
    C,
    /// `I`
    Id,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorExpr {
    Sym(Symbol),
    Scalar(Rational),
    Lambda,
    Add(Box<OperatorExpr>, Box<OperatorExpr>),
    Sub(Box<OperatorExpr>, Box<OperatorExpr>),
    Mul(Box<OperatorExpr>, Box<OperatorExpr>),
    Pow(Box<OperatorExpr>, u32),
    DegPow(Box<OperatorExpr>, u32),
    Neg(Box<OperatorExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Annihilate,
    Create,
    Identity,
    Lambda,
    Dpow,
    Int(BigInt),
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
            Tok::Annihilate => "'a'".into(),
            Tok::Create => "'ad'".into(),
            Tok::Identity => "'I'".into(),
            Tok::Lambda => "'L'".into(),
            Tok::Dpow => "'dpow'".into(),
            Tok::Int(n) => format!("integer {n}"),
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

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        if b.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let single = match b {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((tok, start));
            pos += 1;
            continue;
        }
        if b.is_ascii_digit() {
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let n: BigInt = input[start..pos].parse().expect("ascii digits");
            out.push((Tok::Int(n), start));
            continue;
        }
        if b.is_ascii_alphabetic() || b == b'_' {
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
            let tok = match &input[start..pos] {
                "a" => Tok::Annihilate,
                "ad" => Tok::Create,
                "I" => Tok::Identity,
                "L" => Tok::Lambda,
                "dpow" => Tok::Dpow,
                other => {
                    return Err(ParseError::UnknownToken {
                        offset: start,
                        text: other.to_string(),
                    })
                }
            };
            out.push((tok, start));
            continue;
        }
        let ch = input[start..].chars().next().expect("in bounds");
        return Err(ParseError::UnknownToken {
            offset: start,
            text: ch.to_string(),
        });
    }
    out.push((Tok::End, input.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        tok
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError::Unexpected {
            offset: self.offset(),
            expected,
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(vec![name]))
        }
    }

    fn expr(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = OperatorExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = OperatorExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = OperatorExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<OperatorExpr, ParseError> {
        if self.depth >= MAX_DEPTH {
            return Err(ParseError::TooDeep {
                offset: self.offset(),
            });
        }
        self.depth += 1;
        let result = self.factor_inner();
        self.depth -= 1;
        result
    }

    fn factor_inner(&mut self) -> Result<OperatorExpr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(OperatorExpr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exp = self.exponent()?;
            return Ok(OperatorExpr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    /// A nonnegative integer literal that is not the numerator of a fraction.
    fn exponent(&mut self) -> Result<u32, ParseError> {
        let offset = self.offset();
        let Tok::Int(n) = self.peek().clone() else {
            return Err(ParseError::BadExponent { offset });
        };
        self.bump();
        if *self.peek() == Tok::Slash {
            return Err(ParseError::BadExponent { offset });
        }
        u32::try_from(n).map_err(|_| ParseError::BadExponent { offset })
    }

    fn atom(&mut self) -> Result<OperatorExpr, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Annihilate => {
                self.bump();
                Ok(OperatorExpr::Sym(Symbol::A))
            }
            Tok::Create => {
                self.bump();
                Ok(OperatorExpr::Sym(Symbol::C))
            }
            Tok::Identity => {
                self.bump();
                Ok(OperatorExpr::Sym(Symbol::Id))
            }
            Tok::Lambda => {
                self.bump();
                Ok(OperatorExpr::Lambda)
            }
            Tok::Int(num) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(OperatorExpr::Scalar(Rational::from_integer(num)));
                }
                self.bump();
                let den_offset = self.offset();
                let Tok::Int(den) = self.peek().clone() else {
                    return Err(self.unexpected(vec!["integer"]));
                };
                self.bump();
                if den.is_zero() {
                    return Err(ParseError::ZeroDenominator { offset: den_offset });
                }
                Ok(OperatorExpr::Scalar(Rational::new(num, den)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Dpow => {
                self.bump();
                self.expect(Tok::LParen, "'('")?;
                let inner = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let n = self.exponent()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(OperatorExpr::DegPow(Box::new(inner), n))
            }
            _ => {
                debug_assert_eq!(offset, self.offset());
                Err(self.unexpected(vec![
                    "'a'", "'ad'", "'I'", "'L'", "number", "'('", "'dpow'", "'-'",
                ]))
            }
        }
    }
}

/// Parse one expression; trailing input is an error.
pub fn parse(input: &str) -> Result<OperatorExpr, ParseError> {
    let mut parser = Parser {
        toks: lex(input)?,
        pos: 0,
        depth: 0,
    };
    let expr = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected(vec!["'+'", "'-'", "'*'", "end of input"]));
    }
    Ok(expr)
}

/// Evaluate to a normal-ordered element; `L` becomes the indeterminate λ.
pub fn eval_expr(e: &OperatorExpr) -> NormalForm {
    match e {
        OperatorExpr::Sym(Symbol::A) => NormalForm::annihilation(),
        OperatorExpr::Sym(Symbol::C) => NormalForm::creation(),
        OperatorExpr::Sym(Symbol::Id) => NormalForm::identity(),
        OperatorExpr::Scalar(c) => NormalForm::scalar(LambdaPoly::constant(c.clone())),
        OperatorExpr::Lambda => NormalForm::scalar(lambda()),
        OperatorExpr::Add(l, r) => &eval_expr(l) + &eval_expr(r),
        OperatorExpr::Sub(l, r) => &eval_expr(l) - &eval_expr(r),
        OperatorExpr::Mul(l, r) => eval_expr(l).multiply(&eval_expr(r)),
        OperatorExpr::Pow(b, n) => eval_expr(b).pow(*n as usize),
        OperatorExpr::DegPow(b, n) => degenerate_power(&eval_expr(b), *n as usize),
        OperatorExpr::Neg(inner) => -eval_expr(inner),
    }
}

/// Parse and evaluate in one step.
pub fn eval_str(input: &str) -> Result<NormalForm, ParseError> {
    parse(input).map(|e| eval_expr(&e))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Json,
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Style::Text => "text",
            Style::Json => "json",
        })
    }
}

/// Terms ordered by `(i + j, i)` descending.
fn ordered_terms(nf: &NormalForm) -> Vec<((u32, u32), &LambdaPoly)> {
    let mut terms: Vec<_> = nf.terms().map(|(&k, c)| (k, c)).collect();
    terms.sort_by(|((i1, j1), _), ((i2, j2), _)| (i2 + j2, i2).cmp(&(i1 + j1, i1)));
    terms
}

fn monomial_text(i: u32, j: u32) -> String {
    let mut parts = Vec::new();
    if i > 0 {
        parts.push(format!("ad^{i}"));
    }
    if j > 0 {
        parts.push(format!("a^{j}"));
    }
    parts.join(" * ")
}

/// Render a normal form. Text output is valid input for [`parse`].
pub fn format_nf(nf: &NormalForm, style: Style) -> String {
    let terms = ordered_terms(nf);
    match style {
        Style::Text => render_terms(terms.iter().map(|&((i, j), c)| (c, monomial_text(i, j)))),
        Style::Json => {
            let arr: Vec<Value> = terms
                .iter()
                .map(|&((i, j), c)| json!({ "i": i, "j": j, "coeff": lambda_poly_json(c) }))
                .collect();
            Value::Array(arr).to_string()
        }
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorExpr::Sym(Symbol::A) => f.write_str("a"),
            OperatorExpr::Sym(Symbol::C) => f.write_str("ad"),
            OperatorExpr::Sym(Symbol::Id) => f.write_str("I"),
            OperatorExpr::Scalar(c) => write!(f, "{c}"),
            OperatorExpr::Lambda => f.write_str("L"),
            OperatorExpr::Add(l, r) => write!(f, "({l} + {r})"),
            OperatorExpr::Sub(l, r) => write!(f, "({l} - {r})"),
            OperatorExpr::Mul(l, r) => write!(f, "({l} * {r})"),
            OperatorExpr::Pow(b, n) => write!(f, "({b})^{n}"),
            OperatorExpr::DegPow(b, n) => write!(f, "dpow({b}, {n})"),
            OperatorExpr::Neg(e) => write!(f, "-({e})"),
        }
    }
}

impl NormalForm {
    /// Shorthand for [`format_nf`] in text style.
    pub fn to_text(&self) -> String {
        format_nf(self, Style::Text)
    }
}
