//! Expression language for algebra elements.
//!
//! Grammar (left-associative at each level, products bind tighter than
//! addition, `d(...)` and grouping tightest):
//!
//! ```text
//! expr     := ["-"] term { ("+" | "-") term }
//! term     := rational ["*"] [ product ] | product
//! product  := atom { ("sh" | "st" | "sb") atom }
//! atom     := word | "d" "(" expr ")" | "(" expr ")" | "1"
//! word     := ("z" int)+ | "[" int { "," int } "]"
//! rational := int [ "/" int ]
//! ```
//!
//! A rational directly followed by a word (no `*`) is a scalar multiple,
//! so every canonical rendering, including bare rationals like `0` or
//! `3/2`, parses back. Mixing different products in one unparenthesized
//! chain is legal but left-associated, and flagged with a lint warning.

use std::fmt;

use num::{BigInt, BigRational, One};
use thiserror::Error;

use crate::error::{Error as AlgebraError, Result as AlgebraResult};
use crate::poly::Polynomial;
use crate::products::{collapse, Algebra};
use crate::word::Word;

/// Binary product operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductOp {
    Sha,
    Star,
    StarBar,
}

impl ProductOp {
    fn name(self) -> &'static str {
        match self {
            ProductOp::Sha => "sh",
            ProductOp::Star => "st",
            ProductOp::StarBar => "sb",
        }
    }
}

/// Abstract syntax tree for expressions.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// Bare rational literal (a scalar multiple of the unit).
    Rational(BigRational),
    /// Word literal; the empty word is the unit `1`.
    Word(Word),
    /// `d(...)`.
    Collapse(Box<Expr>),
    /// Leading unary minus.
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    /// `rational * product` or juxtaposed `rational product`.
    Scale(BigRational, Box<Expr>),
    Product(ProductOp, Box<Expr>, Box<Expr>),
}

/// Parse error with exact position and the token set that was expected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub found: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at {}:{}: expected {}, found {}",
            self.line,
            self.col,
            self.expected.join(" or "),
            self.found
        )
    }
}

/// Non-fatal lint emitted while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

/// Result of a successful parse.
#[derive(Debug, Clone, PartialEq)]
pub struct Parsed {
    pub expr: Expr,
    pub warnings: Vec<ParseWarning>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Int(BigInt),
    Letter(u64),
    KwD,
    KwSh,
    KwSt,
    KwSb,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Letter(k) => format!("`z{k}`"),
            Tok::KwD => "`d`".into(),
            Tok::KwSh => "`sh`".into(),
            Tok::KwSt => "`st`".into(),
            Tok::KwSb => "`sb`".into(),
            Tok::Eof => "end of input".into(),
        }
    }

    fn product_op(&self) -> Option<ProductOp> {
        match self {
            Tok::KwSh => Some(ProductOp::Sha),
            Tok::KwSt => Some(ProductOp::Star),
            Tok::KwSb => Some(ProductOp::StarBar),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: u32,
    col: u32,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            chars: input.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, line: u32, col: u32, found: String, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            line,
            col,
            found,
            expected,
        }
    }

    fn lex_digits(&mut self) -> String {
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        digits
    }

    fn tokenize(mut self) -> Result<Vec<Token>, ParseError> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (line, col) = (self.line, self.col);
            let Some(&c) = self.chars.peek() else {
                out.push(Token {
                    tok: Tok::Eof,
                    line,
                    col,
                });
                return Ok(out);
            };
            let tok = match c {
                '+' => {
                    self.bump();
                    Tok::Plus
                }
                '-' => {
                    self.bump();
                    Tok::Minus
                }
                '*' => {
                    self.bump();
                    Tok::Star
                }
                '/' => {
                    self.bump();
                    Tok::Slash
                }
                '(' => {
                    self.bump();
                    Tok::LParen
                }
                ')' => {
                    self.bump();
                    Tok::RParen
                }
                '[' => {
                    self.bump();
                    Tok::LBracket
                }
                ']' => {
                    self.bump();
                    Tok::RBracket
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                '0'..='9' => {
                    let digits = self.lex_digits();
                    Tok::Int(digits.parse().expect("digit run"))
                }
                'z' => {
                    self.bump();
                    if matches!(self.chars.peek(), Some(d) if d.is_ascii_digit()) {
                        let digits = self.lex_digits();
                        let value: u64 = digits.parse().map_err(|_| {
                            self.error(
                                line,
                                col,
                                format!("`z{digits}`"),
                                vec!["letter fitting in 64 bits"],
                            )
                        })?;
                        if value == 0 {
                            return Err(self.error(line, col, "`z0`".into(), vec!["letter >= 1"]));
                        }
                        Tok::Letter(value)
                    } else {
                        let rest = self.lex_ident_rest();
                        return Err(self.error(
                            line,
                            col,
                            format!("`z{rest}`"),
                            vec!["digits after `z`"],
                        ));
                    }
                }
                c if c.is_alphabetic() => {
                    let mut ident = String::new();
                    ident.push(self.bump().unwrap());
                    ident.push_str(&self.lex_ident_rest());
                    match ident.as_str() {
                        "d" => Tok::KwD,
                        "sh" => Tok::KwSh,
                        "st" => Tok::KwSt,
                        "sb" => Tok::KwSb,
                        other => {
                            return Err(self.error(
                                line,
                                col,
                                format!("`{other}`"),
                                vec!["`d`", "`sh`", "`st`", "`sb`", "word"],
                            ))
                        }
                    }
                }
                other => {
                    return Err(self.error(
                        line,
                        col,
                        format!("`{other}`"),
                        vec!["expression token"],
                    ))
                }
            };
            out.push(Token { tok, line, col });
        }
    }

    fn lex_ident_rest(&mut self) -> String {
        let mut rest = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_alphanumeric()) {
            rest.push(self.bump().unwrap());
        }
        rest
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    warnings: Vec<ParseWarning>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, offset: usize) -> &Token {
        let idx = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[idx]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.advance();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        let t = self.peek();
        ParseError {
            line: t.line,
            col: t.col,
            found: t.tok.describe(),
            expected,
        }
    }

    fn starts_atom(tok: &Tok) -> bool {
        matches!(tok, Tok::Letter(_) | Tok::LBracket | Tok::KwD | Tok::LParen)
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let negated = self.eat(&Tok::Minus);
        let first = self.parse_term()?;
        let mut acc = if negated {
            Expr::Neg(Box::new(first))
        } else {
            first
        };
        loop {
            if self.eat(&Tok::Plus) {
                let rhs = self.parse_term()?;
                acc = Expr::Add(Box::new(acc), Box::new(rhs));
            } else if self.eat(&Tok::Minus) {
                let rhs = self.parse_term()?;
                acc = Expr::Sub(Box::new(acc), Box::new(rhs));
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        if let Tok::Int(n) = &self.peek().tok {
            // `1` directly followed by a product operator is the unit atom
            let unit_atom = n.is_one() && self.peek_at(1).tok.product_op().is_some();
            if !unit_atom {
                let rational = self.parse_rational()?;
                self.eat(&Tok::Star);
                if Self::starts_atom(&self.peek().tok) {
                    let product = self.parse_product()?;
                    return Ok(Expr::Scale(rational, Box::new(product)));
                }
                return Ok(Expr::Rational(rational));
            }
        }
        self.parse_product()
    }

    fn parse_rational(&mut self) -> Result<BigRational, ParseError> {
        let numer = match self.advance().tok {
            Tok::Int(n) => n,
            _ => unreachable!("caller checked for an integer"),
        };
        if self.eat(&Tok::Slash) {
            let t = self.advance();
            match t.tok {
                Tok::Int(d) => {
                    if d == BigInt::from(0) {
                        return Err(ParseError {
                            line: t.line,
                            col: t.col,
                            found: "`0`".into(),
                            expected: vec!["nonzero denominator"],
                        });
                    }
                    Ok(BigRational::new(numer, d))
                }
                other => Err(ParseError {
                    line: t.line,
                    col: t.col,
                    found: other.describe(),
                    expected: vec!["integer denominator"],
                }),
            }
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    fn parse_product(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.parse_atom()?;
        let mut first_op: Option<ProductOp> = None;
        let mut warned = false;
        while let Some(op) = self.peek().tok.product_op() {
            let t = self.advance();
            let rhs = self.parse_atom()?;
            acc = Expr::Product(op, Box::new(acc), Box::new(rhs));
            match first_op {
                None => first_op = Some(op),
                Some(prev) if prev != op && !warned => {
                    self.warnings.push(ParseWarning {
                        line: t.line,
                        col: t.col,
                        message: format!(
                            "mixed `{}` and `{}` in one chain associate left to right; \
                             parenthesize to make the grouping explicit",
                            prev.name(),
                            op.name()
                        ),
                    });
                    warned = true;
                }
                Some(_) => {}
            }
        }
        Ok(acc)
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().tok.clone() {
            Tok::Letter(_) => {
                let mut letters = Vec::new();
                while let Tok::Letter(k) = self.peek().tok {
                    letters.push(k);
                    self.advance();
                }
                Ok(Expr::Word(Word::from_raw(letters)))
            }
            Tok::LBracket => {
                self.advance();
                let mut letters = Vec::new();
                loop {
                    let t = self.advance();
                    match t.tok {
                        Tok::Int(n) => {
                            use num::ToPrimitive;
                            let k = n.to_u64().ok_or_else(|| ParseError {
                                line: t.line,
                                col: t.col,
                                found: format!("`{n}`"),
                                expected: vec!["letter fitting in 64 bits"],
                            })?;
                            if k == 0 {
                                return Err(ParseError {
                                    line: t.line,
                                    col: t.col,
                                    found: "`0`".into(),
                                    expected: vec!["letter >= 1"],
                                });
                            }
                            letters.push(k);
                        }
                        other => {
                            return Err(ParseError {
                                line: t.line,
                                col: t.col,
                                found: other.describe(),
                                expected: vec!["integer letter"],
                            })
                        }
                    }
                    if self.eat(&Tok::Comma) {
                        continue;
                    }
                    if self.eat(&Tok::RBracket) {
                        break;
                    }
                    return Err(self.unexpected(vec!["`,`", "`]`"]));
                }
                Ok(Expr::Word(Word::from_raw(letters)))
            }
            Tok::KwD => {
                self.advance();
                if !self.eat(&Tok::LParen) {
                    return Err(self.unexpected(vec!["`(`"]));
                }
                let inner = self.parse_expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected(vec!["`)`"]));
                }
                Ok(Expr::Collapse(Box::new(inner)))
            }
            Tok::LParen => {
                self.advance();
                let inner = self.parse_expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected(vec!["`)`"]));
                }
                Ok(inner)
            }
            Tok::Int(n) if n.is_one() => {
                self.advance();
                Ok(Expr::Word(Word::empty()))
            }
            _ => Err(self.unexpected(vec!["word", "`d(`", "`(`", "`[`", "`1`"])),
        }
    }
}

/// Parses an expression, returning the AST plus any lint warnings.
pub fn parse(input: &str) -> Result<Parsed, ParseError> {
    let tokens = Lexer::new(input).tokenize()?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        warnings: Vec::new(),
    };
    let expr = parser.parse_expr()?;
    if parser.peek().tok != Tok::Eof {
        return Err(parser.unexpected(vec!["`+`", "`-`", "end of input"]));
    }
    Ok(Parsed {
        expr,
        warnings: parser.warnings,
    })
}

/// Evaluates an AST to a polynomial in normal form. Product depth caps
/// propagate from the algebra.
pub fn lower(alg: &Algebra, expr: &Expr) -> AlgebraResult<Polynomial> {
    match expr {
        Expr::Rational(r) => Ok(Polynomial::constant(r.clone())),
        Expr::Word(w) => Ok(Polynomial::from_word(w.clone())),
        Expr::Collapse(inner) => Ok(collapse(&lower(alg, inner)?)),
        Expr::Neg(inner) => Ok(-&lower(alg, inner)?),
        Expr::Add(a, b) => Ok(&lower(alg, a)? + &lower(alg, b)?),
        Expr::Sub(a, b) => Ok(&lower(alg, a)? - &lower(alg, b)?),
        Expr::Scale(r, inner) => Ok(lower(alg, inner)?.scaled(r)),
        Expr::Product(op, a, b) => {
            let pa = lower(alg, a)?;
            let pb = lower(alg, b)?;
            match op {
                ProductOp::Sha => alg.sha(&pa, &pb),
                ProductOp::Star => alg.star(&pa, &pb),
                ProductOp::StarBar => alg.star_bar(&pa, &pb),
            }
        }
    }
}

/// Parse-then-lower convenience used by the CLI and tests.
pub fn eval_text(
    alg: &Algebra,
    input: &str,
) -> Result<(Polynomial, Vec<ParseWarning>), EvalTextError> {
    let parsed = parse(input)?;
    let poly = lower(alg, &parsed.expr)?;
    Ok((poly, parsed.warnings))
}

/// Either phase of `eval_text` can fail.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalTextError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
}
