//! Polynomial expressions: `x^3 - i x^2 + x - i`, `(x - i)(x + 1)^2`,
//! `3/2 x + j k`.
//!
//! ```text
//! poly   := [sign] term (('+' | '-') term)*
//! term   := factor (['*'] ['-'] factor)*     sign after '*' on literals only
//! factor := atom ['^' nat]
//! atom   := rational | 'i' | 'j' | 'k' | 'x' | '(' poly ')'
//! ```
//!
//! Juxtaposition is the ordered product, so `i j` is `k` and `j i` is `-k`.
//! Whitespace is insignificant except that it separates numbers.

use std::fmt;

use num_bigint::BigInt;
use quatpoly::{Algebra, QPoly, Quaternion, Rational};

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    /// The offending token, empty at end of input.
    pub token: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let token = if self.token.is_empty() {
            "end of input".to_string()
        } else {
            format!("'{}'", self.token)
        };
        write!(
            f,
            "{}:{}: {} (at {token})",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unit {
    One,
    I,
    J,
    K,
}

impl Unit {
    fn quaternion(self) -> Quaternion {
        match self {
            Unit::One => Quaternion::one(),
            Unit::I => Quaternion::i(),
            Unit::J => Quaternion::j(),
            Unit::K => Quaternion::k(),
        }
    }
}

/// Parse tree. Products keep their factors in source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    Sum(Box<PolyExpr>, Box<PolyExpr>),
    Difference(Box<PolyExpr>, Box<PolyExpr>),
    Negation(Box<PolyExpr>),
    Product(Vec<PolyExpr>),
    Power(Box<PolyExpr>, u32),
    Variable,
    Literal(Rational, Unit),
}

impl PolyExpr {
    /// The polynomial denoted, with products taken in the given algebra.
    pub fn lower(&self, alg: &Algebra) -> QPoly {
        match self {
            PolyExpr::Sum(a, b) => &a.lower(alg) + &b.lower(alg),
            PolyExpr::Difference(a, b) => &a.lower(alg) - &b.lower(alg),
            PolyExpr::Negation(a) => -&a.lower(alg),
            PolyExpr::Product(fs) => fs
                .iter()
                .fold(QPoly::one(alg), |acc, f| &acc * &f.lower(alg)),
            PolyExpr::Power(a, e) => a.lower(alg).pow(*e),
            PolyExpr::Variable => QPoly::x(alg),
            PolyExpr::Literal(r, u) => QPoly::constant(alg, u.quaternion().scale(r)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Unit(Unit),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    text: String,
    line: usize,
    column: usize,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut advance = |ch: char| {
            if ch == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        if c.is_whitespace() {
            chars.next();
            advance(c);
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                advance(d);
            }
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits")),
                text: s,
                line: l,
                column: col,
            });
            continue;
        }
        let tok = match c {
            'i' => Tok::Unit(Unit::I),
            'j' => Tok::Unit(Unit::J),
            'k' => Tok::Unit(Unit::K),
            'x' => Tok::X,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(ParseError {
                    line: l,
                    column: col,
                    token: c.to_string(),
                    message: "unexpected character".into(),
                })
            }
        };
        chars.next();
        advance(c);
        out.push(Token {
            tok,
            text: c.to_string(),
            line: l,
            column: col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        text: String::new(),
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError {
            line: t.line,
            column: t.column,
            token: t.text.clone(),
            message: message.into(),
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Tok::Int(_) | Tok::Unit(_) | Tok::X | Tok::LParen
        )
    }

    fn poly(&mut self) -> Result<PolyExpr, ParseError> {
        let mut acc = match self.peek() {
            Tok::Minus => {
                self.bump();
                PolyExpr::Negation(Box::new(self.term()?))
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = PolyExpr::Sum(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = PolyExpr::Difference(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        let mut factors = vec![self.factor()?];
        loop {
            if *self.peek() == Tok::Star {
                self.bump();
                if *self.peek() == Tok::Minus {
                    self.bump();
                    if !matches!(self.peek(), Tok::Int(_) | Tok::Unit(_)) {
                        return Err(self.error("a sign after '*' must precede a literal"));
                    }
                    factors.push(PolyExpr::Negation(Box::new(self.factor()?)));
                } else {
                    factors.push(self.factor()?);
                }
            } else if self.starts_factor() {
                factors.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            PolyExpr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<PolyExpr, ParseError> {
        let atom = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(atom);
        }
        self.bump();
        let Tok::Int(e) = self.peek().clone() else {
            return Err(self.error("expected a non-negative integer exponent"));
        };
        let e = u32::try_from(&e)
            .ok()
            .filter(|e| *e <= MAX_EXPONENT)
            .ok_or_else(|| self.error(format!("exponent larger than {MAX_EXPONENT}")))?;
        self.bump();
        Ok(PolyExpr::Power(Box::new(atom), e))
    }

    fn atom(&mut self) -> Result<PolyExpr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let mut d = BigInt::from(1);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let Tok::Int(den) = self.peek().clone() else {
                        return Err(self.error("expected a denominator"));
                    };
                    if den == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                    self.bump();
                    d = den;
                }
                Ok(PolyExpr::Literal(Rational::new(n, d), Unit::One))
            }
            Tok::Unit(u) => {
                self.bump();
                Ok(PolyExpr::Literal(Rational::from_integer(1.into()), u))
            }
            Tok::X => {
                self.bump();
                Ok(PolyExpr::Variable)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.poly()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(self.error("unexpected end of input")),
            _ => Err(self.error("unexpected token")),
        }
    }
}

pub fn parse(input: &str) -> Result<PolyExpr, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
    };
    let e = p.poly()?;
    if *p.peek() != Tok::End {
        return Err(p.error("unexpected token after expression"));
    }
    Ok(e)
}

pub fn parse_poly(input: &str, alg: &Algebra) -> Result<QPoly, ParseError> {
    Ok(parse(input)?.lower(alg))
}

/// A constant expression such as `1 + i` or `-1/2 + 3/2k`.
pub fn parse_quaternion(input: &str, alg: &Algebra) -> Result<Quaternion, ParseError> {
    let p = parse_poly(input, alg)?;
    match p.coeffs() {
        [] => Ok(Quaternion::zero()),
        [c] => Ok(c.clone()),
        _ => Err(ParseError {
            line: 1,
            column: 1,
            token: input.to_string(),
            message: "expected a quaternion, found a polynomial in x".into(),
        }),
    }
}
