//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr    = [ "+" | "-" ] term { ( "+" | "-" ) term }
//! term    = factor { "*" factor | paren }
//! factor  = [ "-" ] power
//! power   = atom [ "^" integer ]
//! atom    = number | "x" | "y" | "z" | paren
//! paren   = "(" expr ")"
//! number  = integer [ "/" integer ]
//! ```
//!
//! Juxtaposition is only accepted in front of a parenthesised factor, so
//! `(x+y)(x-y)` and `2(x+z)` parse while `xy` and `24x` do not.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use super::monomial::Var;
use super::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected {found} at position {pos}")]
    Unexpected { pos: usize, found: String },
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { pos: usize, name: char },
    #[error("implicit multiplication at position {pos}; write '*' explicitly")]
    ImplicitMultiplication { pos: usize },
    #[error("division by zero at position {pos}")]
    ZeroDenominator { pos: usize },
    #[error("exponent too large at position {pos}")]
    ExponentTooLarge { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Var(v) => format!("variable '{}'", v.name()),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{00b7}' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_alphabetic() => match Var::from_char(c) {
                Some(v) => Tok::Var(v),
                None => return Err(ParseError::UnknownVariable { pos, name: c }),
            },
            other => {
                return Err(ParseError::Unexpected {
                    pos,
                    found: format!("character '{other}'"),
                })
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self) -> ParseError {
        ParseError::Unexpected {
            pos: self.pos(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = match self.peek() {
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            Tok::Minus => {
                self.bump();
                -&self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Tok::LParen => {
                    acc = &acc * &self.power()?;
                }
                Tok::Int(_) | Tok::Var(_) => {
                    return Err(ParseError::ImplicitMultiplication { pos: self.pos() })
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.factor()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let e: u32 = n
                    .try_into()
                    .ok()
                    .filter(|&e| e <= 4096)
                    .ok_or(ParseError::ExponentTooLarge { pos })?;
                Ok(base.pow(e))
            }
            t => Err(ParseError::Unexpected { pos, found: t.describe() }),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let pos = self.pos();
                    let Tok::Int(d) = self.bump() else {
                        return Err(ParseError::Unexpected {
                            pos,
                            found: self.toks[self.at - 1].1.describe(),
                        });
                    };
                    if d.is_zero() {
                        return Err(ParseError::ZeroDenominator { pos });
                    }
                    return Ok(Polynomial::constant(BigRational::new(n, d)));
                }
                Ok(Polynomial::constant(BigRational::from_integer(n)))
            }
            Tok::Var(v) => {
                self.bump();
                Ok(Polynomial::var(v))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses and expands a polynomial expression in `x, y, z`.
pub fn parse(text: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected());
    }
    Ok(out)
}
