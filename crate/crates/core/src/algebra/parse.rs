//! Parser for the canonical text form of polynomials and rational functions.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*
//! factor  := '-' factor | base ('^' integer)?
//! base    := number | ident | '(' expr ')'
//! number  := digits ('/' digits)?
//! ident   := letter (letter | digit | '_')*
//! ```

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::var::Var;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut tokens = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            '/' => {
                tokens.push((i, Token::Slash));
                i += 1;
            }
            '^' => {
                tokens.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = BigInt::from_str(&input[start..i]).expect("digits");
                tokens.push((start, Token::Number(n)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push((start, Token::Ident(input[start..i].to_owned())));
            }
            _ => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character {c:?}"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    input_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(p, _)| p)
            .unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.here(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Token::Slash) => {
                    self.bump();
                    let d = self.factor()?;
                    if d.is_zero() {
                        return self.err("division by zero");
                    }
                    acc = acc.div(&d);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc, ParseError> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let negative = if matches!(self.peek(), Some(Token::Minus)) {
                self.bump();
                true
            } else {
                false
            };
            match self.bump() {
                Some(Token::Number(n)) => {
                    let e: i64 = match i64::try_from(&n) {
                        Ok(e) => e,
                        Err(_) => return self.err("exponent too large"),
                    };
                    let e = if negative { -e } else { e };
                    if base.is_zero() && e < 0 {
                        return self.err("zero to a negative power");
                    }
                    Ok(base.pow(e))
                }
                _ => self.err("expected integer exponent after '^'"),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<RatFunc, ParseError> {
        match self.bump() {
            Some(Token::Number(n)) => Ok(RatFunc::constant(BigRational::from_integer(n))),
            Some(Token::Ident(name)) => Ok(RatFunc::var(Var::new(&name))),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => self.err("expected ')'"),
                }
            }
            _ => self.err("expected a number, variable, or '('"),
        }
    }
}

/// Parse a rational function from its canonical (or any equivalent) text form.
pub fn parse_ratfunc(input: &str) -> Result<RatFunc, ParseError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(ParseError {
            position: 0,
            message: "empty input".to_owned(),
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        input_len: input.len(),
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return parser.err("trailing input");
    }
    Ok(value)
}

/// Parse a polynomial; fails when the expression has a nontrivial denominator.
pub fn parse_poly(input: &str) -> Result<Poly, ParseError> {
    let rf = parse_ratfunc(input)?;
    match rf.as_poly() {
        Some(p) => Ok(p.clone()),
        None => Err(ParseError {
            position: 0,
            message: "expression is not a polynomial".to_owned(),
        }),
    }
}

impl FromStr for RatFunc {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ratfunc(s)
    }
}

impl FromStr for Poly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

impl Poly {
    /// Check that a coefficient prints and re-parses; used by tests.
    pub fn reparse(&self) -> Poly {
        parse_poly(&self.to_string()).expect("canonical form parses")
    }
}

#[allow(unused)]
fn is_one(r: &BigRational) -> bool {
    r.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn roundtrip_example() {
        let f: RatFunc = "(1 - a*q)/(1 - a*b*q^2)".parse().unwrap();
        assert_eq!(f.to_string(), "(1 - a*q)/(1 - a*b*q^2)");
        let back: RatFunc = f.to_string().parse().unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn rational_coefficients() {
        let p: Poly = "3/2*q - 1/2".parse().unwrap();
        assert_eq!(p.to_string(), "-1/2 + 3/2*q");
        assert_eq!(p.reparse(), p);
    }

    #[test]
    fn rejects_nonpolynomial() {
        assert!(parse_poly("1/(1 - q)").is_err());
        assert!(parse_poly("q^2 / q").is_ok());
    }

    #[test]
    fn negative_exponent() {
        let f: RatFunc = "q^-2".parse().unwrap();
        assert_eq!(f, RatFunc::new(Poly::one(), Poly::var_pow(Var::q(), 2)));
    }

    #[test]
    fn errors_carry_position() {
        let e = parse_ratfunc("1 + $").unwrap_err();
        assert_eq!(e.position, 4);
        assert!(parse_ratfunc("").is_err());
        assert!(parse_ratfunc("1 +").is_err());
        assert!(parse_ratfunc("(1").is_err());
    }

    #[test]
    fn precedence() {
        let f: RatFunc = "1 - 2*q^2".parse().unwrap();
        let expected = RatFunc::from(Poly::one().sub(
            &Poly::var_pow(Var::q(), 2).mul_scalar(&rat(2)),
        ));
        assert_eq!(f, expected);
    }
}
