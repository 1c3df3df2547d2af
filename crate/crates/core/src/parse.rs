//! Text format for polynomials.
//!
//! Terms are joined by `+`/`-`; a term is `[coeff *] var (^ exp)? (* var
//! (^ exp)?)*` or a bare coefficient; a coefficient is `int` or `int/int`;
//! variables are `x1`, ..., `xn`. Whitespace is insignificant. The formatter
//! in [`crate::polynomial`] emits this grammar, and parsing its output
//! recovers the identical term map.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::monomial::Monomial;
use crate::polynomial::Polynomial;
use crate::rational::Rational;

const MAX_EXPONENT: u32 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("variable x{index} out of range for arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },
    #[error("zero denominator literal")]
    ZeroDenominator,
    #[error("exponent exceeds {MAX_EXPONENT}")]
    ExponentTooLarge,
}

fn err<T>(position: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { position, kind })
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize), // 1-based index as written
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            b'-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            b'*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            b'^' => {
                tokens.push((i, Token::Caret));
                i += 1;
            }
            b'/' => {
                tokens.push((i, Token::Slash));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value: BigInt = text[start..i].parse().expect("digit run");
                tokens.push((start, Token::Int(value)));
            }
            b'x' => {
                let start = i;
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits_start == i {
                    return err(
                        start,
                        ParseErrorKind::Syntax("variable needs an index, e.g. x1".into()),
                    );
                }
                let index: usize = text[digits_start..i].parse().map_err(|_| ParseError {
                    position: start,
                    kind: ParseErrorKind::Syntax("variable index too large".into()),
                })?;
                if index == 0 {
                    return err(
                        start,
                        ParseErrorKind::Syntax("variable indices start at x1".into()),
                    );
                }
                tokens.push((start, Token::Var(index)));
            }
            _ => {
                return err(
                    i,
                    ParseErrorKind::Syntax(format!("unexpected character `{}`", b as char)),
                )
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    end: usize,
    arity: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn advance(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    fn parse_sign(&mut self) -> Option<i32> {
        match self.peek() {
            Some(Token::Plus) => {
                self.advance();
                Some(1)
            }
            Some(Token::Minus) => {
                self.advance();
                Some(-1)
            }
            _ => None,
        }
    }

    fn parse_exponent(&mut self) -> Result<u32, ParseError> {
        let pos = self.position();
        match self.advance() {
            Some(Token::Int(n)) => {
                let exp: u32 = n
                    .try_into()
                    .map_err(|_| ParseError {
                        position: pos,
                        kind: ParseErrorKind::ExponentTooLarge,
                    })?;
                if exp > MAX_EXPONENT {
                    return err(pos, ParseErrorKind::ExponentTooLarge);
                }
                Ok(exp)
            }
            _ => err(pos, ParseErrorKind::Syntax("expected exponent".into())),
        }
    }

    fn parse_var_power(&mut self, exps: &mut [u32]) -> Result<(), ParseError> {
        let pos = self.position();
        match self.advance() {
            Some(Token::Var(index)) => {
                let index = *index;
                if index > self.arity {
                    return err(
                        pos,
                        ParseErrorKind::VariableOutOfRange {
                            index,
                            arity: self.arity,
                        },
                    );
                }
                let exp = if self.peek() == Some(&Token::Caret) {
                    self.advance();
                    self.parse_exponent()?
                } else {
                    1
                };
                exps[index - 1] = exps[index - 1].saturating_add(exp);
                Ok(())
            }
            _ => err(pos, ParseErrorKind::Syntax("expected variable".into())),
        }
    }

    /// Parses one term and returns (monomial, unsigned coefficient).
    fn parse_term(&mut self) -> Result<(Monomial, Rational), ParseError> {
        let mut exps = vec![0u32; self.arity];
        let coeff = match self.peek() {
            Some(Token::Int(_)) => {
                let numer = match self.advance() {
                    Some(Token::Int(n)) => n.clone(),
                    _ => unreachable!(),
                };
                let denom = if self.peek() == Some(&Token::Slash) {
                    self.advance();
                    let pos = self.position();
                    match self.advance() {
                        Some(Token::Int(d)) => {
                            if d.is_zero() {
                                return err(pos, ParseErrorKind::ZeroDenominator);
                            }
                            d.clone()
                        }
                        _ => {
                            return err(
                                pos,
                                ParseErrorKind::Syntax("expected denominator".into()),
                            )
                        }
                    }
                } else {
                    BigInt::from(1)
                };
                let coeff = Rational::new(numer, denom);
                if self.peek() == Some(&Token::Star) {
                    self.advance();
                    self.parse_var_power(&mut exps)?;
                } else {
                    // bare constant term
                    return Ok((Monomial::new(exps), coeff));
                }
                coeff
            }
            Some(Token::Var(_)) => {
                self.parse_var_power(&mut exps)?;
                Rational::from_integer(BigInt::from(1))
            }
            _ => {
                return err(
                    self.position(),
                    ParseErrorKind::Syntax("expected a term".into()),
                )
            }
        };
        while self.peek() == Some(&Token::Star) {
            self.advance();
            self.parse_var_power(&mut exps)?;
        }
        Ok((Monomial::new(exps), coeff))
    }
}

/// Parses a polynomial in the term grammar above, in `arity` variables.
pub fn parse_polynomial(text: &str, arity: usize) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        end: text.len(),
        arity,
    };
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    let mut sign = parser.parse_sign().unwrap_or(1);
    if parser.peek().is_none() {
        return err(
            parser.position(),
            ParseErrorKind::Syntax("empty polynomial".into()),
        );
    }
    loop {
        let (monomial, coeff) = parser.parse_term()?;
        let signed = if sign < 0 { -coeff } else { coeff };
        terms.push((monomial, signed));
        match parser.parse_sign() {
            Some(s) => sign = s,
            None => {
                if parser.peek().is_some() {
                    return err(
                        parser.position(),
                        ParseErrorKind::Syntax("expected `+` or `-`".into()),
                    );
                }
                break;
            }
        }
    }
    Ok(Polynomial::from_terms(arity, terms))
}

/// Largest variable index (1-based) mentioned in `text`, if any.
/// Used to infer the ambient arity of an ideal file.
pub fn max_variable_index(text: &str) -> Result<Option<usize>, ParseError> {
    let tokens = tokenize(text)?;
    Ok(tokens
        .iter()
        .filter_map(|(_, t)| match t {
            Token::Var(i) => Some(*i),
            _ => None,
        })
        .max())
}
