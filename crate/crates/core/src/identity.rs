//! Parses and checks printed identities such as
//! `3·(99^5 + 45^5) = 17·(1890^3 + (-594)^3)`.
//!
//! Grammar: `+ - * / ^`, parentheses, unary minus, integers; `·`, `×` and
//! `−` are accepted as `*` and `-`. Exponents must be non-negative integers.

use thiserror::Error;

use num_bigint::BigInt;

use crate::arith::Rational;

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("expected exactly one '=' in {0:?}")]
    NotAnIdentity(String),
    #[error("unexpected {found} at offset {offset}")]
    Unexpected { found: String, offset: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent must be an integer in 0..={MAX_EXPONENT}")]
    BadExponent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Num(BigInt),
    Op(char),
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>, IdentityError> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                out.push((i, Token::Num(s[i..end].parse().expect("digits"))));
            }
            '+' | '*' | '/' | '^' => {
                out.push((i, Token::Op(c)));
                chars.next();
            }
            '-' | '−' => {
                out.push((i, Token::Op('-')));
                chars.next();
            }
            '·' | '×' => {
                out.push((i, Token::Op('*')));
                chars.next();
            }
            '(' => {
                out.push((i, Token::Open));
                chars.next();
            }
            ')' => {
                out.push((i, Token::Close));
                chars.next();
            }
            other => return Err(IdentityError::Unexpected { found: format!("{other:?}"), offset: i }),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn unexpected(&self) -> IdentityError {
        match self.tokens.get(self.pos) {
            Some((offset, t)) => IdentityError::Unexpected { found: format!("{t:?}"), offset: *offset },
            None => IdentityError::Unexpected { found: "end of input".into(), offset: self.len },
        }
    }

    fn eat_op(&mut self, ops: &[char]) -> Option<char> {
        match self.peek() {
            Some(Token::Op(c)) if ops.contains(c) => {
                let c = *c;
                self.pos += 1;
                Some(c)
            }
            _ => None,
        }
    }

    // sum := product (('+' | '-') product)*
    fn sum(&mut self) -> Result<Rational, IdentityError> {
        let mut acc = self.product()?;
        while let Some(op) = self.eat_op(&['+', '-']) {
            let rhs = self.product()?;
            acc = if op == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    // product := unary (('*' | '/') unary)*
    fn product(&mut self) -> Result<Rational, IdentityError> {
        let mut acc = self.unary()?;
        while let Some(op) = self.eat_op(&['*', '/']) {
            let rhs = self.unary()?;
            acc = if op == '*' {
                acc * rhs
            } else {
                acc * rhs.recip().ok_or(IdentityError::DivisionByZero)?
            };
        }
        Ok(acc)
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<Rational, IdentityError> {
        if self.eat_op(&['-']).is_some() {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    // power := atom ('^' exponent)?   with -x^n = -(x^n)
    fn power(&mut self) -> Result<Rational, IdentityError> {
        let base = self.atom()?;
        if self.eat_op(&['^']).is_none() {
            return Ok(base);
        }
        let exp = match self.tokens.get(self.pos) {
            Some((_, Token::Num(n))) => u32::try_from(n).ok().filter(|&e| e <= MAX_EXPONENT),
            _ => return Err(self.unexpected()),
        }
        .ok_or(IdentityError::BadExponent)?;
        self.pos += 1;
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> Result<Rational, IdentityError> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(Rational::from(n))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let v = self.sum()?;
                match self.peek() {
                    Some(Token::Close) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => Err(self.unexpected()),
                }
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Exact value of an arithmetic expression.
pub fn evaluate(expr: &str) -> Result<Rational, IdentityError> {
    let mut p = Parser { tokens: tokenize(expr)?, pos: 0, len: expr.len() };
    let v = p.sum()?;
    if p.pos != p.tokens.len() {
        return Err(p.unexpected());
    }
    Ok(v)
}

/// Both sides of `lhs = rhs`, evaluated exactly.
pub fn evaluate_identity(line: &str) -> Result<(Rational, Rational), IdentityError> {
    let (lhs, rhs) = line
        .split_once('=')
        .filter(|(_, r)| !r.contains('='))
        .ok_or_else(|| IdentityError::NotAnIdentity(line.to_string()))?;
    Ok((evaluate(lhs)?, evaluate(rhs)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        assert_eq!(evaluate("1 + 2 * 3").unwrap(), Rational::from(7));
        assert!(evaluate("2^3^1").is_err());
        assert_eq!(evaluate("-2^2").unwrap(), Rational::from(-4));
        assert_eq!(evaluate("(-2)^3").unwrap(), Rational::from(-8));
        assert_eq!(evaluate("3/6 − 1").unwrap(), Rational::ratio(-1, 2));
        assert_eq!(evaluate("3·(4 + 5)").unwrap(), Rational::from(27));
        assert_eq!(evaluate("(-3/2)·(4^3 + 5^3)").unwrap(), Rational::ratio(-567, 2));
    }

    #[test]
    fn identities() {
        let (l, r) = evaluate_identity("8^5 + 6^5 + 14^5 = (-110)^3 + 124^3 + 14^3").unwrap();
        assert_eq!(l, r);
        assert_eq!(l, Rational::from(578_368));
        let (l, r) = evaluate_identity("8^5 + 6^5 + 14^5 = (-110)^3 + 124^3 + 15^3").unwrap();
        assert_ne!(l, r);
    }

    #[test]
    fn errors() {
        assert!(matches!(evaluate_identity("1 + 1"), Err(IdentityError::NotAnIdentity(_))));
        assert!(matches!(evaluate_identity("1 = 1 = 1"), Err(IdentityError::NotAnIdentity(_))));
        assert_eq!(evaluate("1/0"), Err(IdentityError::DivisionByZero));
        assert_eq!(evaluate("2^99999"), Err(IdentityError::BadExponent));
        assert!(matches!(evaluate("(1 + 2"), Err(IdentityError::Unexpected { .. })));
        assert!(matches!(evaluate("1 x 2"), Err(IdentityError::Unexpected { .. })));
        assert!(matches!(evaluate(""), Err(IdentityError::Unexpected { .. })));
    }
}
