//! Expression syntax.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := product ['(x)' product]
//! product := factor ('*' factor)*
//! factor  := rational | atom | '(' expr ')' | '-' factor
//! ```
//!
//! A rational `r` stands for `r·1`, so `2/3*ab` is the algebra product of
//! `2/3·1` and `ab`. `(x)` is always the tensor sign. Atoms are runs of
//! letters, digits and `^` starting with a letter, or a bracketed matrix
//! `[[...],[...]]`; their meaning is fixed by the algebra.

use std::fmt;

use hopfcalc_core::linalg::{lc_tensor, LinComb, Tensor};
use hopfcalc_core::scalar::Rational;
use hopfcalc_core::Error;
use num_traits::One;

use crate::surface::Surface;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.position, self.message)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ExprError {
    #[error("{0}")]
    Parse(ParseError),
    #[error(transparent)]
    Kernel(#[from] Error),
}

impl ExprError {
    pub fn at(position: usize, message: impl Into<String>) -> Self {
        ExprError::Parse(ParseError {
            position,
            message: message.into(),
        })
    }
}

/// A parsed expression: an element of `A` or of `A ⊗ A`.
#[derive(Clone, Debug, PartialEq)]
pub enum Value<B: Ord> {
    Element(LinComb<B>),
    Tensor(LinComb<Tensor<B, B>>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Atom(String),
    Plus,
    Minus,
    Star,
    Open,
    Close,
    Otimes,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            ')' => Some(Tok::Close),
            '⊗' => Some(Tok::Otimes),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((pos, t));
            i += 1;
            continue;
        }
        if c == '(' {
            if src[pos..].starts_with("(x)") {
                out.push((pos, Tok::Otimes));
                i += 3;
            } else {
                out.push((pos, Tok::Open));
                i += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let mut text: String = chars[start..i].iter().map(|p| p.1).collect();
            if i < chars.len() && chars[i].1 == '/' {
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    return Err(ExprError::at(chars[dstart - 1].0, "expected a denominator"));
                }
                text.push('/');
                text.extend(chars[dstart..i].iter().map(|p| p.1));
            }
            let r: Rational = parse_rational(&text).ok_or_else(|| ExprError::at(pos, "zero denominator"))?;
            out.push((pos, Tok::Num(r)));
            continue;
        }
        if c == '[' {
            let start = i;
            let mut depth = 0i32;
            while i < chars.len() {
                match chars[i].1 {
                    '[' => depth += 1,
                    ']' => depth -= 1,
                    _ => {}
                }
                i += 1;
                if depth == 0 {
                    break;
                }
            }
            if depth != 0 {
                return Err(ExprError::at(pos, "unbalanced brackets"));
            }
            out.push((pos, Tok::Atom(chars[start..i].iter().map(|p| p.1).collect())));
            continue;
        }
        if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '^') {
                i += 1;
            }
            out.push((pos, Tok::Atom(chars[start..i].iter().map(|p| p.1).collect())));
            continue;
        }
        return Err(ExprError::at(pos, format!("unexpected character '{c}'")));
    }
    Ok(out)
}

/// Parses `n` or `n/d`; `None` on a zero denominator.
pub fn parse_rational(text: &str) -> Option<Rational> {
    text.parse().ok()
}

struct Parser<'a, A: Surface> {
    alg: &'a A,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl<'a, A: Surface> Parser<'a, A> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn expr(&mut self) -> Result<Value<A::Basis>, ExprError> {
        let mut acc = self.term()?;
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => Rational::one(),
                Some(Tok::Minus) => -Rational::one(),
                _ => return Ok(acc),
            };
            let pos = self.pos();
            self.at += 1;
            let rhs = self.term()?;
            acc = match (acc, rhs) {
                (Value::Element(mut x), Value::Element(y)) => {
                    x.add_scaled(&sign, &y);
                    Value::Element(x)
                }
                (Value::Tensor(mut x), Value::Tensor(y)) => {
                    x.add_scaled(&sign, &y);
                    Value::Tensor(x)
                }
                // 0 belongs to both spaces
                (Value::Element(x), Value::Tensor(y)) if x.is_zero() => Value::Tensor(y.scale(&sign)),
                (Value::Element(x), Value::Tensor(y)) if y.is_zero() => Value::Element(x),
                (Value::Tensor(x), Value::Element(y)) if y.is_zero() => Value::Tensor(x),
                (Value::Tensor(x), Value::Element(y)) if x.is_zero() => Value::Element(y.scale(&sign)),
                _ => return Err(ExprError::at(pos, "cannot add an element of A to one of A (x) A")),
            };
        }
    }

    fn term(&mut self) -> Result<Value<A::Basis>, ExprError> {
        let left = self.product()?;
        if self.peek() != Some(&Tok::Otimes) {
            return Ok(left);
        }
        let pos = self.pos();
        self.at += 1;
        let right = self.product()?;
        match (left, right) {
            (Value::Element(x), Value::Element(y)) => Ok(Value::Tensor(lc_tensor(&x, &y))),
            _ => Err(ExprError::at(pos, "only two tensor factors are supported")),
        }
    }

    fn product(&mut self) -> Result<Value<A::Basis>, ExprError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            let pos = self.pos();
            self.at += 1;
            let rhs = self.factor()?;
            acc = self.multiply(acc, rhs, pos)?;
        }
        Ok(acc)
    }

    fn scalar_of(&self, x: &LinComb<A::Basis>) -> Option<Rational> {
        let unit = self.alg.unit();
        x.support().all(|b| *b == unit).then(|| x.coeff(&unit))
    }

    fn multiply(
        &self,
        x: Value<A::Basis>,
        y: Value<A::Basis>,
        pos: usize,
    ) -> Result<Value<A::Basis>, ExprError> {
        Ok(match (x, y) {
            (Value::Element(x), Value::Element(y)) => Value::Element(self.alg.product(&x, &y)),
            (Value::Tensor(x), Value::Tensor(y)) => Value::Tensor(self.alg.tensor_product(&x, &y)),
            (Value::Element(s), Value::Tensor(t)) | (Value::Tensor(t), Value::Element(s)) => {
                match self.scalar_of(&s) {
                    Some(c) => Value::Tensor(t.scale(&c)),
                    None => return Err(ExprError::at(pos, "cannot multiply an element of A by one of A (x) A")),
                }
            }
        })
    }

    fn factor(&mut self) -> Result<Value<A::Basis>, ExprError> {
        let pos = self.pos();
        let tok = self
            .toks
            .get(self.at)
            .map(|t| t.1.clone())
            .ok_or_else(|| ExprError::at(pos, "unexpected end of input"))?;
        self.at += 1;
        match tok {
            Tok::Num(r) => Ok(Value::Element(LinComb::term(self.alg.unit(), r))),
            Tok::Atom(text) => Ok(Value::Element(LinComb::basis(self.alg.parse_atom(&text, pos)?))),
            Tok::Minus => Ok(match self.factor()? {
                Value::Element(x) => Value::Element(-x),
                Value::Tensor(x) => Value::Tensor(-x),
            }),
            Tok::Open => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(ExprError::at(self.pos(), "expected ')'"));
                }
                self.at += 1;
                Ok(inner)
            }
            other => Err(ExprError::at(pos, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Num(_) => "number",
        Tok::Atom(_) => "atom",
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Open => "'('",
        Tok::Close => "')'",
        Tok::Otimes => "'(x)'",
    }
}

/// Parses an element of `A` or `A ⊗ A`.
pub fn parse_value<A: Surface>(alg: &A, src: &str) -> Result<Value<A::Basis>, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        alg,
        toks,
        at: 0,
        end: src.len(),
    };
    let v = p.expr()?;
    if p.at < p.toks.len() {
        let (pos, t) = &p.toks[p.at];
        return Err(ExprError::at(*pos, format!("unexpected {}", describe(t))));
    }
    Ok(v)
}

/// Parses an element of `A`.
pub fn parse_expr<A: Surface>(alg: &A, src: &str) -> Result<LinComb<A::Basis>, ExprError> {
    match parse_value(alg, src)? {
        Value::Element(x) => Ok(x),
        Value::Tensor(x) if x.is_zero() => Ok(LinComb::zero()),
        Value::Tensor(_) => Err(ExprError::at(0, "expected an element, found a tensor")),
    }
}

/// Parses an element of `A ⊗ A`.
pub fn parse_tensor<A: Surface>(
    alg: &A,
    src: &str,
) -> Result<LinComb<Tensor<A::Basis, A::Basis>>, ExprError> {
    match parse_value(alg, src)? {
        Value::Tensor(x) => Ok(x),
        Value::Element(x) if x.is_zero() => Ok(LinComb::zero()),
        Value::Element(_) => Err(ExprError::at(0, "expected a tensor, found an element")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfcalc_core::bases::Alphabet;
    use hopfcalc_core::hopf::FreeConcatUnshuffle;
    use hopfcalc_core::scalar::int;

    fn free() -> FreeConcatUnshuffle {
        FreeConcatUnshuffle::new(Alphabet::new("abc".chars()), int(0))
    }

    fn show(src: &str) -> String {
        match parse_value(&free(), src).unwrap() {
            Value::Element(x) => x.to_string(),
            Value::Tensor(x) => x.to_string(),
        }
    }

    #[test]
    fn precedence() {
        assert_eq!(show("a + b*c"), "a + bc");
        assert_eq!(show("(a + b)*c"), "ac + bc");
        assert_eq!(show("-a - -b"), "-a + b");
        assert_eq!(show("2/4*ab"), "1/2*ab");
        assert_eq!(show("a*b (x) c + 1 (x) 1"), "1 (x) 1 + ab (x) c");
        assert_eq!(show("2*(a (x) b)*(b (x) a)"), "2*ab (x) ba");
        assert_eq!(show("a ⊗ b"), "a (x) b");
        assert_eq!(show("0 + a (x) b"), "a (x) b");
    }

    #[test]
    fn errors_carry_positions() {
        let err = |src: &str| match parse_value(&free(), src) {
            Err(ExprError::Parse(p)) => p.position,
            other => panic!("{src}: {other:?}"),
        };
        assert_eq!(err("a + "), 4);
        assert_eq!(err("a (x) b + c"), 8);
        assert_eq!(err("(a + b"), 6);
        assert_eq!(err("a $"), 2);
        assert_eq!(err("1/"), 1);
        assert!(matches!(parse_value(&free(), "abd"), Err(ExprError::Kernel(Error::UnknownLetter('d')))));
    }
}
