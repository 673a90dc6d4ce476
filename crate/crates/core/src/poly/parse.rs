//! Recursive-descent parser for the curve-expression grammar:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := uint | 'x' | 'y' | 'z' | 'g' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Integer literals are reduced mod p, `g` is the
//! class of `u` in F_p[u]/(modulus) and is rejected when k = 1, and a
//! leading `-` negates the first term. `z` is accepted only for
//! three-variable polynomials. Error positions are 0-based character
//! offsets into the original text.

use thiserror::Error;

use super::sparse::{SparsePoly, VARIABLE_NAMES};
use crate::fields::FqContext;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("'g' at position {position} denotes the extension generator, but k = 1")]
    GeneratorInPrimeField { position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. }
            | ParseError::GeneratorInPrimeField { position } => *position,
        }
    }
}

struct Parser<'a, const N: usize> {
    chars: Vec<char>,
    pos: usize,
    ctx: &'a FqContext,
}

impl<const N: usize> Parser<'_, N> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, ParseError> {
        match self.chars.get(self.pos) {
            Some(c) => self.error(format!("expected {wanted}, found '{c}'")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<SparsePoly<N>, ParseError> {
        let negate = self.peek() == Some('-');
        if negate {
            self.pos += 1;
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SparsePoly<N>, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SparsePoly<N>, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return self.unexpected("an exponent");
            }
            let start = self.pos;
            let digits = self.digits();
            let exp: u32 = digits.parse().map_err(|_| ParseError::Syntax {
                position: start,
                message: format!("exponent {digits} is too large"),
            })?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<SparsePoly<N>, ParseError> {
        let Some(c) = self.peek() else {
            return self.unexpected("a number, variable or '('");
        };
        match c {
            '0'..='9' => {
                let p = self.ctx.p();
                let value = self
                    .digits()
                    .bytes()
                    .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(SparsePoly::constant(self.ctx.from_int(value as i64)))
            }
            'g' => {
                if self.ctx.k() == 1 {
                    return Err(ParseError::GeneratorInPrimeField { position: self.pos });
                }
                self.pos += 1;
                Ok(SparsePoly::constant(self.ctx.generator()))
            }
            '(' => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.unexpected("')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            c => match VARIABLE_NAMES[..N].iter().position(|&v| v == c) {
                Some(var) => {
                    self.pos += 1;
                    Ok(SparsePoly::var(self.ctx, var))
                }
                None => self.unexpected("a number, variable or '('"),
            },
        }
    }
}

fn parse_sparse<const N: usize>(text: &str, ctx: &FqContext) -> Result<SparsePoly<N>, ParseError> {
    let mut parser = Parser::<N> {
        chars: text.chars().collect(),
        pos: 0,
        ctx,
    };
    let poly = parser.expr()?;
    if parser.peek().is_some() {
        return parser.unexpected("an operator or end of input");
    }
    Ok(poly)
}

/// Parses a polynomial in x and y over `ctx`.
pub fn parse_bipoly(text: &str, ctx: &FqContext) -> Result<SparsePoly<2>, ParseError> {
    parse_sparse(text, ctx)
}

/// Parses a polynomial in x, y and z over `ctx`.
pub fn parse_tripoly(text: &str, ctx: &FqContext) -> Result<SparsePoly<3>, ParseError> {
    parse_sparse(text, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BiPoly;

    fn f(p: u64) -> FqContext {
        FqContext::prime(p).unwrap()
    }

    #[test]
    fn curve_over_f3() {
        let c = parse_bipoly("y^2 + 2*x*y + 2*y + x", &f(3)).unwrap();
        assert_eq!(c.num_terms(), 4);
        assert_eq!(c.total_degree(), Some(2));
    }

    #[test]
    fn hyperbola_normalizes_constant() {
        let f5 = f(5);
        let c = parse_bipoly("x*y - 1", &f5).unwrap();
        assert_eq!(c, BiPoly::from_int_terms(&f5, &[([1, 1], 1), ([0, 0], 4)]));
    }

    #[test]
    fn double_caret_is_rejected_at_second_caret() {
        let err = parse_bipoly("x^^2", &f(5)).unwrap_err();
        assert_eq!(err.position(), 2);
    }

    #[test]
    fn leading_minus_and_literal_reduction() {
        let f5 = f(5);
        assert_eq!(
            parse_bipoly("-x", &f5).unwrap(),
            parse_bipoly("4*x", &f5).unwrap()
        );
        assert_eq!(
            parse_bipoly("12*y", &f5).unwrap(),
            parse_bipoly("2*y", &f5).unwrap()
        );
        assert!(parse_bipoly("5", &f5).unwrap().is_zero());
    }

    #[test]
    fn generator_requires_extension() {
        let err = parse_bipoly("x + g", &f(3)).unwrap_err();
        assert_eq!(err, ParseError::GeneratorInPrimeField { position: 4 });
        let f9 = FqContext::new(3, 2, None).unwrap();
        let c = parse_bipoly("g^2*x", &f9).unwrap();
        // g^2 = -1 in F_3[u]/(u^2 + 1)
        assert_eq!(c, BiPoly::from_int_terms(&f9, &[([1, 0], 2)]));
    }

    #[test]
    fn z_only_in_three_variables() {
        assert_eq!(parse_bipoly("x + z", &f(3)).unwrap_err().position(), 4);
        assert!(parse_tripoly("x + z", &f(3)).is_ok());
    }

    #[test]
    fn errors_at_end_of_input() {
        assert_eq!(parse_bipoly("x +", &f(3)).unwrap_err().position(), 3);
        assert_eq!(parse_bipoly("(x", &f(3)).unwrap_err().position(), 2);
        assert_eq!(parse_bipoly("", &f(3)).unwrap_err().position(), 0);
    }
}
