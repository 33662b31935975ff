//! Text grammar for elements.
//!
//! ```text
//! sum     := product ('+' product)*
//! product := power ('*' power)*
//! power   := atom ('^' integer)?
//! atom    := 'a' | 's' | 't' integer | 'x' integer | '0' | '1' | '(' sum ')'
//! ```
//!
//! `s` is `σ⁻¹`, `t<i>` is `τᵢ`, `x<j>` is `ξⱼ`. Whitespace between tokens is
//! ignored. Columns in errors are 1-based character positions.

use crate::coefficients::CoeffMonomial;
use crate::error::{Error, Result};
use crate::steenrod::algebra::DualSteenrod;
use crate::steenrod::element::{Element, Term};
use crate::steenrod::monomial::GenMonomial;

/// Largest accepted exponent of a single `ξ` after any product.
const XI_EXP_LIMIT: u64 = u16::MAX as u64 - 64;
const COEFF_EXP_LIMIT: u64 = (u32::MAX / 2) as u64;

pub struct ExprParser<'a> {
    src: &'a str,
    pos: usize,
    alg: &'a DualSteenrod,
}

#[derive(Default, Clone, Copy)]
struct ExpBudget {
    xi: u64,
    coeff: u64,
}

fn budget(x: &Element) -> ExpBudget {
    let mut b = ExpBudget::default();
    for t in x.terms() {
        b.coeff = b.coeff.max(t.coeff.i as u64).max(t.coeff.j as u64);
        for (_, n) in t.mono.xi_exps() {
            b.xi = b.xi.max(n as u64);
        }
        // each τ may turn into one more ξ factor and one more coefficient under squaring
        b.xi += t.mono.tau_mask().count_ones() as u64;
        b.coeff += t.mono.tau_mask().count_ones() as u64;
    }
    b
}

impl<'a> ExprParser<'a> {
    pub fn new(alg: &'a DualSteenrod, src: &'a str) -> Self {
        ExprParser { src, pos: 0, alg }
    }

    /// 1-based column of a byte offset.
    pub fn column_of(&self, byte: usize) -> usize {
        self.src[..byte.min(self.src.len())].chars().count() + 1
    }

    pub fn column(&self) -> usize {
        self.column_of(self.pos)
    }

    pub fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            column: self.column(),
            message: message.into(),
        })
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    pub fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    pub fn expect(&mut self, ch: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == ch => {
                self.bump();
                Ok(())
            }
            Some(c) => self.error(format!("expected '{ch}', found '{c}'")),
            None => self.error(format!("expected '{ch}', found end of input")),
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Reads a decimal integer; returns it with its starting column.
    fn integer(&mut self, what: &str) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        let col = self.column();
        let digits: String = self.src[self.pos..]
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .collect();
        if digits.is_empty() {
            return self.error(format!("expected {what}"));
        }
        self.pos += digits.len();
        match digits.parse::<u64>() {
            Ok(n) => Ok((n, col)),
            Err(_) => Err(Error::ExponentOverflow {
                column: self.column_of(start),
            }),
        }
    }

    pub fn parse_sum(&mut self) -> Result<Element> {
        let mut acc = self.parse_product()?;
        while self.peek() == Some('+') {
            self.bump();
            let rhs = self.parse_product()?;
            acc = &acc + &rhs;
        }
        Ok(acc)
    }

    fn parse_product(&mut self) -> Result<Element> {
        let start = self.column();
        let mut acc = self.parse_power()?;
        while self.peek() == Some('*') {
            self.bump();
            let rhs = self.parse_power()?;
            let (x, y) = (budget(&acc), budget(&rhs));
            if x.xi + y.xi > XI_EXP_LIMIT || x.coeff + y.coeff > COEFF_EXP_LIMIT {
                return Err(Error::ExponentOverflow { column: start });
            }
            acc = self.alg.multiply(&acc, &rhs);
        }
        Ok(acc)
    }

    fn parse_power(&mut self) -> Result<Element> {
        let base = self.parse_atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let (n, col) = self.integer("an exponent")?;
        let b = budget(&base);
        let too_big = |limit: u64, per: u64| per > 0 && n > limit / per;
        if n > u32::MAX as u64 || too_big(XI_EXP_LIMIT, b.xi) || too_big(COEFF_EXP_LIMIT, b.coeff) {
            return Err(Error::ExponentOverflow { column: col });
        }
        Ok(self.alg.pow(&base, n))
    }

    fn parse_atom(&mut self) -> Result<Element> {
        let Some(c) = self.peek() else {
            return self.error("unexpected end of input");
        };
        match c {
            'a' => {
                self.bump();
                Ok(Element::coeff(CoeffMonomial::A))
            }
            's' => {
                self.bump();
                Ok(Element::coeff(CoeffMonomial::S))
            }
            '0' => {
                self.bump();
                Ok(Element::zero())
            }
            '1' => {
                self.bump();
                Ok(Element::one())
            }
            't' => {
                self.bump();
                let (i, _) = self.integer("a tau index")?;
                let i = self.generator_index(i)?;
                Ok(Element::from_mono(GenMonomial::tau(i)))
            }
            'x' => {
                self.bump();
                let (j, col) = self.integer("a xi index")?;
                if j == 0 {
                    return Err(Error::Syntax {
                        column: col,
                        message: "xi indices start at 1".into(),
                    });
                }
                let j = self.generator_index(j)?;
                Ok(Element::from_mono(GenMonomial::xi(j, 1)))
            }
            '(' => {
                self.bump();
                let x = self.parse_sum()?;
                self.expect(')')?;
                Ok(x)
            }
            other => self.error(format!("unexpected '{other}'")),
        }
    }

    fn generator_index(&self, i: u64) -> Result<usize> {
        let i = usize::try_from(i).unwrap_or(usize::MAX);
        self.alg.check_index(i)?;
        Ok(i)
    }
}

impl DualSteenrod {
    /// Parses and reduces an element.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let mut p = ExprParser::new(self, text);
        if p.at_end() {
            return p.error("empty expression");
        }
        let x = p.parse_sum()?;
        if !p.at_end() {
            let c = p.peek().unwrap();
            return p.error(format!("unexpected '{c}'"));
        }
        Ok(x)
    }

    /// Parses a single coefficient-free basis monomial such as `t0*x1^2`.
    pub fn parse_monomial(&self, text: &str) -> Result<GenMonomial> {
        let x = self.parse_element(text)?;
        match x.terms() {
            [Term { coeff, mono }] if coeff.is_one() => Ok(*mono),
            _ => Err(Error::Invalid(format!("{text:?} is not a basis monomial"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> DualSteenrod {
        DualSteenrod::default()
    }

    #[test]
    fn examples() {
        let a = alg();
        assert_eq!(
            a.parse_element("t0^2").unwrap().to_string(),
            "a*t1 + s*x1 + a*t0*x1"
        );
        assert_eq!(a.parse_element("1").unwrap(), Element::one());
        assert_eq!(a.parse_element("x1*x1").unwrap().to_string(), "x1^2");
        assert_eq!(
            a.parse_element(" ( t0 + x1 ) * 0 ").unwrap(),
            Element::zero()
        );
        assert_eq!(a.parse_element("t0 + t0").unwrap(), Element::zero());
        assert_eq!(a.parse_element("a^2*s*t0").unwrap().to_string(), "a^2*s*t0");
    }

    #[test]
    fn errors_carry_columns() {
        let a = alg();
        assert_eq!(
            a.parse_element("t0^^").unwrap_err(),
            Error::Syntax {
                column: 4,
                message: "expected an exponent".into()
            }
        );
        assert!(matches!(
            a.parse_element("t0 + y"),
            Err(Error::Syntax { column: 6, .. })
        ));
        assert!(matches!(
            a.parse_element("x0"),
            Err(Error::Syntax { column: 2, .. })
        ));
        assert!(matches!(
            a.parse_element("(t0"),
            Err(Error::Syntax { column: 4, .. })
        ));
        assert!(matches!(
            a.parse_element(""),
            Err(Error::Syntax { column: 1, .. })
        ));
        assert!(matches!(
            a.parse_element("x1^99999999999999999999999"),
            Err(Error::ExponentOverflow { column: 4 })
        ));
        assert!(matches!(
            a.parse_element("x1^70000"),
            Err(Error::ExponentOverflow { .. })
        ));
        assert!(matches!(
            a.parse_element("t17"),
            Err(Error::BoundExceeded {
                index: 17,
                bound: 16
            })
        ));
    }

    #[test]
    fn print_parse_roundtrip() {
        let a = alg();
        for s in [
            "a*t1 + s*x1 + a*t0*x1",
            "x2^3*t4 + a^5*s^2",
            "(t1+t2)^3",
            "s*(t0+x1)^4 + a*x3",
        ] {
            let x = a.parse_element(s).unwrap();
            assert_eq!(a.parse_element(&x.to_string()).unwrap(), x);
        }
    }
}
