//! Text grammar for classical elements.
//!
//! ```text
//! sum     := product ('+' product)*
//! product := factor ('*' factor)*
//! factor  := 'X' integer ('^' integer)? | 'S' ('^' '-'? integer)? | '0' | '1'
//! ```
//!
//! `X<j>` is `ξⱼ` and `S` is `σ`.

use std::str::FromStr;

use crate::classical::element::{
    ClassicalElement, ClassicalMonomial, LaurentClassicalElement, LaurentMonomial,
};
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.chars.get(self.pos) == Some(&'-');
        if neg {
            self.pos += 1;
        }
        let digits: String = self.chars[self.pos..]
            .iter()
            .take_while(|c| c.is_ascii_digit())
            .collect();
        if digits.is_empty() {
            return self.err("expected an integer");
        }
        self.pos += digits.len();
        let n: i64 = digits
            .parse()
            .map_err(|_| Error::ExponentOverflow { column: start + 1 })?;
        if n > i64::from(u32::MAX) {
            return Err(Error::ExponentOverflow { column: start + 1 });
        }
        Ok(if neg { -n } else { n })
    }

    fn sum(&mut self) -> Result<LaurentClassicalElement> {
        let mut acc = self.product()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            acc = acc.add(&self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<LaurentClassicalElement> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentClassicalElement> {
        match self.peek() {
            Some('X') => {
                self.pos += 1;
                let col = self.pos;
                let j = self.integer()?;
                if j < 1 {
                    self.pos = col;
                    return self.err("generator index must be at least 1");
                }
                let n = self.exponent(false)?;
                Ok(LaurentClassicalElement::monomial(
                    0,
                    ClassicalMonomial::xi(j as usize, n as u32),
                ))
            }
            Some('S') => {
                self.pos += 1;
                let m = self.exponent(true)?;
                Ok(LaurentClassicalElement::monomial(
                    m,
                    ClassicalMonomial::one(),
                ))
            }
            Some('1') => {
                self.pos += 1;
                Ok(LaurentClassicalElement::one())
            }
            Some('0') => {
                self.pos += 1;
                Ok(LaurentClassicalElement::zero())
            }
            Some(c) => self.err(format!("unexpected {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }

    fn exponent(&mut self, signed: bool) -> Result<i64> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let col = self.pos;
        let n = self.integer()?;
        if n < 0 && !signed {
            self.pos = col;
            return self.err("negative exponent");
        }
        Ok(n)
    }
}

pub fn parse_laurent(src: &str) -> Result<LaurentClassicalElement> {
    let mut p = Parser {
        chars: src.chars().collect(),
        pos: 0,
        src,
    };
    let x = p.sum()?;
    if p.peek().is_some() {
        return p.err(format!("trailing input in {:?}", p.src));
    }
    Ok(x)
}

impl FromStr for LaurentClassicalElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_laurent(s)
    }
}

impl FromStr for ClassicalElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let x = parse_laurent(s)?;
        let mut out = ClassicalElement::zero();
        for LaurentMonomial { sigma, mono } in x.terms() {
            if *sigma != 0 {
                return Err(Error::Invalid(
                    "S is not allowed in a classical element".into(),
                ));
            }
            out.toggle(mono.clone());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for s in ["1", "0", "X1^2*X3 + X2", "S^-3*X1 + S*X2^2 + S^2"] {
            let x: LaurentClassicalElement = s.parse().unwrap();
            assert_eq!(x.to_string().parse::<LaurentClassicalElement>().unwrap(), x);
        }
        let x: LaurentClassicalElement = "X1*X1 + X1^2".parse().unwrap();
        assert!(x.is_zero());
        assert!(matches!(
            "X1^^".parse::<ClassicalElement>(),
            Err(Error::Syntax { column: 4, .. })
        ));
        assert!("S*X1".parse::<ClassicalElement>().is_err());
    }
}
