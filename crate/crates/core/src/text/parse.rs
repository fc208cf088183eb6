use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::monomial::{MonoKey, Monomial};
use crate::signature::{AlgebraSignature, Var};
use crate::Rational;

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.location(self.pos);
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a digit"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn signed_integer(&mut self) -> Result<BigInt> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let v = self.digits()?;
        Ok(if negative { -v } else { v })
    }

    fn small(&mut self, v: BigInt, what: &str) -> Result<i64> {
        i64::try_from(v).map_err(|_| self.error(format!("{} out of range", what)))
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = self.digits()?;
        if self.eat('/') {
            let den = self.digits()?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn index(&mut self) -> Result<usize> {
        let v = self.digits()?;
        let v = self.small(v, "index")?;
        if v < 1 {
            return Err(self.error("indices start at 1"));
        }
        Ok(v as usize - 1)
    }

    fn var(&mut self) -> Result<Var> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(Var::x(self.index()?))
            }
            Some('y') => {
                self.pos += 1;
                Ok(Var::y(self.index()?))
            }
            _ => Err(self.error("expected a variable x<k> or y<k>")),
        }
    }

    /// `e^{[integer "*"] var ["^" power]}`, after the `e`.
    fn exp_factor(&mut self, key: &mut MonoKey) -> Result<()> {
        self.expect('^')?;
        self.expect('{')?;
        let coeff = match self.peek() {
            Some('x') | Some('y') => 1,
            Some('-') if matches!(self.chars.get(self.pos + 1), Some('x') | Some('y')) => {
                self.pos += 1;
                -1
            }
            _ => {
                let v = self.signed_integer()?;
                let v = self.small(v, "exponential coefficient")?;
                self.expect('*')?;
                v
            }
        };
        let var = self.var()?;
        let power = if self.eat('^') {
            let p = self.digits()?;
            let p = self.small(p, "exponential power")?;
            if p < 1 {
                return Err(self.error("exponential powers must be positive"));
            }
            p as u32
        } else {
            1
        };
        self.expect('}')?;
        key.exp.add(crate::signature::ExpSlot { var, power }, coeff);
        Ok(())
    }

    fn factor(&mut self, key: &mut MonoKey) -> Result<()> {
        match self.peek() {
            Some('e') => {
                self.pos += 1;
                self.exp_factor(key)
            }
            Some('x') | Some('y') => {
                let var = self.var()?;
                let power = if self.eat('^') {
                    let p = self.signed_integer()?;
                    self.small(p, "power")?
                } else {
                    1
                };
                key.poly.add(var, power);
                Ok(())
            }
            _ => Err(self.error("expected a factor")),
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some('e') | Some('x') | Some('y'))
    }

    /// One term without its leading sign.
    fn term(&mut self) -> Result<Monomial> {
        let mut key = MonoKey::one();
        let mut coeff = Rational::one();
        let mut seen = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.rational()?;
            seen = true;
            if self.eat('*') && !self.starts_factor() && self.peek() != Some('D') {
                return Err(self.error("expected a factor after '*'"));
            }
        }
        if self.starts_factor() {
            self.factor(&mut key)?;
            seen = true;
            while self.eat('*') {
                if self.peek() == Some('D') {
                    break;
                }
                self.factor(&mut key)?;
            }
        }
        if self.eat('D') {
            key.deriv = Some(self.index()? as u16);
            seen = true;
        }
        if !seen {
            return Err(self.error("expected a term"));
        }
        Ok(Monomial::new(coeff, key))
    }
}

/// Parse an element of `sig` from its text form.
pub fn parse_element(src: &str, sig: Arc<AlgebraSignature>) -> Result<Element> {
    let mut cur = Cursor::new(src);
    if cur.at_end() {
        return Err(cur.error("empty input"));
    }
    let mut raw = Vec::new();
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let mut m = cur.term()?;
        if negative {
            m.coeff = -m.coeff;
        }
        // A literal zero term is allowed in any algebra.
        if !(m.coeff.is_zero() && m.key.is_constant()) {
            raw.push(m);
        }
        if cur.eat('+') {
            negative = false;
        } else if cur.eat('-') {
            negative = true;
        } else if cur.at_end() {
            break;
        } else {
            return Err(cur.error("expected '+', '-' or end of input"));
        }
    }
    Element::normalize(raw, sig)
}
