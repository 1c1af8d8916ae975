//! Text form of [`Scalar`].
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := power (('*' | '/') power)*        divisors must be nonzero constants
//! power  := atom ('^' integer)?
//! atom   := integer | symbol | '(' expr ')'
//! symbol := 'x' | 'q' | 'u' | 'z' | 'a' | 'a' digits | 'a_' digits
//! ```
//!
//! Whitespace is ignored. Printing a [`Scalar`] always yields text this grammar
//! accepts, and parsing it gives back the identical value.

use std::str::FromStr;

use num_bigint::BigInt;

use super::monomial::Var;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// The set of indeterminates a computation has declared.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Universe {
    numerators: usize,
    named: Vec<Var>,
}

impl Universe {
    /// Declares `a_0 .. a_{count-1}`.
    pub fn numerators(count: usize) -> Self {
        Self {
            numerators: count,
            named: Vec::new(),
        }
    }

    pub fn with(mut self, v: Var) -> Self {
        if v.numerator_index().is_none() && !self.named.contains(&v) {
            self.named.push(v);
        }
        self
    }

    pub fn contains(&self, v: Var) -> bool {
        match v.numerator_index() {
            Some(i) => i < self.numerators,
            None => self.named.contains(&v),
        }
    }

    /// Checks that every indeterminate of `s` is declared.
    pub fn check(&self, s: &Scalar) -> Result<()> {
        match s.variables().into_iter().find(|v| !self.contains(*v)) {
            Some(v) => Err(Error::UndeclaredSymbol(v.name())),
            None => Ok(()),
        }
    }
}

impl Scalar {
    /// Parse and reject symbols outside `universe`.
    pub fn parse_in(text: &str, universe: &Universe) -> Result<Scalar> {
        let mut p = Parser::new(text, Some(universe));
        p.parse_all()
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(text: &str) -> Result<Scalar> {
        Parser::new(text, None).parse_all()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    universe: Option<&'a Universe>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, universe: Option<&'a Universe>) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
            universe,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_all(&mut self) -> Result<Scalar> {
        if self.peek().is_none() {
            return self.err("empty expression");
        }
        let value = self.expr()?;
        if self.peek().is_some() {
            return self.err(format!("unexpected `{}`", self.src[self.pos] as char));
        }
        Ok(value)
    }

    fn expr(&mut self) -> Result<Scalar> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc *= &self.power()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let divisor = self.power()?;
                match divisor.as_rational() {
                    Some(c) if c != num_traits::Zero::zero() => acc = acc.scale(&c.recip()),
                    Some(_) => {
                        self.pos = at;
                        return self.err("division by zero");
                    }
                    None => {
                        self.pos = at;
                        return self.err("only constant divisors are allowed");
                    }
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return self.err("expected an exponent");
            }
            let e: u32 = match digits.parse() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits form an integer");
                Ok(Scalar::from_bigint(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let Some(v) = Var::from_name(name) else {
                    self.pos = start;
                    return self.err(format!("unknown symbol `{name}`"));
                };
                if let Some(u) = self.universe {
                    if !u.contains(v) {
                        return Err(Error::UndeclaredSymbol(name.to_string()));
                    }
                }
                Ok(Scalar::var(v))
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}
