//! Small cursor used by the textual grammars for polynomials and modules.

use crate::error::{Error, Result};
use crate::qnum::QParam;
use crate::scalar::{self, Scalar};

pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            self.error("unexpected trailing input")
        }
    }

    /// Lowercase identifier made of letters, digits, '-' and '_'.
    pub fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|(_, c)| !(c.is_ascii_alphanumeric() || *c == '_'))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 || !rest.as_bytes()[0].is_ascii_alphabetic() {
            return self.error("expected a name");
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    pub fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && (c == '-' || c == '+'))))
            .map_or(rest.len(), |(i, _)| i);
        match rest[..len].parse() {
            Ok(n) => {
                self.pos += len;
                Ok(n)
            }
            Err(_) => self.error("expected an integer"),
        }
    }

    /// A scalar literal: `p`, `p/d`, `q`, `q^k`, or `c*q^k` with `c` a
    /// rational literal.
    pub fn scalar(&mut self, q: &QParam) -> Result<Scalar> {
        self.skip_ws();
        if self.peek() == Some('q') {
            return self.q_power(q);
        }
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || c == '/' || (i == 0 && (c == '-' || c == '+'))))
            .map_or(rest.len(), |(i, _)| i);
        let start = self.pos;
        let Ok(c) = scalar::parse(&rest[..len]) else {
            return self.error("expected a rational number");
        };
        self.pos += len;
        let save = self.pos;
        if self.eat('*') {
            if self.peek() == Some('q') {
                return Ok(c * self.q_power(q)?);
            }
            self.pos = save;
        }
        debug_assert!(self.pos > start);
        Ok(c)
    }

    fn q_power(&mut self, q: &QParam) -> Result<Scalar> {
        self.expect('q')?;
        if self.eat('^') {
            let k = self.integer()?;
            Ok(q.pow(k))
        } else {
            Ok(q.value().clone())
        }
    }
}
