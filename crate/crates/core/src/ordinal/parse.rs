use super::{normalize, Ordinal};
use crate::error::ParseError;

/// Nesting limit used by [`parse`].
pub const DEFAULT_PARSE_DEPTH: usize = 64;

/// Parses `ordinal := term ('+' term)*` with
/// `term := 'w' ('^' atom)? ('*' nat)? | nat` and
/// `atom := nat | 'w' | '(' ordinal ')'`.  Whitespace is ignored between
/// tokens.  The sum is normalized, so `1 + w` parses as `w`.
pub fn parse(input: &str) -> Result<Ordinal, ParseError> {
    parse_with_depth(input, DEFAULT_PARSE_DEPTH)
}

/// As [`parse`], rejecting exponents nested more than `max_depth` deep.
pub fn parse_with_depth(input: &str, max_depth: usize) -> Result<Ordinal, ParseError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
        max_depth,
    };
    let o = p.ordinal(0)?;
    p.skip_ws();
    match p.peek() {
        None => Ok(o),
        Some(c) => Err(p.error(format!("unexpected '{}'", c as char))),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    max_depth: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
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

    fn ordinal(&mut self, depth: usize) -> Result<Ordinal, ParseError> {
        if depth > self.max_depth {
            return Err(self.error(format!("nesting deeper than {}", self.max_depth)));
        }
        let mut raw = vec![self.term(depth)?];
        while self.eat(b'+') {
            raw.push(self.term(depth)?);
        }
        Ok(normalize(raw))
    }

    fn term(&mut self, depth: usize) -> Result<(Ordinal, u64), ParseError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                let exponent = if self.eat(b'^') { self.atom(depth)? } else { Ordinal::nat(1) };
                let coefficient = if self.eat(b'*') { self.nat()? } else { 1 };
                Ok((exponent, coefficient))
            }
            Some(c) if c.is_ascii_digit() => Ok((Ordinal::zero(), self.nat()?)),
            Some(c) => Err(self.error(format!("expected a term, found '{}'", c as char))),
            None => Err(self.error("expected a term, found end of input")),
        }
    }

    fn atom(&mut self, depth: usize) -> Result<Ordinal, ParseError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                Ok(Ordinal::omega())
            }
            Some(b'(') => {
                self.pos += 1;
                let o = self.ordinal(depth + 1)?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(o)
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::nat(self.nat()?)),
            Some(c) => Err(self.error(format!("expected an exponent, found '{}'", c as char))),
            None => Err(self.error("expected an exponent, found end of input")),
        }
    }

    fn nat(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII digits");
        digits.parse().map_err(|_| ParseError::new(start, "number does not fit in 64 bits"))
    }
}
