//! Text grammar for words and elements.
//!
//! Letters: `u`, `U` (adjoint), `s<n>`, `S<n>` (adjoint), `f`, and the
//! shorthand `u^k` for integer `k`. Letters may be juxtaposed or separated
//! by whitespace. An element is `[coeff*]word` terms joined by `+`/`-`;
//! the word `1` (or an empty word after a coefficient) is the unit.

use crate::error::{Error, Result};
use crate::word::{Coeff, Letter};

/// Cap on the `u^k` shorthand, which expands to `|k|` letters.
const MAX_U_POWER: i64 = 1 << 20;

pub fn parse_word(src: &str) -> Result<Vec<Letter>> {
    let mut p = Parser::new(src);
    let w = p.word()?;
    p.skip_ws();
    if !p.done() {
        return Err(p.error("trailing input"));
    }
    Ok(w)
}

/// Parses a linear combination into `(coefficient, word)` terms.
pub fn parse_element(src: &str) -> Result<Vec<(Coeff, Vec<Letter>)>> {
    let mut p = Parser::new(src);
    let mut out = Vec::new();
    p.skip_ws();
    let mut negate = match p.peek() {
        Some('-') => {
            p.bump();
            true
        }
        Some('+') => {
            p.bump();
            false
        }
        _ => false,
    };
    loop {
        let (c, w) = p.term()?;
        out.push((if negate { -c } else { c }, w));
        p.skip_ws();
        match p.peek() {
            None => break,
            Some('+') => negate = false,
            Some('-') => negate = true,
            Some(_) => return Err(p.error("expected `+` or `-`")),
        }
        p.bump();
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn done(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let txt: String = self.chars[start..self.pos].iter().collect();
        txt.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer")
        })
    }

    /// Optional coefficient: digits, `/`, and a trailing `i`.
    fn coefficient(&mut self) -> Result<Option<Coeff>> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '/') {
            self.pos += 1;
        }
        if self.peek() == Some('i') {
            self.pos += 1;
        }
        if self.pos == start {
            return Ok(None);
        }
        let txt: String = self.chars[start..self.pos].iter().collect();
        txt.parse()
            .map(Some)
            .map_err(|e: String| Error::Parse(format!("{e} in `{}`", self.src)))
    }

    fn term(&mut self) -> Result<(Coeff, Vec<Letter>)> {
        self.skip_ws();
        let coeff = self.coefficient()?;
        self.skip_ws();
        let starred = if self.peek() == Some('*') {
            self.bump();
            true
        } else {
            false
        };
        let word = self.word()?;
        match coeff {
            // a bare `1` is the unit word
            Some(c) => Ok((c, word)),
            None if starred => Err(self.error("`*` without a coefficient")),
            None if word.is_empty() => Err(self.error("empty term")),
            None => Ok((Coeff::int(1), word)),
        }
    }

    fn word(&mut self) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some('u') | Some('U') => {
                    let adj = self.bump() == Some('U');
                    if self.peek() == Some('^') {
                        self.bump();
                        let k = self.integer()?;
                        if k.abs() > MAX_U_POWER {
                            return Err(self.error("u-power too large"));
                        }
                        let k = if adj { -k } else { k };
                        let l = if k >= 0 { Letter::U } else { Letter::UAdj };
                        out.extend(std::iter::repeat_n(l, k.unsigned_abs() as usize));
                    } else {
                        out.push(if adj { Letter::UAdj } else { Letter::U });
                    }
                }
                Some('s') | Some('S') => {
                    let adj = self.bump() == Some('S');
                    self.skip_ws();
                    let n = self.integer()?;
                    out.push(if adj { Letter::SAdj(n) } else { Letter::S(n) });
                }
                Some('f') => {
                    self.bump();
                    out.push(Letter::F);
                }
                Some('1') if out.is_empty() => {
                    self.bump();
                }
                _ => return Ok(out),
            }
        }
    }
}
