//! Text syntax for words.
//!
//! Twin words: tokens `s<INT>` and `r<INT>` (virtual generators), the
//! identity token `1`, grouping `( ... )^<INT>`, whitespace separated, e.g.
//! `(s1 s2)^3 s3`. A negative exponent inverts, which for involutions is
//! reversal. Free words: tokens `b<INT>` optionally followed by `^-1` (or
//! any integer exponent).

use crate::error::{Result, TwinError};
use crate::free_aut::{FreeLetter, FreeWord};
use crate::word::{invert, CoxLetter, CoxWord};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src: src.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(TwinError::Parse { pos: self.pos, msg: msg.into() })
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

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn unsigned(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().or_else(|_| self.err("integer too large"))
    }

    fn index(&mut self) -> Result<u8> {
        let v = self.unsigned()?;
        match u8::try_from(v) {
            Ok(i) if i >= 1 => Ok(i),
            _ => self.err(format!("generator index {v} must be in 1..=255")),
        }
    }

    /// Optional `^<INT>` suffix, possibly negative.
    fn exponent(&mut self) -> Result<Option<i64>> {
        if self.peek() != Some(b'^') {
            return Ok(None);
        }
        self.bump();
        self.skip_ws();
        let negative = self.src.get(self.pos) == Some(&b'-');
        if negative {
            self.bump();
        }
        let v = self.unsigned()? as i64;
        Ok(Some(if negative { -v } else { v }))
    }
}

fn power(w: &CoxWord, exp: i64) -> CoxWord {
    if exp >= 0 {
        w.pow(exp as usize)
    } else {
        invert(w).pow(exp.unsigned_abs() as usize)
    }
}

fn parse_sequence(cur: &mut Cursor<'_>, nested: bool) -> Result<CoxWord> {
    let mut out = CoxWord::identity();
    loop {
        let atom = match cur.peek() {
            None if nested => return cur.err("unclosed '('"),
            None => return Ok(out),
            Some(b')') if nested => return Ok(out),
            Some(b')') => return cur.err("unexpected ')'"),
            Some(b'(') => {
                cur.bump();
                let inner = parse_sequence(cur, true)?;
                cur.bump(); // ')'
                inner
            }
            Some(b's') => {
                cur.bump();
                CoxWord::new(vec![CoxLetter::s(cur.index()?)])
            }
            Some(b'r') => {
                cur.bump();
                CoxWord::new(vec![CoxLetter::rho(cur.index()?)])
            }
            Some(b'1') => {
                cur.bump();
                CoxWord::identity()
            }
            Some(c) => return cur.err(format!("unexpected character {:?}", c as char)),
        };
        let atom = match cur.exponent()? {
            Some(e) => power(&atom, e),
            None => atom,
        };
        out = out.concat(&atom);
    }
}

/// Parses a twin-group word such as `(s1 s2)^3 s3` or `r1 s2 r1`.
pub fn parse_word(src: &str) -> Result<CoxWord> {
    let mut cur = Cursor::new(src);
    parse_sequence(&mut cur, false)
}

/// Parses a free-group word such as `b2^-1 b6^-1 b4^-1 b1 b7`.
pub fn parse_free_word(src: &str) -> Result<FreeWord> {
    let mut cur = Cursor::new(src);
    let mut letters = Vec::new();
    while let Some(c) = cur.peek() {
        match c {
            b'b' => {
                cur.bump();
                let index = cur.index()?;
                let exp = cur.exponent()?.unwrap_or(1);
                let sign = if exp < 0 { -1 } else { 1 };
                for _ in 0..exp.unsigned_abs() {
                    letters.push(FreeLetter { index, sign });
                }
            }
            b'1' => cur.bump(),
            other => return cur.err(format!("unexpected character {:?}", other as char)),
        }
    }
    Ok(FreeWord::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grouping_and_powers() {
        let w = parse_word("(s1 s2)^3 s3").unwrap();
        assert_eq!(w, CoxWord::from_indices(&[1, 2, 1, 2, 1, 2, 3]));
        assert_eq!(parse_word("").unwrap(), CoxWord::identity());
        assert_eq!(parse_word("1").unwrap(), CoxWord::identity());
        assert_eq!(parse_word("s1s2").unwrap(), CoxWord::from_indices(&[1, 2]));
        assert_eq!(parse_word("(s1 s2 s3)^-1").unwrap(), CoxWord::from_indices(&[3, 2, 1]));
        assert_eq!(parse_word("((s1)^2 s2)^2").unwrap(), CoxWord::from_indices(&[1, 1, 2, 1, 1, 2]));
    }

    #[test]
    fn parses_virtual_letters() {
        let w = parse_word("r1 s2 r3").unwrap();
        assert_eq!(w.letters(), &[CoxLetter::rho(1), CoxLetter::s(2), CoxLetter::rho(3)]);
    }

    #[test]
    fn display_round_trips() {
        let w = parse_word("s3 (s1 s2)^3 s3 r2").unwrap();
        assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_word("(s1 s2").is_err());
        assert!(parse_word("s1)").is_err());
        assert!(parse_word("x1").is_err());
        assert!(parse_word("s").is_err());
        assert!(parse_word("s0").is_err());
    }

    #[test]
    fn parses_free_words() {
        let w = parse_free_word("b2^-1 b6^-1 b4^-1 b1 b7 b3 b5").unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.letters()[0], FreeLetter { index: 2, sign: -1 });
        assert_eq!(parse_free_word(&w.to_string()).unwrap(), w);
        assert!(parse_free_word("1").unwrap().is_empty());
        assert!(parse_free_word("s1").is_err());
    }
}
