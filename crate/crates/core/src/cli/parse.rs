//! Element expressions:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ident ['^' int] | int ['/' int] | 'sqrt' '(' int ')' | '(' expr ')'
//! ```
//!
//! A term may open with a coefficient (`3/2*x`) and a bare coefficient is
//! a constant, so every printed element parses back.

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, NcPoly, Word};
use crate::hopfstruct::HopfPresentation;
use crate::scalars::Scalar;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alpha: &'a Alphabet,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

impl<'a> Parser<'a> {
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn unsigned(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| err(start, "integer out of range"))
    }

    fn signed(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let start = self.pos;
        let v = i64::try_from(self.unsigned()?).map_err(|_| err(start, "integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier")
    }

    fn expr(&mut self) -> Result<NcPoly> {
        let mut neg = self.eat(b'-');
        let mut acc = NcPoly::zero();
        loop {
            let t = self.term()?;
            acc = if neg { acc.sub(&t)? } else { acc.add(&t)? };
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NcPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.free_mul(&f, self.alpha)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NcPoly> {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.unsigned()?;
                let den = if self.eat(b'/') { self.unsigned()? } else { 1 };
                if den == 0 {
                    return Err(err(start, "zero denominator"));
                }
                let big = |v: u64| i64::try_from(v).map_err(|_| err(start, "integer out of range"));
                Ok(NcPoly::constant(Scalar::from_ratio(big(num)?, big(den)?)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.ident();
                if name == "sqrt" && self.alpha.gen_index(name).is_none() {
                    self.expect(b'(')?;
                    let d = self.signed()?;
                    self.expect(b')')?;
                    return Ok(NcPoly::constant(Scalar::sqrt_of(d)?));
                }
                let g = self
                    .alpha
                    .gen_index(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
                let e = if self.eat(b'^') { self.signed()? } else { 1 };
                Ok(NcPoly::word(self.alpha.word(&[(g, e)])?))
            }
            Some(c) => Err(err(self.pos, format!("unexpected '{}'", c as char))),
            None => Err(err(self.pos, "unexpected end of input")),
        }
    }
}

/// Parses `src` in the free algebra on the alphabet, without rewriting.
pub fn parse_free(src: &str, alpha: &Alphabet) -> Result<NcPoly> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        alpha,
    };
    if p.peek().is_none() {
        return Err(err(0, "empty expression"));
    }
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(err(p.pos, format!("unexpected '{}'", c as char)));
    }
    Ok(e)
}

/// Parses and normalizes an element of `h`.
pub fn parse_element(src: &str, h: &HopfPresentation) -> Result<NcPoly> {
    h.nf(&parse_free(src, h.alphabet())?)
}

/// Parses a single monomial with coefficient 1, without rewriting.
pub fn parse_word(src: &str, alpha: &Alphabet) -> Result<Word> {
    let p = parse_free(src, alpha)?;
    match p.leading() {
        Some((w, c)) if p.len() == 1 && c.is_one() => Ok(w.clone()),
        _ => Err(err(0, format!("'{src}' is not a word"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{build, PresetId};

    #[test]
    fn grammar_examples() {
        let f1 = build(&PresetId::F { t: 1 }).unwrap();
        let p = parse_element("x^-1*y*x^2", &f1).unwrap();
        assert_eq!(f1.fmt(&p), "x^-1*y*x^2");
        let p = parse_element("2*y + 3/2*(x - 1)", &f1).unwrap();
        assert_eq!(f1.fmt(&p), "2*y + 3/2*x - 3/2");
        let e1 = build(&PresetId::E { n: 1 }).unwrap();
        assert_eq!(e1.fmt(&parse_element("y^2", &e1).unwrap()), "x0^2 - 1");
    }

    #[test]
    fn extensions() {
        let f1 = build(&PresetId::F { t: 1 }).unwrap();
        assert_eq!(f1.fmt(&parse_element("-y + 7", &f1).unwrap()), "-y + 7");
        let p = parse_element("(1/2 - 3*sqrt(2))*y", &f1).unwrap();
        assert_eq!(parse_element(&f1.fmt(&p), &f1).unwrap(), p);
        assert_eq!(f1.fmt(&parse_element("x - x", &f1).unwrap()), "0");
    }

    #[test]
    fn errors() {
        let f1 = build(&PresetId::F { t: 1 }).unwrap();
        assert!(matches!(
            parse_element("x y", &f1),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(parse_element("x*q", &f1), Err(Error::UnknownGenerator(n)) if n == "q"));
        assert!(matches!(
            parse_element("y^-1", &f1),
            Err(Error::NegativePower(_))
        ));
        assert!(matches!(
            parse_element("", &f1),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_element("(x + 1", &f1),
            Err(Error::Parse { pos: 6, .. })
        ));
        assert!(matches!(
            parse_element("1/0", &f1),
            Err(Error::Parse { .. })
        ));
    }
}
