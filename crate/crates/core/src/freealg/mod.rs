//! Words and noncommutative polynomials over a generator alphabet, and
//! rewriting to normal forms.
//!
//! A [`Word`] is stored as a freely reduced sequence of symbols, one
//! symbol per unit of exponent, so `x^2*y*x^-1` is `[x, x, y, x⁻¹]`.
//! Symbols are numbered by precedence, which makes the derived `Ord` on
//! words the word order: weighted degree first, then lexicographic on
//! symbol codes with a proper prefix sorting first.

mod poly;
mod rewrite;

pub(crate) use poly::fmt_terms;
pub use poly::NcPoly;
pub use rewrite::{Algebra, CriticalPairFailure, RewriteRule, DEFAULT_STEP_CAP};

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type Sym = u16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub invertible: bool,
    /// Contribution of each symbol of this generator to the degree used by
    /// the word order.
    pub weight: u32,
}

impl Generator {
    pub fn invertible(name: &str) -> Self {
        Generator {
            name: name.to_string(),
            invertible: true,
            weight: 1,
        }
    }

    pub fn plain(name: &str) -> Self {
        Generator {
            name: name.to_string(),
            invertible: false,
            weight: 1,
        }
    }

    pub fn with_weight(mut self, weight: u32) -> Self {
        self.weight = weight;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct SymInfo {
    gen: usize,
    inverse: bool,
}

/// The generators of a presentation together with the symbol precedence.
#[derive(Clone, Debug)]
pub struct Alphabet {
    gens: Vec<Generator>,
    syms: Vec<SymInfo>,
    codes: Vec<[Option<Sym>; 2]>,
    inverses: Vec<Option<Sym>>,
    weights: Vec<u32>,
    by_name: HashMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    weight: u32,
    syms: Vec<Sym>,
}

impl Word {
    pub fn one() -> Self {
        Word {
            weight: 0,
            syms: Vec::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn syms(&self) -> &[Sym] {
        &self.syms
    }

    /// Number of symbols (sum of absolute exponents).
    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    /// Weighted degree under the alphabet's generator weights.
    pub fn weight(&self) -> u32 {
        self.weight
    }
}

impl Alphabet {
    /// Default precedence: generators in declaration order, each inverse
    /// symbol just below its generator.
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        let mut order = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if g.invertible {
                order.push((i, true));
            }
            order.push((i, false));
        }
        Self::with_precedence(gens, &order)
    }

    /// `order` lists every symbol `(generator index, is_inverse)` from
    /// smallest to largest.
    pub fn with_precedence(gens: Vec<Generator>, order: &[(usize, bool)]) -> Result<Self> {
        let mut by_name = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if !is_identifier(&g.name) {
                return Err(Error::InvalidPresentation(format!(
                    "generator name '{}' is not an identifier",
                    g.name
                )));
            }
            if by_name.insert(g.name.clone(), i).is_some() {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate generator name '{}'",
                    g.name
                )));
            }
        }
        let expected: usize = gens.iter().map(|g| 1 + usize::from(g.invertible)).sum();
        if order.len() != expected {
            return Err(Error::InvalidPresentation(format!(
                "precedence lists {} symbols, alphabet has {expected}",
                order.len()
            )));
        }
        let mut codes = vec![[None, None]; gens.len()];
        let mut syms = Vec::with_capacity(order.len());
        for (code, &(gen, inverse)) in order.iter().enumerate() {
            let g = gens.get(gen).ok_or_else(|| {
                Error::InvalidPresentation(format!("precedence names unknown generator {gen}"))
            })?;
            if inverse && !g.invertible {
                return Err(Error::InvalidPresentation(format!(
                    "precedence lists an inverse of non-invertible '{}'",
                    g.name
                )));
            }
            let slot = &mut codes[gen][usize::from(inverse)];
            if slot.is_some() {
                return Err(Error::InvalidPresentation(
                    "repeated symbol in precedence".into(),
                ));
            }
            *slot = Some(code as Sym);
            syms.push(SymInfo { gen, inverse });
        }
        let inverses = syms
            .iter()
            .map(|s| codes[s.gen][usize::from(!s.inverse)])
            .collect();
        let weights = syms.iter().map(|s| gens[s.gen].weight).collect();
        Ok(Alphabet {
            gens,
            syms,
            codes,
            inverses,
            weights,
            by_name,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn num_symbols(&self) -> usize {
        self.syms.len()
    }

    pub fn symbol(&self, gen: usize, inverse: bool) -> Option<Sym> {
        self.codes.get(gen)?[usize::from(inverse)]
    }

    pub fn sym_gen(&self, s: Sym) -> usize {
        self.syms[s as usize].gen
    }

    pub fn sym_is_inverse(&self, s: Sym) -> bool {
        self.syms[s as usize].inverse
    }

    pub fn sym_inverse(&self, s: Sym) -> Option<Sym> {
        self.inverses[s as usize]
    }

    /// Symbol precedence, smallest first.
    pub fn precedence(&self) -> Vec<(usize, bool)> {
        self.syms.iter().map(|s| (s.gen, s.inverse)).collect()
    }

    /// Freely reduces a raw symbol sequence.
    pub fn word_from_syms(&self, syms: &[Sym]) -> Word {
        let mut w = Word::one();
        self.push_syms(&mut w, syms);
        w
    }

    fn push_syms(&self, w: &mut Word, syms: &[Sym]) {
        for &s in syms {
            match w.syms.last() {
                Some(&last) if self.inverses[last as usize] == Some(s) => {
                    w.syms.pop();
                    w.weight -= self.weights[s as usize];
                }
                _ => {
                    w.syms.push(s);
                    w.weight += self.weights[s as usize];
                }
            }
        }
    }

    /// Builds a word from `(generator, exponent)` letters.
    pub fn word(&self, letters: &[(usize, i64)]) -> Result<Word> {
        let mut w = Word::one();
        for &(gen, exp) in letters {
            let g = &self.gens[gen];
            let sym = self
                .symbol(gen, exp < 0)
                .ok_or_else(|| Error::NegativePower(g.name.clone()))?;
            let run = vec![sym; exp.unsigned_abs() as usize];
            self.push_syms(&mut w, &run);
        }
        Ok(w)
    }

    /// Convenience for named letters; unknown names are an error.
    pub fn word_named(&self, letters: &[(&str, i64)]) -> Result<Word> {
        let resolved = letters
            .iter()
            .map(|&(n, e)| {
                self.gen_index(n)
                    .map(|i| (i, e))
                    .ok_or_else(|| Error::UnknownGenerator(n.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.word(&resolved)
    }

    pub fn generator_word(&self, gen: usize) -> Word {
        self.word(&[(gen, 1)]).expect("positive power")
    }

    /// Product in the free monoid with inverse cancellation.
    pub fn mul(&self, u: &Word, v: &Word) -> Word {
        let mut w = u.clone();
        self.push_syms(&mut w, &v.syms);
        w
    }

    pub fn concat3(&self, a: &[Sym], b: &[Sym], c: &[Sym]) -> Word {
        let mut w = Word {
            weight: 0,
            syms: Vec::with_capacity(a.len() + b.len() + c.len()),
        };
        self.push_syms(&mut w, a);
        self.push_syms(&mut w, b);
        self.push_syms(&mut w, c);
        w
    }

    /// Inverse in the free group; `None` when a symbol is not invertible.
    pub fn inverse_word(&self, w: &Word) -> Option<Word> {
        let syms = w
            .syms
            .iter()
            .rev()
            .map(|&s| self.inverses[s as usize])
            .collect::<Option<Vec<_>>>()?;
        Some(self.word_from_syms(&syms))
    }

    /// `w^e` in the free group (negative `e` needs an invertible word).
    pub fn pow(&self, w: &Word, e: i64) -> Option<Word> {
        let base = if e < 0 {
            self.inverse_word(w)?
        } else {
            w.clone()
        };
        let mut out = Word::one();
        for _ in 0..e.unsigned_abs() {
            self.push_syms(&mut out, &base.syms);
        }
        Some(out)
    }

    /// Run-length form `(generator, exponent)`.
    pub fn letters(&self, w: &Word) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for &s in &w.syms {
            let info = self.syms[s as usize];
            let step = if info.inverse { -1 } else { 1 };
            match out.last_mut() {
                Some((g, e)) if *g == info.gen && (*e > 0) == (step > 0) => *e += step,
                _ => out.push((info.gen, step)),
            }
        }
        out
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self, w: &Word) -> Vec<i64> {
        let mut out = vec![0; self.gens.len()];
        for &s in &w.syms {
            let info = self.syms[s as usize];
            out[info.gen] += if info.inverse { -1 } else { 1 };
        }
        out
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        if w.is_one() {
            return "1".to_string();
        }
        self.letters(w)
            .into_iter()
            .map(|(g, e)| {
                let name = &self.gens[g].name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Alphabet {
        Alphabet::new(vec![Generator::invertible("x"), Generator::plain("y")]).unwrap()
    }

    #[test]
    fn inverse_cancellation() {
        let a = xy();
        let x = a.word_named(&[("x", 1)]).unwrap();
        let xi = a.word_named(&[("x", -1)]).unwrap();
        assert!(a.mul(&x, &xi).is_one());
        assert!(a.mul(&xi, &x).is_one());
    }

    #[test]
    fn concatenation_keeps_runs() {
        let a = xy();
        let u = a.word_named(&[("x", 2), ("y", 1)]).unwrap();
        let v = a.word_named(&[("x", -1)]).unwrap();
        assert_eq!(a.fmt_word(&a.mul(&u, &v)), "x^2*y*x^-1");
    }

    #[test]
    fn cancellation_merges_neighbours() {
        let a = xy();
        let u = a.word_named(&[("x", 1), ("y", 1), ("x", 1)]).unwrap();
        let v = a.word_named(&[("x", -1), ("y", 1)]).unwrap();
        let w = a.mul(&u, &v);
        assert_eq!(a.fmt_word(&w), "x*y^2");
        assert_eq!(a.letters(&w), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn negative_power_of_plain_generator() {
        let a = xy();
        assert!(matches!(
            a.word_named(&[("y", -1)]),
            Err(Error::NegativePower(_))
        ));
        let y = a.word_named(&[("y", 1)]).unwrap();
        assert!(a.inverse_word(&y).is_none());
    }

    #[test]
    fn order_is_degree_then_lex() {
        let a = xy();
        let w = |l: &[(&str, i64)]| a.word_named(l).unwrap();
        assert!(Word::one() < w(&[("x", -1)]));
        assert!(w(&[("x", -1)]) < w(&[("x", 1)]));
        assert!(w(&[("x", 1)]) < w(&[("y", 1)]));
        assert!(w(&[("y", 1)]) < w(&[("x", 2)]));
        assert!(w(&[("x", 1), ("y", 1)]) < w(&[("y", 1), ("x", 1)]));
    }

    #[test]
    fn rejects_duplicate_names() {
        let r = Alphabet::new(vec![Generator::plain("a"), Generator::plain("a")]);
        assert!(r.is_err());
    }
}
