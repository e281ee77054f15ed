use std::collections::BTreeMap;

use super::{Alphabet, Word};
use crate::error::Result;
use crate::scalars::Scalar;

/// Finite linear combination of words with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        Self::word(Word::one())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Scalar::one())
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(Word::one(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest word under the word order.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Adds `c * w`; panics on a field mismatch.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        self.try_add_term(w, c).expect("scalar field mismatch");
    }

    pub fn try_add_term(&mut self, w: Word, c: Scalar) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().try_add(&c)?;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &NcPoly, c: &Scalar) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        for (w, d) in &other.terms {
            self.try_add_term(w.clone(), d.try_mul(c)?)?;
        }
        Ok(())
    }

    pub fn add(&self, other: &NcPoly) -> Result<NcPoly> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1))?;
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        out.add_scaled(self, c)?;
        Ok(out)
    }

    pub fn neg(&self) -> NcPoly {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect();
        NcPoly { terms }
    }

    /// Product in the free algebra (inverse cancellation only, no rules).
    pub fn free_mul(&self, other: &NcPoly, alpha: &Alphabet) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.try_add_term(alpha.mul(u, v), a.try_mul(b)?)?;
            }
        }
        Ok(out)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for (w, c) in terms {
            out.try_add_term(w, c)?;
        }
        Ok(out)
    }

    /// Largest number of symbols in any word.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Renders with descending word order, e.g. `y*g + g^2 - g`.
    pub fn display(&self, alpha: &Alphabet) -> String {
        fmt_terms(self.terms.iter().rev(), "*", |w| alpha.fmt_word(w))
    }
}

/// Shared term printer for polynomials and tensors. `word` renders the
/// monomial, with `"1"` meaning the unit; `sep` goes between a
/// coefficient and its monomial.
pub(crate) fn fmt_terms<'a, K: 'a>(
    terms: impl Iterator<Item = (&'a K, &'a Scalar)>,
    sep: &str,
    word: impl Fn(&K) -> String,
) -> String {
    let mut out = String::new();
    for (k, c) in terms {
        let (neg, mag) = match c {
            Scalar::Rat(q) if q < &num_traits::Zero::zero() => (true, -c),
            _ => (false, c.clone()),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let w = word(k);
        let coef = match &mag {
            Scalar::Rat(_) => mag.to_string(),
            Scalar::Quad { .. } => format!("({mag})"),
        };
        if w == "1" {
            out.push_str(&coef);
        } else if mag.is_one() {
            out.push_str(&w);
        } else {
            out.push_str(&coef);
            out.push_str(sep);
            out.push_str(&w);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
