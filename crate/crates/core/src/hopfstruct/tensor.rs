use std::collections::BTreeMap;

use serde_json::Value;

use crate::error::Result;
use crate::freealg::fmt_terms;
use crate::freealg::{Alphabet, NcPoly, Word};
use crate::scalars::Scalar;

/// Linear combination of `R`-fold tensors of words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorPoly<const R: usize> {
    terms: BTreeMap<[Word; R], Scalar>,
}

impl<const R: usize> Default for TensorPoly<R> {
    fn default() -> Self {
        TensorPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<const R: usize> TensorPoly<R> {
    pub fn zero() -> Self {
        Self::default()
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

    pub fn terms(&self) -> &BTreeMap<[Word; R], Scalar> {
        &self.terms
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&[Word; R], &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &[Word; R]) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn try_add_term(&mut self, k: [Word; R], c: Scalar) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(k) {
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

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) -> Result<()> {
        for (k, d) in &other.terms {
            self.try_add_term(k.clone(), d.try_mul(c)?)?;
        }
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1))?;
        Ok(out)
    }

    /// Renders terms as `coef * w1 (x) w2`, largest first; a coefficient
    /// of 1 is omitted.
    pub fn display(&self, alpha: &Alphabet) -> String {
        fmt_terms(self.terms.iter().rev(), " * ", |k| {
            k.iter()
                .map(|w| alpha.fmt_word(w))
                .collect::<Vec<_>>()
                .join(" (x) ")
        })
    }

    /// JSON array of `[coef, w1, .., wR]` rows, largest first.
    pub fn to_json(&self, alpha: &Alphabet) -> Value {
        Value::Array(
            self.terms
                .iter()
                .rev()
                .map(|(k, c)| {
                    let mut row = vec![Value::String(c.to_string())];
                    row.extend(k.iter().map(|w| Value::String(alpha.fmt_word(w))));
                    Value::Array(row)
                })
                .collect(),
        )
    }
}

impl TensorPoly<2> {
    /// `p ⊗ q`.
    pub fn outer(p: &NcPoly, q: &NcPoly) -> Result<Self> {
        let mut out = Self::zero();
        for (a, c) in p.iter() {
            for (b, d) in q.iter() {
                out.try_add_term([a.clone(), b.clone()], c.try_mul(d)?)?;
            }
        }
        Ok(out)
    }

    /// Slice `Σ c (w ⊗ b)` over the terms whose right factor is `b`.
    pub fn left_factors(&self) -> BTreeMap<Word, NcPoly> {
        let mut out: BTreeMap<Word, NcPoly> = BTreeMap::new();
        for ([a, b], c) in &self.terms {
            out.entry(b.clone())
                .or_default()
                .add_term(a.clone(), c.clone());
        }
        out
    }

    /// Slice over the terms whose left factor is `a`.
    pub fn right_factors(&self) -> BTreeMap<Word, NcPoly> {
        let mut out: BTreeMap<Word, NcPoly> = BTreeMap::new();
        for ([a, b], c) in &self.terms {
            out.entry(a.clone())
                .or_default()
                .add_term(b.clone(), c.clone());
        }
        out
    }
}

impl TensorPoly<3> {
    pub fn outer3(p: &NcPoly, q: &NcPoly, r: &NcPoly) -> Result<Self> {
        let mut out = Self::zero();
        for (a, c) in p.iter() {
            for (b, d) in q.iter() {
                let cd = c.try_mul(d)?;
                for (e, f) in r.iter() {
                    out.try_add_term([a.clone(), b.clone(), e.clone()], cd.try_mul(f)?)?;
                }
            }
        }
        Ok(out)
    }
}
