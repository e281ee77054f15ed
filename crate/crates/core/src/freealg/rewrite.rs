use std::collections::BTreeMap;

use super::{Alphabet, NcPoly, Sym, Word};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

pub const DEFAULT_STEP_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

impl RewriteRule {
    pub fn new(lhs: Word, rhs: NcPoly) -> Self {
        RewriteRule { lhs, rhs }
    }
}

/// Two resolutions of an ambiguous word that reduce to different normal
/// forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPairFailure {
    pub word: Word,
    pub left: NcPoly,
    pub right: NcPoly,
    pub description: String,
}

/// A finitely presented algebra: an alphabet plus oriented rewrite rules.
#[derive(Clone, Debug)]
pub struct Algebra {
    alphabet: Alphabet,
    rules: Vec<RewriteRule>,
    by_first: Vec<Vec<usize>>,
    step_cap: u64,
}

impl Algebra {
    /// Validates that every rule is oriented: nonempty lhs, rhs words
    /// strictly below the lhs.
    pub fn new(alphabet: Alphabet, rules: Vec<RewriteRule>) -> Result<Self> {
        let mut by_first = vec![Vec::new(); alphabet.num_symbols()];
        for (i, r) in rules.iter().enumerate() {
            if r.lhs.is_one() {
                return Err(Error::InvalidPresentation(
                    "rule with unit left-hand side".into(),
                ));
            }
            if let Some((w, _)) = r.rhs.iter().find(|(w, _)| **w >= r.lhs) {
                return Err(Error::UnorientedRule {
                    lhs: alphabet.fmt_word(&r.lhs),
                    rhs: r.rhs.display(&alphabet),
                    offending: alphabet.fmt_word(w),
                });
            }
            by_first[r.lhs.syms()[0] as usize].push(i);
        }
        Ok(Algebra {
            alphabet,
            rules,
            by_first,
            step_cap: DEFAULT_STEP_CAP,
        })
    }

    pub fn with_step_cap(mut self, cap: u64) -> Self {
        self.step_cap = cap;
        self
    }

    pub fn step_cap(&self) -> u64 {
        self.step_cap
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    fn matches_at(&self, syms: &[Sym], pos: usize, rule: usize) -> bool {
        let l = self.rules[rule].lhs.syms();
        syms.len() - pos >= l.len() && syms[pos..pos + l.len()] == *l
    }

    /// Leftmost position with a matching rule; at a position, rules are
    /// tried in declaration order.
    pub fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        let syms = w.syms();
        (0..syms.len()).find_map(|pos| {
            self.by_first[syms[pos] as usize]
                .iter()
                .find(|&&r| self.matches_at(syms, pos, r))
                .map(|&r| (pos, r))
        })
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    /// Replaces the occurrence of rule `rule` at `pos` by its rhs, without
    /// further normalization.
    pub fn rewrite_at(&self, w: &Word, pos: usize, rule: usize) -> NcPoly {
        let r = &self.rules[rule];
        let syms = w.syms();
        debug_assert!(self.matches_at(syms, pos, rule));
        let (pre, post) = (&syms[..pos], &syms[pos + r.lhs.len()..]);
        let mut out = NcPoly::zero();
        for (m, c) in r.rhs.iter() {
            out.add_term(self.alphabet.concat3(pre, m.syms(), post), c.clone());
        }
        out
    }

    /// One leftmost rewrite step on a single word, `None` if irreducible.
    pub fn rewrite_step(&self, w: &Word) -> Option<NcPoly> {
        self.find_redex(w)
            .map(|(pos, r)| self.rewrite_at(w, pos, r))
    }

    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly> {
        let mut work: BTreeMap<Word, Scalar> = p.terms().clone();
        let mut out = NcPoly::zero();
        let mut steps = 0u64;
        while let Some((w, c)) = work.pop_last() {
            match self.find_redex(&w) {
                None => out.try_add_term(w, c)?,
                Some((pos, r)) => {
                    steps += 1;
                    if steps > self.step_cap {
                        return Err(Error::StepLimitExceeded(self.step_cap));
                    }
                    let rule = &self.rules[r];
                    let syms = w.syms();
                    let (pre, post) = (&syms[..pos], &syms[pos + rule.lhs.len()..]);
                    for (m, d) in rule.rhs.iter() {
                        let nw = self.alphabet.concat3(pre, m.syms(), post);
                        let nc = c.try_mul(d)?;
                        add_into(&mut work, nw, nc)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn normalize_word(&self, w: &Word) -> Result<NcPoly> {
        if self.is_irreducible(w) {
            return Ok(NcPoly::word(w.clone()));
        }
        self.normal_form(&NcPoly::word(w.clone()))
    }

    /// Normal form of `u * v`.
    pub fn word_mul(&self, u: &Word, v: &Word) -> Result<NcPoly> {
        self.normalize_word(&self.alphabet.mul(u, v))
    }

    pub fn mul(&self, p: &NcPoly, q: &NcPoly) -> Result<NcPoly> {
        self.normal_form(&p.free_mul(q, &self.alphabet)?)
    }

    pub fn mul_all(&self, factors: &[NcPoly]) -> Result<NcPoly> {
        let mut acc = NcPoly::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// Normal form of a generator power, e.g. `g^-3`.
    pub fn power(&self, gen: usize, e: i64) -> Result<NcPoly> {
        let w = self.alphabet.word(&[(gen, e)])?;
        self.normalize_word(&w)
    }

    /// Resolves every overlap and inclusion of rule left-hand sides of
    /// total length at most `max_len`, plus the ambiguities between rules
    /// and built-in inverse cancellation, and reports disagreements.
    pub fn critical_pair_check(&self, max_len: usize) -> Result<Vec<CriticalPairFailure>> {
        let mut out = Vec::new();
        let a = &self.alphabet;
        for (i, ri) in self.rules.iter().enumerate() {
            let li = ri.lhs.syms();
            for (j, rj) in self.rules.iter().enumerate() {
                let lj = rj.lhs.syms();
                // suffix of li == prefix of lj
                for k in 1..li.len().min(lj.len()) {
                    if li[li.len() - k..] != lj[..k] || li.len() + lj.len() - k > max_len {
                        continue;
                    }
                    let syms: Vec<Sym> = li.iter().chain(&lj[k..]).copied().collect();
                    let w = a.word_from_syms(&syms);
                    if w.syms().len() != li.len() + lj.len() - k {
                        continue;
                    }
                    let left = self.normal_form(&self.rewrite_at(&w, 0, i))?;
                    let right = self.normal_form(&self.rewrite_at(&w, li.len() - k, j))?;
                    if left != right {
                        out.push(CriticalPairFailure {
                            description: format!("overlap of rules {i} and {j}"),
                            word: w,
                            left,
                            right,
                        });
                    }
                }
                // lj occurs inside li
                if i != j && lj.len() <= li.len() && li.len() <= max_len {
                    for pos in 0..=li.len() - lj.len() {
                        if li[pos..pos + lj.len()] != *lj {
                            continue;
                        }
                        let left = self.normal_form(&ri.rhs)?;
                        let right = self.normal_form(&self.rewrite_at(&ri.lhs, pos, j))?;
                        if left != right {
                            out.push(CriticalPairFailure {
                                description: format!("rule {j} inside rule {i}"),
                                word: ri.lhs.clone(),
                                left,
                                right,
                            });
                        }
                    }
                }
            }
            if li.len() + 1 > max_len {
                continue;
            }
            // s^-1 * lhs and lhs * s^-1 cancel freely
            if let Some(inv) = a.sym_inverse(li[0]) {
                let sw = a.word_from_syms(&[inv]);
                let left = self.normal_form(&NcPoly::word(a.word_from_syms(&li[1..])))?;
                let right = self.mul(&NcPoly::word(sw), &ri.rhs)?;
                if left != right {
                    out.push(CriticalPairFailure {
                        description: format!("left inverse cancellation against rule {i}"),
                        word: ri.lhs.clone(),
                        left,
                        right,
                    });
                }
            }
            if let Some(inv) = a.sym_inverse(li[li.len() - 1]) {
                let sw = a.word_from_syms(&[inv]);
                let left =
                    self.normal_form(&NcPoly::word(a.word_from_syms(&li[..li.len() - 1])))?;
                let right = self.mul(&ri.rhs, &NcPoly::word(sw))?;
                if left != right {
                    out.push(CriticalPairFailure {
                        description: format!("right inverse cancellation against rule {i}"),
                        word: ri.lhs.clone(),
                        left,
                        right,
                    });
                }
            }
        }
        Ok(out)
    }
}

fn add_into(map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) -> Result<()> {
    if c.is_zero() {
        return Ok(());
    }
    match map.entry(w) {
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
