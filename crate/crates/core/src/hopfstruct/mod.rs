//! Coproduct, counit and antipode on presented algebras, with axiom
//! checks, gradings and the low cobar differentials.

mod axioms;
mod cobar;
mod grading;
mod skew;
mod tensor;

pub use axioms::{hopf_axiom_report, random_element, random_word, AxiomCheck, Violation};
pub use cobar::{cobar_d1, cobar_d2};
pub use grading::{grading_check, AxisKind, Grading, GradingViolation, NamedAxis};
pub use skew::{antipode_monomial_identity, is_group_like, is_skew_primitive};
pub use tensor::TensorPoly;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::freealg::{Algebra, Alphabet, NcPoly, Sym, Word};
use crate::scalars::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenKind {
    /// `Δg = g ⊗ g`.
    GroupLike,
    /// `Δy = y ⊗ 1 + w ⊗ y` for a group-like word `w`.
    SkewPrimitive { pair: Word },
}

/// An algebra presentation with generator coproducts making it a Hopf
/// algebra.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    name: String,
    alg: Algebra,
    kinds: Vec<GenKind>,
    field: Option<i64>,
}

/// Per-symbol coproduct data in the free algebra.
enum SymCoprod {
    Group,
    Skew(Vec<Sym>),
}

impl HopfPresentation {
    /// Checks the structural invariants: group-like generators are
    /// invertible, skew-primitive generators are not, and pair words are
    /// made of group-like generators.
    pub fn new(name: &str, alg: Algebra, kinds: Vec<GenKind>, field: Option<i64>) -> Result<Self> {
        let gens = alg.alphabet().generators();
        if gens.len() != kinds.len() {
            return Err(Error::InvalidPresentation(format!(
                "{} generators but {} coalgebra tags",
                gens.len(),
                kinds.len()
            )));
        }
        if let Some(d) = field {
            crate::scalars::check_quadratic_parameter(d)?;
        }
        for (g, k) in gens.iter().zip(&kinds) {
            match k {
                GenKind::GroupLike if !g.invertible => {
                    return Err(Error::InvalidPresentation(format!(
                        "group-like generator '{}' must be invertible",
                        g.name
                    )))
                }
                GenKind::SkewPrimitive { pair } => {
                    if g.invertible {
                        return Err(Error::InvalidPresentation(format!(
                            "skew-primitive generator '{}' must not be invertible",
                            g.name
                        )));
                    }
                    for &s in pair.syms() {
                        let gi = alg.alphabet().sym_gen(s);
                        if kinds[gi] != GenKind::GroupLike {
                            return Err(Error::InvalidPresentation(format!(
                                "pair of '{}' uses non-group-like generator '{}'",
                                g.name, gens[gi].name
                            )));
                        }
                    }
                }
                _ => {}
            }
        }
        Ok(HopfPresentation {
            name: name.to_string(),
            alg,
            kinds,
            field,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.alg.alphabet()
    }

    pub fn kinds(&self) -> &[GenKind] {
        &self.kinds
    }

    /// `None` for Q, `Some(d)` for Q(sqrt(d)).
    pub fn field(&self) -> Option<i64> {
        self.field
    }

    pub fn gen_index(&self, name: &str) -> Result<usize> {
        self.alphabet()
            .gen_index(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Word from named letters, e.g. `[("x", 2), ("y", 1)]`.
    pub fn word(&self, letters: &[(&str, i64)]) -> Result<Word> {
        self.alphabet().word_named(letters)
    }

    /// Normal form of the word given by named letters.
    pub fn element(&self, letters: &[(&str, i64)]) -> Result<NcPoly> {
        self.alg.normalize_word(&self.word(letters)?)
    }

    pub fn nf(&self, p: &NcPoly) -> Result<NcPoly> {
        self.alg.normal_form(p)
    }

    pub fn mul(&self, p: &NcPoly, q: &NcPoly) -> Result<NcPoly> {
        self.alg.mul(p, q)
    }

    pub fn fmt(&self, p: &NcPoly) -> String {
        p.display(self.alphabet())
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        self.alphabet().fmt_word(w)
    }

    pub fn is_group_like_sym(&self, s: Sym) -> bool {
        self.kinds[self.alphabet().sym_gen(s)] == GenKind::GroupLike
    }

    /// True if every letter is a group-like generator.
    pub fn is_group_like_word(&self, w: &Word) -> bool {
        w.syms().iter().all(|&s| self.is_group_like_sym(s))
    }

    fn sym_coprod(&self, s: Sym) -> SymCoprod {
        match &self.kinds[self.alphabet().sym_gen(s)] {
            GenKind::GroupLike => SymCoprod::Group,
            GenKind::SkewPrimitive { pair } => SymCoprod::Skew(pair.syms().to_vec()),
        }
    }

    /// Δ of a single (not necessarily normal) word as pairs of free words.
    fn free_coproduct(&self, w: &Word) -> Vec<(Vec<Sym>, Vec<Sym>)> {
        let mut branches: Vec<(Vec<Sym>, Vec<Sym>)> = vec![(Vec::new(), Vec::new())];
        for &s in w.syms() {
            match self.sym_coprod(s) {
                SymCoprod::Group => {
                    for (l, r) in &mut branches {
                        l.push(s);
                        r.push(s);
                    }
                }
                SymCoprod::Skew(pair) => {
                    let mut next = Vec::with_capacity(branches.len() * 2);
                    for (l, r) in branches {
                        let mut l1 = l.clone();
                        l1.push(s);
                        next.push((l1, r.clone()));
                        let mut l2 = l;
                        l2.extend_from_slice(&pair);
                        let mut r2 = r;
                        r2.push(s);
                        next.push((l2, r2));
                    }
                    branches = next;
                }
            }
        }
        branches
    }

    /// Δ(p), components in normal form.
    pub fn coproduct(&self, p: &NcPoly) -> Result<TensorPoly<2>> {
        let mut memo = HashMap::new();
        self.coproduct_memo(p, &mut memo)
    }

    fn nf_memo(&self, syms: &[Sym], memo: &mut HashMap<Word, NcPoly>) -> Result<NcPoly> {
        let w = self.alphabet().word_from_syms(syms);
        if let Some(p) = memo.get(&w) {
            return Ok(p.clone());
        }
        let p = self.alg.normalize_word(&w)?;
        memo.insert(w, p.clone());
        Ok(p)
    }

    fn coproduct_memo(
        &self,
        p: &NcPoly,
        memo: &mut HashMap<Word, NcPoly>,
    ) -> Result<TensorPoly<2>> {
        let mut out = TensorPoly::zero();
        for (w, c) in p.iter() {
            for (l, r) in self.free_coproduct(w) {
                let lp = self.nf_memo(&l, memo)?;
                let rp = self.nf_memo(&r, memo)?;
                for (lw, lc) in lp.iter() {
                    let lc = lc.try_mul(c)?;
                    for (rw, rc) in rp.iter() {
                        out.try_add_term([lw.clone(), rw.clone()], lc.try_mul(rc)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// ε(p): the sum of coefficients of words made of group-like letters.
    pub fn counit(&self, p: &NcPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in p.iter() {
            if self.is_group_like_word(w) {
                acc = &acc + c;
            }
        }
        acc
    }

    /// S of a single word as a signed free word.
    fn free_antipode(&self, w: &Word) -> (bool, Vec<Sym>) {
        let a = self.alphabet();
        let mut out = Vec::with_capacity(w.len());
        let mut negative = false;
        for &s in w.syms().iter().rev() {
            match self.sym_coprod(s) {
                SymCoprod::Group => out.push(a.sym_inverse(s).expect("group-like is invertible")),
                SymCoprod::Skew(pair) => {
                    negative = !negative;
                    out.extend(pair.iter().rev().map(|&p| a.sym_inverse(p).unwrap()));
                    out.push(s);
                }
            }
        }
        (negative, out)
    }

    /// S(p), anti-multiplicative with `S(g) = g^-1`, `S(y) = -w^-1 y`.
    pub fn antipode(&self, p: &NcPoly) -> Result<NcPoly> {
        let mut raw = NcPoly::zero();
        for (w, c) in p.iter() {
            let (neg, syms) = self.free_antipode(w);
            let c = if neg { -c } else { c.clone() };
            raw.try_add_term(self.alphabet().word_from_syms(&syms), c)?;
        }
        self.alg.normal_form(&raw)
    }

    /// (Δ ⊗ id) applied to a rank-2 tensor.
    pub fn coproduct_left(&self, t: &TensorPoly<2>) -> Result<TensorPoly<3>> {
        let mut memo = HashMap::new();
        let mut out = TensorPoly::zero();
        for ([a, b], c) in t.iter() {
            let d = self.coproduct_memo(&NcPoly::term(a.clone(), c.clone()), &mut memo)?;
            for ([l, r], e) in d.iter() {
                out.try_add_term([l.clone(), r.clone(), b.clone()], e.clone())?;
            }
        }
        Ok(out)
    }

    /// (id ⊗ Δ) applied to a rank-2 tensor.
    pub fn coproduct_right(&self, t: &TensorPoly<2>) -> Result<TensorPoly<3>> {
        let mut memo = HashMap::new();
        let mut out = TensorPoly::zero();
        for ([a, b], c) in t.iter() {
            let d = self.coproduct_memo(&NcPoly::term(b.clone(), c.clone()), &mut memo)?;
            for ([l, r], e) in d.iter() {
                out.try_add_term([a.clone(), l.clone(), r.clone()], e.clone())?;
            }
        }
        Ok(out)
    }

    /// Multiplication map `a ⊗ b -> ab`.
    pub fn contract(&self, t: &TensorPoly<2>) -> Result<NcPoly> {
        let mut raw = NcPoly::zero();
        for ([a, b], c) in t.iter() {
            raw.try_add_term(self.alphabet().mul(a, b), c.clone())?;
        }
        self.alg.normal_form(&raw)
    }
}

#[cfg(test)]
mod tests {
    use crate::presets::{build, PresetId};

    #[test]
    fn coproduct_of_xy_in_f1() {
        let h = build(&PresetId::F { t: 1 }).unwrap();
        let p = h.element(&[("x", 1), ("y", 1)]).unwrap();
        let d = h.coproduct(&p).unwrap();
        assert_eq!(d.display(h.alphabet()), "x*y (x) x + x^2 (x) x*y");
    }

    #[test]
    fn coproduct_of_y_squared_in_f1() {
        let h = build(&PresetId::F { t: 1 }).unwrap();
        let d = h.coproduct(&h.element(&[("y", 2)]).unwrap()).unwrap();
        let expect = ["y^2 (x) 1", "y*x (x) y", "x*y (x) y", "x^2 (x) y^2"];
        let shown = d.display(h.alphabet());
        assert_eq!(shown, expect.join(" + "));
    }

    #[test]
    fn counit_examples() {
        let h = build(&PresetId::F { t: 1 }).unwrap();
        let x3 = h.element(&[("x", 3)]).unwrap();
        assert!(h.counit(&x3).is_one());
        let mut p = h.element(&[("y", 1)]).unwrap().scale(&2.into()).unwrap();
        p.add_scaled(&h.element(&[("x", 1)]).unwrap(), &3.into())
            .unwrap();
        assert_eq!(h.counit(&p), 3.into());
        let xm1 = h
            .element(&[("x", 1)])
            .unwrap()
            .sub(&crate::NcPoly::one())
            .unwrap();
        assert!(h.counit(&xm1).is_zero());
    }

    #[test]
    fn antipode_examples() {
        let h2 = build(&PresetId::F { t: 2 }).unwrap();
        let s = h2.antipode(&h2.element(&[("y", 1)]).unwrap()).unwrap();
        assert_eq!(h2.fmt(&s), "-x^-2*y");
        let h1 = build(&PresetId::F { t: 1 }).unwrap();
        let p = h1.element(&[("x", 1), ("y", 1), ("x", 3)]).unwrap();
        assert_eq!(h1.fmt(&h1.antipode(&p).unwrap()), "-x^-4*y*x^-1");
        assert_eq!(
            h1.antipode(&crate::NcPoly::one()).unwrap(),
            crate::NcPoly::one()
        );
    }
}
