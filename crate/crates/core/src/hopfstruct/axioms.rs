use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{HopfPresentation, TensorPoly};
use crate::error::Result;
use crate::freealg::{NcPoly, Sym, Word};
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomCheck {
    Coassociativity,
    Counit,
    Antipode,
    WellDefined,
}

impl fmt::Display for AxiomCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AxiomCheck::Coassociativity => "(a) coassociativity",
            AxiomCheck::Counit => "(b) counit",
            AxiomCheck::Antipode => "(c) antipode",
            AxiomCheck::WellDefined => "(d) relation well-definedness",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: AxiomCheck,
    pub element: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails on {}: {}",
            self.check, self.element, self.detail
        )
    }
}

/// Uniform word of 1..=degree letters over all symbols, freely reduced.
pub fn random_word(h: &HopfPresentation, rng: &mut impl Rng, degree: usize) -> Word {
    let n = h.alphabet().num_symbols() as Sym;
    let len = rng.gen_range(1..=degree.max(1));
    let syms: Vec<Sym> = (0..len).map(|_| rng.gen_range(0..n)).collect();
    h.alphabet().word_from_syms(&syms)
}

/// Normal form of 1 to 3 random words with coefficients in {-2,-1,1,2}.
pub fn random_element(h: &HopfPresentation, rng: &mut impl Rng, degree: usize) -> Result<NcPoly> {
    let terms = rng.gen_range(1..=3);
    let mut p = NcPoly::zero();
    for _ in 0..terms {
        let w = random_word(h, rng, degree);
        let c = *[-2i64, -1, 1, 2].choose(rng).unwrap();
        p.try_add_term(w, Scalar::from_int(c))?;
    }
    h.nf(&p)
}

struct Reporter<'a> {
    h: &'a HopfPresentation,
    out: Vec<Violation>,
}

impl Reporter<'_> {
    fn record(&mut self, check: AxiomCheck, element: &str, outcome: Result<Option<String>>) {
        let detail = match outcome {
            Ok(None) => return,
            Ok(Some(d)) => d,
            Err(e) => format!("evaluation failed: {e}"),
        };
        self.out.push(Violation {
            check,
            element: element.to_string(),
            detail,
        });
    }

    fn element_checks(&mut self, p: &NcPoly) {
        let h = self.h;
        let name = h.fmt(p);
        let delta = match h.coproduct(p) {
            Ok(d) => d,
            Err(e) => {
                self.record(AxiomCheck::Coassociativity, &name, Err(e));
                return;
            }
        };
        self.record(
            AxiomCheck::Coassociativity,
            &name,
            coassociativity(h, &delta),
        );
        self.record(AxiomCheck::Counit, &name, counit_axiom(h, p, &delta));
        self.record(AxiomCheck::Antipode, &name, antipode_axiom(h, p, &delta));
    }
}

fn coassociativity(h: &HopfPresentation, delta: &TensorPoly<2>) -> Result<Option<String>> {
    let l = h.coproduct_left(delta)?;
    let r = h.coproduct_right(delta)?;
    Ok((l != r).then(|| {
        format!(
            "(Δ⊗id)Δ - (id⊗Δ)Δ = {}",
            l.sub(&r)
                .map(|d| d.display(h.alphabet()))
                .unwrap_or_default()
        )
    }))
}

fn counit_axiom(h: &HopfPresentation, p: &NcPoly, delta: &TensorPoly<2>) -> Result<Option<String>> {
    let mut left = NcPoly::zero();
    let mut right = NcPoly::zero();
    for ([a, b], c) in delta.iter() {
        let ea = h.counit(&NcPoly::word(a.clone()));
        let eb = h.counit(&NcPoly::word(b.clone()));
        left.try_add_term(b.clone(), ea.try_mul(c)?)?;
        right.try_add_term(a.clone(), eb.try_mul(c)?)?;
    }
    let mut bad = Vec::new();
    if &left != p {
        bad.push(format!("(ε⊗id)Δ = {}", h.fmt(&left)));
    }
    if &right != p {
        bad.push(format!("(id⊗ε)Δ = {}", h.fmt(&right)));
    }
    Ok((!bad.is_empty()).then(|| bad.join("; ")))
}

fn antipode_axiom(
    h: &HopfPresentation,
    p: &NcPoly,
    delta: &TensorPoly<2>,
) -> Result<Option<String>> {
    let expect = NcPoly::constant(h.counit(p));
    let mut left = TensorPoly::<2>::zero();
    let mut right = TensorPoly::<2>::zero();
    for ([a, b], c) in delta.iter() {
        let sa = h.antipode(&NcPoly::word(a.clone()))?;
        let sb = h.antipode(&NcPoly::word(b.clone()))?;
        left.add_scaled(&TensorPoly::outer(&sa, &NcPoly::word(b.clone()))?, c)?;
        right.add_scaled(&TensorPoly::outer(&NcPoly::word(a.clone()), &sb)?, c)?;
    }
    let ml = h.contract(&left)?;
    let mr = h.contract(&right)?;
    let mut bad = Vec::new();
    if ml != expect {
        bad.push(format!("m(S⊗id)Δ = {}", h.fmt(&ml)));
    }
    if mr != expect {
        bad.push(format!("m(id⊗S)Δ = {}", h.fmt(&mr)));
    }
    Ok((!bad.is_empty()).then(|| bad.join("; ")))
}

fn rule_checks(h: &HopfPresentation, lhs: &Word, rhs: &NcPoly) -> Result<Option<String>> {
    let l = NcPoly::word(lhs.clone());
    let mut bad = Vec::new();
    let (dl, dr) = (h.coproduct(&l)?, h.coproduct(rhs)?);
    if dl != dr {
        bad.push(format!(
            "Δ(lhs) - Δ(rhs) = {}",
            dl.sub(&dr)?.display(h.alphabet())
        ));
    }
    if h.counit(&l) != h.counit(rhs) {
        bad.push(format!(
            "ε(lhs) = {}, ε(rhs) = {}",
            h.counit(&l),
            h.counit(rhs)
        ));
    }
    let (sl, sr) = (h.antipode(&l)?, h.antipode(rhs)?);
    if sl != sr {
        bad.push(format!("S(lhs) = {}, S(rhs) = {}", h.fmt(&sl), h.fmt(&sr)));
    }
    Ok((!bad.is_empty()).then(|| bad.join("; ")))
}

/// Checks coassociativity, counit and antipode axioms on every generator
/// (and inverse) and on `trials` seeded random elements of degree at most
/// `sample_degree`, plus compatibility of Δ, ε and S with every rule.
/// An empty list means all checks passed.
pub fn hopf_axiom_report(
    h: &HopfPresentation,
    sample_degree: usize,
    trials: usize,
    seed: u64,
) -> Vec<Violation> {
    let mut rep = Reporter { h, out: Vec::new() };
    let alg = h.algebra();
    for rule in alg.rules() {
        let name = format!("{} -> {}", h.fmt_word(&rule.lhs), h.fmt(&rule.rhs));
        let outcome = rule_checks(h, &rule.lhs, &rule.rhs);
        rep.record(AxiomCheck::WellDefined, &name, outcome);
    }
    let a = h.alphabet();
    for s in 0..a.num_symbols() as Sym {
        match h.nf(&NcPoly::word(a.word_from_syms(&[s]))) {
            Ok(p) => rep.element_checks(&p),
            Err(e) => rep.record(AxiomCheck::WellDefined, &format!("symbol {s}"), Err(e)),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        match random_element(h, &mut rng, sample_degree) {
            Ok(p) => rep.element_checks(&p),
            Err(e) => rep.record(AxiomCheck::Coassociativity, "random element", Err(e)),
        }
    }
    rep.out
}
