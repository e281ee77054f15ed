use std::collections::BTreeSet;

use super::{HopfPresentation, TensorPoly};
use crate::error::Result;
use crate::freealg::{NcPoly, Word};
use crate::scalars::Scalar;
use crate::solver::{monomial, sigma_map, MultiIndex};

/// True if `p` is a single group-like word with coefficient 1.
pub fn is_group_like(h: &HopfPresentation, p: &NcPoly) -> Result<bool> {
    if p.len() != 1 {
        return Ok(false);
    }
    let (_, c) = p.leading().unwrap();
    if !c.is_one() {
        return Ok(false);
    }
    Ok(h.coproduct(p)? == TensorPoly::outer(p, p)?)
}

/// Finds group-like words `(u, v)` with `Δp = p ⊗ u + v ⊗ p`.
///
/// Candidates are 1 and the group-like words occurring in Δ(p), tried in
/// word order with `u` varying slowest; the first match is returned.
pub fn is_skew_primitive(h: &HopfPresentation, p: &NcPoly) -> Result<Option<(Word, Word)>> {
    if p.is_zero() {
        return Ok(None);
    }
    let delta = h.coproduct(p)?;
    let mut cands: BTreeSet<Word> = BTreeSet::new();
    cands.insert(Word::one());
    for ([a, b], _) in delta.iter() {
        for w in [a, b] {
            if h.is_group_like_word(w) {
                cands.insert(w.clone());
            }
        }
    }
    for u in &cands {
        let pu = TensorPoly::outer(p, &NcPoly::word(u.clone()))?;
        let rest = delta.sub(&pu)?;
        for v in &cands {
            let vp = TensorPoly::outer(&NcPoly::word(v.clone()), p)?;
            if rest == vp {
                return Ok(Some((u.clone(), v.clone())));
            }
        }
    }
    Ok(None)
}

/// Checks `S(M_α) = (-1)^n M_{σ(α)}` in F(t), computing the left side
/// through the anti-multiplicative extension of S.
pub fn antipode_monomial_identity(
    h: &HopfPresentation,
    alpha: &MultiIndex,
    t: i64,
) -> Result<bool> {
    let m = monomial(h, alpha)?;
    let lhs = h.antipode(&NcPoly::word(m))?;
    let n = alpha.n();
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let rhs = NcPoly::term(monomial(h, &sigma_map(alpha, t))?, Scalar::from_int(sign));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{build, PresetId};

    #[test]
    fn y_in_f1_has_pair_one_x() {
        let h = build(&PresetId::F { t: 1 }).unwrap();
        let (u, v) = is_skew_primitive(&h, &h.element(&[("y", 1)]).unwrap())
            .unwrap()
            .unwrap();
        assert!(u.is_one());
        assert_eq!(h.fmt_word(&v), "x");
    }

    #[test]
    fn monomial_in_e1() {
        let h = build(&PresetId::E { n: 1 }).unwrap();
        let p = h.element(&[("x0", 1), ("x1", 1), ("y", 1)]).unwrap();
        let (u, v) = is_skew_primitive(&h, &p).unwrap().unwrap();
        assert_eq!(h.fmt_word(&u), "x0*x1");
        assert_eq!(h.fmt_word(&v), "x0^2*x1");
    }

    #[test]
    fn y_squared_is_not_skew_primitive() {
        let h = build(&PresetId::F { t: 1 }).unwrap();
        let p = h.element(&[("y", 2)]).unwrap();
        assert_eq!(is_skew_primitive(&h, &p).unwrap(), None);
    }

    #[test]
    fn antipode_identity_examples() {
        let h1 = build(&PresetId::F { t: 1 }).unwrap();
        let h2 = build(&PresetId::F { t: 2 }).unwrap();
        for (h, t, a) in [
            (&h1, 1, vec![0, 0]),
            (&h2, 2, vec![1, 3]),
            (&h1, 1, vec![0, 0, 0]),
        ] {
            let alpha = MultiIndex::new(a).unwrap();
            assert!(antipode_monomial_identity(h, &alpha, t).unwrap());
        }
    }
}
