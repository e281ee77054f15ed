use super::{HopfPresentation, TensorPoly};
use crate::error::Result;
use crate::freealg::{NcPoly, Word};
use crate::scalars::Scalar;

/// ∂¹(c) = 1 ⊗ c − Δ(c) + c ⊗ 1.
pub fn cobar_d1(h: &HopfPresentation, c: &NcPoly) -> Result<TensorPoly<2>> {
    let one = NcPoly::one();
    let mut out = TensorPoly::outer(&one, c)?;
    out.add_scaled(&h.coproduct(c)?, &Scalar::from_int(-1))?;
    out.add_scaled(&TensorPoly::outer(c, &one)?, &Scalar::one())?;
    Ok(out)
}

/// ∂²(c ⊗ d) = 1 ⊗ c ⊗ d − Δ(c) ⊗ d + c ⊗ Δ(d) − c ⊗ d ⊗ 1, extended
/// linearly.
pub fn cobar_d2(h: &HopfPresentation, u: &TensorPoly<2>) -> Result<TensorPoly<3>> {
    let one = Word::one();
    let mut out = TensorPoly::zero();
    out.add_scaled(&h.coproduct_right(u)?, &Scalar::one())?;
    out.add_scaled(&h.coproduct_left(u)?, &Scalar::from_int(-1))?;
    for ([a, b], c) in u.iter() {
        out.try_add_term([one.clone(), a.clone(), b.clone()], c.clone())?;
        out.try_add_term([a.clone(), b.clone(), one.clone()], -c)?;
    }
    Ok(out)
}
