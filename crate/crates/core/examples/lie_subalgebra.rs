//! Two-dimensional Lie subalgebras and the Hopf subalgebras they generate.

use hopfforge::growth::verify_hopf_subalgebra;
use hopfforge::liealg::LieAlgebra;
use hopfforge::presets::{build, PresetId};
use hopfforge::NcPoly;

pub fn run() -> hopfforge::Result<()> {
    for l in [
        LieAlgebra::sl2(),
        LieAlgebra::heisenberg(),
        LieAlgebra::affine_line(),
    ] {
        let (u, v) = l.two_dim_subalgebra()?;
        println!(
            "{:?}: lower central series {:?}, u = {}, v = {}, [u,v] = {}",
            l.names(),
            l.lower_central_series()?,
            l.fmt_vector(&u),
            l.fmt_vector(&v),
            l.fmt_vector(&l.bracket(&u, &v)?)
        );
        let h = build(&PresetId::Env(l.clone()))?;
        let as_poly = |vec: &[hopfforge::Scalar]| -> hopfforge::Result<NcPoly> {
            let mut p = NcPoly::zero();
            for (i, c) in vec.iter().enumerate() {
                p.add_scaled(&NcPoly::word(h.alphabet().generator_word(i)), c)?;
            }
            Ok(p)
        };
        let r = verify_hopf_subalgebra(&h, &[as_poly(&u)?, as_poly(&v)?], 4)?;
        println!(
            "  enveloping span closed at cap 4: {} (dims {:?})",
            r.passed(),
            r.sequence.dims
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hopfforge::Result<()> {
    run()
}
