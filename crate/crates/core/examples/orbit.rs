//! The σ and τ maps on multi-indices and the closed form of the orbit.

use hopfforge::hopfstruct::antipode_monomial_identity;
use hopfforge::presets::build_str;
use hopfforge::solver::{orbit_check, sigma_map, MultiIndex};

pub fn run() -> hopfforge::Result<()> {
    let h = build_str("F:t=2")?;
    let alpha = MultiIndex::new(vec![1, 3])?;
    println!("sigma{alpha} = {} with t = 2", sigma_map(&alpha, 2));
    println!(
        "S(M_alpha) = -M_sigma(alpha): {}",
        antipode_monomial_identity(&h, &alpha, 2)?
    );
    let r = orbit_check(&MultiIndex::new(vec![2, -1, -1, 0])?, 1, 5)?;
    for (s, im) in r.images.iter().enumerate() {
        println!("  s = {s}: {im}");
    }
    println!(
        "closed form holds: {}, images distinct: {}",
        r.mismatches.is_empty(),
        r.distinct
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> hopfforge::Result<()> {
    run()
}
