//! The cobar differentials and the identity ∂²∂¹ = 0.

use hopfforge::hopfstruct::{cobar_d1, cobar_d2, random_element};
use hopfforge::presets::build_str;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run() -> hopfforge::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for sel in ["F:t=1", "C:m=2", "E:n=1"] {
        let h = build_str(sel)?;
        let c = random_element(&h, &mut rng, 3)?;
        let d1 = cobar_d1(&h, &c)?;
        let d2 = cobar_d2(&h, &d1)?;
        println!("{sel}: c = {}", h.fmt(&c));
        println!("  d1(c) = {}", d1.display(h.alphabet()));
        println!("  d2(d1(c)) = {}", d2.display(h.alphabet()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hopfforge::Result<()> {
    run()
}
