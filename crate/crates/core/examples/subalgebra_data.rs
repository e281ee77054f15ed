//! Subalgebra data (f, ξ, β) from a group-like g and a (1, g^b)-primitive y.

use hopfforge::presets::build_str;
use hopfforge::solver::{find_conjugate_relation, find_subalgebra_data, DEFAULT_RELATION_CAP};

pub fn run() -> hopfforge::Result<()> {
    for (sel, g) in [
        ("E:n=1", "x0"),
        ("A:b=1,xi=2", "g"),
        ("C:m=2", "g"),
        ("C:m=3", "g"),
    ] {
        let h = build_str(sel)?;
        let gw = h.word(&[(g, 1)])?;
        let y = h.element(&[("y", 1)])?;
        let rel =
            find_conjugate_relation(&h, &gw, &y, DEFAULT_RELATION_CAP)?.expect("relation exists");
        let coeffs: Vec<String> = rel.coeffs.iter().map(|c| c.to_string()).collect();
        let data = find_subalgebra_data(&h, &gw, &y, DEFAULT_RELATION_CAP)?;
        println!(
            "{sel:<12} relation [{}], lambda {}: {}",
            coeffs.join(", "),
            rel.lambda,
            data.describe(&h)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hopfforge::Result<()> {
    run()
}
