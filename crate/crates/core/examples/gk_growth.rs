//! Dimension sequences and GK-dimension estimates for several presets.

use hopfforge::growth::{
    ball_growth, gk_estimate, span_dimension_sequence, standard_generating_set,
    DEFAULT_DIMENSION_CAP,
};
use hopfforge::presets::build_str;

pub fn run() -> hopfforge::Result<()> {
    for (sel, n) in [
        ("A:b=1,xi=2", 16),
        ("C:m=2", 16),
        ("Zn:n=2", 16),
        ("E:n=1", 16),
        ("E:n=2", 16),
        ("F:t=1", 10),
    ] {
        let h = build_str(sel)?;
        let d =
            span_dimension_sequence(&h, &standard_generating_set(&h), n, DEFAULT_DIMENSION_CAP)?;
        let r = gk_estimate(&d)?;
        println!("{sel:<12} {:<40} dims {:?}", r.describe(), d.dims);
    }
    for (sel, gens, n) in [("heis", vec!["x", "y"], 24), ("zxz2", vec!["x", "u"], 16)] {
        let h = build_str(sel)?;
        let words = gens
            .iter()
            .map(|g| h.word(&[(g, 1)]))
            .collect::<hopfforge::Result<Vec<_>>>()?;
        let d = ball_growth(&h, &words, n, DEFAULT_DIMENSION_CAP)?;
        let r = gk_estimate(&d)?;
        println!("{sel:<12} {:<40} dims {:?}", r.describe(), d.dims);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hopfforge::Result<()> {
    run()
}
