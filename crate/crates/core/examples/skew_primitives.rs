//! Skew-primitive spaces over windows of F(t), their classification, and
//! group-like elements.

use hopfforge::presets::build_str;
use hopfforge::solver::{classify_skew_primitive, group_like_space, skew_primitive_space, Window};
use hopfforge::Word;

pub fn run() -> hopfforge::Result<()> {
    let h = build_str("F:t=1")?;
    let x = h.word(&[("x", 1)])?;
    let space = skew_primitive_space(&h, &Word::one(), &x, Window::new(1, 3))?;
    println!(
        "F(1), pair (1, x), window (1, 3): dimension {}",
        space.dimension()
    );
    for f in &space.basis {
        println!(
            "  {:<24} {}",
            h.fmt(f),
            classify_skew_primitive(&h, 1, f)?.describe(&h)
        );
    }
    let f2 = build_str("F:t=2")?;
    let gl: Vec<String> = group_like_space(&f2, Window::new(1, 4))?
        .iter()
        .map(|w| f2.fmt_word(w))
        .collect();
    println!(
        "group-likes of F(2) with exponents up to 4: {}",
        gl.join(", ")
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> hopfforge::Result<()> {
    run()
}
