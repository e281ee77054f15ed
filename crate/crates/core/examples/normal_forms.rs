//! Normal forms of a few elements in several presets.

use hopfforge::cli::parse_element;
use hopfforge::presets::build_str;

pub fn run() -> hopfforge::Result<()> {
    for (sel, expr) in [
        ("C:m=2", "g*y"),
        ("E:n=1", "y^2"),
        ("E:n=1", "y*x1"),
        ("A:b=1,xi=-1", "(g + y)*(g - y)"),
        ("heis", "y*x"),
        ("env:sl2", "f*e"),
        ("F:t=1", "x^-1*y*x^2 + 3/2*(x - 1)"),
    ] {
        let h = build_str(sel)?;
        let p = parse_element(expr, &h)?;
        println!("{sel:<12} {expr:<26} = {}", h.fmt(&p));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hopfforge::Result<()> {
    run()
}
