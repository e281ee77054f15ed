//! Coproduct, counit and antipode of sample elements.

use hopfforge::cli::parse_element;
use hopfforge::presets::build_str;

pub fn run() -> hopfforge::Result<()> {
    for (sel, expr) in [
        ("F:t=1", "x*y"),
        ("F:t=1", "y^2"),
        ("F:t=2", "y"),
        ("C:m=2", "y*g"),
        ("E:n=1", "x0*x1*y"),
    ] {
        let h = build_str(sel)?;
        let p = parse_element(expr, &h)?;
        println!("{sel}: {expr}");
        println!("  coproduct {}", h.coproduct(&p)?.display(h.alphabet()));
        println!("  counit    {}", h.counit(&p));
        println!("  antipode  {}", h.fmt(&h.antipode(&p)?));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hopfforge::Result<()> {
    run()
}
