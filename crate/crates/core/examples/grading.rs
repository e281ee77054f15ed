//! Grading checks: the y-grading and (x, y)-bigrading of F(t), and an
//! inhomogeneous grading of C(2).

use hopfforge::hopfstruct::{grading_check, AxisKind, Grading};
use hopfforge::presets::build_str;

pub fn run() -> hopfforge::Result<()> {
    for sel in ["F:t=1", "F:t=2"] {
        let h = build_str(sel)?;
        let y = grading_check(&h, &Grading::y_grading(&h)?, 50, 0)?;
        let xy = grading_check(&h, &Grading::xy_bigrading(&h)?, 50, 0)?;
        println!(
            "{sel}: y-grading {} violations, xy-bigrading {} violations",
            y.len(),
            xy.len()
        );
    }
    let c2 = build_str("C:m=2")?;
    let g = Grading::by_names(&c2, &[("g", AxisKind::Comodule, &[("g", 1)])])?;
    for v in grading_check(&c2, &g, 10, 0)? {
        println!("C(2) g-grading {}: {} ({})", v.check, v.element, v.detail);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hopfforge::Result<()> {
    run()
}
