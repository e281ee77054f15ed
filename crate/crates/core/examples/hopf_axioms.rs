//! Randomized Hopf axiom reports, including a deliberately broken
//! presentation.

use hopfforge::cli::PresentationFile;
use hopfforge::hopfstruct::hopf_axiom_report;
use hopfforge::presets::build_str;

const BROKEN: &str = r#"{"field": "Q",
  "generators": [{"name": "y", "kind": "skewprimitive", "pair": "g^2"},
                 {"name": "g", "kind": "grouplike", "weight": 0}],
  "order": ["y", "g^-1", "g"],
  "rules": [{"lhs": "g*y", "rhs": "y*g + g^2 - g"},
            {"lhs": "g^-1*y", "rhs": "y*g^-1 - 1 + g^-1"}]}"#;

pub fn run() -> hopfforge::Result<()> {
    for sel in ["F:t=1", "A:b=2,xi=-1", "C:m=3", "E:n=2", "heis", "env:sl2"] {
        let h = build_str(sel)?;
        let report = hopf_axiom_report(&h, 3, 20, 0);
        println!("{sel:<12} {} violations", report.len());
    }
    let broken = PresentationFile::from_json(BROKEN)?.construct("C(2) with pair g^2")?;
    for v in hopf_axiom_report(&broken, 3, 5, 0).iter().take(3) {
        println!("{}: {v}", broken.name());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hopfforge::Result<()> {
    run()
}
