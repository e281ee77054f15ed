//! Writing a preset to a presentation file and loading it back.

use hopfforge::cli::{load_presentation, parse_element, PresentationFile};
use hopfforge::presets::build_str;

pub fn run() -> hopfforge::Result<()> {
    let h = build_str("A:b=1,xi=2")?;
    let file = PresentationFile::from_presentation(&h);
    let path = std::env::temp_dir().join(format!("hopfforge-example-{}.json", std::process::id()));
    std::fs::write(&path, file.to_json())?;
    let back = load_presentation(path.to_str().expect("utf-8 path"))?;
    std::fs::remove_file(&path)?;
    println!("{}", file.to_json());
    let p = parse_element("g*y*g^-1", &back)?;
    println!("g*y*g^-1 = {} in the reloaded presentation", back.fmt(&p));
    Ok(())
}

#[allow(dead_code)]
fn main() -> hopfforge::Result<()> {
    run()
}
