// Describes the semion theory inline as JSON and derives its modular data.

use anyon_interferometry::model::{build_model, ModelSpec};
use anyon_interferometry::Result;

const SEMION: &str = r#"{
  "name": "semion",
  "charges": ["I", "s"],
  "fusion": [["s", "s", "I"]],
  "F": [["s", "s", "s", "s", "I", "I", -1.0, 0.0]],
  "R": [["s", "s", "I", 0.0, 1.0]],
  "twists": [["s", 0.0, 1.0]]
}"#;

pub fn run_example() -> Result<()> {
    let model = build_model(&ModelSpec::from_json(SEMION)?)?;
    let s = model.charge("s")?;
    println!("total dimension {:.6}", model.total_dim());
    println!("S =\n{:.4}", model.s_matrix());
    println!("M_ss = {:.4}", model.monodromy(s, s));
    assert!((model.monodromy(s, s).re + 1.0).abs() < 1e-12);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
