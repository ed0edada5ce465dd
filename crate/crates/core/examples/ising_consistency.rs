// Builds the Ising model, checks every axiom family, then breaks one
// F-symbol and shows which families notice.

use anyon_interferometry::model::{build_model, ising_spec, load_model, verify_consistency, AxiomFamily};
use anyon_interferometry::{Error, Result};

pub fn run_example() -> Result<()> {
    let model = build_model(&ising_spec())?;
    let report = verify_consistency(&model);
    println!("{report}");
    assert!(report.max_residual() < 1e-12);

    for a in model.charges() {
        println!(
            "d_{} = {:.6}, theta = {:.6}",
            model.charge_name(a),
            model.dim(a),
            model.twist(a)
        );
    }

    // [F^{sigma sigma sigma}_sigma]_{psi psi} with the wrong sign
    let mut broken = ising_spec();
    broken.f_symbols[3].6 = -broken.f_symbols[3].6;
    match build_model(&broken) {
        Err(Error::ConsistencyViolation(report)) => {
            println!("tampered: failing families {:?}", report.failing_families());
            assert!(!report.family(AxiomFamily::Pentagon).passed());
        }
        other => panic!("tampered model was accepted: {other:?}"),
    }

    let fib = load_model(concat!(env!("CARGO_MANIFEST_DIR"), "/models/fibonacci.json"))?;
    println!("{}", verify_consistency(&fib));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
