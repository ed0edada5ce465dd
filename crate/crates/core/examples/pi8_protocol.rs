// The direct phase-gate protocol: tabulated U(a, alpha) against the
// evaluation from twisted coefficients and Ising R-symbols.

use std::f64::consts::PI;

use anyon_interferometry::gates::{protocol_check, protocol_unitary, ProtocolOutcome};
use anyon_interferometry::Result;

pub fn run_example() -> Result<()> {
    println!("a    alpha  table/pi  evaluated/pi  residual");
    for outcome in ProtocolOutcome::all() {
        let table = protocol_unitary(outcome)[(1, 1)].arg() / PI;
        let check = protocol_check(outcome);
        println!(
            "{:<4} {:<6} {table:+.4}   {:+.4}       {:.1e}",
            outcome.a.name(),
            outcome.alpha.name(),
            check.ratio().arg() / PI,
            check.residual()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
