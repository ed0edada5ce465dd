// Magic states from twisted interferometry applied to H|0>.

use anyon_interferometry::gates::{magic_state, synthesize_magic_state, QubitCharge, TwistedQubitChannel};
use anyon_interferometry::linalg::canonical_phase;
use anyon_interferometry::{Result, C64};

pub fn run_example() -> Result<()> {
    let channel = TwistedQubitChannel::ising();
    for a in QubitCharge::BOTH {
        let target = magic_state(a);
        let made = synthesize_magic_state(&channel, a);
        let made_canonical = canonical_phase(&made.amplitudes(), 1e-12);
        println!("a = {a}: target {}", show(&target.amplitudes()));
        println!(
            "        made   {}  fidelity {:.15}",
            show(&made_canonical),
            target.fidelity(&made)
        );
    }
    Ok(())
}

fn show(v: &[C64]) -> String {
    let parts: Vec<String> = v.iter().map(|z| format!("{z:.4}")).collect();
    format!("({})", parts.join(", "))
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
