// Twisted interferometry on the Ising qubit: closed-form statistics, the
// Kraus operators read off O_t, and seeded sampling.

use anyon_interferometry::gates::{
    sample_twisted, twisted_measure, QubitCharge, QubitDensity, QubitState, TwistedQubitChannel,
};
use anyon_interferometry::{Result, C64};

pub fn run_example() -> Result<()> {
    let channel = TwistedQubitChannel::ising();
    println!("POVM residual {:.1e}", channel.povm_residual());

    let rho = QubitState::new(C64::new(0.6, 0.0), C64::new(0.0, 0.8)).density();
    for a in QubitCharge::BOTH {
        let (p, post) = twisted_measure(&rho, a)?;
        let (p_kraus, post_kraus) = channel.measure(&rho, a)?;
        println!("a = {a}: Pr = {p:.6} (Kraus {p_kraus:.6})");
        println!(
            "  post rho_01 = {:.6}, |diff| = {:.1e}",
            post.rho01(),
            (post.0 - post_kraus.0).norm()
        );
    }

    let mixed = QubitDensity::maximally_mixed();
    let n_i = (0..1000)
        .filter(|&s| matches!(sample_twisted(&mixed, s), Ok((QubitCharge::I, _))))
        .count();
    println!("maximally mixed: {n_i}/1000 draws gave I");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
