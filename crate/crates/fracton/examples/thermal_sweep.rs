//! Sweep temperature at a fixed energy offset and track occupation and
//! entropy for Fermi, self-dual, and Bose labels.
//!
//! ```bash
//! cargo run --example thermal_sweep
//! ```

use fracton::entropy::entropy_per_state;
use fracton::statistics::{boltzmann_weight, occupation, solve_point, ThermoInput};
use fracton::Error;

fn main() {
    // a state 0.05 above the chemical potential, dimensionless units (K = 1)
    let gap = 0.05;

    println!("state at energy mu + {gap}:");
    println!(
        "{:>6} {:>10} | {:>10} {:>10} | {:>10} {:>10} | {:>10} {:>10}",
        "T", "xi", "n(h=1)", "S(h=1)", "n(h=3/2)", "S(h=3/2)", "n(h=2)", "S(h=2)"
    );
    for t in [0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0] {
        let xi = boltzmann_weight(&ThermoInput::new(gap, 0.0, t)).unwrap();
        let mut cells = vec![format!("{t:>6} {xi:>10.4}")];
        for h in [1.0, 1.5, 2.0] {
            let n = occupation(h, xi).unwrap();
            let s = entropy_per_state(h, n, 1.0).unwrap();
            cells.push(format!("{n:>10.5} {s:>10.5}"));
        }
        println!("{}", cells.join(" | "));
    }
    println!("heating drives xi down toward 1, so the Bose occupation grows");
    println!("toward the condensation boundary while Fermi tends to half filling.");

    // below the chemical potential xi < 1: the Bose label has no solution
    // at any temperature, and cooling saturates the others
    let gap = -0.05;
    println!("\nstate at energy mu - 0.05:");
    for t in [0.02, 0.2, 2.0] {
        let xi = boltzmann_weight(&ThermoInput::new(gap, 0.0, t)).unwrap();
        let fermi = occupation(1.0, xi).unwrap();
        let selfdual = occupation(1.5, xi).unwrap();
        match solve_point(2.0, xi) {
            Err(Error::CondensationRegion) => println!(
                "  T={t:<5} xi={xi:.4}  n(h=1)={fermi:.5}  n(h=3/2)={selfdual:.5}  h=2: condensation region"
            ),
            other => panic!("expected condensation below mu, got {other:?}"),
        }
    }
    println!("cooling freezes the Fermi branch toward n = 1 and pins the");
    println!("self-dual branch at its exclusion bound n = 2.");
}
