//! Entropy per state across the occupation range, and the equilibrium
//! consistency between the entropy and the distribution function.
//!
//! ```bash
//! cargo run --example fractal_entropy
//! ```

use fracton::entropy::{entropy_per_state, equilibrium_residual};
use fracton::statistics::{max_occupation, occupation};

fn main() {
    // S(n) for a few labels, sampled over each physical range
    for h in [1.0, 1.5, 2.0] {
        let top = if h < 2.0 { max_occupation(h).unwrap() } else { 3.0 };
        println!("h = {h}:");
        for i in [1, 5, 10, 15, 19] {
            let n = top * i as f64 / 20.0;
            let s = entropy_per_state(h, n, 1.0).unwrap();
            println!("  n = {n:<8.4} S = {s:.10}");
        }
    }

    // endpoints: the Fermi state at half filling and the Bose state at
    // unit occupation carry the textbook values
    let fermi = entropy_per_state(1.0, 0.5, 1.0).unwrap();
    let bose = entropy_per_state(2.0, 1.0, 1.0).unwrap();
    println!("\nS(h=1, n=1/2) = {fermi:.12}  (ln 2 = {:.12})", 2.0_f64.ln());
    println!("S(h=2, n=1)   = {bose:.12}  (2 ln 2 = {:.12})", 2.0 * 2.0_f64.ln());

    // entropy vanishes at the exclusion bound
    let bound = max_occupation(1.5).unwrap();
    let at_bound = entropy_per_state(1.5, bound, 1.0).unwrap();
    println!("S(h=3/2, n=max) = {at_bound}");

    // the equilibrium occupation maximizes S - n ln xi: the derivative
    // matches ln xi to finite-difference accuracy
    println!("\nequilibrium residual |dS/dn - ln xi|:");
    for (h, xi) in [(1.0, 3.0), (1.5, 1.0), (1.75, 0.4), (2.0, 2.0)] {
        let n = occupation(h, xi).unwrap();
        let residual = equilibrium_residual(h, xi, 1.0).unwrap();
        println!("  h={h:<5} xi={xi:<4} n={n:.6}  residual={residual:.2e}");
        assert!(residual < 1e-6);
    }
}
