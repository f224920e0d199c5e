//! Solve the fracton occupation distribution across labels and weights.
//!
//! ```bash
//! cargo run --example fracton_occupation
//! ```

use fracton::statistics::{closed_form_y, max_occupation, solve_point, solve_y};
use fracton::Error;

fn main() {
    // occupation against the Boltzmann weight for a spread of labels
    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "xi", "h=1 (FD)", "h=5/4", "h=3/2", "h=7/4", "h=2 (BE)"
    );
    for exp in -2..=3 {
        let xi = 10.0_f64.powi(exp);
        let mut row = format!("{xi:>8}");
        for h in [1.0, 1.25, 1.5, 1.75, 2.0] {
            match solve_point(h, xi) {
                Ok(p) => row.push_str(&format!(" {:>12.8}", p.n)),
                Err(Error::CondensationRegion) => row.push_str(&format!(" {:>12}", "condensed")),
                Err(e) => panic!("unexpected error: {e}"),
            }
        }
        println!("{row}");
    }

    // the solver agrees with the three closed forms
    println!("\nclosed-form spot checks:");
    for (h, xi) in [(1.0, 3.0), (1.5, 1.0), (2.0, 3.0)] {
        let numeric = solve_y(h, xi).unwrap();
        let analytic = closed_form_y(h, xi).unwrap();
        println!("  h={h:<4} xi={xi}: Y numeric {numeric:.12} vs closed {analytic:.12}");
        assert!((numeric - analytic).abs() < 1e-12 * analytic);
    }

    // exclusion bound: occupation saturates at 1/(2-h) as xi -> 0
    println!("\nexclusion bounds (n at xi = 0):");
    for h in [1.0, 1.25, 1.5, 1.75] {
        let bound = max_occupation(h).unwrap();
        let saturated = solve_point(h, 0.0).unwrap().n;
        println!("  h={h:<5} max n = {bound}");
        assert_eq!(saturated, bound);
    }

    // large-weight asymptotics: Y - xi approaches the dual label 3 - h
    println!("\nY - xi at xi = 1e8 (approaches 3 - h):");
    for h in [1.0, 1.5, 2.0] {
        let y = solve_y(h, 1e8).unwrap();
        println!("  h={h:<4} Y - xi = {:.9}", y - 1e8);
    }
}
