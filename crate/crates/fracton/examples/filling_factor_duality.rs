//! Classify quantum Hall filling factors and pair them under duality.
//!
//! Observed fractional plateaus come in dual pairs (ν, ν̃) that share
//! mirrored labels h and 3 − h, with the self-dual line at h = 3/2.
//!
//! ```bash
//! cargo run --example filling_factor_duality
//! ```

use fracton::spectrum::{classify, dual_filling, dual_label, FillingFactor};
use fracton::Fraction;

fn main() {
    let plateaus = [
        (1, 3),
        (2, 3),
        (1, 5),
        (2, 5),
        (2, 7),
        (2, 9),
        (3, 7),
        (4, 9),
        (5, 3),
        (1, 2),
    ];

    println!("{:>6}  {:>6}  {:>6}  {:>6}", "nu", "h", "dual", "dual h");
    for (p, q) in plateaus {
        let nu = FillingFactor::new(Fraction::new(p, q).unwrap()).unwrap();
        let label = classify(&nu);
        let partner = dual_filling(&nu);
        let partner_label = classify(&partner);
        println!(
            "{:>6}  {:>6}  {:>6}  {:>6}",
            nu.fraction().to_string(),
            label.fraction().to_string(),
            partner.fraction().to_string(),
            partner_label.fraction().to_string(),
        );
        // the two labels always mirror: h + dual h = 3
        assert_eq!(dual_label(&label), partner_label);
        // and reflecting twice returns the original filling factor
        assert_eq!(dual_filling(&partner), nu);
    }

    let half = FillingFactor::new(Fraction::new(1, 2).unwrap()).unwrap();
    println!(
        "\nnu = 1/2 is self-dual: h = {} and dual(1/2) = {}",
        classify(&half).fraction(),
        dual_filling(&half).fraction(),
    );
}
