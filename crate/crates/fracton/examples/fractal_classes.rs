//! Enumerate fractal classes and check the second-member theorem.
//!
//! Every filling factor belongs to the class {2k+1 ± (h−1), k = 0, 1, …}
//! of its label h. For a Farey fraction f in (0, 1) the class opens with
//! (f, h) itself, so the label can be read off as the second member.
//!
//! ```bash
//! cargo run --example fractal_classes
//! ```

use fracton::spectrum::{check_second_member_theorem, classify_fraction, FractalClass};
use fracton::{FareySequence, Fraction};

fn main() {
    // one class per interior fraction of F_6
    let farey = FareySequence::generate(6).unwrap();
    for f in farey.interior() {
        let label = classify_fraction(f).unwrap();
        let class = FractalClass::new(label.clone());
        let members: Vec<String> = class
            .members()
            .take(8)
            .map(|m| m.to_string())
            .collect();
        println!("h = {:>4}:  {{ {}, ... }}", label.fraction().to_string(), members.join(", "));
    }

    // the degenerate end labels collapse to integer ladders
    let odd = classify_fraction(&Fraction::integer(1)).unwrap();
    let even = classify_fraction(&Fraction::integer(0)).unwrap();
    let odds: Vec<String> = FractalClass::new(odd).members().take(5).map(|m| m.to_string()).collect();
    let evens: Vec<String> = FractalClass::new(even).members().take(5).map(|m| m.to_string()).collect();
    println!("h =    1:  {{ {}, ... }}", odds.join(", "));
    println!("h =    2:  {{ {}, ... }}", evens.join(", "));

    let report = check_second_member_theorem(6).unwrap();
    println!(
        "\nsecond-member theorem on F_6: {}/{} interior fractions pass",
        report.entries.iter().filter(|e| e.holds).count(),
        report.entries.len()
    );
    assert!(report.all_hold());

    let deep = check_second_member_theorem(40).unwrap();
    println!(
        "second-member theorem on F_40: {}/{} interior fractions pass",
        deep.entries.iter().filter(|e| e.holds).count(),
        deep.entries.len()
    );
    assert!(deep.all_hold());
}
