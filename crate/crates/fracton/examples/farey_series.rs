//! Generate Farey series and verify their neighbor structure.
//!
//! ```bash
//! cargo run --example farey_series
//! ```

use fracton::farey::{self, FareySequence};
use fracton::Fraction;

fn main() {
    let seq = FareySequence::generate(6).unwrap();
    let rendered: Vec<String> = seq.elements().iter().map(Fraction::wire).collect();
    println!("F_6  ({} elements): {}", seq.len(), rendered.join(" "));

    // adjacent pairs satisfy |p2 q1 - q2 p1| = 1, triples the mediant identity
    assert!(farey::check_unimodularity(seq.elements()).is_none());
    assert!(farey::check_mediant_identity(seq.elements()).is_none());
    println!("unimodularity and the mediant identity hold on F_6");

    // the mediant of adjacent elements is the unique smallest-denominator
    // fraction between them, certified by exhaustive scan
    let a = Fraction::new(1, 3).unwrap();
    let b = Fraction::new(2, 5).unwrap();
    let cert = farey::certify_mediant_minimal(&seq, &a, &b).unwrap();
    println!(
        "between {a} and {b}: mediant {} is minimal (checked all denominators up to {})",
        cert.mediant,
        a.denom() + b.denom(),
    );
    assert!(cert.holds());

    // a tampered list is flagged with the exact offending pair
    let tampered = [
        Fraction::zero(),
        Fraction::new(1, 3).unwrap(),
        Fraction::one(),
    ];
    let violation = farey::check_unimodularity(&tampered).unwrap();
    println!(
        "tampered list rejected at index {}: |det({}, {})| = {}",
        violation.index, violation.left, violation.right, violation.determinant
    );

    for order in [10, 50, 100] {
        let seq = FareySequence::generate(order).unwrap();
        println!("F_{order} has {} elements", seq.len());
    }
}
