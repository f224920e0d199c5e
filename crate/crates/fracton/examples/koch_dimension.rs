//! Estimate the dimension of generated fractal curves by divider walks.
//!
//! ```bash
//! cargo run --example koch_dimension
//! ```

use fracton::curve::{
    caliper_length, estimate_dimension, generate_koch, geometric_resolutions, koch_ratio,
};

fn main() {
    let classic = 4.0_f64.ln() / 3.0_f64.ln();

    // a straight segment is the level-0 curve of any target dimension
    let segment = generate_koch(0, classic).unwrap();
    let est = estimate_dimension(&segment, &geometric_resolutions(0.3, 5)).unwrap();
    println!(
        "straight segment:    h = {:.6} +/- {:.2e}",
        est.dimension, est.std_error
    );

    // divider lengths grow as the opening shrinks
    let koch = generate_koch(7, classic).unwrap();
    println!("\nclassic Koch, level 7 ({} points):", koch.points().len());
    for resolution in geometric_resolutions(1.0 / 3.0, 5) {
        let walk = caliper_length(&koch, resolution).unwrap();
        println!(
            "  R = {resolution:<12.8} steps = {:<6} L = {:.8}",
            walk.steps, walk.length
        );
    }
    let est = estimate_dimension(&koch, &geometric_resolutions(1.0 / 3.0, 5)).unwrap();
    println!(
        "  estimate h = {:.6} +/- {:.2e}   (ln4/ln3 = {:.6})",
        est.dimension, est.std_error, classic
    );
    assert!((est.dimension - classic).abs() / classic < 0.02);

    // generalized generators hit any target dimension in (1, 2)
    println!("\ngeneralized Koch at level 7:");
    for target in [1.3, 1.5, 1.8] {
        let curve = generate_koch(7, target).unwrap();
        let grid = geometric_resolutions(koch_ratio(target).unwrap(), 5);
        let est = estimate_dimension(&curve, &grid).unwrap();
        println!(
            "  target {target:.2}: segment ratio {:.6}, estimated h = {:.6}",
            koch_ratio(target).unwrap(),
            est.dimension
        );
        assert!((est.dimension - target).abs() / target < 0.03);
    }
}
