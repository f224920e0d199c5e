//! Tabulate class members per unit interval of the filling factor.
//!
//! Columns are the labels carried by the interior of F_6 plus the
//! boundary labels 2 and 1; each row lists the one member of every class
//! inside that unit interval. The first row is the Farey series itself.
//!
//! ```bash
//! cargo run --example class_table
//! ```

use fracton::spectrum::class_table;
use fracton::Fraction;

fn main() {
    let table = class_table(6, 18).unwrap();

    let mut header = vec!["interval".to_string()];
    header.extend(table.labels.iter().map(Fraction::wire));
    let mut rows = vec![header];
    for row in &table.rows {
        let mut cells = vec![row.interval_label()];
        cells.extend(row.cells.iter().map(Fraction::wire));
        rows.push(cells);
    }

    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap())
        .collect();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        println!("{}", line.join("  "));
    }

    // ascending rows alternate direction: even intervals mirror the label
    // order, odd intervals repeat it
    let first = &table.rows[0];
    assert!(first.cells.windows(2).all(|p| p[0] < p[1]));
    let second = &table.rows[1];
    assert!(second.cells.windows(2).all(|p| p[0] > p[1]));
    println!("\nrow 0 ascends left to right, row 1 descends: duality in action");
}
