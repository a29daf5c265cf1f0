//! Scan the conjectured binomial Hankel family det(binom(2i+2j+3, i+j+k+1)):
//! its magnitudes follow from the checkerboard factorization, but the signs
//! are only conjectured. Any mismatch is printed with the full matrix.
//!
//! Run with `cargo run --example conjecture_scan`.

use pathdet::verify::scan_conjecture24;

fn main() -> pathdet::Result<()> {
    let outcome = scan_conjecture24(20, 5)?;
    let mut by_case: std::collections::BTreeMap<String, usize> = Default::default();
    for r in &outcome.records {
        *by_case.entry(r.case_label.clone()).or_default() += 1;
    }
    println!("case branch hits over k <= 5, n <= 20:");
    for (label, count) in &by_case {
        println!("  {label:<22} {count}");
    }
    if outcome.mismatches.is_empty() {
        println!(
            "\nscan clean: {} points, 0 mismatches",
            outcome.records.len()
        );
    } else {
        for m in &outcome.mismatches {
            println!(
                "\nMISMATCH {} n={} k={}: det = {}, predicted = {}\n{}",
                m.family, m.n, m.k, m.lhs, m.rhs, m.matrix
            );
        }
    }
    Ok(())
}
