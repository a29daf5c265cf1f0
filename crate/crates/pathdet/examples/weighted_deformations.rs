//! The t-deformed families: determinants with a third variable t in the
//! entries, their closed forms, and the collapse back to the plain Hankel
//! families at t = 1.
//!
//! Run with `cargo run --example weighted_deformations`.

use pathdet::closedform::rhs;
use pathdet::families::{FamilyId, MatrixFamily};
use pathdet::rings::{Integer, RingValue};
use pathdet::verify::{verify_grid, GridSpec};

fn main() -> pathdet::Result<()> {
    let mut g = GridSpec::symbolic(
        vec![
            FamilyId::Thm8,
            FamilyId::Thm9,
            FamilyId::Thm10,
            FamilyId::Thm11,
        ],
        6,
        2,
    );
    g.k_min = -1; // the difference families also cover k = -1
    let records = verify_grid(&g)?;
    for r in records.iter().filter(|r| r.n == 4 && r.k <= 1) {
        let status = if r.is_match { "ok" } else { "FAIL" };
        println!("{status} {} n={} k={}: {}", r.family, r.n, r.k, r.rhs);
    }
    assert!(records.iter().all(|r| r.is_match));
    println!("\nall {} deformed grid points match", records.len());

    // at t = 1 the deformations collapse onto the plain families
    println!("\ncollapse at t = 1 (n = 6, k = 1):");
    let one = Integer::from(1);
    let poly = |id: FamilyId| match rhs(&MatrixFamily::new(id, 6, 1)).unwrap().value {
        RingValue::Poly(p) => p,
        _ => unreachable!(),
    };
    println!("  thm8  rhs|t=1  = {}", poly(FamilyId::Thm8).eval_t(&one));
    println!("  thm1  rhs      = {}", poly(FamilyId::Thm1));
    println!("  thm10 rhs|t=1  = {}", poly(FamilyId::Thm10).eval_t(&one));
    println!(
        "  2 * thm3 rhs   = {}",
        poly(FamilyId::Thm3).scale(&Integer::from(2))
    );
    Ok(())
}
