//! The integer corollary families: ballot-number, trinomial and central
//! binomial Hankel determinants, all with bigint fraction-free elimination.
//!
//! Run with `cargo run --example integer_corollaries`.

use pathdet::families::FamilyId;
use pathdet::verify::{verify_grid, GridSpec};

fn main() -> pathdet::Result<()> {
    let families = vec![
        FamilyId::Cor12,
        FamilyId::Cor13,
        FamilyId::Cor14,
        FamilyId::Cor15,
        FamilyId::Cor16,
        FamilyId::Cor17,
        FamilyId::Cor18,
        FamilyId::Cor19,
        FamilyId::Cor20,
        FamilyId::Thm21,
        FamilyId::Cor22,
        FamilyId::Cor23,
        FamilyId::Cor25,
        FamilyId::Cor26,
    ];
    let g = GridSpec::symbolic(families, 16, 4);
    let records = verify_grid(&g)?;
    let mut by_family: Vec<(String, usize)> = Vec::new();
    for r in &records {
        assert!(r.is_match, "{r:?}");
        match by_family.last_mut() {
            Some((f, c)) if *f == r.family => *c += 1,
            _ => by_family.push((r.family.clone(), 1)),
        }
    }
    println!("family  points  (all exact)");
    for (f, c) in by_family {
        println!("{f:<7} {c:>6}");
    }
    println!("\nsample: cor19 at k=0 is the central binomial Hankel determinant 2^(n-1):");
    for r in records
        .iter()
        .filter(|r| r.family == "cor19" && r.k == 0 && r.n <= 8)
    {
        println!("  n={}: {}", r.n, r.lhs);
    }
    Ok(())
}
