//! Path generating functions from first principles: the dynamic program, the
//! closed binomial sums, exhaustive enumeration, and the three classic
//! specializations.
//!
//! Run with `cargo run --example pgf_basics`.

use pathdet::paths::{enumerate_paths, pgf_closed, pgf_dp, pgf_special_int, PGFQuery, SpecKind};

fn main() -> pathdet::Result<()> {
    println!(
        "three-step paths: up (1,1) weighs 1, level (1,0) weighs x+y, down (1,-1) weighs xy\n"
    );

    for (n, l, k, restricted) in [
        (2, 0, 0, false),
        (2, 0, 0, true),
        (3, 0, 1, true),
        (4, 0, 0, true),
    ] {
        let q = PGFQuery::new(n, l, k, restricted);
        let p = pgf_dp(&q)?;
        let tag = if restricted { "P+" } else { "P " };
        println!("{tag}_{n}({l},{k}) = {p}");
        assert_eq!(p, pgf_closed(&q)?);
    }

    println!("\npaths behind P+_2(0,0):");
    let q = PGFQuery::new(2, 0, 0, true);
    for path in enumerate_paths(&q)? {
        println!("  {:?} -> weight {}", path.steps, path.weight());
    }

    println!("\nspecializations of P+_n(0,0):");
    println!("  n | catalan  motzkin  central");
    for n in 0..=8usize {
        let q = PGFQuery::new(n, 0, 0, true);
        println!(
            "  {n} | {:>7}  {:>7}  {:>7}",
            pgf_special_int(SpecKind::Catalan, &q)?,
            pgf_special_int(SpecKind::Motzkin, &q)?,
            pgf_special_int(SpecKind::Central, &q)?,
        );
    }
    println!("\n(catalan column: C_(n/2) when n is even; motzkin column: the Motzkin numbers;");
    println!(" central column: the shifted Catalan numbers C_(n+1))");
    Ok(())
}
