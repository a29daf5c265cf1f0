//! The classic Hankel determinants of Catalan and Motzkin numbers, computed
//! from the specialized path counts.
//!
//! Run with `cargo run --example hankel_classics`.

use pathdet::report::to_text;
use pathdet::verify::classic_suite;

fn main() -> pathdet::Result<()> {
    let records = classic_suite(12)?;
    print!("{}", to_text(&records));
    let all_ok = records.iter().all(|r| r.is_match);
    println!("\n{} checks, all match: {all_ok}", records.len());
    Ok(())
}
