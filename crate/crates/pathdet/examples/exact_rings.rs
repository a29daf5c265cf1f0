//! The exact arithmetic kernel: sparse polynomials with exact division, and
//! the Gaussian/Eisenstein integer rings behind the specializations.
//!
//! Run with `cargo run --example exact_rings`.

use pathdet::mpoly::MPoly;
use pathdet::rings::{EisenInt, GaussInt, Ring};

fn main() -> pathdet::Result<()> {
    let x = MPoly::var_x();
    let y = MPoly::var_y();

    println!("polynomial arithmetic:");
    let s = x.add(&y);
    println!("  (x + y)^2        = {}", s.mul(&s));
    let num = MPoly::term(1, 6, 0, 0).add(&MPoly::term(1, 0, 6, 0));
    let den = MPoly::term(1, 2, 0, 0).add(&MPoly::term(1, 0, 2, 0));
    println!("  (x^6+y^6)/(x^2+y^2) = {}", num.exact_div(&den)?);
    let bad = MPoly::term(1, 2, 0, 0).add(&MPoly::term(1, 0, 2, 0));
    println!("  (x^2+y^2)/(x+y)  -> {:?}", bad.exact_div(&s).unwrap_err());

    println!("\ngaussian integers (catalan point x = i, y = -i):");
    let i = GaussInt::i();
    println!("  i * i = {}", i.mul(&i));
    println!(
        "  (x+y) at the point = {}",
        s.eval_in(&i, &GaussInt::new(0, -1), &GaussInt::one())
    );

    println!("\neisenstein integers, basis (1, w) with w^2 = w - 1 (motzkin point):");
    let w = EisenInt::omega();
    println!("  w^2 = {}", w.mul(&w));
    println!("  w^3 = {}", w.mul(&w).mul(&w));
    println!("  w * (1 - w) = {}", w.mul(&EisenInt::new(1, -1)));
    let xy = x.mul(&y);
    println!(
        "  (x*y) at the point = {}",
        xy.eval_in(&w, &EisenInt::new(1, -1), &EisenInt::one())
    );
    Ok(())
}
