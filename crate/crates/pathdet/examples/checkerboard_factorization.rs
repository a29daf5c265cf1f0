//! Checkerboard matrices: when one parity class of i+j vanishes, the
//! determinant factors into the two parity submatrices. At the catalan
//! specialization the restricted Hankel matrices are exactly of this shape,
//! which splits them into a product of two ballot-number determinants.
//!
//! Run with `cargo run --example checkerboard_factorization`.

use pathdet::families::{build_matrix, BuiltMatrix, FamilyId, MatrixFamily};
use pathdet::matrix::{checkerboard_split, SupportParity};
use pathdet::rings::{GaussInt, Integer, Ring};

fn main() -> pathdet::Result<()> {
    // thm1 matrix at x = i, y = -i has integer entries and even support
    let n = 6;
    let k = 2i64;
    let BuiltMatrix::Poly(m) = build_matrix(&MatrixFamily::new(FamilyId::Thm1, n, k))? else {
        unreachable!()
    };
    let x = GaussInt::i();
    let y = GaussInt::new(0, -1);
    let t = GaussInt::one();
    let spec = m.map(|p| {
        let v = p.eval_in(&x, &y, &t);
        assert_eq!(v.im, Integer::from(0));
        v.re
    });
    println!("specialized matrix (n = {n}, k = {k}):\n{spec}");

    let (a, b, sign) = checkerboard_split(&spec, SupportParity::EvenSupport)?;
    println!("even-index block:\n{a}");
    println!("odd-index block:\n{b}");
    let (da, db, d) = (a.det_bareiss(), b.det_bareiss(), spec.det_bareiss());
    println!("det = {d}, split product = {sign} * {da} * {db}");
    assert_eq!(d, Integer::from(sign as i64) * &da * &db);

    // the two blocks are the ballot-number corollary matrices (k' = k/2)
    let BuiltMatrix::Int(c12) =
        build_matrix(&MatrixFamily::new(FamilyId::Cor12, n.div_ceil(2), k / 2))?
    else {
        unreachable!()
    };
    let BuiltMatrix::Int(c13) = build_matrix(&MatrixFamily::new(FamilyId::Cor13, n / 2, k / 2))?
    else {
        unreachable!()
    };
    assert_eq!(a, c12);
    assert_eq!(b, c13);
    println!(
        "blocks equal the prefactored binomial families with k' = {}",
        k / 2
    );

    // odd support: the determinant of any odd-order instance vanishes
    let odd = pathdet::matrix::Matrix::from_fn(3, 3, |i, j| {
        if (i + j) % 2 == 0 {
            Integer::from(0)
        } else {
            Integer::from((i + 2 * j + 1) as i64)
        }
    });
    let (_, _, sign) = checkerboard_split(&odd, SupportParity::OddSupport)?;
    println!(
        "\nodd-support 3x3: split sign = {sign}, det = {}",
        odd.det_bareiss()
    );
    Ok(())
}
