//! Builders for every determinant family in the catalog.
//!
//! A family id plus (n, k) fully determines a matrix. Families thm1..thm11
//! and the shifted/sum forms have polynomial entries built from path
//! generating functions; the corollary families have integer entries
//! (binomials, trinomial sums, and exactly-divided rational prefactors);
//! cor26 keeps t symbolic with integer binomial coefficients.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as NumInteger;
use num_traits::Zero;

use crate::binomial::{binom, trinom};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::mpoly::MPoly;
use crate::paths::{pgf_closed, pgf_unrestricted_zero, PGFQuery};
use crate::rings::Integer;

/// Identifier of one determinant family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Shifted42,
    Shifted43,
    SumForm44,
    SumForm45,
    Thm8,
    Thm9,
    Thm10,
    Thm11,
    Cor12,
    Cor13,
    Cor14,
    Cor15,
    Cor16,
    Cor17,
    Cor18,
    Cor19,
    Cor20,
    Thm21,
    Cor22,
    Cor23,
    Conj24,
    Cor25,
    Cor26,
}

impl FamilyId {
    pub const ALL: [FamilyId; 27] = [
        FamilyId::Thm1,
        FamilyId::Thm2,
        FamilyId::Thm3,
        FamilyId::Thm4,
        FamilyId::Shifted42,
        FamilyId::Shifted43,
        FamilyId::SumForm44,
        FamilyId::SumForm45,
        FamilyId::Thm8,
        FamilyId::Thm9,
        FamilyId::Thm10,
        FamilyId::Thm11,
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
        FamilyId::Conj24,
        FamilyId::Cor25,
        FamilyId::Cor26,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            FamilyId::Thm1 => "thm1",
            FamilyId::Thm2 => "thm2",
            FamilyId::Thm3 => "thm3",
            FamilyId::Thm4 => "thm4",
            FamilyId::Shifted42 => "shifted42",
            FamilyId::Shifted43 => "shifted43",
            FamilyId::SumForm44 => "sumform44",
            FamilyId::SumForm45 => "sumform45",
            FamilyId::Thm8 => "thm8",
            FamilyId::Thm9 => "thm9",
            FamilyId::Thm10 => "thm10",
            FamilyId::Thm11 => "thm11",
            FamilyId::Cor12 => "cor12",
            FamilyId::Cor13 => "cor13",
            FamilyId::Cor14 => "cor14",
            FamilyId::Cor15 => "cor15",
            FamilyId::Cor16 => "cor16",
            FamilyId::Cor17 => "cor17",
            FamilyId::Cor18 => "cor18",
            FamilyId::Cor19 => "cor19",
            FamilyId::Cor20 => "cor20",
            FamilyId::Thm21 => "thm21",
            FamilyId::Cor22 => "cor22",
            FamilyId::Cor23 => "cor23",
            FamilyId::Conj24 => "conj24",
            FamilyId::Cor25 => "cor25",
            FamilyId::Cor26 => "cor26",
        }
    }

    /// Families whose matrices carry polynomial entries.
    pub fn is_symbolic(&self) -> bool {
        use FamilyId::*;
        matches!(
            self,
            Thm1 | Thm2
                | Thm3
                | Thm4
                | Shifted42
                | Shifted43
                | SumForm44
                | SumForm45
                | Thm8
                | Thm9
                | Thm10
                | Thm11
                | Cor26
        )
    }

    /// Families whose entries involve the deformation variable t.
    pub fn has_t(&self) -> bool {
        use FamilyId::*;
        matches!(self, Thm8 | Thm9 | Thm10 | Thm11 | Cor26)
    }

    /// Unproven families report mismatches instead of failing hard.
    pub fn is_conjecture(&self) -> bool {
        matches!(self, FamilyId::Conj24)
    }

    /// Smallest admissible k.
    pub fn k_min(&self) -> i64 {
        match self {
            FamilyId::Thm8 | FamilyId::Thm9 => -1,
            FamilyId::Cor15 | FamilyId::Cor18 => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        FamilyId::ALL
            .iter()
            .copied()
            .find(|f| f.token() == lower)
            .ok_or_else(|| Error::BadParams(format!("unknown family '{s}'")))
    }
}

/// A fully parameterized family instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatrixFamily {
    pub id: FamilyId,
    pub n: usize,
    pub k: i64,
}

impl MatrixFamily {
    pub fn new(id: FamilyId, n: usize, k: i64) -> Self {
        MatrixFamily { id, n, k }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::BadParams(format!("{}: n must be positive", self.id)));
        }
        if self.k < self.id.k_min() {
            return Err(Error::BadParams(format!(
                "{}: k = {} below the family minimum {}",
                self.id,
                self.k,
                self.id.k_min()
            )));
        }
        Ok(())
    }
}

/// A built matrix: all entries share one ring.
#[derive(Clone, Debug, PartialEq)]
pub enum BuiltMatrix {
    Poly(Matrix<MPoly>),
    Int(Matrix<Integer>),
}

impl BuiltMatrix {
    pub fn det(&self) -> crate::rings::RingValue {
        match self {
            BuiltMatrix::Poly(m) => crate::rings::RingValue::Poly(m.det_bareiss()),
            BuiltMatrix::Int(m) => crate::rings::RingValue::Int(m.det_bareiss()),
        }
    }

    pub fn n_rows(&self) -> usize {
        match self {
            BuiltMatrix::Poly(m) => m.n_rows(),
            BuiltMatrix::Int(m) => m.n_rows(),
        }
    }
}

impl fmt::Display for BuiltMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltMatrix::Poly(m) => write!(f, "{m}"),
            BuiltMatrix::Int(m) => write!(f, "{m}"),
        }
    }
}

/// Restricted generating function P+_n(l,k) for matrix entries.
fn pp(n: usize, l: i64, k: i64) -> MPoly {
    pgf_closed(&PGFQuery::new(n, l, k, true)).expect("builder queries have l >= 0")
}

/// Unrestricted P_n(l,k) via the shift to start height zero.
fn pu(n: usize, l: i64, k: i64) -> MPoly {
    pgf_unrestricted_zero(n, k - l)
}

/// t * (xy)^e as a single term.
fn t_xy(e: u32) -> MPoly {
    MPoly::term(1, e, e, 1)
}

/// Exactly scaled integer entry (p/q) * b; the divisibility is asserted.
fn scaled(p: i64, q: i64, b: Integer, ctx: &MatrixFamily) -> Result<Integer> {
    let num = Integer::from(p) * b;
    let (quo, rem) = num.div_rem(&Integer::from(q));
    if !rem.is_zero() {
        return Err(Error::NonIntegralEntry(format!(
            "{} n={} k={}: {p}/{q} does not divide exactly",
            ctx.id, ctx.n, ctx.k
        )));
    }
    Ok(quo)
}

/// Build the matrix of a family instance.
pub fn build_matrix(f: &MatrixFamily) -> Result<BuiltMatrix> {
    f.validate()?;
    let n = f.n;
    let k = f.k;
    let m = |i: usize, j: usize| (i + j) as i64;
    use FamilyId::*;
    let built = match f.id {
        Thm1 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| pp(i + j, 0, k))),
        Thm2 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| pp(i + j + 1, 0, k))),
        Thm3 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| pu(i + j, 0, k))),
        Thm4 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| pu(i + j + 1, 0, k))),
        Shifted42 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| pp(j, i as i64, k))),
        Shifted43 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| pp(j + 1, i as i64, k))),
        SumForm44 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| {
            pu(j, i as i64, k).add(&MPoly::xy_pow(i as u32).mul(&pu(j, -(i as i64), k)))
        })),
        SumForm45 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| {
            pu(j + 1, i as i64, k).add(&MPoly::xy_pow(i as u32).mul(&pu(j + 1, -(i as i64), k)))
        })),
        Thm8 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| {
            pu(j, i as i64, k).sub(&t_xy(i as u32 + 1).mul(&pu(j, -(i as i64) - 2, k)))
        })),
        Thm9 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| {
            pu(j + 1, i as i64, k).sub(&t_xy(i as u32 + 1).mul(&pu(j + 1, -(i as i64) - 2, k)))
        })),
        Thm10 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| {
            pu(j, i as i64, k).add(&t_xy(i as u32).mul(&pu(j, -(i as i64), k)))
        })),
        Thm11 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| {
            pu(j + 1, i as i64, k).add(&t_xy(i as u32).mul(&pu(j + 1, -(i as i64), k)))
        })),
        Cor26 => BuiltMatrix::Poly(Matrix::from_fn(n, n, |i, j| {
            let (i, j) = (i as i64, j as i64);
            MPoly::constant(binom(2 * j, j + k - i))
                .sub(&MPoly::var_t().scale(&binom(2 * j, j + k + i + 2)))
        })),
        Cor12 => BuiltMatrix::Int(int_matrix(n, |i, j| {
            scaled(
                2 * k + 1,
                m(i, j) + k + 1,
                binom(2 * m(i, j), m(i, j) + k),
                f,
            )
        })?),
        Cor13 => BuiltMatrix::Int(int_matrix(n, |i, j| {
            scaled(
                2 * k + 1,
                m(i, j) + k + 2,
                binom(2 * m(i, j) + 2, m(i, j) + k + 1),
                f,
            )
        })?),
        Cor14 => BuiltMatrix::Int(int_matrix(n, |i, j| Ok(trinom_diff_sum(m(i, j), k)))?),
        Cor15 => BuiltMatrix::Int(int_matrix(n, |i, j| {
            scaled(
                2 * k,
                m(i, j) + k + 1,
                binom(2 * m(i, j) + 1, m(i, j) + k),
                f,
            )
        })?),
        Cor16 => BuiltMatrix::Int(int_matrix(n, |i, j| {
            scaled(
                2 * k + 1,
                m(i, j) + k + 3,
                binom(2 * m(i, j) + 4, m(i, j) + k + 2),
                f,
            )
        })?),
        Cor17 => BuiltMatrix::Int(int_matrix(n, |i, j| Ok(trinom_diff_sum(m(i, j) + 1, k)))?),
        Cor18 => BuiltMatrix::Int(int_matrix(n, |i, j| {
            scaled(
                2 * k,
                m(i, j) + k + 2,
                binom(2 * m(i, j) + 3, m(i, j) + k + 1),
                f,
            )
        })?),
        Cor19 => BuiltMatrix::Int(int_matrix(n, |i, j| Ok(binom(2 * m(i, j), m(i, j) + k)))?),
        Cor20 => BuiltMatrix::Int(int_matrix(n, |i, j| {
            Ok(binom(2 * m(i, j) + 2, m(i, j) + k + 1))
        })?),
        Thm21 => BuiltMatrix::Int(int_matrix(n, |i, j| {
            Ok(binom(2 * m(i, j) + 1, m(i, j) + k))
        })?),
        Cor22 => BuiltMatrix::Int(int_matrix(n, |i, j| Ok(trinom_sum(m(i, j), k)))?),
        Cor23 => BuiltMatrix::Int(int_matrix(n, |i, j| {
            Ok(binom(2 * m(i, j) + 4, m(i, j) + k + 2))
        })?),
        Conj24 => BuiltMatrix::Int(int_matrix(n, |i, j| {
            Ok(binom(2 * m(i, j) + 3, m(i, j) + k + 1))
        })?),
        Cor25 => BuiltMatrix::Int(int_matrix(n, |i, j| Ok(trinom_sum(m(i, j) + 1, k)))?),
    };
    Ok(built)
}

fn int_matrix(n: usize, f: impl Fn(usize, usize) -> Result<Integer>) -> Result<Matrix<Integer>> {
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(f(i, j)?);
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows))
}

fn trinom_sum(n: i64, k: i64) -> Integer {
    let mut acc = Integer::zero();
    for l in 0..=n.max(0) {
        acc += trinom(n, l, l + k);
    }
    acc
}

fn trinom_diff_sum(n: i64, k: i64) -> Integer {
    let mut acc = Integer::zero();
    for l in 0..=n.max(0) {
        acc += trinom(n, l, l + k) - trinom(n, l, l + k + 2);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::pgf_dp;

    #[test]
    fn thm1_small_instance() {
        // entries are restricted path counts: [[0, 1], [1, 2x+2y]] at n=2, k=1
        let m = build_matrix(&MatrixFamily::new(FamilyId::Thm1, 2, 1)).unwrap();
        let BuiltMatrix::Poly(m) = m else { panic!() };
        assert_eq!(m.get(0, 0).to_string(), "0");
        assert_eq!(m.get(0, 1).to_string(), "1");
        assert_eq!(m.get(1, 0).to_string(), "1");
        assert_eq!(m.get(1, 1).to_string(), "2*x + 2*y");
        assert_eq!(m.det_bareiss().to_string(), "-1");
    }

    #[test]
    fn cor19_cor12_small_instances() {
        let m = build_matrix(&MatrixFamily::new(FamilyId::Cor19, 2, 1)).unwrap();
        let BuiltMatrix::Int(m) = m else { panic!() };
        assert_eq!(
            (
                m.get(0, 0).clone(),
                m.get(0, 1).clone(),
                m.get(1, 1).clone()
            ),
            (Integer::from(0), Integer::from(1), Integer::from(4))
        );
        let m = build_matrix(&MatrixFamily::new(FamilyId::Cor12, 2, 1)).unwrap();
        let BuiltMatrix::Int(m) = m else { panic!() };
        assert_eq!(
            (
                m.get(0, 0).clone(),
                m.get(0, 1).clone(),
                m.get(1, 1).clone()
            ),
            (Integer::from(0), Integer::from(1), Integer::from(3))
        );
        assert_eq!(m.det_bareiss(), Integer::from(-1));
    }

    #[test]
    fn restricted_entries_match_dp() {
        for k in 0..3 {
            let fam = MatrixFamily::new(FamilyId::Thm1, 4, k);
            let BuiltMatrix::Poly(m) = build_matrix(&fam).unwrap() else {
                panic!()
            };
            for i in 0..4 {
                for j in 0..4 {
                    let direct = pgf_dp(&PGFQuery::new(i + j, 0, k, true)).unwrap();
                    assert_eq!(*m.get(i, j), direct);
                }
            }
        }
    }

    #[test]
    fn thm8_at_t1_equals_shifted42() {
        use crate::rings::Integer;
        for k in 0..3 {
            for n in 1..5 {
                let BuiltMatrix::Poly(a) =
                    build_matrix(&MatrixFamily::new(FamilyId::Thm8, n, k)).unwrap()
                else {
                    panic!()
                };
                let BuiltMatrix::Poly(b) =
                    build_matrix(&MatrixFamily::new(FamilyId::Shifted42, n, k)).unwrap()
                else {
                    panic!()
                };
                let a1 = a.map(|p| p.eval_t(&Integer::from(1)));
                assert_eq!(a1, b, "thm8 at t=1 vs shifted42, n={n} k={k}");
            }
        }
    }

    #[test]
    fn thm10_at_t1_equals_sumform44() {
        use crate::rings::Integer;
        for k in 0..3 {
            for n in 1..5 {
                let BuiltMatrix::Poly(a) =
                    build_matrix(&MatrixFamily::new(FamilyId::Thm10, n, k)).unwrap()
                else {
                    panic!()
                };
                let BuiltMatrix::Poly(b) =
                    build_matrix(&MatrixFamily::new(FamilyId::SumForm44, n, k)).unwrap()
                else {
                    panic!()
                };
                assert_eq!(a.map(|p| p.eval_t(&Integer::from(1))), b, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn bad_params_rejected() {
        assert!(build_matrix(&MatrixFamily::new(FamilyId::Thm1, 0, 0)).is_err());
        assert!(build_matrix(&MatrixFamily::new(FamilyId::Thm1, 2, -1)).is_err());
        assert!(build_matrix(&MatrixFamily::new(FamilyId::Cor15, 2, 0)).is_err());
        assert!(build_matrix(&MatrixFamily::new(FamilyId::Thm8, 2, -1)).is_ok());
    }

    #[test]
    fn prefactored_entries_equal_binomial_differences() {
        // (2k+1)/(m+k+1) * binom(2m, m+k) = binom(2m, m+k) - binom(2m, m+k+1),
        // the reason the rational prefactors always divide exactly
        for k in 0..6i64 {
            for m in 0..24i64 {
                let lhs = scaled(
                    2 * k + 1,
                    m + k + 1,
                    binom(2 * m, m + k),
                    &MatrixFamily::new(FamilyId::Cor12, 1, k),
                )
                .unwrap();
                assert_eq!(
                    lhs,
                    binom(2 * m, m + k) - binom(2 * m, m + k + 1),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn family_tokens_round_trip() {
        for f in FamilyId::ALL {
            assert_eq!(f.token().parse::<FamilyId>().unwrap(), f);
        }
        assert!("thm99".parse::<FamilyId>().is_err());
    }
}
