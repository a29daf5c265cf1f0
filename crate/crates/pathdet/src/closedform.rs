//! Right-hand sides of every determinant family: exact case resolution over
//! residue classes of n, and the closed-form value of each matching branch.
//!
//! Branches are tested in their catalog order. Where several branch equations
//! hold at once (k=1 for thm3/thm10, k=2 for thm4/thm11, and various
//! corollary overlaps), every matching branch is evaluated and all values
//! must agree; disagreement raises `BranchConflict`.
//!
//! A few branch signs are easy to get wrong: thm21's second branch carries
//! the constant sign (-1)^binom(k,2) independent of n1, cor25's k=0 middle
//! branch is -2(-8)^(n1-1), and cor18's case equations run over residues
//! mod k (it specializes thm2 with k shifted by one). All of them are pinned
//! against brute-force determinants by the acceptance grids.

use num_traits::Zero;

use crate::binomial::choose2;
use crate::error::{Error, Result};
use crate::families::{FamilyId, MatrixFamily};
use crate::mpoly::MPoly;
use crate::rings::{Integer, RingValue};

/// Which residue branch matched, if any, and the extracted index n1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResolution {
    pub matched: bool,
    pub case_label: String,
    pub n1: Option<i64>,
}

impl CaseResolution {
    fn none() -> Self {
        CaseResolution {
            matched: false,
            case_label: "no-branch".into(),
            n1: None,
        }
    }
}

/// A resolved closed form: the exact value and how its branch was selected.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormResult {
    pub value: RingValue,
    pub resolution: CaseResolution,
}

/// One matching branch: label, extracted n1 (if the branch has one), value.
struct Branch {
    label: String,
    n1: Option<i64>,
    value: RingValue,
}

impl Branch {
    fn new(label: impl Into<String>, n1: i64, value: RingValue) -> Self {
        Branch {
            label: label.into(),
            n1: Some(n1),
            value,
        }
    }
}

/// The closed-form value of the family determinant.
pub fn rhs(f: &MatrixFamily) -> Result<ClosedFormResult> {
    f.validate()?;
    let matches = matching_branches(f)?;
    if matches.is_empty() {
        let value = if f.id.is_symbolic() {
            RingValue::Poly(MPoly::zero())
        } else {
            RingValue::Int(Integer::zero())
        };
        return Ok(ClosedFormResult {
            value,
            resolution: CaseResolution::none(),
        });
    }
    for b in &matches[1..] {
        if b.value != matches[0].value {
            return Err(Error::BranchConflict(format!(
                "{} n={} k={}: branch '{}' gives {} but branch '{}' gives {}",
                f.id, f.n, f.k, matches[0].label, matches[0].value, b.label, b.value
            )));
        }
    }
    let first = &matches[0];
    Ok(ClosedFormResult {
        value: first.value.clone(),
        resolution: CaseResolution {
            matched: true,
            case_label: first.label.clone(),
            n1: first.n1,
        },
    })
}

/// Resolve which branch (n, k) falls into, without demanding the value.
pub fn n1_resolve(id: FamilyId, n: usize, k: i64) -> Result<CaseResolution> {
    rhs(&MatrixFamily::new(id, n, k)).map(|r| r.resolution)
}

/// The explicit quotient polynomials appearing in the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    /// (x^(m+k) +- y^(m+k)) / (x^k + y^k) and its split-product variant
    Thm4Pmk,
    /// geometric ratio sum_{s=0}^{n1} x^{s(k+1)} y^{(n1-s)(k+1)}; `m` is n1
    Thm2Ratio,
    /// t-deformed alternating sum in x, y, t
    Thm11Pmkt,
}

pub fn quotient_poly(kind: QuotientKind, m: i64, k: i64) -> Result<MPoly> {
    match kind {
        QuotientKind::Thm2Ratio => {
            if m < 0 || k < 0 {
                return Err(Error::BadParams(format!(
                    "thm2 ratio needs n1, k >= 0, got ({m}, {k})"
                )));
            }
            Ok(thm2_ratio(m, k))
        }
        QuotientKind::Thm4Pmk => {
            if k < 1 || m < 0 {
                return Err(Error::BadParams(format!(
                    "P_(m,k) needs k >= 1, m >= 0, got ({m}, {k})"
                )));
            }
            thm4_pmk(m, k)
        }
        QuotientKind::Thm11Pmkt => {
            if k < 1 || m < 0 {
                return Err(Error::BadParams(format!(
                    "P_(m,k)(t) needs k >= 1, m >= 0, got ({m}, {k})"
                )));
            }
            Ok(thm11_pmkt(m, k))
        }
    }
}

// ---- polynomial building blocks ----

fn xy(e: i64) -> MPoly {
    assert!(e >= 0, "negative xy exponent {e}");
    MPoly::xy_pow(e as u32)
}

fn tpow(e: i64) -> MPoly {
    assert!(e >= 0, "negative t exponent {e}");
    MPoly::term(1, 0, 0, e as u32)
}

fn xpow(e: i64) -> MPoly {
    assert!(e >= 0);
    MPoly::term(1, e as u32, 0, 0)
}

fn ypow(e: i64) -> MPoly {
    assert!(e >= 0);
    MPoly::term(1, 0, e as u32, 0)
}

/// x^e + y^e
fn power_sum(e: i64) -> MPoly {
    xpow(e).add(&ypow(e))
}

fn one_plus_t() -> MPoly {
    MPoly::one().add(&MPoly::var_t())
}

fn one_minus_t() -> MPoly {
    MPoly::one().sub(&MPoly::var_t())
}

fn pow2(e: i64) -> Integer {
    assert!(e >= 0);
    Integer::from(2).pow(e as u32)
}

/// Apply (-1)^e.
fn signed_poly(e: i64, p: MPoly) -> MPoly {
    if e.rem_euclid(2) == 1 {
        p.neg()
    } else {
        p
    }
}

fn signed_int(e: i64, v: Integer) -> Integer {
    if e.rem_euclid(2) == 1 {
        -v
    } else {
        v
    }
}

/// sum_{s=0}^{n1} x^{s(k+1)} y^{(n1-s)(k+1)}
fn thm2_ratio(n1: i64, k: i64) -> MPoly {
    let mut acc = MPoly::zero();
    for s in 0..=n1 {
        acc = acc.add(&MPoly::term(
            1,
            (s * (k + 1)) as u32,
            ((n1 - s) * (k + 1)) as u32,
            0,
        ));
    }
    acc
}

/// sum_{s=0}^{n1} t^{min(s, n1-s)} x^{s(k+1)} y^{(n1-s)(k+1)}
fn thm9_tsum(n1: i64, k: i64) -> MPoly {
    let mut acc = MPoly::zero();
    for s in 0..=n1 {
        acc = acc.add(&MPoly::term(
            1,
            (s * (k + 1)) as u32,
            ((n1 - s) * (k + 1)) as u32,
            s.min(n1 - s) as u32,
        ));
    }
    acc
}

/// (x^e + y^e) / (x + y) for odd e, as an explicit alternating sum.
fn odd_power_sum_ratio(e: i64) -> Result<MPoly> {
    power_sum(e).exact_div(&power_sum(1))
}

/// P_(m,k)(x,y): the quotient by x^k + y^k, computed from the full
/// definition and cross-checked against the restricted one wherever the
/// latter applies.
fn thm4_pmk(m: i64, k: i64) -> Result<MPoly> {
    let den = power_sum(k);
    let f = m.div_euclid(k);
    let full_num = if m % k == 0 {
        xpow(m + k).add(&signed_poly(f, ypow(m + k)))
    } else {
        xpow(k * f + k)
            .add(&signed_poly(f, ypow(k * f + k)))
            .mul(&xpow(m - k * f).add(&signed_poly(f, ypow(m - k * f))))
    };
    let full = full_num.exact_div(&den)?;
    let restricted_num = if m % k == 0 && f % 2 == 0 {
        Some(xpow(m + k).add(&ypow(m + k)))
    } else if m % k != 0 && f % 2 == 1 {
        Some(
            xpow(k * f + k)
                .sub(&ypow(k * f + k))
                .mul(&xpow(m - k * f).sub(&ypow(m - k * f))),
        )
    } else {
        None
    };
    if let Some(num) = restricted_num {
        let restricted = num.exact_div(&den)?;
        if restricted != full {
            return Err(Error::BranchConflict(format!(
                "P_({m},{k}) full and restricted definitions disagree"
            )));
        }
    }
    Ok(full)
}

/// P_(m,k)(x,y,t): the t-deformed alternating sums.
fn thm11_pmkt(m: i64, k: i64) -> MPoly {
    let f = m.div_euclid(k);
    let mut acc = MPoly::zero();
    if m % k == 0 {
        for s in 0..=f {
            let term = MPoly::term(1, (s * k) as u32, (m - s * k) as u32, s.min(f - s) as u32);
            acc = acc.add(&signed_poly(s, term));
        }
    } else {
        let ceil = f + 1;
        for s in 0..=f {
            let te = s.min(ceil - s) as u32;
            let term = MPoly::term(1, (s * k) as u32, (m - s * k) as u32, te).add(&MPoly::term(
                1,
                (m - s * k) as u32,
                (s * k) as u32,
                te,
            ));
            acc = acc.add(&signed_poly(s, term));
        }
    }
    acc
}

// ---- branch machinery ----

/// n1 from num = n1 * den, requiring n1 >= min_n1.
fn solve_n1(num: i64, den: i64, min_n1: i64) -> Option<i64> {
    if den <= 0 || num % den != 0 {
        return None;
    }
    let n1 = num / den;
    (n1 >= min_n1).then_some(n1)
}

fn matching_branches(f: &MatrixFamily) -> Result<Vec<Branch>> {
    // the half-sum forms carry twice the base family's determinant
    if matches!(f.id, FamilyId::SumForm44 | FamilyId::SumForm45) {
        let base = if f.id == FamilyId::SumForm44 {
            FamilyId::Thm3
        } else {
            FamilyId::Thm4
        };
        let mut branches = matching_branches(&MatrixFamily::new(base, f.n, f.k))?;
        for b in &mut branches {
            let RingValue::Poly(p) = &b.value else {
                unreachable!("base families are polynomial")
            };
            b.value = RingValue::Poly(p.scale(&Integer::from(2)));
        }
        return Ok(branches);
    }
    let n = f.n as i64;
    let k = f.k;
    let c2 = choose2;
    let mut out: Vec<Branch> = Vec::new();
    let mut poly = |label: &str, n1: i64, v: MPoly| {
        out.push(Branch::new(label, n1, RingValue::Poly(v)));
    };
    match f.id {
        FamilyId::Thm1 | FamilyId::Shifted42 => {
            if k == 0 {
                poly("k=0", n, xy(c2(n)));
            } else if let Some(n1) = solve_n1(n, k + 1, 1) {
                poly(
                    "n=n1(k+1)",
                    n1,
                    signed_poly(n1 * c2(k + 1), xy((k + 1) * (k + 1) * c2(n1))),
                );
            }
        }
        FamilyId::Thm2 | FamilyId::Shifted43 => {
            if k == 0 {
                poly("k=0", n, xy(c2(n)).mul(&thm2_ratio(n, 0)));
            } else {
                if let Some(n1) = solve_n1(n, k + 1, 1) {
                    let v = xy((k + 1) * (k + 1) * c2(n1)).mul(&thm2_ratio(n1, k));
                    poly("n=n1(k+1)", n1, signed_poly(n1 * c2(k + 1), v));
                }
                if let Some(n1) = solve_n1(n - k, k + 1, 0) {
                    let v =
                        xy((k + 1) * (k + 1) * c2(n1) + n1 * k * (k + 1)).mul(&thm2_ratio(n1, k));
                    poly("n=n1(k+1)+k", n1, signed_poly(n1 * c2(k + 1) + c2(k), v));
                }
            }
        }
        FamilyId::Thm3 => {
            if k == 0 {
                poly("k=0", n, xy(c2(n)).scale(&pow2(n - 1)));
            } else {
                if let Some(n1) = solve_n1(n + k - 1, 2 * k, 1) {
                    poly(
                        "n=2kn1-k+1",
                        n1,
                        signed_poly(k * n1 + c2(k), xy(k * (n1 - 1) * (2 * k * n1 - k + 1))),
                    );
                }
                if let Some(n1) = solve_n1(n, 2 * k, 1) {
                    poly(
                        "n=2kn1",
                        n1,
                        signed_poly(k * n1, xy(k * n1 * (2 * k * n1 - k - 1))),
                    );
                }
            }
        }
        FamilyId::Thm4 => {
            if k == 0 {
                poly("k=0", n, xy(c2(n)).scale(&pow2(n - 1)).mul(&power_sum(n)));
            } else if k == 1 {
                if n % 2 == 0 {
                    let n1 = n / 2;
                    let v = xy(2 * n1 * (n1 - 1)).mul(&odd_power_sum_ratio(n + 1)?);
                    poly("n=2n1", n1, signed_poly(n1, v));
                } else {
                    let n1 = (n + 1) / 2;
                    let v = xy(2 * (n1 - 1) * (n1 - 1)).mul(&odd_power_sum_ratio(n)?);
                    poly("n=2n1-1", n1, signed_poly(n1 + 1, v));
                }
            } else {
                if let Some(n1) = solve_n1(n + 1, 2 * k, 1) {
                    let v = xy(k * n1 * (2 * k * n1 - k - 3) + k).mul(&thm4_pmk(n - k + 2, k)?);
                    poly("n=2kn1-1", n1, signed_poly(k * (n1 - 1) - 1, v));
                }
                if let Some(n1) = solve_n1(n + k - 1, 2 * k, 1) {
                    let v = xy(k * (n1 - 1) * (2 * k * n1 - k + 1)).mul(&thm4_pmk(n, k)?);
                    poly("n=2kn1-k+1", n1, signed_poly(k * n1 + c2(k), v));
                }
                if let Some(n1) = solve_n1(n + k, 2 * k, 1) {
                    let v = xy(k * (n1 - 1) * (2 * k * n1 - k - 1)).mul(&thm4_pmk(n - k, k)?);
                    poly("n=2kn1-k", n1, signed_poly(k * n1 + c2(k + 1), v));
                }
                if let Some(n1) = solve_n1(n, 2 * k, 1) {
                    let v = xy(k * n1 * (2 * k * n1 - k - 1)).mul(&thm4_pmk(n, k)?);
                    poly("n=2kn1", n1, signed_poly(k * n1, v));
                }
            }
        }
        FamilyId::Thm8 => {
            if k == -1 {
                poly("k=-1", n, MPoly::zero());
            } else if k == 0 {
                poly("k=0", n, xy(c2(n)));
            } else if let Some(n1) = solve_n1(n, k + 1, 1) {
                let v = tpow(k * (n1 / 2)).mul(&xy((k + 1) * (k + 1) * c2(n1)));
                poly("n=n1(k+1)", n1, signed_poly(n1 * c2(k + 1), v));
            }
        }
        FamilyId::Thm9 => {
            if k == -1 {
                poly("k=-1", n, one_minus_t().pow(n as u32).mul(&xy(c2(n + 1))));
            } else if k == 0 {
                poly("k=0", n, xy(c2(n)).mul(&thm9_tsum(n, 0)));
            } else {
                if let Some(n1) = solve_n1(n, k + 1, 1) {
                    let v = tpow(k * (n1 / 2))
                        .mul(&xy((k + 1) * (k + 1) * c2(n1)))
                        .mul(&thm9_tsum(n1, k));
                    poly("n=n1(k+1)", n1, signed_poly(n1 * c2(k + 1), v));
                }
                if let Some(n1) = solve_n1(n - k, k + 1, 0) {
                    let v = tpow(k * ((n1 + 1) / 2))
                        .mul(&xy((k + 1) * (k + 1) * c2(n1) + n1 * k * (k + 1)))
                        .mul(&thm9_tsum(n1, k));
                    poly("n=n1(k+1)+k", n1, signed_poly(n1 * c2(k + 1) + c2(k), v));
                }
            }
        }
        FamilyId::Thm10 => {
            if k == 0 {
                poly("k=0", n, one_plus_t().pow(n as u32).mul(&xy(c2(n))));
            } else {
                if let Some(n1) = solve_n1(n + k - 1, 2 * k, 1) {
                    let v = one_plus_t()
                        .mul(&tpow(k * (n1 - 1)))
                        .mul(&xy(k * (n1 - 1) * (2 * k * n1 - k + 1)));
                    poly("n=2kn1-k+1", n1, signed_poly(k * n1 + c2(k), v));
                }
                if let Some(n1) = solve_n1(n, 2 * k, 1) {
                    let v = one_plus_t()
                        .mul(&tpow(k * n1 - 1))
                        .mul(&xy(k * n1 * (2 * k * n1 - k - 1)));
                    poly("n=2kn1", n1, signed_poly(k * n1, v));
                }
            }
        }
        FamilyId::Thm11 => {
            if k == 0 {
                poly(
                    "k=0",
                    n,
                    one_plus_t()
                        .pow(n as u32)
                        .mul(&xy(c2(n)))
                        .mul(&power_sum(n)),
                );
            } else if k == 1 {
                if n % 2 == 1 {
                    let n1 = (n + 1) / 2;
                    let v = one_plus_t()
                        .mul(&tpow(n1 - 1))
                        .mul(&xy(2 * (n1 - 1) * (n1 - 1)))
                        .mul(&thm11_pmkt(n - 1, 1));
                    poly("n=2n1-1", n1, signed_poly(n1 + 1, v));
                } else {
                    let n1 = n / 2;
                    let v = one_plus_t()
                        .mul(&tpow(n1 - 1))
                        .mul(&xy(2 * n1 * (n1 - 1)))
                        .mul(&thm11_pmkt(n, 1));
                    poly("n=2n1", n1, signed_poly(n1, v));
                }
            } else {
                if let Some(n1) = solve_n1(n + 1, 2 * k, 1) {
                    let v = one_plus_t()
                        .mul(&tpow(k * n1 - 2))
                        .mul(&xy(k * n1 * (2 * k * n1 - k - 3) + k))
                        .mul(&thm11_pmkt(n - k + 2, k));
                    poly("n=2kn1-1", n1, signed_poly(k * (n1 - 1) - 1, v));
                }
                if let Some(n1) = solve_n1(n + k - 1, 2 * k, 1) {
                    let v = one_plus_t()
                        .mul(&tpow(k * (n1 - 1)))
                        .mul(&xy(k * (n1 - 1) * (2 * k * n1 - k + 1)))
                        .mul(&thm11_pmkt(n, k));
                    poly("n=2kn1-k+1", n1, signed_poly(k * n1 + c2(k), v));
                }
                if let Some(n1) = solve_n1(n + k, 2 * k, 1) {
                    let v = one_plus_t()
                        .mul(&tpow(k * (n1 - 1)))
                        .mul(&xy(k * (n1 - 1) * (2 * k * n1 - k - 1)))
                        .mul(&thm11_pmkt(n - k, k));
                    poly("n=2kn1-k", n1, signed_poly(k * n1 + c2(k + 1), v));
                }
                if let Some(n1) = solve_n1(n, 2 * k, 1) {
                    let v = one_plus_t()
                        .mul(&tpow(k * n1 - 1))
                        .mul(&xy(k * n1 * (2 * k * n1 - k - 1)))
                        .mul(&thm11_pmkt(n, k));
                    poly("n=2kn1", n1, signed_poly(k * n1, v));
                }
            }
        }
        FamilyId::Cor26 => {
            if let Some(n1) = solve_n1(n, k + 1, 1) {
                poly(
                    "n=n1(k+1)",
                    n1,
                    signed_poly(n1 * c2(k + 1), tpow(k * (n1 / 2))),
                );
            }
        }
        _ => return Ok(integer_branches(f)),
    }
    Ok(out)
}

fn integer_branches(f: &MatrixFamily) -> Vec<Branch> {
    let n = f.n as i64;
    let k = f.k;
    let c2 = choose2;
    let one = || Integer::from(1);
    let mut out: Vec<Branch> = Vec::new();
    let mut int = |label: &str, n1: i64, v: Integer| {
        out.push(Branch::new(label, n1, RingValue::Int(v)));
    };
    match f.id {
        FamilyId::Cor12 => {
            if let Some(n1) = solve_n1(n + k, 2 * k + 1, 1) {
                int("n=n1(2k+1)-k", n1, signed_int(k * n1 + c2(k), one()));
            }
            if let Some(n1) = solve_n1(n, 2 * k + 1, 1) {
                int("n=n1(2k+1)", n1, signed_int(k * n1, one()));
            }
        }
        FamilyId::Cor13 => {
            if let Some(n1) = solve_n1(n + k + 1, 2 * k + 1, 1) {
                int("n=n1(2k+1)-k-1", n1, signed_int(k * n1 + c2(k + 1), one()));
            }
            if let Some(n1) = solve_n1(n, 2 * k + 1, 1) {
                int("n=n1(2k+1)", n1, signed_int(k * n1, one()));
            }
        }
        FamilyId::Cor14 => {
            if let Some(n1) = solve_n1(n, k + 1, 1) {
                int("n=n1(k+1)", n1, signed_int(n1 * c2(k + 1), one()));
            }
        }
        FamilyId::Cor15 => {
            if let Some(n1) = solve_n1(n, k, 1) {
                int("n=n1k", n1, signed_int(n1 * c2(k), one()));
            }
        }
        FamilyId::Cor16 => {
            if k == 0 {
                int("k=0", n, Integer::from(n + 1));
            } else {
                if let Some(n1) = solve_n1(n + k + 2, 2 * k + 1, 1) {
                    int("n=n1(2k+1)-k-2", n1, signed_int(k * n1 + c2(k) + 1, one()));
                }
                if let Some(n1) = solve_n1(n + k + 1, 2 * k + 1, 1) {
                    int(
                        "n=n1(2k+1)-k-1",
                        n1,
                        signed_int(k * n1 + c2(k + 1), Integer::from(n + k + 1)),
                    );
                }
                if let Some(n1) = solve_n1(n + 1, 2 * k + 1, 1) {
                    int(
                        "n=n1(2k+1)-1",
                        n1,
                        signed_int(k * (n1 + 1), Integer::from(n + 1)),
                    );
                }
                if let Some(n1) = solve_n1(n, 2 * k + 1, 1) {
                    int("n=n1(2k+1)", n1, signed_int(k * n1, one()));
                }
            }
        }
        FamilyId::Cor17 => {
            if k == 0 {
                match n % 6 {
                    0 | 1 => int("n=0|1 mod 6", n, one()),
                    3 | 4 => int("n=3|4 mod 6", n, -one()),
                    _ => {}
                }
            } else if k % 3 != 2 {
                if let Some(n1) = solve_n1(n + 2 * k + 3, 3 * k + 3, 1) {
                    int("n=n1(3k+3)-2k-3", n1, signed_int(n1 * c2(k + 2) + 1, one()));
                }
                if let Some(n1) = solve_n1(n + 2 * k + 2, 3 * k + 3, 1) {
                    int("n=n1(3k+3)-2k-2", n1, signed_int(n1 * c2(k + 2) + 1, one()));
                }
                if let Some(n1) = solve_n1(n + k + 2, 3 * k + 3, 1) {
                    int(
                        "n=n1(3k+3)-k-2",
                        n1,
                        signed_int((n1 - 1) * c2(k + 2), one()),
                    );
                }
                if let Some(n1) = solve_n1(n, 3 * k + 3, 1) {
                    int("n=n1(3k+3)", n1, signed_int(n1 * c2(k + 2), one()));
                }
            } else {
                if let Some(n1) = solve_n1(n, k + 1, 1) {
                    let e = n1 * c2(k + 1) + n1 * (k + 1) / 3;
                    int("n=n1(k+1)", n1, signed_int(e, Integer::from(n1 + 1)));
                }
                if let Some(n1) = solve_n1(n - k, k + 1, 0) {
                    let e = n1 * c2(k + 1) + c2(k) + n1 * (k + 1) / 3;
                    int("n=n1(k+1)+k", n1, signed_int(e, Integer::from(n1 + 1)));
                }
            }
        }
        FamilyId::Cor18 => {
            if let Some(n1) = solve_n1(n, k, 1) {
                int("n=n1k", n1, signed_int(n1 * c2(k), Integer::from(n1 + 1)));
            }
            if let Some(n1) = solve_n1(n - k + 1, k, 0) {
                int(
                    "n=n1k+k-1",
                    n1,
                    signed_int(n1 * c2(k) + c2(k - 1), Integer::from(n1 + 1)),
                );
            }
        }
        FamilyId::Cor19 => {
            if k == 0 {
                int("k=0", n, pow2(n - 1));
            } else {
                if let Some(n1) = solve_n1(n, 2 * k, 1) {
                    int("n=2n1k", n1, signed_int(n1 * k, one()));
                }
                if let Some(n1) = solve_n1(n + k - 1, 2 * k, 1) {
                    int("n=2n1k-k+1", n1, signed_int(n1 * k + c2(k), one()));
                }
            }
        }
        FamilyId::Cor20 => {
            if k == 0 {
                int("k=0", n, pow2(n));
            } else if let Some(n1) = solve_n1(n, k, 1) {
                int("n=n1k", n1, signed_int(c2(n1) * k + n1 * c2(k), one()));
            }
        }
        FamilyId::Thm21 => {
            if k == 0 {
                int("k=0", n, one());
            } else {
                if let Some(n1) = solve_n1(n, 2 * k - 1, 1) {
                    int("n=(2k-1)n1", n1, one());
                }
                if let Some(n1) = solve_n1(n + k - 1, 2 * k - 1, 1) {
                    int("n=(2k-1)n1-k+1", n1, signed_int(c2(k), one()));
                }
            }
        }
        FamilyId::Cor22 => {
            if k == 0 {
                int("k=0", n, pow2(n - 1));
            } else {
                if let Some(n1) = solve_n1(n + k - 1, 2 * k, 1) {
                    int("n=2kn1-k+1", n1, signed_int(k * n1 + c2(k), one()));
                }
                if let Some(n1) = solve_n1(n, 2 * k, 1) {
                    int("n=2kn1", n1, signed_int(k * n1, one()));
                }
            }
        }
        FamilyId::Cor23 => {
            if k == 0 {
                int("k=0", n, pow2(n) * Integer::from(2 * n + 1));
            } else {
                if let Some(n1) = solve_n1(n, 2 * k, 1) {
                    int("n=2n1k", n1, signed_int(n1 * k, one()));
                }
                if let Some(n1) = solve_n1(n + k + 1, 2 * k, 1) {
                    int("n=2n1k-k-1", n1, signed_int(n1 * k + c2(k + 2), one()));
                }
                if let Some(n1) = solve_n1(n + k, 2 * k, 1) {
                    int(
                        "n=2n1k-k",
                        n1,
                        signed_int(n1 * k + c2(k + 1), Integer::from(2 * (n + k))),
                    );
                }
                if let Some(n1) = solve_n1(n + 1, 2 * k, 1) {
                    int(
                        "n=2n1k-1",
                        n1,
                        signed_int(n1 * k + k, Integer::from(2 * (n + 1))),
                    );
                }
            }
        }
        FamilyId::Conj24 => {
            if k <= 1 {
                int("k<=1", n, Integer::from(2 * n + 1));
            } else {
                if let Some(n1) = solve_n1(n, 2 * k - 1, 1) {
                    int("n=(2k-1)n1", n1, Integer::from(2 * n1 + 1));
                }
                if let Some(n1) = solve_n1(n + 1, 2 * k - 1, 1) {
                    int("n=(2k-1)n1-1", n1, signed_int(k + 1, Integer::from(4 * n1)));
                }
                if let Some(n1) = solve_n1(n + k - 1, 2 * k - 1, 1) {
                    int(
                        "n=(2k-1)n1-k+1",
                        n1,
                        signed_int(c2(k), Integer::from(4 * n1)),
                    );
                }
                if let Some(n1) = solve_n1(n + k, 2 * k - 1, 1) {
                    int(
                        "n=(2k-1)n1-k",
                        n1,
                        signed_int(c2(k - 1), Integer::from(2 * n1 - 1)),
                    );
                }
            }
        }
        FamilyId::Cor25 => {
            if k == 0 {
                let neg8 = |e: i64| -> Integer { signed_int(e, Integer::from(8).pow(e as u32)) };
                if let Some(n1) = solve_n1(n + 2, 3, 1) {
                    int("n=3n1-2", n1, neg8(n1 - 1));
                }
                if let Some(n1) = solve_n1(n + 1, 3, 1) {
                    int("n=3n1-1", n1, Integer::from(-2) * neg8(n1 - 1));
                }
                if let Some(n1) = solve_n1(n, 3, 1) {
                    int("n=3n1", n1, neg8(n1));
                }
            } else if k == 1 {
                let v = match n % 12 {
                    0 | 1 | 4 | 5 => 1,
                    2 | 3 => 2,
                    6 | 7 | 10 | 11 => -1,
                    _ => -2,
                };
                int("n mod 12 table", n, Integer::from(v));
            } else {
                if k % 6 == 0 {
                    if let Some(n1) = solve_n1(n, k, 1) {
                        int("n=kn1 k=0 mod 6", n1, signed_int(k * n1 / 2, one()));
                    }
                }
                if k % 12 == 3 {
                    if let Some(n1) = solve_n1(n, k, 1) {
                        int("n=kn1 k=3 mod 12", n1, signed_int(c2(n1 + 1), one()));
                    }
                }
                if k % 12 == 9 {
                    if let Some(n1) = solve_n1(n, k, 1) {
                        int("n=kn1 k=9 mod 12", n1, signed_int(c2(n1), one()));
                    }
                }
                if k % 3 != 0 {
                    if let Some(n1) = solve_n1(n + 5 * k, 6 * k, 1) {
                        int("n=6kn1-5k", n1, signed_int(k * n1 + c2(k + 1), one()));
                    }
                    if let Some(n1) = solve_n1(n + 5 * k - 1, 6 * k, 1) {
                        int(
                            "n=6kn1-5k+1",
                            n1,
                            signed_int(k * (n1 + 1) + (k + 1) / 6, Integer::from(3)),
                        );
                    }
                    if let Some(n1) = solve_n1(n + 4 * k + 1, 6 * k, 1) {
                        int(
                            "n=6kn1-4k-1",
                            n1,
                            signed_int(k * (n1 + 1) + k / 3, Integer::from(3)),
                        );
                    }
                    if let Some(n1) = solve_n1(n + 4 * k, 6 * k, 1) {
                        int("n=6kn1-4k", n1, signed_int(k * n1 + 1, Integer::from(2)));
                    }
                    if let Some(n1) = solve_n1(n + 3 * k, 6 * k, 1) {
                        int(
                            "n=6kn1-3k",
                            n1,
                            signed_int(k * n1 + c2(k) + 1, Integer::from(2)),
                        );
                    }
                    if let Some(n1) = solve_n1(n + 3 * k - 1, 6 * k, 1) {
                        int(
                            "n=6kn1-3k+1",
                            n1,
                            signed_int(k * (n1 + 1) + (k + 4) / 6, Integer::from(3)),
                        );
                    }
                    if let Some(n1) = solve_n1(n + 2 * k + 1, 6 * k, 1) {
                        int(
                            "n=6kn1-2k-1",
                            n1,
                            signed_int(k * n1 + k / 3 + 1, Integer::from(3)),
                        );
                    }
                    if let Some(n1) = solve_n1(n + 2 * k, 6 * k, 1) {
                        int("n=6kn1-2k", n1, signed_int(k * (n1 + 1), one()));
                    }
                    if let Some(n1) = solve_n1(n + k, 6 * k, 1) {
                        int("n=6kn1-k", n1, signed_int(k * n1 + c2(k + 1), one()));
                    }
                    if let Some(n1) = solve_n1(n, 6 * k, 1) {
                        int("n=6kn1", n1, signed_int(k * n1, one()));
                    }
                }
            }
        }
        _ => unreachable!("symbolic families handled above"),
    }
    out
}
