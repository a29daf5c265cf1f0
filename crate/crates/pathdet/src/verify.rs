//! The verification engine: sweep (family, k, n) grids, compute the matrix
//! determinant and the closed form by independent code paths, compare
//! exactly, and aggregate records. Also the conjecture scanner and the
//! classic Catalan/Motzkin Hankel suite.
//!
//! Grid points run in parallel; records are sorted by (family, k, n)
//! afterwards, so reports are deterministic regardless of scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closedform::rhs;
use crate::error::{Error, Result};
use crate::families::{build_matrix, BuiltMatrix, FamilyId, MatrixFamily};
use crate::matrix::Matrix;
use crate::mpoly::MPoly;
use crate::paths::{pgf_special_int, PGFQuery, SpecKind};
use crate::rings::{EisenInt, GaussInt, Integer, Ring, RingValue};

/// Grid caps: symbolic determinants in two variables, in three (with t), and
/// everything with plain integer entries.
pub const CAP_SYMBOLIC_N: usize = 12;
pub const CAP_SYMBOLIC_T_N: usize = 10;
pub const CAP_INTEGER_N: usize = 24;
pub const CAP_K: i64 = 8;

/// Evaluation mode for the grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    Symbolic,
    Catalan,
    Motzkin,
    Central,
}

impl Specialization {
    pub fn token(&self) -> &'static str {
        match self {
            Specialization::Symbolic => "symbolic",
            Specialization::Catalan => "catalan",
            Specialization::Motzkin => "motzkin",
            Specialization::Central => "central",
        }
    }

    fn kind(&self) -> Option<SpecKind> {
        match self {
            Specialization::Symbolic => None,
            Specialization::Catalan => Some(SpecKind::Catalan),
            Specialization::Motzkin => Some(SpecKind::Motzkin),
            Specialization::Central => Some(SpecKind::Central),
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Specialization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "symbolic" => Ok(Specialization::Symbolic),
            "catalan" => Ok(Specialization::Catalan),
            "motzkin" => Ok(Specialization::Motzkin),
            "central" => Ok(Specialization::Central),
            _ => Err(Error::BadGrid(format!("unknown specialization '{s}'"))),
        }
    }
}

/// How the deformation variable t enters a specialized grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum THandling {
    Symbolic,
    Value(Integer),
}

/// A sweep description.
#[derive(Clone, Debug)]
pub struct GridSpec {
    pub families: Vec<FamilyId>,
    pub n_min: usize,
    pub n_max: usize,
    pub k_min: i64,
    pub k_max: i64,
    pub spec: Specialization,
    pub t: THandling,
}

impl GridSpec {
    pub fn symbolic(families: Vec<FamilyId>, n_max: usize, k_max: i64) -> Self {
        GridSpec {
            families,
            n_min: 1,
            n_max,
            k_min: 0,
            k_max,
            spec: Specialization::Symbolic,
            t: THandling::Symbolic,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.families.is_empty() || self.n_min > self.n_max || self.k_min > self.k_max {
            return Err(Error::BadGrid("empty family set or empty range".into()));
        }
        if self.k_max > CAP_K {
            return Err(Error::BadGrid(format!(
                "k capped at {CAP_K}, asked for {}",
                self.k_max
            )));
        }
        for f in &self.families {
            // cor26 is univariate in t, so it scales like the integer families
            let cap = if !f.is_symbolic()
                || f == &FamilyId::Cor26
                || self.spec != Specialization::Symbolic
            {
                CAP_INTEGER_N
            } else if f.has_t() {
                CAP_SYMBOLIC_T_N
            } else {
                CAP_SYMBOLIC_N
            };
            if self.n_max > cap {
                return Err(Error::BadGrid(format!(
                    "{f}: n capped at {cap}, asked for {}",
                    self.n_max
                )));
            }
            if !f.is_symbolic() && self.spec != Specialization::Symbolic {
                return Err(Error::BadGrid(format!(
                    "{f} has integer entries; use the symbolic mode"
                )));
            }
            if f.is_symbolic()
                && self.spec != Specialization::Symbolic
                && f.has_t()
                && self.t == THandling::Symbolic
            {
                return Err(Error::BadGrid(format!(
                    "{f} under a numeric specialization needs --t (symbolic t does not embed)"
                )));
            }
        }
        Ok(())
    }
}

/// One grid point's outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub family: String,
    pub n: u64,
    pub k: i64,
    pub spec: String,
    pub lhs: String,
    pub rhs: String,
    pub case_label: String,
    #[serde(rename = "match")]
    pub is_match: bool,
    pub millis: u64,
}

/// Determinant of one family instance under the given evaluation mode.
/// This is the left-hand side of a verification; the closed form never
/// enters here.
pub fn family_det(
    id: FamilyId,
    n: usize,
    k: i64,
    spec: Specialization,
    t: &THandling,
) -> Result<RingValue> {
    let built = build_matrix(&MatrixFamily::new(id, n, k))?;
    match (&built, spec.kind()) {
        (_, None) => Ok(match (&built, t) {
            (BuiltMatrix::Poly(m), THandling::Value(tv)) if id.has_t() => {
                RingValue::Poly(m.map(|p| p.eval_t(tv)).det_bareiss())
            }
            _ => built.det(),
        }),
        (BuiltMatrix::Poly(m), Some(kind)) => {
            let m = match t {
                THandling::Value(tv) if id.has_t() => m.map(|p| p.eval_t(tv)),
                _ => m.clone(),
            };
            if id.has_t() && *t == THandling::Symbolic {
                return Err(Error::BadGrid(format!(
                    "{id} under a numeric specialization needs an exact t value"
                )));
            }
            specialized_det(&m, kind)
        }
        (BuiltMatrix::Int(_), Some(_)) => Err(Error::BadGrid(format!(
            "{id} has integer entries; use the symbolic mode"
        ))),
    }
}

/// The closed form under the same evaluation mode.
fn specialized_rhs(
    id: FamilyId,
    n: usize,
    k: i64,
    spec: Specialization,
    t: &THandling,
) -> Result<(RingValue, String)> {
    let closed = rhs(&MatrixFamily::new(id, n, k))?;
    let label = closed.resolution.case_label;
    let value = match spec.kind() {
        None => match (&closed.value, t) {
            (RingValue::Poly(p), THandling::Value(tv)) if id.has_t() => {
                RingValue::Poly(p.eval_t(tv))
            }
            (v, _) => v.clone(),
        },
        Some(kind) => {
            let rhs_poly = match &closed.value {
                RingValue::Poly(p) => p.clone(),
                RingValue::Int(v) => MPoly::constant(v.clone()),
                other => {
                    return Err(Error::BadGrid(format!(
                        "unexpected rhs value {other} for {id}"
                    )))
                }
            };
            let rhs_poly = match t {
                THandling::Value(tval) if id.has_t() => rhs_poly.eval_t(tval),
                _ => rhs_poly,
            };
            let (x, y, tv) = kind.point();
            rhs_poly.eval(&x, &y, &tv)?
        }
    };
    Ok((value, label))
}

/// Run one grid point: build, evaluate both sides independently, compare.
fn verify_point(
    id: FamilyId,
    n: usize,
    k: i64,
    spec: Specialization,
    t: &THandling,
) -> Result<VerificationRecord> {
    let start = Instant::now();
    let lhs = family_det(id, n, k, spec, t)?;
    let (rhs_v, case_label) = specialized_rhs(id, n, k, spec, t)?;
    let is_match = lhs == rhs_v;
    Ok(VerificationRecord {
        family: id.token().into(),
        n: n as u64,
        k,
        spec: spec.token().into(),
        lhs: lhs.to_string(),
        rhs: rhs_v.to_string(),
        case_label,
        is_match,
        millis: start.elapsed().as_millis() as u64,
    })
}

/// Determinant of an entrywise-specialized polynomial matrix, in the
/// specialization's own ring.
fn specialized_det(m: &Matrix<MPoly>, kind: SpecKind) -> Result<RingValue> {
    Ok(match kind {
        SpecKind::Catalan => {
            let x = GaussInt::i();
            let y = GaussInt::new(0, -1);
            let t = GaussInt::one();
            RingValue::Gauss(m.map(|p| p.eval_in(&x, &y, &t)).det_bareiss())
        }
        SpecKind::Motzkin => {
            let x = EisenInt::omega();
            let y = EisenInt::new(1, -1);
            let t = EisenInt::one();
            RingValue::Eisen(m.map(|p| p.eval_in(&x, &y, &t)).det_bareiss())
        }
        SpecKind::Central => {
            let one = Integer::from(1);
            RingValue::Int(m.map(|p| p.eval_in(&one, &one, &one)).det_bareiss())
        }
    })
}

/// Sweep the grid. Points whose k is below a family's minimum are skipped;
/// everything else yields exactly one record, ordered by (family, k, n).
pub fn verify_grid(g: &GridSpec) -> Result<Vec<VerificationRecord>> {
    g.validate()?;
    let mut points = Vec::new();
    for (fi, id) in g.families.iter().enumerate() {
        for k in g.k_min.max(id.k_min())..=g.k_max {
            for n in g.n_min..=g.n_max {
                points.push((fi, *id, n, k));
            }
        }
    }
    let mut results: Vec<(usize, i64, usize, VerificationRecord)> = points
        .par_iter()
        .map(|&(fi, id, n, k)| verify_point(id, n, k, g.spec, &g.t).map(|r| (fi, k, n, r)))
        .collect::<Result<Vec<_>>>()?;
    results.sort_by_key(|(fi, k, n, _)| (*fi, *k, *n));
    Ok(results.into_iter().map(|(_, _, _, r)| r).collect())
}

/// A mismatch with enough context to reproduce it, including the matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MismatchDetail {
    pub family: String,
    pub n: u64,
    pub k: i64,
    pub lhs: String,
    pub rhs: String,
    pub matrix: String,
}

/// Scanner outcome: per-point records plus full detail for any mismatch.
#[derive(Clone, Debug, Default)]
pub struct ScanOutcome {
    pub records: Vec<VerificationRecord>,
    pub mismatches: Vec<MismatchDetail>,
}

/// Scan the conjectured binomial Hankel family over 2 <= k <= k_max (plus
/// the k in {0,1} closed form) and 1 <= n <= n_max. Mismatches are findings,
/// not failures; each carries the full matrix.
pub fn scan_conjecture24(n_max: usize, k_max: i64) -> Result<ScanOutcome> {
    if k_max < 2 {
        return Err(Error::BadGrid(format!(
            "scan needs k_max >= 2, got {k_max}"
        )));
    }
    if n_max > CAP_INTEGER_N || k_max > CAP_K {
        return Err(Error::BadGrid(format!(
            "scan capped at n <= {CAP_INTEGER_N}, k <= {CAP_K}"
        )));
    }
    let points: Vec<(usize, i64)> = (0..=k_max)
        .flat_map(|k| (1..=n_max).map(move |n| (n, k)))
        .collect();
    let mut results: Vec<(i64, usize, VerificationRecord)> = points
        .par_iter()
        .map(|&(n, k)| {
            verify_point(
                FamilyId::Conj24,
                n,
                k,
                Specialization::Symbolic,
                &THandling::Symbolic,
            )
            .map(|r| (k, n, r))
        })
        .collect::<Result<Vec<_>>>()?;
    results.sort_by_key(|(k, n, _)| (*k, *n));
    let mut outcome = ScanOutcome::default();
    for (k, n, rec) in results {
        if !rec.is_match {
            let m = build_matrix(&MatrixFamily::new(FamilyId::Conj24, n, k))?;
            outcome.mismatches.push(MismatchDetail {
                family: rec.family.clone(),
                n: rec.n,
                k: rec.k,
                lhs: rec.lhs.clone(),
                rhs: rec.rhs.clone(),
                matrix: m.to_string(),
            });
        }
        outcome.records.push(rec);
    }
    Ok(outcome)
}

/// The classic Hankel determinants of Catalan and Motzkin numbers, checked
/// from the specialized path counts: det(C_{i+j}) = 1, det(C_{i+j+1}) = 1,
/// det(C_{i+j+2}) = n+1, det(M_{i+j}) = 1, and the period-three sign pattern
/// of det(M_{i+j+1}).
pub fn classic_suite(n_max: usize) -> Result<Vec<VerificationRecord>> {
    let catalan = |m: usize| -> Result<Integer> {
        pgf_special_int(SpecKind::Catalan, &PGFQuery::new(2 * m, 0, 0, true))
    };
    let motzkin = |m: usize| -> Result<Integer> {
        pgf_special_int(SpecKind::Motzkin, &PGFQuery::new(m, 0, 0, true))
    };
    let mut cs = Vec::new();
    let mut ms = Vec::new();
    for m in 0..=(2 * n_max + 2) {
        cs.push(catalan(m)?);
        ms.push(motzkin(m)?);
    }
    let hankel = |vals: &[Integer], n: usize, shift: usize| -> Integer {
        Matrix::from_fn(n, n, |i, j| vals[i + j + shift].clone()).det_bareiss()
    };
    let mut records = Vec::new();
    let mut push = |label: &str, n: usize, lhs: Integer, rhs: Integer| {
        let start = Instant::now();
        let is_match = lhs == rhs;
        records.push(VerificationRecord {
            family: "classic".into(),
            n: n as u64,
            k: 0,
            spec: "symbolic".into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            case_label: label.into(),
            is_match,
            millis: start.elapsed().as_millis() as u64,
        });
    };
    for n in 1..=n_max {
        push("catalan hankel", n, hankel(&cs, n, 0), Integer::from(1));
        push(
            "catalan hankel shift 1",
            n,
            hankel(&cs, n, 1),
            Integer::from(1),
        );
        push(
            "catalan hankel shift 2",
            n,
            hankel(&cs, n, 2),
            Integer::from(n as i64 + 1),
        );
        push("motzkin hankel", n, hankel(&ms, n, 0), Integer::from(1));
        let expected = match n % 3 {
            0 => {
                if (n / 3) % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            1 => {
                if ((n - 1) / 3) % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            _ => 0,
        };
        push(
            "motzkin hankel shift 1",
            n,
            hankel(&ms, n, 1),
            Integer::from(expected),
        );
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm1_symbolic_grid_small() {
        let g = GridSpec::symbolic(vec![FamilyId::Thm1], 6, 2);
        let recs = verify_grid(&g).unwrap();
        assert_eq!(recs.len(), 18);
        assert!(recs.iter().all(|r| r.is_match), "{recs:#?}");
    }

    #[test]
    fn cor19_grid_matches_powers_of_two() {
        let g = GridSpec {
            families: vec![FamilyId::Cor19],
            n_min: 1,
            n_max: 8,
            k_min: 0,
            k_max: 0,
            spec: Specialization::Symbolic,
            t: THandling::Symbolic,
        };
        let recs = verify_grid(&g).unwrap();
        assert_eq!(recs.len(), 8);
        for r in &recs {
            assert!(r.is_match);
            assert_eq!(r.rhs, Integer::from(2).pow(r.n as u32 - 1).to_string());
        }
    }

    #[test]
    fn record_order_is_family_k_n() {
        let g = GridSpec::symbolic(vec![FamilyId::Thm3, FamilyId::Thm1], 3, 1);
        let recs = verify_grid(&g).unwrap();
        let keys: Vec<(String, i64, u64)> =
            recs.iter().map(|r| (r.family.clone(), r.k, r.n)).collect();
        let mut expect = Vec::new();
        for fam in ["thm3", "thm1"] {
            for k in 0..=1 {
                for n in 1..=3 {
                    expect.push((fam.to_string(), k, n));
                }
            }
        }
        assert_eq!(keys, expect);
    }

    #[test]
    fn scan_is_clean_at_small_scale() {
        let s = scan_conjecture24(6, 3).unwrap();
        assert!(s.mismatches.is_empty());
        assert_eq!(s.records.len(), 4 * 6);
    }

    #[test]
    fn classic_values() {
        let recs = classic_suite(6).unwrap();
        assert!(recs.iter().all(|r| r.is_match), "{recs:#?}");
        let c2 = recs
            .iter()
            .find(|r| r.case_label == "catalan hankel shift 2" && r.n == 4)
            .unwrap();
        assert_eq!(c2.lhs, "5");
        let m1 = recs
            .iter()
            .find(|r| r.case_label == "motzkin hankel shift 1" && r.n == 2)
            .unwrap();
        assert_eq!(m1.lhs, "0");
    }

    #[test]
    fn grid_caps_enforced() {
        let g = GridSpec::symbolic(vec![FamilyId::Thm8], CAP_SYMBOLIC_T_N + 1, 1);
        assert!(matches!(verify_grid(&g), Err(Error::BadGrid(_))));
        let mut g = GridSpec::symbolic(vec![FamilyId::Thm1], 4, 1);
        g.spec = Specialization::Catalan;
        // polynomial family without t: fine under specialization
        assert!(verify_grid(&g).is_ok());
        let mut g = GridSpec::symbolic(vec![FamilyId::Thm8], 4, 1);
        g.spec = Specialization::Catalan;
        assert!(matches!(verify_grid(&g), Err(Error::BadGrid(_))));
        g.t = THandling::Value(Integer::from(1));
        assert!(verify_grid(&g).is_ok());
    }

    #[test]
    fn shifted_and_sumform_grids_match() {
        let g = GridSpec::symbolic(
            vec![
                FamilyId::Shifted42,
                FamilyId::Shifted43,
                FamilyId::SumForm44,
                FamilyId::SumForm45,
            ],
            6,
            2,
        );
        let recs = verify_grid(&g).unwrap();
        assert_eq!(recs.len(), 4 * 3 * 6);
        for r in &recs {
            assert!(r.is_match, "{r:?}");
        }
    }

    #[test]
    fn specialized_thm1_catalan_grid() {
        let mut g = GridSpec::symbolic(vec![FamilyId::Thm1], 8, 3);
        g.spec = Specialization::Catalan;
        let recs = verify_grid(&g).unwrap();
        assert!(recs.iter().all(|r| r.is_match), "{recs:#?}");
    }

    #[test]
    fn specialized_thm1_splits_into_prefactored_binomial_dets() {
        // at the catalan point with even k the restricted Hankel matrix is a
        // checkerboard; its determinant is the product of the two
        // prefactored binomial family determinants at k' = k/2
        use crate::matrix::{checkerboard_split, SupportParity};
        use crate::rings::GaussInt;
        for k2 in 0..=2i64 {
            for n in 1..=8usize {
                let k = 2 * k2;
                let fam = MatrixFamily::new(FamilyId::Thm1, n, k);
                let BuiltMatrix::Poly(m) = build_matrix(&fam).unwrap() else {
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
                let (a, b, sign) = checkerboard_split(&spec, SupportParity::EvenSupport).unwrap();
                assert_eq!(sign, 1);
                let BuiltMatrix::Int(c12) =
                    build_matrix(&MatrixFamily::new(FamilyId::Cor12, n.div_ceil(2), k2)).unwrap()
                else {
                    unreachable!()
                };
                assert_eq!(a, c12, "even block n={n} k={k}");
                if n >= 2 {
                    let BuiltMatrix::Int(c13) =
                        build_matrix(&MatrixFamily::new(FamilyId::Cor13, n / 2, k2)).unwrap()
                    else {
                        unreachable!()
                    };
                    assert_eq!(b, c13, "odd block n={n} k={k}");
                }
                assert_eq!(
                    spec.det_bareiss(),
                    a.det_bareiss() * b.det_bareiss(),
                    "split product n={n} k={k}"
                );
            }
        }
    }
}
