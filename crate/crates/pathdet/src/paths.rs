//! Weighted three-step lattice paths and their generating functions.
//!
//! A path takes steps (1,1), (1,0), (1,-1) with weights 1, x+y, x*y. P_n(l,k)
//! sums the weights of all n-step paths from height l to height k; the
//! restricted variant P+_n(l,k) keeps only paths that never go below the
//! x-axis. Two independent routes compute these: a transfer dynamic program
//! and explicit binomial sums, each serving as an oracle for the other.

use num_traits::Zero;

use crate::binomial::{binom, trinom};
use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::rings::{Integer, RingValue};

/// Cap on `enumerate_paths`: 3^n step sequences get out of hand quickly.
pub const MAX_ENUM_STEPS: usize = 12;

/// Descriptor of a path generating function query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PGFQuery {
    /// number of steps
    pub n: usize,
    /// start height
    pub l: i64,
    /// end height
    pub k: i64,
    /// stay weakly above the x-axis
    pub restricted: bool,
}

impl PGFQuery {
    pub fn new(n: usize, l: i64, k: i64, restricted: bool) -> Self {
        PGFQuery {
            n,
            l,
            k,
            restricted,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.restricted && self.l < 0 {
            return Err(Error::InvalidQuery(format!(
                "restricted query must start on or above the axis, got l = {}",
                self.l
            )));
        }
        Ok(())
    }
}

/// One step of a three-step path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Up,
    Level,
    Down,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Level => 0,
            Step::Down => -1,
        }
    }

    /// Step weight as a polynomial: 1, x+y, or x*y.
    pub fn weight(self) -> MPoly {
        match self {
            Step::Up => MPoly::one(),
            Step::Level => MPoly::var_x().add(&MPoly::var_y()),
            Step::Down => MPoly::term(1, 1, 1, 0),
        }
    }
}

/// A concrete three-step path: a start height and a step sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub start: i64,
    pub steps: Vec<Step>,
}

impl Path {
    pub fn end(&self) -> i64 {
        self.start + self.steps.iter().map(|s| s.delta()).sum::<i64>()
    }

    /// Path weight (x+y)^{#level} * (xy)^{#down}.
    pub fn weight(&self) -> MPoly {
        let level = self.steps.iter().filter(|s| **s == Step::Level).count() as u32;
        let down = self.steps.iter().filter(|s| **s == Step::Down).count() as u32;
        Step::Level.weight().pow(level).mul(&MPoly::xy_pow(down))
    }

    /// Heights visited, including both endpoints.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = self.start;
        let mut out = vec![h];
        for s in &self.steps {
            h += s.delta();
            out.push(h);
        }
        out
    }
}

/// P_n(l,k) or P+_n(l,k) by the transfer dynamic program.
///
/// f_0(h) = [h = l]; f_{m+1}(h) = f_m(h-1) + (x+y) f_m(h) + xy f_m(h+1),
/// with h < 0 states dropped in the restricted case. Unreachable endpoints
/// give the zero polynomial, never an error.
pub fn pgf_dp(q: &PGFQuery) -> Result<MPoly> {
    q.validate()?;
    let n = q.n as i64;
    // reachable height band
    let lo = if q.restricted { 0 } else { q.l - n };
    let hi = q.l + n;
    if q.k < lo || q.k > hi {
        return Ok(MPoly::zero());
    }
    let width = (hi - lo + 1) as usize;
    let idx = |h: i64| (h - lo) as usize;
    let level_w = Step::Level.weight();
    let down_w = Step::Down.weight();
    let mut f = vec![MPoly::zero(); width];
    f[idx(q.l)] = MPoly::one();
    for _ in 0..q.n {
        let mut g = vec![MPoly::zero(); width];
        for (i, v) in f.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if i + 1 < width {
                g[i + 1] = g[i + 1].add(v);
            }
            g[i] = g[i].add(&v.mul(&level_w));
            if i > 0 {
                g[i - 1] = g[i - 1].add(&v.mul(&down_w));
            }
        }
        f = g;
    }
    Ok(f[idx(q.k)].clone())
}

/// P_n(0,kappa) by the explicit double-binomial sum, valid for any sign of kappa.
pub(crate) fn pgf_unrestricted_zero(n: usize, kappa: i64) -> MPoly {
    let n_i = n as i64;
    let mut acc = MPoly::zero();
    for l in 0..=n_i {
        let e = n_i - kappa - l;
        if e < 0 || e > n_i {
            continue;
        }
        let c = binom(n_i, l) * binom(n_i, e);
        if Zero::is_zero(&c) {
            continue;
        }
        acc = acc.add(&MPoly::term(c, l as u32, e as u32, 0));
    }
    acc
}

/// P_n(l,k) or P+_n(l,k) by closed formulas: the shift identity reduces to
/// start height 0, and restricted queries go through the reflection formula
/// P+_n(l,k) = P_n(l,k) - (xy)^{l+1} P_n(-l-2,k).
pub fn pgf_closed(q: &PGFQuery) -> Result<MPoly> {
    q.validate()?;
    if !q.restricted {
        return Ok(pgf_unrestricted_zero(q.n, q.k - q.l));
    }
    if q.k < 0 {
        // a restricted path cannot end below the axis
        return Ok(MPoly::zero());
    }
    let unres = pgf_unrestricted_zero(q.n, q.k - q.l);
    let mirrored = pgf_unrestricted_zero(q.n, q.k + q.l + 2);
    Ok(unres.sub(&MPoly::xy_pow(q.l as u32 + 1).mul(&mirrored)))
}

/// Weight specialization selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecKind {
    /// x = -y = sqrt(-1): level steps vanish, up/down pairs weigh 1.
    Catalan,
    /// x = 1/y = w (sixth root of unity): all steps weigh 1.
    Motzkin,
    /// x = y = 1: level steps weigh 2.
    Central,
}

impl SpecKind {
    /// The (x, y) evaluation point in its natural ring, with t = 1.
    pub fn point(self) -> (RingValue, RingValue, RingValue) {
        use crate::rings::{EisenInt, GaussInt, Ring};
        match self {
            SpecKind::Catalan => (
                RingValue::Gauss(GaussInt::i()),
                RingValue::Gauss(GaussInt::new(0, -1)),
                RingValue::Gauss(GaussInt::one()),
            ),
            SpecKind::Motzkin => (
                RingValue::Eisen(EisenInt::omega()),
                RingValue::Eisen(EisenInt::new(1, -1)),
                RingValue::Eisen(EisenInt::one()),
            ),
            SpecKind::Central => (
                RingValue::Int(Integer::from(1)),
                RingValue::Int(Integer::from(1)),
                RingValue::Int(Integer::from(1)),
            ),
        }
    }
}

/// Specialized path counts as plain integers (every specialization of a path
/// generating function is a rational integer).
pub fn pgf_special_int(kind: SpecKind, q: &PGFQuery) -> Result<Integer> {
    q.validate()?;
    if q.restricted && q.k < 0 {
        // the reflection-based formulas need k >= 0; the count itself is 0
        return Ok(Integer::zero());
    }
    let n = q.n as i64;
    let (l, k) = (q.l, q.k);
    let value = match kind {
        SpecKind::Catalan => {
            if (n + l + k) % 2 != 0 {
                Integer::zero()
            } else {
                let main = binom(n, (n + k - l) / 2);
                if q.restricted {
                    main - binom(n, (n + k + l + 2) / 2)
                } else {
                    main
                }
            }
        }
        SpecKind::Motzkin => {
            let mut acc = Integer::zero();
            for ell in 0..=n {
                acc += trinom(n, ell, ell + k - l);
                if q.restricted {
                    acc -= trinom(n, ell, ell + k + l + 2);
                }
            }
            acc
        }
        SpecKind::Central => {
            let main = binom(2 * n, n + k - l);
            if q.restricted {
                main - binom(2 * n, n + k + l + 2)
            } else {
                main
            }
        }
    };
    Ok(value)
}

/// Specialized path counts wrapped as tagged scalars.
pub fn pgf_special(kind: SpecKind, q: &PGFQuery) -> Result<RingValue> {
    pgf_special_int(kind, q).map(RingValue::Int)
}

/// Every admissible path for the query, in lexicographic step order
/// (Up < Level < Down).
pub fn enumerate_paths(q: &PGFQuery) -> Result<Vec<Path>> {
    enumerate_paths_capped(q, MAX_ENUM_STEPS)
}

pub fn enumerate_paths_capped(q: &PGFQuery, cap: usize) -> Result<Vec<Path>> {
    q.validate()?;
    if q.n > cap {
        return Err(Error::TooLarge(format!(
            "enumerating 3^{} step sequences exceeds the cap of {cap} steps",
            q.n
        )));
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(q.n);
    walk(q, q.l, &mut steps, &mut out);
    Ok(out)
}

fn walk(q: &PGFQuery, h: i64, steps: &mut Vec<Step>, out: &mut Vec<Path>) {
    let remaining = (q.n - steps.len()) as i64;
    // endpoint unreachable from here
    if (q.k - h).abs() > remaining {
        return;
    }
    if remaining == 0 {
        out.push(Path {
            start: q.l,
            steps: steps.clone(),
        });
        return;
    }
    for s in [Step::Up, Step::Level, Step::Down] {
        let nh = h + s.delta();
        if q.restricted && nh < 0 {
            continue;
        }
        steps.push(s);
        walk(q, nh, steps, out);
        steps.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize, l: i64, k: i64, restricted: bool) -> MPoly {
        pgf_dp(&PGFQuery::new(n, l, k, restricted)).unwrap()
    }

    #[test]
    fn dp_small_values() {
        assert_eq!(sym(0, 0, 0, true).to_string(), "1");
        assert_eq!(sym(2, 0, 0, false).to_string(), "x^2 + 4*x*y + y^2");
        assert_eq!(sym(2, 0, 0, true).to_string(), "x^2 + 3*x*y + y^2");
        assert_eq!(sym(3, 0, 1, true).to_string(), "3*x^2 + 8*x*y + 3*y^2");
        assert_eq!(sym(2, 0, 3, false).to_string(), "0");
        assert_eq!(sym(3, 0, 3, true).to_string(), "1");
    }

    #[test]
    fn closed_matches_examples() {
        let q = PGFQuery::new(2, 0, 1, false);
        assert_eq!(pgf_closed(&q).unwrap().to_string(), "2*x + 2*y");
        let q = PGFQuery::new(3, 0, 3, true);
        assert_eq!(pgf_closed(&q).unwrap().to_string(), "1");
        let q = PGFQuery::new(2, 0, 3, true);
        assert_eq!(pgf_closed(&q).unwrap().to_string(), "0");
    }

    #[test]
    fn restricted_negative_end_is_zero() {
        for n in 0..6 {
            for l in 0..3 {
                for k in -4..0 {
                    let q = PGFQuery::new(n, l, k, true);
                    assert!(pgf_dp(&q).unwrap().is_zero());
                    assert!(pgf_closed(&q).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn invalid_restricted_start() {
        let q = PGFQuery::new(1, -1, 0, true);
        assert!(matches!(pgf_dp(&q), Err(Error::InvalidQuery(_))));
        assert!(matches!(pgf_closed(&q), Err(Error::InvalidQuery(_))));
    }

    #[test]
    fn specials_match_known_values() {
        // C_2 = 2
        let q = PGFQuery::new(4, 0, 0, true);
        assert_eq!(
            pgf_special_int(SpecKind::Catalan, &q).unwrap(),
            Integer::from(2)
        );
        // M_4 = 9
        assert_eq!(
            pgf_special_int(SpecKind::Motzkin, &q).unwrap(),
            Integer::from(9)
        );
        // binom(4, 3) = 4
        let q = PGFQuery::new(2, 0, 1, false);
        assert_eq!(
            pgf_special_int(SpecKind::Central, &q).unwrap(),
            Integer::from(4)
        );
    }

    #[test]
    fn specials_agree_with_evaluated_dp() {
        for kind in [SpecKind::Catalan, SpecKind::Motzkin, SpecKind::Central] {
            let (x, y, t) = kind.point();
            for n in 0..7usize {
                for l in 0..3 {
                    for k in -3..4 {
                        for restricted in [false, true] {
                            let q = PGFQuery::new(n, l, k, restricted);
                            let direct = pgf_special_int(kind, &q).unwrap();
                            let via_poly = pgf_dp(&q).unwrap().eval(&x, &y, &t).unwrap();
                            let expected = match &via_poly {
                                RingValue::Int(v) => v.clone(),
                                RingValue::Gauss(g) => {
                                    assert_eq!(g.im, Integer::from(0), "{kind:?} {q:?}");
                                    g.re.clone()
                                }
                                RingValue::Eisen(e) => {
                                    assert_eq!(e.b, Integer::from(0), "{kind:?} {q:?}");
                                    e.a.clone()
                                }
                                RingValue::Poly(_) => unreachable!(),
                            };
                            assert_eq!(direct, expected, "{kind:?} {q:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_dp() {
        let q = PGFQuery::new(1, 0, 0, true);
        let paths = enumerate_paths(&q).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].steps, vec![Step::Level]);

        let q = PGFQuery::new(2, 0, 0, true);
        assert_eq!(enumerate_paths(&q).unwrap().len(), 2); // LL, UD
        let q = PGFQuery::new(2, 0, 0, false);
        assert_eq!(enumerate_paths(&q).unwrap().len(), 3); // LL, UD, DU

        for n in 0..7usize {
            for (l, k, restricted) in [(0, 0, true), (0, 1, true), (1, 0, false), (0, -2, false)] {
                let q = PGFQuery::new(n, l, k, restricted);
                let total = enumerate_paths(&q)
                    .unwrap()
                    .iter()
                    .fold(MPoly::zero(), |acc, p| acc.add(&p.weight()));
                assert_eq!(total, pgf_dp(&q).unwrap(), "{q:?}");
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        let q = PGFQuery::new(MAX_ENUM_STEPS + 1, 0, 0, false);
        assert!(matches!(enumerate_paths(&q), Err(Error::TooLarge(_))));
    }
}
