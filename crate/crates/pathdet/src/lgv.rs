//! Brute-force signed sums over non-intersecting path families.
//!
//! The signed sum over all permutations of endpoint assignments, restricted to
//! families in which no two paths share a lattice point, equals the
//! determinant of single-path generating functions. Paths are allowed to
//! cross at non-lattice points (an up-step and a down-step trading places),
//! so the non-intersection test compares exact lattice-point sets.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::paths::Step;

/// Caps keeping the exhaustive search at desk scale.
pub const MAX_LGV_PATHS: usize = 4;
pub const MAX_LGV_LEN: i64 = 5;

/// Start and end point tuples plus the ambient lattice choice.
#[derive(Clone, Debug)]
pub struct PointTuple {
    pub starts: Vec<(i64, i64)>,
    pub ends: Vec<(i64, i64)>,
    /// restrict to the closed upper half-plane
    pub upper_half: bool,
}

/// One enumerated path anchored at a start point.
struct AnchoredPath {
    points: Vec<(i64, i64)>,
    weight: MPoly,
}

/// Sum of sgn(sigma) * GF(non-intersecting families A -> E_sigma) over all
/// permutations sigma.
pub fn lgv_signed_sum(pts: &PointTuple) -> Result<MPoly> {
    if pts.starts.len() != pts.ends.len() {
        return Err(Error::InvalidQuery(format!(
            "start/end tuples differ in length: {} vs {}",
            pts.starts.len(),
            pts.ends.len()
        )));
    }
    let n = pts.starts.len();
    if n > MAX_LGV_PATHS {
        return Err(Error::TooLarge(format!(
            "{n} paths exceed the cap of {MAX_LGV_PATHS}"
        )));
    }
    for (a, e) in pts
        .starts
        .iter()
        .flat_map(|a| pts.ends.iter().map(move |e| (a, e)))
    {
        if e.0 - a.0 > MAX_LGV_LEN {
            return Err(Error::TooLarge(format!(
                "path from {a:?} to {e:?} needs {} steps, cap is {MAX_LGV_LEN}",
                e.0 - a.0
            )));
        }
    }

    let mut total = MPoly::zero();
    for (perm, sign) in permutations_with_sign(n) {
        // slot i holds paths from starts[i] to ends[perm[i]]
        let slot_paths: Vec<Vec<AnchoredPath>> = (0..n)
            .map(|i| enumerate_between(pts.starts[i], pts.ends[perm[i]], pts.upper_half))
            .collect();
        if slot_paths.iter().any(|s| s.is_empty()) {
            continue;
        }
        let mut acc = MPoly::zero();
        let mut chosen: Vec<&AnchoredPath> = Vec::with_capacity(n);
        let mut occupied: HashSet<(i64, i64)> = HashSet::new();
        compose(&slot_paths, 0, &mut chosen, &mut occupied, &mut acc);
        total = if sign > 0 {
            total.add(&acc)
        } else {
            total.sub(&acc)
        };
    }
    Ok(total)
}

fn compose<'a>(
    slots: &'a [Vec<AnchoredPath>],
    i: usize,
    chosen: &mut Vec<&'a AnchoredPath>,
    occupied: &mut HashSet<(i64, i64)>,
    acc: &mut MPoly,
) {
    if i == slots.len() {
        let w = chosen.iter().fold(MPoly::one(), |w, p| w.mul(&p.weight));
        *acc = acc.add(&w);
        return;
    }
    'next: for p in &slots[i] {
        for pt in &p.points {
            if occupied.contains(pt) {
                continue 'next;
            }
        }
        for pt in &p.points {
            occupied.insert(*pt);
        }
        chosen.push(p);
        compose(slots, i + 1, chosen, occupied, acc);
        chosen.pop();
        for pt in &p.points {
            occupied.remove(pt);
        }
    }
}

/// All three-step paths from a to e staying in the lattice.
fn enumerate_between(a: (i64, i64), e: (i64, i64), upper_half: bool) -> Vec<AnchoredPath> {
    let len = e.0 - a.0;
    if len < 0 || (e.1 - a.1).abs() > len {
        return Vec::new();
    }
    if upper_half && (a.1 < 0 || e.1 < 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(len as usize);
    fn rec(
        a: (i64, i64),
        e: (i64, i64),
        h: i64,
        upper_half: bool,
        steps: &mut Vec<Step>,
        out: &mut Vec<AnchoredPath>,
    ) {
        let remaining = e.0 - a.0 - steps.len() as i64;
        if (e.1 - h).abs() > remaining {
            return;
        }
        if remaining == 0 {
            let mut points = Vec::with_capacity(steps.len() + 1);
            let mut hh = a.1;
            points.push((a.0, hh));
            for (idx, s) in steps.iter().enumerate() {
                hh += s.delta();
                points.push((a.0 + idx as i64 + 1, hh));
            }
            let level = steps.iter().filter(|s| **s == Step::Level).count() as u32;
            let down = steps.iter().filter(|s| **s == Step::Down).count() as u32;
            let weight = Step::Level.weight().pow(level).mul(&MPoly::xy_pow(down));
            out.push(AnchoredPath { points, weight });
            return;
        }
        for s in [Step::Up, Step::Level, Step::Down] {
            let nh = h + s.delta();
            if upper_half && nh < 0 {
                continue;
            }
            steps.push(s);
            rec(a, e, nh, upper_half, steps, out);
            steps.pop();
        }
    }
    rec(a, e, a.1, upper_half, &mut steps, &mut out);
    out
}

/// All permutations of 0..n with their signs, in a deterministic order.
fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(cur: &mut Vec<usize>, k: usize, out: &mut Vec<(Vec<usize>, i32)>) {
        if k == cur.len() {
            let mut inv = 0;
            for i in 0..cur.len() {
                for j in i + 1..cur.len() {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(cur, k + 1, out);
            cur.swap(k, i);
        }
    }
    rec(&mut cur, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{pgf_dp, PGFQuery};

    #[test]
    fn single_path_equals_pgf() {
        let pts = PointTuple {
            starts: vec![(0, 0)],
            ends: vec![(2, 0)],
            upper_half: true,
        };
        let got = lgv_signed_sum(&pts).unwrap();
        assert_eq!(got.to_string(), "x^2 + 3*x*y + y^2");
        assert_eq!(got, pgf_dp(&PGFQuery::new(2, 0, 0, true)).unwrap());
    }

    #[test]
    fn unreachable_endpoints_vanish() {
        let pts = PointTuple {
            starts: vec![(0, 0), (0, 5)],
            ends: vec![(1, 3), (1, 0)],
            upper_half: false,
        };
        assert!(lgv_signed_sum(&pts).unwrap().is_zero());
    }

    #[test]
    fn two_path_determinant() {
        // A_i = (-i, 0), E_i = (i, 1): matches det [[P+_{i+j}(0,1)]] = -1
        let pts = PointTuple {
            starts: vec![(0, 0), (-1, 0)],
            ends: vec![(0, 1), (1, 1)],
            upper_half: true,
        };
        assert_eq!(lgv_signed_sum(&pts).unwrap().to_string(), "-1");
    }

    #[test]
    fn caps_enforced() {
        let pts = PointTuple {
            starts: vec![(0, 0)],
            ends: vec![(9, 0)],
            upper_half: true,
        };
        assert!(matches!(lgv_signed_sum(&pts), Err(Error::TooLarge(_))));
        let pts = PointTuple {
            starts: vec![(0, 0); 5],
            ends: vec![(1, 0); 5],
            upper_half: true,
        };
        assert!(matches!(lgv_signed_sum(&pts), Err(Error::TooLarge(_))));
    }
}
