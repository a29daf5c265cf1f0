//! Sparse multivariate polynomials in x, y, t over arbitrary-precision integers.
//!
//! Terms are kept as a vector sorted in ascending graded-lexicographic order
//! with x > y > t, with no zero coefficients stored. Equality of values is
//! equality of the term vectors. The same order drives exact division and the
//! canonical text form (descending, so leading term first).

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rings::{Integer, Ring, RingValue};

/// Exponent triple of a single monomial x^ex * y^ey * t^et.
///
/// Exponents are machine-width and checked: overflow aborts. Path generating
/// functions at desk scale stay far below that.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub ex: u32,
    pub ey: u32,
    pub et: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        ex: 0,
        ey: 0,
        et: 0,
    };

    pub fn new(ex: u32, ey: u32, et: u32) -> Self {
        Monomial { ex, ey, et }
    }

    pub fn total_degree(&self) -> u32 {
        self.ex
            .checked_add(self.ey)
            .and_then(|d| d.checked_add(self.et))
            .expect("monomial degree overflow")
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial {
            ex: self.ex.checked_add(rhs.ex).expect("exponent overflow"),
            ey: self.ey.checked_add(rhs.ey).expect("exponent overflow"),
            et: self.et.checked_add(rhs.et).expect("exponent overflow"),
        }
    }

    /// Componentwise division; `None` when `rhs` does not divide `self`.
    fn div(&self, rhs: &Monomial) -> Option<Monomial> {
        Some(Monomial {
            ex: self.ex.checked_sub(rhs.ex)?,
            ey: self.ey.checked_sub(rhs.ey)?,
            et: self.et.checked_sub(rhs.et)?,
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total_degree(), self.ex, self.ey, self.et).cmp(&(
            other.total_degree(),
            other.ex,
            other.ey,
            other.et,
        ))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over Z in x, y, t.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    /// (monomial, coefficient) pairs, ascending graded-lex, coefficients non-zero.
    terms: Vec<(Monomial, Integer)>,
}

impl MPoly {
    // ---- constructors ----

    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(Integer::from(1))
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        let c = c.into();
        if Zero::is_zero(&c) {
            return MPoly::zero();
        }
        MPoly {
            terms: vec![(Monomial::ONE, c)],
        }
    }

    pub fn var_x() -> Self {
        MPoly::term(1, 1, 0, 0)
    }

    pub fn var_y() -> Self {
        MPoly::term(1, 0, 1, 0)
    }

    pub fn var_t() -> Self {
        MPoly::term(1, 0, 0, 1)
    }

    /// c * x^ex * y^ey * t^et
    pub fn term(c: impl Into<Integer>, ex: u32, ey: u32, et: u32) -> Self {
        let c = c.into();
        if Zero::is_zero(&c) {
            return MPoly::zero();
        }
        MPoly {
            terms: vec![(Monomial::new(ex, ey, et), c)],
        }
    }

    /// (x*y)^e
    pub fn xy_pow(e: u32) -> Self {
        MPoly::term(1, e, e, 0)
    }

    // ---- inspection ----

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Integer)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.total_degree())
    }

    /// Leading term under graded-lex x > y > t.
    fn leading(&self) -> Option<&(Monomial, Integer)> {
        self.terms.last()
    }

    pub fn coeff(&self, m: &Monomial) -> Integer {
        match self.terms.binary_search_by(|(mm, _)| mm.cmp(m)) {
            Ok(idx) => self.terms[idx].1.clone(),
            Err(_) => Integer::from(0),
        }
    }

    // ---- arithmetic ----

    pub fn add(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match ma.cmp(mb) {
                Ordering::Less => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((*mb, if negate_rhs { -cb } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_rhs { ca - cb } else { ca + cb };
                    if !Zero::is_zero(&c) {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().map(|(m, c)| (*m, c.clone())));
        out.extend(
            rhs.terms[j..]
                .iter()
                .map(|(m, c)| (*m, if negate_rhs { -c } else { c.clone() })),
        );
        MPoly { terms: out }
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        // single-term fast path covers the very common monomial scalings
        if rhs.terms.len() == 1 {
            return self.mul_term(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.terms.len() == 1 {
            return rhs.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                prods.push((ma.mul(mb), ca * cb));
            }
        }
        prods.sort_unstable_by_key(|a| a.0);
        let mut out: Vec<(Monomial, Integer)> = Vec::with_capacity(prods.len());
        for (m, c) in prods {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !Zero::is_zero(c));
        MPoly { terms: out }
    }

    fn mul_term(&self, m: &Monomial, c: &Integer) -> Self {
        if Zero::is_zero(c) {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Integer) -> Self {
        self.mul_term(&Monomial::ONE, c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact multivariate division under graded-lex x > y > t.
    ///
    /// Returns q with q * den = self; `Err(NonExactDivision)` if no such
    /// polynomial exists.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NonExactDivision(
                "division by zero polynomial".into(),
            ));
        }
        let (dm, dc) = den.leading().unwrap();
        let mut rem = self.clone();
        let mut quo: Vec<(Monomial, Integer)> = Vec::new();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm
                .div(dm)
                .ok_or_else(|| Error::NonExactDivision(format!("({self}) / ({den})")))?;
            let (qc, r) = num_integer::Integer::div_rem(rc, dc);
            if !Zero::is_zero(&r) {
                return Err(Error::NonExactDivision(format!("({self}) / ({den})")));
            }
            rem = rem.sub(&den.mul_term(&qm, &qc));
            quo.push((qm, qc));
        }
        quo.sort_unstable_by_key(|a| a.0);
        Ok(MPoly { terms: quo })
    }

    // ---- evaluation ----

    /// Evaluate in any ring, mapping x, y, t to the given values.
    pub fn eval_in<R: Ring>(&self, x: &R, y: &R, t: &R) -> R {
        let mut xp = PowCache::new(x);
        let mut yp = PowCache::new(y);
        let mut tp = PowCache::new(t);
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut v = R::from_int(c);
            v = v.mul(xp.get(m.ex));
            v = v.mul(yp.get(m.ey));
            v = v.mul(tp.get(m.et));
            acc = acc.add(&v);
        }
        acc
    }

    /// Evaluate at tagged scalars; all three must carry the same tag.
    pub fn eval(&self, xv: &RingValue, yv: &RingValue, tv: &RingValue) -> Result<RingValue> {
        match (xv, yv, tv) {
            (RingValue::Int(x), RingValue::Int(y), RingValue::Int(t)) => {
                Ok(RingValue::Int(self.eval_in(x, y, t)))
            }
            (RingValue::Gauss(x), RingValue::Gauss(y), RingValue::Gauss(t)) => {
                Ok(RingValue::Gauss(self.eval_in(x, y, t)))
            }
            (RingValue::Eisen(x), RingValue::Eisen(y), RingValue::Eisen(t)) => {
                Ok(RingValue::Eisen(self.eval_in(x, y, t)))
            }
            (RingValue::Poly(x), RingValue::Poly(y), RingValue::Poly(t)) => {
                Ok(RingValue::Poly(self.eval_in(x, y, t)))
            }
            _ => {
                let tags = [xv.tag(), yv.tag(), tv.tag()];
                let other = tags.iter().find(|t| **t != tags[0]).unwrap_or(&tags[1]);
                Err(Error::MixedRings(tags[0], other))
            }
        }
    }

    /// Substitute an exact integer for t, keeping x and y symbolic.
    pub fn eval_t(&self, t: &Integer) -> MPoly {
        let mut acc = MPoly::zero();
        for (m, c) in &self.terms {
            let c = c * num_traits::pow::pow(t.clone(), m.et as usize);
            acc = acc.add(&MPoly::term(c, m.ex, m.ey, 0));
        }
        acc
    }
}

/// Memoized powers of a fixed base.
struct PowCache<'a, R: Ring> {
    base: &'a R,
    powers: Vec<R>,
}

impl<'a, R: Ring> PowCache<'a, R> {
    fn new(base: &'a R) -> Self {
        PowCache {
            base,
            powers: vec![R::one()],
        }
    }

    fn get(&mut self, e: u32) -> &R {
        while self.powers.len() <= e as usize {
            let next = self.powers.last().unwrap().mul(self.base);
            self.powers.push(next);
        }
        &self.powers[e as usize]
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        MPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        MPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
    fn from_int(n: &Integer) -> Self {
        MPoly::constant(n.clone())
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        MPoly::exact_div(self, rhs)
    }
}

impl fmt::Display for MPoly {
    /// Canonical text: terms in descending graded-lex order, "-" folded into
    /// the separator, coefficient 1 omitted unless the term is constant.
    /// Example: `x^2 + 4*x*y + y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mag = c.abs();
            let is_const = *m == Monomial::ONE;
            let mut lead = true;
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
                lead = false;
            }
            for (name, e) in [("x", m.ex), ("y", m.ey), ("t", m.et)] {
                if e == 0 {
                    continue;
                }
                if !lead {
                    write!(f, "*")?;
                }
                lead = false;
                write!(f, "{name}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MPoly {
        MPoly::var_x()
    }
    fn y() -> MPoly {
        MPoly::var_y()
    }

    #[test]
    fn arith_basics() {
        assert_eq!(x().add(&y()).to_string(), "x + y");
        let s = x().add(&y());
        assert_eq!(s.mul(&s).to_string(), "x^2 + 2*x*y + y^2");
        let xy = x().mul(&y());
        assert_eq!(xy.pow(3).to_string(), "x^3*y^3");
    }

    #[test]
    fn display_edge_cases() {
        assert_eq!(MPoly::zero().to_string(), "0");
        assert_eq!(MPoly::constant(-7).to_string(), "-7");
        assert_eq!(x().sub(&y()).to_string(), "x - y");
        assert_eq!(MPoly::term(-1, 2, 0, 0).sub(&y()).to_string(), "-x^2 - y");
        assert_eq!(MPoly::term(4, 1, 1, 2).to_string(), "4*x*y*t^2");
    }

    #[test]
    fn graded_lex_order() {
        // x^2 > x*y > y^2 > x > y > t > 1 in the printed (descending) order
        let p = MPoly::one()
            .add(&x())
            .add(&y())
            .add(&MPoly::var_t())
            .add(&MPoly::term(1, 2, 0, 0))
            .add(&MPoly::term(1, 1, 1, 0))
            .add(&MPoly::term(1, 0, 2, 0));
        assert_eq!(p.to_string(), "x^2 + x*y + y^2 + x + y + t + 1");
    }

    #[test]
    fn exact_div_examples() {
        let num = x().mul(&x()).sub(&y().mul(&y()));
        let q = num.exact_div(&x().sub(&y())).unwrap();
        assert_eq!(q.to_string(), "x + y");

        let x2y2 = MPoly::term(1, 2, 0, 0).add(&MPoly::term(1, 0, 2, 0));
        let x6y6 = MPoly::term(1, 6, 0, 0).add(&MPoly::term(1, 0, 6, 0));
        assert_eq!(
            x6y6.exact_div(&x2y2).unwrap().to_string(),
            "x^4 - x^2*y^2 + y^4"
        );

        let bad = MPoly::term(1, 2, 0, 0).add(&MPoly::term(1, 0, 2, 0));
        assert!(matches!(
            bad.exact_div(&x().add(&y())),
            Err(Error::NonExactDivision(_))
        ));
    }

    #[test]
    fn mul_then_div_roundtrip() {
        let p = x()
            .add(&y())
            .add(&MPoly::constant(3))
            .mul(&x().sub(&MPoly::var_t()));
        let q = MPoly::term(2, 1, 2, 1).add(&MPoly::constant(-5)).add(&x());
        let r = p.mul(&q);
        assert_eq!(r.exact_div(&q).unwrap(), p);
        assert_eq!(r.exact_div(&p).unwrap(), q);
    }

    #[test]
    fn eval_specializations() {
        use crate::rings::{EisenInt, GaussInt};
        // x + y at x = i, y = -i
        let s = x().add(&y());
        let v = s.eval_in(&GaussInt::i(), &GaussInt::new(0, -1), &GaussInt::one());
        assert!(Ring::is_zero(&v));
        // x*y at x = w, y = 1 - w
        let p = x().mul(&y());
        let v = p.eval_in(&EisenInt::omega(), &EisenInt::new(1, -1), &EisenInt::one());
        assert_eq!(v, EisenInt::new(1, 0));
        // x^2 + 4xy + y^2 at x = y = 1
        let q = MPoly::term(1, 2, 0, 0)
            .add(&MPoly::term(4, 1, 1, 0))
            .add(&MPoly::term(1, 0, 2, 0));
        assert_eq!(
            q.eval_in(&Integer::from(1), &Integer::from(1), &Integer::from(1)),
            Integer::from(6)
        );
    }

    #[test]
    fn eval_t_substitution() {
        // (x + t*y) at t = 3 -> x + 3y
        let p = x().add(&MPoly::term(1, 0, 1, 1));
        assert_eq!(p.eval_t(&Integer::from(3)).to_string(), "x + 3*y");
    }
}
