//! Exact scalar rings: arbitrary-precision integers, Gaussian integers
//! `Z[i]`, Eisenstein integers `Z[w]` with w a primitive sixth root of unity,
//! and the
//! tagged union `RingValue` used at API boundaries.
//!
//! Determinant and evaluation code is generic over [`Ring`], an integral
//! domain with exact division. `RingValue` is deliberately a closed union,
//! not a ring: its binary operations refuse to mix tags.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as NumInteger;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer. Arithmetic never overflows.
pub type Integer = BigInt;

/// An integral domain with exact division, as needed by fraction-free
/// elimination and polynomial evaluation.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Embed an integer.
    fn from_int(n: &Integer) -> Self;
    /// Exact division; `Err(NonExactDivision)` if `rhs` does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Result<Self>;
}

impl Ring for Integer {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn one() -> Self {
        <BigInt as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: &Integer) -> Self {
        n.clone()
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::NonExactDivision("division by zero".into()));
        }
        let (q, r) = self.div_rem(rhs);
        if !Zero::is_zero(&r) {
            return Err(Error::NonExactDivision(format!("{self} / {rhs}")));
        }
        Ok(q)
    }
}

/// Gaussian integer re + im*i with i^2 = -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussInt {
    pub re: Integer,
    pub im: Integer,
}

impl GaussInt {
    pub fn new(re: impl Into<Integer>, im: impl Into<Integer>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Field norm re^2 + im^2.
    pub fn norm(&self) -> Integer {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_complex(f, &self.re, &self.im, "i")
    }
}

impl Ring for GaussInt {
    fn zero() -> Self {
        GaussInt::new(0, 0)
    }
    fn one() -> Self {
        GaussInt::new(1, 0)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn neg(&self) -> Self {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
    fn from_int(n: &Integer) -> Self {
        GaussInt {
            re: n.clone(),
            im: Integer::from(0),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if Ring::is_zero(rhs) {
            return Err(Error::NonExactDivision("division by zero".into()));
        }
        let num = self.mul(&rhs.conj());
        let nrm = rhs.norm();
        Ok(GaussInt {
            re: num.re.exact_div(&nrm)?,
            im: num.im.exact_div(&nrm)?,
        })
    }
}

/// Eisenstein integer a + b*w in the basis {1, w}, where w is a primitive
/// SIXTH root of unity, so w^2 = w - 1. Note this is the sixth root, not the
/// cube root: w = (1 + sqrt(-3))/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisenInt {
    pub a: Integer,
    pub b: Integer,
}

impl EisenInt {
    pub fn new(a: impl Into<Integer>, b: impl Into<Integer>) -> Self {
        EisenInt {
            a: a.into(),
            b: b.into(),
        }
    }

    /// The generator w.
    pub fn omega() -> Self {
        EisenInt::new(0, 1)
    }

    /// Complex conjugate: conj(a + b*w) = (a + b) - b*w.
    pub fn conj(&self) -> Self {
        EisenInt {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// Field norm a^2 + a*b + b^2.
    pub fn norm(&self) -> Integer {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }
}

impl fmt::Display for EisenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_complex(f, &self.a, &self.b, "w")
    }
}

impl Ring for EisenInt {
    fn zero() -> Self {
        EisenInt::new(0, 0)
    }
    fn one() -> Self {
        EisenInt::new(1, 0)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, rhs: &Self) -> Self {
        EisenInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        EisenInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        // (a+bw)(c+dw) = (ac - bd) + (ad + bc + bd)w, using w^2 = w - 1
        let (a, b, c, d) = (&self.a, &self.b, &rhs.a, &rhs.b);
        EisenInt {
            a: a * c - b * d,
            b: a * d + b * c + b * d,
        }
    }
    fn neg(&self) -> Self {
        EisenInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
    fn from_int(n: &Integer) -> Self {
        EisenInt {
            a: n.clone(),
            b: Integer::from(0),
        }
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if Ring::is_zero(rhs) {
            return Err(Error::NonExactDivision("division by zero".into()));
        }
        let num = self.mul(&rhs.conj());
        let nrm = rhs.norm();
        Ok(EisenInt {
            a: num.a.exact_div(&nrm)?,
            b: num.b.exact_div(&nrm)?,
        })
    }
}

/// Render re + im*unit without redundant signs or unit coefficients.
fn write_complex(
    f: &mut fmt::Formatter<'_>,
    re: &Integer,
    im: &Integer,
    unit: &str,
) -> fmt::Result {
    if Zero::is_zero(im) {
        return write!(f, "{re}");
    }
    let mut first = true;
    if !Zero::is_zero(re) {
        write!(f, "{re}")?;
        first = false;
    }
    if !first {
        write!(f, "{}", if im.is_negative() { "-" } else { "+" })?;
    } else if im.is_negative() {
        write!(f, "-")?;
    }
    let m = im.abs();
    if m.is_one() {
        write!(f, "{unit}")
    } else {
        write!(f, "{m}*{unit}")
    }
}

/// Tagged exact scalar: the closed union handed across API boundaries.
/// Binary operations only combine identically-tagged values.
#[derive(Clone, Debug, PartialEq)]
pub enum RingValue {
    Int(Integer),
    Gauss(GaussInt),
    Eisen(EisenInt),
    Poly(crate::mpoly::MPoly),
}

impl RingValue {
    pub fn tag(&self) -> &'static str {
        match self {
            RingValue::Int(_) => "int",
            RingValue::Gauss(_) => "gauss",
            RingValue::Eisen(_) => "eisen",
            RingValue::Poly(_) => "poly",
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingValue::Int(v) => Zero::is_zero(v),
            RingValue::Gauss(v) => Ring::is_zero(v),
            RingValue::Eisen(v) => Ring::is_zero(v),
            RingValue::Poly(v) => v.is_zero(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        binop(self, rhs, Ring::add, Ring::add, Ring::add, |a, b| a.add(b))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        binop(self, rhs, Ring::sub, Ring::sub, Ring::sub, |a, b| a.sub(b))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        binop(self, rhs, Ring::mul, Ring::mul, Ring::mul, |a, b| a.mul(b))
    }
}

fn binop(
    lhs: &RingValue,
    rhs: &RingValue,
    fi: impl Fn(&Integer, &Integer) -> Integer,
    fg: impl Fn(&GaussInt, &GaussInt) -> GaussInt,
    fe: impl Fn(&EisenInt, &EisenInt) -> EisenInt,
    fp: impl Fn(&crate::mpoly::MPoly, &crate::mpoly::MPoly) -> crate::mpoly::MPoly,
) -> Result<RingValue> {
    match (lhs, rhs) {
        (RingValue::Int(a), RingValue::Int(b)) => Ok(RingValue::Int(fi(a, b))),
        (RingValue::Gauss(a), RingValue::Gauss(b)) => Ok(RingValue::Gauss(fg(a, b))),
        (RingValue::Eisen(a), RingValue::Eisen(b)) => Ok(RingValue::Eisen(fe(a, b))),
        (RingValue::Poly(a), RingValue::Poly(b)) => Ok(RingValue::Poly(fp(a, b))),
        _ => Err(Error::MixedRings(lhs.tag(), rhs.tag())),
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Int(v) => write!(f, "{v}"),
            RingValue::Gauss(v) => write!(f, "{v}"),
            RingValue::Eisen(v) => write!(f, "{v}"),
            RingValue::Poly(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_basics() {
        let i = GaussInt::i();
        assert_eq!(i.mul(&i), GaussInt::new(-1, 0));
        let z = GaussInt::new(3, 2);
        let w = GaussInt::new(1, -4);
        assert_eq!(z.mul(&w), GaussInt::new(11, -10));
        assert_eq!(z.mul(&w).exact_div(&w).unwrap(), z);
    }

    #[test]
    fn eisen_units() {
        // w^2 = w - 1, w^3 = -1, w^6 = 1
        let w = EisenInt::omega();
        let w2 = w.mul(&w);
        assert_eq!(w2, EisenInt::new(-1, 1));
        let w3 = w2.mul(&w);
        assert_eq!(w3, EisenInt::new(-1, 0));
        let w6 = w3.mul(&w3);
        assert_eq!(w6, EisenInt::new(1, 0));
        // w * (1 - w) = 1
        let y = EisenInt::new(1, -1);
        assert_eq!(w.mul(&y), EisenInt::new(1, 0));
    }

    #[test]
    fn eisen_exact_div() {
        let z = EisenInt::new(5, -3);
        let w = EisenInt::new(2, 7);
        assert_eq!(z.mul(&w).exact_div(&w).unwrap(), z);
        assert!(EisenInt::new(1, 0).exact_div(&EisenInt::new(2, 0)).is_err());
    }

    #[test]
    fn mixed_tags_rejected() {
        let a = RingValue::Int(Integer::from(1));
        let b = RingValue::Gauss(GaussInt::i());
        assert_eq!(a.add(&b), Err(Error::MixedRings("int", "gauss")));
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussInt::new(3, -2).to_string(), "3-2*i");
        assert_eq!(GaussInt::new(0, 1).to_string(), "i");
        assert_eq!(GaussInt::new(-1, 0).to_string(), "-1");
        assert_eq!(EisenInt::new(1, -1).to_string(), "1-w");
        assert_eq!(EisenInt::new(0, 2).to_string(), "2*w");
    }
}
