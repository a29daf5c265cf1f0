//! Total binomial and trinomial coefficients over arbitrary-precision integers.

use num_traits::{One, Zero};

use crate::rings::Integer;

/// Binomial coefficient as a total function: 0 for k < 0 or (n >= 0 and k > n);
/// for negative n the usual generalization (-1)^k * binom(k-n-1, k).
pub fn binom(n: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    if n < 0 {
        let v = binom(k - n - 1, k);
        return if k % 2 == 0 { v } else { -v };
    }
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// Trinomial coefficient n! / (k1! k2! (n-k1-k2)!), zero whenever any of
/// k1, k2, n-k1-k2 is negative.
pub fn trinom(n: i64, k1: i64, k2: i64) -> Integer {
    if k1 < 0 || k2 < 0 || n - k1 - k2 < 0 {
        return Integer::zero();
    }
    binom(n, k1) * binom(n - k1, k2)
}

/// binom(a, 2) = a(a-1)/2 on machine integers, used by exponent bookkeeping.
pub fn choose2(a: i64) -> i64 {
    a * (a - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_values() {
        assert_eq!(binom(4, 2), Integer::from(6));
        assert_eq!(binom(4, 5), Integer::from(0));
        assert_eq!(binom(4, -1), Integer::from(0));
        assert_eq!(binom(0, 0), Integer::from(1));
        assert_eq!(binom(40, 20), "137846528820".parse().unwrap());
    }

    #[test]
    fn trinom_values() {
        assert_eq!(trinom(2, 1, 1), Integer::from(2));
        assert_eq!(trinom(3, 1, 3), Integer::from(0));
        assert_eq!(trinom(4, 1, 1), Integer::from(12));
        assert_eq!(trinom(4, 0, 2), Integer::from(6));
        assert_eq!(trinom(-1, 0, 0), Integer::from(0));
    }
}
