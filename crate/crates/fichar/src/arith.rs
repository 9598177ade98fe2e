//! Small exact-arithmetic helpers shared across the crate.
//!
//! All computations in this crate run over `num`'s arbitrary-precision
//! integers and rationals; these are the handful of combinatorial
//! quantities everyone needs.

use num::{BigInt, BigRational, BigUint, One, Zero};

pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

/// Falling factorial (x)_k = x(x−1)⋯(x−k+1) for an integer x.
pub fn falling(x: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= x - BigInt::from(j);
    }
    acc
}

pub fn rat_int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Extracts an exact integer from a rational, if it is one.
pub fn as_integer(r: &BigRational) -> Option<BigInt> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}

pub fn uint_to_int(n: &BigUint) -> BigInt {
    BigInt::from(n.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(6), BigUint::from(720u32));
    }

    #[test]
    fn binomial_row() {
        let row: Vec<BigUint> = (0..=4).map(|k| binomial(4, k)).collect();
        let expect: Vec<BigUint> = [1u32, 4, 6, 4, 1].iter().map(|&x| BigUint::from(x)).collect();
        assert_eq!(row, expect);
        assert_eq!(binomial(3, 5), BigUint::zero());
    }

    #[test]
    fn falling_matches_definition() {
        // (5)_3 = 5·4·3
        assert_eq!(falling(&BigInt::from(5), 3), BigInt::from(60));
        assert_eq!(falling(&BigInt::from(5), 0), BigInt::one());
        // (2)_4 passes through zero
        assert_eq!(falling(&BigInt::from(2), 4), BigInt::zero());
    }
}
