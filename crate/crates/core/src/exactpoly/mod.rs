//! Exact arithmetic substrate: rationals, dense polynomials in `q` and in
//! `(p, q)`, truncated power series and fraction-free determinants.

mod bipoly;
mod det;
mod ring;
mod series;
mod unipoly;

pub use bipoly::BiPoly;
pub use det::det_fraction_free;
pub use num_rational::BigRational as ExactRational;
pub use ring::{ExactDiv, Ring};
pub use series::TruncSeries;
pub use unipoly::{parse_rational, rational_to_string, UniPoly};

pub(crate) use unipoly::rat;

use num_bigint::{BigInt, BigUint};

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// Multinomial coefficient `(sum parts)! / prod(part!)`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut total = 0usize;
    let mut acc = BigUint::from(1u32);
    for &p in parts {
        total += p;
        acc *= binomial(total as i64, p as i64);
    }
    acc
}

/// Converts a non-negative big integer to a rational.
pub fn big(n: BigUint) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// `C(n, 2)` for small `n`.
pub fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
