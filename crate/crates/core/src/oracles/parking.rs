use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::exactpoly::UniPoly;

/// Sequence whose `i`-th smallest value (1-based) is below `r + i - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParkingFunction {
    a: Vec<usize>,
    r: usize,
}

impl ParkingFunction {
    pub fn new(a: Vec<usize>, r: usize) -> Result<Self> {
        if !is_parking(&a, r) {
            return Err(Error::Precondition(format!(
                "{a:?} is not a parking function for r = {r}"
            )));
        }
        Ok(ParkingFunction { a, r })
    }

    pub fn values(&self) -> &[usize] {
        &self.a
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `|a| = sum a_i`.
    pub fn size(&self) -> usize {
        self.a.iter().sum()
    }
}

/// Membership test, as printed: sorted `a_(i) < r + i - 1` for `1 <= i <= m`.
pub fn is_parking(a: &[usize], r: usize) -> bool {
    if r == 0 {
        return false;
    }
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &x)| x < r + i)
}

/// `sum q^{|a|}` over parking functions of length `m` for `r`, by testing
/// every tuple in `{0..r+m-2}^m`; `m = 0` gives 1.
pub fn parking_enumerator_poly(m: usize, r: usize, cap: u64) -> Result<UniPoly> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    if m == 0 {
        return Ok(UniPoly::one());
    }
    let base = r + m - 1;
    let projected = BigUint::from(base).pow(m as u32);
    if projected > BigUint::from(cap) {
        return Err(Error::CapExceeded { projected, cap });
    }
    let mut hist: Vec<u64> = Vec::new();
    let mut a = vec![0usize; m];
    loop {
        if is_parking(&a, r) {
            let s: usize = a.iter().sum();
            if hist.len() <= s {
                hist.resize(s + 1, 0);
            }
            hist[s] += 1;
        }
        let Some(i) = a.iter().rposition(|&x| x + 1 < base) else {
            break;
        };
        a[i] += 1;
        a[i + 1..].fill(0);
    }
    Ok(UniPoly::from_bigints(
        &hist.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::DEFAULT_CAP;

    #[test]
    fn hand_cases() {
        assert!(is_parking(&[0], 1));
        assert!(!is_parking(&[1], 1));
        assert!(is_parking(&[1], 2));
        assert!(is_parking(&[1, 0], 1));
        assert!(!is_parking(&[1, 1], 1));
        assert!(ParkingFunction::new(vec![2, 0], 2).is_ok());
        assert_eq!(ParkingFunction::new(vec![2, 0], 2).unwrap().size(), 2);
        assert!(ParkingFunction::new(vec![2, 2], 2).is_err());
    }

    #[test]
    fn enumerator_examples() {
        assert_eq!(parking_enumerator_poly(0, 3, DEFAULT_CAP).unwrap(), UniPoly::one());
        assert_eq!(parking_enumerator_poly(1, 1, DEFAULT_CAP).unwrap(), UniPoly::one());
        assert_eq!(
            parking_enumerator_poly(1, 3, DEFAULT_CAP).unwrap(),
            UniPoly::from_ints(&[1, 1, 1])
        );
        assert_eq!(
            parking_enumerator_poly(2, 1, DEFAULT_CAP).unwrap(),
            UniPoly::from_ints(&[1, 2])
        );
        assert_eq!(
            parking_enumerator_poly(2, 2, DEFAULT_CAP).unwrap(),
            UniPoly::from_ints(&[1, 2, 3, 2])
        );
        assert!(parking_enumerator_poly(2, 0, DEFAULT_CAP).is_err());
        assert!(matches!(
            parking_enumerator_poly(6, 3, 1000),
            Err(Error::CapExceeded { .. })
        ));
    }
}
