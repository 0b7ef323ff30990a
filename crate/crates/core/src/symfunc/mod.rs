//! Symmetric functions evaluated on finite alphabets of exact values, and the
//! q-analog `[p_n^(r)]_q` of the sums `p_n^(r)` of monomial symmetric
//! functions over partitions of `n` with exactly `r` parts.
//!
//! Every identity handled here has bounded degree, so evaluating both sides on
//! a concrete alphabet with at least that many variables checks the formal
//! identity in that degree without a full symmetric-function algebra.

mod checks;
mod partition;
mod pnr;

pub use checks::{
    classical_pn_determinants_check, complete_sum_check, determinant_convolution_check, generating_series_check,
    pq_transfer_check, product_rule_check, shifted_base_check, transfer_theorem_check,
};
pub use partition::{partitions, partitions_with_parts, Partition};
pub use pnr::{
    en_from_power_sums_determinant, p_nr_convolution, p_nr_determinant, pn_determinant_power_base, pnr_matrix,
    pq_nr_determinant, pq_nr_double_sum, qp_lambda, qp_nr_determinant, qp_nr_direct,
};

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactpoly::{big, choose2, factorial, TruncSeries, UniPoly};

/// Finite list of variable values `x_1..x_N`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymAlphabet {
    values: Vec<UniPoly>,
}

impl SymAlphabet {
    pub fn new(values: Vec<UniPoly>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Precondition("an alphabet needs at least one variable".into()));
        }
        Ok(SymAlphabet { values })
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| UniPoly::from_int(v)).collect())
    }

    pub fn from_rationals(values: &[BigRational]) -> Result<Self> {
        Self::new(values.iter().cloned().map(UniPoly::constant).collect())
    }

    /// The first `n` primes.
    pub fn primes(n: usize) -> Self {
        let mut primes: Vec<i64> = Vec::with_capacity(n);
        let mut c = 2i64;
        while primes.len() < n {
            if primes.iter().all(|p| c % p != 0) {
                primes.push(c);
            }
            c += 1;
        }
        Self::from_ints(&primes).expect("n >= 1")
    }

    /// Distinct non-integer rationals `(-1)^i (2i+1)/(i+2)`.
    pub fn rationals(n: usize) -> Self {
        let values: Vec<BigRational> = (0..n as i64)
            .map(|i| {
                let v = BigRational::new((2 * i + 1).into(), (i + 2).into());
                if i % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        Self::from_rationals(&values).expect("n >= 1")
    }

    /// Unit fractions `1/1, 1/2, ..., 1/n`.
    pub fn unit_fractions(n: usize) -> Self {
        let values: Vec<BigRational> = (1..=n as i64).map(|i| BigRational::new(1.into(), i.into())).collect();
        Self::from_rationals(&values).expect("n >= 1")
    }

    /// Principal specialization `x_i = q^{i-1}`.
    pub fn principal(n: usize) -> Self {
        Self::new((0..n).map(UniPoly::q_pow).collect()).expect("n >= 1")
    }

    pub fn values(&self) -> &[UniPoly] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `E(t) = prod (1 + x_i t)` truncated at `t^order`.
    pub fn elementary_series(&self, order: usize) -> TruncSeries<UniPoly> {
        let mut coeffs = vec![UniPoly::one()];
        coeffs.resize(order + 1, UniPoly::zero());
        for x in &self.values {
            for n in (1..=order).rev() {
                let add = &coeffs[n - 1] * x;
                coeffs[n] += &add;
            }
        }
        TruncSeries::new(coeffs)
    }
}

/// `e_n` of the alphabet; zero for `n > N`.
pub fn elementary(alphabet: &SymAlphabet, n: usize) -> UniPoly {
    alphabet.elementary_series(n).coeff(n).clone()
}

/// `h_0..h_order` from `e_0..`, by inverting `E(-t)`. Requires `e_0 = 1`;
/// missing `e_n` are taken as zero.
pub fn complete_from_elementary(e: &[UniPoly], order: usize) -> Result<Vec<UniPoly>> {
    if e.first() != Some(&UniPoly::one()) {
        return Err(Error::Precondition("e_0 must equal 1".into()));
    }
    let e_neg = TruncSeries::with_order(e.to_vec(), order).negate_variable();
    Ok(e_neg.invert()?.coeffs().to_vec())
}

/// Monomial symmetric function `m_lambda` on the alphabet: the sum over all
/// distinct rearrangements of the exponent vector `lambda` padded to `N`.
pub fn monomial_symmetric(alphabet: &SymAlphabet, lambda: &Partition) -> UniPoly {
    let n_vars = alphabet.len();
    if lambda.len() > n_vars {
        return UniPoly::zero();
    }
    let max_part = lambda.parts().first().copied().unwrap_or(0);
    let powers: Vec<Vec<UniPoly>> = alphabet
        .values()
        .iter()
        .map(|x| {
            let mut row = vec![UniPoly::one()];
            for k in 1..=max_part {
                row.push(&row[k - 1] * x);
            }
            row
        })
        .collect();
    let mut exps: Vec<usize> = lambda.parts().to_vec();
    exps.resize(n_vars, 0);
    exps.sort_unstable();
    let mut total = UniPoly::zero();
    loop {
        let term: UniPoly = exps.iter().enumerate().map(|(i, &a)| powers[i][a].clone()).product();
        total += &term;
        if !next_permutation(&mut exps) {
            break;
        }
    }
    total
}

/// Lexicographic successor; false after the last arrangement.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `p_n^(r) = sum of m_lambda over partitions of n with r parts`, by brute
/// force on the alphabet.
pub fn p_nr_monomial(alphabet: &SymAlphabet, n: usize, r: usize) -> UniPoly {
    if r == 0 {
        return if n == 0 { UniPoly::one() } else { UniPoly::zero() };
    }
    partitions_with_parts(n, r)
        .iter()
        .map(|lambda| monomial_symmetric(alphabet, lambda))
        .sum()
}

/// Elementary and complete sequences `e_0..e_M`, `h_0..h_M` of one alphabet
/// or specialization, with `sum e_n (-t)^n * sum h_n t^n = 1 + O(t^{M+1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymSeriesBundle {
    e: Vec<UniPoly>,
    h: Vec<UniPoly>,
}

impl SymSeriesBundle {
    pub fn from_alphabet(alphabet: &SymAlphabet, order: usize) -> Self {
        let e = alphabet.elementary_series(order).coeffs().to_vec();
        Self::from_elementary(e).expect("e_0 = 1 for an alphabet")
    }

    /// Bundle from an explicit `e_0..e_M` (`e_0` must be 1).
    pub fn from_elementary(e: Vec<UniPoly>) -> Result<Self> {
        let order = e
            .len()
            .checked_sub(1)
            .ok_or(Error::Precondition("empty e-sequence".into()))?;
        let h = complete_from_elementary(&e, order)?;
        Ok(SymSeriesBundle { e, h })
    }

    /// The specialization `e_n = q^{C(n,2)} / n!`.
    pub fn exp_specialization(order: usize) -> Self {
        let e = (0..=order)
            .map(|n| UniPoly::monomial(BigRational::one() / big(factorial(n)), choose2(n)))
            .collect();
        Self::from_elementary(e).expect("e_0 = 1")
    }

    pub fn order(&self) -> usize {
        self.e.len() - 1
    }

    pub fn e(&self, n: usize) -> &UniPoly {
        &self.e[n]
    }

    pub fn h(&self, n: usize) -> &UniPoly {
        &self.h[n]
    }

    pub fn e_all(&self) -> &[UniPoly] {
        &self.e
    }

    pub fn e_series(&self) -> TruncSeries<UniPoly> {
        TruncSeries::new(self.e.clone())
    }

    pub(crate) fn require_order(&self, n: usize) -> Result<()> {
        if n > self.order() {
            return Err(Error::Precondition(format!(
                "bundle of order {} is too short for degree {n}",
                self.order()
            )));
        }
        Ok(())
    }
}

pub(crate) fn signed(term: UniPoly, negative: bool) -> UniPoly {
    if negative {
        -term
    } else {
        term
    }
}

pub(crate) fn int_poly(n: num_bigint::BigUint) -> UniPoly {
    UniPoly::constant(big(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::binomial;

    fn c(n: i64) -> UniPoly {
        UniPoly::from_int(n)
    }

    #[test]
    fn elementary_examples() {
        let ones = SymAlphabet::from_ints(&[1, 1, 1]).unwrap();
        assert_eq!(elementary(&ones, 2), c(3));
        assert_eq!(elementary(&SymAlphabet::primes(4), 0), c(1));
        assert_eq!(elementary(&SymAlphabet::from_ints(&[1, 2]).unwrap(), 2), c(2));
        assert!(elementary(&ones, 4).is_zero());
        assert!(SymAlphabet::new(vec![]).is_err());
    }

    #[test]
    fn complete_examples() {
        let e1 = UniPoly::from_ints(&[2, 1]);
        let h = complete_from_elementary(&[c(1), e1.clone()], 4).unwrap();
        for (n, hn) in h.iter().enumerate() {
            assert_eq!(hn, &e1.pow(n as u32));
        }
        let pair = SymAlphabet::from_ints(&[1, 1]).unwrap();
        let b = SymSeriesBundle::from_alphabet(&pair, 2);
        assert_eq!(b.h(2), &c(3));
        let any = SymSeriesBundle::from_alphabet(&SymAlphabet::rationals(4), 5);
        assert_eq!(any.h(1), any.e(1));
        assert!(complete_from_elementary(&[c(2), c(1)], 3).is_err());
    }

    #[test]
    fn bundle_series_are_inverse() {
        let b = SymSeriesBundle::from_alphabet(&SymAlphabet::principal(4), 6);
        let e = b.e_series();
        let h = TruncSeries::new(b.h.clone());
        assert_eq!(h.mul(&e.negate_variable()), TruncSeries::one(6));
    }

    #[test]
    fn monomial_examples() {
        let ones = SymAlphabet::from_ints(&[1, 1, 1]).unwrap();
        assert_eq!(p_nr_monomial(&ones, 2, 2), c(3));
        let pair = SymAlphabet::from_ints(&[1, 2]).unwrap();
        assert_eq!(p_nr_monomial(&pair, 2, 1), c(5));
        let alph = SymAlphabet::rationals(5);
        for n in 1..=5 {
            assert_eq!(p_nr_monomial(&alph, n, n), elementary(&alph, n));
        }
        assert!(p_nr_monomial(&pair, 3, 3).is_zero());
    }

    #[test]
    fn monomials_count_distinct_rearrangements() {
        let ones = SymAlphabet::from_ints(&[1, 1, 1, 1]).unwrap();
        // m_(2,1,1) on four ones: 4!/(1!2!1!) = 12 rearrangements of (2,1,1,0)
        let lambda = Partition::new(vec![2, 1, 1]).unwrap();
        assert_eq!(monomial_symmetric(&ones, &lambda), c(12));
        // all ones: h_n = C(N+n-1, n)
        for n in 1..=5usize {
            let h: UniPoly = (1..=n).map(|r| p_nr_monomial(&ones, n, r)).sum();
            assert_eq!(h, int_poly(binomial(n as i64 + 3, n as i64)));
        }
    }

    #[test]
    fn exp_specialization_coefficients() {
        let b = SymSeriesBundle::exp_specialization(4);
        assert_eq!(b.e(3), &UniPoly::monomial(BigRational::new(1.into(), 6.into()), 3));
        assert!(b.require_order(5).is_err());
    }
}
