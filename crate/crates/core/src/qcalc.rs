//! q- and p,q-analog primitives: brackets, factorials, Gaussian binomials and
//! the q-derivative acting on truncated series.

use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::exactpoly::{rat, BiPoly, TruncSeries, UniPoly};

/// `[n]_q = 1 + q + ... + q^{n-1}`, with `[0]_q = 0`.
pub fn qbracket(n: usize) -> UniPoly {
    UniPoly::from_ints(&vec![1; n])
}

/// `[n]_q! = [1][2]...[n]`, with `[0]_q! = 1`.
pub fn qfactorial(n: usize) -> UniPoly {
    (1..=n).map(qbracket).product()
}

/// Rows of the q-Pascal triangle, appended whole so readers never see a
/// partially built row.
static QBINOMIAL_ROWS: RwLock<Vec<Vec<UniPoly>>> = RwLock::new(Vec::new());

fn qbinomial_row(n: usize) -> Vec<UniPoly> {
    if let Some(row) = QBINOMIAL_ROWS.read().expect("qbinomial cache poisoned").get(n) {
        return row.clone();
    }
    let mut rows = QBINOMIAL_ROWS.write().expect("qbinomial cache poisoned");
    while rows.len() <= n {
        let m = rows.len();
        let row = if m == 0 {
            vec![UniPoly::one()]
        } else {
            let prev = &rows[m - 1];
            // [m k] = [m-1 k-1] + q^k [m-1 k]
            (0..=m)
                .map(|k| {
                    let left = if k > 0 { prev[k - 1].clone() } else { UniPoly::zero() };
                    let right = prev.get(k).map(|p| p.shift(k)).unwrap_or_default();
                    left + right
                })
                .collect()
        };
        rows.push(row);
    }
    rows[n].clone()
}

/// Gaussian binomial `[n k]_q`; zero unless `0 <= k <= n`.
pub fn qbinomial(n: i64, k: i64) -> UniPoly {
    if n < 0 || k < 0 || k > n {
        return UniPoly::zero();
    }
    qbinomial_row(n as usize).swap_remove(k as usize)
}

/// `[n]_{q^r}`: the bracket with base `q^r`.
pub fn qbracket_power_base(n: usize, r: usize) -> UniPoly {
    qbracket(n).compose_power(r)
}

/// Gaussian binomial in base `q^r`.
pub fn qbinomial_power_base(n: i64, k: i64, r: usize) -> UniPoly {
    qbinomial(n, k).compose_power(r)
}

/// Applies `D_q` to `f` `r` times: `D_q^r t^n = [r]! [n r] t^{n-r}`.
///
/// The result has order `order(f) - r`.
pub fn q_derivative(f: &TruncSeries<UniPoly>, r: usize) -> Result<TruncSeries<UniPoly>> {
    if r > f.order() {
        return Err(Error::Precondition(format!(
            "q-derivative of order {r} exceeds series order {}",
            f.order()
        )));
    }
    let rf = qfactorial(r);
    let coeffs = (r..=f.order())
        .map(|n| &(&rf * &qbinomial(n as i64, r as i64)) * f.coeff(n))
        .collect();
    Ok(TruncSeries::new(coeffs))
}

/// `[n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}`.
pub fn pq_bracket(n: usize) -> BiPoly {
    (0..n)
        .map(|i| BiPoly::monomial(rat(1), n - 1 - i, i))
        .fold(BiPoly::zero(), |acc, m| acc + m)
}

pub fn pq_factorial(n: usize) -> BiPoly {
    (1..=n).fold(BiPoly::one(), |acc, k| acc * pq_bracket(k))
}

/// p,q-Gaussian binomial via `[n k] = p^{n-k} [n-1 k-1] + q^k [n-1 k]`.
pub fn pq_binomial(n: i64, k: i64) -> BiPoly {
    if n < 0 || k < 0 || k > n {
        return BiPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let mut row = vec![BiPoly::one()];
    for m in 1..=n {
        let next = (0..=m.min(k))
            .map(|j| {
                let left = if j > 0 {
                    BiPoly::monomial(rat(1), m - j, 0) * row[j - 1].clone()
                } else {
                    BiPoly::zero()
                };
                let right = row
                    .get(j)
                    .map(|b| BiPoly::monomial(rat(1), 0, j) * b.clone())
                    .unwrap_or_default();
                left + right
            })
            .collect();
        row = next;
    }
    row.swap_remove(k)
}

/// `D_{p,q}^r t^n = [r]_{p,q}! [n r]_{p,q} t^{n-r}`.
pub fn pq_derivative(f: &TruncSeries<BiPoly>, r: usize) -> Result<TruncSeries<BiPoly>> {
    if r > f.order() {
        return Err(Error::Precondition(format!(
            "p,q-derivative of order {r} exceeds series order {}",
            f.order()
        )));
    }
    let rf = pq_factorial(r);
    let coeffs = (r..=f.order())
        .map(|n| rf.clone() * pq_binomial(n as i64, r as i64) * f.coeff(n).clone())
        .collect();
    Ok(TruncSeries::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{big, binomial, ExactDiv, ExactRational};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn brackets_and_factorials() {
        assert!(qbracket(0).is_zero());
        assert_eq!(qbracket(1), p(&[1]));
        assert_eq!(qbracket(3), p(&[1, 1, 1]));
        assert_eq!(qfactorial(0), p(&[1]));
        assert_eq!(qfactorial(2), p(&[1, 1]));
        assert_eq!(qfactorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(qbinomial(4, 2), p(&[1, 1, 2, 1, 1]));
        for n in 0..6 {
            assert_eq!(qbinomial(n, 0), p(&[1]));
        }
        assert!(qbinomial(2, 3).is_zero());
        assert!(qbinomial(-1, 0).is_zero());
        assert!(qbinomial(3, -1).is_zero());
    }

    #[test]
    fn power_base_brackets() {
        assert_eq!(qbracket_power_base(2, 3), p(&[1, 0, 0, 1]));
        assert!(qbracket_power_base(0, 4).is_zero());
        assert_eq!(qbracket_power_base(3, 2), p(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn pascal_matches_factorial_quotient() {
        for n in 0..=12i64 {
            for k in 0..=n {
                let quotient = qfactorial(n as usize)
                    .div_exact(&(&qfactorial(k as usize) * &qfactorial((n - k) as usize)))
                    .unwrap();
                assert_eq!(qbinomial(n, k), quotient, "[{n} {k}]");
            }
        }
    }

    #[test]
    fn pascal_rule_and_classical_limit() {
        for n in 1..=20i64 {
            for k in 0..=n {
                let rhs = qbinomial(n - 1, k - 1) + qbinomial(n - 1, k).shift(k as usize);
                assert_eq!(qbinomial(n, k), rhs);
                assert_eq!(qbinomial(n, k).eval_at_one(), big(binomial(n, k)));
            }
        }
    }

    #[test]
    fn q_derivative_examples() {
        let t3 = TruncSeries::with_order(vec![p(&[]), p(&[]), p(&[]), p(&[1])], 3);
        let d1 = q_derivative(&t3, 1).unwrap();
        assert_eq!(d1.order(), 2);
        assert_eq!(d1.coeff(2), &p(&[1, 1, 1]));
        let d2 = q_derivative(&t3, 2).unwrap();
        assert_eq!(d2.coeff(1), &(&p(&[1, 1]) * &p(&[1, 1, 1])));
        let c = TruncSeries::with_order(vec![p(&[5])], 2);
        assert!(q_derivative(&c, 1).unwrap().is_zero());
        assert!(q_derivative(&c, 3).is_err());
    }

    #[test]
    fn q_derivative_is_iterated_first_derivative() {
        let f = TruncSeries::new((0..7).map(|i| p(&[i, 1 - i, 2])).collect());
        let mut iterated = f.clone();
        for r in 1..=4 {
            iterated = q_derivative(&iterated, 1).unwrap();
            assert_eq!(q_derivative(&f, r).unwrap(), iterated);
        }
    }

    #[test]
    fn pq_examples() {
        let b4 = pq_bracket(4);
        for i in 0..4 {
            assert_eq!(b4.coeff(3 - i, i), ExactRational::from_integer(1.into()));
        }
        assert_eq!(pq_binomial(2, 1), BiPoly::p() + BiPoly::q());
        assert_eq!(pq_bracket(3).at_p_one(), p(&[1, 1, 1]));
        assert!(pq_binomial(2, 3).is_zero());
    }

    #[test]
    fn pq_binomial_is_factorial_quotient() {
        for n in 0..=8i64 {
            for k in 0..=n {
                let quotient = pq_factorial(n as usize)
                    .div_exact(&(pq_factorial(k as usize) * pq_factorial((n - k) as usize)))
                    .unwrap();
                assert_eq!(pq_binomial(n, k), quotient);
            }
        }
    }

    #[test]
    fn pq_degenerates_to_q_at_p_one() {
        for n in 0..=15usize {
            assert_eq!(pq_bracket(n).at_p_one(), qbracket(n));
            assert_eq!(pq_factorial(n).at_p_one(), qfactorial(n));
            for k in 0..=n as i64 {
                assert_eq!(pq_binomial(n as i64, k).at_p_one(), qbinomial(n as i64, k));
            }
        }
        let f = TruncSeries::new((0..6).map(|i| BiPoly::from_q_poly(&p(&[1, i]))).collect());
        let fq = f.map(BiPoly::at_p_one);
        for r in 0..=3 {
            let pq = pq_derivative(&f, r).unwrap().map(BiPoly::at_p_one);
            assert_eq!(pq, q_derivative(&fq, r).unwrap());
        }
    }

    #[test]
    fn cache_is_consistent_across_threads() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || qbinomial(14 - i, 5)))
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            let n = 14 - i as i64;
            assert_eq!(h.join().unwrap().eval_at_one(), big(binomial(n, 5)));
        }
    }
}
