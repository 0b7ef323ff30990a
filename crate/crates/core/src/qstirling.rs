//! Carlitz q-Stirling numbers.
//!
//! The second kind comes from the triangular recurrence
//! `S[n,k] = S[n-1,k-1] + [k] S[n-1,k]`. The first kind is defined here as the
//! lower-triangular inverse of the second-kind matrix `(S[i,j])_{i,j>=1}`;
//! users comparing against other normalizations should check signs.

use crate::exactpoly::{big, binomial, UniPoly};
use crate::qcalc::{qbinomial, qbracket};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingKind {
    First,
    Second,
}

/// Triangle of q-Stirling numbers indexed by `(n, k)`, `0 <= k <= n <= n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct StirlingTriangle {
    kind: StirlingKind,
    rows: Vec<Vec<UniPoly>>,
}

impl StirlingTriangle {
    /// Second-kind triangle from the recurrence, including column `k = 0`.
    pub fn second_kind(n_max: usize) -> Self {
        let mut rows: Vec<Vec<UniPoly>> = vec![vec![UniPoly::one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    if k == 0 {
                        return UniPoly::zero();
                    }
                    let diag = prev[k - 1].clone();
                    match prev.get(k) {
                        Some(s) => diag + &qbracket(k) * s,
                        None => diag,
                    }
                })
                .collect();
            rows.push(row);
        }
        StirlingTriangle {
            kind: StirlingKind::Second,
            rows,
        }
    }

    /// First-kind triangle: the inverse of the second kind on `1 <= k <= n`,
    /// by forward substitution. Column `k = 0` is `delta_{n,0}`.
    pub fn first_kind(n_max: usize) -> Self {
        let big_s = Self::second_kind(n_max);
        let mut rows: Vec<Vec<UniPoly>> = vec![vec![UniPoly::one()]];
        for n in 1..=n_max {
            let mut row = vec![UniPoly::zero(); n + 1];
            row[n] = UniPoly::one();
            for k in (1..n).rev() {
                // sum_{j=k}^{n} S[n,j] s[j,k] = 0 for k < n
                let acc: UniPoly = (k..n).map(|j| big_s.get(n, j) * &rows[j][k]).sum();
                row[k] = -acc;
            }
            rows.push(row);
        }
        StirlingTriangle {
            kind: StirlingKind::First,
            rows,
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(n, k)`; zero for `k > n`. Panics beyond `n_max`.
    pub fn get(&self, n: usize, k: usize) -> &UniPoly {
        static ZERO: UniPoly = UniPoly::ZERO;
        self.rows[n].get(k).unwrap_or(&ZERO)
    }

    /// Square matrix `(T[i,j])_{i,j=1}^{n}`.
    pub fn matrix(&self, n: usize) -> Vec<Vec<UniPoly>> {
        (1..=n)
            .map(|i| (1..=n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// `(n, k, value)` entries with `1 <= k <= n`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &UniPoly)> {
        self.rows
            .iter()
            .enumerate()
            .skip(1)
            .flat_map(|(n, row)| row.iter().enumerate().skip(1).map(move |(k, v)| (n, k, v)))
    }
}

/// `S_q[n, k]`, zero for `k > n`, `S[n,0] = delta_{n,0}`.
pub fn qstirling2(n: usize, k: usize) -> UniPoly {
    if k > n {
        return UniPoly::zero();
    }
    StirlingTriangle::second_kind(n).get(n, k).clone()
}

/// First-kind triangle up to `n_max`.
pub fn qstirling1_triangle(n_max: usize) -> StirlingTriangle {
    StirlingTriangle::first_kind(n_max)
}

pub(crate) fn one_minus_q_pow(k: usize) -> UniPoly {
    UniPoly::from_ints(&[1, -1]).pow(k as u32)
}

fn q_minus_one_pow(k: usize) -> UniPoly {
    UniPoly::from_ints(&[-1, 1]).pow(k as u32)
}

fn mat_mul(a: &[Vec<UniPoly>], b: &[Vec<UniPoly>]) -> Vec<Vec<UniPoly>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

fn identity(n: usize) -> Vec<Vec<UniPoly>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { UniPoly::one() } else { UniPoly::zero() })
                .collect()
        })
        .collect()
}

fn is_identity(m: &[Vec<UniPoly>]) -> bool {
    m == identity(m.len()).as_slice()
}

/// Checks, for every `n <= n_max` and `0 <= k <= n`, the Carlitz expansion
/// `[n k]_q = sum_j C(n,j) (q-1)^{j-k} S[j,k]` and its inversion
/// `(1-q)^{n-k} S[n,k] = sum_l (-1)^{l-k} C(n,l) [l k]_q`.
pub fn verify_carlitz_identities(n_max: usize) -> Report {
    let s = StirlingTriangle::second_kind(n_max);
    let mut report = Report::new();
    for n in 0..=n_max {
        for k in 0..=n {
            let expansion: UniPoly = (k..=n)
                .map(|j| (&q_minus_one_pow(j - k) * s.get(j, k)).scale(&big(binomial(n as i64, j as i64))))
                .sum();
            report.check_eq(
                "carlitz_binomial_expansion",
                n,
                Some(k),
                &qbinomial(n as i64, k as i64),
                &expansion,
            );
            let inversion: UniPoly = (k..=n)
                .map(|l| {
                    let term = qbinomial(l as i64, k as i64).scale(&big(binomial(n as i64, l as i64)));
                    if (l - k) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            report.check_eq(
                "carlitz_inversion",
                n,
                Some(k),
                &(&one_minus_q_pow(n - k) * s.get(n, k)),
                &inversion,
            );
        }
    }
    report
}

/// `[S_n] [s_n] = I` and `[s_n] [S_n] = I` for every `n <= n_max`.
pub fn verify_inverse_pair(n_max: usize) -> Report {
    let s2 = StirlingTriangle::second_kind(n_max);
    let s1 = StirlingTriangle::first_kind(n_max);
    let mut report = Report::new();
    for n in 1..=n_max {
        let (a, b) = (s2.matrix(n), s1.matrix(n));
        let ok = is_identity(&mat_mul(&a, &b)) && is_identity(&mat_mul(&b, &a));
        if ok {
            report.pass("stirling_inverse_pair", n, None, None);
        } else {
            report.fail("stirling_inverse_pair", n, None, "product is not the identity".into());
        }
    }
    report
}

/// The conjugated transfer matrices `A_n = ((1-q)^{i-j} S[i,j])` and
/// `B_n = ((1-q)^{i-j} s[i,j])`: checks `A_n U_n = U_n [S_n]`,
/// `B_n U_n = U_n [s_n]` with `U_n = diag((1-q)^{i-1})`, and `A_n B_n = I`.
pub fn verify_conjugated_inverse(n_max: usize) -> Report {
    let s2 = StirlingTriangle::second_kind(n_max);
    let s1 = StirlingTriangle::first_kind(n_max);
    let mut report = Report::new();
    for n in 1..=n_max {
        let conj = |t: &StirlingTriangle| -> Vec<Vec<UniPoly>> {
            (1..=n)
                .map(|i| {
                    (1..=n)
                        .map(|j| {
                            if j > i {
                                UniPoly::zero()
                            } else {
                                &one_minus_q_pow(i - j) * t.get(i, j)
                            }
                        })
                        .collect()
                })
                .collect()
        };
        let u: Vec<Vec<UniPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { one_minus_q_pow(i) } else { UniPoly::zero() })
                    .collect()
            })
            .collect();
        let (a, b) = (conj(&s2), conj(&s1));
        let ok = mat_mul(&a, &u) == mat_mul(&u, &s2.matrix(n))
            && mat_mul(&b, &u) == mat_mul(&u, &s1.matrix(n))
            && is_identity(&mat_mul(&a, &b));
        if ok {
            report.pass("conjugated_transfer_inverse", n, None, None);
        } else {
            report.fail(
                "conjugated_transfer_inverse",
                n,
                None,
                "conjugation relation broken".into(),
            );
        }
    }
    report
}
