//! The polynomials `J_n^(r)(q)` attached to the exponential specialization
//! `e_n = q^{C(n,2)}/n!`, their reciprocals, and several independent ways of
//! computing them.
//!
//! `J_n^(r)` is monic with positive integer coefficients, constant term
//! `(n-r)!` and degree `C(n-1,2) - C(r-1,2)`. At `q = 1` it counts rooted
//! forests on `n` vertices with `r` specified roots.

mod checks;
mod composition;

pub use checks::{
    exp_series, exp_shift_check, extended_recurrence_check, j_from_specialized_symfunc, kung_yan_check,
    q1_closed_forms, q_one_check, reciprocal_recurrence_check, recurrence_worked_example_check, shape_check,
    tree_case_check, triple_equivalence_check, verify_jpoly,
};
pub use composition::{compositions, Composition};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{big, binomial, choose2, factorial, multinomial, UniPoly};
use crate::qcalc::qbracket;

/// Triangle `J[n][r]` for `0 <= r <= n <= n_max`, with column `r = 0` holding
/// `delta_{n,0}`. Either the polynomials themselves or their reciprocals.
#[derive(Clone, Debug, PartialEq)]
pub struct JTable {
    rows: Vec<Vec<UniPoly>>,
    reciprocal: bool,
}

impl JTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn is_reciprocal(&self) -> bool {
        self.reciprocal
    }

    /// `J_n^(r)`; zero when `r > n`. Panics beyond `n_max`.
    pub fn get(&self, n: usize, r: usize) -> &UniPoly {
        static ZERO: UniPoly = UniPoly::ZERO;
        self.rows[n].get(r).unwrap_or(&ZERO)
    }

    /// `(n, r, polynomial)` for `1 <= r <= n`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &UniPoly)> {
        self.rows
            .iter()
            .enumerate()
            .skip(1)
            .flat_map(|(n, row)| row.iter().enumerate().skip(1).map(move |(r, p)| (n, r, p)))
    }

    /// Table of `q^{C(n-1,2)-C(r-1,2)} J_n^(r)(1/q)`.
    pub fn reciprocal_table(&self) -> JTable {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(|(r, p)| {
                        if r == 0 {
                            p.clone()
                        } else {
                            p.reverse(j_degree(n, r)).expect("table entries have the exact degree")
                        }
                    })
                    .collect()
            })
            .collect();
        JTable {
            rows,
            reciprocal: !self.reciprocal,
        }
    }

    /// Checks every entry with `r >= 1` against the structural properties:
    /// integer coefficients, all positive, the expected degree, and for the
    /// direct table monic with constant term `(n-r)!` (mirrored for the
    /// reciprocal table).
    pub fn validate(&self) -> Result<()> {
        for (n, r, p) in self.entries() {
            entry_shape(n, r, p, self.reciprocal)
                .map_err(|why| Error::Invariant(format!("J[{n}][{r}] = {p}: {why}")))?;
        }
        Ok(())
    }
}

/// `C(n-1,2) - C(r-1,2)`, for `1 <= r <= n`.
pub fn j_degree(n: usize, r: usize) -> usize {
    choose2(n - 1) - choose2(r - 1)
}

pub(crate) fn entry_shape(n: usize, r: usize, p: &UniPoly, reciprocal: bool) -> std::result::Result<(), String> {
    let coeffs = p.integer_coeffs().ok_or("non-integer coefficient")?;
    if coeffs.iter().any(|c| c <= &BigInt::zero()) {
        return Err("coefficient not strictly positive".into());
    }
    let d = j_degree(n, r);
    if p.degree() != Some(d) {
        return Err(format!("degree is not {d}"));
    }
    let top = BigInt::from(factorial(n - r));
    let (low, high) = if reciprocal {
        (BigInt::one(), top)
    } else {
        (top, BigInt::one())
    };
    if coeffs[0] != low {
        return Err(format!("constant term is not {low}"));
    }
    if coeffs[d] != high {
        return Err(format!("leading coefficient is not {high}"));
    }
    Ok(())
}

/// Builds `J[n][r]` row by row from `J_r^(r) = 1` and
/// `J_n^(r) = sum_{j=1}^{n-r} [r]^j q^{C(j,2)} C(n-r, j) J_{n-r}^(j)`.
pub fn build_jtable(n_max: usize) -> Result<JTable> {
    if n_max == 0 {
        return Err(Error::Precondition("n_max must be at least 1".into()));
    }
    let mut rows: Vec<Vec<UniPoly>> = vec![vec![UniPoly::one()]];
    for n in 1..=n_max {
        let mut row = vec![UniPoly::zero()];
        for r in 1..n {
            let m = n - r;
            let br = qbracket(r);
            let entry: UniPoly = (1..=m)
                .map(|j| {
                    let c = big(binomial(m as i64, j as i64));
                    (&br.pow(j as u32) * &rows[m][j]).shift(choose2(j)).scale(&c)
                })
                .sum();
            row.push(entry);
        }
        row.push(UniPoly::one());
        rows.push(row);
    }
    let table = JTable {
        rows,
        reciprocal: false,
    };
    table.validate()?;
    Ok(table)
}

/// `J_n^(r)` as the sum over compositions `u` of `n - r` of
/// `[r]^{u_1} [u_1]^{u_2} ... [u_{k-1}]^{u_k} q^{sum C(u_i,2)} multinomial(n-r; u)`.
/// Needs `n - 1 >= r >= 1`.
pub fn j_explicit_composition(n: usize, r: usize) -> Result<UniPoly> {
    if r == 0 || r >= n {
        return Err(Error::Precondition(format!(
            "the composition sum needs n - 1 >= r >= 1, got n = {n}, r = {r}"
        )));
    }
    Ok(compositions(n - r)
        .iter()
        .map(|u| {
            let parts = u.parts();
            let mut term = qbracket(r).pow(parts[0] as u32);
            for w in parts.windows(2) {
                term = &term * &qbracket(w[0]).pow(w[1] as u32);
            }
            term.shift(u.n_stat()).scale(&big(multinomial(parts)))
        })
        .sum())
}

/// `J_n^(r) = (n-r)! sum [r]^{u_1} q^{n(u')} prod_i [u_i]^{u_{i+1}} / u_i!`
/// over commencing sequences with `|u| = n - r`. Valid for `n >= r >= 0`;
/// gives `J_n^(0) = delta_{n,0}` through `[0]^0 = 1`, `[0]^k = 0`.
pub fn j_explicit_sequences(n: usize, r: usize) -> Result<UniPoly> {
    if r > n {
        return Err(Error::Precondition(format!("need n >= r, got n = {n}, r = {r}")));
    }
    let m = n - r;
    let total: UniPoly = compositions(m)
        .iter()
        .map(|u| {
            let parts = u.parts();
            let first = parts.first().copied().unwrap_or(0);
            let mut term = qbracket(r).pow(first as u32);
            let mut denom = BigRational::one();
            for (i, &ui) in parts.iter().enumerate() {
                // the exponent after the last part is the trailing zero
                let next = parts.get(i + 1).copied().unwrap_or(0);
                term = &term * &qbracket(ui).pow(next as u32);
                denom *= big(factorial(ui));
            }
            term.shift(u.n_stat()).scale(&(BigRational::one() / denom))
        })
        .sum();
    Ok(total.scale(&big(factorial(m))))
}

/// `q^{C(n-1,2)-C(r-1,2)} J_n^(r)(1/q)` from a direct table.
pub fn reciprocal(n: usize, r: usize, table: &JTable) -> Result<UniPoly> {
    if r == 0 || r > n || n > table.n_max() {
        return Err(Error::Precondition(format!(
            "need 1 <= r <= n <= {}, got n = {n}, r = {r}",
            table.n_max()
        )));
    }
    if table.is_reciprocal() {
        return Err(Error::Precondition("table already holds reciprocals".into()));
    }
    table.get(n, r).reverse(j_degree(n, r))
}
