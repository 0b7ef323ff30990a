use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use super::{build_jtable, compositions, entry_shape, j_explicit_composition, j_explicit_sequences, JTable};
use crate::error::{Error, Result};
use crate::exactpoly::{big, binomial, choose2, factorial, multinomial, TruncSeries, UniPoly};
use crate::qcalc::qbracket;
use crate::qstirling::one_minus_q_pow;
use crate::report::Report;
use crate::symfunc::{p_nr_determinant, SymSeriesBundle};

fn c(n: usize, k: usize) -> BigRational {
    big(binomial(n as i64, k as i64))
}

fn one_plus_q_pow(k: u32) -> UniPoly {
    UniPoly::from_ints(&[1, 1]).pow(k)
}

fn scaled(p: UniPoly, k: i64) -> UniPoly {
    p.scale(&BigRational::from_integer(k.into()))
}

/// Per-entry structural properties of a table.
pub fn shape_check(table: &JTable) -> Report {
    let mut report = Report::new();
    for (n, r, p) in table.entries() {
        match entry_shape(n, r, p, table.is_reciprocal()) {
            Ok(()) => report.pass("table_shape", n, Some(r), None),
            Err(why) => report.fail("table_shape", n, Some(r), format!("{p}: {why}")),
        }
    }
    report
}

/// `J_6^(2)` from the four-term expansion of the linear recurrence over row 4,
/// against the table and the published polynomial.
pub fn recurrence_worked_example_check() -> Result<Report> {
    let t = build_jtable(6)?;
    let expansion = scaled(&one_plus_q_pow(1) * t.get(4, 1), 4)
        + scaled((&one_plus_q_pow(2) * t.get(4, 2)).shift(1), 6)
        + scaled((&one_plus_q_pow(3) * t.get(4, 3)).shift(3), 4)
        + one_plus_q_pow(4).shift(6);
    let published = UniPoly::from_ints(&[24, 60, 78, 80, 68, 52, 35, 20, 10, 4, 1]);
    let mut report = Report::new();
    report.check_eq("linear_recurrence_worked_example", 6, Some(2), &expansion, t.get(6, 2));
    report.check_eq("linear_recurrence_worked_example", 6, Some(2), &expansion, &published);
    Ok(report)
}

/// Horizontal recurrence for the reciprocals,
/// `Jbar_n^(r) = sum_j [r]^j q^{r(n-r-j)} C(n-r,j) Jbar_{n-r}^(j)`, for
/// `1 <= r < n <= n_max`, plus its written-out `n = 6, r = 2` instance.
pub fn reciprocal_recurrence_check(n_max: usize) -> Result<Report> {
    if n_max < 2 {
        return Err(Error::Precondition("n_max must be at least 2".into()));
    }
    let rt = build_jtable(n_max.max(6))?.reciprocal_table();
    let mut report = Report::new();
    for n in 2..=n_max {
        for r in 1..n {
            let m = n - r;
            let rhs: UniPoly = (1..=m)
                .map(|j| {
                    (&qbracket(r).pow(j as u32) * rt.get(m, j))
                        .shift(r * (m - j))
                        .scale(&c(m, j))
                })
                .sum();
            report.check_eq("reciprocal_linear_recurrence", n, Some(r), rt.get(n, r), &rhs);
        }
    }
    let instance = scaled((&one_plus_q_pow(1) * rt.get(4, 1)).shift(6), 4)
        + scaled((&one_plus_q_pow(2) * rt.get(4, 2)).shift(4), 6)
        + scaled((&one_plus_q_pow(3) * rt.get(4, 3)).shift(2), 4)
        + &one_plus_q_pow(4) * rt.get(4, 4);
    report.check_eq(
        "reciprocal_recurrence_worked_example",
        6,
        Some(2),
        rt.get(6, 2),
        &instance,
    );
    Ok(report)
}

/// Vertical recurrence on a column of reciprocals,
/// `(1-q)^{n-r} Jbar_n^(r) = 1 - sum_{l=r}^{n-1} C(n-r,l-r) q^{l(n-l)} (1-q)^{l-r} Jbar_l^(r)`,
/// for `1 <= r <= n <= n_max`, plus its written-out `n = 6, r = 2` instance.
pub fn kung_yan_check(n_max: usize) -> Result<Report> {
    if n_max < 2 {
        return Err(Error::Precondition("n_max must be at least 2".into()));
    }
    let rt = build_jtable(n_max.max(6))?.reciprocal_table();
    let mut report = Report::new();
    for n in 1..=n_max {
        for r in 1..=n {
            let lhs = &one_minus_q_pow(n - r) * rt.get(n, r);
            let tail: UniPoly = (r..n)
                .map(|l| {
                    (&one_minus_q_pow(l - r) * rt.get(l, r))
                        .shift(l * (n - l))
                        .scale(&c(n - r, l - r))
                })
                .sum();
            report.check_eq(
                "kung_yan_vertical_recurrence",
                n,
                Some(r),
                &lhs,
                &(UniPoly::one() - tail),
            );
        }
    }
    let lhs = &one_minus_q_pow(4) * rt.get(6, 2);
    let rhs = UniPoly::one()
        - rt.get(2, 2).shift(8)
        - scaled((&one_minus_q_pow(1) * rt.get(3, 2)).shift(9), 4)
        - scaled((&one_minus_q_pow(2) * rt.get(4, 2)).shift(8), 6)
        - scaled((&one_minus_q_pow(3) * rt.get(5, 2)).shift(5), 4);
    report.check_eq("kung_yan_worked_example", 6, Some(2), &lhs, &rhs);
    Ok(report)
}

/// `(r n^{n-r-1}, (r-1)! r n^{n-r-1})`: forests on `n` vertices with `r`
/// given roots, and functional digraphs whose cycle has length `r`. At
/// `r = n` the first value is 1.
pub fn q1_closed_forms(n: usize, r: usize) -> Result<(BigUint, BigUint)> {
    if r == 0 || r > n {
        return Err(Error::Precondition(format!("need n >= r >= 1, got n = {n}, r = {r}")));
    }
    let count = if r == n {
        BigUint::one()
    } else {
        BigUint::from(r) * BigUint::from(n).pow((n - r - 1) as u32)
    };
    let digraphs = factorial(r - 1) * &count;
    Ok((count, digraphs))
}

/// `J_n^(r)(1)` against the closed forest count, and the integer composition
/// sum times `(r-1)!` against the digraph count, for `1 <= r <= n <= n_max`.
pub fn q_one_check(table: &JTable) -> Result<Report> {
    let mut report = Report::new();
    for (n, r, p) in table.entries() {
        let (count, digraphs) = q1_closed_forms(n, r)?;
        report.check_eq("forest_count_at_q_one", n, Some(r), &p.eval_at_one(), &big(count));
        let sum: BigUint = compositions(n - r)
            .iter()
            .map(|u| {
                let parts = u.parts();
                let mut term = multinomial(parts);
                let mut base = r;
                for &ui in parts {
                    term *= BigUint::from(base).pow(ui as u32);
                    base = ui;
                }
                term
            })
            .sum();
        report.check_eq(
            "functional_digraph_count",
            n,
            Some(r),
            &(factorial(r - 1) * sum),
            &digraphs,
        );
    }
    Ok(report)
}

/// `J_{n+1}^(1) = sum_{j=1}^{n} C(n,j) q^{C(j,2)} J_n^(j)`.
pub fn tree_case_check(table: &JTable) -> Report {
    let mut report = Report::new();
    for n in 1..table.n_max() {
        let rhs: UniPoly = (1..=n).map(|j| table.get(n, j).shift(choose2(j)).scale(&c(n, j))).sum();
        report.check_eq("tree_case_recurrence", n + 1, Some(1), table.get(n + 1, 1), &rhs);
    }
    report
}

/// The recurrence with the `j = 0` term kept, using `J_n^(0) = delta_{n,0}`
/// and `[0]^0 = 1`, for every `0 <= r <= n <= n_max`.
pub fn extended_recurrence_check(table: &JTable) -> Report {
    let mut report = Report::new();
    for n in 0..=table.n_max() {
        for r in 0..=n {
            let m = n - r;
            let rhs: UniPoly = (0..=m)
                .map(|j| {
                    (&qbracket(r).pow(j as u32) * table.get(m, j))
                        .shift(choose2(j))
                        .scale(&c(m, j))
                })
                .sum();
            report.check_eq("extended_linear_recurrence", n, Some(r), table.get(n, r), &rhs);
        }
    }
    report
}

/// `Exp(t) = sum q^{C(n,2)} t^n / n!` truncated at `t^order`.
pub fn exp_series(order: usize) -> TruncSeries<UniPoly> {
    TruncSeries::new(
        (0..=order)
            .map(|n| UniPoly::monomial(BigRational::one() / big(factorial(n)), choose2(n)))
            .collect(),
    )
}

/// `D^r Exp(t) = q^{C(r,2)} Exp(q^r t)` with the ordinary derivative, for
/// `r <= r_max`.
pub fn exp_shift_check(order: usize, r_max: usize) -> Result<Report> {
    if r_max > order {
        return Err(Error::Precondition(format!(
            "r_max = {r_max} exceeds the order {order}"
        )));
    }
    let e = exp_series(order);
    let mut report = Report::new();
    for r in 0..=r_max {
        let lhs = e.derivative(r)?;
        let rhs = e
            .rescale_variable(&UniPoly::q_pow(r))
            .scale(&UniPoly::q_pow(choose2(r)))
            .truncate(order - r);
        if lhs == rhs {
            report.pass("exp_derivative_shift", order, Some(r), None);
        } else {
            report.fail("exp_derivative_shift", order, Some(r), "series differ".into());
        }
    }
    Ok(report)
}

/// `J_n^(r)` recovered from the classical `p_n^(r)` under
/// `e_n = q^{C(n,2)}/n!` as `p_n^(r) r! (n-r)! / ((1-q)^{n-r} q^{C(r,2)})`.
/// A nonzero remainder is reported as an error.
pub fn j_from_specialized_symfunc(n: usize, r: usize) -> Result<UniPoly> {
    if r == 0 || r > n {
        return Err(Error::Precondition(format!("need n >= r >= 1, got n = {n}, r = {r}")));
    }
    let bundle = SymSeriesBundle::exp_specialization(n);
    let p = p_nr_determinant(&bundle, n, r)?;
    let numerator = p.scale(&big(factorial(r) * factorial(n - r)));
    let divisor = one_minus_q_pow(n - r).shift(choose2(r));
    let (quotient, remainder) = numerator.div_rem(&divisor);
    if !remainder.is_zero() {
        return Err(Error::InexactDivision(format!(
            "p_{n}^({r}) leaves remainder {remainder} against {divisor}"
        )));
    }
    Ok(quotient)
}

/// The recurrence table against both explicit sums and the specialized
/// symmetric function, for every `1 <= r <= n <= n_max` (the sequence form
/// also for `r = 0`).
pub fn triple_equivalence_check(n_max: usize) -> Result<Report> {
    let table = build_jtable(n_max)?;
    let mut report = Report::new();
    for n in 1..=n_max {
        report.check_eq(
            "explicit_sequence_formula",
            n,
            Some(0),
            table.get(n, 0),
            &j_explicit_sequences(n, 0)?,
        );
        for r in 1..=n {
            let want = table.get(n, r);
            if r < n {
                report.check_eq(
                    "explicit_composition_formula",
                    n,
                    Some(r),
                    want,
                    &j_explicit_composition(n, r)?,
                );
            }
            report.check_eq(
                "explicit_sequence_formula",
                n,
                Some(r),
                want,
                &j_explicit_sequences(n, r)?,
            );
            match j_from_specialized_symfunc(n, r) {
                Ok(j) => {
                    report.check_eq("specialized_symmetric_function", n, Some(r), want, &j);
                }
                Err(e) => report.fail("specialized_symmetric_function", n, Some(r), e.to_string()),
            }
        }
    }
    Ok(report)
}

/// Every jpoly check up to `n_max`.
pub fn verify_jpoly(n_max: usize) -> Result<Report> {
    if n_max < 2 {
        return Err(Error::Precondition("n_max must be at least 2".into()));
    }
    let table = build_jtable(n_max)?;
    let mut report = shape_check(&table);
    report.extend(shape_check(&table.reciprocal_table()));
    report.extend(triple_equivalence_check(n_max)?);
    report.extend(recurrence_worked_example_check()?);
    report.extend(reciprocal_recurrence_check(n_max)?);
    report.extend(kung_yan_check(n_max)?);
    report.extend(q_one_check(&table)?);
    report.extend(tree_case_check(&table));
    report.extend(extended_recurrence_check(&table));
    report.extend(exp_shift_check(n_max, n_max)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcalc::q_derivative;

    fn ok(report: Report) {
        assert!(!report.is_empty());
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(q1_closed_forms(5, 1).unwrap(), (125u32.into(), 125u32.into()));
        assert_eq!(q1_closed_forms(4, 2).unwrap(), (8u32.into(), 8u32.into()));
        assert_eq!(q1_closed_forms(4, 4).unwrap(), (1u32.into(), 6u32.into()));
        assert!(q1_closed_forms(2, 3).is_err());
        assert!(q1_closed_forms(2, 0).is_err());
    }

    #[test]
    fn exp_coefficients() {
        let e = exp_series(4);
        assert_eq!(e.coeff(3), &UniPoly::monomial(BigRational::new(1.into(), 6.into()), 3));
        ok(exp_shift_check(6, 1).unwrap());
        ok(exp_shift_check(8, 3).unwrap());
        assert!(exp_shift_check(2, 3).is_err());
    }

    #[test]
    fn q_derivative_does_not_shift_exp() {
        let e = exp_series(6);
        let d = q_derivative(&e, 1).unwrap();
        let shifted = e.rescale_variable(&UniPoly::q()).truncate(5);
        assert_ne!(d, shifted);
    }

    #[test]
    fn specialized_examples() {
        for r in 1..=5 {
            assert_eq!(j_from_specialized_symfunc(r, r).unwrap(), UniPoly::one());
        }
        assert_eq!(
            j_from_specialized_symfunc(4, 2).unwrap(),
            UniPoly::from_ints(&[2, 3, 2, 1])
        );
        assert_eq!(
            j_from_specialized_symfunc(6, 2).unwrap(),
            UniPoly::from_ints(&[24, 60, 78, 80, 68, 52, 35, 20, 10, 4, 1])
        );
    }

    #[test]
    fn recurrences_small() {
        ok(recurrence_worked_example_check().unwrap());
        ok(reciprocal_recurrence_check(3).unwrap());
        ok(kung_yan_check(3).unwrap());
        assert!(kung_yan_check(1).is_err());
        let t = build_jtable(7).unwrap();
        ok(tree_case_check(&t));
        ok(extended_recurrence_check(&t));
        ok(q_one_check(&t).unwrap());
    }

    #[test]
    fn everything_to_seven() {
        ok(verify_jpoly(7).unwrap());
    }
}
