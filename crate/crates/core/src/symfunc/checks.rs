use super::pnr::{
    en_from_power_sums_determinant, p_nr_convolution, p_nr_determinant, pn_determinant_power_base, pq_nr_determinant,
    pq_nr_double_sum, qp_nr_determinant, qp_nr_direct,
};
use super::{elementary, int_poly, p_nr_monomial, signed, SymAlphabet, SymSeriesBundle};
use crate::error::{Error, Result};
use crate::exactpoly::{big, binomial, choose2, factorial, BiPoly, TruncSeries, UniPoly};
use crate::qcalc::{q_derivative, qbinomial, qbracket, qfactorial};
use crate::qstirling::{one_minus_q_pow, StirlingTriangle};
use crate::report::Report;

fn require_alphabet(alphabet: &SymAlphabet, degree: usize) -> Result<()> {
    if alphabet.len() < degree {
        return Err(Error::Precondition(format!(
            "degree-{degree} identities need at least {degree} variables, alphabet has {}",
            alphabet.len()
        )));
    }
    Ok(())
}

/// Classical `p_n^(j)` for `j = 0..=n`, by monomial enumeration.
fn classical_row(alphabet: &SymAlphabet, n: usize) -> Vec<UniPoly> {
    (0..=n).map(|j| p_nr_monomial(alphabet, n, j)).collect()
}

/// Relations between `[p_n^(r)]_q` and the classical `p_n^(j)` for every
/// `1 <= r <= n`: the Stirling-second-kind transfer, its first-kind inverse,
/// the `r = 1` case, the double-sum form, and agreement of the determinant
/// with the convolution.
pub fn transfer_theorem_check(alphabet: &SymAlphabet, n: usize) -> Result<Report> {
    require_alphabet(alphabet, n)?;
    let bundle = SymSeriesBundle::from_alphabet(alphabet, n);
    let classical = classical_row(alphabet, n);
    let qp: Vec<UniPoly> = (0..=n).map(|r| qp_nr_direct(&bundle, n, r)).collect::<Result<_>>()?;
    let big_s = StirlingTriangle::second_kind(n);
    let small_s = StirlingTriangle::first_kind(n);
    let mut report = Report::new();
    for r in 1..=n {
        let second: UniPoly = (r..=n)
            .map(|j| &(&one_minus_q_pow(j - r) * big_s.get(j, r)) * &classical[j])
            .sum();
        report.check_eq("transfer_second_kind", n, Some(r), &qp[r], &second);

        let first: UniPoly = (r..=n)
            .map(|j| &(&one_minus_q_pow(j - r) * small_s.get(j, r)) * &qp[j])
            .sum();
        report.check_eq("transfer_first_kind_inverse", n, Some(r), &classical[r], &first);

        let double: UniPoly = (r..=n)
            .map(|j| {
                let inner: UniPoly = (r..=j)
                    .map(|l| {
                        let t = qbinomial(l as i64, r as i64).scale(&big(binomial(j as i64, l as i64)));
                        signed(t, (l - r) % 2 == 1)
                    })
                    .sum();
                &classical[j] * &inner
            })
            .sum();
        report.check_eq("transfer_double_sum", n, Some(r), &qp[r], &double);

        report.check_eq(
            "q_power_sum_determinant_matches_convolution",
            n,
            Some(r),
            &qp[r],
            &qp_nr_determinant(&bundle, n, r)?,
        );
    }
    let simple: UniPoly = (1..=n).map(|j| &one_minus_q_pow(j - 1) * &classical[j]).sum();
    report.check_eq("transfer_power_sum", n, Some(1), &qp[1], &simple);
    Ok(report)
}

/// `[p_n^(r)]_{p,q}`: the p,q-determinant against the double sum over
/// classical `p_n^(j)`, and its `p = 1` slice against the q-analog.
pub fn pq_transfer_check(alphabet: &SymAlphabet, n: usize) -> Result<Report> {
    if n == 0 {
        return Err(Error::Precondition("need n >= 1".into()));
    }
    let bundle = SymSeriesBundle::from_alphabet(alphabet, n);
    let e: Vec<BiPoly> = bundle.e_all().iter().map(BiPoly::from_q_poly).collect();
    let classical: Vec<BiPoly> = classical_row(alphabet, n).iter().map(BiPoly::from_q_poly).collect();
    let mut report = Report::new();
    for r in 1..=n {
        let det = pq_nr_determinant(&e, n, r)?;
        let sum = pq_nr_double_sum(&classical, n, r)?;
        if det == sum {
            report.pass("pq_transfer_double_sum", n, Some(r), None);
        } else {
            report.fail(
                "pq_transfer_double_sum",
                n,
                Some(r),
                format!("lhs = {det:?}; rhs = {sum:?}"),
            );
        }
        report.check_eq(
            "pq_degenerates_at_p_one",
            n,
            Some(r),
            &det.at_p_one(),
            &qp_nr_direct(&bundle, n, r)?,
        );
    }
    Ok(report)
}

/// The `r = 1` determinants: `[p_k]` from the e-determinant, the triangular
/// system `sum (-1)^{k-1} e_{m-k} [p_k] = [m] e_m`, and `[m]! e_m` recovered
/// from `[p_1..p_m]`, for every `m <= n`.
pub fn classical_pn_determinants_check(alphabet: &SymAlphabet, n: usize) -> Result<Report> {
    require_alphabet(alphabet, n)?;
    let bundle = SymSeriesBundle::from_alphabet(alphabet, n);
    let mut pk = vec![UniPoly::zero()];
    let mut report = Report::new();
    for m in 1..=n {
        let det = pn_determinant_power_base(&bundle, m, 1)?;
        report.check_eq("power_sum_determinant", m, Some(1), &det, &qp_nr_direct(&bundle, m, 1)?);
        pk.push(det);
        let system: UniPoly = (1..=m)
            .map(|k| signed(bundle.e(m - k) * &pk[k], (k - 1) % 2 == 1))
            .sum();
        report.check_eq(
            "power_sum_linear_system",
            m,
            Some(1),
            &system,
            &(&qbracket(m) * bundle.e(m)),
        );
        report.check_eq(
            "elementary_from_power_sums_determinant",
            m,
            None,
            &(&qfactorial(m) * bundle.e(m)),
            &en_from_power_sums_determinant(&pk, m)?,
        );
    }
    Ok(report)
}

/// `[p_n^(r)]` by determinant and by convolution for every
/// `1 <= r <= n <= bundle order`, and the same for the classical forms.
pub fn determinant_convolution_check(bundle: &SymSeriesBundle) -> Result<Report> {
    let mut report = Report::new();
    for n in 1..=bundle.order() {
        for r in 1..=n {
            report.check_eq(
                "q_power_sum_determinant_matches_convolution",
                n,
                Some(r),
                &qp_nr_determinant(bundle, n, r)?,
                &qp_nr_direct(bundle, n, r)?,
            );
            report.check_eq(
                "classical_determinant_matches_convolution",
                n,
                Some(r),
                &p_nr_determinant(bundle, n, r)?,
                &p_nr_convolution(bundle, n, r)?,
            );
        }
    }
    Ok(report)
}

/// `[r]! sum_n [p_n^(r)] (-t)^{n-r} E(t) = D_q^r E(t)` as series truncated at
/// `t^{order-r}`, for every `0 <= r <= order`.
pub fn generating_series_check(bundle: &SymSeriesBundle) -> Result<Report> {
    let order = bundle.order();
    let e_series = bundle.e_series();
    let mut report = Report::new();
    for r in 0..=order {
        let rf = qfactorial(r);
        let coeffs = (0..=order - r)
            .map(|m| Ok(signed(&rf * &qp_nr_direct(bundle, m + r, r)?, m % 2 == 1)))
            .collect::<Result<Vec<_>>>()?;
        let lhs = TruncSeries::new(coeffs).mul(&e_series.truncate(order - r));
        let rhs = q_derivative(&e_series, r)?;
        if lhs == rhs {
            report.pass("q_generating_series", order, Some(r), None);
        } else {
            let first = (0..=order - r).find(|&m| lhs.coeff(m) != rhs.coeff(m)).unwrap_or(0);
            report.fail(
                "q_generating_series",
                order,
                Some(r),
                format!(
                    "coefficient of t^{first}: lhs = {}; rhs = {}",
                    lhs.coeff(first),
                    rhs.coeff(first)
                ),
            );
        }
    }
    Ok(report)
}

/// Under `e_n = q^{C(n,2)}/n!`: `p_n^(r) = (1-q^r)/r! q^{C(r,2)} [p_{n-r}]_{q^r}`
/// for `1 <= r < n <= n_max`, with the right side from the r = 1 determinant
/// in base `q^r`.
pub fn shifted_base_check(n_max: usize) -> Result<Report> {
    let bundle = SymSeriesBundle::exp_specialization(n_max);
    let mut report = Report::new();
    for n in 2..=n_max {
        for r in 1..n {
            let lhs = p_nr_convolution(&bundle, n, r)?;
            let prefactor = (&UniPoly::one() - &UniPoly::q_pow(r))
                .shift(choose2(r))
                .scale(&(num_rational::BigRational::from_integer(1.into()) / big(factorial(r))));
            let rhs = &prefactor * &pn_determinant_power_base(&bundle, n - r, r)?;
            report.check_eq("shifted_base_power_sum", n, Some(r), &lhs, &rhs);
        }
    }
    Ok(report)
}

/// `h_n = sum_r p_n^(r)` for `1 <= n <= n_max`.
pub fn complete_sum_check(alphabet: &SymAlphabet, n_max: usize) -> Result<Report> {
    require_alphabet(alphabet, n_max)?;
    let bundle = SymSeriesBundle::from_alphabet(alphabet, n_max);
    let mut report = Report::new();
    for n in 1..=n_max {
        let sum: UniPoly = (1..=n).map(|r| p_nr_monomial(alphabet, n, r)).sum();
        report.check_eq("complete_as_sum_over_lengths", n, None, bundle.h(n), &sum);
    }
    Ok(report)
}

/// `e_k h_m = sum_j C(j,k) p_{k+m}^(j)` for `k + m <= total_max`.
pub fn product_rule_check(alphabet: &SymAlphabet, total_max: usize) -> Result<Report> {
    require_alphabet(alphabet, total_max)?;
    let bundle = SymSeriesBundle::from_alphabet(alphabet, total_max);
    let mut report = Report::new();
    for total in 0..=total_max {
        let row = classical_row(alphabet, total);
        for k in 0..=total {
            let m = total - k;
            let lhs = &elementary(alphabet, k) * bundle.h(m);
            let rhs: UniPoly = (k..=total)
                .map(|j| &int_poly(binomial(j as i64, k as i64)) * &row[j])
                .sum();
            report.check_eq("elementary_complete_product", total, Some(k), &lhs, &rhs);
        }
    }
    Ok(report)
}
