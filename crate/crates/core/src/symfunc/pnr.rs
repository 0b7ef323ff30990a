use super::{int_poly, signed, Partition, SymSeriesBundle};
use crate::error::{Error, Result};
use crate::exactpoly::{binomial, det_fraction_free, BiPoly, Ring, UniPoly};
use crate::qcalc::{pq_binomial, qbinomial, qbracket, qbracket_power_base};

/// Lower Hessenberg matrix with the given first column and `e_{i+1-j}` in
/// column `j >= 1` (so `1 = e_0` on the superdiagonal). Needs
/// `e.len() >= first_col.len()`.
pub fn pnr_matrix<C: Ring>(first_col: Vec<C>, e: &[C]) -> Vec<Vec<C>> {
    let size = first_col.len();
    first_col
        .into_iter()
        .enumerate()
        .map(|(i, head)| {
            let mut row = Vec::with_capacity(size);
            row.push(head);
            for j in 1..size {
                row.push(if i + 1 >= j { e[i + 1 - j].clone() } else { C::zero() });
            }
            row
        })
        .collect()
}

fn require_rank(n: usize, r: usize) -> Result<()> {
    if r > n {
        return Err(Error::Precondition(format!("need n >= r, got n = {n}, r = {r}")));
    }
    Ok(())
}

/// `[p_n^(r)]_q = sum_k (-1)^k [r+k r] e_{r+k} h_{n-r-k}`; `delta_{n,0}` when `r = 0`.
pub fn qp_nr_direct(bundle: &SymSeriesBundle, n: usize, r: usize) -> Result<UniPoly> {
    require_rank(n, r)?;
    bundle.require_order(n)?;
    if r == 0 {
        return Ok(if n == 0 { UniPoly::one() } else { UniPoly::zero() });
    }
    Ok((0..=n - r)
        .map(|k| {
            let term = &(&qbinomial((r + k) as i64, r as i64) * bundle.e(r + k)) * bundle.h(n - r - k);
            signed(term, k % 2 == 1)
        })
        .sum())
}

/// `[p_n^(r)]_q` as the `(n-r+1)`-square determinant with first column
/// `[r+i r] e_{r+i}`.
pub fn qp_nr_determinant(bundle: &SymSeriesBundle, n: usize, r: usize) -> Result<UniPoly> {
    require_rank(n, r)?;
    if r == 0 {
        return Err(Error::Precondition("the determinant form needs r >= 1".into()));
    }
    bundle.require_order(n)?;
    let first = (0..=n - r)
        .map(|i| &qbinomial((r + i) as i64, r as i64) * bundle.e(r + i))
        .collect();
    Ok(det_fraction_free(&pnr_matrix(first, bundle.e_all())))
}

/// Classical `p_n^(r) = sum_k (-1)^k C(r+k, r) e_{r+k} h_{n-r-k}`, for bundles
/// that do not come from an alphabet.
pub fn p_nr_convolution(bundle: &SymSeriesBundle, n: usize, r: usize) -> Result<UniPoly> {
    require_rank(n, r)?;
    bundle.require_order(n)?;
    if r == 0 {
        return Ok(if n == 0 { UniPoly::one() } else { UniPoly::zero() });
    }
    Ok((0..=n - r)
        .map(|k| {
            let c = int_poly(binomial((r + k) as i64, r as i64));
            signed(&(&c * bundle.e(r + k)) * bundle.h(n - r - k), k % 2 == 1)
        })
        .sum())
}

/// Classical determinant for `p_n^(r)`, first column `C(r+i, r) e_{r+i}`.
pub fn p_nr_determinant(bundle: &SymSeriesBundle, n: usize, r: usize) -> Result<UniPoly> {
    require_rank(n, r)?;
    if r == 0 {
        return Err(Error::Precondition("the determinant form needs r >= 1".into()));
    }
    bundle.require_order(n)?;
    let first = (0..=n - r)
        .map(|i| &int_poly(binomial((r + i) as i64, r as i64)) * bundle.e(r + i))
        .collect();
    Ok(det_fraction_free(&pnr_matrix(first, bundle.e_all())))
}

/// `[p_n]` by the `n`-square determinant with first column `[i]_{q^s} e_i`;
/// `s = 1` is the ordinary q-bracket.
pub fn pn_determinant_power_base(bundle: &SymSeriesBundle, n: usize, s: usize) -> Result<UniPoly> {
    if n == 0 || s == 0 {
        return Err(Error::Precondition("need n >= 1 and base exponent s >= 1".into()));
    }
    bundle.require_order(n)?;
    let first = (1..=n).map(|i| &qbracket_power_base(i, s) * bundle.e(i)).collect();
    Ok(det_fraction_free(&pnr_matrix(first, bundle.e_all())))
}

/// `[n]! e_n` recovered from `[p_1..p_n]` (`pk[k] = [p_k]`, `pk[0]` unused):
/// the determinant with `[p_{i-j+1}]` on and below the diagonal and `[i]` on
/// the superdiagonal.
pub fn en_from_power_sums_determinant(pk: &[UniPoly], n: usize) -> Result<UniPoly> {
    if n == 0 || pk.len() <= n {
        return Err(Error::Precondition(format!("need [p_1..p_{n}] with n >= 1")));
    }
    let m: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j <= i {
                        pk[i - j + 1].clone()
                    } else if j == i + 1 {
                        qbracket(i + 1)
                    } else {
                        UniPoly::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(det_fraction_free(&m))
}

/// `[p_lambda] = prod [p_{lambda_i}]`.
pub fn qp_lambda(bundle: &SymSeriesBundle, lambda: &Partition) -> Result<UniPoly> {
    lambda
        .parts()
        .iter()
        .try_fold(UniPoly::one(), |acc, &part| Ok(&acc * &qp_nr_direct(bundle, part, 1)?))
}

/// `[p_n^(r)]_{p,q}` as the determinant over `e` embedded in `Q[p,q]`.
pub fn pq_nr_determinant(e: &[BiPoly], n: usize, r: usize) -> Result<BiPoly> {
    require_rank(n, r)?;
    if r == 0 || e.len() <= n {
        return Err(Error::Precondition("need r >= 1 and e_0..e_n".into()));
    }
    let first = (0..=n - r)
        .map(|i| pq_binomial((r + i) as i64, r as i64) * e[r + i].clone())
        .collect();
    Ok(det_fraction_free(&pnr_matrix(first, e)))
}

/// `sum_{j=r}^{n} p_n^(j) sum_{l=r}^{j} (-1)^{l-r} C(j,l) [l r]_{p,q}` where
/// `classical[j] = p_n^(j)`.
pub fn pq_nr_double_sum(classical: &[BiPoly], n: usize, r: usize) -> Result<BiPoly> {
    require_rank(n, r)?;
    if classical.len() <= n {
        return Err(Error::Precondition("need p_n^(j) for every j <= n".into()));
    }
    let mut total = BiPoly::zero();
    for (j, pj) in classical.iter().enumerate().take(n + 1).skip(r) {
        let mut inner = BiPoly::zero();
        for l in r..=j {
            let c = BiPoly::from_q_poly(&int_poly(binomial(j as i64, l as i64)));
            let term = c * pq_binomial(l as i64, r as i64);
            inner = if (l - r) % 2 == 1 { inner - term } else { inner + term };
        }
        total = total + pj.clone() * inner;
    }
    Ok(total)
}
