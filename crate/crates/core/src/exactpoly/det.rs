use super::ring::ExactDiv;

/// Determinant by Bareiss fraction-free elimination.
///
/// Every division performed is exact in the coefficient domain; a non-exact
/// division means the arithmetic itself is broken, so it aborts.
pub fn det_fraction_free<C: ExactDiv>(matrix: &[Vec<C>]) -> C {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "determinant of a non-square matrix"
    );
    if n == 0 {
        return C::one();
    }
    let mut m: Vec<Vec<C>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return C::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("inexact division in fraction-free elimination");
            }
            m[i][k] = C::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::ring::Ring;
    use crate::exactpoly::unipoly::UniPoly;
    use proptest::prelude::*;

    /// Laplace expansion along the first row.
    fn cofactor<C: Ring>(m: &[Vec<C>]) -> C {
        let n = m.len();
        if n == 0 {
            return C::one();
        }
        let mut acc = C::zero();
        for j in 0..n {
            let minor: Vec<Vec<C>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = m[0][j].clone() * cofactor(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn small_cases() {
        assert_eq!(det_fraction_free(&[vec![p(&[3, 1])]]), p(&[3, 1]));
        let id: Vec<Vec<UniPoly>> = (0..4)
            .map(|i| (0..4).map(|j| if i == j { p(&[1]) } else { p(&[]) }).collect())
            .collect();
        assert_eq!(det_fraction_free(&id), p(&[1]));
        let m = vec![vec![p(&[1, 1]), p(&[1])], vec![p(&[0, 1]), p(&[1])]];
        assert_eq!(det_fraction_free(&m), p(&[1]));
        assert_eq!(det_fraction_free::<UniPoly>(&[]), p(&[1]));
    }

    #[test]
    fn zero_pivot_needs_a_swap() {
        let m = vec![
            vec![p(&[]), p(&[1]), p(&[2])],
            vec![p(&[1]), p(&[0, 1]), p(&[3])],
            vec![p(&[4]), p(&[5]), p(&[0, 0, 1])],
        ];
        assert_eq!(det_fraction_free(&m), cofactor(&m));
        let singular = vec![vec![p(&[1, 1]), p(&[2, 2])], vec![p(&[1]), p(&[2])]];
        assert!(det_fraction_free(&singular).is_zero());
    }

    fn matrix(size: usize) -> impl Strategy<Value = Vec<Vec<UniPoly>>> {
        prop::collection::vec(
            prop::collection::vec(
                prop::collection::vec(-3i64..=3, 0..3).prop_map(|c| UniPoly::from_ints(&c)),
                size,
            ),
            size,
        )
    }

    proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(m in (1usize..=4).prop_flat_map(matrix)) {
            prop_assert_eq!(det_fraction_free(&m), cofactor(&m));
        }
    }
}
