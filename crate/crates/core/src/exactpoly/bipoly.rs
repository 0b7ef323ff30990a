use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::{self, ExactDiv};
use super::unipoly::{parse_rational, rational_to_string, UniPoly};
use crate::error::Result;

/// Dense bivariate polynomial in `(p, q)`.
///
/// Entry `(i, j)` is the coefficient of `p^i q^j`. The stored rectangle is
/// minimal: the last row and the last column each hold a nonzero entry, and
/// the zero polynomial has no rows.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    rows: Vec<Vec<BigRational>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rows(vec![vec![BigRational::one()]])
    }

    pub fn p() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    /// `c p^i q^j`.
    pub fn monomial(c: BigRational, i: usize, j: usize) -> Self {
        let mut rows = vec![vec![BigRational::zero(); j + 1]; i + 1];
        rows[i][j] = c;
        Self::from_rows(rows)
    }

    /// Embeds a polynomial in `q` as a bivariate polynomial of `p`-degree 0.
    pub fn from_q_poly(a: &UniPoly) -> Self {
        Self::from_rows(vec![a.coeffs().to_vec()])
    }

    pub fn from_rows(mut rows: Vec<Vec<BigRational>>) -> Self {
        let width = rows
            .iter()
            .map(|r| r.iter().rposition(|c| !c.is_zero()).map_or(0, |k| k + 1))
            .max()
            .unwrap_or(0);
        if width == 0 {
            return Self::zero();
        }
        for row in &mut rows {
            row.resize(width, BigRational::zero());
        }
        while rows.last().is_some_and(|r| r.iter().all(Zero::is_zero)) {
            rows.pop();
        }
        BiPoly { rows }
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigRational {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Degree in `p`, `None` for zero.
    pub fn p_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Row `i` as a polynomial in `q` (the coefficient of `p^i`).
    pub fn p_coeff(&self, i: usize) -> UniPoly {
        self.rows
            .get(i)
            .map(|r| UniPoly::from_coeffs(r.clone()))
            .unwrap_or_else(UniPoly::zero)
    }

    fn from_p_coeffs(parts: Vec<UniPoly>) -> Self {
        Self::from_rows(parts.into_iter().map(|u| u.coeffs().to_vec()).collect())
    }

    /// Specializes `p = 1`.
    pub fn at_p_one(&self) -> UniPoly {
        (0..self.rows.len()).map(|i| self.p_coeff(i)).sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        ring::Ring::pow(self, k)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for i in 0..self.rows.len() {
            let row = self.p_coeff(i);
            if row.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({row})")?,
                1 => write!(f, "({row})p")?,
                _ => write!(f, "({row})p^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        let n = self.rows.len().max(rhs.rows.len());
        BiPoly::from_p_coeffs((0..n).map(|i| self.p_coeff(i) + rhs.p_coeff(i)).collect())
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        self + (-rhs)
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            rows: self
                .rows
                .into_iter()
                .map(|r| r.into_iter().map(|c| -c).collect())
                .collect(),
        }
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.rows.len() + rhs.rows.len() - 1];
        for i in 0..self.rows.len() {
            let a = self.p_coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..rhs.rows.len() {
                out[i + j] += &(&a * &rhs.p_coeff(j));
            }
        }
        BiPoly::from_p_coeffs(out)
    }
}

impl ring::Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
    fn from_rational(c: &BigRational) -> Self {
        Self::from_rows(vec![vec![c.clone()]])
    }
    fn unit_inverse(&self) -> Option<Self> {
        match self.rows.as_slice() {
            [row] if row.len() == 1 => Some(Self::from_rows(vec![vec![row[0].recip()]])),
            _ => None,
        }
    }
}

impl ExactDiv for BiPoly {
    /// Division as polynomials in `p` over the domain `Q[q]`; the leading
    /// `p`-coefficient of every partial remainder must be divisible exactly.
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.p_degree()?;
        let lead = divisor.p_coeff(dd);
        let mut rem: Vec<UniPoly> = (0..self.rows.len()).map(|i| self.p_coeff(i)).collect();
        let Some(nd) = self.p_degree() else {
            return Some(BiPoly::zero());
        };
        if nd < dd {
            return None;
        }
        let mut quot = vec![UniPoly::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let c = rem[k + dd].div_exact(&lead)?;
            for j in 0..=dd {
                rem[k + j] = &rem[k + j] - &(&c * &divisor.p_coeff(j));
            }
            quot[k] = c;
        }
        rem.iter().all(UniPoly::is_zero).then(|| BiPoly::from_p_coeffs(quot))
    }
}

#[derive(Serialize, Deserialize)]
struct BiPolyJson {
    vars: Vec<String>,
    coeffs: Vec<Vec<String>>,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiPolyJson {
            vars: vec!["p".into(), "q".into()],
            coeffs: self
                .rows
                .iter()
                .map(|r| r.iter().map(rational_to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BiPolyJson::deserialize(d)?;
        if raw.vars != ["p", "q"] {
            return Err(D::Error::custom(format!("unexpected variables {:?}", raw.vars)));
        }
        let rows = raw
            .coeffs
            .iter()
            .map(|r| r.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let poly = BiPoly::from_rows(rows.clone());
        if poly.rows != rows {
            return Err(D::Error::custom("coefficient rectangle is not minimal"));
        }
        Ok(poly)
    }
}
