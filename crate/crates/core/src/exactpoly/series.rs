use super::ring::Ring;
use crate::error::{Error, Result};

/// Formal power series in `t` truncated after `t^order`.
///
/// Binary operations on series of different orders truncate to the smaller
/// order.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncSeries<C> {
    /// Series with the given coefficients; `order = coeffs.len() - 1`.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series holds at least t^0");
        TruncSeries { coeffs }
    }

    /// Pads `coeffs` with zeros (or truncates) to exactly `order + 1` terms.
    pub fn with_order(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::with_order(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::with_order(vec![C::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> &C {
        &self.coeffs[m]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::with_order(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.order().min(other.order());
        Self::new(
            (0..=m)
                .map(|i| self.coeffs[i].clone() + other.coeffs[i].clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().cloned().map(|c| -c).collect())
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let m = self.order().min(other.order());
        let coeffs = (0..=m)
            .map(|n| {
                (0..=n).fold(C::zero(), |acc, k| {
                    acc + self.coeffs[k].clone() * other.coeffs[n - k].clone()
                })
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Formal inverse; the constant term must be a unit.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or(Error::NotInvertible("constant term of the series is not a unit"))?;
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let s = (1..=n).fold(C::zero(), |acc, k| acc + self.coeffs[k].clone() * out[n - k].clone());
            out.push(-(s * inv0.clone()));
        }
        Ok(Self::new(out))
    }

    /// `F(c t)`: coefficient `m` multiplied by `c^m`.
    pub fn rescale_variable(&self, c: &C) -> Self {
        let mut power = C::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.clone() * power.clone());
            power = power * c.clone();
        }
        Self::new(coeffs)
    }

    /// `F(-t)`.
    pub fn negate_variable(&self) -> Self {
        self.rescale_variable(&-C::one())
    }

    /// Ordinary `r`-th derivative in `t`; the result has order `order - r`.
    pub fn derivative(&self, r: usize) -> Result<Self> {
        if r > self.order() {
            return Err(Error::Precondition(format!(
                "derivative of order {r} exceeds series order {}",
                self.order()
            )));
        }
        let coeffs = (r..=self.order())
            .map(|n| {
                let falling: i64 = ((n - r + 1)..=n).map(|x| x as i64).product();
                self.coeffs[n].clone() * C::from_int(falling)
            })
            .collect();
        Ok(Self::new(coeffs))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        TruncSeries::new(self.coeffs.iter().map(f).collect())
    }
}
