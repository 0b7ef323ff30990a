use crate::error::{Error, Result};
use crate::exactpoly::choose2;

/// Ordered sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `sum C(u_i, 2)`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().map(|&u| choose2(u)).sum()
    }

    /// `sum_{j >= i+2} u_i u_j`: products of parts that are not adjacent.
    pub fn sigma(&self) -> usize {
        let u = &self.parts;
        let mut total = 0;
        let mut prefix = 0;
        for j in 2..u.len() {
            prefix += u[j - 2];
            total += prefix * u[j];
        }
        total
    }
}

/// All compositions of `m`; the single empty composition when `m = 0`.
///
/// Bit `i` of a mask over `m - 1` positions marks a cut after the `(i+1)`-th
/// unit, so the `2^{m-1}` masks enumerate every composition exactly once.
pub fn compositions(m: usize) -> Vec<Composition> {
    if m == 0 {
        return vec![Composition { parts: vec![] }];
    }
    assert!(m <= 40, "compositions of {m} are too many to list");
    let cuts = m - 1;
    (0u64..1u64 << cuts)
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..cuts {
                if mask >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition { parts }
        })
        .collect()
}
