use crate::error::{Error, Result};

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "{parts:?} is not a weakly decreasing sequence of positive integers"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|lambda|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }
}

/// Partitions of `n` with exactly `r` parts, in reverse lexicographic order.
pub fn partitions_with_parts(n: usize, r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fill(n, r, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, slots: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
        }
        return;
    }
    if remaining < slots {
        return;
    }
    // largest allowed part leaves at least 1 for every later slot
    let hi = cap.min(remaining - (slots - 1));
    for part in (1..=hi).rev() {
        current.push(part);
        fill(remaining - part, slots - 1, part, current, out);
        current.pop();
    }
}

/// All partitions of `n`.
pub fn partitions(n: usize) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition { parts: vec![] }];
    }
    (1..=n).flat_map(|r| partitions_with_parts(n, r)).collect()
}
