//! Brute-force combinatorial certifiers that share no code path with the
//! recurrences or the explicit formulas: labeled rooted forests scored by a
//! level statistic, and parking functions scored by their sum.

mod checks;
mod forest;
mod parking;

pub use checks::{reciprocal_explicit_check, verify_oracles, OracleOptions};
pub use forest::{
    dump_forests, enumerate_forests, forest_enumerator_poly, forest_enumerators, level_statistic, Forest, ForestIter,
    ForestTally, Variant,
};
pub use parking::{is_parking, parking_enumerator_poly, ParkingFunction};

use std::collections::HashMap;

use crate::jpoly::Composition;

/// Default refusal threshold for brute-force enumerations.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// A bijection `P -> {1..|P|}` for every vertex subset `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ranking {
    Increasing,
    Decreasing,
    /// Ascending order shuffled by Fisher-Yates, driven by splitmix64 with
    /// state `seed ^ mask` where `mask` has bit `v` set for each `v` in `P`.
    Seeded(u64),
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl Ranking {
    /// Rank of `v` within the subset `mask` (bit `v` set for member `v`).
    pub fn rank(&self, mask: u64, v: usize) -> usize {
        debug_assert!(mask >> v & 1 == 1, "vertex {v} not in subset");
        match *self {
            Ranking::Increasing => (mask & ((1u64 << v) - 1)).count_ones() as usize + 1,
            Ranking::Decreasing => (mask >> v >> 1).count_ones() as usize + 1,
            Ranking::Seeded(seed) => {
                let order = seeded_order(seed, mask);
                order.iter().position(|&x| x == v).expect("member") + 1
            }
        }
    }

    /// Short label for reports: `increasing`, `decreasing` or `seeded:<seed>`.
    pub fn label(&self) -> String {
        match self {
            Ranking::Increasing => "increasing".into(),
            Ranking::Decreasing => "decreasing".into(),
            Ranking::Seeded(s) => format!("seeded:{s}"),
        }
    }
}

impl std::str::FromStr for Ranking {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "increasing" | "plus" | "+" => Ok(Ranking::Increasing),
            "decreasing" | "minus" | "-" => Ok(Ranking::Decreasing),
            _ => s
                .strip_prefix("seeded:")
                .and_then(|t| t.parse().ok())
                .map(Ranking::Seeded)
                .ok_or_else(|| format!("unknown ranking {s:?}; use increasing, decreasing or seeded:<u64>")),
        }
    }
}

/// Members of `mask` in their seeded order; position `k` has rank `k + 1`.
fn seeded_order(seed: u64, mask: u64) -> Vec<usize> {
    let mut items: Vec<usize> = (0..64).filter(|&v| mask >> v & 1 == 1).collect();
    let mut state = seed ^ mask;
    for i in (1..items.len()).rev() {
        let j = (splitmix64(&mut state) % (i as u64 + 1)) as usize;
        items.swap(i, j);
    }
    items
}

/// Memoized ranks for one ranking, indexed by subset mask.
pub(crate) struct RankCache {
    ranking: Ranking,
    seen: HashMap<u64, Vec<u8>>,
}

impl RankCache {
    pub(crate) fn new(ranking: Ranking) -> Self {
        RankCache {
            ranking,
            seen: HashMap::new(),
        }
    }

    pub(crate) fn rank(&mut self, mask: u64, v: usize) -> usize {
        match self.ranking {
            Ranking::Seeded(seed) => {
                let ranks = self.seen.entry(mask).or_insert_with(|| {
                    let mut ranks = vec![0u8; 64];
                    for (k, &x) in seeded_order(seed, mask).iter().enumerate() {
                        ranks[x] = (k + 1) as u8;
                    }
                    ranks
                });
                ranks[v] as usize
            }
            r => r.rank(mask, v),
        }
    }
}

/// `sum_{j >= i+2} u_i u_j` over the parts, with `r` prepended as `u_0` when
/// given.
pub fn sigma_statistic(u: &Composition, include_root: Option<usize>) -> usize {
    match include_root {
        None => u.sigma(),
        // the root level pairs with every part except u_1
        Some(r) => u.sigma() + r * u.parts().iter().skip(1).sum::<usize>(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(vs: &[usize]) -> u64 {
        vs.iter().fold(0, |m, &v| m | 1 << v)
    }

    #[test]
    fn fixed_rankings() {
        let p = mask(&[2, 5, 7]);
        assert_eq!(Ranking::Increasing.rank(p, 2), 1);
        assert_eq!(Ranking::Increasing.rank(p, 7), 3);
        assert_eq!(Ranking::Decreasing.rank(p, 7), 1);
        assert_eq!(Ranking::Decreasing.rank(p, 2), 3);
    }

    #[test]
    fn seeded_rankings_are_bijections_and_reproducible() {
        for seed in [0u64, 42, u64::MAX] {
            for m in 1u64..512 {
                let members: Vec<usize> = (0..9).filter(|&v| m >> v & 1 == 1).collect();
                let mut ranks: Vec<usize> = members.iter().map(|&v| Ranking::Seeded(seed).rank(m, v)).collect();
                ranks.sort_unstable();
                assert_eq!(ranks, (1..=members.len()).collect::<Vec<_>>());
            }
        }
        assert_eq!(
            seeded_order(42, mask(&[1, 2, 3, 4, 5])),
            seeded_order(42, mask(&[1, 2, 3, 4, 5]))
        );
        let mut cache = RankCache::new(Ranking::Seeded(7));
        let m = mask(&[1, 3, 4, 8]);
        for v in [1, 3, 4, 8] {
            assert_eq!(cache.rank(m, v), Ranking::Seeded(7).rank(m, v));
        }
    }

    #[test]
    fn splitmix_reference_values() {
        // first outputs of the reference generator seeded with 0
        let mut s = 0u64;
        assert_eq!(splitmix64(&mut s), 0xE220_A839_7B1D_CDAF);
        assert_eq!(splitmix64(&mut s), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn ranking_parsing() {
        assert_eq!("increasing".parse::<Ranking>().unwrap(), Ranking::Increasing);
        assert_eq!("-".parse::<Ranking>().unwrap(), Ranking::Decreasing);
        assert_eq!("seeded:9".parse::<Ranking>().unwrap(), Ranking::Seeded(9));
        assert!("sideways".parse::<Ranking>().is_err());
        assert_eq!(Ranking::Seeded(3).label(), "seeded:3");
    }

    #[test]
    fn sigma_examples() {
        let single = Composition::new(vec![4]).unwrap();
        assert_eq!(sigma_statistic(&single, None), 0);
        let u = Composition::new(vec![1, 2, 3]).unwrap();
        assert_eq!(sigma_statistic(&u, None), 3);
        let tail = Composition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(sigma_statistic(&tail, Some(2)), 5);
    }
}
