use std::io::Write;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::ser::{Serialize, Serializer};

use super::{RankCache, Ranking};
use crate::error::{Error, Result};
use crate::exactpoly::{choose2, UniPoly};

/// Which level statistic to score forests with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `sum_{i>=1} C(u_i,2) + sum (w(parent) - 1)`; enumerates `J_n^(r)`.
    Standard,
    /// `sigma(r, u_1..u_k) + sum (w(parent) - 1)`; enumerates the reciprocal.
    Reciprocal,
}

/// Rooted forest on `{1..n}` with a fixed root set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest {
    /// `parent[v]`, zero for roots; index 0 unused.
    parent: Vec<usize>,
    depth: Vec<usize>,
}

fn roots_mask(n: usize, roots: &[usize]) -> Result<u64> {
    if n == 0 || n > 63 {
        return Err(Error::Precondition(format!("vertex count {n} outside 1..=63")));
    }
    if roots.is_empty() {
        return Err(Error::Precondition("at least one root is required".into()));
    }
    let mut mask = 0u64;
    for &v in roots {
        if v == 0 || v > n {
            return Err(Error::Precondition(format!("root {v} is not a vertex of 1..={n}")));
        }
        if mask >> v & 1 == 1 {
            return Err(Error::Precondition(format!("root {v} listed twice")));
        }
        mask |= 1 << v;
    }
    Ok(mask)
}

/// Fills `depth` from `parent`; false if some vertex never reaches a root.
fn fill_depths(parent: &[usize], depth: &mut [usize], state: &mut [u8], stack: &mut Vec<usize>) -> bool {
    const UNKNOWN: u8 = 0;
    const OPEN: u8 = 1;
    const DONE: u8 = 2;
    let n = parent.len() - 1;
    stack.clear();
    for v in 1..=n {
        state[v] = if parent[v] == 0 { DONE } else { UNKNOWN };
        if parent[v] == 0 {
            depth[v] = 0;
        }
    }
    for v in 1..=n {
        let mut cur = v;
        while state[cur] != DONE {
            if state[cur] == OPEN {
                return false;
            }
            state[cur] = OPEN;
            stack.push(cur);
            cur = parent[cur];
        }
        let mut d = depth[cur];
        while let Some(x) = stack.pop() {
            d += 1;
            depth[x] = d;
            state[x] = DONE;
        }
    }
    true
}

/// Level masks (bit `v` for vertex `v`) indexed by depth.
fn level_masks(depth: &[usize]) -> Vec<u64> {
    let height = depth.iter().skip(1).copied().max().unwrap_or(0);
    let mut masks = vec![0u64; height + 1];
    for (v, &d) in depth.iter().enumerate().skip(1) {
        masks[d] |= 1 << v;
    }
    masks
}

fn sizes(masks: &[u64]) -> Vec<usize> {
    masks.iter().map(|m| m.count_ones() as usize).collect()
}

fn standard_base(sizes: &[usize]) -> usize {
    sizes.iter().skip(1).map(|&u| choose2(u)).sum()
}

/// `sum_{j >= i+2} u_i u_j` over `(u_0, u_1, ..., u_k)`.
fn sigma_base(sizes: &[usize]) -> usize {
    let mut total = 0;
    let mut prefix = 0;
    for j in 2..sizes.len() {
        prefix += sizes[j - 2];
        total += prefix * sizes[j];
    }
    total
}

fn weight_sum(parent: &[usize], depth: &[usize], masks: &[u64], mut rank: impl FnMut(u64, usize) -> usize) -> usize {
    parent
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, &p)| p != 0)
        .map(|(_, &p)| rank(masks[depth[p]], p) - 1)
        .sum()
}

impl Forest {
    /// Forest from `parent[v]` for `v` in `1..=n` (index 0 ignored, zero
    /// marks a root). Rejects cycles and out-of-range parents.
    pub fn from_parents(parent: Vec<usize>) -> Result<Self> {
        let n = parent.len().saturating_sub(1);
        if n == 0 || n > 63 {
            return Err(Error::Precondition(format!("vertex count {n} outside 1..=63")));
        }
        if parent.iter().skip(1).all(|&p| p != 0) {
            return Err(Error::Precondition("a forest needs at least one root".into()));
        }
        if let Some(&p) = parent.iter().skip(1).find(|&&p| p > n) {
            return Err(Error::Precondition(format!("parent {p} is not a vertex")));
        }
        let mut parent = parent;
        parent[0] = 0;
        let mut depth = vec![0; n + 1];
        let mut state = vec![0u8; n + 1];
        if !fill_depths(&parent, &mut depth, &mut state, &mut Vec::new()) {
            return Err(Error::Precondition("parent map has a cycle".into()));
        }
        Ok(Forest { parent, depth })
    }

    /// The forest with no edges: every vertex a root.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_parents(vec![0; n + 1])
    }

    pub fn n(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn roots(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.parent[v] == 0).collect()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        Some(self.parent[v]).filter(|&p| p != 0)
    }

    /// Distance from `v` to its root.
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Vertex sets by distance from the roots, ascending within each level.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        level_masks(&self.depth)
            .iter()
            .map(|&m| (1..=self.n()).filter(|&v| m >> v & 1 == 1).collect())
            .collect()
    }

    /// `(u_0 = r, u_1, ..., u_k)`.
    pub fn level_sizes(&self) -> Vec<usize> {
        sizes(&level_masks(&self.depth))
    }

    pub fn statistic(&self, rho: Ranking, variant: Variant) -> usize {
        let masks = level_masks(&self.depth);
        let u = sizes(&masks);
        let base = match variant {
            Variant::Standard => standard_base(&u),
            Variant::Reciprocal => sigma_base(&u),
        };
        base + weight_sum(&self.parent, &self.depth, &masks, |m, v| rho.rank(m, v))
    }

    /// One JSON line: `{"parent":{"2":1,...},"levels":[[...],...],"stat":s}`.
    pub fn to_json_line(&self, stat: usize) -> String {
        #[derive(serde::Serialize)]
        struct Line<'a> {
            parent: ParentMap<'a>,
            levels: Vec<Vec<usize>>,
            stat: usize,
        }
        serde_json::to_string(&Line {
            parent: ParentMap(self),
            levels: self.levels(),
            stat,
        })
        .expect("plain data serializes")
    }
}

struct ParentMap<'a>(&'a Forest);

impl Serialize for ParentMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let f = self.0;
        s.collect_map((1..=f.n()).filter_map(|v| f.parent(v).map(|p| (v.to_string(), p))))
    }
}

/// `l_rho(F)`: level statistic of a forest.
pub fn level_statistic(f: &Forest, rho: Ranking) -> usize {
    f.statistic(rho, Variant::Standard)
}

fn check_cap(n: usize, r: usize, cap: u64) -> Result<()> {
    let projected = BigUint::from(n).pow((n - r) as u32);
    if projected > BigUint::from(cap) {
        return Err(Error::CapExceeded { projected, cap });
    }
    Ok(())
}

/// Odometer over parent choices `1..=n` for the non-roots; the first non-root
/// can be pinned to split the space into disjoint chunks.
struct Candidates {
    parent: Vec<usize>,
    nonroots: Vec<usize>,
    pinned: usize,
    done: bool,
}

impl Candidates {
    fn new(n: usize, mask: u64, first: Option<usize>) -> Self {
        let nonroots: Vec<usize> = (1..=n).filter(|&v| mask >> v & 1 == 0).collect();
        let mut parent = vec![0; n + 1];
        for &v in &nonroots {
            parent[v] = 1;
        }
        if let (Some(p), Some(&v)) = (first, nonroots.first()) {
            parent[v] = p;
        }
        Candidates {
            parent,
            pinned: usize::from(first.is_some()),
            nonroots,
            done: false,
        }
    }

    /// Current candidate, then advance; `None` when exhausted.
    fn next_candidate(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        self.done = true;
        let n = self.parent.len() - 1;
        // advance a copy-free odometer: find the last digit that can move
        for i in (self.pinned..self.nonroots.len()).rev() {
            let v = self.nonroots[i];
            if self.parent[v] < n {
                self.done = false;
                break;
            }
        }
        Some(&self.parent)
    }

    fn step(&mut self) {
        let n = self.parent.len() - 1;
        for i in (self.pinned..self.nonroots.len()).rev() {
            let v = self.nonroots[i];
            if self.parent[v] < n {
                self.parent[v] += 1;
                return;
            }
            self.parent[v] = 1;
        }
    }
}

/// Streaming enumeration of every forest on `{1..n}` with the given roots.
pub struct ForestIter {
    candidates: Candidates,
    depth: Vec<usize>,
    state: Vec<u8>,
    stack: Vec<usize>,
}

impl Iterator for ForestIter {
    type Item = Forest;

    fn next(&mut self) -> Option<Forest> {
        loop {
            let ok = {
                let parent = self.candidates.next_candidate()?;
                fill_depths(parent, &mut self.depth, &mut self.state, &mut self.stack)
            };
            let parent = self.candidates.parent.clone();
            let more = !self.candidates.done;
            if more {
                self.candidates.step();
            }
            if ok {
                return Some(Forest {
                    parent,
                    depth: self.depth.clone(),
                });
            }
        }
    }
}

/// Every forest with root set `roots`, by filtering all `n^{n-r}` parent maps
/// for acyclicity. Refuses when that candidate count exceeds `cap`.
pub fn enumerate_forests(n: usize, roots: &[usize], cap: u64) -> Result<ForestIter> {
    let mask = roots_mask(n, roots)?;
    check_cap(n, roots.len(), cap)?;
    Ok(ForestIter {
        candidates: Candidates::new(n, mask, None),
        depth: vec![0; n + 1],
        state: vec![0; n + 1],
        stack: Vec::new(),
    })
}

/// Forest count and enumerators for several rankings from one pass.
#[derive(Clone, Debug, PartialEq)]
pub struct ForestTally {
    pub forests: u64,
    /// One per ranking, in input order.
    pub standard: Vec<UniPoly>,
    pub reciprocal: Vec<UniPoly>,
}

#[derive(Clone)]
struct Counts {
    forests: u64,
    standard: Vec<Vec<u64>>,
    reciprocal: Vec<Vec<u64>>,
}

fn bump(hist: &mut Vec<u64>, k: usize) {
    if hist.len() <= k {
        hist.resize(k + 1, 0);
    }
    hist[k] += 1;
}

fn add_hist(a: &mut Vec<u64>, b: &[u64]) {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

impl Counts {
    fn new(k: usize) -> Self {
        Counts {
            forests: 0,
            standard: vec![Vec::new(); k],
            reciprocal: vec![Vec::new(); k],
        }
    }

    fn merge(mut self, other: Counts) -> Counts {
        self.forests += other.forests;
        for (a, b) in self.standard.iter_mut().zip(&other.standard) {
            add_hist(a, b);
        }
        for (a, b) in self.reciprocal.iter_mut().zip(&other.reciprocal) {
            add_hist(a, b);
        }
        self
    }
}

fn hist_poly(hist: &[u64]) -> UniPoly {
    UniPoly::from_bigints(&hist.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>())
}

fn scan(n: usize, mask: u64, first: Option<usize>, rankings: &[Ranking]) -> Counts {
    let mut counts = Counts::new(rankings.len());
    let mut caches: Vec<RankCache> = rankings.iter().map(|&r| RankCache::new(r)).collect();
    let mut cands = Candidates::new(n, mask, first);
    let mut depth = vec![0; n + 1];
    let mut state = vec![0u8; n + 1];
    let mut stack = Vec::new();
    while let Some(parent) = cands.next_candidate() {
        if fill_depths(parent, &mut depth, &mut state, &mut stack) {
            counts.forests += 1;
            let masks = level_masks(&depth);
            let u = sizes(&masks);
            let (std_base, rec_base) = (standard_base(&u), sigma_base(&u));
            for (k, cache) in caches.iter_mut().enumerate() {
                let w = weight_sum(parent, &depth, &masks, |m, v| cache.rank(m, v));
                bump(&mut counts.standard[k], std_base + w);
                bump(&mut counts.reciprocal[k], rec_base + w);
            }
        }
        if !cands.done {
            cands.step();
        }
    }
    counts
}

/// Both enumerators for each ranking, with the work split over the parent of
/// the first non-root and merged by addition.
pub fn forest_enumerators(n: usize, roots: &[usize], rankings: &[Ranking], cap: u64) -> Result<ForestTally> {
    let mask = roots_mask(n, roots)?;
    check_cap(n, roots.len(), cap)?;
    let counts = if roots.len() == n {
        scan(n, mask, None, rankings)
    } else {
        (1..=n)
            .into_par_iter()
            .map(|first| scan(n, mask, Some(first), rankings))
            .reduce(|| Counts::new(rankings.len()), Counts::merge)
    };
    Ok(ForestTally {
        forests: counts.forests,
        standard: counts.standard.iter().map(|h| hist_poly(h)).collect(),
        reciprocal: counts.reciprocal.iter().map(|h| hist_poly(h)).collect(),
    })
}

/// `sum_F q^{stat(F)}` over forests with root set `roots`.
pub fn forest_enumerator_poly(n: usize, roots: &[usize], rho: Ranking, variant: Variant, cap: u64) -> Result<UniPoly> {
    let tally = forest_enumerators(n, roots, &[rho], cap)?;
    Ok(match variant {
        Variant::Standard => tally.standard[0].clone(),
        Variant::Reciprocal => tally.reciprocal[0].clone(),
    })
}

/// Writes each forest as a JSON line and returns the enumerator.
pub fn dump_forests(
    n: usize,
    roots: &[usize],
    rho: Ranking,
    variant: Variant,
    cap: u64,
    out: &mut dyn Write,
) -> Result<UniPoly> {
    let mut hist = Vec::new();
    for f in enumerate_forests(n, roots, cap)? {
        let stat = f.statistic(rho, variant);
        writeln!(out, "{}", f.to_json_line(stat)).map_err(|e| Error::Io(e.to_string()))?;
        bump(&mut hist, stat);
    }
    Ok(hist_poly(&hist))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::DEFAULT_CAP;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn three_vertices_one_root() {
        let all: Vec<Forest> = enumerate_forests(3, &[1], DEFAULT_CAP).unwrap().collect();
        assert_eq!(all.len(), 3);
        let star = Forest::from_parents(vec![0, 0, 1, 1]).unwrap();
        let path = Forest::from_parents(vec![0, 0, 1, 2]).unwrap();
        assert!(all.contains(&star) && all.contains(&path));
        assert_eq!(level_statistic(&star, Ranking::Increasing), 1);
        assert_eq!(level_statistic(&path, Ranking::Increasing), 0);
        assert_eq!(
            forest_enumerator_poly(3, &[1], Ranking::Increasing, Variant::Standard, DEFAULT_CAP).unwrap(),
            p(&[2, 1])
        );
    }

    #[test]
    fn all_roots_is_the_empty_graph() {
        let all: Vec<Forest> = enumerate_forests(4, &[1, 2, 3, 4], DEFAULT_CAP).unwrap().collect();
        assert_eq!(all, vec![Forest::empty(4).unwrap()]);
        assert_eq!(level_statistic(&all[0], Ranking::Seeded(5)), 0);
        for v in [Variant::Standard, Variant::Reciprocal] {
            assert_eq!(
                forest_enumerator_poly(4, &[4, 2, 3, 1], Ranking::Decreasing, v, 1).unwrap(),
                p(&[1])
            );
        }
    }

    #[test]
    fn counts_and_examples() {
        assert_eq!(enumerate_forests(4, &[1, 2], DEFAULT_CAP).unwrap().count(), 8);
        assert_eq!(
            forest_enumerator_poly(4, &[3], Ranking::Decreasing, Variant::Standard, DEFAULT_CAP).unwrap(),
            p(&[6, 6, 3, 1])
        );
        assert_eq!(
            forest_enumerator_poly(3, &[2], Ranking::Seeded(1), Variant::Reciprocal, DEFAULT_CAP).unwrap(),
            p(&[1, 2])
        );
    }

    #[test]
    fn iterator_agrees_with_parallel_scan() {
        let rankings = [Ranking::Increasing, Ranking::Seeded(11)];
        let tally = forest_enumerators(5, &[2, 4], &rankings, DEFAULT_CAP).unwrap();
        let forests: Vec<Forest> = enumerate_forests(5, &[2, 4], DEFAULT_CAP).unwrap().collect();
        assert_eq!(tally.forests, forests.len() as u64);
        assert_eq!(tally.forests, 2 * 5 * 5);
        for (k, &rho) in rankings.iter().enumerate() {
            let mut hist = Vec::new();
            for f in &forests {
                bump(&mut hist, level_statistic(f, rho));
            }
            assert_eq!(tally.standard[k], hist_poly(&hist));
        }
    }

    #[test]
    fn refuses_above_cap() {
        match enumerate_forests(6, &[1], 1000) {
            Err(Error::CapExceeded { projected, cap }) => {
                assert_eq!(projected, BigUint::from(7776u32));
                assert_eq!(cap, 1000);
            }
            _ => panic!("expected refusal"),
        }
        assert!(forest_enumerators(6, &[1], &[Ranking::Increasing], 1000).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(enumerate_forests(3, &[], DEFAULT_CAP).is_err());
        assert!(enumerate_forests(3, &[4], DEFAULT_CAP).is_err());
        assert!(enumerate_forests(3, &[1, 1], DEFAULT_CAP).is_err());
        assert!(Forest::from_parents(vec![0, 2, 1, 0]).is_err());
        assert!(Forest::from_parents(vec![0, 2, 3, 1]).is_err());
        assert!(Forest::from_parents(vec![0, 1, 0]).is_err());
    }

    #[test]
    fn json_dump_lines() {
        let f = Forest::from_parents(vec![0, 0, 1, 1]).unwrap();
        assert_eq!(
            f.to_json_line(1),
            r#"{"parent":{"2":1,"3":1},"levels":[[1],[2,3]],"stat":1}"#
        );
        let mut buf = Vec::new();
        let poly = dump_forests(3, &[1], Ranking::Increasing, Variant::Standard, DEFAULT_CAP, &mut buf).unwrap();
        assert_eq!(poly, p(&[2, 1]));
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 3);
        for line in text.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(v["stat"].as_u64().unwrap() <= 1);
        }
    }
}
