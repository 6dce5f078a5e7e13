//! Brute-force ground truth. Streams every set partition of a small vertex
//! set in restricted-growth order, filters by the bichromatic-triangle or
//! classical properness rule, and tallies reference spectra and exhaustive
//! labeled-coloring counts. Nothing here shares code with the closed forms.
//!
//! The caps are hard errors, not silent truncation: an oracle that samples
//! is not an oracle.

use crate::error::{Error, Result};
use crate::graphs::TriangleGraph;
use crate::kernel::Count;
use crate::spectra::FeatureVector;
use std::collections::BTreeMap;

/// Partition enumeration cap; the 13-set already has about 2.8e7 partitions.
pub const MAX_PARTITION_N: usize = 13;
/// Cap on total labeled colorings `k^n` enumerated by [`count_colorings`].
pub const MAX_COLORINGS: u128 = 100_000_000;
/// Path-length cap for [`independent_set_blocks`] (2^24 subsets).
pub const MAX_PATH_M: usize = 24;

/// A set partition of `{0..n-1}` in restricted-growth form: `rgs[0] = 0` and
/// each later entry is at most one greater than the running maximum. This
/// encoding is bijective with unordered set partitions; the block count is
/// one plus the maximum entry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartitionCode {
    rgs: Vec<u8>,
}

impl PartitionCode {
    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn len(&self) -> usize {
        self.rgs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rgs.is_empty()
    }

    /// Block label of vertex `v`.
    pub fn block_of(&self, v: usize) -> u8 {
        self.rgs[v]
    }

    pub fn block_count(&self) -> usize {
        1 + *self.rgs.iter().max().expect("non-empty") as usize
    }

    /// Restricted-growth property check. The iterator only ever yields valid
    /// codes; this exists so tests can assert that.
    pub fn is_valid(&self) -> bool {
        if self.rgs.first() != Some(&0) {
            return false;
        }
        let mut max = 0;
        for &x in &self.rgs[1..] {
            if x > max + 1 {
                return false;
            }
            max = max.max(x);
        }
        true
    }
}

/// Streams every set partition of `{0..n-1}` exactly once, in lexicographic
/// restricted-growth order, starting from the all-zero (single block) code.
/// `n` must lie in `1..=13`; the total number yielded is the Bell number.
pub fn partitions_iter(n: usize) -> Result<Partitions> {
    if !(1..=MAX_PARTITION_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "partitions_iter",
            got: n,
            min: 1,
            max: MAX_PARTITION_N,
        });
    }
    Ok(Partitions {
        rgs: vec![0; n],
        started: false,
        done: false,
    })
}

pub struct Partitions {
    rgs: Vec<u8>,
    started: bool,
    done: bool,
}

impl Partitions {
    /// Advances to the lexicographic successor; false once exhausted.
    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        // prefix_max[i] = max(rgs[0..=i])
        let mut prefix_max = 0u8;
        let maxes: Vec<u8> = self
            .rgs
            .iter()
            .map(|&x| {
                prefix_max = prefix_max.max(x);
                prefix_max
            })
            .collect();
        for i in (1..n).rev() {
            if self.rgs[i] <= maxes[i - 1] {
                self.rgs[i] += 1;
                self.rgs[i + 1..].fill(0);
                return true;
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = PartitionCode;

    fn next(&mut self) -> Option<PartitionCode> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(PartitionCode {
            rgs: self.rgs.clone(),
        })
    }
}

/// Which rule a partition or coloring must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// Every triangle sees exactly two distinct blocks: neither monochromatic
    /// nor rainbow.
    Bichromatic,
    /// Every edge sees two distinct blocks, i.e. blocks are independent sets
    /// (classical proper coloring; triangles come out rainbow).
    Classical,
}

/// True iff every triangle of `g` carries exactly two distinct block labels
/// under `p`. Panics if the code length differs from the vertex count.
pub fn is_bichromatic_valid(p: &PartitionCode, g: &TriangleGraph) -> bool {
    assert_eq!(p.len(), g.n(), "partition length must match vertex count");
    g.triangles().iter().all(|&(u, v, w)| {
        let (a, b, c) = (p.rgs[u], p.rgs[v], p.rgs[w]);
        let distinct = 1 + (b != a) as usize + (c != a && c != b) as usize;
        distinct == 2
    })
}

/// True iff no edge of `g` has both endpoints in one block under `p`.
pub fn is_classical_valid(p: &PartitionCode, g: &TriangleGraph) -> bool {
    assert_eq!(p.len(), g.n(), "partition length must match vertex count");
    g.edges().iter().all(|&(u, v)| p.rgs[u] != p.rgs[v])
}

fn satisfies(p: &PartitionCode, g: &TriangleGraph, constraint: Constraint) -> bool {
    match constraint {
        Constraint::Bichromatic => is_bichromatic_valid(p, g),
        Constraint::Classical => is_classical_valid(p, g),
    }
}

/// Reference feature vector by exhaustive partition enumeration: entry
/// `k - 1` counts the partitions into exactly `k` blocks passing the
/// constraint. The graph must have at most [`MAX_PARTITION_N`] vertices.
pub fn oracle_spectrum(g: &TriangleGraph, constraint: Constraint) -> Result<FeatureVector> {
    let n = g.n();
    let mut counts = vec![0u64; n];
    for p in partitions_iter(n)? {
        if satisfies(&p, g, constraint) {
            counts[p.block_count() - 1] += 1;
        }
    }
    Ok(FeatureVector::from_u64(&counts))
}

/// Exhaustive count of valid labeled colorings of `g` with a palette of `k`
/// distinguishable colors. Errors once `k^n` exceeds [`MAX_COLORINGS`].
pub fn count_colorings(g: &TriangleGraph, k: u64, constraint: Constraint) -> Result<Count> {
    let n = g.n();
    let total = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > MAX_COLORINGS {
        return Err(Error::ColoringCapExceeded {
            colorings: total,
            cap: MAX_COLORINGS,
        });
    }
    if k == 0 {
        return Ok(Count::from(0u32));
    }
    let coloring_ok = |c: &[u64]| match constraint {
        Constraint::Bichromatic => g.triangles().iter().all(|&(u, v, w)| {
            let (a, b, d) = (c[u], c[v], c[w]);
            let distinct = 1 + (b != a) as usize + (d != a && d != b) as usize;
            distinct == 2
        }),
        Constraint::Classical => g.edges().iter().all(|&(u, v)| c[u] != c[v]),
    };
    let mut coloring = vec![0u64; n];
    let mut found = 0u64;
    for _ in 0..total {
        if coloring_ok(&coloring) {
            found += 1;
        }
        // odometer increment in base k
        for digit in coloring.iter_mut() {
            *digit += 1;
            if *digit < k {
                break;
            }
            *digit = 0;
        }
    }
    Ok(Count::from(found))
}

/// Enumerates all independent sets `S` of a path on `m` vertices and tallies
/// them by the number `t` of maximal contiguous runs the complement splits
/// into. Sets with an empty complement (only `S = V`, possible just for
/// `m = 1`) are not tallied. `m` must lie in `1..=24`.
pub fn independent_set_blocks(m: usize) -> Result<BTreeMap<usize, Count>> {
    if !(1..=MAX_PATH_M).contains(&m) {
        return Err(Error::OutOfRange {
            what: "independent_set_blocks",
            got: m,
            min: 1,
            max: MAX_PATH_M,
        });
    }
    let mask: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut tally: BTreeMap<usize, u64> = BTreeMap::new();
    for s in 0..=mask {
        if s & (s >> 1) != 0 {
            continue; // adjacent vertices both chosen
        }
        let complement = !s & mask;
        if complement == 0 {
            continue;
        }
        let runs = (complement & !(complement << 1) & mask).count_ones() as usize;
        *tally.entry(runs).or_insert(0) += 1;
    }
    Ok(tally
        .into_iter()
        .map(|(t, c)| (t, Count::from(c)))
        .collect())
}
