//! Arbitrary-precision combinatorial kernels: binomial coefficients, Stirling
//! numbers of the second kind, Bell numbers, Fibonacci numbers, and Fibonacci
//! polynomial values, memoized in lazily grown tables.
//!
//! Counts overflow 64 bits quickly (the 2-block theta count alone passes
//! `u64::MAX` near n = 66), so every public value is a [`Count`].

use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Arbitrary-precision nonnegative count.
///
/// Alternating-sum formulas do their intermediate arithmetic in signed
/// big integers and check the result nonnegative before converting back.
pub type Count = BigUint;

/// Memoized tables of the combinatorial kernels.
///
/// Tables fill lazily and grow geometrically; extending a table never changes
/// previously filled cells. Growth takes `&mut self`, so any shared (`&`)
/// snapshot is immutable: grow first, then read from as many threads as you
/// like.
#[derive(Clone, Debug, Default)]
pub struct KernelTables {
    /// Row `n` holds `C(n, k)` for `k = 0..=n`.
    binomial: Vec<Vec<Count>>,
    /// Row `n` holds `S(n, k)` for `k = 0..=n`.
    stirling2: Vec<Vec<Count>>,
    /// `bell[n]` is the row sum of `stirling2[n]`.
    bell: Vec<Count>,
    fibonacci: Vec<Count>,
    /// Per evaluation point `x`, the values `F_l(x)` indexed by `l`.
    fib_poly: BTreeMap<u64, Vec<Count>>,
}

impl KernelTables {
    pub fn new() -> Self {
        Self::default()
    }

    /// Highest row currently filled in the triangular tables.
    pub fn max_n(&self) -> usize {
        self.binomial.len().saturating_sub(1)
    }

    fn grow_triangular(&mut self, n: usize) {
        let have = self.binomial.len();
        if n < have {
            return;
        }
        let target = (n + 1).max(have * 2).max(8);
        for row in have..target {
            let mut brow = Vec::with_capacity(row + 1);
            let mut srow = Vec::with_capacity(row + 1);
            for k in 0..=row {
                if row == 0 {
                    brow.push(Count::one());
                    srow.push(Count::one());
                    continue;
                }
                let bprev = &self.binomial[row - 1];
                let sprev = &self.stirling2[row - 1];
                brow.push(if k == 0 || k == row {
                    Count::one()
                } else {
                    &bprev[k - 1] + &bprev[k]
                });
                srow.push(if k == 0 {
                    Count::zero()
                } else {
                    let stay = if k < row {
                        &sprev[k] * k as u64
                    } else {
                        Count::zero()
                    };
                    stay + &sprev[k - 1]
                });
            }
            self.bell.push(srow.iter().sum());
            self.binomial.push(brow);
            self.stirling2.push(srow);
        }
    }

    fn grow_fibonacci(&mut self, m: usize) {
        if self.fibonacci.is_empty() {
            self.fibonacci.push(Count::zero());
            self.fibonacci.push(Count::one());
        }
        while self.fibonacci.len() <= m {
            let l = self.fibonacci.len();
            let next = &self.fibonacci[l - 1] + &self.fibonacci[l - 2];
            self.fibonacci.push(next);
        }
    }

    fn grow_fib_poly(&mut self, l: usize, x: u64) {
        let col = self
            .fib_poly
            .entry(x)
            .or_insert_with(|| vec![Count::zero(), Count::one()]);
        while col.len() <= l {
            let m = col.len();
            let next = &col[m - 1] + &col[m - 2] * x;
            col.push(next);
        }
    }

    /// Binomial coefficient `C(n, k)` with the zero convention: the result is
    /// 0 whenever `k < 0` or `n < k`, including negative `n` with `k >= 0`.
    pub fn binomial(&mut self, n: i64, k: i64) -> Count {
        if k < 0 || n < k {
            return Count::zero();
        }
        let (n, k) = (n as usize, k as usize);
        self.grow_triangular(n);
        self.binomial[n][k].clone()
    }

    /// Number of partitions of `n` labeled elements into `k` non-empty
    /// unlabeled blocks. `S(0,0) = 1`, `S(n,0) = 0` for `n > 0`, and
    /// `S(n,k) = 0` for `k > n`.
    pub fn stirling2(&mut self, n: usize, k: usize) -> Count {
        if k > n {
            return Count::zero();
        }
        self.grow_triangular(n);
        self.stirling2[n][k].clone()
    }

    /// `n`-th Bell number, the total number of set partitions of an `n`-set.
    pub fn bell(&mut self, n: usize) -> Count {
        self.grow_triangular(n);
        self.bell[n].clone()
    }

    /// Fibonacci number with `F_0 = 0`, `F_1 = 1`.
    pub fn fibonacci(&mut self, m: usize) -> Count {
        self.grow_fibonacci(m);
        self.fibonacci[m].clone()
    }

    /// Fibonacci polynomial value `F_l(x)` under `F_0(x) = 0`, `F_1(x) = 1`,
    /// `F_{l+1}(x) = F_l(x) + x * F_{l-1}(x)`. At `x = 1` this is
    /// [`Self::fibonacci`].
    pub fn fibonacci_poly(&mut self, l: usize, x: u64) -> Count {
        assert!(x >= 1, "fibonacci_poly requires x >= 1, got {x}");
        self.grow_fib_poly(l, x);
        self.fib_poly[&x][l].clone()
    }

    /// Number of independent sets of a path on `m` vertices whose complement
    /// has exactly `t` maximal contiguous blocks:
    /// `a(m,t) = C(m-t, t-1) + 2*C(m-t-1, t-1) + C(m-t-2, t-1)`.
    ///
    /// Total in `t` thanks to the binomial zero convention; vanishes outside
    /// `1..=m`.
    pub fn a_coeff(&mut self, m: usize, t: i64) -> Count {
        assert!(m >= 1, "a_coeff requires m >= 1, got {m}");
        let m = m as i64;
        self.binomial(m - t, t - 1)
            + self.binomial(m - t - 1, t - 1) * 2u32
            + self.binomial(m - t - 2, t - 1)
    }

    /// The fan-formula building block `A_r = F_m(r) + 2*F_{m-1}(r) + F_{m-2}(r)`.
    ///
    /// Specializations: `A_1 = F_{m+2}` and `A_2 = 3 * 2^{m-2}`.
    pub fn big_a(&mut self, m: usize, r: u64) -> Count {
        assert!(m >= 2, "big_a requires m >= 2, got {m}");
        assert!(r >= 1, "big_a requires r >= 1, got {r}");
        self.fibonacci_poly(m, r)
            + self.fibonacci_poly(m - 1, r) * 2u32
            + self.fibonacci_poly(m - 2, r)
    }

    /// Fault injection for negative-path tests: bumps one Stirling cell by 1.
    /// Never call this outside a test.
    #[doc(hidden)]
    pub fn corrupt_stirling_cell(&mut self, n: usize, k: usize) {
        self.grow_triangular(n);
        self.stirling2[n][k] += 1u32;
    }
}

/// Falling factorial `k * (k-1) * ... * (k-j+1)`: 1 when `j = 0`, 0 when
/// `j > k`.
pub fn falling_factorial(k: u64, j: u64) -> Count {
    if j > k {
        return Count::zero();
    }
    let mut acc = Count::one();
    for i in 0..j {
        acc *= k - i;
    }
    acc
}

/// Floating-point evaluation of the same quantity as [`KernelTables::big_a`],
/// through the roots `alpha, beta = (1 ± sqrt(1+4r)) / 2` of `y^2 - y - r`:
///
/// `A_r = (alpha^{m-2} (alpha+1)^2 - beta^{m-2} (beta+1)^2) / (alpha - beta)`
///
/// Validation only: surd arithmetic in doubles is inexact, so this value is
/// never used to produce a reported count. Returns `None` once the powers
/// leave the finite `f64` range; for `r <= 4` (`alpha < 2.562`) that happens
/// near `m ≈ 760`, far beyond the `m <= 40` window where the cross-check is
/// meaningful at 1e-9 relative tolerance.
pub fn big_a_binet(m: usize, r: u64) -> Option<f64> {
    assert!(m >= 2, "big_a_binet requires m >= 2, got {m}");
    assert!(r >= 1, "big_a_binet requires r >= 1, got {r}");
    let disc = (1.0 + 4.0 * r as f64).sqrt();
    let alpha = (1.0 + disc) / 2.0;
    let beta = (1.0 - disc) / 2.0;
    let exp = (m - 2) as i32;
    let value = (alpha.powi(exp) * (alpha + 1.0).powi(2) - beta.powi(exp) * (beta + 1.0).powi(2))
        / (alpha - beta);
    value.is_finite().then_some(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{independent_set_blocks, partitions_iter};
    use num_traits::ToPrimitive;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    /// Independent partition-counting route used to pin small Stirling/Bell
    /// values; shares nothing with the table recurrences.
    fn partition_count(n: usize, blocks: Option<usize>) -> u64 {
        partitions_iter(n)
            .unwrap()
            .filter(|p| blocks.is_none_or(|k| p.block_count() == k))
            .count() as u64
    }

    #[test]
    fn binomial_values_and_zero_convention() {
        let mut t = KernelTables::new();
        assert_eq!(t.binomial(5, 2), c(10));
        assert_eq!(t.binomial(-1, 2), c(0));
        assert_eq!(t.binomial(7, 0), c(1));
        assert_eq!(t.binomial(3, 5), c(0));
        assert_eq!(t.binomial(4, -1), c(0));
        assert_eq!(t.binomial(-3, -2), c(0));
    }

    #[test]
    fn stirling_matches_partition_enumeration() {
        let mut t = KernelTables::new();
        assert_eq!(partition_count(3, Some(2)), 3);
        assert_eq!(t.stirling2(3, 2), c(3));
        assert_eq!(partition_count(4, Some(2)), 7);
        assert_eq!(t.stirling2(4, 2), c(7));
        assert_eq!(t.stirling2(0, 0), c(1));
        assert_eq!(t.stirling2(5, 0), c(0));
        assert_eq!(t.stirling2(3, 4), c(0));
    }

    #[test]
    fn bell_matches_partition_enumeration() {
        let mut t = KernelTables::new();
        assert_eq!(t.bell(0), c(1));
        assert_eq!(partition_count(3, None), 5);
        assert_eq!(t.bell(3), c(5));
        assert_eq!(partition_count(10, None), 115_975);
        assert_eq!(t.bell(10), c(115_975));
    }

    #[test]
    fn fibonacci_indexing() {
        let mut t = KernelTables::new();
        assert_eq!(t.fibonacci(0), c(0));
        assert_eq!(t.fibonacci(1), c(1));
        assert_eq!(t.fibonacci(2), c(1));
        assert_eq!(t.fibonacci(6), c(8));
        assert_eq!(t.fibonacci(10), c(55));
    }

    #[test]
    fn fibonacci_poly_values() {
        let mut t = KernelTables::new();
        // F_4(x) = 1 + 2x, F_5(x) = 1 + 3x + x^2
        assert_eq!(t.fibonacci_poly(4, 3), c(7));
        assert_eq!(t.fibonacci_poly(5, 2), c(11));
        for l in 0..=64 {
            assert_eq!(t.fibonacci_poly(l, 1), t.fibonacci(l), "l={l}");
        }
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(5, 3), c(60));
        assert_eq!(falling_factorial(3, 5), c(0));
        for k in 0..10 {
            assert_eq!(falling_factorial(k, 0), c(1));
        }
        assert_eq!(falling_factorial(4, 4), c(24));
    }

    #[test]
    fn a_coeff_values() {
        let mut t = KernelTables::new();
        assert_eq!(t.a_coeff(2, 1), c(3));
        assert_eq!(t.a_coeff(4, 1), c(4));
        for m in 3..=20 {
            assert_eq!(t.a_coeff(m, 1), c(4), "m={m}");
        }
        // vanishes outside 1..=m
        assert_eq!(t.a_coeff(5, 0), c(0));
        assert_eq!(t.a_coeff(5, -3), c(0));
        assert_eq!(t.a_coeff(5, 6), c(0));
    }

    #[test]
    fn a_coeff_matches_block_counting_oracle() {
        let mut t = KernelTables::new();
        for m in 1..=10 {
            let table = independent_set_blocks(m).unwrap();
            for tt in 1..=m {
                let expected = table.get(&tt).cloned().unwrap_or_else(Count::zero);
                assert_eq!(t.a_coeff(m, tt as i64), expected, "m={m} t={tt}");
            }
        }
    }

    #[test]
    fn big_a_values() {
        let mut t = KernelTables::new();
        // F_4(3) + 2 F_3(3) + F_2(3) = 7 + 8 + 1
        assert_eq!(t.big_a(4, 3), c(16));
        for m in 2..=64 {
            let fib = t.fibonacci(m + 2);
            assert_eq!(t.big_a(m, 1), fib, "m={m}");
        }
        for m in 2..=64 {
            let pow = Count::one() << (m - 2);
            assert_eq!(t.big_a(m, 2), pow * 3u32, "m={m}");
        }
    }

    #[test]
    fn binet_agrees_with_exact_values() {
        let mut t = KernelTables::new();
        for r in 1..=10 {
            let v = big_a_binet(2, r).unwrap();
            assert!((v - 3.0).abs() < 1e-9, "m=2 r={r}: {v}");
        }
        let v = big_a_binet(4, 3).unwrap();
        assert!((v - 16.0).abs() < 1e-9);
        for m in 2..=40 {
            for r in 1..=4 {
                let exact = t.big_a(m, r).to_f64().unwrap();
                let approx = big_a_binet(m, r).unwrap();
                assert!(
                    (approx - exact).abs() / exact < 1e-9,
                    "m={m} r={r}: exact={exact} approx={approx}"
                );
            }
        }
    }

    #[test]
    fn growth_never_changes_filled_cells() {
        let mut t = KernelTables::new();
        t.bell(5);
        let row5: Vec<Count> = (0..=5).map(|k| t.stirling2(5, k)).collect();
        let b5 = t.bell(5);
        let fib8 = t.fibonacci(8);
        t.bell(64);
        t.fibonacci(128);
        assert_eq!((0..=5).map(|k| t.stirling2(5, k)).collect::<Vec<_>>(), row5);
        assert_eq!(t.bell(5), b5);
        assert_eq!(t.fibonacci(8), fib8);
        assert!(t.max_n() >= 64);
    }
}
