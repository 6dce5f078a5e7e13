//! Closed-form chromatic feature vectors under the bichromatic triangle rule.
//!
//! A feature vector `[r_1, ..., r_n]` counts, per block count `k`, the
//! unordered partitions of the vertex set into `k` non-empty blocks in which
//! every triangle sees exactly two distinct blocks. The theta formula is
//! `r_2 = 2^{n-2} + 1` and `r_k = S(n-2, k-1)` for `3 <= k <= n-1`; the fan
//! formula expands over path independent sets as
//! `r_k = sum_t a(m,t) * S(t, k-1)` with `m = n-1`, and the `k = 2..5` cases
//! have independent closed forms used as cross-checks, never as fast paths.
//!
//! The classical proper-coloring baseline is also here: all 2-trees on `n`
//! vertices share the coloring polynomial `x(x-1)(x-2)^{n-2}`, so the
//! classical vector depends on `n` alone and cannot tell 2-trees apart.

use crate::error::{Error, Result};
use crate::kernel::{falling_factorial, Count, KernelTables};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Chromatic feature vector: entry `k - 1` holds `r_k`, the number of valid
/// partitions into exactly `k` non-empty blocks. The length equals the vertex
/// count, so `r_k = 0` for `k > n` holds structurally.
///
/// Serializes as a list of decimal strings; the counts outgrow every native
/// integer width.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FeatureVector {
    r: Vec<Count>,
}

impl FeatureVector {
    pub fn new(r: Vec<Count>) -> Self {
        assert!(!r.is_empty(), "feature vector must have at least one entry");
        FeatureVector { r }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| Count::from(c)).collect())
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// `r_k` with 1-based `k`; zero outside `1..=n`.
    pub fn r(&self, k: usize) -> Count {
        if k == 0 || k > self.r.len() {
            Count::zero()
        } else {
            self.r[k - 1].clone()
        }
    }

    pub fn entries(&self) -> &[Count] {
        &self.r
    }

    pub fn total(&self) -> Count {
        self.r.iter().sum()
    }
}

impl fmt::Display for FeatureVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.r.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for FeatureVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.r.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for FeatureVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        if raw.is_empty() {
            return Err(D::Error::custom("feature vector must be non-empty"));
        }
        let r = raw
            .iter()
            .map(|s| Count::from_str(s).map_err(|e| D::Error::custom(format!("count {s:?}: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(FeatureVector::new(r))
    }
}

fn require_min_n(n: usize, min: usize, what: &'static str) -> Result<()> {
    if n < min {
        return Err(Error::TooSmall { what, got: n, min });
    }
    Ok(())
}

/// Feature vector of the theta graph on `n >= 3` vertices:
/// `r_1 = 0`, `r_2 = 2^{n-2} + 1`, `r_k = S(n-2, k-1)` for `3 <= k <= n-1`,
/// `r_n = 0` (an all-singleton partition makes every triangle rainbow).
pub fn theta_spectrum(n: usize, tables: &mut KernelTables) -> Result<FeatureVector> {
    require_min_n(n, 3, "theta_spectrum")?;
    let m = n - 2;
    let mut r = vec![Count::zero(); n];
    r[1] = (Count::one() << m) + 1u32;
    for k in 3..=n - 1 {
        r[k - 1] = tables.stirling2(m, k - 1);
    }
    Ok(FeatureVector::new(r))
}

/// Total number of valid theta partitions over all `k`, computed directly as
/// `2^{n-2} + B_{n-2}`. Always equals the component sum of
/// [`theta_spectrum`].
pub fn theta_total(n: usize, tables: &mut KernelTables) -> Result<Count> {
    require_min_n(n, 3, "theta_total")?;
    Ok((Count::one() << (n - 2)) + tables.bell(n - 2))
}

/// 2-block count of the fan graph: the Fibonacci number `F_{n+1}`, one valid
/// partition per independent set of the path.
pub fn fan_r2(n: usize, tables: &mut KernelTables) -> Result<Count> {
    require_min_n(n, 3, "fan_r2")?;
    Ok(tables.fibonacci(n + 1))
}

/// `r_k` of the fan graph on `n >= 3` vertices via the expansion
/// `sum_{t=k-1}^{m} a(m,t) * S(t, k-1)` over complement block counts of path
/// independent sets, with `m = n - 1`. Returns 0 for `k = 1` and `k >= n`.
///
/// This is the canonical fan computation; the small-`k` closed forms below
/// are independent cross-checks of it.
pub fn fan_rk(n: usize, k: usize, tables: &mut KernelTables) -> Result<Count> {
    require_min_n(n, 3, "fan_rk")?;
    assert!(k >= 1, "fan_rk requires k >= 1");
    if k == 1 || k >= n {
        return Ok(Count::zero());
    }
    let m = n - 1;
    let mut acc = Count::zero();
    for t in k - 1..=m {
        acc += tables.a_coeff(m, t as i64) * tables.stirling2(t, k - 1);
    }
    Ok(acc)
}

/// Full fan feature vector assembled from [`fan_rk`].
pub fn fan_spectrum(n: usize, tables: &mut KernelTables) -> Result<FeatureVector> {
    require_min_n(n, 3, "fan_spectrum")?;
    let r = (1..=n)
        .map(|k| fan_rk(n, k, tables))
        .collect::<Result<Vec<_>>>()?;
    Ok(FeatureVector::new(r))
}

/// Independent closed form for the fan 3-block count:
/// `3 * 2^{n-3} - F_{n+1}`.
pub fn fan_r3_closed(n: usize, tables: &mut KernelTables) -> Result<Count> {
    require_min_n(n, 3, "fan_r3_closed")?;
    let pow = (Count::one() << (n - 3)) * 3u32;
    let fib = tables.fibonacci(n + 1);
    let diff = BigInt::from(pow) - BigInt::from(fib);
    Ok(to_count(diff, "fan_r3_closed"))
}

/// Independent closed form for the fan 4-block count:
/// `(A_3 - 2*A_2 + A_1) / 2` with `m = n - 1`. The division must be exact.
pub fn fan_r4_closed(n: usize, tables: &mut KernelTables) -> Result<Count> {
    require_min_n(n, 4, "fan_r4_closed")?;
    let m = n - 1;
    let a3 = BigInt::from(tables.big_a(m, 3));
    let a2 = BigInt::from(tables.big_a(m, 2));
    let a1 = BigInt::from(tables.big_a(m, 1));
    Ok(exact_div(a3 - a2 * 2 + a1, 2, "fan_r4_closed"))
}

/// Independent closed form for the fan 5-block count:
/// `(A_4 - 3*A_3 + 3*A_2 - A_1) / 6` with `m = n - 1`. The division must be
/// exact.
pub fn fan_r5_closed(n: usize, tables: &mut KernelTables) -> Result<Count> {
    require_min_n(n, 5, "fan_r5_closed")?;
    let m = n - 1;
    let a4 = BigInt::from(tables.big_a(m, 4));
    let a3 = BigInt::from(tables.big_a(m, 3));
    let a2 = BigInt::from(tables.big_a(m, 2));
    let a1 = BigInt::from(tables.big_a(m, 1));
    Ok(exact_div(a4 - a3 * 3 + a2 * 3 - a1, 6, "fan_r5_closed"))
}

/// Total number of valid fan partitions over all `k`:
/// `sum_t a(m,t) * B_t` with `m = n - 1`. Always equals the component sum of
/// [`fan_spectrum`].
pub fn fan_total(n: usize, tables: &mut KernelTables) -> Result<Count> {
    require_min_n(n, 3, "fan_total")?;
    let m = n - 1;
    let mut acc = Count::zero();
    for t in 1..=m {
        acc += tables.a_coeff(m, t as i64) * tables.bell(t);
    }
    Ok(acc)
}

fn to_count(value: BigInt, what: &str) -> Count {
    assert!(
        !value.is_negative(),
        "{what}: result must be nonnegative, got {value}"
    );
    value.to_biguint().expect("nonnegative")
}

fn exact_div(sum: BigInt, divisor: u32, what: &str) -> Count {
    assert!(
        !sum.is_negative(),
        "{what}: alternating sum must be nonnegative, got {sum}"
    );
    let d = BigInt::from(divisor);
    let rem = &sum % &d;
    assert!(
        rem.is_zero(),
        "{what}: division by {divisor} must be exact, remainder {rem} on {sum}"
    );
    to_count(sum / d, what)
}

/// Partition counts of every `n`-vertex 2-tree under classical proper
/// coloring, where all triangles are forced rainbow. All 2-trees on `n`
/// vertices share the coloring polynomial `x(x-1)(x-2)^{n-2}`, so this
/// baseline depends on `n` alone; entry `k - 1` counts partitions into `k`
/// non-empty independent sets, obtained by expanding that polynomial in the
/// falling-factorial basis.
///
/// `r_1 = r_2 = 0` always, and for the diamond (`n = 4`) the result is
/// `[0, 0, 1, 1]`. Note the 3-block entry is `r_3 = 1` there, not the number
/// of proper 3-colorings: the polynomial value `P(3)` counts *labeled*
/// colorings, `r_3 * 3!` of them, and conflating the two overstates `r_3` by
/// the color-permutation factor. This implementation trusts the polynomial
/// expansion, and the exhaustive classical oracle confirms it.
pub fn classical_spectrum(n: usize) -> Result<FeatureVector> {
    require_min_n(n, 3, "classical_spectrum")?;
    // Expand x(x-1)(x-2)^{n-2} over signed integers, ascending powers.
    let mut poly = vec![BigInt::zero(), BigInt::one()];
    poly = mul_linear(&poly, -1);
    for _ in 0..n - 2 {
        poly = mul_linear(&poly, -2);
    }
    // Peel falling-factorial coefficients: with q_1 = P(x)/x,
    // q_j(j) = r_j and q_{j+1} = (q_j - r_j) / (x - j).
    debug_assert!(poly[0].is_zero());
    let mut q: Vec<BigInt> = poly[1..].to_vec();
    let mut r = Vec::with_capacity(n);
    for j in 1..=n {
        let rj = eval(&q, j as i64);
        if j < n {
            q[0] -= &rj;
            q = div_linear(&q, j as i64);
        } else {
            debug_assert_eq!(q.len(), 1);
        }
        r.push(to_count(rj, "classical_spectrum"));
    }
    Ok(FeatureVector::new(r))
}

/// `p(x) * (x - c)` on ascending coefficients.
fn mul_linear(p: &[BigInt], neg_c: i64) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + 1];
    for (i, coeff) in p.iter().enumerate() {
        out[i + 1] += coeff;
        out[i] += coeff * neg_c;
    }
    out
}

fn eval(p: &[BigInt], x: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for coeff in p.iter().rev() {
        acc = acc * x + coeff;
    }
    acc
}

/// Exact division of `p(x)` by `(x - c)`; panics on a nonzero remainder.
fn div_linear(p: &[BigInt], c: i64) -> Vec<BigInt> {
    let d = p.len() - 1;
    let mut s = vec![BigInt::zero(); d];
    s[d - 1] = p[d].clone();
    for i in (1..d).rev() {
        s[i - 1] = &p[i] + &s[i] * c;
    }
    let rem = &p[0] + &s[0] * c;
    assert!(rem.is_zero(), "division by (x - {c}) left remainder {rem}");
    s
}

/// Number of valid labeled `k`-colorings implied by a feature vector:
/// `P(k) = sum_j r_j * k^(j)`, since each unlabeled `j`-partition yields
/// exactly `k^(j)` distinct colorings.
pub fn eval_coloring_polynomial(v: &FeatureVector, k: u64) -> Count {
    let mut acc = Count::zero();
    for j in 1..=v.n() {
        acc += v.r(j) * falling_factorial(k, j as u64);
    }
    acc
}

/// Graph family a report refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Theta,
    Fan,
    TwoTree,
    ClassicalBaseline,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Theta => "theta",
            Family::Fan => "fan",
            Family::TwoTree => "two-tree",
            Family::ClassicalBaseline => "classical-baseline",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a report's vector was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One machine-readable result of a spectrum computation. Counts serialize
/// as decimal strings so 64-bit JSON consumers survive; `wall_time` (seconds)
/// is present only when timing was requested.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub family: Family,
    pub n: usize,
    pub method: Method,
    pub vector: FeatureVector,
    #[serde(with = "count_opt", skip_serializing_if = "Option::is_none", default)]
    pub total: Option<Count>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree_sequence: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time: Option<f64>,
}

impl SpectrumReport {
    /// Report with `total` filled in as the component sum.
    pub fn new(family: Family, n: usize, method: Method, vector: FeatureVector) -> Self {
        let total = Some(vector.total());
        SpectrumReport {
            family,
            n,
            method,
            vector,
            total,
            degree_sequence: None,
            wall_time: None,
        }
    }

    /// True iff `total`, when present, equals the vector's component sum and
    /// the vector length matches `n`.
    pub fn is_consistent(&self) -> bool {
        self.vector.n() == self.n
            && self
                .total
                .as_ref()
                .is_none_or(|t| *t == self.vector.total())
    }
}

mod count_opt {
    use super::Count;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(
        value: &Option<Count>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some(c) => serializer.serialize_some(&c.to_string()),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Option<Count>, D::Error> {
        let raw = Option::<String>::deserialize(deserializer)?;
        raw.map(|s| Count::from_str(&s).map_err(|e| D::Error::custom(format!("count {s:?}: {e}"))))
            .transpose()
    }
}
