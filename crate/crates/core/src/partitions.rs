//! Integer partitions, Young diagrams and the exact counting primitives built
//! on them.
//!
//! A [`Partition`] is a weakly decreasing list of positive parts. The empty
//! partition is a valid value of size and length zero. Rows and columns of the
//! Young diagram are 1-indexed when contents are reported, so the box in row
//! `i`, column `j` has content `j - i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::BigCount;

/// Weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validating constructor. Parts must be positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    /// Sorts the parts and drops zeros; never fails.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The one-row partition `(m)`; empty when `m == 0`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Self { parts: vec![m] }
        }
    }

    /// The one-column partition `(1^m)`.
    pub fn column(m: usize) -> Self {
        Self { parts: vec![1; m] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Sum of the parts, `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of positive parts, `ℓ(λ)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-indexed), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Multiplicity of each part value; index `k` holds the number of parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            mult[p] += 1;
        }
        mult
    }

    /// Boxes `(row, col)` in reading order, 1-indexed.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Hook length of the box at 1-indexed `(row, col)`.
    pub fn hook(&self, row: usize, col: usize, conj: &Partition) -> usize {
        let arm = self.part(row - 1) - col;
        let leg = conj.part(col - 1) - row;
        arm + leg + 1
    }

    /// Prefix sums `λ_1, λ_1 + λ_2, ...` padded to `len` entries.
    pub fn prefix_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.part(i);
                acc
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Shorthand for tests and examples; panics on invalid input.
#[macro_export]
macro_rules! partition {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// All partitions of `m`, optionally restricted to at most `max_length` parts,
/// in reverse-lexicographic order.
pub fn partitions_of(m: usize, max_length: Option<usize>) -> Vec<Partition> {
    let max_len = max_length.unwrap_or(m);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(m, m, max_len, &mut current, &mut out);
    out
}

fn fill_partitions(
    remaining: usize,
    max_part: usize,
    slots: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        // remaining mass must fit into the leftover slots at part size <= p
        if p * slots < remaining {
            break;
        }
        current.push(p);
        fill_partitions(remaining - p, p, slots - 1, current, out);
        current.pop();
    }
}

/// Partition number `p(m)` from Euler's pentagonal-number recurrence.
pub fn partition_count(m: usize) -> BigCount {
    partition_counts_upto(m).pop().expect("table has m + 1 entries")
}

/// `p(0), ..., p(m)`.
pub fn partition_counts_upto(m: usize) -> Vec<BigCount> {
    let mut table: Vec<BigCount> = Vec::with_capacity(m + 1);
    table.push(BigUint::one());
    for k in 1..=m {
        // p(k) = Σ_{j≥1} (-1)^{j+1} [p(k - j(3j-1)/2) + p(k - j(3j+1)/2)]
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > k {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let bucket = if j % 2 == 1 { &mut plus } else { &mut minus };
            *bucket += &table[k - g1];
            if g2 <= k {
                *bucket += &table[k - g2];
            }
        }
        table.push(plus - minus);
    }
    table
}

pub fn factorial(n: usize) -> BigCount {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Number of standard Young tableaux of shape `λ` by the hook-length formula.
pub fn dim(lambda: &Partition) -> BigCount {
    let conj = lambda.conjugate();
    let hooks = lambda
        .boxes()
        .fold(BigUint::one(), |acc, (i, j)| {
            acc * BigUint::from(lambda.hook(i, j, &conj))
        });
    factorial(lambda.size()) / hooks
}

/// Contents `j - i` of all boxes, in reading order.
pub fn contents(lambda: &Partition) -> Vec<i64> {
    lambda
        .boxes()
        .map(|(i, j)| j as i64 - i as i64)
        .collect()
}

/// `z^{‾μ} = Π_{□ ∈ μ} (z + c(□))`.
pub fn rising_power<T: Scalar>(z: T, mu: &Partition) -> T {
    mu.boxes().fold(T::one(), |acc, (i, j)| {
        let c = j as i64 - i as i64;
        let shift = T::from_i64(c).expect("content fits the scalar type");
        acc * (z.clone() + shift)
    })
}

/// Falling power `n (n-1) ... (n-r+1)`; one for `r = 0`, zero for `r > n`.
pub fn falling_power(n: usize, r: usize) -> BigCount {
    if r > n {
        return BigUint::zero();
    }
    ((n - r + 1)..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Falling power evaluated in floating point without forming big integers.
pub fn falling_power_f64(n: usize, r: usize) -> f64 {
    if r > n {
        return 0.0;
    }
    ((n - r + 1)..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Dominance order: every prefix sum of `μ` is at least that of `ν`.
pub fn majorizes(mu: &Partition, nu: &Partition) -> Result<bool> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: nu.size(),
        });
    }
    let len = mu.length().max(nu.length());
    Ok(mu
        .prefix_sums(len)
        .iter()
        .zip(nu.prefix_sums(len))
        .all(|(a, b)| *a >= b))
}

/// `prec(μ) = Π_i (μ_i - μ_{i+1} + 1)`, the number of partitions interlacing below `μ`.
pub fn prec_count(mu: &Partition) -> BigCount {
    (0..mu.length()).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(mu.part(i) - mu.part(i + 1) + 1)
    })
}

/// All `λ` with `μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ ...`, the empty partition included.
pub fn interlacing_predecessors(mu: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(mu.length());
    interlace_rec(mu, 0, &mut current, &mut out);
    out
}

fn interlace_rec(mu: &Partition, i: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == mu.length() {
        out.push(Partition::from_unsorted(current.clone()));
        return;
    }
    for v in (mu.part(i + 1)..=mu.part(i)).rev() {
        current.push(v);
        interlace_rec(mu, i + 1, current, out);
        current.pop();
    }
}

/// `μ ∪ 1^k`.
pub fn adjoin_ones(mu: &Partition, k: usize) -> Partition {
    let mut parts = mu.parts.clone();
    parts.extend(std::iter::repeat_n(1, k));
    Partition { parts }
}

/// Size of the centralizer of a permutation with cycle type `μ`:
/// `z_μ = Π_k k^{m_k} m_k!`.
pub fn centralizer_size(mu: &Partition) -> BigCount {
    mu.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigUint::one(), |acc, (k, &m)| {
            acc * BigUint::from(k).pow(m as u32) * factorial(m)
        })
}
