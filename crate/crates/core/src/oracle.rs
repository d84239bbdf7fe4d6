//! Slow reference implementations built on code paths that share nothing
//! with the main algorithms. Used to cross-check them on small inputs.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use rand::Rng;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::sampling::stream_rng;
use crate::scalar::Scalar;

const SSYT_SIZE_LIMIT: usize = 8;
const SSYT_ALPHABET_LIMIT: usize = 6;
const SYT_SIZE_LIMIT: usize = 10;
const CHARACTER_LIMIT: usize = 8;
const LNDS_LENGTH_LIMIT: usize = 10;

fn capacity(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::Capacity { what, value, limit })
    } else {
        Ok(())
    }
}

/// `Σ_T Π x_i^{#(T,i)}` over semistandard tableaux `T` of shape `λ` with
/// entries in `1..=|x|`, enumerated explicitly cell by cell.
pub fn ssyt_count<T: Scalar>(lambda: &Partition, x: &[T]) -> Result<T> {
    capacity("tableau size", lambda.size(), SSYT_SIZE_LIMIT)?;
    capacity("alphabet size", x.len(), SSYT_ALPHABET_LIMIT)?;
    let shape = lambda.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut total = T::zero();
    fill_ssyt(&cells, 0, x, &mut grid, &mut total);
    Ok(total)
}

fn fill_ssyt<T: Scalar>(
    cells: &[(usize, usize)],
    k: usize,
    x: &[T],
    grid: &mut [Vec<usize>],
    total: &mut T,
) {
    if k == cells.len() {
        let weight = grid
            .iter()
            .flatten()
            .fold(T::one(), |acc, &v| acc * x[v - 1].clone());
        *total = total.clone() + weight;
        return;
    }
    let (r, c) = cells[k];
    let low_row = if c > 0 { grid[r][c - 1] } else { 1 };
    let low_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    for v in low_row.max(low_col)..=x.len() {
        grid[r][c] = v;
        fill_ssyt(cells, k + 1, x, grid, total);
    }
    grid[r][c] = 0;
}

/// Number of standard Young tableaux of shape `λ`, by removing the largest
/// entry from every corner recursively.
pub fn syt_count(lambda: &Partition) -> Result<BigUint> {
    capacity("tableau size", lambda.size(), SYT_SIZE_LIMIT)?;
    let mut memo = BTreeMap::new();
    Ok(BigUint::from(syt_rec(lambda.parts().to_vec(), &mut memo)))
}

fn syt_rec(shape: Vec<usize>, memo: &mut BTreeMap<Vec<usize>, u64>) -> u64 {
    if shape.iter().all(|&p| p == 0) {
        return 1;
    }
    if let Some(&v) = memo.get(&shape) {
        return v;
    }
    let mut total = 0;
    for r in 0..shape.len() {
        let below = shape.get(r + 1).copied().unwrap_or(0);
        if shape[r] > below {
            let mut smaller = shape.clone();
            smaller[r] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            total += syt_rec(smaller, memo);
        }
    }
    memo.insert(shape, total);
    total
}

/// Maximum total length of `k` disjoint non-decreasing subsequences of `word`,
/// for every `k = 1..=k_max`, by dynamic programming over the multiset of
/// last values of the `k` subsequences. Words longer than 10 are accepted
/// only for `k_max = 1`.
pub fn lnds_prefix_sums(word: &[usize], k_max: usize) -> Result<Vec<usize>> {
    if k_max > 1 {
        capacity("word length", word.len(), LNDS_LENGTH_LIMIT)?;
    }
    (1..=k_max).map(|k| Ok(max_k_disjoint(word, k))).collect()
}

fn max_k_disjoint(word: &[usize], k: usize) -> usize {
    // state: sorted last values of the k subsequences, 0 meaning unused
    let mut states: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    states.insert(vec![0; k], 0);
    for &letter in word {
        let mut next: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (state, &len) in &states {
            let mut push = |s: Vec<usize>, l: usize| {
                let slot = next.entry(s).or_insert(0);
                *slot = (*slot).max(l);
            };
            push(state.clone(), len);
            for i in 0..k {
                if state[i] <= letter && (i == 0 || state[i] != state[i - 1]) {
                    let mut s = state.clone();
                    s[i] = letter;
                    s.sort_unstable();
                    push(s, len + 1);
                }
            }
        }
        states = next;
    }
    states.values().copied().max().unwrap_or(0)
}

/// Character table of `S_n` from the bialternant formula: each Schur
/// polynomial `a_{λ+δ}/a_δ` in `n` variables is evaluated at `n` distinct
/// random integer points and expanded in power-sum products by solving the linear
/// system `s_λ = Σ_μ χ_λ(μ)/z_μ p_μ` exactly.
///
/// Rows and columns are both indexed by `partitions_of(n)` order.
pub fn characters_by_inversion(n: usize) -> Result<Vec<Vec<BigInt>>> {
    capacity("symmetric group degree", n, CHARACTER_LIMIT)?;
    let parts = partitions_of(n, None);
    let mut attempt = 0;
    loop {
        match characters_at_points(&parts, n, attempt) {
            Err(Error::InvalidInput(msg)) if msg == SINGULAR && attempt < 8 => attempt += 1,
            other => return other,
        }
    }
}

const SINGULAR: &str = "singular evaluation system";

fn characters_at_points(parts: &[Partition], n: usize, attempt: u64) -> Result<Vec<Vec<BigInt>>> {
    let count = parts.len();
    let mut rng = stream_rng(0x5eed, attempt);
    // random points with pairwise distinct integer coordinates
    let points: Vec<Vec<BigRational>> = (0..count)
        .map(|_| {
            let mut coords: Vec<i64> = Vec::with_capacity(n);
            while coords.len() < n {
                let v = rng.random_range(-40..=40);
                if !coords.contains(&v) {
                    coords.push(v);
                }
            }
            coords
                .into_iter()
                .map(|v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    // matrix of p_μ(x)/z_μ at each point
    let basis: Vec<Vec<BigRational>> = points
        .iter()
        .map(|x| {
            parts
                .iter()
                .map(|mu| {
                    let mut prod = BigRational::one();
                    for &k in mu.parts() {
                        let s = x
                            .iter()
                            .fold(BigRational::zero(), |acc, v| acc + pow(v, k));
                        prod *= s;
                    }
                    prod / BigRational::from_integer(z_mu(mu))
                })
                .collect()
        })
        .collect();
    let mut table = Vec::with_capacity(count);
    for lambda in parts {
        let rhs: Vec<BigRational> = points.iter().map(|x| bialternant(lambda, x)).collect();
        let coeffs = solve_exact(basis.clone(), rhs)?;
        let row = coeffs
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::InvalidInput(format!("non-integral character value {c}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    Ok(table)
}

fn pow(v: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * v)
}

fn z_mu(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (part, m) in counts {
        for i in 1..=m {
            z *= BigInt::from(part) * BigInt::from(i);
        }
    }
    z
}

fn bialternant(lambda: &Partition, x: &[BigRational]) -> BigRational {
    let n = x.len();
    let alt = |exps: &[usize]| {
        let m: Vec<Vec<BigRational>> = x
            .iter()
            .map(|xi| exps.iter().map(|&e| pow(xi, e)).collect())
            .collect();
        det_exact(m)
    };
    let top: Vec<usize> = (0..n).map(|i| lambda.part(i) + n - 1 - i).collect();
    let delta: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
    alt(&top) / alt(&delta)
}

fn det_exact(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let size = m.len();
    let mut det = BigRational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col].clone();
        for r in (col + 1)..size {
            let f = m[r][col].clone() / m[col][col].clone();
            for c in col..size {
                let t = f.clone() * m[col][c].clone();
                m[r][c] -= t;
            }
        }
    }
    det
}

fn solve_exact(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Result<Vec<BigRational>> {
    let size = b.len();
    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::InvalidInput(SINGULAR.into()))?;
        a.swap(pivot, col);
        b.swap(pivot, col);
        for r in 0..size {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / a[col][col].clone();
            for c in col..size {
                let t = f.clone() * a[col][c].clone();
                a[r][c] -= t;
            }
            let t = f * b[col].clone();
            b[r] -= t;
        }
    }
    Ok((0..size).map(|i| b[i].clone() / a[i][i].clone()).collect())
}

/// Chi-square distance `Σ (p - q)²/q` computed term by term as
/// `p²/q` summed minus one, a different rearrangement from
/// [`crate::analysis::chi_square`]. `None` off the support of `q`.
pub fn chi_square_direct(p: &[f64], q: &[f64]) -> Option<f64> {
    let mut s = 0.0;
    for i in 0..p.len().max(q.len()) {
        let a = p.get(i).copied().unwrap_or(0.0);
        let b = q.get(i).copied().unwrap_or(0.0);
        if b == 0.0 {
            if a != 0.0 {
                return None;
            }
        } else {
            s += a * a / b;
        }
    }
    let mass_p: f64 = p.iter().sum();
    let mass_q: f64 = q.iter().sum();
    Some(s - 2.0 * mass_p + mass_q)
}

/// Exact value of a small character as `i64`, panicking on overflow.
pub fn to_i64(v: &BigInt) -> i64 {
    assert!(v.abs() < BigInt::from(i64::MAX));
    v.to_i64().expect("fits")
}
