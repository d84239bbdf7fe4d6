//! Symmetric functions: power sums, Schur polynomials, symmetric-group
//! characters and the normalized characters `p♯_μ(λ)`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{adjoin_ones, dim, falling_power, partitions_of, Partition};
use crate::scalar::{Real, Scalar};

/// `M_α(η) = Σ_i η_i^α` for real `α ≥ 0`.
///
/// `α = 0` counts the strictly positive entries (`0^0` is taken as zero).
/// Negative entries are only accepted for integral `α`.
pub fn power_sum<T: Real>(eta: &[T], alpha: T) -> Result<T> {
    if !(alpha >= T::zero()) {
        return Err(Error::Domain(format!("power-sum order must be >= 0, got {alpha:?}")));
    }
    if alpha.is_zero() {
        let count = eta.iter().filter(|&&x| x > T::zero()).count();
        return Ok(T::from_usize_exact(count));
    }
    if alpha.fract().is_zero() {
        if let Some(k) = alpha.to_u32() {
            return Ok(power_sum_int(eta, k));
        }
    }
    if let Some(bad) = eta.iter().find(|&&x| x < T::zero()) {
        return Err(Error::Domain(format!(
            "negative entry {bad:?} with non-integral order {alpha:?}"
        )));
    }
    Ok(eta
        .iter()
        .map(|&x| if x.is_zero() { T::zero() } else { x.powf(alpha) })
        .fold(T::zero(), |a, b| a + b))
}

/// `Σ_i x_i^k` for a positive integer `k`; any scalar, any sign.
pub fn power_sum_int<T: Scalar>(x: &[T], k: u32) -> T {
    x.iter()
        .map(|v| v.powi_exact(k))
        .fold(T::zero(), |a, b| a + b)
}

/// `M_μ(x) = Π_i M_{μ_i}(x)`; the empty product is one.
pub fn power_sum_product<T: Scalar>(x: &[T], mu: &Partition) -> T {
    mu.parts()
        .iter()
        .map(|&p| power_sum_int(x, p as u32))
        .fold(T::one(), |a, b| a * b)
}

/// Complete homogeneous symmetric polynomials `h_0, ..., h_max` from the
/// power sums via Newton's identities `k h_k = Σ_{i=1}^k p_i h_{k-i}`.
pub fn complete_homogeneous<T: Scalar>(x: &[T], max_degree: usize) -> Vec<T> {
    let power: Vec<T> = (1..=max_degree)
        .map(|k| power_sum_int(x, k as u32))
        .collect();
    let mut h = Vec::with_capacity(max_degree + 1);
    h.push(T::one());
    for k in 1..=max_degree {
        let acc = (1..=k).fold(T::zero(), |acc, i| {
            acc + power[i - 1].clone() * h[k - i].clone()
        });
        h.push(acc / T::from_usize_exact(k));
    }
    h
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let size = m.len();
    let mut det = T::one();
    for col in 0..size {
        let pivot = (col..size)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| {
                m[a][col]
                    .abs()
                    .partial_cmp(&m[b][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
        let Some(pivot) = pivot else {
            return T::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * p.clone();
        for r in (col + 1)..size {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / p.clone();
            for c in col..size {
                let delta = factor.clone() * m[col][c].clone();
                m[r][c] = m[r][c].clone() - delta;
            }
        }
    }
    det
}

/// Schur polynomial `s_λ(x)` via Newton's identities and the Jacobi–Trudi
/// determinant `det(h_{λ_i - i + j})`.
///
/// Exactly zero when `ℓ(λ) > |x|`. Signed and repeated coordinates are fine.
pub fn schur_eval<T: Scalar>(lambda: &Partition, x: &[T]) -> T {
    let len = lambda.length();
    if len > x.len() {
        return T::zero();
    }
    if len == 0 {
        return T::one();
    }
    let h = complete_homogeneous(x, lambda.part(0) + len - 1);
    let matrix = (0..len)
        .map(|i| {
            (0..len)
                .map(|j| {
                    let idx = lambda.part(i) as isize - i as isize + j as isize;
                    if idx < 0 {
                        T::zero()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(matrix)
}

/// `s_λ(1^d)`: the number of semistandard tableaux of shape `λ` with entries
/// in `[d]`, from `Π_{i<j≤d} (λ_i - λ_j + j - i) / (j - i)`.
pub fn schur_ones(lambda: &Partition, d: usize) -> BigUint {
    if lambda.length() > d {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..d {
        for j in (i + 1)..d {
            num *= BigUint::from(lambda.part(i) - lambda.part(j) + j - i);
            den *= BigUint::from(j - i);
        }
    }
    num / den
}

/// First-column hook lengths `β_i = λ_i + ℓ - 1 - i` (0-indexed), strictly decreasing.
pub(crate) fn beta_set(lambda: &Partition) -> Vec<usize> {
    let len = lambda.length();
    (0..len).map(|i| lambda.part(i) + len - 1 - i).collect()
}

fn partition_from_betas(betas: &[usize]) -> Partition {
    let len = betas.len();
    let mut sorted = betas.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let parts = sorted
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i))
        .collect();
    Partition::from_unsorted(parts)
}

/// Every way to remove a border strip of `size` boxes from `λ`, as
/// `(remaining shape, height)` where height is the number of rows spanned minus one.
pub fn remove_border_strips(lambda: &Partition, size: usize) -> Vec<(Partition, usize)> {
    let betas = beta_set(lambda);
    let mut out = Vec::new();
    for (idx, &b) in betas.iter().enumerate() {
        if b < size {
            continue;
        }
        let target = b - size;
        if betas.contains(&target) {
            continue;
        }
        let height = betas.iter().filter(|&&o| o > target && o < b).count();
        let mut next = betas.clone();
        next[idx] = target;
        out.push((partition_from_betas(&next), height));
    }
    out
}

/// Irreducible character `χ_λ(μ)` by the Murnaghan–Nakayama rule.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda, mu.parts(), &mut memo))
}

fn mn_rec(
    lambda: &Partition,
    cycles: &[usize],
    memo: &mut HashMap<(Partition, usize), BigInt>,
) -> BigInt {
    let Some((&first, rest)) = cycles.split_first() else {
        return BigInt::one();
    };
    // trailing 1-cycles contribute dim of what is left
    if first == 1 {
        return BigInt::from(dim(lambda));
    }
    let key = (lambda.clone(), cycles.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (shape, height) in remove_border_strips(lambda, first) {
        let value = mn_rec(&shape, rest, memo);
        if height % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Character table of `S_n` keyed by `(λ, μ)`, both over `partitions_of(n)`.
pub fn character_table(n: usize) -> Vec<Vec<BigInt>> {
    let shapes = partitions_of(n, None);
    shapes
        .iter()
        .map(|l| {
            shapes
                .iter()
                .map(|m| character(l, m).expect("same size"))
                .collect()
        })
        .collect()
}

/// `p♯_μ(λ)` as an exact rational.
pub fn p_sharp_exact(mu: &Partition, lambda: &Partition) -> BigRational {
    let n = lambda.size();
    let r = mu.size();
    if n < r {
        return BigRational::zero();
    }
    let chi = character(lambda, &adjoin_ones(mu, n - r)).expect("sizes agree");
    let scale = BigInt::from(falling_power(n, r));
    BigRational::new(scale * chi, BigInt::from(dim(lambda)))
}

/// `p♯_μ(λ) = n^{r̲} χ_λ(μ ∪ 1^{n-r}) / dim(λ)` for `n ≥ r`, zero otherwise.
pub fn p_sharp(mu: &Partition, lambda: &Partition) -> f64 {
    p_sharp_exact(mu, lambda).to_f64_lossy()
}

/// `p♯_(k)(λ)` without materializing `n!`, for diagrams with up to a few
/// hundred rows and any number of boxes.
///
/// Uses the first-column hook lengths `β` of `λ`: removing a `k`-strip moves a
/// single `β_a` to `β_a - k`, which gives
/// `p♯_(k)(λ) = Σ_a β_a^{k̲} Π_{i≠a} (β_a - β_i - k) / (β_a - β_i)`.
/// The product carries the strip sign. Terms are accumulated in log space.
pub fn p_sharp_single_cycle(k: usize, lambda: &Partition) -> f64 {
    let n = lambda.size();
    if k == 0 {
        return 1.0;
    }
    if k > n {
        return 0.0;
    }
    let betas = beta_set(lambda);
    let mut total = 0.0;
    for (a, &ba) in betas.iter().enumerate() {
        if ba < k {
            continue;
        }
        let mut log_mag = 0.0;
        let mut negative = false;
        let mut vanishes = false;
        for (i, &bi) in betas.iter().enumerate() {
            if i == a {
                continue;
            }
            let num = ba as f64 - bi as f64 - k as f64;
            if num == 0.0 {
                vanishes = true;
                break;
            }
            let den = ba as f64 - bi as f64;
            log_mag += num.abs().ln() - den.abs().ln();
            negative ^= (num < 0.0) != (den < 0.0);
        }
        if vanishes {
            continue;
        }
        log_mag += (0..k).map(|t| ((ba - t) as f64).ln()).sum::<f64>();
        let term = log_mag.exp();
        total += if negative { -term } else { term };
    }
    total
}

/// Same closed form as [`p_sharp_single_cycle`] in exact arithmetic.
pub fn p_sharp_single_cycle_exact(k: usize, lambda: &Partition) -> BigRational {
    let n = lambda.size();
    if k > n {
        return BigRational::zero();
    }
    let betas = beta_set(lambda);
    let mut total = BigRational::zero();
    for (a, &ba) in betas.iter().enumerate() {
        if ba < k {
            continue;
        }
        let mut term = BigRational::from_integer(BigInt::from(falling_power(ba, k)));
        for (i, &bi) in betas.iter().enumerate() {
            if i == a {
                continue;
            }
            let num = BigInt::from(ba as i64 - bi as i64 - k as i64);
            let den = BigInt::from(ba as i64 - bi as i64);
            term *= BigRational::new(num, den);
        }
        total += term;
    }
    total
}

/// Both sides of `M_μ(x) = Σ_{λ ⊢ |μ|} χ_λ(μ) s_λ(x)`.
pub fn verify_basis_change<T: Scalar>(mu: &Partition, x: &[T]) -> (T, T) {
    let lhs = power_sum_product(x, mu);
    let rhs = partitions_of(mu.size(), None)
        .iter()
        .map(|lambda| {
            let chi = character(lambda, mu).expect("same size");
            T::from_bigint(&chi) * schur_eval(lambda, x)
        })
        .fold(T::zero(), |a, b| a + b);
    (lhs, rhs)
}

/// Both sides of the branching rule
/// `s_μ(z) = Σ_{λ ≺ μ} z_1^{|μ| - |λ|} s_λ(z_2, ..., z_d)`.
pub fn verify_branching<T: Scalar>(mu: &Partition, z: &[T]) -> Result<(T, T)> {
    if z.len() < 2 {
        return Err(Error::InvalidInput(
            "branching needs at least two variables".into(),
        ));
    }
    let lhs = schur_eval(mu, z);
    let rest = &z[1..];
    let rhs = crate::partitions::interlacing_predecessors(mu)
        .iter()
        .map(|lambda| {
            let w = (mu.size() - lambda.size()) as u32;
            z[0].powi_exact(w) * schur_eval(lambda, rest)
        })
        .fold(T::zero(), |a, b| a + b);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partitions::{centralizer_size, factorial};
    use crate::scalar::approx_eq;
    use crate::Rational;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn power_sum_examples() {
        for d in 1..6 {
            let u = vec![1.0 / d as f64; d];
            for alpha in [0.5, 2.0, 3.0, 0.25] {
                let m = power_sum(&u, alpha).unwrap();
                assert!(approx_eq(m, (d as f64).powf(1.0 - alpha), 1e-12, 1e-15));
            }
        }
        assert!(approx_eq(power_sum(&[0.2, 0.3, 0.5], 1.0).unwrap(), 1.0, 1e-15, 0.0));
        assert_eq!(power_sum(&[0.5, 0.5], 2.0).unwrap(), 0.5);
        assert_eq!(power_sum(&[0.5, 0.0, 0.5], 0.0).unwrap(), 2.0);
        assert!(power_sum(&[-0.5, 1.5], 0.5).is_err());
        assert_eq!(power_sum(&[-0.5, 1.5], 2.0).unwrap(), 2.5);
    }

    #[test]
    fn power_sum_product_examples() {
        let eta = [0.1, 0.2, 0.7];
        assert!(approx_eq(power_sum_product(&eta, &partition![1, 1]), 1.0, 1e-15, 0.0));
        assert_eq!(power_sum_product(&[0.5, 0.5], &partition![2, 2]), 0.25);
        assert_eq!(power_sum_product(&eta, &Partition::empty()), 1.0);
    }

    #[test]
    fn schur_small_cases() {
        let x = [0.3, 0.9, 1.7];
        assert!(approx_eq(schur_eval(&partition![1], &x), 2.9, 1e-14, 0.0));
        assert_eq!(schur_eval(&partition![2], &[1.0, 1.0]), 3.0);
        assert!(approx_eq(schur_eval(&partition![1, 1], &[2.0, 3.0]), 6.0, 1e-14, 0.0));
        assert_eq!(schur_eval(&partition![1, 1, 1], &[2.0, 3.0]), 0.0);
        assert_eq!(schur_eval(&Partition::empty(), &[2.0]), 1.0);
    }

    #[test]
    fn schur_exact_rational() {
        // s_(2)(a, b) = a^2 + ab + b^2 at (1/2, 1/3)
        let x = [rat(1, 2), rat(1, 3)];
        assert_eq!(schur_eval(&partition![2], &x), rat(19, 36));
        assert_eq!(schur_eval(&partition![1, 1], &x), rat(1, 6));
    }

    #[test]
    fn schur_ones_examples() {
        assert_eq!(schur_ones(&partition![1], 7), BigUint::from(7u32));
        assert_eq!(schur_ones(&partition![2, 1], 2), BigUint::from(2u32));
        assert_eq!(schur_ones(&partition![2, 1], 3), BigUint::from(8u32));
        assert_eq!(schur_ones(&partition![1, 1, 1], 2), BigUint::zero());
        for d in 1..=6 {
            for n in 0..=8 {
                for lambda in partitions_of(n, None) {
                    let via_jt = schur_eval(&lambda, &vec![1.0f64; d]);
                    let exact = schur_ones(&lambda, d);
                    let e = f64::from_biguint(&exact);
                    assert!(approx_eq(via_jt, e, 1e-9, 1e-12), "{lambda} d={d}");
                    assert!(exact <= BigUint::from(d).pow(n as u32));
                }
            }
        }
    }

    #[test]
    fn border_strips_of_small_shapes() {
        // no domino can be peeled off the hook (2,1)
        assert!(remove_border_strips(&partition![2, 1], 2).is_empty());
        let strips = remove_border_strips(&partition![2, 1], 3);
        assert_eq!(strips, vec![(Partition::empty(), 1)]);
        let strips = remove_border_strips(&partition![3, 1], 2);
        let mut shapes: Vec<_> = strips.iter().map(|(s, h)| (s.to_string(), *h)).collect();
        shapes.sort();
        assert_eq!(shapes, vec![("1,1".to_string(), 0)]);
        let strips = remove_border_strips(&partition![2, 2], 2);
        let mut shapes: Vec<_> = strips.iter().map(|(s, h)| (s.to_string(), *h)).collect();
        shapes.sort();
        assert_eq!(shapes, vec![("1,1".to_string(), 1), ("2".to_string(), 0)]);
    }

    #[test]
    fn character_examples() {
        for n in 1..=6 {
            for lambda in partitions_of(n, None) {
                let id = character(&lambda, &Partition::column(n)).unwrap();
                assert_eq!(id, BigInt::from(dim(&lambda)));
            }
            for mu in partitions_of(n, None) {
                assert_eq!(character(&Partition::row(n), &mu).unwrap(), BigInt::one());
            }
        }
        assert_eq!(character(&partition![2, 1], &partition![3]).unwrap(), BigInt::from(-1));
        assert_eq!(character(&partition![2, 1], &partition![2, 1]).unwrap(), BigInt::zero());
        assert!(character(&partition![2], &partition![1]).is_err());
    }

    #[test]
    fn character_orthogonality() {
        for n in 1..=8 {
            let shapes = partitions_of(n, None);
            let table = character_table(n);
            let class: Vec<BigInt> = shapes
                .iter()
                .map(|mu| BigInt::from(factorial(n) / centralizer_size(mu)))
                .collect();
            for a in 0..shapes.len() {
                for b in 0..shapes.len() {
                    let inner: BigInt = (0..shapes.len())
                        .map(|m| &class[m] * &table[a][m] * &table[b][m])
                        .sum();
                    let expected = if a == b {
                        BigInt::from(factorial(n))
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(inner, expected, "n={n} {} {}", shapes[a], shapes[b]);
                }
            }
        }
    }

    #[test]
    fn p_sharp_examples() {
        for n in 1..=6 {
            for lambda in partitions_of(n, None) {
                assert!(approx_eq(p_sharp(&partition![1], &lambda), n as f64, 1e-12, 0.0));
                assert!(approx_eq(p_sharp_single_cycle(1, &lambda), n as f64, 1e-12, 0.0));
            }
        }
        assert_eq!(p_sharp(&partition![2], &partition![2]), 2.0);
        assert_eq!(p_sharp(&partition![2], &partition![1, 1]), -2.0);
        assert_eq!(p_sharp(&partition![3], &partition![2]), 0.0);
        assert_eq!(p_sharp_single_cycle(2, &partition![2, 1]), 0.0);
        assert_eq!(p_sharp_single_cycle(2, &partition![2]), 2.0);
        assert_eq!(p_sharp_single_cycle(2, &partition![1, 1]), -2.0);
    }

    #[test]
    fn single_cycle_closed_form_is_exact() {
        for n in 1..=10 {
            for lambda in partitions_of(n, None) {
                for k in 1..=n {
                    let mu = Partition::row(k);
                    assert_eq!(
                        p_sharp_single_cycle_exact(k, &lambda),
                        p_sharp_exact(&mu, &lambda),
                        "k={k} λ={lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn single_cycle_large_diagram_is_finite() {
        let lambda = Partition::new(vec![400_000, 300_000, 200_000, 100_000]).unwrap();
        let v = p_sharp_single_cycle(2, &lambda);
        // p♯_(2)(λ) = 2 Σ_boxes content = Σ λ_i(λ_i - 2i + 1)
        let expected: f64 = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &l)| l as f64 * (l as f64 - 2.0 * (i as f64 + 1.0) + 1.0))
            .sum();
        assert!(approx_eq(v, expected, 1e-10, 0.0), "{v} vs {expected}");
    }

    #[test]
    fn basis_change_small() {
        let (l, r) = verify_basis_change(&partition![1], &[0.3, 0.4]);
        assert!(approx_eq(l, 0.7, 1e-12, 0.0) && approx_eq(r, 0.7, 1e-12, 0.0));
        let (l, r) = verify_basis_change(&partition![2], &[1.0, 1.0]);
        assert!(approx_eq(l, 2.0, 1e-12, 0.0) && approx_eq(r, 2.0, 1e-12, 0.0));
        let x = [rat(1, 3), rat(-2, 5), rat(7, 4)];
        for mu in partitions_of(4, None) {
            let (l, r) = verify_basis_change(&mu, &x);
            assert_eq!(l, r, "μ={mu}");
        }
    }

    #[test]
    fn branching_small() {
        let (l, r) = verify_branching(&partition![2, 1], &[1.0, 1.0, 1.0]).unwrap();
        assert!(approx_eq(l, 8.0, 1e-12, 0.0) && approx_eq(r, 8.0, 1e-12, 0.0));
        let (l, r) = verify_branching(&partition![1], &[0.5, 2.0, 3.0]).unwrap();
        assert!(approx_eq(l, 5.5, 1e-12, 0.0) && approx_eq(r, 5.5, 1e-12, 0.0));
        assert!(verify_branching(&partition![1], &[1.0]).is_err());
    }

    #[test]
    fn determinant_with_zero_pivot() {
        let m = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        assert_eq!(determinant(m), -1.0);
        let singular = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        assert_eq!(determinant(singular), 0.0);
    }
}
