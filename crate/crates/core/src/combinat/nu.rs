//! Counting real factorizations `f' = g h` and the related q = -1 evaluations.

use std::collections::BTreeSet;

use crate::error::{invalid, Error, Result};

/// Coefficient of `x^(n-k-1) y^(k-1)` in `(x+y)^r (x^2+y^2)^c`, `c = (n-2-r)/2`.
pub fn nu(k: usize, n: usize, r: usize) -> Result<u64> {
    if k < 1 || k >= n || n < 2 {
        return invalid(format!("nu needs 1 <= k < n, got k={k}, n={n}"));
    }
    if r > n - 2 || !(n - 2 - r).is_multiple_of(2) {
        return invalid(format!("nu needs 0 <= r <= n-2 with r = n (mod 2); got r={r}, n={n}"));
    }
    let c = (n - 2 - r) / 2;
    // homogeneous of degree n-2; index = exponent of x
    let mut poly: Vec<u128> = vec![1];
    let overflow = || Error::Resource(format!("nu({k},{n},{r}) overflows"));
    for _ in 0..r {
        let mut next = vec![0u128; poly.len() + 1];
        for (i, &a) in poly.iter().enumerate() {
            next[i] = next[i].checked_add(a).ok_or_else(overflow)?;
            next[i + 1] = next[i + 1].checked_add(a).ok_or_else(overflow)?;
        }
        poly = next;
    }
    for _ in 0..c {
        let mut next = vec![0u128; poly.len() + 2];
        for (i, &a) in poly.iter().enumerate() {
            next[i] = next[i].checked_add(a).ok_or_else(overflow)?;
            next[i + 2] = next[i + 2].checked_add(a).ok_or_else(overflow)?;
        }
        poly = next;
    }
    let v = poly.get(n - k - 1).copied().unwrap_or(0);
    u64::try_from(v).map_err(|_| overflow())
}

/// Possible real solution counts `{nu(k,n,r) : r_box-1 <= r <= n-2}` for a
/// real osculating instance of the hook family with `r_box` real points.
pub fn predicted_real_counts(k: usize, n: usize, r_box: usize) -> Result<BTreeSet<u64>> {
    if r_box > n - 1 || !(n - 1 - r_box).is_multiple_of(2) {
        return invalid(format!("real point count {r_box} must satisfy r <= n-1 and r = n-1 (mod 2) for n={n}"));
    }
    let lo = if r_box == 0 { 1 } else { r_box - 1 };
    (lo..=n - 2).step_by(2).map(|r| nu(k, n, r)).collect()
}

/// The Gaussian binomial `[N choose K]_q` expanded and evaluated at `q = -1`.
///
/// Panics if a coefficient leaves `u128` (not before `N` around 125).
pub fn gaussian_binomial_at_minus_one(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    // rows[j] holds the coefficients of [i choose j]_q
    let mut rows: Vec<Vec<u128>> = vec![vec![1]];
    for i in 1..=n as usize {
        let mut next: Vec<Vec<u128>> = Vec::with_capacity(i + 1);
        for j in 0..=i.min(k as usize) {
            // [i, j] = [i-1, j-1] + q^j [i-1, j]
            let mut c = if j > 0 { rows[j - 1].clone() } else { vec![] };
            if j < rows.len() && j < i {
                let shifted = &rows[j];
                if c.len() < shifted.len() + j {
                    c.resize(shifted.len() + j, 0);
                }
                for (d, &a) in shifted.iter().enumerate() {
                    c[d + j] = c[d + j].checked_add(a).expect("q-binomial coefficient overflow");
                }
            }
            next.push(c);
        }
        rows = next;
    }
    rows[k as usize]
        .iter()
        .enumerate()
        .map(|(d, &a)| if d % 2 == 0 { a as i128 } else { -(a as i128) })
        .sum()
}

/// `n! / (a_1! ... a_m!)`, zero unless the parts sum to `n`.
pub fn multinomial(n: u64, parts: &[u64]) -> u128 {
    if parts.iter().sum::<u64>() != n {
        return 0;
    }
    let mut acc: u128 = 1;
    let mut used = 0u64;
    for &p in parts {
        for i in 1..=p {
            used += 1;
            acc = acc * used as u128 / i as u128;
        }
    }
    acc
}

/// Closed form for the sign-imbalance of the hook family in `Gr(k, n)`.
pub fn hook_sign_imbalance_formula(k: usize, n: usize) -> u128 {
    let (n, k) = (n as u64, k as u64);
    multinomial((n - 2) / 2, &[(k - 1) / 2, (n - k - 1) / 2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::binomial;

    /// Independent route: choose i of the r linear factors for x and j of the
    /// c quadratics for x^2, summing C(r,i) C(c,j) over i + 2j = target.
    fn nu_oracle(k: usize, n: usize, r: usize) -> u64 {
        let c = (n - 2 - r) / 2;
        let target = n - k - 1;
        (0..=c)
            .filter(|j| 2 * j <= target && target - 2 * j <= r)
            .map(|j| binomial(r as u64, (target - 2 * j) as u64) * binomial(c as u64, j as u64))
            .sum()
    }

    #[test]
    fn nu_five_thirteen() {
        let vals: Vec<u64> = [1, 3, 5, 7, 9, 11].iter().map(|&r| nu(5, 13, r).unwrap()).collect();
        assert_eq!(vals, vec![10, 18, 38, 78, 162, 330]);
    }

    #[test]
    fn nu_small_values_and_errors() {
        assert_eq!(nu(4, 8, 0).unwrap(), 0);
        assert_eq!(nu(4, 8, 2).unwrap(), 4);
        assert_eq!(nu(4, 8, 4).unwrap(), 8);
        assert_eq!(nu(4, 8, 6).unwrap(), 20);
        assert!(nu(4, 8, 3).is_err());
        assert!(nu(4, 8, 7).is_err());
    }

    #[test]
    fn nu_matches_oracle_and_symmetry() {
        for n in 3..=14 {
            for k in 1..n {
                for r in ((n % 2)..=n - 2).step_by(2) {
                    let v = nu(k, n, r).unwrap();
                    assert_eq!(v, nu_oracle(k, n, r), "k={k} n={n} r={r}");
                    assert_eq!(v, nu(n - k, n, r).unwrap());
                    if r + 2 <= n - 2 {
                        assert!(v <= nu(k, n, r + 2).unwrap());
                    }
                }
                assert_eq!(nu(k, n, n - 2).unwrap(), binomial((n - 2) as u64, (k - 1) as u64));
            }
        }
    }

    #[test]
    fn predicted_sets() {
        let s = |v: &[u64]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(predicted_real_counts(4, 8, 1).unwrap(), s(&[0, 4, 8, 20]));
        assert_eq!(predicted_real_counts(2, 8, 7).unwrap(), s(&[6]));
        assert_eq!(predicted_real_counts(2, 8, 1).unwrap(), s(&[0, 2, 4, 6]));
        assert!(predicted_real_counts(2, 8, 2).is_err());
        assert!(predicted_real_counts(2, 8, 9).is_err());
    }

    #[test]
    fn q_binomial_values() {
        assert_eq!(gaussian_binomial_at_minus_one(4, 2), 2);
        assert_eq!(gaussian_binomial_at_minus_one(3, 1), 1);
        assert_eq!(gaussian_binomial_at_minus_one(7, 0), 1);
        assert_eq!(gaussian_binomial_at_minus_one(4, 1), 0);
        assert_eq!(gaussian_binomial_at_minus_one(2, 3), 0);
    }

    #[test]
    fn q_binomial_matches_multinomial_of_floors() {
        for big_n in 0..=30u32 {
            for big_k in 0..=big_n {
                let (n, k) = (big_n as u64, big_k as u64);
                let expect = multinomial(n / 2, &[k / 2, (n - k) / 2]) as i128;
                assert_eq!(gaussian_binomial_at_minus_one(big_n, big_k), expect, "N={big_n} K={big_k}");
            }
        }
    }

    #[test]
    fn multinomial_basics() {
        assert_eq!(multinomial(4, &[2, 2]), 6);
        assert_eq!(multinomial(5, &[2, 2]), 0);
        assert_eq!(multinomial(6, &[1, 2, 3]), 60);
        assert_eq!(hook_sign_imbalance_formula(3, 6), 2);
        assert_eq!(hook_sign_imbalance_formula(2, 6), 0);
    }
}
