//! Partitions, skew tableaux, sign-imbalance, Littlewood-Richardson counts of
//! complex solutions, and the factorization counts `nu(k, n, r)`.

mod littlewood;
mod nu;
mod partition;
mod problem;
mod tableau;

pub use littlewood::{complex_count, complex_count_with, lr_product, LrBudget};
pub use nu::{gaussian_binomial_at_minus_one, hook_sign_imbalance_formula, multinomial, nu, predicted_real_counts};
pub use partition::{hook_complement, Partition, SkewShape};
pub use problem::SchubertProblemSpec;
pub use tableau::{
    count_tableaux, enumerate_tableaux, enumerate_tableaux_with, sign_imbalance, signed_tableau_sum, tableau_sign,
    Tableau, TableauBudget,
};

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r <= n {
        rec(0, n, r, &mut Vec::with_capacity(r), &mut out);
    }
    out
}
