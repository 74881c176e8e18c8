//! Littlewood-Richardson expansion truncated to a rectangle.

use std::collections::BTreeMap;

use super::{Partition, SchubertProblemSpec};
use crate::error::{Error, Result};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LrBudget {
    /// Largest number of distinct Schur terms kept between multiplications.
    pub max_terms: usize,
}

impl Default for LrBudget {
    fn default() -> Self {
        Self { max_terms: 1_000_000 }
    }
}

struct StripSearch<'a> {
    mu: &'a [u32],
    rows: usize,
    cols: u32,
    out: BTreeMap<Vec<u32>, u64>,
}

impl StripSearch<'_> {
    /// Places the strip of label `label`, row by row. `cnt[r][j]` is the
    /// number of cells labelled `j` in row `r`.
    fn place_label(&mut self, label: usize, shape: &mut Vec<u32>, cnt: &mut Vec<Vec<u32>>) {
        if label == self.mu.len() {
            *self.out.entry(shape.clone()).or_insert(0) += 1;
            return;
        }
        let old = shape.clone();
        self.place_row(label, 0, self.mu[label], &old, shape, cnt, 0, 0);
    }

    #[allow(clippy::too_many_arguments)]
    fn place_row(
        &mut self,
        label: usize,
        row: usize,
        remaining: u32,
        old: &[u32],
        shape: &mut Vec<u32>,
        cnt: &mut Vec<Vec<u32>>,
        cum_this: u32,
        cum_prev_above: u32,
    ) {
        if remaining == 0 {
            self.place_label(label + 1, shape, cnt);
            return;
        }
        if row == self.rows {
            return;
        }
        let ceiling = if row == 0 { self.cols } else { old[row - 1] };
        let room = ceiling.saturating_sub(old[row]);
        let mut max_here = room.min(remaining);
        if label > 0 {
            // lattice word: labels `label` through this row may not outnumber
            // labels `label - 1` strictly above it
            max_here = max_here.min(cum_prev_above.saturating_sub(cum_this));
            if cum_this > cum_prev_above {
                return;
            }
        }
        let prev_here = if label > 0 { cnt[row][label - 1] } else { 0 };
        for a in (0..=max_here).rev() {
            shape[row] = old[row] + a;
            cnt[row][label] = a;
            self.place_row(
                label,
                row + 1,
                remaining - a,
                old,
                shape,
                cnt,
                cum_this + a,
                cum_prev_above + prev_here,
            );
        }
        shape[row] = old[row];
        cnt[row][label] = 0;
    }
}

/// `s_lambda * s_mu` restricted to partitions inside `rows x cols`, with
/// coefficients counted as Littlewood-Richardson skew tableaux.
pub fn lr_product(lambda: &Partition, mu: &Partition, rows: usize, cols: u32) -> BTreeMap<Partition, u64> {
    if !lambda.fits(rows, cols) || !mu.fits(rows, cols) {
        return BTreeMap::new();
    }
    let mut search = StripSearch { mu: mu.parts(), rows, cols, out: BTreeMap::new() };
    let mut shape: Vec<u32> = (0..rows).map(|i| lambda.part(i)).collect();
    let mut cnt = vec![vec![0u32; mu.length()]; rows];
    search.place_label(0, &mut shape, &mut cnt);
    search
        .out
        .into_iter()
        .map(|(s, c)| (Partition::new(s).expect("shapes stay partitions"), c))
        .collect()
}

pub fn complex_count(problem: &SchubertProblemSpec) -> Result<u64> {
    complex_count_with(problem, LrBudget::default())
}

/// Number of complex solutions: the coefficient of the full rectangle in the
/// product of the conditions' Schur classes, truncated to `k x (n-k)`.
pub fn complex_count_with(problem: &SchubertProblemSpec, budget: LrBudget) -> Result<u64> {
    let (rows, cols) = (problem.k(), (problem.n() - problem.k()) as u32);
    let mut state: BTreeMap<Partition, u64> = BTreeMap::new();
    state.insert(Partition::empty(), 1);
    let mut conditions = problem.expanded();
    // big factors first keeps the intermediate support small
    conditions.sort_by_key(|p| std::cmp::Reverse(p.weight()));
    for cond in &conditions {
        let terms: Vec<(Partition, u64)> = state.into_iter().collect();
        let partial = par::map_collect(&terms, |(lam, c)| {
            lr_product(lam, cond, rows, cols).into_iter().map(|(nu, m)| (nu, m * c)).collect::<Vec<_>>()
        });
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (nu, c) in partial.into_iter().flatten() {
            let e = next.entry(nu).or_insert(0);
            *e = e.checked_add(c).ok_or_else(|| Error::Resource("solution count overflows u64".into()))?;
        }
        if next.len() > budget.max_terms {
            return Err(Error::Resource(format!(
                "Schur expansion reached {} terms (budget {})",
                next.len(),
                budget.max_terms
            )));
        }
        state = next;
    }
    Ok(state.get(&Partition::rectangle(rows, cols)).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_products() {
        // s_1 * s_1 = s_2 + s_11
        let prod = lr_product(&p("1"), &p("1"), 3, 3);
        assert_eq!(prod.len(), 2);
        assert_eq!(prod[&p("2")], 1);
        assert_eq!(prod[&p("1.1")], 1);
        // s_21 * s_21 has s_321 with coefficient 2
        let prod = lr_product(&p("2.1"), &p("2.1"), 4, 4);
        assert_eq!(prod[&p("3.2.1")], 2);
        assert_eq!(prod[&p("4.2")], 1);
        assert_eq!(prod.values().sum::<u64>(), 8);
        // truncation drops shapes leaving the box
        let prod = lr_product(&p("2"), &p("1"), 2, 2);
        assert_eq!(prod.keys().cloned().collect::<Vec<_>>(), vec![p("2.1")]);
    }

    #[test]
    fn product_is_commutative() {
        for (a, b) in [("2.1", "3.1"), ("2.2", "1.1"), ("3.1.1", "2.1")] {
            assert_eq!(lr_product(&p(a), &p(b), 5, 5), lr_product(&p(b), &p(a), 5, 5));
        }
    }

    #[test]
    fn pieri_dimension_count() {
        // s_1^m summed over all shapes counts standard tableaux: 1,1,2,4,10,26
        let mut state: BTreeMap<Partition, u64> = BTreeMap::from([(Partition::empty(), 1)]);
        let mut totals = vec![];
        for _ in 0..5 {
            let mut next = BTreeMap::new();
            for (lam, c) in &state {
                for (nu, m) in lr_product(lam, &p("1"), 9, 9) {
                    *next.entry(nu).or_insert(0) += m * c;
                }
            }
            state = next;
            totals.push(state.values().map(|c| c * c).sum::<u64>());
        }
        // sum of squares of f^lambda is m!
        assert_eq!(totals, vec![1, 2, 6, 24, 120]);
    }

    fn count(s: &str) -> u64 {
        complex_count(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn known_solution_counts() {
        assert_eq!(count("GR(2,4): 1^4"), 2);
        assert_eq!(count("GR(2,5): 1^6"), 5);
        assert_eq!(count("GR(3,6): 1^9"), 42);
        assert_eq!(count("GR(3,6): 2.1^2, 1^3"), 6);
        assert_eq!(count("GR(2,8): 5, 1^7"), 6);
        assert_eq!(count("GR(4,8): 3.3.3, 1^7"), 20);
        assert_eq!(count("GR(4,8): 3.1^4"), 9);
        assert_eq!(count("GR(3,7): 2.1^4"), 8);
        assert_eq!(count("GR(2,8): 3^4"), 4);
        assert_eq!(count("GR(4,9): 4^2, 1.1.1^2, 1^6"), 10);
        assert_eq!(count("GR(4,8): 3.1.1, 2.1^3, 1^2"), 54);
    }

    #[test]
    fn duality_and_hook_family() {
        for s in ["GR(3,6): 2.1^2, 1^3", "GR(2,8): 5, 1^7", "GR(3,7): 2.1^4", "GR(2,6): 2.1, 1^5"] {
            let p: SchubertProblemSpec = s.parse().unwrap();
            assert_eq!(complex_count(&p).unwrap(), complex_count(&p.dual()).unwrap(), "{s}");
        }
        for n in 4..=10usize {
            for k in 2..=n - 2 {
                let p = SchubertProblemSpec::hook_family(k, n).unwrap();
                let expect = crate::combinat::binomial((n - 2) as u64, (k - 1) as u64);
                assert_eq!(complex_count(&p).unwrap(), expect, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn term_budget_is_enforced() {
        let p: SchubertProblemSpec = "GR(3,6): 1^9".parse().unwrap();
        assert!(matches!(complex_count_with(&p, LrBudget { max_terms: 2 }), Err(Error::Resource(_))));
    }
}
