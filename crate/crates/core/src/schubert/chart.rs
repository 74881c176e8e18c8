use std::fmt;

use crate::combinat::Partition;
use crate::error::{invalid, Result};
use crate::exactalg::{MultiPoly, PolyMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ChartKind {
    /// `(Id : M)`.
    Full,
    /// Schubert cell of `X_lambda(inf)`.
    AtInfinity(Partition),
    /// Open cell of `X_lambda(inf) ∩ X_mu(0)`.
    AtZeroAndInfinity { zero: Partition, infinity: Partition },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    One,
    Zero,
    Var(usize),
}

/// Local coordinates on a Schubert cell: a `k x n` pattern of ones, zeros and
/// variables numbered row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    kind: ChartKind,
    k: usize,
    n: usize,
    pattern: Vec<Vec<Entry>>,
    nvars: usize,
}

impl Chart {
    pub fn full(k: usize, n: usize) -> Result<Self> {
        Self::at_infinity(k, n, &Partition::empty())
    }

    /// Row `i` (1-based) has its pivot in column `i + lambda_(k+1-i)`, zeros
    /// to the left and in the other rows' pivot columns.
    pub fn at_infinity(k: usize, n: usize, lambda: &Partition) -> Result<Self> {
        check_fits(k, n, lambda)?;
        let pivots = pivots(k, lambda);
        let mut nvars = 0;
        let pattern = (0..k)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if j == pivots[i] {
                            Entry::One
                        } else if j < pivots[i] || pivots.contains(&j) {
                            Entry::Zero
                        } else {
                            nvars += 1;
                            Entry::Var(nvars - 1)
                        }
                    })
                    .collect()
            })
            .collect();
        let kind = if lambda.is_empty() { ChartKind::Full } else { ChartKind::AtInfinity(lambda.clone()) };
        Ok(Self { kind, k, n, pattern, nvars })
    }

    /// Row `i` (1-based) is supported on columns `i + lambda_(k+1-i)` (the
    /// pivot) through `n-k+i-mu_i`.
    pub fn at_zero_and_infinity(k: usize, n: usize, mu: &Partition, lambda: &Partition) -> Result<Self> {
        check_fits(k, n, lambda)?;
        check_fits(k, n, mu)?;
        let pivots = pivots(k, lambda);
        let last: Vec<usize> = (0..k).map(|i| n - k + i - mu.part(i) as usize).collect();
        if pivots.iter().zip(&last).any(|(p, l)| p > l) {
            return invalid(format!("X_{lambda}(inf) and X_{mu}(0) do not meet in Gr({k},{n})"));
        }
        let mut nvars = 0;
        let pattern = (0..k)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if j == pivots[i] {
                            Entry::One
                        } else if j < pivots[i] || j > last[i] {
                            Entry::Zero
                        } else {
                            nvars += 1;
                            Entry::Var(nvars - 1)
                        }
                    })
                    .collect()
            })
            .collect();
        let kind = ChartKind::AtZeroAndInfinity { zero: mu.clone(), infinity: lambda.clone() };
        Ok(Self { kind, k, n, pattern, nvars })
    }

    pub fn kind(&self) -> &ChartKind {
        &self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pattern(&self) -> &[Vec<Entry>] {
        &self.pattern
    }

    pub fn num_vars(&self) -> usize {
        self.nvars
    }

    /// `(row, column)` of each variable, 0-based.
    pub fn var_positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.nvars];
        for (i, row) in self.pattern.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if let Entry::Var(v) = e {
                    pos[*v] = (i, j);
                }
            }
        }
        pos
    }

    /// Names `m{row}{col}` (1-based), or `m{row}_{col}` once `n >= 10`.
    pub fn var_names(&self) -> Vec<String> {
        self.var_positions()
            .into_iter()
            .map(|(i, j)| if self.n < 10 { format!("m{}{}", i + 1, j + 1) } else { format!("m{}_{}", i + 1, j + 1) })
            .collect()
    }

    pub fn matrix(&self) -> PolyMatrix<Rational> {
        let nv = self.nvars;
        let rows = self
            .pattern
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        Entry::One => MultiPoly::one(nv),
                        Entry::Zero => MultiPoly::zero(nv),
                        Entry::Var(v) => MultiPoly::var(nv, *v),
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::new(nv, rows).expect("rectangular pattern")
    }

    /// Short descriptor such as `full`, `inf(2.1)` or `inf(1.1)+zero(2.1)`.
    pub fn descriptor(&self) -> String {
        match &self.kind {
            ChartKind::Full => "full".into(),
            ChartKind::AtInfinity(l) => format!("inf({l})"),
            ChartKind::AtZeroAndInfinity { zero, infinity } => format!("inf({infinity})+zero({zero})"),
        }
    }

    /// ASCII picture of the pattern: `1`, `0` or `*` per entry.
    pub fn ascii(&self) -> String {
        self.pattern
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        Entry::One => "1",
                        Entry::Zero => "0",
                        Entry::Var(_) => "*",
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Free-function form of [`Chart::matrix`].
pub fn chart_matrix(chart: &Chart) -> PolyMatrix<Rational> {
    chart.matrix()
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

fn check_fits(k: usize, n: usize, p: &Partition) -> Result<()> {
    if k == 0 || k >= n {
        return invalid(format!("Gr({k},{n}) needs 1 <= k < n"));
    }
    if !p.fits(k, (n - k) as u32) {
        return invalid(format!("{p} does not fit in the {k}x{} rectangle", n - k));
    }
    Ok(())
}

/// 0-based pivot columns `i + lambda_(k-1-i)`.
fn pivots(k: usize, lambda: &Partition) -> Vec<usize> {
    (0..k).map(|i| i + lambda.part(k - 1 - i) as usize).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rank, rat};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn displayed_patterns() {
        let c = Chart::at_infinity(3, 6, &p("2.1")).unwrap();
        assert_eq!(c.ascii(), "1 * 0 * 0 *\n0 0 1 * 0 *\n0 0 0 0 1 *");
        assert_eq!(c.num_vars(), 6);
        let c = Chart::at_zero_and_infinity(3, 6, &p("2.1"), &p("1.1")).unwrap();
        assert_eq!(c.ascii(), "1 * 0 0 0 0\n0 0 1 * 0 0\n0 0 0 1 * *");
        assert_eq!(c.num_vars(), 4);
        assert_eq!(c.var_names(), vec!["m12", "m24", "m35", "m36"]);
        let c = Chart::full(2, 4).unwrap();
        assert_eq!(c.ascii(), "1 0 * *\n0 1 * *");
        assert_eq!(c.descriptor(), "full");
    }

    #[test]
    fn variable_counts_and_rank() {
        let parts = ["0", "1", "2", "1.1", "2.1", "2.2", "3.1", "3.3"];
        for (k, n) in [(2, 5), (3, 6), (2, 6)] {
            for a in parts {
                let lam = p(a);
                if !lam.fits(k, (n - k) as u32) {
                    continue;
                }
                let c = Chart::at_infinity(k, n, &lam).unwrap();
                assert_eq!(c.num_vars(), k * (n - k) - lam.weight() as usize);
                for b in parts {
                    let mu = p(b);
                    if !mu.fits(k, (n - k) as u32) {
                        continue;
                    }
                    let meets = (0..k).all(|i| lam.part(k - 1 - i) + mu.part(i) <= (n - k) as u32);
                    match Chart::at_zero_and_infinity(k, n, &mu, &lam) {
                        Ok(c) => {
                            assert!(meets);
                            assert_eq!(c.num_vars(), k * (n - k) - (lam.weight() + mu.weight()) as usize);
                            let vals: Vec<Rational> = (0..c.num_vars()).map(|v| rat(v as i64 * 3 - 5, 2)).collect();
                            assert_eq!(rank(&c.matrix().eval(&vals)), k);
                        }
                        Err(_) => assert!(!meets),
                    }
                }
            }
        }
    }
}
