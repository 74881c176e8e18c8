use std::collections::HashMap;

use super::{Coeff, MultiPoly};
use crate::error::{invalid, Result};

/// Dense matrix of constants.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<C> {
    rows: Vec<Vec<C>>,
    ncols: usize,
}

impl<C: Coeff> Matrix<C> {
    pub fn new(rows: Vec<Vec<C>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return invalid("matrix rows have different lengths");
        }
        Ok(Self { rows, ncols })
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { rows: vec![vec![C::zero(); ncols]; nrows], ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &C {
        &self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: C) {
        self.rows[r][c] = v;
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix { rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(), ncols: self.ncols }
    }

    pub fn select(&self, rowset: &[usize], colset: &[usize]) -> Self {
        Self {
            rows: rowset.iter().map(|&r| colset.iter().map(|&c| self.rows[r][c].clone()).collect()).collect(),
            ncols: colset.len(),
        }
    }

    pub fn determinant(&self) -> Result<C> {
        if self.nrows() != self.ncols {
            return invalid(format!("determinant of a {}x{} matrix", self.nrows(), self.ncols));
        }
        Ok(bareiss_determinant(self.rows.clone()))
    }
}

/// Fraction-free (Bareiss) elimination. Every division is exact.
pub fn bareiss_determinant<C: Coeff>(mut a: Vec<Vec<C>>) -> C {
    let n = a.len();
    if n == 0 {
        return C::one();
    }
    let mut sign_flip = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return C::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Rank over the coefficient field by Gaussian elimination.
pub fn rank<C: Coeff>(m: &Matrix<C>) -> usize {
    let mut a = m.rows.clone();
    let (nr, nc) = (a.len(), m.ncols);
    let mut r = 0;
    for c in 0..nc {
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv();
        for i in 0..nr {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].mul(&inv);
                for j in c..nc {
                    let v = a[i][j].sub(&f.mul(&a[r][j]));
                    a[i][j] = v;
                }
            }
        }
        r += 1;
        if r == nr {
            break;
        }
    }
    r
}

/// Matrix of polynomials in a common ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<C> {
    nvars: usize,
    rows: Vec<Vec<MultiPoly<C>>>,
    ncols: usize,
}

impl<C: Coeff> PolyMatrix<C> {
    pub fn new(nvars: usize, rows: Vec<Vec<MultiPoly<C>>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return invalid("polynomial matrix rows have different lengths");
        }
        Ok(Self { nvars, rows, ncols })
    }

    pub fn from_constants(nvars: usize, m: &Matrix<C>) -> Self {
        Self {
            nvars,
            rows: m.rows.iter().map(|r| r.iter().map(|c| MultiPoly::constant(nvars, c.clone())).collect()).collect(),
            ncols: m.ncols,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly<C> {
        &self.rows[r][c]
    }

    pub fn rows(&self) -> &[Vec<MultiPoly<C>>] {
        &self.rows
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.ncols != other.ncols || self.nvars != other.nvars {
            return invalid("cannot stack matrices of different widths or rings");
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self { nvars: self.nvars, rows, ncols: self.ncols })
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&MultiPoly<C>) -> MultiPoly<D>) -> PolyMatrix<D> {
        PolyMatrix {
            nvars: self.nvars,
            rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect(),
            ncols: self.ncols,
        }
    }

    pub fn eval(&self, point: &[C]) -> Matrix<C> {
        Matrix { rows: self.rows.iter().map(|r| r.iter().map(|p| p.eval(point)).collect()).collect(), ncols: self.ncols }
    }

    pub fn determinant(&self) -> Result<MultiPoly<C>> {
        let rs: Vec<usize> = (0..self.nrows()).collect();
        let cs: Vec<usize> = (0..self.ncols).collect();
        self.minor(&rs, &cs)
    }

    /// Determinant of the submatrix on `rowset x colset`.
    ///
    /// Symbolic rows are expanded first (Laplace along rows, memoized on the
    /// set of columns still free); once only constant rows remain, the
    /// complementary minor is evaluated by Bareiss elimination.
    pub fn minor(&self, rowset: &[usize], colset: &[usize]) -> Result<MultiPoly<C>> {
        if rowset.len() != colset.len() {
            return invalid(format!("non-square minor selection {}x{}", rowset.len(), colset.len()));
        }
        if rowset.iter().any(|&r| r >= self.nrows()) || colset.iter().any(|&c| c >= self.ncols) {
            return invalid("minor selection out of bounds");
        }
        if colset.len() > 63 {
            return invalid("minor larger than 63 columns");
        }
        let is_const = |r: usize| colset.iter().all(|&c| self.rows[r][c].is_constant());
        let mut order: Vec<usize> = rowset.iter().copied().filter(|&r| !is_const(r)).collect();
        let n_sym = order.len();
        order.extend(rowset.iter().copied().filter(|&r| is_const(r)));
        // parity of the stable partition relative to the given row order
        let mut inversions = 0usize;
        for (i, &a) in order.iter().enumerate() {
            let pa = rowset.iter().position(|&x| x == a).expect("member");
            for &b in &order[i + 1..] {
                if rowset.iter().position(|&x| x == b).expect("member") < pa {
                    inversions += 1;
                }
            }
        }
        let mut memo = HashMap::new();
        let full: u64 = (1u64 << colset.len()) - 1;
        let det = self.laplace(&order, n_sym, colset, 0, full, &mut memo);
        Ok(if inversions % 2 == 1 { -&det } else { det })
    }

    fn laplace(
        &self,
        order: &[usize],
        n_sym: usize,
        colset: &[usize],
        depth: usize,
        free: u64,
        memo: &mut HashMap<u64, MultiPoly<C>>,
    ) -> MultiPoly<C> {
        if depth == order.len() {
            return MultiPoly::one(self.nvars);
        }
        if let Some(v) = memo.get(&free) {
            return v.clone();
        }
        let free_cols: Vec<usize> = (0..colset.len()).filter(|&j| free & (1 << j) != 0).collect();
        let result = if depth >= n_sym {
            let sub: Vec<Vec<C>> = order[depth..]
                .iter()
                .map(|&r| {
                    free_cols
                        .iter()
                        .map(|&j| self.rows[r][colset[j]].constant_value().expect("constant row"))
                        .collect()
                })
                .collect();
            MultiPoly::constant(self.nvars, bareiss_determinant(sub))
        } else {
            let row = &self.rows[order[depth]];
            let mut acc = MultiPoly::zero(self.nvars);
            for (pos, &j) in free_cols.iter().enumerate() {
                let entry = &row[colset[j]];
                if entry.is_zero() {
                    continue;
                }
                let sub = self.laplace(order, n_sym, colset, depth + 1, free & !(1 << j), memo);
                if sub.is_zero() {
                    continue;
                }
                let term = entry * &sub;
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        };
        memo.insert(free, result.clone());
        result
    }
}
