use std::collections::HashMap;

use super::SkewShape;
use crate::error::{invalid, Error, Result};

/// Limits on tableau work. Enumeration lists every tableau, so it is guarded
/// by the cell count; the counting recursion is guarded by its number of
/// intermediate shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableauBudget {
    pub max_cells: usize,
    pub max_states: usize,
}

impl Default for TableauBudget {
    fn default() -> Self {
        Self { max_cells: 12, max_states: 1_000_000 }
    }
}

/// Standard Young tableau of a skew shape: `rows[r]` holds the entries of
/// row `r` from column `inner[r]` to `outer[r] - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return invalid("row count does not match the shape");
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != (shape.outer.part(r) - shape.inner.part(r)) as usize {
                return invalid(format!("row {r} has the wrong length"));
            }
        }
        let t = Self { shape, rows };
        let mut seen: Vec<u32> = t.reading_word();
        seen.sort_unstable();
        if seen.iter().enumerate().any(|(i, &v)| v as usize != i + 1) {
            return invalid("entries must be 1..N, each once");
        }
        for (r, row) in t.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return invalid(format!("row {r} does not increase"));
            }
            if r > 0 {
                for (c, v) in t.row_cells(r) {
                    if let Some(above) = t.entry(r - 1, c) {
                        if above >= v {
                            return invalid(format!("column {c} does not increase at row {r}"));
                        }
                    }
                }
            }
        }
        Ok(t)
    }

    /// The filling whose entries are in reading order.
    pub fn standard(shape: &SkewShape) -> Self {
        let mut next = 1;
        let rows = (0..shape.rows())
            .map(|r| {
                let len = (shape.outer.part(r) - shape.inner.part(r)) as usize;
                let row: Vec<u32> = (next..next + len as u32).collect();
                next += len as u32;
                row
            })
            .collect();
        Self { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn row_cells(&self, r: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        let start = self.shape.inner.part(r) as usize;
        self.rows[r].iter().enumerate().map(move |(i, &v)| (start + i, v))
    }

    /// Entry at `(row, col)`, if that cell belongs to the skew shape.
    pub fn entry(&self, r: usize, c: usize) -> Option<u32> {
        let start = self.shape.inner.part(r) as usize;
        if r >= self.rows.len() || c < start {
            return None;
        }
        self.rows[r].get(c - start).copied()
    }

    /// Entries in reading order.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Swaps two entries, returning `None` if the result is not a tableau.
    pub fn swap_entries(&self, a: u32, b: u32) -> Option<Self> {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&v| if v == a { b } else if v == b { a } else { v }).collect())
            .collect();
        Self::new(self.shape.clone(), rows).ok()
    }
}

/// Sign of the permutation taking the standard filling to `t`, i.e. the
/// parity of the reading word.
pub fn tableau_sign(t: &Tableau) -> i32 {
    let w = t.reading_word();
    let mut inversions = 0usize;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn enumerate_tableaux(shape: &SkewShape) -> Result<Vec<Tableau>> {
    enumerate_tableaux_with(shape, TableauBudget::default())
}

/// All standard tableaux of `shape`; the first one is the standard filling.
pub fn enumerate_tableaux_with(shape: &SkewShape, budget: TableauBudget) -> Result<Vec<Tableau>> {
    let size = shape.size();
    if size > budget.max_cells {
        return Err(Error::Resource(format!(
            "shape {shape} has {size} cells, enumeration budget is {}",
            budget.max_cells
        )));
    }
    let nrows = shape.rows();
    let inner: Vec<usize> = (0..nrows).map(|r| shape.inner.part(r) as usize).collect();
    let outer: Vec<usize> = (0..nrows).map(|r| shape.outer.part(r) as usize).collect();
    let mut filled = inner.clone();
    let mut grid: Vec<Vec<u32>> = (0..nrows).map(|r| vec![0; outer[r] - inner[r]]).collect();
    let mut out = Vec::new();

    fn dfs(
        v: u32,
        size: u32,
        inner: &[usize],
        outer: &[usize],
        filled: &mut Vec<usize>,
        grid: &mut Vec<Vec<u32>>,
        shape: &SkewShape,
        out: &mut Vec<Tableau>,
    ) {
        if v > size {
            out.push(Tableau { shape: shape.clone(), rows: grid.clone() });
            return;
        }
        for r in 0..filled.len() {
            if filled[r] < outer[r] && (r == 0 || filled[r - 1] > filled[r]) {
                grid[r][filled[r] - inner[r]] = v;
                filled[r] += 1;
                dfs(v + 1, size, inner, outer, filled, grid, shape, out);
                filled[r] -= 1;
            }
        }
    }

    dfs(1, size as u32, &inner, &outer, &mut filled, &mut grid, shape, &mut out);
    Ok(out)
}

/// `(number of tableaux, signed sum of their signs)` by recursion over the
/// partially filled shapes. Placing the next entry into row `r` creates one
/// inversion per filled cell later in reading order, which gives the sign of
/// each step without materializing the tableaux.
fn count_and_sign(shape: &SkewShape, budget: TableauBudget) -> Result<(u128, i128)> {
    let nrows = shape.rows();
    let inner: Vec<usize> = (0..nrows).map(|r| shape.inner.part(r) as usize).collect();
    let outer: Vec<usize> = (0..nrows).map(|r| shape.outer.part(r) as usize).collect();
    let mut memo: HashMap<Vec<usize>, (u128, i128)> = HashMap::new();

    fn rec(
        filled: &mut Vec<usize>,
        inner: &[usize],
        outer: &[usize],
        memo: &mut HashMap<Vec<usize>, (u128, i128)>,
        max_states: usize,
    ) -> Result<(u128, i128)> {
        if filled.iter().zip(outer).all(|(f, o)| f == o) {
            return Ok((1, 1));
        }
        if let Some(&v) = memo.get(filled.as_slice()) {
            return Ok(v);
        }
        if memo.len() >= max_states {
            return Err(Error::Resource(format!("tableau recursion exceeded {max_states} shapes")));
        }
        let mut count = 0u128;
        let mut signed = 0i128;
        for r in 0..filled.len() {
            if filled[r] < outer[r] && (r == 0 || filled[r - 1] > filled[r]) {
                let later: usize = (r + 1..filled.len()).map(|s| filled[s] - inner[s]).sum();
                filled[r] += 1;
                let (c, s) = rec(filled, inner, outer, memo, max_states)?;
                filled[r] -= 1;
                count += c;
                signed += if later.is_multiple_of(2) { s } else { -s };
            }
        }
        memo.insert(filled.clone(), (count, signed));
        Ok((count, signed))
    }

    let mut filled = inner.clone();
    rec(&mut filled, &inner, &outer, &mut memo, budget.max_states)
}

/// `|Y(shape)|`.
pub fn count_tableaux(shape: &SkewShape) -> Result<u128> {
    Ok(count_and_sign(shape, TableauBudget::default())?.0)
}

/// `sum_T sign(T)` with the reading-order sign convention.
pub fn signed_tableau_sum(shape: &SkewShape) -> Result<i128> {
    Ok(count_and_sign(shape, TableauBudget::default())?.1)
}

/// `|sum_T sign(T)|`.
pub fn sign_imbalance(shape: &SkewShape) -> Result<u128> {
    Ok(signed_tableau_sum(shape)?.unsigned_abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{binomial, Partition};

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    // brute force: enumerate, then sign each tableau from its reading word
    fn brute(s: &SkewShape) -> (u128, i128) {
        let all = enumerate_tableaux(s).unwrap();
        (all.len() as u128, all.iter().map(|t| tableau_sign(t) as i128).sum())
    }

    #[test]
    fn single_box_and_standard_first() {
        let one = enumerate_tableaux(&shape("1")).unwrap();
        assert_eq!(one.len(), 1);
        let s = shape("4.4.1/1");
        let all = enumerate_tableaux(&s).unwrap();
        assert_eq!(all[0], Tableau::standard(&s));
        assert_eq!(all[0].reading_word(), (1..=8).collect::<Vec<_>>());
        assert_eq!(tableau_sign(&all[0]), 1);
    }

    #[test]
    fn displayed_fillings_of_441_over_1() {
        let s = shape("4.4.1/1");
        let all = enumerate_tableaux(&s).unwrap();
        let shown = [
            vec![vec![1, 2, 3], vec![4, 5, 6, 7], vec![8]],
            vec![vec![3, 5, 7], vec![1, 4, 6, 8], vec![2]],
            vec![vec![2, 3, 5], vec![1, 4, 6, 7], vec![8]],
            vec![vec![1, 3, 6], vec![2, 4, 5, 8], vec![7]],
        ];
        for rows in shown {
            let t = Tableau::new(s.clone(), rows).unwrap();
            assert!(all.contains(&t));
        }
        let (count, signed) = brute(&s);
        assert_eq!(all.len() as u128, count);
        assert_eq!(count_tableaux(&s).unwrap(), count);
        assert_eq!(signed_tableau_sum(&s).unwrap(), signed);
    }

    #[test]
    fn single_swap_flips_sign() {
        let s = shape("3.2");
        let std = Tableau::standard(&s);
        // 3 and 4 sit in different rows and columns of the standard filling
        let swapped = std.swap_entries(3, 4).expect("valid");
        assert_eq!(tableau_sign(&swapped), -1);
        assert!(std.swap_entries(1, 2).is_none());
    }

    #[test]
    fn invalid_fillings_rejected() {
        let s = shape("2.1");
        assert!(Tableau::new(s.clone(), vec![vec![2, 1], vec![3]]).is_err());
        assert!(Tableau::new(s.clone(), vec![vec![1, 3], vec![1]]).is_err());
        assert!(Tableau::new(s.clone(), vec![vec![2, 3], vec![1]]).is_err());
        assert!(Tableau::new(s, vec![vec![1, 2], vec![3]]).is_ok());
    }

    #[test]
    fn budget_is_enforced() {
        let big = shape("5.4.4");
        assert!(matches!(enumerate_tableaux(&big), Err(Error::Resource(_))));
        let loose = TableauBudget { max_cells: 13, ..Default::default() };
        assert!(enumerate_tableaux_with(&big, loose).is_ok());
    }

    #[test]
    fn sign_imbalance_examples() {
        assert_eq!(sign_imbalance(&shape("3.1.1")).unwrap(), 2);
        assert_eq!(sign_imbalance(&shape("2.2")).unwrap(), 0);
    }

    #[test]
    fn hook_counts() {
        for n in 4..=10usize {
            for k in 2..=n - 2 {
                let hook = crate::combinat::hook_complement(k, n).unwrap().complement(k, n).unwrap();
                let s = SkewShape::straight(hook);
                assert_eq!(count_tableaux(&s).unwrap(), binomial((n - 2) as u64, (k - 1) as u64) as u128);
            }
        }
    }

    #[test]
    fn recursion_matches_brute_force_on_many_shapes() {
        let outers = ["3.2.1", "4.4.1", "3.3.3", "4.2.2.1", "5.3.1", "2.2.2.2", "4.4.2"];
        for o in outers {
            let outer: Partition = o.parse().unwrap();
            for inner in ["0", "1", "2.1", "1.1", "2"] {
                let inner: Partition = inner.parse().unwrap();
                let Ok(s) = SkewShape::new(outer.clone(), inner) else { continue };
                let (c, sg) = brute(&s);
                assert_eq!(count_tableaux(&s).unwrap(), c, "{s}");
                assert_eq!(signed_tableau_sum(&s).unwrap(), sg, "{s}");
                assert!(sign_imbalance(&s).unwrap() <= c);
            }
        }
    }
}
