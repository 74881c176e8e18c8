use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros so that equality and hashing ignore them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("parts {parts:?} are not weakly decreasing"));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `a^m`, a rectangle of `m` rows of length `a`.
    pub fn rectangle(rows: usize, a: u32) -> Self {
        Self::new(vec![a; rows]).expect("constant parts are weakly decreasing")
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `i`-th part, 0-indexed; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let cols = self.part(0) as usize;
        Self((0..cols).map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32).collect())
    }

    /// Fits inside `rows x cols`.
    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.length() <= rows && self.part(0) <= cols
    }

    /// The complement in the `k x (n-k)` rectangle, `(n-k-l_k, ..., n-k-l_1)`.
    pub fn complement(&self, k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return invalid(format!("need 1 <= k < n, got k={k}, n={n}"));
        }
        let w = (n - k) as u32;
        if !self.fits(k, w) {
            return invalid(format!("{self} does not fit in the {k}x{w} rectangle"));
        }
        Self::new((0..k).rev().map(|i| w - self.part(i)).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Boxes on the main diagonal, `max { i : l_i >= i }`.
    pub fn diag_length(&self) -> usize {
        self.0.iter().enumerate().take_while(|(i, &p)| p as usize > *i).count()
    }

    /// Cellwise containment `other <= self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }
}

/// `((n-k-1)^(k-1), 0)`, whose complement is the full hook `(n-k, 1^(k-1))`.
pub fn hook_complement(k: usize, n: usize) -> Result<Partition> {
    if k < 2 || n < k + 2 {
        return invalid(format!("hook family needs 2 <= k and 2 <= n-k, got k={k}, n={n}"));
    }
    Ok(Partition::rectangle(k - 1, (n - k - 1) as u32))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Dot-separated parts, e.g. `3.1.1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .split('.')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// Skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return invalid(format!("{inner} is not contained in {outer}"));
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        Self { outer, inner: Partition::empty() }
    }

    pub fn size(&self) -> usize {
        (self.outer.weight() - self.inner.weight()) as usize
    }

    pub fn rows(&self) -> usize {
        self.outer.length()
    }

    /// Cells `(row, col)` in reading order: top row first, left to right.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.rows())
            .flat_map(|r| (self.inner.part(r) as usize..self.outer.part(r) as usize).map(move |c| (r, c)))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `4.4.1/1` or a plain partition.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => Self::new(o.parse()?, i.parse()?),
            None => Ok(Self::straight(s.parse()?)),
        }
    }
}
