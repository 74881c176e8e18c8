use std::fmt;
use std::str::FromStr;

use super::Partition;
use crate::error::{invalid, Error, Result};

/// A Schubert problem in `Gr(k, n)`: conditions with multiplicities whose
/// weights add up to `k(n-k)`.
///
/// Conditions are merged and kept in a canonical order (heaviest first), so
/// two descriptions of the same problem compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchubertProblemSpec {
    k: usize,
    n: usize,
    conditions: Vec<(Partition, u32)>,
}

fn canonical_key(p: &Partition) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<Partition>) {
    (std::cmp::Reverse(p.weight()), std::cmp::Reverse(p.clone()))
}

impl SchubertProblemSpec {
    pub fn new(k: usize, n: usize, conditions: Vec<(Partition, u32)>) -> Result<Self> {
        if k < 1 || k >= n {
            return invalid(format!("Gr({k},{n}) needs 1 <= k < n"));
        }
        let mut merged: Vec<(Partition, u32)> = Vec::new();
        for (p, m) in conditions {
            if m == 0 {
                continue;
            }
            if p.is_empty() {
                return invalid("empty partition imposes no condition");
            }
            if !p.fits(k, (n - k) as u32) {
                return invalid(format!("condition {p} does not fit in the {k}x{} rectangle", n - k));
            }
            match merged.iter_mut().find(|(q, _)| *q == p) {
                Some((_, mm)) => *mm += m,
                None => merged.push((p, m)),
            }
        }
        merged.sort_by_key(|(p, _)| canonical_key(p));
        let total: u64 = merged.iter().map(|(p, m)| p.weight() as u64 * *m as u64).sum();
        if total != (k * (n - k)) as u64 {
            return invalid(format!("condition weights sum to {total}, expected k(n-k) = {}", k * (n - k)));
        }
        Ok(Self { k, n, conditions: merged })
    }

    /// The problem `(hook_complement, 1^(n-1))`.
    pub fn hook_family(k: usize, n: usize) -> Result<Self> {
        let hook = super::hook_complement(k, n)?;
        Self::new(k, n, vec![(hook, 1), (Partition::new(vec![1])?, (n - 1) as u32)])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn conditions(&self) -> &[(Partition, u32)] {
        &self.conditions
    }

    /// Total number of conditions counted with multiplicity.
    pub fn num_conditions(&self) -> usize {
        self.conditions.iter().map(|(_, m)| *m as usize).sum()
    }

    /// One partition per condition, in canonical order.
    pub fn expanded(&self) -> Vec<Partition> {
        self.conditions
            .iter()
            .flat_map(|(p, m)| std::iter::repeat_n(p.clone(), *m as usize))
            .collect()
    }

    /// The same problem on `Gr(n-k, n)` with every condition transposed.
    pub fn dual(&self) -> Self {
        let conds = self.conditions.iter().map(|(p, m)| (p.transpose(), *m)).collect();
        Self::new(self.n - self.k, self.n, conds).expect("duality preserves validity")
    }

    /// `n = 2k` and every condition is a symmetric partition.
    pub fn is_symmetric(&self) -> bool {
        self.n == 2 * self.k && self.conditions.iter().all(|(p, _)| p.is_symmetric())
    }

    /// Sum of diagonal lengths over all conditions, with multiplicity.
    pub fn total_diag_length(&self) -> usize {
        self.conditions.iter().map(|(p, m)| p.diag_length() * *m as usize).sum()
    }
}

impl fmt::Display for SchubertProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GR({},{}):", self.k, self.n)?;
        for (i, (p, m)) in self.conditions.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            if *m == 1 {
                write!(f, "{sep}{p}")?;
            } else {
                write!(f, "{sep}{p}^{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SchubertProblemSpec {
    type Err = Error;

    /// Parses `GR(k,n): 2.1^2, 1^3` (case-insensitive prefix, spaces ignored).
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("expected `GR(k,n): cond^mult, ...`, got {s:?}"));
        let (head, body) = compact.split_once(':').ok_or_else(bad)?;
        let head = head.to_ascii_uppercase();
        let inner = head.strip_prefix("GR(").and_then(|h| h.strip_suffix(')')).ok_or_else(bad)?;
        let (k, n) = inner.split_once(',').ok_or_else(bad)?;
        let k: usize = k.parse().map_err(|_| bad())?;
        let n: usize = n.parse().map_err(|_| bad())?;
        let mut conds = Vec::new();
        for item in body.split(',') {
            if item.is_empty() {
                return Err(bad());
            }
            let (p, m) = match item.split_once('^') {
                Some((p, m)) => (p, m.parse::<u32>().map_err(|_| bad())?),
                None => (item, 1),
            };
            conds.push((p.parse::<Partition>()?, m));
        }
        Self::new(k, n, conds)
    }
}
