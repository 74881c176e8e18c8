use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::FrequencyTable;
use crate::combinat::{complex_count, nu, predicted_real_counts, sign_imbalance, Partition, SchubertProblemSpec, SkewShape};
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawStatus {
    Pass,
    Fail,
    /// The law holds so far but the data cannot settle it (for example a
    /// lower bound that was never attained).
    Inconclusive,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: String,
    pub status: LawStatus,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub problem: String,
    pub num_complex: usize,
    pub laws: Vec<LawCheck>,
}

impl StructureReport {
    pub fn violations(&self) -> usize {
        self.laws.iter().filter(|l| l.status == LawStatus::Fail).count()
    }

    pub fn law(&self, name: &str) -> Option<&LawCheck> {
        self.laws.iter().find(|l| l.law == name)
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} = {}", self.problem, self.num_complex)?;
        for l in &self.laws {
            let tag = match l.status {
                LawStatus::Pass => "PASS",
                LawStatus::Fail => "FAIL",
                LawStatus::Inconclusive => "OPEN",
                LawStatus::NotApplicable => "n/a ",
            };
            writeln!(f, "  [{tag}] {}: {}", l.law, l.detail)?;
        }
        Ok(())
    }
}

fn law(name: &str, status: LawStatus, detail: impl Into<String>) -> LawCheck {
    LawCheck { law: name.into(), status, detail: detail.into() }
}

fn observed(table: &FrequencyTable) -> impl Iterator<Item = (&Vec<usize>, BTreeSet<usize>)> {
    table.rows.iter().map(|r| (&r.osculation_type, r.counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect()))
}

/// `c` is not congruent to `nc` modulo `m`, or exceeds it.
fn off_by(nc: usize, c: usize, m: i64) -> bool {
    c > nc || (nc as i64 - c as i64).rem_euclid(m) != 0
}

fn fmt_type(t: &[usize]) -> String {
    t.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// The `(lambda, mu)` of a problem `(lambda, mu, 1^m)` with `lambda`, `mu`
/// single conditions (possibly absent).
fn lower_bound_shape(problem: &SchubertProblemSpec) -> Option<(Partition, Partition)> {
    let one = Partition::new(vec![1]).expect("valid");
    let big: Vec<&(Partition, u32)> = problem.conditions().iter().filter(|(p, _)| *p != one).collect();
    if big.len() > 2 || big.iter().any(|(_, m)| *m != 1) {
        return None;
    }
    let lambda = big.first().map(|(p, _)| p.clone()).unwrap_or_else(Partition::empty);
    let mu = big.get(1).map(|(p, _)| p.clone()).unwrap_or_else(Partition::empty);
    Some((lambda, mu))
}

fn topological_bound(problem: &SchubertProblemSpec) -> Result<Option<u128>> {
    let Some((lambda, mu)) = lower_bound_shape(problem) else { return Ok(None) };
    let (k, n) = (problem.k(), problem.n());
    let lc = lambda.complement(k, n)?;
    let shape = match SkewShape::new(lc, mu.clone()) {
        Ok(s) => s,
        // the roles of 0 and infinity are interchangeable
        Err(_) => SkewShape::new(mu.complement(k, n)?, lambda)?,
    };
    sign_imbalance(&shape).map(Some)
}

/// Hook-family row parameter: real points among the simple conditions, if
/// the rectangle's point is real.
fn hook_r_box(problem: &SchubertProblemSpec, osc_type: &[usize]) -> Option<usize> {
    if problem.conditions().len() == 1 {
        // the rectangle is itself a single box: one of the real points carries it
        return osc_type[0].checked_sub(1);
    }
    Some(osc_type[1])
}

/// Checks a frequency table against the structural laws that apply to its
/// problem: parity, the all-real row, the sign-imbalance lower bound, the
/// mod-4 congruence for symmetric problems, and the factorization support
/// of the hook family.
pub fn check_structures(table: &FrequencyTable, problem: &SchubertProblemSpec) -> Result<StructureReport> {
    if table.rows.is_empty() {
        return invalid("cannot check an empty table");
    }
    if let Some(p) = &table.problem {
        if *p != problem.to_string() {
            return invalid(format!("table is for {p}, not {problem}"));
        }
    }
    let nc = complex_count(problem)? as usize;
    if let Some(c) = table.num_complex {
        if c != nc {
            return invalid(format!("table reports {c} complex solutions, the problem has {nc}"));
        }
    }
    let mut laws = Vec::new();

    // (a) parity
    let bad: Vec<String> = observed(table)
        .flat_map(|(t, cols)| cols.into_iter().filter(|&c| off_by(nc, c, 2)).map(move |c| format!("{}:{c}", fmt_type(t))))
        .collect();
    laws.push(if bad.is_empty() {
        law("parity", LawStatus::Pass, format!("every count = {nc} (mod 2)"))
    } else {
        law("parity", LawStatus::Fail, format!("wrong parity at {}", bad.join(", ")))
    });

    // (b) all points real: every solution real
    let all_real: Vec<usize> = problem.conditions().iter().map(|(_, m)| *m as usize).collect();
    laws.push(match observed(table).find(|(t, _)| **t == all_real) {
        None => law("all-real", LawStatus::NotApplicable, "all-real row not sampled"),
        Some((_, cols)) if cols.iter().all(|&c| c == nc) => {
            law("all-real", LawStatus::Pass, format!("row {} only at {nc}", fmt_type(&all_real)))
        }
        Some((_, cols)) => law("all-real", LawStatus::Fail, format!("row {} observed {cols:?}", fmt_type(&all_real))),
    });

    // (c) sign-imbalance lower bound
    laws.push(match topological_bound(problem) {
        Ok(None) => law("lower-bound", LawStatus::NotApplicable, "problem is not of the form (lambda, mu, 1^m)"),
        Err(Error::Resource(m)) => law("lower-bound", LawStatus::Inconclusive, format!("sign-imbalance not computed: {m}")),
        Err(e) => return Err(e),
        Ok(Some(sigma)) => {
            let low: Vec<String> = observed(table)
                .filter_map(|(t, cols)| cols.first().filter(|&&m| (m as u128) < sigma).map(|m| format!("{}:{m}", fmt_type(t))))
                .collect();
            if low.is_empty() {
                law("lower-bound", LawStatus::Pass, format!("every row has at least sigma = {sigma}"))
            } else {
                law("lower-bound", LawStatus::Fail, format!("below sigma = {sigma} at {}", low.join(", ")))
            }
        }
    });

    // (d) congruence mod 4 for symmetric problems
    let k = problem.k();
    laws.push(if problem.is_symmetric() && problem.total_diag_length() >= k + 4 {
        let bad: Vec<String> = observed(table)
            .flat_map(|(t, cols)| cols.into_iter().filter(|&c| off_by(nc, c, 4)).map(move |c| format!("{}:{c}", fmt_type(t))))
            .collect();
        if bad.is_empty() {
            law("mod-4", LawStatus::Pass, format!("every count = {nc} (mod 4)"))
        } else {
            law("mod-4", LawStatus::Fail, format!("counts off {nc} (mod 4): {}", bad.join(", ")))
        }
    } else {
        law("mod-4", LawStatus::NotApplicable, "not a symmetric problem with enough diagonal boxes")
    });

    // (e) hook family: support inside the factorization counts, lower bound attained
    let n = problem.n();
    let is_hook = k >= 2 && n >= k + 2 && SchubertProblemSpec::hook_family(k, n).is_ok_and(|h| h == *problem);
    if is_hook {
        let mut outside = Vec::new();
        let mut below = Vec::new();
        let mut unattained = Vec::new();
        for (t, cols) in observed(table) {
            let Some(r_box) = hook_r_box(problem, t) else { continue };
            let predicted = predicted_real_counts(k, n, r_box)?;
            let lo = if r_box == 0 { 1 } else { r_box - 1 };
            let bound = nu(k, n, lo)? as usize;
            for &c in &cols {
                if !predicted.contains(&(c as u64)) {
                    outside.push(format!("{}:{c}", fmt_type(t)));
                }
            }
            match cols.first() {
                Some(&m) if m < bound => below.push(format!("{}:{m}<{bound}", fmt_type(t))),
                Some(&m) if m > bound => unattained.push(format!("{}:{m}>{bound}", fmt_type(t))),
                _ => {}
            }
        }
        laws.push(if outside.is_empty() {
            law("hook-support", LawStatus::Pass, "every count is nu(k,n,r) for an admissible r")
        } else {
            law("hook-support", LawStatus::Fail, format!("outside predicted support: {}", outside.join(", ")))
        });
        laws.push(if !below.is_empty() {
            law("hook-minimum", LawStatus::Fail, format!("below nu(k,n,r_box-1): {}", below.join(", ")))
        } else if !unattained.is_empty() {
            law("hook-minimum", LawStatus::Inconclusive, format!("bound not attained yet: {}", unattained.join(", ")))
        } else {
            law("hook-minimum", LawStatus::Pass, "each row attains nu(k,n,r_box-1)")
        });
    } else {
        laws.push(law("hook-support", LawStatus::NotApplicable, "not a hook-family problem"));
        laws.push(law("hook-minimum", LawStatus::NotApplicable, "not a hook-family problem"));
    }

    Ok(StructureReport { problem: problem.to_string(), num_complex: nc, laws })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::exper::TableRow;

    fn table(problem: &str, nc: usize, rows: &[(&[usize], &[(usize, u64)])]) -> FrequencyTable {
        FrequencyTable {
            problem: Some(problem.into()),
            num_complex: Some(nc),
            rows: rows
                .iter()
                .map(|(t, cells)| {
                    let counts: BTreeMap<usize, u64> = cells.iter().copied().collect();
                    TableRow { osculation_type: t.to_vec(), total: counts.values().sum(), counts }
                })
                .collect(),
        }
    }

    fn problem(s: &str) -> SchubertProblemSpec {
        s.parse().unwrap()
    }

    #[test]
    fn four_lines() {
        let p = problem("GR(2,4): 1^4");
        let t = table("GR(2,4): 1^4", 2, &[(&[4], &[(2, 50)]), (&[2], &[(0, 20), (2, 30)]), (&[0], &[(2, 50)])]);
        let r = check_structures(&t, &p).unwrap();
        assert_eq!(r.violations(), 0, "{r}");
        assert_eq!(r.law("all-real").unwrap().status, LawStatus::Pass);
        let t = table("GR(2,4): 1^4", 2, &[(&[4], &[(0, 1), (2, 49)])]);
        let r = check_structures(&t, &p).unwrap();
        assert_eq!(r.law("all-real").unwrap().status, LawStatus::Fail);
        let t = table("GR(2,4): 1^4", 2, &[(&[2], &[(1, 1)])]);
        assert_eq!(check_structures(&t, &p).unwrap().law("parity").unwrap().status, LawStatus::Fail);
    }

    #[test]
    fn hook_rows() {
        let p = problem("GR(2,8): 5, 1^7");
        // nu(2,8,.) = 0,2,4,6 for r = 0,2,4,6
        let t = table("GR(2,8): 5, 1^7", 6, &[(&[1, 7], &[(6, 10)]), (&[1, 1], &[(0, 3), (2, 4), (6, 1)])]);
        let r = check_structures(&t, &p).unwrap();
        assert_eq!(r.violations(), 0, "{r}");
        assert_eq!(r.law("hook-minimum").unwrap().status, LawStatus::Pass);
        assert_eq!(r.law("lower-bound").unwrap().status, LawStatus::Pass);
        let t = table("GR(2,8): 5, 1^7", 6, &[(&[1, 5], &[(2, 1)])]);
        assert_eq!(check_structures(&t, &p).unwrap().law("hook-minimum").unwrap().status, LawStatus::Fail);
        let t = table("GR(2,8): 5, 1^7", 6, &[(&[1, 5], &[(6, 1)])]);
        assert_eq!(check_structures(&t, &p).unwrap().law("hook-minimum").unwrap().status, LawStatus::Inconclusive);
    }

    #[test]
    fn symmetric_mod_four() {
        let p = problem("GR(4,8): 3.3.3, 1^7");
        let t = table("GR(4,8): 3.3.3, 1^7", 20, &[(&[1, 1], &[(0, 5), (4, 3), (8, 1), (20, 1)])]);
        let r = check_structures(&t, &p).unwrap();
        assert_eq!(r.law("mod-4").unwrap().status, LawStatus::Pass);
        assert_eq!(r.law("hook-support").unwrap().status, LawStatus::Pass);
        let t = table("GR(4,8): 3.3.3, 1^7", 20, &[(&[1, 1], &[(12, 1)])]);
        let r = check_structures(&t, &p).unwrap();
        assert_eq!(r.law("mod-4").unwrap().status, LawStatus::Pass);
        assert_eq!(r.law("hook-support").unwrap().status, LawStatus::Fail);
        let t = table("GR(4,8): 3.3.3, 1^7", 20, &[(&[1, 1], &[(2, 1)])]);
        assert_eq!(check_structures(&t, &p).unwrap().law("mod-4").unwrap().status, LawStatus::Fail);
    }

    #[test]
    fn rejects_mismatches() {
        let p = problem("GR(2,4): 1^4");
        assert!(check_structures(&FrequencyTable::default(), &p).is_err());
        let t = table("GR(2,5): 1^6", 5, &[(&[6], &[(5, 1)])]);
        assert!(check_structures(&t, &p).is_err());
    }
}
