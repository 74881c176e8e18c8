use std::fmt;

use super::OsculationPoint;
use crate::combinat::{Partition, SchubertProblemSpec};
use crate::error::{invalid, Result};

/// Number of real osculation points per condition, aligned with
/// [`SchubertProblemSpec::conditions`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OsculationType(pub Vec<usize>);

impl OsculationType {
    /// Checks `r_i <= a_i` and `r_i = a_i (mod 2)` for every condition.
    pub fn validate(&self, problem: &SchubertProblemSpec) -> Result<()> {
        let conds = problem.conditions();
        if self.0.len() != conds.len() {
            return invalid(format!("osculation type has {} entries, problem has {} conditions", self.0.len(), conds.len()));
        }
        for (&r, (p, m)) in self.0.iter().zip(conds) {
            let m = *m as usize;
            if r > m || !(m - r).is_multiple_of(2) {
                return invalid(format!("{r} real points for {p}^{m} breaks r <= a, r = a (mod 2)"));
            }
        }
        Ok(())
    }

    /// All admissible types, in descending lexicographic order.
    pub fn all(problem: &SchubertProblemSpec) -> Vec<Self> {
        let mut out = vec![vec![]];
        for (_, m) in problem.conditions() {
            let m = *m as usize;
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (0..=m).rev().filter(move |r| (m - r).is_multiple_of(2)).map(move |r| {
                        let mut v = prefix.clone();
                        v.push(r);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Self).collect()
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for OsculationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A Schubert problem with one osculation point per condition occurrence,
/// aligned with [`SchubertProblemSpec::expanded`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsculatingInstance {
    problem: SchubertProblemSpec,
    points: Vec<OsculationPoint>,
}

impl OsculatingInstance {
    /// Requires distinct points, closed under conjugation with matching
    /// conditions, so that the instance is a real variety.
    pub fn new(problem: SchubertProblemSpec, points: Vec<OsculationPoint>) -> Result<Self> {
        let conds = problem.expanded();
        if points.len() != conds.len() {
            return invalid(format!("{} points given for {} conditions", points.len(), conds.len()));
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return invalid(format!("osculation point {p} repeated"));
            }
        }
        for (i, p) in points.iter().enumerate() {
            if p.is_real() {
                continue;
            }
            let c = p.conj();
            match points.iter().position(|q| *q == c) {
                Some(j) if conds[j] == conds[i] => {}
                Some(_) => return invalid(format!("{p} and its conjugate carry different conditions")),
                None => return invalid(format!("conjugate of {p} missing")),
            }
        }
        Ok(Self { problem, points })
    }

    pub fn problem(&self) -> &SchubertProblemSpec {
        &self.problem
    }

    pub fn points(&self) -> &[OsculationPoint] {
        &self.points
    }

    /// `(condition, point)` pairs.
    pub fn assignment(&self) -> Vec<(Partition, OsculationPoint)> {
        self.problem.expanded().into_iter().zip(self.points.iter().cloned()).collect()
    }

    pub fn osculation_type(&self) -> OsculationType {
        let mut counts = Vec::new();
        let mut idx = 0;
        for (_, m) in self.problem.conditions() {
            let m = *m as usize;
            counts.push(self.points[idx..idx + m].iter().filter(|p| p.is_real()).count());
            idx += m;
        }
        OsculationType(counts)
    }

    pub fn point_strings(&self) -> Vec<String> {
        self.points.iter().map(ToString::to_string).collect()
    }
}

/// Free-function form of [`OsculatingInstance::osculation_type`].
pub fn osculation_type(instance: &OsculatingInstance) -> OsculationType {
    instance.osculation_type()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(s: &[&str]) -> Vec<OsculationPoint> {
        s.iter().map(|x| x.parse().unwrap()).collect()
    }

    #[test]
    fn types_and_validation() {
        let p: SchubertProblemSpec = "GR(2,8): 5, 1^7".parse().unwrap();
        let all = OsculationType::all(&p);
        let shown: Vec<String> = all.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["1 7", "1 5", "1 3", "1 1"]);
        assert!(OsculationType(vec![1, 4]).validate(&p).is_err());
        let inst =
            OsculatingInstance::new(p, pts(&["inf", "0", "1", "2", "1+i", "1-i", "3/2*i", "-3/2*i"])).unwrap();
        assert_eq!(inst.osculation_type(), OsculationType(vec![1, 3]));
    }

    #[test]
    fn conjugation_closure_enforced() {
        let p: SchubertProblemSpec = "GR(2,4): 1^4".parse().unwrap();
        assert!(OsculatingInstance::new(p.clone(), pts(&["0", "1", "2", "1+i"])).is_err());
        assert!(OsculatingInstance::new(p.clone(), pts(&["0", "1", "1", "2"])).is_err());
        assert!(OsculatingInstance::new(p.clone(), pts(&["i", "-i", "2+i", "2-i"])).is_ok());
        let q: SchubertProblemSpec = "GR(2,4): 2, 1^2".parse().unwrap();
        assert!(OsculatingInstance::new(q, pts(&["i", "-i", "0"])).is_err());
    }
}
