//! Fast invariant suites behind `oscsolve selftest`.

use osc_core::combinat::{complex_count, nu, sign_imbalance, SchubertProblemSpec};
use osc_core::groebner::{solve_instance, SolveOptions};
use osc_core::hookfam::{factorization_census, verify_det_identity, verify_det_identity_with};
use osc_core::schubert::OsculatingInstance;
use osc_core::Result;

use crate::{CliResult, Failure};

fn complex_counts() -> Result<bool> {
    let cases = [("GR(2,4): 1^4", 2), ("GR(2,5): 1^6", 5), ("GR(3,6): 2.1^2, 1^3", 6), ("GR(4,8): 3.3.3, 1^7", 20)];
    for (p, want) in cases {
        if complex_count(&p.parse::<SchubertProblemSpec>()?)? != want {
            return Ok(false);
        }
    }
    Ok(true)
}

fn nu_values() -> Result<bool> {
    let got: Vec<u64> = (1..=11).step_by(2).map(|r| nu(5, 13, r)).collect::<Result<_>>()?;
    Ok(got == [10, 18, 38, 78, 162, 330])
}

fn sign_imbalance_example() -> Result<bool> {
    Ok(sign_imbalance(&"3.1.1".parse()?)? == 2)
}

fn identity() -> Result<bool> {
    Ok(verify_det_identity(3, 6)? && !verify_det_identity_with(3, 6, Some(2), 9)?)
}

fn census() -> Result<bool> {
    for m in 2..=5 {
        for r in (0..=2 * m).step_by(2) {
            if factorization_census(r, m)?.nonreal % 4 != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn all_real_solve() -> Result<bool> {
    let p: SchubertProblemSpec = "GR(3,6): 2.1^2, 1^3".parse()?;
    let pts = ["inf", "0", "1", "-1", "2"].iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()?;
    let r = solve_instance(&OsculatingInstance::new(p, pts)?, 6, &SolveOptions::default())?;
    Ok(r.transversal && r.num_real == 6)
}

pub(crate) fn run() -> CliResult {
    let suites: [(&str, fn() -> Result<bool>); 6] = [
        ("complex counts", complex_counts),
        ("nu(5,13,r)", nu_values),
        ("sign-imbalance of 3.1.1", sign_imbalance_example),
        ("determinant identity (3,6) with control", identity),
        ("nonreal factorizations divisible by 4", census),
        ("all-real instance has all solutions real", all_real_solve),
    ];
    let mut failed = 0;
    for (name, suite) in suites {
        let verdict = match suite() {
            Ok(true) => "PASS".to_string(),
            Ok(false) => {
                failed += 1;
                "FAIL".to_string()
            }
            Err(e) => {
                failed += 1;
                format!("ERROR {e}")
            }
        };
        println!("{verdict:>6}  {name}");
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Violation(format!("{failed} self-test suite(s) failed")))
    }
}
