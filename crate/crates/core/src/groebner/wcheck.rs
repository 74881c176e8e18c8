//! Exact vanishing orders of the Wronskians of all solutions at once, over
//! `Q[y]/(e)` where `e` is the squarefree eliminant.

use super::InstanceSolution;
use crate::combinat::{binomial, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, Rational, UniPoly};
use crate::schubert::{wronskian_symbolic, OsculationPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WronskianOrder {
    pub condition: Partition,
    /// Osculation point in the solver's coordinates.
    pub point: OsculationPoint,
    pub expected: usize,
    /// The order is exactly `expected` for every solution.
    pub exact: bool,
}

fn is_unit_mod(p: &UniPoly, e: &UniPoly) -> bool {
    !p.is_zero() && p.gcd(e).is_constant()
}

/// For each condition `(lambda, t)` of a solved instance, checks that every
/// solution's Wronskian vanishes to order exactly `|lambda|` at `t`. A point
/// `t` off the real line is checked together with its conjugate.
pub fn solution_wronskian_orders(sol: &InstanceSolution) -> Result<Vec<WronskianOrder>> {
    let shape = sol
        .shape
        .as_ref()
        .ok_or_else(|| Error::Degenerate("no shape basis: solutions are not separated".into()))?;
    let e = &shape.eliminant;
    let chart = &sol.system.chart;
    let total = chart.k() * (chart.n() - chart.k());
    let w: Vec<UniPoly> = wronskian_symbolic(&chart.matrix())?.iter().map(|c| shape.eval(c)).collect();
    let conditions = problem_conditions(sol);
    let mut out = Vec::new();
    for (cond, t) in conditions.into_iter().zip(&sol.system.points) {
        let o = cond.weight() as usize;
        let exact = match t {
            OsculationPoint::Infinity => {
                (total - o + 1..=total).all(|d| w[d].is_zero()) && is_unit_mod(&w[total - o], e)
            }
            OsculationPoint::Finite(z) => {
                let mut powers = vec![GaussianRational::one()];
                for m in 1..=total {
                    let next = &powers[m - 1] * z;
                    powers.push(next);
                }
                let taylor = |j: usize| -> (UniPoly, UniPoly) {
                    let mut re = UniPoly::zero();
                    let mut im = UniPoly::zero();
                    for (d, wd) in w.iter().enumerate().skip(j) {
                        if wd.is_zero() {
                            continue;
                        }
                        let c = Rational::from_integer((binomial(d as u64, j as u64) as i64).into());
                        let p = &powers[d - j];
                        re = &re + &wd.scale(&(&c * &p.re));
                        im = &im + &wd.scale(&(&c * &p.im));
                    }
                    (re.rem(e), im.rem(e))
                };
                let lower_vanish = (0..o).all(|j| {
                    let (a, b) = taylor(j);
                    a.is_zero() && b.is_zero()
                });
                let (a, b) = taylor(o);
                let unit = if z.is_real() { is_unit_mod(&a, e) } else { is_unit_mod(&(&(&a * &a) + &(&b * &b)).rem(e), e) };
                lower_vanish && unit
            }
        };
        out.push(WronskianOrder { condition: cond, point: t.clone(), expected: o, exact });
    }
    Ok(out)
}

fn problem_conditions(sol: &InstanceSolution) -> Vec<Partition> {
    // the system keeps points aligned with the instance's expanded conditions
    sol.system.conditions.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::SchubertProblemSpec;
    use crate::groebner::{solve_instance_detailed, SolveOptions};
    use crate::schubert::OsculatingInstance;

    fn inst(problem: &str, pts: &[&str]) -> OsculatingInstance {
        let problem: SchubertProblemSpec = problem.parse().unwrap();
        OsculatingInstance::new(problem, pts.iter().map(|s| s.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn orders_on_small_instances() {
        for (prob, pts, expected) in [
            ("GR(2,4): 1^4", vec!["inf", "0", "1", "3"], 2),
            ("GR(2,4): 1^4", vec!["2", "5", "1+i", "1-i"], 2),
            ("GR(3,6): 2.1^2, 1^3", vec!["inf", "0", "1", "-1", "2"], 6),
            ("GR(3,6): 2.1^2, 1^3", vec!["1", "-2", "1/2+i", "1/2-i", "3"], 6),
        ] {
            let sol = solve_instance_detailed(&inst(prob, &pts), expected, &SolveOptions::default()).unwrap();
            assert!(sol.report.transversal, "{prob} {pts:?}");
            let orders = solution_wronskian_orders(&sol).unwrap();
            assert_eq!(orders.len(), pts.len());
            assert!(orders.iter().all(|o| o.exact), "{prob} {pts:?}: {orders:?}");
        }
    }
}
