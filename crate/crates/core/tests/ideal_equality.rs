//! The reduced rank equations generate the same ideal as the literal minors
//! of `[M; F_d(t)]`, compared through reduced lex Groebner bases.

use osc_core::combinat::Partition;
use osc_core::exactalg::{split_real_imaginary, MultiPoly, Rational};
use osc_core::groebner::{groebner_basis, GbBudget};
use osc_core::schubert::{condition_equations, stacked_condition_minors, Chart, OsculationPoint};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn reduced(gens: &[MultiPoly<Rational>]) -> Vec<MultiPoly<Rational>> {
    groebner_basis(gens, GbBudget::default()).unwrap()
}

fn check(chart: &Chart, nu: &str, t: &str) {
    let (nu, t): (Partition, OsculationPoint) = (p(nu), t.parse().unwrap());
    let ours = condition_equations(chart, &nu, &t).unwrap();
    let literal: Vec<MultiPoly<Rational>> = stacked_condition_minors(chart, &nu, &t)
        .unwrap()
        .iter()
        .flat_map(|m| {
            let (re, im) = split_real_imaginary(m);
            [re, im]
        })
        .collect();
    assert!(ours.len() <= literal.len());
    assert_eq!(reduced(&ours), reduced(&literal), "{} nu={nu} t={t}", chart.descriptor());
}

#[test]
fn full_chart_of_lines_in_p3() {
    let chart = Chart::full(2, 4).unwrap();
    for t in ["0", "1", "-2", "3/2"] {
        check(&chart, "1", t);
    }
    check(&chart, "2", "1");
    check(&chart, "1.1", "-1");
}

#[test]
fn charts_anchored_at_infinity_and_zero() {
    let chart = Chart::at_infinity(2, 5, &p("1")).unwrap();
    for nu in ["1", "2", "1.1"] {
        check(&chart, nu, "2");
    }
    let chart = Chart::at_zero_and_infinity(2, 4, &p("1"), &p("1")).unwrap();
    check(&chart, "1", "-1");
    check(&chart, "1", "5");
}

#[test]
fn three_planes_with_a_two_one_condition() {
    let chart = Chart::at_zero_and_infinity(3, 6, &p("2.1"), &p("2.1")).unwrap();
    check(&chart, "1", "1");
    check(&chart, "2.1", "-1");
}

#[test]
fn conjugate_points_split_into_real_parts() {
    let chart = Chart::full(2, 4).unwrap();
    check(&chart, "1", "1+i");
    let chart = Chart::at_infinity(2, 5, &p("2")).unwrap();
    check(&chart, "1", "2-i");
}
