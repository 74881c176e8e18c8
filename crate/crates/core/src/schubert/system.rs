use super::flag::flag_annihilator;
use super::{Chart, ChartKind, Mobius, OsculatingInstance, OsculationPoint};
use crate::combinat::{subsets, Partition};
use crate::error::{invalid, Result};
use crate::exactalg::{split_real_imaginary, Coeff, GaussianRational, MultiPoly, PolyMatrix, Rational};

/// `M * B` for a polynomial matrix and a constant matrix given by rows.
fn times_constant<C: Coeff>(m: &PolyMatrix<C>, b: &[Vec<C>]) -> PolyMatrix<C> {
    let nv = m.nvars();
    let cols = b.first().map_or(0, Vec::len);
    let rows = m
        .rows()
        .iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = MultiPoly::zero(nv);
                    for (c, entry) in row.iter().enumerate() {
                        if !entry.is_zero() && !b[c][j].is_zero() {
                            acc = &acc + &entry.scale(&b[c][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(nv, rows).expect("rectangular")
}

fn all_minors<C: Coeff>(m: &PolyMatrix<C>, size: usize, out: &mut Vec<MultiPoly<C>>) -> Result<()> {
    for rs in subsets(m.nrows(), size) {
        for cs in subsets(m.ncols(), size) {
            let det = m.minor(&rs, &cs)?;
            if !det.is_zero() {
                out.push(det);
            }
        }
    }
    Ok(())
}

/// Rank conditions `dim(H ∩ F_d(t)) >= i`, `d = n-k+i-nu_i`, written as the
/// vanishing of the `(k-i+1)`-minors of `M * B`, where the columns of `B`
/// span the annihilator of `F_d(t)`. This generates the same ideal as the
/// `(n-nu_i+1)`-minors of the stacked matrix `[M; F_d(t)]`
/// (see [`stacked_condition_minors`]) with far fewer, smaller polynomials.
fn reduced_minors<C: Coeff>(m: &PolyMatrix<C>, nu: &Partition, t: Option<&C>) -> Result<Vec<MultiPoly<C>>> {
    let (k, n) = (m.nrows(), m.ncols());
    let mut out = Vec::new();
    for i in 1..=k {
        let nu_i = nu.part(i - 1) as usize;
        if nu_i == 0 {
            break;
        }
        let d = n - k + i - nu_i;
        let b = flag_annihilator(t, d, n);
        all_minors(&times_constant(m, &b), k - i + 1, &mut out)?;
    }
    Ok(out)
}

fn check_condition(chart: &Chart, nu: &Partition, t: &OsculationPoint) -> Result<()> {
    if nu.is_empty() {
        return invalid("empty condition has no equations");
    }
    if !nu.fits(chart.k(), (chart.n() - chart.k()) as u32) {
        return invalid(format!("{nu} does not fit Gr({},{})", chart.k(), chart.n()));
    }
    let at_inf = !matches!(chart.kind(), ChartKind::Full);
    let at_zero = matches!(chart.kind(), ChartKind::AtZeroAndInfinity { .. });
    if (at_inf && t.is_infinity()) || (at_zero && t.is_zero()) {
        return invalid(format!("point {t} is an anchor of chart {chart}; fold its condition into the chart"));
    }
    Ok(())
}

/// Equations over `Q` for `X_nu(t)` in the coordinates of `chart`. For a
/// nonreal `t` the real and imaginary parts are returned, which together cut
/// out `X_nu(t) ∩ X_nu(conj t)`.
pub fn condition_equations(chart: &Chart, nu: &Partition, t: &OsculationPoint) -> Result<Vec<MultiPoly<Rational>>> {
    check_condition(chart, nu, t)?;
    let m = chart.matrix();
    match t {
        OsculationPoint::Infinity => reduced_minors(&m, nu, None),
        OsculationPoint::Finite(z) if z.is_real() => reduced_minors(&m, nu, Some(&z.re)),
        OsculationPoint::Finite(z) => {
            let mg = m.map(|p| p.to_gaussian());
            let mut out = Vec::new();
            for p in reduced_minors(&mg, nu, Some(z))? {
                let (re, im) = split_real_imaginary(&p);
                out.extend([re, im].into_iter().filter(|q| !q.is_zero()));
            }
            Ok(out)
        }
    }
}

/// The direct formulation: every minor of size `n-nu_i+1` of `[M; F_d(t)]`,
/// over `Q[i]`. Kept for cross-checking [`condition_equations`].
pub fn stacked_condition_minors(
    chart: &Chart,
    nu: &Partition,
    t: &OsculationPoint,
) -> Result<Vec<MultiPoly<GaussianRational>>> {
    check_condition(chart, nu, t)?;
    let (k, n) = (chart.k(), chart.n());
    let m = chart.matrix().map(|p| p.to_gaussian());
    let nv = m.nvars();
    let mut out = Vec::new();
    for i in 1..=k {
        let nu_i = nu.part(i - 1) as usize;
        if nu_i == 0 {
            break;
        }
        let d = n - k + i - nu_i;
        let flag = super::flag_matrix(t, d, n);
        let flag = PolyMatrix::from_constants(nv, &flag);
        all_minors(&m.stack(&flag)?, n - nu_i + 1, &mut out)?;
    }
    Ok(out)
}

/// An osculating instance written in local coordinates.
#[derive(Clone, Debug)]
pub struct InstanceSystem {
    pub chart: Chart,
    /// Change of coordinates applied to the osculation points.
    pub transform: Mobius,
    /// Osculation points after `transform`, aligned with the instance.
    pub points: Vec<OsculationPoint>,
    /// Conditions aligned with `points`.
    pub conditions: Vec<Partition>,
    /// Indices of the conditions absorbed by the chart (at infinity, at zero).
    pub anchors: (Option<usize>, Option<usize>),
    pub equations: Vec<MultiPoly<Rational>>,
}

impl InstanceSystem {
    pub fn var_names(&self) -> Vec<String> {
        self.chart.var_names()
    }
}

/// Picks a chart and writes the remaining conditions as equations over `Q`.
///
/// The heaviest condition at a real point goes to infinity and the next one
/// to zero, after a real change of coordinates when needed. Without real
/// points the full chart is used.
pub fn instance_system(instance: &OsculatingInstance) -> Result<InstanceSystem> {
    let problem = instance.problem();
    let (k, n) = (problem.k(), problem.n());
    let assignment = instance.assignment();
    let mut real: Vec<usize> = (0..assignment.len()).filter(|&i| assignment[i].1.is_real()).collect();
    let weight = |i: usize| assignment[i].0.weight();
    real.sort_by_key(|&i| (std::cmp::Reverse(weight(i)), !assignment[i].1.is_infinity(), i));

    let mut chosen: Option<(Chart, Mobius, (Option<usize>, Option<usize>))> = None;
    if let Some(&inf_idx) = real.first() {
        let lambda = &assignment[inf_idx].0;
        let mut rest: Vec<usize> = real[1..].to_vec();
        rest.sort_by_key(|&i| (std::cmp::Reverse(weight(i)), !assignment[i].1.is_zero(), i));
        for &zero_idx in &rest {
            if let Ok(chart) = Chart::at_zero_and_infinity(k, n, &assignment[zero_idx].0, lambda) {
                let mob = Mobius::anchoring(&assignment[inf_idx].1, Some(&assignment[zero_idx].1))?;
                chosen = Some((chart, mob, (Some(inf_idx), Some(zero_idx))));
                break;
            }
        }
        if chosen.is_none() {
            let chart = Chart::at_infinity(k, n, lambda)?;
            let mob = Mobius::anchoring(&assignment[inf_idx].1, None)?;
            chosen = Some((chart, mob, (Some(inf_idx), None)));
        }
    }
    let (chart, transform, anchors) = match chosen {
        Some(c) => c,
        None => (Chart::full(k, n)?, Mobius::identity(), (None, None)),
    };
    let points: Vec<OsculationPoint> = assignment.iter().map(|(_, p)| transform.apply(p)).collect();

    let mut equations = Vec::new();
    for (i, (nu, _)) in assignment.iter().enumerate() {
        if Some(i) == anchors.0 || Some(i) == anchors.1 {
            continue;
        }
        let t = &points[i];
        // one point of each conjugate pair carries both
        if let Some(z) = t.finite() {
            if num_traits::Signed::is_negative(&z.im) {
                continue;
            }
        }
        equations.extend(condition_equations(&chart, nu, t)?);
    }
    let conditions = assignment.into_iter().map(|(p, _)| p).collect();
    Ok(InstanceSystem { chart, transform, points, conditions, anchors, equations })
}
