use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::buchberger::{groebner_basis_in, standard_monomials_in, GbBudget, MonomialOrder, Reducer};
use super::PolySystem;
use crate::error::{Error, Result};
use crate::exactalg::{sturm_count_real_roots, Coeff, Monomial, MultiPoly, Rational, UniPoly};
use crate::schubert::{instance_system, InstanceSystem, OsculatingInstance};

type Poly = MultiPoly<Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: GbBudget,
    /// Seed for the shape-position randomization.
    pub seed: u64,
    /// Re-solves with a random linear change of the last variable.
    pub max_retries: usize,
    /// Randomization coefficients are drawn from `[-bound, bound]`.
    pub coeff_bound: i64,
    /// Order of the Groebner basis. Under lex the eliminant and shape basis
    /// are read off the basis; otherwise they come from linear algebra on
    /// the quotient ring, with the same result.
    pub order: MonomialOrder,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { budget: GbBudget::default(), seed: 0, max_retries: 5, coeff_bound: 20, order: MonomialOrder::Grevlex }
    }
}

/// Outcome of solving one zero-dimensional system.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    /// Distinct solutions seen by the eliminant (degree of its squarefree part).
    pub num_complex: usize,
    pub num_real: usize,
    /// Solutions counted with multiplicity (standard monomials of the basis).
    pub multiplicity_count: usize,
    pub expected: Option<u64>,
    /// Squarefree eliminant of degree `expected`, all solutions simple.
    pub transversal: bool,
    /// Squarefree part of the eliminant in the last variable.
    pub eliminant: UniPoly,
    /// Variable order used, last one eliminated.
    pub variables: Vec<String>,
    pub chart: String,
    /// `(variable, c)`: the last variable was replaced by itself plus
    /// `sum c * variable`. Empty when no randomization was needed.
    pub randomization: Vec<(String, i64)>,
    pub attempts: usize,
}

/// Every chart coordinate as a polynomial in the separating variable `y`,
/// valid modulo the squarefree eliminant.
#[derive(Clone, Debug, PartialEq)]
pub struct ShapeBasis {
    pub eliminant: UniPoly,
    /// Indexed by the system's original variable order.
    pub coords: Vec<UniPoly>,
}

impl ShapeBasis {
    /// `p(coords)` reduced modulo the eliminant.
    pub fn eval(&self, p: &Poly) -> UniPoly {
        eval_mod(p, &self.coords, &self.eliminant)
    }
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub report: SolveReport,
    pub shape: Option<ShapeBasis>,
}

#[derive(Clone, Debug)]
pub struct InstanceSolution {
    pub report: SolveReport,
    pub system: InstanceSystem,
    pub shape: Option<ShapeBasis>,
}

/// Evaluates `p` at univariate values modulo `modulus`.
pub fn eval_mod(p: &Poly, values: &[UniPoly], modulus: &UniPoly) -> UniPoly {
    let mut powers: HashMap<(usize, u16), UniPoly> = HashMap::new();
    let mut total = UniPoly::zero();
    for (m, c) in p.terms() {
        let mut term = UniPoly::constant(c.clone());
        for (v, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let pw = power_mod(&mut powers, values, v, e, modulus);
            term = (&term * &pw).rem(modulus);
        }
        total = &total + &term;
    }
    total.rem(modulus)
}

fn power_mod(cache: &mut HashMap<(usize, u16), UniPoly>, values: &[UniPoly], v: usize, e: u16, modulus: &UniPoly) -> UniPoly {
    if let Some(p) = cache.get(&(v, e)) {
        return p.clone();
    }
    let p = if e == 1 {
        values[v].rem(modulus)
    } else {
        let prev = power_mod(cache, values, v, e - 1, modulus);
        (&prev * &values[v]).rem(modulus)
    };
    cache.insert((v, e), p.clone());
    p
}

/// The univariate element of a reduced lex basis in the last variable.
pub fn eliminant(basis: &[Poly], last: usize) -> Result<UniPoly> {
    if let Some(c) = basis.iter().find(|g| g.is_constant()) {
        return Ok(UniPoly::constant(c.constant_value().expect("constant")));
    }
    basis
        .iter()
        .find(|g| g.is_univariate_in(last))
        .and_then(|g| g.to_unipoly(last))
        .ok_or_else(|| Error::Degenerate("no univariate element: the ideal is not zero-dimensional".into()))
}

/// Quotient-ring coordinates with respect to the standard monomials.
struct Quotient<'a> {
    reducer: Reducer,
    standard: &'a [Monomial],
    max_terms: usize,
}

impl Quotient<'_> {
    fn coords(&self, p: &Poly) -> Result<Vec<Rational>> {
        let nf = self.reducer.normal_form(p, self.max_terms)?;
        let mut v = vec![Rational::zero(); self.standard.len()];
        for (m, c) in nf.terms() {
            let i = self.standard.binary_search(m).map_err(|_| Error::Degenerate("normal form left the standard basis".into()))?;
            v[i] = c.clone();
        }
        Ok(v)
    }
}

/// Row echelon form that remembers each row as a combination of the inputs.
struct TrackedEchelon {
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
}

impl TrackedEchelon {
    /// Reduces `v` against the rows; returns the residue and the combination
    /// of inputs subtracted.
    fn reduce(&self, mut v: Vec<Rational>, ninputs: usize) -> (Vec<Rational>, Vec<Rational>) {
        let mut used = vec![Rational::zero(); ninputs];
        for (pivot, row, combo) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
            for (u, c) in used.iter_mut().zip(combo) {
                if !c.is_zero() {
                    *u += &f * c;
                }
            }
        }
        (v, used)
    }
}

/// Minimal polynomial of multiplication by `y` on the quotient ring and, when
/// its powers span the quotient, every variable as a polynomial in `y`.
fn quotient_shape(q: &Quotient, y: &Poly) -> Result<(UniPoly, Option<Vec<UniPoly>>)> {
    let dim = q.standard.len();
    let nvars = y.nvars();
    let mut ech = TrackedEchelon { rows: Vec::new() };
    let mut power = MultiPoly::one(nvars);
    let mut j = 0;
    let minpoly = loop {
        let v = q.coords(&power)?;
        let (res, used) = ech.reduce(v, dim + 1);
        match res.iter().position(|x| !x.is_zero()) {
            None => {
                // y^j = sum used_i y^i
                let mut c: Vec<Rational> = used.into_iter().map(|x| -x).collect();
                c.truncate(j + 1);
                c[j] = Rational::one();
                break UniPoly::new(c);
            }
            Some(pivot) => {
                let inv = res[pivot].recip();
                let row: Vec<Rational> = res.iter().map(|x| x * &inv).collect();
                let mut combo: Vec<Rational> = used.into_iter().map(|x| -x * &inv).collect();
                combo[j] += &inv;
                ech.rows.push((pivot, row, combo));
            }
        }
        // next power, reduced
        let mut next = MultiPoly::zero(nvars);
        for (m, c) in y.terms() {
            next = next.add_scaled(c, m, &power);
        }
        power = q.reducer.normal_form(&next, q.max_terms)?;
        j += 1;
    };
    if minpoly.degree() != Some(dim) {
        return Ok((minpoly, None));
    }
    let coords = (0..nvars)
        .map(|v| {
            let (res, used) = ech.reduce(q.coords(&MultiPoly::var(nvars, v))?, dim + 1);
            debug_assert!(res.iter().all(Coeff::is_zero));
            Ok(UniPoly::new(used[..dim].to_vec()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((minpoly, Some(coords)))
}

/// Reads `x_i = p_i(y)` off a reduced basis in shape position.
fn extract_shape(basis: &[Poly], nvars: usize, elim: &UniPoly) -> Option<Vec<UniPoly>> {
    let last = nvars - 1;
    let mut coords = vec![None; nvars];
    coords[last] = Some(UniPoly::monomial(Rational::from_integer(1.into()), 1));
    for g in basis {
        if g.is_univariate_in(last) {
            continue;
        }
        let lm = g.leading_monomial()?;
        let v = lm.pure_power_var()?;
        if lm.exponents()[v] != 1 || coords[v].is_some() {
            return None;
        }
        let tail = MultiPoly::from_terms(nvars, g.terms()[1..].iter().cloned());
        let p = tail.to_unipoly(last)?;
        coords[v] = Some((-&p).rem(elim));
    }
    coords.into_iter().collect()
}

fn squarefree(p: &UniPoly) -> Result<UniPoly> {
    if p.is_constant() {
        Ok(p.clone())
    } else {
        p.squarefree_part()
    }
}

/// Solves a zero-dimensional system: Groebner basis, eliminant in the
/// variable used by the fewest generators, squarefree part, Sturm count. When
/// the eliminant loses degree against the multiplicity count, the last
/// variable is replaced by itself plus a random small-integer combination of
/// the others and the eliminant recomputed.
///
/// Every eliminant other than the one read off a lex basis is the minimal
/// polynomial of the eliminated variable on the quotient ring, which is the
/// univariate element of the (substituted) system's lex basis; the shape
/// basis comes from the same linear algebra, so one Buchberger run suffices.
pub fn solve_system(system: &PolySystem, expected: Option<u64>, opts: &SolveOptions) -> Result<Solution> {
    let nv = system.nvars();
    let reduced = system.linearly_reduced();
    if nv == 0 {
        let inconsistent = reduced.generators().iter().any(|g| !g.is_zero());
        let n = usize::from(!inconsistent);
        let report = SolveReport {
            num_complex: n,
            num_real: n,
            multiplicity_count: n,
            expected,
            transversal: expected.is_none_or(|e| e == n as u64),
            eliminant: if inconsistent { UniPoly::one() } else { UniPoly::from_i64(&[0, 1]) },
            variables: vec![],
            chart: String::new(),
            randomization: vec![],
            attempts: 1,
        };
        return Ok(Solution { report, shape: Some(ShapeBasis { eliminant: UniPoly::from_i64(&[0, 1]), coords: vec![] }) });
    }
    // last variable: used by the fewest generators, ties to the later one
    let usage = |v: usize| reduced.generators().iter().filter(|g| g.uses_var(v)).count();
    let chosen = (0..nv).rev().min_by_key(|&v| usage(v)).expect("nv > 0");
    let mut perm = vec![0; nv];
    let mut next = 0;
    for (v, slot) in perm.iter_mut().enumerate() {
        if v == chosen {
            *slot = nv - 1;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let base = reduced.permuted(&perm);
    let last = nv - 1;

    let basis = groebner_basis_in(opts.order, base.generators(), opts.budget)?;
    let standard = standard_monomials_in(opts.order, &basis)
        .ok_or_else(|| Error::Degenerate("positive-dimensional solution set".into()))?;
    let count = standard.len();
    let quotient = Quotient {
        reducer: Reducer::from_polys(opts.order, basis.iter().cloned()),
        standard: &standard,
        max_terms: opts.budget.max_terms,
    };
    let (mut elim, mut new_coords) = match opts.order {
        MonomialOrder::Lex => {
            let elim = squarefree(&eliminant(&basis, last)?)?;
            let coords = if elim.degree() == Some(count) && count > 0 { extract_shape(&basis, nv, &elim) } else { None };
            (elim, coords)
        }
        _ if count == 0 => (UniPoly::one(), None),
        _ => {
            let (minpoly, coords) = quotient_shape(&quotient, &MultiPoly::var(nv, last))?;
            let elim = squarefree(&minpoly)?;
            let coords = coords.filter(|_| elim.degree() == Some(count));
            (elim, coords)
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut tried: Vec<Vec<i64>> = vec![vec![0; last]];
    let mut coeffs = vec![0i64; last];
    let mut attempts = 1;
    if elim.degree().unwrap_or(0) < count && last > 0 {
        while attempts <= opts.max_retries {
            attempts += 1;
            // new random direction, never repeated, never zero
            loop {
                coeffs = (0..last).map(|_| rng.gen_range(-opts.coeff_bound..=opts.coeff_bound)).collect();
                if !tried.contains(&coeffs) {
                    break;
                }
            }
            tried.push(coeffs.clone());
            // old last = y + sum c_i x_i, so y = last - sum c_i x_i
            let mut y = MultiPoly::var(nv, last);
            for (i, &c) in coeffs.iter().enumerate() {
                y = &y - &MultiPoly::var(nv, i).scale(&Rational::from_integer(c.into()));
            }
            let (minpoly, coords) = quotient_shape(&quotient, &y)?;
            elim = squarefree(&minpoly)?;
            new_coords = coords.filter(|_| elim.degree() == Some(count));
            if minpoly.degree() == Some(count) {
                break;
            }
        }
    }

    let num_complex = elim.degree().unwrap_or(0);
    let num_real = if num_complex == 0 { 0 } else { sturm_count_real_roots(&elim)? };
    let separated = num_complex == count;
    let transversal = separated && expected.is_none_or(|e| e == count as u64);
    let randomized = coeffs.iter().any(|&c| c != 0);
    let shape = new_coords.map(|new_coords| {
        let coords = (0..nv).map(|v| new_coords[perm[v]].clone()).collect();
        ShapeBasis { eliminant: elim.clone(), coords }
    });
    let report = SolveReport {
        num_complex,
        num_real,
        multiplicity_count: count,
        expected,
        transversal,
        eliminant: elim,
        variables: base.variables().to_vec(),
        chart: String::new(),
        randomization: if randomized {
            base.variables()[..last].iter().cloned().zip(coeffs.iter().copied()).filter(|(_, c)| *c != 0).collect()
        } else {
            vec![]
        },
        attempts,
    };
    Ok(Solution { report, shape })
}

pub fn solve_instance(instance: &OsculatingInstance, expected: u64, opts: &SolveOptions) -> Result<SolveReport> {
    solve_instance_detailed(instance, expected, opts).map(|s| s.report)
}

/// Like [`solve_instance`], keeping the chart system and shape basis.
pub fn solve_instance_detailed(
    instance: &OsculatingInstance,
    expected: u64,
    opts: &SolveOptions,
) -> Result<InstanceSolution> {
    let system = instance_system(instance)?;
    let poly_system = PolySystem::new(system.var_names(), system.equations.clone())?;
    let Solution { mut report, shape } = solve_system(&poly_system, Some(expected), opts)?;
    report.chart = system.chart.descriptor();
    Ok(InstanceSolution { report, system, shape })
}
