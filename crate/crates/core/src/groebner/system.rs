use crate::error::{invalid, Result};
use crate::exactalg::{Coeff, Monomial, MultiPoly, Rational};

use super::buchberger::{groebner_basis, GbBudget};

type Poly = MultiPoly<Rational>;

/// Generators over `Q` in an ordered list of variables; the lex order makes
/// the first variable largest.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySystem {
    variables: Vec<String>,
    generators: Vec<Poly>,
}

impl PolySystem {
    pub fn new(variables: Vec<String>, generators: Vec<Poly>) -> Result<Self> {
        let nv = variables.len();
        if let Some(g) = generators.iter().find(|g| g.nvars() != nv) {
            return invalid(format!("generator in {} variables, system declares {nv}", g.nvars()));
        }
        Ok(Self { variables, generators })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    /// Reorders variables: new position of old variable `i` is `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut names = vec![String::new(); self.nvars()];
        for (i, &p) in perm.iter().enumerate() {
            names[p] = self.variables[i].clone();
        }
        let gens = self.generators.iter().map(|g| g.remap_vars(self.nvars(), perm)).collect();
        Self { variables: names, generators: gens }
    }

    /// Row-reduces the coefficient matrix of the generators (columns are
    /// monomials in decreasing lex order), dropping dependent generators.
    pub fn linearly_reduced(&self) -> Self {
        Self { variables: self.variables.clone(), generators: linear_interreduce(&self.generators) }
    }

    /// Text dump in canonical polynomial form, one generator per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("variables: {}\n", self.variables.join(", "));
        for g in &self.generators {
            out.push_str(&g.to_text(&self.variables));
            out.push('\n');
        }
        out
    }
}

/// Free-function form of the lex Groebner basis of a system.
pub fn buchberger_lex(system: &PolySystem) -> Result<Vec<Poly>> {
    groebner_basis(system.generators(), GbBudget::default())
}

/// Gauss-Jordan elimination on generators viewed as coefficient vectors.
pub fn linear_interreduce(gens: &[Poly]) -> Vec<Poly> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else { return Vec::new() };
    let nvars = first.nvars();
    let mut monos: Vec<Monomial> = gens.iter().flat_map(|g| g.terms().iter().map(|(m, _)| m.clone())).collect();
    monos.sort_by(|a, b| b.cmp(a));
    monos.dedup();
    let col = |m: &Monomial| monos.binary_search_by(|x| m.cmp(x)).expect("present");
    let mut rows: Vec<Vec<Rational>> = gens
        .iter()
        .map(|g| {
            let mut r = vec![<Rational as Coeff>::zero(); monos.len()];
            for (m, c) in g.terms() {
                r[col(m)] = c.clone();
            }
            r
        })
        .collect();
    let mut pivot_row = 0;
    for c in 0..monos.len() {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !Coeff::is_zero(&rows[r][c])) else { continue };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][c].inv();
        for x in rows[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || Coeff::is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow).skip(c) {
                if !Coeff::is_zero(y) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows.into_iter()
        .map(|r| {
            MultiPoly::from_terms(
                nvars,
                r.into_iter().enumerate().filter(|(_, c)| !Coeff::is_zero(c)).map(|(j, c)| (monos[j].clone(), c)),
            )
        })
        .collect()
}
