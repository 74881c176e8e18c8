//! Buchberger's algorithm over `Q` with the Gebauer-Moeller criteria and
//! sugar pair selection, in lex or degree-reverse-lex order.
//!
//! Polynomials are always stored with their terms in lex order; the basis
//! code keeps leading terms and tails sorted by the working order on the side.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Coeff, Monomial, MultiPoly, Rational};

type Poly = MultiPoly<Rational>;
type Term = (Monomial, Rational);

/// Limits that keep a single elimination at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct GbBudget {
    pub max_pairs: usize,
    pub max_basis: usize,
    pub max_terms: usize,
}

/// Term order of a Groebner basis computation. Variable 0 is the largest.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    /// Total degree first, ties broken by the smaller exponent of the last
    /// variable that differs.
    #[default]
    Grevlex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            Self::Lex => a.cmp(b),
            Self::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                let (x, y) = (a.exponents(), b.exponents());
                (0..x.len()).rev().find(|&v| x[v] != y[v]).map_or(Ordering::Equal, |v| y[v].cmp(&x[v]))
            }),
        }
    }

    /// Leading term of `p` under this order.
    pub fn leading_term(self, p: &Poly) -> Option<&Term> {
        match self {
            Self::Lex => p.leading_term(),
            Self::Grevlex => p.terms().iter().max_by(|a, b| self.cmp(&a.0, &b.0)),
        }
    }

    pub fn leading_monomial(self, p: &Poly) -> Option<&Monomial> {
        self.leading_term(p).map(|(m, _)| m)
    }

    fn monic(self, p: &Poly) -> Poly {
        match self.leading_term(p) {
            Some((_, c)) if !c.is_one() => p.scale(&c.inv()),
            _ => p.clone(),
        }
    }

    /// Terms of `p` in increasing order.
    fn ascending(self, p: &Poly) -> Vec<Term> {
        let mut t: Vec<Term> = p.terms().iter().rev().cloned().collect();
        if self != Self::Lex {
            t.sort_by(|a, b| self.cmp(&a.0, &b.0));
        }
        t
    }

    /// Builds a polynomial from terms in decreasing order.
    fn collect(self, nvars: usize, descending: Vec<Term>) -> Poly {
        match self {
            Self::Lex => MultiPoly::from_sorted_terms_unchecked(nvars, descending),
            Self::Grevlex => MultiPoly::from_terms(nvars, descending),
        }
    }
}

impl Default for GbBudget {
    fn default() -> Self {
        Self { max_pairs: 200_000, max_basis: 5_000, max_terms: 500_000 }
    }
}

/// Merges two ascending term lists, `a + c * mono * b`.
fn merge_ascending(order: MonomialOrder, a: Vec<Term>, c: &Rational, mono: &Monomial, b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.into_iter().peekable();
    let mut bi = b.iter().map(|(m, x)| (m.mul(mono), x * c)).peekable();
    loop {
        let ord = match (ai.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some((ma, _)), Some((mb, _))) => order.cmp(ma, mb),
        };
        match ord {
            Ordering::Less => out.push(ai.next().expect("peeked")),
            Ordering::Greater => out.push(bi.next().expect("peeked")),
            Ordering::Equal => {
                let (m, x) = ai.next().expect("peeked");
                let (_, y) = bi.next().expect("peeked");
                let s = x + y;
                if !Coeff::is_zero(&s) {
                    out.push((m, s));
                }
            }
        }
    }
    out
}

/// Basis elements with their leading monomials and ascending tails, ready
/// for repeated reduction.
pub(crate) struct Reducer {
    order: MonomialOrder,
    polys: Vec<Poly>,
    lead: Vec<Monomial>,
    tails: Vec<Vec<Term>>,
    active: Vec<bool>,
}

impl Reducer {
    fn new(order: MonomialOrder) -> Self {
        Self { order, polys: Vec::new(), lead: Vec::new(), tails: Vec::new(), active: Vec::new() }
    }

    /// `g` must be monic in the reducer's order.
    fn push(&mut self, g: Poly) {
        let mut terms = self.order.ascending(&g);
        let (lead, _) = terms.pop().expect("nonzero basis element");
        self.lead.push(lead);
        self.tails.push(terms);
        self.polys.push(g);
        self.active.push(true);
    }

    pub(crate) fn from_polys(order: MonomialOrder, basis: impl IntoIterator<Item = Poly>) -> Self {
        let mut r = Self::new(order);
        for g in basis {
            r.push(order.monic(&g));
        }
        r
    }

    fn len(&self) -> usize {
        self.polys.len()
    }

    fn divisor(&self, m: &Monomial) -> Option<usize> {
        (0..self.lead.len()).find(|&i| self.active[i] && self.lead[i].divides(m))
    }

    /// Full normal form by the active elements.
    pub(crate) fn normal_form(&self, p: &Poly, max_terms: usize) -> Result<Poly> {
        let nvars = p.nvars();
        let mut rest = self.order.ascending(p);
        let mut done: Vec<Term> = Vec::new();
        while let Some((m, c)) = rest.pop() {
            match self.divisor(&m) {
                Some(g) => {
                    let q = self.lead[g].quotient_of(&m);
                    rest = merge_ascending(self.order, rest, &-c, &q, &self.tails[g]);
                    if rest.len() > max_terms {
                        return Err(Error::Resource(format!("intermediate polynomial exceeded {max_terms} terms")));
                    }
                }
                None => done.push((m, c)),
            }
        }
        Ok(self.order.collect(nvars, done))
    }
}

/// Normal form of `p` modulo a list of polynomials (reduction by leading
/// terms, fully reducing every term).
pub fn normal_form(p: &Poly, basis: &[Poly]) -> Poly {
    normal_form_in(MonomialOrder::Lex, p, basis)
}

pub fn normal_form_in(order: MonomialOrder, p: &Poly, basis: &[Poly]) -> Poly {
    Reducer::from_polys(order, basis.iter().filter(|g| !g.is_zero()).cloned())
        .normal_form(p, usize::MAX)
        .expect("no term limit")
}

/// `lcm/lm(f) f - lcm/lm(g) g` for monic `f`, `g` with leading monomials `lf`, `lg`.
fn s_polynomial(f: &Poly, lf: &Monomial, g: &Poly, lg: &Monomial, lcm: &Monomial) -> Poly {
    let one = Rational::from_integer(1.into());
    let a = f.mul_term(&lf.quotient_of(lcm), &one);
    a.add_scaled(&-one.clone(), &lg.quotient_of(lcm), g)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Reduced lexicographic Groebner basis (variable 0 largest) of the
/// generators, monic and sorted by decreasing leading monomial.
pub fn groebner_basis(generators: &[Poly], budget: GbBudget) -> Result<Vec<Poly>> {
    groebner_basis_in(MonomialOrder::Lex, generators, budget)
}

/// Reduced Groebner basis in the given order, monic and sorted by decreasing
/// leading monomial in that order.
pub fn groebner_basis_in(order: MonomialOrder, generators: &[Poly], budget: GbBudget) -> Result<Vec<Poly>> {
    let mut red = Reducer::new(order);
    let mut sugar: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed = 0usize;

    let mut pending: Vec<Poly> = generators.iter().filter(|g| !g.is_zero()).map(|g| order.monic(g)).collect();
    pending.sort_by(|a, b| order.cmp(order.leading_monomial(a).expect("nonzero"), order.leading_monomial(b).expect("nonzero")));
    for g in pending {
        let h = red.normal_form(&g, budget.max_terms)?;
        if h.is_zero() {
            continue;
        }
        insert(&mut red, &mut sugar, &mut pairs, order.monic(&h), g.total_degree());
    }

    while !pairs.is_empty() {
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::Resource(format!(
                "Groebner basis: processed {} pairs, basis size {}, {} pairs pending",
                budget.max_pairs,
                red.len(),
                pairs.len()
            )));
        }
        // sugar strategy, ties broken by the smaller lcm
        let best = (0..pairs.len())
            .min_by(|&a, &b| pairs[a].sugar.cmp(&pairs[b].sugar).then_with(|| order.cmp(&pairs[a].lcm, &pairs[b].lcm)))
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let sp = s_polynomial(&red.polys[pair.i], &red.lead[pair.i], &red.polys[pair.j], &red.lead[pair.j], &pair.lcm);
        let h = red.normal_form(&sp, budget.max_terms)?;
        if h.is_zero() {
            continue;
        }
        if red.len() >= budget.max_basis {
            return Err(Error::Resource(format!("Groebner basis grew past {} elements", budget.max_basis)));
        }
        insert(&mut red, &mut sugar, &mut pairs, order.monic(&h), pair.sugar);
    }

    let kept: Vec<Poly> = (0..red.len()).filter(|&i| red.active[i]).map(|i| red.polys[i].clone()).collect();
    reduce_basis_in(order, kept, budget.max_terms)
}

/// Adds `h` to the basis and updates the pair list with the Gebauer-Moeller
/// criteria.
fn insert(red: &mut Reducer, sugar: &mut Vec<u32>, pairs: &mut Vec<Pair>, h: Poly, h_sugar: u32) {
    let hn = red.len();
    let lh = red.order.leading_monomial(&h).expect("nonzero").clone();
    let cand: Vec<(usize, Monomial)> = (0..hn).filter(|&i| red.active[i]).map(|i| (i, red.lead[i].lcm(&lh))).collect();
    // M: drop (i,h) when another candidate's lcm properly divides its lcm;
    // F: keep one candidate per lcm
    let keep: Vec<bool> = cand
        .iter()
        .enumerate()
        .map(|(a, (_, lcm))| {
            !cand.iter().enumerate().any(|(b, (_, other))| b != a && other.divides(lcm) && (other != lcm || b < a))
        })
        .collect();
    // B: old pairs (i,j) with lm(h) | lcm(i,j) strictly inside
    pairs.retain(|p| {
        if !lh.divides(&p.lcm) {
            return true;
        }
        red.lead[p.i].lcm(&lh) == p.lcm || red.lead[p.j].lcm(&lh) == p.lcm
    });
    for (a, (i, lcm)) in cand.into_iter().enumerate() {
        // Buchberger's first criterion
        if keep[a] && !red.lead[i].coprime(&lh) {
            let di = red.lead[i].degree();
            let s = (sugar[i] - di.min(sugar[i])).max(h_sugar - lh.degree().min(h_sugar)) + lcm.degree();
            pairs.push(Pair { i, j: hn, lcm, sugar: s });
        }
    }
    // elements whose leading monomial lm(h) divides are no longer needed as
    // reducers; their pending pairs stay
    for i in 0..hn {
        if red.active[i] && lh.divides(&red.lead[i]) {
            red.active[i] = false;
        }
    }
    red.push(h);
    sugar.push(h_sugar);
}

/// Minimal, fully interreduced, monic lex basis sorted by decreasing leading monomial.
pub fn reduce_basis(g: Vec<Poly>, max_terms: usize) -> Result<Vec<Poly>> {
    reduce_basis_in(MonomialOrder::Lex, g, max_terms)
}

pub fn reduce_basis_in(order: MonomialOrder, mut g: Vec<Poly>, max_terms: usize) -> Result<Vec<Poly>> {
    g.retain(|p| !p.is_zero());
    let lead = |p: &Poly| order.leading_monomial(p).expect("nonzero").clone();
    let mut g: Vec<(Monomial, Poly)> = g.into_iter().map(|p| (lead(&p), order.monic(&p))).collect();
    g.sort_by(|a, b| order.cmp(&b.0, &a.0));
    // minimal: drop elements whose leading monomial another divides
    let minimal: Vec<(Monomial, Poly)> = g
        .iter()
        .enumerate()
        .filter(|&(i, (lm, _))| !g.iter().enumerate().any(|(j, (lq, _))| j != i && lq.divides(lm) && (lq != lm || j < i)))
        .map(|(_, x)| x.clone())
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, (lm, p)) in minimal.iter().enumerate() {
        let red = Reducer::from_polys(order, minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, (_, q))| q.clone()));
        let lead = MultiPoly::monomial(lm.clone(), Rational::from_integer(1.into()));
        let tail = red.normal_form(&(p - &lead), max_terms)?;
        reduced.push((lm.clone(), &lead + &tail));
    }
    reduced.sort_by(|a, b| order.cmp(&b.0, &a.0));
    Ok(reduced.into_iter().map(|(_, p)| p).collect())
}

/// True when every variable has a pure power among the leading monomials.
pub fn is_zero_dimensional(basis: &[Poly]) -> bool {
    is_zero_dimensional_in(MonomialOrder::Lex, basis)
}

pub fn is_zero_dimensional_in(order: MonomialOrder, basis: &[Poly]) -> bool {
    let Some(first) = basis.first() else { return false };
    if basis.iter().any(|g| g.is_constant()) {
        return true;
    }
    let nvars = first.nvars();
    (0..nvars).all(|v| basis.iter().any(|g| order.leading_monomial(g).and_then(Monomial::pure_power_var) == Some(v)))
}

/// Number of monomials outside the leading-term ideal: the number of
/// solutions counted with multiplicity. `None` for positive-dimensional ideals.
pub fn standard_monomial_count(basis: &[Poly]) -> Option<usize> {
    standard_monomials(basis).map(|b| b.len())
}

/// Monomials outside the lex leading-term ideal, in increasing lex order.
/// `None` for positive-dimensional ideals.
pub fn standard_monomials(basis: &[Poly]) -> Option<Vec<Monomial>> {
    standard_monomials_in(MonomialOrder::Lex, basis)
}

/// Monomials outside the leading-term ideal of a basis in `order`, listed
/// in increasing lex order.
pub fn standard_monomials_in(order: MonomialOrder, basis: &[Poly]) -> Option<Vec<Monomial>> {
    if basis.iter().any(|g| g.is_constant()) {
        return Some(vec![]);
    }
    if !is_zero_dimensional_in(order, basis) {
        return None;
    }
    let nvars = basis[0].nvars();
    let leads: Vec<&Monomial> = basis.iter().map(|g| order.leading_monomial(g).expect("nonzero")).collect();
    let bound: Vec<u16> = (0..nvars)
        .map(|v| {
            leads
                .iter()
                .filter(|m| m.pure_power_var() == Some(v))
                .map(|m| m.exponents()[v])
                .min()
                .expect("zero-dimensional")
        })
        .collect();
    // a prefix with a divisible monomial kills every extension, and the
    // divisibility is monotone in each exponent
    fn rec(v: usize, exps: &mut Vec<u16>, bound: &[u16], leads: &[&Monomial], out: &mut Vec<Monomial>) -> bool {
        let m = Monomial::from_exponents(exps.clone());
        if leads.iter().any(|l| l.divides(&m)) {
            return false;
        }
        if v == exps.len() {
            out.push(m);
            return true;
        }
        let mut any = false;
        for e in 0..bound[v] {
            exps[v] = e;
            if !rec(v + 1, exps, bound, leads, out) {
                break;
            }
            any = true;
        }
        exps[v] = 0;
        any
    }
    let mut out = Vec::new();
    rec(0, &mut vec![0; nvars], &bound, &leads, &mut out);
    out.sort();
    Some(out)
}
