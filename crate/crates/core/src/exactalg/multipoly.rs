use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Coeff, GaussianRational, Rational, UniPoly};

/// Exponent vector over the ambient variable list. The derived `Ord` is the
/// lexicographic order with variable 0 largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn from_exponents(e: Vec<u16>) -> Self {
        Self(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`; caller guarantees divisibility.
    pub fn quotient_of(&self, o: &Self) -> Self {
        Self(self.0.iter().zip(&o.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, o: &Self) -> Self {
        Self(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, o: &Self) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the only variable present, if the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// Sparse multivariate polynomial, terms sorted in decreasing lex order, no
/// zero coefficients stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<C> {
    nvars: usize,
    terms: Vec<(Monomial, C)>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), C::one())
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let nvars = m.0.len();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        Self { nvars, terms: vec![(m, c)] }
    }

    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), nvars);
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_sorted_map(nvars, acc)
    }

    fn from_sorted_map(nvars: usize, acc: BTreeMap<Monomial, C>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Self { nvars, terms }
    }

    pub(crate) fn from_sorted_terms_unchecked(nvars: usize, terms: Vec<(Monomial, C)>) -> Self {
        Self { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.0[var]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[var] > 0)
    }

    /// True when every term is a power of `var` (constants included).
    pub fn is_univariate_in(&self, var: usize) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| m.0.iter().enumerate().all(|(i, &e)| i == var || e == 0))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.mul(c))).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv()),
            _ => self.clone(),
        }
    }

    /// `self + c * mono * other`, the workhorse of reduction.
    pub fn add_scaled(&self, c: &C, mono: &Monomial, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(m, x)| (m.mul(mono), x.mul(c))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((ma, _)), Some((mb, _))) => ma.cmp(mb),
            };
            match ord {
                Ordering::Greater => out.push(a.next().expect("peeked").clone()),
                Ordering::Less => out.push(b.next().expect("peeked")),
                Ordering::Equal => {
                    let (m, x) = a.next().expect("peeked");
                    let (_, y) = b.next().expect("peeked");
                    let s = x.add(&y);
                    if !s.is_zero() {
                        out.push((m.clone(), s));
                    }
                }
            }
        }
        Self { nvars: self.nvars, terms: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    pub fn eval(&self, point: &[C]) -> C {
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    v = v.mul(x);
                }
            }
            total = total.add(&v);
        }
        total
    }

    /// Replaces variable `var` by `value` (a polynomial in the same ring).
    pub fn substitute(&self, var: usize, value: &Self) -> Self {
        let maxd = self.degree_in(var) as usize;
        let mut powers = vec![Self::one(self.nvars)];
        for d in 1..=maxd {
            let next = &powers[d - 1] * value;
            powers.push(next);
        }
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.0[var] as usize;
            let mut rest = m.clone();
            rest.0[var] = 0;
            for (pm, pc) in &powers[d].terms {
                let key = rest.mul(pm);
                let v = c.mul(pc);
                match acc.get_mut(&key) {
                    Some(x) => *x = x.add(&v),
                    None => {
                        acc.insert(key, v);
                    }
                }
            }
        }
        Self::from_sorted_map(self.nvars, acc)
    }

    /// Moves to a new variable list: variable `i` becomes `mapping[i]` in a
    /// ring with `nvars` variables.
    pub fn remap_vars(&self, nvars: usize, mapping: &[usize]) -> Self {
        Self::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0u16; nvars];
                for (i, &x) in m.0.iter().enumerate() {
                    e[mapping[i]] += x;
                }
                (Monomial(e), c.clone())
            }),
        )
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Partial derivative in `var`.
    pub fn derivative(&self, var: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.0[var] > 0).map(|(m, c)| {
                let mut e = m.clone();
                let d = e.0[var];
                e.0[var] -= 1;
                (e, c.mul(&C::from_i64(d as i64)))
            }),
        )
    }

    /// Canonical text: monomials in decreasing lex order, explicit `+`/`-`,
    /// `^` powers and `*` products.
    pub fn to_text(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
                .collect();
            let mono = mono.join("*");
            let (neg, mag) = if c.is_simple() && c.is_negative_simple() {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_text = if mag.is_simple() { mag.render() } else { format!("({})", mag.render()) };
            if mono.is_empty() {
                out.push_str(&coeff_text);
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{coeff_text}*{mono}"));
            }
        }
        out
    }
}

impl MultiPoly<Rational> {
    /// Interprets a polynomial univariate in `var` as a [`UniPoly`].
    pub fn to_unipoly(&self, var: usize) -> Option<UniPoly> {
        if !self.is_univariate_in(var) {
            return None;
        }
        let deg = self.degree_in(var) as usize;
        let mut coeffs = vec![Rational::from_integer(0.into()); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[var] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn from_unipoly(nvars: usize, var: usize, p: &UniPoly) -> Self {
        Self::from_terms(
            nvars,
            p.coeffs().iter().enumerate().map(|(d, c)| {
                let mut e = vec![0u16; nvars];
                e[var] = d as u16;
                (Monomial(e), c.clone())
            }),
        )
    }

    pub fn to_gaussian(&self) -> MultiPoly<GaussianRational> {
        self.map_coeffs(|c| GaussianRational::real(c.clone()))
    }
}

/// `(Re p, Im p)` coefficientwise. For real values of the variables, `p`
/// vanishes iff both parts do.
pub fn split_real_imaginary(p: &MultiPoly<GaussianRational>) -> (MultiPoly<Rational>, MultiPoly<Rational>) {
    let re = p.map_coeffs(|c| c.re.clone());
    let im = p.map_coeffs(|c| c.im.clone());
    (re, im)
}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.to_text(&names))
    }
}

impl<'a, C: Coeff> Add<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, o: &MultiPoly<C>) -> MultiPoly<C> {
        self.add_scaled(&C::one(), &Monomial::one(self.nvars), o)
    }
}

impl<'a, C: Coeff> Sub<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, o: &MultiPoly<C>) -> MultiPoly<C> {
        self.add_scaled(&C::one().neg(), &Monomial::one(self.nvars), o)
    }
}

impl<C: Coeff> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.scale(&C::one().neg())
    }
}

impl<'a, C: Coeff> Mul<&'a MultiPoly<C>> for &'a MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, o: &MultiPoly<C>) -> MultiPoly<C> {
        if self.is_zero() || o.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        if let Some(c) = self.constant_value() {
            return o.scale(&c);
        }
        if let Some(c) = o.constant_value() {
            return self.scale(&c);
        }
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let key = ma.mul(mb);
                let v = ca.mul(cb);
                match acc.get_mut(&key) {
                    Some(x) => *x = x.add(&v),
                    None => {
                        acc.insert(key, v);
                    }
                }
            }
        }
        MultiPoly::from_sorted_map(self.nvars, acc)
    }
}
