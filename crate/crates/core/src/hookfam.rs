//! The family `(box_{k,n}, 1^(n-1))`: a rectangle `(n-k-1)^(k-1)` osculating
//! at infinity and `n-1` simple conditions at finite points. Its solutions
//! are the factorizations `f'(t) = g(t) h(t)` into monic factors of degrees
//! `k-1` and `n-k-1`, where `f` vanishes at the finite points, so the number
//! of real solutions is `nu(k, n, r)` with `r` the number of real roots of
//! `f'`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::{binomial, hook_complement, nu, SchubertProblemSpec};
use crate::error::{invalid, Error, Result};
use crate::exactalg::{
    factorial, inv_factorial, rat, sturm_count_real_roots, Coeff, Matrix, Monomial, MultiPoly, PolyMatrix, Rational,
    UniPoly,
};
use crate::groebner::PolySystem;
use crate::schubert::{flag_rows, Mobius, OsculatingInstance, OsculationPoint};

type Poly = MultiPoly<Rational>;

/// An instance of the hook family with the rectangle at infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct HookInstance {
    k: usize,
    n: usize,
    points: Vec<OsculationPoint>,
    f: UniPoly,
}

impl HookInstance {
    /// `points` are the `n-1` finite osculation points of the simple
    /// conditions; they must be distinct and closed under conjugation.
    pub fn new(k: usize, n: usize, points: Vec<OsculationPoint>) -> Result<Self> {
        hook_complement(k, n)?;
        if points.len() != n - 1 {
            return invalid(format!("hook family GR({k},{n}) needs {} points, got {}", n - 1, points.len()));
        }
        if points.iter().any(OsculationPoint::is_infinity) {
            return invalid("hook family points must be finite; infinity carries the rectangle");
        }
        // reuse the distinctness and conjugation checks
        let problem = SchubertProblemSpec::hook_family(k, n)?;
        let mut all = vec![OsculationPoint::Infinity];
        all.extend(points.iter().cloned());
        OsculatingInstance::new(problem, all)?;

        let mut f = UniPoly::one();
        for p in &points {
            let z = p.finite().expect("finite");
            if z.is_real() {
                f = &f * &UniPoly::linear_root(&z.re);
            } else if z.im > Rational::zero() {
                // (t - z)(t - conj z)
                let q = UniPoly::new(vec![z.norm_sq(), -(&z.re + &z.re), Rational::one()]);
                f = &f * &q;
            }
        }
        Ok(Self { k, n, points, f })
    }

    /// Moves the rectangle's point to infinity by a real Moebius map; the
    /// number of real solutions is unchanged.
    pub fn from_osculating(instance: &OsculatingInstance) -> Result<Self> {
        let problem = instance.problem();
        let (k, n) = (problem.k(), problem.n());
        if *problem != SchubertProblemSpec::hook_family(k, n)? {
            return invalid(format!("{problem} is not the hook family problem for GR({k},{n})"));
        }
        let pts = instance.points();
        let m = Mobius::anchoring(&pts[0], None)?;
        Self::new(k, n, pts[1..].iter().map(|p| m.apply(p)).collect())
    }

    pub fn to_osculating(&self) -> OsculatingInstance {
        let problem = SchubertProblemSpec::hook_family(self.k, self.n).expect("validated");
        let mut all = vec![OsculationPoint::Infinity];
        all.extend(self.points.iter().cloned());
        OsculatingInstance::new(problem, all).expect("validated")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[OsculationPoint] {
        &self.points
    }

    /// `prod (t - t_i)`, rational by conjugation closure.
    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    /// `f' / (n-1)`: monic of degree `n-2`.
    pub fn monic_derivative(&self) -> UniPoly {
        self.f.derivative().monic()
    }

    /// Number of real osculation points of the simple conditions.
    pub fn real_point_count(&self) -> usize {
        self.points.iter().filter(|p| p.is_real()).count()
    }

    /// Distinct real roots of `f'`; errors when `f'` has a repeated root.
    pub fn derivative_real_roots(&self) -> Result<usize> {
        let d = self.f.derivative();
        if !d.is_squarefree() {
            return Err(Error::Degenerate("f' has a repeated root".into()));
        }
        sturm_count_real_roots(&d)
    }
}

/// A factorization `g h = f' / (n-1)` into monic factors.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationPair {
    pub g: UniPoly,
    pub h: UniPoly,
}

impl FactorizationPair {
    pub fn new(instance: &HookInstance, g: UniPoly, h: UniPoly) -> Result<Self> {
        let (k, n) = (instance.k, instance.n);
        let monic = |p: &UniPoly| p.leading_coeff() == Rational::one();
        if g.degree() != Some(k - 1) || h.degree() != Some(n - k - 1) || !monic(&g) || !monic(&h) {
            return invalid(format!("factors must be monic of degrees {} and {}", k - 1, n - k - 1));
        }
        if &g * &h != instance.monic_derivative() {
            return invalid("g h differs from f'/(n-1)");
        }
        Ok(Self { g, h })
    }
}

/// `nu(k, n, r)` with `r` the number of real roots of `f'`.
pub fn predicted_real_count(instance: &HookInstance) -> Result<u64> {
    let r = instance.derivative_real_roots()?;
    nu(instance.k, instance.n, r)
}

/// `c_i = (-1)^(n-k-i+1) (n-k-i)!` for `i = 1..=n-k`.
fn coefficient_c(k: usize, n: usize, i: usize) -> Rational {
    let e = n - k - i;
    let v = Rational::from_integer(factorial(e as u32));
    if (e + 1) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// The `k x n` matrix `H(f, g, h)` parameterizing the Schubert cell of the
/// rectangle at infinity. `g = (g_0, ..., g_(n-k-1))` with `g_(n-k-1) = 1`,
/// `h = (h_0, ..., h_(k-1))` with `h_(k-1) = 1` and the other `h_j` nonzero.
///
/// Row 1 is `c_1 g_(n-k-1), ..., c_(n-k) g_0, f_0/h_0, 0, ...`; row `j >= 2`
/// has `-(j-1)` in column `n-k+j-1` and `h_(j-2)/h_(j-1)` in column `n-k+j`.
pub fn h_matrix(k: usize, n: usize, f0: &Rational, g: &[Rational], h: &[Rational]) -> Result<Matrix<Rational>> {
    hook_complement(k, n)?;
    let one = Rational::one();
    if g.len() != n - k || g[n - k - 1] != one {
        return invalid(format!("g must have {} coefficients ending in 1", n - k));
    }
    if h.len() != k || h[k - 1] != one {
        return invalid(format!("h must have {k} coefficients ending in 1"));
    }
    if h.iter().any(Coeff::is_zero) {
        return invalid("h_0, ..., h_(k-2) must be nonzero");
    }
    let mut m = Matrix::zeros(k, n);
    let p = n - k;
    for i in 1..=p {
        m.set(0, i - 1, &coefficient_c(k, n, i) * &g[p - i]);
    }
    m.set(0, p, f0 / &h[0]);
    for j in 2..=k {
        m.set(j - 1, p + j - 2, rat(-(j as i64 - 1), 1));
        m.set(j - 1, p + j - 1, &h[j - 2] / &h[j - 1]);
    }
    Ok(m)
}

/// Variable layout of the symbolic identity: `f_0, g_0..g_(n-k-2), h_0..h_(k-2), t`.
struct IdentityVars {
    nvars: usize,
    g0: usize,
    h0: usize,
    t: usize,
}

impl IdentityVars {
    fn new(k: usize, n: usize) -> Self {
        let g0 = 1;
        let h0 = g0 + (n - k - 1);
        let t = h0 + (k - 1);
        Self { nvars: t + 1, g0, h0, t }
    }

    fn g(&self, k: usize, n: usize, i: usize) -> Poly {
        if i == n - k - 1 {
            MultiPoly::one(self.nvars)
        } else {
            MultiPoly::var(self.nvars, self.g0 + i)
        }
    }

    fn h(&self, k: usize, j: usize) -> Poly {
        if j == k - 1 {
            MultiPoly::one(self.nvars)
        } else {
            MultiPoly::var(self.nvars, self.h0 + j)
        }
    }
}

/// Rows of `F_d(t)` with `t` a variable: entry `(a, b)` is `t^(b-a)/(b-a)!`.
fn symbolic_flag_rows(nvars: usize, t: usize, d: usize, n: usize) -> Vec<Vec<Poly>> {
    (0..d)
        .map(|a| {
            (0..n)
                .map(|b| {
                    if b < a {
                        return MultiPoly::zero(nvars);
                    }
                    let mut exps = vec![0u16; nvars];
                    exps[t] = (b - a) as u16;
                    MultiPoly::monomial(Monomial::from_exponents(exps), inv_factorial((b - a) as u32))
                })
                .collect()
        })
        .collect()
}

/// Symbolic check of
/// `det [H(f,g,h); F_(n-k)(t)] = (-1)^(k(n-k)) (sum t^(i+j+1)/(i+j+1) g_i h_j + f_0)`
/// after scaling row 1 of `H` by `h_0` and row `j` by `h_(j-1)`, which
/// multiplies the left side by `h_0 ... h_(k-2)`.
///
/// `perturb = Some(i)` adds one to `c_i`; the identity must then fail.
pub fn verify_det_identity_with(k: usize, n: usize, perturb: Option<usize>, max_n: usize) -> Result<bool> {
    hook_complement(k, n)?;
    if n > max_n {
        return Err(Error::Resource(format!("symbolic identity capped at n <= {max_n}, got n = {n}")));
    }
    let v = IdentityVars::new(k, n);
    let nv = v.nvars;
    let p = n - k;
    let konst = |q: Rational| MultiPoly::constant(nv, q);
    let mut rows: Vec<Vec<Poly>> = vec![vec![MultiPoly::zero(nv); n]; k];
    for i in 1..=p {
        let mut c = coefficient_c(k, n, i);
        if perturb == Some(i) {
            c += Rational::one();
        }
        rows[0][i - 1] = &(&v.g(k, n, p - i) * &v.h(k, 0)) * &konst(c);
    }
    rows[0][p] = MultiPoly::var(nv, 0);
    for j in 2..=k {
        rows[j - 1][p + j - 2] = &v.h(k, j - 1) * &konst(rat(-(j as i64 - 1), 1));
        rows[j - 1][p + j - 1] = v.h(k, j - 2);
    }
    rows.extend(symbolic_flag_rows(nv, v.t, p, n));
    let lhs = PolyMatrix::new(nv, rows)?.determinant()?;

    let mut sum = MultiPoly::var(nv, 0);
    for i in 0..p {
        for j in 0..k {
            let e = (i + j + 1) as u16;
            let mut exps = vec![0u16; nv];
            exps[v.t] = e;
            let tp = MultiPoly::monomial(Monomial::from_exponents(exps), rat(1, e as i64));
            sum = &sum + &(&tp * &(&v.g(k, n, i) * &v.h(k, j)));
        }
    }
    let mut rhs = if (k * p) % 2 == 1 { -&sum } else { sum };
    for j in 0..k - 1 {
        rhs = &rhs * &v.h(k, j);
    }
    Ok(lhs == rhs)
}

/// Symbolic verification with the default cap `n <= 9`.
pub fn verify_det_identity(k: usize, n: usize) -> Result<bool> {
    verify_det_identity_with(k, n, None, 9)
}

/// Checks the identity for the unscaled matrix [`h_matrix`] at random
/// rational parameters and times, for sizes beyond the symbolic cap.
pub fn spot_check_det_identity(k: usize, n: usize, trials: usize, seed: u64) -> Result<bool> {
    hook_complement(k, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |nonzero: bool| loop {
        let q = rat(rng.gen_range(-30..=30), rng.gen_range(1..=7));
        if !nonzero || !Coeff::is_zero(&q) {
            return q;
        }
    };
    let p = n - k;
    for _ in 0..trials {
        let f0 = draw(false);
        let mut g: Vec<Rational> = (0..p - 1).map(|_| draw(false)).collect();
        g.push(Rational::one());
        let mut h: Vec<Rational> = (0..k - 1).map(|_| draw(true)).collect();
        h.push(Rational::one());
        let t = draw(false);
        let mut rows = h_matrix(k, n, &f0, &g, &h)?.rows().to_vec();
        rows.extend(flag_rows(&t, p, n));
        let lhs = Matrix::new(rows)?.determinant()?;
        let mut rhs = f0.clone();
        for (i, gi) in g.iter().enumerate() {
            for (j, hj) in h.iter().enumerate() {
                let e = (i + j + 1) as i32;
                rhs += &(&(t.pow(e) / Rational::from_integer((e as i64).into())) * gi) * hj;
            }
        }
        if (k * p) % 2 == 1 {
            rhs = -rhs;
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Names of the unknowns of [`direct_system`]: `g0..g(k-2), h0..h(n-k-2)`.
pub fn direct_variables(k: usize, n: usize) -> Vec<String> {
    (0..k - 1).map(|i| format!("g{i}")).chain((0..n - k - 1).map(|j| format!("h{j}"))).collect()
}

/// The coefficientwise identity `g h = f'/(n-1)` with `g, h` monic of
/// degrees `k-1` and `n-k-1`: `n-2` equations in `n-2` unknowns.
pub fn direct_system(instance: &HookInstance) -> PolySystem {
    let (k, n) = (instance.k, instance.n);
    let nv = n - 2;
    let coeffs = |off: usize, deg: usize| -> Vec<Poly> {
        (0..deg).map(|i| MultiPoly::var(nv, off + i)).chain(std::iter::once(MultiPoly::one(nv))).collect()
    };
    let g = coeffs(0, k - 1);
    let h = coeffs(k - 1, n - k - 1);
    let target = instance.monic_derivative();
    let equations = (0..n - 2)
        .map(|d| {
            let mut e = MultiPoly::constant(nv, -target.coeff(d));
            for (i, gi) in g.iter().enumerate() {
                if d >= i && d - i < h.len() {
                    e = &e + &(gi * &h[d - i]);
                }
            }
            e
        })
        .collect();
    PolySystem::new(direct_variables(k, n), equations).expect("consistent variable count")
}

/// Ordered factorizations of a degree-`2m` real polynomial with distinct
/// roots into two monic degree-`m` factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorizationCensus {
    pub total: u64,
    pub real: u64,
    pub nonreal: u64,
    /// Pairs `(g, conj g)`.
    pub self_conjugate: u64,
}

/// Census from the real-root count alone: `g` takes `a` real roots and `b`
/// whole conjugate pairs for a real factor.
pub fn factorization_census(r: usize, m: usize) -> Result<FactorizationCensus> {
    if r > 2 * m || !r.is_multiple_of(2) {
        return invalid(format!("a real polynomial of degree {} cannot have {r} real roots", 2 * m));
    }
    let c = (2 * m - r) / 2;
    let total = binomial(2 * m as u64, m as u64);
    let real = (0..=c)
        .filter(|&b| 2 * b <= m && m - 2 * b <= r)
        .map(|b| binomial(r as u64, (m - 2 * b) as u64) * binomial(c as u64, b as u64))
        .sum();
    let self_conjugate = if r == 0 { 1u64 << m } else { 0 };
    Ok(FactorizationCensus { total, real, nonreal: total - real, self_conjugate })
}

/// `(nonreal, self_conjugate)` ordered factorizations of `f`, which must be
/// squarefree of even degree.
pub fn mod4_factorization_census(f: &UniPoly, m: usize) -> Result<(u64, u64)> {
    if f.degree() != Some(2 * m) {
        return invalid(format!("expected degree {}, got {:?}", 2 * m, f.degree()));
    }
    if !f.is_squarefree() {
        return invalid("polynomial has a repeated root");
    }
    let c = factorization_census(sturm_count_real_roots(f)?, m)?;
    Ok((c.nonreal, c.self_conjugate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::complex_count;
    use crate::groebner::{solve_instance, solve_system, SolveOptions};

    fn pts(v: &[&str]) -> Vec<OsculationPoint> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn small_h_matrix() {
        // k=2, n=4: c_1 = 1, c_2 = -1
        let (f0, g0, h0) = (rat(3, 1), rat(5, 1), rat(2, 1));
        let m = h_matrix(2, 4, &f0, &[g0.clone(), rat(1, 1)], &[h0.clone(), rat(1, 1)]).unwrap();
        let expect = [vec![rat(1, 1), -g0, &f0 / &h0, rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(-1, 1), h0]];
        assert_eq!(m.rows(), &expect[..]);
        assert_eq!(crate::exactalg::rank(&m), 2);
        assert!(h_matrix(2, 4, &f0, &[rat(1, 1), rat(1, 1)], &[rat(0, 1), rat(1, 1)]).is_err());
    }

    #[test]
    fn identity_small_cases() {
        for (k, n) in [(2, 4), (2, 5), (3, 5), (3, 6)] {
            assert!(verify_det_identity(k, n).unwrap(), "({k},{n})");
        }
        assert!(!verify_det_identity_with(2, 4, Some(1), 9).unwrap());
        assert!(!verify_det_identity_with(3, 6, Some(2), 9).unwrap());
        assert!(matches!(verify_det_identity(3, 10), Err(Error::Resource(_))));
    }

    #[test]
    fn identity_spot_checks() {
        assert!(spot_check_det_identity(3, 6, 5, 1).unwrap());
        assert!(spot_check_det_identity(4, 10, 3, 2).unwrap());
    }

    #[test]
    fn predicted_counts() {
        // n=8, k=2, seven real points: f' has six real roots
        let inst = HookInstance::new(2, 8, pts(&["-3", "-2", "-1", "0", "1", "2", "3"])).unwrap();
        assert_eq!(predicted_real_count(&inst).unwrap(), 6);
        // t (t^2+1)(t^2+4)(t^2+9) is increasing, so f' has no real root
        let inst = HookInstance::new(4, 8, pts(&["0", "i", "-i", "2i", "-2i", "3i", "-3i"])).unwrap();
        assert_eq!(inst.derivative_real_roots().unwrap(), 0);
        assert_eq!(predicted_real_count(&inst).unwrap(), 0);
        // 12 real points: f' has 11 real roots
        let v: Vec<String> = (-6..=5).map(|x| x.to_string()).collect();
        let inst = HookInstance::new(5, 13, pts(&v.iter().map(String::as_str).collect::<Vec<_>>())).unwrap();
        assert_eq!(predicted_real_count(&inst).unwrap(), 330);
    }

    #[test]
    fn instance_validation() {
        assert!(HookInstance::new(2, 4, pts(&["0", "1"])).is_err());
        assert!(HookInstance::new(2, 4, pts(&["0", "1", "inf"])).is_err());
        assert!(HookInstance::new(2, 4, pts(&["0", "i", "2i"])).is_err());
        let inst = HookInstance::new(2, 4, pts(&["0", "1", "-1"])).unwrap();
        assert_eq!(inst.f(), &UniPoly::from_i64(&[0, -1, 0, 1]));
        assert_eq!(inst.to_osculating().points()[0], OsculationPoint::Infinity);
    }

    #[test]
    fn direct_system_three_points() {
        // f = t^3 - t, f'/3 = t^2 - 1/3: g = t - a, h = t + a, a = +-1/sqrt 3
        let inst = HookInstance::new(2, 4, pts(&["0", "1", "-1"])).unwrap();
        let sys = direct_system(&inst);
        assert_eq!(sys.variables(), &["g0".to_string(), "h0".to_string()]);
        let r = solve_system(&sys, Some(2), &SolveOptions::default()).unwrap().report;
        assert_eq!((r.num_complex, r.num_real), (2, 2));
        let g = UniPoly::new(vec![rat(1, 1), rat(1, 1)]);
        assert!(FactorizationPair::new(&inst, g.clone(), g).is_err());
    }

    #[test]
    fn odd_degrees_without_real_roots() {
        // k-1 = 1 and n-k-1 = 3 odd; f' > 0 everywhere
        let inst = HookInstance::new(2, 6, pts(&["0", "i", "-i", "2i", "-2i"])).unwrap();
        let r = solve_system(&direct_system(&inst), Some(4), &SolveOptions::default()).unwrap().report;
        assert_eq!(r.num_complex, 4);
        assert_eq!(r.num_real, 0);
        assert_eq!(predicted_real_count(&inst).unwrap(), 0);
    }

    #[test]
    fn chart_and_direct_agree() {
        let inst = HookInstance::new(2, 5, pts(&["0", "3", "1+i", "1-i"])).unwrap();
        let expected = complex_count(&SchubertProblemSpec::hook_family(2, 5).unwrap()).unwrap();
        let chart = solve_instance(&inst.to_osculating(), expected, &SolveOptions::default()).unwrap();
        let direct = solve_system(&direct_system(&inst), Some(expected), &SolveOptions::default()).unwrap().report;
        assert!(chart.transversal && direct.transversal);
        assert_eq!((chart.num_complex, chart.num_real), (direct.num_complex, direct.num_real));
        assert_eq!(chart.num_real as u64, predicted_real_count(&inst).unwrap());
    }

    #[test]
    fn moebius_normalization() {
        let problem = SchubertProblemSpec::hook_family(2, 4).unwrap();
        let inst = OsculatingInstance::new(problem, pts(&["1", "0", "2", "3"])).unwrap();
        let hook = HookInstance::from_osculating(&inst).unwrap();
        assert!(hook.points().iter().all(|p| !p.is_infinity()));
        assert_eq!(hook.real_point_count(), 3);
    }

    /// Labels real roots `0..r` and conjugate pairs as `(r + 2j, r + 2j + 1)`.
    fn brute_census(r: usize, m: usize) -> FactorizationCensus {
        let conj = |x: usize| if x < r { x } else { r + ((x - r) ^ 1) };
        let mut out = FactorizationCensus { total: 0, real: 0, nonreal: 0, self_conjugate: 0 };
        for s in crate::combinat::subsets(2 * m, m) {
            let closed = s.iter().all(|&x| s.contains(&conj(x)));
            let comp: Vec<usize> = (0..2 * m).filter(|x| !s.contains(x)).collect();
            let mut cs: Vec<usize> = s.iter().map(|&x| conj(x)).collect();
            cs.sort();
            out.total += 1;
            if closed {
                out.real += 1;
            } else {
                out.nonreal += 1;
            }
            if cs == comp {
                out.self_conjugate += 1;
            }
        }
        out
    }

    #[test]
    fn census_matches_enumeration() {
        for m in 1..=5 {
            for r in (0..=2 * m).step_by(2) {
                let c = factorization_census(r, m).unwrap();
                assert_eq!(c, brute_census(r, m), "r={r}, m={m}");
                if m > 1 {
                    assert_eq!(c.nonreal % 4, 0);
                }
            }
        }
        assert_eq!(factorization_census(0, 3).unwrap().self_conjugate, 8);
        assert_eq!(factorization_census(0, 1).unwrap().nonreal, 2);
    }

    #[test]
    fn census_from_polynomial() {
        // (t^2+1)(t^2+4)(t^2+9)
        let f = &(&UniPoly::from_i64(&[1, 0, 1]) * &UniPoly::from_i64(&[4, 0, 1])) * &UniPoly::from_i64(&[9, 0, 1]);
        assert_eq!(mod4_factorization_census(&f, 3).unwrap(), (20, 8));
        assert!(mod4_factorization_census(&UniPoly::from_i64(&[0, 0, 1]), 1).is_err());
    }
}
