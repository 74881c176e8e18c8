//! Wronskians of k-planes of polynomials.
//!
//! The standard basis vector `e_b` (1-based) stands for the polynomial
//! `(-1)^(b-1) t^(n-b) / (n-b)!`. With this pairing the row space of
//! `F_k(t0)` maps to a plane whose Wronskian is `c (t - t0)^(k(n-k))`, and
//! `F_k(inf)` to one with constant Wronskian, so the Wronskian of a plane
//! vanishes to order `|lambda|` at each point where it meets an osculating
//! flag in position `lambda`.

use crate::combinat::subsets;
use crate::error::{invalid, Error, Result};
use crate::exactalg::{inv_factorial, Coeff, Matrix, MultiPoly, PolyMatrix, Rational, UniPoly};

/// Coefficient and exponent of `Wr(p_(c_1), ..., p_(c_k))` for columns
/// `c_1 < ... < c_k` (0-based), where `p_c` is the basis polynomial of `e_(c+1)`.
fn basis_wronskian(cols: &[usize], n: usize) -> (Rational, usize) {
    let degs: Vec<i64> = cols.iter().map(|&c| (n - 1 - c) as i64).collect();
    let mut coeff = Rational::from_integer(1.into());
    for &c in cols {
        coeff *= inv_factorial((n - 1 - c) as u32);
        if c % 2 == 1 {
            coeff = -coeff;
        }
    }
    for i in 0..degs.len() {
        for j in i + 1..degs.len() {
            coeff *= Rational::from_integer((degs[j] - degs[i]).into());
        }
    }
    let k = cols.len() as i64;
    let exp = degs.iter().sum::<i64>() - k * (k - 1) / 2;
    (coeff, exp as usize)
}

/// The Wronskian of the row space of a `k x n` polynomial matrix, as its
/// list of `t`-coefficients (index = power of `t`), computed from the
/// maximal minors: `Wr = sum_alpha det(M_alpha) Wr(basis_alpha)`.
pub fn wronskian_symbolic(m: &PolyMatrix<Rational>) -> Result<Vec<MultiPoly<Rational>>> {
    let (k, n) = (m.nrows(), m.ncols());
    if k == 0 || k > n {
        return invalid(format!("Wronskian needs 1 <= k <= n, got a {k}x{n} matrix"));
    }
    let rows: Vec<usize> = (0..k).collect();
    let mut out = vec![MultiPoly::zero(m.nvars()); k * (n - k) + 1];
    for cols in subsets(n, k) {
        let minor = m.minor(&rows, &cols)?;
        if minor.is_zero() {
            continue;
        }
        let (c, e) = basis_wronskian(&cols, n);
        out[e] = &out[e] + &minor.scale(&c);
    }
    Ok(out)
}

/// The Wronskian of the row space of a constant `k x n` matrix.
pub fn wronskian(m: &Matrix<Rational>) -> Result<UniPoly> {
    let pm = PolyMatrix::from_constants(0, m);
    let coeffs = wronskian_symbolic(&pm)?;
    let w = UniPoly::new(coeffs.iter().map(|p| p.constant_value().unwrap_or_else(<Rational as Coeff>::zero)).collect());
    if w.is_zero() {
        return Err(Error::Invalid("Wronskian of a rank-deficient matrix".into()));
    }
    Ok(w)
}

/// Order of vanishing of a nonzero polynomial at a rational point.
pub fn vanishing_order(p: &UniPoly, t0: &Rational) -> usize {
    let mut q = p.compose_linear(&Rational::from_integer(1.into()), t0);
    let mut order = 0;
    while !q.is_zero() && q.coeff(0) == Rational::zero() {
        q = UniPoly::new(q.coeffs()[1..].to_vec());
        order += 1;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::schubert::flag::flag_rows;

    fn basis_poly(row: &[Rational]) -> UniPoly {
        let n = row.len();
        let mut c = vec![rat(0, 1); n];
        for (b, x) in row.iter().enumerate() {
            let sign = if b % 2 == 0 { 1 } else { -1 };
            c[n - 1 - b] += x * inv_factorial((n - 1 - b) as u32) * rat(sign, 1);
        }
        UniPoly::new(c)
    }

    /// Wronski determinant of polynomials by cofactor expansion.
    fn brute_wronskian(polys: &[UniPoly]) -> UniPoly {
        let k = polys.len();
        let mut derivs: Vec<Vec<UniPoly>> = vec![polys.to_vec()];
        for _ in 1..k {
            let last = derivs.last().unwrap();
            derivs.push(last.iter().map(UniPoly::derivative).collect());
        }
        fn det(m: &[Vec<UniPoly>], cols: &[usize], row: usize) -> UniPoly {
            if row == m.len() {
                return UniPoly::one();
            }
            let mut acc = UniPoly::zero();
            for (pos, &c) in cols.iter().enumerate() {
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = &m[row][c] * &det(m, &rest, row + 1);
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        det(&derivs, &(0..k).collect::<Vec<_>>(), 0)
    }

    #[test]
    fn matches_wronski_determinant() {
        let rows = vec![
            vec![rat(1, 1), rat(2, 1), rat(0, 1), rat(-1, 3), rat(5, 1)],
            vec![rat(0, 1), rat(1, 2), rat(3, 1), rat(1, 1), rat(-2, 1)],
            vec![rat(4, 1), rat(0, 1), rat(1, 1), rat(0, 1), rat(7, 5)],
        ];
        let m = Matrix::new(rows.clone()).unwrap();
        let polys: Vec<UniPoly> = rows.iter().map(|r| basis_poly(r)).collect();
        assert_eq!(wronskian(&m).unwrap(), brute_wronskian(&polys));
        // k = 1 is the row's polynomial
        let one = Matrix::new(vec![rows[0].clone()]).unwrap();
        assert_eq!(wronskian(&one).unwrap(), basis_poly(&rows[0]));
    }

    #[test]
    fn osculating_flag_normalization() {
        for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
            let t0 = rat(-3, 2);
            let m = Matrix::new(flag_rows(&t0, k, n)).unwrap();
            let w = wronskian(&m).unwrap();
            assert_eq!(w.degree(), Some(k * (n - k)));
            assert_eq!(vanishing_order(&w, &t0), k * (n - k));
        }
    }

    #[test]
    fn rank_deficient_rejected() {
        let m = Matrix::new(vec![vec![rat(1, 1), rat(2, 1), rat(3, 1)], vec![rat(2, 1), rat(4, 1), rat(6, 1)]]).unwrap();
        assert!(wronskian(&m).is_err());
    }
}
