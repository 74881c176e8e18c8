use super::OsculationPoint;
use crate::exactalg::{inv_factorial, Coeff, GaussianRational, Matrix};

/// `t^m / m!` in any coefficient field.
fn scaled_power<C: Coeff>(t: &C, m: usize) -> C {
    let mut acc = C::one();
    for _ in 0..m {
        acc = acc.mul(t);
    }
    acc.mul(&C::from_rational(inv_factorial(m as u32)))
}

/// The unipotent matrix `exp(t N)`: entry `(a, b)` is `t^(b-a) / (b-a)!` for `b >= a`.
pub(crate) fn unipotent<C: Coeff>(t: &C, n: usize) -> Vec<Vec<C>> {
    let powers: Vec<C> = (0..n).map(|m| scaled_power(t, m)).collect();
    (0..n).map(|a| (0..n).map(|b| if b >= a { powers[b - a].clone() } else { C::zero() }).collect()).collect()
}

/// First `i` rows of the osculating flag at a finite point.
pub fn flag_rows<C: Coeff>(t: &C, i: usize, n: usize) -> Vec<Vec<C>> {
    let mut rows = unipotent(t, n);
    rows.truncate(i);
    rows
}

/// The `i x n` matrix whose row space is `F_i(t)`. At infinity the rows are
/// `e_(n+1-i), ..., e_n`.
pub fn flag_matrix(t: &OsculationPoint, i: usize, n: usize) -> Matrix<GaussianRational> {
    let rows = match t {
        OsculationPoint::Finite(z) => flag_rows(z, i, n),
        OsculationPoint::Infinity => (0..i)
            .map(|a| (0..n).map(|b| if b == n - i + a { GaussianRational::one() } else { GaussianRational::zero() }).collect())
            .collect(),
    };
    if rows.is_empty() {
        return Matrix::zeros(0, n);
    }
    Matrix::new(rows).expect("rectangular")
}

/// An `n x (n-d)` matrix whose columns span the vectors annihilated by
/// every row of `F_d(t)`.
pub(crate) fn flag_annihilator<C: Coeff>(t: Option<&C>, d: usize, n: usize) -> Vec<Vec<C>> {
    match t {
        // columns d+1..n of exp(-tN) = exp(tN)^(-1)
        Some(t) => {
            let inv = unipotent(&t.neg(), n);
            inv.into_iter().map(|row| row[d..].to_vec()).collect()
        }
        None => (0..n).map(|a| (0..n - d).map(|j| if a == j { C::one() } else { C::zero() }).collect()).collect(),
    }
}
