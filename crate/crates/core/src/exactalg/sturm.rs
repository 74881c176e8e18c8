//! Sturm sequences and exact real-root counting.

use super::unipoly::sign;
use super::UniPoly;
use crate::error::{invalid, Error, Result};

/// `p, p', -rem(p, p'), ...` down to a nonzero constant (or the gcd of `p`
/// and `p'` when `p` has repeated roots).
pub fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone()];
    if p.is_zero() {
        return seq;
    }
    let mut cur = p.derivative();
    while !cur.is_zero() {
        let r = seq.last().expect("nonempty").rem(&cur);
        seq.push(cur);
        cur = -&r;
    }
    seq
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of a squarefree polynomial.
///
/// Signs at `+-inf` come from leading coefficients only, so the count never
/// touches an approximation.
pub fn sturm_count_real_roots(p: &UniPoly) -> Result<usize> {
    if p.is_zero() {
        return invalid("Sturm count of the zero polynomial");
    }
    let seq = sturm_sequence(p);
    let last = seq.last().expect("nonempty");
    if !last.is_constant() {
        return Err(Error::Invalid(format!(
            "polynomial is not squarefree: gcd(p, p') has degree {}",
            last.degree().unwrap_or(0)
        )));
    }
    let at_neg = variations(seq.iter().map(UniPoly::sign_at_neg_inf));
    let at_pos = variations(seq.iter().map(UniPoly::sign_at_pos_inf));
    Ok(at_neg - at_pos)
}

/// Sign variations of the Sturm sequence at a rational point.
#[allow(dead_code)]
pub(crate) fn variations_at(seq: &[UniPoly], x: &super::Rational) -> usize {
    variations(seq.iter().map(|q| sign(&q.eval(x))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Rational};
    use proptest::prelude::*;

    fn r(v: i64) -> Rational {
        rat(v, 1)
    }

    #[test]
    fn small_cases() {
        assert_eq!(sturm_count_real_roots(&UniPoly::from_i64(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(sturm_count_real_roots(&UniPoly::from_i64(&[-1, 0, 1])).unwrap(), 2);
        assert_eq!(sturm_count_real_roots(&UniPoly::from_i64(&[5])).unwrap(), 0);
        assert!(sturm_count_real_roots(&UniPoly::zero()).is_err());
    }

    #[test]
    fn rolle_forces_six_critical_points() {
        let f = UniPoly::from_roots(&[r(1), r(2), r(3), r(4), r(-1), r(-2), r(-3)]);
        let fp = f.derivative();
        assert!(fp.is_squarefree());
        assert_eq!(sturm_count_real_roots(&fp).unwrap(), 6);
    }

    #[test]
    fn rejects_repeated_roots() {
        let p = UniPoly::from_roots(&[r(1), r(1), r(3)]);
        assert!(sturm_count_real_roots(&p).is_err());
        let sf = p.squarefree_part().unwrap();
        assert_eq!(sturm_count_real_roots(&sf).unwrap(), 2);
    }

    proptest! {
        // squarefree polynomials with known integer roots times irreducible
        // quadratics t^2 + c (c > 0): the count is exactly the integer roots
        #[test]
        fn counts_known_roots(roots in proptest::collection::btree_set(-20i64..20, 0..8),
                              quads in proptest::collection::vec(1i64..9, 0..2),
                              scale in 1i64..5) {
            let rs: Vec<Rational> = roots.iter().map(|&a| r(a)).collect();
            let mut p = UniPoly::from_roots(&rs).scale(&rat(-scale, 3));
            for c in &quads {
                p = &p * &UniPoly::from_i64(&[*c, 0, 1]);
            }
            prop_assume!(p.is_squarefree());
            prop_assert_eq!(sturm_count_real_roots(&p).unwrap(), roots.len());
            // interval variant agrees on a window containing every root
            let seq = sturm_sequence(&p);
            let inside = variations_at(&seq, &r(-21)) - variations_at(&seq, &r(21));
            prop_assert_eq!(inside, roots.len());
        }
    }
}
