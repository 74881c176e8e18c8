use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactalg::{format_rational, GaussianRational, Rational};
use num_traits::{One, Zero};

/// A point of the projective line with Gaussian-rational coordinate, or infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OsculationPoint {
    Finite(GaussianRational),
    Infinity,
}

impl OsculationPoint {
    pub fn real(x: Rational) -> Self {
        Self::Finite(GaussianRational::real(x))
    }

    pub fn int(x: i64) -> Self {
        Self::real(Rational::from_integer(x.into()))
    }

    pub fn complex(re: Rational, im: Rational) -> Self {
        Self::Finite(GaussianRational::new(re, im))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    /// Infinity counts as real.
    pub fn is_real(&self) -> bool {
        match self {
            Self::Finite(z) => z.is_real(),
            Self::Infinity => true,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Self::Infinity)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Finite(z) if z.is_zero())
    }

    pub fn conj(&self) -> Self {
        match self {
            Self::Finite(z) => Self::Finite(z.conj()),
            Self::Infinity => Self::Infinity,
        }
    }

    pub fn finite(&self) -> Option<&GaussianRational> {
        match self {
            Self::Finite(z) => Some(z),
            Self::Infinity => None,
        }
    }

    /// The real coordinate of a finite real point.
    pub fn as_real(&self) -> Option<&Rational> {
        self.finite().filter(|z| z.is_real()).map(|z| &z.re)
    }
}

impl fmt::Display for OsculationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(z) => write!(f, "{z}"),
            Self::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for OsculationPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Self::Infinity);
        }
        GaussianRational::parse(s).map(Self::Finite)
    }
}

/// Real Moebius transformation `t -> (a t + b) / (c t + d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Mobius {
    pub fn identity() -> Self {
        Self { a: Rational::one(), b: Rational::zero(), c: Rational::zero(), d: Rational::one() }
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// A real transformation sending `to_inf` to infinity and `to_zero` (if
    /// given) to zero. Both points must be real and distinct.
    pub fn anchoring(to_inf: &OsculationPoint, to_zero: Option<&OsculationPoint>) -> Result<Self> {
        use OsculationPoint::*;
        let real = |p: &OsculationPoint| -> Result<Option<Rational>> {
            match p {
                Infinity => Ok(None),
                Finite(z) if z.is_real() => Ok(Some(z.re.clone())),
                _ => Err(Error::Invalid(format!("anchor {p} is not real"))),
            }
        };
        let one = Rational::one;
        let zero = Rational::zero;
        let a = real(to_inf)?;
        let b = match to_zero {
            Some(p) => {
                if p == to_inf {
                    return Err(Error::Invalid("anchors must be distinct".into()));
                }
                Some(real(p)?)
            }
            None => None,
        };
        Ok(match (a, b) {
            (None, None) => Self::identity(),
            // t - b
            (None, Some(Some(b))) => Self { a: one(), b: -b, c: zero(), d: one() },
            (None, Some(None)) => unreachable!("distinct anchors"),
            // 1 / (t - a): a -> inf, inf -> 0
            (Some(a), None) | (Some(a), Some(None)) => Self { a: zero(), b: one(), c: one(), d: -a },
            // (t - b) / (t - a)
            (Some(a), Some(Some(b))) => Self { a: one(), b: -b, c: one(), d: -a },
        })
    }

    pub fn apply(&self, p: &OsculationPoint) -> OsculationPoint {
        match p {
            OsculationPoint::Infinity => {
                if self.c.is_zero() {
                    OsculationPoint::Infinity
                } else {
                    OsculationPoint::real(&self.a / &self.c)
                }
            }
            OsculationPoint::Finite(t) => {
                let g = |q: &Rational| GaussianRational::real(q.clone());
                let den = &(&g(&self.c) * t) + &g(&self.d);
                if den.is_zero() {
                    return OsculationPoint::Infinity;
                }
                let num = &(&g(&self.a) * t) + &g(&self.b);
                OsculationPoint::Finite(&num / &den)
            }
        }
    }

    pub fn describe(&self) -> String {
        let r = format_rational;
        format!("t -> ({}*t + {}) / ({}*t + {})", r(&self.a), r(&self.b), r(&self.c), r(&self.d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn text_round_trip() {
        for s in ["inf", "0", "-3/2", "1/2-3/4*i", "i", "-5*i"] {
            let p: OsculationPoint = s.parse().unwrap();
            assert_eq!(p.to_string().parse::<OsculationPoint>().unwrap(), p);
        }
        assert_eq!("1/2-3/4*i".parse::<OsculationPoint>().unwrap().to_string(), "1/2-3/4*i");
        assert!("inf".parse::<OsculationPoint>().unwrap().is_real());
        assert!(!"2+i".parse::<OsculationPoint>().unwrap().is_real());
    }

    #[test]
    fn conjugation_is_involution() {
        let p: OsculationPoint = "2-7/3*i".parse().unwrap();
        assert_ne!(p.conj(), p);
        assert_eq!(p.conj().conj(), p);
        assert_eq!(OsculationPoint::Infinity.conj(), OsculationPoint::Infinity);
    }

    #[test]
    fn anchoring_sends_points_where_asked() {
        let (a, b) = (OsculationPoint::int(3), OsculationPoint::real(rat(-1, 2)));
        let m = Mobius::anchoring(&a, Some(&b)).unwrap();
        assert!(m.apply(&a).is_infinity());
        assert!(m.apply(&b).is_zero());
        let m = Mobius::anchoring(&OsculationPoint::Infinity, Some(&b)).unwrap();
        assert!(m.apply(&OsculationPoint::Infinity).is_infinity());
        assert!(m.apply(&b).is_zero());
        let m = Mobius::anchoring(&a, Some(&OsculationPoint::Infinity)).unwrap();
        assert!(m.apply(&a).is_infinity());
        assert!(m.apply(&OsculationPoint::Infinity).is_zero());
        // conjugate pairs stay conjugate
        let z: OsculationPoint = "1+2*i".parse().unwrap();
        assert_eq!(m.apply(&z).conj(), m.apply(&z.conj()));
        assert!(Mobius::anchoring(&z, None).is_err());
        assert!(Mobius::anchoring(&OsculationPoint::Infinity, None).unwrap().is_identity());
    }
}
