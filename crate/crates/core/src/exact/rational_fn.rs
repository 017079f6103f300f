use std::fmt;

use super::LaurentPoly;

/// Quotient of two Laurent polynomials, kept unreduced.
///
/// Equality is by cross-multiplication; there is no canonical reduced form.
#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    /// `None` if `den` is the zero polynomial.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Self { num, den })
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        RationalFn { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> RationalFn {
        RationalFn { num: &self.num * p, den: self.den.clone() }
    }

    /// Divides by a nonzero polynomial. `None` if `p` is zero.
    pub fn div_poly(&self, p: &LaurentPoly) -> Option<RationalFn> {
        RationalFn::new(self.num.clone(), &self.den * p)
    }

    pub fn equals(&self, other: &RationalFn) -> bool {
        rf_eq(self, other)
    }

    pub fn equals_poly(&self, p: &LaurentPoly) -> bool {
        self.num == &self.den * p
    }

    /// The polynomial `num / den` when the division is exact in the Laurent ring.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.den)
    }
}

/// `f.num * g.den == g.num * f.den`.
pub fn rf_eq(f: &RationalFn, g: &RationalFn) -> bool {
    &f.num * &g.den == &g.num * &f.den
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(pairs)
    }

    #[test]
    fn cross_multiplication_equality() {
        let f = RationalFn::new(lp(&[(0, 1), (2, -1)]), lp(&[(0, 1), (1, -1)])).unwrap();
        let g = RationalFn::from_poly(lp(&[(0, 1), (1, 1)]));
        assert!(rf_eq(&f, &g));
        let h = RationalFn::new(lp(&[(1, 1)]), lp(&[(1, 1)])).unwrap();
        assert!(rf_eq(&RationalFn::one(), &h));
        assert!(!rf_eq(&f, &RationalFn::one()));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFn::new(LaurentPoly::one(), LaurentPoly::zero()).is_none());
        assert!(RationalFn::one().div_poly(&LaurentPoly::zero()).is_none());
    }

    #[test]
    fn exact_conversion() {
        let f = RationalFn::new(lp(&[(0, 1), (2, -1)]), lp(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(f.to_laurent(), Some(lp(&[(0, 1), (1, 1)])));
        let g = RationalFn::new(LaurentPoly::one(), lp(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(g.to_laurent(), None);
    }
}
