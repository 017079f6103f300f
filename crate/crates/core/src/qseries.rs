//! q-Pochhammer symbols with monomial arguments and lozenge weights.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{add_exp, mul_exp, BigRational, LaurentPoly, RationalFn};

/// `sign * q^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialArg {
    negative: bool,
    exponent: i64,
}

impl MonomialArg {
    /// `+q^exponent`.
    pub fn pos(exponent: i64) -> Self {
        Self { negative: false, exponent }
    }

    /// `-q^exponent`.
    pub fn neg(exponent: i64) -> Self {
        Self { negative: true, exponent }
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    fn as_poly(&self) -> LaurentPoly {
        let c = if self.negative { -BigRational::one() } else { BigRational::one() };
        LaurentPoly::monomial(c, self.exponent)
    }
}

/// `1 - a * q^shift` for a monomial `a`.
fn one_minus(a: MonomialArg, shift: i64) -> LaurentPoly {
    let e = add_exp(a.exponent, shift);
    &LaurentPoly::one() - &MonomialArg { negative: a.negative, exponent: e }.as_poly()
}

/// `(a; q^base)_n = prod_{j=0}^{n-1} (1 - a q^{base*j})`, with `(a; q^base)_0 = 1`.
pub fn qpoch(a: MonomialArg, base_exponent: u32, n: u32) -> LaurentPoly {
    assert!(base_exponent >= 1, "base exponent must be positive");
    let base = i64::from(base_exponent);
    let mut acc = LaurentPoly::one();
    for j in 0..i64::from(n) {
        let factor = one_minus(a, mul_exp(base, j));
        if factor.is_zero() {
            return LaurentPoly::zero();
        }
        acc = &acc * &factor;
    }
    acc
}

/// Negative-index Pochhammer symbol `(a; q)_{-n} = 1 / (a q^{-1}; q^{-1})_n`.
pub fn qpoch_neg(a: MonomialArg, n: u32) -> Result<RationalFn> {
    if n == 0 {
        return Err(Error::Precondition("negative-index Pochhammer needs n >= 1".into()));
    }
    let mut den = LaurentPoly::one();
    for j in 0..i64::from(n) {
        // factor 1 - a q^{-1} q^{-j}
        let factor = one_minus(a, -(j + 1));
        if factor.is_zero() {
            return Err(Error::VanishingDenominator);
        }
        den = &den * &factor;
    }
    RationalFn::new(LaurentPoly::one(), den).ok_or(Error::VanishingDenominator)
}

/// The lozenge weight `w_l = (q^l + q^{-l}) / 2`.
pub fn weight(label: i64) -> LaurentPoly {
    let half = BigRational::new(1.into(), 2.into());
    LaurentPoly::from_terms([(label, half.clone()), (label.checked_neg().expect("label overflow"), half)])
}

/// Product of `weight(l)` over a multiset of labels.
pub fn weight_product<I: IntoIterator<Item = i64>>(labels: I) -> LaurentPoly {
    labels.into_iter().fold(LaurentPoly::one(), |acc, l| &acc * &weight(l))
}
