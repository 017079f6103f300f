use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::BigRational;
use crate::ring::Ring;

/// Sparse univariate Laurent polynomial in `q` with rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent, so iteration is always in
/// ascending exponent order and no stored coefficient is ever zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

pub(crate) fn add_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("exponent overflow in Laurent arithmetic")
}

pub(crate) fn mul_exp(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("exponent overflow in Laurent arithmetic")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`; zero if `c` is zero.
    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    /// Builds from arbitrary `(exp, coeff)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_int_terms(pairs: &[(i64, i64)]) -> Self {
        Self::from_terms(pairs.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into()))))
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (add_exp(e, shift), c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect() }
    }

    /// The substitution `q -> q^t`: every exponent is multiplied by `t`.
    pub fn substitute_power(&self, t: u32) -> Self {
        assert!(t >= 1, "substitution power must be positive");
        let t = i64::from(t);
        Self { terms: self.terms.iter().map(|(&e, c)| (mul_exp(e, t), c.clone())).collect() }
    }

    /// Exact evaluation at a rational point. `None` if `x = 0` and a negative
    /// exponent is present.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        if x.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return None;
            }
            return Some(self.coeff(0));
        }
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            acc += c * pow_rational(x, e);
        }
        Some(acc)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division. Returns `None` when `divisor` is zero or does not divide
    /// `self` in the Laurent ring.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Units of the Laurent ring are monomials, so normalise both sides to
        // ordinary polynomials with nonzero constant term and long-divide.
        let d_low = divisor.min_exp().unwrap();
        let d_high = divisor.max_exp().unwrap();
        let lead = divisor.terms[&d_high].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_high) = rem.max_exp() {
            let r_low = rem.min_exp().unwrap();
            // every remaining term must still fit above the divisor's span
            if r_high - r_low < d_high - d_low {
                return None;
            }
            let e = r_high - d_high;
            let c = rem.terms[&r_high].clone() / &lead;
            let step = LaurentPoly::monomial(c.clone(), e);
            rem = &rem - &(&step * divisor);
            quot.add_term(e, c);
        }
        Some(quot)
    }
}

fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coeff =
                if abs.is_integer() { abs.numer().to_string() } else { format!("{}/{}", abs.numer(), abs.denom()) };
            match e {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{coeff}*")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(add_exp(e1, e2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| &a * &b)
    }
}

impl Ring for LaurentPoly {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        LaurentPoly::zero()
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
}

/// Coefficient-wise sum.
pub fn lp_add(p: &LaurentPoly, r: &LaurentPoly) -> LaurentPoly {
    p + r
}

/// Convolution product.
pub fn lp_mul(p: &LaurentPoly, r: &LaurentPoly) -> LaurentPoly {
    p * r
}

pub fn lp_substitute_power(p: &LaurentPoly, t: u32) -> LaurentPoly {
    p.substitute_power(t)
}
