//! Minimal commutative-ring abstraction shared by the coefficient domains.
//!
//! The same determinant and identity-building code runs over exact rationals,
//! univariate Laurent polynomials and multivariate Laurent polynomials. The
//! multiplicative identity is passed explicitly because some rings (the
//! multivariate one) need a variable set to construct it.

use std::collections::HashMap;

use num_traits::Zero;

use crate::exact::BigRational;

pub trait Ring: Clone + PartialEq {
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn zero_like(&self) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
}

impl Ring for BigRational {
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
        BigRational::zero()
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
}

/// Product of an iterator of ring elements, starting from `one`.
pub fn product<'a, R: Ring + 'a>(one: &R, items: impl IntoIterator<Item = &'a R>) -> R {
    items.into_iter().fold(one.clone(), |acc, x| acc.times(x))
}

/// Determinant by Laplace expansion along rows, memoised on the set of
/// remaining columns. Exact over any commutative ring; `O(n 2^n)` ring
/// multiplications instead of `n!`.
///
/// The empty matrix has determinant `one`. Panics if the matrix is not square
/// or has more than 63 columns.
pub fn cofactor_det<R: Ring>(rows: &[Vec<R>], one: &R) -> R {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix is not square");
    assert!(n < 64, "cofactor expansion limited to 63 columns");
    if n == 0 {
        return one.clone();
    }
    let full: u64 = if n == 63 { u64::MAX >> 1 } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, R> = HashMap::new();
    minor(rows, 0, full, one, &mut memo)
}

fn minor<R: Ring>(rows: &[Vec<R>], row: usize, cols: u64, one: &R, memo: &mut HashMap<u64, R>) -> R {
    if cols == 0 {
        return one.clone();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc: Option<R> = None;
    let mut sign_positive = true;
    for (j, entry) in rows[row].iter().enumerate() {
        if cols & (1 << j) == 0 {
            continue;
        }
        if !entry.vanishes() {
            let sub = minor(rows, row + 1, cols & !(1 << j), one, memo);
            if !sub.vanishes() {
                let term = entry.times(&sub);
                let term = if sign_positive { term } else { term.negated() };
                acc = Some(match acc {
                    Some(a) => a.plus(&term),
                    None => term,
                });
            }
        }
        sign_positive = !sign_positive;
    }
    let value = acc.unwrap_or_else(|| one.zero_like());
    memo.insert(cols, value.clone());
    value
}

/// Shorthand for the rational `n / d`.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
