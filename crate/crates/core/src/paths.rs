//! Generating functions of single weighted lattice paths.
//!
//! Paths live in `Z x Z` and use unit steps to the right and downwards. A right
//! step from `(a, b)` carries the label `a - 2b` and the weight
//! `(q^{a-2b} + q^{2b-a}) / 2`; down steps weigh `1`.

use crate::error::{Error, Result};
use crate::exact::{BigRational, LaurentPoly, RationalFn};
use crate::qseries::{qpoch, weight, MonomialArg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub a: i64,
    pub b: i64,
}

impl LatticePoint {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathSpec {
    pub start: LatticePoint,
    pub end: LatticePoint,
}

impl PathSpec {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { start: LatticePoint::new(a, b), end: LatticePoint::new(c, d) }
    }

    /// At least one right/down path exists.
    pub fn is_feasible(&self) -> bool {
        self.start.a <= self.end.a && self.start.b >= self.end.b
    }

    pub fn right_steps(&self) -> i64 {
        self.end.a - self.start.a
    }

    pub fn down_steps(&self) -> i64 {
        self.start.b - self.end.b
    }
}

/// Label of the right step leaving `p`.
pub fn step_label(p: LatticePoint) -> i64 {
    p.a - 2 * p.b
}

/// Weight of the right step `p -> (p.a + 1, p.b)`.
pub fn step_weight(p: LatticePoint) -> LaurentPoly {
    weight(step_label(p))
}

/// Path generating function by the right/down recursion, tabulated over the
/// rectangle between the two endpoints.
pub fn gf_dp(spec: &PathSpec) -> LaurentPoly {
    if !spec.is_feasible() {
        return LaurentPoly::zero();
    }
    let (a, b) = (spec.start.a, spec.start.b);
    let (c, d) = (spec.end.a, spec.end.b);
    let width = (c - a + 1) as usize;
    let height = (b - d + 1) as usize;
    // table[x - a][y - d]
    let mut table = vec![vec![LaurentPoly::zero(); height]; width];
    for xi in (0..width).rev() {
        let x = a + xi as i64;
        for yi in 0..height {
            let y = d + yi as i64;
            table[xi][yi] = if x == c {
                LaurentPoly::one()
            } else {
                let right = &step_weight(LatticePoint::new(x, y)) * &table[xi + 1][yi];
                if yi == 0 {
                    right
                } else {
                    &right + &table[xi][yi - 1]
                }
            };
        }
    }
    table.swap_remove(0).swap_remove(height - 1)
}

fn pow2(e: i64) -> BigRational {
    let two = BigRational::from_integer(2.into());
    if e >= 0 {
        num_traits::pow(two, e as usize)
    } else {
        num_traits::pow(two.recip(), e.unsigned_abs() as usize)
    }
}

/// Closed product form of the path generating function, as an unreduced
/// rational function:
///
/// `2^{a-c} q^{(a-c)(a+c-4d-1)/2} (q^{2(b-d+1)};q^2)_n (-q^{2(a-b-d)};q^2)_n / (q^2;q^2)_n`
/// with `n = c - a`. Requires `a <= c` and `b >= d`.
pub fn gf_closed(spec: &PathSpec) -> Result<RationalFn> {
    if !spec.is_feasible() {
        return Err(Error::Precondition(format!("closed form needs a <= c and b >= d, got {spec:?}")));
    }
    let (a, b) = (spec.start.a, spec.start.b);
    let (c, d) = (spec.end.a, spec.end.b);
    let n = (c - a) as u32;
    let exp = (a - c) * (a + c - 4 * d - 1) / 2;
    let prefactor = LaurentPoly::monomial(pow2(a - c), exp);
    let num = &(&prefactor * &qpoch(MonomialArg::pos(2 * (b - d + 1)), 2, n))
        * &qpoch(MonomialArg::neg(2 * (a - b - d)), 2, n);
    let den = qpoch(MonomialArg::pos(2), 2, n);
    Ok(RationalFn::new(num, den).expect("(q^2;q^2)_n never vanishes"))
}

/// Start point of path `i` (1-based) of a region.
pub fn region_start(i: i64) -> LatticePoint {
    LatticePoint::new(2 * i - 1, i - 1)
}

/// End point for dent coordinate `a_j` in a region with `m` paths and height
/// parameter `k`.
pub fn region_end(m: i64, k: i64, dent: i64) -> LatticePoint {
    LatticePoint::new(2 * m - 1 + k, dent)
}

/// Entry `(i, j)` of the path matrix: paths from `(2i-1, i-1)` to
/// `(2m-1+k, a_j)`. Zero whenever `a_j >= i`.
pub fn gf_entry(i: i64, m: i64, k: i64, dent: i64) -> LaurentPoly {
    debug_assert!(1 <= i && i <= m && k >= 0);
    gf_dp(&PathSpec { start: region_start(i), end: region_end(m, k, dent) })
}

/// The specialised closed form of [`gf_entry`]:
/// `2^{2i-k-2m} q^{(2i-k-2m)(2i+k+2m-4a_j-3)/2} (q^{4(i-a_j)};q^4)_n / (q^2;q^2)_n`
/// with `n = 2m + k - 2i`. Only meaningful for `a_j < i`.
pub fn gf_entry_closed(i: i64, m: i64, k: i64, dent: i64) -> RationalFn {
    let n = 2 * m + k - 2 * i;
    let e = 2 * i - k - 2 * m;
    let prefactor = LaurentPoly::monomial(pow2(e), e * (2 * i + k + 2 * m - 4 * dent - 3) / 2);
    let num = &prefactor * &qpoch(MonomialArg::pos(4 * (i - dent)), 4, n as u32);
    RationalFn::new(num, qpoch(MonomialArg::pos(2), 2, n as u32)).expect("(q^2;q^2)_n never vanishes")
}

/// Row case: `prod_{i=a-2b}^{c-2b-1} w_i`.
pub fn gf_row(a: i64, b: i64, c: i64) -> LaurentPoly {
    (a - 2 * b..c - 2 * b).fold(LaurentPoly::one(), |acc, l| &acc * &weight(l))
}

/// Row case in product form: `2^{a-c} q^{(a-c)(a-4b+c-1)/2} (-q^{2a-4b};q^2)_{c-a}`.
pub fn gf_row_closed(a: i64, b: i64, c: i64) -> LaurentPoly {
    let coeff = pow2(a - c);
    let mono = LaurentPoly::monomial(coeff, (a - c) * (a - 4 * b + c - 1) / 2);
    &mono * &qpoch(MonomialArg::neg(2 * a - 4 * b), 2, (c - a) as u32)
}
