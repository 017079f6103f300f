//! The path matrix of a region, its exact determinant, and the reduction that
//! pulls row and column factors out of it.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{BigRational, LaurentPoly, RationalFn};
use crate::oracle::RegionSpec;
use crate::paths::gf_entry;
use crate::qseries::{qpoch, MonomialArg};
use crate::ring::cofactor_det;

/// Largest size handled by cofactor expansion; bigger matrices use
/// fraction-free elimination.
pub const COFACTOR_LIMIT: usize = 6;

/// Square matrix of Laurent polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<Vec<LaurentPoly>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::Precondition(format!("row {bad} has {} entries, expected {n}", rows[bad].len())));
        }
        Ok(Self { rows })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        Self { rows: (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    /// 0-based entry.
    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }

    /// The matrix with the listed rows and columns removed (0-based).
    pub fn minor(&self, del_rows: &[usize], del_cols: &[usize]) -> PolyMatrix {
        PolyMatrix {
            rows: self
                .rows
                .iter()
                .enumerate()
                .filter(|(i, _)| !del_rows.contains(i))
                .map(|(_, r)| {
                    r.iter().enumerate().filter(|(j, _)| !del_cols.contains(j)).map(|(_, e)| e.clone()).collect()
                })
                .collect(),
        }
    }

    /// `dg(left) * self * dg(right)`.
    pub fn scale_diag(&self, left: &[LaurentPoly], right: &[LaurentPoly]) -> PolyMatrix {
        assert!(left.len() == self.size() && right.len() == self.size(), "diagonal length mismatch");
        PolyMatrix::from_fn(self.size(), |i, j| &(&left[i] * &self.rows[i][j]) * &right[j])
    }

    pub fn substitute_power(&self, t: u32) -> PolyMatrix {
        PolyMatrix { rows: self.rows.iter().map(|r| r.iter().map(|e| e.substitute_power(t)).collect()).collect() }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>())).finish()
    }
}

pub fn det_cofactor(m: &PolyMatrix) -> LaurentPoly {
    cofactor_det(&m.rows, &LaurentPoly::one())
}

/// Fraction-free (Bareiss) elimination with row pivoting. Every division is
/// exact in theory; a failing one is reported instead of trusted.
pub fn det_bareiss(m: &PolyMatrix) -> Result<LaurentPoly> {
    let n = m.size();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a = m.rows.clone();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(LaurentPoly::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = cross.div_exact(&prev).ok_or(Error::InexactDivision)?;
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Exact determinant: cofactor expansion up to [`COFACTOR_LIMIT`], Bareiss
/// above.
pub fn det(m: &PolyMatrix) -> Result<LaurentPoly> {
    if m.size() <= COFACTOR_LIMIT {
        Ok(det_cofactor(m))
    } else {
        det_bareiss(m)
    }
}

/// Path matrix: entry `(i, j)` counts weighted paths from the `i`-th start to
/// the `j`-th end.
pub fn build_gf_matrix(region: &RegionSpec) -> PolyMatrix {
    let (m, k) = (region.m() as i64, region.k() as i64);
    let dents = region.dents().values();
    PolyMatrix::from_fn(region.m(), |i, j| gf_entry(i as i64 + 1, m, k, dents[j]))
}

pub fn tiling_gf(region: &RegionSpec) -> LaurentPoly {
    det(&build_gf_matrix(region)).expect("exact determinant of a path matrix")
}

/// Row and column factors pulled out of the path matrix, and what is left.
///
/// `P = prod_i 2^e q^{e(2i+k+2m-3)/2} / (q^2;q^2)_{2m+k-2i} * prod_j q^{(4m+2k) a_j}`
/// with `e = 2i-k-2m`, and `R_ij = q^{-4 i a_j} (q^{4(i-a_j)};q^4)_{2m+k-2i}`.
/// `det` of the path matrix equals `P * det(R)` when `a_m <= m - 1`.
pub fn reduce(region: &RegionSpec) -> (RationalFn, PolyMatrix) {
    let (m, k) = (region.m() as i64, region.k() as i64);
    let dents = region.dents().values();
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=m {
        let e = 2 * i - k - 2 * m;
        let two = BigRational::from_integer(2.into());
        let c = if e >= 0 { num_traits::pow(two, e as usize) } else { num_traits::pow(two.recip(), (-e) as usize) };
        num = &num * &LaurentPoly::monomial(c, e * (2 * i + k + 2 * m - 3) / 2);
        den = &den * &qpoch(MonomialArg::pos(2), 2, (2 * m + k - 2 * i) as u32);
    }
    let col: i64 = dents.iter().map(|a| (4 * m + 2 * k) * a).sum();
    num = num.shift(col);
    let prefactor = RationalFn::new(num, den).expect("(q^2;q^2)_n never vanishes");
    let r = PolyMatrix::from_fn(region.m(), |i, j| {
        let i = i as i64 + 1;
        let a = dents[j];
        qpoch(MonomialArg::pos(4 * (i - a)), 4, (2 * m + k - 2 * i) as u32).shift(-4 * i * a)
    });
    (prefactor, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;
    use proptest::prelude::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(pairs)
    }

    fn half() -> BigRational {
        rational(1, 2)
    }

    #[test]
    fn determinant_examples() {
        let empty = PolyMatrix::new(vec![]).unwrap();
        assert!(det(&empty).unwrap().is_one());
        assert!(det_bareiss(&empty).unwrap().is_one());
        let m = PolyMatrix::new(vec![
            vec![lp(&[(0, 1), (1, -1)]), LaurentPoly::zero()],
            vec![LaurentPoly::one(), lp(&[(-2, 1)])],
        ])
        .unwrap();
        let expect = lp(&[(-2, 1), (-1, -1)]);
        assert_eq!(det(&m).unwrap(), expect);
        assert_eq!(det_bareiss(&m).unwrap(), expect);
        let col = lp(&[(3, 2), (-1, 1)]);
        let m = PolyMatrix::new(vec![vec![col.clone(), col.clone()], vec![lp(&[(0, 5)]), lp(&[(0, 5)])]]).unwrap();
        assert!(det(&m).unwrap().is_zero());
        assert!(PolyMatrix::new(vec![vec![LaurentPoly::one()], vec![]]).is_err());
    }

    #[test]
    fn bareiss_handles_large_and_pivoting() {
        // permutation-like 8x8 matrix forces row swaps and the Bareiss path
        let n = 8;
        let m =
            PolyMatrix::from_fn(
                n,
                |i, j| {
                    if (i + 1) % n == j {
                        LaurentPoly::q_pow(i as i64)
                    } else {
                        LaurentPoly::zero()
                    }
                },
            );
        // cyclic shift of length 8 is odd
        assert_eq!(det(&m).unwrap(), -LaurentPoly::q_pow(28));
    }

    #[test]
    fn gf_matrix_examples() {
        let r = RegionSpec::new(1, 0, vec![0]).unwrap();
        assert!(build_gf_matrix(&r).get(0, 0).is_one());
        let r = RegionSpec::new(1, 1, vec![0]).unwrap();
        let w = LaurentPoly::from_terms([(1, half()), (-1, half())]);
        assert_eq!(build_gf_matrix(&r).get(0, 0), &w);
        assert_eq!(tiling_gf(&r), w);
        let r = RegionSpec::new(2, 0, vec![0, 1]).unwrap();
        assert!(build_gf_matrix(&r).get(0, 1).is_zero());
    }

    #[test]
    fn reduce_examples() {
        let r = RegionSpec::new(1, 1, vec![0]).unwrap();
        let (p, red) = reduce(&r);
        assert!(p.equals(&RationalFn::new(LaurentPoly::monomial(half(), -1), lp(&[(0, 1), (2, -1)])).unwrap()));
        assert_eq!(red.get(0, 0), &lp(&[(0, 1), (4, -1)]));
        assert!(p.mul_poly(&det(&red).unwrap()).equals_poly(&tiling_gf(&r)));
        let r = RegionSpec::new(1, 0, vec![0]).unwrap();
        let (p, red) = reduce(&r);
        assert!(p.equals(&RationalFn::one()));
        assert!(red.get(0, 0).is_one());
    }

    #[test]
    fn vanishing_when_last_dent_too_high() {
        for (m, k, dents) in [(1, 0, vec![1]), (2, 0, vec![1, 2]), (2, 1, vec![-1, 3]), (3, 2, vec![-2, 0, 3])] {
            let r = RegionSpec::new(m, k, dents).unwrap();
            assert!(tiling_gf(&r).is_zero());
        }
    }

    #[test]
    fn reduction_sweep() {
        for m in 1..=3 {
            for k in 0..=2 {
                for r in RegionSpec::all_admissible(m, k) {
                    let (p, red) = reduce(&r);
                    assert!(p.mul_poly(&det(&red).unwrap()).equals_poly(&tiling_gf(&r)), "{r:?}");
                }
            }
        }
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i64..4, -3i64..4), 0..4).prop_map(|t| LaurentPoly::from_int_terms(&t))
    }

    fn square(n: usize) -> impl Strategy<Value = PolyMatrix> {
        prop::collection::vec(small_poly(), n * n)
            .prop_map(move |v| PolyMatrix::from_fn(n, |i, j| v[i * n + j].clone()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn cofactor_matches_bareiss(m in (1usize..=5).prop_flat_map(square)) {
            prop_assert_eq!(det_cofactor(&m), det_bareiss(&m).unwrap());
        }

        #[test]
        fn minor_then_det_matches_expansion(m in square(3)) {
            // first-row Laplace expansion
            let mut sum = LaurentPoly::zero();
            for j in 0..3 {
                let term = m.get(0, j) * &det(&m.minor(&[0], &[j])).unwrap();
                sum = if j % 2 == 0 { &sum + &term } else { &sum - &term };
            }
            prop_assert_eq!(sum, det(&m).unwrap());
        }
    }
}
