//! Sparse multivariate Laurent polynomials over the rationals.
//!
//! Only what is needed to state determinant identities in several
//! indeterminates: ring operations, a bounded cofactor determinant and exact
//! evaluation at rational points.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{add_exp, BigRational, LaurentPoly};
use crate::ring::{cofactor_det, Ring};

/// Default bound on matrix size for [`mv_det`].
pub const DEFAULT_DET_BOUND: usize = 4;

/// Ordered list of distinct variable names. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::Precondition(format!("duplicate variable {n}")));
            }
        }
        Ok(Self(names.into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiLaurent {
    vars: VarSet,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl MultiLaurent {
    pub fn zero(vars: &VarSet) -> Self {
        Self { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn constant(vars: &VarSet, c: BigRational) -> Self {
        Self::monomial(vars, c, vec![0; vars.len()])
    }

    pub fn monomial(vars: &VarSet, c: BigRational, exps: Vec<i64>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { vars: vars.clone(), terms }
    }

    /// The variable `name` raised to `exp`. Panics if `name` is not in `vars`.
    pub fn var_pow(vars: &VarSet, name: &str, exp: i64) -> Self {
        let idx = vars.index_of(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut e = vec![0; vars.len()];
        e[idx] = exp;
        Self::monomial(vars, BigRational::one(), e)
    }

    pub fn var(vars: &VarSet, name: &str) -> Self {
        Self::var_pow(vars, name, 1)
    }

    /// Embeds a univariate polynomial using a one-variable `VarSet`.
    pub fn from_laurent(vars: &VarSet, p: &LaurentPoly) -> Self {
        assert_eq!(vars.len(), 1, "embedding needs exactly one variable");
        Self { vars: vars.clone(), terms: p.terms().map(|(e, c)| (vec![e], c.clone())).collect() }
    }

    /// Inverse of [`MultiLaurent::from_laurent`]; `None` unless univariate.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.vars.len() != 1 {
            return None;
        }
        Some(LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (e[0], c.clone()))))
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigRational)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, exps: Vec<i64>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    fn check(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarSetMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.negate())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(&a, &b)| add_exp(a, b)).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        Self { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (name, &x) in self.vars.names().iter().zip(e) {
                match x {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{x}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiLaurent({self})")
    }
}

/// Panics on variable-set mismatch; use the `try_*` methods at API edges.
impl Ring for MultiLaurent {
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("variable sets differ")
    }
    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).expect("variable sets differ")
    }
    fn negated(&self) -> Self {
        self.negate()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        MultiLaurent::zero(&self.vars)
    }
}

/// Arithmetic operations handled by [`mv_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MvOp {
    Add,
    Sub,
    Mul,
}

pub fn mv_arith(op: MvOp, p: &MultiLaurent, r: &MultiLaurent) -> Result<MultiLaurent> {
    match op {
        MvOp::Add => p.try_add(r),
        MvOp::Sub => p.try_sub(r),
        MvOp::Mul => p.try_mul(r),
    }
}

/// Exact determinant by cofactor expansion. Every entry must share one
/// variable set and the matrix may have at most `bound` rows.
pub fn mv_det(matrix: &[Vec<MultiLaurent>], bound: usize) -> Result<MultiLaurent> {
    let n = matrix.len();
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::Precondition("matrix is not square".into()));
    }
    let Some(first) = matrix.first().and_then(|r| r.first()) else {
        return Err(Error::Precondition("empty matrix has no variable set".into()));
    };
    let vars = first.vars.clone();
    if matrix.iter().flatten().any(|e| e.vars != vars) {
        return Err(Error::VarSetMismatch);
    }
    Ok(cofactor_det(matrix, &MultiLaurent::one(&vars)))
}

/// Exact evaluation; `point` gives one value per variable in `p.vars()` order.
pub fn mv_eval(p: &MultiLaurent, point: &[BigRational]) -> Result<BigRational> {
    let names = p.vars.names();
    if point.len() != names.len() {
        return Err(Error::MissingVariable(names.get(point.len()).cloned().unwrap_or_default()));
    }
    let mut acc = BigRational::zero();
    for (e, c) in &p.terms {
        let mut term = c.clone();
        for (i, (&x, v)) in e.iter().zip(point).enumerate() {
            if x == 0 {
                continue;
            }
            if v.is_zero() {
                if x < 0 {
                    return Err(Error::ZeroAtPole(names[i].clone()));
                }
                term = BigRational::zero();
                break;
            }
            let base = if x < 0 { v.recip() } else { v.clone() };
            term *= num_traits::pow(base, x.unsigned_abs() as usize);
        }
        acc += term;
    }
    Ok(acc)
}

/// Range of the integer coordinates produced by [`sample_points`].
pub const SAMPLE_RANGE: std::ops::RangeInclusive<i64> = 2..=97;

/// `count` reproducible points with `dim` coordinates each, drawn uniformly
/// from [`SAMPLE_RANGE`].
pub fn sample_points(dim: usize, count: usize, seed: u64) -> Vec<Vec<BigRational>> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..dim).map(|_| BigRational::from_integer(rng.gen_range(SAMPLE_RANGE).into())).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;

    fn vs(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn inverse_monomials_cancel() {
        let v = vs(&["X1"]);
        let p = MultiLaurent::var(&v, "X1");
        let q = MultiLaurent::var_pow(&v, "X1", -1);
        assert_eq!(mv_arith(MvOp::Mul, &p, &q).unwrap(), MultiLaurent::one(&v));
    }

    #[test]
    fn difference_of_squares() {
        let v = vs(&["X1", "X2"]);
        let x1 = MultiLaurent::var(&v, "X1");
        let x2 = MultiLaurent::var(&v, "X2");
        let lhs = mv_arith(MvOp::Mul, &x1.try_sub(&x2).unwrap(), &x1.try_add(&x2).unwrap()).unwrap();
        let rhs = MultiLaurent::var_pow(&v, "X1", 2).try_sub(&MultiLaurent::var_pow(&v, "X2", 2)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lemma_entry_expansion() {
        // (C/X1 + A2)(X1 + A2) = C + A2*C*X1^-1 + A2*X1 + A2^2
        let v = vs(&["X1", "A2", "C"]);
        let x1 = MultiLaurent::var(&v, "X1");
        let a2 = MultiLaurent::var(&v, "A2");
        let c = MultiLaurent::var(&v, "C");
        let c_over_x = c.try_mul(&MultiLaurent::var_pow(&v, "X1", -1)).unwrap();
        let lhs = c_over_x.try_add(&a2).unwrap().try_mul(&x1.try_add(&a2).unwrap()).unwrap();
        let one = BigRational::one();
        let expect = [
            MultiLaurent::monomial(&v, one.clone(), vec![0, 0, 1]),
            MultiLaurent::monomial(&v, one.clone(), vec![-1, 1, 1]),
            MultiLaurent::monomial(&v, one.clone(), vec![1, 1, 0]),
            MultiLaurent::monomial(&v, one, vec![0, 2, 0]),
        ]
        .iter()
        .fold(MultiLaurent::zero(&v), |a, b| a.try_add(b).unwrap());
        assert_eq!(lhs, expect);
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = MultiLaurent::one(&vs(&["X"]));
        let b = MultiLaurent::one(&vs(&["Y"]));
        assert_eq!(mv_arith(MvOp::Add, &a, &b), Err(Error::VarSetMismatch));
        assert!(VarSet::new(["X", "X"]).is_err());
    }

    #[test]
    fn determinants() {
        let v = vs(&["X1", "X2"]);
        let x1 = MultiLaurent::var(&v, "X1");
        let x2 = MultiLaurent::var(&v, "X2");
        assert_eq!(mv_det(&[vec![x1.clone()]], 4).unwrap(), x1);
        let rep = vec![vec![x1.clone(), x2.clone()], vec![x1.clone(), x2.clone()]];
        assert!(mv_det(&rep, 4).unwrap().is_zero());
        let big = vec![vec![x1.clone(); 5]; 5];
        assert_eq!(mv_det(&big, 4), Err(Error::SizeBound { size: 5, bound: 4 }));
        let mixed = vec![vec![x1.clone(), MultiLaurent::one(&vs(&["Z"]))], vec![x1.clone(), x2]];
        assert_eq!(mv_det(&mixed, 4), Err(Error::VarSetMismatch));
    }

    #[test]
    fn evaluation() {
        let v = vs(&["X1", "X2"]);
        let p = MultiLaurent::var(&v, "X1").try_sub(&MultiLaurent::var(&v, "X2")).unwrap();
        assert_eq!(mv_eval(&p, &[rational(2, 1), rational(2, 1)]).unwrap(), BigRational::zero());
        let v2 = vs(&["C", "X1"]);
        let p = MultiLaurent::var(&v2, "C").try_mul(&MultiLaurent::var_pow(&v2, "X1", -1)).unwrap();
        assert_eq!(mv_eval(&p, &[rational(3, 1), rational(2, 1)]).unwrap(), rational(3, 2));
        assert_eq!(mv_eval(&p, &[rational(3, 1), BigRational::zero()]), Err(Error::ZeroAtPole("X1".into())));
    }

    #[test]
    fn univariate_embedding_round_trips() {
        let v = vs(&["q"]);
        let p = LaurentPoly::from_int_terms(&[(-2, 3), (5, -1)]);
        assert_eq!(MultiLaurent::from_laurent(&v, &p).to_laurent(), Some(p));
    }

    #[test]
    fn sampler_is_reproducible() {
        let a = sample_points(3, 8, 42);
        assert_eq!(a, sample_points(3, 8, 42));
        assert_ne!(a, sample_points(3, 8, 43));
        assert!(a
            .iter()
            .flatten()
            .all(|x| x.is_integer() && SAMPLE_RANGE.contains(&x.to_integer().try_into().unwrap())));
    }

    use proptest::prelude::*;

    fn mv_poly(v: VarSet) -> impl Strategy<Value = MultiLaurent> {
        prop::collection::vec((prop::collection::vec(-2i64..3, 3), -4i64..5), 0..5).prop_map(move |terms| {
            terms.into_iter().fold(MultiLaurent::zero(&v), |acc, (e, c)| {
                acc.try_add(&MultiLaurent::monomial(&v, rational(c, 1), e)).unwrap()
            })
        })
    }

    fn univariate() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i64..4, -3i64..4), 0..4).prop_map(|t| LaurentPoly::from_int_terms(&t))
    }

    proptest! {
        #[test]
        fn eval_is_a_homomorphism(
            p in mv_poly(vs(&["X", "Y", "Z"])),
            r in mv_poly(vs(&["X", "Y", "Z"])),
            pt in prop::collection::vec((1i64..9, 1i64..9, any::<bool>()), 3),
        ) {
            let point: Vec<_> = pt.iter().map(|&(n, d, neg)| rational(if neg { -n } else { n }, d)).collect();
            let ep = mv_eval(&p, &point).unwrap();
            let er = mv_eval(&r, &point).unwrap();
            prop_assert_eq!(mv_eval(&p.try_add(&r).unwrap(), &point).unwrap(), &ep + &er);
            prop_assert_eq!(mv_eval(&p.try_mul(&r).unwrap(), &point).unwrap(), &ep * &er);
            prop_assert_eq!(mv_eval(&p.negate(), &point).unwrap(), -ep);
        }

        #[test]
        fn det_agrees_with_univariate(entries in prop::collection::vec(univariate(), 9)) {
            let v = vs(&["q"]);
            let rows: Vec<Vec<LaurentPoly>> = entries.chunks(3).map(|c| c.to_vec()).collect();
            let mv: Vec<Vec<MultiLaurent>> =
                rows.iter().map(|r| r.iter().map(|e| MultiLaurent::from_laurent(&v, e)).collect()).collect();
            let uni = cofactor_det(&rows, &LaurentPoly::one());
            prop_assert_eq!(mv_det(&mv, DEFAULT_DET_BOUND).unwrap().to_laurent(), Some(uni));
        }
    }
}
