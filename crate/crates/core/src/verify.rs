//! Verification suites: each expands into independent cases that run on the
//! rayon pool and are aggregated in case order.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Error;
use crate::exact::{from_json, rf_eq, to_json, BigRational, LaurentPoly, RationalFn};
use crate::identity::{
    build_prop_matrix, dodgson_check, krat_check, krat_check_sampled, krat_specialize_check, product_rhs, prop1_check,
    prop_det, recursion_check, submatrix_identities_check, PropMatrixSpec, KRAT_POINTS, KRAT_SAMPLED_MAX,
};
use crate::lgv::{build_gf_matrix, det, det_bareiss, det_cofactor, reduce, PolyMatrix};
use crate::oracle::{family_gf, increasing_sequences, RegionSpec, DEFAULT_CAP};
use crate::paths::{gf_closed, gf_dp, gf_entry, gf_entry_closed, PathSpec};
use crate::qseries::{qpoch, MonomialArg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Ring,
    Qpoch,
    Gf,
    Lgv,
    Prop1,
    Dodgson,
    Submatrix,
    Recursion,
    Krat,
    Endtoend,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Ring,
        Suite::Qpoch,
        Suite::Gf,
        Suite::Lgv,
        Suite::Prop1,
        Suite::Dodgson,
        Suite::Submatrix,
        Suite::Recursion,
        Suite::Krat,
        Suite::Endtoend,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ring => "ring",
            Suite::Qpoch => "qpoch",
            Suite::Gf => "gf",
            Suite::Lgv => "lgv",
            Suite::Prop1 => "prop1",
            Suite::Dodgson => "dodgson",
            Suite::Submatrix => "submatrix",
            Suite::Recursion => "recursion",
            Suite::Krat => "krat",
            Suite::Endtoend => "endtoend",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_m: usize,
    pub max_k: usize,
    pub seed: u64,
    /// Enumeration cap for the family oracle.
    pub cap: u64,
    /// Number of random cases for the sampled suites.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { max_m: 3, max_k: 2, seed: 1, cap: DEFAULT_CAP, samples: 200 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
    Capped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub capped: usize,
    pub first_failure: Option<String>,
}

impl Report {
    pub fn total(&self) -> usize {
        self.passed + self.failed + self.skipped + self.capped
    }

    pub fn ok(&self) -> bool {
        self.failed == 0 && self.capped == 0
    }

    fn from_outcomes(suite: Suite, outcomes: Vec<Outcome>) -> Self {
        let mut r = Report { suite, passed: 0, failed: 0, skipped: 0, capped: 0, first_failure: None };
        for o in outcomes {
            match o {
                Outcome::Pass => r.passed += 1,
                Outcome::Skip(_) => r.skipped += 1,
                Outcome::Fail(msg) => {
                    r.failed += 1;
                    r.first_failure.get_or_insert(msg);
                }
                Outcome::Capped(msg) => {
                    r.capped += 1;
                    r.first_failure.get_or_insert(msg);
                }
            }
        }
        r
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} cases, {} passed, {} failed, {} skipped, {} over cap",
            self.suite,
            self.total(),
            self.passed,
            self.failed,
            self.skipped,
            self.capped
        )?;
        if let Some(msg) = &self.first_failure {
            write!(f, "\n  first failure: {msg}")?;
        }
        Ok(())
    }
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(what())
    }
}

fn run_cases<C: Sync>(suite: Suite, cases: Vec<C>, f: impl Fn(&C) -> Outcome + Sync + Send) -> Report {
    let outcomes: Vec<Outcome> = cases.par_iter().map(f).collect();
    Report::from_outcomes(suite, outcomes)
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Report {
    match suite {
        Suite::Ring => ring_suite(cfg),
        Suite::Qpoch => qpoch_suite(cfg),
        Suite::Gf => gf_suite(cfg),
        Suite::Lgv => lgv_suite(cfg),
        Suite::Prop1 => prop1_suite(cfg),
        Suite::Dodgson => dodgson_suite(cfg),
        Suite::Submatrix => submatrix_suite(cfg),
        Suite::Recursion => recursion_suite(cfg),
        Suite::Krat => krat_suite(cfg),
        Suite::Endtoend => endtoend_suite(cfg),
    }
}

pub fn random_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let n = rng.gen_range(0..5);
    LaurentPoly::from_terms(
        (0..n).map(|_| {
            (rng.gen_range(-4..=4), BigRational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=4).into()))
        }),
    )
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> PolyMatrix {
    PolyMatrix::from_fn(n, |_, _| random_poly(rng))
}

/// Random `(k; a)` with `1 <= m <= max_m`, `k <= max_k`, entries of `a` in `lo..=hi`.
pub fn random_spec(rng: &mut ChaCha8Rng, max_m: usize, max_k: usize, lo: i64, hi: i64) -> PropMatrixSpec {
    let width = (hi - lo + 1) as usize;
    let m = rng.gen_range(1..=max_m.min(width));
    let k = rng.gen_range(0..=max_k);
    let mut a = rand::seq::index::sample(rng, width, m).into_iter().map(|i| lo + i as i64).collect::<Vec<_>>();
    a.sort_unstable();
    PropMatrixSpec::new(k, a).expect("sorted distinct")
}

fn ring_suite(cfg: &VerifyConfig) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let cases: Vec<[LaurentPoly; 3]> =
        (0..cfg.samples).map(|_| [random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng)]).collect();
    let point = BigRational::new(3.into(), 2.into());
    run_cases(Suite::Ring, cases, |[p, r, s]| {
        let laws = [
            (&(p + r) + s == p + &(r + s), "addition is associative"),
            (&(p * r) * s == p * &(r * s), "multiplication is associative"),
            (p * r == r * p, "multiplication is commutative"),
            (p * &(r + s) == &(p * r) + &(p * s), "distributivity"),
            ((p + &p.scale(&BigRational::from_integer((-1).into()))).is_zero(), "additive inverse"),
            (
                (p * r).substitute_power(3) == &p.substitute_power(3) * &r.substitute_power(3),
                "substitution is multiplicative",
            ),
            ((p + r).eval(&point) == p.eval(&point).zip(r.eval(&point)).map(|(x, y)| x + y), "evaluation is additive"),
            (from_json(&to_json(p)).as_ref() == Ok(p), "json round trip"),
        ];
        match laws.iter().find(|(ok, _)| !ok) {
            None => Outcome::Pass,
            Some((_, law)) => Outcome::Fail(format!("{law} fails for p={p}, r={r}, s={s}")),
        }
    })
}

fn qpoch_suite(cfg: &VerifyConfig) -> Report {
    let mut cases = Vec::new();
    for m in 1..=cfg.max_m as i64 {
        for k in 0..=cfg.max_k as i64 {
            for a in -6..=6 {
                for i in 1..=m {
                    cases.push((m, k, a, i));
                }
            }
        }
    }
    run_cases(Suite::Qpoch, cases, |&(m, k, a, i)| {
        let lhs = qpoch(MonomialArg::pos(i - a), 1, (2 * m + k - 2 * i) as u32);
        let rhs = &(&qpoch(MonomialArg::pos(i - a), 1, (m - i) as u32) * &qpoch(MonomialArg::pos(m - a), 1, k as u32))
            * &qpoch(MonomialArg::pos(m + k - a), 1, (m - i) as u32);
        check(lhs == rhs, || format!("splitting fails for m={m} k={k} a={a} i={i}"))
    })
}

#[derive(Debug, Clone, Copy)]
enum GfCase {
    Closed(PathSpec),
    Entry { i: i64, m: i64, k: i64, dent: i64 },
}

fn gf_suite(cfg: &VerifyConfig) -> Report {
    let mut cases = Vec::new();
    for a in -5..=5 {
        for d in -5..=5 {
            for dx in 0..=6 {
                for dy in 0..=6 {
                    cases.push(GfCase::Closed(PathSpec::new(a, d + dy, a + dx, d)));
                }
            }
        }
    }
    for m in 1..=cfg.max_m as i64 {
        for k in 0..=cfg.max_k as i64 {
            for i in 1..=m {
                for dent in -(m + k - 1)..i {
                    cases.push(GfCase::Entry { i, m, k, dent });
                }
            }
        }
    }
    run_cases(Suite::Gf, cases, |c| match *c {
        GfCase::Closed(spec) => match gf_closed(&spec) {
            Ok(f) => check(f.equals_poly(&gf_dp(&spec)), || format!("closed form differs for {spec:?}")),
            Err(e) => Outcome::Fail(format!("{spec:?}: {e}")),
        },
        GfCase::Entry { i, m, k, dent } => {
            check(gf_entry_closed(i, m, k, dent).equals_poly(&gf_entry(i, m, k, dent)), || {
                format!("entry closed form differs for i={i} m={m} k={k} a={dent}")
            })
        }
    })
}

fn admissible_regions(max_m: usize, max_k: usize) -> Vec<RegionSpec> {
    (1..=max_m).flat_map(|m| (0..=max_k).flat_map(move |k| RegionSpec::all_admissible(m, k))).collect()
}

fn lgv_suite(cfg: &VerifyConfig) -> Report {
    let regions = admissible_regions(cfg.max_m, cfg.max_k);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let matrices: Vec<PolyMatrix> = (0..cfg.samples).map(|i| random_matrix(&mut rng, 1 + i % 5)).collect();
    let mut cases: Vec<Result<RegionSpec, PolyMatrix>> = regions.into_iter().map(Ok).collect();
    cases.extend(matrices.into_iter().map(Err));
    run_cases(Suite::Lgv, cases, |c| match c {
        Ok(region) => {
            let tiling = det(&build_gf_matrix(region)).expect("exact determinant");
            let oracle = match family_gf(region, cfg.cap) {
                Ok(g) => g,
                Err(Error::CapExceeded { cap }) => return Outcome::Capped(format!("{region:?} exceeds cap {cap}")),
                Err(e) => return Outcome::Fail(format!("{region:?}: {e}")),
            };
            if oracle != tiling {
                return Outcome::Fail(format!("{region:?}: determinant differs from family sum"));
            }
            let (p, r) = reduce(region);
            let det_r = det(&r).expect("exact determinant");
            if !p.mul_poly(&det_r).equals_poly(&tiling) {
                return Outcome::Fail(format!("{region:?}: prefactor times reduced determinant differs"));
            }
            let spec = PropMatrixSpec::new(region.k(), region.dents().values().to_vec()).expect("valid dents");
            check(det_r == prop_det(&spec).substitute_power(4), || {
                format!("{region:?}: reduced determinant is not d(k;a) at q^4")
            })
        }
        Err(m) => match det_bareiss(m) {
            Ok(d) => check(d == det_cofactor(m), || format!("elimination and expansion differ on {m:?}")),
            Err(e) => Outcome::Fail(format!("{m:?}: {e}")),
        },
    })
}

fn prop1_suite(cfg: &VerifyConfig) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let cases: Vec<_> = (0..cfg.samples).map(|_| random_spec(&mut rng, cfg.max_m.max(1), cfg.max_k, -6, 6)).collect();
    run_cases(Suite::Prop1, cases, |s| check(prop1_check(s), || format!("determinant differs from product for {s:?}")))
}

fn dodgson_suite(cfg: &VerifyConfig) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let top = cfg.max_m.clamp(2, 5);
    let mut cases: Vec<PolyMatrix> = (0..cfg.samples).map(|i| random_matrix(&mut rng, 2 + i % (top - 1))).collect();
    for _ in 0..cfg.samples / 4 {
        let s = random_spec(&mut rng, top, cfg.max_k, -6, 6);
        if s.m() >= 2 {
            cases.push(build_prop_matrix(&s));
        }
    }
    run_cases(Suite::Dodgson, cases, |m| match dodgson_check(m) {
        Ok(ok) => check(ok, || format!("condensation fails for {m:?}")),
        Err(e) => Outcome::Fail(e.to_string()),
    })
}

/// `(k; a)` with `2 <= m <= max_m`, `k <= max_k`, `a` inside `[-5, 4]` and `a_m < m`.
pub fn condensation_specs(max_m: usize, max_k: usize) -> Vec<PropMatrixSpec> {
    let mut out = Vec::new();
    for m in 2..=max_m {
        for k in 0..=max_k {
            for a in increasing_sequences(-5, (m as i64 - 1).min(4), m) {
                out.push(PropMatrixSpec::new(k, a).expect("increasing"));
            }
        }
    }
    out
}

fn submatrix_suite(cfg: &VerifyConfig) -> Report {
    run_cases(Suite::Submatrix, condensation_specs(cfg.max_m, cfg.max_k), |s| match submatrix_identities_check(s) {
        Ok(ok) => check(ok, || format!("submatrix identity fails for {s:?}")),
        Err(e) => Outcome::Fail(format!("{s:?}: {e}")),
    })
}

fn recursion_suite(cfg: &VerifyConfig) -> Report {
    run_cases(Suite::Recursion, condensation_specs(cfg.max_m, cfg.max_k), |s| match recursion_check(s) {
        Ok(ok) => check(ok, || format!("recursion fails for {s:?}")),
        Err(Error::ZeroDenominator) => Outcome::Skip(format!("{s:?}: zero denominator")),
        Err(e) => Outcome::Fail(format!("{s:?}: {e}")),
    })
}

#[derive(Debug, Clone)]
enum KratCase {
    Lemma(usize),
    Sampled(usize),
    Specialize(PropMatrixSpec),
}

fn krat_suite(cfg: &VerifyConfig) -> Report {
    let top = cfg.max_m.min(KRAT_SAMPLED_MAX);
    let mut cases: Vec<KratCase> = (1..=top).map(KratCase::Lemma).collect();
    cases.extend((1..=top).map(KratCase::Sampled));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    cases.extend(
        (0..cfg.samples / 4).map(|_| KratCase::Specialize(random_spec(&mut rng, top.max(1), cfg.max_k, -6, 6))),
    );
    run_cases(Suite::Krat, cases, |c| match c {
        KratCase::Lemma(m) => match krat_check(*m) {
            Ok(ok) => check(ok, || format!("lemma fails for m={m}")),
            Err(e) => Outcome::Fail(e.to_string()),
        },
        KratCase::Sampled(m) => match krat_check_sampled(*m, KRAT_POINTS, cfg.seed) {
            Ok(ok) => check(ok, || format!("lemma fails at sampled points for m={m}, seed {}", cfg.seed)),
            Err(e) => Outcome::Fail(e.to_string()),
        },
        KratCase::Specialize(s) => {
            let (spec_ok, prop_ok) = (krat_specialize_check(s), prop1_check(s));
            check(spec_ok && prop_ok, || format!("specialisation {spec_ok}, product {prop_ok} for {s:?}"))
        }
    })
}

/// Family sum, determinant and closed product for one region.
pub fn endtoend_case(region: &RegionSpec, cap: u64) -> Outcome {
    let oracle = match family_gf(region, cap) {
        Ok(g) => g,
        Err(Error::CapExceeded { cap }) => return Outcome::Capped(format!("{region:?} exceeds cap {cap}")),
        Err(e) => return Outcome::Fail(format!("{region:?}: {e}")),
    };
    let tiling = det(&build_gf_matrix(region)).expect("exact determinant");
    let closed = closed_gf(region);
    if oracle != tiling {
        Outcome::Fail(format!("{region:?}: family sum differs from determinant"))
    } else if !rf_eq(&closed, &RationalFn::from_poly(tiling)) {
        Outcome::Fail(format!("{region:?}: product formula differs from determinant"))
    } else {
        Outcome::Pass
    }
}

/// `P * d(k; a)` at `q^4`, with `d` given by its product formula.
pub fn closed_gf(region: &RegionSpec) -> RationalFn {
    let (p, _) = reduce(region);
    let spec = PropMatrixSpec::new(region.k(), region.dents().values().to_vec()).expect("valid dents");
    p.mul_poly(&product_rhs(&spec).substitute_power(4))
}

fn endtoend_suite(cfg: &VerifyConfig) -> Report {
    run_cases(Suite::Endtoend, admissible_regions(cfg.max_m, cfg.max_k), |r| endtoend_case(r, cfg.cap))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig { max_m: 3, max_k: 1, seed: 7, cap: DEFAULT_CAP, samples: 40 }
    }

    #[test]
    fn every_suite_passes_small() {
        for s in Suite::ALL {
            let r = run_suite(s, &small());
            assert!(r.ok(), "{r}");
            assert!(r.passed > 0, "{r}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite(Suite::Prop1, &small());
        let b = run_suite(Suite::Prop1, &small());
        assert_eq!(a, b);
    }

    #[test]
    fn failures_are_aggregated_in_order() {
        let r = Report::from_outcomes(
            Suite::Gf,
            vec![Outcome::Pass, Outcome::Fail("a".into()), Outcome::Skip("s".into()), Outcome::Fail("b".into())],
        );
        assert_eq!((r.passed, r.failed, r.skipped), (1, 2, 1));
        assert_eq!(r.first_failure.as_deref(), Some("a"));
        assert!(!r.ok());
    }

    #[test]
    fn cap_is_reported() {
        let cfg = VerifyConfig { cap: 10, ..small() };
        let r = run_suite(Suite::Endtoend, &cfg);
        assert!(r.capped > 0 && !r.ok());
    }

    #[test]
    fn random_specs_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let s = random_spec(&mut rng, 5, 4, -6, 6);
            assert!((1..=5).contains(&s.m()) && s.k <= 4);
            assert!(s.a.values().iter().all(|a| (-6..=6).contains(a)));
        }
    }
}
