//! Canonical JSON encoding of Laurent polynomials and rational functions.
//!
//! `{"var":"q","terms":[{"exp":-3,"num":"1","den":"4"}]}` with terms in
//! ascending exponent order, reduced fractions, positive denominators and no
//! zero coefficients. The parser rejects anything that is not already in this
//! form, so parse followed by serialise reproduces the input byte for byte.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{BigRational, LaurentPoly, RationalFn};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    exp: i64,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    var: String,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalFnJson {
    num: PolyJson,
    den: PolyJson,
}

fn to_json_struct(p: &LaurentPoly) -> PolyJson {
    PolyJson {
        var: "q".to_string(),
        terms: p
            .terms()
            .map(|(exp, c)| TermJson { exp, num: c.numer().to_string(), den: c.denom().to_string() })
            .collect(),
    }
}

fn parse_decimal(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    let canonical = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'))
        && !(s.starts_with('-') && digits == "0");
    if !canonical {
        return Err(Error::Json(format!("not a canonical decimal integer: {s:?}")));
    }
    s.parse::<BigInt>().map_err(|e| Error::Json(e.to_string()))
}

fn from_json_struct(p: PolyJson) -> Result<LaurentPoly> {
    if p.var != "q" {
        return Err(Error::Json(format!("unsupported variable {:?}", p.var)));
    }
    let mut prev: Option<i64> = None;
    let mut pairs = Vec::with_capacity(p.terms.len());
    for t in p.terms {
        if prev.is_some_and(|e| e >= t.exp) {
            return Err(Error::Json("terms must be strictly ascending by exponent".into()));
        }
        prev = Some(t.exp);
        let num = parse_decimal(&t.num)?;
        let den = parse_decimal(&t.den)?;
        if !den.is_positive() {
            return Err(Error::Json("denominator must be positive".into()));
        }
        if num.is_zero() {
            return Err(Error::Json("zero coefficient".into()));
        }
        if !num_integer::Integer::gcd(&num, &den).is_one() {
            return Err(Error::Json("fraction not in lowest terms".into()));
        }
        pairs.push((t.exp, BigRational::new_raw(num, den)));
    }
    Ok(LaurentPoly::from_terms(pairs))
}

pub fn to_json(p: &LaurentPoly) -> String {
    serde_json::to_string(&to_json_struct(p)).expect("serialising plain data cannot fail")
}

pub fn from_json(s: &str) -> Result<LaurentPoly> {
    let raw: PolyJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    from_json_struct(raw)
}

pub fn rational_fn_to_json(f: &RationalFn) -> String {
    let raw = RationalFnJson { num: to_json_struct(f.num()), den: to_json_struct(f.den()) };
    serde_json::to_string(&raw).expect("serialising plain data cannot fail")
}

pub fn rational_fn_from_json(s: &str) -> Result<RationalFn> {
    let raw: RationalFnJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    let num = from_json_struct(raw.num)?;
    let den = from_json_struct(raw.den)?;
    RationalFn::new(num, den).ok_or_else(|| Error::Json("zero denominator polynomial".into()))
}
