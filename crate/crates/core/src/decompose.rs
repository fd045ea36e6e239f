//! Unit-fraction decomposition and certificate verification.
//!
//! The generic decomposer [`euclid_decompose`] works in any instance under
//! the precondition `f(num) <= f(den)`: if the numerator `a` is a unit, the
//! fraction `a/b` is itself the unit fraction `1/(a^-1 b)`; otherwise divide
//! `b = q a + r` and rewrite `a/b = 1/q + r/(-b q)`. The Euclidean value of
//! the numerator strictly decreases at every step (`f(r) < f(a)`), which
//! both terminates the loop and bounds the output length by
//! `f(a) - f(1) + 1`.
//!
//! Over the integers three more front ends are provided: the classical
//! greedy expansion on `(0, 1)`, the harmonic-peel extension to all positive
//! rationals, and a duplicate eliminator, so that every rational obtains a
//! certificate with distinct denominators.
//!
//! Verification never trusts a stored flag: [`verify`] recomputes the exact
//! reciprocal sum and the distinctness of the denominator list.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::domain::{EuclideanDomain, EuclideanValue};
use crate::error::{Error, ParseError};
use crate::fraction::Fraction;
use crate::instances::Integers;
use crate::zexpand;

/// How a certificate was produced.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "euclid")]
    Euclid,
    #[serde(rename = "greedy")]
    Greedy,
    #[serde(rename = "integer+greedy")]
    IntegerGreedy,
    #[serde(rename = "distinctify")]
    Distinctify,
    #[serde(rename = "search")]
    Search,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Euclid => "euclid",
            Method::Greedy => "greedy",
            Method::IntegerGreedy => "integer+greedy",
            Method::Distinctify => "distinctify",
            Method::Search => "search",
        }
    }

    pub fn parse(s: &str) -> Result<Self, ParseError> {
        match s {
            "euclid" => Ok(Method::Euclid),
            "greedy" => Ok(Method::Greedy),
            "integer+greedy" => Ok(Method::IntegerGreedy),
            "distinctify" => Ok(Method::Distinctify),
            "search" => Ok(Method::Search),
            _ => Err(ParseError::new(format!("unknown method {s:?}"), 0)),
        }
    }
}

/// A unit-fraction certificate: `sum over i of 1/denominators[i] = target`.
///
/// The denominator list is a multiset; `distinct` records whether its
/// entries are pairwise distinct as canonical elements. Negative or
/// otherwise non-canonical denominators are permitted (the Euclidean step
/// emits `-b q`); verification is by summation, not by sign convention.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition<E> {
    pub domain: String,
    pub target: Fraction<E>,
    pub denominators: Vec<E>,
    pub distinct: bool,
    pub method: Method,
}

fn pairwise_distinct<E: Ord>(denoms: &[E]) -> bool {
    let set: BTreeSet<&E> = denoms.iter().collect();
    set.len() == denoms.len()
}

impl<E: Clone + Eq + Ord + std::hash::Hash + std::fmt::Debug> Decomposition<E> {
    pub fn new<D: EuclideanDomain<Elem = E>>(
        dom: &D,
        target: Fraction<E>,
        denominators: Vec<E>,
        method: Method,
    ) -> Self {
        let distinct = pairwise_distinct(&denominators);
        Decomposition {
            domain: dom.selector(),
            target,
            denominators,
            distinct,
            method,
        }
    }

    pub fn len(&self) -> usize {
        self.denominators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.denominators.is_empty()
    }
}

/// Outcome of re-checking a certificate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport<E> {
    pub valid: bool,
    pub distinct: bool,
    pub sum: Option<Fraction<E>>,
    pub reason: Option<String>,
}

/// Recompute the reciprocal sum of a certificate and compare it with the
/// stored target. Stored flags are ignored; distinctness is recomputed.
pub fn verify<D: EuclideanDomain>(dom: &D, dec: &Decomposition<D::Elem>) -> VerifyReport<D::Elem> {
    if dec.denominators.iter().any(|d| dom.is_zero(d)) {
        return VerifyReport {
            valid: false,
            distinct: false,
            sum: None,
            reason: Some("certificate contains a zero denominator".to_string()),
        };
    }
    let mut sum = Fraction::zero(dom);
    for d in &dec.denominators {
        let term = Fraction::reciprocal_of(dom, d).expect("denominator is nonzero");
        sum = sum.add(dom, &term);
    }
    let valid = sum == dec.target;
    VerifyReport {
        valid,
        distinct: pairwise_distinct(&dec.denominators),
        reason: (!valid).then(|| "reciprocal sum differs from the target".to_string()),
        sum: Some(sum),
    }
}

/// The Euclidean decomposition of a reduced fraction with
/// `f(num) <= f(den)`. The zero fraction yields the empty certificate.
pub fn euclid_decompose<D: EuclideanDomain>(
    dom: &D,
    alpha: &Fraction<D::Elem>,
) -> Result<Decomposition<D::Elem>, Error> {
    euclid_decompose_traced(dom, alpha).map(|(dec, _)| dec)
}

/// As [`euclid_decompose`], also returning the Euclidean value of the
/// running numerator at each step. Strict decrease of that sequence is the
/// termination measure and is asserted while decomposing.
///
/// The running pair is kept raw: the recursion step hands `(r, -b q)` to
/// the next round exactly as produced, no mid-chain reduction.
pub fn euclid_decompose_traced<D: EuclideanDomain>(
    dom: &D,
    alpha: &Fraction<D::Elem>,
) -> Result<(Decomposition<D::Elem>, Vec<EuclideanValue>), Error> {
    if alpha.is_zero(dom) {
        return Ok((
            Decomposition::new(dom, alpha.clone(), Vec::new(), Method::Euclid),
            Vec::new(),
        ));
    }
    let mut num = alpha.num().clone();
    let mut den = alpha.den().clone();
    let mut measure = dom.euclidean_value(&num)?;
    if measure > dom.euclidean_value(&den)? {
        return Err(Error::NotGuaranteedEgyptian);
    }
    let mut trace = vec![measure.clone()];
    let mut denominators = Vec::new();
    loop {
        if let Some(inv) = dom.inverse(&num) {
            denominators.push(dom.mul(&inv, &den));
            break;
        }
        let step = dom.divmod(&den, &num)?; // den = q*num + r
        let q = step.quotient;
        let r = step.remainder;
        debug_assert!(
            !dom.is_zero(&q),
            "quotient vanishes only if f(num) > f(den)"
        );
        if dom.is_zero(&r) {
            denominators.push(q);
            break;
        }
        denominators.push(q.clone());
        // num/den = 1/q + r/(-den q), and f(r) < f(num) <= f(den) <= f(den q)
        den = dom.neg(&dom.mul(&den, &q));
        let next_measure = dom.euclidean_value(&r)?;
        assert!(
            next_measure < measure,
            "termination measure failed to decrease"
        );
        debug_assert!(next_measure <= dom.euclidean_value(&den)?);
        trace.push(next_measure.clone());
        measure = next_measure;
        num = r;
    }
    Ok((
        Decomposition::new(dom, alpha.clone(), denominators, Method::Euclid),
        trace,
    ))
}

/// Greedy (largest unit fraction first) expansion of a rational strictly
/// between 0 and 1. Denominators come out strictly increasing, hence
/// distinct.
pub fn greedy_decompose_z(alpha: &Fraction<BigInt>) -> Result<Decomposition<BigInt>, Error> {
    let z = Integers;
    if !alpha.num().is_positive() || alpha.num() >= alpha.den() {
        return Err(Error::GreedyRange);
    }
    let mut denoms = Vec::new();
    zexpand::greedy_floor(alpha.num(), alpha.den(), &BigInt::from(0), &mut denoms);
    Ok(Decomposition::new(
        &z,
        alpha.clone(),
        denoms,
        Method::Greedy,
    ))
}

/// Expansion of a positive rational: peel `1/1, 1/2, ...` while the value is
/// at least one, then delegate to greedy with all further denominators
/// forced above the peeled ones. Output length grows like `e^alpha`, which
/// is intrinsic: a sum of `k` unit fractions cannot exceed `k`.
pub fn integer_expand(alpha: &Fraction<BigInt>) -> Result<Decomposition<BigInt>, Error> {
    let z = Integers;
    if !alpha.num().is_positive() {
        return Err(Error::NonPositiveTarget);
    }
    let mut denoms = Vec::new();
    zexpand::expand_positive_floor(alpha.num(), alpha.den(), &BigInt::from(0), &mut denoms);
    Ok(Decomposition::new(
        &z,
        alpha.clone(),
        denoms,
        Method::IntegerGreedy,
    ))
}

/// Rewrite an integer certificate into one with pairwise distinct
/// denominators and the same target. Positive duplicates are resolved
/// smallest-first by `1/n = 1/(n+1) + 1/(n(n+1))`; excess copies of
/// duplicated negative denominators are merged exactly and re-expanded by
/// greedy above every kept magnitude. Already-distinct input is returned
/// unchanged.
pub fn distinctify_z(dec: &Decomposition<BigInt>) -> Result<Decomposition<BigInt>, Error> {
    if dec.denominators.iter().any(|d| d.is_zero()) {
        return Err(Error::ZeroDenominator);
    }
    if pairwise_distinct(&dec.denominators) {
        let mut out = dec.clone();
        out.distinct = true;
        return Ok(out);
    }
    let z = Integers;
    let denoms = zexpand::split_duplicates(&dec.denominators);
    Ok(Decomposition::new(
        &z,
        dec.target.clone(),
        denoms,
        Method::Distinctify,
    ))
}

#[derive(Serialize)]
struct TargetJson {
    num: Value,
    den: Value,
}

#[derive(Serialize)]
struct CertJson {
    domain: String,
    target: TargetJson,
    denominators: Vec<Value>,
    distinct: bool,
    method: &'static str,
}

/// Certificate JSON:
/// `{"domain", "target": {"num", "den"}, "denominators", "distinct", "method"}`
/// with elements in the instance encodings.
pub fn decomposition_to_json<D: EuclideanDomain>(dom: &D, dec: &Decomposition<D::Elem>) -> Value {
    serde_json::to_value(CertJson {
        domain: dec.domain.clone(),
        target: TargetJson {
            num: dom.elem_to_json(dec.target.num()),
            den: dom.elem_to_json(dec.target.den()),
        },
        denominators: dec
            .denominators
            .iter()
            .map(|d| dom.elem_to_json(d))
            .collect(),
        distinct: dec.distinct,
        method: dec.method.as_str(),
    })
    .expect("certificate serialization cannot fail")
}

pub fn decomposition_from_json<D: EuclideanDomain>(
    dom: &D,
    v: &Value,
) -> Result<Decomposition<D::Elem>, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| ParseError::new("certificate must be a JSON object", 0))?;
    let domain = obj
        .get("domain")
        .and_then(Value::as_str)
        .ok_or_else(|| ParseError::new("certificate is missing \"domain\"", 0))?;
    if domain != dom.selector() {
        return Err(Error::DomainMismatch {
            expected: dom.selector(),
            found: domain.to_string(),
        });
    }
    let target = Fraction::from_json(
        dom,
        obj.get("target")
            .ok_or_else(|| ParseError::new("certificate is missing \"target\"", 0))?,
    )?;
    let arr = obj
        .get("denominators")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::new("certificate is missing \"denominators\"", 0))?;
    let mut denominators = Vec::with_capacity(arr.len());
    for d in arr {
        denominators.push(dom.elem_from_json(d)?);
    }
    let method = match obj.get("method").and_then(Value::as_str) {
        Some(s) => Method::parse(s)?,
        None => Method::Euclid,
    };
    Ok(Decomposition::new(dom, target, denominators, method))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{Fp, GaussianIntegers, PolyRing, Rationals};
    use num_rational::BigRational;
    use num_traits::One;

    fn zfrac(n: i64, d: i64) -> Fraction<BigInt> {
        Fraction::reduce(&Integers, BigInt::from(n), BigInt::from(d)).unwrap()
    }

    /// Independent oracle for integer certificates: exact `BigRational`
    /// summation, no shared code with `verify`.
    fn rational_sum(denoms: &[BigInt]) -> BigRational {
        denoms
            .iter()
            .map(|d| BigRational::new(BigInt::one(), d.clone()))
            .sum()
    }

    #[test]
    fn euclid_four_fifths() {
        let z = Integers;
        let dec = euclid_decompose(&z, &zfrac(4, 5)).unwrap();
        let expect: Vec<BigInt> = [1, -5].map(BigInt::from).into();
        assert_eq!(dec.denominators, expect);
        assert_eq!(
            rational_sum(&dec.denominators),
            BigRational::new(4.into(), 5.into())
        );
        assert!(verify(&z, &dec).valid);
        assert!(dec.distinct);
    }

    #[test]
    fn euclid_f2_example() {
        let f2 = PolyRing::new(Fp::new(2).unwrap());
        let alpha = Fraction::parse(&f2, "(x+1)/x").unwrap();
        let dec = euclid_decompose(&f2, &alpha).unwrap();
        let expect = vec![f2.one(), f2.parse_elem("x").unwrap()];
        assert_eq!(dec.denominators, expect);
        assert!(verify(&f2, &dec).valid);
    }

    #[test]
    fn euclid_gaussian_example() {
        let zi = GaussianIntegers;
        let alpha = Fraction::parse(&zi, "(1+i)/2").unwrap();
        let dec = euclid_decompose(&zi, &alpha).unwrap();
        assert_eq!(dec.denominators, vec![zi.parse_elem("1-i").unwrap()]);
        assert!(verify(&zi, &dec).valid);
    }

    #[test]
    fn euclid_rejects_heavy_numerator() {
        let z = Integers;
        assert_eq!(
            euclid_decompose(&z, &zfrac(7, 3)).unwrap_err(),
            Error::NotGuaranteedEgyptian
        );
    }

    #[test]
    fn euclid_zero_is_empty() {
        let z = Integers;
        let dec = euclid_decompose(&z, &Fraction::zero(&z)).unwrap();
        assert!(dec.is_empty());
        assert!(verify(&z, &dec).valid);
    }

    #[test]
    fn euclid_trace_decreases_and_bounds_length() {
        let z = Integers;
        for (n, d) in [(4, 5), (5, 7), (99, 101), (-4, 5), (17, 100)] {
            let alpha = zfrac(n, d);
            let (dec, trace) = euclid_decompose_traced(&z, &alpha).unwrap();
            for w in trace.windows(2) {
                assert!(w[1] < w[0]);
            }
            // at most f(num) - f(1) + 1 terms
            let bound = alpha.num().abs();
            assert!(BigInt::from(dec.len()) <= bound);
            assert!(verify(&z, &dec).valid);
        }
    }

    #[test]
    fn greedy_examples() {
        let dec = greedy_decompose_z(&zfrac(4, 5)).unwrap();
        let expect: Vec<BigInt> = [2, 4, 20].map(BigInt::from).into();
        assert_eq!(dec.denominators, expect);
        assert_eq!(
            rational_sum(&dec.denominators),
            BigRational::new(4.into(), 5.into())
        );

        let dec = greedy_decompose_z(&zfrac(1, 2)).unwrap();
        assert_eq!(dec.denominators, vec![BigInt::from(2)]);

        let dec = greedy_decompose_z(&zfrac(2, 3)).unwrap();
        let expect: Vec<BigInt> = [2, 6].map(BigInt::from).into();
        assert_eq!(dec.denominators, expect);
        assert_eq!(
            rational_sum(&dec.denominators),
            BigRational::new(2.into(), 3.into())
        );

        assert_eq!(
            greedy_decompose_z(&zfrac(7, 3)).unwrap_err(),
            Error::GreedyRange
        );
        assert_eq!(
            greedy_decompose_z(&zfrac(-1, 2)).unwrap_err(),
            Error::GreedyRange
        );
    }

    #[test]
    fn greedy_strictly_increasing() {
        for (n, d) in [(4i64, 5i64), (5, 121), (17, 29), (9, 10)] {
            let dec = greedy_decompose_z(&zfrac(n, d)).unwrap();
            for w in dec.denominators.windows(2) {
                assert!(w[0] < w[1]);
            }
            assert!(dec.distinct);
        }
    }

    #[test]
    fn integer_expand_examples() {
        let dec = integer_expand(&zfrac(2, 1)).unwrap();
        let expect: Vec<BigInt> = [1, 2, 3, 6].map(BigInt::from).into();
        assert_eq!(dec.denominators, expect);
        assert_eq!(
            rational_sum(&dec.denominators),
            BigRational::from(BigInt::from(2))
        );

        let dec = integer_expand(&zfrac(1, 1)).unwrap();
        assert_eq!(dec.denominators, vec![BigInt::one()]);

        let dec = integer_expand(&zfrac(11, 6)).unwrap();
        let expect: Vec<BigInt> = [1, 2, 3].map(BigInt::from).into();
        assert_eq!(dec.denominators, expect);
        assert_eq!(dec.method, Method::IntegerGreedy);
    }

    #[test]
    fn distinctify_examples() {
        let z = Integers;
        let two_thirds = Decomposition::new(
            &z,
            zfrac(2, 3),
            [3, 3].map(BigInt::from).into(),
            Method::Greedy,
        );
        let out = distinctify_z(&two_thirds).unwrap();
        let expect: Vec<BigInt> = [3, 4, 12].map(BigInt::from).into();
        assert_eq!(out.denominators, expect);
        assert!(verify(&z, &out).valid);

        let one = Decomposition::new(
            &z,
            zfrac(1, 1),
            [2, 2].map(BigInt::from).into(),
            Method::Greedy,
        );
        let out = distinctify_z(&one).unwrap();
        let expect: Vec<BigInt> = [2, 3, 6].map(BigInt::from).into();
        assert_eq!(out.denominators, expect);
        assert!(verify(&z, &out).valid);

        // already distinct: unchanged
        let dec = greedy_decompose_z(&zfrac(4, 5)).unwrap();
        let out = distinctify_z(&dec).unwrap();
        assert_eq!(out, dec);
    }

    #[test]
    fn verify_rejects_bad_sums_and_zero_denominators() {
        let z = Integers;
        let bogus = Decomposition::new(
            &z,
            zfrac(1, 2),
            [3, 3].map(BigInt::from).into(),
            Method::Greedy,
        );
        let rep = verify(&z, &bogus);
        assert!(!rep.valid);
        assert_eq!(rep.sum, Some(zfrac(2, 3)));

        let zero = Decomposition::new(
            &z,
            zfrac(1, 2),
            vec![BigInt::from(2), BigInt::from(0)],
            Method::Greedy,
        );
        let rep = verify(&z, &zero);
        assert!(!rep.valid);
        assert!(rep.reason.unwrap().contains("zero denominator"));
    }

    #[test]
    fn verify_double_half() {
        let z = Integers;
        let dec = Decomposition::new(
            &z,
            zfrac(1, 1),
            [2, 2].map(BigInt::from).into(),
            Method::Greedy,
        );
        let rep = verify(&z, &dec);
        assert!(rep.valid);
        assert!(!rep.distinct);
    }

    #[test]
    fn json_round_trip() {
        let f2 = PolyRing::new(Fp::new(2).unwrap());
        let alpha = Fraction::parse(&f2, "(x+1)/x").unwrap();
        let dec = euclid_decompose(&f2, &alpha).unwrap();
        let v = decomposition_to_json(&f2, &dec);
        let back = decomposition_from_json(&f2, &v).unwrap();
        assert_eq!(back, dec);

        let qx = PolyRing::new(Rationals);
        assert!(matches!(
            decomposition_from_json(&qx, &v),
            Err(Error::DomainMismatch { .. })
        ));
    }
}
