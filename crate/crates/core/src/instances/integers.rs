//! The rational integers with `f(a) = |a|`.
//!
//! Division with remainder picks the least nonnegative remainder,
//! `0 <= r < |divisor|`, so quotients are deterministic. Every nonzero
//! rational is a sum of reciprocals of distinct integers (peel the harmonic
//! prefix while the value is at least one, then greedy; negative values by
//! negating every denominator), which puts this instance on the Egyptian
//! branch.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::domain::{Branch, DivisionResult, EuclideanDomain, EuclideanValue, UnitGroup};
use crate::error::{Error, ParseError};
use crate::zexpand;

#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl EuclideanDomain for Integers {
    type Elem = BigInt;

    fn selector(&self) -> String {
        "z".to_string()
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn divmod(&self, dividend: &BigInt, divisor: &BigInt) -> Result<DivisionResult<BigInt>, Error> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut q, mut r) = num_integer::Integer::div_rem(dividend, divisor);
        if r.is_negative() {
            if divisor.is_positive() {
                q -= 1;
                r += divisor;
            } else {
                q += 1;
                r -= divisor;
            }
        }
        Ok(DivisionResult {
            quotient: q,
            remainder: r,
        })
    }

    fn euclidean_value(&self, a: &BigInt) -> Result<EuclideanValue, Error> {
        if a.is_zero() {
            return Err(Error::EuclideanValueOfZero);
        }
        Ok(EuclideanValue(a.abs()))
    }

    fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }

    fn canonical_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::one()
        }
    }

    fn minimal_nonunit(&self) -> BigInt {
        BigInt::from(2)
    }

    fn unit_group(&self) -> UnitGroup<BigInt> {
        UnitGroup::Finite(vec![BigInt::one(), BigInt::from(-1)])
    }

    fn known_branch(&self) -> Branch {
        Branch::Egyptian
    }

    fn egyptian_expand(&self, num: &BigInt, den: &BigInt) -> Option<Vec<BigInt>> {
        Some(zexpand::egyptian_rational(num, den))
    }

    fn expand_heavy_side(&self) -> bool {
        true
    }

    fn enumerate_up_to(&self, bound: i64) -> Result<Vec<BigInt>, Error> {
        if bound < 1 {
            return Err(Error::EnumerationBound { bound, min: 1 });
        }
        let mut out = Vec::with_capacity(2 * bound as usize);
        for v in -bound..=bound {
            if v != 0 {
                out.push(BigInt::from(v));
            }
        }
        Ok(out)
    }

    fn elem_to_string(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<BigInt, ParseError> {
        let t = s.trim();
        t.parse::<BigInt>()
            .map_err(|_| ParseError::new(format!("expected an integer, got {t:?}"), 0))
    }

    fn elem_to_json(&self, a: &BigInt) -> Value {
        Value::String(a.to_string())
    }

    fn elem_from_json(&self, v: &Value) -> Result<BigInt, ParseError> {
        match v {
            Value::String(s) => self.parse_elem(s),
            Value::Number(n) => self.parse_elem(&n.to_string()),
            _ => Err(ParseError::new(
                "expected an integer encoded as a decimal string",
                0,
            )),
        }
    }
}
