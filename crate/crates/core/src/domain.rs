//! The Euclidean-domain abstraction.
//!
//! A domain instance is a small immutable handle implementing
//! [`EuclideanDomain`]; elements are plain data owned by the caller. Every
//! operation is a pure function of the handle and its element arguments, so
//! handles can be shared freely across threads.
//!
//! The contract of [`EuclideanDomain::euclidean_value`] (written `f` below)
//! and [`EuclideanDomain::divmod`] is the usual pair of axioms:
//!
//! * `f(ab) >= f(a)` for nonzero `a`, `b`;
//! * for nonzero divisor `a` and any `b` there are `q`, `r` with
//!   `b = q*a + r` and either `r = 0` or `f(r) < f(a)`.
//!
//! Each instance additionally fixes a deterministic choice of `q`, `r` and a
//! canonical associate per element class, so that fractions have a unique
//! reduced form and certificates are reproducible.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, ParseError};

/// The integer `f(a)` assigned to a nonzero element by the instance's
/// Euclidean function: `|a|` on the integers, the norm on the Gaussian
/// integers, the degree on polynomial rings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EuclideanValue(pub BigInt);

impl EuclideanValue {
    pub fn from_i64(v: i64) -> Self {
        EuclideanValue(BigInt::from(v))
    }
}

impl std::fmt::Display for EuclideanValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Quotient and remainder of a division: `dividend = quotient * divisor + remainder`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisionResult<E> {
    pub quotient: E,
    pub remainder: E,
}

/// The side of the main dichotomy that is analytically established for an
/// instance: either every nonzero fraction is a sum of unit fractions
/// (`Egyptian`, so R(D) is the whole fraction field), or membership in R(D)
/// is cut out by the Euclidean value and R(D) is a discrete valuation ring
/// (`Dvr`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    Egyptian,
    Dvr,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Egyptian => "egyptian",
            Branch::Dvr => "dvr",
        }
    }
}

/// The unit group of an instance: an explicit finite list, or the marker for
/// "all nonzero elements of the coefficient field" when that group is
/// infinite.
#[derive(Clone, Debug)]
pub enum UnitGroup<E> {
    Finite(Vec<E>),
    CoefficientField { description: String },
}

/// A concrete Euclidean domain: ring operations, division with remainder,
/// the Euclidean function, unit handling, canonical forms and text/JSON
/// encodings for its elements.
pub trait EuclideanDomain {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    /// The CLI/JSON selector: `"z"`, `"zi"`, `"fp:<p>"` or `"qx"`.
    fn selector(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Division with remainder: `dividend = q * divisor + r` with `r = 0` or
    /// `f(r) < f(divisor)`. Deterministic per instance.
    fn divmod(
        &self,
        dividend: &Self::Elem,
        divisor: &Self::Elem,
    ) -> Result<DivisionResult<Self::Elem>, Error>;

    /// The Euclidean function `f`, defined for nonzero elements.
    fn euclidean_value(&self, a: &Self::Elem) -> Result<EuclideanValue, Error>;

    /// `Some(a^-1)` when `a` divides 1, `None` otherwise (zero included).
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// The unit `u` such that `u * a` is the canonical associate of `a`:
    /// positive for integers, monic for polynomials, in the half-quadrant
    /// `re > 0, im >= 0` for Gaussian integers. Returns 1 for `a = 0`.
    fn canonical_unit(&self, a: &Self::Elem) -> Self::Elem;

    /// Euclidean gcd; the result is only determined up to a unit.
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut x = a.clone();
        let mut y = b.clone();
        while !self.is_zero(&y) {
            let r = self
                .divmod(&x, &y)
                .expect("divmod by a nonzero element")
                .remainder;
            x = y;
            y = r;
        }
        x
    }

    /// Exact division; panics if `b` does not divide `a`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let d = self.divmod(a, b).expect("exact_div by zero");
        assert!(
            self.is_zero(&d.remainder),
            "exact division left a nonzero remainder"
        );
        d.quotient
    }

    /// The canonical nonzero nonunit of minimal Euclidean value: 2 for the
    /// integers, 1+i for the Gaussian integers, x for polynomial rings.
    fn minimal_nonunit(&self) -> Self::Elem;

    fn unit_group(&self) -> UnitGroup<Self::Elem>;

    /// Which side of the dichotomy holds for this instance. See the
    /// implementations for the fact each one records.
    fn known_branch(&self) -> Branch;

    /// A total unit-fraction expansion of `num/den` (nonzero, reduced) with
    /// pairwise distinct denominators, for instances on the `Egyptian`
    /// branch; `None` on the `Dvr` branch.
    fn egyptian_expand(&self, num: &Self::Elem, den: &Self::Elem) -> Option<Vec<Self::Elem>>;

    /// Whether the split of a fraction with `f(num) > f(den)` should expand
    /// the fraction itself instead of flipping to its inverse. Only the
    /// integer instance does, exhibiting that every rational is Egyptian
    /// there; everywhere else the light side is the one decomposed.
    fn expand_heavy_side(&self) -> bool {
        false
    }

    /// Every nonzero element with `f(e) <= bound`, each exactly once, in a
    /// deterministic instance-specific order. Errs on instances whose
    /// element sets are not finite per Euclidean value, and when
    /// `bound < f(1)`.
    fn enumerate_up_to(&self, bound: i64) -> Result<Vec<Self::Elem>, Error>;

    fn elem_to_string(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, ParseError>;
    fn elem_to_json(&self, a: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem, ParseError>;
}

/// The least `n >= 0` with `f(a^n * b) > f(c)`, found by iteration.
///
/// Guaranteed to exist because `f(a x) > f(x)` for every nonunit `a`, so
/// `f(a^n b) >= f(b) + n`.
pub fn power_gap<D: EuclideanDomain>(
    dom: &D,
    a: &D::Elem,
    b: &D::Elem,
    c: &D::Elem,
) -> Result<u64, Error> {
    if dom.is_zero(a) || dom.is_unit(a) {
        return Err(Error::UnitOrZero);
    }
    if dom.is_zero(b) || dom.is_zero(c) {
        return Err(Error::ZeroInput);
    }
    let target = dom.euclidean_value(c)?;
    let mut x = b.clone();
    let mut n = 0u64;
    loop {
        if dom.euclidean_value(&x)? > target {
            return Ok(n);
        }
        x = dom.mul(a, &x);
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{GaussianIntegers, Integers, PolyRing, Rationals};

    #[test]
    fn power_gap_integers() {
        let z = Integers;
        let n = power_gap(&z, &BigInt::from(2), &BigInt::from(1), &BigInt::from(5)).unwrap();
        assert_eq!(n, 3); // f(8) = 8 > 5
    }

    #[test]
    fn power_gap_poly() {
        let qx = PolyRing::new(Rationals);
        let x = qx.parse_elem("x").unwrap();
        let one = qx.one();
        let c = qx.parse_elem("x^2+1").unwrap();
        assert_eq!(power_gap(&qx, &x, &one, &c).unwrap(), 3);
    }

    #[test]
    fn power_gap_c_equals_b() {
        // f(ab) > f(b) for any nonunit a, so the gap at c = b is always 1.
        let z = Integers;
        let b = BigInt::from(15);
        assert_eq!(power_gap(&z, &BigInt::from(7), &b, &b).unwrap(), 1);

        let zi = GaussianIntegers;
        let g = zi.parse_elem("2+3i").unwrap();
        assert_eq!(power_gap(&zi, &zi.minimal_nonunit(), &g, &g).unwrap(), 1);
    }

    #[test]
    fn power_gap_rejects_units_and_zero() {
        let z = Integers;
        let one = BigInt::from(1);
        assert_eq!(
            power_gap(&z, &one, &one, &one).unwrap_err(),
            Error::UnitOrZero
        );
        assert_eq!(
            power_gap(&z, &BigInt::from(0), &one, &one).unwrap_err(),
            Error::UnitOrZero
        );
    }
}
