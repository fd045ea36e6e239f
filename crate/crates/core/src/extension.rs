//! Certificates that reciprocals of rational-coefficient polynomials are
//! sums of unit fractions with integer-coefficient denominators.
//!
//! For `0 != g` in `Q[x]`, pick the least positive `d` clearing every
//! coefficient denominator, so `d*g` lies in `Z[x]`; expand `d` itself into
//! distinct unit fractions `d = sum of 1/c_i` over the integers; then
//!
//! ```text
//! 1/g = d/(d*g) = sum over i of 1/(c_i * d * g)
//! ```
//!
//! with every final denominator in `Z[x]`. Because membership in the
//! reciprocal complement of `Q[x]` is degree-bounded, the same identity
//! shows the complements of `Z[x]` and `Q[x]` agree, and degree comparison
//! in `Q[x]` already decides which of a fraction and its inverse decomposes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::decompose::{
    decomposition_from_json, decomposition_to_json, integer_expand, verify, Decomposition,
};
use crate::domain::EuclideanDomain;
use crate::error::{Error, ParseError};
use crate::fraction::Fraction;
use crate::instances::{Integers, Poly, PolyRing, Rationals};

/// The expansion of `1/g` into unit fractions from `Z[x]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtensionCertificate {
    pub g: Poly<BigRational>,
    /// The clearing element `d`, the lcm of the coefficient denominators.
    pub clearing: BigInt,
    /// Distinct expansion of `d` over the integers.
    pub d_decomposition: Decomposition<BigInt>,
    /// The polynomials `c_i * d * g`, all with integer coefficients.
    pub final_denominators: Vec<Poly<BigRational>>,
}

/// True when every coefficient of the polynomial is an integer.
pub fn is_integral(p: &Poly<BigRational>) -> bool {
    p.coeffs().iter().all(|c| c.denom().is_one())
}

/// Build the certificate for `1/g`. The output length grows with the
/// harmonic expansion of `d`, so keep coefficient denominators modest.
pub fn reciprocal_in_dx(g: &Poly<BigRational>) -> Result<ExtensionCertificate, Error> {
    if g.is_zero() {
        return Err(Error::ZeroInput);
    }
    let z = Integers;
    let qx = PolyRing::new(Rationals);
    let clearing = g
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
        .abs();
    let d_decomposition = integer_expand(&Fraction::from_elem(&z, clearing.clone()))?;
    let dg = qx.scale(g, &BigRational::from(clearing.clone()));
    debug_assert!(is_integral(&dg));
    let final_denominators: Vec<Poly<BigRational>> = d_decomposition
        .denominators
        .iter()
        .map(|c| qx.scale(&dg, &BigRational::from(c.clone())))
        .collect();
    assert!(
        final_denominators.iter().all(is_integral),
        "final denominators must lie in Z[x]"
    );
    Ok(ExtensionCertificate {
        g: g.clone(),
        clearing,
        d_decomposition,
        final_denominators,
    })
}

/// Recompute `sum over i of 1/(c_i*d*g)` by exact rational-function
/// arithmetic and compare it with `1/g`; also re-verify the integer
/// expansion of `d`. Zero entries anywhere make the certificate invalid.
pub fn verify_extension(cert: &ExtensionCertificate) -> bool {
    let qx = PolyRing::new(Rationals);
    if cert.g.is_zero() || cert.final_denominators.iter().any(Poly::is_zero) {
        return false;
    }
    let mut sum = Fraction::zero(&qx);
    for den in &cert.final_denominators {
        let term = Fraction::reciprocal_of(&qx, den).expect("nonzero denominator");
        sum = sum.add(&qx, &term);
    }
    let expected = Fraction::reciprocal_of(&qx, &cert.g).expect("nonzero g");
    if sum != expected {
        return false;
    }
    let z = Integers;
    let d_report = verify(&z, &cert.d_decomposition);
    d_report.valid && cert.d_decomposition.target == Fraction::from_elem(&z, cert.clearing.clone())
}

/// Certificate JSON, mirroring the struct fields with the standard element
/// encodings.
pub fn extension_to_json(cert: &ExtensionCertificate) -> Value {
    let z = Integers;
    let qx = PolyRing::new(Rationals);
    json!({
        "g": qx.elem_to_json(&cert.g),
        "clearing_element": cert.clearing.to_string(),
        "d_decomposition": decomposition_to_json(&z, &cert.d_decomposition),
        "final_denominators": cert
            .final_denominators
            .iter()
            .map(|p| qx.elem_to_json(p))
            .collect::<Vec<_>>(),
    })
}

pub fn extension_from_json(v: &Value) -> Result<ExtensionCertificate, Error> {
    let z = Integers;
    let qx = PolyRing::new(Rationals);
    let obj = v
        .as_object()
        .ok_or_else(|| ParseError::new("extension certificate must be a JSON object", 0))?;
    let g = qx.elem_from_json(
        obj.get("g")
            .ok_or_else(|| ParseError::new("missing \"g\"", 0))?,
    )?;
    let clearing: BigInt = obj
        .get("clearing_element")
        .and_then(Value::as_str)
        .ok_or_else(|| ParseError::new("missing \"clearing_element\"", 0))?
        .parse()
        .map_err(|_| ParseError::new("bad integer in \"clearing_element\"", 0))?;
    let d_decomposition = decomposition_from_json(
        &z,
        obj.get("d_decomposition")
            .ok_or_else(|| ParseError::new("missing \"d_decomposition\"", 0))?,
    )?;
    let arr = obj
        .get("final_denominators")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::new("missing \"final_denominators\"", 0))?;
    let mut final_denominators = Vec::with_capacity(arr.len());
    for p in arr {
        final_denominators.push(qx.elem_from_json(p)?);
    }
    Ok(ExtensionCertificate {
        g,
        clearing,
        d_decomposition,
        final_denominators,
    })
}
