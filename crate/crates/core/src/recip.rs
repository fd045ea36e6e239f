//! Membership, valuation and classification for the reciprocal complement
//! R(D) — the subring of the fraction field generated by the reciprocals of
//! the nonzero elements of D.
//!
//! For every shipped instance exactly one of two things holds. Either every
//! nonzero fraction is a sum of unit fractions (integers, Gaussian
//! integers), in which case R(D) is the whole fraction field; or D is a
//! polynomial ring over a field, where membership is cut out by degree
//! (`deg num <= deg den`), R(D) is a discrete valuation ring with
//! uniformizer `1/x`, and the valuation of a reduced fraction is
//! `deg den - deg num`. The classifier cross-checks the second branch
//! against an additive-closure test of the unit group: whenever the units
//! together with zero fail to form a field, the instance must sit on the
//! Egyptian branch.

use serde_json::{json, Value};

use crate::decompose::{decomposition_to_json, euclid_decompose, verify, Decomposition, Method};
use crate::domain::{Branch, EuclideanDomain, UnitGroup};
use crate::error::Error;
use crate::fraction::Fraction;

/// Which side of a fraction received the certificate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SplitSide {
    Alpha,
    AlphaInverse,
}

impl SplitSide {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitSide::Alpha => "alpha",
            SplitSide::AlphaInverse => "alpha_inverse",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitOutcome<E> {
    pub side: SplitSide,
    pub certificate: Decomposition<E>,
}

/// Decompose whichever of `alpha`, `alpha^-1` carries the lighter numerator.
///
/// Ties decompose `alpha` itself. On the integers the heavy side is still
/// expanded directly (side `alpha`), since every rational is Egyptian there.
/// The returned certificate has been re-verified by summation.
pub fn bonaccian_split<D: EuclideanDomain>(
    dom: &D,
    alpha: &Fraction<D::Elem>,
) -> Result<SplitOutcome<D::Elem>, Error> {
    if alpha.is_zero(dom) {
        return Err(Error::ZeroInput);
    }
    let f_num = dom.euclidean_value(alpha.num())?;
    let f_den = dom.euclidean_value(alpha.den())?;
    let outcome = if f_num <= f_den {
        SplitOutcome {
            side: SplitSide::Alpha,
            certificate: euclid_decompose(dom, alpha)?,
        }
    } else if dom.expand_heavy_side() {
        let denoms = dom
            .egyptian_expand(alpha.num(), alpha.den())
            .expect("instances expanding the heavy side are Egyptian");
        SplitOutcome {
            side: SplitSide::Alpha,
            certificate: Decomposition::new(dom, alpha.clone(), denoms, Method::IntegerGreedy),
        }
    } else {
        let inv = alpha.inverse(dom)?;
        SplitOutcome {
            side: SplitSide::AlphaInverse,
            certificate: euclid_decompose(dom, &inv)?,
        }
    };
    let report = verify(dom, &outcome.certificate);
    assert!(report.valid, "emitted certificate failed re-verification");
    Ok(outcome)
}

/// A membership answer, with a certificate when the element lies in R(D)
/// and a refusal reason when it does not.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Membership<E> {
    pub member: bool,
    pub certificate: Option<Decomposition<E>>,
    pub reason: Option<String>,
}

/// Decide membership of a reduced fraction in R(D).
///
/// Egyptian-branch instances answer true for every input and attach a
/// certificate. On the DVR branch membership holds exactly when
/// `f(num) <= f(den)`: the Euclidean decomposition witnesses one direction,
/// and a heavier numerator has negative valuation, which no sum of unit
/// fractions can reach.
pub fn is_in_r<D: EuclideanDomain>(dom: &D, alpha: &Fraction<D::Elem>) -> Membership<D::Elem> {
    if alpha.is_zero(dom) {
        return Membership {
            member: true,
            certificate: Some(Decomposition::new(
                dom,
                alpha.clone(),
                Vec::new(),
                Method::Euclid,
            )),
            reason: None,
        };
    }
    let f_num = dom.euclidean_value(alpha.num()).expect("nonzero numerator");
    let f_den = dom
        .euclidean_value(alpha.den())
        .expect("nonzero denominator");
    if f_num <= f_den {
        let certificate = euclid_decompose(dom, alpha).expect("precondition f(num) <= f(den)");
        return Membership {
            member: true,
            certificate: Some(certificate),
            reason: None,
        };
    }
    match dom.egyptian_expand(alpha.num(), alpha.den()) {
        Some(denoms) => Membership {
            member: true,
            certificate: Some(Decomposition::new(
                dom,
                alpha.clone(),
                denoms,
                Method::IntegerGreedy,
            )),
            reason: None,
        },
        None => Membership {
            member: false,
            certificate: None,
            reason: Some(format!(
                "f(numerator) = {f_num} exceeds f(denominator) = {f_den}: the valuation is negative"
            )),
        },
    }
}

/// The uniformizer-adic order of a nonzero fraction on a DVR-branch
/// instance, with optional two-sided certificates for its unit part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValuationResult<E> {
    pub value: i64,
    pub member: bool,
    /// Certificates that `alpha * pi^(-value)` and its inverse both lie in
    /// R(D); computed on demand by [`valuation_certified`].
    pub unit_part: Option<(Decomposition<E>, Decomposition<E>)>,
}

/// `v(alpha) = f(den) - f(num)` on a DVR-branch instance. Negative values
/// mean the fraction lies outside R(D); value 0 means it is a unit of R(D).
pub fn valuation<D: EuclideanDomain>(
    dom: &D,
    alpha: &Fraction<D::Elem>,
) -> Result<ValuationResult<D::Elem>, Error> {
    if dom.known_branch() == Branch::Egyptian {
        return Err(Error::ValuationUndefined);
    }
    if alpha.is_zero(dom) {
        return Err(Error::ZeroInput);
    }
    let f_num = dom.euclidean_value(alpha.num())?;
    let f_den = dom.euclidean_value(alpha.den())?;
    let value = i64::try_from(&f_den.0 - &f_num.0).map_err(|_| Error::EuclideanValueOfZero)?;
    Ok(ValuationResult {
        value,
        member: value >= 0,
        unit_part: None,
    })
}

/// As [`valuation`], also certifying the unit part: multiplying by
/// `pi^(-v) = y^v` balances the Euclidean values, so both the balanced
/// fraction and its inverse admit Euclidean certificates.
pub fn valuation_certified<D: EuclideanDomain>(
    dom: &D,
    alpha: &Fraction<D::Elem>,
) -> Result<ValuationResult<D::Elem>, Error> {
    let mut result = valuation(dom, alpha)?;
    let y = dom.minimal_nonunit();
    let mut power = dom.one();
    for _ in 0..result.value.unsigned_abs() {
        power = dom.mul(&power, &y);
    }
    let unit_part = if result.value >= 0 {
        Fraction::reduce(dom, dom.mul(alpha.num(), &power), alpha.den().clone())?
    } else {
        Fraction::reduce(dom, alpha.num().clone(), dom.mul(alpha.den(), &power))?
    };
    let direct = euclid_decompose(dom, &unit_part)?;
    let inverse = euclid_decompose(dom, &unit_part.inverse(dom)?)?;
    result.unit_part = Some((direct, inverse));
    Ok(result)
}

/// Result of the additive-closure test on units ∪ {0}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnitsFieldReport<E> {
    pub is_field: bool,
    /// A pair of units whose sum is neither zero nor a unit, when one exists.
    pub witness: Option<(E, E)>,
    pub description: String,
}

/// Exhaustively check whether the units of D together with 0 are closed
/// under addition (closure under negation and multiplication is automatic
/// for a unit group, so additive closure alone decides the field property
/// for the finite case). Instances whose unit group is all nonzero
/// coefficient-field constants are a field by declaration.
pub fn units_field_check<D: EuclideanDomain>(dom: &D) -> UnitsFieldReport<D::Elem> {
    match dom.unit_group() {
        UnitGroup::CoefficientField { description } => UnitsFieldReport {
            is_field: true,
            witness: None,
            description,
        },
        UnitGroup::Finite(units) => {
            let mut set: Vec<D::Elem> = units.clone();
            set.push(dom.zero());
            let description = format!(
                "{{{}}}",
                set.iter()
                    .map(|u| dom.elem_to_string(u))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            let contains = |e: &D::Elem| set.iter().any(|s| s == e);
            for a in &set {
                if !contains(&dom.neg(a)) {
                    return UnitsFieldReport {
                        is_field: false,
                        witness: Some((a.clone(), a.clone())),
                        description,
                    };
                }
                for b in &set {
                    if !contains(&dom.add(a, b)) {
                        return UnitsFieldReport {
                            is_field: false,
                            witness: Some((a.clone(), b.clone())),
                            description,
                        };
                    }
                }
            }
            UnitsFieldReport {
                is_field: true,
                witness: None,
                description,
            }
        }
    }
}

/// The dichotomy verdict for an instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification<E> {
    pub domain: String,
    pub branch: Branch,
    /// The `y` with uniformizer `pi = 1/y`; present exactly on the DVR branch.
    pub uniformizer_den: Option<E>,
    /// Description of the residue field units ∪ {0} on the DVR branch.
    pub residue_units: Option<String>,
    pub units_field: bool,
    pub witness: Option<(E, E)>,
}

/// Classify an instance: DVR-branch instances are the polynomial rings
/// (degree obstruction), with the canonical minimal nonunit as uniformizer
/// denominator; everything else must present a non-closure witness from the
/// unit-group test, which forces the Egyptian branch.
pub fn classify<D: EuclideanDomain>(dom: &D) -> Classification<D::Elem> {
    let ufc = units_field_check(dom);
    match dom.known_branch() {
        Branch::Dvr => Classification {
            domain: dom.selector(),
            branch: Branch::Dvr,
            uniformizer_den: Some(dom.minimal_nonunit()),
            residue_units: Some(ufc.description.clone()),
            units_field: ufc.is_field,
            witness: ufc.witness,
        },
        Branch::Egyptian => {
            assert!(
                !ufc.is_field,
                "units form a field but no degree obstruction is recorded: \
                 classification is undecided for such an instance"
            );
            Classification {
                domain: dom.selector(),
                branch: Branch::Egyptian,
                uniformizer_den: None,
                residue_units: None,
                units_field: false,
                witness: ufc.witness,
            }
        }
    }
}

/// Outcome of the exhaustive `R(D) ∩ D = units ∪ {0}` check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntersectReport<E> {
    pub pass: bool,
    pub checked: u64,
    pub counterexample: Option<E>,
}

/// For every enumerated nonzero `d` with `f(d) <= bound`, assert that
/// `d/1` lies in R(D) exactly when `d` is a unit. Vacuous (and an error) on
/// Egyptian-branch instances, where D is contained in R(D) outright.
pub fn d_intersect_r_check<D: EuclideanDomain>(
    dom: &D,
    bound: i64,
) -> Result<IntersectReport<D::Elem>, Error> {
    if dom.known_branch() == Branch::Egyptian {
        return Err(Error::IntersectionVacuous);
    }
    let mut checked = 0u64;
    for d in dom.enumerate_up_to(bound)? {
        checked += 1;
        let alpha = Fraction::from_elem(dom, d.clone());
        let membership = is_in_r(dom, &alpha);
        if membership.member != dom.is_unit(&d) {
            return Ok(IntersectReport {
                pass: false,
                checked,
                counterexample: Some(d),
            });
        }
        if let Some(cert) = membership.certificate {
            if !verify(dom, &cert).valid {
                return Ok(IntersectReport {
                    pass: false,
                    checked,
                    counterexample: Some(d),
                });
            }
        }
    }
    Ok(IntersectReport {
        pass: true,
        checked,
        counterexample: None,
    })
}

/// Classification JSON:
/// `{"domain", "branch", "uniformizer_den", "units_field", "witness"}`.
pub fn classification_to_json<D: EuclideanDomain>(dom: &D, c: &Classification<D::Elem>) -> Value {
    json!({
        "domain": c.domain,
        "branch": c.branch.as_str(),
        "uniformizer_den": c.uniformizer_den.as_ref().map(|e| dom.elem_to_json(e)),
        "units_field": c.units_field,
        "witness": c.witness.as_ref().map(|(a, b)| vec![dom.elem_to_json(a), dom.elem_to_json(b)]),
    })
}

/// Membership/valuation JSON: `{"value": <int>, "member": <bool>}`.
pub fn valuation_to_json<E>(v: &ValuationResult<E>) -> Value {
    json!({ "value": v.value, "member": v.member })
}

/// Membership JSON with the certificate or the refusal reason.
pub fn membership_to_json<D: EuclideanDomain>(dom: &D, m: &Membership<D::Elem>) -> Value {
    json!({
        "member": m.member,
        "certificate": m.certificate.as_ref().map(|c| decomposition_to_json(dom, c)),
        "reason": m.reason,
    })
}
