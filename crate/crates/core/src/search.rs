//! Bounded brute-force search over unit-fraction sums.
//!
//! This module is the independent desk-scale oracle: it never consults the
//! analytic membership test, it just enumerates every multiset (or set) of
//! at most `max_terms` denominators with `f <= max_value` and compares the
//! exact reciprocal sum against the target. Candidates are ordered by
//! `(f, canonical encoding)` and the search deepens on the term count, so
//! the first certificate found is minimal in that order and the explored
//! state count is a reproducible constant of the spec.
//!
//! A negative outcome is only ever evidence at the given bounds — the
//! reports say "bounded-consistent", never "proved".

use serde_json::{json, Value};

use crate::decompose::{decomposition_to_json, verify, Decomposition, Method};
use crate::domain::EuclideanDomain;
use crate::error::Error;
use crate::fraction::Fraction;
use crate::recip::is_in_r;

/// What to search for and how far to look.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchSpec<E> {
    pub target: Fraction<E>,
    /// Bound on `f` of each denominator.
    pub max_value: i64,
    pub max_terms: usize,
    /// Allow repeated denominators.
    pub multiset_allowed: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchOutcome<E> {
    pub found: Option<Decomposition<E>>,
    /// Number of candidate combinations whose sum was compared against the
    /// target (the matching one included).
    pub states_explored: u64,
}

struct Searcher<'a, D: EuclideanDomain> {
    dom: &'a D,
    candidates: Vec<D::Elem>,
    target: &'a Fraction<D::Elem>,
    multiset: bool,
    budget: u64,
    states: u64,
}

impl<D: EuclideanDomain> Searcher<'_, D> {
    /// Extend a partial combination whose sum is `sum` by candidates at
    /// index `from` or later; `remaining` more terms to place.
    fn extend(
        &mut self,
        from: usize,
        remaining: usize,
        sum: &Fraction<D::Elem>,
    ) -> Result<Option<Vec<usize>>, Error> {
        if remaining == 0 {
            self.states += 1;
            if self.states > self.budget {
                return Err(Error::SearchBudgetExhausted {
                    states: self.states - 1,
                });
            }
            return Ok((sum == self.target).then(Vec::new));
        }
        for i in from..self.candidates.len() {
            let term = Fraction::reciprocal_of(self.dom, &self.candidates[i])
                .expect("candidates are nonzero");
            let next = sum.add(self.dom, &term);
            let child_from = if self.multiset { i } else { i + 1 };
            if let Some(mut rest) = self.extend(child_from, remaining - 1, &next)? {
                rest.push(i);
                return Ok(Some(rest));
            }
        }
        Ok(None)
    }
}

/// Enumerate all admissible combinations in deterministic order and return
/// the first one whose reciprocal sum equals the target, together with the
/// number of states explored. `budget` caps the state count.
pub fn exhaustive_search<D: EuclideanDomain>(
    dom: &D,
    spec: &SearchSpec<D::Elem>,
    budget: Option<u64>,
) -> Result<SearchOutcome<D::Elem>, Error> {
    if spec.max_terms == 0 {
        return Err(Error::EnumerationBound { bound: 0, min: 1 });
    }
    let mut candidates = dom.enumerate_up_to(spec.max_value)?;
    candidates.sort_by_cached_key(|e| {
        (
            dom.euclidean_value(e)
                .expect("enumerated elements are nonzero"),
            dom.elem_to_string(e),
        )
    });
    let mut searcher = Searcher {
        dom,
        candidates,
        target: &spec.target,
        multiset: spec.multiset_allowed,
        budget: budget.unwrap_or(u64::MAX),
        states: 0,
    };
    // iterative deepening on the term count: smallest certificates first
    for terms in 1..=spec.max_terms {
        let zero = Fraction::zero(dom);
        if let Some(mut idx) = searcher.extend(0, terms, &zero)? {
            idx.reverse();
            let denominators: Vec<D::Elem> = idx
                .into_iter()
                .map(|i| searcher.candidates[i].clone())
                .collect();
            let states_explored = searcher.states;
            return Ok(SearchOutcome {
                found: Some(Decomposition::new(
                    dom,
                    spec.target.clone(),
                    denominators,
                    Method::Search,
                )),
                states_explored,
            });
        }
    }
    Ok(SearchOutcome {
        found: None,
        states_explored: searcher.states,
    })
}

/// One discrepancy found by [`cross_check`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HardFailure {
    pub fraction: String,
    pub detail: String,
}

/// Outcome of sweeping every bounded reduced fraction against both oracles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossCheckReport {
    pub fractions_checked: u64,
    /// Members whose attached certificate re-verified.
    pub certified: u64,
    /// Claimed nonmembers for which the bounded search found nothing.
    pub bounded_consistent: u64,
    pub hard_failures: Vec<HardFailure>,
}

/// For every reduced fraction `a/b` with `f(a), f(b) <= bound`: a membership
/// claim must come with a certificate that verifies, and a non-membership
/// claim must survive the exhaustive search at the same bound. Certificate
/// failures and search hits against a non-membership claim are conclusive
/// (hard failures); clean searches are only bounded evidence.
pub fn cross_check<D: EuclideanDomain>(
    dom: &D,
    bound: i64,
    max_terms: usize,
    budget: Option<u64>,
) -> Result<CrossCheckReport, Error> {
    let elems = dom.enumerate_up_to(bound)?;
    let mut fractions = std::collections::BTreeSet::new();
    for a in &elems {
        for b in &elems {
            fractions.insert(Fraction::reduce(dom, a.clone(), b.clone())?);
        }
    }
    let mut report = CrossCheckReport {
        fractions_checked: 0,
        certified: 0,
        bounded_consistent: 0,
        hard_failures: Vec::new(),
    };
    for alpha in &fractions {
        report.fractions_checked += 1;
        let m = is_in_r(dom, alpha);
        if m.member {
            let cert = m.certificate.expect("members carry certificates");
            let v = verify(dom, &cert);
            if v.valid {
                report.certified += 1;
            } else {
                report.hard_failures.push(HardFailure {
                    fraction: alpha.format(dom),
                    detail: "membership certificate failed verification".to_string(),
                });
            }
        } else {
            let outcome = exhaustive_search(
                dom,
                &SearchSpec {
                    target: alpha.clone(),
                    max_value: bound,
                    max_terms,
                    multiset_allowed: true,
                },
                budget,
            )?;
            match outcome.found {
                None => report.bounded_consistent += 1,
                Some(found) => report.hard_failures.push(HardFailure {
                    fraction: alpha.format(dom),
                    detail: format!(
                        "claimed nonmember, but search found {} denominators summing to it",
                        found.len()
                    ),
                }),
            }
        }
    }
    Ok(report)
}

/// Search report JSON:
/// `{"found": <cert|null>, "states": <int>, "bounds": {...}, "verdict": ...}`.
pub fn search_to_json<D: EuclideanDomain>(
    dom: &D,
    spec: &SearchSpec<D::Elem>,
    outcome: &SearchOutcome<D::Elem>,
) -> Value {
    json!({
        "found": outcome.found.as_ref().map(|c| decomposition_to_json(dom, c)),
        "states": outcome.states_explored,
        "bounds": {
            "max_value": spec.max_value,
            "max_terms": spec.max_terms,
            "multiset": spec.multiset_allowed,
        },
        "verdict": if outcome.found.is_some() {
            "member"
        } else {
            "bounded-consistent-nonmember"
        },
    })
}

pub fn cross_check_to_json(report: &CrossCheckReport) -> Value {
    json!({
        "fractions_checked": report.fractions_checked,
        "certified": report.certified,
        "bounded_consistent": report.bounded_consistent,
        "hard_failures": report
            .hard_failures
            .iter()
            .map(|h| json!({ "fraction": h.fraction, "detail": h.detail }))
            .collect::<Vec<_>>(),
    })
}
