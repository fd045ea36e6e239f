//! Unit-fraction expansion machinery over the integers.
//!
//! Everything here works on raw `BigInt` numerator/denominator pairs and is
//! shared by the integer decomposition front ends and by the Gaussian
//! instance (which expands real and imaginary parts separately).
//!
//! Termination notes:
//!
//! * `greedy_floor` subtracts the largest admissible unit fraction at each
//!   step. Whenever the greedy choice `ceil(den/num)` is taken, the running
//!   numerator strictly decreases, which bounds the remaining steps. When the
//!   floor forces a larger denominator instead, the forced denominators are
//!   consecutive integers; since the harmonic series diverges, only finitely
//!   many consecutive forced steps fit below the remaining value, and after
//!   the first unforced step the remainder is below `1/(n(n-1))`, so forcing
//!   never resumes.
//! * `expand_positive` peels `1/1 + 1/2 + ...` while the value is at least 1;
//!   harmonic divergence bounds that phase. Note the output length grows
//!   roughly like `e^value`: any sum of `k` unit fractions over the integers
//!   has absolute value at most `k`, so this is intrinsic to the
//!   representation, not an implementation artifact.
//! * `split_duplicates` resolves the smallest duplicated positive value
//!   `n` via `1/n = 1/(n+1) + 1/(n(n+1))`. Each split lowers the
//!   multiplicity at the smallest duplicate and only creates larger values,
//!   so the smallest duplicated value increases strictly between phases; the
//!   classical splitting process terminates. A large fuel bound with a
//!   greedy re-expansion fallback keeps the routine total even on
//!   adversarial multisets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Reduce a pair in place to lowest terms with a positive denominator.
fn normalize(num: &mut BigInt, den: &mut BigInt) {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        den.set_one();
        return;
    }
    let g = num.gcd(den);
    *num /= &g;
    *den /= &g;
    if den.is_negative() {
        *num = -std::mem::take(num);
        *den = -std::mem::take(den);
    }
}

/// Subtract `1/k` from `num/den` in place.
fn subtract_reciprocal(num: &mut BigInt, den: &mut BigInt, k: &BigInt) {
    *num = &*num * k - &*den;
    *den = &*den * k;
    normalize(num, den);
}

/// Greedy expansion of `0 < num/den < 1` into distinct unit fractions with
/// every denominator strictly greater than `floor`. Appends to `out` in
/// strictly increasing order.
pub fn greedy_floor(num: &BigInt, den: &BigInt, floor: &BigInt, out: &mut Vec<BigInt>) {
    assert!(num.is_positive() && den.is_positive() && num < den);
    let mut n = num.clone();
    let mut d = den.clone();
    let mut floor = floor.clone();
    while !n.is_zero() {
        // smallest k with 1/k <= n/d, pushed above the floor if necessary
        let q = (&d + &n - BigInt::one()).div_floor(&n);
        let k = if q > floor { q } else { &floor + 1 };
        subtract_reciprocal(&mut n, &mut d, &k);
        out.push(k.clone());
        floor = k;
    }
}

/// Expansion of a positive rational into distinct unit fractions with every
/// denominator strictly greater than `floor`: consecutive peeling while the
/// value is at least one, then greedy.
pub fn expand_positive_floor(num: &BigInt, den: &BigInt, floor: &BigInt, out: &mut Vec<BigInt>) {
    assert!(num.is_positive() && den.is_positive());
    let mut n = num.clone();
    let mut d = den.clone();
    let mut k = floor + 1u32;
    while n >= d {
        subtract_reciprocal(&mut n, &mut d, &k);
        out.push(k.clone());
        k += 1u32;
    }
    if !n.is_zero() {
        greedy_floor(&n, &d, &(k - 1u32), out);
    }
}

/// Distinct unit-fraction expansion of an arbitrary nonzero rational:
/// positive values as above, negative values by negating every denominator.
pub fn egyptian_rational(num: &BigInt, den: &BigInt) -> Vec<BigInt> {
    assert!(!num.is_zero() && !den.is_zero());
    let mut n = num.clone();
    let mut d = den.clone();
    normalize(&mut n, &mut d);
    let mut out = Vec::new();
    if n.is_positive() {
        expand_positive_floor(&n, &d, &BigInt::zero(), &mut out);
    } else {
        expand_positive_floor(&(-n), &d, &BigInt::zero(), &mut out);
        for k in &mut out {
            *k = -std::mem::take(k);
        }
    }
    out
}

const SPLIT_FUEL: u64 = 100_000;

/// Rewrite a multiset of nonzero denominators into a list with pairwise
/// distinct entries and the same reciprocal sum.
///
/// Positive duplicates are resolved smallest-first by the splitting identity
/// `1/n = 1/(n+1) + 1/(n(n+1))`. Excess copies of duplicated negative
/// denominators are merged into their exact rational sum and re-expanded by
/// greedy with all new denominators forced beyond the kept ones.
pub fn split_duplicates(denoms: &[BigInt]) -> Vec<BigInt> {
    use std::collections::BTreeMap;

    let mut pos: BTreeMap<BigInt, u64> = BTreeMap::new();
    let mut neg: BTreeMap<BigInt, u64> = BTreeMap::new();
    for k in denoms {
        assert!(!k.is_zero());
        if k.is_positive() {
            *pos.entry(k.clone()).or_insert(0) += 1;
        } else {
            *neg.entry(-k).or_insert(0) += 1;
        }
    }

    // positive side: smallest-first splitting
    let mut fuel = SPLIT_FUEL;
    loop {
        let dup = pos.iter().find(|(_, &m)| m >= 2).map(|(k, _)| k.clone());
        let Some(n) = dup else { break };
        if fuel == 0 {
            // fallback: keep one copy per value, re-expand the excess
            let mut excess_num = BigInt::zero();
            let mut excess_den = BigInt::one();
            let mut kept: Vec<BigInt> = Vec::new();
            let mut max_kept = BigInt::zero();
            for (k, m) in &pos {
                kept.push(k.clone());
                if *k > max_kept {
                    max_kept = k.clone();
                }
                if *m > 1 {
                    // add (m-1)/k
                    excess_num = &excess_num * k + &excess_den * BigInt::from(m - 1);
                    excess_den = &excess_den * k;
                    normalize(&mut excess_num, &mut excess_den);
                }
            }
            let mut fresh = Vec::new();
            expand_positive_floor(&excess_num, &excess_den, &max_kept, &mut fresh);
            pos = kept.into_iter().chain(fresh).map(|k| (k, 1)).collect();
            break;
        }
        fuel -= 1;
        *pos.get_mut(&n).unwrap() -= 1;
        if pos[&n] == 0 {
            pos.remove(&n);
        }
        let a = &n + 1u32;
        let b = &n * &a;
        *pos.entry(a).or_insert(0) += 1;
        *pos.entry(b).or_insert(0) += 1;
    }

    // negative side: keep one copy per value, merge the excess into one
    // rational and re-expand beyond every kept magnitude
    let mut excess_num = BigInt::zero();
    let mut excess_den = BigInt::one();
    let mut max_kept = BigInt::zero();
    let mut kept_neg: Vec<BigInt> = Vec::new();
    for (k, m) in &neg {
        kept_neg.push(k.clone());
        if *k > max_kept {
            max_kept = k.clone();
        }
        if *m > 1 {
            excess_num = &excess_num * k + &excess_den * BigInt::from(m - 1);
            excess_den = &excess_den * k;
            normalize(&mut excess_num, &mut excess_den);
        }
    }
    if !excess_num.is_zero() {
        expand_positive_floor(&excess_num, &excess_den, &max_kept, &mut kept_neg);
    }

    let mut out: Vec<BigInt> = pos.into_keys().collect();
    out.extend(kept_neg.into_iter().map(|k| -k));
    out
}
