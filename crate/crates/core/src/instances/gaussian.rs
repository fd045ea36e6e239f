//! The Gaussian integers with `f(a) = N(a) = re^2 + im^2`.
//!
//! Division rounds `dividend * conj(divisor) / N(divisor)` to the nearest
//! integer in each coordinate, ties toward zero, so `N(r) <= N(divisor)/2`.
//! The canonical associate of a nonzero element is the one of its four
//! rotations lying in the half-quadrant `re > 0, im >= 0`.
//!
//! The instance sits on the Egyptian branch: writing a reduced fraction as
//! `(u + v i)/n` with integer `u`, `v` and `n = N(den) > 0`, the real part
//! `u/n` expands over the integers, and `(v/n) i` expands through
//! `i/m = 1/(-i m)`, so both parts become unit fractions with denominators in
//! the ring; real and purely imaginary denominators never collide.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::domain::{Branch, DivisionResult, EuclideanDomain, EuclideanValue, UnitGroup};
use crate::error::{Error, ParseError};
use crate::zexpand;

/// A Gaussian integer `re + im*i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }
}

/// Nearest integer to `p/q` (`q > 0`), ties rounded toward zero.
fn round_half_toward_zero(p: &BigInt, q: &BigInt) -> BigInt {
    debug_assert!(q.is_positive());
    let (d, r) = p.div_rem(q); // truncated: r has the sign of p
    let twice = r.abs() * 2u32;
    if &twice > q {
        if p.is_negative() {
            d - 1u32
        } else {
            d + 1u32
        }
    } else {
        d
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct GaussianIntegers;

impl EuclideanDomain for GaussianIntegers {
    type Elem = GaussInt;

    fn selector(&self) -> String {
        "zi".to_string()
    }

    fn zero(&self) -> GaussInt {
        GaussInt::new(0, 0)
    }

    fn one(&self) -> GaussInt {
        GaussInt::new(1, 0)
    }

    fn is_zero(&self, a: &GaussInt) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }

    fn add(&self, a: &GaussInt, b: &GaussInt) -> GaussInt {
        GaussInt {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }

    fn neg(&self, a: &GaussInt) -> GaussInt {
        GaussInt {
            re: -&a.re,
            im: -&a.im,
        }
    }

    fn mul(&self, a: &GaussInt, b: &GaussInt) -> GaussInt {
        GaussInt {
            re: &a.re * &b.re - &a.im * &b.im,
            im: &a.re * &b.im + &a.im * &b.re,
        }
    }

    fn divmod(
        &self,
        dividend: &GaussInt,
        divisor: &GaussInt,
    ) -> Result<DivisionResult<GaussInt>, Error> {
        if self.is_zero(divisor) {
            return Err(Error::DivisionByZero);
        }
        let n = divisor.norm();
        let t = self.mul(dividend, &divisor.conj());
        let q = GaussInt {
            re: round_half_toward_zero(&t.re, &n),
            im: round_half_toward_zero(&t.im, &n),
        };
        let r = self.sub(dividend, &self.mul(&q, divisor));
        // both rounding offsets are at most 1/2, so N(r) <= N(divisor)/2
        debug_assert!(r.norm() * 2u32 <= divisor.norm());
        Ok(DivisionResult {
            quotient: q,
            remainder: r,
        })
    }

    fn euclidean_value(&self, a: &GaussInt) -> Result<EuclideanValue, Error> {
        if self.is_zero(a) {
            return Err(Error::EuclideanValueOfZero);
        }
        Ok(EuclideanValue(a.norm()))
    }

    fn inverse(&self, a: &GaussInt) -> Option<GaussInt> {
        if a.norm().is_one() {
            // the inverse of a unit is its conjugate
            Some(a.conj())
        } else {
            None
        }
    }

    fn canonical_unit(&self, a: &GaussInt) -> GaussInt {
        if self.is_zero(a) {
            return self.one();
        }
        // exactly one of a, ia, -a, -ia lands in re > 0, im >= 0
        let i = GaussInt::new(0, 1);
        let mut u = self.one();
        let mut x = a.clone();
        for _ in 0..4 {
            if x.re.is_positive() && !x.im.is_negative() {
                return u;
            }
            x = self.mul(&i, &x);
            u = self.mul(&i, &u);
        }
        unreachable!("some rotation is canonical for a nonzero element")
    }

    fn minimal_nonunit(&self) -> GaussInt {
        GaussInt::new(1, 1)
    }

    fn unit_group(&self) -> UnitGroup<GaussInt> {
        UnitGroup::Finite(vec![
            GaussInt::new(1, 0),
            GaussInt::new(-1, 0),
            GaussInt::new(0, 1),
            GaussInt::new(0, -1),
        ])
    }

    fn known_branch(&self) -> Branch {
        Branch::Egyptian
    }

    fn egyptian_expand(&self, num: &GaussInt, den: &GaussInt) -> Option<Vec<GaussInt>> {
        if self.is_zero(num) || self.is_zero(den) {
            return Some(Vec::new());
        }
        // num/den = (u + v i)/n with n = N(den)
        let n = den.norm();
        let t = self.mul(num, &den.conj());
        let mut out = Vec::new();
        if !t.re.is_zero() {
            out.extend(
                zexpand::egyptian_rational(&t.re, &n)
                    .into_iter()
                    .map(|m| GaussInt::new(m, 0)),
            );
        }
        if !t.im.is_zero() {
            // (v/n) i = sum of i/m = sum of 1/(-i m)
            out.extend(
                zexpand::egyptian_rational(&t.im, &n)
                    .into_iter()
                    .map(|m| GaussInt::new(0, -m)),
            );
        }
        Some(out)
    }

    fn enumerate_up_to(&self, bound: i64) -> Result<Vec<GaussInt>, Error> {
        if bound < 1 {
            return Err(Error::EnumerationBound { bound, min: 1 });
        }
        let mut found = Vec::new();
        let top = (bound as f64).sqrt() as i64 + 1;
        for re in -top..=top {
            for im in -top..=top {
                if re == 0 && im == 0 {
                    continue;
                }
                let e = GaussInt::new(re, im);
                if e.norm() <= BigInt::from(bound) {
                    found.push(e);
                }
            }
        }
        found.sort_by_key(|e| (e.norm(), self.elem_to_string(e)));
        Ok(found)
    }

    fn elem_to_string(&self, a: &GaussInt) -> String {
        let im_part = |im: &BigInt, leading: bool| -> String {
            let sign = if im.is_negative() {
                "-"
            } else if leading {
                ""
            } else {
                "+"
            };
            let mag = im.abs();
            if mag.is_one() {
                format!("{sign}i")
            } else {
                format!("{sign}{mag}i")
            }
        };
        match (a.re.is_zero(), a.im.is_zero()) {
            (true, true) => "0".to_string(),
            (false, true) => a.re.to_string(),
            (true, false) => im_part(&a.im, true),
            (false, false) => format!("{}{}", a.re, im_part(&a.im, false)),
        }
    }

    fn parse_elem(&self, s: &str) -> Result<GaussInt, ParseError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(ParseError::new("empty Gaussian integer", 0));
        }
        let bytes = t.as_bytes();
        let mut re: Option<BigInt> = None;
        let mut im: Option<BigInt> = None;
        let mut pos = 0usize;
        while pos < bytes.len() {
            let start = pos;
            let mut sign = BigInt::one();
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let digit_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let has_i = pos < bytes.len() && bytes[pos] == b'i';
            let mag: BigInt = if digit_start == pos {
                if !has_i {
                    return Err(ParseError::new("expected digits or 'i'", start));
                }
                BigInt::one()
            } else {
                t[digit_start..pos].parse().unwrap()
            };
            if has_i {
                pos += 1;
                if im.replace(sign * mag).is_some() {
                    return Err(ParseError::new("duplicate imaginary part", start));
                }
            } else if re.replace(sign * mag).is_some() {
                return Err(ParseError::new("duplicate real part", start));
            }
        }
        Ok(GaussInt {
            re: re.unwrap_or_else(BigInt::zero),
            im: im.unwrap_or_else(BigInt::zero),
        })
    }

    fn elem_to_json(&self, a: &GaussInt) -> Value {
        json!({ "re": a.re.to_string(), "im": a.im.to_string() })
    }

    fn elem_from_json(&self, v: &Value) -> Result<GaussInt, ParseError> {
        let obj = v.as_object().ok_or_else(|| {
            ParseError::new("expected a Gaussian integer object {\"re\", \"im\"}", 0)
        })?;
        let field = |name: &str| -> Result<BigInt, ParseError> {
            match obj.get(name) {
                Some(Value::String(s)) => s
                    .parse()
                    .map_err(|_| ParseError::new(format!("bad integer in {name:?}"), 0)),
                Some(Value::Number(n)) => n
                    .to_string()
                    .parse()
                    .map_err(|_| ParseError::new(format!("bad integer in {name:?}"), 0)),
                _ => Err(ParseError::new(format!("missing field {name:?}"), 0)),
            }
        };
        Ok(GaussInt {
            re: field("re")?,
            im: field("im")?,
        })
    }
}
