//! Reduced fractions over an arbitrary instance.
//!
//! A [`Fraction`] is always kept in canonical form: the denominator is
//! nonzero and unit-normalized (positive / monic / half-quadrant, per
//! instance) and gcd(num, den) is a unit. Equality of canonical forms is
//! therefore plain structural equality.

use serde_json::{json, Value};

use crate::domain::EuclideanDomain;
use crate::error::{Error, ParseError};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Fraction<E> {
    num: E,
    den: E,
}

impl<E: Clone + Eq + Ord + std::hash::Hash + std::fmt::Debug> Fraction<E> {
    /// The reduced, unit-normalized fraction equal to `num/den`.
    pub fn reduce<D: EuclideanDomain<Elem = E>>(dom: &D, num: E, den: E) -> Result<Self, Error> {
        if dom.is_zero(&den) {
            return Err(Error::DivisionByZero);
        }
        if dom.is_zero(&num) {
            return Ok(Fraction {
                num: dom.zero(),
                den: dom.one(),
            });
        }
        let g = dom.gcd(&num, &den);
        let n = dom.exact_div(&num, &g);
        let d = dom.exact_div(&den, &g);
        let u = dom.canonical_unit(&d);
        Ok(Fraction {
            num: dom.mul(&n, &u),
            den: dom.mul(&d, &u),
        })
    }

    pub fn from_elem<D: EuclideanDomain<Elem = E>>(dom: &D, e: E) -> Self {
        Fraction {
            num: e,
            den: dom.one(),
        }
    }

    pub fn zero<D: EuclideanDomain<Elem = E>>(dom: &D) -> Self {
        Fraction {
            num: dom.zero(),
            den: dom.one(),
        }
    }

    pub fn one<D: EuclideanDomain<Elem = E>>(dom: &D) -> Self {
        Fraction {
            num: dom.one(),
            den: dom.one(),
        }
    }

    /// The unit fraction `1/d`.
    pub fn reciprocal_of<D: EuclideanDomain<Elem = E>>(dom: &D, d: &E) -> Result<Self, Error> {
        Self::reduce(dom, dom.one(), d.clone())
    }

    pub fn num(&self) -> &E {
        &self.num
    }

    pub fn den(&self) -> &E {
        &self.den
    }

    pub fn is_zero<D: EuclideanDomain<Elem = E>>(&self, dom: &D) -> bool {
        dom.is_zero(&self.num)
    }

    pub fn add<D: EuclideanDomain<Elem = E>>(&self, dom: &D, other: &Self) -> Self {
        let n = dom.add(
            &dom.mul(&self.num, &other.den),
            &dom.mul(&other.num, &self.den),
        );
        let d = dom.mul(&self.den, &other.den);
        Self::reduce(dom, n, d).expect("denominator product is nonzero")
    }

    pub fn neg<D: EuclideanDomain<Elem = E>>(&self, dom: &D) -> Self {
        Fraction {
            num: dom.neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub<D: EuclideanDomain<Elem = E>>(&self, dom: &D, other: &Self) -> Self {
        self.add(dom, &other.neg(dom))
    }

    pub fn mul<D: EuclideanDomain<Elem = E>>(&self, dom: &D, other: &Self) -> Self {
        let n = dom.mul(&self.num, &other.num);
        let d = dom.mul(&self.den, &other.den);
        Self::reduce(dom, n, d).expect("denominator product is nonzero")
    }

    pub fn inverse<D: EuclideanDomain<Elem = E>>(&self, dom: &D) -> Result<Self, Error> {
        Self::reduce(dom, self.den.clone(), self.num.clone())
    }

    /// Multiply by a ring element.
    pub fn scale<D: EuclideanDomain<Elem = E>>(&self, dom: &D, e: &E) -> Self {
        Self::reduce(dom, dom.mul(&self.num, e), self.den.clone()).expect("denominator is nonzero")
    }

    pub fn to_json<D: EuclideanDomain<Elem = E>>(&self, dom: &D) -> Value {
        json!({
            "num": dom.elem_to_json(&self.num),
            "den": dom.elem_to_json(&self.den),
        })
    }

    pub fn from_json<D: EuclideanDomain<Elem = E>>(dom: &D, v: &Value) -> Result<Self, Error> {
        let obj = v
            .as_object()
            .ok_or_else(|| ParseError::new("fraction must be a JSON object", 0))?;
        let num = obj
            .get("num")
            .ok_or_else(|| ParseError::new("fraction is missing \"num\"", 0))?;
        let den = obj
            .get("den")
            .ok_or_else(|| ParseError::new("fraction is missing \"den\"", 0))?;
        Self::reduce(dom, dom.elem_from_json(num)?, dom.elem_from_json(den)?)
    }

    pub fn format<D: EuclideanDomain<Elem = E>>(&self, dom: &D) -> String {
        if self.den == dom.one() {
            return dom.elem_to_string(&self.num);
        }
        let wrap = |s: String| {
            // parenthesize composite sides so the "/" stays unambiguous
            if s[1..].contains(['+', '-', '/']) {
                format!("({s})")
            } else {
                s
            }
        };
        format!(
            "{}/{}",
            wrap(dom.elem_to_string(&self.num)),
            wrap(dom.elem_to_string(&self.den))
        )
    }

    /// Parse `"a"` or `"a/b"`, splitting at a top-level `/` (one not inside
    /// parentheses). Composite sides may be wrapped in one pair of
    /// parentheses, e.g. `(x+1)/(x+2)`.
    pub fn parse<D: EuclideanDomain<Elem = E>>(dom: &D, s: &str) -> Result<Self, Error> {
        let mut depth = 0usize;
        let mut split = None;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth = depth.checked_sub(1).ok_or_else(|| {
                        Error::Parse(ParseError::new("unbalanced parenthesis", i))
                    })?;
                }
                '/' if depth == 0 => {
                    if let Some(prev) = split {
                        // a second top-level slash: only legal as a coefficient
                        // like "1/2" in "1/2x+1/3"; in a fraction position it
                        // is ambiguous, so demand parentheses.
                        return Err(Error::Parse(ParseError::new(
                            format!(
                                "ambiguous fraction: top-level '/' at bytes {prev} and {i}; \
                                 parenthesize the numerator and denominator"
                            ),
                            i,
                        )));
                    }
                    split = Some(i);
                }
                _ => {}
            }
        }
        let strip = |part: &str| -> String {
            let t = part.trim();
            if t.starts_with('(') && t.ends_with(')') {
                // strip one layer only if it is a single balanced group
                let inner = &t[1..t.len() - 1];
                let mut d = 0i64;
                for c in inner.chars() {
                    match c {
                        '(' => d += 1,
                        ')' => d -= 1,
                        _ => {}
                    }
                    if d < 0 {
                        return t.to_string();
                    }
                }
                return inner.to_string();
            }
            t.to_string()
        };
        match split {
            None => {
                let e = dom.parse_elem(&strip(s))?;
                Ok(Self::from_elem(dom, e))
            }
            Some(i) => {
                let num = dom.parse_elem(&strip(&s[..i]))?;
                let den = dom.parse_elem(&strip(&s[i + 1..]))?;
                Self::reduce(dom, num, den)
            }
        }
    }
}
