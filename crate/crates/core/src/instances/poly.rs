//! Univariate polynomial rings over an exact coefficient field, with
//! `f = deg`.
//!
//! Two coefficient fields are shipped: the prime fields `F_p` (coefficients
//! stored canonically in `0..p`) and the rationals (exact `BigRational`
//! arithmetic throughout; no floating point anywhere). Long division by the
//! leading coefficient gives the usual remainder bound `deg r < deg divisor`.
//!
//! A polynomial ring over a field is never Egyptian: a reciprocal `1/d` with
//! `d` nonconstant drops degree below zero, and sums of unit fractions can
//! never push the numerator degree above the denominator degree. Membership
//! in the reciprocal complement is therefore decided by comparing degrees,
//! which places these instances on the DVR branch with uniformizer `1/x`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::domain::{Branch, DivisionResult, EuclideanDomain, EuclideanValue, UnitGroup};
use crate::error::{Error, ParseError};

/// An exact field usable as polynomial coefficients.
pub trait CoefficientField {
    type Coef: Clone + Eq + Ord + std::hash::Hash + std::fmt::Debug;

    fn zero(&self) -> Self::Coef;
    fn one(&self) -> Self::Coef;
    fn is_zero(&self, c: &Self::Coef) -> bool;
    fn add(&self, a: &Self::Coef, b: &Self::Coef) -> Self::Coef;
    fn neg(&self, a: &Self::Coef) -> Self::Coef;
    fn mul(&self, a: &Self::Coef, b: &Self::Coef) -> Self::Coef;
    fn inverse(&self, a: &Self::Coef) -> Option<Self::Coef>;

    /// `num/den` as a field element; `den` must not vanish in the field.
    fn coef_from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Coef, String>;

    /// The name used in the JSON encoding: `"Q"` or `"Fp:<p>"`.
    fn json_name(&self) -> String;

    /// The domain selector of the polynomial ring: `"qx"` or `"fp:<p>"`.
    fn poly_selector(&self) -> String;

    /// All field elements when the field is finite, `None` otherwise.
    fn all_elements(&self) -> Option<Vec<Self::Coef>>;

    fn coef_to_string(&self, c: &Self::Coef) -> String;
    fn parse_coef(&self, s: &str) -> Result<Self::Coef, ParseError>;

    /// Rescale a coefficient vector by a nonzero field constant into a
    /// gcd-friendly representative. Remainder sequences over Q blow up
    /// exponentially unless each remainder is rescaled to a primitive
    /// integer polynomial; over a finite field nothing is needed.
    fn gcd_normalize(&self, _coeffs: &mut [Self::Coef]) {}
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl CoefficientField for Rationals {
    type Coef = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, c: &BigRational) -> bool {
        c.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inverse(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn coef_from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational, String> {
        if den.is_zero() {
            return Err("zero denominator in coefficient".to_string());
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn json_name(&self) -> String {
        "Q".to_string()
    }

    fn poly_selector(&self) -> String {
        "qx".to_string()
    }

    fn all_elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    fn coef_to_string(&self, c: &BigRational) -> String {
        if c.denom().is_one() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        }
    }

    fn parse_coef(&self, s: &str) -> Result<BigRational, ParseError> {
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            None => (t, "1"),
            Some((n, d)) => (n.trim(), d.trim()),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| ParseError::new(format!("bad rational {t:?}"), 0))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| ParseError::new(format!("bad rational {t:?}"), 0))?;
        if den.is_zero() {
            return Err(ParseError::new("zero denominator in coefficient", 0));
        }
        Ok(BigRational::new(num, den))
    }

    fn gcd_normalize(&self, coeffs: &mut [BigRational]) {
        use num_integer::Integer;
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        for c in coeffs.iter() {
            denom_lcm = denom_lcm.lcm(c.denom());
            numer_gcd = numer_gcd.gcd(c.numer());
        }
        if numer_gcd.is_zero() {
            return;
        }
        let scale = BigRational::new(denom_lcm, numer_gcd);
        for c in coeffs.iter_mut() {
            *c *= &scale;
        }
    }
}

/// Deterministic Miller-Rabin for u64 moduli.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The prime field `F_p`, elements stored canonically in `0..p`.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self, Error> {
        if !is_prime_u64(p) {
            return Err(Error::ModulusNotPrime(p));
        }
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_bigint(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let m = num_integer::Integer::mod_floor(v, &p);
        let (_, digits) = m.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }
}

impl CoefficientField for Fp {
    type Coef = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, c: &u64) -> bool {
        *c == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inverse(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut acc = 1u64;
        let mut b = *a;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        Some(acc)
    }

    fn coef_from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64, String> {
        let n = self.reduce_bigint(num);
        let d = self.reduce_bigint(den);
        let dinv = self
            .inverse(&d)
            .ok_or_else(|| format!("coefficient denominator vanishes mod {}", self.p))?;
        Ok(self.mul(&n, &dinv))
    }

    fn json_name(&self) -> String {
        format!("Fp:{}", self.p)
    }

    fn poly_selector(&self) -> String {
        format!("fp:{}", self.p)
    }

    fn all_elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }

    fn coef_to_string(&self, c: &u64) -> String {
        c.to_string()
    }

    fn parse_coef(&self, s: &str) -> Result<u64, ParseError> {
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            None => (t, "1"),
            Some((n, d)) => (n.trim(), d.trim()),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| ParseError::new(format!("bad coefficient {t:?}"), 0))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| ParseError::new(format!("bad coefficient {t:?}"), 0))?;
        self.coef_from_ratio(&num, &den)
            .map_err(|m| ParseError::new(m, 0))
    }
}

/// Degree cap for parsed exponents, so a stray `x^4000000000` cannot
/// request a multi-gigabyte coefficient vector.
const MAX_PARSED_DEGREE: usize = 1_000_000;

/// A polynomial, coefficients lowest degree first, no trailing zeros;
/// the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Clone> Poly<C> {
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

/// The polynomial ring over `F`.
#[derive(Clone, Copy, Debug)]
pub struct PolyRing<F: CoefficientField> {
    field: F,
}

impl<F: CoefficientField> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn from_coeffs(&self, coeffs: Vec<F::Coef>) -> Poly<F::Coef> {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The monomial `c * x^k`.
    pub fn monomial(&self, c: F::Coef, k: usize) -> Poly<F::Coef> {
        if self.field.is_zero(&c) {
            return Poly { coeffs: vec![] };
        }
        let mut coeffs = vec![self.field.zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn constant(&self, c: F::Coef) -> Poly<F::Coef> {
        self.monomial(c, 0)
    }

    pub fn leading(&self, a: &Poly<F::Coef>) -> Option<F::Coef> {
        a.coeffs.last().cloned()
    }

    /// Multiply by a scalar from the coefficient field.
    pub fn scale(&self, a: &Poly<F::Coef>, c: &F::Coef) -> Poly<F::Coef> {
        if self.field.is_zero(c) {
            return Poly { coeffs: vec![] };
        }
        Poly {
            coeffs: a.coeffs.iter().map(|x| self.field.mul(x, c)).collect(),
        }
    }
}

impl<F: CoefficientField> EuclideanDomain for PolyRing<F> {
    type Elem = Poly<F::Coef>;

    fn selector(&self) -> String {
        self.field.poly_selector()
    }

    fn zero(&self) -> Self::Elem {
        Poly { coeffs: vec![] }
    }

    fn one(&self) -> Self::Elem {
        Poly {
            coeffs: vec![self.field.one()],
        }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let x = match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.field.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            };
            coeffs.push(x);
        }
        self.from_coeffs(coeffs)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero();
        }
        let mut coeffs = vec![self.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = self.field.add(&coeffs[i + j], &self.field.mul(x, y));
            }
        }
        self.from_coeffs(coeffs)
    }

    fn divmod(
        &self,
        dividend: &Self::Elem,
        divisor: &Self::Elem,
    ) -> Result<DivisionResult<Self::Elem>, Error> {
        if self.is_zero(divisor) {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = self
            .field
            .inverse(divisor.coeffs.last().unwrap())
            .expect("leading coefficient of a nonzero polynomial is invertible");
        let mut rem = dividend.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = self.field.mul(rem.last().unwrap(), &lead_inv);
            if !self.field.is_zero(&c) {
                quot[k - dd] = c.clone();
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let t = self.field.mul(&c, dc);
                    rem[k - dd + j] = self.field.add(&rem[k - dd + j], &self.field.neg(&t));
                }
            }
            rem.pop();
            while rem.last().is_some_and(|c| self.field.is_zero(c)) {
                rem.pop();
            }
        }
        Ok(DivisionResult {
            quotient: self.from_coeffs(quot),
            remainder: self.from_coeffs(rem),
        })
    }

    fn euclidean_value(&self, a: &Self::Elem) -> Result<EuclideanValue, Error> {
        match a.degree() {
            None => Err(Error::EuclideanValueOfZero),
            Some(d) => Ok(EuclideanValue(BigInt::from(d))),
        }
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        // primitive remainder sequence: rescaling each remainder keeps
        // rational coefficient growth polynomial instead of exponential
        let normalize = |mut p: Poly<F::Coef>| {
            self.field.gcd_normalize(&mut p.coeffs);
            p
        };
        let mut x = normalize(a.clone());
        let mut y = normalize(b.clone());
        while !self.is_zero(&y) {
            let r = self.divmod(&x, &y).expect("divisor is nonzero").remainder;
            x = y;
            y = normalize(r);
        }
        x
    }

    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.degree() == Some(0) {
            self.field.inverse(&a.coeffs[0]).map(|c| self.constant(c))
        } else {
            None
        }
    }

    fn canonical_unit(&self, a: &Self::Elem) -> Self::Elem {
        match self.leading(a) {
            None => self.one(),
            Some(lc) => self.constant(
                self.field
                    .inverse(&lc)
                    .expect("leading coefficient is invertible"),
            ),
        }
    }

    fn minimal_nonunit(&self) -> Self::Elem {
        self.monomial(self.field.one(), 1)
    }

    fn unit_group(&self) -> UnitGroup<Self::Elem> {
        match self.field.all_elements() {
            Some(all) => UnitGroup::Finite(
                all.into_iter()
                    .filter(|c| !self.field.is_zero(c))
                    .map(|c| self.constant(c))
                    .collect(),
            ),
            None => UnitGroup::CoefficientField {
                description: "coefficient-field nonzero elements".to_string(),
            },
        }
    }

    fn known_branch(&self) -> Branch {
        Branch::Dvr
    }

    fn egyptian_expand(&self, _num: &Self::Elem, _den: &Self::Elem) -> Option<Vec<Self::Elem>> {
        None
    }

    fn enumerate_up_to(&self, bound: i64) -> Result<Vec<Self::Elem>, Error> {
        let Some(all) = self.field.all_elements() else {
            return Err(Error::NotEnumerable);
        };
        if bound < 0 {
            return Err(Error::EnumerationBound { bound, min: 0 });
        }
        let nonzero: Vec<F::Coef> = all
            .iter()
            .filter(|c| !self.field.is_zero(c))
            .cloned()
            .collect();
        let mut out = Vec::new();
        for deg in 0..=(bound as usize) {
            // leading coefficient outermost, constant coefficient fastest
            let mut idx = vec![0usize; deg + 1];
            loop {
                let mut coeffs = Vec::with_capacity(deg + 1);
                for (pos, &i) in idx.iter().enumerate() {
                    if pos == deg {
                        coeffs.push(nonzero[i].clone());
                    } else {
                        coeffs.push(all[i].clone());
                    }
                }
                out.push(Poly { coeffs });
                // odometer increment, position 0 (constant term) fastest
                let mut pos = 0;
                loop {
                    let limit = if pos == deg { nonzero.len() } else { all.len() };
                    idx[pos] += 1;
                    if idx[pos] < limit {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                    if pos > deg {
                        break;
                    }
                }
                if pos > deg {
                    break;
                }
            }
        }
        Ok(out)
    }

    fn elem_to_string(&self, a: &Self::Elem) -> String {
        if a.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, c) in a.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let cs = self.field.coef_to_string(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let omit_coef = k > 0 && mag == "1";
            if !omit_coef {
                s.push_str(&mag);
            }
            if k >= 1 {
                s.push('x');
            }
            if k >= 2 {
                s.push_str(&format!("^{k}"));
            }
        }
        if s.is_empty() {
            "0".to_string()
        } else {
            s
        }
    }

    /// Recursive-descent parser for the human syntax, e.g. `x^2+1`,
    /// `3x-1/2`, `1/2x^3+4`. Grammar:
    ///
    /// ```text
    /// poly := [sign] term { sign term }
    /// term := coef ["*"] [var] | var
    /// var  := "x" ["^" uint]
    /// coef := uint ["/" uint]
    /// ```
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, ParseError> {
        let src: Vec<(usize, char)> = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        if src.is_empty() {
            return Err(ParseError::new("empty polynomial", 0));
        }
        let mut pos = 0usize; // index into src
        let mut terms: Vec<(F::Coef, usize)> = Vec::new();
        let byte_at =
            |i: usize| -> usize { src.get(i).map(|&(b, _)| b).unwrap_or_else(|| s.len()) };
        loop {
            // sign
            let mut negative = false;
            if pos < src.len() && (src[pos].1 == '+' || src[pos].1 == '-') {
                negative = src[pos].1 == '-';
                pos += 1;
            }
            if pos >= src.len() {
                return Err(ParseError::new("dangling sign", byte_at(pos)));
            }
            // coefficient digits (optional when the term is a bare variable)
            let digits_start = pos;
            while pos < src.len() && src[pos].1.is_ascii_digit() {
                pos += 1;
            }
            let mut coef = if digits_start == pos {
                None
            } else {
                let nums: String = src[digits_start..pos].iter().map(|&(_, c)| c).collect();
                Some((nums, None::<String>))
            };
            // optional /denominator
            if coef.is_some() && pos < src.len() && src[pos].1 == '/' {
                let den_start = pos + 1;
                let mut p = den_start;
                while p < src.len() && src[p].1.is_ascii_digit() {
                    p += 1;
                }
                if p == den_start {
                    return Err(ParseError::new(
                        "expected digits after '/'",
                        byte_at(den_start),
                    ));
                }
                let dens: String = src[den_start..p].iter().map(|&(_, c)| c).collect();
                coef = coef.map(|(n, _)| (n, Some(dens)));
                pos = p;
            }
            // optional '*'
            if coef.is_some() && pos < src.len() && src[pos].1 == '*' {
                pos += 1;
            }
            // variable part
            let mut exponent = 0usize;
            if pos < src.len() && src[pos].1 == 'x' {
                pos += 1;
                exponent = 1;
                if pos < src.len() && src[pos].1 == '^' {
                    let e_start = pos + 1;
                    let mut p = e_start;
                    while p < src.len() && src[p].1.is_ascii_digit() {
                        p += 1;
                    }
                    if p == e_start {
                        return Err(ParseError::new(
                            "expected digits after '^'",
                            byte_at(e_start),
                        ));
                    }
                    let es: String = src[e_start..p].iter().map(|&(_, c)| c).collect();
                    exponent = es
                        .parse()
                        .ok()
                        .filter(|&e| e <= MAX_PARSED_DEGREE)
                        .ok_or_else(|| {
                            ParseError::new("exponent out of range", byte_at(e_start))
                        })?;
                    pos = p;
                }
            } else if coef.is_none() {
                return Err(ParseError::new(
                    format!("expected a coefficient or 'x', got {:?}", src[pos].1),
                    byte_at(pos),
                ));
            }
            let c = match coef {
                None => self.field.one(),
                Some((n, d)) => {
                    let num: BigInt = n.parse().unwrap();
                    let den: BigInt = d.map(|d| d.parse().unwrap()).unwrap_or_else(BigInt::one);
                    self.field
                        .coef_from_ratio(&num, &den)
                        .map_err(|m| ParseError::new(m, byte_at(digits_start)))?
                }
            };
            let c = if negative { self.field.neg(&c) } else { c };
            terms.push((c, exponent));
            if pos >= src.len() {
                break;
            }
            if src[pos].1 != '+' && src[pos].1 != '-' {
                return Err(ParseError::new(
                    format!("unexpected character {:?}", src[pos].1),
                    byte_at(pos),
                ));
            }
        }
        let top = terms.iter().map(|&(_, k)| k).max().unwrap_or(0);
        let mut coeffs = vec![self.field.zero(); top + 1];
        for (c, k) in terms {
            coeffs[k] = self.field.add(&coeffs[k], &c);
        }
        Ok(self.from_coeffs(coeffs))
    }

    fn elem_to_json(&self, a: &Self::Elem) -> Value {
        json!({
            "coeffs": a.coeffs
                .iter()
                .map(|c| Value::String(self.field.coef_to_string(c)))
                .collect::<Vec<_>>(),
            "coef_field": self.field.json_name(),
        })
    }

    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem, ParseError> {
        let obj = v.as_object().ok_or_else(|| {
            ParseError::new(
                "expected a polynomial object {\"coeffs\", \"coef_field\"}",
                0,
            )
        })?;
        if let Some(name) = obj.get("coef_field").and_then(Value::as_str) {
            if name != self.field.json_name() {
                return Err(ParseError::new(
                    format!(
                        "coefficient field {:?} does not match this domain ({:?})",
                        name,
                        self.field.json_name()
                    ),
                    0,
                ));
            }
        }
        let arr = obj
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::new("missing \"coeffs\" array", 0))?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for c in arr {
            let s = c
                .as_str()
                .ok_or_else(|| ParseError::new("coefficients must be strings", 0))?;
            coeffs.push(self.field.parse_coef(s)?);
        }
        Ok(self.from_coeffs(coeffs))
    }
}
