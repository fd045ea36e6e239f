//! Shared helpers for the integration suites: a reproducible generator,
//! per-instance random fractions, and an independent certificate oracle.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;

use recip_core::decompose::Decomposition;
use recip_core::instances::{Fp, GaussInt, GaussianIntegers, Integers, Poly, PolyRing, Rationals};
use recip_core::{EuclideanDomain, Fraction};

/// SplitMix64: tiny, seedable, reproducible across platforms and releases.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Run one acceptance criterion, printing a PASS/FAIL line either way.
pub fn criterion<F>(n: u32, name: &str, body: F)
where
    F: FnOnce() + std::panic::UnwindSafe,
{
    let result = std::panic::catch_unwind(body);
    match &result {
        Ok(()) => println!("criterion {n:02} ({name}): PASS"),
        Err(_) => println!("criterion {n:02} ({name}): FAIL"),
    }
    if let Err(e) = result {
        std::panic::resume_unwind(e);
    }
}

/// Independent certificate oracle: clear all denominators and compare
///   num * prod(d_i) == den * sum_i prod_{j != i}(d_j)
/// using only ring multiplication, addition and equality — no division, no
/// gcd, no shared code with the library's `verify`.
pub fn cross_multiply_check<D: EuclideanDomain>(dom: &D, dec: &Decomposition<D::Elem>) -> bool {
    if dec.denominators.iter().any(|d| dom.is_zero(d)) {
        return false;
    }
    let mut product = dom.one();
    for d in &dec.denominators {
        product = dom.mul(&product, d);
    }
    let mut partial_sum = dom.zero();
    for i in 0..dec.denominators.len() {
        let mut partial = dom.one();
        for (j, d) in dec.denominators.iter().enumerate() {
            if j != i {
                partial = dom.mul(&partial, d);
            }
        }
        partial_sum = dom.add(&partial_sum, &partial);
    }
    dom.mul(dec.target.num(), &product) == dom.mul(dec.target.den(), &partial_sum)
}

/// Exact rational value of an integer decomposition, summed with an
/// external library type rather than the crate's own fraction arithmetic.
pub fn rational_sum(denoms: &[BigInt]) -> BigRational {
    use num_traits::One;
    denoms
        .iter()
        .map(|d| BigRational::new(BigInt::one(), d.clone()))
        .sum()
}

/// Reduced integer fraction with `|num| <= den`, nonzero.
pub fn rand_frac_z_light(rng: &mut Rng, max_den: i64) -> Fraction<BigInt> {
    let z = Integers;
    loop {
        let den = rng.int_in(2, max_den);
        let num = rng.int_in(-den, den);
        if num == 0 {
            continue;
        }
        return Fraction::reduce(&z, BigInt::from(num), BigInt::from(den)).unwrap();
    }
}

/// Reduced nonzero integer fraction with `|value| < max_int + 1`; the
/// integer part is unbounded only by `max_int`, the denominator by
/// `max_den`. Expansion length grows like e^|value|, so callers keep
/// `max_int` small.
pub fn rand_frac_z_any(rng: &mut Rng, max_den: i64, max_int: i64) -> Fraction<BigInt> {
    let z = Integers;
    loop {
        let den = rng.int_in(1, max_den);
        let whole = rng.int_in(-max_int, max_int);
        let frac = rng.int_in(-(den - 1).max(0), (den - 1).max(0));
        let num = whole * den + frac;
        if num == 0 {
            continue;
        }
        return Fraction::reduce(&z, BigInt::from(num), BigInt::from(den)).unwrap();
    }
}

fn rand_gauss(rng: &mut Rng, c: i64) -> GaussInt {
    GaussInt::new(rng.int_in(-c, c), rng.int_in(-c, c))
}

/// Reduced nonzero Gaussian fraction; `light_num` forces `N(num) <= N(den)`.
pub fn rand_frac_zi(rng: &mut Rng, c: i64, light_num: bool) -> Fraction<GaussInt> {
    let zi = GaussianIntegers;
    loop {
        let mut num = rand_gauss(rng, c);
        let mut den = rand_gauss(rng, c);
        if zi.is_zero(&num) || zi.is_zero(&den) {
            continue;
        }
        if light_num && num.norm() > den.norm() {
            std::mem::swap(&mut num, &mut den);
        }
        let f = Fraction::reduce(&zi, num, den).unwrap();
        if !f.is_zero(&zi) {
            return f;
        }
    }
}

pub fn rand_poly_fp(rng: &mut Rng, ring: &PolyRing<Fp>, max_deg: usize) -> Poly<u64> {
    let p = ring.field().modulus();
    let deg = rng.below(max_deg as u64 + 1) as usize;
    let mut coeffs: Vec<u64> = (0..=deg).map(|_| rng.below(p)).collect();
    let last = coeffs.last_mut().unwrap();
    if *last == 0 {
        *last = 1 + rng.below(p - 1);
    }
    ring.from_coeffs(coeffs)
}

/// Reduced nonzero fraction over `F_p[x]`; `light_num` forces
/// `deg num <= deg den`.
pub fn rand_frac_fp(
    rng: &mut Rng,
    ring: &PolyRing<Fp>,
    max_deg: usize,
    light_num: bool,
) -> Fraction<Poly<u64>> {
    loop {
        let mut num = rand_poly_fp(rng, ring, max_deg);
        let mut den = rand_poly_fp(rng, ring, max_deg);
        if light_num && num.degree() > den.degree() {
            std::mem::swap(&mut num, &mut den);
        }
        let f = Fraction::reduce(ring, num, den).unwrap();
        if !f.is_zero(ring) {
            return f;
        }
    }
}

/// Random polynomial over Q with the given degree bound; coefficient
/// denominators are drawn from `denoms`.
pub fn rand_poly_q(rng: &mut Rng, max_deg: usize, denoms: &[i64]) -> Poly<BigRational> {
    let ring = PolyRing::new(Rationals);
    let deg = rng.below(max_deg as u64 + 1) as usize;
    let mut coeffs: Vec<BigRational> = (0..=deg)
        .map(|_| {
            let n = rng.int_in(-20, 20);
            let d = denoms[rng.below(denoms.len() as u64) as usize];
            BigRational::new(BigInt::from(n), BigInt::from(d))
        })
        .collect();
    use num_traits::Zero;
    if coeffs.last().unwrap().is_zero() {
        let d = denoms[rng.below(denoms.len() as u64) as usize];
        *coeffs.last_mut().unwrap() =
            BigRational::new(BigInt::from(rng.int_in(1, 20)), BigInt::from(d));
    }
    ring.from_coeffs(coeffs)
}

/// Reduced nonzero fraction over Q[x]; `light_num` forces
/// `deg num <= deg den`.
pub fn rand_frac_q(rng: &mut Rng, max_deg: usize, light_num: bool) -> Fraction<Poly<BigRational>> {
    let ring = PolyRing::new(Rationals);
    loop {
        let mut num = rand_poly_q(rng, max_deg, &[1, 2, 3, 4]);
        let mut den = rand_poly_q(rng, max_deg, &[1, 2, 3, 4]);
        if light_num && num.degree() > den.degree() {
            std::mem::swap(&mut num, &mut den);
        }
        let f = Fraction::reduce(&ring, num, den).unwrap();
        if !f.is_zero(&ring) {
            return f;
        }
    }
}
