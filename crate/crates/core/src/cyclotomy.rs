//! Cyclotomic polynomials, the Kronecker test by cyclotomic trial division,
//! and cyclotomic exponent sequences `f = prod (1 - x^i)^(e_i)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intpoly::{IntPoly, SeriesTruncation};

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let len = ds.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                ds.push(ds[i] * pk);
            }
        }
    }
    ds.sort_unstable();
    ds
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    factorize(n)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Some(p)` when `n = p^k` with `k >= 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Cached data for one cyclotomic index: the polynomial itself plus a prime
/// `modulus = 1 (mod n)` and an element `root` of exact order `n` modulo it.
/// If `Phi_n` divides `f` then `f(root) = 0 (mod modulus)`, which gives a cheap
/// rejection test before exact division.
struct CycloEntry {
    poly: IntPoly,
    phi: usize,
    modulus: u64,
    root: u64,
}

impl CycloEntry {
    fn build(n: u64) -> Self {
        let poly = cyclotomic_uncached(n);
        let phi = poly.degree().unwrap_or(0);
        let mut k = (1u64 << 30) / n + 1;
        let modulus = loop {
            let q = k * n + 1;
            if is_prime(q) {
                break q;
            }
            k += 1;
        };
        let order_factors: Vec<u64> = factorize(modulus - 1).into_iter().map(|(p, _)| p).collect();
        let generator = (2..modulus)
            .find(|&g| {
                order_factors
                    .iter()
                    .all(|&p| pow_mod(g, (modulus - 1) / p, modulus) != 1)
            })
            .expect("prime modulus has a primitive root");
        let root = pow_mod(generator, (modulus - 1) / n, modulus);
        CycloEntry {
            poly,
            phi,
            modulus,
            root,
        }
    }

    fn may_divide(&self, f: &ModImage) -> bool {
        f.eval(self.modulus, self.root) == 0
    }
}

/// Coefficients of a polynomial kept in machine words when they fit.
enum ModImage<'a> {
    Small(Vec<i64>),
    Big(&'a [BigInt]),
}

impl<'a> ModImage<'a> {
    fn of(p: &'a IntPoly) -> Self {
        let small: Option<Vec<i64>> = p.coeffs().iter().map(ToPrimitive::to_i64).collect();
        match small {
            Some(v) => ModImage::Small(v),
            None => ModImage::Big(p.coeffs()),
        }
    }

    fn eval(&self, m: u64, t: u64) -> u64 {
        let mi = m as i128;
        let reduce = |c: i128| c.rem_euclid(mi) as u64;
        match self {
            ModImage::Small(cs) => cs
                .iter()
                .rev()
                .fold(0, |acc, &c| (mul_mod(acc, t, m) + reduce(c as i128)) % m),
            ModImage::Big(cs) => {
                let bm = BigInt::from(m);
                cs.iter().rev().fold(0, |acc, c| {
                    let r = ((c % &bm + &bm) % &bm).to_u64().unwrap_or(0);
                    (mul_mod(acc, t, m) + r) % m
                })
            }
        }
    }
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<CycloEntry>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CycloEntry>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn entry(n: u64) -> Arc<CycloEntry> {
    if let Some(e) = cache().read().expect("cyclotomic cache poisoned").get(&n) {
        return Arc::clone(e);
    }
    let built = Arc::new(CycloEntry::build(n));
    let mut map = cache().write().expect("cyclotomic cache poisoned");
    Arc::clone(map.entry(n).or_insert(built))
}

fn cyclotomic_uncached(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    let x_pow_minus_one =
        |d: u64| IntPoly::monomial(BigInt::one(), d as usize) - IntPoly::from_i64s(&[1]);
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in divisors(n) {
        match moebius(n / d) {
            1 => num = &num * &x_pow_minus_one(d),
            -1 => den = &den * &x_pow_minus_one(d),
            _ => {}
        }
    }
    num.exact_div(&den)
        .expect("Moebius product of x^d - 1 is an exact polynomial")
}

/// The `n`-th cyclotomic polynomial, `prod_{d | n} (x^d - 1)^mu(n/d)`.
pub fn cyclotomic(n: u64) -> IntPoly {
    entry(n).poly.clone()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    /// `(index, multiplicity)`, sorted by index.
    pub factors: Vec<(u64, u32)>,
    pub remainder: IntPoly,
    pub unit_sign: i8,
}

impl CyclotomicFactorization {
    pub fn is_kronecker(&self) -> bool {
        self.remainder.is_one() && self.unit_sign == 1
    }

    /// `Phi_1 = x - 1` divides the input. Never true for a reduced numerator.
    pub fn has_phi1(&self) -> bool {
        self.factors.first().is_some_and(|&(n, _)| n == 1)
    }

    pub fn largest_index(&self) -> Option<u64> {
        self.factors.last().map(|&(n, _)| n)
    }

    /// `unit_sign * prod Phi_n^mult * remainder`.
    pub fn expand(&self) -> IntPoly {
        let prod: IntPoly = self
            .factors
            .iter()
            .map(|&(n, m)| cyclotomic(n).pow(m))
            .product();
        let signed = &prod * &self.remainder;
        if self.unit_sign < 0 {
            -signed
        } else {
            signed
        }
    }
}

/// Extracts every cyclotomic factor of `f` by trial division.
///
/// `Phi_n | f` forces `phi(n) <= deg f`, and `phi(n) >= sqrt(n / 2)` then
/// bounds the candidates by `n <= 2 deg(f)^2`.
pub fn kronecker_factor(f: &IntPoly) -> Result<CyclotomicFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if f.constant_term().is_zero() {
        return Err(Error::NonUnitAtZero);
    }
    let deg = f.degree().unwrap_or(0) as u64;
    let mut rem = f.clone();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for n in 1..=2 * deg * deg {
        let rdeg = rem.degree().unwrap_or(0);
        if rdeg == 0 {
            break;
        }
        if euler_phi(n) as usize > rdeg {
            continue;
        }
        let e = entry(n);
        let mut mult = 0;
        while e.phi <= rem.degree().unwrap_or(0) && e.may_divide(&ModImage::of(&rem)) {
            match rem.exact_div(&e.poly) {
                Ok(q) => {
                    rem = q;
                    mult += 1;
                }
                Err(Error::NonExactDivision) => break,
                Err(other) => return Err(other),
            }
        }
        if mult > 0 {
            factors.push((n, mult));
        }
    }
    let unit_sign = if rem.leading_coeff().is_some_and(Signed::is_negative) {
        rem = -rem;
        -1
    } else {
        1
    };
    Ok(CyclotomicFactorization {
        factors,
        remainder: rem,
        unit_sign,
    })
}

pub fn is_kronecker(f: &IntPoly) -> Result<bool> {
    Ok(kronecker_factor(f)?.is_kronecker())
}

/// The integers `e_1..e_B` with `prod_{i<=B} (1 - x^i)^(e_i) = f mod x^(B+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentSequence {
    pub bound: usize,
    pub values: Vec<BigInt>,
    pub residual_is_trivial: bool,
}

impl ExponentSequence {
    /// `e_i` for `1 <= i <= bound`.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.values[i - 1]
    }

    /// Largest `i` with `e_i != 0`.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.values
            .iter()
            .rposition(|e| !e.is_zero())
            .map(|i| i + 1)
    }
}

pub fn exponent_sequence(f: &IntPoly, bound: usize) -> Result<ExponentSequence> {
    exponent_sequence_of_series(&f.to_series(bound))
}

/// Peels off one factor `(1 - x^i)^(e_i)` per degree: once the residual is
/// `1 + c x^i + ...`, `e_i = -c`.
pub fn exponent_sequence_of_series(series: &SeriesTruncation) -> Result<ExponentSequence> {
    if !series.coeff(0).is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    let bound = series.order();
    let mut residual = series.clone();
    let mut values = Vec::with_capacity(bound);
    for i in 1..=bound {
        let c = residual.coeff(i).clone();
        if !c.is_zero() {
            residual.mul_one_minus_x_pow(i, &c);
        }
        values.push(-c);
    }
    Ok(ExponentSequence {
        bound,
        values,
        residual_is_trivial: residual.is_one(),
    })
}

pub fn reconstruct_from_exponents(seq: &ExponentSequence) -> SeriesTruncation {
    let mut s = SeriesTruncation::one(seq.bound);
    for (i, e) in seq.values.iter().enumerate() {
        s.mul_one_minus_x_pow(i + 1, e);
    }
    s
}
