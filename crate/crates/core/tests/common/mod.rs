//! Independent reference implementations for the integration and
//! acceptance suites. None of these call into the library's algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

pub type Coeffs = Vec<BigInt>;

pub fn big(v: &[i64]) -> Coeffs {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

pub fn trim(mut v: Coeffs) -> Coeffs {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Schoolbook division; panics unless `b` divides `a` over the integers.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.is_empty() {
        return r;
    }
    let lead = b.last().expect("nonzero divisor").clone();
    let mut q = vec![BigInt::zero(); r.len() + 1 - b.len()];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let (c, rem) = r.last().unwrap().div_rem(&lead);
        assert!(rem.is_zero(), "inexact division");
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &c * y;
        }
        q[shift] = c;
        r = trim(r);
    }
    assert!(r.is_empty(), "inexact division");
    trim(q)
}

/// Cyclotomic polynomials by recursion on `x^n - 1 = prod_{d | n} Phi_d`.
pub fn cyclotomic_oracle(n: u64) -> Coeffs {
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = div_exact(&num, &cyclotomic_oracle(d));
        }
    }
    num
}

/// All numerical semigroups with Frobenius number at most `max_f`, as gap
/// sets, found by brute force over subsets of `1..F`.
pub fn gap_sets_up_to_frobenius(max_f: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for f in 1..=max_f {
        let below = (f - 1) as u32;
        for mask in 0u64..(1 << below) {
            let in_s = |x: u64| x == 0 || x > f || (x < f && mask >> (x - 1) & 1 == 1);
            let closed = (1..f)
                .filter(|&a| in_s(a))
                .all(|a| (a..f).filter(|&b| in_s(b)).all(|b| in_s(a + b)));
            if closed {
                out.push((1..=f).filter(|&x| !in_s(x)).collect());
            }
        }
    }
    out
}

/// Genus counts 0..=max_genus from gap sets (every such semigroup has
/// Frobenius number below twice its genus).
pub fn genus_counts_oracle(max_genus: u64) -> Vec<u64> {
    let mut counts = vec![0u64; max_genus as usize + 1];
    for gaps in gap_sets_up_to_frobenius(2 * max_genus) {
        if let Some(c) = counts.get_mut(gaps.len()) {
            *c += 1;
        }
    }
    counts
}

/// `(1 - x) * sum_{s in S} x^s`, from membership alone.
pub fn semigroup_polynomial_oracle(gaps: &[u64]) -> Coeffs {
    let f = gaps.last().copied().unwrap_or(0) as usize;
    let gapset: BTreeSet<u64> = gaps.iter().copied().collect();
    let hilbert: Coeffs = (0..=f + 1)
        .map(|s| BigInt::from(!gapset.contains(&(s as u64)) as i64))
        .collect();
    let mut p = mul(&hilbert, &big(&[1, -1]));
    // the tail of the infinite series contributes exactly x^(f+2) * 1
    p.truncate(f + 2);
    trim(p)
}

/// Gap set of the semigroup generated by `gens` (gcd 1 assumed).
pub fn gaps_of(gens: &[u64]) -> Vec<u64> {
    let m = *gens.iter().min().unwrap();
    let mut member = vec![true];
    let mut gaps = Vec::new();
    let mut run = 0;
    let mut n = 1usize;
    while run < m {
        let is = gens
            .iter()
            .any(|&g| (g as usize) <= n && member[n - g as usize]);
        member.push(is);
        if is {
            run += 1;
        } else {
            run = 0;
            gaps.push(n as u64);
        }
        n += 1;
    }
    gaps
}

fn derivative(f: &[BigInt]) -> Coeffs {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

fn primitive(f: Coeffs) -> Coeffs {
    let g = f.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return f;
    }
    let sign = if f.last().is_some_and(Signed::is_negative) {
        -g
    } else {
        g
    };
    f.into_iter().map(|c| c / &sign).collect()
}

/// Pseudo-remainder of `a` by `b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    let mut r = trim(a.to_vec());
    let lead = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap().clone();
        r = r.iter().map(|x| x * &lead).collect();
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &c * y;
        }
        r = trim(r);
    }
    r
}

pub fn gcd_poly(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    let (mut a, mut b) = (primitive(trim(a.to_vec())), primitive(trim(b.to_vec())));
    while !b.is_empty() {
        let r = primitive(prem(&a, &b));
        a = b;
        b = r;
    }
    a
}

pub fn squarefree_part(f: &[BigInt]) -> Coeffs {
    let g = gcd_poly(f, &derivative(f));
    if g.len() <= 1 {
        return trim(f.to_vec());
    }
    div_exact(f, &g)
}

/// Roots of a squarefree polynomial by Aberth iteration in double precision.
pub fn roots(f: &[BigInt]) -> Vec<Complex64> {
    let c: Vec<f64> = f.iter().map(|x| x.to_f64().unwrap()).collect();
    let n = c.len() - 1;
    let eval = |z: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for a in c.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            Complex64::from_polar(
                1.1,
                2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64,
            )
        })
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let (p, dp) = eval(z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[k] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Kronecker by root moduli: positive leading coefficient one and every root
/// of the squarefree part within `tol` of the unit circle.
pub fn kronecker_by_roots(f: &[BigInt], tol: f64) -> bool {
    let f = trim(f.to_vec());
    if !f.last().is_some_and(One::is_one) {
        return false;
    }
    let sf = squarefree_part(&f);
    if sf.len() <= 1 {
        return true;
    }
    roots(&sf).iter().all(|z| (z.norm() - 1.0).abs() < tol)
}

/// Random polynomial with constant term 1 and degree at most `max_deg`:
/// a signed product of cyclotomic polynomials, optionally spoiled by one
/// perturbed coefficient or a random cofactor.
pub fn random_kronecker_candidate<R: Rng>(rng: &mut R, max_deg: usize) -> Coeffs {
    let mut f = big(&[1]);
    let mut phi1 = 0;
    for _ in 0..rng.gen_range(1..=5) {
        let n = rng.gen_range(1..=30u64);
        let phi = cyclotomic_oracle(n);
        if f.len() - 1 + phi.len() - 1 <= max_deg {
            phi1 += (n == 1) as u32;
            f = mul(&f, &phi);
        }
    }
    if phi1 % 2 == 1 {
        f = f.into_iter().map(|c| -c).collect();
    }
    match rng.gen_range(0..3) {
        0 => {}
        1 => {
            let i = rng.gen_range(1..f.len().max(2));
            if i >= f.len() {
                f.push(BigInt::zero());
            }
            f[i] += if rng.gen_bool(0.5) { 1 } else { -1 };
            f = trim(f);
        }
        _ => {
            let room = max_deg.saturating_sub(f.len() - 1).max(1);
            let d = rng.gen_range(1..=room.min(6));
            let mut g: Coeffs = (0..=d)
                .map(|_| BigInt::from(rng.gen_range(-2..=2)))
                .collect();
            g[0] = BigInt::one();
            if g[d].is_zero() {
                g[d] = BigInt::one();
            }
            f = mul(&f, &g);
            f.truncate(max_deg + 1);
            f = trim(f);
        }
    }
    f
}

/// Generalized binomial `C(e, k)` for any integer `e`.
fn binomial(e: &BigInt, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= e - BigInt::from(j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

/// `prod_{i<=B} (1 - x^i)^(e_i) mod x^(B+1)` by binomial expansion.
pub fn product_of_exponents(e: &[BigInt]) -> Coeffs {
    let b = e.len();
    let mut acc = vec![BigInt::zero(); b + 1];
    acc[0] = BigInt::one();
    for (idx, ei) in e.iter().enumerate() {
        let i = idx + 1;
        if ei.is_zero() {
            continue;
        }
        let mut factor = vec![BigInt::zero(); b + 1];
        for k in 0..=(b / i) {
            let c = binomial(ei, k as u64);
            factor[k * i] = if k % 2 == 0 { c } else { -c };
        }
        let mut prod = mul(&acc, &factor);
        prod.resize(b + 1, BigInt::zero());
        prod.truncate(b + 1);
        acc = prod;
    }
    acc
}

/// `C(n, k)`, zero when `k > n`.
pub fn choose(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial(&BigInt::from(n), k)
}
