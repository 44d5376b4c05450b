//! Hilbert series of graded algebras with cyclotomic denominators, Koszul
//! deviations and Poincaré series, h/f-vector transforms, detection of
//! irreducible cyclotomic h-polynomials, and Hilbert functions of plane
//! monoids.
//!
//! Denominators are stored as a multiset of cyclotomic indices under the
//! convention `Psi_1 = 1 - x`, `Psi_n = Phi_n` for `n > 1`. With it every
//! `1 - x^d` is exactly `prod_{n | d} Psi_n`, with no sign to track.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclotomy::{
    cyclotomic, divisors, euler_phi, exponent_sequence, exponent_sequence_of_series, is_prime,
    kronecker_factor,
};
use crate::error::{Error, Result};
use crate::intpoly::{IntPoly, SeriesTruncation};

fn psi(n: u64) -> IntPoly {
    if n == 1 {
        IntPoly::one_minus_x_pow(1)
    } else {
        cyclotomic(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: IntPoly,
    /// `Psi` index -> multiplicity.
    den: BTreeMap<u64, u32>,
    reduced: bool,
}

impl HilbertSeries {
    /// `numerator / prod (1 - x^d)` over `den_orders`.
    pub fn new(numerator: IntPoly, den_orders: &[u64]) -> Result<Self> {
        let mut den = BTreeMap::new();
        for &d in den_orders {
            if d == 0 {
                return Err(Error::NonPositiveDegree);
            }
            for n in divisors(d) {
                *den.entry(n).or_insert(0) += 1;
            }
        }
        Ok(HilbertSeries {
            numerator,
            den,
            reduced: false,
        })
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// The denominator as `(index, multiplicity)` over `Psi_n`.
    pub fn denominator_factors(&self) -> Vec<(u64, u32)> {
        self.den.iter().map(|(&n, &k)| (n, k)).collect()
    }

    pub fn denominator(&self) -> IntPoly {
        self.den.iter().map(|(&n, &k)| psi(n).pow(k)).product()
    }

    /// Rewrites the denominator as `prod (1 - x^d)` when it has that shape.
    /// Peels the largest remaining index each time, which must come with all
    /// of its divisors.
    pub fn den_orders(&self) -> Option<Vec<u64>> {
        let mut left = self.den.clone();
        let mut orders = Vec::new();
        while let Some((&d, _)) = left.iter().next_back() {
            for n in divisors(d) {
                let k = left.get_mut(&n)?;
                *k -= 1;
                if *k == 0 {
                    left.remove(&n);
                }
            }
            orders.push(d);
        }
        orders.sort_unstable();
        Some(orders)
    }

    /// Multiplicity of `1 - x` in the denominator; the Krull dimension once reduced.
    pub fn pole_order_at_one(&self) -> u32 {
        self.den.get(&1).copied().unwrap_or(0)
    }

    /// Cancels every cyclotomic factor shared by numerator and denominator.
    pub fn reduce(&self) -> HilbertSeries {
        if self.reduced || self.numerator.is_zero() {
            return HilbertSeries {
                reduced: true,
                ..self.clone()
            };
        }
        let shift = self.numerator.x_valuation();
        let core = self.numerator.shift_down(shift);
        let fac = kronecker_factor(&core).expect("nonzero with nonzero constant term");
        let mut negate = fac.unit_sign < 0;
        let mut num_factors: BTreeMap<u64, u32> = fac.factors.iter().copied().collect();
        if let Some(&k) = num_factors.get(&1) {
            // Phi_1 = -Psi_1
            negate ^= k % 2 == 1;
        }
        let mut den = self.den.clone();
        for (n, k) in num_factors.iter_mut() {
            if let Some(dk) = den.get_mut(n) {
                let c = (*k).min(*dk);
                *k -= c;
                *dk -= c;
            }
        }
        den.retain(|_, k| *k > 0);
        let mut numerator: IntPoly = num_factors
            .iter()
            .filter(|(_, &k)| k > 0)
            .map(|(&n, &k)| psi(n).pow(k))
            .product();
        numerator = (&numerator * &fac.remainder).shift_up(shift);
        if negate {
            numerator = -numerator;
        }
        HilbertSeries {
            numerator,
            den,
            reduced: true,
        }
    }

    /// Coefficients of the series up to `x^order`.
    pub fn series_coefficients(&self, order: usize) -> SeriesTruncation {
        self.denominator()
            .series_inverse(order)
            .expect("every Psi_n has constant term 1")
            .mul_poly(&self.numerator)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        match self.den_orders() {
            Some(orders) if orders.is_empty() => Ok(()),
            Some(orders) => {
                write!(f, " / ")?;
                for d in orders {
                    if d == 1 {
                        write!(f, "(1 - x)")?;
                    } else {
                        write!(f, "(1 - x^{d})")?;
                    }
                }
                Ok(())
            }
            None => {
                write!(f, " / ")?;
                for (n, k) in &self.den {
                    if *n == 1 {
                        write!(f, "(1 - x)")?;
                    } else {
                        write!(f, "Phi_{n}")?;
                    }
                    if *k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// `prod (1 - x^m) / prod (1 - x^d)` for a complete intersection with
/// variable degrees `d` and relation degrees `m`; not reduced.
pub fn ci_series(var_degrees: &[u64], rel_degrees: &[u64]) -> Result<HilbertSeries> {
    if rel_degrees.len() > var_degrees.len() {
        return Err(Error::TooManyRelations {
            relations: rel_degrees.len(),
            variables: var_degrees.len(),
        });
    }
    if rel_degrees.contains(&0) {
        return Err(Error::NonPositiveDegree);
    }
    let numerator = rel_degrees
        .iter()
        .map(|&m| IntPoly::one_minus_x_pow(m as usize))
        .product();
    HilbertSeries::new(numerator, var_degrees)
}

/// The h-polynomial and dimension of a standard graded series.
pub fn h_polynomial(series: &HilbertSeries) -> Result<(IntPoly, usize)> {
    let reduced = series.reduce();
    if reduced.den.keys().any(|&n| n != 1) {
        return Err(Error::NotStandardGraded);
    }
    let d = reduced.pole_order_at_one() as usize;
    Ok((reduced.numerator, d))
}

/// Deviations `eps_1..eps_B` of a Koszul algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeviationSequence {
    pub bound: usize,
    pub values: Vec<BigInt>,
}

impl DeviationSequence {
    /// `eps_i`, 1-based.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.values[i - 1]
    }

    pub fn last_nonzero(&self) -> Option<usize> {
        self.values
            .iter()
            .rposition(|e| !e.is_zero())
            .map(|i| i + 1)
    }

    /// `prod (1 + x^(2i-1))^eps_(2i-1) / prod (1 - x^(2i))^eps_(2i)` to order `bound`.
    pub fn poincare_series(&self) -> SeriesTruncation {
        let mut s = SeriesTruncation::one(self.bound);
        for (idx, eps) in self.values.iter().enumerate() {
            let i = idx + 1;
            if i % 2 == 1 {
                // 1 + x^i = (1 - x^(2i)) / (1 - x^i)
                s.mul_one_minus_x_pow(2 * i, eps);
                s.mul_one_minus_x_pow(i, &-eps);
            } else {
                s.mul_one_minus_x_pow(i, &-eps);
            }
        }
        s
    }
}

/// Deviations from the h-polynomial: with `e_i` the cyclotomic exponents of
/// `h`, `eps_1 = d - e_1` and `eps_i = (-1)^i e_i` for `i >= 2`. Koszulness is
/// the caller's assertion and is not checked.
pub fn koszul_deviations(h: &IntPoly, dim: usize, bound: usize) -> Result<DeviationSequence> {
    let e = exponent_sequence(h, bound)?;
    let values = e
        .values
        .iter()
        .enumerate()
        .map(|(idx, ei)| match idx + 1 {
            1 => BigInt::from(dim) - ei,
            i if i % 2 == 0 => ei.clone(),
            _ => -ei,
        })
        .collect();
    Ok(DeviationSequence { bound, values })
}

/// Betti numbers `beta_0..beta_B` of the residue field of a Koszul algebra,
/// read off `1 / H(R, -x)`.
pub fn poincare_coefficients(series: &HilbertSeries, bound: usize) -> Result<SeriesTruncation> {
    let num = series.numerator().negate_variable();
    let den = series.denominator().negate_variable();
    Ok(num.series_inverse(bound)?.mul_poly(&den))
}

/// Extracts deviations from a Poincaré series through
/// `1 / P(R, -x) = prod (1 - x^i)^((-1)^i eps_i)`.
pub fn deviations_from_poincare(betti: &SeriesTruncation) -> Result<DeviationSequence> {
    if !betti.coeff(0).is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    let inverse = betti.negate_variable().inverse()?;
    let c = exponent_sequence_of_series(&inverse)?;
    let values = c
        .values
        .into_iter()
        .enumerate()
        .map(|(idx, ci)| if (idx + 1) % 2 == 0 { ci } else { -ci })
        .collect();
    Ok(DeviationSequence {
        bound: betti.order(),
        values,
    })
}

/// A diagnostic growth rate, rounded to four decimals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CurvatureEstimate {
    pub ten_thousandths: u64,
}

impl CurvatureEstimate {
    pub fn as_f64(self) -> f64 {
        self.ten_thousandths as f64 / 1e4
    }
}

impl fmt::Display for CurvatureEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}.{:04}",
            self.ten_thousandths / 10_000,
            self.ten_thousandths % 10_000
        )
    }
}

fn ln_abs(b: &BigInt) -> Option<f64> {
    if b.is_zero() {
        return None;
    }
    let mag = b.abs();
    let bits = mag.bits();
    if bits <= 1000 {
        return mag.to_f64().map(f64::ln);
    }
    let shift = bits - 64;
    let top: BigInt = &mag >> shift;
    top.to_f64()
        .map(|t| t.ln() + shift as f64 * std::f64::consts::LN_2)
}

/// `max beta_n^(1/n)` over the last `window` indices of `betti`. A prefix
/// cannot certify a limsup, so this is only an estimate.
pub fn curvature_estimate(betti: &SeriesTruncation, window: usize) -> Result<CurvatureEstimate> {
    let order = betti.order();
    if window == 0 || window > order {
        return Err(Error::InvalidConfig(format!(
            "curvature window must lie in 1..={order}, got {window}"
        )));
    }
    let best = (order + 1 - window..=order)
        .filter_map(|n| ln_abs(betti.coeff(n)).map(|l| (l / n as f64).exp()))
        .fold(0.0f64, f64::max);
    Ok(CurvatureEstimate {
        ten_thousandths: (best * 1e4).round() as u64,
    })
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(h_0, ..., h_s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(pub Vec<BigInt>);

/// `(f_{-1}, f_0, ..., f_{D-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<BigInt>);

impl HVector {
    pub fn from_i64s(v: &[i64]) -> Self {
        HVector(v.iter().map(|&x| BigInt::from(x)).collect())
    }
}

impl FVector {
    pub fn from_i64s(v: &[i64]) -> Self {
        FVector(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn dimension(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

/// Solves `sum f_{i-1} (x-1)^(D-i) = sum h_i x^(D-i)` for `f`, padding `h`
/// with zeros up to length `D + 1`.
pub fn h_to_f(h: &HVector, dim: usize) -> Result<FVector> {
    if h.0.len() > dim + 1 {
        return Err(Error::DimensionTooSmall {
            len: h.0.len(),
            dim,
        });
    }
    let f = (0..=dim)
        .map(|i| {
            h.0.iter()
                .enumerate()
                .take(i + 1)
                .map(|(j, hj)| hj * binomial(dim - j, i - j))
                .sum()
        })
        .collect();
    Ok(FVector(f))
}

/// Inverse of [`h_to_f`] with `D = len(f) - 1`.
pub fn f_to_h(f: &FVector) -> HVector {
    let dim = f.dimension();
    let h = (0..f.0.len())
        .map(|i| {
            f.0.iter()
                .enumerate()
                .take(i + 1)
                .map(|(j, fj)| {
                    let term = fj * binomial(dim - j, i - j);
                    if (i - j) % 2 == 1 {
                        -term
                    } else {
                        term
                    }
                })
                .sum()
        })
        .collect();
    HVector(h)
}

/// `f_{D-2} = D h_0 + (D-1) h_1 + ... + (D-s) h_s`.
pub fn f_d_minus_2(h: &HVector, dim: usize) -> Result<BigInt> {
    if dim == 0 {
        return Err(Error::DimensionTooSmall {
            len: h.0.len(),
            dim,
        });
    }
    let f = h_to_f(h, dim)?;
    Ok(f.0[dim - 1].clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `h = Phi_p` with `p` prime: a hypersurface of degree `p`.
    AdmissibleHypersurface,
    /// `h = Phi_m` with `m` not prime: no standard graded algebra has it.
    Inadmissible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::AdmissibleHypersurface => "admissible-hypersurface",
            Verdict::Inadmissible => "inadmissible",
        })
    }
}

/// If `h = Phi_m` for some `m`, returns `m` with the realizability verdict.
pub fn detect_irreducible_cyclotomic_h(h: &IntPoly) -> Option<(u64, Verdict)> {
    let deg = h.degree()? as u64;
    if deg == 0 {
        return None;
    }
    (1..=2 * deg * deg)
        .filter(|&m| euler_phi(m) == deg)
        .find(|&m| cyclotomic(m) == *h)
        .map(|m| {
            let verdict = if is_prime(m) {
                Verdict::AdmissibleHypersurface
            } else {
                Verdict::Inadmissible
            };
            (m, verdict)
        })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneMonoidFit {
    pub degree: u64,
    pub values: Vec<u64>,
    pub h: IntPoly,
}

/// Hilbert function of the monoid generated by lattice points of a common
/// total degree `D` (level `i` counts the distinct sums of `i` generators),
/// and the h-polynomial obtained by multiplying the values by `(1 - x)^2`.
///
/// The fit is accepted only when the product vanishes on the upper half of
/// the window `0..=bound`.
pub fn plane_monoid_hilbert(gens: &[(u64, u64)], bound: usize) -> Result<PlaneMonoidFit> {
    let &(a0, b0) = gens.first().ok_or(Error::EmptyInput)?;
    let degree = a0 + b0;
    if degree == 0 {
        return Err(Error::NonPositiveDegree);
    }
    if let Some(&(a, b)) = gens.iter().find(|&&(a, b)| a + b != degree) {
        return Err(Error::MixedDegrees(a, b, degree));
    }
    let firsts: BTreeSet<u64> = gens.iter().map(|&(a, _)| a).collect();
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    let mut values = vec![1u64];
    for _ in 1..=bound {
        level = level
            .iter()
            .flat_map(|&p| firsts.iter().map(move |&a| p + a))
            .collect();
        values.push(level.len() as u64);
    }
    let series = IntPoly::new(values.iter().map(|&v| BigInt::from(v)).collect()).to_series(bound);
    let h = series
        .mul_poly(&IntPoly::one_minus_x_pow(1).pow(2))
        .to_poly();
    let support = h.degree().map_or(0, |s| s + 1);
    if 2 * support > bound + 1 {
        return Err(Error::FitDidNotStabilize(bound));
    }
    Ok(PlaneMonoidFit { degree, values, h })
}
