//! Dense univariate polynomials and truncated power series over `BigInt`.
//!
//! Every polynomial is kept in canonical form: coefficient `i` is the
//! coefficient of `x^i` and trailing zeros are never stored, so structural
//! equality is polynomial equality. The zero polynomial has no coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `1 - x^k`, the building block of every Hilbert series denominator.
    pub fn one_minus_x_pow(k: usize) -> Self {
        assert!(k > 0, "1 - x^0 is the zero polynomial");
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = -BigInt::one();
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Number of leading factors of `x`; zero for the zero polynomial.
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops `x^k` from the bottom; the caller guarantees the low coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn evaluate(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// `x^s p(1/x)` where `s` is the degree.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn is_palindromic(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::EmptyInput);
        }
        let n = self.coeffs.len();
        Ok((0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i]))
    }

    /// `p(x^k)`.
    pub fn compose_x_pow(&self, k: usize) -> Self {
        assert!(k > 0);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// `p(-x)`.
    pub fn negate_variable(&self) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor` over the integers.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NonExactDivision);
        }
        Ok(q)
    }

    /// Long division. Fails with `NonExactDivision` if a quotient coefficient is
    /// not integral, which cannot happen for monic or unit-leading divisors.
    pub fn div_rem(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let lead = divisor.leading_coeff().ok_or(Error::ZeroDivisor)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        let unit_lead = lead.abs().is_one();
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let q = if unit_lead {
                top * lead
            } else {
                let (q, r) = top.div_rem(lead);
                if !r.is_zero() {
                    return Err(Error::NonExactDivision);
                }
                q
            };
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Truncates (or zero-pads) to a power series of order `order`.
    pub fn to_series(&self, order: usize) -> SeriesTruncation {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, BigInt::zero());
        SeriesTruncation { coeffs }
    }

    /// Power-series inverse modulo `x^(order+1)`.
    pub fn series_inverse(&self, order: usize) -> Result<SeriesTruncation> {
        let c0 = self.constant_term();
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut inv: Vec<BigInt> = Vec::with_capacity(order + 1);
        inv.push(c0.clone());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n.min(self.coeffs.len().saturating_sub(1)) {
                let pk = &self.coeffs[k];
                if !pk.is_zero() {
                    acc += pk * &inv[n - k];
                }
            }
            // c0 is its own inverse
            inv.push(-(acc * &c0));
        }
        Ok(SeriesTruncation { coeffs: inv })
    }

    /// Parses the comma-separated low-degree-first text form, e.g. `1,-1,0,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let coeffs = parse_list::<BigInt>(text)?;
        Ok(Self::new(coeffs))
    }

    /// Comma-separated coefficients, the inverse of [`IntPoly::parse`].
    pub fn to_csv(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses a comma-separated list, reporting the 1-based character position of
/// the offending entry.
pub fn parse_list<T: std::str::FromStr>(text: &str) -> Result<Vec<T>> {
    let mut out = Vec::new();
    let mut position = 1;
    if text.trim().is_empty() {
        return Err(Error::Parse {
            position,
            message: "empty list".into(),
        });
    }
    for item in text.split(',') {
        let trimmed = item.trim();
        let lead = item.len() - item.trim_start().len();
        match trimmed.parse::<T>() {
            Ok(v) => out.push(v),
            Err(_) => {
                return Err(Error::Parse {
                    position: position + lead,
                    message: format!("invalid number {trimmed:?}"),
                })
            }
        }
        position += item.len() + 1;
    }
    Ok(out)
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly[{}]", self.to_csv())
    }
}

/// Human form, lowest degree first: `1 - x + x^3`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}")?,
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

impl From<Vec<i64>> for IntPoly {
    fn from(v: Vec<i64>) -> Self {
        IntPoly::from_i64s(&v)
    }
}

/// Power series `c_0 + c_1 x + ... + c_B x^B + O(x^(B+1))` with a fixed order `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesTruncation {
    coeffs: Vec<BigInt>,
}

impl SeriesTruncation {
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        SeriesTruncation { coeffs }
    }

    pub fn one(order: usize) -> Self {
        IntPoly::one().to_series(order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [BigInt] {
        &mut self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The truncation read as a polynomial, trailing zeros dropped.
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    /// Product modulo `x^(B+1)`; both operands must share the order.
    pub fn mul(&self, rhs: &SeriesTruncation) -> Result<SeriesTruncation> {
        if self.order() != rhs.order() {
            return Err(Error::TruncationMismatch(self.order(), rhs.order()));
        }
        Ok(self.mul_poly(&rhs.to_poly()))
    }

    pub fn mul_poly(&self, p: &IntPoly) -> SeriesTruncation {
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in p.coeffs().iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        SeriesTruncation { coeffs: out }
    }

    pub fn inverse(&self) -> Result<SeriesTruncation> {
        self.to_poly().series_inverse(self.order())
    }

    /// `s(-x)`.
    pub fn negate_variable(&self) -> SeriesTruncation {
        SeriesTruncation {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Multiplies in place by `(1 - x^step)^power`, for any integer `power`,
    /// using the binomial series of `(1 - y)^power` in `y = x^step`.
    pub fn mul_one_minus_x_pow(&mut self, step: usize, power: &BigInt) {
        assert!(step > 0);
        if power.is_zero() {
            return;
        }
        let order = self.order();
        let terms = order / step;
        // coefficient of y^k in (1 - y)^power is (-1)^k binom(power, k)
        let mut binom = vec![BigInt::one()];
        for k in 1..=terms {
            let prev = &binom[k - 1];
            let next = prev * (power - BigInt::from(k - 1)) / BigInt::from(k);
            if next.is_zero() {
                break;
            }
            binom.push(next);
        }
        let signed: Vec<BigInt> = binom
            .into_iter()
            .enumerate()
            .map(|(k, b)| if k % 2 == 1 { -b } else { b })
            .collect();
        for n in (0..=order).rev() {
            let mut acc = BigInt::zero();
            for (k, c) in signed.iter().enumerate().skip(1) {
                let idx = k * step;
                if idx > n {
                    break;
                }
                let src = &self.coeffs[n - idx];
                if !src.is_zero() {
                    acc += c * src;
                }
            }
            if !acc.is_zero() {
                self.coeffs[n] += acc;
            }
        }
    }
}

impl fmt::Display for SeriesTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(x^{})", self.to_poly(), self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), IntPoly::zero());
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 0, -1]).exact_div(&p(&[1, -1])).unwrap(), p(&[1, 1]));
        assert!(matches!(
            p(&[1, -1, 0, 1]).exact_div(&p(&[1, -1])),
            Err(Error::NonExactDivision)
        ));
        assert!(matches!(
            p(&[1, 1]).exact_div(&IntPoly::zero()),
            Err(Error::ZeroDivisor)
        ));
        assert!(matches!(
            p(&[1, 1]).exact_div(&p(&[0, 2])),
            Err(Error::NonExactDivision)
        ));
        assert_eq!(p(&[2, 4]).exact_div(&p(&[2])).unwrap(), p(&[1, 2]));
    }

    #[test]
    fn evaluation() {
        let one = BigInt::one();
        assert_eq!(p(&[1, 1, 1]).evaluate(&one), BigInt::from(3));
        assert_eq!(IntPoly::zero().evaluate(&BigInt::from(5)), BigInt::zero());
        assert_eq!(p(&[1, -1, 1]).evaluate(&one), one);
        assert_eq!(
            p(&[1, -1, 0, 1]).evaluate(&BigInt::from(2)),
            BigInt::from(7)
        );
    }

    #[test]
    fn palindromy() {
        assert!(p(&[1, 3, 3, 1]).is_palindromic().unwrap());
        assert!(!p(&[1, -1, 0, 1]).is_palindromic().unwrap());
        assert!(p(&[1, -1, 1]).is_palindromic().unwrap());
        assert!(matches!(
            IntPoly::zero().is_palindromic(),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            p(&[1, -1]).series_inverse(5).unwrap(),
            p(&[1, 1, 1, 1, 1, 1]).to_series(5)
        );
        assert_eq!(
            p(&[1, 1]).series_inverse(4).unwrap(),
            p(&[1, -1, 1, -1, 1]).to_series(4)
        );
        assert_eq!(
            p(&[1, -1, 1]).series_inverse(6).unwrap(),
            p(&[1, 1, 0, -1, -1, 0, 1]).to_series(6)
        );
        assert!(matches!(
            p(&[2, 1]).series_inverse(3),
            Err(Error::NonUnitConstantTerm)
        ));
        // constant term -1
        let inv = p(&[-1, 1]).series_inverse(3).unwrap();
        assert!(inv.mul_poly(&p(&[-1, 1])).is_one());
    }

    #[test]
    fn series_mul_requires_equal_order() {
        let a = SeriesTruncation::one(3);
        let b = SeriesTruncation::one(4);
        assert!(matches!(a.mul(&b), Err(Error::TruncationMismatch(3, 4))));
    }

    #[test]
    fn binomial_factor_multiplication() {
        // (1 - x^2)^3 and its inverse
        let mut s = SeriesTruncation::one(8);
        s.mul_one_minus_x_pow(2, &BigInt::from(3));
        assert_eq!(s.to_poly(), p(&[1, 0, -1]).pow(3));
        s.mul_one_minus_x_pow(2, &BigInt::from(-3));
        assert!(s.is_one());
        let mut t = SeriesTruncation::one(4);
        t.mul_one_minus_x_pow(1, &BigInt::from(-1));
        assert_eq!(t.to_poly(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(p(&[1, -1, 0, 1]).to_string(), "1 - x + x^3");
        assert_eq!(p(&[-1, 1]).to_string(), "-1 + x");
        assert_eq!(p(&[0, -2, 0, 3]).to_string(), "-2x + 3x^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn parsing_reports_positions() {
        assert_eq!(IntPoly::parse("1,-1,0,1").unwrap(), p(&[1, -1, 0, 1]));
        assert_eq!(IntPoly::parse(" 1, 2 ").unwrap(), p(&[1, 2]));
        match IntPoly::parse("1,2,x") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(IntPoly::parse("").is_err());
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let big = p(&[1, 1]).pow(96);
        let mid = big.coeff(48);
        assert!(mid.bits() > 90);
        let half = p(&[1, 1]).pow(48);
        assert_eq!(big.exact_div(&half).unwrap(), half);
    }
}
