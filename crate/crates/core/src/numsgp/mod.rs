//! Numerical semigroups: Apéry-set construction, gaps, the semigroup
//! polynomial, symmetry, complete-intersection certificates and the
//! semigroup tree.

mod ci;
mod tree;

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cyclotomy::{cyclotomic, divisors, kronecker_factor, CyclotomicFactorization};
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

pub use ci::{is_complete_intersection, CiMemo, CiWitness};
pub use tree::{enumerate_semigroups, enumerate_subtree, EnumerationStats, Limit};

/// A numerical semigroup with its invariants cached.
///
/// `apery[i]` is the least element congruent to `i` modulo the multiplicity.
/// The semigroup `N` itself is stored with generators `{1}`, Frobenius
/// number `-1` and genus `0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    min_gens: Vec<u64>,
    frobenius: i64,
    genus: u64,
    gaps: Vec<u64>,
    apery: Vec<u64>,
}

impl NumericalSemigroup {
    pub fn naturals() -> Self {
        NumericalSemigroup {
            min_gens: vec![1],
            frobenius: -1,
            genus: 0,
            gaps: Vec::new(),
            apery: vec![0],
        }
    }

    /// Builds the semigroup generated by `gens` (zeros are ignored).
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let mut gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let m = gens[0];
        if m == 1 {
            return Ok(Self::naturals());
        }
        // shortest paths over residues mod m
        let m_us = m as usize;
        let mut apery = vec![u64::MAX; m_us];
        apery[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > apery[r] {
                continue;
            }
            for &g in &gens[1..] {
                let nd = d + g;
                let nr = (r + (g % m) as usize) % m_us;
                if nd < apery[nr] {
                    apery[nr] = nd;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        Ok(Self::from_apery(apery, None))
    }

    /// Completes the invariants from an Apéry set. `gaps` may be supplied when
    /// already known.
    fn from_apery(apery: Vec<u64>, gaps: Option<Vec<u64>>) -> Self {
        let m = apery.len() as u64;
        let max_w = *apery.iter().max().expect("nonempty Apéry set");
        let frobenius = max_w as i64 - m as i64;
        let genus = apery
            .iter()
            .enumerate()
            .map(|(r, &w)| (w - r as u64) / m)
            .sum();
        let gaps = gaps.unwrap_or_else(|| {
            let mut gaps: Vec<u64> = apery
                .iter()
                .enumerate()
                .skip(1)
                .flat_map(|(r, &w)| (r as u64..w).step_by(m as usize))
                .collect();
            gaps.sort_unstable();
            gaps
        });
        let contains = |v: u64| v >= apery[(v % m) as usize];
        let mut min_gens = vec![m];
        for &w in &apery[1..] {
            let decomposable = apery[1..].iter().any(|&v| v < w && contains(w - v));
            if !decomposable {
                min_gens.push(w);
            }
        }
        min_gens.sort_unstable();
        NumericalSemigroup {
            min_gens,
            frobenius,
            genus,
            gaps,
            apery,
        }
    }

    /// `S \ {g}` for a minimal generator `g` larger than the Frobenius number.
    pub(crate) fn remove_generator(&self, g: u64) -> Self {
        debug_assert!(self.min_gens.contains(&g) && g as i64 > self.frobenius);
        let m = self.multiplicity();
        if g == m {
            // the multiplicity changes; rebuild from a generating set of S \ {g}
            let gens: Vec<u64> = self
                .min_gens
                .iter()
                .filter(|&&s| s != g)
                .flat_map(|&s| [s, s + g])
                .chain([2 * g, 3 * g])
                .collect();
            return Self::from_generators(&gens).expect("S \\ {g} keeps gcd 1");
        }
        let mut apery = self.apery.clone();
        apery[(g % m) as usize] = g + m;
        let mut gaps = self.gaps.clone();
        gaps.push(g);
        Self::from_apery(apery, Some(gaps))
    }

    pub fn min_gens(&self) -> &[u64] {
        &self.min_gens
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    pub fn multiplicity(&self) -> u64 {
        self.apery.len() as u64
    }

    pub fn embedding_dimension(&self) -> usize {
        self.min_gens.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.genus == 0
    }

    pub fn contains(&self, n: u64) -> bool {
        let m = self.multiplicity();
        n >= self.apery[(n % m) as usize]
    }

    /// `P_S(x) = 1 + (x - 1) sum_{g gap} x^g`.
    pub fn semigroup_polynomial(&self) -> IntPoly {
        if self.gaps.is_empty() {
            return IntPoly::one();
        }
        let mut coeffs = vec![BigInt::zero(); self.frobenius as usize + 2];
        coeffs[0] = BigInt::one();
        for &g in &self.gaps {
            coeffs[g as usize + 1] += 1;
            coeffs[g as usize] -= 1;
        }
        IntPoly::new(coeffs)
    }

    /// Checks `P_S(x) = (1 - x) sum_{s in S} x^s` modulo `x^(bound+1)`.
    pub fn hilbert_numerator_identity_check(&self, bound: usize) -> bool {
        let hilbert = IntPoly::new(
            (0..=bound as u64)
                .map(|n| BigInt::from(self.contains(n) as u8))
                .collect(),
        )
        .to_series(bound);
        let numerator = hilbert.mul_poly(&IntPoly::one_minus_x_pow(1));
        numerator == self.semigroup_polynomial().to_series(bound)
    }

    pub fn is_symmetric(&self) -> bool {
        2 * self.genus as i64 == self.frobenius + 1
    }

    /// The Kronecker factorization of `P_S`.
    pub fn cyclotomic_factorization(&self) -> CyclotomicFactorization {
        kronecker_factor(&self.semigroup_polynomial()).expect("P_S(0) = 1")
    }

    pub fn is_cyclotomic(&self) -> bool {
        self.cyclotomic_factorization().is_kronecker()
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.min_gens.iter().map(u64::to_string).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

fn check_two_generator(a: u64, b: u64) -> Result<()> {
    if a < 2 || b < 2 {
        return Err(Error::GeneratorTooSmall(a, b));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    Ok(())
}

/// The indices `n` with `n | ab`, `n` not dividing `a` or `b`; `P_<a,b>` is
/// the product of the corresponding cyclotomic polynomials.
pub fn two_generator_factorization(a: u64, b: u64) -> Result<Vec<u64>> {
    check_two_generator(a, b)?;
    Ok(divisors(a * b)
        .into_iter()
        .filter(|n| !a.is_multiple_of(*n) && !b.is_multiple_of(*n))
        .collect())
}

pub fn two_generator_product(a: u64, b: u64) -> Result<IntPoly> {
    Ok(two_generator_factorization(a, b)?
        .into_iter()
        .map(cyclotomic)
        .product())
}
