//! Semigroup polynomials of two-generator semigroups and their cyclotomic
//! factorizations.
//!
//! cargo run --example two_generator -- 4 9

use cyclotomic_sgp::numsgp::two_generator_product;
use cyclotomic_sgp::{cyclotomic, two_generator_factorization, NumericalSemigroup};

pub fn run_example(a: u64, b: u64) -> Result<(), Box<dyn std::error::Error>> {
    let s = NumericalSemigroup::from_generators(&[a, b])?;
    let p = s.semigroup_polynomial();
    println!("{s}: frobenius {}, genus {}", s.frobenius(), s.genus());
    println!("P = {p}");

    let indices = two_generator_factorization(a, b)?;
    let names: Vec<String> = indices.iter().map(|n| format!("Phi_{n}")).collect();
    println!("P = {}", names.join(" * "));
    assert_eq!(p, two_generator_product(a, b)?);

    // for primes the product collapses to a single cyclotomic polynomial
    for (p, q) in [(2, 3), (3, 5), (5, 7)] {
        let s = NumericalSemigroup::from_generators(&[p, q])?;
        let same = s.semigroup_polynomial() == cyclotomic(p * q);
        println!("P_<{p},{q}> == Phi_{}: {same}", p * q);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let a = args.next().map(|a| a.parse()).transpose()?.unwrap_or(4);
    let b = args.next().map(|a| a.parse()).transpose()?.unwrap_or(9);
    run_example(a, b)
}
