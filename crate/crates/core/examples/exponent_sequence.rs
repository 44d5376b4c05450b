//! Cyclotomic exponents: writing `f = prod (1 - x^i)^{e_i}` as formal series.
//! For a Kronecker polynomial the sequence stops; otherwise it keeps growing.

use cyclotomic_sgp::{
    exponent_sequence, kronecker_factor, reconstruct_from_exponents, NumericalSemigroup,
};

pub fn run_example(bound: usize) -> Result<(), Box<dyn std::error::Error>> {
    for gens in [[4u64, 6, 9], [3, 4, 5]] {
        let s = NumericalSemigroup::from_generators(&gens)?;
        let p = s.semigroup_polynomial();
        let seq = exponent_sequence(&p, bound)?;
        let shown: Vec<String> = seq.values.iter().map(ToString::to_string).collect();
        println!("{s}: P = {p}");
        println!("  e_1..e_{bound} = {}", shown.join(" "));
        let fac = kronecker_factor(&p)?;
        if fac.is_kronecker() {
            println!(
                "  Kronecker: e_i = 0 beyond {}",
                fac.largest_index().unwrap_or(0)
            );
        } else {
            println!("  not Kronecker: the exponents never stop");
        }
        assert_eq!(reconstruct_from_exponents(&seq), p.to_series(bound));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bound = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(30);
    run_example(bound)
}
