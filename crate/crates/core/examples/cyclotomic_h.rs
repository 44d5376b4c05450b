//! Which irreducible cyclotomic polynomials can be the h-polynomial of a
//! standard graded algebra.

use cyclotomic_sgp::cyclotomic;
use cyclotomic_sgp::hilbert::{detect_irreducible_cyclotomic_h, Verdict};

pub fn run_example(limit: u64) -> Result<(), Box<dyn std::error::Error>> {
    let mut admissible = Vec::new();
    let mut inadmissible = Vec::new();
    for m in 2..=limit {
        match detect_irreducible_cyclotomic_h(&cyclotomic(m)) {
            Some((found, Verdict::AdmissibleHypersurface)) if found == m => admissible.push(m),
            Some((found, Verdict::Inadmissible)) if found == m => inadmissible.push(m),
            other => return Err(format!("Phi_{m} misdetected: {other:?}").into()),
        }
    }
    println!("admissible (hypersurfaces only): {admissible:?}");
    println!("never an h-polynomial: {inadmissible:?}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limit = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(30);
    run_example(limit)
}
