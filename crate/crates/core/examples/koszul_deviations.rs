//! Deviations of Koszul algebras from the h-polynomial, checked against the
//! Poincare series route.

use cyclotomic_sgp::hilbert::{
    curvature_estimate, deviations_from_poincare, koszul_deviations, poincare_coefficients,
    HilbertSeries,
};
use cyclotomic_sgp::{kronecker_factor, IntPoly};

pub fn run_example(bound: usize) -> Result<(), Box<dyn std::error::Error>> {
    // (h, dim): a polynomial ring, a quadric hypersurface, a non-CI algebra
    for (h, dim) in [(vec![1], 2), (vec![1, 1], 1), (vec![1, 1, -1], 2)] {
        let h = IntPoly::from_i64s(&h);
        let eps = koszul_deviations(&h, dim, bound)?;
        let betti = poincare_coefficients(&HilbertSeries::new(h.clone(), &vec![1; dim])?, bound)?;
        assert_eq!(deviations_from_poincare(&betti)?, eps);

        let shown: Vec<String> = eps.values.iter().map(ToString::to_string).collect();
        println!("h = {h}, dim {dim}");
        println!("  deviations: {}", shown.join(" "));
        if kronecker_factor(&h)?.is_kronecker() {
            println!(
                "  h is Kronecker; last nonzero deviation at {:?}",
                eps.last_nonzero()
            );
        } else {
            println!("  curvature estimate {}", curvature_estimate(&betti, 5)?);
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bound = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(20);
    run_example(bound)
}
