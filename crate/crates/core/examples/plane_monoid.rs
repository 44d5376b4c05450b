//! Hilbert function and h-polynomial of the monoid generated by
//! (8,0), (6,2), (5,3), (3,5), (0,8): a Kronecker h-polynomial (1 + x)^3 on
//! a ring that is not a complete intersection.

use cyclotomic_sgp::hilbert::plane_monoid_hilbert;
use cyclotomic_sgp::kronecker_factor;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let gens = [(8, 0), (6, 2), (5, 3), (3, 5), (0, 8)];
    let fit = plane_monoid_hilbert(&gens, 12)?;
    println!("generators {gens:?} in degree {}", fit.degree);
    println!("hilbert function {:?}", fit.values);
    println!("h = {}", fit.h);
    let fac = kronecker_factor(&fit.h)?;
    println!(
        "factors {:?}, kronecker {}",
        fac.factors,
        fac.is_kronecker()
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
