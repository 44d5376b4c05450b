//! Kronecker test: split an integer polynomial into cyclotomic factors and a
//! remainder.
//!
//! cargo run --example kronecker -- 1,-1,0,1

use cyclotomic_sgp::{kronecker_factor, IntPoly};

pub fn run_example(inputs: &[&str]) -> Result<(), Box<dyn std::error::Error>> {
    for text in inputs {
        let f = IntPoly::parse(text)?;
        let fac = kronecker_factor(&f)?;
        let factors: Vec<String> = fac
            .factors
            .iter()
            .map(|&(n, m)| {
                if m == 1 {
                    format!("Phi_{n}")
                } else {
                    format!("Phi_{n}^{m}")
                }
            })
            .collect();
        println!(
            "{f}: kronecker {}, factors [{}], remainder {}",
            fac.is_kronecker(),
            factors.join(", "),
            fac.remainder
        );
        assert_eq!(fac.expand(), f);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        // P_<4,6,9>, P_<3,4,5>, and (1 + x)^3
        run_example(&["1,-1,0,0,1,-1,1,-1,1,0,0,-1,1", "1,-1,0,1", "1,3,3,1"])
    } else {
        run_example(&args.iter().map(String::as_str).collect::<Vec<_>>())
    }
}
