//! Walk the semigroup tree and count numerical semigroups by genus, noting
//! the symmetric and cyclotomic ones.

use cyclotomic_sgp::{enumerate_semigroups, Limit};

pub fn run_example(max_genus: u64) -> Result<(), Box<dyn std::error::Error>> {
    let mut cyclotomic = Vec::new();
    let stats = enumerate_semigroups(Limit::MaxGenus(max_genus), |s| {
        if !s.is_naturals() && s.is_symmetric() && s.is_cyclotomic() {
            cyclotomic.push(s.to_string());
        }
    });
    for (g, n) in &stats.by_genus {
        println!("genus {g:>2}: {n}");
    }
    println!("cyclotomic: {}", cyclotomic.join(" "));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(7);
    run_example(g)
}
