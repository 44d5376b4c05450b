//! Gluing certificates for complete-intersection numerical semigroups.
//!
//! cargo run --example complete_intersection -- 10,12,15

use cyclotomic_sgp::intpoly::parse_list;
use cyclotomic_sgp::{is_complete_intersection, CiWitness, NumericalSemigroup};

fn show(w: &CiWitness, depth: usize) {
    let pad = "  ".repeat(depth);
    match w {
        CiWitness::Naturals => println!("{pad}N"),
        CiWitness::TwoGenerator { gens } => println!("{pad}<{},{}>", gens[0], gens[1]),
        CiWitness::Gluing {
            mu,
            lambda,
            left,
            right,
        } => {
            println!("{pad}{mu} * S1 + {lambda} * S2");
            show(left, depth + 1);
            show(right, depth + 1);
        }
    }
}

pub fn run_example(sets: &[Vec<u64>]) -> Result<(), Box<dyn std::error::Error>> {
    for gens in sets {
        let s = NumericalSemigroup::from_generators(gens)?;
        match is_complete_intersection(&s) {
            Some(w) => {
                assert!(w.is_valid());
                println!(
                    "{s} is a complete intersection, relation degrees {:?}",
                    w.relation_degrees()
                );
                show(&w, 1);
            }
            None => println!("{s} is not a complete intersection"),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let sets = if args.is_empty() {
        vec![
            vec![4, 6, 9],
            vec![10, 12, 15],
            vec![3, 4, 5],
            vec![8, 10, 12, 15],
        ]
    } else {
        args.iter()
            .map(|a| parse_list(a))
            .collect::<Result<_, _>>()?
    };
    run_example(&sets)
}
