//! h-vectors and f-vectors of simplicial complexes, and f_{D-2} of a
//! palindromic h-vector.

use cyclotomic_sgp::hilbert::{f_d_minus_2, f_to_h, h_to_f, HVector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // boundary of the triangle, the octahedron, and the boundary of the 4-simplex
    for (h, dim) in [
        (vec![1, 1, 1], 2),
        (vec![1, 3, 3, 1], 3),
        (vec![1, 1, 1, 1, 1], 4),
    ] {
        let h = HVector::from_i64s(&h);
        let f = h_to_f(&h, dim)?;
        assert_eq!(f_to_h(&f), h);
        let fd2 = f_d_minus_2(&h, dim)?;
        println!("h = {:?}, dim {dim}: f = {:?}, f_(D-2) = {fd2}", h.0, f.0);
    }

    // a palindromic h of even degree s with h(1) = 1 forces f_(D-2) = D - s/2,
    // so Phi_6 = 1 - x + x^2 has too few edges to come from a complex
    for dim in 2..=5 {
        let fd2 = f_d_minus_2(&HVector::from_i64s(&[1, -1, 1]), dim)?;
        println!("h = Phi_6, dim {dim}: f_(D-2) = {fd2} = {dim} - 1");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
