//! Dimension vectors in the Grothendieck group and permutation matrices.
//!
//! Run with `cargo run --example k0`.

use selfinj::algebra::gen_nakayama;
use selfinj::homotopy::ProjComplex;
use selfinj::k0::{are_conjugate, coordinate_matrix, cycle_polynomial, dim_vector, perm_char_poly, perm_matrix, realize};
use selfinj::{Field, Permutation};

fn main() -> selfinj::Result<()> {
    let a = gen_nakayama(3, 2).to_algebra(&Field::prime(2)?)?;
    let x = ProjComplex::stalk(&[0], -1).direct_sum(&a, &ProjComplex::stalk(&[1], 0));
    println!("P1 in degree -1, P2 in degree 0: {:?}", dim_vector(&x, 3));
    println!("shifted once: {:?}", dim_vector(&x.shift(&a, 1), 3));

    let v = [2, -3, 1];
    let r = realize(&a, &v);
    println!("realized {v:?} by terms {:?} from degree {}", r.terms(), r.lo());

    let s = Permutation::from_cycles(5, &[&[1, 2, 3], &[4, 5]])?;
    println!("sigma = {s}, cycle type {:?}", s.cycle_type());
    println!("c_sigma = {:?}", perm_matrix(&s).to_i64_rows().expect("0/1 entries"));
    println!("N_sigma = {:?}", coordinate_matrix(&s).to_i64_rows().expect("0/1 entries"));
    println!("char poly {} = {}", perm_char_poly(&s), cycle_polynomial(&s));

    let t = Permutation::from_cycles(5, &[&[2, 5], &[1, 3, 4]])?;
    let u = Permutation::from_cycles(5, &[&[1, 2, 3, 4]])?;
    println!("{s} ~ {t}: {}", are_conjugate(&s, &t));
    println!("{s} ~ {u}: {}", are_conjugate(&s, &u));
    Ok(())
}
