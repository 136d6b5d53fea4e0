//! Verifies tilting complexes: the regular stalk complex, a single
//! projective over a semisimple algebra, and a two-term complex over N(2,3).
//!
//! Run with `cargo run --example tilt_verify`.

use selfinj::algebra::gen_nakayama;
use selfinj::homotopy::{ProjComplex, ProjMap};
use selfinj::tilting::verify_tilting;
use selfinj::Field;

fn main() -> selfinj::Result<()> {
    let f = Field::prime(2)?;

    let a = gen_nakayama(2, 3).to_algebra(&f)?;
    let stalks: Vec<ProjComplex> = (0..2).map(|i| ProjComplex::stalk(&[i], 0)).collect();
    println!("N(2,3), stalk A: {:?}", verify_tilting(&a, &stalks, 4)?.verdict);

    let kk = gen_nakayama(2, 1).to_algebra(&f)?;
    let r = verify_tilting(&kk, &[ProjComplex::stalk(&[0], 0)], 4)?;
    println!("k x k, stalk P1: {:?} with K0 matrix {:?}", r.verdict, r.k0_matrix);

    // P2 -> P1 by the arrow from vertex 1 to vertex 2, together with P1.
    let arrow = a.labels().iter().position(|l| l == "a1").expect("arrow a1");
    let mut d = ProjMap::zero(&a, &[1], &[0]);
    d.set_entry(0, 0, a.to_block(1, 0, &a.basis_vector(arrow)));
    let two_term = ProjComplex::new(&a, -1, vec![vec![1], vec![0]], vec![d])?;
    let t = [ProjComplex::stalk(&[0], 0), two_term];
    let r = verify_tilting(&a, &t, 4)?;
    println!("N(2,3), P1 + (P2 -> P1): {:?}", r.verdict);
    println!("  K0 matrix {:?}", r.k0_matrix);
    println!("  certificate {}", serde_json::to_string(&r.generation).expect("serializable"));
    Ok(())
}
