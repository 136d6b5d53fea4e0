//! Opposite endomorphism algebras of tilting complexes. For the regular
//! stalk complex this recovers the algebra's dimension and Cartan matrix.
//!
//! Run with `cargo run --release --example end_algebra`.

use selfinj::algebra::gen_nakayama;
use selfinj::homotopy::ProjComplex;
use selfinj::tilting::{end_algebra, enumerate_two_term_tilting, SearchBounds};
use selfinj::Field;

fn main() -> selfinj::Result<()> {
    let a = gen_nakayama(2, 3).to_algebra(&Field::prime(2)?)?;
    let stalks: Vec<ProjComplex> = (0..2).map(|i| ProjComplex::stalk(&[i], 2)).collect();
    let b = end_algebra(&a, &stalks)?;
    println!("End(A[-2])^op: dim {}, Cartan {:?}", b.algebra.dim(), b.algebra.cartan_matrix()?.to_i64_rows().expect("small entries"));
    println!("A:            dim {}, Cartan {:?}", a.dim(), a.cartan_matrix()?.to_i64_rows().expect("small entries"));

    let found = enumerate_two_term_tilting(&a, SearchBounds::default())?;
    for c in found.tilting.iter().filter(|c| c.has_two_term_summand()) {
        let b = end_algebra(&a, &c.summands)?.algebra;
        println!(
            "two-term T: B has dim {}, Cartan {:?}, self-injective {}, sigma_B {}",
            b.dim(),
            b.cartan_matrix()?.to_i64_rows().expect("small entries"),
            b.is_self_injective()?,
            b.nakayama_permutation()?
        );
        println!("  basis {:?}", b.labels());
    }
    Ok(())
}
