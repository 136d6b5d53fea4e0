//! Writes an algebra and a complex as JSON and reads them back.
//!
//! Run with `cargo run --example json_io`.

use selfinj::algebra::gen_nakayama;
use selfinj::homotopy::ProjComplex;
use selfinj::io::{algebra_from_json, algebra_to_json, complex_to_json, complexes_from_json};
use selfinj::Field;

fn main() -> selfinj::Result<()> {
    let f = Field::Rationals;
    let a = gen_nakayama(2, 2).to_algebra(&f)?;
    let text = algebra_to_json(&a).to_string();
    println!("{text}");
    let back = algebra_from_json(&text, &f)?;
    println!("read back: dim {}, same Cartan matrix {}", back.dim(), back.cartan_matrix()? == a.cartan_matrix()?);

    let x = ProjComplex::regular(&a, 0).shift(&a, 1);
    let text = complex_to_json(&a, &x).to_string();
    println!("{text}");
    let y = complexes_from_json(&text, &a)?;
    println!("read back equal: {}", y[0] == x.sorted());
    Ok(())
}
