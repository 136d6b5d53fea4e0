//! The Nakayama permutation two ways: from socles, and from the Nakayama
//! functor applied to the indecomposable projectives. The Cartan matrix
//! satisfies `C[i][j] = C[j][sigma(i)]`.
//!
//! Run with `cargo run --example nakayama`.

use selfinj::algebra::gen_nakayama;
use selfinj::{Field, NakayamaFunctor};

fn main() -> selfinj::Result<()> {
    let f = Field::prime(3)?;
    for (n, l) in [(2, 2), (3, 3), (3, 4), (4, 6)] {
        let a = gen_nakayama(n, l).to_algebra(&f)?;
        let sigma = a.nakayama_permutation()?;
        let nu = NakayamaFunctor::for_algebra(&a)?;
        let c = a.cartan_matrix()?.to_i64_rows().expect("small entries");
        let relation = (0..n).all(|i| (0..n).all(|j| c[i][j] == c[j][sigma.apply(i)]));
        println!(
            "N({n},{l}): sigma {} cycle type {:?}, functor gives {}, Cartan relation {relation}",
            sigma,
            sigma.cycle_type(),
            nu.sigma(),
        );
        let form = nu.form();
        println!("  Frobenius form symmetric: {}", form.symmetric);
    }
    Ok(())
}
