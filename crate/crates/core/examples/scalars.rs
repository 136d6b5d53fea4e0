//! Extension of scalars and tensor products keep self-injectivity.
//!
//! Run with `cargo run --example scalars`.

use selfinj::algebra::gen_nakayama;
use selfinj::Field;

fn main() -> selfinj::Result<()> {
    let f = Field::prime(2)?;
    for (n, l) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
        let a = gen_nakayama(n, l).to_algebra(&f)?;
        let over4 = a.extend_scalars(2)?;
        let over8 = a.extend_scalars(3)?;
        println!(
            "N({n},{l}): self-injective over F2 {}, F4 {}, F8 {}",
            a.is_self_injective()?,
            over4.is_self_injective()?,
            over8.is_self_injective()?
        );
    }
    let a = gen_nakayama(2, 2).to_algebra(&f)?;
    let b = gen_nakayama(1, 3).to_algebra(&f)?;
    let t = a.tensor_product(&b)?;
    println!(
        "N(2,2) x N(1,3): dim {}, self-injective {}, sigma {}",
        t.dim(),
        t.is_self_injective()?,
        t.nakayama_permutation()?
    );
    Ok(())
}
