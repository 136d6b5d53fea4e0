//! Exhaustive two-term tilting search. N(2,3) has tilting complexes with a
//! genuinely two-term summand; over N(3,3), whose Nakayama permutation is
//! transitive, every tilting complex found lives in one degree.
//!
//! Run with `cargo run --release --example tilt_search`.

use selfinj::algebra::gen_nakayama;
use selfinj::k0::dim_vector;
use selfinj::tilting::{enumerate_two_term_tilting, SearchBounds};
use selfinj::Field;

fn main() -> selfinj::Result<()> {
    let f = Field::prime(2)?;
    for (n, l, max_mult) in [(2, 3, 2), (3, 3, 1)] {
        let a = gen_nakayama(n, l).to_algebra(&f)?;
        let bounds = SearchBounds { max_mult, ..SearchBounds::default() };
        let r = enumerate_two_term_tilting(&a, bounds)?;
        println!(
            "N({n},{l}), multiplicity <= {max_mult}: {} candidates, {} indecomposables, {} tilting",
            r.codes,
            r.indecomposables.len(),
            r.tilting.len()
        );
        for c in &r.tilting {
            let dims: Vec<Vec<i64>> = c.summands.iter().map(|x| dim_vector(x, n)).collect();
            let kind = if c.is_one_degree() { "one degree" } else if c.has_two_term_summand() { "two-term" } else { "mixed" };
            println!("  {kind:<10} dim vectors {dims:?}");
        }
    }
    Ok(())
}
