//! Complexes of projectives over N(2,3): morphism spaces in the homotopy
//! category, cones, radical reduction and Serre duality through the
//! Nakayama functor.
//!
//! Run with `cargo run --example homotopy`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use selfinj::algebra::gen_nakayama;
use selfinj::homotopy::{
    iso_in_kb, random_chain_map, random_complex, shift_window, ChainMap, ComplexShape, HomSpace, ProjComplex,
};
use selfinj::{Field, NakayamaFunctor};

fn main() -> selfinj::Result<()> {
    let a = gen_nakayama(2, 3).to_algebra(&Field::Rationals)?;
    let nu = NakayamaFunctor::for_algebra(&a)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let x = random_complex(&a, ComplexShape::default(), &mut rng);
    let y = random_complex(&a, ComplexShape::default(), &mut rng);
    println!("X has terms {:?} from degree {}", x.terms(), x.lo());
    println!("Y has terms {:?} from degree {}", y.terms(), y.lo());

    for k in shift_window(&x, &y) {
        let h = HomSpace::new(&a, &x, &y, k);
        let dual = HomSpace::new(&a, &y, &x.nu(&nu), -k);
        println!("  Hom(X, Y[{k}]) = {}, Hom(Y, nu X[{}]) = {}", h.dim(), -k, dual.dim());
    }

    let reduced = x.radical_reduce(&a)?;
    println!("radical form of X: {} summands instead of {}", reduced.total_summands(), x.total_summands());
    println!("X iso to its radical form: {:?}", iso_in_kb(&a, &x, &reduced, 1)?);

    let f = random_chain_map(&a, &x, &y, 0, 2, &mut rng);
    let cone = ProjComplex::cone(&a, &x, &y, &f)?;
    println!("cone of a random map X -> Y has {} summands", cone.total_summands());

    let id_cone = ProjComplex::cone(&a, &x, &x, &ChainMap::identity(&a, &x))?;
    println!("cone of the identity reduces to zero: {}", id_cone.radical_reduce(&a)?.is_zero());
    Ok(())
}
