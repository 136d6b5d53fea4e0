//! Random complexes and chain maps for property tests and experiments.

use exactla::Scalar;
use rand::Rng;

use super::hom::chain_map_space;
use super::{ChainMap, ProjComplex};
use crate::algebra::Algebra;

/// Degrees `lo .. lo + len` with at most `max_summands` summands per term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexShape {
    pub lo: i64,
    pub len: usize,
    pub max_summands: usize,
    /// Coefficient range over the rationals.
    pub range: i64,
}

impl Default for ComplexShape {
    fn default() -> ComplexShape {
        ComplexShape { lo: -1, len: 3, max_summands: 2, range: 2 }
    }
}

fn random_types<R: Rng + ?Sized>(n: usize, max: usize, rng: &mut R) -> Vec<usize> {
    let k = rng.gen_range(0..=max);
    (0..k).map(|_| rng.gen_range(0..n)).collect()
}

/// A random combination of a basis of chain maps `X -> Y[k]`.
pub fn random_chain_map<R: Rng + ?Sized>(
    alg: &Algebra,
    x: &ProjComplex,
    y: &ProjComplex,
    k: i64,
    range: i64,
    rng: &mut R,
) -> ChainMap {
    let f = alg.field();
    let mut out = ChainMap::zero(alg, x, y, k);
    for m in chain_map_space(alg, x, y, k) {
        let c: Scalar = f.random(rng, range);
        out = out.add(alg, &m.scale(alg, &c));
    }
    out
}

/// Built from the top degree down: each new term `P` is attached by a
/// random map into the term above that kills the next differential.
pub fn random_complex<R: Rng + ?Sized>(alg: &Algebra, shape: ComplexShape, rng: &mut R) -> ProjComplex {
    let n = alg.n_idempotents();
    if shape.len == 0 || n == 0 {
        return ProjComplex::zero();
    }
    let top = shape.lo + shape.len as i64 - 1;
    let mut y = ProjComplex::stalk(&random_types(n, shape.max_summands, rng), top);
    for deg in (shape.lo..top).rev() {
        let p = ProjComplex::stalk(&random_types(n, shape.max_summands, rng), deg + 1);
        let g = random_chain_map(alg, &p, &y, 0, shape.range, rng);
        y = ProjComplex::cone(alg, &p, &y, &g).expect("random chain map");
    }
    y
}
