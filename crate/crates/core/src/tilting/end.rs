//! Endomorphism algebras `B = End(T)^op` of sums of complexes.

use exactla::{Matrix, Scalar};

use crate::algebra::{Algebra, Locality, RawAlgebra};
use crate::error::{Error, Result};
use crate::homotopy::{ChainMap, HomSpace, ProjComplex};

/// `B = End_{K^b}(T_1 + ... + T_m)^op` with `e_s B e_t = Hom(T_s, T_t)` and
/// `x * y` = first `x`, then `y`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Algebra,
    /// Chain-map representatives of the basis of `B`, block by block.
    pub representatives: Vec<ChainMap>,
    /// `(s, t)` for every basis element.
    pub blocks: Vec<(usize, usize)>,
}

/// Class basis of `Hom(T_s, T_t)` with the identity first on the diagonal,
/// and the change of coordinates from the [`HomSpace`] basis.
struct Block {
    space: HomSpace,
    reps: Vec<ChainMap>,
    /// Inverse of the matrix whose columns are the old coordinates of `reps`.
    to_new: Option<Matrix>,
}

impl Block {
    fn new(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, diagonal: bool) -> Result<Block> {
        let f = alg.field();
        let space = HomSpace::new(alg, x, y, 0);
        let echelon = space.basis(alg);
        if !diagonal {
            return Ok(Block { space, reps: echelon, to_new: None });
        }
        if echelon.is_empty() {
            return Err(Error::Invalid("summand is zero in the homotopy category".into()));
        }
        let id = ChainMap::identity(alg, x);
        let id_coords = space.coordinates(&id)?;
        // Swap the identity in for the first echelon vector it involves.
        let pivot = id_coords.iter().position(|c| !c.is_zero()).expect("identity is nonzero");
        let mut reps = vec![id];
        let mut cols = vec![id_coords];
        for (k, b) in echelon.into_iter().enumerate() {
            if k != pivot {
                let mut e = vec![f.zero(); space.dim()];
                e[k] = f.one();
                cols.push(e);
                reps.push(b);
            }
        }
        let m = Matrix::from_columns(f, space.dim(), &cols).inverse()?;
        Ok(Block { space, reps, to_new: Some(m) })
    }

    fn coordinates(&self, g: &ChainMap) -> Result<Vec<Scalar>> {
        let old = self.space.coordinates(g)?;
        Ok(match &self.to_new {
            Some(m) => m.mul_vec(&old)?,
            None => old,
        })
    }
}

fn assemble(alg: &Algebra, summands: &[ProjComplex], with_peirce: bool) -> Result<EndAlgebra> {
    let f = alg.field();
    let m = summands.len();
    if m == 0 {
        return Err(Error::Invalid("no summands".into()));
    }
    let mut grid: Vec<Vec<Block>> = Vec::with_capacity(m);
    for (s, x) in summands.iter().enumerate() {
        let mut row = Vec::with_capacity(m);
        for (t, y) in summands.iter().enumerate() {
            row.push(Block::new(alg, x, y, s == t).map_err(|e| match e {
                Error::Invalid(msg) => Error::Invalid(format!("summand {}: {msg}", s + 1)),
                other => other,
            })?);
        }
        grid.push(row);
    }

    let mut offset = vec![vec![0usize; m]; m];
    let mut labels = Vec::new();
    let mut blocks = Vec::new();
    let mut representatives = Vec::new();
    for s in 0..m {
        for t in 0..m {
            offset[s][t] = labels.len();
            for (k, r) in grid[s][t].reps.iter().enumerate() {
                labels.push(if s == t && k == 0 { format!("e{}", s + 1) } else { format!("h{}_{}_{}", s + 1, t + 1, k + 1) });
                blocks.push((s, t));
                representatives.push(r.clone());
            }
        }
    }
    let dim = labels.len();

    let mut products = Vec::new();
    for s in 0..m {
        for t in 0..m {
            for (a, x) in grid[s][t].reps.iter().enumerate() {
                for u in 0..m {
                    for (b, y) in grid[t][u].reps.iter().enumerate() {
                        let xy = x.then(alg, &summands[s], &summands[t], &summands[u], y);
                        let coords = grid[s][u].coordinates(&xy)?;
                        let terms: Vec<(usize, Scalar)> = coords
                            .into_iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(k, c)| (offset[s][u] + k, c))
                            .collect();
                        if !terms.is_empty() {
                            products.push((offset[s][t] + a, offset[t][u] + b, terms));
                        }
                    }
                }
            }
        }
    }

    let idempotents: Vec<usize> = (0..m).map(|s| offset[s][s]).collect();
    let mut unit = vec![f.zero(); dim];
    for &e in &idempotents {
        unit[e] = f.one();
    }
    let raw = RawAlgebra {
        field: f.clone(),
        labels,
        products,
        unit,
        idempotents: with_peirce.then(|| idempotents.clone()),
        blocks: with_peirce.then(|| blocks.clone()),
        radical: None,
    };
    let algebra = Algebra::validate(raw)?;
    Ok(EndAlgebra { algebra, representatives, blocks })
}

/// `End(T)^op` with one primitive idempotent per summand. Fails with
/// [`Error::NotPrimitive`] naming a summand whose endomorphism ring is not local.
pub fn end_algebra(alg: &Algebra, summands: &[ProjComplex]) -> Result<EndAlgebra> {
    assemble(alg, summands, true)
}

/// Locality of `End_{K^b}(X)`; zero objects are not local.
pub fn endomorphism_locality(alg: &Algebra, x: &ProjComplex) -> Result<Locality> {
    match assemble(alg, std::slice::from_ref(x), false) {
        Ok(e) => e.algebra.locality(),
        Err(Error::Invalid(_)) => Ok(Locality::NotLocal),
        Err(e) => Err(e),
    }
}
