//! Chain maps and morphism spaces in the homotopy category.

use exactla::{Matrix, Scalar, Subspace};

use super::{ProjComplex, ProjMap};
use crate::algebra::Algebra;
use crate::error::{Error, Result};

/// A degree-`shift` map `X -> Y[shift]`: component `j` goes
/// `X^{lo_X + j} -> Y^{lo_X + j + shift}`. Composition is componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainMap {
    shift: i64,
    components: Vec<ProjMap>,
}

impl ChainMap {
    /// Components aligned with the terms of the source.
    pub fn new(shift: i64, components: Vec<ProjMap>) -> ChainMap {
        ChainMap { shift, components }
    }

    pub fn zero(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, shift: i64) -> ChainMap {
        let components = (0..x.terms().len())
            .map(|a| {
                let d = x.lo() + a as i64;
                ProjMap::zero(alg, x.term(d), y.term(d + shift))
            })
            .collect();
        ChainMap { shift, components }
    }

    pub fn identity(alg: &Algebra, x: &ProjComplex) -> ChainMap {
        ChainMap { shift: 0, components: x.terms().iter().map(|t| ProjMap::identity(alg, t)).collect() }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn components(&self) -> &[ProjMap] {
        &self.components
    }

    /// Component out of `X^deg`, zero when `X^deg = 0`.
    pub fn component(&self, alg: &Algebra, x: &ProjComplex, y: &ProjComplex, deg: i64) -> ProjMap {
        let a = deg - x.lo();
        if a >= 0 && (a as usize) < self.components.len() {
            self.components[a as usize].clone()
        } else {
            ProjMap::zero(alg, x.term(deg), y.term(deg + self.shift))
        }
    }

    fn fits(&self, x: &ProjComplex, y: &ProjComplex) -> bool {
        self.components.len() == x.terms().len()
            && self.components.iter().enumerate().all(|(a, c)| {
                let d = x.lo() + a as i64;
                c.src() == x.term(d) && c.tgt() == y.term(d + self.shift)
            })
    }

    /// `d_X f = f d_{Y[shift]}`, with `d_{Y[k]} = (-1)^k d_Y`.
    pub fn is_chain_map(&self, alg: &Algebra, x: &ProjComplex, y: &ProjComplex) -> bool {
        self.fits(x, y) && delta(alg, x, y, self).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(ProjMap::is_zero)
    }

    /// First `self: X -> Y[k]`, then `other: Y -> Z[l]`.
    pub fn then(&self, alg: &Algebra, x: &ProjComplex, y: &ProjComplex, z: &ProjComplex, other: &ChainMap) -> ChainMap {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(a, c)| {
                let d = x.lo() + a as i64;
                c.then(alg, &other.component(alg, y, z, d + self.shift))
            })
            .collect();
        ChainMap { shift: self.shift + other.shift, components }
    }

    pub fn add(&self, alg: &Algebra, other: &ChainMap) -> ChainMap {
        assert_eq!(self.shift, other.shift, "maps of equal degree");
        ChainMap {
            shift: self.shift,
            components: self.components.iter().zip(&other.components).map(|(a, b)| a.add(alg, b)).collect(),
        }
    }

    pub fn scale(&self, alg: &Algebra, c: &Scalar) -> ChainMap {
        ChainMap { shift: self.shift, components: self.components.iter().map(|m| m.scale(alg, c)).collect() }
    }

    /// Coordinates in the layout of `Hom^shift(X, Y)`.
    pub fn to_vector(&self) -> Vec<Scalar> {
        self.components
            .iter()
            .flat_map(|c| {
                (0..c.src().len()).flat_map(move |s| (0..c.tgt().len()).flat_map(move |t| c.entry(s, t).to_vec()))
            })
            .collect()
    }

    pub fn from_vector(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, shift: i64, v: &[Scalar]) -> ChainMap {
        let mut m = ChainMap::zero(alg, x, y, shift);
        let mut pos = 0;
        for c in &mut m.components {
            for s in 0..c.src().len() {
                for t in 0..c.tgt().len() {
                    let len = c.entry(s, t).len();
                    c.set_entry(s, t, v[pos..pos + len].to_vec());
                    pos += len;
                }
            }
        }
        debug_assert_eq!(pos, v.len());
        m
    }

    /// `nu` applied componentwise.
    pub fn nu(&self, nu: &crate::algebra::NakayamaFunctor) -> ChainMap {
        ChainMap { shift: self.shift, components: self.components.iter().map(|c| c.nu(nu)).collect() }
    }
}

/// Total dimension of `Hom^k(X, Y) = prod_j Hom(X^j, Y^{j+k})`.
fn hom_dim(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, k: i64) -> usize {
    (x.lo()..=x.hi())
        .map(|d| {
            let (s, t) = (x.term(d), y.term(d + k));
            s.iter().map(|&i| t.iter().map(|&j| alg.block_dim(i, j)).sum::<usize>()).sum::<usize>()
        })
        .sum()
}

/// Hom-complex differential: `(dG)_j = G_j d_Y - (-1)^k d_X G_{j+1}`.
fn delta(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, g: &ChainMap) -> ChainMap {
    let k = g.shift;
    let f = alg.field();
    let sign = if k.rem_euclid(2) == 0 { f.neg(&f.one()) } else { f.one() };
    let components = (0..x.terms().len())
        .map(|a| {
            let d = x.lo() + a as i64;
            let left = g.component(alg, x, y, d).then(alg, &y.diff(alg, d + k));
            let right = x.diff(alg, d).then(alg, &g.component(alg, x, y, d + 1));
            left.add(alg, &right.scale(alg, &sign))
        })
        .collect();
    ChainMap { shift: k + 1, components }
}

/// Matrix of the Hom-complex differential out of degree `k`.
fn delta_matrix(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, k: i64) -> Matrix {
    let f = alg.field();
    let (dom, cod) = (hom_dim(alg, x, y, k), hom_dim(alg, x, y, k + 1));
    let mut cols = Vec::with_capacity(dom);
    let mut e = vec![f.zero(); dom];
    for c in 0..dom {
        e[c] = f.one();
        let g = ChainMap::from_vector(alg, x, y, k, &e);
        cols.push(delta(alg, x, y, &g).to_vector());
        e[c] = f.zero();
    }
    Matrix::from_columns(f, cod, &cols)
}

/// Degree-`k` chain maps `X -> Y[k]`.
pub fn chain_map_space(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, k: i64) -> Vec<ChainMap> {
    delta_matrix(alg, x, y, k).kernel().iter().map(|v| ChainMap::from_vector(alg, x, y, k, v)).collect()
}

/// `Hom_{K^b}(X, Y[k])` with a canonical basis of class representatives.
#[derive(Clone, Debug)]
pub struct HomSpace {
    x: ProjComplex,
    y: ProjComplex,
    shift: i64,
    cycles: Vec<Vec<Scalar>>,
    boundaries: Subspace,
    /// Echelon basis of representatives reduced modulo the boundaries.
    reps: Subspace,
}

impl HomSpace {
    pub fn new(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, k: i64) -> HomSpace {
        let f = alg.field();
        let n = hom_dim(alg, x, y, k);
        let cycles = if n == 0 { Vec::new() } else { delta_matrix(alg, x, y, k).kernel() };
        let boundaries = if n == 0 || hom_dim(alg, x, y, k - 1) == 0 {
            Subspace::zero(f, n)
        } else {
            let d = delta_matrix(alg, x, y, k - 1);
            Subspace::span(f, n, &d.transpose().row_vecs())
        };
        let reduced: Vec<Vec<Scalar>> = cycles.iter().map(|z| boundaries.decompose(z).1).collect();
        let reps = Subspace::span(f, n, &reduced);
        HomSpace { x: x.clone(), y: y.clone(), shift: k, cycles, boundaries, reps }
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn source(&self) -> &ProjComplex {
        &self.x
    }

    pub fn target(&self) -> &ProjComplex {
        &self.y
    }

    /// Representatives of a basis of classes.
    pub fn basis(&self, alg: &Algebra) -> Vec<ChainMap> {
        self.reps.basis().iter().map(|v| ChainMap::from_vector(alg, &self.x, &self.y, self.shift, v)).collect()
    }

    /// All chain maps, not up to homotopy.
    pub fn cycles(&self, alg: &Algebra) -> Vec<ChainMap> {
        self.cycles.iter().map(|v| ChainMap::from_vector(alg, &self.x, &self.y, self.shift, v)).collect()
    }

    pub fn cycles_dim(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_null_homotopic(&self, f: &ChainMap) -> bool {
        self.boundaries.contains(&f.to_vector())
    }

    /// Coordinates of the class of a chain map in the basis of [`HomSpace::basis`].
    pub fn coordinates(&self, f: &ChainMap) -> Result<Vec<Scalar>> {
        let (_, rem) = self.boundaries.decompose(&f.to_vector());
        let (coords, rest) = self.reps.decompose(&rem);
        if rest.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotChainMap("class outside the cycle space".into()));
        }
        Ok(coords)
    }

    /// Reduced vector of the class of `f`, for comparing classes.
    pub fn normal_form(&self, f: &ChainMap) -> Vec<Scalar> {
        self.boundaries.decompose(&f.to_vector()).1
    }
}

/// `dim Hom_{K^b}(X, Y[k])`.
pub fn hom_dim_kb(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, k: i64) -> usize {
    HomSpace::new(alg, x, y, k).dim()
}

/// Shifts `k` for which `Hom(X, Y[k])` can be nonzero.
pub fn shift_window(x: &ProjComplex, y: &ProjComplex) -> std::ops::RangeInclusive<i64> {
    if x.is_zero() || y.is_zero() {
        #[allow(clippy::reversed_empty_ranges)]
        return 1..=0;
    }
    (y.lo() - x.hi())..=(y.hi() - x.lo())
}
