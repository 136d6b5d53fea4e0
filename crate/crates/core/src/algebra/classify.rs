//! Self-injective, Frobenius, symmetric and weakly symmetric algebras.

use exactla::{BigInt, Matrix, Scalar, Subspace};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Algebra;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Exhaustive search is used when the candidate space has at most this many points.
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;
const RATIONAL_TRIALS: usize = 64;
const FINITE_TRIALS: usize = 256;
const SEED: u64 = 0x5eed_f0b5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl Decision {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Decision::Yes => Some(true),
            Decision::No => Some(false),
            Decision::Unknown => None,
        }
    }
}

impl From<bool> for Decision {
    fn from(b: bool) -> Decision {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

/// A nondegenerate associative form `(a, b) -> lambda(ab)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusForm {
    pub lambda: Vec<Scalar>,
    pub symmetric: bool,
    /// Columns are the images of basis elements; `lambda(ab) = lambda(b mu(a))`.
    pub nakayama_automorphism: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrobeniusSearch {
    Found(FrobeniusForm),
    /// Proven: no admissible form exists.
    None,
    /// The search gave up; the payload says why.
    Unknown(String),
}

impl FrobeniusSearch {
    pub fn found(&self) -> Option<&FrobeniusForm> {
        match self {
            FrobeniusSearch::Found(f) => Some(f),
            _ => None,
        }
    }

    pub fn decision(&self) -> Decision {
        match self {
            FrobeniusSearch::Found(_) => Decision::Yes,
            FrobeniusSearch::None => Decision::No,
            FrobeniusSearch::Unknown(_) => Decision::Unknown,
        }
    }
}

/// Elementary divisors of the Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableK0 {
    pub divisors: Vec<BigInt>,
    /// False when some divisor is neither 0 nor 1.
    pub free: bool,
}

impl FrobeniusForm {
    fn from_lambda(alg: &Algebra, lambda: Vec<Scalar>) -> Option<FrobeniusForm> {
        let g = alg.gram(&lambda);
        let gi = g.inverse().ok()?;
        let mu = gi.mul(&g.transpose()).expect("square");
        let symmetric = g == g.transpose();
        Some(FrobeniusForm { lambda, symmetric, nakayama_automorphism: mu })
    }

    /// Rechecks nondegeneracy, the defining identity of `mu`, and that `mu`
    /// is multiplicative.
    pub fn verify(&self, alg: &Algebra) -> bool {
        let f = alg.field();
        let n = alg.dim();
        let g = alg.gram(&self.lambda);
        if g.rank() != n || (g == g.transpose()) != self.symmetric {
            return false;
        }
        let mu: Vec<Vec<Scalar>> = (0..n).map(|i| self.nakayama_automorphism.column(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = g.get(i, j);
                let rhs = dot(f, &self.lambda, &alg.mul(&alg.basis_vector(j), &mu[i]));
                if *lhs != rhs {
                    return false;
                }
                let prod = alg.mul_basis(i, j);
                let mut image = alg.zero_vector();
                for (k, c) in prod {
                    exactla::axpy(f, c, &mu[*k], &mut image);
                }
                if image != alg.mul(&mu[i], &mu[j]) {
                    return false;
                }
            }
        }
        true
    }
}

fn dot(f: &exactla::Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(f.zero(), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { f.add(&acc, &f.mul(x, y)) })
}

impl Algebra {
    /// `G_ij = lambda(b_i b_j)`.
    pub fn gram(&self, lambda: &[Scalar]) -> Matrix {
        let f = self.field();
        let n = self.dim();
        let mut g = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                let v = self.mul_basis(i, j).iter().fold(f.zero(), |acc, (k, c)| f.add(&acc, &f.mul(c, &lambda[*k])));
                g.set(i, j, v);
            }
        }
        g
    }

    fn radical_square(&self) -> Result<Subspace> {
        let j = self.radical()?;
        let mut products = Vec::new();
        for x in j.basis() {
            for y in j.basis() {
                products.push(self.mul(x, y));
            }
        }
        Ok(Subspace::span(self.field(), self.dim(), &products))
    }

    /// `dim Hom_A(rad A, A)`, from a presentation of `rad A` on generators
    /// of `rad A / rad^2 A`.
    pub fn hom_radical_dim(&self) -> Result<usize> {
        let f = self.field();
        let n = self.dim();
        let j = self.radical()?;
        if j.dim() == 0 {
            return Ok(0);
        }
        let mut span = self.radical_square()?;
        // (generator, basis of the projective it is the image of, basis of its admissible images)
        let mut gens: Vec<(Vec<Scalar>, Vec<usize>, Vec<usize>)> = Vec::new();
        let mut consider = |v: Vec<Scalar>, dom: Vec<usize>, cod: Vec<usize>, span: &mut Subspace| {
            if !span.contains(&v) {
                *span = span.sum(&Subspace::span(f, n, std::slice::from_ref(&v)));
                gens.push((v, dom, cod));
            }
        };
        match &self.peirce {
            Some(p) => {
                let m = p.len();
                for t in 0..m {
                    let dom: Vec<usize> = (0..n).filter(|&b| p.block_of(b).1 == t).collect();
                    let cod: Vec<usize> = (0..n).filter(|&b| p.block_of(b).0 == t).collect();
                    for s in 0..m {
                        for v in self.block_radical(t, s)?.basis() {
                            consider(self.from_block(t, s, v), dom.clone(), cod.clone(), &mut span);
                        }
                    }
                }
            }
            None => {
                let all: Vec<usize> = (0..n).collect();
                for v in j.basis() {
                    consider(v.clone(), all.clone(), all.clone(), &mut span);
                }
            }
        }

        // Relations: kernel of the cover sum_k P_k -> rad A.
        let cover: Vec<Vec<Scalar>> = gens
            .iter()
            .flat_map(|(g, dom, _)| dom.iter().map(move |&b| (b, g)))
            .map(|(b, g)| self.mul(&self.basis_vector(b), g))
            .collect();
        let relations = Matrix::from_columns(f, n, &cover).kernel();

        let unknowns: usize = gens.iter().map(|(_, _, cod)| cod.len()).sum();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for rel in &relations {
            let mut block = vec![vec![f.zero(); unknowns]; n];
            let (mut offset, mut col) = (0, 0);
            for (_, dom, cod) in &gens {
                let mut a = self.zero_vector();
                for (k, &b) in dom.iter().enumerate() {
                    a[b] = rel[offset + k].clone();
                }
                offset += dom.len();
                for &c in cod {
                    let image = self.mul(&a, &self.basis_vector(c));
                    for (r, x) in image.into_iter().enumerate() {
                        block[r][col] = x;
                    }
                    col += 1;
                }
            }
            rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
        }
        let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(f, rows)?.rank() };
        Ok(unknowns - rank)
    }

    /// `dim {a : (rad A) a = 0}`.
    pub fn right_annihilator_dim(&self) -> Result<usize> {
        let f = self.field();
        let n = self.dim();
        let mut rows = Vec::new();
        for y in self.radical()?.basis() {
            let l = self.left_matrix(y);
            rows.extend(l.row_vecs());
        }
        let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(f, rows)?.rank() };
        Ok(n - rank)
    }

    /// Self-injective iff every map `rad A -> A` extends to `A`, i.e. is right
    /// multiplication by an element; those form a space of dimension
    /// `dim A - dim r.ann(rad A)`.
    pub fn is_self_injective(&self) -> Result<bool> {
        Ok(self.hom_radical_dim()? == self.dim() - self.right_annihilator_dim()?)
    }

    /// `{x in e_i A e_j : (rad A) x = 0}` in block coordinates.
    pub fn left_socle_block(&self, i: usize, j: usize) -> Result<Subspace> {
        let m = self.n_idempotents();
        let mut rows = Vec::new();
        for r in 0..m {
            for y in self.block_radical(r, i)?.basis() {
                rows.extend(self.block_product_rows(r, i, j, y, true));
            }
        }
        Ok(self.block_kernel(i, j, rows))
    }

    /// `{x in e_i A e_j : x (rad A) = 0}` in block coordinates.
    pub fn right_socle_block(&self, i: usize, j: usize) -> Result<Subspace> {
        let m = self.n_idempotents();
        let mut rows = Vec::new();
        for r in 0..m {
            for y in self.block_radical(j, r)?.basis() {
                rows.extend(self.block_product_rows(i, j, r, y, false));
            }
        }
        Ok(self.block_kernel(i, j, rows))
    }

    /// Rows of the linear map `x -> y x` (`left`) or `x -> x y` on the middle block.
    fn block_product_rows(&self, a: usize, b: usize, c: usize, y: &[Scalar], left: bool) -> Vec<Vec<Scalar>> {
        let (xi, xj) = if left { (b, c) } else { (a, b) };
        let d = self.block_dim(xi, xj);
        let cols: Vec<Vec<Scalar>> = (0..d)
            .map(|k| {
                let mut x = vec![self.field().zero(); d];
                x[k] = self.field().one();
                if left {
                    self.peirce_mul(a, b, c, y, &x)
                } else {
                    self.peirce_mul(a, b, c, &x, y)
                }
            })
            .collect();
        Matrix::from_columns(self.field(), self.block_dim(a, c), &cols).row_vecs()
    }

    fn block_kernel(&self, i: usize, j: usize, rows: Vec<Vec<Scalar>>) -> Subspace {
        let d = self.block_dim(i, j);
        let f = self.field();
        if rows.is_empty() {
            return Subspace::full(f, d);
        }
        let m = Matrix::from_rows_with_width(f, rows, d).expect("row widths agree");
        Subspace::span(f, d, &m.kernel())
    }

    fn top_dim(&self, i: usize) -> Result<usize> {
        Ok(self.block_dim(i, i) - self.block_radical(i, i)?.dim())
    }

    fn require_basic(&self) -> Result<()> {
        if self.is_basic()? {
            Ok(())
        } else {
            Err(Error::NotBasic)
        }
    }

    /// For each `j`, the `i` with `soc(A e_j)` simple of type `i`, if simple.
    pub fn left_socle_types(&self) -> Result<Vec<Option<usize>>> {
        self.require_basic()?;
        let m = self.n_idempotents();
        (0..m)
            .map(|j| {
                let mut found = None;
                for i in 0..m {
                    let s = self.left_socle_block(i, j)?.dim();
                    if s == 0 {
                        continue;
                    }
                    if found.is_some() || s != self.top_dim(i)? {
                        return Ok(None);
                    }
                    found = Some(i);
                }
                Ok(found)
            })
            .collect()
    }

    /// Basic criterion: each `A e_j` has simple socle `S_{pi(j)}` and the
    /// same dimension as the injective `D(e_{pi(j)} A)`.
    pub fn is_self_injective_basic(&self) -> Result<bool> {
        let types = self.left_socle_types()?;
        let cartan = self.cartan_matrix()?;
        let m = types.len();
        let mut hit = vec![false; m];
        for (j, t) in types.iter().enumerate() {
            let Some(i) = *t else { return Ok(false) };
            if std::mem::replace(&mut hit[i], true) {
                return Ok(false);
            }
            let col: BigInt = (0..m).map(|r| cartan.get(r, j)).sum();
            let row: BigInt = (0..m).map(|c| cartan.get(i, c)).sum();
            if col != row {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `sigma(i)` = the `j` with `soc(e_i A) e_j != 0`.
    pub fn nakayama_permutation(&self) -> Result<Permutation> {
        self.require_basic()?;
        if !self.is_self_injective()? {
            return Err(Error::NotSelfInjective);
        }
        let m = self.n_idempotents();
        let mut images = Vec::with_capacity(m);
        for i in 0..m {
            let mut hits = Vec::new();
            for j in 0..m {
                if self.right_socle_block(i, j)?.dim() > 0 {
                    hits.push(j);
                }
            }
            match hits.as_slice() {
                [j] => images.push(*j),
                _ => return Err(Error::NotSelfInjective),
            }
        }
        Permutation::from_images(images).map_err(|_| Error::NotSelfInjective)
    }

    pub fn is_weakly_symmetric(&self) -> Result<bool> {
        self.require_basic()?;
        if !self.is_self_injective()? {
            return Ok(false);
        }
        Ok(self.nakayama_permutation()?.is_identity())
    }

    pub fn frobenius_form(&self) -> Result<FrobeniusSearch> {
        if !self.is_self_injective()? {
            return Ok(FrobeniusSearch::None);
        }
        let n = self.dim();
        let all: Vec<Vec<Scalar>> = (0..n).map(|k| self.basis_vector(k)).collect();
        self.search_forms(&all)
    }

    /// A Frobenius form that is also symmetric, searched among the
    /// functionals vanishing on commutators.
    pub fn symmetric_form(&self) -> Result<FrobeniusSearch> {
        if !self.is_self_injective()? {
            return Ok(FrobeniusSearch::None);
        }
        if self.has_peirce() && self.is_basic()? && !self.nakayama_permutation()?.is_identity() {
            return Ok(FrobeniusSearch::None);
        }
        let f = self.field();
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = self.zero_vector();
                for (k, c) in self.mul_basis(i, j) {
                    v[*k] = f.add(&v[*k], c);
                }
                for (k, c) in self.mul_basis(j, i) {
                    v[*k] = f.sub(&v[*k], c);
                }
                if v.iter().any(|x| !x.is_zero()) {
                    rows.push(v);
                }
            }
        }
        let w = if rows.is_empty() {
            (0..n).map(|k| self.basis_vector(k)).collect()
        } else {
            Matrix::from_rows_with_width(f, rows, n)?.kernel()
        };
        self.search_forms(&w)
    }

    pub fn is_symmetric(&self) -> Result<Decision> {
        Ok(self.symmetric_form()?.decision())
    }

    /// Searches `span(space)` for a nondegenerate functional.
    fn search_forms(&self, space: &[Vec<Scalar>]) -> Result<FrobeniusSearch> {
        let f = self.field();
        let n = self.dim();
        if space.is_empty() {
            return Ok(FrobeniusSearch::None);
        }
        let combine = |c: &[Scalar]| exactla::linear_combination(f, c, space, n);
        let accept = |lambda: Vec<Scalar>| FrobeniusForm::from_lambda(self, lambda);

        if let Some(c) = self.socle_guided(space)? {
            if let Some(form) = accept(combine(&c)) {
                return Ok(FrobeniusSearch::Found(form));
            }
        }
        if let Some(q) = f.order() {
            let points = (q as f64).powi(space.len() as i32);
            if points <= EXHAUSTIVE_LIMIT as f64 {
                let total = q.pow(space.len() as u32);
                for code in 1..total {
                    let mut rest = code;
                    let c: Vec<Scalar> = (0..space.len())
                        .map(|_| {
                            let d = rest % q;
                            rest /= q;
                            Scalar::Fin(d)
                        })
                        .collect();
                    if let Some(form) = accept(combine(&c)) {
                        return Ok(FrobeniusSearch::Found(form));
                    }
                }
                return Ok(FrobeniusSearch::None);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let trials = if f.is_finite() { FINITE_TRIALS } else { RATIONAL_TRIALS };
        for _ in 0..trials {
            let c: Vec<Scalar> = space.iter().map(|_| f.random(&mut rng, 5)).collect();
            if let Some(form) = accept(combine(&c)) {
                return Ok(FrobeniusSearch::Found(form));
            }
        }
        Ok(FrobeniusSearch::Unknown(format!(
            "{trials} random functionals were all degenerate; extend scalars to a larger field and retry"
        )))
    }

    /// Coefficients of a functional in `span(space)` taking the value 1 on a
    /// generator of each simple socle summand, when Peirce data allows it.
    fn socle_guided(&self, space: &[Vec<Scalar>]) -> Result<Option<Vec<Scalar>>> {
        if !self.has_peirce() || !self.is_basic()? {
            return Ok(None);
        }
        let f = self.field();
        let m = self.n_idempotents();
        let types = self.left_socle_types()?;
        let mut rows = Vec::new();
        for (j, t) in types.iter().enumerate() {
            let Some(i) = *t else { return Ok(None) };
            let soc = self.left_socle_block(i, j)?;
            let s = self.from_block(i, j, &soc.basis()[0]);
            rows.push(space.iter().map(|w| dot(f, w, &s)).collect::<Vec<_>>());
        }
        let a = Matrix::from_rows_with_width(f, rows, space.len())?;
        Ok(a.solve(&vec![f.one(); m])?.map(|sol| sol.particular))
    }

    /// Elementary divisors of the Cartan matrix.
    pub fn stable_k0(&self) -> Result<StableK0> {
        let divisors = self.cartan_matrix()?.elementary_divisors();
        let free = divisors.iter().all(|d| d.is_zero() || d.is_one());
        Ok(StableK0 { divisors, free })
    }
}
