//! Finite-dimensional algebras given by structure constants.

mod classify;
mod construct;
mod local;
mod nakayama;
mod quiver;
mod radical;

use exactla::{Field, IntMatrix, Matrix, Scalar, Subspace};

use crate::error::{Error, Result};

pub use classify::{Decision, FrobeniusForm, FrobeniusSearch, StableK0};
pub use local::Locality;
pub use nakayama::NakayamaFunctor;
pub use quiver::{gen_nakayama, Arrow, QuiverPresentation};

/// Unvalidated algebra data, as read from input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawAlgebra {
    pub field: Field,
    pub labels: Vec<String>,
    /// `(i, j, [(k, c)])` meaning `b_i b_j = sum c b_k`; missing pairs multiply to zero.
    pub products: Vec<(usize, usize, Vec<(usize, Scalar)>)>,
    pub unit: Vec<Scalar>,
    pub idempotents: Option<Vec<usize>>,
    pub blocks: Option<Vec<(usize, usize)>>,
    pub radical: Option<Vec<Vec<Scalar>>>,
}

/// Peirce decomposition along a complete set of orthogonal idempotents that
/// are themselves basis elements; every basis element sits in one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peirce {
    idempotents: Vec<usize>,
    blocks: Vec<(usize, usize)>,
    block_basis: Vec<Vec<Vec<usize>>>,
    position: Vec<usize>,
}

impl Peirce {
    fn new(n: usize, idempotents: Vec<usize>, blocks: Vec<(usize, usize)>) -> Peirce {
        let mut block_basis = vec![vec![Vec::new(); n]; n];
        let mut position = vec![0; blocks.len()];
        for (b, &(i, j)) in blocks.iter().enumerate() {
            position[b] = block_basis[i][j].len();
            block_basis[i][j].push(b);
        }
        Peirce { idempotents, blocks, block_basis, position }
    }

    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn block_of(&self, b: usize) -> (usize, usize) {
        self.blocks[b]
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// Basis indices spanning `e_i A e_j`, increasing.
    pub fn block_basis(&self, i: usize, j: usize) -> &[usize] {
        &self.block_basis[i][j]
    }

    /// Position of basis element `b` inside its block basis.
    pub fn position(&self, b: usize) -> usize {
        self.position[b]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
    peirce: Option<Peirce>,
    radical: Option<Subspace>,
    cartan: Option<IntMatrix>,
}

impl Algebra {
    /// Structure data without any checks or caches.
    pub(crate) fn from_table(
        field: &Field,
        labels: Vec<String>,
        table: Vec<Vec<(usize, Scalar)>>,
        unit: Vec<Scalar>,
    ) -> Algebra {
        Algebra { field: field.clone(), labels, table, unit, peirce: None, radical: None, cartan: None }
    }

    /// Checks every axiom and fills the radical and Cartan caches.
    pub fn validate(raw: RawAlgebra) -> Result<Algebra> {
        let RawAlgebra { field, labels, products, unit, idempotents, blocks, radical } = raw;
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::Invalid("an algebra needs at least one basis element".into()));
        }
        if unit.len() != dim {
            return Err(Error::Invalid(format!("unit has {} coordinates for dimension {dim}", unit.len())));
        }
        let mut table = vec![Vec::new(); dim * dim];
        let mut seen = vec![false; dim * dim];
        for (i, j, terms) in products {
            if i >= dim || j >= dim {
                return Err(Error::Invalid(format!("product index ({i}, {j}) out of range")));
            }
            if std::mem::replace(&mut seen[i * dim + j], true) {
                return Err(Error::Invalid(format!("product ({i}, {j}) listed twice")));
            }
            let mut dense = vec![field.zero(); dim];
            for (k, c) in terms {
                if k >= dim {
                    return Err(Error::Invalid(format!("product ({i}, {j}) has term index {k} out of range")));
                }
                if !field.contains(&c) {
                    return Err(Error::Invalid(format!("coefficient of product ({i}, {j}) is not in {field}")));
                }
                dense[k] = field.add(&dense[k], &c);
            }
            table[i * dim + j] = sparse(&dense);
        }
        if let Some(bad) = unit.iter().find(|c| !field.contains(c)) {
            return Err(Error::Invalid(format!("unit coordinate {bad:?} is not in {field}")));
        }
        let mut alg = Algebra::from_table(&field, labels, table, unit);
        alg.check_unit()?;
        alg.check_associative()?;

        let peirce = match (idempotents, blocks) {
            (None, None) => None,
            (Some(idem), Some(blocks)) => Some(alg.check_peirce(idem, blocks)?),
            _ => return Err(Error::Invalid("idempotents and blocks must be given together".into())),
        };

        alg.radical = match radical {
            Some(vectors) => Some(alg.check_radical(&vectors)?),
            None => match radical::compute(&alg) {
                Ok(j) => Some(j),
                Err(Error::Unsupported(_)) => None,
                Err(e) => return Err(e),
            },
        };

        if let Some(p) = peirce {
            alg.attach_peirce(p)?;
        }
        Ok(alg)
    }

    /// Attaches Peirce data, checking primitivity against the cached radical.
    pub(crate) fn attach_peirce(&mut self, p: Peirce) -> Result<()> {
        self.peirce = Some(p);
        let n = self.n_idempotents();
        for i in 0..n {
            match self.corner_locality(i)? {
                Locality::Local => {}
                Locality::NotLocal => return Err(Error::NotPrimitive(self.peirce()?.idempotents[i])),
                Locality::Unknown => {
                    return Err(Error::PrimitivityUndecided(self.peirce()?.idempotents[i]))
                }
            }
        }
        let mut c = IntMatrix::zeros(n, n);
        let pe = self.peirce()?;
        for i in 0..n {
            for j in 0..n {
                c.set(i, j, pe.block_basis(i, j).len().into());
            }
        }
        self.cartan = Some(c);
        Ok(())
    }

    fn check_unit(&self) -> Result<()> {
        for j in 0..self.dim() {
            let b = self.basis_vector(j);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::NotUnital(j));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        let f = &self.field;
        let mut lhs = vec![f.zero(); n];
        let mut rhs = vec![f.zero(); n];
        for i in 0..n {
            for j in 0..n {
                let ij = &self.table[i * n + j];
                for k in 0..n {
                    lhs.iter_mut().for_each(|x| *x = f.zero());
                    rhs.iter_mut().for_each(|x| *x = f.zero());
                    for (m, c) in ij {
                        for (r, d) in &self.table[m * n + k] {
                            lhs[*r] = f.add(&lhs[*r], &f.mul(c, d));
                        }
                    }
                    for (m, c) in &self.table[j * n + k] {
                        for (r, d) in &self.table[i * n + m] {
                            rhs[*r] = f.add(&rhs[*r], &f.mul(c, d));
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_peirce(&self, idem: Vec<usize>, blocks: Vec<(usize, usize)>) -> Result<Peirce> {
        let dim = self.dim();
        let n = idem.len();
        if n == 0 || blocks.len() != dim {
            return Err(Error::Invalid("need one Peirce block per basis element and at least one idempotent".into()));
        }
        if let Some(&bad) = idem.iter().find(|&&e| e >= dim) {
            return Err(Error::Invalid(format!("idempotent index {bad} out of range")));
        }
        if let Some(&(i, j)) = blocks.iter().find(|&&(i, j)| i >= n || j >= n) {
            return Err(Error::Invalid(format!("block ({i}, {j}) out of range")));
        }
        let f = &self.field;
        for (a, &ea) in idem.iter().enumerate() {
            for (b, &eb) in idem.iter().enumerate() {
                let p = self.mul_basis_vec(ea, eb);
                let expect = if a == b { self.basis_vector(ea) } else { vec![f.zero(); dim] };
                if p != expect {
                    return Err(if a == b { Error::NotIdempotent(ea) } else { Error::NotOrthogonal(ea, eb) });
                }
            }
        }
        let mut total = vec![f.zero(); dim];
        for &e in &idem {
            total[e] = f.add(&total[e], &f.one());
        }
        if total != self.unit {
            return Err(Error::IncompleteIdempotents);
        }
        for (b, &(i, j)) in blocks.iter().enumerate() {
            let v = self.basis_vector(b);
            for (a, &ea) in idem.iter().enumerate() {
                let zero = vec![f.zero(); dim];
                let left = self.mul_basis_vec(ea, b);
                let right = self.mul_basis_vec(b, ea);
                if left != if a == i { v.clone() } else { zero.clone() }
                    || right != if a == j { v.clone() } else { zero }
                {
                    return Err(Error::StraddlesBlocks(b));
                }
            }
        }
        for (a, &ea) in idem.iter().enumerate() {
            if blocks[ea] != (a, a) {
                return Err(Error::StraddlesBlocks(ea));
            }
        }
        Ok(Peirce::new(n, idem, blocks))
    }

    fn check_radical(&self, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        let dim = self.dim();
        if vectors.iter().any(|v| v.len() != dim || v.iter().any(|c| !self.field.contains(c))) {
            return Err(Error::BadRadical("vector of wrong length or field".into()));
        }
        let j = Subspace::span(&self.field, dim, vectors);
        radical::verify(self, &j)?;
        Ok(j)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn peirce(&self) -> Result<&Peirce> {
        self.peirce.as_ref().ok_or(Error::MissingPeirce)
    }

    pub fn has_peirce(&self) -> bool {
        self.peirce.is_some()
    }

    pub fn n_idempotents(&self) -> usize {
        self.peirce.as_ref().map_or(0, Peirce::len)
    }

    /// The Jacobson radical; an error over fields where it is not computable
    /// and none was supplied.
    pub fn radical(&self) -> Result<&Subspace> {
        self.radical.as_ref().ok_or_else(|| {
            Error::Unsupported(format!("radical over {} must be supplied or inherited", self.field))
        })
    }

    pub(crate) fn set_radical(&mut self, j: Subspace) {
        self.radical = Some(j);
    }

    /// `C_ij = dim e_i A e_j`.
    pub fn cartan_matrix(&self) -> Result<&IntMatrix> {
        self.cartan.as_ref().ok_or(Error::MissingPeirce)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    /// Sparse product `b_i b_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    fn mul_basis_vec(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        for (k, c) in self.mul_basis(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&ab, c));
                }
            }
        }
        out
    }

    /// Matrix of `y -> x y`, columns indexed by the basis.
    pub fn left_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.mul_basis_vec(i, j) == self.mul_basis_vec(j, i)))
    }

    /// Embeds block coordinates of `e_i A e_j` into the full basis.
    pub fn from_block(&self, i: usize, j: usize, coords: &[Scalar]) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        if let Some(p) = &self.peirce {
            for (&b, c) in p.block_basis(i, j).iter().zip(coords) {
                v[b] = c.clone();
            }
        }
        v
    }

    /// Block coordinates of `e_i v e_j`.
    pub fn to_block(&self, i: usize, j: usize, v: &[Scalar]) -> Vec<Scalar> {
        match &self.peirce {
            Some(p) => p.block_basis(i, j).iter().map(|&b| v[b].clone()).collect(),
            None => Vec::new(),
        }
    }

    pub fn block_dim(&self, i: usize, j: usize) -> usize {
        self.peirce.as_ref().map_or(0, |p| p.block_basis(i, j).len())
    }

    /// Product of `x in e_i A e_j` and `y in e_j A e_k`, in block coordinates.
    pub fn peirce_mul(&self, i: usize, j: usize, k: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let p = self.peirce.as_ref().expect("peirce data");
        let f = &self.field;
        let mut out = vec![f.zero(); p.block_basis(i, k).len()];
        for (a, &ba) in x.iter().zip(p.block_basis(i, j)) {
            if a.is_zero() {
                continue;
            }
            for (b, &bb) in y.iter().zip(p.block_basis(j, k)) {
                if b.is_zero() {
                    continue;
                }
                let ab = f.mul(a, b);
                for (r, c) in self.mul_basis(ba, bb) {
                    let pos = p.position(*r);
                    out[pos] = f.add(&out[pos], &f.mul(&ab, c));
                }
            }
        }
        out
    }

    /// Radical part `e_i J e_j` as a subspace of block coordinates.
    pub fn block_radical(&self, i: usize, j: usize) -> Result<Subspace> {
        let jrad = self.radical()?;
        self.peirce()?;
        // J is the sum of its Peirce components e_i J e_j.
        let vectors: Vec<Vec<Scalar>> = jrad.basis().iter().map(|v| self.to_block(i, j, v)).collect();
        Ok(Subspace::span(&self.field, self.block_dim(i, j), &vectors))
    }

    /// Is `x in e_i A e_j` (block coordinates) in the radical?
    pub fn in_radical_block(&self, i: usize, j: usize, x: &[Scalar]) -> Result<bool> {
        Ok(self.radical()?.contains(&self.from_block(i, j, x)))
    }

    /// `e_i A e_i` as an algebra with unit `e_i`.
    pub fn corner(&self, i: usize) -> Result<Algebra> {
        let p = self.peirce()?;
        let basis = p.block_basis(i, i).to_vec();
        let f = &self.field;
        let d = basis.len();
        let mut table = vec![Vec::new(); d * d];
        for (x, &bx) in basis.iter().enumerate() {
            for (y, &by) in basis.iter().enumerate() {
                table[x * d + y] = self.mul_basis(bx, by).iter().map(|(k, c)| (p.position(*k), c.clone())).collect();
            }
        }
        let mut unit = vec![f.zero(); d];
        unit[p.position(p.idempotents[i])] = f.one();
        let labels = basis.iter().map(|&b| self.labels[b].clone()).collect();
        let mut corner = Algebra::from_table(f, labels, table, unit);
        if let Ok(j) = self.block_radical(i, i) {
            corner.radical = Some(j);
        }
        Ok(corner)
    }

    fn corner_locality(&self, i: usize) -> Result<Locality> {
        let corner = self.corner(i)?;
        local::locality(&corner)
    }

    /// `A / I` for a two-sided ideal `I`, on the standard complement basis.
    pub fn quotient(&self, ideal: &Subspace) -> Algebra {
        let f = &self.field;
        let reps: Vec<usize> = {
            let mut taken = vec![false; self.dim()];
            for &p in ideal.pivots() {
                taken[p] = true;
            }
            (0..self.dim()).filter(|&k| !taken[k]).collect()
        };
        let d = reps.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let (_, rem) = ideal.decompose(v);
            reps.iter().map(|&k| rem[k].clone()).collect()
        };
        let mut table = vec![Vec::new(); d * d];
        for (x, &bx) in reps.iter().enumerate() {
            for (y, &by) in reps.iter().enumerate() {
                table[x * d + y] = sparse(&project(&self.mul_basis_vec(bx, by)));
            }
        }
        let unit = project(&self.unit);
        let labels = reps.iter().map(|&k| self.labels[k].clone()).collect();
        let mut q = Algebra::from_table(f, labels, table, unit);
        q.radical = if self.radical.as_ref().is_some_and(|j| j == ideal) {
            Some(Subspace::zero(f, d))
        } else {
            None
        };
        q
    }

    /// Basic means every off-diagonal Peirce block lies in the radical.
    pub fn is_basic(&self) -> Result<bool> {
        let p = self.peirce()?;
        let j = self.radical()?;
        for (b, &(s, t)) in p.blocks().iter().enumerate() {
            if s != t && !j.contains(&self.basis_vector(b)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn locality(&self) -> Result<Locality> {
        local::locality(self)
    }

    pub(crate) fn table(&self) -> &[Vec<(usize, Scalar)>] {
        &self.table
    }
}

pub(crate) fn sparse(dense: &[Scalar]) -> Vec<(usize, Scalar)> {
    dense.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}
