//! Tensor products and extension of scalars.

use exactla::{Field, Scalar, Subspace};

use super::{sparse, Algebra, Peirce};
use crate::error::{Error, Result};

impl Algebra {
    /// `A (x) B` on the basis `a_i (x) b_j`, indexed `i * dim B + j`.
    ///
    /// The radical is `rad A (x) B + A (x) rad B`, exact over perfect fields.
    /// Peirce data `e_i (x) f_j` is attached only if every corner is
    /// verified local.
    pub fn tensor_product(&self, other: &Algebra) -> Result<Algebra> {
        if self.field() != other.field() {
            return Err(Error::Mismatch);
        }
        let f = self.field();
        let (da, db) = (self.dim(), other.dim());
        let dim = da * db;
        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..da {
            for k in 0..da {
                let ik = self.mul_basis(i, k);
                if ik.is_empty() {
                    continue;
                }
                for j in 0..db {
                    for l in 0..db {
                        let jl = other.mul_basis(j, l);
                        if jl.is_empty() {
                            continue;
                        }
                        let mut dense = vec![f.zero(); dim];
                        for (r, c) in ik {
                            for (s, d) in jl {
                                dense[r * db + s] = f.add(&dense[r * db + s], &f.mul(c, d));
                            }
                        }
                        table[(i * db + j) * dim + (k * db + l)] = sparse(&dense);
                    }
                }
            }
        }
        let unit = kron(f, self.unit(), other.unit());
        let labels = self
            .labels()
            .iter()
            .flat_map(|a| other.labels().iter().map(move |b| format!("{a}*{b}")))
            .collect();
        let mut alg = Algebra::from_table(f, labels, table, unit);

        if let (Ok(ja), Ok(jb)) = (self.radical(), other.radical()) {
            let mut vectors = Vec::new();
            for x in ja.basis() {
                for l in 0..db {
                    vectors.push(kron(f, x, &other.basis_vector(l)));
                }
            }
            for y in jb.basis() {
                for k in 0..da {
                    vectors.push(kron(f, &self.basis_vector(k), y));
                }
            }
            alg.set_radical(Subspace::span(f, dim, &vectors));
        }

        if let (Some(pa), Some(pb)) = (&self.peirce, &other.peirce) {
            let nb = pb.len();
            let idempotents = pa
                .idempotents()
                .iter()
                .flat_map(|&ea| pb.idempotents().iter().map(move |&eb| ea * db + eb))
                .collect();
            let blocks = (0..dim)
                .map(|b| {
                    let ((ia, ja), (ib, jb)) = (pa.block_of(b / db), pb.block_of(b % db));
                    (ia * nb + ib, ja * nb + jb)
                })
                .collect();
            let peirce = Peirce::new(pa.len() * nb, idempotents, blocks);
            let mut candidate = alg.clone();
            if candidate.radical.is_some() && candidate.attach_peirce(peirce).is_ok() {
                alg = candidate;
            }
        }
        Ok(alg)
    }

    /// The same structure constants read over `GF(p^m)`. Peirce data is
    /// dropped; a known radical carries over.
    pub fn extend_scalars(&self, m: u32) -> Result<Algebra> {
        if m < 1 {
            return Err(Error::Invalid("extension degree must be at least 1".into()));
        }
        let Field::Prime(p) = self.field() else {
            return Err(Error::Invalid(format!("scalar extension needs a prime field, not {}", self.field())));
        };
        let big = Field::galois(*p, m)?;
        let lift = |c: &Scalar| big.from_i64(c.code() as i64);
        let table = self
            .table()
            .iter()
            .map(|terms| terms.iter().map(|(k, c)| (*k, lift(c))).collect())
            .collect();
        let unit = self.unit().iter().map(lift).collect();
        let mut alg = Algebra::from_table(&big, self.labels().to_vec(), table, unit);
        if let Ok(j) = self.radical() {
            let vectors: Vec<Vec<Scalar>> = j.basis().iter().map(|v| v.iter().map(lift).collect()).collect();
            alg.set_radical(Subspace::span(&big, self.dim(), &vectors));
        }
        Ok(alg)
    }

    /// Checks unit laws and associativity on every basis triple.
    pub fn check_axioms(&self) -> Result<()> {
        self.check_unit()?;
        self.check_associative()
    }
}

fn kron(f: &Field, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().flat_map(|a| y.iter().map(move |b| f.mul(a, b))).collect()
}
