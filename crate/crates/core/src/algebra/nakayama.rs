//! The Nakayama functor on indecomposable projectives.

use exactla::{Matrix, Scalar, Subspace};

use super::{Algebra, FrobeniusForm};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `nu(P_i) = P_{sigma(i)}`, and on `Hom(P_i, P_j) = e_i A e_j` the map
/// `m -> u_i mu(m) v_j`, where `u_i: P_{sigma(i)} -> A mu(e_i)` and
/// `v_i` is its inverse.
#[derive(Clone, Debug)]
pub struct NakayamaFunctor {
    sigma: Permutation,
    form: FrobeniusForm,
    u: Vec<Vec<Scalar>>,
    v: Vec<Vec<Scalar>>,
    /// `blocks[i][j]`: matrix from block coordinates of `e_i A e_j` to those
    /// of `e_{sigma(i)} A e_{sigma(j)}`.
    blocks: Vec<Vec<Matrix>>,
}

impl NakayamaFunctor {
    pub fn new(alg: &Algebra, form: FrobeniusForm) -> Result<NakayamaFunctor> {
        let sigma = alg.nakayama_permutation()?;
        let m = alg.n_idempotents();
        let f = alg.field();
        let n = alg.dim();
        let j = alg.radical()?;
        let mu = |x: &[Scalar]| form.nakayama_automorphism.mul_vec(x).expect("dimensions agree");
        let p = alg.peirce()?.clone();

        let mut u = Vec::with_capacity(m);
        let mut v = Vec::with_capacity(m);
        for i in 0..m {
            let mu_e = mu(&alg.basis_vector(p.idempotents()[i]));
            // The only j with e_j A mu(e_i) outside the radical.
            let mut target = None;
            for t in 0..m {
                let et = alg.basis_vector(p.idempotents()[t]);
                let found = (0..n)
                    .map(|b| alg.mul(&alg.mul(&et, &alg.basis_vector(b)), &mu_e))
                    .find(|x| !j.contains(x));
                if let Some(x) = found {
                    if target.is_some() {
                        return Err(Error::NotBasic);
                    }
                    target = Some((t, x));
                }
            }
            let Some((t, ui)) = target else { return Err(Error::NoFrobeniusForm) };
            if t != sigma.apply(i) {
                return Err(Error::Invalid(format!(
                    "socle permutation sends {} to {} but the form sends it to {}",
                    i + 1,
                    sigma.apply(i) + 1,
                    t + 1
                )));
            }
            let et = alg.basis_vector(p.idempotents()[t]);
            let span: Vec<Vec<Scalar>> =
                (0..n).map(|b| alg.mul(&alg.mul(&mu_e, &alg.basis_vector(b)), &et)).collect();
            let products: Vec<Vec<Scalar>> = span.iter().map(|w| alg.mul(&ui, w)).collect();
            let sol = Matrix::from_columns(f, n, &products)
                .solve(&et)?
                .ok_or_else(|| Error::Invalid("no inverse for the Nakayama twist".into()))?;
            v.push(exactla::linear_combination(f, &sol.particular, &span, n));
            u.push(ui);
        }

        let mut functor = NakayamaFunctor { sigma, form, u, v, blocks: Vec::new() };
        functor.blocks = (0..m)
            .map(|i| {
                (0..m)
                    .map(|jj| {
                        let d = alg.block_dim(i, jj);
                        let cols: Vec<Vec<Scalar>> = (0..d)
                            .map(|k| {
                                let mut x = vec![f.zero(); d];
                                x[k] = f.one();
                                functor.apply_full(alg, i, jj, &alg.from_block(i, jj, &x))
                            })
                            .collect();
                        let (si, sj) = (functor.sigma.apply(i), functor.sigma.apply(jj));
                        Matrix::from_columns(f, alg.block_dim(si, sj), &cols)
                    })
                    .collect()
            })
            .collect();
        Ok(functor)
    }

    /// Builds the functor from a freshly searched Frobenius form.
    pub fn for_algebra(alg: &Algebra) -> Result<NakayamaFunctor> {
        match alg.frobenius_form()? {
            super::FrobeniusSearch::Found(form) => NakayamaFunctor::new(alg, form),
            _ => Err(Error::NoFrobeniusForm),
        }
    }

    /// `u_i mu(m) v_j` in block coordinates of `e_{sigma(i)} A e_{sigma(j)}`.
    fn apply_full(&self, alg: &Algebra, i: usize, j: usize, m: &[Scalar]) -> Vec<Scalar> {
        let mu_m = self.form.nakayama_automorphism.mul_vec(m).expect("dimensions agree");
        let full = alg.mul(&alg.mul(&self.u[i], &mu_m), &self.v[j]);
        alg.to_block(self.sigma.apply(i), self.sigma.apply(j), &full)
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn form(&self) -> &FrobeniusForm {
        &self.form
    }

    /// `nu` on `Hom(P_i, P_j) = e_i A e_j`, block coordinates in and out.
    pub fn on_block(&self, i: usize, j: usize, x: &[Scalar]) -> Vec<Scalar> {
        self.blocks[i][j].mul_vec(x).expect("block dimensions agree")
    }

    pub fn block_matrix(&self, i: usize, j: usize) -> &Matrix {
        &self.blocks[i][j]
    }

    /// Checks that every block map is bijective.
    pub fn is_bijective_on_blocks(&self) -> bool {
        self.blocks.iter().flatten().all(|m| m.rows() == m.cols() && m.rank() == m.cols())
    }

    /// Image of the radical block under `nu`, as a subspace.
    pub fn radical_image(&self, alg: &Algebra, i: usize, j: usize) -> Result<Subspace> {
        let r = alg.block_radical(i, j)?;
        let images: Vec<Vec<Scalar>> = r.basis().iter().map(|x| self.on_block(i, j, x)).collect();
        Ok(Subspace::span(alg.field(), alg.block_dim(self.sigma.apply(i), self.sigma.apply(j)), &images))
    }
}
