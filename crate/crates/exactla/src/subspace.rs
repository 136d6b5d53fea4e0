//! Subspaces of `K^n` held in reduced echelon form.

use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    /// Reduced echelon basis; row `k` has a leading one in column `pivots[k]`.
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { field: field.clone(), ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        let id = Matrix::identity(field, ambient);
        Subspace { field: field.clone(), ambient, rows: id.row_vecs(), pivots: (0..ambient).collect() }
    }

    pub fn span(field: &Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows_with_width(field, vectors.to_vec(), ambient).expect("vector length");
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { field: field.clone(), ambient, rows, pivots }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis and the remainder
    /// `v - sum c_k b_k`, which vanishes exactly when `v` lies in the space.
    pub fn decompose(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let f = &self.field;
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = rem[pc].clone();
            if !c.is_zero() {
                for (x, b) in rem.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *x = f.sub(x, &f.mul(&c, b));
                    }
                }
            }
            coords.push(c);
        }
        (coords, rem)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.decompose(v).1.iter().all(Scalar::is_zero)
    }

    pub fn contains_all(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(&self.field, self.ambient, &all)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(&self.field, self.ambient);
        }
        // Solve sum a_k u_k = sum b_l w_l over the concatenated basis.
        let f = &self.field;
        let mut cols = self.rows.clone();
        cols.extend(other.rows.iter().map(|w| w.iter().map(|x| f.neg(x)).collect()));
        let m = Matrix::from_columns(f, self.ambient, &cols);
        let vectors: Vec<Vec<Scalar>> = m
            .kernel()
            .into_iter()
            .map(|k| crate::matrix::linear_combination(f, &k[..self.dim()], &self.rows, self.ambient))
            .collect();
        Subspace::span(f, self.ambient, &vectors)
    }

    /// Standard basis vectors spanning a complement.
    pub fn complement_basis(&self) -> Vec<Vec<Scalar>> {
        let f = &self.field;
        let mut taken = vec![false; self.ambient];
        for &p in &self.pivots {
            taken[p] = true;
        }
        (0..self.ambient)
            .filter(|&j| !taken[j])
            .map(|j| {
                let mut e = vec![f.zero(); self.ambient];
                e[j] = f.one();
                e
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_of_planes() {
        let f = Field::Rationals;
        let v = |a: &[i64]| a.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let p1 = Subspace::span(&f, 3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let p2 = Subspace::span(&f, 3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let meet = p1.intersect(&p2);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&v(&[0, 5, 0])));
        assert_eq!(p1.sum(&p2).dim(), 3);
        assert_eq!(p1.complement_basis(), vec![v(&[0, 0, 1])]);
    }
}
