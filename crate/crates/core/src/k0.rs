//! Grothendieck groups of `K^b(A-proj)` in the basis of indecomposable
//! projectives, and permutation matrices.
//!
//! Classes are integer column vectors. `nu` acts by `N_sigma` (ones at
//! `(sigma(i), i)`), the transpose of `c_sigma` (ones at `(i, sigma(i))`).

use exactla::{char_poly_int, BigInt, IntMatrix, IntPoly};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homotopy::{ProjComplex, ProjMap};
use crate::perm::Permutation;

/// `lambda_s = sum_j (-1)^j (multiplicity of P_s in X^j)`.
pub fn dim_vector(x: &ProjComplex, n: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    for (deg, mult) in x.multiplicities(n) {
        let sign = if deg.rem_euclid(2) == 0 { 1 } else { -1 };
        for (a, m) in v.iter_mut().zip(mult) {
            *a += sign * m as i64;
        }
    }
    v
}

/// A complex of class `v`: positive parts in degree 0, negative parts in degree 1.
pub fn realize(alg: &Algebra, v: &[i64]) -> ProjComplex {
    let mut terms = vec![Vec::new(), Vec::new()];
    for (i, &c) in v.iter().enumerate() {
        let slot = usize::from(c < 0);
        terms[slot].extend(std::iter::repeat(i).take(c.unsigned_abs() as usize));
    }
    let d = ProjMap::zero(alg, &terms[0], &terms[1]);
    ProjComplex::new(alg, 0, terms, vec![d]).expect("zero differential")
}

/// `c_sigma`: ones at `(i, sigma(i))`.
pub fn perm_matrix(sigma: &Permutation) -> IntMatrix {
    let n = sigma.len();
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, sigma.apply(i), BigInt::from(1));
    }
    m
}

/// `N_sigma`: ones at `(sigma(i), i)`, so `N_sigma e_i = e_{sigma(i)}`.
pub fn coordinate_matrix(sigma: &Permutation) -> IntMatrix {
    perm_matrix(sigma).transpose()
}

/// `prod_i (x^{lambda_i} - 1)` over the cycle type.
pub fn cycle_polynomial(sigma: &Permutation) -> IntPoly {
    sigma.cycle_type().iter().fold(IntPoly::from_i64(&[1]), |acc, &l| acc.mul(&IntPoly::x_pow_minus_one(l)))
}

/// Characteristic polynomial of `c_sigma`.
pub fn perm_char_poly(sigma: &Permutation) -> IntPoly {
    char_poly_int(&perm_matrix(sigma)).expect("square")
}

/// Equal cycle types.
pub fn are_conjugate(a: &Permutation, b: &Permutation) -> bool {
    a.len() == b.len() && a.cycle_type() == b.cycle_type()
}

/// Matrix with columns `dim_vector(T_s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Map {
    pub matrix: IntMatrix,
}

impl K0Map {
    pub fn is_square(&self) -> bool {
        self.matrix.is_square()
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.matrix.is_unimodular()
    }

    pub fn determinant(&self) -> Option<BigInt> {
        self.matrix.determinant().ok()
    }
}

pub fn k0_matrix(alg: &Algebra, summands: &[ProjComplex]) -> K0Map {
    let n = alg.n_idempotents();
    let mut m = IntMatrix::zeros(n, summands.len());
    for (s, t) in summands.iter().enumerate() {
        for (i, v) in dim_vector(t, n).into_iter().enumerate() {
            m.set(i, s, BigInt::from(v));
        }
    }
    K0Map { matrix: m }
}

/// `N_{sigma_A} C = C N_{sigma_B}`.
pub fn verify_intertwining(sigma_a: &Permutation, sigma_b: &Permutation, c: &IntMatrix) -> Result<bool> {
    if c.rows() != sigma_a.len() || c.cols() != sigma_b.len() {
        return Err(Error::Mismatch);
    }
    let lhs = coordinate_matrix(sigma_a).mul(c)?;
    let rhs = c.mul(&coordinate_matrix(sigma_b))?;
    Ok(lhs == rhs)
}

/// `N_sigma [P_i] = [P_{sigma(i)}]` for every `i`.
pub fn orientation_self_test(sigma: &Permutation) -> bool {
    let n = sigma.len();
    let nm = coordinate_matrix(sigma);
    (0..n).all(|i| {
        let mut e = vec![BigInt::from(0); n];
        e[i] = BigInt::from(1);
        let image = nm.mul_vec(&e).expect("square");
        (0..n).all(|j| image[j] == BigInt::from(i64::from(j == sigma.apply(i))))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_matrix_positions() {
        let s = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let m = perm_matrix(&s);
        assert_eq!(m, IntMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]));
        assert_eq!(perm_char_poly(&s).to_string(), "x^3 - 1");
        assert!(orientation_self_test(&s));
    }

}
