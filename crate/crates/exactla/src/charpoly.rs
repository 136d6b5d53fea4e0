//! Division-free characteristic polynomials (Berkowitz).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::LinalgError;
use crate::field::{Field, Scalar};
use crate::intmat::IntMatrix;
use crate::matrix::Matrix;
use crate::poly::{IntPoly, Poly};

trait Ring {
    type E: Clone;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Option<Self::E>;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Option<Self::E>;
    fn neg(&self, a: &Self::E) -> Option<Self::E>;
}

struct Checked128;

impl Ring for Checked128 {
    type E = i128;
    fn zero(&self) -> i128 {
        0
    }
    fn one(&self) -> i128 {
        1
    }
    fn add(&self, a: &i128, b: &i128) -> Option<i128> {
        a.checked_add(*b)
    }
    fn mul(&self, a: &i128, b: &i128) -> Option<i128> {
        a.checked_mul(*b)
    }
    fn neg(&self, a: &i128) -> Option<i128> {
        a.checked_neg()
    }
}

struct Integers;

impl Ring for Integers {
    type E = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::from(1)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a + b)
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a * b)
    }
    fn neg(&self, a: &BigInt) -> Option<BigInt> {
        Some(-a)
    }
}

impl Ring for Field {
    type E = Scalar;
    fn zero(&self) -> Scalar {
        Field::zero(self)
    }
    fn one(&self) -> Scalar {
        Field::one(self)
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        Some(Field::add(self, a, b))
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        Some(Field::mul(self, a, b))
    }
    fn neg(&self, a: &Scalar) -> Option<Scalar> {
        Some(Field::neg(self, a))
    }
}

/// Descending coefficients of `det(xI - A)`, or `None` on overflow.
fn berkowitz<R: Ring>(ring: &R, a: &[Vec<R::E>]) -> Option<Vec<R::E>> {
    let n = a.len();
    let mut v = vec![ring.one()];
    for r in 0..n {
        // Entries of the Toeplitz column: 1, -a_rr, -R C, -R M C, ...
        let mut col = vec![ring.one(), ring.neg(&a[r][r])?];
        let mut mc: Vec<R::E> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let mut rc = ring.zero();
            for (k, x) in mc.iter().enumerate() {
                rc = ring.add(&rc, &ring.mul(&a[r][k], x)?)?;
            }
            col.push(ring.neg(&rc)?);
            let mut next = Vec::with_capacity(r);
            for i in 0..r {
                let mut s = ring.zero();
                for (k, x) in mc.iter().enumerate() {
                    s = ring.add(&s, &ring.mul(&a[i][k], x)?)?;
                }
                next.push(s);
            }
            mc = next;
        }
        let mut w = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut s = ring.zero();
            for (j, vj) in v.iter().enumerate() {
                if i >= j {
                    s = ring.add(&s, &ring.mul(&col[i - j], vj)?)?;
                }
            }
            w.push(s);
        }
        v = w;
    }
    Some(v)
}

pub fn char_poly(m: &Matrix) -> Result<Poly, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let rows = m.row_vecs();
    let mut desc = berkowitz(m.field(), &rows).expect("field arithmetic never overflows");
    desc.reverse();
    Ok(Poly::new(m.field(), desc))
}

pub fn char_poly_int(m: &IntMatrix) -> Result<IntPoly, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let small: Option<Vec<Vec<i128>>> =
        (0..n).map(|i| m.row(i).iter().map(ToPrimitive::to_i128).collect()).collect();
    if let Some(desc) = small.and_then(|rows| berkowitz(&Checked128, &rows)) {
        return Ok(IntPoly::new(desc.into_iter().rev().map(BigInt::from).collect()));
    }
    let rows: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let desc = berkowitz(&Integers, &rows).expect("big integers never overflow");
    Ok(IntPoly::new(desc.into_iter().rev().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(char_poly_int(&IntMatrix::identity(2)).unwrap(), IntPoly::from_i64(&[1, -2, 1]));
        assert_eq!(char_poly_int(&IntMatrix::zeros(2, 2)).unwrap(), IntPoly::from_i64(&[0, 0, 1]));
        let cyc = IntMatrix::from_i64(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(char_poly_int(&cyc).unwrap(), IntPoly::x_pow_minus_one(3));
        assert!(char_poly_int(&IntMatrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn big_entries_fall_back() {
        let big = i64::MAX;
        let m = IntMatrix::from_i64(&[&[big, big], &[big, -big]]);
        // x^2 - 2 big^2
        let p = char_poly_int(&m).unwrap();
        let b = BigInt::from(big);
        assert_eq!(p, IntPoly::new(vec![-(&b * &b) * 2, BigInt::zero(), BigInt::from(1)]));
    }

    #[test]
    fn matches_field_version() {
        let f = Field::prime(7).unwrap();
        let m = IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let over_z = char_poly_int(&m).unwrap().to_poly(&f);
        assert_eq!(char_poly(&m.to_matrix(&f)).unwrap(), over_z);
    }
}
