//! Univariate polynomials with ascending coefficient vectors.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::LinalgError;
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

/// Polynomial over the integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> IntPoly {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] += BigInt::one();
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn to_poly(&self, field: &Field) -> Poly {
        Poly::new(field, self.coeffs.iter().map(|c| field.from_bigint(c)).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(bool, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.is_negative(), term(&c.abs().to_string(), k)))
            .collect();
        write_terms(f, &terms)
    }
}

fn term(abs: &str, k: usize) -> String {
    let mono = match k {
        0 => return abs.to_string(),
        1 => "x".to_string(),
        _ => format!("x^{k}"),
    };
    if abs == "1" {
        mono
    } else {
        format!("{abs}*{mono}")
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(bool, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (neg, t)) in terms.iter().enumerate() {
        match (idx, neg) {
            (0, true) => write!(f, "-{t}")?,
            (0, false) => write!(f, "{t}")?,
            (_, true) => write!(f, " - {t}")?,
            (_, false) => write!(f, " + {t}")?,
        }
    }
    Ok(())
}

/// Polynomial over a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn constant(field: &Field, c: Scalar) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn from_i64(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = f.zero();
        let c = (0..n)
            .map(|k| f.add(self.coeffs.get(k).unwrap_or(&zero), other.coeffs.get(k).unwrap_or(&zero)))
            .collect();
        Poly::new(f, c)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&self.field.inv(l).expect("nonzero leading coefficient")),
        }
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn divrem(&self, d: &Poly) -> Option<(Poly, Poly)> {
        let f = &self.field;
        let dd = d.degree()?;
        let lead_inv = f.inv(d.leading()?)?;
        let mut r = self.coeffs.clone();
        let mut q = vec![f.zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.len() - 1;
            let c = f.mul(&r[top], &lead_inv);
            let shift = top - dd;
            if !c.is_zero() {
                for (k, dk) in d.coeffs.iter().enumerate() {
                    r[shift + k] = f.sub(&r[shift + k], &f.mul(&c, dk));
                }
            }
            q[shift] = c;
            r.pop();
        }
        Some((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn rem(&self, d: &Poly) -> Option<Poly> {
        self.divrem(d).map(|(_, r)| r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| f.mul(a, &f.from_i64(k as i64)))
            .collect();
        Poly::new(f, c)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Result<Matrix, LinalgError> {
        if !m.is_square() {
            return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        let n = m.rows();
        let id = Matrix::identity(&self.field, n);
        let mut acc = Matrix::zeros(&self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m)?.add(&id.scale(c))?;
        }
        Ok(acc)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Option<Poly> {
        let f = &self.field;
        let mut base = self.rem(m)?;
        let mut acc = Poly::constant(f, f.one()).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Some(acc)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(bool, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match c {
                Scalar::Rat(r) => (r.is_negative(), term(&self.field.format(&Scalar::Rat(r.abs())), k)),
                Scalar::Fin(_) => (false, term(&self.field.format(c), k)),
            })
            .collect();
        write_terms(f, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(IntPoly::x_pow_minus_one(3).to_string(), "x^3 - 1");
        assert_eq!(IntPoly::from_i64(&[1, -2, 1]).to_string(), "x^2 - 2*x + 1");
        assert_eq!(IntPoly::from_i64(&[]).to_string(), "0");
    }

    #[test]
    fn division_and_gcd() {
        let q = Field::Rationals;
        let a = Poly::from_i64(&q, &[-1, 0, 1]); // x^2 - 1
        let b = Poly::from_i64(&q, &[1, 2, 1]); // (x + 1)^2
        assert_eq!(a.gcd(&b), Poly::from_i64(&q, &[1, 1]));
        let (quo, rem) = a.divrem(&Poly::from_i64(&q, &[-1, 1])).unwrap();
        assert_eq!(quo, Poly::from_i64(&q, &[1, 1]));
        assert!(rem.is_zero());
        assert!(a.divrem(&Poly::zero(&q)).is_none());
    }

    #[test]
    fn frobenius_identity_mod_irreducible() {
        // x^2 + x + 1 is irreducible over F_2, so x^4 = x mod it.
        let f = Field::prime(2).unwrap();
        let m = Poly::from_i64(&f, &[1, 1, 1]);
        assert_eq!(Poly::x(&f).pow_mod(4, &m).unwrap(), Poly::x(&f));
    }
}
