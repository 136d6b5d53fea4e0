//! Exact scalar fields: the rationals, prime fields and small Galois fields.
//!
//! Elements are carried as [`Scalar`] values and all arithmetic goes through
//! the owning [`Field`], which knows how to interpret them.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::LinalgError;

/// Largest Galois field order for which log/exp tables are built.
const MAX_GALOIS_ORDER: u64 = 1 << 20;

/// A field element. The variant is determined by the field it belongs to:
/// `Rat` for the rationals, `Fin` (a canonical code) for finite fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rat(BigRational),
    Fin(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fin(c) => *c == 0,
        }
    }

    /// The finite-field code, panicking on a rational.
    pub fn code(&self) -> u64 {
        match self {
            Scalar::Fin(c) => *c,
            Scalar::Rat(_) => panic!("rational scalar used as a finite-field element"),
        }
    }

    pub fn as_rational(&self) -> &BigRational {
        match self {
            Scalar::Rat(r) => r,
            Scalar::Fin(_) => panic!("finite-field scalar used as a rational"),
        }
    }
}

/// `GF(p^m)` realised as `F_p[t]/(f)` with element codes `sum c_k p^k`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct GaloisField {
    p: u64,
    degree: u32,
    order: u64,
    /// Monic irreducible modulus, ascending coefficients, length `degree + 1`.
    modulus: Vec<u64>,
    exp: Vec<u64>,
    log: Vec<u64>,
}

impl GaloisField {
    fn new(p: u64, degree: u32) -> Result<Self, LinalgError> {
        let order = p
            .checked_pow(degree)
            .filter(|&q| q <= MAX_GALOIS_ORDER)
            .ok_or(LinalgError::FieldTooLarge { p, degree })?;
        let modulus = find_irreducible(p, degree as usize);
        let mut field = GaloisField { p, degree, order, modulus, exp: Vec::new(), log: Vec::new() };
        field.build_tables();
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, mut code: u64) -> Vec<u64> {
        let mut out = vec![0; self.degree as usize];
        for d in out.iter_mut() {
            *d = code % self.p;
            code /= self.p;
        }
        out
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let d: Vec<u64> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.encode(&d)
    }

    fn slow_mul(&self, a: u64, b: u64) -> u64 {
        let m = self.degree as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * m];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % self.p;
            }
        }
        for k in (m..2 * m).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (t, &f) in self.modulus.iter().enumerate().take(m) {
                let sub = (c * f) % self.p;
                prod[k - m + t] = (prod[k - m + t] + self.p - sub) % self.p;
            }
            prod[k] = 0;
        }
        self.encode(&prod[..m])
    }

    fn build_tables(&mut self) {
        let q = self.order;
        for g in 2..q.max(3) {
            let g = if q == 2 { 1 } else { g };
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut x = 1u64;
            loop {
                exp.push(x);
                x = self.slow_mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() as u64 == q - 1 {
                let mut log = vec![0u64; q as usize];
                for (k, &e) in exp.iter().enumerate() {
                    log[e as usize] = k as u64;
                }
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("a finite field always has a primitive element");
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.order - 1;
        let k = (self.log[a as usize] + self.log[b as usize]) % n;
        self.exp[k as usize]
    }

    fn inv(&self, a: u64) -> u64 {
        let n = self.order - 1;
        self.exp[((n - self.log[a as usize]) % n) as usize]
    }
}

fn poly_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db && !r.is_empty() {
        let c = (*r.last().unwrap() * lead_inv) % p;
        let shift = r.len() - 1 - db;
        for (k, &bk) in b.iter().enumerate() {
            r[shift + k] = (r[shift + k] + p - (c * bk) % p) % p;
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn monic_polys(p: u64, degree: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(degree as u32);
    (0..count).map(move |mut code| {
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push(code % p);
            code /= p;
        }
        coeffs.push(1);
        coeffs
    })
}

fn find_irreducible(p: u64, degree: usize) -> Vec<u64> {
    if degree == 1 {
        return vec![0, 1];
    }
    monic_polys(p, degree)
        .find(|f| {
            (1..=degree / 2).all(|d| monic_polys(p, d).all(|g| !poly_mod(f, &g, p).is_empty()))
        })
        .expect("irreducible polynomials exist in every degree")
}

pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The base field of every computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
    Galois(Arc<GaloisField>),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// `GF(p^m)`; degree one gives the prime field itself.
    pub fn galois(p: u64, degree: u32) -> Result<Field, LinalgError> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(LinalgError::NotPrime(p));
        }
        match degree {
            0 => Err(LinalgError::FieldTooLarge { p, degree }),
            1 => Ok(Field::Prime(p)),
            _ => Ok(Field::Galois(Arc::new(GaloisField::new(p, degree)?))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
            Field::Galois(g) => g.p,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(*p),
            Field::Galois(g) => Some(g.order),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, Field::Rationals)
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            _ => Scalar::Fin(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            _ => Scalar::Fin(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(v.clone())),
            _ => {
                let p = self.characteristic();
                let r = (v % BigInt::from(p) + BigInt::from(p)) % BigInt::from(p);
                // Prime-field elements are codes below p, also inside GF(p^m).
                Scalar::Fin(r.to_u64().expect("reduced residue fits"))
            }
        }
    }

    /// Does `s` have the shape of an element of this field?
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rat(_)) => true,
            (Field::Prime(p), Scalar::Fin(c)) => c < p,
            (Field::Galois(g), Scalar::Fin(c)) => *c < g.order,
            _ => false,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Field::Prime(p), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin((x + y) % p),
            (Field::Galois(g), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(g.add(*x, *y)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (Field::Prime(p), Scalar::Fin(x)) => Scalar::Fin((p - x) % p),
            (Field::Galois(g), Scalar::Fin(x)) => Scalar::Fin(g.neg(*x)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (Field::Prime(p), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin((x + p - y) % p),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Field::Prime(p), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(mul_mod(*x, *y, *p)),
            (Field::Galois(g), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(g.mul(*x, *y)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        Some(match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(x.recip()),
            (Field::Prime(p), Scalar::Fin(x)) => Scalar::Fin(mod_inv(*x, *p)),
            (Field::Galois(g), Scalar::Fin(x)) => Scalar::Fin(g.inv(*x)),
            _ => panic!("scalar does not belong to {self}"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &Scalar, mut exp: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// All elements of a finite field in code order.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        self.order().map(|q| (0..q).map(Scalar::Fin))
    }

    /// A random element: uniform for finite fields, an integer in
    /// `[-range, range]` for the rationals.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, range: i64) -> Scalar {
        match self.order() {
            Some(q) => Scalar::Fin(rng.gen_range(0..q)),
            None => self.from_i64(rng.gen_range(-range..=range)),
        }
    }

    /// Parses `"n"`, `"n/d"` or a decimal like `"-1.25"` over the rationals,
    /// an integer residue over prime fields and an element code over `GF(p^m)`.
    pub fn parse(&self, text: &str) -> Result<Scalar, LinalgError> {
        let t = text.trim();
        let bad = || LinalgError::Parse(text.to_string());
        match self {
            Field::Rationals => {
                if let Some((n, d)) = t.split_once('/') {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    Ok(Scalar::Rat(BigRational::new(n, d)))
                } else if let Some((ip, fp)) = t.split_once('.') {
                    let neg = ip.starts_with('-');
                    let ip_abs = ip.trim_start_matches(['-', '+']);
                    let digits = format!("{}{}", if ip_abs.is_empty() { "0" } else { ip_abs }, fp);
                    let mut n: BigInt = digits.parse().map_err(|_| bad())?;
                    if neg {
                        n = -n;
                    }
                    let d = num_traits::pow(BigInt::from(10), fp.len());
                    Ok(Scalar::Rat(BigRational::new(n, d)))
                } else {
                    let n: BigInt = t.parse().map_err(|_| bad())?;
                    Ok(Scalar::Rat(BigRational::from_integer(n)))
                }
            }
            Field::Prime(_) => {
                let n: BigInt = t.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
            Field::Galois(g) => {
                let c: u64 = t.parse().map_err(|_| bad())?;
                if c >= g.order {
                    return Err(bad());
                }
                Ok(Scalar::Fin(c))
            }
        }
    }

    pub fn format(&self, s: &Scalar) -> String {
        match s {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fin(c) => c.to_string(),
        }
    }

    /// Image of an element of the prime subfield (a code below `p`) as an
    /// integer in `[0, p)`. Only meaningful for finite fields.
    pub fn lift(&self, s: &Scalar) -> u64 {
        s.code()
    }

    /// Integer value of a rational scalar if it is integral.
    pub fn as_integer(&self, s: &Scalar) -> Option<BigInt> {
        match s {
            Scalar::Rat(r) if r.is_integer() => Some(r.numer().clone()),
            _ => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Galois(g) => write!(f, "F_{}^{}", g.p, g.degree),
        }
    }
}
