//! Deciding whether a finite-dimensional algebra is local.

use exactla::{BigInt, Field, Matrix, Poly, Scalar, Subspace};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{radical, sparse, Algebra};
use crate::error::Result;

const TRIALS: usize = 64;
const SEED: u64 = 0x1_0ca1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Locality {
    Local,
    NotLocal,
    Unknown,
}

/// `E` is local iff `E / rad E` is a division algebra.
pub fn locality(e: &Algebra) -> Result<Locality> {
    let j = match e.radical() {
        Ok(j) => j.clone(),
        Err(_) => radical::compute(e)?,
    };
    let s = e.quotient(&j);
    Ok(division(&s))
}

/// Is the semisimple algebra `s` a division algebra?
fn division(s: &Algebra) -> Locality {
    match s.dim() {
        0 => return Locality::NotLocal,
        1 => return Locality::Local,
        _ => {}
    }
    let f = s.field();
    if let Some(q) = f.order() {
        // Finite division rings are fields, and a commutative semisimple
        // algebra is a field iff x -> x^q fixes only a line.
        if !s.is_commutative() {
            return Locality::NotLocal;
        }
        let n = s.dim();
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|k| {
                let b = s.basis_vector(k);
                let mut v = power(s, &b, q);
                v[k] = f.sub(&v[k], &f.one());
                v
            })
            .collect();
        let fixed = Matrix::from_columns(f, n, &cols).kernel().len();
        return if fixed == 1 { Locality::Local } else { Locality::NotLocal };
    }
    if s.is_commutative() {
        commutative_over_q(s)
    } else {
        let z = center(s);
        match division(&z) {
            Locality::NotLocal => Locality::NotLocal,
            _ => zero_divisor_search(s),
        }
    }
}

fn power(s: &Algebra, x: &[Scalar], mut e: u64) -> Vec<Scalar> {
    let mut acc = s.unit().to_vec();
    let mut base = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = s.mul(&acc, &base);
        }
        base = s.mul(&base, &base);
        e >>= 1;
    }
    acc
}

fn random_element(s: &Algebra, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    (0..s.dim()).map(|_| s.field().random(rng, 5)).collect()
}

/// Minimal polynomial of `x` by Krylov iteration.
fn minimal_polynomial(s: &Algebra, x: &[Scalar]) -> Poly {
    let f = s.field();
    let mut powers = vec![s.unit().to_vec()];
    loop {
        let next = s.mul(powers.last().unwrap(), x);
        let m = Matrix::from_columns(f, s.dim(), &powers);
        if let Some(sol) = m.solve(&next).expect("shapes agree") {
            let mut coeffs: Vec<Scalar> = sol.particular.iter().map(|c| f.neg(c)).collect();
            coeffs.push(f.one());
            return Poly::new(f, coeffs);
        }
        powers.push(next);
    }
}

fn commutative_over_q(s: &Algebra) -> Locality {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..TRIALS {
        let x = random_element(s, &mut rng);
        let m = minimal_polynomial(s, &x);
        if m.degree() == Some(1) {
            continue;
        }
        // S is a product of fields, so a reducible minimal polynomial
        // splits off an idempotent.
        if rational_root(&m).is_some() {
            return Locality::NotLocal;
        }
        if irreducible_over_q(&m) == Some(true) && m.degree() == Some(s.dim()) {
            return Locality::Local;
        }
    }
    Locality::Unknown
}

fn zero_divisor_search(s: &Algebra) -> Locality {
    let f = s.field();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..TRIALS {
        let x = random_element(s, &mut rng);
        let l = s.left_matrix(&x);
        if l.rank() < s.dim() {
            return Locality::NotLocal;
        }
        let cp = exactla::char_poly(&l).expect("square");
        if let Some(r) = rational_root(&cp) {
            // x - r is nonzero (x is not scalar, else L_x - r would be zero
            // only on a non-unital algebra) and has a kernel.
            let shifted: Vec<Scalar> = x.iter().zip(s.unit()).map(|(a, u)| f.sub(a, &f.mul(&r, u))).collect();
            if shifted.iter().any(|c| !c.is_zero()) {
                return Locality::NotLocal;
            }
        }
    }
    Locality::Unknown
}

/// The centre as an algebra on an echelon basis.
fn center(s: &Algebra) -> Algebra {
    let f = s.field();
    let n = s.dim();
    let mut m = Matrix::zeros(f, n * n, n);
    for z in 0..n {
        for j in 0..n {
            let zb = s.mul_basis(z, j);
            let bz = s.mul_basis(j, z);
            for (k, c) in zb {
                let v = f.add(m.get(j * n + k, z), c);
                m.set(j * n + k, z, v);
            }
            for (k, c) in bz {
                let v = f.sub(m.get(j * n + k, z), c);
                m.set(j * n + k, z, v);
            }
        }
    }
    subalgebra(s, &Subspace::span(f, n, &m.kernel()))
}

/// A subalgebra containing the unit, on the echelon basis of `v`.
pub(crate) fn subalgebra(s: &Algebra, v: &Subspace) -> Algebra {
    let d = v.dim();
    let basis = v.basis();
    let mut table = vec![Vec::new(); d * d];
    for x in 0..d {
        for y in 0..d {
            let (coords, _) = v.decompose(&s.mul(&basis[x], &basis[y]));
            table[x * d + y] = sparse(&coords);
        }
    }
    let (unit, _) = v.decompose(s.unit());
    let labels = (0..d).map(|k| format!("z{k}")).collect();
    Algebra::from_table(s.field(), labels, table, unit)
}

/// Integer coefficients of a rational polynomial, primitive.
fn integer_coefficients(p: &Poly) -> Vec<BigInt> {
    let rats: Vec<_> = p.coeffs().iter().map(|c| c.as_rational().clone()).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&n| n <= 1_000_000)?;
    Some((1..=n).filter(|d| n % d == 0).map(BigInt::from).collect())
}

pub(crate) fn rational_root(p: &Poly) -> Option<Scalar> {
    let f = p.field();
    if !matches!(f, Field::Rationals) {
        return None;
    }
    let c = integer_coefficients(p);
    if c.first().is_some_and(Zero::is_zero) {
        return Some(f.zero());
    }
    let (a0, ad) = (c.first()?, c.last()?);
    for num in divisors(a0)? {
        for den in divisors(ad)? {
            for sign in [1, -1] {
                let r = Scalar::Rat(exactla::BigRational::new(&num * sign, den.clone()));
                if p.eval(&r).is_zero() {
                    return Some(r);
                }
            }
        }
    }
    None
}

/// `Some(true)` when some good reduction is irreducible; `None` when no
/// prime below a small bound decides.
pub(crate) fn irreducible_over_q(p: &Poly) -> Option<bool> {
    let d = p.degree()?;
    if d <= 1 {
        return Some(true);
    }
    let c = integer_coefficients(p);
    for prime in (3u64..400).filter(|&q| exactla::is_prime(q)) {
        let fp = Field::prime(prime).expect("prime");
        if (c[d].clone() % prime).is_zero() {
            continue;
        }
        let g = Poly::new(&fp, c.iter().map(|x| fp.from_bigint(x)).collect());
        if g.gcd(&g.derivative()).degree() != Some(0) {
            continue;
        }
        if irreducible_mod_p(&g, prime) {
            return Some(true);
        }
    }
    None
}

/// Squarefree `g` over `F_p` is irreducible iff `gcd(x^{p^k} - x, g) = 1`
/// for every `k <= deg g / 2`.
fn irreducible_mod_p(g: &Poly, p: u64) -> bool {
    let f = g.field();
    let d = g.degree().unwrap_or(0);
    let x = Poly::x(f);
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = h.pow_mod(p as u128, g).expect("nonzero modulus");
        if g.gcd(&h.sub(&x)).degree() != Some(0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product_of_fields(f: &Field, k: usize) -> Algebra {
        let table = (0..k * k)
            .map(|ij| if ij / k == ij % k { vec![(ij / k, f.one())] } else { Vec::new() })
            .collect();
        let mut a = Algebra::from_table(f, (0..k).map(|i| format!("e{i}")).collect(), table, vec![f.one(); k]);
        a.set_radical(Subspace::zero(f, k));
        a
    }

    /// `Q[t]/(t^2 - c)`
    fn quadratic(c: i64) -> Algebra {
        let f = Field::Rationals;
        let table = vec![vec![(0, f.one())], vec![(1, f.one())], vec![(1, f.one())], vec![(0, f.from_i64(c))]];
        Algebra::from_table(&f, vec!["1".into(), "t".into()], table, vec![f.one(), f.zero()])
    }

    #[test]
    fn products_of_fields_are_not_local() {
        for f in [Field::Rationals, Field::prime(2).unwrap(), Field::prime(5).unwrap()] {
            assert_eq!(locality(&product_of_fields(&f, 1)).unwrap(), Locality::Local);
            assert_eq!(locality(&product_of_fields(&f, 2)).unwrap(), Locality::NotLocal);
        }
    }

    #[test]
    fn quadratic_extensions() {
        assert_eq!(locality(&quadratic(2)).unwrap(), Locality::Local);
        assert_eq!(locality(&quadratic(-1)).unwrap(), Locality::Local);
        assert_eq!(locality(&quadratic(4)).unwrap(), Locality::NotLocal);
        assert_eq!(locality(&quadratic(0)).unwrap(), Locality::Local);
    }

    #[test]
    fn finite_field_extension_is_local() {
        // F_2[t]/(t^2 + t + 1) = F_4
        let f = Field::prime(2).unwrap();
        let table = vec![vec![(0, f.one())], vec![(1, f.one())], vec![(1, f.one())], vec![(0, f.one()), (1, f.one())]];
        let a = Algebra::from_table(&f, vec!["1".into(), "t".into()], table, vec![f.one(), f.zero()]);
        assert_eq!(locality(&a).unwrap(), Locality::Local);
        // F_2[t]/(t^2 + 1) is local with radical (t + 1)
        let table = vec![vec![(0, f.one())], vec![(1, f.one())], vec![(1, f.one())], vec![(0, f.one())]];
        let b = Algebra::from_table(&f, vec!["1".into(), "t".into()], table, vec![f.one(), f.zero()]);
        assert_eq!(locality(&b).unwrap(), Locality::Local);
    }

    #[test]
    fn polynomial_helpers() {
        let q = Field::Rationals;
        assert!(rational_root(&Poly::from_i64(&q, &[-1, 0, 4])).is_some()); // 4x^2 - 1
        assert!(rational_root(&Poly::from_i64(&q, &[-2, 0, 1])).is_none());
        assert_eq!(irreducible_over_q(&Poly::from_i64(&q, &[-2, 0, 1])), Some(true));
        assert_eq!(irreducible_over_q(&Poly::from_i64(&q, &[1, 1, 1, 1])), None); // (x+1)(x^2+1)
    }
}
