//! The Jacobson radical.
//!
//! In characteristic zero, and over `F_p` with `p > dim A`, the radical is the
//! kernel of the trace form `(x, y) -> Tr(L_{xy})`. Small characteristic uses
//! the trace cascade over integer lifts: `I_{-1} = A` and
//! `I_i = {a in I_{i-1} : g_i(ab) = 0 for all b}` with
//! `g_i(a) = (Tr(L~_a^{p^i}) mod p^{i+1}) / p^i`; the radical is `I_l` for
//! `l = floor(log_p dim A)`.

use exactla::{Field, Matrix, Scalar, Subspace};

use super::Algebra;
use crate::error::{Error, Result};

pub(crate) fn compute(alg: &Algebra) -> Result<Subspace> {
    match alg.field() {
        Field::Rationals => Ok(trace_form_kernel(alg)),
        Field::Prime(p) => Ok(cascade(alg, *p)),
        Field::Galois(_) => Err(Error::Unsupported(format!(
            "computing radicals over {}; extend scalars from a prime field instead",
            alg.field()
        ))),
    }
}

fn trace_form_kernel(alg: &Algebra) -> Subspace {
    let f = alg.field();
    let n = alg.dim();
    let traces: Vec<Scalar> = (0..n)
        .map(|k| {
            (0..n).fold(f.zero(), |acc, j| {
                let diag = alg.mul_basis(k, j).iter().find(|(r, _)| *r == j).map(|(_, c)| c.clone());
                diag.map_or(acc.clone(), |c| f.add(&acc, &c))
            })
        })
        .collect();
    let mut gram = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            let v = alg.mul_basis(i, j).iter().fold(f.zero(), |acc, (k, c)| f.add(&acc, &f.mul(c, &traces[*k])));
            gram.set(i, j, v);
        }
    }
    Subspace::span(f, n, &gram.kernel())
}

fn cascade(alg: &Algebra, p: u64) -> Subspace {
    let f = alg.field();
    let n = alg.dim();
    let mut levels = 0u32;
    while (p as u128).pow(levels + 1) <= n as u128 {
        levels += 1;
    }
    let mut current = Subspace::full(f, n);
    for i in 0..=levels {
        let basis = current.basis().to_vec();
        if basis.is_empty() {
            break;
        }
        let mut m = Matrix::zeros(f, basis.len(), n);
        for (k, x) in basis.iter().enumerate() {
            for j in 0..n {
                let xb = alg.mul(x, &alg.basis_vector(j));
                m.set(k, j, Scalar::Fin(g(alg, &xb, p, i)));
            }
        }
        // Combinations sum c_k x_k killed by every column functional.
        let coeffs = m.transpose().kernel();
        let vectors: Vec<Vec<Scalar>> =
            coeffs.iter().map(|c| exactla::linear_combination(f, c, &basis, n)).collect();
        current = Subspace::span(f, n, &vectors);
    }
    current
}

fn g(alg: &Algebra, a: &[Scalar], p: u64, i: u32) -> u64 {
    let l = alg.left_matrix(a);
    let n = l.rows();
    let modulus = (p as u128).pow(i + 1);
    let lifted: Vec<u128> = (0..n * n).map(|k| l.get(k / n, k % n).code() as u128).collect();
    let power = mat_pow_mod(&lifted, n, (p as u128).pow(i), modulus);
    let trace = (0..n).fold(0u128, |acc, k| (acc + power[k * n + k]) % modulus);
    let scale = (p as u128).pow(i);
    debug_assert_eq!(trace % scale, 0, "cascade trace not divisible");
    ((trace / scale) % p as u128) as u64
}

fn mat_pow_mod(a: &[u128], n: usize, mut e: u128, m: u128) -> Vec<u128> {
    let mul = |x: &[u128], y: &[u128]| -> Vec<u128> {
        let mut out = vec![0u128; n * n];
        for i in 0..n {
            for k in 0..n {
                let xik = x[i * n + k];
                if xik == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + xik * y[k * n + j]) % m;
                }
            }
        }
        out
    };
    let mut acc: Vec<u128> = (0..n * n).map(|k| u128::from(k / n == k % n) % m).collect();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    acc
}

/// Checks that `j` is a nilpotent two-sided ideal with semisimple quotient.
pub(crate) fn verify(alg: &Algebra, j: &Subspace) -> Result<()> {
    let n = alg.dim();
    for x in j.basis() {
        for b in 0..n {
            let e = alg.basis_vector(b);
            if !j.contains(&alg.mul(&e, x)) || !j.contains(&alg.mul(x, &e)) {
                return Err(Error::BadRadical("not a two-sided ideal".into()));
            }
        }
    }
    if !is_nilpotent(alg, j) {
        return Err(Error::BadRadical("not nilpotent".into()));
    }
    let quotient = alg.quotient(j);
    match compute(&quotient) {
        Ok(r) if r.dim() == 0 => Ok(()),
        Ok(_) => Err(Error::BadRadical("quotient is not semisimple".into())),
        Err(Error::Unsupported(_)) => Ok(()),
        Err(e) => Err(e),
    }
}

pub(crate) fn is_nilpotent(alg: &Algebra, j: &Subspace) -> bool {
    let n = alg.dim();
    let mut power = j.clone();
    for _ in 0..=n {
        if power.dim() == 0 {
            return true;
        }
        let mut products = Vec::new();
        for x in power.basis() {
            for y in j.basis() {
                products.push(alg.mul(x, y));
            }
        }
        let next = Subspace::span(alg.field(), n, &products);
        if next.dim() == power.dim() {
            return false;
        }
        power = next;
    }
    power.dim() == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RawAlgebra;

    fn group_algebra(field: &Field, order: usize) -> Algebra {
        let mut products = Vec::new();
        for i in 0..order {
            for j in 0..order {
                products.push((i, j, vec![((i + j) % order, field.one())]));
            }
        }
        let mut unit = vec![field.zero(); order];
        unit[0] = field.one();
        Algebra::validate(RawAlgebra {
            field: field.clone(),
            labels: (0..order).map(|g| format!("g{g}")).collect(),
            products,
            unit,
            idempotents: None,
            blocks: None,
            radical: None,
        })
        .unwrap()
    }

    fn matrix_algebra(field: &Field, upper_only: bool) -> Algebra {
        // basis E_ij, E_ik E_kj = E_ij
        let cells: Vec<(usize, usize)> =
            [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().filter(|&(i, j)| !(upper_only && i > j)).collect();
        let mut products = Vec::new();
        for (x, &(a, b)) in cells.iter().enumerate() {
            for (y, &(c, d)) in cells.iter().enumerate() {
                if b == c {
                    let k = cells.iter().position(|&e| e == (a, d)).unwrap();
                    products.push((x, y, vec![(k, field.one())]));
                }
            }
        }
        let unit = cells.iter().map(|&(i, j)| if i == j { field.one() } else { field.zero() }).collect();
        Algebra::validate(RawAlgebra {
            field: field.clone(),
            labels: cells.iter().map(|(i, j)| format!("E{i}{j}")).collect(),
            products,
            unit,
            idempotents: None,
            blocks: None,
            radical: None,
        })
        .unwrap()
    }

    #[test]
    fn modular_group_algebras() {
        // F_p[C_p^k] is local with radical of codimension one.
        let f2 = Field::prime(2).unwrap();
        assert_eq!(group_algebra(&f2, 2).radical().unwrap().dim(), 1);
        assert_eq!(group_algebra(&f2, 4).radical().unwrap().dim(), 3);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(group_algebra(&f3, 3).radical().unwrap().dim(), 2);
        // Maschke: semisimple when p does not divide the order.
        assert_eq!(group_algebra(&f3, 2).radical().unwrap().dim(), 0);
        assert_eq!(group_algebra(&Field::Rationals, 4).radical().unwrap().dim(), 0);
    }

    #[test]
    fn matrix_algebras() {
        for f in [Field::prime(2).unwrap(), Field::prime(3).unwrap(), Field::Rationals] {
            assert_eq!(matrix_algebra(&f, false).radical().unwrap().dim(), 0, "M_2 over {f}");
            let t = matrix_algebra(&f, true);
            let j = t.radical().unwrap();
            assert_eq!(j.dim(), 1);
            assert!(j.contains(&t.basis_vector(1)));
        }
    }

    #[test]
    fn galois_needs_a_supplied_radical() {
        let f4 = Field::galois(2, 2).unwrap();
        let alg = group_algebra(&f4, 2);
        assert!(alg.radical().is_err());
    }
}
