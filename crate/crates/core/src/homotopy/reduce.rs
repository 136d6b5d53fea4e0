//! Radical complexes and isomorphism in `K^b(A-proj)`.

use exactla::{Matrix, Scalar, Subspace};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::hom::chain_map_space;
use super::{identity_block, ChainMap, ProjComplex};
use crate::algebra::Algebra;
use crate::error::{Error, Result};

const EXHAUSTIVE_LIMIT: f64 = 65_536.0;
const RATIONAL_TRIALS: usize = 64;
const FINITE_TRIALS: usize = 256;
const COEFF_RANGE: i64 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NotIsoReason {
    /// The radical forms have different terms.
    Invariant,
    /// Every chain map between the radical forms was tried.
    Exhausted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "reason")]
pub enum IsoVerdict {
    Isomorphic,
    NotIsomorphic(NotIsoReason),
    /// Random search found no isomorphism; none was ruled out.
    Unknown,
}

impl IsoVerdict {
    pub fn is_iso(self) -> bool {
        self == IsoVerdict::Isomorphic
    }
}

/// Inverse of a unit of `e_i A e_i`, in block coordinates.
fn corner_inverse(alg: &Algebra, i: usize, m: &[Scalar]) -> Result<Vec<Scalar>> {
    let d = alg.block_dim(i, i);
    let f = alg.field();
    let cols: Vec<Vec<Scalar>> = (0..d)
        .map(|k| {
            let mut y = vec![f.zero(); d];
            y[k] = f.one();
            alg.peirce_mul(i, i, i, m, &y)
        })
        .collect();
    let sol = Matrix::from_columns(f, d, &cols)
        .solve(&identity_block(alg, i))?
        .ok_or_else(|| Error::Invalid("entry is not a unit".into()))?;
    Ok(sol.particular)
}

impl ProjComplex {
    /// The first differential entry outside the radical: `(k, s, t)`.
    fn unit_entry(&self, alg: &Algebra) -> Result<Option<(usize, usize, usize)>> {
        for (k, d) in self.diffs().iter().enumerate() {
            for (s, &i) in d.src().iter().enumerate() {
                for (t, &j) in d.tgt().iter().enumerate() {
                    let e = d.entry(s, t);
                    if i == j && e.iter().any(|c| !c.is_zero()) && !alg.in_radical_block(i, i, e)? {
                        return Ok(Some((k, s, t)));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_radical(&self, alg: &Algebra) -> Result<bool> {
        Ok(self.unit_entry(alg)?.is_none())
    }

    /// Cancels unit entries of the differentials until all lie in the
    /// radical; the result is homotopy equivalent.
    pub fn radical_reduce(&self, alg: &Algebra) -> Result<ProjComplex> {
        let mut x = self.clone();
        while let Some((k, s, t)) = x.unit_entry(alg)? {
            x = x.cancel(alg, k, s, t)?;
        }
        Ok(x)
    }

    /// Gaussian elimination on the invertible entry `d^k[s][t]`.
    fn cancel(&self, alg: &Algebra, k: usize, s: usize, t: usize) -> Result<ProjComplex> {
        let f = alg.field();
        let d = &self.diffs()[k];
        let i = d.src()[s];
        let inv = corner_inverse(alg, i, d.entry(s, t))?;
        let rows: Vec<usize> = (0..d.src().len()).filter(|&r| r != s).collect();
        let cols: Vec<usize> = (0..d.tgt().len()).filter(|&u| u != t).collect();

        let mut reduced = d.select(&rows, &cols);
        for (rr, &r) in rows.iter().enumerate() {
            let c = d.entry(r, t);
            if c.iter().all(Scalar::is_zero) {
                continue;
            }
            let ci = alg.peirce_mul(d.src()[r], i, i, c, &inv);
            for (uu, &u) in cols.iter().enumerate() {
                let b = d.entry(s, u);
                if b.iter().all(Scalar::is_zero) {
                    continue;
                }
                let correction = alg.peirce_mul(d.src()[r], i, d.tgt()[u], &ci, b);
                let entry: Vec<Scalar> =
                    reduced.entry(rr, uu).iter().zip(&correction).map(|(a, b)| f.sub(a, b)).collect();
                reduced.set_entry(rr, uu, entry);
            }
        }

        let mut terms = self.terms().to_vec();
        terms[k].remove(s);
        terms[k + 1].remove(t);
        let mut diffs = self.diffs().to_vec();
        diffs[k] = reduced;
        if k > 0 {
            let before = &self.diffs()[k - 1];
            diffs[k - 1] = before.select(&(0..before.src().len()).collect::<Vec<_>>(), &rows);
        }
        if k + 1 < self.diffs().len() {
            let after = &self.diffs()[k + 1];
            diffs[k + 1] = after.select(&cols, &(0..after.tgt().len()).collect::<Vec<_>>());
        }
        Ok(ProjComplex { lo: self.lo(), terms, diffs }.trimmed())
    }
}

/// Representatives of `e_i A e_i / e_i J e_i` and the projection onto them.
struct Tops {
    /// Per type: positions in block coordinates not pivotal for the radical.
    free: Vec<Vec<usize>>,
    radicals: Vec<Subspace>,
}

impl Tops {
    fn new(alg: &Algebra) -> Result<Tops> {
        let n = alg.n_idempotents();
        let mut free = Vec::with_capacity(n);
        let mut radicals = Vec::with_capacity(n);
        for i in 0..n {
            let r = alg.block_radical(i, i)?;
            let d = alg.block_dim(i, i);
            free.push((0..d).filter(|p| !r.pivots().contains(p)).collect());
            radicals.push(r);
        }
        Ok(Tops { free, radicals })
    }

    fn project(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let rem = self.radicals[i].decompose(v).1;
        self.free[i].iter().map(|&p| rem[p].clone()).collect()
    }

    /// Flattened top matrices of each component, per degree and type.
    fn vector(&self, alg: &Algebra, map: &ChainMap) -> Vec<Scalar> {
        let f = alg.field();
        let mut out = Vec::new();
        for c in map.components() {
            for (i, free) in self.free.iter().enumerate() {
                let d = alg.block_dim(i, i);
                let rows: Vec<usize> = (0..c.src().len()).filter(|&s| c.src()[s] == i).collect();
                let cols: Vec<usize> = (0..c.tgt().len()).filter(|&t| c.tgt()[t] == i).collect();
                for &s in &rows {
                    for &p in free {
                        let mut basis = vec![f.zero(); d];
                        basis[p] = f.one();
                        for &t in &cols {
                            out.extend(self.project(i, &alg.peirce_mul(i, i, i, &basis, c.entry(s, t))));
                        }
                    }
                }
            }
        }
        out
    }

    /// Is every top block of the flattened vector invertible?
    fn invertible(&self, alg: &Algebra, x: &ProjComplex, v: &[Scalar]) -> bool {
        let f = alg.field();
        let mut pos = 0;
        for t in x.terms() {
            for (i, free) in self.free.iter().enumerate() {
                let m = t.iter().filter(|&&j| j == i).count();
                let size = m * free.len();
                if size == 0 {
                    continue;
                }
                let mut rows = Vec::with_capacity(size);
                for _ in 0..size {
                    rows.push(v[pos..pos + size].to_vec());
                    pos += size;
                }
                if Matrix::from_rows(f, rows).expect("square block").rank() < size {
                    return false;
                }
            }
        }
        true
    }
}

/// Decides `X = Y` in `K^b(A-proj)` by comparing radical forms.
pub fn iso_in_kb(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, seed: u64) -> Result<IsoVerdict> {
    let n = alg.n_idempotents();
    let rx = x.radical_reduce(alg)?.sorted();
    let ry = y.radical_reduce(alg)?.sorted();
    if rx.multiplicities(n) != ry.multiplicities(n) {
        return Ok(IsoVerdict::NotIsomorphic(NotIsoReason::Invariant));
    }
    if rx.is_zero() {
        return Ok(IsoVerdict::Isomorphic);
    }
    let f = alg.field();
    let tops = Tops::new(alg)?;
    let maps = chain_map_space(alg, &rx, &ry, 0);
    let images: Vec<Vec<Scalar>> = maps.iter().map(|m| tops.vector(alg, m)).collect();
    let len = images.first().map_or(0, Vec::len);
    // Independent images suffice: invertibility only sees the tops.
    let mut span = Subspace::zero(f, len);
    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    for v in images {
        if !span.contains(&v) {
            span = span.sum(&Subspace::span(f, len, std::slice::from_ref(&v)));
            chosen.push(v);
        }
    }
    let r = chosen.len();
    if r == 0 {
        return Ok(IsoVerdict::NotIsomorphic(NotIsoReason::Exhausted));
    }
    let test = |c: &[Scalar]| tops.invertible(alg, &rx, &exactla::linear_combination(f, c, &chosen, len));

    if let Some(q) = f.order() {
        if (q as f64).powi(r as i32) <= EXHAUSTIVE_LIMIT {
            let total = q.pow(r as u32);
            for code in 1..total {
                let mut rest = code;
                let c: Vec<Scalar> = (0..r)
                    .map(|_| {
                        let d = rest % q;
                        rest /= q;
                        Scalar::Fin(d)
                    })
                    .collect();
                if test(&c) {
                    return Ok(IsoVerdict::Isomorphic);
                }
            }
            return Ok(IsoVerdict::NotIsomorphic(NotIsoReason::Exhausted));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = if f.is_finite() { FINITE_TRIALS } else { RATIONAL_TRIALS };
    for _ in 0..trials {
        let c: Vec<Scalar> = (0..r).map(|_| f.random(&mut rng, COEFF_RANGE)).collect();
        if test(&c) {
            return Ok(IsoVerdict::Isomorphic);
        }
    }
    Ok(IsoVerdict::Unknown)
}
