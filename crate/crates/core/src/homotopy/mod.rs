//! Bounded complexes of finitely generated projectives and the homotopy
//! category `K^b(A-proj)`.
//!
//! A projective is a list of summand types `i` standing for `A e_i`. A map
//! `P -> Q` is a matrix whose `(s, t)` entry lies in `e_{P_s} A e_{Q_t}` and
//! acts by right multiplication, so composing `f` then `g` is the matrix
//! product `F G`.

mod hom;
mod random;
mod reduce;

use exactla::Scalar;

use crate::algebra::{Algebra, NakayamaFunctor};
use crate::error::{Error, Result};

pub use hom::{chain_map_space, hom_dim_kb, shift_window, ChainMap, HomSpace};
pub use random::{random_chain_map, random_complex, ComplexShape};
pub use reduce::{iso_in_kb, IsoVerdict, NotIsoReason};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjMap {
    src: Vec<usize>,
    tgt: Vec<usize>,
    /// `entries[s][t]` in block coordinates of `e_{src[s]} A e_{tgt[t]}`.
    entries: Vec<Vec<Vec<Scalar>>>,
}

impl ProjMap {
    pub fn zero(alg: &Algebra, src: &[usize], tgt: &[usize]) -> ProjMap {
        let f = alg.field();
        let entries = src
            .iter()
            .map(|&i| tgt.iter().map(|&j| vec![f.zero(); alg.block_dim(i, j)]).collect())
            .collect();
        ProjMap { src: src.to_vec(), tgt: tgt.to_vec(), entries }
    }

    pub fn identity(alg: &Algebra, types: &[usize]) -> ProjMap {
        let mut m = ProjMap::zero(alg, types, types);
        for (s, &i) in types.iter().enumerate() {
            m.entries[s][s] = identity_block(alg, i);
        }
        m
    }

    /// Checks entry shapes against the algebra.
    pub fn from_entries(
        alg: &Algebra,
        src: Vec<usize>,
        tgt: Vec<usize>,
        entries: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<ProjMap> {
        let n = alg.n_idempotents();
        if src.iter().chain(&tgt).any(|&i| i >= n) {
            return Err(Error::Invalid("summand type out of range".into()));
        }
        let ok = entries.len() == src.len()
            && entries.iter().zip(&src).all(|(row, &i)| {
                row.len() == tgt.len()
                    && row.iter().zip(&tgt).all(|(e, &j)| {
                        e.len() == alg.block_dim(i, j) && e.iter().all(|c| alg.field().contains(c))
                    })
            });
        if !ok {
            return Err(Error::Invalid("map entries do not match the Peirce blocks".into()));
        }
        Ok(ProjMap { src, tgt, entries })
    }

    pub fn src(&self) -> &[usize] {
        &self.src
    }

    pub fn tgt(&self) -> &[usize] {
        &self.tgt
    }

    pub fn entry(&self, s: usize, t: usize) -> &[Scalar] {
        &self.entries[s][t]
    }

    pub fn set_entry(&mut self, s: usize, t: usize, v: Vec<Scalar>) {
        assert_eq!(v.len(), self.entries[s][t].len(), "block dimension");
        self.entries[s][t] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().flatten().all(Scalar::is_zero)
    }

    /// First `self`, then `other`.
    pub fn then(&self, alg: &Algebra, other: &ProjMap) -> ProjMap {
        assert_eq!(self.tgt, other.src, "composable maps");
        let f = alg.field();
        let mut out = ProjMap::zero(alg, &self.src, &other.tgt);
        for (s, &i) in self.src.iter().enumerate() {
            for (u, &k) in other.tgt.iter().enumerate() {
                let acc = &mut out.entries[s][u];
                for (t, &j) in self.tgt.iter().enumerate() {
                    let (x, y) = (&self.entries[s][t], &other.entries[t][u]);
                    if x.iter().all(Scalar::is_zero) || y.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    for (a, b) in acc.iter_mut().zip(alg.peirce_mul(i, j, k, x, y)) {
                        *a = f.add(a, &b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, alg: &Algebra, other: &ProjMap) -> ProjMap {
        self.combine(alg, other, |a, b| alg.field().add(a, b))
    }

    pub fn sub(&self, alg: &Algebra, other: &ProjMap) -> ProjMap {
        self.combine(alg, other, |a, b| alg.field().sub(a, b))
    }

    fn combine(&self, _alg: &Algebra, other: &ProjMap, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> ProjMap {
        assert!(self.src == other.src && self.tgt == other.tgt, "maps of equal shape");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r, q)| r.iter().zip(q).map(|(x, y)| x.iter().zip(y).map(|(a, b)| op(a, b)).collect()).collect())
            .collect();
        ProjMap { src: self.src.clone(), tgt: self.tgt.clone(), entries }
    }

    pub fn scale(&self, alg: &Algebra, c: &Scalar) -> ProjMap {
        let f = alg.field();
        let mut out = self.clone();
        out.entries.iter_mut().flatten().flatten().for_each(|x| *x = f.mul(x, c));
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, alg: &Algebra, other: &ProjMap) -> ProjMap {
        let src: Vec<usize> = self.src.iter().chain(&other.src).copied().collect();
        let tgt: Vec<usize> = self.tgt.iter().chain(&other.tgt).copied().collect();
        let mut out = ProjMap::zero(alg, &src, &tgt);
        let (ns, nt) = (self.src.len(), self.tgt.len());
        for (s, row) in self.entries.iter().enumerate() {
            for (t, e) in row.iter().enumerate() {
                out.entries[s][t] = e.clone();
            }
        }
        for (s, row) in other.entries.iter().enumerate() {
            for (t, e) in row.iter().enumerate() {
                out.entries[ns + s][nt + t] = e.clone();
            }
        }
        out
    }

    /// `[m_1 m_2 ...]`: maps out of a common source into a sum of targets.
    pub fn hstack(alg: &Algebra, src: &[usize], maps: &[ProjMap]) -> ProjMap {
        let tgt: Vec<usize> = maps.iter().flat_map(|m| m.tgt.iter().copied()).collect();
        let mut out = ProjMap::zero(alg, src, &tgt);
        let mut off = 0;
        for m in maps {
            assert_eq!(m.src, src, "common source");
            for (s, row) in m.entries.iter().enumerate() {
                for (t, e) in row.iter().enumerate() {
                    out.entries[s][off + t] = e.clone();
                }
            }
            off += m.tgt.len();
        }
        out
    }

    /// Maps out of a sum of sources into a common target, stacked by rows.
    pub fn vstack(alg: &Algebra, tgt: &[usize], maps: &[ProjMap]) -> ProjMap {
        let src: Vec<usize> = maps.iter().flat_map(|m| m.src.iter().copied()).collect();
        let mut out = ProjMap::zero(alg, &src, tgt);
        let mut off = 0;
        for m in maps {
            assert_eq!(m.tgt, tgt, "common target");
            for (s, row) in m.entries.iter().enumerate() {
                out.entries[off + s] = row.clone();
            }
            off += m.src.len();
        }
        out
    }

    /// Keeps the listed source rows and target columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ProjMap {
        ProjMap {
            src: rows.iter().map(|&s| self.src[s]).collect(),
            tgt: cols.iter().map(|&t| self.tgt[t]).collect(),
            entries: rows.iter().map(|&s| cols.iter().map(|&t| self.entries[s][t].clone()).collect()).collect(),
        }
    }

    /// `[[a, b], [c, d]]` with `a: P -> R`, `b: P -> S`, `c: Q -> R`, `d: Q -> S`.
    pub fn from_quadrants(alg: &Algebra, a: &ProjMap, b: &ProjMap, c: &ProjMap, d: &ProjMap) -> ProjMap {
        let src: Vec<usize> = a.src.iter().chain(&c.src).copied().collect();
        let tgt: Vec<usize> = a.tgt.iter().chain(&b.tgt).copied().collect();
        let mut out = ProjMap::zero(alg, &src, &tgt);
        let (np, nr) = (a.src.len(), a.tgt.len());
        for (m, (ro, co)) in [(a, (0, 0)), (b, (0, nr)), (c, (np, 0)), (d, (np, nr))] {
            for (s, row) in m.entries.iter().enumerate() {
                for (t, e) in row.iter().enumerate() {
                    out.entries[ro + s][co + t] = e.clone();
                }
            }
        }
        out
    }

    /// `nu` applied entrywise.
    pub fn nu(&self, nu: &NakayamaFunctor) -> ProjMap {
        let s = nu.sigma();
        ProjMap {
            src: self.src.iter().map(|&i| s.apply(i)).collect(),
            tgt: self.tgt.iter().map(|&j| s.apply(j)).collect(),
            entries: self
                .entries
                .iter()
                .zip(&self.src)
                .map(|(row, &i)| row.iter().zip(&self.tgt).map(|(e, &j)| nu.on_block(i, j, e)).collect())
                .collect(),
        }
    }
}

pub(crate) fn identity_block(alg: &Algebra, i: usize) -> Vec<Scalar> {
    let p = alg.peirce().expect("peirce data");
    alg.to_block(i, i, &alg.basis_vector(p.idempotents()[i]))
}

/// `X^lo -> X^{lo+1} -> ...`; `diffs[k]` goes from `terms[k]` to `terms[k+1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjComplex {
    lo: i64,
    terms: Vec<Vec<usize>>,
    diffs: Vec<ProjMap>,
}

impl ProjComplex {
    pub fn zero() -> ProjComplex {
        ProjComplex { lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// `P` concentrated in degree `deg`.
    pub fn stalk(types: &[usize], deg: i64) -> ProjComplex {
        ProjComplex { lo: deg, terms: vec![types.to_vec()], diffs: Vec::new() }.trimmed()
    }

    /// The regular module `A = sum_i A e_i` in degree `deg`.
    pub fn regular(alg: &Algebra, deg: i64) -> ProjComplex {
        ProjComplex::stalk(&(0..alg.n_idempotents()).collect::<Vec<_>>(), deg)
    }

    /// Checks shapes and `d^2 = 0`.
    pub fn new(alg: &Algebra, lo: i64, terms: Vec<Vec<usize>>, diffs: Vec<ProjMap>) -> Result<ProjComplex> {
        if terms.is_empty() && !diffs.is_empty() || !terms.is_empty() && diffs.len() + 1 != terms.len() {
            return Err(Error::Invalid("need one differential between consecutive terms".into()));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.src != terms[k] || d.tgt != terms[k + 1] {
                return Err(Error::Invalid(format!("differential {} has the wrong shape", lo + k as i64)));
            }
        }
        let x = ProjComplex { lo, terms, diffs };
        x.check(alg)?;
        Ok(x.trimmed())
    }

    fn check(&self, alg: &Algebra) -> Result<()> {
        for (k, w) in self.diffs.windows(2).enumerate() {
            if !w[0].then(alg, &w[1]).is_zero() {
                return Err(Error::Invalid(format!("d^2 != 0 at degree {}", self.lo + k as i64)));
            }
        }
        Ok(())
    }

    pub fn is_complex(&self, alg: &Algebra) -> bool {
        self.check(alg).is_ok()
    }

    /// Drops zero terms at both ends.
    fn trimmed(mut self) -> ProjComplex {
        while self.terms.first().is_some_and(Vec::is_empty) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        while self.terms.last().is_some_and(Vec::is_empty) {
            self.terms.pop();
            self.diffs.pop();
        }
        if self.terms.is_empty() {
            return ProjComplex::zero();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest degree with a term; `lo - 1` for the zero complex.
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn terms(&self) -> &[Vec<usize>] {
        &self.terms
    }

    pub fn diffs(&self) -> &[ProjMap] {
        &self.diffs
    }

    pub fn term(&self, deg: i64) -> &[usize] {
        let k = deg - self.lo;
        if k < 0 || k >= self.terms.len() as i64 {
            &[]
        } else {
            &self.terms[k as usize]
        }
    }

    /// `d^deg: X^deg -> X^{deg+1}`, zero outside the stored range.
    pub fn diff(&self, alg: &Algebra, deg: i64) -> ProjMap {
        let k = deg - self.lo;
        if k >= 0 && (k as usize) < self.diffs.len() {
            self.diffs[k as usize].clone()
        } else {
            ProjMap::zero(alg, self.term(deg), self.term(deg + 1))
        }
    }

    /// Multiplicity of each summand type in each degree.
    pub fn multiplicities(&self, n: usize) -> Vec<(i64, Vec<usize>)> {
        self.terms
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let mut m = vec![0; n];
                t.iter().for_each(|&i| m[i] += 1);
                (self.lo + k as i64, m)
            })
            .collect()
    }

    pub fn total_summands(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    /// `X[i]`: `X[i]^p = X^{p+i}` with differential `(-1)^i d`.
    pub fn shift(&self, alg: &Algebra, i: i64) -> ProjComplex {
        let sign = if i.rem_euclid(2) == 1 { alg.field().neg(&alg.field().one()) } else { alg.field().one() };
        ProjComplex {
            lo: self.lo - i,
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(alg, &sign)).collect(),
        }
    }

    pub fn direct_sum(&self, alg: &Algebra, other: &ProjComplex) -> ProjComplex {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let terms = (lo..=hi).map(|d| [self.term(d), other.term(d)].concat()).collect();
        let diffs = (lo..hi).map(|d| self.diff(alg, d).direct_sum(alg, &other.diff(alg, d))).collect();
        ProjComplex { lo, terms, diffs }
    }

    /// Terms in degrees `<= t`.
    pub fn brutal_truncate(&self, t: i64) -> ProjComplex {
        if t >= self.hi() {
            return self.clone();
        }
        if t < self.lo {
            return ProjComplex::zero();
        }
        let keep = (t - self.lo + 1) as usize;
        ProjComplex { lo: self.lo, terms: self.terms[..keep].to_vec(), diffs: self.diffs[..keep - 1].to_vec() }
            .trimmed()
    }

    /// Terms in degrees `>= t`.
    pub fn brutal_truncate_above(&self, t: i64) -> ProjComplex {
        if t <= self.lo {
            return self.clone();
        }
        if t > self.hi() {
            return ProjComplex::zero();
        }
        let skip = (t - self.lo) as usize;
        ProjComplex { lo: t, terms: self.terms[skip..].to_vec(), diffs: self.diffs[skip..].to_vec() }.trimmed()
    }

    /// The map `(X^{<=t-1})[-1] -> X^t` (stalk in degree `t`) whose cone is
    /// `X^{<=t}`; its component in degree `t` is `d^{t-1}`.
    pub fn truncation_map(&self, alg: &Algebra, t: i64) -> (ProjComplex, ProjComplex, ChainMap) {
        let lower = self.brutal_truncate(t - 1).shift(alg, -1);
        let stalk = ProjComplex::stalk(self.term(t), t);
        let components = if lower.is_zero() {
            Vec::new()
        } else {
            (lower.lo..=lower.hi())
                .map(|d| if d == t { self.diff(alg, t - 1) } else { ProjMap::zero(alg, lower.term(d), stalk.term(d)) })
                .collect()
        };
        let f = ChainMap::new(0, components);
        (lower, stalk, f)
    }

    /// Standard mapping cone of `f: X -> Z`: `C^j = X^{j+1} + Z^j` with
    /// differential `[[-d_X, f], [0, d_Z]]`.
    pub fn cone(alg: &Algebra, x: &ProjComplex, z: &ProjComplex, f: &ChainMap) -> Result<ProjComplex> {
        if f.shift() != 0 {
            return Err(Error::NotChainMap("cone needs a degree-zero map".into()));
        }
        if !f.is_chain_map(alg, x, z) {
            return Err(Error::NotChainMap("does not commute with the differentials".into()));
        }
        if x.is_zero() {
            return Ok(z.clone());
        }
        let lo = if z.is_zero() { x.lo - 1 } else { (x.lo - 1).min(z.lo) };
        let hi = if z.is_zero() { x.hi() - 1 } else { (x.hi() - 1).max(z.hi()) };
        let minus = alg.field().neg(&alg.field().one());
        let terms: Vec<Vec<usize>> = (lo..=hi).map(|j| [x.term(j + 1), z.term(j)].concat()).collect();
        let diffs = (lo..hi)
            .map(|j| {
                let a = x.diff(alg, j + 1).scale(alg, &minus);
                let b = f.component(alg, x, z, j + 1);
                let c = ProjMap::zero(alg, z.term(j), x.term(j + 2));
                let d = z.diff(alg, j);
                ProjMap::from_quadrants(alg, &a, &b, &c, &d)
            })
            .collect();
        Ok(ProjComplex { lo, terms, diffs }.trimmed())
    }

    /// Termwise Nakayama functor.
    pub fn nu(&self, nu: &NakayamaFunctor) -> ProjComplex {
        let s = nu.sigma();
        ProjComplex {
            lo: self.lo,
            terms: self.terms.iter().map(|t| t.iter().map(|&i| s.apply(i)).collect()).collect(),
            diffs: self.diffs.iter().map(|d| d.nu(nu)).collect(),
        }
    }

    /// Permutes the summands of term `deg` (`order[new] = old`), adjusting
    /// the adjacent differentials.
    pub fn reorder_term(&self, deg: i64, order: &[usize]) -> ProjComplex {
        let k = deg - self.lo;
        if k < 0 || k as usize >= self.terms.len() {
            return self.clone();
        }
        let k = k as usize;
        let mut out = self.clone();
        out.terms[k] = order.iter().map(|&o| self.terms[k][o]).collect();
        if k > 0 {
            let d = &self.diffs[k - 1];
            out.diffs[k - 1] = d.select(&(0..d.src.len()).collect::<Vec<_>>(), order);
        }
        if k < self.diffs.len() {
            let d = &self.diffs[k];
            out.diffs[k] = d.select(order, &(0..d.tgt.len()).collect::<Vec<_>>());
        }
        out
    }

    /// Splits along connected components of the graph whose vertices are
    /// the summands of all terms and whose edges are nonzero differential
    /// entries. Each piece is a direct summand.
    pub fn split(&self) -> Vec<ProjComplex> {
        let offsets: Vec<usize> = self
            .terms
            .iter()
            .scan(0, |acc, t| {
                let o = *acc;
                *acc += t.len();
                Some(o)
            })
            .collect();
        let total = self.total_summands();
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (k, d) in self.diffs.iter().enumerate() {
            for (s, row) in d.entries.iter().enumerate() {
                for (t, e) in row.iter().enumerate() {
                    if e.iter().any(|c| !c.is_zero()) {
                        let (a, b) = (find(&mut parent, offsets[k] + s), find(&mut parent, offsets[k + 1] + t));
                        parent[a] = b;
                    }
                }
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        for v in 0..total {
            let r = find(&mut parent, v);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        roots
            .iter()
            .map(|&r| {
                let keep: Vec<Vec<usize>> = (0..self.terms.len())
                    .map(|k| (0..self.terms[k].len()).filter(|&s| find(&mut parent, offsets[k] + s) == r).collect())
                    .collect();
                let terms = keep.iter().enumerate().map(|(k, idx)| idx.iter().map(|&s| self.terms[k][s]).collect()).collect();
                let diffs = self.diffs.iter().enumerate().map(|(k, d)| d.select(&keep[k], &keep[k + 1])).collect();
                ProjComplex { lo: self.lo, terms, diffs }.trimmed()
            })
            .collect()
    }

    /// Sorts each term's summands by type.
    pub fn sorted(&self) -> ProjComplex {
        let mut out = self.clone();
        for k in 0..self.terms.len() {
            let mut order: Vec<usize> = (0..self.terms[k].len()).collect();
            order.sort_by_key(|&o| self.terms[k][o]);
            out = out.reorder_term(self.lo + k as i64, &order);
        }
        out
    }
}
