//! Exhaustive search for two-term tilting complexes `T^{-1} -> T^0` with
//! radical differentials.

use std::collections::VecDeque;

use exactla::{Field, Scalar};
use serde::Serialize;

use super::{endomorphism_locality, hom_vanishing, verify_basic, TiltingReport, Verdict, ISO_SEED};
use crate::algebra::{Algebra, Locality};
use crate::error::{Error, Result};
use crate::homotopy::{iso_in_kb, HomSpace, IsoVerdict, ProjComplex, ProjMap};

/// Largest number of differentials enumerated in one search.
const MAX_CODES_LOG2: f64 = 24.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pruning {
    /// Orbits under invertible scalar row and column operations.
    Orbits,
    /// Orbits under permutations of summands of equal type only.
    Permutations,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    /// Multiplicity of each indecomposable projective in each term.
    pub max_mult: usize,
    /// Coefficients in `[-coeff_range, coeff_range]` over the rationals.
    pub coeff_range: i64,
    /// Triangles allowed in generation certificates.
    pub depth: usize,
    pub pruning: Pruning,
}

impl Default for SearchBounds {
    fn default() -> SearchBounds {
        SearchBounds { max_mult: 1, coeff_range: 2, depth: 4, pruning: Pruning::Orbits }
    }
}

#[derive(Clone, Debug)]
pub struct TiltingCandidate {
    pub summands: Vec<ProjComplex>,
    pub report: TiltingReport,
}

impl TiltingCandidate {
    /// Some summand has two nonzero terms.
    pub fn has_two_term_summand(&self) -> bool {
        self.summands.iter().any(|x| x.terms().len() > 1)
    }

    /// The sum is concentrated in one degree.
    pub fn is_one_degree(&self) -> bool {
        super::nonzero_degrees(&self.summands).len() == 1
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub bounds: SearchBounds,
    /// Differentials covered by the enumeration, pruned or not.
    pub codes: u64,
    /// Orbit representatives that reached the presilting test.
    pub representatives: u64,
    /// Pairwise non-isomorphic indecomposable presilting complexes.
    pub indecomposables: Vec<ProjComplex>,
    /// Pairs the isomorphism test could not separate; kept as distinct.
    pub unresolved_isos: usize,
    pub tilting: Vec<TiltingCandidate>,
    /// Candidates with vanishing and unimodular classes but no certificate.
    pub undecided: Vec<TiltingCandidate>,
    /// Combinations rejected by the unimodularity test.
    pub rejected: usize,
}

/// Coefficient alphabet: digits `0..base` and their scalar values.
struct Alphabet {
    field: Field,
    base: u32,
    offset: i64,
}

impl Alphabet {
    fn new(field: &Field, range: i64) -> Result<Alphabet> {
        match field {
            Field::Rationals => {
                if range < 0 {
                    return Err(Error::Invalid("coefficient range must be nonnegative".into()));
                }
                Ok(Alphabet { field: field.clone(), base: (2 * range + 1) as u32, offset: range })
            }
            Field::Prime(_) => Ok(Alphabet { field: field.clone(), base: field.order().unwrap() as u32, offset: 0 }),
            Field::Galois(_) => Err(Error::Unsupported("two-term search over non-prime finite fields".into())),
        }
    }

    fn value(&self, d: u32) -> Scalar {
        self.field.from_i64(d as i64 - self.offset)
    }

    fn is_prime(&self) -> bool {
        self.field.is_finite()
    }
}

/// Layout of the coefficient vector of a differential `P -> Q`.
struct Layout {
    src: Vec<usize>,
    tgt: Vec<usize>,
    /// Offset and radical basis (block coordinates) of every entry.
    entries: Vec<Vec<(usize, Vec<Vec<Scalar>>)>>,
    len: usize,
}

impl Layout {
    fn new(alg: &Algebra, src: Vec<usize>, tgt: Vec<usize>) -> Result<Layout> {
        let mut len = 0;
        let mut entries = Vec::with_capacity(src.len());
        for &i in &src {
            let mut row = Vec::with_capacity(tgt.len());
            for &j in &tgt {
                let basis = alg.block_radical(i, j)?.basis().to_vec();
                row.push((len, basis.clone()));
                len += basis.len();
            }
            entries.push(row);
        }
        Ok(Layout { src, tgt, entries, len })
    }

    fn digits_of(&self, r: usize, c: usize) -> std::ops::Range<usize> {
        let (o, b) = &self.entries[r][c];
        *o..*o + b.len()
    }

    fn row_is_zero(&self, digits: &[u32], r: usize, zero: u32) -> bool {
        (0..self.tgt.len()).all(|c| digits[self.digits_of(r, c)].iter().all(|&d| d == zero))
    }

    fn col_is_zero(&self, digits: &[u32], c: usize, zero: u32) -> bool {
        (0..self.src.len()).all(|r| digits[self.digits_of(r, c)].iter().all(|&d| d == zero))
    }

    fn complex(&self, alg: &Algebra, alphabet: &Alphabet, digits: &[u32]) -> Result<ProjComplex> {
        let f = alg.field();
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, (o, basis))| {
                        let d = alg.block_dim(self.src[r], self.tgt[c]);
                        let coeffs: Vec<Scalar> = (0..basis.len()).map(|k| alphabet.value(digits[o + k])).collect();
                        exactla::linear_combination(f, &coeffs, basis, d)
                    })
                    .collect()
            })
            .collect();
        let d = ProjMap::from_entries(alg, self.src.clone(), self.tgt.clone(), entries)?;
        ProjComplex::new(alg, -1, vec![self.src.clone(), self.tgt.clone()], vec![d])
    }
}

/// Invertible operations on coefficient vectors.
#[derive(Clone, Copy)]
enum Op {
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    /// `row b += row a`.
    AddRow(usize, usize),
    AddCol(usize, usize),
    ScaleRow(usize, u32),
    ScaleCol(usize, u32),
}

fn same_type_pairs(types: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..types.len() {
        for b in a + 1..types.len() {
            if types[a] == types[b] {
                out.push((a, b));
            }
        }
    }
    out
}

fn primitive_root(p: u32) -> u32 {
    (1..p)
        .find(|&g| {
            let mut x = 1u64;
            (1..p - 1).all(|_| {
                x = x * g as u64 % p as u64;
                x != 1
            })
        })
        .unwrap_or(1)
}

fn generators(layout: &Layout, alphabet: &Alphabet, pruning: Pruning) -> Vec<Op> {
    let mut ops = Vec::new();
    let rows = same_type_pairs(&layout.src);
    let cols = same_type_pairs(&layout.tgt);
    for &(a, b) in &rows {
        ops.push(Op::SwapRows(a, b));
    }
    for &(a, b) in &cols {
        ops.push(Op::SwapCols(a, b));
    }
    if pruning == Pruning::Permutations {
        return ops;
    }
    let scale = if alphabet.is_prime() { primitive_root(alphabet.base) } else { 0 };
    if !alphabet.is_prime() || alphabet.base > 2 {
        // Over the rationals digit 0 stands for the negation.
        ops.extend((0..layout.src.len()).map(|r| Op::ScaleRow(r, scale)));
        ops.extend((0..layout.tgt.len()).map(|c| Op::ScaleCol(c, scale)));
    }
    if alphabet.is_prime() {
        for &(a, b) in &rows {
            ops.push(Op::AddRow(a, b));
            ops.push(Op::AddRow(b, a));
        }
        for &(a, b) in &cols {
            ops.push(Op::AddCol(a, b));
            ops.push(Op::AddCol(b, a));
        }
    }
    ops
}

fn apply(op: Op, layout: &Layout, alphabet: &Alphabet, digits: &[u32]) -> Vec<u32> {
    let q = alphabet.base;
    let mut out = digits.to_vec();
    let map_digit = |d: u32, g: u32| -> u32 {
        if alphabet.is_prime() {
            (d as u64 * g as u64 % q as u64) as u32
        } else {
            q - 1 - d
        }
    };
    match op {
        Op::SwapRows(a, b) => {
            for c in 0..layout.tgt.len() {
                let (ra, rb) = (layout.digits_of(a, c), layout.digits_of(b, c));
                for (x, y) in ra.zip(rb) {
                    out.swap(x, y);
                }
            }
        }
        Op::SwapCols(a, b) => {
            for r in 0..layout.src.len() {
                let (ca, cb) = (layout.digits_of(r, a), layout.digits_of(r, b));
                for (x, y) in ca.zip(cb) {
                    out.swap(x, y);
                }
            }
        }
        Op::AddRow(a, b) => {
            for c in 0..layout.tgt.len() {
                for (x, y) in layout.digits_of(a, c).zip(layout.digits_of(b, c)) {
                    out[y] = (out[y] + digits[x]) % q;
                }
            }
        }
        Op::AddCol(a, b) => {
            for r in 0..layout.src.len() {
                for (x, y) in layout.digits_of(r, a).zip(layout.digits_of(r, b)) {
                    out[y] = (out[y] + digits[x]) % q;
                }
            }
        }
        Op::ScaleRow(r, g) => {
            for c in 0..layout.tgt.len() {
                for x in layout.digits_of(r, c) {
                    out[x] = map_digit(digits[x], g);
                }
            }
        }
        Op::ScaleCol(c, g) => {
            for r in 0..layout.src.len() {
                for x in layout.digits_of(r, c) {
                    out[x] = map_digit(digits[x], g);
                }
            }
        }
    }
    out
}

fn encode(digits: &[u32], q: u32) -> u64 {
    digits.iter().rev().fold(0u64, |acc, &d| acc * q as u64 + d as u64)
}

fn decode(mut code: u64, q: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (code % q as u64) as u32;
            code /= q as u64;
            d
        })
        .collect()
}

fn multiplicity_vectors(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (0..=max).map(move |m| [v.clone(), vec![m]].concat())).collect();
    }
    out
}

fn expand(mult: &[usize]) -> Vec<usize> {
    mult.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat(i).take(m)).collect()
}

struct Collector<'a> {
    alg: &'a Algebra,
    found: Vec<ProjComplex>,
    unresolved: usize,
}

impl Collector<'_> {
    fn offer(&mut self, x: ProjComplex) -> Result<()> {
        for y in &self.found {
            if y.terms() != x.terms() || y.lo() != x.lo() {
                continue;
            }
            match iso_in_kb(self.alg, &x, y, ISO_SEED)? {
                IsoVerdict::Isomorphic => return Ok(()),
                IsoVerdict::NotIsomorphic(_) => {}
                IsoVerdict::Unknown => self.unresolved += 1,
            }
        }
        self.found.push(x);
        Ok(())
    }
}

/// Every two-term tilting complex within the bounds whose summands are
/// indecomposable radical complexes in degrees `-1` and `0`.
pub fn enumerate_two_term_tilting(alg: &Algebra, bounds: SearchBounds) -> Result<SearchResult> {
    let n = alg.n_idempotents();
    let alphabet = Alphabet::new(alg.field(), bounds.coeff_range)?;
    if bounds.max_mult == 0 {
        return Err(Error::Invalid("multiplicity bound must be positive".into()));
    }
    let q = alphabet.base;
    let zero_digit = alphabet.offset as u32;

    let mut collector = Collector { alg, found: Vec::new(), unresolved: 0 };
    for i in 0..n {
        collector.found.push(ProjComplex::stalk(&[i], 0));
        collector.found.push(ProjComplex::stalk(&[i], -1));
    }

    let mut codes = 0u64;
    let mut representatives = 0u64;
    let mults: Vec<Vec<usize>> = multiplicity_vectors(n, bounds.max_mult).into_iter().filter(|m| m.iter().any(|&x| x > 0)).collect();
    let mut layouts = Vec::new();
    let mut planned = 0f64;
    for a in &mults {
        for b in &mults {
            let layout = Layout::new(alg, expand(a), expand(b))?;
            if layout.len > 0 {
                planned += (q as f64).powi(layout.len as i32);
                layouts.push(layout);
            }
        }
    }
    if planned.log2() > MAX_CODES_LOG2 {
        return Err(Error::BoundOverflow(format!(
            "about 2^{:.1} differentials to enumerate; the limit is 2^{MAX_CODES_LOG2}",
            planned.log2()
        )));
    }
    for layout in &layouts {
        let total = (q as u64).pow(layout.len as u32);
        codes += total;
        let ops = generators(layout, &alphabet, bounds.pruning);
        let mut seen = vec![0u64; (total as usize).div_ceil(64)];
        let mark = |seen: &mut [u64], c: u64| -> bool {
            let (w, bit) = ((c / 64) as usize, c % 64);
            let fresh = seen[w] & (1 << bit) == 0;
            seen[w] |= 1 << bit;
            fresh
        };
        for code in 0..total {
            if !mark(&mut seen, code) {
                continue;
            }
            let digits = decode(code, q, layout.len);
            let mut queue = VecDeque::from([digits.clone()]);
            while let Some(d) = queue.pop_front() {
                for &op in &ops {
                    let e = apply(op, layout, &alphabet, &d);
                    if mark(&mut seen, encode(&e, q)) {
                        queue.push_back(e);
                    }
                }
            }
            // A zero row or column splits off a shifted projective.
            if (0..layout.src.len()).any(|r| layout.row_is_zero(&digits, r, zero_digit))
                || (0..layout.tgt.len()).any(|c| layout.col_is_zero(&digits, c, zero_digit))
            {
                continue;
            }
            representatives += 1;
            let x = layout.complex(alg, &alphabet, &digits)?;
            if HomSpace::new(alg, &x, &x, 1).dim() > 0 {
                continue;
            }
            if endomorphism_locality(alg, &x)? != Locality::Local {
                continue;
            }
            collector.offer(x)?;
        }
    }

    let found = collector.found;
    let compatible: Vec<Vec<bool>> = (0..found.len())
        .map(|s| {
            (0..found.len())
                .map(|t| hom_vanishing(alg, &[found[s].clone(), found[t].clone()]).holds)
                .collect()
        })
        .collect();
    let usable: Vec<usize> = (0..found.len()).filter(|&s| compatible[s][s]).collect();

    let mut tilting = Vec::new();
    let mut undecided = Vec::new();
    let mut rejected = 0;
    let mut chosen = Vec::new();
    let mut combos = Vec::new();
    cliques(&usable, &compatible, n, 0, &mut chosen, &mut combos);
    for combo in combos {
        let summands: Vec<ProjComplex> = combo.iter().map(|&s| found[s].clone()).collect();
        let report = verify_basic(alg, &summands, bounds.depth)?;
        match report.verdict {
            Verdict::Tilting => tilting.push(TiltingCandidate { summands, report }),
            Verdict::Unknown => undecided.push(TiltingCandidate { summands, report }),
            Verdict::NotTilting => rejected += 1,
        }
    }
    Ok(SearchResult {
        bounds,
        codes,
        representatives,
        indecomposables: found,
        unresolved_isos: collector.unresolved,
        tilting,
        undecided,
        rejected,
    })
}

/// All `size`-subsets of `pool` (from position `start`) that are pairwise compatible.
fn cliques(
    pool: &[usize],
    compatible: &[Vec<bool>],
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == size {
        out.push(chosen.clone());
        return;
    }
    for k in start..pool.len() {
        let s = pool[k];
        if chosen.iter().all(|&c| compatible[c][s]) {
            chosen.push(s);
            cliques(pool, compatible, size, k + 1, chosen, out);
            chosen.pop();
        }
    }
}
