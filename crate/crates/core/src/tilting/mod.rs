//! Tilting complexes: verification, endomorphism algebras, two-term search
//! and derived invariants of self-injective algebras.

mod end;
mod generate;
mod invariance;
mod search;

use serde::Serialize;

use crate::algebra::{Algebra, Locality};
use crate::error::{Error, Result};
use crate::homotopy::{iso_in_kb, shift_window, HomSpace, IsoVerdict, ProjComplex};
use crate::k0::k0_matrix;

pub use end::{end_algebra, endomorphism_locality, EndAlgebra};
pub use generate::{generation_search, Direction, Finish, Generation, Step};
pub use invariance::{derived_invariance_report, Check, CheckStatus, InvarianceReport};
pub use search::{enumerate_two_term_tilting, Pruning, SearchBounds, SearchResult, TiltingCandidate};

/// Seed for isomorphism tests inside verification.
const ISO_SEED: u64 = 0x7117;

/// A nonzero class in `Hom(T_s, T_t[shift])` with `shift != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomWitness {
    pub source: usize,
    pub target: usize,
    pub shift: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vanishing {
    pub holds: bool,
    pub witness: Option<HomWitness>,
}

/// Checks `Hom(T, T[i]) = 0` for `i != 0` summand by summand, over the
/// exact window where these spaces can be nonzero.
pub fn hom_vanishing(alg: &Algebra, summands: &[ProjComplex]) -> Vanishing {
    for (s, x) in summands.iter().enumerate() {
        for (t, y) in summands.iter().enumerate() {
            for k in shift_window(x, y).filter(|&k| k != 0) {
                let dim = HomSpace::new(alg, x, y, k).dim();
                if dim > 0 {
                    let witness = HomWitness { source: s, target: t, shift: k, dim };
                    return Vanishing { holds: false, witness: Some(witness) };
                }
            }
        }
    }
    Vanishing { holds: true, witness: None }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Tilting,
    NotTilting,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingReport {
    pub hom_vanishing: bool,
    pub vanishing_witness: Option<HomWitness>,
    pub k0_matrix: Vec<Vec<i64>>,
    pub k0_unimodular: bool,
    pub generation: Generation,
    pub verdict: Verdict,
}

/// Splits a complex into pieces along zero differential entries after
/// radical reduction; every piece is a direct summand.
pub fn split_summands(alg: &Algebra, x: &ProjComplex) -> Result<Vec<ProjComplex>> {
    Ok(x.radical_reduce(alg)?.split())
}

/// Rejects decomposable or repeated summands.
pub fn check_basic(alg: &Algebra, summands: &[ProjComplex]) -> Result<()> {
    for (s, x) in summands.iter().enumerate() {
        match endomorphism_locality(alg, x)? {
            Locality::Local => {}
            Locality::NotLocal => return Err(Error::Invalid(format!("summand {} is decomposable", s + 1))),
            Locality::Unknown => {
                return Err(Error::Invalid(format!("could not decide whether summand {} is indecomposable", s + 1)))
            }
        }
    }
    let n = alg.n_idempotents();
    for s in 0..summands.len() {
        for t in s + 1..summands.len() {
            let (x, y) = (&summands[s], &summands[t]);
            if crate::k0::dim_vector(x, n) != crate::k0::dim_vector(y, n) {
                continue;
            }
            match iso_in_kb(alg, x, y, ISO_SEED)? {
                IsoVerdict::Isomorphic => {
                    return Err(Error::Invalid(format!("summands {} and {} are isomorphic", s + 1, t + 1)))
                }
                IsoVerdict::NotIsomorphic(_) => {}
                IsoVerdict::Unknown => {
                    return Err(Error::Invalid(format!("could not separate summands {} and {}", s + 1, t + 1)))
                }
            }
        }
    }
    Ok(())
}

/// Decides vanishing and unimodularity exactly and searches for a
/// generation certificate of at most `depth` triangles.
pub fn verify_tilting(alg: &Algebra, summands: &[ProjComplex], depth: usize) -> Result<TiltingReport> {
    check_basic(alg, summands)?;
    verify_basic(alg, summands, depth)
}

/// [`verify_tilting`] for summands already known to be basic.
pub(crate) fn verify_basic(alg: &Algebra, summands: &[ProjComplex], depth: usize) -> Result<TiltingReport> {
    let vanishing = hom_vanishing(alg, summands);
    let k0 = k0_matrix(alg, summands);
    let k0_unimodular = k0.is_unimodular();
    let rows = k0.matrix.to_i64_rows().unwrap_or_default();
    let generation = if vanishing.holds && k0_unimodular {
        generation_search(alg, summands, depth)?
    } else {
        Generation::Skipped
    };
    let verdict = if !vanishing.holds || !k0_unimodular {
        Verdict::NotTilting
    } else if generation.is_certificate() {
        Verdict::Tilting
    } else {
        Verdict::Unknown
    };
    Ok(TiltingReport {
        hom_vanishing: vanishing.holds,
        vanishing_witness: vanishing.witness,
        k0_matrix: rows,
        k0_unimodular,
        generation,
        verdict,
    })
}

/// Degrees in which the sum of the summands has nonzero terms.
pub fn nonzero_degrees(summands: &[ProjComplex]) -> Vec<i64> {
    let mut out: Vec<i64> = summands
        .iter()
        .flat_map(|x| (x.lo()..=x.hi()).filter(move |&d| !x.is_zero() && !x.term(d).is_empty()))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
