//! Certificates that `A` lies in the thick subcategory generated by `T`.
//!
//! Starting from `Z = A`, each step takes the approximation of `Z` by all
//! maps into (or out of) one shift `T[w]` and replaces `Z` by the cone.
//! The chain ends when `Z` is contractible or lies in `add(T[w])`; reading
//! the triangles backwards puts `A` in the thick closure of `T`.

use std::collections::HashSet;

use exactla::Subspace;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::homotopy::{shift_window, ChainMap, HomSpace, ProjComplex, ProjMap};

/// Cones evaluated per search before giving up.
const NODE_BUDGET: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `Z -> T'` with every map `Z -> T_s[w]` as a component.
    Left,
    /// `T' -> Z` with every map `T_s[w] -> Z` as a component.
    Right,
}

/// One triangle of the chain: `Z` is replaced by the cone of its
/// approximation by `copies[s]` copies of `T_s[shift]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub direction: Direction,
    pub shift: i64,
    pub copies: Vec<usize>,
    /// Summands of the radical form of the new `Z`.
    pub remaining: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "end")]
pub enum Finish {
    Contractible,
    InAdd { shift: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Generation {
    Certificate { steps: Vec<Step>, finish: Finish },
    Exhausted { depth: usize },
    /// Not attempted because a necessary condition already failed.
    Skipped,
}

impl Generation {
    pub fn is_certificate(&self) -> bool {
        matches!(self, Generation::Certificate { .. })
    }
}

struct Search<'a> {
    alg: &'a Algebra,
    summands: &'a [ProjComplex],
    nodes: usize,
    seen: HashSet<ProjComplex>,
}

/// Shifts `w` with some `Hom(Z, T_s[w])` or `Hom(T_s[w], Z)` possibly nonzero.
fn shifts(z: &ProjComplex, summands: &[ProjComplex]) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::new();
    for t in summands {
        for w in shift_window(z, t).chain(shift_window(t, z).map(|k| -k)) {
            if !out.contains(&w) {
                out.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

impl Search<'_> {
    /// Is `Z` a summand of a sum of copies of `T[w]` for some `w`?
    fn in_add(&self, z: &ProjComplex) -> Option<i64> {
        let alg = self.alg;
        let f = alg.field();
        let ends = HomSpace::new(alg, z, z, 0);
        let id = ends.normal_form(&ChainMap::identity(alg, z));
        for w in shifts(z, self.summands) {
            let mut through = Vec::new();
            for t in self.summands {
                let out = HomSpace::new(alg, z, t, w).basis(alg);
                if out.is_empty() {
                    continue;
                }
                let back = HomSpace::new(alg, t, z, -w).basis(alg);
                for g in &out {
                    for r in &back {
                        through.push(ends.normal_form(&g.then(alg, z, t, z, r)));
                    }
                }
            }
            if Subspace::span(f, id.len(), &through).contains(&id) {
                return Some(w);
            }
        }
        None
    }

    /// Cone of the approximation of `z` by `T[w]`, in radical form.
    fn step(&self, z: &ProjComplex, direction: Direction, w: i64) -> Result<Option<(ProjComplex, Vec<usize>)>> {
        let alg = self.alg;
        let mut maps: Vec<ProjComplex> = Vec::new();
        let mut comps: Vec<Vec<ProjMap>> = Vec::new();
        let mut copies = Vec::with_capacity(self.summands.len());
        for t in self.summands {
            let tw = t.shift(alg, w);
            let basis = match direction {
                Direction::Left => HomSpace::new(alg, z, t, w).basis(alg),
                Direction::Right => HomSpace::new(alg, t, z, -w).basis(alg),
            };
            copies.push(basis.len());
            for g in basis {
                maps.push(tw.clone());
                comps.push(g.components().to_vec());
            }
        }
        if maps.is_empty() {
            return Ok(None);
        }
        let sum = maps.iter().fold(ProjComplex::zero(), |acc, x| acc.direct_sum(alg, x));
        let cone = match direction {
            Direction::Left => {
                let components = (z.lo()..=z.hi())
                    .map(|d| {
                        let parts: Vec<ProjMap> = maps
                            .iter()
                            .zip(&comps)
                            .map(|(tw, c)| component(alg, z, tw, c, d))
                            .collect();
                        ProjMap::hstack(alg, z.term(d), &parts)
                    })
                    .collect();
                ProjComplex::cone(alg, z, &sum, &ChainMap::new(0, components))?
            }
            Direction::Right => {
                if sum.is_zero() {
                    return Ok(None);
                }
                let components = (sum.lo()..=sum.hi())
                    .map(|d| {
                        let parts: Vec<ProjMap> = maps
                            .iter()
                            .zip(&comps)
                            .map(|(tw, c)| {
                                let a = d - tw.lo();
                                if tw.is_zero() || a < 0 || a as usize >= c.len() {
                                    ProjMap::zero(alg, tw.term(d), z.term(d))
                                } else {
                                    c[a as usize].clone()
                                }
                            })
                            .collect();
                        ProjMap::vstack(alg, z.term(d), &parts)
                    })
                    .collect();
                ProjComplex::cone(alg, &sum, z, &ChainMap::new(0, components))?
            }
        };
        Ok(Some((cone.radical_reduce(alg)?.sorted(), copies)))
    }

    fn run(&mut self, z: &ProjComplex, depth: usize) -> Result<Option<(Vec<Step>, Finish)>> {
        if z.is_zero() {
            return Ok(Some((Vec::new(), Finish::Contractible)));
        }
        if let Some(w) = self.in_add(z) {
            return Ok(Some((Vec::new(), Finish::InAdd { shift: w })));
        }
        if depth == 0 || !self.seen.insert(z.clone()) {
            return Ok(None);
        }
        let mut moves = Vec::new();
        for w in shifts(z, self.summands) {
            for direction in [Direction::Left, Direction::Right] {
                if self.nodes >= NODE_BUDGET {
                    break;
                }
                self.nodes += 1;
                if let Some((next, copies)) = self.step(z, direction, w)? {
                    if next != *z {
                        moves.push((next.total_summands(), direction, w, copies, next));
                    }
                }
            }
        }
        moves.sort_by_key(|m| m.0);
        for (remaining, direction, shift, copies, next) in moves {
            if let Some((mut steps, finish)) = self.run(&next, depth - 1)? {
                steps.insert(0, Step { direction, shift, copies, remaining });
                return Ok(Some((steps, finish)));
            }
        }
        Ok(None)
    }
}

/// Component of `c` (aligned to `z`) out of `Z^d`, into `tw`.
fn component(alg: &Algebra, z: &ProjComplex, tw: &ProjComplex, c: &[ProjMap], d: i64) -> ProjMap {
    let a = d - z.lo();
    if a < 0 || a as usize >= c.len() {
        ProjMap::zero(alg, z.term(d), tw.term(d))
    } else {
        c[a as usize].clone()
    }
}

/// Searches for a chain of at most `depth` approximation triangles from the
/// stalk complex `A` to an object of `add(T[w])` or to zero.
pub fn generation_search(alg: &Algebra, summands: &[ProjComplex], depth: usize) -> Result<Generation> {
    let mut search = Search { alg, summands, nodes: 0, seen: HashSet::new() };
    let start = ProjComplex::regular(alg, 0);
    Ok(match search.run(&start, depth)? {
        Some((steps, finish)) => Generation::Certificate { steps, finish },
        None => Generation::Exhausted { depth },
    })
}
