//! Bound quivers with monomial relations.

use std::collections::HashMap;

use exactla::{Field, Subspace};

use super::{Algebra, Peirce};
use crate::error::{Error, Result};

/// Paths beyond this many basis elements are treated as runaway input.
const MAX_PATHS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A quiver with monomial relations. Relations list arrow labels in the
/// order they are traversed; `nilpotency = Some(l)` kills every path of
/// length `>= l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<String>>,
    pub nilpotency: Option<usize>,
}

/// Cyclic quiver `0 -> 1 -> ... -> n-1 -> 0` with all paths of length `l` zero.
pub fn gen_nakayama(n: usize, l: usize) -> QuiverPresentation {
    let arrows = (0..n)
        .map(|i| Arrow { source: i, target: (i + 1) % n, label: format!("a{}", i + 1) })
        .collect();
    QuiverPresentation { vertices: n, arrows, relations: Vec::new(), nilpotency: Some(l) }
}

impl QuiverPresentation {
    fn relation_indices(&self) -> Result<Vec<Vec<usize>>> {
        let by_label: HashMap<&str, usize> =
            self.arrows.iter().enumerate().map(|(k, a)| (a.label.as_str(), k)).collect();
        if by_label.len() != self.arrows.len() {
            return Err(Error::Invalid("arrow labels must be distinct".into()));
        }
        self.relations
            .iter()
            .map(|rel| {
                if rel.len() < 2 {
                    return Err(Error::Invalid(format!("relation {rel:?} is not admissible: length below 2")));
                }
                let path: Vec<usize> = rel
                    .iter()
                    .map(|l| by_label.get(l.as_str()).copied().ok_or_else(|| Error::Invalid(format!("unknown arrow {l:?}"))))
                    .collect::<Result<_>>()?;
                if path.windows(2).any(|w| self.arrows[w[0]].target != self.arrows[w[1]].source) {
                    return Err(Error::Invalid(format!("relation {rel:?} is not a path")));
                }
                Ok(path)
            })
            .collect()
    }

    /// Path algebra modulo the relations, on the basis of surviving paths.
    pub fn to_algebra(&self, field: &Field) -> Result<Algebra> {
        let n = self.vertices;
        if n == 0 {
            return Err(Error::Invalid("a quiver needs at least one vertex".into()));
        }
        if let Some(a) = self.arrows.iter().find(|a| a.source >= n || a.target >= n) {
            return Err(Error::Invalid(format!("arrow {:?} has an endpoint out of range", a.label)));
        }
        if self.nilpotency == Some(0) {
            return Err(Error::Invalid("nilpotency bound must be positive".into()));
        }
        let relations = self.relation_indices()?;
        let survives = |p: &[usize]| {
            self.nilpotency.map_or(true, |l| p.len() < l)
                && !relations.iter().any(|r| p.windows(r.len()).any(|w| w == r.as_slice()))
        };
        let longest_relation = relations.iter().map(Vec::len).max().unwrap_or(1);
        let runaway = match self.nilpotency {
            Some(_) => usize::MAX,
            // A relation-free walk longer than this revisits a state forever.
            None => (self.arrows.len().max(1)).saturating_pow(longest_relation as u32 - 1) * n + longest_relation,
        };

        // Paths in traversal order, grouped by length.
        let mut paths: Vec<Vec<usize>> = Vec::new();
        let mut frontier: Vec<Vec<usize>> =
            (0..self.arrows.len()).map(|a| vec![a]).filter(|p| survives(p)).collect();
        while !frontier.is_empty() {
            if frontier[0].len() > runaway {
                return Err(Error::Invalid("relations leave the algebra infinite-dimensional".into()));
            }
            if paths.len() + frontier.len() > MAX_PATHS {
                return Err(Error::BoundOverflow(format!("more than {MAX_PATHS} paths")));
            }
            let mut next = Vec::new();
            for p in &frontier {
                let end = self.arrows[*p.last().unwrap()].target;
                for (a, arrow) in self.arrows.iter().enumerate() {
                    if arrow.source == end {
                        let mut q = p.clone();
                        q.push(a);
                        if survives(&q) {
                            next.push(q);
                        }
                    }
                }
            }
            paths.append(&mut frontier);
            frontier = next;
        }

        let dim = n + paths.len();
        let index: HashMap<Vec<usize>, usize> =
            paths.iter().enumerate().map(|(k, p)| (p.clone(), n + k)).collect();
        let source = |p: &[usize]| self.arrows[p[0]].source;
        let target = |p: &[usize]| self.arrows[*p.last().unwrap()].target;

        let mut labels: Vec<String> = (0..n).map(|v| format!("e{}", v + 1)).collect();
        for p in &paths {
            labels.push(p.iter().rev().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join(""));
        }

        // Endpoints of each basis element: (source, target).
        let ends: Vec<(usize, usize)> =
            (0..n).map(|v| (v, v)).chain(paths.iter().map(|p| (source(p), target(p)))).collect();
        let travel = |b: usize| -> &[usize] { if b < n { &[] } else { &paths[b - n] } };

        let one = field.one();
        let mut table = vec![Vec::new(); dim * dim];
        for x in 0..dim {
            for y in 0..dim {
                // x * y means "first y, then x".
                if ends[y].1 != ends[x].0 {
                    continue;
                }
                let product = match (x < n, y < n) {
                    (true, _) => Some(y),
                    (_, true) => Some(x),
                    _ => {
                        let mut q = travel(y).to_vec();
                        q.extend_from_slice(travel(x));
                        index.get(&q).copied()
                    }
                };
                if let Some(k) = product {
                    table[x * dim + y] = vec![(k, one.clone())];
                }
            }
        }
        let mut unit = vec![field.zero(); dim];
        for u in unit.iter_mut().take(n) {
            *u = field.one();
        }

        let mut alg = Algebra::from_table(field, labels, table, unit);
        let radical: Vec<_> = (n..dim).map(|b| alg.basis_vector(b)).collect();
        alg.set_radical(Subspace::span(field, dim, &radical));
        // e_t p e_s = p for a path from s to t.
        let blocks = ends.iter().map(|&(s, t)| (t, s)).collect();
        alg.attach_peirce(Peirce::new(n, (0..n).collect(), blocks))?;
        Ok(alg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let q = Field::Rationals;
        assert_eq!(gen_nakayama(2, 2).to_algebra(&q).unwrap().dim(), 4);
        assert_eq!(gen_nakayama(1, 2).to_algebra(&q).unwrap().dim(), 2);
        let a2 = QuiverPresentation {
            vertices: 2,
            arrows: vec![Arrow { source: 0, target: 1, label: "a".into() }],
            relations: vec![],
            nilpotency: None,
        };
        let alg = a2.to_algebra(&q).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.labels(), ["e1", "e2", "a"]);
    }

    #[test]
    fn relations_cut_paths() {
        let q = Field::prime(2).unwrap();
        let loop_x = QuiverPresentation {
            vertices: 1,
            arrows: vec![Arrow { source: 0, target: 0, label: "x".into() }],
            relations: vec![vec!["x".into(), "x".into(), "x".into()]],
            nilpotency: None,
        };
        assert_eq!(loop_x.to_algebra(&q).unwrap().dim(), 3);
        let free_loop = QuiverPresentation { relations: vec![], ..loop_x.clone() };
        assert!(free_loop.to_algebra(&q).is_err());
        let short = QuiverPresentation { relations: vec![vec!["x".into()]], ..loop_x };
        assert!(short.to_algebra(&q).is_err());
    }
}
