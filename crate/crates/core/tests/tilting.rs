use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use selfinj::algebra::{gen_nakayama, Arrow, QuiverPresentation};
use selfinj::homotopy::{iso_in_kb, IsoVerdict, ProjComplex, ProjMap};
use selfinj::k0::{dim_vector, k0_matrix};
use selfinj::tilting::{
    check_basic, derived_invariance_report, end_algebra, enumerate_two_term_tilting, generation_search,
    hom_vanishing, split_summands, verify_tilting, CheckStatus, Finish, Generation, Pruning, SearchBounds, Verdict,
};
use selfinj::{Algebra, Error, Field, IntMatrix, Permutation, Scalar};
use exactla::Subspace;

fn f2() -> Field {
    Field::prime(2).unwrap()
}

fn nak(n: usize, l: usize, f: &Field) -> Algebra {
    gen_nakayama(n, l).to_algebra(f).unwrap()
}

fn stalks(alg: &Algebra, deg: i64) -> Vec<ProjComplex> {
    (0..alg.n_idempotents()).map(|i| ProjComplex::stalk(&[i], deg)).collect()
}

/// `P_{i+1} -> P_i` given by the arrow `i -> i + 1`, in degrees -1 and 0.
fn arrow_complex(alg: &Algebra, i: usize) -> ProjComplex {
    let n = alg.n_idempotents();
    let j = (i + 1) % n;
    let b = alg.labels().iter().position(|l| *l == format!("a{}", i + 1)).unwrap();
    let entry = alg.to_block(j, i, &alg.basis_vector(b));
    let d = ProjMap::from_entries(alg, vec![j], vec![i], vec![vec![entry]]).unwrap();
    ProjComplex::new(alg, -1, vec![vec![j], vec![i]], vec![d]).unwrap()
}

fn flatten(m: &ProjMap) -> Vec<Scalar> {
    let mut out = Vec::new();
    for s in 0..m.src().len() {
        for t in 0..m.tgt().len() {
            out.extend_from_slice(m.entry(s, t));
        }
    }
    out
}

/// Maps between sums of projectives with a single basis coordinate set.
fn hom_basis(alg: &Algebra, src: &[usize], tgt: &[usize]) -> Vec<ProjMap> {
    let mut out = Vec::new();
    for (s, &i) in src.iter().enumerate() {
        for (t, &j) in tgt.iter().enumerate() {
            for k in 0..alg.block_dim(i, j) {
                let mut m = ProjMap::zero(alg, src, tgt);
                let mut v = vec![alg.field().zero(); alg.block_dim(i, j)];
                v[k] = alg.field().one();
                m.set_entry(s, t, v);
                out.push(m);
            }
        }
    }
    out
}

fn span_dim(alg: &Algebra, len: usize, maps: &[ProjMap]) -> usize {
    let vs: Vec<Vec<Scalar>> = maps.iter().map(flatten).collect();
    Subspace::span(alg.field(), len, &vs).dim()
}

/// A complex concentrated in degrees -1 and 0: `(X^-1, X^0, d)`.
fn two_term(alg: &Algebra, x: &ProjComplex) -> (Vec<usize>, Vec<usize>, ProjMap) {
    let (a, b) = (x.term(-1).to_vec(), x.term(0).to_vec());
    let d = if a.is_empty() || b.is_empty() { ProjMap::zero(alg, &a, &b) } else { x.diff(alg, -1) };
    (a, b, d)
}

/// `dim Hom(X, Y[1])` and `dim Hom(X, Y[-1])` for two-term complexes,
/// computed from the terms: the first is `Hom(X^-1, Y^0)` modulo maps
/// factoring through a differential, the second the maps `X^0 -> Y^-1`
/// killed by both differentials.
fn brute_ext(alg: &Algebra, x: &ProjComplex, y: &ProjComplex) -> (usize, usize) {
    let (xa, xb, dx) = two_term(alg, x);
    let (ya, yb, dy) = two_term(alg, y);
    let total = hom_basis(alg, &xa, &yb);
    let len = flatten(&ProjMap::zero(alg, &xa, &yb)).len();
    let mut through: Vec<ProjMap> = hom_basis(alg, &xb, &yb).iter().map(|s| dx.then(alg, s)).collect();
    through.extend(hom_basis(alg, &xa, &ya).iter().map(|t| t.then(alg, &dy)));
    let plus = span_dim(alg, len, &total) - span_dim(alg, len, &through);

    let domain = hom_basis(alg, &xb, &ya);
    let images: Vec<Vec<Scalar>> = domain
        .iter()
        .map(|h| {
            let mut v = flatten(&dx.then(alg, h));
            v.extend(flatten(&h.then(alg, &dy)));
            v
        })
        .collect();
    let width = flatten(&ProjMap::zero(alg, &xa, &ya)).len() + flatten(&ProjMap::zero(alg, &xb, &yb)).len();
    let minus = domain.len() - Subspace::span(alg.field(), width, &images).dim();
    (plus, minus)
}

fn brute_vanishing(alg: &Algebra, summands: &[ProjComplex]) -> bool {
    summands.iter().all(|x| summands.iter().all(|y| brute_ext(alg, x, y) == (0, 0)))
}

/// Determinant by cofactor expansion.
fn det(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|c| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, v)| *v).collect()).collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn same_iso(alg: &Algebra, x: &ProjComplex, y: &ProjComplex) -> bool {
    matches!(iso_in_kb(alg, x, y, 5).unwrap(), IsoVerdict::Isomorphic)
}

#[test]
fn hom_vanishing_examples() {
    let a = nak(2, 3, &f2());
    assert!(hom_vanishing(&a, &stalks(&a, 0)).holds);
    let mut both = stalks(&a, 0);
    both.extend(stalks(&a, -1));
    let v = hom_vanishing(&a, &both);
    assert!(!v.holds);
    let w = v.witness.unwrap();
    assert_eq!(w.shift.abs(), 1);
    assert!(w.dim > 0);
    assert!(hom_vanishing(&a, &stalks(&a, 0)[..1]).holds);
}

#[test]
fn generation_examples() {
    for f in [f2(), Field::Rationals] {
        let a = nak(2, 3, &f);
        let g = generation_search(&a, &stalks(&a, 0), 0).unwrap();
        assert_eq!(g, Generation::Certificate { steps: vec![], finish: Finish::InAdd { shift: 0 } });
        let kk = nak(2, 1, &f);
        let g = generation_search(&kk, &stalks(&kk, 0)[..1], 4).unwrap();
        assert_eq!(g, Generation::Exhausted { depth: 4 });
        let t = [ProjComplex::stalk(&[0], 0), arrow_complex(&a, 0)];
        let g = generation_search(&a, &t, 4).unwrap();
        match g {
            Generation::Certificate { steps, .. } => assert!(steps.len() <= 4),
            other => panic!("no certificate: {other:?}"),
        }
    }
}

#[test]
fn verify_examples() {
    let a = nak(2, 3, &f2());
    let r = verify_tilting(&a, &stalks(&a, 0), 4).unwrap();
    assert_eq!(r.verdict, Verdict::Tilting);
    assert!(r.hom_vanishing && r.k0_unimodular);

    let kk = nak(2, 1, &f2());
    let r = verify_tilting(&kk, &stalks(&kk, 0)[..1], 4).unwrap();
    assert_eq!(r.verdict, Verdict::NotTilting);
    assert!(!r.k0_unimodular);
    assert_eq!(r.generation, Generation::Skipped);

    let t = [ProjComplex::stalk(&[0], 0), arrow_complex(&a, 0)];
    let r = verify_tilting(&a, &t, 4).unwrap();
    assert_eq!(r.verdict, Verdict::Tilting);
    assert_eq!(r.k0_matrix, vec![vec![1, 1], vec![0, -1]]);

    let mut both = stalks(&a, 0);
    both.extend(stalks(&a, -1));
    let r = verify_tilting(&a, &both, 4).unwrap();
    assert_eq!(r.verdict, Verdict::NotTilting);
    assert!(r.vanishing_witness.is_some());
}

#[test]
fn non_basic_input_is_rejected() {
    let a = nak(2, 3, &f2());
    let p = ProjComplex::stalk(&[0], 0);
    assert!(matches!(check_basic(&a, &[p.clone(), p.clone()]), Err(Error::Invalid(_))));
    assert!(matches!(verify_tilting(&a, &[ProjComplex::regular(&a, 0)], 4), Err(Error::Invalid(_))));
    let parts = split_summands(&a, &ProjComplex::regular(&a, 0)).unwrap();
    assert_eq!(parts.len(), 2);
    assert_eq!(verify_tilting(&a, &parts, 4).unwrap().verdict, Verdict::Tilting);
}

#[test]
fn end_algebra_of_the_regular_complex() {
    for f in [f2(), Field::Rationals, Field::prime(3).unwrap()] {
        for (n, l) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
            let a = nak(n, l, &f);
            let b = end_algebra(&a, &stalks(&a, 0)).unwrap();
            assert_eq!(b.algebra.dim(), a.dim());
            assert_eq!(b.algebra.cartan_matrix().unwrap(), a.cartan_matrix().unwrap());
            b.algebra.check_axioms().unwrap();
            let shifted = end_algebra(&a, &stalks(&a, -2)).unwrap();
            assert_eq!(shifted.algebra.dim(), a.dim());
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    assert_eq!(shifted.algebra.mul_basis(i, j), b.algebra.mul_basis(i, j));
                }
            }
            assert_eq!(
                b.algebra.nakayama_permutation().unwrap().cycle_type(),
                a.nakayama_permutation().unwrap().cycle_type()
            );
        }
    }
}

#[test]
fn end_algebra_of_a_two_term_tilting_complex() {
    let a = nak(2, 3, &f2());
    let t = [ProjComplex::stalk(&[0], 0), arrow_complex(&a, 0)];
    let b = end_algebra(&a, &t).unwrap().algebra;
    assert!(b.is_self_injective().unwrap());
    assert!(b.nakayama_permutation().unwrap().is_identity());
    assert!(b.is_weakly_symmetric().unwrap());
    assert_eq!(b.dim(), 6);
}

#[test]
fn decomposable_summands_make_end_algebra_fail() {
    let a = nak(2, 3, &f2());
    let err = end_algebra(&a, &[ProjComplex::regular(&a, 0)]).unwrap_err();
    assert!(matches!(err, Error::NotPrimitive(_)), "{err:?}");
}

#[test]
fn semisimple_algebras_have_only_one_degree_tilting_complexes() {
    let kk = nak(2, 1, &f2());
    let r = enumerate_two_term_tilting(&kk, SearchBounds { max_mult: 2, ..SearchBounds::default() }).unwrap();
    assert!(!r.tilting.is_empty());
    for c in &r.tilting {
        assert!(!c.has_two_term_summand());
        assert_eq!(c.summands.len(), 2);
    }
    // P1, P2, P1[1], P2[1] combine in four ways.
    assert_eq!(r.tilting.len(), 4);
}

#[test]
fn transitive_nakayama_permutation_has_no_two_term_tilting() {
    let a = nak(3, 3, &f2());
    assert!(a.nakayama_permutation().unwrap().is_transitive());
    let r = enumerate_two_term_tilting(&a, SearchBounds::default()).unwrap();
    assert_eq!(r.tilting.len(), 2);
    assert!(r.undecided.is_empty());
    for c in &r.tilting {
        assert!(c.is_one_degree());
    }
}

#[test]
fn symmetric_algebra_has_two_term_tilting_complexes() {
    for f in [f2(), Field::prime(3).unwrap()] {
        let a = nak(2, 3, &f);
        let r = enumerate_two_term_tilting(&a, SearchBounds::default()).unwrap();
        assert_eq!(r.tilting.len(), 6);
        assert_eq!(r.tilting.iter().filter(|c| c.has_two_term_summand()).count(), 4);
        for c in &r.tilting {
            assert_eq!(c.summands.len(), 2);
            let d = k0_matrix(&a, &c.summands).determinant().unwrap();
            assert_eq!(d.abs(), BigInt::from(1));
        }
        let hand = [ProjComplex::stalk(&[0], 0), arrow_complex(&a, 0)];
        assert!(r.tilting.iter().any(|c| {
            c.summands.iter().all(|x| hand.iter().any(|y| same_iso(&a, x, y)))
        }));
    }
}

/// Every set of `n` indecomposables from the search that passes the brute
/// Hom check and has a unimodular dimension matrix is one of the found
/// tilting complexes, and conversely.
#[test]
fn search_agrees_with_brute_force_checks() {
    for (n, l, max_mult) in [(2, 3, 2), (2, 2, 2), (3, 3, 1)] {
        let a = nak(n, l, &f2());
        let r = enumerate_two_term_tilting(&a, SearchBounds { max_mult, ..SearchBounds::default() }).unwrap();
        let ind = &r.indecomposables;
        let mut brute: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in subsets(ind.len(), n) {
            let set: Vec<ProjComplex> = s.iter().map(|&k| ind[k].clone()).collect();
            let cols: Vec<Vec<i64>> = set.iter().map(|x| dim_vector(x, n)).collect();
            let m: Vec<Vec<i64>> = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
            if det(&m).abs() == 1 && brute_vanishing(&a, &set) {
                brute.insert(s);
            }
        }
        let found: BTreeSet<Vec<usize>> = r
            .tilting
            .iter()
            .map(|c| {
                let mut s: Vec<usize> =
                    c.summands.iter().map(|x| ind.iter().position(|y| same_iso(&a, x, y)).unwrap()).collect();
                s.sort_unstable();
                s
            })
            .collect();
        assert_eq!(found, brute, "N({n},{l})");
    }
}

#[test]
fn finer_pruning_finds_the_same_classes() {
    for (n, l, max_mult) in [(2, 3, 1), (2, 2, 2), (3, 2, 1)] {
        let a = nak(n, l, &f2());
        let coarse = enumerate_two_term_tilting(&a, SearchBounds { max_mult, ..SearchBounds::default() }).unwrap();
        let fine = enumerate_two_term_tilting(
            &a,
            SearchBounds { max_mult, pruning: Pruning::Permutations, ..SearchBounds::default() },
        )
        .unwrap();
        assert!(fine.representatives >= coarse.representatives);
        assert_eq!(fine.tilting.len(), coarse.tilting.len());
        for c in &coarse.tilting {
            assert!(fine.tilting.iter().any(|d| {
                c.summands.iter().all(|x| d.summands.iter().any(|y| same_iso(&a, x, y)))
            }));
        }
    }
}

#[test]
fn invariance_report_for_regular_complexes() {
    let a = nak(2, 3, &f2());
    let r = derived_invariance_report(&a, &stalks(&a, 0), 4).unwrap();
    assert!(r.all_pass(), "{:?}", r.failures());
    assert!(r.check("weakly_symmetric_preserved").is_some());
    assert!(r.check("symmetric_preserved").is_some());

    let a = nak(2, 2, &f2());
    let r = derived_invariance_report(&a, &stalks(&a, -3), 4).unwrap();
    assert!(r.all_pass(), "{:?}", r.failures());
    let s = Permutation::from_cycles(2, &[&[1, 2]]).unwrap();
    assert_eq!(r.sigma_a, s);
    assert_eq!(r.sigma_b, Some(s));
    assert_eq!(k0_matrix(&a, &stalks(&a, -3)).matrix, IntMatrix::from_i64(&[&[-1, 0], &[0, -1]]));
    assert_eq!(r.check("intertwining").unwrap().status, CheckStatus::Pass);
}

#[test]
fn invariance_report_for_every_found_tilting_complex() {
    for (n, l) in [(2, 3), (2, 2), (3, 4), (4, 3)] {
        let a = nak(n, l, &f2());
        let r = enumerate_two_term_tilting(&a, SearchBounds::default()).unwrap();
        for c in &r.tilting {
            let rep = derived_invariance_report(&a, &c.summands, 4).unwrap();
            assert!(rep.all_pass(), "N({n},{l}): {:?}", rep.failures());
        }
    }
}

#[test]
fn invariance_report_needs_self_injective_algebras() {
    let a2 = QuiverPresentation {
        vertices: 2,
        arrows: vec![Arrow { source: 0, target: 1, label: "a".into() }],
        relations: vec![],
        nilpotency: None,
    }
    .to_algebra(&f2())
    .unwrap();
    let err = derived_invariance_report(&a2, &stalks(&a2, 0), 4).unwrap_err();
    assert_eq!(err, Error::NotSelfInjective);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shifted_regular_complexes_are_tilting(k in -4i64..=4, which in 0usize..4) {
        let (n, l) = [(1, 2), (2, 2), (2, 3), (3, 2)][which];
        let a = nak(n, l, &f2());
        let t = stalks(&a, k);
        let r = verify_tilting(&a, &t, 2).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Tilting);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let det = k0_matrix(&a, &t).determinant().unwrap();
        prop_assert_eq!(det, BigInt::from(if n % 2 == 0 { 1 } else { sign }));
    }

    #[test]
    fn library_vanishing_matches_brute_force(picks in proptest::collection::vec(0usize..64, 1..4)) {
        let a = nak(2, 3, &f2());
        let r = enumerate_two_term_tilting(&a, SearchBounds::default()).unwrap();
        let ind = &r.indecomposables;
        let set: Vec<ProjComplex> = picks.iter().map(|&k| ind[k % ind.len()].clone()).collect();
        prop_assert_eq!(hom_vanishing(&a, &set).holds, brute_vanishing(&a, &set));
    }
}
