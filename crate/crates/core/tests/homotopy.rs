use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use selfinj::algebra::gen_nakayama;
use selfinj::homotopy::{
    hom_dim_kb, iso_in_kb, random_chain_map, random_complex, ChainMap, ComplexShape, HomSpace, IsoVerdict,
    NotIsoReason, ProjComplex, ProjMap,
};
use selfinj::{Algebra, Field, NakayamaFunctor};

fn nak(n: usize, l: usize, f: &Field) -> Algebra {
    gen_nakayama(n, l).to_algebra(f).unwrap()
}

fn fields() -> Vec<Field> {
    vec![Field::Rationals, Field::prime(2).unwrap(), Field::prime(3).unwrap()]
}

fn small_algebras() -> Vec<Algebra> {
    let mut out = Vec::new();
    for f in fields() {
        for (n, l) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
            out.push(nak(n, l, &f));
        }
    }
    out
}

/// Right multiplication by the arrow `i -> i + 1`, a map `P_{i+1} -> P_i`.
fn arrow_map(alg: &Algebra, i: usize) -> ProjMap {
    let n = alg.n_idempotents();
    let j = (i + 1) % n;
    let b = alg.labels().iter().position(|l| *l == format!("a{}", i + 1)).unwrap();
    let entry = alg.to_block(j, i, &alg.basis_vector(b));
    ProjMap::from_entries(alg, vec![j], vec![i], vec![vec![entry]]).unwrap()
}

#[test]
fn stalk_of_regular_module_has_endomorphisms_of_dimension_dim_a() {
    for alg in small_algebras() {
        let a = ProjComplex::regular(&alg, 0);
        assert_eq!(hom_dim_kb(&alg, &a, &a, 0), alg.dim());
        for k in [-2, -1, 1, 2] {
            assert_eq!(hom_dim_kb(&alg, &a, &a, k), 0);
        }
        let n = alg.n_idempotents();
        for i in 0..n {
            for j in 0..n {
                let (pi, pj) = (ProjComplex::stalk(&[i], 0), ProjComplex::stalk(&[j], 0));
                assert_eq!(hom_dim_kb(&alg, &pi, &pj, 0), alg.block_dim(i, j));
            }
        }
    }
}

#[test]
fn constructors_produce_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for alg in small_algebras() {
        let nu = NakayamaFunctor::for_algebra(&alg).unwrap();
        for _ in 0..4 {
            let x = random_complex(&alg, ComplexShape::default(), &mut rng);
            let y = random_complex(&alg, ComplexShape { lo: 0, ..ComplexShape::default() }, &mut rng);
            assert!(x.is_complex(&alg));
            assert!(x.shift(&alg, 1).is_complex(&alg));
            assert!(x.shift(&alg, -3).is_complex(&alg));
            assert!(x.direct_sum(&alg, &y).is_complex(&alg));
            assert!(x.nu(&nu).is_complex(&alg));
            assert!(x.sorted().is_complex(&alg));
            let r = x.radical_reduce(&alg).unwrap();
            assert!(r.is_complex(&alg));
            assert!(r.is_radical(&alg).unwrap());
            let g = random_chain_map(&alg, &x, &y, 0, 3, &mut rng);
            assert!(g.is_chain_map(&alg, &x, &y));
            assert!(ProjComplex::cone(&alg, &x, &y, &g).unwrap().is_complex(&alg));
        }
    }
}

#[test]
fn cone_of_identity_is_contractible() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for alg in small_algebras() {
        for _ in 0..3 {
            let x = random_complex(&alg, ComplexShape::default(), &mut rng);
            let c = ProjComplex::cone(&alg, &x, &x, &ChainMap::identity(&alg, &x)).unwrap();
            assert!(c.radical_reduce(&alg).unwrap().is_zero());
            assert_eq!(hom_dim_kb(&alg, &c, &c, 0), 0);
        }
    }
}

#[test]
fn truncation_cone_is_brutal_truncation() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for alg in small_algebras() {
        let x = random_complex(&alg, ComplexShape { lo: -1, len: 4, max_summands: 2, range: 2 }, &mut rng);
        if x.is_zero() {
            continue;
        }
        for t in x.lo()..=x.hi() {
            let (lower, stalk, f) = x.truncation_map(&alg, t);
            assert!(f.is_chain_map(&alg, &lower, &stalk));
            let c = ProjComplex::cone(&alg, &lower, &stalk, &f).unwrap();
            assert_eq!(c, x.brutal_truncate(t));
        }
    }
}

#[test]
fn reduction_preserves_morphism_spaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for alg in small_algebras() {
        for _ in 0..3 {
            let x = random_complex(&alg, ComplexShape::default(), &mut rng);
            let y = random_complex(&alg, ComplexShape::default(), &mut rng);
            let rx = x.radical_reduce(&alg).unwrap();
            for k in -2..=2 {
                assert_eq!(hom_dim_kb(&alg, &x, &y, k), hom_dim_kb(&alg, &rx, &y, k));
                assert_eq!(hom_dim_kb(&alg, &y, &x, k), hom_dim_kb(&alg, &y, &rx, k));
            }
            assert_eq!(iso_in_kb(&alg, &x, &rx, 1).unwrap(), IsoVerdict::Isomorphic);
        }
    }
}

#[test]
fn shift_is_an_autoequivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for alg in small_algebras() {
        let x = random_complex(&alg, ComplexShape::default(), &mut rng);
        let y = random_complex(&alg, ComplexShape::default(), &mut rng);
        for k in -2..=2 {
            let base = hom_dim_kb(&alg, &x, &y, k);
            assert_eq!(base, hom_dim_kb(&alg, &x.shift(&alg, 1), &y.shift(&alg, 1), k));
            assert_eq!(base, hom_dim_kb(&alg, &x, &y.shift(&alg, k), 0));
        }
    }
}

#[test]
fn nakayama_functor_is_a_serre_functor() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for alg in small_algebras() {
        let nu = NakayamaFunctor::for_algebra(&alg).unwrap();
        for _ in 0..3 {
            let x = random_complex(&alg, ComplexShape::default(), &mut rng);
            let y = random_complex(&alg, ComplexShape::default(), &mut rng);
            let nx = x.nu(&nu);
            for k in -2..=2 {
                assert_eq!(hom_dim_kb(&alg, &x, &y, k), hom_dim_kb(&alg, &y, &nx, -k));
            }
        }
    }
}

#[test]
fn nakayama_functor_is_functorial_on_chain_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for alg in small_algebras() {
        let nu = NakayamaFunctor::for_algebra(&alg).unwrap();
        let x = random_complex(&alg, ComplexShape::default(), &mut rng);
        let y = random_complex(&alg, ComplexShape::default(), &mut rng);
        let z = random_complex(&alg, ComplexShape::default(), &mut rng);
        let f = random_chain_map(&alg, &x, &y, 0, 3, &mut rng);
        let g = random_chain_map(&alg, &y, &z, 0, 3, &mut rng);
        let (nx, ny, nz) = (x.nu(&nu), y.nu(&nu), z.nu(&nu));
        assert!(f.nu(&nu).is_chain_map(&alg, &nx, &ny));
        let lhs = f.then(&alg, &x, &y, &z, &g).nu(&nu);
        let rhs = f.nu(&nu).then(&alg, &nx, &ny, &nz, &g.nu(&nu));
        assert_eq!(lhs, rhs);
        assert_eq!(ChainMap::identity(&alg, &x).nu(&nu), ChainMap::identity(&alg, &nx));
    }
}

#[test]
fn homotopy_classes_and_coordinates() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for alg in small_algebras() {
        let x = random_complex(&alg, ComplexShape::default(), &mut rng);
        let y = random_complex(&alg, ComplexShape::default(), &mut rng);
        let h = HomSpace::new(&alg, &x, &y, 0);
        let basis = h.basis(&alg);
        assert_eq!(basis.len(), h.dim());
        for (i, b) in basis.iter().enumerate() {
            assert!(b.is_chain_map(&alg, &x, &y));
            let c = h.coordinates(b).unwrap();
            for (j, v) in c.iter().enumerate() {
                assert_eq!(v.is_zero(), i != j);
            }
        }
        // A composite through a contractible cone is null-homotopic.
        let c = ProjComplex::cone(&alg, &x, &x, &ChainMap::identity(&alg, &x)).unwrap();
        let into = random_chain_map(&alg, &x, &c, 0, 3, &mut rng);
        let out = random_chain_map(&alg, &c, &y, 0, 3, &mut rng);
        let through = into.then(&alg, &x, &c, &y, &out);
        assert!(h.is_null_homotopic(&through));
    }
}

#[test]
fn isomorphism_verdicts() {
    let f2 = Field::prime(2).unwrap();
    let alg = nak(2, 3, &f2);
    let p0 = ProjComplex::stalk(&[0], 0);
    let p1 = ProjComplex::stalk(&[1], 0);
    assert_eq!(iso_in_kb(&alg, &p0, &p1, 0).unwrap(), IsoVerdict::NotIsomorphic(NotIsoReason::Invariant));
    assert_eq!(iso_in_kb(&alg, &p0, &p0, 0).unwrap(), IsoVerdict::Isomorphic);

    // P_1 -> P_0 along the arrow versus the zero map: same terms, different objects.
    let arrow = arrow_map(&alg, 0);
    let zero = ProjMap::zero(&alg, &[1], &[0]);
    let linked = ProjComplex::new(&alg, 0, vec![vec![1], vec![0]], vec![arrow]).unwrap();
    let split = ProjComplex::new(&alg, 0, vec![vec![1], vec![0]], vec![zero]).unwrap();
    assert_eq!(iso_in_kb(&alg, &linked, &split, 0).unwrap(), IsoVerdict::NotIsomorphic(NotIsoReason::Exhausted));

    // Scaling a differential gives an isomorphic complex.
    let q = Field::Rationals;
    let alg = nak(2, 3, &q);
    let arrow = arrow_map(&alg, 0);
    let a = ProjComplex::new(&alg, 0, vec![vec![1], vec![0]], vec![arrow.clone()]).unwrap();
    let b = ProjComplex::new(&alg, 0, vec![vec![1], vec![0]], vec![arrow.scale(&alg, &q.from_i64(3))]).unwrap();
    assert_eq!(iso_in_kb(&alg, &a, &b, 0).unwrap(), IsoVerdict::Isomorphic);
}
