use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use selfinj::algebra::gen_nakayama;
use selfinj::homotopy::{random_chain_map, random_complex, ComplexShape, ProjComplex};
use selfinj::k0::{
    are_conjugate, coordinate_matrix, cycle_polynomial, dim_vector, k0_matrix, orientation_self_test, perm_char_poly,
    perm_matrix, realize, verify_intertwining,
};
use selfinj::{Algebra, Field, IntMatrix, Permutation};

fn nak(n: usize, l: usize, f: &Field) -> Algebra {
    gen_nakayama(n, l).to_algebra(f).unwrap()
}

fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cycles).unwrap()
}

/// Cycle lengths found by walking the images directly.
fn walk_cycle_lengths(images: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut out = Vec::new();
    for s in 0..images.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = images[i];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out
}

/// Coefficients (constant first) of the product of `x^l - 1`.
fn product_oracle(lengths: &[usize]) -> Vec<BigInt> {
    let mut acc: Vec<i64> = vec![1];
    for &l in lengths {
        let mut next = vec![0; acc.len() + l];
        for (k, c) in acc.iter().enumerate() {
            next[k + l] += c;
            next[k] -= c;
        }
        acc = next;
    }
    acc.into_iter().map(BigInt::from).collect()
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[test]
fn dim_vectors_of_small_complexes() {
    let a = nak(2, 2, &Field::Rationals);
    assert_eq!(dim_vector(&ProjComplex::stalk(&[1], 0), 2), vec![0, 1]);
    let x = ProjComplex::stalk(&[0], -1).direct_sum(&a, &ProjComplex::stalk(&[1], 0));
    assert_eq!(dim_vector(&x, 2), vec![-1, 1]);
    let y = x.direct_sum(&a, &x.shift(&a, 1));
    assert_eq!(dim_vector(&y, 2), vec![0, 0]);
    assert_eq!(dim_vector(&ProjComplex::zero(), 2), vec![0, 0]);
}

#[test]
fn dim_vector_is_additive_and_alternates_under_shift() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for f in [Field::Rationals, Field::prime(2).unwrap()] {
        for (n, l) in [(2, 2), (2, 3), (3, 4)] {
            let a = nak(n, l, &f);
            for _ in 0..20 {
                let x = random_complex(&a, ComplexShape::default(), &mut rng);
                let y = random_complex(&a, ComplexShape::default(), &mut rng);
                let (dx, dy) = (dim_vector(&x, n), dim_vector(&y, n));
                let sum: Vec<i64> = dx.iter().zip(&dy).map(|(p, q)| p + q).collect();
                assert_eq!(dim_vector(&x.direct_sum(&a, &y), n), sum);
                for i in -3..=3i64 {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let expect: Vec<i64> = dx.iter().map(|v| sign * v).collect();
                    assert_eq!(dim_vector(&x.shift(&a, i), n), expect);
                }
                let g = random_chain_map(&a, &x, &y, 0, 2, &mut rng);
                let cone = ProjComplex::cone(&a, &x, &y, &g).unwrap();
                let dc = dim_vector(&cone, n);
                for s in 0..n {
                    assert_eq!(dx[s] - dy[s] + dc[s], 0);
                }
                let reduced = x.radical_reduce(&a).unwrap();
                assert_eq!(dim_vector(&reduced, n), dx);
            }
        }
    }
}

#[test]
fn every_small_vector_is_realized() {
    let a = nak(3, 2, &Field::prime(2).unwrap());
    for v0 in -3..=3 {
        for v1 in -3..=3 {
            for v2 in -3..=3 {
                let v = [v0, v1, v2];
                let x = realize(&a, &v);
                assert!(x.is_complex(&a));
                assert_eq!(dim_vector(&x, 3), v.to_vec());
            }
        }
    }
}

#[test]
fn permutation_matrix_examples() {
    let s = perm(3, &[&[1, 2, 3]]);
    let c = perm_matrix(&s).to_i64_rows().unwrap();
    assert_eq!(c, vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
    assert_eq!(coordinate_matrix(&s), perm_matrix(&s).transpose());
    assert_eq!(perm_matrix(&Permutation::identity(4)), IntMatrix::identity(4));
    let t = perm(3, &[&[1, 2]]);
    let ct = perm_matrix(&t);
    assert_eq!(ct, ct.transpose());
    assert_eq!(ct.mul(&ct).unwrap(), IntMatrix::identity(3));
    assert!(orientation_self_test(&s));
}

#[test]
fn cycle_types() {
    assert_eq!(perm(5, &[&[1, 2, 3], &[4, 5]]).cycle_type(), vec![3, 2]);
    assert_eq!(Permutation::identity(4).cycle_type(), vec![1, 1, 1, 1]);
    assert_eq!(perm(6, &[&[1, 2, 3, 4, 5, 6]]).cycle_type(), vec![6]);
}

#[test]
fn conjugacy_examples() {
    assert!(are_conjugate(&perm(3, &[&[1, 2]]), &perm(3, &[&[2, 3]])));
    assert!(!are_conjugate(&perm(3, &[&[1, 2]]), &perm(3, &[&[1, 2, 3]])));
}

#[test]
fn char_poly_of_every_permutation_up_to_degree_seven() {
    for n in 1..=7 {
        for images in all_perms(n) {
            let s = Permutation::from_images(images.clone()).unwrap();
            let expect = product_oracle(&walk_cycle_lengths(&images));
            let got = perm_char_poly(&s);
            assert_eq!(got.coeffs(), expect.as_slice(), "{s}");
            assert_eq!(cycle_polynomial(&s).coeffs(), expect.as_slice());
        }
    }
}

#[test]
fn conjugacy_agrees_with_char_poly_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for k in 0..200 {
        let n = 1 + k % 6;
        let (a, b) = (Permutation::random(n, &mut rng), Permutation::random(n, &mut rng));
        assert_eq!(are_conjugate(&a, &b), perm_char_poly(&a) == perm_char_poly(&b), "{a} {b}");
    }
}

#[test]
fn permutation_matrices_form_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for k in 0..100 {
        let n = 1 + k % 7;
        let (a, b) = (Permutation::random(n, &mut rng), Permutation::random(n, &mut rng));
        let (ca, cb) = (perm_matrix(&a), perm_matrix(&b));
        // `c_a c_b` is the matrix of "first a, then b".
        assert_eq!(ca.mul(&cb).unwrap(), perm_matrix(&b.compose(&a)));
        assert_eq!(perm_matrix(&a.inverse()), ca.transpose());
        assert_eq!(ca.mul(&perm_matrix(&a.inverse())).unwrap(), IntMatrix::identity(n));
        let (na, nb) = (coordinate_matrix(&a), coordinate_matrix(&b));
        assert_eq!(na.mul(&nb).unwrap(), coordinate_matrix(&a.compose(&b)));
    }
}

#[test]
fn k0_matrix_examples() {
    let a = nak(2, 2, &Field::Rationals);
    let stalks = [ProjComplex::stalk(&[0], 0), ProjComplex::stalk(&[1], 0)];
    assert_eq!(k0_matrix(&a, &stalks).matrix, IntMatrix::identity(2));
    let t = [ProjComplex::stalk(&[0], -1), ProjComplex::stalk(&[1], 0)];
    let c = k0_matrix(&a, &t);
    assert_eq!(c.matrix.to_i64_rows().unwrap(), vec![vec![-1, 0], vec![0, 1]]);
    assert!(c.is_unimodular());
    let short = k0_matrix(&a, &stalks[..1]);
    assert!(!short.is_square());
    assert!(!short.is_unimodular());
    assert_eq!(short.determinant(), None);
}

#[test]
fn intertwining_examples() {
    let s = perm(2, &[&[1, 2]]);
    let id = Permutation::identity(2);
    let i2 = IntMatrix::identity(2);
    let minus = IntMatrix::from_i64(&[&[-1, 0], &[0, -1]]);
    assert!(verify_intertwining(&s, &s, &i2).unwrap());
    assert!(verify_intertwining(&s, &s, &minus).unwrap());
    assert!(!verify_intertwining(&s, &id, &i2).unwrap());
    assert!(verify_intertwining(&s, &s, &IntMatrix::identity(3)).is_err());
}

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle()).prop_map(|v| Permutation::from_images(v).unwrap())
}

fn arb_pair(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| {
        let p = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        (p.clone(), p).prop_map(|(a, b)| (Permutation::from_images(a).unwrap(), Permutation::from_images(b).unwrap()))
    })
}

proptest! {
    #[test]
    fn conjugacy_is_reflexive_and_symmetric((a, b) in arb_pair(7)) {
        prop_assert!(are_conjugate(&a, &a));
        prop_assert_eq!(are_conjugate(&a, &b), are_conjugate(&b, &a));
    }

    #[test]
    fn conjugates_are_conjugate((a, g) in arb_pair(7)) {
        let b = g.compose(&a).compose(&g.inverse());
        prop_assert!(are_conjugate(&a, &b));
        let c = g.compose(&b).compose(&g.inverse());
        prop_assert!(are_conjugate(&a, &c));
    }

    #[test]
    fn coordinate_matrix_moves_basis_vectors(s in arb_perm(8)) {
        prop_assert!(orientation_self_test(&s));
        let n = s.len();
        let m = coordinate_matrix(&s);
        for i in 0..n {
            let mut e = vec![BigInt::from(0); n];
            e[i] = 1.into();
            let image = m.mul_vec(&e).unwrap();
            for (j, v) in image.iter().enumerate() {
                prop_assert_eq!(*v == BigInt::from(1), j == s.apply(i));
            }
        }
    }

    #[test]
    fn intertwining_holds_for_a_relabelling((s, g) in arb_pair(6)) {
        let t = g.inverse().compose(&s).compose(&g);
        prop_assert!(verify_intertwining(&s, &t, &coordinate_matrix(&g)).unwrap());
        let minus = IntMatrix::from_i64_rows(
            &coordinate_matrix(&g).to_i64_rows().unwrap().iter().map(|r| r.iter().map(|v| -v).collect()).collect::<Vec<_>>(),
        );
        prop_assert!(verify_intertwining(&s, &t, &minus).unwrap());
    }
}
