use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use selfinj::algebra::gen_nakayama;
use selfinj::homotopy::{iso_in_kb, random_complex, ComplexShape, IsoVerdict, ProjComplex};
use selfinj::io::{
    algebra_from_json, algebra_to_json, complex_to_json, complexes_from_json, field_name, load_algebra, parse_builtin,
    parse_field,
};
use selfinj::{Algebra, Error, Field};

fn nak(n: usize, l: usize, f: &Field) -> Algebra {
    gen_nakayama(n, l).to_algebra(f).unwrap()
}

fn same_table(a: &Algebra, b: &Algebra) -> bool {
    a.dim() == b.dim()
        && a.field() == b.field()
        && a.labels() == b.labels()
        && a.unit() == b.unit()
        && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.mul_basis(i, j) == b.mul_basis(i, j)))
}

#[test]
fn fields_parse_and_print() {
    assert_eq!(parse_field("Q").unwrap(), Field::Rationals);
    assert_eq!(parse_field("Fp:5").unwrap(), Field::prime(5).unwrap());
    assert_eq!(field_name(&parse_field("Fq:2^3").unwrap()), "Fq:2^3");
    assert!(parse_field("Fp:6").is_err());
    assert!(parse_field("R").is_err());
}

#[test]
fn builtin_names() {
    assert_eq!(parse_builtin("N(2,3)"), Some((2, 3)));
    assert_eq!(parse_builtin(" N( 4 , 1 ) "), Some((4, 1)));
    assert_eq!(parse_builtin("N(2)"), None);
    let a = load_algebra("N(3,2)", None, &Field::Rationals).unwrap();
    assert_eq!(a.dim(), 6);
    assert!(load_algebra("N(0,2)", None, &Field::Rationals).is_err());
}

#[test]
fn algebra_documents_round_trip() {
    let f2 = Field::prime(2).unwrap();
    for f in [Field::Rationals, f2.clone(), Field::prime(5).unwrap()] {
        for (n, l) in [(1, 2), (2, 2), (2, 3), (3, 4)] {
            let a = nak(n, l, &f);
            let text = algebra_to_json(&a).to_string();
            let b = algebra_from_json(&text, &Field::Rationals).unwrap();
            assert!(same_table(&a, &b));
            assert_eq!(b.cartan_matrix().unwrap(), a.cartan_matrix().unwrap());
        }
    }
    let big = nak(2, 2, &f2).extend_scalars(2).unwrap();
    let back = algebra_from_json(&algebra_to_json(&big).to_string(), &f2).unwrap();
    assert!(same_table(&big, &back));
    assert_eq!(back.is_self_injective().unwrap(), big.is_self_injective().unwrap());
}

#[test]
fn hand_written_algebra_document() {
    // Q[x]/(x^2 - 1/4) presented on the basis 1, 2x.
    let text = r#"{
        "field": "Q", "dim": 2, "basis": ["1", "y"], "unit": ["1", 0],
        "products": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 0, [[1, "1"]]], [1, 1, [[0, "1"]]]]
    }"#;
    let a = algebra_from_json(text, &Field::Rationals).unwrap();
    assert_eq!(a.dim(), 2);
    assert_eq!(a.radical().unwrap().dim(), 0);

    let text = r#"{ "field": {"p": 3}, "basis": ["1", "x"], "unit": ["1", "0"],
        "products": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 0, [[1, "1"]]], [1, 1, [[0, "2"]]]] }"#;
    let a = algebra_from_json(text, &Field::Rationals).unwrap();
    assert_eq!(a.field(), &Field::prime(3).unwrap());
    assert_eq!(a.radical().unwrap().dim(), 0);

    let text = r#"{ "field": "Q", "dim": 3, "basis": ["1", "x"], "unit": ["1", "0"], "products": [] }"#;
    assert!(matches!(algebra_from_json(text, &Field::Rationals), Err(Error::Invalid(_))));
    assert!(matches!(algebra_from_json("[1, 2", &Field::Rationals), Err(Error::Invalid(_))));
}

#[test]
fn quiver_documents() {
    let text = r#"{ "vertices": 2, "arrows": [[0, 1, "a"], [1, 0, "b"]], "relations": [["a", "b", "a"], ["b", "a", "b"]] }"#;
    let a = algebra_from_json(text, &Field::Rationals).unwrap();
    assert_eq!(a.dim(), 6);
    assert!(a.is_self_injective().unwrap());
    let text = r#"{ "vertices": 3, "arrows": [[0, 1, "a"], [1, 2, "b"], [2, 0, "c"]], "nilpotency": 2 }"#;
    let a = algebra_from_json(text, &Field::prime(2).unwrap()).unwrap();
    assert_eq!(a.dim(), 6);
    assert_eq!(a.nakayama_permutation().unwrap().cycle_type(), vec![3]);
}

#[test]
fn complex_documents() {
    let a = nak(2, 3, &Field::Rationals);
    let text = r#"{ "algebra": "N(2,3)", "lo": -1, "terms": [[0, 1], [1, 0]], "diff": [[-1, 0, 0, ["1/2"]]] }"#;
    let x = &complexes_from_json(text, &a).unwrap()[0];
    assert_eq!(x.lo(), -1);
    assert_eq!(x.terms(), &[vec![1], vec![0]]);
    assert!(!x.diff(&a, -1).is_zero());

    for bad in [
        r#"{ "lo": 0, "terms": [[1]] }"#,
        r#"{ "lo": -1, "terms": [[0, 1], [1, 0]], "diff": [[0, 0, 0, ["1"]]] }"#,
        r#"{ "lo": -1, "terms": [[0, 1], [1, 0]], "diff": [[-1, 1, 0, ["1"]]] }"#,
        r#"{ "lo": -1, "terms": [[0, 1], [1, 0]], "diff": [[-1, 0, 0, ["1", "1"]]] }"#,
        r#"{ "lo": -1, "terms": [[1, 0], [1, 0], [1, 0]], "diff": [[-1, 0, 0, ["1", "0"]], [0, 0, 0, ["1", "0"]]] }"#,
    ] {
        assert!(complexes_from_json(bad, &a).is_err(), "{bad}");
    }

    let list = r#"{ "summands": [{ "lo": 0, "terms": [[1, 0]] }, { "lo": 3, "terms": [[0, 2]] }] }"#;
    let xs = complexes_from_json(list, &a).unwrap();
    assert_eq!(xs.len(), 2);
    assert_eq!(xs[1].term(3), &[1, 1]);
}

#[test]
fn zero_complex_round_trips() {
    let a = nak(2, 2, &Field::Rationals);
    let text = complex_to_json(&a, &ProjComplex::zero()).to_string();
    assert!(complexes_from_json(&text, &a).unwrap()[0].is_zero());
}

fn corpus() -> Vec<Algebra> {
    let mut out = Vec::new();
    for f in [Field::Rationals, Field::prime(2).unwrap(), Field::prime(3).unwrap()] {
        for (n, l) in [(2, 2), (2, 3), (3, 2)] {
            out.push(nak(n, l, &f));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_complexes_round_trip(seed in any::<u64>(), which in 0usize..9) {
        let a = &corpus()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_complex(a, ComplexShape::default(), &mut rng);
        let text = complex_to_json(a, &x).to_string();
        let y = complexes_from_json(&text, a).unwrap().remove(0);
        prop_assert!(y.is_complex(a));
        prop_assert_eq!(&y, &x.sorted());
        prop_assert_eq!(iso_in_kb(a, &x, &y, 1).unwrap(), IsoVerdict::Isomorphic);
    }
}
