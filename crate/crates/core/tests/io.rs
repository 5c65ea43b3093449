mod common;

use agraded::io::{parse_ideal, parse_list, parse_matrix, parse_monomial_ideal, print_binomial_ideal, print_ideal, print_matrix, ParsedIdeal};
use agraded::Error;
use common::{corpus, random_pointed_matrix, rng};

#[test]
fn monomial_ideals_round_trip() {
    for i in corpus(100) {
        let text = print_ideal(&i);
        assert_eq!(parse_monomial_ideal(&text).unwrap(), i, "{text}");
    }
}

#[test]
fn matrices_round_trip() {
    let mut r = rng(41);
    for _ in 0..50 {
        let a = random_pointed_matrix(&mut r);
        assert_eq!(parse_matrix(&print_matrix(&a)).unwrap(), a);
    }
}

#[test]
fn binomial_files() {
    let text = "vars: x y z\n# comment\nx y\nx^2 - y^2   # trailing comment\nz^3 - 1\n";
    let ParsedIdeal::Binomial(b) = parse_ideal(text).unwrap() else { panic!("binomial expected") };
    assert_eq!(b.monomials().len(), 1);
    assert_eq!(b.binomials().len(), 2);
    assert_eq!(parse_ideal(&print_binomial_ideal(&b)).unwrap(), ParsedIdeal::Binomial(b.clone()));
    assert_eq!(b.to_string(), "(x y, z^3 - 1, x^2 - y^2)");
    // a monomial file read as binomial keeps its generators
    let m = parse_ideal("vars: a b\na b^2\n").unwrap().into_binomial();
    assert!(m.is_monomial());
}

#[test]
fn parse_errors_name_the_line() {
    for (text, line) in [
        ("vars: x\nx y\n", 2),
        ("vars: x y\n\n\nx^a\n", 4),
        ("\n# header below\nvars: x 2x\n", 3),
        ("x\n", 1),
        ("", 1),
    ] {
        match parse_ideal(text) {
            Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
    assert!(matches!(parse_matrix("2 2\n1 x\n0 1\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse_matrix("2 2\n1 1\n0 1\n5 5\n"), Err(Error::Parse { line: 4, .. })));
    assert!(parse_monomial_ideal("vars: x y\nx - y\n").is_err());
    assert_eq!(parse_list::<u32>(" 3,4 ").unwrap(), vec![3, 4]);
}
