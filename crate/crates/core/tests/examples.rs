//! Worked examples through the public API, one module at a time.

use qpoly::exactpoly::{det_fraction_free, TruncSeries, UniPoly};
use qpoly::jpoly::{
    build_jtable, j_explicit_composition, j_explicit_sequences, j_from_specialized_symfunc, q1_closed_forms,
    reciprocal, Composition,
};
use qpoly::oracles::{
    enumerate_forests, forest_enumerator_poly, level_statistic, parking_enumerator_poly, reciprocal_explicit_check,
    sigma_statistic, Forest, Ranking, Variant, DEFAULT_CAP,
};
use qpoly::qcalc::{q_derivative, qbinomial, qbracket, qbracket_power_base, qfactorial};
use qpoly::qstirling::StirlingTriangle;
use qpoly::symfunc::{elementary, p_nr_monomial, qp_nr_determinant, qp_nr_direct, SymAlphabet, SymSeriesBundle};

fn p(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

#[test]
fn polynomial_basics() {
    assert_eq!(&p(&[1, 1]) * &p(&[1, 1, 1]), p(&[1, 2, 2, 1]));
    assert!((&p(&[2, 1]) - &p(&[2, 1])).is_zero());
    assert_eq!(p(&[1, 1, 1]).compose_power(2), p(&[1, 0, 1, 0, 1]));
    assert_eq!(p(&[2, 3, 2, 1]).reverse(3).unwrap(), p(&[1, 2, 3, 2]));
    let m = vec![vec![p(&[1, 1]), p(&[1])], vec![p(&[0, 1]), p(&[1])]];
    assert_eq!(det_fraction_free(&m), p(&[1]));
    let geometric = TruncSeries::new(vec![p(&[1]), p(&[-1]), p(&[0]), p(&[0])])
        .invert()
        .unwrap();
    assert_eq!(geometric.coeffs(), &[p(&[1]), p(&[1]), p(&[1]), p(&[1])]);
}

#[test]
fn q_calculus() {
    assert!(qbracket(0).is_zero());
    assert_eq!(qbracket(3), p(&[1, 1, 1]));
    assert_eq!(qfactorial(3), p(&[1, 2, 2, 1]));
    assert_eq!(qbinomial(4, 2), p(&[1, 1, 2, 1, 1]));
    assert!(qbinomial(2, 3).is_zero());
    assert_eq!(qbracket_power_base(3, 2), p(&[1, 0, 1, 0, 1]));
    let t3 = TruncSeries::new(vec![p(&[0]), p(&[0]), p(&[0]), p(&[1])]);
    assert_eq!(q_derivative(&t3, 1).unwrap().coeff(2), &p(&[1, 1, 1]));
    assert_eq!(q_derivative(&t3, 2).unwrap().coeff(1), &p(&[1, 2, 2, 1]));
}

#[test]
fn stirling_numbers() {
    let big_s = StirlingTriangle::second_kind(5);
    assert_eq!(big_s.get(5, 1), &p(&[1]));
    assert_eq!(big_s.get(3, 2), &p(&[2, 1]));
    assert_eq!(big_s.get(4, 2), &p(&[3, 3, 1]));
    let small_s = StirlingTriangle::first_kind(3);
    assert_eq!(small_s.get(2, 1), &p(&[-1]));
    assert_eq!(small_s.get(3, 2), &p(&[-2, -1]));
    assert_eq!(small_s.get(3, 1), &p(&[1, 1]));
}

#[test]
fn symmetric_functions() {
    let ones = SymAlphabet::from_ints(&[1, 1, 1]).unwrap();
    assert_eq!(elementary(&ones, 2), p(&[3]));
    assert_eq!(elementary(&ones, 0), p(&[1]));
    assert_eq!(p_nr_monomial(&ones, 2, 2), p(&[3]));
    let pair = SymAlphabet::from_ints(&[1, 2]).unwrap();
    assert_eq!(p_nr_monomial(&pair, 2, 1), p(&[5]));
    let bundle = SymSeriesBundle::from_alphabet(&pair, 2);
    assert_eq!(bundle.h(2), &p(&[7]));
    // e_1^2 - (1+q) e_2 with e_1 = 3, e_2 = 2
    let want = p(&[7, -2]);
    assert_eq!(qp_nr_direct(&bundle, 2, 1).unwrap(), want);
    assert_eq!(qp_nr_determinant(&bundle, 2, 1).unwrap(), want);
    let five = SymSeriesBundle::from_alphabet(&SymAlphabet::rationals(5), 5);
    assert_eq!(
        qp_nr_direct(&five, 5, 2).unwrap(),
        qp_nr_determinant(&five, 5, 2).unwrap()
    );
}

#[test]
fn j_polynomials() {
    let table = build_jtable(6).unwrap();
    assert_eq!(table.get(3, 1), &p(&[2, 1]));
    assert_eq!(table.get(5, 3), &p(&[2, 3, 4, 3, 2, 1]));
    assert_eq!(table.get(6, 2), &p(&[24, 60, 78, 80, 68, 52, 35, 20, 10, 4, 1]));
    assert!(table.get(2, 3).is_zero());
    assert_eq!(j_explicit_composition(3, 1).unwrap(), p(&[2, 1]));
    assert_eq!(j_explicit_composition(6, 2).unwrap(), *table.get(6, 2));
    assert_eq!(j_explicit_sequences(4, 4).unwrap(), p(&[1]));
    assert!(j_explicit_sequences(3, 0).unwrap().is_zero());
    assert_eq!(j_explicit_sequences(5, 2).unwrap(), p(&[6, 12, 12, 10, 6, 3, 1]));
    assert_eq!(j_from_specialized_symfunc(4, 2).unwrap(), p(&[2, 3, 2, 1]));
    assert_eq!(reciprocal(3, 1, &table).unwrap(), p(&[1, 2]));
    assert_eq!(reciprocal(4, 2, &table).unwrap(), p(&[1, 2, 3, 2]));
    assert_eq!(q1_closed_forms(5, 1).unwrap(), (125u32.into(), 125u32.into()));
}

#[test]
fn brute_force_oracles() {
    assert_eq!(enumerate_forests(3, &[1], DEFAULT_CAP).unwrap().count(), 3);
    assert_eq!(enumerate_forests(4, &[1, 2], DEFAULT_CAP).unwrap().count(), 8);
    let star = Forest::from_parents(vec![0, 0, 1, 1]).unwrap();
    assert_eq!(level_statistic(&star, Ranking::Increasing), 1);
    assert_eq!(level_statistic(&Forest::empty(5).unwrap(), Ranking::Decreasing), 0);
    assert_eq!(
        forest_enumerator_poly(4, &[3], Ranking::Decreasing, Variant::Standard, DEFAULT_CAP).unwrap(),
        p(&[6, 6, 3, 1])
    );
    assert_eq!(parking_enumerator_poly(2, 2, DEFAULT_CAP).unwrap(), p(&[1, 2, 3, 2]));
    let u = Composition::new(vec![1, 1, 1]).unwrap();
    assert_eq!(sigma_statistic(&u, Some(2)), 5);
    assert!(reciprocal_explicit_check(9).unwrap().passed());
}
