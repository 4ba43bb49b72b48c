use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use celltrees::linalg::{invariant_factors_checked, rank_checked, IntegerMatrix, RationalMatrix, UniPoly};

fn int_matrix(rows: usize, cols: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-range..=range, cols), rows)
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| int_matrix(n, n, 6))
}

fn rect(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| int_matrix(r, c, 4))
}

fn big(rows: &[Vec<i64>]) -> IntegerMatrix {
    IntegerMatrix::from_rows(rows).unwrap()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// gcd of all j×j minors.
fn minor_gcd(m: &IntegerMatrix, j: usize) -> BigInt {
    use itertools::Itertools;
    let mut g = BigInt::zero();
    for rows in (0..m.rows()).combinations(j) {
        for cols in (0..m.cols()).combinations(j) {
            g = g.gcd(&m.submatrix(&rows, &cols).determinant().unwrap());
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn pdet_is_det_when_nonsingular(rows in square(5)) {
        let m = big(&rows).to_rational();
        let det = m.determinant().unwrap();
        prop_assume!(!det.is_zero());
        prop_assert_eq!(m.pdet().unwrap(), det);
    }

    #[test]
    fn char_poly_is_monic_with_signed_det(rows in square(5)) {
        let m = big(&rows).to_rational();
        let p = m.char_poly().unwrap();
        let n = rows.len();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(n));
        let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
        prop_assert_eq!(p.eval(&BigRational::zero()), sign * m.determinant().unwrap());
        // trace is minus the next coefficient
        let trace: BigRational = (0..n).map(|i| m[(i, i)].clone()).sum();
        prop_assert_eq!(-p.coeffs()[n - 1].clone(), trace);
    }

    #[test]
    fn triangular_char_poly_is_product_of_diagonal(rows in square(5)) {
        let n = rows.len();
        let m = RationalMatrix::from_fn(n, n, |i, j| if i <= j { rat(rows[i][j]) } else { BigRational::zero() });
        let expect = (0..n).fold(UniPoly::one(), |acc, i| acc.mul(&UniPoly::linear_power(&rat(rows[i][i]), 1)));
        prop_assert_eq!(m.char_poly().unwrap(), expect);
    }

    #[test]
    fn pdet_survives_unipotent_conjugation(diag in prop::collection::vec(-5i64..=5, 1..=5), upper in prop::collection::vec(-3i64..=3, 15)) {
        let n = diag.len();
        let mut it = upper.into_iter();
        let nil = RationalMatrix::from_fn(n, n, |i, j| if i < j { rat(it.next().unwrap_or(0)) } else { BigRational::zero() });
        let id = RationalMatrix::identity(n);
        let p = id.add(&nil).unwrap();
        // (I + N)^{-1} = I - N + N^2 - ...
        let mut inv = id.clone();
        let mut term = id.clone();
        for step in 1..n {
            term = term.mul(&nil).unwrap();
            let signed = if step % 2 == 1 { term.scale_rows(&vec![rat(-1); n]) } else { term.clone() };
            inv = inv.add(&signed).unwrap();
        }
        prop_assert_eq!(p.mul(&inv).unwrap(), id);
        let d = RationalMatrix::from_fn(n, n, |i, j| if i == j { rat(diag[i]) } else { BigRational::zero() });
        let conj = p.mul(&d).unwrap().mul(&inv).unwrap();
        let expect: BigRational = diag.iter().filter(|&&v| v != 0).map(|&v| rat(v)).product();
        prop_assert_eq!(conj.pdet().unwrap(), expect);
        prop_assert_eq!(conj.rank(), diag.iter().filter(|&&v| v != 0).count());
    }

    #[test]
    fn rank_is_number_of_invariant_factors(rows in rect(5)) {
        let m = big(&rows);
        let snf = m.smith_normal_form();
        prop_assert_eq!(m.rank(), snf.rank());
        prop_assert_eq!(m.to_rational().rank(), snf.rank());
        prop_assert_eq!(rank_checked(rows.clone()), Some(snf.rank()));
        let big_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        prop_assert_eq!(invariant_factors_checked(big_rows).unwrap(), snf.invariant_factors.clone());
    }

    #[test]
    fn invariant_factors_divide_and_match_minors(rows in int_matrix(3, 4, 5)) {
        let m = big(&rows);
        let f = m.smith_normal_form().invariant_factors;
        for w in f.windows(2) {
            prop_assert!(w[0].is_positive() && (&w[1] % &w[0]).is_zero());
        }
        // d_1 ⋯ d_j = gcd of j×j minors
        let mut prefix = BigInt::one();
        for j in 1..=3 {
            let expect = if j <= f.len() { prefix.clone() * &f[j - 1] } else { BigInt::zero() };
            prop_assert_eq!(minor_gcd(&m, j), expect.clone());
            prefix = expect;
        }
    }

    #[test]
    fn unimodular_det_square_torsion(rows in square(4)) {
        let m = big(&rows);
        let det = m.determinant().unwrap();
        prop_assume!(!det.is_zero());
        prop_assert_eq!(m.smith_normal_form().torsion_order(), det.abs());
    }
}

#[test]
fn overflowing_entries_fall_back_to_bigint() {
    let huge = i64::MAX / 2;
    let rows = vec![vec![huge, huge - 1], vec![huge - 1, huge - 2]];
    assert_eq!(rank_checked(rows.clone()), None);
    let m = big(&rows);
    assert_eq!(m.rank(), 2);
    assert_eq!(m.determinant().unwrap(), BigInt::from(-1));
    assert_eq!(m.smith_normal_form().invariant_factors, vec![BigInt::one(), BigInt::one()]);
}
