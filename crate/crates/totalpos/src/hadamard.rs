//! Hadamard (entrywise) products, sums, and powers, with executable checks
//! of the closure theorems.
//!
//! The closure landscape: sums and Hadamard products of TN_r *Hankel*
//! matrices stay TN_r, and Hadamard powers `A^{∘t}` of TN_r Hankel matrices
//! stay TN_r for every real `t >= r - 2`. None of this survives for general
//! TN matrices beyond order 2, and the checks here produce the exact
//! counterexample minors when closure fails.

use serde::{Deserialize, Serialize};

use crate::classify::{classify_brute, Classification};
use crate::exact::{Poly, Rat, Series};
use crate::matrix::{Matrix, Ring};
use crate::{Error, Result};

/// How a Hadamard power exponent is given.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PowerExponent {
    /// Exact entrywise integer power.
    Int { k: u32 },
    /// Positive rational exponent; classification of `A^{∘t}` then goes
    /// through certified exponential-polynomial signs.
    Rational { t: Rat },
    /// Keep `t` symbolic and expand entries as truncated series.
    SymbolicT,
}

/// Entrywise product; dimensions must match.
pub fn hadamard_product<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Result<Matrix<R>> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::Dimension(format!(
            "hadamard product of {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let mut rows = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        rows.push((0..a.cols()).map(|j| a.entry(i, j).mul(b.entry(i, j))).collect());
    }
    Matrix::from_rows(rows)
}

/// Entrywise k-th power, exact; needs `k >= 1`.
pub fn hadamard_power_int<R: Ring>(a: &Matrix<R>, k: u32) -> Result<Matrix<R>> {
    if k == 0 {
        return Err(Error::Domain("integer Hadamard power needs k >= 1".into()));
    }
    Ok(a.map(|e| {
        let mut acc = e.clone();
        for _ in 1..k {
            acc = acc.mul(e);
        }
        acc
    }))
}

/// Entrywise symbolic power of a polynomial matrix whose entries all have
/// constant term 1: entry `p(x)` becomes the binomial expansion of
/// `p(x)^t = (1 + (p-1))^t` truncated at `x^order`.
pub fn hadamard_power_series(a: &Matrix<Poly>, order: usize) -> Result<Matrix<Series>> {
    let mut rows = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let mut row = Vec::with_capacity(a.cols());
        for j in 0..a.cols() {
            row.push(entry_power_series(a.entry(i, j), order).map_err(|_| {
                Error::Domain(format!(
                    "entry ({}, {}) has constant term {} != 1, no binomial expansion",
                    i + 1,
                    j + 1,
                    a.entry(i, j).coeff(0)
                ))
            })?);
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

fn entry_power_series(p: &Poly, order: usize) -> Result<Series> {
    if p.coeff(0) != Rat::one() {
        return Err(Error::Domain("constant term must be 1".into()));
    }
    let q = p - &Poly::one(); // vanishes at x = 0, so q^k starts at x^k
    let mut coeffs = vec![Poly::zero(); order + 1];
    coeffs[0] = Poly::one();
    let mut qk = q.clone();
    let mut k_fact = Rat::one();
    for k in 1..=order {
        k_fact = &k_fact * &Rat::from(k as i64);
        if qk.is_zero() {
            break;
        }
        let ff = Poly::falling_factorial(k);
        for (j, c) in qk.coeffs().iter().enumerate().take(order + 1) {
            if !c.is_zero() {
                coeffs[j] = &coeffs[j] + &ff.scale(&(c / &k_fact));
            }
        }
        qk = &qk * &q;
    }
    Ok(Series::new(order, coeffs))
}

/// Substitute an integer `t = m` into every series coefficient of a symbolic
/// Hadamard power, giving the x-polynomial truncation it predicts.
pub fn series_matrix_at(a: &Matrix<Series>, t: &Rat) -> Matrix<Poly> {
    a.map(|s| Poly::new(s.coeffs().iter().map(|c| c.eval(t)).collect()))
}

/// Outcome of one closure check: both inputs, the combined matrix, and
/// whether a theorem-backed expectation was violated.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClosureReport {
    pub left: Classification,
    pub right: Classification,
    pub combined: Classification,
    /// The order r the check was asked about.
    pub order_checked: usize,
    /// Both inputs are square Hankel matrices.
    pub hankel_inputs: bool,
    /// The closure theorem's hypotheses held for the inputs.
    pub applicable: bool,
    /// Hypotheses held but the conclusion failed. Never set by the shipped
    /// theorems; a fired flag is a bug report.
    pub violation: bool,
    /// For the TN_2 product check: the strict variant's hypotheses held
    /// (one input TP_2, the other TP_1 and TN_2) but the product was not
    /// TP_2.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub strict_violation: bool,
}

fn closure_report(
    a: &Matrix<Rat>,
    b: &Matrix<Rat>,
    combined: Matrix<Rat>,
    r: usize,
) -> ClosureReport {
    let left = classify_brute(a);
    let right = classify_brute(b);
    let combined = classify_brute(&combined);
    let hankel_inputs = a.is_square() && a.is_hankel() && b.is_square() && b.is_hankel();
    let applicable = hankel_inputs && left.tn_order >= r && right.tn_order >= r;
    let violation = applicable && combined.tn_order < r;
    ClosureReport {
        left,
        right,
        combined,
        order_checked: r,
        hankel_inputs,
        applicable,
        violation,
        strict_violation: false,
    }
}

/// Check "sum of two TN_r Hankel matrices is TN_r" on a concrete pair.
/// Non-Hankel inputs are classified all the same; they just cannot make the
/// violation flag fire.
pub fn check_sum_closure(a: &Matrix<Rat>, b: &Matrix<Rat>, r: usize) -> Result<ClosureReport> {
    Ok(closure_report(a, b, a.add(b)?, r))
}

/// Check "Hadamard product of two TN_r Hankel matrices is TN_r".
pub fn check_product_closure(
    a: &Matrix<Rat>,
    b: &Matrix<Rat>,
    r: usize,
) -> Result<ClosureReport> {
    Ok(closure_report(a, b, hadamard_product(a, b)?, r))
}

/// Check the order-2 product facts, which need no Hankel hypothesis: the
/// Hadamard product of TN_2 matrices is TN_2, and of a TP_2 matrix with a
/// TP_1-and-TN_2 matrix is TP_2.
pub fn check_tn2_product(a: &Matrix<Rat>, b: &Matrix<Rat>) -> Result<ClosureReport> {
    let left = classify_brute(a);
    let right = classify_brute(b);
    let combined = classify_brute(&hadamard_product(a, b)?);
    let cap = a.rows().min(a.cols()).min(2);
    let applicable = left.tn_order >= cap && right.tn_order >= cap;
    let violation = applicable && combined.tn_order < cap;
    let strict_hyp = (left.tp_order >= cap && right.tp_order >= 1 && right.tn_order >= cap)
        || (right.tp_order >= cap && left.tp_order >= 1 && left.tn_order >= cap);
    let strict_violation = strict_hyp && combined.tp_order < cap;
    Ok(ClosureReport {
        left,
        right,
        combined,
        order_checked: 2,
        hankel_inputs: a.is_square() && a.is_hankel() && b.is_square() && b.is_hankel(),
        applicable,
        violation,
        strict_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binomial_series;
    use crate::matrix::hankel_from;

    fn rat_mat(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn product_examples() {
        let j = rat_mat(&[&[1, 1], &[1, 1]]);
        assert_eq!(hadamard_product(&j, &j).unwrap(), j);

        let a = rat_mat(&[&[2, 2, 1, 1], &[2, 2, 1, 1], &[1, 1, 2, 2], &[1, 1, 2, 2]]);
        let b = rat_mat(&[&[2, 1, 1, 0], &[1, 2, 2, 1], &[1, 2, 2, 1], &[0, 1, 1, 2]]);
        let ab = hadamard_product(&a, &b).unwrap();
        assert_eq!(
            ab,
            rat_mat(&[&[4, 2, 1, 0], &[2, 4, 2, 1], &[1, 2, 4, 2], &[0, 1, 2, 4]])
        );

        let w = rat_mat(&[&[1, 1, 0], &[1, 1, 1], &[1, 1, 1]]);
        let wwt = hadamard_product(&w, &w.transpose()).unwrap();
        assert_eq!(wwt, rat_mat(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]));
        assert_eq!(wwt.det().unwrap(), Rat::from(-1));

        assert!(hadamard_product(&j, &w).is_err());
    }

    #[test]
    fn integer_power() {
        let a = rat_mat(&[&[1, 2], &[3, 4]]);
        assert_eq!(hadamard_power_int(&a, 1).unwrap(), a);
        assert_eq!(
            hadamard_power_int(&a, 2).unwrap(),
            hadamard_product(&a, &a).unwrap()
        );
        assert!(hadamard_power_int(&a, 0).is_err());

        // imported 4x4 TP matrix whose Hadamard square loses TN
        let f = rat_mat(&[
            &[1, 11, 22, 20],
            &[6, 67, 139, 140],
            &[16, 182, 395, 445],
            &[12, 138, 309, 376],
        ]);
        assert!(classify_brute(&f).is_tp());
        let f2 = hadamard_power_int(&f, 2).unwrap();
        assert_eq!(f2.det().unwrap(), Rat::from(-114904113));
    }

    fn poly_rows(rows: &[&[&[i64]]]) -> Matrix<Poly> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|c| Poly::from_ints(c)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// The 4x4 polynomial matrix (entries 1 + c*x) that is coefficientwise
    /// TN but whose Hadamard square, and every fractional power t > 1, loses
    /// TN for small x.
    fn asym4() -> Matrix<Poly> {
        poly_rows(&[
            &[&[1], &[1], &[1], &[1]],
            &[&[1], &[1, 1], &[1, 2], &[1, 3]],
            &[&[1], &[1, 2], &[1, 4], &[1, 6]],
            &[&[1], &[1, 3], &[1, 8], &[1, 14]],
        ])
    }

    #[test]
    fn polynomial_hadamard_square() {
        let a = asym4();
        let sq = hadamard_power_int(&a, 2).unwrap();
        let d = sq.det().unwrap();
        // det(A∘A) = -16x^4 + 248x^5
        assert_eq!(d, Poly::new(vec![
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::from(-16),
            Rat::from(248),
        ]));
    }

    #[test]
    fn series_power_agrees_with_binomial_series() {
        let a = poly_rows(&[&[&[1, 2], &[1]], &[&[1], &[1, 3]]]);
        let s = hadamard_power_series(&a, 3).unwrap();
        assert_eq!(s.entry(0, 0), &binomial_series(&Rat::from(2), 3));
        assert_eq!(s.entry(1, 1), &binomial_series(&Rat::from(3), 3));
        assert_eq!(s.entry(0, 1), &Series::one(3));
    }

    #[test]
    fn series_power_rejects_wrong_constant_term() {
        let a = poly_rows(&[&[&[2]]]);
        assert!(hadamard_power_series(&a, 2).is_err());
    }

    #[test]
    fn symbolic_determinant_of_asym4() {
        let s = hadamard_power_series(&asym4(), 4).unwrap();
        let d = s.det().unwrap();
        for k in 0..4 {
            assert!(d.coeff(k).is_zero(), "x^{k} coefficient should vanish");
        }
        // x^4 coefficient is 2(t^3 - t^4)
        assert_eq!(d.coeff(4), &Poly::from_ints(&[0, 0, 0, 2, -2]));
    }

    #[test]
    fn series_power_at_integer_matches_integer_power() {
        let a = asym4();
        let s = hadamard_power_series(&a, 4).unwrap();
        for m in 1..=3u32 {
            let exact = hadamard_power_int(&a, m).unwrap();
            let predicted = series_matrix_at(&s, &Rat::from(m as i64));
            for i in 0..4 {
                for j in 0..4 {
                    let e = exact.entry(i, j);
                    let p = predicted.entry(i, j);
                    for k in 0..=4 {
                        assert_eq!(e.coeff(k), p.coeff(k), "m={m} entry ({i},{j}) x^{k}");
                    }
                }
            }
        }
    }

    #[test]
    fn sum_closure_reports() {
        // I + J: symmetric positive definite inputs, but not Hankel, and the
        // sum drops to TN_1: no violation because the hypothesis fails
        let i = rat_mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let j = rat_mat(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        let rep = check_sum_closure(&i, &j, 3).unwrap();
        assert!(rep.left.is_tn() && rep.right.is_tn());
        assert_eq!(rep.combined.tn_order, 1);
        assert!(!rep.hankel_inputs);
        assert!(!rep.applicable);
        assert!(!rep.violation);

        // Hankel TN + factorial Hankel: sum is TP
        let jw = rat_mat(&[&[2, 3, 5], &[3, 5, 9], &[5, 9, 17]]);
        let fact = crate::classify::factorial_hankel(3);
        let rep = check_sum_closure(&jw, &fact, 3).unwrap();
        assert!(rep.applicable);
        assert!(!rep.violation);
        assert_eq!(rep.combined.tp_order, 3);
    }

    #[test]
    fn product_closure_reports() {
        let a = rat_mat(&[&[2, 2, 1, 1], &[2, 2, 1, 1], &[1, 1, 2, 2], &[1, 1, 2, 2]]);
        let b = rat_mat(&[&[2, 1, 1, 0], &[1, 2, 2, 1], &[1, 2, 2, 1], &[0, 1, 1, 2]]);
        let rep = check_product_closure(&a, &b, 4).unwrap();
        // symmetric TN inputs, not Hankel: the product drops to TN_2 with a
        // negative 3x3 minor, and no violation is flagged
        assert!(rep.left.is_tn() && rep.right.is_tn());
        assert!(!rep.hankel_inputs);
        assert!(!rep.violation);
        assert_eq!(rep.combined.tn_order, 2);
        let w = rep.combined.tn_witness.clone().unwrap();
        assert_eq!(w.value, Rat::from(-3));

        // the upper-right contiguous 3x3 minor is the -6 the order-3 failure
        // is usually quoted with
        let ab = hadamard_product(&a, &b).unwrap();
        use crate::matrix::IndexSet;
        let m = ab
            .minor(&IndexSet::new(vec![1, 2, 3]).unwrap(), &IndexSet::new(vec![2, 3, 4]).unwrap())
            .unwrap();
        assert_eq!(m, Rat::from(-6));

        // Hankel pair: closure holds and is flagged applicable
        let h1 = hankel_from(&[2, 3, 5, 9, 17].map(Rat::from), 3).unwrap();
        let h2 = crate::classify::factorial_hankel(3);
        let rep = check_product_closure(&h1, &h2, 3).unwrap();
        assert!(rep.applicable);
        assert!(!rep.violation);
        assert_eq!(rep.combined.tn_order, 3);
    }

    #[test]
    fn tn2_product_reports() {
        let ones = rat_mat(&[&[1, 1], &[1, 1]]);
        let rep = check_tn2_product(&ones, &ones).unwrap();
        assert!(rep.applicable);
        assert!(!rep.violation);
        assert_eq!(rep.combined.tn_order, 2);

        // TP_2 times TP_1-and-TN_2 stays TP_2
        let tp2 = rat_mat(&[&[1, 1, 1], &[1, 2, 3], &[1, 3, 6]]);
        let rep = check_tn2_product(&tp2, &tp2).unwrap();
        assert!(!rep.strict_violation);
        assert!(rep.combined.tp_order >= 2);
    }
}
