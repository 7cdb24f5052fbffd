//! Total-positivity and total-nonnegativity classification.
//!
//! A matrix is TN_r (TP_r) when every minor of size at most `r` is
//! nonnegative (positive), with `r` capped at `min(m, n)`. The brute-force
//! classifier enumerates minors by increasing size and stops each track at
//! its first failure, reporting that minor as an exact witness. The fast
//! criteria (initial minors, contiguous minors, and the mixed form) certify
//! strict positivity only: they are sound for TP_r but say nothing about TN,
//! and deliberately return `false` as soon as positivity fails.
//!
//! Hankel matrices get a dedicated classifier that inspects only principal
//! minors of `A` and of the shifted matrix `A'`, which characterize TN_r and
//! TP_r for real Hankel matrices.

use serde::{Deserialize, Serialize};

use crate::exact::{Poly, Rat};
use crate::matrix::{hankel_from, IndexSet, Matrix, Ring};
use crate::{Error, Result};

/// A failing minor: rows, columns, and its exact value.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub rows: IndexSet,
    pub cols: IndexSet,
    pub value: Rat,
}

/// Largest orders r with the matrix TN_r / TP_r, plus failing minors one size
/// up (absent when the matrix is fully TN / TP).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Classification {
    pub tp_order: usize,
    pub tn_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tp_witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tn_witness: Option<Witness>,
}

impl Classification {
    /// True when the matrix is TN of full order min(m, n).
    pub fn is_tn(&self) -> bool {
        self.tn_witness.is_none()
    }

    pub fn is_tp(&self) -> bool {
        self.tp_witness.is_none()
    }
}

/// Which certification route produced a positivity claim.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Criterion {
    /// Exhaustive minor enumeration; the only route that certifies TN.
    Brute,
    /// All m*n initial minors positive implies TP.
    GpInitial,
    /// All contiguous minors of size <= r positive implies TP_r.
    FeketeContiguous,
    /// Initial minors of size <= r-1 and contiguous minors of size r.
    TprMixed,
    /// Principal minors of a Hankel matrix and its shift.
    HankelPrincipal,
}

/// Classify by enumerating every minor, sizes 1 through min(m, n), each size
/// in lexicographic (row set, column set) order.
pub fn classify_brute(a: &Matrix<Rat>) -> Classification {
    let cap = a.rows().min(a.cols());
    let mut out = Classification {
        tp_order: 0,
        tn_order: 0,
        tp_witness: None,
        tn_witness: None,
    };
    for size in 1..=cap {
        if out.tp_witness.is_some() && out.tn_witness.is_some() {
            break;
        }
        'scan: for rows in IndexSet::combinations(a.rows(), size) {
            for cols in IndexSet::combinations(a.cols(), size) {
                let value = a
                    .minor(&rows, &cols)
                    .expect("index sets generated in range; sizes <= 8 in practice");
                if out.tp_witness.is_none() && !value.is_positive() {
                    out.tp_witness =
                        Some(Witness { rows: rows.clone(), cols: cols.clone(), value: value.clone() });
                }
                if out.tn_witness.is_none() && value.is_negative() {
                    out.tn_witness = Some(Witness { rows, cols, value });
                    break 'scan; // a negative minor fails both tracks
                }
                if out.tp_witness.is_some() && out.tn_witness.is_some() {
                    break 'scan;
                }
            }
        }
        if out.tp_witness.is_none() {
            out.tp_order = size;
        }
        if out.tn_witness.is_none() {
            out.tn_order = size;
        }
    }
    out
}

/// All (rows, cols, minor) triples of one size, lexicographic order.
pub fn all_minors<R: Ring>(
    a: &Matrix<R>,
    size: usize,
) -> Result<Vec<(IndexSet, IndexSet, R)>> {
    if size == 0 || size > a.rows().min(a.cols()) {
        return Err(Error::Domain(format!(
            "minor size {size} out of range for {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let mut out = Vec::new();
    for rows in IndexSet::combinations(a.rows(), size) {
        for cols in IndexSet::combinations(a.cols(), size) {
            let v = a.minor(&rows, &cols)?;
            out.push((rows.clone(), cols, v));
        }
    }
    Ok(out)
}

/// The unique initial submatrix whose lower-right corner is (i, j), 1-based:
/// square of size min(i, j) with contiguous rows and columns, at least one of
/// which starts at 1.
fn initial_at(i: usize, j: usize) -> (IndexSet, IndexSet) {
    let k = i.min(j);
    let rows = IndexSet::interval(i - k + 1, k).expect("k >= 1");
    let cols = IndexSet::interval(j - k + 1, k).expect("k >= 1");
    (rows, cols)
}

/// All m*n initial minors positive; sufficient for full TP.
pub fn is_tp_gp(a: &Matrix<Rat>) -> bool {
    for i in 1..=a.rows() {
        for j in 1..=a.cols() {
            let (rows, cols) = initial_at(i, j);
            let v = a.minor(&rows, &cols).expect("initial sets in range");
            if !v.is_positive() {
                return false;
            }
        }
    }
    true
}

/// All contiguous minors of size at most r positive; sufficient for TP_r.
pub fn is_tpr_fekete(a: &Matrix<Rat>, r: usize) -> Result<bool> {
    check_order_range(a, r)?;
    for size in 1..=r {
        for rows in IndexSet::contiguous_windows(a.rows(), size) {
            for cols in IndexSet::contiguous_windows(a.cols(), size) {
                if !a.minor(&rows, &cols)?.is_positive() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Initial minors of size at most r-1 positive and contiguous minors of size
/// exactly r positive; sufficient for TP_r.
pub fn is_tpr_mixed(a: &Matrix<Rat>, r: usize) -> Result<bool> {
    check_order_range(a, r)?;
    for i in 1..=a.rows() {
        for j in 1..=a.cols() {
            if i.min(j) >= r {
                continue; // initial minor larger than r-1
            }
            let (rows, cols) = initial_at(i, j);
            if !a.minor(&rows, &cols)?.is_positive() {
                return Ok(false);
            }
        }
    }
    for rows in IndexSet::contiguous_windows(a.rows(), r) {
        for cols in IndexSet::contiguous_windows(a.cols(), r) {
            if !a.minor(&rows, &cols)?.is_positive() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_order_range<R: Ring>(a: &Matrix<R>, r: usize) -> Result<()> {
    let cap = a.rows().min(a.cols());
    if r == 0 || r > cap {
        return Err(Error::Domain(format!("order r={r} outside 1..={cap}")));
    }
    Ok(())
}

/// Classify a square Hankel matrix from principal minors of `A` and of the
/// shifted Hankel matrix `A'` (drop the first sequence element) only.
/// Agrees with [`classify_brute`] on the orders; witnesses are principal
/// minors of `A`, or shifted-principal minors reported as (I, I+1) of `A`.
pub fn classify_hankel(a: &Matrix<Rat>) -> Result<Classification> {
    if !a.is_square() || !a.is_hankel() {
        return Err(Error::Domain("classify_hankel needs a square Hankel matrix".into()));
    }
    let n = a.rows();
    let mut out = Classification {
        tp_order: 0,
        tn_order: 0,
        tp_witness: None,
        tn_witness: None,
    };
    for size in 1..=n {
        if out.tp_witness.is_some() && out.tn_witness.is_some() {
            break;
        }
        // principal minors of A, then principal minors of A' seen as the
        // minor of A with columns shifted one step right
        let principal = IndexSet::combinations(n, size).map(|i| (i.clone(), i));
        let shifted = IndexSet::combinations(n - 1, size).map(|i| {
            let cols = IndexSet::new(i.indices().iter().map(|&v| v + 1).collect())
                .expect("shift keeps indices strictly increasing");
            (i, cols)
        });
        for (rows, cols) in principal.chain(shifted) {
            let value = a.minor(&rows, &cols)?;
            if out.tp_witness.is_none() && !value.is_positive() {
                out.tp_witness =
                    Some(Witness { rows: rows.clone(), cols: cols.clone(), value: value.clone() });
            }
            if out.tn_witness.is_none() && value.is_negative() {
                out.tn_witness = Some(Witness { rows, cols, value });
            }
            if out.tp_witness.is_some() && out.tn_witness.is_some() {
                break;
            }
        }
        if out.tp_witness.is_none() {
            out.tp_order = size;
        }
        if out.tn_witness.is_none() {
            out.tn_order = size;
        }
    }
    Ok(out)
}

/// Additive-core predicate: every entry is zero except possibly the
/// upper-left and lower-right corners, which must be nonnegative. These are
/// exactly the matrices whose addition preserves TN (for sizes >= 2).
pub fn is_additive_core(a: &Matrix<Rat>) -> bool {
    let (m, n) = (a.rows(), a.cols());
    for i in 0..m {
        for j in 0..n {
            let corner = (i == 0 && j == 0) || (i == m - 1 && j == n - 1);
            let e = a.entry(i, j);
            if corner {
                if e.is_negative() {
                    return false;
                }
            } else if !Ring::is_zero(e) {
                return false;
            }
        }
    }
    true
}

/// The Hankel matrix of the factorial sequence 0!, 1!, 2!, ...; TP at every
/// size because the factorials are a Stieltjes moment sequence of a measure
/// with infinite support.
pub fn factorial_hankel(n: usize) -> Matrix<Rat> {
    let mut seq = Vec::with_capacity(2 * n - 1);
    let mut f = Rat::one();
    seq.push(f.clone());
    for k in 1..2 * n - 1 {
        f = &f * &Rat::from(k as i64);
        seq.push(f.clone());
    }
    hankel_from(&seq, n).expect("sequence length matches")
}

/// Add `eps` times the factorial-moment Hankel matrix. For TN_r Hankel input
/// and any `eps > 0` the sum is TP_r (TN plus TP Hankel is TP).
pub fn perturb_to_tp(a: &Matrix<Rat>, eps: &Rat) -> Result<Matrix<Rat>> {
    if !a.is_square() || !a.is_hankel() {
        return Err(Error::Domain("perturb_to_tp needs a square Hankel matrix".into()));
    }
    if !eps.is_positive() {
        return Err(Error::Domain("perturbation scale must be positive".into()));
    }
    let b = factorial_hankel(a.rows()).map(|v| v * eps);
    a.add(&b)
}

/// Check that every minor of each size has only nonnegative polynomial
/// coefficients (the coefficientwise order on R[x]); returns the largest
/// order r for which this holds, capped at min(m, n).
pub fn coeffwise_tn_order(a: &Matrix<Poly>) -> Result<usize> {
    let cap = a.rows().min(a.cols());
    for size in 1..=cap {
        for (_, _, minor) in all_minors(a, size)? {
            if !minor.is_coeffwise_nonneg() {
                return Ok(size - 1);
            }
        }
    }
    Ok(cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat_mat(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_int_rows(rows).unwrap()
    }

    fn wit(w: &Witness) -> (Vec<usize>, Vec<usize>, Rat) {
        (w.rows.indices().to_vec(), w.cols.indices().to_vec(), w.value.clone())
    }

    #[test]
    fn identity_plus_ones_fails_tn2() {
        // I + J: symmetric, positive semidefinite, but not TN_2
        let a = rat_mat(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]]);
        let c = classify_brute(&a);
        assert_eq!(c.tn_order, 1);
        assert_eq!(c.tp_order, 1);
        let w = c.tn_witness.unwrap();
        assert_eq!(wit(&w), (vec![1, 2], vec![2, 3], Rat::from(-1)));
    }

    #[test]
    fn permutation_matrix_has_noncontiguous_negative_minor() {
        let a = rat_mat(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let c = classify_brute(&a);
        assert_eq!(c.tn_order, 1);
        assert_eq!(c.tp_order, 0);
        let w = c.tn_witness.unwrap();
        assert_eq!(wit(&w), (vec![1, 3], vec![1, 2], Rat::from(-1)));
        assert!(!w.rows.is_contiguous());
    }

    #[test]
    fn singular_hankel_is_tn_not_tp() {
        let a = rat_mat(&[&[2, 3, 5], &[3, 5, 9], &[5, 9, 17]]);
        let c = classify_brute(&a);
        assert_eq!(c.tn_order, 3);
        assert_eq!(c.tp_order, 2);
        assert!(c.is_tn());
        let w = c.tp_witness.unwrap();
        assert_eq!(w.value, Rat::zero());
        assert_eq!(w.rows.len(), 3);
    }

    #[test]
    fn gp_criterion_matches_brute_on_examples() {
        let tp = rat_mat(&[&[1, 1, 1], &[1, 2, 3], &[1, 3, 6]]);
        assert!(is_tp_gp(&tp));
        assert!(classify_brute(&tp).is_tp());

        let cryer_a = rat_mat(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert!(!is_tp_gp(&cryer_a)); // a11 = 0 is an initial minor

        let ones = rat_mat(&[&[1, 1], &[1, 1]]);
        assert!(!is_tp_gp(&ones)); // TN but det = 0
        assert!(classify_brute(&ones).is_tn());
    }

    #[test]
    fn fekete_and_mixed_criteria() {
        let jw = rat_mat(&[&[2, 3, 5], &[3, 5, 9], &[5, 9, 17]]);
        assert!(is_tpr_mixed(&jw, 2).unwrap());
        assert!(!is_tpr_mixed(&jw, 3).unwrap()); // det = 0
        assert!(is_tpr_fekete(&jw, 2).unwrap());
        assert!(!is_tpr_fekete(&jw, 3).unwrap());

        let tp = rat_mat(&[&[1, 1, 1], &[1, 2, 3], &[1, 3, 6]]);
        assert!(is_tpr_fekete(&tp, 3).unwrap());
        assert!(is_tpr_mixed(&tp, 3).unwrap());

        // positivity-only: a zero entry defeats the criteria even though the
        // matrix is TN (criteria cannot be extended to TN)
        let cryer_a = rat_mat(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert!(!is_tpr_fekete(&cryer_a, 2).unwrap());

        let row = rat_mat(&[&[1, 2, 3]]);
        assert!(is_tpr_fekete(&row, 1).unwrap());
        assert!(is_tpr_fekete(&row, 2).is_err()); // r beyond min(m,n)
    }

    #[test]
    fn hankel_classifier_matches_brute_on_named_cases() {
        for mat in [
            rat_mat(&[&[2, 3, 5], &[3, 5, 9], &[5, 9, 17]]),
            Matrix::corner(3).unwrap(),
            rat_mat(&[&[1, 1, 2], &[1, 2, 6], &[2, 6, 24]]),
        ] {
            let b = classify_brute(&mat);
            let h = classify_hankel(&mat).unwrap();
            assert_eq!((h.tn_order, h.tp_order), (b.tn_order, b.tp_order));
        }

        assert_eq!(classify_hankel(&Matrix::corner(3).unwrap()).unwrap().tn_order, 0);
        let fact = rat_mat(&[&[1, 1, 2], &[1, 2, 6], &[2, 6, 24]]);
        assert_eq!(classify_hankel(&fact).unwrap().tp_order, 3);

        let non_hankel = rat_mat(&[&[1, 1, 0], &[1, 1, 1], &[1, 1, 1]]);
        assert!(classify_hankel(&non_hankel).is_err());
    }

    #[test]
    fn hankel_witnesses_are_valid_minors() {
        let a = rat_mat(&[&[2, 3, 5], &[3, 5, 9], &[5, 9, 17]]);
        let h = classify_hankel(&a).unwrap();
        let w = h.tp_witness.unwrap();
        assert_eq!(a.minor(&w.rows, &w.cols).unwrap(), w.value);
        assert!(!w.value.is_positive());
    }

    #[test]
    fn additive_core_condition() {
        let mut ok = vec![vec![Rat::zero(); 3]; 3];
        ok[0][0] = Rat::from(2);
        ok[2][2] = Rat::from(3);
        assert!(is_additive_core(&Matrix::from_rows(ok).unwrap()));

        let ones = rat_mat(&[&[1, 1], &[1, 1]]);
        assert!(!is_additive_core(&ones));

        let zero = rat_mat(&[&[0, 0], &[0, 0]]);
        assert!(is_additive_core(&zero));

        assert!(is_additive_core(&Matrix::corner(3).unwrap().map(Rat::abs)));
        assert!(!is_additive_core(&Matrix::corner(3).unwrap())); // -1 corner
    }

    #[test]
    fn perturbation_reaches_tp() {
        let jw = rat_mat(&[&[2, 3, 5], &[3, 5, 9], &[5, 9, 17]]);
        let p = perturb_to_tp(&jw, &Rat::ratio(1, 100)).unwrap();
        assert_eq!(classify_hankel(&p).unwrap().tp_order, 3);

        let zero = rat_mat(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        let f = perturb_to_tp(&zero, &Rat::one()).unwrap();
        assert_eq!(f, factorial_hankel(3));
        assert_eq!(classify_brute(&f).tp_order, 3);
    }

    #[test]
    fn polynomial_sum_determinant_counterexample() {
        // A = all-ones, B = [[1, x], [x, x^2]]: both coefficientwise TN, but
        // det(A+B) = 1 - 2x + x^2 has a negative coefficient
        let a = Matrix::from_rows(vec![
            vec![Poly::one(), Poly::one()],
            vec![Poly::one(), Poly::one()],
        ])
        .unwrap();
        let b = Matrix::from_rows(vec![
            vec![Poly::one(), Poly::var()],
            vec![Poly::var(), Poly::from_ints(&[0, 0, 1])],
        ])
        .unwrap();
        assert_eq!(coeffwise_tn_order(&a).unwrap(), 2);
        assert_eq!(coeffwise_tn_order(&b).unwrap(), 2);
        let s = a.add(&b).unwrap();
        let d = s.det().unwrap();
        assert_eq!(d, Poly::from_ints(&[1, -2, 1]));
        assert!(!d.is_coeffwise_nonneg());
        assert_eq!(coeffwise_tn_order(&s).unwrap(), 1);
    }

    #[test]
    fn classification_serializes_with_witness() {
        let a = rat_mat(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]]);
        let c = classify_brute(&a);
        let j = serde_json::to_string(&c).unwrap();
        assert!(j.contains("\"tn_order\":1"));
        assert!(j.contains("\"rows\":[1,2]"));
        let back: Classification = serde_json::from_str(&j).unwrap();
        assert_eq!(back, c);
    }
}
