//! Dense matrices over an exact ring: submatrix extraction, exact
//! determinants, and Hankel structure.
//!
//! Index sets are 1-based externally (so a witness like rows {1,3} reads the
//! way matrix literature writes it); raw entry access is 0-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{Poly, Rat, Series};
use crate::{Error, Result};

/// Exact ring operations needed by determinant elimination.
///
/// `exact_div` returns the quotient only when the division is exact;
/// `is_integral_domain` gates fraction-free elimination, which is only
/// justified without zero divisors.
pub trait Ring: Clone + PartialEq {
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    fn is_integral_domain() -> bool {
        true
    }
}

impl Ring for Rat {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Rat::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Ring for Poly {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Poly::exact_div(self, rhs)
    }
}

impl Ring for Series {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Series::is_zero(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Series::exact_div(self, rhs)
    }
    // truncation introduces zero divisors, so determinants must avoid
    // fraction-free elimination and use division-free cofactor expansion
    fn is_integral_domain() -> bool {
        false
    }
}

/// Strictly increasing list of 1-based row or column positions.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSet {
    indices: Vec<usize>,
}

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::IndexOutOfRange("index set must be nonempty".into()));
        }
        if indices[0] == 0 {
            return Err(Error::IndexOutOfRange("index sets are 1-based".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::IndexOutOfRange(format!(
                "indices must be strictly increasing, got {indices:?}"
            )));
        }
        Ok(IndexSet { indices })
    }

    /// The full set {1, ..., n}.
    pub fn all(n: usize) -> Self {
        IndexSet { indices: (1..=n).collect() }
    }

    /// The interval {start, ..., start + len - 1}.
    pub fn interval(start: usize, len: usize) -> Result<Self> {
        if start == 0 || len == 0 {
            return Err(Error::IndexOutOfRange("interval needs start >= 1 and len >= 1".into()));
        }
        Ok(IndexSet { indices: (start..start + len).collect() })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty sets
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn max(&self) -> usize {
        *self.indices.last().unwrap()
    }

    /// True when the indices form an interval.
    pub fn is_contiguous(&self) -> bool {
        self.max() - self.indices[0] + 1 == self.indices.len()
    }

    /// Contiguous and containing 1.
    pub fn is_initial(&self) -> bool {
        self.indices[0] == 1 && self.is_contiguous()
    }

    /// All k-element subsets of {1, ..., n} in lexicographic order.
    pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = IndexSet> {
        use itertools::Itertools;
        (1..=n).combinations(k).map(|indices| IndexSet { indices })
    }

    /// The n - k + 1 contiguous k-element subsets of {1, ..., n}, in order.
    pub fn contiguous_windows(n: usize, k: usize) -> impl Iterator<Item = IndexSet> {
        (1..=n.saturating_sub(k) + 1).filter(move |_| k >= 1).map(move |s| IndexSet {
            indices: (s..s + k).collect(),
        })
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Dense row-major matrix over an exact ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R> {
    m: usize,
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(m: usize, n: usize, entries: Vec<R>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Dimension("matrix dimensions must be at least 1".into()));
        }
        if entries.len() != m * n {
            return Err(Error::Dimension(format!(
                "{m}x{n} matrix needs {} entries, got {}",
                m * n,
                entries.len()
            )));
        }
        Ok(Matrix { m, n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("rows have unequal lengths".into()));
        }
        Matrix::new(m, n, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn is_square(&self) -> bool {
        self.m == self.n
    }

    /// 0-based entry access.
    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.n)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { m: self.m, n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Matrix<R> {
        let mut entries = Vec::with_capacity(self.m * self.n);
        for j in 0..self.n {
            for i in 0..self.m {
                entries.push(self.entry(i, j).clone());
            }
        }
        Matrix { m: self.n, n: self.m, entries }
    }

    /// Rows `rows`, columns `cols`, kept in their original order.
    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Matrix<R>> {
        if rows.max() > self.m {
            return Err(Error::IndexOutOfRange(format!(
                "row set {rows} exceeds row count {}",
                self.m
            )));
        }
        if cols.max() > self.n {
            return Err(Error::IndexOutOfRange(format!(
                "column set {cols} exceeds column count {}",
                self.n
            )));
        }
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows.indices() {
            for &j in cols.indices() {
                entries.push(self.entry(i - 1, j - 1).clone());
            }
        }
        Ok(Matrix { m: rows.len(), n: cols.len(), entries })
    }

    pub fn add(&self, rhs: &Matrix<R>) -> Result<Matrix<R>> {
        if (self.m, self.n) != (rhs.m, rhs.n) {
            return Err(Error::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.m, self.n, rhs.m, rhs.n
            )));
        }
        let entries =
            self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { m: self.m, n: self.n, entries })
    }

    pub fn matmul(&self, rhs: &Matrix<R>) -> Result<Matrix<R>> {
        if self.n != rhs.m {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.m, self.n, rhs.m, rhs.n
            )));
        }
        let mut entries = Vec::with_capacity(self.m * rhs.n);
        for i in 0..self.m {
            for j in 0..rhs.n {
                let mut acc: Option<R> = None;
                for k in 0..self.n {
                    let term = self.entry(i, k).mul(rhs.entry(k, j));
                    acc = Some(match acc {
                        None => term,
                        Some(a) => a.add(&term),
                    });
                }
                entries.push(acc.expect("inner dimension >= 1"));
            }
        }
        Ok(Matrix { m: self.m, n: rhs.n, entries })
    }

    /// True when every entry depends only on `i + j`; checked as "every
    /// contiguous 2x2 submatrix is symmetric", which is equivalent.
    pub fn is_hankel(&self) -> bool {
        for i in 0..self.m.saturating_sub(1) {
            for j in 0..self.n.saturating_sub(1) {
                if self.entry(i, j + 1) != self.entry(i + 1, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Exact determinant. Fraction-free elimination over integral domains;
    /// division-free cofactor expansion otherwise, or when elimination hits a
    /// zero pivot column or an inexact division. Cofactor expansion refuses
    /// matrices of size 9 or larger.
    pub fn det(&self) -> Result<R> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of non-square {}x{} matrix",
                self.m, self.n
            )));
        }
        if R::is_integral_domain() {
            if let Some(d) = self.det_bareiss() {
                return Ok(d);
            }
        }
        self.det_cofactor()
    }

    /// Minor with rows `rows` and columns `cols` (1-based, equal sizes).
    pub fn minor(&self, rows: &IndexSet, cols: &IndexSet) -> Result<R> {
        self.submatrix(rows, cols)?.det()
    }

    fn det_bareiss(&self) -> Option<R> {
        let n = self.n;
        let mut a: Vec<Vec<R>> = self.row_iter().map(<[R]>::to_vec).collect();
        let mut negate = false;
        let mut prev: Option<R> = None; // pivot of the previous step
        for k in 0..n - 1 {
            let pivot_row = (k..n).find(|&i| !a[i][k].is_zero())?;
            if pivot_row != k {
                a.swap(k, pivot_row);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = match &prev {
                        None => num,
                        Some(p) => num.exact_div(p)?,
                    };
                }
            }
            prev = Some(a[k][k].clone());
        }
        let d = a[n - 1][n - 1].clone();
        Some(if negate { d.neg() } else { d })
    }

    fn det_cofactor(&self) -> Result<R> {
        if self.n >= 9 {
            return Err(Error::UnsupportedStructure(format!(
                "cofactor expansion refused for {0}x{0} matrix (zero-pivot structure too large)",
                self.n
            )));
        }
        let rows: Vec<Vec<R>> = self.row_iter().map(<[R]>::to_vec).collect();
        Ok(cofactor_rows(&rows).unwrap_or_else(|| {
            // every term vanished: the determinant is zero
            self.entries[0].sub(&self.entries[0])
        }))
    }
}

/// Recursive first-row expansion; `None` means every term was zero.
fn cofactor_rows<R: Ring>(rows: &[Vec<R>]) -> Option<R> {
    let n = rows.len();
    if n == 1 {
        return if rows[0][0].is_zero() { None } else { Some(rows[0][0].clone()) };
    }
    let mut acc: Option<R> = None;
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<R>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect()
            })
            .collect();
        let Some(minor) = cofactor_rows(&sub) else { continue };
        let mut term = rows[0][j].mul(&minor);
        if j % 2 == 1 {
            term = term.neg();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc
}

impl Matrix<Rat> {
    /// Convenience constructor from machine-integer rows.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Matrix<Rat>> {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| Rat::from(v)).collect()).collect(),
        )
    }

    /// The n-square Hankel matrix with 1 in the upper-left corner, -1 in the
    /// lower-right corner, and zeros elsewhere. Needs `n >= 2`.
    pub fn corner(n: usize) -> Result<Matrix<Rat>> {
        if n < 2 {
            return Err(Error::Dimension("corner matrix needs size >= 2".into()));
        }
        let mut entries = vec![Rat::zero(); n * n];
        entries[0] = Rat::one();
        entries[n * n - 1] = -Rat::one();
        Ok(Matrix { m: n, n, entries })
    }

    /// Parse whitespace-separated rationals, one row per line.
    pub fn parse_text(text: &str) -> Result<Matrix<Rat>> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            rows.push(
                line.split_whitespace().map(str::parse).collect::<Result<Vec<Rat>>>()?,
            );
        }
        if rows.is_empty() {
            return Err(Error::Parse("no matrix rows found".into()));
        }
        Matrix::from_rows(rows)
    }

    pub fn to_text(&self) -> String {
        self.row_iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Hankel generator data: `matrix[i][j] = sequence[i + j]` (0-based).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HankelSpec<R = Rat> {
    pub sequence: Vec<R>,
    pub n: usize,
}

impl<R: Ring> HankelSpec<R> {
    pub fn new(sequence: Vec<R>, n: usize) -> Result<Self> {
        let need = 2 * n - 1;
        if n == 0 {
            return Err(Error::Dimension("Hankel size must be at least 1".into()));
        }
        if sequence.len() < need {
            return Err(Error::SequenceTooShort { need, got: sequence.len() });
        }
        Ok(HankelSpec { sequence, n })
    }

    pub fn matrix(&self) -> Matrix<R> {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.sequence[i + j].clone());
            }
        }
        Matrix { m: n, n, entries }
    }
}

/// Build an n-square Hankel matrix straight from a sequence.
pub fn hankel_from<R: Ring>(sequence: &[R], n: usize) -> Result<Matrix<R>> {
    Ok(HankelSpec::new(sequence.to_vec(), n)?.matrix())
}

// ---------------------------------------------------------------------------
// JSON interchange: {"rows": m, "cols": n, "entries": [[entry, ...], ...]}
// where entry is a rational string/integer or {"poly": [rationals]}.

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<EntryDoc>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EntryDoc {
    Scalar(Rat),
    Poly { poly: Poly },
}

fn doc_from_json(json: &str) -> Result<MatrixDoc> {
    let doc: MatrixDoc = serde_json::from_str(json)?;
    if doc.entries.len() != doc.rows || doc.entries.iter().any(|r| r.len() != doc.cols) {
        return Err(Error::Dimension("JSON entries do not match rows/cols".into()));
    }
    Ok(doc)
}

impl Matrix<Rat> {
    pub fn from_json(json: &str) -> Result<Matrix<Rat>> {
        let doc = doc_from_json(json)?;
        let mut entries = Vec::with_capacity(doc.rows * doc.cols);
        for row in doc.entries {
            for e in row {
                match e {
                    EntryDoc::Scalar(r) => entries.push(r),
                    EntryDoc::Poly { .. } => {
                        return Err(Error::Parse(
                            "polynomial entry in a rational matrix".into(),
                        ))
                    }
                }
            }
        }
        Matrix::new(doc.rows, doc.cols, entries)
    }

    pub fn to_json(&self) -> String {
        let doc = MatrixDoc {
            rows: self.m,
            cols: self.n,
            entries: self
                .row_iter()
                .map(|r| r.iter().cloned().map(EntryDoc::Scalar).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("matrix serialization cannot fail")
    }
}

impl Matrix<Poly> {
    /// Rational entries are read as constant polynomials.
    pub fn from_json_poly(json: &str) -> Result<Matrix<Poly>> {
        let doc = doc_from_json(json)?;
        let mut entries = Vec::with_capacity(doc.rows * doc.cols);
        for row in doc.entries {
            for e in row {
                entries.push(match e {
                    EntryDoc::Scalar(r) => Poly::constant(r),
                    EntryDoc::Poly { poly } => poly,
                });
            }
        }
        Matrix::new(doc.rows, doc.cols, entries)
    }

    pub fn to_json(&self) -> String {
        let doc = MatrixDoc {
            rows: self.m,
            cols: self.n,
            entries: self
                .row_iter()
                .map(|r| {
                    r.iter()
                        .map(|p| match p.as_constant() {
                            Some(c) => EntryDoc::Scalar(c),
                            None => EntryDoc::Poly { poly: p.clone() },
                        })
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("matrix serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat_mat(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn det_small_examples() {
        let id = rat_mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(id.det().unwrap(), Rat::one());

        let w = rat_mat(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 1]]);
        assert_eq!(w.det().unwrap(), Rat::from(-1));

        let h = rat_mat(&[&[2, 3, 5], &[3, 5, 9], &[5, 9, 17]]);
        assert_eq!(h.det().unwrap(), Rat::zero());
    }

    #[test]
    fn det_rejects_non_square() {
        let a = rat_mat(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(a.det(), Err(Error::Dimension(_))));
    }

    #[test]
    fn submatrix_keeps_order() {
        let a = rat_mat(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let s = a
            .submatrix(&IndexSet::new(vec![1, 3]).unwrap(), &IndexSet::new(vec![1, 2]).unwrap())
            .unwrap();
        assert_eq!(s, rat_mat(&[&[0, 1], &[1, 0]]));
        assert_eq!(s.det().unwrap(), Rat::from(-1));

        let full = IndexSet::all(3);
        assert_eq!(a.submatrix(&full, &full).unwrap(), a);
        assert!(a.submatrix(&IndexSet::new(vec![1, 4]).unwrap(), &full).is_err());
    }

    #[test]
    fn index_set_predicates() {
        assert!(IndexSet::new(vec![2, 3, 4]).unwrap().is_contiguous());
        assert!(!IndexSet::new(vec![2, 3, 4]).unwrap().is_initial());
        assert!(IndexSet::new(vec![1, 2]).unwrap().is_initial());
        assert!(!IndexSet::new(vec![1, 3]).unwrap().is_contiguous());
        assert!(IndexSet::new(vec![2, 2]).is_err());
        assert!(IndexSet::new(vec![0, 1]).is_err());

        let combos: Vec<_> = IndexSet::combinations(4, 2).collect();
        assert_eq!(combos.len(), 6);
        assert_eq!(combos[0].indices(), &[1, 2]); // lexicographically first
        assert_eq!(combos[5].indices(), &[3, 4]);

        let windows: Vec<_> = IndexSet::contiguous_windows(4, 2).collect();
        assert_eq!(windows.len(), 3);
        assert!(windows.iter().all(IndexSet::is_contiguous));
    }

    #[test]
    fn hankel_detection_and_construction() {
        assert!(rat_mat(&[&[2, 3], &[3, 5]]).is_hankel());
        assert!(!rat_mat(&[&[1, 1, 0], &[1, 1, 1], &[1, 1, 1]]).is_hankel());

        let seq: Vec<Rat> = [2, 3, 5, 9, 17].map(Rat::from).to_vec();
        let h = hankel_from(&seq, 3).unwrap();
        assert!(h.is_hankel());
        assert_eq!(h, rat_mat(&[&[2, 3, 5], &[3, 5, 9], &[5, 9, 17]]));

        assert!(matches!(
            hankel_from(&seq, 4),
            Err(Error::SequenceTooShort { need: 7, got: 5 })
        ));
    }

    #[test]
    fn corner_matrix_shape() {
        let c = Matrix::corner(3).unwrap();
        assert_eq!(c, rat_mat(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]));
        assert!(c.is_hankel());
        assert!(Matrix::corner(1).is_err());
    }

    #[test]
    fn zero_pivot_column_falls_back_to_cofactor() {
        // first column all zero: elimination cannot pick a pivot
        let a = rat_mat(&[&[0, 1], &[0, 2]]);
        assert_eq!(a.det().unwrap(), Rat::zero());
    }

    #[test]
    fn large_singular_pivot_structure_is_refused() {
        let n = 9;
        let zero_col: Vec<Vec<Rat>> =
            (0..n).map(|i| (0..n).map(|j| Rat::from(((i + j) % 3) as i64)).collect()).collect();
        // make the matrix singular with an all-zero column so Bareiss bails
        let mut rows = zero_col;
        for r in &mut rows {
            r[0] = Rat::zero();
        }
        let a = Matrix::from_rows(rows).unwrap();
        assert!(matches!(a.det(), Err(Error::UnsupportedStructure(_))));
    }

    #[test]
    fn series_determinant_uses_cofactor() {
        use crate::exact::binomial_series;
        // det of [[(1+x)^t, 1], [1, (1+x)^t]] = (1+x)^{2t} - 1; x-coefficient 2t
        let s = binomial_series(&Rat::one(), 3);
        let one = Series::one(3);
        let a = Matrix::from_rows(vec![
            vec![s.clone(), one.clone()],
            vec![one.clone(), s.clone()],
        ])
        .unwrap();
        let d = a.det().unwrap();
        assert!(d.coeff(0).is_zero());
        assert_eq!(d.coeff(1), &Poly::from_ints(&[0, 2]));
    }

    #[test]
    fn json_round_trip() {
        let a = rat_mat(&[&[1, 2], &[3, 4]]);
        let j = a.to_json();
        assert_eq!(Matrix::from_json(&j).unwrap(), a);

        let parsed = Matrix::from_json(
            r#"{"rows":2,"cols":2,"entries":[["1/2",2],[3,"-4"]]}"#,
        )
        .unwrap();
        assert_eq!(parsed.entry(0, 0), &Rat::ratio(1, 2));
        assert_eq!(parsed.entry(1, 1), &Rat::from(-4));

        assert!(Matrix::from_json(r#"{"rows":2,"cols":2,"entries":[[1,2]]}"#).is_err());
    }

    #[test]
    fn poly_json_round_trip() {
        let a = Matrix::from_rows(vec![
            vec![Poly::one(), Poly::var()],
            vec![Poly::var(), Poly::from_ints(&[0, 0, 1])],
        ])
        .unwrap();
        let j = a.to_json();
        let b = Matrix::from_json_poly(&j).unwrap();
        assert_eq!(a, b);
        // det = x^2 - x^2 = 0
        assert!(b.det().unwrap().is_zero());
    }

    #[test]
    fn text_round_trip() {
        let a = Matrix::parse_text("1 1/2\n-3 4\n").unwrap();
        assert_eq!(a.entry(0, 1), &Rat::ratio(1, 2));
        assert_eq!(Matrix::parse_text(&a.to_text()).unwrap(), a);
        assert!(Matrix::parse_text("1 2\n3\n").is_err());
        assert!(Matrix::parse_text("").is_err());
    }
}
