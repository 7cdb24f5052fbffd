//! Minors of entrywise powers `A^{∘t}` as exponential polynomials
//! `f(t) = sum c_i * b_i^t`, with certified sign evaluation.
//!
//! For a fixed minor position of a strictly positive matrix, the minor of
//! `A^{∘t}` is such a sum: each permutation contributes its entry product as
//! a base. Laguerre's rule bounds the number of real roots of `f` by the
//! sign changes of the coefficients ordered by increasing base (and the
//! parity agrees), which is what turns a finite list of located roots into a
//! proof that there are no others.
//!
//! Signs are certified, never guessed: integer `t` is evaluated in exact
//! rational arithmetic, and non-integer rational `t` through interval
//! arithmetic whose precision doubles until the enclosure excludes zero or a
//! configurable bit ceiling reports failure.

pub mod interval;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::classify::{classify_brute, Witness};
use crate::exact::Rat;
use crate::matrix::{IndexSet, Matrix};
use crate::{Error, Result};
use interval::{exact_pow, ln_interval, pow_interval, Interval};

/// Precision ladder for interval certification, in bits.
pub const DEFAULT_MAX_BITS: u32 = 4096;
const LADDER_START: u32 = 64;

/// Exponential polynomial sum of `coeff * base^t` with positive rational
/// bases, strictly increasing; zero coefficients dropped. The zero function
/// has no terms.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Term>", into = "Vec<Term>")]
pub struct ExpPoly {
    terms: Vec<(Rat, Rat)>, // (base, coeff)
}

#[derive(Serialize, Deserialize, Clone)]
struct Term {
    base: Rat,
    coeff: Rat,
}

impl ExpPoly {
    /// Merge terms with equal bases, drop zero coefficients, sort by base.
    pub fn new(terms: Vec<(Rat, Rat)>) -> Result<Self> {
        let mut map: BTreeMap<Rat, Rat> = BTreeMap::new();
        for (base, coeff) in terms {
            if !base.is_positive() {
                return Err(Error::Domain(format!("non-positive base {base}")));
            }
            let slot = map.entry(base).or_insert_with(Rat::zero);
            *slot = &*slot + &coeff;
        }
        Ok(ExpPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn zero() -> Self {
        ExpPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// (base, coeff) pairs by strictly increasing base.
    pub fn terms(&self) -> &[(Rat, Rat)] {
        &self.terms
    }

    /// Exact value at integer t.
    pub fn eval_int(&self, t: i64) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (b, c) in &self.terms {
            acc = &acc + &(c * &b.pow(t)?);
        }
        Ok(acc)
    }
}

impl std::fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k == 0 {
                if c == &Rat::from(-1) {
                    write!(f, "-")?;
                } else if c != &Rat::one() {
                    write!(f, "{c}*")?;
                }
            } else if c == &Rat::one() {
                write!(f, " + ")?;
            } else if c == &Rat::from(-1) {
                write!(f, " - ")?;
            } else if c.is_negative() {
                write!(f, " - {}*", c.abs())?;
            } else {
                write!(f, " + {c}*")?;
            }
            if b.is_integer() {
                write!(f, "{b}^t")?;
            } else {
                write!(f, "({b})^t")?;
            }
        }
        Ok(())
    }
}

impl TryFrom<Vec<Term>> for ExpPoly {
    type Error = Error;
    fn try_from(v: Vec<Term>) -> Result<Self> {
        ExpPoly::new(v.into_iter().map(|t| (t.base, t.coeff)).collect())
    }
}

impl From<ExpPoly> for Vec<Term> {
    fn from(p: ExpPoly) -> Vec<Term> {
        p.terms.into_iter().map(|(base, coeff)| Term { base, coeff }).collect()
    }
}

/// The minor of `A^{∘t}` at fixed rows and columns, as a function of t:
/// sum over permutations of the signed entry products raised to the t.
/// Entries must be strictly positive; sizes above 7 are refused.
pub fn minor_exppoly(a: &Matrix<Rat>, rows: &IndexSet, cols: &IndexSet) -> Result<ExpPoly> {
    if rows.len() != cols.len() {
        return Err(Error::Dimension(format!(
            "minor needs equal row and column counts, got {} and {}",
            rows.len(),
            cols.len()
        )));
    }
    let k = rows.len();
    if k > 7 {
        return Err(Error::UnsupportedStructure(format!(
            "permutation expansion refused for size {k} > 7"
        )));
    }
    let sub = a.submatrix(rows, cols)?;
    for i in 0..k {
        for j in 0..k {
            if !sub.entry(i, j).is_positive() {
                return Err(Error::Domain(format!(
                    "entry at row {}, column {} of the submatrix is {}, not positive",
                    i + 1,
                    j + 1,
                    sub.entry(i, j)
                )));
            }
        }
    }
    use itertools::Itertools;
    let mut terms = Vec::new();
    for perm in (0..k).permutations(k) {
        let inversions: usize =
            (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
        let mut prod = Rat::one();
        for (i, &j) in perm.iter().enumerate() {
            prod = &prod * sub.entry(i, j);
        }
        let coeff = if inversions % 2 == 1 { Rat::from(-1) } else { Rat::one() };
        terms.push((prod, coeff));
    }
    ExpPoly::new(terms)
}

/// Laguerre's rule: the number of real roots of `f`, with multiplicity, is
/// at most the number of sign changes in the coefficients ordered by
/// increasing base, and has the same parity. Returns (bound, parity).
pub fn laguerre_bound(f: &ExpPoly) -> (usize, u8) {
    let changes = f
        .terms
        .windows(2)
        .filter(|w| w[0].1.is_positive() != w[1].1.is_positive())
        .count();
    (changes, (changes % 2) as u8)
}

/// A proved sign of `f(t)`: 0 bits means exact rational evaluation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SignCertificate {
    pub t: Rat,
    pub sign: i8,
    pub precision_bits: u32,
}

/// Certified sign of `f(t)` using the default precision ceiling.
pub fn sign_at(f: &ExpPoly, t: &Rat) -> Result<SignCertificate> {
    sign_at_with(f, t, DEFAULT_MAX_BITS)
}

/// Certified sign of `f(t)`, doubling interval precision up to `max_bits`.
pub fn sign_at_with(f: &ExpPoly, t: &Rat, max_bits: u32) -> Result<SignCertificate> {
    if f.is_zero() {
        return Ok(SignCertificate { t: t.clone(), sign: 0, precision_bits: 0 });
    }
    if let Some(ti) = t.to_i64() {
        let v = f.eval_int(ti)?;
        return Ok(SignCertificate { t: t.clone(), sign: v.signum(), precision_bits: 0 });
    }
    let mut bits = LADDER_START;
    loop {
        let mut acc = Interval::zero();
        for (b, c) in &f.terms {
            acc = acc.add(&pow_interval(b, t, bits)?.scale(c));
        }
        if let Some(sign) = acc.sign() {
            return Ok(SignCertificate { t: t.clone(), sign, precision_bits: bits });
        }
        if bits >= max_bits {
            return Err(Error::Precision(format!(
                "sign of {f} at t = {t} undetermined at {bits} bits; enclosure [{}, {}]",
                acc.lo, acc.hi
            )));
        }
        bits = (bits * 2).min(max_bits);
    }
}

/// Certified sign of `f'(t) = sum c_i ln(b_i) b_i^t`.
///
/// Whenever every `b_i^t` is an exact rational (always at integer t), the
/// exact weights w_i = c_i b_i^t reduce the question to the sign of
/// `ln prod b_i^(w_i)`, decided exactly by comparing `prod b_i^(w_i * Q)`
/// against 1 (Q clearing denominators); this is the only way to certify a
/// derivative that is exactly zero. Otherwise, or when those integer
/// exponents would be astronomically large, falls back to interval
/// arithmetic on `sum c_i ln(b_i) b_i^t`.
pub fn derivative_sign_at(f: &ExpPoly, t: &Rat) -> Result<i8> {
    let mut weights: Vec<(Rat, Rat)> = Vec::new(); // (base != 1, weight)
    let mut all_exact = true;
    for (b, c) in &f.terms {
        if b == &Rat::one() {
            continue; // ln 1 = 0 contributes nothing
        }
        match exact_pow(b, t)? {
            Some(r) => weights.push((b.clone(), c * &r)),
            None => {
                all_exact = false;
                break;
            }
        }
    }
    if all_exact {
        if weights.is_empty() {
            return Ok(0);
        }
        let mut q = BigInt::from(1);
        for (_, w) in &weights {
            q = q.lcm(w.denom());
        }
        // cost estimate in bits of the exact product
        let mut cost: u64 = 0;
        let mut exps = Vec::with_capacity(weights.len());
        for (b, w) in &weights {
            let e = (w * &Rat::from_bigint(q.clone())).numer().clone();
            cost = cost.saturating_add(
                e.magnitude().to_u64().unwrap_or(u64::MAX).saturating_mul(
                    (b.numer().bits() + b.denom().bits()).max(1),
                ),
            );
            exps.push(e);
        }
        if cost <= 1 << 24 {
            // sign(sum e_i ln b_i) = sign(prod b_i^{e_i} - 1), computed exactly
            let mut num = BigInt::from(1);
            let mut den = BigInt::from(1);
            for ((b, _), e) in weights.iter().zip(&exps) {
                let k = e.magnitude().to_u32().expect("bounded by cost check");
                let (bn, bd) = (b.numer().pow(k), b.denom().pow(k));
                if e.is_negative() {
                    num *= bd;
                    den *= bn;
                } else {
                    num *= bn;
                    den *= bd;
                }
            }
            return Ok(match num.cmp(&den) {
                std::cmp::Ordering::Less => -1,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => 1,
            });
        }
    }
    let mut bits = LADDER_START;
    loop {
        let mut acc = Interval::zero();
        for (b, c) in &f.terms {
            if b == &Rat::one() {
                continue;
            }
            let term = ln_interval(b, bits)?.mul(&pow_interval(b, t, bits)?);
            acc = acc.add(&term.scale(c));
        }
        if let Some(sign) = acc.sign() {
            return Ok(sign);
        }
        if bits >= DEFAULT_MAX_BITS {
            return Err(Error::Precision(format!(
                "derivative sign of {f} at t = {t} undetermined at {bits} bits"
            )));
        }
        bits *= 2;
    }
}

/// 1 for a certified simple root at t, 2 when the derivative vanishes too.
fn multiplicity_at(f: &ExpPoly, t: &Rat) -> Result<usize> {
    Ok(if derivative_sign_at(f, t)? == 0 { 2 } else { 1 })
}

/// An isolated real root of an exponential polynomial.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
    /// Set when the root is located exactly (integer points).
    pub exact: Option<Rat>,
    /// 1 for a proved simple root; 2 means "at least 2" in general, and
    /// exactly 2 whenever the enclosing report says `complete`.
    pub multiplicity: usize,
}

/// Root scan result. `complete` asserts the list is all real roots of `f`
/// anywhere (not just in the scanned window): it fires exactly when the
/// found multiplicities add up to the Laguerre bound.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RootReport {
    pub roots: Vec<RootInterval>,
    pub laguerre_bound: usize,
    pub parity: u8,
    pub complete: bool,
}

/// Locate roots of `f` on [t_lo, t_hi]: exact scan of the integer points
/// (with a derivative test for multiplicity), then sign-change bracketing on
/// a grid refined by bisection. Integer points are always added to the scan
/// grid, so brackets never contain an integer root.
pub fn count_roots_certified(
    f: &ExpPoly,
    t_lo: &Rat,
    t_hi: &Rat,
    grid: usize,
) -> Result<RootReport> {
    if f.is_zero() {
        return Err(Error::Domain(
            "the zero exponential polynomial vanishes identically".into(),
        ));
    }
    if t_lo.cmp_rat(t_hi) != std::cmp::Ordering::Less {
        return Err(Error::Domain(format!("empty scan interval [{t_lo}, {t_hi}]")));
    }
    if grid == 0 {
        return Err(Error::Domain("grid must have at least one step".into()));
    }
    let (bound, parity) = laguerre_bound(f);

    // scan points: the grid plus every integer in range, deduplicated
    let mut points: Vec<Rat> = Vec::with_capacity(grid + 4);
    let step = &(t_hi - t_lo) / &Rat::from(grid as i64);
    for i in 0..=grid {
        points.push(t_lo + &(&step * &Rat::from(i as i64)));
    }
    let mut ti = t_lo.floor_int();
    loop {
        let t = Rat::from_bigint(ti.clone());
        if t.cmp_rat(t_hi) == std::cmp::Ordering::Greater {
            break;
        }
        if t.cmp_rat(t_lo) != std::cmp::Ordering::Less {
            points.push(t);
        }
        ti += 1;
    }
    points.sort_by(|a, b| a.cmp_rat(b));
    points.dedup();

    let mut roots: Vec<RootInterval> = Vec::new();
    let mut signs: Vec<i8> = Vec::with_capacity(points.len());
    for p in &points {
        let cert = sign_at(f, p)?;
        if cert.sign == 0 {
            // an exact root: always at integer points, occasionally at
            // rationals where every base power happens to be exact
            roots.push(RootInterval {
                lo: p.clone(),
                hi: p.clone(),
                exact: Some(p.clone()),
                multiplicity: multiplicity_at(f, p)?,
            });
        }
        signs.push(cert.sign);
    }

    for w in points.windows(2).zip(signs.windows(2)) {
        let ((a, b), (sa, sb)) = ((&w.0[0], &w.0[1]), (w.1[0], w.1[1]));
        if sa * sb != -1 {
            continue;
        }
        let (mut lo, mut hi, mut exact_hit) = (a.clone(), b.clone(), false);
        for _ in 0..40 {
            let mid = &(&lo + &hi) * &Rat::ratio(1, 2);
            let sm = sign_at(f, &mid)?.sign;
            if sm == 0 {
                // landed exactly on a root; the bracket collapses to it
                roots.push(RootInterval {
                    lo: mid.clone(),
                    hi: mid.clone(),
                    exact: Some(mid.clone()),
                    multiplicity: multiplicity_at(f, &mid)?,
                });
                exact_hit = true;
                break;
            }
            if sm == sa {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if !exact_hit {
            roots.push(RootInterval { lo, hi, exact: None, multiplicity: 1 });
        }
    }
    roots.sort_by(|a, b| a.lo.cmp_rat(&b.lo));

    let found: usize = roots.iter().map(|r| r.multiplicity).sum();
    Ok(RootReport { roots, laguerre_bound: bound, parity, complete: found == bound })
}

/// A certified failing minor of `A^{∘t}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PowerWitness {
    pub rows: IndexSet,
    pub cols: IndexSet,
    pub sign: i8,
    /// Exact minor value, present when t is an integer.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Rat>,
}

/// Classification of an entrywise power `A^{∘t}` with every minor sign
/// certified. Orders are capped at the requested r.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PowerClassification {
    pub t: Rat,
    pub tp_order: usize,
    pub tn_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tp_witness: Option<PowerWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tn_witness: Option<PowerWitness>,
    /// Highest interval precision any certificate needed (0 = all exact).
    pub max_precision_bits: u32,
}

impl PowerClassification {
    /// TN of the full requested order.
    pub fn is_tn_to(&self, r: usize) -> bool {
        self.tn_order >= r
    }

    pub fn is_tp_to(&self, r: usize) -> bool {
        self.tp_order >= r
    }
}

/// Classify `A^{∘t}` for a strictly positive matrix and rational `t >= 0`,
/// scanning minors of size 1 through r, every sign certified. For integer t
/// this agrees exactly with brute-force classification of the powered
/// matrix.
pub fn classify_power(a: &Matrix<Rat>, t: &Rat, r: usize) -> Result<PowerClassification> {
    classify_power_with(a, t, r, DEFAULT_MAX_BITS)
}

/// [`classify_power`] with an explicit precision ceiling.
pub fn classify_power_with(
    a: &Matrix<Rat>,
    t: &Rat,
    r: usize,
    max_bits: u32,
) -> Result<PowerClassification> {
    let cap = a.rows().min(a.cols());
    if r == 0 || r > cap {
        return Err(Error::Domain(format!("order r={r} outside 1..={cap}")));
    }
    if t.is_negative() {
        return Err(Error::Domain(format!("power exponent t = {t} is negative")));
    }
    let mut out = PowerClassification {
        t: t.clone(),
        tp_order: 0,
        tn_order: 0,
        tp_witness: None,
        tn_witness: None,
        max_precision_bits: 0,
    };
    for size in 1..=r {
        if out.tp_witness.is_some() && out.tn_witness.is_some() {
            break;
        }
        'scan: for rows in IndexSet::combinations(a.rows(), size) {
            for cols in IndexSet::combinations(a.cols(), size) {
                let f = minor_exppoly(a, &rows, &cols)?;
                let cert = sign_at_with(&f, t, max_bits).map_err(|e| {
                    Error::Precision(format!("minor rows {rows} cols {cols}: {e}"))
                })?;
                out.max_precision_bits = out.max_precision_bits.max(cert.precision_bits);
                let value = match t.to_i64() {
                    Some(ti) => Some(f.eval_int(ti)?),
                    None => None,
                };
                if out.tp_witness.is_none() && cert.sign <= 0 {
                    out.tp_witness = Some(PowerWitness {
                        rows: rows.clone(),
                        cols: cols.clone(),
                        sign: cert.sign,
                        value: value.clone(),
                    });
                }
                if out.tn_witness.is_none() && cert.sign < 0 {
                    out.tn_witness = Some(PowerWitness { rows, cols, sign: cert.sign, value });
                    break 'scan;
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
    Ok(out)
}

/// Exact cross-check helper: for integer t the power classification must
/// match brute force on the exactly powered matrix.
pub fn power_matches_brute(a: &Matrix<Rat>, m: u32) -> Result<bool> {
    let r = a.rows().min(a.cols());
    let p = classify_power(a, &Rat::from(m as i64), r)?;
    let b = classify_brute(&crate::hadamard::hadamard_power_int(a, m)?);
    Ok(p.tp_order == b.tp_order && p.tn_order == b.tn_order)
}

/// Convert a power witness with an exact value into a plain witness.
pub fn exact_witness(w: &PowerWitness) -> Option<Witness> {
    w.value.clone().map(|value| Witness {
        rows: w.rows.clone(),
        cols: w.cols.clone(),
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jw() -> Matrix<Rat> {
        Matrix::from_int_rows(&[&[2, 3, 5], &[3, 5, 9], &[5, 9, 17]]).unwrap()
    }

    fn jw_det() -> ExpPoly {
        minor_exppoly(&jw(), &IndexSet::all(3), &IndexSet::all(3)).unwrap()
    }

    #[test]
    fn minor_exppoly_examples() {
        // det of the singular Hankel power: 170^t - 162^t - 153^t + 2*135^t - 125^t
        let f = jw_det();
        let want: Vec<(Rat, Rat)> = [(125, -1), (135, 2), (153, -1), (162, -1), (170, 1)]
            .map(|(b, c)| (Rat::from(b), Rat::from(c)))
            .to_vec();
        assert_eq!(f.terms(), &want[..]);
        assert_eq!(f.to_string(), "-125^t + 2*135^t - 153^t - 162^t + 170^t");

        let one = Matrix::from_int_rows(&[&[7]]).unwrap();
        let f1 = minor_exppoly(&one, &IndexSet::all(1), &IndexSet::all(1)).unwrap();
        assert_eq!(f1.terms(), &[(Rat::from(7), Rat::one())]);

        let ones = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]).unwrap();
        let z = minor_exppoly(&ones, &IndexSet::all(2), &IndexSet::all(2)).unwrap();
        assert!(z.is_zero());

        let zero_entry = Matrix::from_int_rows(&[&[1, 0], &[1, 1]]).unwrap();
        assert!(minor_exppoly(&zero_entry, &IndexSet::all(2), &IndexSet::all(2)).is_err());
    }

    #[test]
    fn laguerre_bounds() {
        assert_eq!(laguerre_bound(&jw_det()), (3, 1));
        let single = ExpPoly::new(vec![(Rat::from(3), Rat::one())]).unwrap();
        assert_eq!(laguerre_bound(&single), (0, 0));
        let two = ExpPoly::new(vec![(Rat::from(2), Rat::one()), (Rat::one(), Rat::from(-1))])
            .unwrap();
        assert_eq!(laguerre_bound(&two), (1, 1));
    }

    #[test]
    fn sign_certificates() {
        let f = jw_det();
        let at1 = sign_at(&f, &Rat::one()).unwrap();
        assert_eq!((at1.sign, at1.precision_bits), (0, 0));

        let at_half = sign_at(&f, &Rat::ratio(1, 2)).unwrap();
        assert_eq!(at_half.sign, -1);
        assert!(at_half.precision_bits >= 64);

        let at2 = sign_at(&f, &Rat::from(2)).unwrap();
        assert_eq!(at2.sign, 1);
        assert_eq!(f.eval_int(2).unwrap(), Rat::from(72));

        // f(-1) = -2/172125 exactly
        assert_eq!(f.eval_int(-1).unwrap(), Rat::ratio(-2, 172125));
    }

    #[test]
    fn derivative_sign_trick() {
        let f = jw_det();
        // double root at 0: the exact product collapses to 1
        assert_eq!(derivative_sign_at(&f, &Rat::zero()).unwrap(), 0);
        // at 1 the root is simple with positive slope
        assert_eq!(derivative_sign_at(&f, &Rat::one()).unwrap(), 1);
        // strictly decreasing into the negative dip
        assert_eq!(derivative_sign_at(&f, &Rat::from(-1)).unwrap(), -1);

        // non-integer point, interval route: d/dt (4^t - 5*2^t + 6) at 1/2
        // is 4 ln 2 - 5 sqrt(2) ln 2 < 0
        let g = ExpPoly::new(vec![
            (Rat::from(4), Rat::one()),
            (Rat::from(2), Rat::from(-5)),
            (Rat::one(), Rat::from(6)),
        ])
        .unwrap();
        assert_eq!(derivative_sign_at(&g, &Rat::ratio(1, 2)).unwrap(), -1);
        assert_eq!(derivative_sign_at(&g, &Rat::from(2)).unwrap(), 1);
    }

    #[test]
    fn root_scan_on_the_singular_hankel_power() {
        let f = jw_det();
        let rep =
            count_roots_certified(&f, &Rat::from(-1), &Rat::from(2), 64).unwrap();
        assert_eq!(rep.laguerre_bound, 3);
        assert_eq!(rep.parity, 1);
        assert!(rep.complete, "2 + 1 multiplicities reach the bound");
        assert_eq!(rep.roots.len(), 2);
        assert_eq!(rep.roots[0].exact, Some(Rat::zero()));
        assert_eq!(rep.roots[0].multiplicity, 2);
        assert_eq!(rep.roots[1].exact, Some(Rat::one()));
        assert_eq!(rep.roots[1].multiplicity, 1);
    }

    #[test]
    fn root_scan_simple_cases() {
        let f = ExpPoly::new(vec![(Rat::from(2), Rat::one()), (Rat::one(), Rat::from(-1))])
            .unwrap();
        let rep = count_roots_certified(&f, &Rat::from(-1), &Rat::one(), 8).unwrap();
        assert!(rep.complete);
        assert_eq!(rep.roots.len(), 1);
        assert_eq!(rep.roots[0].exact, Some(Rat::zero()));
        assert_eq!(rep.roots[0].multiplicity, 1);

        let single = ExpPoly::new(vec![(Rat::from(3), Rat::from(5))]).unwrap();
        let rep = count_roots_certified(&single, &Rat::from(-2), &Rat::from(2), 4).unwrap();
        assert!(rep.complete);
        assert!(rep.roots.is_empty());

        // 4^t - 2 vanishes exactly at the non-integer scan point t = 1/2
        let h = ExpPoly::new(vec![(Rat::from(4), Rat::one()), (Rat::one(), Rat::from(-2))])
            .unwrap();
        let rep = count_roots_certified(&h, &Rat::zero(), &Rat::one(), 2).unwrap();
        assert!(rep.complete);
        assert_eq!(rep.roots.len(), 1);
        assert_eq!(rep.roots[0].exact, Some(Rat::ratio(1, 2)));
        assert_eq!(rep.roots[0].multiplicity, 1);
    }

    #[test]
    fn bracketed_non_integer_root() {
        // 4^t - 3: root at log_4 3, irrational, found by bracketing
        let f = ExpPoly::new(vec![(Rat::from(4), Rat::one()), (Rat::one(), Rat::from(-3))])
            .unwrap();
        let rep = count_roots_certified(&f, &Rat::zero(), &Rat::one(), 7).unwrap();
        assert!(rep.complete);
        assert_eq!(rep.roots.len(), 1);
        let r = &rep.roots[0];
        assert_eq!(r.exact, None);
        // log_4 3 = 0.7924812...
        assert!(r.lo.cmp_rat(&Rat::ratio(79, 100)) == std::cmp::Ordering::Greater);
        assert!(r.hi.cmp_rat(&Rat::ratio(80, 100)) == std::cmp::Ordering::Less);
    }

    #[test]
    fn power_classification() {
        let a = jw();
        // below t = 1 the 3x3 determinant goes negative
        let p = classify_power(&a, &Rat::ratio(1, 2), 3).unwrap();
        assert_eq!((p.tn_order, p.tp_order), (2, 2));
        let w = p.tn_witness.unwrap();
        assert_eq!(w.sign, -1);
        assert_eq!(w.rows.len(), 3);
        assert_eq!(w.value, None);

        // past the simple root at t = 1 the determinant is positive, so the
        // cube power is totally positive; everything evaluates exactly
        let p = classify_power(&a, &Rat::from(3), 3).unwrap();
        assert_eq!((p.tn_order, p.tp_order), (3, 3));
        assert_eq!(p.max_precision_bits, 0);
        assert!(p.tp_witness.is_none());

        // t = 1 is the identity power: TN of order 3 but singular
        let p = classify_power(&a, &Rat::one(), 3).unwrap();
        let b = classify_brute(&a);
        assert_eq!((p.tn_order, p.tp_order), (b.tn_order, b.tp_order));
        assert_eq!((p.tn_order, p.tp_order), (3, 2));
        assert_eq!(p.tp_witness.unwrap().value, Some(Rat::zero()));

        // t = 0 collapses to the all-ones matrix
        let p = classify_power(&a, &Rat::zero(), 3).unwrap();
        assert_eq!((p.tn_order, p.tp_order), (3, 1));

        assert!(classify_power(&a, &Rat::from(-1), 3).is_err());
        assert!(classify_power(&a, &Rat::one(), 4).is_err());
    }

    #[test]
    fn integer_powers_match_brute_force() {
        let a = jw();
        for m in 1..=3 {
            assert!(power_matches_brute(&a, m).unwrap());
        }
    }
}
