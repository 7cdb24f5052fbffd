//! Stieltjes moment sequences from discrete measures, their Hankel sections,
//! and the strict-positivity determinant test.
//!
//! A measure with finitely many atoms on [0, ∞) has exact rational moments
//! a_k = Σ w_i x_i^k, and every Hankel section (a_{i+j+shift}) is TN; it is
//! TP precisely while the section size stays within the support size. This
//! makes discrete measures the standard generator of guaranteed-TN and
//! guaranteed-TP Hankel test matrices.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize};

use crate::exact::Rat;
use crate::matrix::{hankel_from, Matrix};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
struct Atom {
    x: Rat,
    w: Rat,
}

/// Finitely many atoms (location, weight) with locations nonnegative and
/// strictly increasing and weights positive.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DiscreteMeasure {
    atoms: Vec<Atom>,
}

impl DiscreteMeasure {
    /// Build from (location, weight) pairs; locations must be nonnegative
    /// and strictly increasing, weights positive.
    pub fn new(atoms: Vec<(Rat, Rat)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::Domain("measure needs at least one atom".into()));
        }
        for (x, w) in &atoms {
            if x.is_negative() {
                return Err(Error::Domain(format!("atom location {x} is negative")));
            }
            if !w.is_positive() {
                return Err(Error::Domain(format!("atom weight {w} is not positive")));
            }
        }
        if atoms.windows(2).any(|p| p[0].0.cmp_rat(&p[1].0) != std::cmp::Ordering::Less) {
            return Err(Error::Domain("atom locations must be strictly increasing".into()));
        }
        Ok(DiscreteMeasure {
            atoms: atoms.into_iter().map(|(x, w)| Atom { x, w }).collect(),
        })
    }

    pub fn support_size(&self) -> usize {
        self.atoms.len()
    }

    /// Exact moments a_0, ..., a_{count-1}.
    pub fn moments(&self, count: usize) -> Vec<Rat> {
        let mut powers: Vec<Rat> = vec![Rat::one(); self.atoms.len()];
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let mut a = Rat::zero();
            for (atom, p) in self.atoms.iter().zip(powers.iter_mut()) {
                a = &a + &(&atom.w * p);
                *p = &*p * &atom.x;
            }
            out.push(a);
        }
        out
    }
}

impl<'de> Deserialize<'de> for DiscreteMeasure {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Doc {
            atoms: Vec<Atom>,
        }
        let doc = Doc::deserialize(deserializer)?;
        DiscreteMeasure::new(doc.atoms.into_iter().map(|a| (a.x, a.w)).collect())
            .map_err(serde::de::Error::custom)
    }
}

/// A moment-sequence generator.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MomentSequence {
    /// Moments of a discrete measure.
    Measure(DiscreteMeasure),
    /// a_k = k!, the moments of e^{-x} dx: infinite support, so every Hankel
    /// section of every size and shift is TP.
    Factorial,
    /// a_k = lambda^{k^2} with lambda > 1, the other classical
    /// infinite-support sequence.
    LambdaSquare { lambda: Rat },
    /// A verbatim finite list.
    Explicit { values: Vec<Rat> },
}

/// First `count` terms a_0, ..., a_{count-1}, exactly.
pub fn moments(m: &MomentSequence, count: usize) -> Result<Vec<Rat>> {
    match m {
        MomentSequence::Measure(mu) => Ok(mu.moments(count)),
        MomentSequence::Factorial => {
            let mut out = Vec::with_capacity(count);
            let mut f = Rat::one();
            for k in 0..count {
                if k > 0 {
                    f = &f * &Rat::from(k as i64);
                }
                out.push(f.clone());
            }
            Ok(out)
        }
        MomentSequence::LambdaSquare { lambda } => {
            if lambda.cmp_rat(&Rat::one()) != std::cmp::Ordering::Greater {
                return Err(Error::Domain(format!("lambda must exceed 1, got {lambda}")));
            }
            (0..count).map(|k| lambda.pow((k * k) as i64)).collect()
        }
        MomentSequence::Explicit { values } => {
            if values.len() < count {
                return Err(Error::SequenceTooShort { need: count, got: values.len() });
            }
            Ok(values[..count].to_vec())
        }
    }
}

/// The shifted n-square Hankel section (a_{i+j+shift}).
pub fn shifted_hankel(m: &MomentSequence, n: usize, shift: usize) -> Result<Matrix<Rat>> {
    let seq = moments(m, shift + 2 * n - 1)?;
    hankel_from(&seq[shift..], n)
}

/// Exact leading determinants of the two Hankel ladders.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StieltjesReport {
    /// det of the unshifted k-square sections, k = 1..=depth.
    pub deltas: Vec<Rat>,
    /// det of the shift-1 sections, same sizes.
    pub shifted_deltas: Vec<Rat>,
    /// Every determinant in both ladders is positive. This is exactly the
    /// statement that the depth-sized sections are TP.
    pub strict: bool,
}

/// Evaluate the strict Stieltjes criterion to the given depth: the sequence
/// comes from a measure with at least `depth`-point support iff all the
/// determinants are positive.
pub fn stieltjes_strict_check(m: &MomentSequence, depth: usize) -> Result<StieltjesReport> {
    if depth == 0 {
        return Err(Error::Domain("depth must be at least 1".into()));
    }
    let mut deltas = Vec::with_capacity(depth);
    let mut shifted = Vec::with_capacity(depth);
    for k in 1..=depth {
        deltas.push(shifted_hankel(m, k, 0)?.det()?);
        shifted.push(shifted_hankel(m, k, 1)?.det()?);
    }
    let strict =
        deltas.iter().all(Rat::is_positive) && shifted.iter().all(Rat::is_positive);
    Ok(StieltjesReport { deltas, shifted_deltas: shifted, strict })
}

/// A random measure with `atom_count` distinct rational locations in (0, 10]
/// and weights in (0, 5], deterministic in the generator state.
pub fn random_measure(atom_count: usize, rng: &mut impl Rng) -> DiscreteMeasure {
    assert!(atom_count >= 1, "need at least one atom");
    let mut picks = std::collections::BTreeSet::new();
    while picks.len() < atom_count {
        picks.insert(rng.gen_range(1..=100u32)); // location numerator over 10
    }
    let atoms = picks
        .into_iter()
        .map(|p| (Rat::ratio(p as i64, 10), Rat::ratio(rng.gen_range(1..=50u32) as i64, 10)))
        .collect();
    DiscreteMeasure::new(atoms).expect("locations distinct and positive by construction")
}

/// Seeded n-square Hankel section of a random `atom_count`-atom measure:
/// always TN, and TP exactly when `atom_count >= n`.
pub fn random_tn_hankel(n: usize, atom_count: usize, seed: u64) -> Matrix<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mu = random_measure(atom_count, &mut rng);
    shifted_hankel(&MomentSequence::Measure(mu), n, 0)
        .expect("discrete measures provide all moments")
}
