//! Rational interval arithmetic with directed rounding for the
//! transcendental ingredients the sign certifier needs: rational powers
//! b^(p/q), natural logarithms (atanh series with argument reduction), and
//! the exponential (series plus repeated squaring).
//!
//! Every interval is a pair of exact rationals enclosing the true real
//! value, so a sum of intervals that misses 0 is a proof of sign.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::Rat;
use crate::{Error, Result};

/// Closed interval [lo, hi] with exact rational endpoints, lo <= hi.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn point(v: Rat) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn zero() -> Self {
        Interval::point(Rat::zero())
    }

    pub fn add(&self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }

    /// Multiply by an exact scalar, flipping endpoints for negative scale.
    pub fn scale(&self, c: &Rat) -> Interval {
        if c.is_negative() {
            Interval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            Interval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    /// Interval product: min and max over the four endpoint products.
    pub fn mul(&self, rhs: &Interval) -> Interval {
        let mut products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        products.sort_by(|a, b| a.cmp_rat(b));
        let [lo, _, _, hi] = products;
        Interval { lo, hi }
    }

    /// `Some(sign)` when the interval proves one: entirely positive,
    /// entirely negative, or the exact point zero. `None` when 0 is interior.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

/// Enclose v^(1/q) for rational v > 0 within 2^(1-bits): take integer q-th
/// roots of floor/ceil of v * 2^(q*bits) and divide back by 2^bits. Cost
/// grows with q, so callers keep q small and route large denominators
/// through exp/ln instead.
pub fn nth_root_interval(v: &Rat, q: u32, bits: u32) -> Result<Interval> {
    if !v.is_positive() {
        return Err(Error::Domain(format!("root of non-positive value {v}")));
    }
    if q == 0 {
        return Err(Error::Domain("zeroth root".into()));
    }
    let shift = (q as usize) * (bits as usize);
    let scaled_num: BigInt = v.numer() << shift;
    let den = v.denom();
    let unit = Rat::from_bigint(BigInt::one() << bits).recip().expect("nonzero");

    let lo_int = scaled_num.div_floor(den);
    let lo_root = lo_int.nth_root(q);
    // exact hit: v * 2^(q*bits) is an integer with an exact q-th root
    if scaled_num.mod_floor(den).is_zero() && lo_root.pow(q) == lo_int {
        let exact = &Rat::from_bigint(lo_root) * &unit;
        return Ok(Interval::point(exact));
    }
    let hi_int = scaled_num.div_ceil(den);
    let hi_root = hi_int.nth_root(q) + 1;
    Ok(Interval {
        lo: &Rat::from_bigint(lo_root) * &unit,
        hi: &Rat::from_bigint(hi_root) * &unit,
    })
}

const MAX_EXACT_EXP: i64 = 1 << 20;
/// Largest exponent denominator still sent to [`nth_root_interval`]; beyond
/// it b^t goes through exp/ln, whose cost is independent of the denominator.
const MAX_ROOT_DENOM: u32 = 64;

/// b^t exactly, when t = p/q with b^p a perfect q-th power; `None` when the
/// value is irrational (or too large to verify cheaply).
pub(crate) fn exact_pow(b: &Rat, t: &Rat) -> Result<Option<Rat>> {
    if !b.is_positive() {
        return Err(Error::Domain(format!("power of non-positive base {b}")));
    }
    let p: i64 = match t.numer().try_into() {
        Ok(p) if i64::abs(p) <= MAX_EXACT_EXP => p,
        _ => return Ok(None),
    };
    let q: u32 = match t.denom().try_into() {
        Ok(q) => q,
        Err(_) => return Ok(None),
    };
    let v = b.pow(p)?;
    if q == 1 {
        return Ok(Some(v));
    }
    if v == Rat::one() {
        return Ok(Some(v));
    }
    // a q-th power other than 1 needs at least q bits in numerator or denominator
    if u64::from(q) > v.numer().bits().max(v.denom().bits()) {
        return Ok(None);
    }
    let rn = v.numer().nth_root(q);
    if rn.pow(q) != *v.numer() {
        return Ok(None);
    }
    let rd = v.denom().nth_root(q);
    if rd.pow(q) != *v.denom() {
        return Ok(None);
    }
    Ok(Some(&Rat::from_bigint(rn) / &Rat::from_bigint(rd)))
}

/// Enclose b^t for rational b > 0 and rational t. Integer t gives an exact
/// point. Small denominators go through [`nth_root_interval`] (which can
/// also collapse to exact points); everything else through
/// b^floor(t) * exp(frac(t) * ln b).
pub fn pow_interval(b: &Rat, t: &Rat, bits: u32) -> Result<Interval> {
    if !b.is_positive() {
        return Err(Error::Domain(format!("power of non-positive base {b}")));
    }
    if b == &Rat::one() {
        return Ok(Interval::point(Rat::one()));
    }
    if let Some(p) = t.to_i64() {
        if p.abs() > MAX_EXACT_EXP {
            return Err(Error::Precision(format!("integer exponent {p} too large")));
        }
        return Ok(Interval::point(b.pow(p)?));
    }
    if let (Ok(q), Ok(p)) = (u32::try_from(t.denom()), i64::try_from(t.numer())) {
        if q <= MAX_ROOT_DENOM && p.abs() <= MAX_EXACT_EXP {
            return nth_root_interval(&b.pow(p)?, q, bits);
        }
    }
    let n: i64 = t.floor_int().try_into().map_err(|_| {
        Error::Precision(format!("exponent {t} outside the supported range"))
    })?;
    if n.abs() > MAX_EXACT_EXP {
        return Err(Error::Precision(format!("exponent {t} outside the supported range")));
    }
    let scale = b.pow(n)?;
    let frac = t - &Rat::from(n); // in [0, 1)
    let guard = bits + 32;
    let arg = ln_interval(b, guard)?.scale(&frac);
    let enclosure = Interval {
        lo: exp_point(&arg.lo, guard).lo,
        hi: exp_point(&arg.hi, guard).hi,
    };
    Ok(enclosure.scale(&scale))
}

/// Enclose e^x for rational x: halve the argument into [-1/2, 1/2], round it
/// to a dyadic of `bits + s + 8` fractional bits (outward, separately for
/// each endpoint), sum the exponential series with a tail bound, then square
/// back up with outward dyadic re-rounding after every squaring.
fn exp_point(x: &Rat, bits: u32) -> Interval {
    let half = Rat::ratio(1, 2);
    let mut s = 0u32;
    let mut y = x.clone();
    while y.abs().cmp_rat(&half) == std::cmp::Ordering::Greater {
        y = shift_by(&y, -1);
        s += 1;
    }
    let scale = bits + s + 8;
    let mut lo = exp_series(&dyadic(&y, scale, false), scale).lo;
    let mut hi = exp_series(&dyadic(&y, scale, true), scale).hi;
    debug_assert!(lo.is_positive(), "exp on [-1/2, 1/2] stays well above 0");
    for _ in 0..s {
        lo = dyadic(&(&lo * &lo), scale, false);
        hi = dyadic(&(&hi * &hi), scale, true);
    }
    Interval { lo, hi }
}

/// Exact partial sum of e^d for |d| <= 1/2, with tail bound
/// 2 * |d|^(k+1) / (k+1)! applied outward.
fn exp_series(d: &Rat, scale: u32) -> Interval {
    let target = Rat::from_bigint(BigInt::one() << (scale + 2)).recip().expect("nonzero");
    let mut sum = Rat::one();
    let mut term = Rat::one();
    let mut k: i64 = 1;
    loop {
        term = &(&term * d) / &Rat::from(k);
        sum = &sum + &term;
        k += 1;
        let next = &(&term.abs() * &d.abs()) / &Rat::from(k);
        let tail = &next + &next;
        if tail.cmp_rat(&target) != std::cmp::Ordering::Greater {
            return Interval { lo: &sum - &tail, hi: &sum + &tail };
        }
    }
}

/// Round to the dyadic grid of `scale` fractional bits, downward or upward.
fn dyadic(v: &Rat, scale: u32, up: bool) -> Rat {
    let unit = Rat::from_bigint(BigInt::one() << scale);
    let shifted = v * &unit;
    let mut i = shifted.floor_int();
    if up && !shifted.is_integer() {
        i += 1;
    }
    &Rat::from_bigint(i) / &unit
}

/// atanh(z) = z + z^3/3 + z^5/5 + ... for |z| <= 1/3, enclosed by an exact
/// partial sum plus a geometric tail bound.
fn atanh_interval(z: &Rat, bits: u32) -> Interval {
    let z2 = z * z;
    debug_assert!(z2.cmp_rat(&Rat::ratio(1, 9)) != std::cmp::Ordering::Greater);
    let target = Rat::from_bigint(BigInt::one() << (bits + 2)).recip().expect("nonzero");
    let mut sum = Rat::zero();
    let mut zpow = z.clone(); // z^(2j+1)
    let mut j = 0u32;
    loop {
        sum = &sum + &(&zpow / &Rat::from(2 * j as i64 + 1));
        zpow = &zpow * &z2;
        j += 1;
        // tail from term j on: |z|^(2j+1)/(2j+1) * 1/(1 - z^2)
        let tail = &(&zpow.abs() / &Rat::from(2 * j as i64 + 1))
            / &(&Rat::one() - &z2);
        if tail.cmp_rat(&target) != std::cmp::Ordering::Greater {
            return Interval { lo: &sum - &tail, hi: &sum + &tail };
        }
    }
}

/// ln 2 enclosure: 2 * atanh(1/3).
fn ln2_interval(bits: u32) -> Interval {
    atanh_interval(&Rat::ratio(1, 3), bits + 1).scale(&Rat::from(2))
}

/// Enclose ln v for rational v > 0: reduce v = m * 2^e with m in [3/4, 3/2),
/// then ln v = e*ln2 + 2*atanh((m-1)/(m+1)).
pub fn ln_interval(v: &Rat, bits: u32) -> Result<Interval> {
    if !v.is_positive() {
        return Err(Error::Domain(format!("log of non-positive value {v}")));
    }
    if v == &Rat::one() {
        return Ok(Interval::zero());
    }
    // rough exponent from bit lengths, then adjust into the window
    let mut e = v.numer().bits() as i64 - v.denom().bits() as i64;
    let mut m = shift_by(v, -e);
    let hi_edge = Rat::ratio(3, 2);
    let lo_edge = Rat::ratio(3, 4);
    while m.cmp_rat(&hi_edge) != std::cmp::Ordering::Less {
        m = shift_by(&m, -1);
        e += 1;
    }
    while m.cmp_rat(&lo_edge) == std::cmp::Ordering::Less {
        m = shift_by(&m, 1);
        e -= 1;
    }
    let z = &(&m - &Rat::one()) / &(&m + &Rat::one());
    let ln_m = atanh_interval(&z, bits + 1).scale(&Rat::from(2));
    if e == 0 {
        return Ok(ln_m);
    }
    Ok(ln2_interval(bits).scale(&Rat::from(e)).add(&ln_m))
}

fn shift_by(v: &Rat, e: i64) -> Rat {
    let shift = Rat::from_bigint(BigInt::one() << e.unsigned_abs() as usize);
    if e >= 0 {
        v * &shift
    } else {
        v * &shift.recip().expect("power of two")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(iv: &Interval, approx: f64) {
        let lo = iv.lo.numer().to_string().parse::<f64>().unwrap()
            / iv.lo.denom().to_string().parse::<f64>().unwrap();
        let hi = iv.hi.numer().to_string().parse::<f64>().unwrap()
            / iv.hi.denom().to_string().parse::<f64>().unwrap();
        assert!(lo <= approx && approx <= hi, "{approx} not in [{lo}, {hi}]");
    }

    fn between(iv: &Interval, lo: Rat, hi: Rat) {
        assert!(
            iv.lo.cmp_rat(&lo) == std::cmp::Ordering::Greater
                && iv.hi.cmp_rat(&hi) == std::cmp::Ordering::Less,
            "[{}, {}] not inside ({lo}, {hi})",
            iv.lo,
            iv.hi
        );
    }

    #[test]
    fn square_root_enclosure() {
        let iv = nth_root_interval(&Rat::from(2), 2, 64).unwrap();
        contains(&iv, std::f64::consts::SQRT_2);
        assert!(iv.width().cmp_rat(&Rat::ratio(1, 1 << 62)) == std::cmp::Ordering::Less);

        // exact cube root collapses to a point
        let iv = nth_root_interval(&Rat::from(27), 3, 32).unwrap();
        assert_eq!(iv, Interval::point(Rat::from(3)));

        let iv = nth_root_interval(&Rat::ratio(1, 4), 2, 64).unwrap();
        assert_eq!(iv, Interval::point(Rat::ratio(1, 2)));
    }

    #[test]
    fn pow_enclosures() {
        // integer exponent is exact
        let iv = pow_interval(&Rat::ratio(3, 2), &Rat::from(3), 64).unwrap();
        assert_eq!(iv, Interval::point(Rat::ratio(27, 8)));

        // 2^(1/2)
        let iv = pow_interval(&Rat::from(2), &Rat::ratio(1, 2), 80).unwrap();
        contains(&iv, std::f64::consts::SQRT_2);

        // 8^(2/3) = 4 exactly
        let iv = pow_interval(&Rat::from(8), &Rat::ratio(2, 3), 32).unwrap();
        assert_eq!(iv, Interval::point(Rat::from(4)));

        // negative rational exponent
        let iv = pow_interval(&Rat::from(4), &Rat::ratio(-1, 2), 64).unwrap();
        assert_eq!(iv, Interval::point(Rat::ratio(1, 2)));

        assert!(pow_interval(&Rat::zero(), &Rat::ratio(1, 2), 32).is_err());
    }

    #[test]
    fn pow_large_denominators_route_through_exp() {
        // 2^(-439/1024) = 0.742925...; denominator forces the exp/ln path
        let iv = pow_interval(&Rat::from(2), &Rat::ratio(-439, 1024), 64).unwrap();
        between(&iv, Rat::ratio(7429, 10000), Rat::ratio(7430, 10000));

        // base below 1: (1/3)^(439/1024) = 0.624385...
        let iv = pow_interval(&Rat::ratio(1, 3), &Rat::ratio(439, 1024), 64).unwrap();
        between(&iv, Rat::ratio(6243, 10000), Rat::ratio(6244, 10000));

        // a bisection-style denominator far beyond u32
        let q = &Rat::from_bigint(BigInt::one() << 40) * &Rat::from(7);
        let t = &Rat::from(5571) / &q; // about 7.24e-10
        let iv = pow_interval(&Rat::from(4), &t, 64).unwrap();
        assert_eq!(iv.sign(), Some(1));
        between(&iv, Rat::one(), Rat::ratio(100_000_001, 100_000_000));
        assert!(iv.width().cmp_rat(&Rat::ratio(1, 1 << 40)) == std::cmp::Ordering::Less);
    }

    #[test]
    fn exact_powers_detected() {
        assert_eq!(exact_pow(&Rat::from(4), &Rat::ratio(1, 2)).unwrap(), Some(Rat::from(2)));
        assert_eq!(exact_pow(&Rat::from(2), &Rat::ratio(1, 2)).unwrap(), None);
        assert_eq!(
            exact_pow(&Rat::ratio(8, 27), &Rat::ratio(2, 3)).unwrap(),
            Some(Rat::ratio(4, 9))
        );
        assert_eq!(exact_pow(&Rat::from(5), &Rat::from(3)).unwrap(), Some(Rat::from(125)));
        let tiny = &Rat::one() / &Rat::from_bigint(BigInt::one() << 80);
        assert_eq!(exact_pow(&Rat::from(2), &tiny).unwrap(), None);
        assert!(exact_pow(&Rat::zero(), &Rat::one()).is_err());
    }

    #[test]
    fn ln_enclosures() {
        assert_eq!(ln_interval(&Rat::one(), 64).unwrap(), Interval::zero());

        let iv = ln_interval(&Rat::from(2), 64).unwrap();
        contains(&iv, std::f64::consts::LN_2);
        assert_eq!(iv.sign(), Some(1));

        let iv = ln_interval(&Rat::ratio(1, 3), 64).unwrap();
        contains(&iv, -(3f64).ln());
        assert_eq!(iv.sign(), Some(-1));

        let iv = ln_interval(&Rat::from(1_000_000), 64).unwrap();
        contains(&iv, 6.0 * 10f64.ln());

        assert!(ln_interval(&Rat::from(-1), 32).is_err());
    }

    #[test]
    fn interval_signs() {
        assert_eq!(Interval { lo: Rat::ratio(1, 5), hi: Rat::one() }.sign(), Some(1));
        assert_eq!(Interval { lo: -Rat::one(), hi: Rat::ratio(-1, 9) }.sign(), Some(-1));
        assert_eq!(Interval::zero().sign(), Some(0));
        assert_eq!(Interval { lo: -Rat::one(), hi: Rat::one() }.sign(), None);
        assert_eq!(Interval { lo: Rat::zero(), hi: Rat::one() }.sign(), None);
    }

    #[test]
    fn interval_products() {
        let a = Interval { lo: Rat::from(-1), hi: Rat::from(2) };
        let b = Interval { lo: Rat::from(-3), hi: Rat::from(5) };
        let p = a.mul(&b);
        assert_eq!(p.lo, Rat::from(-6));
        assert_eq!(p.hi, Rat::from(10));
    }
}
