use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator, so equality is structural and the sign is the numerator sign.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// `p / q` from machine integers. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// -1, 0, or +1.
    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Rat(self.0.recip()))
    }

    /// Integer power; negative exponents invert, so the base must be nonzero.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return Ok(Rat(self.recip()?.0.pow(
                (-e).try_into().map_err(|_| Error::Domain("exponent overflow".into()))?,
            )));
        }
        let e: i32 = e.try_into().map_err(|_| Error::Domain("exponent overflow".into()))?;
        Ok(Rat(self.0.pow(e)))
    }

    /// Floor of the rational as a big integer.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Exact value as i64 when the rational is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        self.0.numer().to_i64()
    }

    pub fn cmp_rat(&self, other: &Rat) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl std::ops::$trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl std::ops::$trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
    };
}

rat_binop!(Add, add, +);
rat_binop!(Sub, sub, -);
rat_binop!(Mul, mul, *);

impl std::ops::Div<&Rat> for &Rat {
    type Output = Rat;
    /// Panics on division by zero; use [`Rat::recip`] to handle it as an error.
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl std::ops::Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl std::ops::Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `"p"`, `"-p"`, or `"p/q"` with decimal digits and `q > 0`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, Some(q)),
            None => (s, None),
        };
        let p = p.trim();
        let digits = p.strip_prefix('-').unwrap_or(p);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = p.parse().map_err(|_| bad())?;
        let den: BigInt = match q {
            None => BigInt::one(),
            Some(q) => {
                let q = q.trim();
                if q.is_empty() || !q.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let d: BigInt = q.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                d
            }
        };
        Ok(Rat(BigRational::new(num, den)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Rat;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<Rat, E> {
                s.parse().map_err(de::Error::custom)
            }
            fn visit_i64<E: de::Error>(self, n: i64) -> std::result::Result<Rat, E> {
                Ok(Rat::from(n))
            }
            fn visit_u64<E: de::Error>(self, n: u64) -> std::result::Result<Rat, E> {
                Ok(Rat(BigRational::from_integer(BigInt::from(n))))
            }
        }
        deserializer.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "7", "-7", "3/4", "-3/4", "22/7"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        // non-canonical input canonicalizes
        assert_eq!("6/4".parse::<Rat>().unwrap(), Rat::ratio(3, 2));
        assert_eq!("-6/3".parse::<Rat>().unwrap(), Rat::from(-2));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "1/-2", "--3", "a/b", "1.5", "1/ 2x"] {
            assert!(s.parse::<Rat>().is_err(), "should reject {s:?}");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = Rat::ratio(1, 3);
        let b = Rat::ratio(1, 6);
        assert_eq!(&a + &b, Rat::ratio(1, 2));
        assert_eq!(&a - &b, Rat::ratio(1, 6));
        assert_eq!(&a * &b, Rat::ratio(1, 18));
        assert_eq!(&a / &b, Rat::from(2));
        assert_eq!(a.pow(-2).unwrap(), Rat::from(9));
    }

    #[test]
    fn sign_reduces_to_numerator() {
        assert_eq!(Rat::ratio(-3, 7).signum(), -1);
        assert_eq!(Rat::zero().signum(), 0);
        assert_eq!(Rat::ratio(3, 7).signum(), 1);
    }

    #[test]
    fn serde_accepts_strings_and_integers() {
        let v: Vec<Rat> = serde_json::from_str(r#"["3/4", -2, "5"]"#).unwrap();
        assert_eq!(v, vec![Rat::ratio(3, 4), Rat::from(-2), Rat::from(5)]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["3/4","-2","5"]"#);
    }
}
