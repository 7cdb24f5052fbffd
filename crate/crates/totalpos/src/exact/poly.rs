use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rat;

/// Univariate polynomial over [`Rat`], dense coefficients with the constant
/// term first. Trailing zero coefficients are stripped, so the zero
/// polynomial is the empty vector and `degree` is `len - 1` otherwise.
///
/// The same type serves polynomials in the matrix variable `x` and
/// polynomials in the power exponent `t`; only display differs.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial of degree 1 with coefficient 1.
    pub fn var() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// Convenience constructor from machine integers, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The constant value if the polynomial has degree at most 0.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn is_coeffwise_nonneg(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    pub fn scale(&self, by: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * by).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rat::from(k as i64))
                .collect(),
        )
    }

    /// Exact quotient, or `None` when the division leaves a remainder
    /// (or the divisor is zero).
    pub fn exact_div(&self, rhs: &Poly) -> Option<Poly> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (dn, dd) = (self.coeffs.len() - 1, rhs.coeffs.len() - 1);
        if dn < dd {
            return None;
        }
        let lead = &rhs.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let q = &rem[k + dd] / lead;
            if !q.is_zero() {
                for (i, rc) in rhs.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &(&q * rc);
                }
            }
            quot[k] = q;
        }
        if rem.iter().all(Rat::is_zero) {
            Some(Poly::new(quot))
        } else {
            None
        }
    }

    /// The falling factorial `t (t-1) ... (t-k+1)` as a polynomial in `t`;
    /// the empty product (`k = 0`) is 1.
    pub fn falling_factorial(k: usize) -> Poly {
        let mut acc = Poly::one();
        for j in 0..k {
            acc = &acc * &Poly::new(vec![Rat::from(-(j as i64)), Rat::one()]);
        }
        acc
    }

    /// Render with a caller-chosen variable name.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match k {
                0 => mag.to_string(),
                _ => {
                    let v = if k == 1 { var.to_string() } else { format!("{var}^{k}") };
                    if mag == Rat::one() {
                        v
                    } else {
                        format!("{mag}*{v}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

macro_rules! poly_binop_forward {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
    };
}

impl std::ops::Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl std::ops::Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl std::ops::Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

poly_binop_forward!(Add, add);
poly_binop_forward!(Sub, sub);
poly_binop_forward!(Mul, mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Poly::new(Vec::<Rat>::deserialize(deserializer)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_strips_trailing_zeros() {
        let p = Poly::new(vec![Rat::one(), Rat::zero(), Rat::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert!(Poly::from_ints(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn eval_is_exact_horner() {
        // t^3 - t^4 at 1, 2, 1/2
        let p = Poly::from_ints(&[0, 0, 0, 1, -1]);
        assert_eq!(p.eval(&Rat::one()), Rat::zero());
        assert_eq!(p.eval(&Rat::from(2)), Rat::from(-8));
        assert_eq!(p.eval(&Rat::ratio(1, 2)), Rat::ratio(1, 16));
    }

    #[test]
    fn falling_factorial_matches_expansion() {
        assert_eq!(Poly::falling_factorial(0), Poly::one());
        assert_eq!(Poly::falling_factorial(1), Poly::var());
        // t(t-1) = t^2 - t
        assert_eq!(Poly::falling_factorial(2), Poly::from_ints(&[0, -1, 1]));
        // t(t-1)(t-2) = t^3 - 3t^2 + 2t
        assert_eq!(Poly::falling_factorial(3), Poly::from_ints(&[0, 2, -3, 1]));
    }

    #[test]
    fn exact_div_round_trips() {
        let a = Poly::from_ints(&[1, 2, 1]);
        let b = Poly::from_ints(&[1, 1]);
        assert_eq!(a.exact_div(&b), Some(b.clone()));
        assert_eq!(Poly::from_ints(&[1, 2, 2]).exact_div(&b), None);
        assert_eq!(a.exact_div(&Poly::zero()), None);
        assert_eq!(Poly::zero().exact_div(&b), Some(Poly::zero()));
    }

    #[test]
    fn display_uses_caret_powers() {
        let p = Poly::from_ints(&[0, 0, 0, 1, -1]);
        assert_eq!(p.display_with("t"), "t^3 - t^4");
        let q = Poly::new(vec![Rat::ratio(-1, 2), Rat::zero(), Rat::ratio(3, 2)]);
        assert_eq!(q.to_string(), "-1/2 + 3/2*x^2");
    }

    #[test]
    fn derivative_drops_degree() {
        let p = Poly::from_ints(&[5, 0, 0, 1, -1]); // 5 + t^3 - t^4
        assert_eq!(p.derivative(), Poly::from_ints(&[0, 0, 3, -4]));
    }
}
