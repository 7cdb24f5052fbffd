use std::fmt;

use super::{Poly, Rat};

/// Power series in `x` truncated at a fixed order, with coefficients that are
/// polynomials in `t`. Exact modulo `x^{order+1}`.
///
/// Binary operations on series of different orders truncate to the smaller
/// order: that is all the information both operands carry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<Poly>, // index k = coefficient of x^k; len = order + 1
}

impl Series {
    /// Series with the given truncation order; coefficients beyond the given
    /// list are zero, extras are dropped.
    pub fn new(order: usize, mut coeffs: Vec<Poly>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, Poly::zero());
        Series { coeffs }
    }

    pub fn constant(order: usize, c: Poly) -> Self {
        Series::new(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        Series::constant(order, Poly::one())
    }

    pub fn zero(order: usize) -> Self {
        Series::new(order, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Poly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// Truncate (or keep) to a possibly smaller order.
    pub fn truncated(&self, order: usize) -> Series {
        Series::new(order.min(self.order()), self.coeffs.clone())
    }

    /// Quotient `q` with `self = q * rhs` modulo the common order, when every
    /// step of the recursion divides exactly; `None` otherwise (in particular
    /// whenever the divisor's constant coefficient is zero).
    pub fn exact_div(&self, rhs: &Series) -> Option<Series> {
        let order = self.order().min(rhs.order());
        let b0 = rhs.coeff(0);
        if b0.is_zero() {
            return None;
        }
        let mut q: Vec<Poly> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for (i, qi) in q.iter().enumerate() {
                acc = &acc - &(qi * rhs.coeff(k - i));
            }
            q.push(acc.exact_div(b0)?);
        }
        Some(Series::new(order, q))
    }
}

impl std::ops::Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::new(order, (0..=order).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl std::ops::Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::new(order, (0..=order).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl std::ops::Mul<&Series> for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![Poly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Series::new(order, out)
    }
}

impl std::ops::Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.order(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "({})", c.display_with("t"))?,
                1 => write!(f, "({})*x", c.display_with("t"))?,
                _ => write!(f, "({})*x^{k}", c.display_with("t"))?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// The binomial series of `(1 + alpha*x)^t` truncated at the given order:
/// the `x^k` coefficient is the polynomial `t(t-1)...(t-k+1) / k! * alpha^k`.
pub fn binomial_series(alpha: &Rat, order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut alpha_pow = Rat::one();
    let mut k_fact = Rat::one();
    for k in 0..=order {
        if k > 0 {
            alpha_pow = &alpha_pow * alpha;
            k_fact = &k_fact * &Rat::from(k as i64);
        }
        coeffs.push(Poly::falling_factorial(k).scale(&(&alpha_pow / &k_fact)));
    }
    Series::new(order, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(p: Poly) -> Poly {
        p.scale(&Rat::ratio(1, 2))
    }

    #[test]
    fn binomial_series_small_orders() {
        // (1 + 0x)^t = 1
        let s = binomial_series(&Rat::zero(), 3);
        assert_eq!(s.coeff(0), &Poly::one());
        for k in 1..=3 {
            assert!(s.coeff(k).is_zero());
        }

        // alpha = 1: 1 + t x + (t^2 - t)/2 x^2
        let s = binomial_series(&Rat::one(), 2);
        assert_eq!(s.coeff(1), &Poly::var());
        assert_eq!(s.coeff(2), &half(Poly::from_ints(&[0, -1, 1])));

        // alpha = 3 scales the x^2 coefficient by 9
        let s = binomial_series(&Rat::from(3), 2);
        assert_eq!(s.coeff(2), &half(Poly::from_ints(&[0, -9, 9])));
    }

    #[test]
    fn integer_exponent_matches_finite_expansion() {
        // at t = m the series equals the expansion of (1 + alpha x)^m
        let alpha = Rat::ratio(2, 3);
        let order = 5;
        let s = binomial_series(&alpha, order);
        for m in 0..=order as i64 {
            let mut expect = Poly::one();
            let base = Poly::new(vec![Rat::one(), alpha.clone()]);
            for _ in 0..m {
                expect = &expect * &base;
            }
            for k in 0..=order {
                assert_eq!(s.coeff(k).eval(&Rat::from(m)), expect.coeff(k), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn mul_truncates_to_smaller_order() {
        let a = binomial_series(&Rat::one(), 4);
        let b = binomial_series(&Rat::from(2), 2);
        let p = &a * &b;
        assert_eq!(p.order(), 2);
        // (1+x)^t (1+2x)^t at t=1 is 1 + 3x + 2x^2
        assert_eq!(p.coeff(1).eval(&Rat::one()), Rat::from(3));
        assert_eq!(p.coeff(2).eval(&Rat::one()), Rat::from(2));
    }

    #[test]
    fn exact_div_inverts_mul() {
        let a = binomial_series(&Rat::ratio(1, 2), 4);
        let b = binomial_series(&Rat::from(3), 4);
        let p = &a * &b;
        assert_eq!(p.exact_div(&b), Some(a));
        // divisor with zero constant coefficient has no quotient
        let x = Series::new(2, vec![Poly::zero(), Poly::one()]);
        assert_eq!(x.exact_div(&x), None);
    }
}
