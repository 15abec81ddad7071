use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// Element of Q(t) in canonical form `num / den`.
///
/// `den` is a monic polynomial with nonzero constant term and
/// `gcd(num, den) = 1`; any power of `t` lives in `num`. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(c.into()))
    }

    /// `c * t^e`.
    pub fn monomial(c: BigRational, e: i64) -> Self {
        Self::from_poly(Poly::monomial(c, e))
    }

    pub fn t_pow(e: i64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    /// Canonicalizes an arbitrary quotient of Laurent polynomials.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (k, den) = den.split_t_power();
        let num = num.shift(-k);
        let lead = den.lead().unwrap().clone();
        let (den, num) = if lead.is_one() {
            (den, num)
        } else {
            let inv = lead.recip();
            (den.scale(&inv), num.scale(&inv))
        };
        Ok(Self::reduced(num, den))
    }

    /// `den` already monic with nonzero constant term; removes the common factor.
    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let (k, core) = num.split_t_power();
        let g = Poly::gcd(&core, &den);
        if g.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: core.exact_div(&g).shift(k), den: den.exact_div(&g) }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.add_signed(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add_signed(o, true)
    }

    fn add_signed(&self, o: &Self, negate: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        let combine = |a: &Poly, b: &Poly| if negate { a.sub(b) } else { a.add(b) };
        if self.den == o.den {
            let num = combine(&self.num, &o.num);
            return Self::reduced(num, self.den.clone());
        }
        if o.den.is_one() {
            let num = combine(&self.num, &o.num.mul(&self.den));
            return RatFunc { num, den: self.den.clone() };
        }
        if self.den.is_one() {
            let num = combine(&self.num.mul(&o.den), &o.num);
            return RatFunc { num, den: o.den.clone() };
        }
        let g = Poly::gcd(&self.den, &o.den);
        let a_rest = self.den.exact_div(&g);
        let b_rest = o.den.exact_div(&g);
        let num = combine(&self.num.mul(&b_rest), &o.num.mul(&a_rest));
        let den = self.den.mul(&b_rest);
        Self::reduced(num, den)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: self.num.mul(&o.num), den: Poly::one() };
        }
        let (ka, ca) = self.num.split_t_power();
        let (kb, cb) = o.num.split_t_power();
        let g1 = Poly::gcd(&ca, &o.den);
        let g2 = Poly::gcd(&cb, &self.den);
        let num = ca.exact_div(&g1).mul(&cb.exact_div(&g2)).shift(ka + kb);
        let den = self.den.exact_div(&g2).mul(&o.den.exact_div(&g1));
        RatFunc { num, den }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (k, core) = self.num.split_t_power();
        let lead = core.lead().unwrap().recip();
        Ok(RatFunc { num: self.den.scale(&lead).shift(-k), den: core.scale(&lead) })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        if let Some((c, e)) = self.num.as_monomial().filter(|_| self.den.is_one()) {
            return Ok(Self::monomial(super::poly::rat_pow(c, k), e * k));
        }
        Ok(RatFunc { num: self.num.pow(k as u32), den: self.den.pow(k as u32) })
    }

    /// Returns `k` when the value is exactly `t^k`.
    pub fn as_t_power(&self) -> Option<i64> {
        if self.den.is_one() {
            self.num.as_t_power()
        } else {
            None
        }
    }

    /// Returns the constant value when the function is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.num.as_monomial() {
            Some((c, 0)) if self.den.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Exact evaluation at `t = t0`.
    pub fn specialize(&self, t0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(t0).ok_or_else(|| Error::Pole(t0.to_string()))?;
        if d.is_zero() {
            return Err(Error::Pole(t0.to_string()));
        }
        let n = self.num.eval(t0).ok_or_else(|| Error::Pole(t0.to_string()))?;
        Ok(n / d)
    }

    /// Renders with `q = t^scale` when every exponent is divisible by `scale`.
    pub fn render_q(&self, scale: i64) -> String {
        let divisible =
            |p: &Poly| p.terms().iter().all(|(e, _)| e % scale == 0);
        if scale <= 1 || !divisible(&self.num) || !divisible(&self.den) {
            return self.to_string();
        }
        struct Q<'a>(&'a Poly, i64);
        impl fmt::Display for Q<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.write_in(f, "q", self.1)
            }
        }
        if self.den.is_one() {
            Q(&self.num, scale).to_string()
        } else {
            format!("({})/({})", Q(&self.num, scale), Q(&self.den, scale))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::poly::int;

    fn tp(coeffs: &[(i64, i64)]) -> RatFunc {
        RatFunc::from_poly(Poly::from_terms(coeffs.iter().map(|&(e, c)| (e, int(c)))))
    }

    #[test]
    fn canonical_quotient() {
        let x = RatFunc::from_parts(
            Poly::from_terms(vec![(2, int(1)), (0, int(-1))]),
            Poly::from_terms(vec![(1, int(2)), (0, int(-2))]),
        )
        .unwrap();
        assert_eq!(x, tp(&[(1, 1), (0, 1)]).mul(&RatFunc::from_rational(BigRational::new(1.into(), 2.into()))));
        assert!(x.is_laurent());
    }

    #[test]
    fn inverse_of_t() {
        assert_eq!(RatFunc::t_pow(1).inv().unwrap(), RatFunc::t_pow(-1));
        let x = tp(&[(1, 1), (0, 3)]);
        assert!(x.mul(&x.inv().unwrap()).is_one());
        assert!(RatFunc::zero().inv().is_err());
    }

    #[test]
    fn sums_cancel_denominators() {
        let a = tp(&[(1, 1), (0, -1)]).inv().unwrap();
        let b = tp(&[(1, 1), (0, 1)]).inv().unwrap();
        let s = a.sub(&b);
        assert_eq!(s, RatFunc::from_int(2).div(&tp(&[(2, 1), (0, -1)])).unwrap());
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn specialization() {
        let two = BigRational::from_integer(2.into());
        let x = tp(&[(2, 1), (0, -1)]).div(&tp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(x.specialize(&two).unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(RatFunc::t_pow(-1).specialize(&two).unwrap(), BigRational::new(1.into(), 2.into()));
        let pole = tp(&[(1, 1), (0, -2)]).inv().unwrap();
        assert!(matches!(pole.specialize(&two), Err(Error::Pole(_))));
    }

    #[test]
    fn q_rendering() {
        let x = tp(&[(6, 1), (0, -1)]);
        assert_eq!(x.render_q(6), "q - 1");
        assert_eq!(RatFunc::t_pow(3).render_q(6), "t^3");
    }
}
