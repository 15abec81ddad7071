use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::field::Field;
use super::parse::parse_ratfunc;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Which field the session computes in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    Symbolic,
    Specialized(BigRational),
}

/// Rank `n` and the embedding `q = t^{2(n+1)}` shared by a session.
#[derive(Clone, Debug)]
pub struct ScalarContext<F> {
    n: usize,
    t: F,
    backend: Backend,
}

impl ScalarContext<RatFunc> {
    pub fn symbolic(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        ScalarContext { n, t: RatFunc::t_pow(1), backend: Backend::Symbolic }
    }
}

impl ScalarContext<BigRational> {
    pub fn specialized(n: usize, t0: BigRational) -> Result<Self> {
        assert!(n >= 1, "rank must be positive");
        if Field::is_zero(&t0) || Field::is_one(&t0) || Field::is_one(&Field::neg(&t0)) {
            return Err(Error::InvalidArgument(format!("t0 = {t0} must not be 0 or ±1")));
        }
        Ok(ScalarContext { n, t: t0.clone(), backend: Backend::Specialized(t0) })
    }
}

impl<F: Field> ScalarContext<F> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Exponent `e` with `q = t^e`.
    pub fn scale(&self) -> i64 {
        2 * (self.n as i64 + 1)
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn t(&self) -> &F {
        &self.t
    }

    /// Same backend with a different rank.
    pub fn with_rank(&self, n: usize) -> Self {
        ScalarContext { n, t: self.t.clone(), backend: self.backend.clone() }
    }

    pub fn t_pow(&self, k: i64) -> F {
        self.t.pow(k).expect("t is invertible")
    }

    /// `q^k`.
    pub fn q_pow(&self, k: i64) -> F {
        self.t_pow(k * self.scale())
    }

    /// `q^{h/2}`.
    pub fn q_half_pow(&self, h: i64) -> F {
        self.t_pow(h * (self.n as i64 + 1))
    }

    pub fn q(&self) -> F {
        self.q_pow(1)
    }

    /// `q^r` for a rational `r` with `r * 2(n+1)` integral.
    pub fn q_power(&self, r: &BigRational) -> Result<F> {
        let scaled = r * BigRational::from_integer(self.scale().into());
        if !scaled.is_integer() {
            return Err(Error::NonRepresentableExponent(r.to_string(), self.scale()));
        }
        let k = scaled
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::NonRepresentableExponent(r.to_string(), self.scale()))?;
        Ok(self.t_pow(k))
    }

    /// `q^{num/den}` with integer arguments.
    pub fn q_frac(&self, num: i64, den: i64) -> Result<F> {
        let g = num.gcd(&den).max(1);
        self.q_power(&BigRational::new((num / g).into(), (den / g).into()))
    }

    pub fn int(&self, v: i64) -> F {
        F::from_int(v)
    }

    pub fn lift(&self, r: &RatFunc) -> Result<F> {
        F::from_ratfunc(r, &self.t)
    }

    /// Parses a scalar written in `t` (and `q`, meaning `t^{2(n+1)}`).
    pub fn parse(&self, s: &str) -> Result<F> {
        self.lift(&parse_ratfunc(s, Some(self.scale()))?)
    }

    /// Exponent `r` with `x = q^r`, if `x` is a power of `t`.
    pub fn q_exponent(&self, x: &F) -> Option<BigRational> {
        x.t_exponent(&self.t)
            .map(|k| BigRational::new(k.into(), self.scale().into()))
    }

    pub fn render_q(&self, x: &F) -> String {
        x.render_q(self.scale())
    }

    /// `[m]_q = (q^m - q^{-m}) / (q - q^{-1})`.
    pub fn q_int(&self, m: i64) -> F {
        let num = self.q_pow(m).sub(&self.q_pow(-m));
        let den = self.q_pow(1).sub(&self.q_pow(-1));
        num.div(&den).expect("q is not a root of unity")
    }

    /// Gaussian binomial `[m choose r]_q` in the symmetric normalization.
    pub fn q_binomial(&self, m: i64, r: i64) -> F {
        if r < 0 || r > m {
            return F::zero();
        }
        let fact = |k: i64| (1..=k).fold(F::one(), |acc, j| acc.mul(&self.q_int(j)));
        fact(m)
            .div(&fact(r).mul(&fact(m - r)))
            .expect("q-factorials are nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn q_power_embedding() {
        let ctx = ScalarContext::symbolic(2);
        assert_eq!(ctx.q_power(&r(1, 1)).unwrap(), RatFunc::t_pow(6));
        assert_eq!(ctx.q_power(&r(1, 2)).unwrap(), RatFunc::t_pow(3));
        assert_eq!(ctx.q_power(&r(-2, 3)).unwrap(), RatFunc::t_pow(-4));
        assert!(ctx.q_power(&r(1, 5)).is_err());
        assert!(ctx.q().mul(&ctx.q_pow(-1)).is_one());
    }

    #[test]
    fn specialized_rejects_bad_points() {
        assert!(ScalarContext::specialized(1, r(1, 1)).is_err());
        assert!(ScalarContext::specialized(1, r(-1, 1)).is_err());
        assert!(ScalarContext::specialized(1, r(0, 1)).is_err());
        let ctx = ScalarContext::specialized(1, r(5, 3)).unwrap();
        assert_eq!(ctx.q(), r(625, 81));
        assert_eq!(ctx.q_exponent(&r(81, 625)), Some(r(-1, 1)));
    }

    #[test]
    fn q_binomials() {
        let ctx = ScalarContext::symbolic(1);
        let q = ctx.q();
        let two = q.add(&q.inv().unwrap());
        assert_eq!(ctx.q_binomial(2, 1), two);
        assert_eq!(ctx.q_binomial(3, 0), RatFunc::one());
    }
}
