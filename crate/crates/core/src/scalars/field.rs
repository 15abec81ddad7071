use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Exact coefficient field used by every construction.
///
/// `RatFunc` is the symbolic backend (Q(t)); `BigRational` is the
/// specialized backend obtained by fixing `t` to a rational number.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    /// Lifts a symbolic value into this backend, given the backend's image of `t`.
    fn from_ratfunc(r: &RatFunc, t: &Self) -> Result<Self>;

    /// `k` such that `self = t^k`, if any.
    fn t_exponent(&self, t: &Self) -> Option<i64>;

    /// Renders powers of `t^scale` as powers of `q` where possible.
    fn render_q(&self, _scale: i64) -> String {
        self.to_string()
    }

    fn from_int(v: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(v.into()))
    }

    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    fn add_assign(&mut self, o: &Self) {
        *self = Field::add(self, o);
    }

    fn sub_assign(&mut self, o: &Self) {
        *self = Field::sub(self, o);
    }

    /// `self += a * b`.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a.mul(b);
        self.add_assign(&p);
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_rational(r: &BigRational) -> Self {
        RatFunc::from_rational(r.clone())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
    fn pow(&self, k: i64) -> Result<Self> {
        RatFunc::pow(self, k)
    }
    fn from_ratfunc(r: &RatFunc, _t: &Self) -> Result<Self> {
        Ok(r.clone())
    }
    fn t_exponent(&self, _t: &Self) -> Option<i64> {
        self.as_t_power()
    }
    fn render_q(&self, scale: i64) -> String {
        RatFunc::render_q(self, scale)
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn from_ratfunc(r: &RatFunc, t: &Self) -> Result<Self> {
        r.specialize(t)
    }
    fn t_exponent(&self, t: &Self) -> Option<i64> {
        if Zero::is_zero(self) {
            return None;
        }
        let grow = |mut x: BigRational, step: &BigRational| -> Option<i64> {
            let mut k = 0i64;
            let bits = |v: &BigRational| v.numer().bits() + v.denom().bits();
            let limit = bits(self) + 64;
            while bits(&x) <= limit && k < 4096 {
                if &x == self {
                    return Some(k);
                }
                x *= step;
                k += 1;
            }
            None
        };
        grow(One::one(), t).or_else(|| grow(t.recip(), &t.recip()).map(|k| -(k + 1)))
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign(&mut self, o: &Self) {
        *self -= o;
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if !Zero::is_zero(a) && !Zero::is_zero(b) {
            *self += a * b;
        }
    }
}
