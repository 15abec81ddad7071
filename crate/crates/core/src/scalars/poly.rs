use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse Laurent polynomial in `t` with rational coefficients.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(i64, BigRational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(e, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(iter: I) -> Self {
        let mut v: Vec<(i64, BigRational)> = iter.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, BigRational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(i64, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn as_monomial(&self) -> Option<(&BigRational, i64)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c, *e)),
            _ => None,
        }
    }

    pub fn low_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn high_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Coefficient of the highest power.
    pub fn lead(&self) -> Option<&BigRational> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        match self.terms.binary_search_by_key(&e, |(x, _)| *x) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((c, e)) = other.as_monomial() {
            return Poly {
                terms: self.terms.iter().map(|(x, d)| (x + e, d * c)).collect(),
            };
        }
        if let Some((c, e)) = self.as_monomial() {
            return Poly {
                terms: other.terms.iter().map(|(x, d)| (x + e, c * d)).collect(),
            };
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let span = (hi - lo) as usize + 1;
        if span <= 4 * (self.terms.len() * other.terms.len()) + 16 {
            let mut dense = vec![BigRational::zero(); span];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    dense[(ea + eb - lo) as usize] += ca * cb;
                }
            }
            let terms = dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (lo + k as i64, c))
                .collect();
            Poly { terms }
        } else {
            Self::from_terms(
                self.terms
                    .iter()
                    .flat_map(|(ea, ca)| other.terms.iter().map(move |(eb, cb)| (ea + eb, ca * cb))),
            )
        }
    }

    pub fn pow(&self, k: u32) -> Self {
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
        result
    }

    /// Evaluates at a rational point; `None` if a negative power meets `x = 0`.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if x.is_zero() {
            if self.low_exp().unwrap() < 0 {
                return None;
            }
            return Some(self.coeff(0));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * rat_pow(x, *e);
        }
        Some(acc)
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Removes the lowest power of `t`, returning `(t^k, rest)` with `rest(0) != 0`.
    pub fn split_t_power(&self) -> (i64, Self) {
        match self.low_exp() {
            Some(k) if k != 0 => (k, self.shift(-k)),
            Some(_) => (0, self.clone()),
            None => (0, Self::zero()),
        }
    }

    fn to_dense(&self) -> Vec<BigRational> {
        debug_assert!(self.low_exp().unwrap_or(0) >= 0);
        let deg = self.high_exp().unwrap_or(0) as usize;
        let mut v = vec![BigRational::zero(); deg + 1];
        for (e, c) in &self.terms {
            v[*e as usize] = c.clone();
        }
        v
    }

    fn from_dense(v: Vec<BigRational>) -> Self {
        Poly {
            terms: v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as i64, c))
                .collect(),
        }
    }

    /// Euclidean division of genuine polynomials (no negative exponents).
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let dd = d.to_dense();
        let mut r = self.to_dense();
        let dn = dd.len() - 1;
        if r.len() < dd.len() {
            return (Self::zero(), self.clone());
        }
        let inv_lead = dd[dn].recip();
        let mut q = vec![BigRational::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let c = &r[k + dn] * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in dd.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        r.truncate(dn);
        (Self::from_dense(q), Self::from_dense(r))
    }

    /// Exact quotient; panics in debug builds if the division is not exact.
    pub fn exact_div(&self, d: &Self) -> Self {
        if d.is_one() {
            return self.clone();
        }
        if let Some((c, e)) = d.as_monomial() {
            return self.shift(-e).scale(&c.recip());
        }
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd of two genuine polynomials.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.high_exp() == Some(0) || b.high_exp() == Some(0) {
            return Self::one();
        }
        let (mut x, mut y) = if a.high_exp() >= b.high_exp() {
            (a.monic(), b.monic())
        } else {
            (b.monic(), a.monic())
        };
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.monic();
        }
        x
    }

    /// Returns `Some(k)` when the polynomial is exactly `t^k`.
    pub fn as_t_power(&self) -> Option<i64> {
        match self.as_monomial() {
            Some((c, e)) if c.is_one() => Some(e),
            _ => None,
        }
    }

    pub(crate) fn write_in(&self, f: &mut fmt::Formatter<'_>, var: &str, div: i64) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let e = e / div;
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{var}")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_in(f, "t", 1)
    }
}

/// Integer power of a nonzero rational.
pub fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        BigRational::new(x.numer().pow(e as u32), x.denom().pow(e as u32))
    } else {
        let k = (-e) as u32;
        BigRational::new(x.denom().pow(k), x.numer().pow(k))
    }
}

/// Integer as a rational.
pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn product_of_conjugates() {
        assert_eq!(p(&[(1, 1), (0, 1)]).mul(&p(&[(1, 1), (0, -1)])), p(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[(2, 1), (0, -1)]);
        let b = p(&[(1, 1), (0, -1)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[(1, 1), (0, 1)]));
        assert!(r.is_zero());
        let g = Poly::gcd(&a, &p(&[(2, 1), (1, -2), (0, 1)]));
        assert_eq!(g, b);
        assert!(Poly::gcd(&p(&[(1, 1), (0, 1)]), &p(&[(1, 1), (0, 2)])).is_one());
    }

    #[test]
    fn display_orders_descending() {
        let x = Poly::from_terms(vec![(2, int(3)), (-1, -BigRational::new(1.into(), 2.into()))]);
        assert_eq!(x.to_string(), "3*t^2 - 1/2*t^-1");
        assert_eq!(p(&[(1, -1), (0, 5)]).to_string(), "-t + 5");
    }
}
