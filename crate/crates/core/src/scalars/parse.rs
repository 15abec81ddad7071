use num_bigint::BigInt;
use num_rational::BigRational;

use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Parses arithmetic expressions over `t` (and `q = t^scale` when `scale` is given).
///
/// Grammar: sums and differences of products and quotients of factors;
/// a factor is an integer, `t`, `q`, or a parenthesized expression,
/// optionally raised to an integer power. `q` also accepts `q^(a/b)`.
pub fn parse_ratfunc(src: &str, scale: Option<i64>) -> Result<RatFunc> {
    let mut p = Parser { s: src.as_bytes(), pos: 0, scale };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    scale: Option<i64>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                acc = acc.div(&d).map_err(|_| Error::parse(at, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                self.exponent_on(v, start)
            }
            Some(b't') => {
                self.pos += 1;
                let k = self.int_exponent()?;
                Ok(RatFunc::t_pow(k))
            }
            Some(b'q') => {
                self.pos += 1;
                let scale = self
                    .scale
                    .ok_or_else(|| Error::parse(start, "q needs a rank context"))?;
                let (num, den) = self.rational_exponent()?;
                let e = num * scale;
                if e % den != 0 {
                    return Err(Error::parse(start, format!("q^({num}/{den}) is not representable")));
                }
                Ok(RatFunc::t_pow(e / den))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let base = RatFunc::from_rational(BigRational::from_integer(v));
                self.exponent_on(base, start)
            }
            Some(_) => Err(Error::parse(self.pos, "unexpected character")),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }

    fn exponent_on(&mut self, base: RatFunc, at: usize) -> Result<RatFunc> {
        let k = self.int_exponent()?;
        base.pow(k).map_err(|_| Error::parse(at, "zero raised to a negative power"))
    }

    fn int_exponent(&mut self) -> Result<i64> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let at = self.pos;
        let (num, den) = self.rational_exponent_body()?;
        if den != 1 {
            return Err(Error::parse(at, "fractional exponent only allowed on q"));
        }
        Ok(num)
    }

    fn rational_exponent(&mut self) -> Result<(i64, i64)> {
        if !self.eat(b'^') {
            return Ok((1, 1));
        }
        self.rational_exponent_body()
    }

    fn rational_exponent_body(&mut self) -> Result<(i64, i64)> {
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let at = self.pos;
        let num = self.small_int()?;
        let mut den = 1;
        if paren && self.eat(b'/') {
            den = self.small_int()?;
            if den == 0 {
                return Err(Error::parse(at, "zero denominator in exponent"));
            }
        }
        if paren && !self.eat(b')') {
            return Err(Error::parse(self.pos, "expected ')'"));
        }
        Ok((if neg { -num } else { num }, den))
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn integer(&mut self) -> Result<BigInt> {
        Ok(self.digits()?.parse().expect("digits parse"))
    }

    fn small_int(&mut self) -> Result<i64> {
        let at = self.pos;
        self.digits()?
            .parse()
            .map_err(|_| Error::parse(at, "exponent too large"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::poly::{int, Poly};

    #[test]
    fn round_trips_display() {
        let samples = ["3*t^2 - 1/2*t^-1", "(t + 1)/(t^2 + 3)", "-t^5 + 7", "0", "(2*t^-3 - t)/(t - 5)"];
        for s in samples {
            let v = parse_ratfunc(s, None).unwrap();
            assert_eq!(parse_ratfunc(&v.to_string(), None).unwrap(), v, "{s}");
        }
    }

    #[test]
    fn q_needs_scale() {
        assert!(parse_ratfunc("q", None).is_err());
        assert_eq!(parse_ratfunc("q^(1/2)", Some(6)).unwrap(), RatFunc::t_pow(3));
        assert_eq!(parse_ratfunc("q^-2", Some(4)).unwrap(), RatFunc::t_pow(-8));
        assert!(parse_ratfunc("q^(1/5)", Some(6)).is_err());
    }

    #[test]
    fn reports_positions() {
        match parse_ratfunc("t + $", None) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_ratfunc("1/(t - t)", None).is_err());
    }

    #[test]
    fn precedence() {
        let v = parse_ratfunc("1 + 2*t^2", None).unwrap();
        assert_eq!(v, RatFunc::from_poly(Poly::from_terms(vec![(0, int(1)), (2, int(2))])));
    }
}
