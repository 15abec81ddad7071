//! Exact coefficient fields: Q(t) with `q = t^{2(n+1)}`, and its rational specializations.

mod context;
mod field;
mod parse;
pub mod poly;
mod ratfunc;

pub use context::{Backend, ScalarContext};
pub use field::Field;
pub use num_rational::BigRational;
pub use parse::parse_ratfunc;
pub use poly::Poly;
pub use ratfunc::RatFunc;

/// Parses a decimal rational such as `5/3` or `-2`.
pub fn parse_rational(s: &str) -> crate::Result<BigRational> {
    let bad = || crate::Error::parse(0, format!("not a rational number: {s}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
    if d == 0.into() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}
