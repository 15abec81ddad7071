use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hecke::{Hecke, HeckeElt};
use crate::scalars::{Field, ScalarContext};
use crate::symgroup::Perm;

/// Exponent vector `α` of the Laurent monomial `y^α`.
pub type Mono = Vec<i32>;

/// Element `Σ c_{α,w} y^α σ_w` of `Ĥ_ℓ(q²)` in Bernstein normal form (y's on the left).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffHeckeElt<F> {
    ell: usize,
    terms: BTreeMap<(Mono, Perm), F>,
}

impl<F: Field> AffHeckeElt<F> {
    pub fn zero(ell: usize) -> Self {
        AffHeckeElt { ell, terms: BTreeMap::new() }
    }

    pub fn one(ell: usize) -> Self {
        Self::term(vec![0; ell], Perm::identity(ell), F::one())
    }

    pub fn term(alpha: Mono, w: Perm, c: F) -> Self {
        let mut e = Self::zero(w.degree());
        e.add_term(alpha, w, c);
        e
    }

    pub fn from_hecke(h: &HeckeElt<F>) -> Self {
        let mut e = Self::zero(h.ell());
        for (w, c) in h.terms() {
            e.add_term(vec![0; h.ell()], w.clone(), c.clone());
        }
        e
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Mono, Perm), &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &[i32], w: &Perm) -> F {
        self.terms
            .get(&(alpha.to_vec(), w.clone()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, alpha: Mono, w: Perm, c: F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((alpha, w)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((a, w), c) in &o.terms {
            out.add_term(a.clone(), w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.ell);
        for ((a, w), x) in &self.terms {
            out.add_term(a.clone(), w.clone(), x.mul(c));
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().neg()))
    }
}

impl<F: Field> fmt::Display for AffHeckeElt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, w), c)| format!("({c}) · y{a:?} · s{:?}", w.reduced_word()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Straightening arithmetic for `Ĥ_ℓ(q²)`.
#[derive(Clone, Debug)]
pub struct AffineHecke<F> {
    hecke: Hecke<F>,
    q2m1: F,
}

impl<F: Field> AffineHecke<F> {
    pub fn new(ctx: &ScalarContext<F>, ell: usize) -> Self {
        let hecke = Hecke::new(ctx, ell);
        let q2m1 = hecke.q2().sub(&F::one());
        AffineHecke { hecke, q2m1 }
    }

    pub fn ell(&self) -> usize {
        self.hecke.ell()
    }

    pub fn hecke(&self) -> &Hecke<F> {
        &self.hecke
    }

    pub fn sigma(&self, i: usize) -> Result<AffHeckeElt<F>> {
        Ok(AffHeckeElt::from_hecke(&self.hecke.sigma(i)?))
    }

    fn unit_mono(&self, j: usize, e: i32) -> Result<Mono> {
        let ell = self.ell();
        if j == 0 || j > ell {
            return Err(Error::IndexOutOfRange { index: j, max: ell });
        }
        let mut a = vec![0; ell];
        a[j - 1] = e;
        Ok(a)
    }

    /// `y_j^e`.
    pub fn y_pow(&self, j: usize, e: i32) -> Result<AffHeckeElt<F>> {
        Ok(AffHeckeElt::term(self.unit_mono(j, e)?, Perm::identity(self.ell()), F::one()))
    }

    pub fn y(&self, j: usize) -> Result<AffHeckeElt<F>> {
        self.y_pow(j, 1)
    }

    pub fn y_inv(&self, j: usize) -> Result<AffHeckeElt<F>> {
        self.y_pow(j, -1)
    }

    /// `σ_i y^γ = y^{s_i γ} σ_i + (q² − 1)(y^γ − y^{s_i γ}) / (1 − y_i/y_{i+1})`.
    ///
    /// Returns `(coefficient, monomial, carries σ_i)` triples. The quotient
    /// is a Laurent polynomial for every `γ`, including negative exponents.
    pub fn sigma_times_mono(&self, i: usize, gamma: &[i32]) -> Vec<(F, Mono, bool)> {
        let (a, b) = (gamma[i - 1], gamma[i]);
        let mut swapped = gamma.to_vec();
        swapped.swap(i - 1, i);
        let mut out = vec![(F::one(), swapped, true)];
        if a == b {
            return out;
        }
        let total = a + b;
        let (lo, hi, coeff) = if a > b {
            (b, a, self.q2m1.neg())
        } else {
            (a, b, self.q2m1.clone())
        };
        for m in lo..hi {
            let mut mono = gamma.to_vec();
            mono[i - 1] = m;
            mono[i] = total - m;
            out.push((coeff.clone(), mono, false));
        }
        out
    }

    /// Normal form of `σ_w · y^β`.
    pub fn straighten(&self, w: &Perm, beta: &[i32]) -> AffHeckeElt<F> {
        let ell = self.ell();
        let Some(i) = (1..ell).find(|&i| w.has_left_descent(i)) else {
            return AffHeckeElt::term(beta.to_vec(), Perm::identity(ell), F::one());
        };
        let inner = self.straighten(&w.mul_simple_left(i), beta);
        let mut out = AffHeckeElt::zero(ell);
        for ((gamma, u), c) in inner.terms() {
            for (k, mono, with_sigma) in self.sigma_times_mono(i, gamma) {
                let coeff = c.mul(&k);
                if with_sigma {
                    let prod = self.hecke.mul_simple_left(i, &HeckeElt::basis(u.clone()));
                    for (v, x) in prod.terms() {
                        out.add_term(mono.clone(), v.clone(), coeff.mul(x));
                    }
                } else {
                    out.add_term(mono, u.clone(), coeff);
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &AffHeckeElt<F>, b: &AffHeckeElt<F>) -> Result<AffHeckeElt<F>> {
        let ell = self.ell();
        for e in [a, b] {
            if e.ell != ell {
                return Err(Error::Mismatch { expected: ell, got: e.ell });
            }
        }
        let mut out = AffHeckeElt::zero(ell);
        for ((alpha, w), c) in a.terms() {
            for ((beta, v), d) in b.terms() {
                let mid = self.straighten(w, beta);
                for ((gamma, u), x) in mid.terms() {
                    let mono: Mono = alpha.iter().zip(gamma).map(|(p, r)| p + r).collect();
                    let prod = self.hecke.mul_basis_right(&HeckeElt::basis(u.clone()), v);
                    let scale = c.mul(d).mul(x);
                    for (z, y) in prod.terms() {
                        out.add_term(mono.clone(), z.clone(), scale.mul(y));
                    }
                }
            }
        }
        Ok(out)
    }
}
