//! The finite Hecke algebra `H_ℓ(q²)` in the `σ_w` basis.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{Field, ScalarContext};
use crate::symgroup::{Partition, Perm};

/// Element `Σ c_w σ_w` of `H_ℓ(q²)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElt<F> {
    ell: usize,
    terms: BTreeMap<Perm, F>,
}

impl<F: Field> HeckeElt<F> {
    pub fn zero(ell: usize) -> Self {
        HeckeElt { ell, terms: BTreeMap::new() }
    }

    pub fn one(ell: usize) -> Self {
        Self::basis(Perm::identity(ell))
    }

    /// `σ_w`.
    pub fn basis(w: Perm) -> Self {
        Self::term(w, F::one())
    }

    pub fn term(w: Perm, c: F) -> Self {
        let mut e = Self::zero(w.degree());
        e.add_term(w, c);
        e
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Perm) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, w: Perm, c: F) {
        debug_assert_eq!(w.degree(), self.ell);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.ell);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.mul(c));
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().neg()))
    }
}

impl<F: Field> fmt::Display for HeckeElt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c}) · s{:?}", w.reduced_word()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Multiplication data for `H_ℓ(q²)`.
#[derive(Clone, Debug)]
pub struct Hecke<F> {
    ell: usize,
    ctx: ScalarContext<F>,
    q2: F,
    q2m1: F,
}

impl<F: Field> Hecke<F> {
    pub fn new(ctx: &ScalarContext<F>, ell: usize) -> Self {
        let q2 = ctx.q_pow(2);
        let q2m1 = q2.sub(&F::one());
        Hecke { ell, ctx: ctx.clone(), q2, q2m1 }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn ctx(&self) -> &ScalarContext<F> {
        &self.ctx
    }

    /// `q²`.
    pub fn q2(&self) -> &F {
        &self.q2
    }

    pub fn sigma(&self, i: usize) -> Result<HeckeElt<F>> {
        Ok(HeckeElt::basis(Perm::simple(self.ell, i)?))
    }

    fn check(&self, a: &HeckeElt<F>) -> Result<()> {
        if a.ell != self.ell {
            return Err(Error::Mismatch { expected: self.ell, got: a.ell });
        }
        Ok(())
    }

    /// `a · σ_i`.
    pub fn mul_simple_right(&self, a: &HeckeElt<F>, i: usize) -> HeckeElt<F> {
        let mut out = HeckeElt::zero(self.ell);
        for (w, c) in &a.terms {
            let wt = w.mul_simple_right(i);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), c.mul(&self.q2m1));
                out.add_term(wt, c.mul(&self.q2));
            } else {
                out.add_term(wt, c.clone());
            }
        }
        out
    }

    /// `σ_i · a`.
    pub fn mul_simple_left(&self, i: usize, a: &HeckeElt<F>) -> HeckeElt<F> {
        let mut out = HeckeElt::zero(self.ell);
        for (w, c) in &a.terms {
            let tw = w.mul_simple_left(i);
            if w.has_left_descent(i) {
                out.add_term(w.clone(), c.mul(&self.q2m1));
                out.add_term(tw, c.mul(&self.q2));
            } else {
                out.add_term(tw, c.clone());
            }
        }
        out
    }

    /// `a · σ_w`.
    pub fn mul_basis_right(&self, a: &HeckeElt<F>, w: &Perm) -> HeckeElt<F> {
        w.reduced_word()
            .into_iter()
            .fold(a.clone(), |acc, i| self.mul_simple_right(&acc, i))
    }

    pub fn mul(&self, a: &HeckeElt<F>, b: &HeckeElt<F>) -> Result<HeckeElt<F>> {
        self.check(a)?;
        self.check(b)?;
        let mut out = HeckeElt::zero(self.ell);
        for (v, c) in &b.terms {
            let part = self.mul_basis_right(a, v).scale(c);
            out = out.add(&part);
        }
        Ok(out)
    }

    /// `C_{w_π} = q^{ℓ(w_π)} Σ_{w' ∈ P} (−1)^{ℓ(w_π)−ℓ(w')} q^{−2ℓ(w')} σ_{w'}`.
    ///
    /// All Kazhdan–Lusztig polynomials equal 1 for the longest element of a
    /// parabolic subgroup, and the elements below it are exactly the subgroup.
    pub fn kl_parabolic_element(&self, pi: &Partition) -> Result<HeckeElt<F>> {
        if pi.total() != self.ell {
            return Err(Error::Mismatch { expected: self.ell, got: pi.total() });
        }
        let top = pi.longest().length() as i64;
        let mut out = HeckeElt::zero(self.ell);
        for w in pi.parabolic_elements() {
            let l = w.length() as i64;
            let mut c = self.ctx.q_pow(top - 2 * l);
            if (top - l) % 2 == 1 {
                c = c.neg();
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    /// `C_i = q^{-1} σ_i − q`.
    pub fn kl_simple(&self, i: usize) -> Result<HeckeElt<F>> {
        let mut c = HeckeElt::term(Perm::simple(self.ell, i)?, self.ctx.q_pow(-1));
        c.add_term(Perm::identity(self.ell), self.ctx.q_pow(1).neg());
        Ok(c)
    }
}

/// `ι(a ⊗ b)` in `H_{ℓ1+ℓ2}`: `σ_i ⊗ 1 ↦ σ_i`, `1 ⊗ σ_i ↦ σ_{i+ℓ1}`.
pub fn iota_embed<F: Field>(a: &HeckeElt<F>, b: &HeckeElt<F>) -> HeckeElt<F> {
    let (l1, l2) = (a.ell, b.ell);
    let total = l1 + l2;
    let mut out = HeckeElt::zero(total);
    for (u, x) in &a.terms {
        let uu = u.shifted(0, total);
        for (v, y) in &b.terms {
            let w = uu.compose(&v.shifted(l1, total)).expect("same degree");
            out.add_term(w, x.mul(y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RatFunc;

    fn setup(ell: usize) -> (ScalarContext<RatFunc>, Hecke<RatFunc>) {
        let ctx = ScalarContext::symbolic(2);
        let h = Hecke::new(&ctx, ell);
        (ctx, h)
    }

    #[test]
    fn quadratic_relation() {
        let (ctx, h) = setup(2);
        let s = h.sigma(1).unwrap();
        let ss = h.mul(&s, &s).unwrap();
        let q2 = ctx.q_pow(2);
        let mut want = HeckeElt::term(Perm::simple(2, 1).unwrap(), q2.sub(&RatFunc::one()));
        want.add_term(Perm::identity(2), q2);
        assert_eq!(ss, want);
    }

    #[test]
    fn braid_product_is_basis_element() {
        let (_, h) = setup(3);
        let (s1, s2) = (h.sigma(1).unwrap(), h.sigma(2).unwrap());
        let p = h.mul(&h.mul(&s1, &s2).unwrap(), &s1).unwrap();
        assert_eq!(p, HeckeElt::basis(Perm::from_word(3, &[1, 2, 1]).unwrap()));
        let p2 = h.mul(&h.mul(&s2, &s1).unwrap(), &s2).unwrap();
        assert_eq!(p, p2);
        assert_eq!(h.mul(&HeckeElt::one(3), &p).unwrap(), p);
    }

    #[test]
    fn kl_elements() {
        let (_, h2) = setup(2);
        let c = h2.kl_parabolic_element(&Partition::new(vec![2]).unwrap()).unwrap();
        assert_eq!(c, h2.kl_simple(1).unwrap());
        let c11 = h2.kl_parabolic_element(&Partition::new(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(c11, HeckeElt::one(2));
        let (_, h3) = setup(3);
        let c21 = h3.kl_parabolic_element(&Partition::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(c21, h3.kl_simple(1).unwrap());
    }

    #[test]
    fn simple_kl_square() {
        let (ctx, h) = setup(3);
        for i in 1..3 {
            let c = h.kl_simple(i).unwrap();
            let lhs = h.mul(&c, &c).unwrap();
            let factor = ctx.q().add(&ctx.q_pow(-1)).neg();
            assert_eq!(lhs, c.scale(&factor));
        }
    }

    #[test]
    fn iota_examples() {
        let (_, h2) = setup(2);
        let s1 = h2.sigma(1).unwrap();
        let one1 = HeckeElt::<RatFunc>::one(1);
        assert_eq!(iota_embed(&s1, &one1), HeckeElt::basis(Perm::simple(3, 1).unwrap()));
        assert_eq!(iota_embed(&one1, &s1), HeckeElt::basis(Perm::simple(3, 2).unwrap()));
        assert_eq!(iota_embed(&one1, &one1), HeckeElt::one(2));
    }
}
