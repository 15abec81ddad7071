//! The functor `F` from affine Hecke modules to `U_q(ŝl_{n+1})`-modules,
//! evaluation modules and the comparison with Jimbo's evaluation map.

use crate::affine_hecke::{cherednik_pullback, RightModule};
use crate::error::{Error, Result};
use crate::linalg::{q_bracket, SparseMat};
use crate::modtools::{are_isomorphic, ModuleLike};
use crate::scalars::{Field, ScalarContext};
use crate::uqrep::{jimbo_j, k_theta, natural_rep, x_theta_minus, x_theta_plus, JModule, UqModule};

fn kron_all<F: Field>(factors: &[&SparseMat<F>]) -> SparseMat<F> {
    let mut it = factors.iter();
    let first = (*it.next().expect("at least one factor")).clone();
    it.fold(first, |acc, m| acc.kron(m))
}

/// `(Y_j^+)_j` and `(Y_j^-)_j`.
pub type YOperators<F> = (Vec<SparseMat<F>>, Vec<SparseMat<F>>);

/// `Y_j^+ = 1^{⊗j−1} ⊗ x_θ^- ⊗ (k_θ^{−1})^{⊗ℓ−j}` and
/// `Y_j^- = k_θ^{⊗j−1} ⊗ x_θ^+ ⊗ 1^{⊗ℓ−j}` on `V^{⊗ℓ}`.
pub fn y_operators<F: Field>(ctx: &ScalarContext<F>, n: usize, ell: usize) -> Result<YOperators<F>> {
    let id = SparseMat::identity(n + 1);
    let kt = k_theta(ctx, n);
    let kt_inv = kt.inverse()?;
    let (xp, xm) = (x_theta_plus(n), x_theta_minus(n));
    let mut plus = Vec::with_capacity(ell);
    let mut minus = Vec::with_capacity(ell);
    for j in 1..=ell {
        let p: Vec<&SparseMat<F>> = (1..=ell)
            .map(|r| if r < j { &id } else if r == j { &xm } else { &kt_inv })
            .collect();
        let m: Vec<&SparseMat<F>> = (1..=ell)
            .map(|r| if r < j { &kt } else if r == j { &xp } else { &id })
            .collect();
        plus.push(kron_all(&p));
        minus.push(kron_all(&m));
    }
    Ok((plus, minus))
}

/// `F(M)`: `J(M)` with `x_0^±(m ⊗ v) = Σ_j m·y_j^{±1} ⊗ Y_j^± v` and
/// `k_0 = (k_θ^{−1})^{⊗ℓ}`.
///
/// The relations of `M` are checked first, and each new operator is checked
/// to preserve the subspace defining `J(M)`.
pub fn functor_f<F: Field>(ctx: &ScalarContext<F>, m: &RightModule<F>, n: usize) -> Result<JModule<F>> {
    if !m.is_affine() {
        return Err(Error::InvalidArgument("functor F needs a module over the affine Hecke algebra".into()));
    }
    let report = m.verify_relations(ctx);
    if let Some(f) = report.failures().next() {
        return Err(Error::RelationFailure(f.relation.clone()));
    }
    let ell = m.ell();
    let mut j = jimbo_j(ctx, m, n)?;
    let (yp, ym) = y_operators(ctx, n, ell)?;
    let plus: Vec<_> = (1..=ell).map(|i| (m.y(i), &yp[i - 1])).collect();
    let minus: Vec<_> = (1..=ell).map(|i| (m.y_inv(i), &ym[i - 1])).collect();
    let kt_inv = k_theta(ctx, n).inverse()?;
    let k0_amb = kron_all(&vec![&kt_inv; ell]);
    let id_m = SparseMat::identity(m.dim());
    let k0_terms = [(&id_m, &k0_amb)];
    for terms in [&plus[..], &minus[..], &k0_terms[..]] {
        j.proj.check_invariance(terms)?;
    }
    let x0p = j.proj.induced_operator(&plus);
    let x0m = j.proj.induced_operator(&minus);
    let k0 = j.proj.induced_operator(&k0_terms);
    j.module = j.module.with_affine(x0p, x0m, k0)?;
    Ok(j)
}

/// `V(a)`: `x_0^± = a^{±1} x_θ^∓`, `k_0 = k_θ^{−1}` on the natural representation.
pub fn evaluation_module<F: Field>(ctx: &ScalarContext<F>, n: usize, a: &F) -> Result<UqModule<F>> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("evaluation parameter must be nonzero".into()));
    }
    let v = natural_rep(ctx, n)?;
    let x0p = x_theta_minus(n).scale(a);
    let x0m = x_theta_plus(n).scale(&a.inv()?);
    v.with_affine(x0p, x0m, k_theta(ctx, n).inverse()?)
}

/// `V(a_1) ⊗ ⋯ ⊗ V(a_ℓ)`.
pub fn evaluation_tensor<F: Field>(ctx: &ScalarContext<F>, n: usize, a: &[F]) -> Result<UqModule<F>> {
    let mut it = a.iter();
    let first = it.next().ok_or_else(|| Error::InvalidArgument("empty parameter vector".into()))?;
    let mut out = evaluation_module(ctx, n, first)?;
    for x in it {
        out = out.tensor(&evaluation_module(ctx, n, x)?)?;
    }
    Ok(out)
}

/// Pullback of a `U_q(gl_{n+1})`-module along Jimbo's evaluation map `ev_a`.
///
/// With `f_1^∓ = x_1^∓` and `f_k^∓ = [x_k^∓, f_{k−1}^∓]_{q^{1/2}}`:
/// `x_0^+ = q^{−(n+1)/2} a (t_1 t_{n+1}) f_n^-`,
/// `x_0^- = (−1)^{n−1} q^{(n+1)/2} a^{−1} (t_1 t_{n+1})^{−1} f_n^+`,
/// `k_0 = (k_1⋯k_n)^{−1}`.
pub fn jimbo_eval_pullback<F: Field>(ctx: &ScalarContext<F>, w: &UqModule<F>, a: &F) -> Result<UqModule<F>> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("evaluation parameter must be nonzero".into()));
    }
    let n = w.n();
    let qh = ctx.q_half_pow(1);
    let chain = |plus: bool| -> Result<SparseMat<F>> {
        let x = |i: usize| if plus { w.x_plus(i) } else { w.x_minus(i) };
        let mut f = x(1)?.clone();
        for k in 2..=n {
            f = q_bracket(x(k)?, &f, &qh);
        }
        Ok(f)
    };
    let t1n = w.t(1)?.mul(w.t(n + 1)?);
    let t1n_inv = t1n.inverse()?;
    let n1 = n as i64 + 1;
    let x0p = t1n.mul(&chain(false)?).scale(&ctx.q_half_pow(-n1).mul(a));
    let sign = if n.is_multiple_of(2) { F::one().neg() } else { F::one() };
    let x0m = t1n_inv.mul(&chain(true)?).scale(&sign.mul(&ctx.q_half_pow(n1)).mul(&a.inv()?));
    let mut kt = SparseMat::identity(w.dim());
    for i in 1..=n {
        kt = kt.mul(w.k(i)?);
    }
    w.finite_part().with_affine(x0p, x0m, kt.inverse()?)
}

/// Both sides of the evaluation duality for a finite Hecke module `M`.
pub struct EvaluationDuality<F> {
    /// `F(M(q^{−2ℓ/(n+1)} a))`.
    pub left: UqModule<F>,
    /// `J(M)(a)`.
    pub right: UqModule<F>,
    /// An invertible intertwiner when one was found.
    pub intertwiner: Option<SparseMat<F>>,
}

/// Compares `F` of the Cherednik pullback with the Jimbo evaluation pullback of `J(M)`.
pub fn evaluation_duality_check<F: Field>(
    ctx: &ScalarContext<F>,
    m: &RightModule<F>,
    a: &F,
    n: usize,
    seed: u64,
) -> Result<EvaluationDuality<F>> {
    let ell = m.ell();
    let finite = m.restrict_to_finite();
    let shift = ctx.q_frac(-2 * ell as i64, n as i64 + 1)?;
    let pulled = cherednik_pullback(ctx, &finite, &shift.mul(a))?;
    let left = functor_f(ctx, &pulled, n)?.module;
    let right = jimbo_eval_pullback(ctx, &jimbo_j(ctx, &finite, n)?.module, a)?;
    let intertwiner = are_isomorphic(&left.without_t().action(), &right.action(), seed)?;
    Ok(EvaluationDuality { left, right, intertwiner })
}
