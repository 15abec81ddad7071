use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hecke::HeckeElt;
use crate::linalg::SparseMat;
use crate::scalars::{Field, ScalarContext};
use crate::symgroup::{binomial, Partition, Perm};

use super::elt::{AffHeckeElt, AffineHecke, Mono};
use super::module::{HeckeKind, RightModule};

/// `S_ℓ` in enumeration order with a reverse index.
pub struct PermBasis {
    pub perms: Vec<Perm>,
    pub index: HashMap<Perm, usize>,
}

impl PermBasis {
    pub fn new(ell: usize) -> Self {
        let perms = Perm::all(ell);
        let index = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PermBasis { perms, index }
    }
}

fn eval_mono<F: Field>(a: &[F], alpha: &[i32]) -> F {
    let mut out = F::one();
    for (x, &e) in a.iter().zip(alpha) {
        if e != 0 {
            out = out.mul(&x.pow(e as i64).expect("nonzero parameter"));
        }
    }
    out
}

/// Right regular representation of `H_ℓ(q²)` on the basis `σ_w`.
pub fn regular_module<F: Field>(ctx: &ScalarContext<F>, ell: usize) -> Result<RightModule<F>> {
    let aff = AffineHecke::new(ctx, ell);
    let basis = PermBasis::new(ell);
    let sigma = sigma_matrices(&aff, &basis)?;
    Ok(RightModule::finite(ell, basis.perms.len(), sigma)?.with_labels(perm_labels(&basis)))
}

fn perm_labels(basis: &PermBasis) -> Vec<String> {
    basis.perms.iter().map(|w| format!("s[{w}]")).collect()
}

fn sigma_matrices<F: Field>(aff: &AffineHecke<F>, basis: &PermBasis) -> Result<Vec<SparseMat<F>>> {
    let d = basis.perms.len();
    (1..aff.ell())
        .map(|i| {
            let entries = basis.perms.iter().enumerate().flat_map(|(r, w)| {
                let prod = aff.hecke().mul_simple_right(&HeckeElt::basis(w.clone()), i);
                prod.terms()
                    .map(|(v, c)| (r, basis.index[v], c.clone()))
                    .collect::<Vec<_>>()
            });
            SparseMat::from_triplets(d, d, entries)
        })
        .collect()
}

/// `M_a = Ĥ_ℓ / (y_j − a_j) Ĥ_ℓ` on the basis `σ_w`.
///
/// `y_j^{±1}` acts by straightening `σ_w y_j^{±1}` and substituting `y^α ↦ a^α`.
pub fn universal_module<F: Field>(ctx: &ScalarContext<F>, a: &[F]) -> Result<RightModule<F>> {
    let ell = a.len();
    if ell == 0 {
        return Err(Error::InvalidArgument("empty parameter vector".into()));
    }
    if a.iter().any(Field::is_zero) {
        return Err(Error::InvalidArgument("universal module parameters must be nonzero".into()));
    }
    let aff = AffineHecke::new(ctx, ell);
    let basis = PermBasis::new(ell);
    let d = basis.perms.len();
    let sigma = sigma_matrices(&aff, &basis)?;
    let y_matrix = |j: usize, e: i32| -> Result<SparseMat<F>> {
        let mut beta = vec![0; ell];
        beta[j - 1] = e;
        let mut entries = Vec::new();
        for (r, w) in basis.perms.iter().enumerate() {
            for ((alpha, u), c) in aff.straighten(w, &beta).terms() {
                entries.push((r, basis.index[u], c.mul(&eval_mono(a, alpha))));
            }
        }
        SparseMat::from_triplets(d, d, entries)
    };
    let y = (1..=ell).map(|j| y_matrix(j, 1)).collect::<Result<Vec<_>>>()?;
    let y_inv = (1..=ell).map(|j| y_matrix(j, -1)).collect::<Result<Vec<_>>>()?;
    Ok(RightModule::affine(ell, d, sigma, y, Some(y_inv))?
        .with_labels(perm_labels(&basis))
        .with_spectrum_hint(a.to_vec()))
}

/// One-dimensional `Ĥ_ℓ`-module where `σ_i ↦ s` and `y_j ↦ ys[j]`.
pub fn one_dim_affine<F: Field>(s: &F, ys: &[F]) -> Result<RightModule<F>> {
    let ell = ys.len();
    let sigma = (1..ell).map(|_| SparseMat::scalar(1, s)).collect();
    let y = ys.iter().map(|x| SparseMat::scalar(1, x)).collect();
    Ok(RightModule::affine(ell, 1, sigma, y, None)?.with_spectrum_hint(ys.to_vec()))
}

/// One-dimensional `H_ℓ`-module where every `σ_i ↦ s` (`s ∈ {q², −1}`).
pub fn one_dim_finite<F: Field>(ell: usize, s: &F) -> Result<RightModule<F>> {
    let sigma = (1..ell).map(|_| SparseMat::scalar(1, s)).collect();
    RightModule::finite(ell, 1, sigma)
}

/// Pullback along `y_j ↦ a q^{−2(j−1)} σ_{j−1}⋯σ_1 σ_1⋯σ_{j−1}`, `σ_i ↦ σ_i`.
pub fn cherednik_pullback<F: Field>(
    ctx: &ScalarContext<F>,
    m: &RightModule<F>,
    a: &F,
) -> Result<RightModule<F>> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("evaluation parameter must be nonzero".into()));
    }
    let ell = m.ell();
    let mut y = Vec::with_capacity(ell);
    for j in 1..=ell {
        let mut word: Vec<usize> = (1..j).rev().collect();
        word.extend(1..j);
        let c = a.mul(&ctx.q_pow(-2 * (j as i64 - 1)));
        y.push(m.sigma_word(&word).scale(&c));
    }
    let hint = (-(ell as i64) + 1..ell as i64).map(|c| a.mul(&ctx.q_pow(2 * c))).collect();
    let mut out = RightModule::affine(ell, m.dim(), m.sigmas().to_vec(), y, None)?.with_spectrum_hint(hint);
    if let Some(l) = m.labels() {
        out = out.with_labels(l.to_vec());
    }
    Ok(out)
}

/// Zelevinsky induction `M1 ⊙ M2` (finite) or `M1 ⊙̂ M2` (affine).
///
/// Basis `(m1 ⊗ m2) ⊗ σ_d` indexed by `(i1 · dim2 + i2) · R + k` over the
/// minimal coset representatives `d_k`. A generator `g` acts by straightening
/// `σ_d g = Σ c y^α σ_p σ_{d'}` and letting `y^α σ_p` act on `m1 ⊗ m2` through `ι̂`.
pub fn zelevinsky_induce<F: Field>(
    ctx: &ScalarContext<F>,
    m1: &RightModule<F>,
    m2: &RightModule<F>,
) -> Result<RightModule<F>> {
    if m1.kind() != m2.kind() {
        return Err(Error::InvalidArgument("cannot induce from mixed finite/affine modules".into()));
    }
    let (l1, l2) = (m1.ell(), m2.ell());
    let ell = l1 + l2;
    let affine = m1.kind() == HeckeKind::Affine;
    let aff = AffineHecke::new(ctx, ell);
    let parts = Partition::new(vec![l1, l2])?;
    let reps = parts.min_coset_reps();
    debug_assert_eq!(reps.len(), binomial(ell, l1));
    let rep_index: HashMap<Perm, usize> = reps.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let (d1, d2, nr) = (m1.dim(), m2.dim(), reps.len());
    let dim = d1 * d2 * nr;

    let mut cache: HashMap<(Mono, Perm), SparseMat<F>> = HashMap::new();
    let mut local_action = |alpha: &Mono, p: &Perm| -> SparseMat<F> {
        cache
            .entry((alpha.clone(), p.clone()))
            .or_insert_with(|| {
                let p1: Vec<usize> = (0..l1).map(|x| p.apply(x) + 1).collect();
                let p2: Vec<usize> = (l1..ell).map(|x| p.apply(x) - l1 + 1).collect();
                let w1 = Perm::from_one_line(&p1).expect("block permutation");
                let w2 = Perm::from_one_line(&p2).expect("block permutation");
                let mut a1 = m1.sigma_word(&w1.reduced_word());
                let mut a2 = m2.sigma_word(&w2.reduced_word());
                if affine {
                    a1 = m1.y_monomial(&alpha[..l1]).mul(&a1);
                    a2 = m2.y_monomial(&alpha[l1..]).mul(&a2);
                }
                a1.kron(&a2)
            })
            .clone()
    };

    let mut induced = |g: &AffHeckeElt<F>| -> Result<SparseMat<F>> {
        let mut entries = Vec::new();
        for (k, d) in reps.iter().enumerate() {
            let prod = aff.mul(&AffHeckeElt::term(vec![0; ell], d.clone(), F::one()), g)?;
            for ((alpha, w), c) in prod.terms() {
                let (p, dd) = parts.factor(w);
                let kk = rep_index[&dd];
                let act = local_action(alpha, &p);
                for (r, col, x) in act.triplets() {
                    entries.push((r * nr + k, col * nr + kk, c.mul(x)));
                }
            }
        }
        SparseMat::from_triplets(dim, dim, entries)
    };

    let sigma = (1..ell)
        .map(|i| induced(&aff.sigma(i)?))
        .collect::<Result<Vec<_>>>()?;
    let labels = (0..d1)
        .flat_map(|i1| (0..d2).flat_map(move |i2| (0..nr).map(move |k| (i1, i2, k))))
        .map(|(i1, i2, k)| format!("m{i1}⊗m{i2}⊗s[{}]", reps[k]))
        .collect();
    let out = if affine {
        let y = (1..=ell).map(|j| induced(&aff.y(j)?)).collect::<Result<Vec<_>>>()?;
        let y_inv = (1..=ell).map(|j| induced(&aff.y_inv(j)?)).collect::<Result<Vec<_>>>()?;
        let mut hint = m1.spectrum_hint().to_vec();
        hint.extend(m2.spectrum_hint().iter().cloned());
        RightModule::affine(ell, dim, sigma, y, Some(y_inv))?.with_spectrum_hint(hint)
    } else {
        RightModule::finite(ell, dim, sigma)?
    };
    Ok(out.with_labels(labels))
}
