use super::weights::epsilon;
use super::UqModule;
use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::scalars::{Field, ScalarContext};

fn unit_matrix<F: Field>(d: usize, row: usize, col: usize) -> SparseMat<F> {
    SparseMat::from_triplets(d, d, [(row, col, F::one())]).expect("index in range")
}

/// The natural representation `V` with basis `v_1, …, v_{n+1}` and
/// `t_r v_s = q^{δ_{rs} − 1/(n+1)} v_s`.
pub fn natural_rep<F: Field>(ctx: &ScalarContext<F>, n: usize) -> Result<UqModule<F>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let d = n + 1;
    let weights: Vec<_> = (1..=d).map(|r| epsilon(n, r)).collect();
    let mut xp = Vec::new();
    let mut xm = Vec::new();
    let mut k = Vec::new();
    for i in 1..=n {
        xp.push(unit_matrix(d, i - 1, i));
        xm.push(unit_matrix(d, i, i - 1));
        k.push(SparseMat::diag(&weights.iter().map(|w| ctx.q_pow(w[i - 1])).collect::<Vec<_>>()));
    }
    // q^{1/(n+1)} = t^2 and q = t^{2(n+1)}
    let scale = ctx.scale();
    let t = (1..=d)
        .map(|r| {
            SparseMat::diag(
                &(1..=d)
                    .map(|s| ctx.t_pow(if r == s { scale } else { 0 } - 2))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    UqModule::new(n, xp, xm, k, weights)?.with_t(t)
}

/// `x_θ^+ v_r = δ_{r,n+1} v_1` on `V`.
pub fn x_theta_plus<F: Field>(n: usize) -> SparseMat<F> {
    unit_matrix(n + 1, 0, n)
}

/// `x_θ^- v_r = δ_{r,1} v_{n+1}` on `V`.
pub fn x_theta_minus<F: Field>(n: usize) -> SparseMat<F> {
    unit_matrix(n + 1, n, 0)
}

/// `k_θ = k_1⋯k_n` on `V`.
pub fn k_theta<F: Field>(ctx: &ScalarContext<F>, n: usize) -> SparseMat<F> {
    let d: Vec<F> = (1..=n + 1)
        .map(|r| ctx.q_pow(epsilon(n, r).iter().sum()))
        .collect();
    SparseMat::diag(&d)
}

/// `V^{⊗ℓ}` through the iterated coproduct; factor 1 is the most significant index.
pub fn tensor_power<F: Field>(base: &UqModule<F>, ell: usize) -> Result<UqModule<F>> {
    if ell == 0 {
        return Err(Error::InvalidArgument("tensor power must be positive".into()));
    }
    let mut out = base.clone();
    for _ in 1..ell {
        out = out.tensor(base)?;
    }
    Ok(out)
}

/// `Ř` on `V ⊗ V`, basis `v_r ⊗ v_s` at index `(r − 1)(n + 1) + (s − 1)`.
pub fn rcheck<F: Field>(ctx: &ScalarContext<F>, n: usize) -> SparseMat<F> {
    let d = n + 1;
    let (q, q2) = (ctx.q_pow(1), ctx.q_pow(2));
    let q2m1 = q2.sub(&F::one());
    let mut entries = Vec::new();
    for r in 0..d {
        for s in 0..d {
            let col = r * d + s;
            if r == s {
                entries.push((col, col, q2.clone()));
            } else {
                entries.push((s * d + r, col, q.clone()));
                if r > s {
                    entries.push((col, col, q2m1.clone()));
                }
            }
        }
    }
    SparseMat::from_triplets(d * d, d * d, entries).expect("indices in range")
}

/// `Ř_i` acting on factors `i, i + 1` of `V^{⊗ℓ}`.
pub fn rcheck_i<F: Field>(ctx: &ScalarContext<F>, n: usize, ell: usize, i: usize) -> Result<SparseMat<F>> {
    if i == 0 || i >= ell {
        return Err(Error::IndexOutOfRange { index: i, max: ell.saturating_sub(1) });
    }
    let d = n + 1;
    let left = SparseMat::identity(d.pow(i as u32 - 1));
    let right = SparseMat::identity(d.pow((ell - i - 1) as u32));
    Ok(left.kron(&rcheck(ctx, n)).kron(&right))
}
