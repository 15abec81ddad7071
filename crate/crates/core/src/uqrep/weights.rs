use std::collections::BTreeMap;

use super::UqModule;
use crate::error::{Error, Result};
use crate::linalg::{svec, Echelon, SVec};
use crate::scalars::{Field, ScalarContext};

/// Integer weight `μ` with `k_i` acting by `q^{μ(i)}`.
pub type Weight = Vec<i64>;

/// `ε_r` for `1 ≤ r ≤ n + 1`: `ε_r(r) = 1`, `ε_r(r − 1) = −1`.
pub fn epsilon(n: usize, r: usize) -> Weight {
    (1..=n)
        .map(|j| {
            if j == r {
                1
            } else if j + 1 == r {
                -1
            } else {
                0
            }
        })
        .collect()
}

/// Fundamental weight `λ_i = ε_1 + ⋯ + ε_i`.
pub fn fundamental(n: usize, i: usize) -> Weight {
    let mut out = vec![0; n];
    if (1..=n).contains(&i) {
        out[i - 1] = 1;
    }
    out
}

/// `Σ_i i·λ(i)`.
pub fn level(w: &[i64]) -> i64 {
    w.iter().enumerate().map(|(i, x)| (i as i64 + 1) * x).sum()
}

/// Basis indices grouped by weight.
pub fn weight_spaces<F: Field>(w: &UqModule<F>) -> BTreeMap<Weight, Vec<usize>> {
    let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (i, mu) in w.weights().iter().enumerate() {
        out.entry(mu.clone()).or_default().push(i);
    }
    out
}

/// Weight multiplicities.
pub fn character<F: Field>(w: &UqModule<F>) -> BTreeMap<Weight, usize> {
    weight_spaces(w).into_iter().map(|(k, v)| (k, v.len())).collect()
}

/// Checks that every `k_i` acts on each basis vector by `q^{μ(i)}`.
pub fn check_weights<F: Field>(ctx: &ScalarContext<F>, w: &UqModule<F>) -> Result<()> {
    for i in 1..=w.n() {
        let d = w.k(i)?.diagonal().ok_or_else(|| Error::NonDiagonal(format!("k {i}")))?;
        for (j, mu) in w.weights().iter().enumerate() {
            if d[j] != ctx.q_pow(mu[i - 1]) {
                return Err(Error::InvalidArgument(format!("basis vector {j} does not have weight {mu:?}")));
            }
        }
    }
    Ok(())
}

/// For each weight, a basis of the vectors killed by every `x_i^+`, `1 ≤ i ≤ n`,
/// each scaled to have leading coefficient 1.
pub fn highest_weight_vectors<F: Field>(w: &UqModule<F>) -> Result<Vec<(Weight, Vec<SVec<F>>)>> {
    let mut out = Vec::new();
    for (mu, idx) in weight_spaces(w) {
        // columns x_i^+ e_j concatenated over i, one row per j
        let width = w.dim() * w.n();
        let mut ech = Echelon::with_payload(width);
        let mut kernel = Vec::new();
        for (s, &j) in idx.iter().enumerate() {
            let mut row: SVec<F> = Vec::new();
            for i in 1..=w.n() {
                let col = w.x_plus(i)?.mul_vec(&svec::unit(j));
                row.extend(col.into_iter().map(|(r, x)| ((i - 1) * w.dim() + r, x)));
            }
            let (res, pay) = ech.reduce_with(&row, &svec::unit(s));
            if res.is_empty() {
                let v: SVec<F> = pay.into_iter().map(|(s, x)| (idx[s], x)).collect();
                let lead = v[0].1.inv()?;
                kernel.push(svec::scale(&v, &lead));
            } else {
                ech.push_reduced(res, Some(pay));
            }
        }
        if !kernel.is_empty() {
            out.push((mu, kernel));
        }
    }
    Ok(out)
}
