use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ActionModule;
use crate::error::{Error, Result};
use crate::linalg::{svec, Echelon, SVec, SparseMat};
use crate::scalars::Field;

fn check_signature<F: Field>(a: &ActionModule<F>, b: &ActionModule<F>) -> Result<()> {
    if a.gens.len() != b.gens.len() {
        return Err(Error::Mismatch { expected: a.gens.len(), got: b.gens.len() });
    }
    Ok(())
}

/// Basis of `{T : G_A·T = T·G_B for every generator}` (row convention, `T` is `dim A × dim B`).
///
/// Spins standard vectors of `A` while carrying their images in `B` as linear
/// forms in unknowns; every linear dependency found while spinning yields
/// equations on the unknowns.
pub fn hom_space<F: Field>(a: &ActionModule<F>, b: &ActionModule<F>) -> Result<Vec<SparseMat<F>>> {
    check_signature(a, b)?;
    let (da, db) = (a.dim, b.dim);
    if da == 0 || db == 0 {
        return Ok(Vec::new());
    }
    let graded = match (&a.grades, &b.grades) {
        (Some(ga), Some(gb)) => Some((ga, gb)),
        _ => None,
    };
    // payload index of unknown k in column j is k * db + j
    let apply = |p: &SVec<F>, g: &SparseMat<F>| -> SVec<F> {
        let mut groups: Vec<(usize, SVec<F>)> = Vec::new();
        for (idx, x) in p {
            let (k, j) = (idx / db, idx % db);
            match groups.last_mut() {
                Some((kk, v)) if *kk == k => v.push((j, x.clone())),
                _ => groups.push((k, vec![(j, x.clone())])),
            }
        }
        let mut out = Vec::new();
        for (k, v) in groups {
            out.extend(g.vec_mul(&v).into_iter().map(|(j, x)| (k * db + j, x)));
        }
        out
    };

    let mut ech = Echelon::with_payload(da);
    let mut constraints: Vec<SVec<F>> = Vec::new();
    let mut unknowns = 0usize;
    let mut queue: Vec<(SVec<F>, SVec<F>)> = Vec::new();
    while !ech.is_full() {
        let i = (0..da).find(|&i| !ech.contains(&svec::unit(i))).expect("echelon not full");
        let targets: Vec<usize> = match graded {
            Some((ga, gb)) => (0..db).filter(|&j| gb[j] == ga[i]).collect(),
            None => (0..db).collect(),
        };
        let payload: SVec<F> = targets
            .iter()
            .enumerate()
            .map(|(s, &j)| ((unknowns + s) * db + j, F::one()))
            .collect();
        unknowns += targets.len();
        if let Some(pair) = ech.insert_with(svec::unit(i), payload) {
            queue.push(pair);
        }
        while let Some((v, p)) = queue.pop() {
            for (ga, gb) in a.gens.iter().zip(&b.gens) {
                let w = ga.vec_mul(&v);
                let pw = apply(&p, gb);
                let (r, rp) = ech.reduce_with(&w, &pw);
                if r.is_empty() {
                    push_constraints(&rp, db, &mut constraints);
                } else {
                    ech.push_reduced(r.clone(), Some(rp.clone()));
                    queue.push((r, rp));
                }
            }
        }
    }
    let mut eq = Echelon::new(unknowns);
    for c in constraints {
        eq.insert(c);
        if eq.is_full() {
            return Ok(Vec::new());
        }
    }
    let rows: Vec<(usize, SVec<F>)> = (0..da)
        .map(|p| (p, ech.payload_for_pivot(p).expect("full rank").clone()))
        .collect();
    Ok(eq
        .nullspace()
        .into_iter()
        .map(|u| {
            let ud = svec::to_dense(&u, unknowns);
            let mat_rows = rows
                .iter()
                .map(|(_, pay)| {
                    let mut acc = svec::Accum::new(db);
                    for (idx, x) in pay {
                        let k = idx / db;
                        if !ud[k].is_zero() {
                            acc.add_at(idx % db, &ud[k], x);
                        }
                    }
                    acc.take()
                })
                .collect();
            SparseMat::from_rows(db, mat_rows)
        })
        .collect())
}

fn push_constraints<F: Field>(residual: &SVec<F>, db: usize, out: &mut Vec<SVec<F>>) {
    let mut by_col: std::collections::BTreeMap<usize, SVec<F>> = Default::default();
    for (idx, x) in residual {
        by_col.entry(idx % db).or_default().push((idx / db, x.clone()));
    }
    out.extend(by_col.into_values());
}

/// An invertible intertwiner `T` with `G_A·T = T·G_B`, or `None` when `A ≇ B`.
///
/// Random small-integer combinations of a Hom basis are tried; a nonzero
/// determinant polynomial vanishes on few integer points, so repeated failure
/// is reported as inconclusive instead of as non-isomorphic.
pub fn are_isomorphic<F: Field>(
    a: &ActionModule<F>,
    b: &ActionModule<F>,
    seed: u64,
) -> Result<Option<SparseMat<F>>> {
    if a.dim != b.dim {
        return Ok(None);
    }
    check_signature(a, b)?;
    if let (Some(ga), Some(gb)) = (&a.grades, &b.grades) {
        let (mut x, mut y) = (ga.clone(), gb.clone());
        x.sort();
        y.sort();
        if x != y {
            return Ok(None);
        }
    }
    let basis = hom_space(a, b)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let d = a.dim;
    if basis.len() == 1 {
        return Ok((basis[0].rank() == d).then(|| basis[0].clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..16 {
        let bound = 8i64 << attempt.min(10);
        let mut t = SparseMat::zeros(d, d);
        for m in &basis {
            t = t.axpy(&F::from_int(rng.random_range(-bound..=bound)), m);
        }
        if t.rank() == d {
            return Ok(Some(t));
        }
    }
    Err(Error::Inconclusive(format!(
        "no invertible element found in a {}-dimensional Hom space",
        basis.len()
    )))
}

/// True when `t` intertwines the two actions.
pub fn is_intertwiner<F: Field>(a: &ActionModule<F>, b: &ActionModule<F>, t: &SparseMat<F>) -> bool {
    a.gens.iter().zip(&b.gens).all(|(ga, gb)| ga.mul(t) == t.mul(gb))
}
