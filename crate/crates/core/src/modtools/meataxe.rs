use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{annihilator, spin, ActionModule, ModuleLike};
use crate::error::{Error, Result};
use crate::linalg::{svec, Echelon, SVec, SparseMat, Subspace};
use crate::scalars::Field;

/// Vectors certifying irreducibility by Norton's criterion.
///
/// `vector` spans the kernel of some algebra element `θ` on the module and
/// `dual_vector` lies in the kernel of `θ` on the dual; both spin to the whole
/// space.
#[derive(Clone, Debug)]
pub struct NortonWitness<F> {
    pub vector: SVec<F>,
    pub dual_vector: SVec<F>,
    pub source: String,
}

#[derive(Clone, Debug)]
pub enum Irreducibility<F> {
    Irreducible(NortonWitness<F>),
    /// A proper nonzero invariant subspace.
    Reducible(Subspace<F>),
}

impl<F: Field> Irreducibility<F> {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible(_))
    }

    pub fn to_json(&self, dim: usize) -> serde_json::Value {
        let render = |v: &SVec<F>| -> Vec<String> {
            svec::to_dense(v, dim).iter().map(|x| x.to_string()).collect()
        };
        match self {
            Irreducibility::Irreducible(w) => json!({
                "irreducible": true,
                "source": w.source,
                "vector": render(&w.vector),
                "dual_vector": render(&w.dual_vector),
            }),
            Irreducibility::Reducible(s) => json!({
                "irreducible": false,
                "submodule": s.to_strings(),
            }),
        }
    }
}

/// Kernel vectors `(u, w, description)` of some `θ` with one-dimensional kernel.
type EigenPair<F> = (SVec<F>, SVec<F>, String);

/// Decides irreducibility with a checkable certificate.
pub fn is_irreducible<F: Field>(m: &ActionModule<F>, seed: u64) -> Result<Irreducibility<F>> {
    if m.dim == 0 {
        return Err(Error::InvalidArgument("zero module".into()));
    }
    if m.dim == 1 {
        let e = svec::unit(0);
        return Ok(Irreducibility::Irreducible(NortonWitness {
            vector: e.clone(),
            dual_vector: e,
            source: "dimension one".into(),
        }));
    }
    let pair = graded_pair(m).or_else(|| commuting_pair(m, seed));
    let Some((u, w, source)) = pair else {
        return match proper_basis_spin(m) {
            Some(s) => Ok(Irreducibility::Reducible(s)),
            None => Err(Error::Inconclusive("no element with one-dimensional kernel located".into())),
        };
    };
    let s = spin(m, std::slice::from_ref(&u));
    if !s.is_full() {
        return Ok(Irreducibility::Reducible(s));
    }
    let dual = m.dual();
    let s_star = spin(&dual, std::slice::from_ref(&w));
    if !s_star.is_full() {
        return Ok(Irreducibility::Reducible(annihilator(m.dim, s_star.basis())));
    }
    Ok(Irreducibility::Irreducible(NortonWitness { vector: u, dual_vector: w, source }))
}

fn graded_pair<F: Field>(m: &ActionModule<F>) -> Option<EigenPair<F>> {
    let grades = m.grades.as_ref()?;
    let mut count: BTreeMap<&Vec<i64>, (usize, usize)> = BTreeMap::new();
    for (i, g) in grades.iter().enumerate() {
        let e = count.entry(g).or_insert((0, i));
        e.0 += 1;
    }
    let (g, (_, i)) = count.into_iter().find(|(_, (c, _))| *c == 1)?;
    Some((svec::unit(i), svec::unit(i), format!("weight space {g:?}")))
}

/// Left null vectors of the matrix with the given rows.
fn left_nullspace<F: Field>(rows: &[SVec<F>], ncols: usize) -> Vec<SVec<F>> {
    let mut ech = Echelon::with_payload(ncols);
    let mut out = Vec::new();
    for (k, r) in rows.iter().enumerate() {
        let (res, pay) = ech.reduce_with(r, &svec::unit(k));
        if res.is_empty() {
            out.push(pay);
        } else {
            ech.push_reduced(res, Some(pay));
        }
    }
    out
}

fn combine<F: Field>(coeffs: &SVec<F>, basis: &[SVec<F>], dim: usize) -> SVec<F> {
    let mut acc = svec::Accum::new(dim);
    for (k, c) in coeffs {
        acc.add_scaled(c, &basis[*k]);
    }
    acc.take()
}

/// Joint eigenvectors of a commuting family for the candidate eigenvalues.
fn joint_eigenspaces<F: Field>(
    family: &[SparseMat<F>],
    candidates: &[F],
    dim: usize,
) -> Vec<(Vec<F>, Vec<SVec<F>>)> {
    let mut frontier: Vec<(Vec<F>, Vec<SVec<F>>)> = vec![(Vec::new(), (0..dim).map(svec::unit).collect())];
    for y in family {
        let mut next = Vec::new();
        for (chi, basis) in &frontier {
            for c in candidates {
                let rows: Vec<SVec<F>> = basis
                    .iter()
                    .map(|b| svec::axpy(&y.vec_mul(b), &c.neg(), b))
                    .collect();
                let null = left_nullspace(&rows, dim);
                if null.is_empty() {
                    continue;
                }
                let sub: Vec<SVec<F>> = null.iter().map(|a| combine(a, basis, dim)).collect();
                let mut chi2 = chi.clone();
                chi2.push(c.clone());
                next.push((chi2, sub));
            }
        }
        frontier = next;
    }
    frontier
}

fn candidate_values<F: Field>(m: &ActionModule<F>, family: &[SparseMat<F>], hint: &[F]) -> Vec<F> {
    let mut candidates: Vec<F> = hint.to_vec();
    for y in family {
        for i in 0..m.dim {
            let d = y.get(i, i);
            if !d.is_zero() && !candidates.contains(&d) {
                candidates.push(d);
            }
        }
    }
    candidates
}

fn commuting_pair<F: Field>(m: &ActionModule<F>, seed: u64) -> Option<EigenPair<F>> {
    let (family, hint) = m.commuting.as_ref()?;
    let candidates = candidate_values(m, family, hint);
    let mut spaces = joint_eigenspaces(family, &candidates, m.dim);
    spaces.sort_by_key(|(_, s)| s.len());
    let eval = |coeffs: &[F], chi: &[F]| {
        coeffs.iter().zip(chi).fold(F::zero(), |acc, (c, x)| acc.add(&c.mul(x)))
    };
    // combinations that separate the joint characters; unlucky draws can also
    // collapse a Jordan block, so several are tried
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..8 {
        let bound = 9i64 << attempt;
        let coeffs: Vec<F> = family.iter().map(|_| F::from_int(rng.random_range(1..=bound))).collect();
        let zetas: Vec<F> = spaces.iter().map(|(chi, _)| eval(&coeffs, chi)).collect();
        if (0..zetas.len()).any(|i| zetas[i + 1..].contains(&zetas[i])) {
            continue;
        }
        let mut z = SparseMat::zeros(m.dim, m.dim);
        for (c, y) in coeffs.iter().zip(family) {
            z = z.axpy(c, y);
        }
        for ((chi, _), zeta) in spaces.iter().zip(&zetas) {
            let theta = z.sub(&SparseMat::scalar(m.dim, zeta));
            let kernel = left_nullspace(theta.rows(), m.dim);
            if kernel.len() != 1 {
                continue;
            }
            let dual_kernel = left_nullspace(theta.transpose().rows(), m.dim);
            let desc = format!(
                "kernel of a combination of the commuting family at {}",
                chi.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
            );
            return Some((kernel[0].clone(), dual_kernel[0].clone(), desc));
        }
    }
    None
}

/// Spins single joint eigenvectors, then single basis vectors, looking for a
/// proper submodule.
fn proper_basis_spin<F: Field>(m: &ActionModule<F>) -> Option<Subspace<F>> {
    if let Some((family, hint)) = &m.commuting {
        let spaces = joint_eigenspaces(family, &candidate_values(m, family, hint), m.dim);
        for v in spaces.iter().flat_map(|(_, s)| s) {
            let s = spin(m, std::slice::from_ref(v));
            if !s.is_full() {
                return Some(s);
            }
        }
    }
    let order: Vec<usize> = match &m.grades {
        Some(g) => {
            let mut count: BTreeMap<&Vec<i64>, usize> = BTreeMap::new();
            for x in g {
                *count.entry(x).or_default() += 1;
            }
            let mut idx: Vec<usize> = (0..m.dim).collect();
            idx.sort_by_key(|&i| count[&g[i]]);
            idx
        }
        None => (0..m.dim).collect(),
    };
    order
        .into_iter()
        .map(|i| spin(m, &[svec::unit(i)]))
        .find(|s| !s.is_full())
}

/// Composition factors in the order found (submodule first, then quotient).
pub fn composition_factors<M: ModuleLike>(m: &M, seed: u64) -> Result<Vec<M>> {
    match is_irreducible(&m.action(), seed)? {
        Irreducibility::Irreducible(_) => Ok(vec![clone_via_quotient(m)?]),
        Irreducibility::Reducible(s) => {
            let sub = m.sub_on(s.basis())?;
            let quo = m.quotient_by(s.basis())?;
            let mut out = composition_factors(&sub, seed)?;
            out.extend(composition_factors(&quo, seed)?);
            Ok(out)
        }
    }
}

fn clone_via_quotient<M: ModuleLike>(m: &M) -> Result<M> {
    m.quotient_by(&[])
}

/// Irreducible quotient of the cyclic submodule generated by `v` in which `v`
/// survives; returns it together with the image of `v`.
pub fn head_of_cyclic<M: ModuleLike>(m: &M, v: &SVec<M::Scalar>, seed: u64) -> Result<(M, SVec<M::Scalar>)> {
    let act = m.action();
    let n_space = spin(&act, std::slice::from_ref(v));
    if n_space.is_zero() {
        return Err(Error::InvalidArgument("cyclic vector is zero".into()));
    }
    let n_mod = m.sub_on(n_space.basis())?;
    let v_coords: SVec<M::Scalar> = svec::from_dense(&n_space.coordinates(v).expect("v lies in its spin"));
    let nd = n_mod.module_dim();
    let mut radical: Vec<SVec<M::Scalar>> = Vec::new();
    loop {
        let q = n_mod.quotient_by(&radical)?;
        let mut ech = Echelon::new(nd);
        for r in &radical {
            ech.insert(r.clone());
        }
        let free = ech.free_columns();
        let mut pos = vec![usize::MAX; nd];
        for (k, &c) in free.iter().enumerate() {
            pos[c] = k;
        }
        let vq: SVec<M::Scalar> = ech.reduce(&v_coords).into_iter().map(|(i, x)| (pos[i], x)).collect();
        if vq.is_empty() {
            return Err(Error::InvalidArgument("cyclic vector vanished in quotient".into()));
        }
        match is_irreducible(&q.action(), seed)? {
            Irreducibility::Irreducible(_) => return Ok((q, vq)),
            Irreducibility::Reducible(s) => {
                for b in s.basis() {
                    let lifted: SVec<M::Scalar> = b.iter().map(|(k, x)| (free[*k], x.clone())).collect();
                    radical.push(lifted);
                }
                radical = Subspace::span(nd, radical).basis().to_vec();
            }
        }
    }
}
