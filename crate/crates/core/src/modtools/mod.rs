//! Generic module algorithms over an exact field: spinning, irreducibility
//! certificates, homomorphism spaces, isomorphism search.
//!
//! Everything here works with *row actions*: a module is a list of square
//! matrices `G` acting by `v ↦ v·G`. Left modules are handled by transposing.

mod hom;
mod meataxe;

use crate::error::{Error, Result};
use crate::linalg::{svec, Echelon, SVec, SparseMat, Subspace};
use crate::scalars::Field;

pub use hom::{are_isomorphic, hom_space, is_intertwiner};
pub use meataxe::{composition_factors, head_of_cyclic, is_irreducible, Irreducibility, NortonWitness};

/// Weight or other grading label of a basis vector.
pub type Grade = Vec<i64>;

/// A module presented by row-action generator matrices.
#[derive(Clone, Debug)]
pub struct ActionModule<F> {
    pub dim: usize,
    pub names: Vec<String>,
    pub gens: Vec<SparseMat<F>>,
    /// Grade of each basis vector; generators must be homogeneous of some degree
    /// and the grade spaces must be joint eigenspaces of elements of the algebra.
    pub grades: Option<Vec<Grade>>,
    /// Commuting family inside the algebra plus candidate eigenvalues.
    pub commuting: Option<(Vec<SparseMat<F>>, Vec<F>)>,
}

impl<F: Field> ActionModule<F> {
    pub fn new(dim: usize, names: Vec<String>, gens: Vec<SparseMat<F>>) -> Self {
        ActionModule { dim, names, gens, grades: None, commuting: None }
    }

    pub fn with_grades(mut self, grades: Vec<Grade>) -> Self {
        self.grades = Some(grades);
        self
    }

    pub fn with_commuting(mut self, family: Vec<SparseMat<F>>, candidates: Vec<F>) -> Self {
        self.commuting = Some((family, candidates));
        self
    }

    /// The contragredient presentation (transposed generators).
    pub fn dual(&self) -> Self {
        ActionModule {
            dim: self.dim,
            names: self.names.clone(),
            gens: self.gens.iter().map(SparseMat::transpose).collect(),
            grades: self.grades.clone(),
            commuting: self
                .commuting
                .as_ref()
                .map(|(f, c)| (f.iter().map(SparseMat::transpose).collect(), c.clone())),
        }
    }
}

/// Something with submodules and quotients that can be viewed as an [`ActionModule`].
pub trait ModuleLike: Sized {
    type Scalar: Field;
    fn action(&self) -> ActionModule<Self::Scalar>;
    /// Submodule on an invariant subspace, given in action (row) coordinates.
    fn sub_on(&self, basis: &[SVec<Self::Scalar>]) -> Result<Self>;
    /// Quotient by an invariant subspace, given in action (row) coordinates.
    fn quotient_by(&self, basis: &[SVec<Self::Scalar>]) -> Result<Self>;
    fn module_dim(&self) -> usize;
}

/// Smallest invariant subspace containing the seeds.
pub fn spin<F: Field>(m: &ActionModule<F>, seeds: &[SVec<F>]) -> Subspace<F> {
    let mut ech = Echelon::new(m.dim);
    let mut queue: Vec<SVec<F>> = Vec::new();
    for s in seeds {
        if let Some(r) = ech.insert(s.clone()) {
            queue.push(r);
        }
    }
    while let Some(v) = queue.pop() {
        for g in &m.gens {
            let w = g.vec_mul(&v);
            if w.is_empty() {
                continue;
            }
            if let Some(r) = ech.insert(w) {
                queue.push(r);
            }
            if ech.is_full() {
                return Subspace::full(m.dim);
            }
        }
    }
    Subspace::from_echelon(&ech)
}

/// True when every generator maps the subspace into itself.
pub fn is_invariant<F: Field>(m: &ActionModule<F>, s: &Subspace<F>) -> bool {
    let e = s.echelon();
    s.basis().iter().all(|b| m.gens.iter().all(|g| e.contains(&g.vec_mul(b))))
}

/// Matrices of the restriction to the invariant subspace spanned by `basis`
/// (row convention), in the coordinates of `basis`.
pub fn restrict_matrices<F: Field>(
    basis: &[SVec<F>],
    dim: usize,
    mats: &[SparseMat<F>],
) -> Result<(Vec<SparseMat<F>>, usize)> {
    let k = basis.len();
    let mut ech = Echelon::with_payload(dim);
    for (i, b) in basis.iter().enumerate() {
        if ech.insert_with(b.clone(), svec::unit(i)).is_none() {
            return Err(Error::InvalidArgument("submodule basis is not independent".into()));
        }
    }
    let coords = |v: &SVec<F>| -> Result<SVec<F>> {
        let (res, _) = ech.reduce_with(v, &Vec::new());
        if !res.is_empty() {
            return Err(Error::InvalidArgument("subspace is not invariant".into()));
        }
        let mut acc = svec::Accum::new(k);
        for (c, x) in v {
            if let Some(p) = ech.payload_for_pivot(*c) {
                acc.add_scaled(x, p);
            }
        }
        Ok(acc.take())
    };
    let out = mats
        .iter()
        .map(|g| {
            let rows = basis.iter().map(|b| coords(&g.vec_mul(b))).collect::<Result<Vec<_>>>()?;
            Ok(SparseMat::from_rows(k, rows))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((out, k))
}

/// Matrices on the quotient by the invariant subspace spanned by `basis`.
///
/// The quotient basis is the images of the standard vectors at the non-pivot
/// columns of the reduced echelon form, so homogeneous bases stay homogeneous.
pub fn quotient_matrices<F: Field>(
    basis: &[SVec<F>],
    dim: usize,
    mats: &[SparseMat<F>],
) -> Result<(Vec<SparseMat<F>>, usize)> {
    let mut ech = Echelon::new(dim);
    for b in basis {
        ech.insert(b.clone());
    }
    let free = ech.free_columns();
    let mut pos = vec![usize::MAX; dim];
    for (k, &c) in free.iter().enumerate() {
        pos[c] = k;
    }
    let out = mats
        .iter()
        .map(|g| {
            let rows = free
                .iter()
                .map(|&c| {
                    ech.reduce(g.row(c))
                        .into_iter()
                        .map(|(i, x)| (pos[i], x))
                        .collect::<SVec<F>>()
                })
                .collect();
            SparseMat::from_rows(free.len(), rows)
        })
        .collect();
    Ok((out, free.len()))
}

/// Non-pivot columns of the span of `basis`: the standard quotient basis.
pub fn quotient_basis_columns<F: Field>(basis: &[SVec<F>], dim: usize) -> Vec<usize> {
    let mut ech = Echelon::new(dim);
    for b in basis {
        ech.insert(b.clone());
    }
    ech.free_columns()
}

/// `{v : v · w = 0 for all w in ws}` as a subspace (annihilator of column vectors).
pub fn annihilator<F: Field>(dim: usize, ws: &[SVec<F>]) -> Subspace<F> {
    let mut ech = Echelon::new(dim);
    for w in ws {
        ech.insert(w.clone());
    }
    Subspace::span(dim, ech.nullspace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RatFunc;

    fn mat(rows: &[&[i64]]) -> SparseMat<RatFunc> {
        let n = rows.len();
        SparseMat::from_triplets(
            n,
            n,
            rows.iter().enumerate().flat_map(|(i, r)| {
                r.iter().enumerate().map(move |(j, &x)| (i, j, RatFunc::from_int(x)))
            }),
        )
        .unwrap()
    }

    #[test]
    fn spin_of_zero_is_zero() {
        let m = ActionModule::new(2, vec!["g".into()], vec![mat(&[&[0, 1], &[0, 0]])]);
        assert!(spin(&m, &[]).is_zero());
        assert_eq!(spin(&m, &[svec::unit(0)]).dim(), 2);
        assert_eq!(spin(&m, &[svec::unit(1)]).dim(), 1);
    }

    #[test]
    fn restriction_and_quotient() {
        let g = mat(&[&[1, 1], &[0, 2]]);
        let basis = vec![svec::unit::<RatFunc>(1)];
        let (sub, k) = restrict_matrices(&basis, 2, std::slice::from_ref(&g)).unwrap();
        assert_eq!(k, 1);
        assert_eq!(sub[0].get(0, 0), RatFunc::from_int(2));
        let (quo, k) = quotient_matrices(&basis, 2, &[g]).unwrap();
        assert_eq!(k, 1);
        assert_eq!(quo[0].get(0, 0), RatFunc::from_int(1));
    }
}
