use serde::Serialize;

use super::echelon::Echelon;
use super::svec::{self, SVec};
use crate::scalars::Field;

/// Subspace of `F^dim` stored as its reduced echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    dim: usize,
    basis: Vec<SVec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(dim: usize) -> Self {
        Subspace { dim, basis: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        Subspace { dim, basis: (0..dim).map(svec::unit).collect() }
    }

    pub fn span<I: IntoIterator<Item = SVec<F>>>(dim: usize, vectors: I) -> Self {
        let mut ech = Echelon::new(dim);
        for v in vectors {
            ech.insert(v);
        }
        Self::from_echelon(&ech)
    }

    pub fn from_echelon(ech: &Echelon<F>) -> Self {
        Subspace { dim: ech.ncols(), basis: ech.basis() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SVec<F>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.dim
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r[0].0).collect()
    }

    pub fn echelon(&self) -> Echelon<F> {
        let mut e = Echelon::new(self.dim);
        for r in &self.basis {
            e.push_reduced(r.clone(), None);
        }
        e
    }

    pub fn contains(&self, v: &SVec<F>) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains_subspace(&self, o: &Self) -> bool {
        let e = self.echelon();
        o.basis.iter().all(|v| e.contains(v))
    }

    /// Coordinates of `v` relative to `basis()`.
    pub fn coordinates(&self, v: &SVec<F>) -> Option<Vec<F>> {
        let e = self.echelon();
        if !e.contains(v) {
            return None;
        }
        Some(
            self.basis
                .iter()
                .map(|r| svec::get(v, r[0].0).cloned().unwrap_or_else(F::zero))
                .collect(),
        )
    }

    pub fn sum(&self, o: &Self) -> Self {
        Self::span(self.dim, self.basis.iter().chain(&o.basis).cloned())
    }

    /// Intersection by the Zassenhaus construction.
    pub fn intersect(&self, o: &Self) -> Self {
        let d = self.dim;
        let mut ech = Echelon::new(2 * d);
        for u in &self.basis {
            let mut row = u.clone();
            row.extend(u.iter().map(|(i, x)| (i + d, x.clone())));
            ech.insert(row);
        }
        for w in &o.basis {
            ech.insert(w.clone());
        }
        let vecs = ech
            .basis()
            .into_iter()
            .filter(|r| r[0].0 >= d)
            .map(|r| r.into_iter().map(|(i, x)| (i - d, x)).collect::<SVec<F>>());
        Self::span(d, vecs)
    }

    /// Serializable rendering of the basis.
    pub fn to_strings(&self) -> SubspaceRepr {
        SubspaceRepr {
            ambient_dim: self.dim,
            basis: self
                .basis
                .iter()
                .map(|r| svec::to_dense(r, self.dim).iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubspaceRepr {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<String>>,
}
