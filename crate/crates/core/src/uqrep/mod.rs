//! Modules over `U_q(sl_{n+1})`, `U_q(gl_{n+1})` and `U_q(ŝl_{n+1})`, the
//! R-matrix on `V ⊗ V`, weight tools and Jimbo's functor `J`.
//!
//! Left modules use the column convention: a generator `X` sends the basis
//! vector `e_j` to column `j` of its matrix.

mod jimbo;
mod natural;
mod relations;
mod weights;

pub use jimbo::{jimbo_j, JModule, JProjection};
pub use natural::{k_theta, natural_rep, rcheck, rcheck_i, tensor_power, x_theta_minus, x_theta_plus};
pub use relations::affine_cartan;
pub use weights::{character, check_weights, epsilon, fundamental, highest_weight_vectors, level, weight_spaces, Weight};

use crate::error::{Error, Result};
use crate::linalg::{SVec, SparseMat};
use crate::modtools::{quotient_matrices, restrict_matrices, ActionModule, ModuleLike};
use crate::scalars::Field;

/// `x_0^±`, `k_0^{±1}` of the affine algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineGens<F> {
    pub x0_plus: SparseMat<F>,
    pub x0_minus: SparseMat<F>,
    pub k0: SparseMat<F>,
    pub k0_inv: SparseMat<F>,
}

/// Finite-dimensional left module given by generator matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UqModule<F> {
    n: usize,
    dim: usize,
    x_plus: Vec<SparseMat<F>>,
    x_minus: Vec<SparseMat<F>>,
    k: Vec<SparseMat<F>>,
    k_inv: Vec<SparseMat<F>>,
    weights: Vec<Weight>,
    t: Option<Vec<SparseMat<F>>>,
    affine: Option<AffineGens<F>>,
}

fn require_diagonal<F: Field>(name: &str, m: &SparseMat<F>) -> Result<()> {
    if m.diagonal().is_none() {
        return Err(Error::NonDiagonal(name.to_string()));
    }
    Ok(())
}

impl<F: Field> UqModule<F> {
    pub fn new(
        n: usize,
        x_plus: Vec<SparseMat<F>>,
        x_minus: Vec<SparseMat<F>>,
        k: Vec<SparseMat<F>>,
        weights: Vec<Weight>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        for v in [&x_plus, &x_minus, &k] {
            if v.len() != n {
                return Err(Error::Mismatch { expected: n, got: v.len() });
            }
        }
        let dim = weights.len();
        if weights.iter().any(|w| w.len() != n) {
            return Err(Error::InvalidArgument("weights must have length n".into()));
        }
        for (i, m) in k.iter().enumerate() {
            require_diagonal(&format!("k {}", i + 1), m)?;
        }
        let k_inv = k.iter().map(SparseMat::inverse).collect::<Result<Vec<_>>>()?;
        let out = UqModule { n, dim, x_plus, x_minus, k, k_inv, weights, t: None, affine: None };
        out.check_shapes()?;
        Ok(out)
    }

    fn check_shapes(&self) -> Result<()> {
        for (_, m) in self.generators() {
            if m.nrows() != self.dim || m.ncols() != self.dim {
                return Err(Error::Mismatch { expected: self.dim, got: m.nrows().max(m.ncols()) });
            }
        }
        Ok(())
    }

    /// Attaches `t_1, …, t_{n+1}` (diagonal).
    pub fn with_t(mut self, t: Vec<SparseMat<F>>) -> Result<Self> {
        if t.len() != self.n + 1 {
            return Err(Error::Mismatch { expected: self.n + 1, got: t.len() });
        }
        for (r, m) in t.iter().enumerate() {
            require_diagonal(&format!("t {}", r + 1), m)?;
        }
        self.t = Some(t);
        self.check_shapes()?;
        Ok(self)
    }

    /// Attaches `x_0^±` and `k_0` (diagonal).
    pub fn with_affine(mut self, x0_plus: SparseMat<F>, x0_minus: SparseMat<F>, k0: SparseMat<F>) -> Result<Self> {
        require_diagonal("k 0", &k0)?;
        let k0_inv = k0.inverse()?;
        self.affine = Some(AffineGens { x0_plus, x0_minus, k0, k0_inv });
        self.check_shapes()?;
        Ok(self)
    }

    /// Drops the affine generators.
    pub fn finite_part(&self) -> Self {
        UqModule { affine: None, ..self.clone() }
    }

    /// Drops the `t_r`.
    pub fn without_t(&self) -> Self {
        UqModule { t: None, ..self.clone() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn is_affine(&self) -> bool {
        self.affine.is_some()
    }

    pub fn has_t(&self) -> bool {
        self.t.is_some()
    }

    pub fn affine_gens(&self) -> Option<&AffineGens<F>> {
        self.affine.as_ref()
    }

    fn index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, max: self.n });
        }
        Ok(i - 1)
    }

    fn affine_or_err(&self) -> Result<&AffineGens<F>> {
        self.affine.as_ref().ok_or_else(|| Error::MissingGenerator("x_0, k_0".into()))
    }

    /// `x_i^+`, `0 ≤ i ≤ n` (`i = 0` needs the affine generators).
    pub fn x_plus(&self, i: usize) -> Result<&SparseMat<F>> {
        if i == 0 {
            return Ok(&self.affine_or_err()?.x0_plus);
        }
        Ok(&self.x_plus[self.index(i)?])
    }

    pub fn x_minus(&self, i: usize) -> Result<&SparseMat<F>> {
        if i == 0 {
            return Ok(&self.affine_or_err()?.x0_minus);
        }
        Ok(&self.x_minus[self.index(i)?])
    }

    pub fn k(&self, i: usize) -> Result<&SparseMat<F>> {
        if i == 0 {
            return Ok(&self.affine_or_err()?.k0);
        }
        Ok(&self.k[self.index(i)?])
    }

    pub fn k_inv(&self, i: usize) -> Result<&SparseMat<F>> {
        if i == 0 {
            return Ok(&self.affine_or_err()?.k0_inv);
        }
        Ok(&self.k_inv[self.index(i)?])
    }

    /// `t_r`, `1 ≤ r ≤ n + 1`.
    pub fn t(&self, r: usize) -> Result<&SparseMat<F>> {
        let t = self.t.as_ref().ok_or_else(|| Error::MissingGenerator("t_r".into()))?;
        if r == 0 || r > self.n + 1 {
            return Err(Error::IndexOutOfRange { index: r, max: self.n + 1 });
        }
        Ok(&t[r - 1])
    }

    /// Generators with descriptor names `x+i`, `x-i`, `k i`, then `x+0`, `x-0`, `k 0`, then `t r`.
    pub fn generators(&self) -> Vec<(String, &SparseMat<F>)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            out.push((format!("x+{}", i + 1), &self.x_plus[i]));
            out.push((format!("x-{}", i + 1), &self.x_minus[i]));
            out.push((format!("k {}", i + 1), &self.k[i]));
        }
        if let Some(a) = &self.affine {
            out.push(("x+0".into(), &a.x0_plus));
            out.push(("x-0".into(), &a.x0_minus));
            out.push(("k 0".into(), &a.k0));
        }
        if let Some(t) = &self.t {
            for (r, m) in t.iter().enumerate() {
                out.push((format!("t {}", r + 1), m));
            }
        }
        out
    }

    /// Tensor product through the coproduct, including `x_0^±, k_0` and `t_r`
    /// when both factors carry them.
    pub fn tensor(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::Mismatch { expected: self.n, got: o.n });
        }
        let (ia, ib) = (SparseMat::identity(self.dim), SparseMat::identity(o.dim));
        let e = |xa: &SparseMat<F>, ka: &SparseMat<F>, xb: &SparseMat<F>| xa.kron(ka).add(&ia.kron(xb));
        let f = |xa: &SparseMat<F>, kia: &SparseMat<F>, xb: &SparseMat<F>| xa.kron(&ib).add(&kia.kron(xb));
        let mut xp = Vec::new();
        let mut xm = Vec::new();
        let mut k = Vec::new();
        for i in 0..self.n {
            xp.push(e(&self.x_plus[i], &o.k[i], &o.x_plus[i]));
            xm.push(f(&self.x_minus[i], &self.k_inv[i], &o.x_minus[i]));
            k.push(self.k[i].kron(&o.k[i]));
        }
        let weights = self
            .weights
            .iter()
            .flat_map(|wa| o.weights.iter().map(move |wb| wa.iter().zip(wb).map(|(x, y)| x + y).collect()))
            .collect();
        let mut out = UqModule::new(self.n, xp, xm, k, weights)?;
        if let (Some(ta), Some(tb)) = (&self.t, &o.t) {
            out = out.with_t(ta.iter().zip(tb).map(|(x, y)| x.kron(y)).collect())?;
        }
        if let (Some(a), Some(b)) = (&self.affine, &o.affine) {
            out = out.with_affine(
                e(&a.x0_plus, &b.k0, &b.x0_plus),
                f(&a.x0_minus, &a.k0_inv, &b.x0_minus),
                a.k0.kron(&b.k0),
            )?;
        }
        Ok(out)
    }

    /// Action of a generator word applied right to left: `word[0]` acts last.
    pub fn apply_word(&self, word: &[&SparseMat<F>], v: &SVec<F>) -> SVec<F> {
        word.iter().rev().fold(v.clone(), |acc, g| g.mul_vec(&acc))
    }

    fn all_matrices(&self) -> Vec<SparseMat<F>> {
        let mut v: Vec<SparseMat<F>> = Vec::new();
        v.extend(self.x_plus.iter().cloned());
        v.extend(self.x_minus.iter().cloned());
        v.extend(self.k.iter().cloned());
        if let Some(a) = &self.affine {
            v.extend([a.x0_plus.clone(), a.x0_minus.clone(), a.k0.clone()]);
        }
        if let Some(t) = &self.t {
            v.extend(t.iter().cloned());
        }
        v
    }

    fn rebuild(&self, mats: Vec<SparseMat<F>>, weights: Vec<Weight>) -> Result<Self> {
        let n = self.n;
        let mut it = mats.into_iter();
        let xp: Vec<_> = it.by_ref().take(n).collect();
        let xm: Vec<_> = it.by_ref().take(n).collect();
        let k: Vec<_> = it.by_ref().take(n).collect();
        let mut out = UqModule::new(n, xp, xm, k, weights)?;
        if self.affine.is_some() {
            let a: Vec<_> = it.by_ref().take(3).collect();
            let [x0p, x0m, k0]: [SparseMat<F>; 3] = a.try_into().expect("three affine generators");
            out = out.with_affine(x0p, x0m, k0)?;
        }
        if self.t.is_some() {
            out = out.with_t(it.collect())?;
        }
        Ok(out)
    }

    fn transposed(mats: &[SparseMat<F>]) -> Vec<SparseMat<F>> {
        mats.iter().map(SparseMat::transpose).collect()
    }

    /// Submodule on an invariant weight-graded subspace.
    pub fn submodule(&self, basis: &[SVec<F>]) -> Result<Self> {
        let (mats, _) = restrict_matrices(basis, self.dim, &Self::transposed(&self.all_matrices()))?;
        let weights = basis.iter().map(|b| self.weights[b[0].0].clone()).collect();
        self.rebuild(Self::transposed(&mats), weights)
    }

    /// Quotient by an invariant weight-graded subspace.
    pub fn quotient(&self, basis: &[SVec<F>]) -> Result<Self> {
        let (mats, _) = quotient_matrices(basis, self.dim, &Self::transposed(&self.all_matrices()))?;
        let free = crate::modtools::quotient_basis_columns(basis, self.dim);
        let weights = free.iter().map(|&c| self.weights[c].clone()).collect();
        self.rebuild(Self::transposed(&mats), weights)
    }
}

impl<F: Field> ModuleLike for UqModule<F> {
    type Scalar = F;

    fn action(&self) -> ActionModule<F> {
        let mut names = Vec::new();
        let mut gens = Vec::new();
        for (name, m) in self.generators().into_iter().filter(|(n, _)| !n.starts_with('t')) {
            names.push(name);
            gens.push(m.transpose());
        }
        ActionModule::new(self.dim, names, gens).with_grades(self.weights.clone())
    }

    fn sub_on(&self, basis: &[SVec<F>]) -> Result<Self> {
        self.submodule(basis)
    }

    fn quotient_by(&self, basis: &[SVec<F>]) -> Result<Self> {
        self.quotient(basis)
    }

    fn module_dim(&self) -> usize {
        self.dim
    }
}
