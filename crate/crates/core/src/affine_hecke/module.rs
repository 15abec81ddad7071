use crate::error::{Error, Result};
use crate::hecke::HeckeElt;
use crate::linalg::{SVec, SparseMat};
use crate::report::{evaluate, RelationReport, Residual};
use crate::scalars::{Field, ScalarContext};

use super::elt::AffHeckeElt;

/// Which algebra a [`RightModule`] is over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeKind {
    /// `H_ℓ(q²)`.
    Finite,
    /// `Ĥ_ℓ(q²)`.
    Affine,
}

/// Right module over `H_ℓ(q²)` or `Ĥ_ℓ(q²)`, acting on row vectors.
///
/// `m·g·g'` is the row vector `m` times the matrix product `G·G'`.
#[derive(Clone, Debug)]
pub struct RightModule<F> {
    ell: usize,
    kind: HeckeKind,
    dim: usize,
    sigma: Vec<SparseMat<F>>,
    y: Vec<SparseMat<F>>,
    y_inv: Vec<SparseMat<F>>,
    labels: Option<Vec<String>>,
    spectrum_hint: Vec<F>,
}

impl<F: Field> RightModule<F> {
    pub fn finite(ell: usize, dim: usize, sigma: Vec<SparseMat<F>>) -> Result<Self> {
        let m = RightModule {
            ell,
            kind: HeckeKind::Finite,
            dim,
            sigma,
            y: Vec::new(),
            y_inv: Vec::new(),
            labels: None,
            spectrum_hint: Vec::new(),
        };
        m.check_shapes()?;
        Ok(m)
    }

    /// Affine module; missing `y` inverses are computed.
    pub fn affine(
        ell: usize,
        dim: usize,
        sigma: Vec<SparseMat<F>>,
        y: Vec<SparseMat<F>>,
        y_inv: Option<Vec<SparseMat<F>>>,
    ) -> Result<Self> {
        let y_inv = match y_inv {
            Some(v) => v,
            None => y.iter().map(|m| m.inverse()).collect::<Result<Vec<_>>>()?,
        };
        let m = RightModule {
            ell,
            kind: HeckeKind::Affine,
            dim,
            sigma,
            y,
            y_inv,
            labels: None,
            spectrum_hint: Vec::new(),
        };
        m.check_shapes()?;
        Ok(m)
    }

    fn check_shapes(&self) -> Result<()> {
        if self.ell == 0 {
            return Err(Error::InvalidArgument("ℓ must be positive".into()));
        }
        if self.sigma.len() != self.ell - 1 {
            return Err(Error::Mismatch { expected: self.ell - 1, got: self.sigma.len() });
        }
        if self.kind == HeckeKind::Affine {
            for v in [&self.y, &self.y_inv] {
                if v.len() != self.ell {
                    return Err(Error::Mismatch { expected: self.ell, got: v.len() });
                }
            }
        }
        for m in self.generators().map(|(_, m)| m) {
            if m.nrows() != self.dim || m.ncols() != self.dim {
                return Err(Error::Mismatch { expected: self.dim, got: m.nrows().max(m.ncols()) });
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    /// Candidate eigenvalues of the `y_j`, used to locate joint eigenspaces.
    pub fn with_spectrum_hint(mut self, hint: Vec<F>) -> Self {
        let mut h: Vec<F> = Vec::new();
        for x in hint {
            if !h.contains(&x) {
                h.push(x);
            }
        }
        self.spectrum_hint = h;
        self
    }

    pub fn spectrum_hint(&self) -> &[F] {
        &self.spectrum_hint
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn kind(&self) -> HeckeKind {
        self.kind
    }

    pub fn is_affine(&self) -> bool {
        self.kind == HeckeKind::Affine
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `σ_i`, 1-based.
    pub fn sigma(&self, i: usize) -> &SparseMat<F> {
        &self.sigma[i - 1]
    }

    /// Matrix of `y_j`, 1-based.
    pub fn y(&self, j: usize) -> &SparseMat<F> {
        &self.y[j - 1]
    }

    pub fn y_inv(&self, j: usize) -> &SparseMat<F> {
        &self.y_inv[j - 1]
    }

    pub fn sigmas(&self) -> &[SparseMat<F>] {
        &self.sigma
    }

    pub fn ys(&self) -> &[SparseMat<F>] {
        &self.y
    }

    /// Generators with their descriptor names `s i`, `y j`, `yinv j`.
    pub fn generators(&self) -> impl Iterator<Item = (String, &SparseMat<F>)> {
        let s = self.sigma.iter().enumerate().map(|(i, m)| (format!("s {}", i + 1), m));
        let y = self.y.iter().enumerate().map(|(j, m)| (format!("y {}", j + 1), m));
        let yi = self.y_inv.iter().enumerate().map(|(j, m)| (format!("yinv {}", j + 1), m));
        s.chain(y).chain(yi)
    }

    /// Generator matrices used for spinning (inverses included).
    pub fn action_matrices(&self) -> Vec<SparseMat<F>> {
        self.generators().map(|(_, m)| m.clone()).collect()
    }

    /// Forgets the `y` action.
    pub fn restrict_to_finite(&self) -> Self {
        RightModule {
            ell: self.ell,
            kind: HeckeKind::Finite,
            dim: self.dim,
            sigma: self.sigma.clone(),
            y: Vec::new(),
            y_inv: Vec::new(),
            labels: self.labels.clone(),
            spectrum_hint: Vec::new(),
        }
    }

    /// Matrix of `σ_w` for `w` given by a reduced word.
    pub fn sigma_word(&self, word: &[usize]) -> SparseMat<F> {
        word.iter()
            .fold(SparseMat::identity(self.dim), |acc, &i| acc.mul(self.sigma(i)))
    }

    /// Matrix of a Hecke algebra element.
    pub fn hecke_matrix(&self, h: &HeckeElt<F>) -> SparseMat<F> {
        let mut out = SparseMat::zeros(self.dim, self.dim);
        for (w, c) in h.terms() {
            out = out.axpy(c, &self.sigma_word(&w.reduced_word()));
        }
        out
    }

    /// Matrix of `y^α`.
    pub fn y_monomial(&self, alpha: &[i32]) -> SparseMat<F> {
        let mut out = SparseMat::identity(self.dim);
        for (j, &e) in alpha.iter().enumerate() {
            let m = if e >= 0 { &self.y[j] } else { &self.y_inv[j] };
            for _ in 0..e.unsigned_abs() {
                out = out.mul(m);
            }
        }
        out
    }

    /// Matrix of an affine Hecke algebra element.
    pub fn affine_matrix(&self, h: &AffHeckeElt<F>) -> SparseMat<F> {
        let mut out = SparseMat::zeros(self.dim, self.dim);
        for ((alpha, w), c) in h.terms() {
            let m = self.y_monomial(alpha).mul(&self.sigma_word(&w.reduced_word()));
            out = out.axpy(c, &m);
        }
        out
    }

    pub fn act(&self, v: &SVec<F>, g: &SparseMat<F>) -> SVec<F> {
        g.vec_mul(v)
    }

    /// Residuals of every defining relation.
    pub fn verify_relations(&self, ctx: &ScalarContext<F>) -> RelationReport {
        let q2 = ctx.q_pow(2);
        let d = self.dim;
        let id = SparseMat::<F>::identity(d);
        let mut res: Vec<Residual<'_, F>> = Vec::new();
        for i in 1..self.ell {
            let s = self.sigma(i);
            let (q2, id) = (q2.clone(), id.clone());
            res.push(Residual::new(format!("(s{i}+1)(s{i}-q^2)=0"), move || {
                s.add(&id).mul(&s.sub(&id.scale(&q2)))
            }));
            if i + 1 < self.ell {
                let t = self.sigma(i + 1);
                res.push(Residual::new(format!("s{i}s{}s{i}=s{}s{i}s{}", i + 1, i + 1, i + 1), move || {
                    s.mul(t).mul(s).sub(&t.mul(s).mul(t))
                }));
            }
            for k in i + 2..self.ell {
                let t = self.sigma(k);
                res.push(Residual::new(format!("s{i}s{k}=s{k}s{i}"), move || s.mul(t).sub(&t.mul(s))));
            }
        }
        if self.is_affine() {
            for j in 1..=self.ell {
                let (y, yi) = (self.y(j), self.y_inv(j));
                res.push(Residual::new(format!("y{j}*yinv{j}=1"), move || {
                    y.mul(yi).sub(&SparseMat::identity(d))
                }));
                for k in j + 1..=self.ell {
                    let z = self.y(k);
                    res.push(Residual::new(format!("y{j}y{k}=y{k}y{j}"), move || y.mul(z).sub(&z.mul(y))));
                }
                for i in 1..self.ell {
                    let s = self.sigma(i);
                    if j != i && j != i + 1 {
                        res.push(Residual::new(format!("y{j}s{i}=s{i}y{j}"), move || {
                            y.mul(s).sub(&s.mul(y))
                        }));
                    }
                }
            }
            for i in 1..self.ell {
                let (s, yi, yn) = (self.sigma(i), self.y(i), self.y(i + 1));
                let q2 = q2.clone();
                res.push(Residual::new(format!("s{i}y{i}s{i}=q^2y{}", i + 1), move || {
                    s.mul(yi).mul(s).sub(&yn.scale(&q2))
                }));
            }
        }
        evaluate(res)
    }

    /// Module spanned by the rows of `basis` (an invariant subspace), in those coordinates.
    pub fn submodule(&self, basis: &[SVec<F>]) -> Result<Self> {
        let (mats, _) = crate::modtools::restrict_matrices(basis, self.dim, &self.all_matrices())?;
        self.rebuild(basis.len(), mats)
    }

    /// Quotient by the invariant subspace spanned by `basis` (given in echelon form).
    pub fn quotient(&self, basis: &[SVec<F>]) -> Result<Self> {
        let (mats, dim) = crate::modtools::quotient_matrices(basis, self.dim, &self.all_matrices())?;
        self.rebuild(dim, mats)
    }

    fn all_matrices(&self) -> Vec<SparseMat<F>> {
        let mut v = self.sigma.clone();
        v.extend(self.y.iter().cloned());
        v.extend(self.y_inv.iter().cloned());
        v
    }

    fn rebuild(&self, dim: usize, mats: Vec<SparseMat<F>>) -> Result<Self> {
        let ns = self.sigma.len();
        let mut it = mats.into_iter();
        let sigma: Vec<_> = it.by_ref().take(ns).collect();
        let out = match self.kind {
            HeckeKind::Finite => RightModule::finite(self.ell, dim, sigma)?,
            HeckeKind::Affine => {
                let y: Vec<_> = it.by_ref().take(self.ell).collect();
                let y_inv: Vec<_> = it.collect();
                RightModule::affine(self.ell, dim, sigma, y, Some(y_inv))?
            }
        };
        Ok(out.with_spectrum_hint(self.spectrum_hint.clone()))
    }
}

impl<F: Field> RightModule<F> {
    /// `q²` read off from `σ_1² + σ_1 = q²(σ_1 + 1)`, when `σ_1 ≠ −1`.
    fn quadratic_parameter(&self) -> Option<F> {
        let s = self.sigma.first()?;
        let id = SparseMat::identity(self.dim);
        let sp1 = s.add(&id);
        let (i, j, x) = sp1.triplets().next().map(|(i, j, x)| (i, j, x.clone()))?;
        let lhs = s.mul(s).add(s).get(i, j);
        lhs.div(&x).ok()
    }

    /// Normalized Jucys–Murphy elements `q^{−2(j−1)} σ_{j−1}⋯σ_1σ_1⋯σ_{j−1}`, `j ≥ 2`,
    /// with their possible eigenvalues `q^{2c}`, `|c| < ℓ`.
    pub fn jucys_murphy(&self) -> (Vec<SparseMat<F>>, Vec<F>) {
        let q2 = self.quadratic_parameter();
        let mut family = Vec::new();
        let mut acc = SparseMat::identity(self.dim);
        for j in 2..=self.ell {
            let s = self.sigma(j - 1);
            acc = s.mul(&acc).mul(s);
            let m = match &q2 {
                Some(q2) => acc.scale(&q2.pow(-(j as i64 - 1)).expect("q² is nonzero")),
                None => acc.clone(),
            };
            family.push(m);
        }
        let hint = match &q2 {
            Some(q2) => (1 - self.ell as i64..self.ell as i64)
                .filter_map(|c| q2.pow(c).ok())
                .collect(),
            None => Vec::new(),
        };
        (family, hint)
    }
}

impl<F: Field> crate::modtools::ModuleLike for RightModule<F> {
    type Scalar = F;

    fn action(&self) -> crate::modtools::ActionModule<F> {
        let mut names = Vec::new();
        let mut gens = Vec::new();
        for (name, m) in self.generators().filter(|(n, _)| !n.starts_with("yinv")) {
            names.push(name);
            gens.push(m.clone());
        }
        let out = crate::modtools::ActionModule::new(self.dim, names, gens);
        match self.kind {
            HeckeKind::Affine => out.with_commuting(self.y.clone(), self.spectrum_hint.clone()),
            HeckeKind::Finite => {
                let (family, hint) = self.jucys_murphy();
                out.with_commuting(family, hint)
            }
        }
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
