use std::collections::{BTreeMap, HashMap};

use super::natural::{natural_rep, rcheck_i, tensor_power};
use super::{UqModule, Weight};
use crate::affine_hecke::RightModule;
use crate::error::{Error, Result};
use crate::linalg::{svec, Echelon, SVec, SparseMat};
use crate::par;
use crate::scalars::{Field, ScalarContext};

/// The quotient map `M ⊗ V^{⊗ℓ} → J(M)`.
///
/// Ambient index of `m_a ⊗ e_b` is `a · D + b` with `D = (n+1)^ℓ`. The
/// defining subspace is kept in reduced echelon form; the basis of `J(M)` is
/// the image of the non-pivot ambient vectors.
#[derive(Clone, Debug)]
pub struct JProjection<F> {
    dm: usize,
    dv: usize,
    rows: HashMap<usize, SVec<F>>,
    free: Vec<usize>,
    pos: Vec<usize>,
}

/// Operator `Σ_j A_j ⊗ B_j` on `M ⊗ V^{⊗ℓ}`: `A_j` acts on `M` in the row
/// convention and `B_j` on `V^{⊗ℓ}` in the column convention.
pub type TensorTerms<'a, F> = [(&'a SparseMat<F>, &'a SparseMat<F>)];

impl<F: Field> JProjection<F> {
    pub fn ambient_dim(&self) -> usize {
        self.dm * self.dv
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.rows.len()
    }

    /// Ambient index `(a, b)` of the `k`-th basis vector of `J(M)`.
    pub fn lift(&self, k: usize) -> (usize, usize) {
        let c = self.free[k];
        (c / self.dv, c % self.dv)
    }

    /// Image of an ambient vector in `J(M)` coordinates.
    pub fn project(&self, x: &SVec<F>) -> SVec<F> {
        let mut acc = svec::Accum::new(self.ambient_dim());
        for (i, c) in x {
            match self.rows.get(i) {
                Some(row) => {
                    // row has 1 at i and zeros at other pivots
                    for (j, r) in row.iter().skip_while(|(j, _)| j == i) {
                        if self.pos[*j] != usize::MAX {
                            acc.add_at(*j, &c.neg(), r);
                        }
                    }
                }
                None => acc.add_at(*i, &F::one(), c),
            }
        }
        acc.take().into_iter().map(|(j, c)| (self.pos[j], c)).collect()
    }

    /// Image of `m ⊗ v`.
    pub fn vector(&self, m: &SVec<F>, v: &SVec<F>) -> SVec<F> {
        self.project(&self.kron(m, v))
    }

    fn kron(&self, m: &SVec<F>, v: &SVec<F>) -> SVec<F> {
        let mut out = Vec::with_capacity(m.len() * v.len());
        for (a, x) in m {
            for (b, y) in v {
                out.push((a * self.dv + b, x.mul(y)));
            }
        }
        out
    }

    fn apply_terms(&self, terms: &TensorTerms<'_, F>, cols: &[SparseMat<F>], x: &SVec<F>) -> SVec<F> {
        let mut acc = svec::Accum::new(self.ambient_dim());
        for (i, c) in x {
            let (a, b) = (i / self.dv, i % self.dv);
            for ((am, _), bt) in terms.iter().zip(cols) {
                let (ra, cb) = (am.row(a), bt.row(b));
                for (a2, x2) in ra {
                    let s = c.mul(x2);
                    for (b2, y2) in cb {
                        acc.add_at(a2 * self.dv + b2, &s, y2);
                    }
                }
            }
        }
        acc.take()
    }

    /// Matrix of the induced operator on `J(M)` in the column convention.
    pub fn induced_operator(&self, terms: &TensorTerms<'_, F>) -> SparseMat<F> {
        let cols: Vec<SparseMat<F>> = terms.iter().map(|(_, b)| b.transpose()).collect();
        let images = par::map_slice(&self.free, |&c| {
            self.project(&self.apply_terms(terms, &cols, &vec![(c, F::one())]))
        });
        let d = self.dim();
        let entries = images
            .into_iter()
            .enumerate()
            .flat_map(|(k, v)| v.into_iter().map(move |(r, x)| (r, k, x)));
        SparseMat::from_triplets(d, d, entries).expect("indices in range")
    }

    /// Fails unless the operator maps the defining subspace into itself.
    pub fn check_invariance(&self, terms: &TensorTerms<'_, F>) -> Result<()> {
        let cols: Vec<SparseMat<F>> = terms.iter().map(|(_, b)| b.transpose()).collect();
        let rows: Vec<&SVec<F>> = self.rows.values().collect();
        let bad = par::map_slice(&rows, |r| !self.project(&self.apply_terms(terms, &cols, r)).is_empty());
        if bad.into_iter().any(|b| b) {
            return Err(Error::NotWellDefined("operator does not preserve the defining subspace".into()));
        }
        Ok(())
    }
}

/// `J(M) = M ⊗_{H_ℓ(q²)} V^{⊗ℓ}` together with its projection.
#[derive(Clone, Debug)]
pub struct JModule<F> {
    pub module: UqModule<F>,
    pub proj: JProjection<F>,
    /// `V^{⊗ℓ}` with its `t_r`.
    pub tensor: UqModule<F>,
}

fn content_key(mut b: usize, d: usize, ell: usize) -> Vec<usize> {
    let mut digits = Vec::with_capacity(ell);
    for _ in 0..ell {
        digits.push(b % d);
        b /= d;
    }
    digits.sort_unstable();
    digits
}

/// Jimbo's functor on a (finite or affine) Hecke module; only the `σ_i` are used.
pub fn jimbo_j<F: Field>(ctx: &ScalarContext<F>, m: &RightModule<F>, n: usize) -> Result<JModule<F>> {
    let ell = m.ell();
    let tensor = tensor_power(&natural_rep(ctx, n)?, ell)?;
    let (dm, dv) = (m.dim(), tensor.dim());
    let amb = dm * dv;
    let r_cols: Vec<SparseMat<F>> = (1..ell)
        .map(|i| rcheck_i(ctx, n, ell, i).map(|r| r.transpose()))
        .collect::<Result<_>>()?;

    // Ř_i permutes tensor factors up to scalars, so relations split by content.
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for b in 0..dv {
        classes.entry(content_key(b, n + 1, ell)).or_default().push(b);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();
    let per_class = par::map_slice(&classes, |bs| {
        let mut ech = Echelon::new(amb);
        for a in 0..dm {
            for &b in bs {
                for (i, rc) in r_cols.iter().enumerate() {
                    let mut v: SVec<F> = m.sigma(i + 1).row(a).iter().map(|(a2, x)| (a2 * dv + b, x.clone())).collect();
                    let rhs: SVec<F> = rc.row(b).iter().map(|(b2, y)| (a * dv + b2, y.clone())).collect();
                    v.sort_by_key(|(j, _)| *j);
                    ech.insert(svec::axpy(&v, &F::one().neg(), &sorted(rhs)));
                }
            }
        }
        ech.pivots().zip(ech.basis()).collect::<Vec<_>>()
    });
    let rows: HashMap<usize, SVec<F>> = per_class.into_iter().flatten().collect();
    let free: Vec<usize> = (0..amb).filter(|c| !rows.contains_key(c)).collect();
    let mut pos = vec![usize::MAX; amb];
    for (k, &c) in free.iter().enumerate() {
        pos[c] = k;
    }
    let proj = JProjection { dm, dv, rows, free, pos };

    let id_m = SparseMat::identity(dm);
    let induce = |x: &SparseMat<F>| proj.induced_operator(&[(&id_m, x)]);
    let mut xp = Vec::with_capacity(n);
    let mut xm = Vec::with_capacity(n);
    let mut k = Vec::with_capacity(n);
    for i in 1..=n {
        xp.push(induce(tensor.x_plus(i)?));
        xm.push(induce(tensor.x_minus(i)?));
        k.push(induce(tensor.k(i)?));
    }
    let weights: Vec<Weight> = (0..proj.dim()).map(|c| tensor.weights()[proj.lift(c).1].clone()).collect();
    let t = (1..=n + 1).map(|r| Ok(induce(tensor.t(r)?))).collect::<Result<Vec<_>>>()?;
    let module = UqModule::new(n, xp, xm, k, weights)?.with_t(t)?;
    Ok(JModule { module, proj, tensor })
}

fn sorted<F>(mut v: SVec<F>) -> SVec<F> {
    v.sort_by_key(|(j, _)| *j);
    v
}
