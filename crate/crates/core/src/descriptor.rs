//! JSON module descriptors:
//! `{algebra, ell, n, dim, generators: {name: [[row, col, scalar], …]}}`.
//!
//! Hecke modules use `algebra` `"H"` or `"Hhat"` with generators `s i`, `y j`.
//! Quantum group modules use `"U"` or `"Uhat"` with generators `x+i`, `x-i`,
//! `k i`, `t r` and an optional weight list. Scalars are written in `t`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::affine_hecke::RightModule;
use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::scalars::{Field, ScalarContext};
use crate::uqrep::{UqModule, Weight};

pub type Triplets = Vec<(usize, usize, String)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDescriptor {
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub dim: usize,
    pub generators: BTreeMap<String, Triplets>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<Weight>>,
}

fn encode<F: Field>(m: &SparseMat<F>) -> Triplets {
    m.triplets().map(|(r, c, x)| (r, c, x.to_string())).collect()
}

fn decode<F: Field>(ctx: &ScalarContext<F>, dim: usize, t: &Triplets) -> Result<SparseMat<F>> {
    let entries = t
        .iter()
        .map(|(r, c, s)| Ok((*r, *c, ctx.parse(s)?)))
        .collect::<Result<Vec<_>>>()?;
    SparseMat::from_triplets(dim, dim, entries)
}

impl ModuleDescriptor {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }

    fn matrix<F: Field>(&self, ctx: &ScalarContext<F>, name: &str) -> Result<SparseMat<F>> {
        let t = self
            .generators
            .get(name)
            .ok_or_else(|| Error::MissingGenerator(name.to_string()))?;
        decode(ctx, self.dim, t)
    }

    /// Scalars depend on the rank through `q = t^(2(n+1))`, so `n` is recorded.
    pub fn from_hecke<F: Field>(ctx: &ScalarContext<F>, m: &RightModule<F>) -> Self {
        let mut generators = BTreeMap::new();
        for i in 1..m.ell() {
            generators.insert(format!("s {i}"), encode(m.sigma(i)));
        }
        if m.is_affine() {
            for j in 1..=m.ell() {
                generators.insert(format!("y {j}"), encode(m.y(j)));
            }
        }
        ModuleDescriptor {
            algebra: if m.is_affine() { "Hhat" } else { "H" }.into(),
            ell: Some(m.ell()),
            n: Some(ctx.n()),
            dim: m.dim(),
            generators,
            weights: None,
        }
    }

    pub fn to_hecke<F: Field>(&self, ctx: &ScalarContext<F>) -> Result<RightModule<F>> {
        let ell = self.ell.ok_or_else(|| Error::Json("missing field ell".into()))?;
        self.check_rank(ctx)?;
        let sigma = (1..ell).map(|i| self.matrix(ctx, &format!("s {i}"))).collect::<Result<Vec<_>>>()?;
        match self.algebra.as_str() {
            "H" => RightModule::finite(ell, self.dim, sigma),
            "Hhat" => {
                let y = (1..=ell).map(|j| self.matrix(ctx, &format!("y {j}"))).collect::<Result<Vec<_>>>()?;
                let mut hint: Vec<F> = Vec::new();
                for m in &y {
                    for i in 0..self.dim {
                        hint.push(m.get(i, i));
                    }
                }
                Ok(RightModule::affine(ell, self.dim, sigma, y, None)?.with_spectrum_hint(hint))
            }
            other => Err(Error::Json(format!("algebra {other} is not a Hecke algebra"))),
        }
    }

    pub fn from_uq<F: Field>(m: &UqModule<F>) -> Self {
        let generators = m.generators().into_iter().map(|(name, g)| (name, encode(g))).collect();
        ModuleDescriptor {
            algebra: if m.is_affine() { "Uhat" } else { "U" }.into(),
            ell: None,
            n: Some(m.n()),
            dim: m.dim(),
            generators,
            weights: Some(m.weights().to_vec()),
        }
    }

    pub fn to_uq<F: Field>(&self, ctx: &ScalarContext<F>) -> Result<UqModule<F>> {
        let n = self.n.ok_or_else(|| Error::Json("missing field n".into()))?;
        self.check_rank(ctx)?;
        let get = |p: &str| (1..=n).map(|i| self.matrix(ctx, &format!("{p}{i}"))).collect::<Result<Vec<_>>>();
        let (xp, xm, k) = (get("x+")?, get("x-")?, get("k ")?);
        let weights = match &self.weights {
            Some(w) => w.clone(),
            None => weights_from_k(ctx, &k, self.dim)?,
        };
        let mut out = UqModule::new(n, xp, xm, k, weights)?;
        if self.generators.contains_key("t 1") {
            out = out.with_t((1..=n + 1).map(|r| self.matrix(ctx, &format!("t {r}"))).collect::<Result<_>>()?)?;
        }
        match self.algebra.as_str() {
            "U" => Ok(out),
            "Uhat" => out.with_affine(self.matrix(ctx, "x+0")?, self.matrix(ctx, "x-0")?, self.matrix(ctx, "k 0")?),
            other => Err(Error::Json(format!("algebra {other} is not a quantum group"))),
        }
    }

    fn check_rank<F: Field>(&self, ctx: &ScalarContext<F>) -> Result<()> {
        match self.n {
            Some(n) if n != ctx.n() => Err(Error::Mismatch { expected: n, got: ctx.n() }),
            _ => Ok(()),
        }
    }

    pub fn is_hecke(&self) -> bool {
        matches!(self.algebra.as_str(), "H" | "Hhat")
    }
}

fn weights_from_k<F: Field>(ctx: &ScalarContext<F>, k: &[SparseMat<F>], dim: usize) -> Result<Vec<Weight>> {
    let diags = k
        .iter()
        .enumerate()
        .map(|(i, m)| m.diagonal().ok_or_else(|| Error::NonDiagonal(format!("k {}", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    (0..dim)
        .map(|j| {
            diags
                .iter()
                .map(|d| {
                    let e = ctx
                        .q_exponent(&d[j])
                        .filter(|r| r.is_integer())
                        .ok_or_else(|| Error::InvalidArgument("k eigenvalue is not an integer power of q".into()))?;
                    i64::try_from(e.to_integer()).map_err(|_| Error::InvalidArgument("weight out of range".into()))
                })
                .collect()
        })
        .collect()
}
