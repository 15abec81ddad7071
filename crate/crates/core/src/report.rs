//! Relation residual reports.

use serde::Serialize;

use crate::linalg::SparseMat;
use crate::par;
use crate::scalars::Field;

/// Outcome of one instantiated relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub pass: bool,
    /// First nonzero entry of the residual, 0-based.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, usize)>,
}

/// All residuals of a relation suite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn extend(&mut self, other: RelationReport) {
        self.checks.extend(other.checks);
    }
}

/// A named matrix expression that should evaluate to zero.
pub struct Residual<'a, F> {
    pub name: String,
    pub eval: Box<dyn Fn() -> SparseMat<F> + Send + Sync + 'a>,
}

impl<'a, F> Residual<'a, F> {
    pub fn new(name: impl Into<String>, eval: impl Fn() -> SparseMat<F> + Send + Sync + 'a) -> Self {
        Residual { name: name.into(), eval: Box::new(eval) }
    }
}

/// Evaluates every residual (in parallel when enabled), keeping input order.
pub fn evaluate<F: Field>(residuals: Vec<Residual<'_, F>>) -> RelationReport {
    let checks = par::map_slice(&residuals, |r| {
        let m = (r.eval)();
        let witness = m.first_nonzero();
        RelationCheck { relation: r.name.clone(), pass: witness.is_none(), witness }
    });
    RelationReport { checks }
}
