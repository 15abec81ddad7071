use std::collections::BTreeMap;

use super::svec::{self, SVec};
use crate::scalars::Field;

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has a 1 at its pivot (its first nonzero column) and zeros
/// at all other pivots. Each row may carry a payload vector that undergoes the
/// same row operations, which is how coordinates, inverses and linear maps
/// defined on spanning vectors are tracked.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<SVec<F>>,
    payloads: Option<Vec<SVec<F>>>,
    pivot_of_row: Vec<usize>,
    row_of_pivot: BTreeMap<usize, usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), payloads: None, pivot_of_row: Vec::new(), row_of_pivot: BTreeMap::new() }
    }

    pub fn with_payload(ncols: usize) -> Self {
        Echelon { payloads: Some(Vec::new()), ..Self::new(ncols) }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of_pivot.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.row_of_pivot.keys().copied()
    }

    pub fn row_for_pivot(&self, col: usize) -> Option<&SVec<F>> {
        self.row_of_pivot.get(&col).map(|&r| &self.rows[r])
    }

    pub fn payload_for_pivot(&self, col: usize) -> Option<&SVec<F>> {
        let r = *self.row_of_pivot.get(&col)?;
        self.payloads.as_ref().map(|p| &p[r])
    }

    /// Basis rows in pivot order.
    pub fn basis(&self) -> Vec<SVec<F>> {
        self.row_of_pivot.values().map(|&r| self.rows[r].clone()).collect()
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect()
    }

    /// `v` minus its projection onto the span along the pivot coordinates.
    pub fn reduce(&self, v: &SVec<F>) -> SVec<F> {
        let mut res = v.clone();
        for (c, x) in v {
            if let Some(&r) = self.row_of_pivot.get(c) {
                res = svec::axpy(&res, &x.neg(), &self.rows[r]);
            }
        }
        res
    }

    /// Reduces `v` and applies the same operations to `payload`.
    pub fn reduce_with(&self, v: &SVec<F>, payload: &SVec<F>) -> (SVec<F>, SVec<F>) {
        let pays = self.payloads.as_ref().expect("echelon without payloads");
        let mut res = v.clone();
        let mut pay = payload.clone();
        for (c, x) in v {
            if let Some(&r) = self.row_of_pivot.get(c) {
                let m = x.neg();
                res = svec::axpy(&res, &m, &self.rows[r]);
                pay = svec::axpy(&pay, &m, &pays[r]);
            }
        }
        (res, pay)
    }

    pub fn contains(&self, v: &SVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` in the basis of rows, keyed by pivot column.
    pub fn coordinates(&self, v: &SVec<F>) -> Option<SVec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(v.iter().filter(|(c, _)| self.is_pivot(*c)).cloned().collect())
    }

    /// Inserts `v`; returns the reduced vector that was added, if any.
    pub fn insert(&mut self, v: SVec<F>) -> Option<SVec<F>> {
        assert!(self.payloads.is_none(), "use insert_with on a payload echelon");
        let r = self.reduce(&v);
        if r.is_empty() {
            return None;
        }
        self.push_reduced(r.clone(), None);
        Some(r)
    }

    /// Inserts `v` carrying `payload`; on success returns the reduced pair.
    pub fn insert_with(&mut self, v: SVec<F>, payload: SVec<F>) -> Option<(SVec<F>, SVec<F>)> {
        let (r, p) = self.reduce_with(&v, &payload);
        if r.is_empty() {
            return None;
        }
        self.push_reduced(r.clone(), Some(p.clone()));
        Some((r, p))
    }

    /// Adds a vector already reduced against the current rows.
    pub fn push_reduced(&mut self, r: SVec<F>, payload: Option<SVec<F>>) {
        let (pivot, lead) = r[0].clone();
        let inv = lead.inv().expect("nonzero leading entry");
        let row = svec::scale(&r, &inv);
        let pay = payload.map(|p| svec::scale(&p, &inv));
        for k in 0..self.rows.len() {
            if let Some(x) = svec::get(&self.rows[k], pivot).cloned() {
                let m = x.neg();
                self.rows[k] = svec::axpy(&self.rows[k], &m, &row);
                if let (Some(pays), Some(p)) = (self.payloads.as_mut(), pay.as_ref()) {
                    pays[k] = svec::axpy(&pays[k], &m, p);
                }
            }
        }
        let idx = self.rows.len();
        self.rows.push(row);
        if let Some(pays) = self.payloads.as_mut() {
            pays.push(pay.expect("payload required"));
        }
        self.pivot_of_row.push(pivot);
        self.row_of_pivot.insert(pivot, idx);
    }

    /// Basis of `{u : row · u = 0 for every row}`.
    pub fn nullspace(&self) -> Vec<SVec<F>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v: SVec<F> = vec![(f, F::one())];
                for (&p, &r) in &self.row_of_pivot {
                    if let Some(x) = svec::get(&self.rows[r], f) {
                        v.push((p, x.neg()));
                    }
                }
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect()
    }
}
