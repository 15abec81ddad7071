use super::echelon::Echelon;
use super::svec::{self, Accum, SVec};
use crate::error::{Error, Result};
use crate::par;
use crate::scalars::Field;

/// Sparse row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat<F> {
    nrows: usize,
    ncols: usize,
    rows: Vec<SVec<F>>,
}

impl<F: Field> SparseMat<F> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMat { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &F::one())
    }

    pub fn scalar(n: usize, c: &F) -> Self {
        Self::diag(&vec![c.clone(); n])
    }

    pub fn diag(d: &[F]) -> Self {
        let rows = d
            .iter()
            .enumerate()
            .map(|(i, x)| if x.is_zero() { Vec::new() } else { vec![(i, x.clone())] })
            .collect();
        SparseMat { nrows: d.len(), ncols: d.len(), rows }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SVec<F>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.iter().all(|(c, x)| *c < ncols && !x.is_zero())));
        SparseMat { nrows: rows.len(), ncols, rows }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, F)>>(
        nrows: usize,
        ncols: usize,
        entries: I,
    ) -> Result<Self> {
        let mut acc: Vec<Vec<(usize, F)>> = vec![Vec::new(); nrows];
        for (r, c, x) in entries {
            if r >= nrows || c >= ncols {
                return Err(Error::InvalidArgument(format!(
                    "entry ({r}, {c}) outside a {nrows}x{ncols} matrix"
                )));
            }
            acc[r].push((c, x));
        }
        let rows = acc
            .into_iter()
            .map(|mut row| {
                row.sort_by_key(|(c, _)| *c);
                let mut out: SVec<F> = Vec::with_capacity(row.len());
                for (c, x) in row {
                    match out.last_mut() {
                        Some((lc, lx)) if *lc == c => lx.add_assign(&x),
                        _ => out.push((c, x)),
                    }
                }
                out.retain(|(_, x)| !x.is_zero());
                out
            })
            .collect();
        Ok(SparseMat { nrows, ncols, rows })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &SVec<F> {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SVec<F>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SVec<F>> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        svec::get(&self.rows[r], c).cloned().unwrap_or_else(F::zero)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, x)| (r, *c, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Position of the first nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.first().map(|(c, _)| (r, *c)))
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, row)| row.len() == 1 && row[0].0 == i && row[0].1.is_one())
    }

    /// Diagonal entries when the matrix is diagonal.
    pub fn diagonal(&self) -> Option<Vec<F>> {
        if !self.is_square() {
            return None;
        }
        let mut d = Vec::with_capacity(self.nrows);
        for (i, row) in self.rows.iter().enumerate() {
            match row.as_slice() {
                [] => d.push(F::zero()),
                [(c, x)] if *c == i => d.push(x.clone()),
                _ => return None,
            }
        }
        Some(d)
    }

    pub fn transpose(&self) -> Self {
        let mut cols: Vec<SVec<F>> = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, x) in row {
                cols[*c].push((r, x.clone()));
            }
        }
        SparseMat { nrows: self.ncols, ncols: self.nrows, rows: cols }
    }

    fn check_same_shape(&self, o: &Self) -> Result<()> {
        if self.nrows != o.nrows || self.ncols != o.ncols {
            return Err(Error::Mismatch { expected: self.nrows * self.ncols, got: o.nrows * o.ncols });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_same_shape(o).expect("shape mismatch in matrix add");
        self.zip_rows(o, |a, b| svec::add(a, b))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check_same_shape(o).expect("shape mismatch in matrix sub");
        self.zip_rows(o, |a, b| svec::sub(a, b))
    }

    /// `self + c * o`.
    pub fn axpy(&self, c: &F, o: &Self) -> Self {
        self.check_same_shape(o).expect("shape mismatch in matrix axpy");
        self.zip_rows(o, |a, b| svec::axpy(a, c, b))
    }

    fn zip_rows(&self, o: &Self, f: impl Fn(&SVec<F>, &SVec<F>) -> SVec<F>) -> Self {
        let rows = self.rows.iter().zip(&o.rows).map(|(a, b)| f(a, b)).collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn scale(&self, c: &F) -> Self {
        let rows = self.rows.iter().map(|r| svec::scale(r, c)).collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &SVec<F>) -> SVec<F> {
        let mut acc = Accum::new(self.ncols);
        for (i, c) in v {
            acc.add_scaled(c, &self.rows[*i]);
        }
        acc.take()
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &SVec<F>) -> SVec<F> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                let x = svec::dot(row, v);
                (!x.is_zero()).then_some((r, x))
            })
            .collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.ncols, o.nrows, "shape mismatch in matrix product");
        let work = |i: usize| {
            let mut acc = Accum::new(o.ncols);
            for (k, c) in &self.rows[i] {
                acc.add_scaled(c, &o.rows[*k]);
            }
            acc.take()
        };
        let rows = if self.nnz() > 256 {
            par::map_range(self.nrows, work)
        } else {
            (0..self.nrows).map(work).collect()
        };
        SparseMat { nrows: self.nrows, ncols: o.ncols, rows }
    }

    /// Kronecker product with row index `i * o.nrows + k`.
    pub fn kron(&self, o: &Self) -> Self {
        let mut rows = Vec::with_capacity(self.nrows * o.nrows);
        for ra in &self.rows {
            for rb in &o.rows {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ca, xa) in ra {
                    for (cb, xb) in rb {
                        row.push((ca * o.ncols + cb, xa.mul(xb)));
                    }
                }
                rows.push(row);
            }
        }
        SparseMat { nrows: self.nrows * o.nrows, ncols: self.ncols * o.ncols, rows }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.nrows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::InvalidArgument("inverse of a non-square matrix".into()));
        }
        if let Some(d) = self.diagonal() {
            let inv = d.iter().map(|x| x.inv()).collect::<Result<Vec<_>>>()?;
            return Ok(Self::diag(&inv));
        }
        let mut ech = Echelon::with_payload(self.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            ech.insert_with(row.clone(), svec::unit(i));
        }
        if ech.rank() != self.nrows {
            return Err(Error::DivisionByZero);
        }
        let rows = (0..self.nrows)
            .map(|p| ech.payload_for_pivot(p).expect("full rank").clone())
            .collect();
        Ok(SparseMat { nrows: self.nrows, ncols: self.ncols, rows })
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.ncols);
        for row in &self.rows {
            ech.insert(row.clone());
        }
        ech.rank()
    }

    /// Applies `f` to every stored entry.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SparseMat<G> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .filter_map(|(c, x)| {
                        let y = f(x);
                        (!y.is_zero()).then_some((*c, y))
                    })
                    .collect()
            })
            .collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|r| svec::to_dense(r, self.ncols)).collect()
    }
}

/// Commutator `ab - ba`.
pub fn commutator<F: Field>(a: &SparseMat<F>, b: &SparseMat<F>) -> SparseMat<F> {
    a.mul(b).sub(&b.mul(a))
}

/// `[a, b]_c = c * ab - c^{-1} * ba`.
pub fn q_bracket<F: Field>(a: &SparseMat<F>, b: &SparseMat<F>, c: &F) -> SparseMat<F> {
    let ci = c.inv().expect("bracket parameter is nonzero");
    a.mul(b).scale(c).sub(&b.mul(a).scale(&ci))
}
