use crate::scalars::Field;

/// Sparse vector: `(index, value)` pairs sorted by index, no zero values.
pub type SVec<F> = Vec<(usize, F)>;

/// Unit vector `e_i`.
pub fn unit<F: Field>(i: usize) -> SVec<F> {
    vec![(i, F::one())]
}

pub fn from_dense<F: Field>(v: &[F]) -> SVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense<F: Field>(v: &SVec<F>, dim: usize) -> Vec<F> {
    let mut out = vec![F::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn get<F: Field>(v: &SVec<F>, i: usize) -> Option<&F> {
    v.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &v[k].1)
}

pub fn scale<F: Field>(v: &SVec<F>, c: &F) -> SVec<F> {
    if c.is_zero() {
        return Vec::new();
    }
    if c.is_one() {
        return v.clone();
    }
    v.iter().map(|(i, x)| (*i, x.mul(c))).collect()
}

/// `a + c * b`.
pub fn axpy<F: Field>(a: &SVec<F>, c: &F, b: &SVec<F>) -> SVec<F> {
    if c.is_zero() || b.is_empty() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, b[j].1.mul(c)));
            j += 1;
        } else {
            let mut x = a[i].1.clone();
            x.add_mul(c, &b[j].1);
            if !x.is_zero() {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn add<F: Field>(a: &SVec<F>, b: &SVec<F>) -> SVec<F> {
    axpy(a, &F::one(), b)
}

pub fn sub<F: Field>(a: &SVec<F>, b: &SVec<F>) -> SVec<F> {
    axpy(a, &F::one().neg(), b)
}

pub fn dot<F: Field>(a: &SVec<F>, b: &SVec<F>) -> F {
    let mut acc = F::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc.add_mul(&a[i].1, &b[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Dense scratch accumulator that remembers which slots were touched.
pub struct Accum<F> {
    vals: Vec<F>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl<F: Field> Accum<F> {
    pub fn new(dim: usize) -> Self {
        Accum { vals: vec![F::zero(); dim], touched: Vec::new(), mark: vec![false; dim] }
    }

    pub fn add_at(&mut self, i: usize, c: &F, x: &F) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
        }
        self.vals[i].add_mul(c, x);
    }

    /// `self += c * v`.
    pub fn add_scaled(&mut self, c: &F, v: &SVec<F>) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v {
            self.add_at(*i, c, x);
        }
    }

    /// Drains the accumulator into a sparse vector, leaving it zeroed.
    pub fn take(&mut self) -> SVec<F> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.mark[i] = false;
            let x = std::mem::replace(&mut self.vals[i], F::zero());
            if !x.is_zero() {
                out.push((i, x));
            }
        }
        self.touched.clear();
        out
    }
}
