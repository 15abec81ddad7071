use super::UqModule;
use crate::error::Result;
use crate::linalg::{commutator, q_bracket, SparseMat};
use crate::report::{evaluate, RelationReport, Residual};
use crate::scalars::{Field, ScalarContext};

/// Cartan matrix of `ŝl_{n+1}` on `{0, …, n}`; for `n = 1` the off-diagonal entries are `−2`.
pub fn affine_cartan(n: usize) -> Vec<Vec<i64>> {
    let m = n + 1;
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        2
                    } else if n == 1 {
                        -2
                    } else if (i + 1) % m == j || (j + 1) % m == i {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

fn finite_cartan(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

fn word<F: Field>(parts: &[&SparseMat<F>]) -> SparseMat<F> {
    let mut it = parts.iter();
    let first = (*it.next().expect("nonempty word")).clone();
    it.fold(first, |acc, m| acc.mul(m))
}

fn sign_name(plus: bool) -> &'static str {
    if plus {
        "+"
    } else {
        "-"
    }
}

/// Residuals of the defining relations for generators indexed by `idx`.
fn suite<'a, F: Field>(
    ctx: &ScalarContext<F>,
    m: &'a UqModule<F>,
    idx: &[usize],
    cartan: impl Fn(usize, usize) -> i64,
) -> Result<Vec<Residual<'a, F>>> {
    let d = m.dim();
    let mut res: Vec<Residual<'a, F>> = Vec::new();
    let q = ctx.q_pow(1);
    let qm = q.sub(&q.inv().expect("q nonzero"));
    let q_half = ctx.q_half_pow(1);
    for &i in idx {
        let (k, ki) = (m.k(i)?, m.k_inv(i)?);
        res.push(Residual::new(format!("k{i} k{i}^-1 = 1"), move || {
            k.mul(ki).sub(&SparseMat::identity(d))
        }));
        for &j in idx.iter().filter(|&&j| j > i) {
            let kj = m.k(j)?;
            res.push(Residual::new(format!("k{i} k{j} = k{j} k{i}"), move || commutator(k, kj)));
        }
        for &j in idx {
            let a = cartan(i, j);
            for plus in [true, false] {
                let x = if plus { m.x_plus(j)? } else { m.x_minus(j)? };
                let c = ctx.q_pow(if plus { a } else { -a });
                let s = sign_name(plus);
                res.push(Residual::new(format!("k{i} x{s}{j} k{i}^-1 = q^{} x{s}{j}", if plus { a } else { -a }), move || {
                    k.mul(x).mul(ki).sub(&x.scale(&c))
                }));
            }
            let (xp, xm) = (m.x_plus(i)?, m.x_minus(j)?);
            let rhs = if i == j {
                Some(k.sub(ki).scale(&qm.inv().expect("q^2 != 1")))
            } else {
                None
            };
            res.push(Residual::new(format!("[x+{i}, x-{j}] = {}", if i == j { format!("(k{i} - k{i}^-1)/(q - q^-1)") } else { "0".into() }), move || {
                let c = commutator(xp, xm);
                match &rhs {
                    Some(r) => c.sub(r),
                    None => c,
                }
            }));
        }
    }
    for &i in idx {
        for &j in idx.iter().filter(|&&j| j != i) {
            let a = cartan(i, j);
            let p = 1 - a;
            for plus in [true, false] {
                let s = sign_name(plus);
                let (xi, xj) = if plus { (m.x_plus(i)?, m.x_plus(j)?) } else { (m.x_minus(i)?, m.x_minus(j)?) };
                let coeffs: Vec<F> = (0..=p)
                    .map(|r| {
                        let b = ctx.q_binomial(p, r);
                        if r % 2 == 1 {
                            b.neg()
                        } else {
                            b
                        }
                    })
                    .collect();
                res.push(Residual::new(format!("serre x{s}{i} x{s}{j} (degree {p})"), move || {
                    let mut acc = SparseMat::zeros(d, d);
                    for (r, c) in coeffs.iter().enumerate() {
                        let mut parts: Vec<&SparseMat<F>> = vec![xi; r];
                        parts.push(xj);
                        parts.extend(std::iter::repeat_n(xi, p as usize - r));
                        acc = acc.axpy(c, &word(&parts));
                    }
                    acc
                }));
                if a == -1 {
                    let qh = q_half.clone();
                    res.push(Residual::new(format!("[x{s}{i}, [x{s}{j}, x{s}{i}]_q^1/2]_q^1/2 = 0"), move || {
                        q_bracket(xi, &q_bracket(xj, xi, &qh), &qh)
                    }));
                }
            }
        }
    }
    Ok(res)
}

impl<F: Field> UqModule<F> {
    /// Defining relations of `U_q(sl_{n+1})`, plus those of `U_q(gl_{n+1})` when `t_r` are present.
    pub fn verify_relations(&self, ctx: &ScalarContext<F>) -> RelationReport {
        let idx: Vec<usize> = (1..=self.n()).collect();
        let mut res = suite(ctx, self, &idx, finite_cartan).expect("finite generators present");
        if self.has_t() {
            res.extend(self.gl_residuals(ctx));
        }
        evaluate(res)
    }

    fn gl_residuals<'a>(&'a self, ctx: &ScalarContext<F>) -> Vec<Residual<'a, F>> {
        let n = self.n();
        let d = self.dim();
        let t: Vec<&SparseMat<F>> = (1..=n + 1).map(|r| self.t(r).expect("t present")).collect();
        let t_inv: Vec<SparseMat<F>> = t.iter().map(|m| m.inverse().expect("t invertible")).collect();
        let mut res: Vec<Residual<'a, F>> = Vec::new();
        for r in 0..=n {
            for s in r + 1..=n {
                let (a, b) = (t[r], t[s]);
                res.push(Residual::new(format!("t{} t{} = t{} t{}", r + 1, s + 1, s + 1, r + 1), move || commutator(a, b)));
            }
            for i in 1..=n {
                let e = (r + 1 == i) as i64 - (r + 1 == i + 1) as i64;
                for plus in [true, false] {
                    let x = if plus { self.x_plus(i).expect("x") } else { self.x_minus(i).expect("x") };
                    let c = ctx.q_pow(if plus { e } else { -e });
                    let (tr, tri) = (t[r], t_inv[r].clone());
                    res.push(Residual::new(format!("t{} x{}{i} t{}^-1", r + 1, sign_name(plus), r + 1), move || {
                        tr.mul(x).mul(&tri).sub(&x.scale(&c))
                    }));
                }
            }
        }
        for i in 1..=n {
            let k = self.k(i).expect("k");
            let (ti, tj) = (t[i - 1], t_inv[i].clone());
            res.push(Residual::new(format!("k{i} = t{i} t{}^-1", i + 1), move || ti.mul(&tj).sub(k)));
        }
        res.push(Residual::new("t1 t2 ... t(n+1) = 1", move || {
            word(&t).sub(&SparseMat::identity(d))
        }));
        res
    }

    /// Defining relations of `U_q(ŝl_{n+1})` for the affine Cartan matrix.
    pub fn verify_affine_relations(&self, ctx: &ScalarContext<F>) -> Result<RelationReport> {
        let n = self.n();
        let idx: Vec<usize> = (0..=n).collect();
        let a = affine_cartan(n);
        let res = suite(ctx, self, &idx, |i, j| a[i][j])?;
        Ok(evaluate(res))
    }

    /// `c = k_0 k_1 ⋯ k_n`.
    pub fn central_element(&self) -> Result<SparseMat<F>> {
        let mut c = self.k(0)?.clone();
        for i in 1..=self.n() {
            c = c.mul(self.k(i)?);
        }
        Ok(c)
    }
}
