//! Segments, the modules `I_π` and `V_a`, the intertwiners `A_{a,i}` and
//! Drinfeld polynomials.

use std::fmt;

use crate::affine_hecke::{regular_module, universal_module, PermBasis, RightModule};
use crate::error::{Error, Result};
use crate::hecke::{Hecke, HeckeElt};
use crate::linalg::{svec, Echelon, SVec, SparseMat, Subspace};
use crate::modtools::{composition_factors, head_of_cyclic, is_invariant, spin, ActionModule, ModuleLike};
use crate::scalars::{parse_rational, BigRational, Field, ScalarContext};
use crate::symgroup::Partition;
use crate::uqrep::{fundamental, highest_weight_vectors, UqModule, Weight};

/// Segment with centre `coeff · q^{half_exp/2}` and length `len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    coeff: BigRational,
    half_exp: i64,
    len: usize,
}

impl Segment {
    pub fn new(coeff: BigRational, half_exp: i64, len: usize) -> Result<Self> {
        if coeff == BigRational::from_integer(0.into()) {
            return Err(Error::InvalidArgument("segment centre must be nonzero".into()));
        }
        if len == 0 {
            return Err(Error::InvalidArgument("segment length must be positive".into()));
        }
        Ok(Segment { coeff, half_exp, len })
    }

    pub fn length(&self) -> usize {
        self.len
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn half_exp(&self) -> i64 {
        self.half_exp
    }

    pub fn center<F: Field>(&self, ctx: &ScalarContext<F>) -> F {
        F::from_rational(&self.coeff).mul(&ctx.q_half_pow(self.half_exp))
    }

    /// `(a q^{−k+1}, a q^{−k+3}, …, a q^{k−1})`.
    pub fn expansion<F: Field>(&self, ctx: &ScalarContext<F>) -> Vec<F> {
        let k = self.len as i64;
        let a = self.center(ctx);
        (0..k).map(|r| a.mul(&ctx.q_pow(-k + 1 + 2 * r))).collect()
    }

    fn parse_at(s: &str, offset: usize) -> Result<Self> {
        // position of the first character outside `allowed` in `s[from..to]`, else `to`
        let first_bad = |from: usize, to: usize, allowed: &dyn Fn(char) -> bool| {
            s[from..to].char_indices().find(|(_, c)| !allowed(*c)).map_or(to, |(i, _)| from + i)
        };
        let is_int = |c: char| c.is_ascii_digit() || c == '-' || c == '+' || c == ' ';
        let is_rat = |c: char| is_int(c) || c == '/';
        let at = match s.find('@') {
            Some(at) => at,
            None => return Err(Error::parse(offset + first_bad(0, s.len(), &is_rat), "expected '@'")),
        };
        let colon = match s[at..].find(':') {
            Some(c) => c + at,
            None => return Err(Error::parse(offset + first_bad(at + 1, s.len(), &is_int), "expected ':'")),
        };
        let field_error = |from: usize, to: usize, allowed: &dyn Fn(char) -> bool, msg: &str| {
            Error::parse(offset + first_bad(from, to, allowed).min(to.saturating_sub(1)).max(from), msg)
        };
        let coeff = parse_rational(s[..at].trim()).map_err(|_| field_error(0, at, &is_rat, "invalid coefficient"))?;
        let half_exp = s[at + 1..colon]
            .trim()
            .parse::<i64>()
            .map_err(|_| field_error(at + 1, colon, &is_int, "invalid half exponent"))?;
        let len = s[colon + 1..]
            .trim()
            .parse::<usize>()
            .map_err(|_| field_error(colon + 1, s.len(), &|c: char| c.is_ascii_digit() || c == ' ', "invalid length"))?;
        if len == 0 {
            return Err(Error::parse(offset + colon + 1, "segment length must be positive"));
        }
        if coeff == BigRational::from_integer(0.into()) {
            return Err(Error::parse(offset, "segment centre must be nonzero"));
        }
        Segment::new(coeff, half_exp, len)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}:{}", self.coeff, self.half_exp, self.len)
    }
}

/// A multiset of segments in canonical juxtaposition order: length
/// descending, then by their textual form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SegmentList {
    segs: Vec<Segment>,
}

impl SegmentList {
    pub fn new(mut segs: Vec<Segment>) -> Self {
        segs.sort_by(|a, b| b.len.cmp(&a.len).then_with(|| a.to_string().cmp(&b.to_string())));
        SegmentList { segs }
    }

    /// Parses `coeff@half_exp:len` items separated by commas.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(SegmentList::default());
        }
        let mut segs = Vec::new();
        let mut offset = 0;
        for item in s.split(',') {
            segs.push(Segment::parse_at(item, offset)?);
            offset += item.len() + 1;
        }
        Ok(SegmentList::new(segs))
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    pub fn total_len(&self) -> usize {
        self.segs.iter().map(|s| s.len).sum()
    }

    pub fn partition(&self) -> Result<Partition> {
        Partition::new(self.segs.iter().map(|s| s.len).collect())
    }

    /// Juxtaposition `a = (s_1, …, s_p)`.
    pub fn juxtaposition<F: Field>(&self, ctx: &ScalarContext<F>) -> Vec<F> {
        self.segs.iter().flat_map(|s| s.expansion(ctx)).collect()
    }

    pub fn centers<F: Field>(&self, ctx: &ScalarContext<F>) -> Vec<F> {
        self.segs.iter().map(|s| s.center(ctx)).collect()
    }

    pub fn is_single(&self) -> bool {
        self.segs.len() == 1
    }
}

impl fmt::Display for SegmentList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segs.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Coordinates of a Hecke algebra element in the `σ_w` basis of `M_a`.
pub fn hecke_vector<F: Field>(h: &HeckeElt<F>) -> SVec<F> {
    let basis = PermBasis::new(h.ell());
    let mut v: SVec<F> = h.terms().map(|(w, c)| (basis.index[w], c.clone())).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

/// `I_π ⊆ M_a` with the marked vector `C_{w_π}`.
#[derive(Clone, Debug)]
pub struct IdealModule<F> {
    pub ambient: RightModule<F>,
    pub subspace: Subspace<F>,
    pub module: RightModule<F>,
    /// `C_{w_π}` in ambient coordinates.
    pub marked: SVec<F>,
    /// `C_{w_π}` in the coordinates of `module`.
    pub marked_local: SVec<F>,
}

/// The right ideal of `H_ℓ(q²)` generated by `C_{w_π}`, inside `M_a`.
///
/// Fails with `NotWellDefined` when the ideal is not stable under the `y_j`.
pub fn ideal_i_pi<F: Field>(ctx: &ScalarContext<F>, segs: &SegmentList) -> Result<IdealModule<F>> {
    let ell = segs.total_len();
    if ell == 0 {
        return Err(Error::InvalidArgument("empty segment list".into()));
    }
    let ambient = universal_module(ctx, &segs.juxtaposition(ctx))?;
    let c = Hecke::new(ctx, ell).kl_parabolic_element(&segs.partition()?)?;
    let marked = hecke_vector(&c);
    let sigma_only = ActionModule::new(ambient.dim(), Vec::new(), ambient.sigmas().to_vec());
    let subspace = spin(&sigma_only, std::slice::from_ref(&marked));
    if !is_invariant(&ambient.action(), &subspace) {
        return Err(Error::NotWellDefined("I_π is not stable under the y_j".into()));
    }
    let module = ambient.submodule(subspace.basis())?;
    let marked_local = svec::from_dense(&subspace.coordinates(&marked).expect("marked vector lies in I_π"));
    Ok(IdealModule { ambient, subspace, module, marked, marked_local })
}

/// Simple reflections `τ_i` not at a block boundary of `π(s)`.
pub fn sigma_pi(segs: &SegmentList) -> Result<Vec<usize>> {
    Ok(segs.partition()?.inner_simple_reflections())
}

/// `A_{a,i}: M_{a_{τ_i}} → M_a`, left multiplication by `C_i`; returns the
/// domain and the matrix (row convention, `G'·A = A·G`).
pub fn intertwiner_a<F: Field>(
    ctx: &ScalarContext<F>,
    segs: &SegmentList,
    i: usize,
) -> Result<(RightModule<F>, SparseMat<F>)> {
    if !sigma_pi(segs)?.contains(&i) {
        return Err(Error::InvalidArgument(format!("τ_{i} is not inside a segment block")));
    }
    let ell = segs.total_len();
    let mut a = segs.juxtaposition(ctx);
    a.swap(i - 1, i);
    let domain = universal_module(ctx, &a)?;
    let hecke = Hecke::new(ctx, ell);
    let ci = hecke.kl_simple(i)?;
    let basis = PermBasis::new(ell);
    let rows: Vec<SVec<F>> = basis
        .perms
        .iter()
        .map(|w| {
            let prod = hecke.mul(&ci, &HeckeElt::basis(w.clone()))?;
            Ok(hecke_vector(&prod))
        })
        .collect::<Result<_>>()?;
    Ok((domain, SparseMat::from_rows(basis.perms.len(), rows)))
}

/// `⋂_{τ_i ∈ Σ^π} image(A_{a,i})` as a subspace of `M_a`.
pub fn intersection_of_images<F: Field>(ctx: &ScalarContext<F>, segs: &SegmentList) -> Result<Subspace<F>> {
    let dim = (1..=segs.total_len()).product();
    let mut acc = Subspace::full(dim);
    for i in sigma_pi(segs)? {
        let (_, a) = intertwiner_a(ctx, segs, i)?;
        acc = acc.intersect(&Subspace::span(dim, a.rows().to_vec()));
    }
    Ok(acc)
}

/// Vectors `w` with `w·σ_i = q² w` for every `i`.
fn trivial_isotypic<F: Field>(ctx: &ScalarContext<F>, m: &RightModule<F>) -> Vec<SVec<F>> {
    let q2 = ctx.q_pow(2);
    let mut ech = Echelon::new(m.dim());
    for s in m.sigmas() {
        let shifted = s.sub(&SparseMat::scalar(m.dim(), &q2)).transpose();
        for r in shifted.rows() {
            if !r.is_empty() {
                ech.insert(r.clone());
            }
        }
    }
    ech.nullspace()
}

/// The irreducible subquotient `V_a` of `I_π` in which `C_{w_π}` survives,
/// with the image of `C_{w_π}`.
///
/// When every segment has length one `C_{w_π} = 1` survives in every
/// quotient; the factor containing the `σ_i ↦ q²` isotypic part is chosen,
/// which is the factor whose image under `J` has highest weight `ℓλ_1`.
pub fn irreducible_v_a<F: Field>(
    ctx: &ScalarContext<F>,
    segs: &SegmentList,
    seed: u64,
) -> Result<(RightModule<F>, SVec<F>)> {
    let ideal = ideal_i_pi(ctx, segs)?;
    if segs.segments().iter().all(|s| s.len == 1) {
        for f in composition_factors(&ideal.module, seed)? {
            if let Some(v) = trivial_isotypic(ctx, &f).into_iter().next() {
                return Ok((f, v));
            }
        }
        return Err(Error::Inconclusive("no composition factor contains the trivial representation".into()));
    }
    head_of_cyclic(&ideal.module, &ideal.marked_local, seed)
}

/// Monic polynomials `P_1, …, P_n`, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyTuple<F> {
    /// Coefficients in increasing degree.
    pub polys: Vec<Vec<F>>,
    pub roots: Vec<Vec<F>>,
}

impl<F: Field> PolyTuple<F> {
    pub fn degrees(&self) -> Vec<usize> {
        self.polys.iter().map(|p| p.len() - 1).collect()
    }

    pub fn to_strings(&self, ctx: &ScalarContext<F>) -> Vec<Vec<String>> {
        self.polys.iter().map(|p| p.iter().map(|c| ctx.render_q(c)).collect()).collect()
    }

    /// `P_i(u) = (u − c_1)(u − c_2)⋯` lines.
    pub fn render(&self, ctx: &ScalarContext<F>) -> Vec<String> {
        self.roots
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let factors: Vec<String> = r.iter().map(|c| render_poly(ctx, &[c.neg(), F::one()])).collect();
                let body = match factors.len() {
                    0 => "1".to_string(),
                    1 => factors[0].clone(),
                    _ => factors.iter().map(|f| format!("({f})")).collect(),
                };
                format!("P_{}(u) = {body}", i + 1)
            })
            .collect()
    }

    /// `P_i(u)` lines with expanded coefficients.
    pub fn render_expanded(&self, ctx: &ScalarContext<F>) -> Vec<String> {
        self.polys
            .iter()
            .enumerate()
            .map(|(i, p)| format!("P_{}(u) = {}", i + 1, render_poly(ctx, p)))
            .collect()
    }
}

fn render_poly<F: Field>(ctx: &ScalarContext<F>, p: &[F]) -> String {
    let mut terms = Vec::new();
    for (d, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match d {
            0 => String::new(),
            1 => "u".into(),
            _ => format!("u^{d}"),
        };
        let coeff = ctx.render_q(c);
        let term = if mono.is_empty() {
            coeff
        } else if c.is_one() {
            mono
        } else if c.neg().is_one() {
            format!("-{mono}")
        } else {
            format!("({coeff}){mono}")
        };
        terms.push(term);
    }
    if terms.is_empty() {
        return "0".into();
    }
    terms.join(" + ").replace("+ -", "- ")
}

fn poly_mul_linear<F: Field>(p: &[F], root: &F) -> Vec<F> {
    let mut out = vec![F::zero(); p.len() + 1];
    for (d, c) in p.iter().enumerate() {
        out[d + 1] = out[d + 1].add(c);
        out[d] = out[d].sub(&c.mul(root));
    }
    out
}

/// `P_i(u) = ∏_{ℓ_j = i} (u − a_j^{−1})` with `a_j` the centre of segment `j`.
pub fn drinfeld_polys<F: Field>(ctx: &ScalarContext<F>, segs: &SegmentList, n: usize) -> Result<PolyTuple<F>> {
    let mut polys = vec![vec![F::one()]; n];
    let mut roots = vec![Vec::new(); n];
    for s in segs.segments() {
        if s.len > n {
            return Err(Error::InvalidArgument(format!("segment {s} is longer than n = {n}")));
        }
        let root = s.center(ctx).inv()?;
        let p = &mut polys[s.len - 1];
        *p = poly_mul_linear(p, &root);
        roots[s.len - 1].push(root);
    }
    Ok(PolyTuple { polys, roots })
}

/// Outcome of comparing `x_0^+` with the lowering word on a highest-weight vector.
#[derive(Clone, Debug)]
pub struct RootExtraction<F> {
    /// `a'` with `x_0^+ v = (−1)^{m−1} a'^{−1} x_n^-⋯x_{m+1}^- x_1^-⋯x_m^- v`.
    pub extracted: F,
    pub expected: F,
    pub pass: bool,
}

/// Extracts the root of `P_m` from the action of `x_0^+` on the highest-weight
/// vector of weight `λ_m` of an affine module and compares it with `expected`.
pub fn x0_root_check<F: Field>(w: &UqModule<F>, m: usize, expected: &F) -> Result<RootExtraction<F>> {
    let n = w.n();
    if m == 0 || m > n {
        return Err(Error::IndexOutOfRange { index: m, max: n });
    }
    let lambda = fundamental(n, m);
    let hw = highest_weight_vectors(w)?;
    let space = hw
        .iter()
        .find(|(mu, _)| *mu == lambda)
        .map(|(_, b)| b)
        .ok_or_else(|| Error::RelationFailure(format!("no highest-weight vector of weight {lambda:?}")))?;
    if space.len() != 1 {
        return Err(Error::RelationFailure(format!(
            "highest-weight space of weight {lambda:?} has dimension {}",
            space.len()
        )));
    }
    let v = &space[0];
    let lhs = w.x_plus(0)?.mul_vec(v);
    // x_m^- acts first, then x_{m−1}^-, …, x_1^-, then x_{m+1}^-, …, x_n^-
    let mut word: Vec<usize> = (m + 1..=n).rev().collect();
    word.extend(1..=m);
    let mats = word.iter().map(|&i| w.x_minus(i)).collect::<Result<Vec<_>>>()?;
    let rhs = w.apply_word(&mats, v);
    if lhs.is_empty() || rhs.is_empty() {
        return Err(Error::RelationFailure("zero image of the highest-weight vector".into()));
    }
    let (idx, r0) = &rhs[0];
    let ratio = svec::get(&lhs, *idx).cloned().unwrap_or_else(F::zero).div(r0)?;
    if ratio.is_zero() || svec::scale(&rhs, &ratio) != lhs {
        return Err(Error::RelationFailure("the two sides are not proportional".into()));
    }
    let sign = if m.is_multiple_of(2) { F::one().neg() } else { F::one() };
    let extracted = sign.div(&ratio)?;
    let pass = &extracted == expected;
    Ok(RootExtraction { extracted, expected: expected.clone(), pass })
}

/// Checks `C_{w_π} σ_i = −C_{w_π}` whenever `w_π τ_i < w_π`.
pub fn sign_property_check<F: Field>(ctx: &ScalarContext<F>, pi: &Partition) -> Result<bool> {
    let hecke = Hecke::new(ctx, pi.total());
    let c = hecke.kl_parabolic_element(pi)?;
    let w = pi.longest();
    for i in 1..pi.total() {
        if w.has_right_descent(i) && hecke.mul_simple_right(&c, i) != c.scale(&F::one().neg()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that `C_w·y_j − a_{w^{−1}(j)} C_w` lies in the span of the `σ_{w'}`
/// with `w' < w`, for `w = w_π` in `M_a`.
///
/// Below a parabolic longest element the `C_{w'}` and the `σ_{w'}` span the
/// same space, which is the span of the non-top parabolic elements.
pub fn triangularity_check<F: Field>(ctx: &ScalarContext<F>, a: &[F], pi: &Partition) -> Result<bool> {
    let ell = a.len();
    if pi.total() != ell {
        return Err(Error::Mismatch { expected: ell, got: pi.total() });
    }
    let m = universal_module(ctx, a)?;
    let c = hecke_vector(&Hecke::new(ctx, ell).kl_parabolic_element(pi)?);
    let w = pi.longest();
    let basis = PermBasis::new(ell);
    let lower: Vec<SVec<F>> = pi
        .parabolic_elements()
        .into_iter()
        .filter(|p| *p != w)
        .map(|p| svec::unit(basis.index[&p]))
        .collect();
    let lower = Subspace::span(m.dim(), lower);
    let winv = w.inverse();
    for j in 1..=ell {
        let aj = &a[winv.apply(j - 1)];
        let r = svec::axpy(&m.y(j).vec_mul(&c), &aj.neg(), &c);
        if !lower.contains(&r) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `J_π`: the irreducible quotient of `C_{w_π} H_ℓ(q²)` in which `C_{w_π}` survives.
pub fn finite_irreducible<F: Field>(ctx: &ScalarContext<F>, pi: &Partition, seed: u64) -> Result<RightModule<F>> {
    let ell = pi.total();
    let reg = regular_module(ctx, ell)?;
    let c = hecke_vector(&Hecke::new(ctx, ell).kl_parabolic_element(pi)?);
    if pi.parts().iter().all(|&k| k == 1) {
        return RightModule::finite(ell, 1, vec![SparseMat::scalar(1, &ctx.q_pow(2)); ell - 1]);
    }
    Ok(head_of_cyclic(&reg, &c, seed)?.0)
}

/// `λ_{ℓ_1} + ⋯ + λ_{ℓ_p}`.
pub fn partition_weight(n: usize, pi: &Partition) -> Weight {
    let mut w = vec![0; n];
    for &k in pi.parts() {
        for (x, y) in w.iter_mut().zip(fundamental(n, k)) {
            *x += y;
        }
    }
    w
}
