//! Registry of named consistency checks, shared by the command line and the
//! acceptance tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::affine_hecke::{one_dim_finite, regular_module, universal_module, zelevinsky_induce, RightModule};
use crate::affinization::{evaluation_tensor, functor_f, evaluation_duality_check};
use crate::classification::{
    drinfeld_polys, sign_property_check, finite_irreducible, ideal_i_pi, intersection_of_images, intertwiner_a,
    irreducible_v_a, x0_root_check, triangularity_check, partition_weight, sigma_pi, SegmentList,
};
use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::modtools::{are_isomorphic, is_intertwiner, is_irreducible, spin, ModuleLike};
use crate::scalars::{BigRational, Field, ScalarContext};
use crate::symgroup::{binomial, Partition};
use crate::uqrep::{
    highest_weight_vectors, jimbo_j, k_theta, natural_rep, rcheck, rcheck_i, tensor_power, x_theta_minus, UqModule,
};

pub const CHECK_IDS: [&str; 14] = [
    "prop-3.3", "prop-3.4c", "prop-4.1", "thm-4.2", "prop-4.6", "prop-4.7", "cor-4.8b", "thm-5.5", "lemma-6.4",
    "prop-7.2", "lemma-7.3", "prop-7.5", "thm-7.6", "eq-12",
];

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub n: usize,
    pub ell: usize,
    pub segments: Option<SegmentList>,
    pub seed: u64,
    /// Run even when `ℓ > n` for checks that assume `ℓ ≤ n`.
    pub force: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub n: usize,
    pub ell: usize,
    pub status: Status,
    pub details: Vec<String>,
    /// Integer data (dimensions, degrees) comparable across backends.
    pub data: Value,
}

struct Recorder {
    ok: bool,
    details: Vec<String>,
    data: serde_json::Map<String, Value>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { ok: true, details: Vec::new(), data: Default::default() }
    }

    fn claim(&mut self, cond: bool, msg: impl Into<String>) {
        let msg = msg.into();
        self.details.push(format!("{} {msg}", if cond { "ok  " } else { "FAIL" }));
        self.ok &= cond;
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.details.push(msg.into());
    }

    fn push(&mut self, key: &str, v: Value) {
        match self.data.entry(key.to_string()).or_insert_with(|| json!([])) {
            Value::Array(a) => a.push(v),
            other => *other = v,
        }
    }
}

enum Pre {
    Run,
    Skip(String),
}

fn needs_small_ell(cfg: &CheckConfig) -> Pre {
    if cfg.ell > cfg.n && !cfg.force {
        Pre::Skip(format!("requires ℓ ≤ n (ℓ = {}, n = {})", cfg.ell, cfg.n))
    } else {
        Pre::Run
    }
}

fn needs_two(cfg: &CheckConfig) -> Pre {
    if cfg.ell < 2 {
        Pre::Skip("requires ℓ ≥ 2".into())
    } else {
        Pre::Run
    }
}

/// Random nonzero rationals `p/r` with `|p|, r ≤ 9`.
pub fn random_parameters<F: Field>(rng: &mut ChaCha8Rng, ell: usize) -> Vec<F> {
    (0..ell)
        .map(|_| {
            let mut p = 0i64;
            while p == 0 {
                p = rng.random_range(-9..=9);
            }
            let r: i64 = rng.random_range(1..=9);
            F::from_rational(&BigRational::new(p.into(), r.into()))
        })
        .collect()
}

/// Compositions of `ell` into positive parts.
pub fn compositions(ell: usize) -> Vec<Vec<usize>> {
    if ell == 0 {
        return vec![Vec::new()];
    }
    (1..=ell)
        .flat_map(|k| {
            compositions(ell - k).into_iter().map(move |mut c| {
                c.insert(0, k);
                c
            })
        })
        .collect()
}

/// Partitions of `ell` with weakly decreasing parts.
pub fn partitions(ell: usize) -> Vec<Vec<usize>> {
    compositions(ell).into_iter().filter(|c| c.windows(2).all(|w| w[0] >= w[1])).collect()
}

/// Segment lists of total length `ell` used when none are supplied: one per
/// partition with distinct integer centres, plus a linked pair.
pub fn default_segment_lists(ell: usize) -> Vec<SegmentList> {
    let mut out: Vec<SegmentList> = partitions(ell)
        .into_iter()
        .map(|p| {
            let spec: Vec<String> = p.iter().enumerate().map(|(r, k)| format!("{}@0:{k}", r + 1)).collect();
            SegmentList::parse(&spec.join(",")).expect("valid segment list")
        })
        .collect();
    if ell >= 2 {
        out.push(SegmentList::parse(&format!("1@0:{},1@{}:1", ell - 1, 2 * ell)).expect("valid segment list"));
    }
    out
}

fn grid<F: Field>(ctx: &ScalarContext<F>, ell: usize) -> Vec<(String, Vec<F>, bool)> {
    let cs = [
        ("1", ctx.int(1), false),
        ("q", ctx.q_pow(1), false),
        ("q^2", ctx.q_pow(2), true),
        ("q^3", ctx.q_pow(3), false),
        ("q^-2", ctx.q_pow(-2), true),
        ("2", ctx.int(2), false),
    ];
    let extra = [5, 7, 11, 13];
    cs.into_iter()
        .map(|(name, c, red)| {
            let mut a = vec![ctx.int(1), c];
            a.extend(extra.iter().take(ell - 2).map(|&p| ctx.int(p)));
            (name.to_string(), a, red)
        })
        .collect()
}

fn iso<F: Field>(a: &UqModule<F>, b: &UqModule<F>, seed: u64) -> Result<bool> {
    Ok(are_isomorphic(&a.without_t().action(), &b.without_t().action(), seed)?.is_some())
}

fn render_vec<F: Field>(ctx: &ScalarContext<F>, a: &[F]) -> String {
    let parts: Vec<String> = a.iter().map(|x| ctx.render_q(x)).collect();
    format!("({})", parts.join(", "))
}

fn segment_lists(cfg: &CheckConfig) -> Vec<SegmentList> {
    match &cfg.segments {
        Some(s) => vec![s.clone()],
        None => default_segment_lists(cfg.ell),
    }
}

/// Runs one registered check; `ctx` must be built for rank `cfg.n`.
pub fn run_check<F: Field>(ctx: &ScalarContext<F>, id: &str, cfg: &CheckConfig) -> Result<CheckOutcome> {
    if ctx.n() != cfg.n {
        return Err(Error::Mismatch { expected: cfg.n, got: ctx.n() });
    }
    let pre = match id {
        "prop-3.3" | "prop-3.4c" | "prop-4.6" => needs_two(cfg),
        "cor-4.8b" => match needs_two(cfg) {
            Pre::Run => needs_small_ell(cfg),
            s => s,
        },
        "thm-5.5" | "lemma-6.4" | "prop-7.2" | "thm-7.6" => needs_small_ell(cfg),
        _ if CHECK_IDS.contains(&id) => Pre::Run,
        _ => return Err(Error::InvalidArgument(format!("unknown check id {id}"))),
    };
    let outcome = |status, details, data| CheckOutcome { id: id.to_string(), n: cfg.n, ell: cfg.ell, status, details, data };
    if let Pre::Skip(reason) = pre {
        return Ok(outcome(Status::Skipped, vec![reason], json!({})));
    }
    let mut rec = Recorder::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (n, ell, seed) = (cfg.n, cfg.ell, cfg.seed);
    match id {
        "prop-3.3" => {
            for l1 in 1..ell {
                let m1 = universal_module(ctx, &random_parameters::<F>(&mut rng, l1))?;
                let m2 = universal_module(ctx, &random_parameters::<F>(&mut rng, ell - l1))?;
                let ind = zelevinsky_induce(ctx, &m1, &m2)?;
                let expect = m1.dim() * m2.dim() * binomial(ell, l1);
                rec.claim(ind.dim() == expect, format!("dim M1⊙̂M2 = {} for ℓ1 = {l1}", ind.dim()));
                rec.push("dims", json!(ind.dim()));
                let fin = zelevinsky_induce(ctx, &m1.restrict_to_finite(), &m2.restrict_to_finite())?;
                let found = are_isomorphic(&ind.restrict_to_finite().action(), &fin.action(), seed)?.is_some();
                rec.claim(found, format!("restriction of M1⊙̂M2 ≅ M1|⊙M2| for ℓ1 = {l1}"));
            }
        }
        "prop-3.4c" => {
            for (name, a, red) in grid(ctx, ell) {
                let m = universal_module(ctx, &a)?;
                let irr = is_irreducible(&m.action(), seed)?.is_irreducible();
                rec.claim(irr != red, format!("M_a for c = {name}: {}", if irr { "irreducible" } else { "reducible" }));
                rec.push("reducible", json!(!irr));
            }
        }
        "prop-4.1" => {
            let t = tensor_power(&natural_rep(ctx, n)?, ell)?;
            let id_m = SparseMat::identity(t.dim());
            let q2 = ctx.q_pow(2);
            let rs = (1..ell).map(|i| rcheck_i(ctx, n, ell, i)).collect::<Result<Vec<_>>>()?;
            for (i, r) in rs.iter().enumerate() {
                let commutes = t.generators().iter().all(|(_, g)| r.mul(g) == g.mul(r));
                rec.claim(commutes, format!("Ř_{} commutes with every generator", i + 1));
                let quad = r.add(&id_m).mul(&r.sub(&id_m.scale(&q2))).is_zero();
                rec.claim(quad, format!("(Ř_{0} + 1)(Ř_{0} − q²) = 0", i + 1));
            }
            for i in 0..rs.len().saturating_sub(1) {
                let (a, b) = (&rs[i], &rs[i + 1]);
                rec.claim(a.mul(b).mul(a) == b.mul(a).mul(b), format!("braid relation for Ř_{}, Ř_{}", i + 1, i + 2));
            }
            for i in 0..rs.len() {
                for j in i + 2..rs.len() {
                    rec.claim(rs[i].mul(&rs[j]) == rs[j].mul(&rs[i]), format!("Ř_{} Ř_{} commute", i + 1, j + 1));
                }
            }
            let r = rcheck(ctx, n);
            let idv = SparseMat::identity(n + 1);
            let xm = x_theta_minus(n);
            let kinv = k_theta(ctx, n).inverse()?;
            rec.claim(r.mul(&idv.kron(&xm)) == xm.kron(&kinv).mul(&r), "Ř(1⊗x_θ^-) = (x_θ^-⊗k_θ^{-1})Ř");
            rec.push("dims", json!(t.dim()));
        }
        "thm-4.2" => {
            for _ in 0..5 {
                let a = random_parameters::<F>(&mut rng, ell);
                let f = functor_f(ctx, &universal_module(ctx, &a)?, n)?.module;
                let report = f.verify_affine_relations(ctx)?;
                let fails: Vec<String> = report.failures().map(|c| c.relation.clone()).collect();
                rec.claim(
                    report.pass(),
                    format!("F(M_a) for a = {}: {} relations, failures {:?}", render_vec(ctx, &a), report.len(), fails),
                );
                rec.claim(f.central_element()?.is_identity(), "k_0 k_1 ⋯ k_n = 1");
                rec.push("dims", json!(f.dim()));
            }
        }
        "prop-4.6" => {
            let a = random_parameters::<F>(&mut rng, ell);
            let m1 = universal_module(ctx, &a[..1])?;
            let m2 = universal_module(ctx, &a[1..])?;
            let f = functor_f(ctx, &zelevinsky_induce(ctx, &m1, &m2)?, n)?.module;
            let f1 = functor_f(ctx, &m1, n)?.module;
            let f2 = functor_f(ctx, &m2, n)?.module;
            let t = f1.tensor(&f2)?;
            rec.claim(f.dim() == f1.dim() * f2.dim(), format!("dim F(M1⊙̂M2) = {}", f.dim()));
            rec.claim(iso(&f, &t, seed)?, "F(M1⊙̂M2) ≅ F(M1)⊗F(M2)");
            rec.claim(t.verify_affine_relations(ctx)?.pass(), "tensor product satisfies the affine relations");
            rec.push("dims", json!(f.dim()));
        }
        "prop-4.7" => {
            let a = random_parameters::<F>(&mut rng, ell);
            let m = universal_module(ctx, &a)?;
            let j = jimbo_j(ctx, &m, n)?;
            let expect = (n + 1).pow(ell as u32);
            rec.claim(j.module.dim() == expect, format!("dim J(M_a) = {}", j.module.dim()));
            let f = functor_f(ctx, &m, n)?.module;
            let t = evaluation_tensor(ctx, n, &a)?;
            rec.claim(iso(&f, &t, seed)?, format!("F(M_a) ≅ V(a_1)⊗⋯⊗V(a_ℓ) for a = {}", render_vec(ctx, &a)));
            rec.push("dims", json!(j.module.dim()));
        }
        "cor-4.8b" => {
            for (name, a, red) in grid(ctx, ell) {
                let f = functor_f(ctx, &universal_module(ctx, &a)?, n)?.module;
                let irr = is_irreducible(&f.action(), seed)?.is_irreducible();
                rec.claim(irr != red, format!("F(M_a) for c = {name}: {}", if irr { "irreducible" } else { "reducible" }));
                rec.push("reducible", json!(!irr));
            }
        }
        "thm-5.5" => {
            let mut mods: Vec<(String, RightModule<F>)> = vec![("σ ↦ q²".into(), one_dim_finite(ell, &ctx.q_pow(2))?)];
            if ell >= 2 {
                mods.push(("σ ↦ −1".into(), one_dim_finite(ell, &F::one().neg())?));
            }
            mods.push(("regular".into(), regular_module(ctx, ell)?));
            for (name, m) in &mods {
                for a in [ctx.int(1), ctx.q_pow(1), ctx.int(2)] {
                    let r = evaluation_duality_check(ctx, m, &a, n, seed)?;
                    rec.claim(
                        r.intertwiner.is_some(),
                        format!("F(M(q^(-2ℓ/(n+1))a)) ≅ J(M)(a) for M {name}, a = {}", ctx.render_q(&a)),
                    );
                    rec.push("dims", json!(r.left.dim()));
                }
            }
        }
        "lemma-6.4" => {
            let lists = match &cfg.segments {
                Some(s) if s.is_single() => vec![s.clone()],
                Some(_) => return Err(Error::InvalidArgument("lemma-6.4 needs a single segment".into())),
                None => ["0", "2", "6"].iter().map(|h| SegmentList::parse(&format!("1@{h}:{ell}"))).collect::<Result<_>>()?,
            };
            for segs in lists {
                let m = segs.total_len();
                let (va, _) = irreducible_v_a(ctx, &segs, seed)?;
                let f = functor_f(ctx, &va, n)?.module;
                let mut lambda = vec![0i64; n];
                lambda[m - 1] = 1;
                let hw = highest_weight_vectors(&f)?;
                let mult: usize = hw.iter().filter(|(w, _)| *w == lambda).map(|(_, b)| b.len()).sum();
                rec.claim(mult == 1, format!("segment {segs}: highest weight λ_{m} has multiplicity one"));
                let c = segs.centers(ctx)[0].clone();
                let root = c.inv()?;
                let out = x0_root_check(&f, m, &root)?;
                let p = drinfeld_polys(ctx, &segs, n)?;
                let matches = p.polys[m - 1] == vec![root.neg(), F::one()];
                rec.claim(
                    out.pass && matches,
                    format!("segment {segs}: extracted root {} (P_{m} root {})", ctx.render_q(&out.extracted), ctx.render_q(&root)),
                );
                rec.push("dims", json!(f.dim()));
            }
        }
        "prop-7.2" => {
            let t = tensor_power(&natural_rep(ctx, n)?, ell)?;
            let hw = highest_weight_vectors(&t)?;
            for parts in partitions(ell) {
                let pi = Partition::new(parts.clone())?;
                let jpi = finite_irreducible(ctx, &pi, seed)?;
                let j = jimbo_j(ctx, &jpi, n)?.module;
                let lambda = partition_weight(n, &pi);
                let v = hw
                    .iter()
                    .find(|(w, _)| *w == lambda)
                    .map(|(_, b)| b[0].clone())
                    .ok_or_else(|| Error::RelationFailure(format!("no highest-weight vector of weight {lambda:?}")))?;
                let target = t.submodule(spin(&t.action(), &[v]).basis())?;
                rec.claim(iso(&j, &target, seed)?, format!("J(J_π) ≅ V({lambda:?}) for π = {parts:?}"));
                rec.push("dims", json!(j.dim()));
            }
        }
        "lemma-7.3" => {
            for parts in compositions(ell) {
                let a = random_parameters::<F>(&mut rng, ell);
                let ok = triangularity_check(ctx, &a, &Partition::new(parts.clone())?)?;
                rec.claim(ok, format!("triangular y-action on C_(w_π) for π = {parts:?}"));
            }
        }
        "prop-7.5" => {
            for segs in segment_lists(cfg) {
                let ideal = ideal_i_pi(ctx, &segs)?;
                for i in sigma_pi(&segs)? {
                    let (dom, a) = intertwiner_a(ctx, &segs, i)?;
                    rec.claim(is_intertwiner(&dom.action(), &ideal.ambient.action(), &a), format!("A_(a,{i}) is a module map for {segs}"));
                }
                let inter = intersection_of_images(ctx, &segs)?;
                rec.claim(inter == ideal.subspace, format!("⋂ image A_(a,i) = I_π for {segs} (dim {})", inter.dim()));
                rec.push("dims", json!(inter.dim()));
                if ell <= n {
                    let f = functor_f(ctx, &ideal.module, n)?.module;
                    let mut factors = Vec::new();
                    for s in segs.segments() {
                        let single = SegmentList::new(vec![s.clone()]);
                        factors.push(functor_f(ctx, &ideal_i_pi(ctx, &single)?.module, n)?.module);
                    }
                    let mut t = factors[0].clone();
                    for g in &factors[1..] {
                        t = t.tensor(g)?;
                    }
                    rec.claim(iso(&f, &t, seed)?, format!("F(I_π) ≅ ⊗ V(λ_(ℓ_r), a_r^-1) for {segs}"));
                }
            }
        }
        "thm-7.6" => {
            for segs in segment_lists(cfg) {
                let p = drinfeld_polys(ctx, &segs, n)?;
                for line in p.render(ctx) {
                    rec.note(format!("{segs}: {line}"));
                }
                let (va, _) = irreducible_v_a(ctx, &segs, seed)?;
                let f = functor_f(ctx, &va, n)?.module;
                rec.claim(is_irreducible(&f.action(), seed)?.is_irreducible(), format!("F(V_a) irreducible for {segs}"));
                let top: Vec<i64> = p.degrees().iter().map(|&d| d as i64).collect();
                let hw = highest_weight_vectors(&f)?;
                let mult: usize = hw.iter().filter(|(w, _)| *w == top).map(|(_, b)| b.len()).sum();
                rec.claim(mult == 1, format!("highest weight (deg P_i) = {top:?} occurs once in F(V_a)"));
                if segs.is_single() {
                    let m = segs.total_len();
                    let root = segs.centers(ctx)[0].inv()?;
                    let out = x0_root_check(&f, m, &root)?;
                    rec.claim(out.pass, format!("x_0^+ on the highest-weight vector gives root {}", ctx.render_q(&out.extracted)));
                }
                rec.push("dims", json!(va.dim()));
                rec.push("degrees", json!(p.degrees()));
            }
        }
        "eq-12" => {
            for parts in compositions(ell) {
                let ok = sign_property_check(ctx, &Partition::new(parts.clone())?)?;
                rec.claim(ok, format!("C_(w_π) σ_i = −C_(w_π) for π = {parts:?}"));
            }
        }
        _ => unreachable!("id validated above"),
    }
    let status = if rec.ok { Status::Pass } else { Status::Fail };
    Ok(outcome(status, rec.details, Value::Object(rec.data)))
}

