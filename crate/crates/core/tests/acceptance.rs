//! Acceptance criteria 1 to 10, one test each. Every comparison is an exact
//! equality over the scalar field.

use num_rational::BigRational;
use serde_json::Value;

use qaffine::affine_hecke::universal_module;
use qaffine::affinization::{evaluation_module, evaluation_tensor, functor_f};
use qaffine::checks::{run_check, CheckConfig, Status};
use qaffine::classification::{irreducible_v_a, SegmentList};
use qaffine::linalg::SparseMat;
use qaffine::scalars::{Field, ScalarContext};
use qaffine::uqrep::{k_theta, rcheck, x_theta_minus};

const SEED: u64 = 20240611;

type Run = Vec<(String, usize, usize, Status, Value)>;

fn run<F: Field>(ctx: &ScalarContext<F>, id: &str, ell: usize) -> (String, usize, usize, Status, Value) {
    let cfg = CheckConfig { n: ctx.n(), ell, segments: None, seed: SEED, force: false };
    let out = run_check(ctx, id, &cfg).unwrap_or_else(|e| panic!("{id} n={} ell={ell}: {e}", ctx.n()));
    if out.status == Status::Fail {
        for d in &out.details {
            eprintln!("  {id} n={} ell={ell}: {d}", ctx.n());
        }
    }
    (id.to_string(), ctx.n(), ell, out.status, out.data)
}

fn report(criterion: usize, title: &str, runs: &Run) -> bool {
    let pass = runs.iter().all(|r| r.3 != Status::Fail);
    let ran = runs.iter().filter(|r| r.3 == Status::Pass).count();
    println!("criterion {criterion:2} {}: {title} ({ran} checks)", if pass { "PASS" } else { "FAIL" });
    pass
}

fn symbolic(n: usize) -> ScalarContext<qaffine::scalars::RatFunc> {
    ScalarContext::symbolic(n)
}

fn specialized(n: usize) -> ScalarContext<BigRational> {
    ScalarContext::specialized(n, BigRational::new(5.into(), 3.into())).unwrap()
}

fn relation_suite<F: Field>(ctx_for: impl Fn(usize) -> ScalarContext<F>) -> Run {
    let mut out = Vec::new();
    for n in 1..=3 {
        let ctx = ctx_for(n);
        for ell in 1..=3 {
            out.push(run(&ctx, "thm-4.2", ell));
        }
    }
    out
}

fn dictionary<F: Field>(ctx_for: impl Fn(usize) -> ScalarContext<F>) -> Run {
    let mut out = Vec::new();
    for n in 2..=3 {
        let ctx = ctx_for(n);
        for ell in 2..=3 {
            out.push(run(&ctx, "prop-4.7", ell));
        }
    }
    out
}

fn reducibility<F: Field>(ctx_for: impl Fn(usize) -> ScalarContext<F>) -> Run {
    let ctx = ctx_for(2);
    vec![run(&ctx, "prop-3.4c", 2), run(&ctx, "cor-4.8b", 2)]
}

fn drinfeld<F: Field>(ctx_for: impl Fn(usize) -> ScalarContext<F>) -> Run {
    let mut out = Vec::new();
    for n in 1..=3 {
        let ctx = ctx_for(n);
        for m in 1..=n {
            out.push(run(&ctx, "lemma-6.4", m));
        }
    }
    out.push(run(&ctx_for(3), "prop-7.2", 3));
    out
}

#[test]
fn criterion_01_relation_suite() {
    assert!(report(1, "affine relations of F(M_a), n ≤ 3, ℓ ≤ 3", &relation_suite(symbolic)));
}

#[test]
fn criterion_02_schur_weyl_commutation() {
    let mut runs = Vec::new();
    for n in 1..=3 {
        let ctx = symbolic(n);
        for ell in 1..=4 {
            runs.push(run(&ctx, "prop-4.1", ell));
        }
    }
    assert!(report(2, "Ř_i commute with U_q, braid and quadratic relations, ℓ ≤ 4", &runs));
}

#[test]
fn criterion_03_rcheck_identity_and_central_element() {
    let mut pass = true;
    for n in 1..=3 {
        let ctx = symbolic(n);
        let r = rcheck(&ctx, n);
        let id = SparseMat::identity(n + 1);
        let xm = x_theta_minus(n);
        let kinv = k_theta(&ctx, n).inverse().unwrap();
        pass &= r.mul(&id.kron(&xm)) == xm.kron(&kinv).mul(&r);

        let mut affine = vec![
            evaluation_module(&ctx, n, &ctx.q_pow(3)).unwrap(),
            evaluation_tensor(&ctx, n, &[ctx.int(2), ctx.q_pow(-1)]).unwrap(),
        ];
        let a = [ctx.int(3), ctx.q_pow(2)];
        affine.push(functor_f(&ctx, &universal_module(&ctx, &a).unwrap(), n).unwrap().module);
        let segs = SegmentList::parse("1@0:1,2@2:1").unwrap();
        let (va, _) = irreducible_v_a(&ctx, &segs, SEED).unwrap();
        affine.push(functor_f(&ctx, &va, n).unwrap().module);
        for m in &affine {
            pass &= m.central_element().unwrap().is_identity();
        }
    }
    println!("criterion  3 {}: Ř(1⊗x_θ^-) = (x_θ^-⊗k_θ^-1)Ř and k_0⋯k_n = 1", if pass { "PASS" } else { "FAIL" });
    assert!(pass);
}

#[test]
fn criterion_04_universal_module_dictionary() {
    assert!(report(4, "dim J(M_a) = (n+1)^ℓ and F(M_a) ≅ V(a_1)⊗⋯⊗V(a_ℓ)", &dictionary(symbolic)));
}

#[test]
fn criterion_05_reducibility_grid() {
    assert!(report(5, "M_a and F(M_a) reducible exactly at c = q^±2", &reducibility(symbolic)));
}

#[test]
fn criterion_06_induction_compatibility() {
    let ctx = symbolic(2);
    let runs = vec![run(&ctx, "prop-3.3", 2), run(&ctx, "prop-4.6", 2), run(&ctx, "prop-3.3", 3)];
    assert!(report(6, "induction dimension, restriction and tensor compatibility", &runs));
}

#[test]
fn criterion_07_segment_layer() {
    let mut runs = Vec::new();
    let ctx = symbolic(3);
    for ell in 1..=4 {
        runs.push(run(&ctx, "eq-12", ell));
    }
    for ell in 1..=3 {
        runs.push(run(&ctx, "lemma-7.3", ell));
        runs.push(run(&ctx, "prop-7.5", ell));
    }
    assert!(report(7, "sign property, triangularity and intersection of images", &runs));
}

#[test]
fn criterion_08_evaluation_duality() {
    let ctx = symbolic(2);
    let runs = vec![run(&ctx, "thm-5.5", 1), run(&ctx, "thm-5.5", 2)];
    assert!(report(8, "F(M(q^(-2ℓ/(n+1))a)) ≅ J(M)(a), n = 2", &runs));
}

#[test]
fn criterion_09_drinfeld_polynomials() {
    assert!(report(9, "single segments and J(J_π) for π = (2,1)", &drinfeld(symbolic)));
}

#[test]
fn criterion_10_cross_backend_determinism() {
    let pairs: [(&str, Run, Run); 4] = [
        ("relations", relation_suite(symbolic), relation_suite(specialized)),
        ("dictionary", dictionary(symbolic), dictionary(specialized)),
        ("reducibility", reducibility(symbolic), reducibility(specialized)),
        ("drinfeld", drinfeld(symbolic), drinfeld(specialized)),
    ];
    let mut pass = true;
    for (name, a, b) in &pairs {
        let same = a == b;
        if !same {
            eprintln!("  {name}: backends disagree\n  symbolic: {a:?}\n  t = 5/3:  {b:?}");
        }
        pass &= same && a.iter().all(|r| r.3 != Status::Fail);
    }
    println!("criterion 10 {}: symbolic and t = 5/3 agree on status and integer data", if pass { "PASS" } else { "FAIL" });
    assert!(pass);
}
