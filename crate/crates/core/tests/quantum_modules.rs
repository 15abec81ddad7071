use qaffine::affine_hecke::{one_dim_finite, regular_module};
use qaffine::linalg::{svec, SparseMat};
use qaffine::modtools::{is_irreducible, spin, ModuleLike};
use qaffine::scalars::{RatFunc, ScalarContext};
use qaffine::uqrep::{
    character, check_weights, fundamental, highest_weight_vectors, jimbo_j, level, natural_rep, rcheck, rcheck_i,
    tensor_power, x_theta_minus, k_theta,
};

fn sym(n: usize) -> ScalarContext<RatFunc> {
    ScalarContext::symbolic(n)
}

#[test]
fn natural_representation() {
    for n in 1..=3 {
        let ctx = sym(n);
        let v = natural_rep(&ctx, n).unwrap();
        let report = v.verify_relations(&ctx);
        assert!(report.pass(), "{:?}", report.failures().collect::<Vec<_>>());
        check_weights(&ctx, &v).unwrap();
        let prod = (1..=n + 1).fold(SparseMat::identity(n + 1), |acc, r| acc.mul(v.t(r).unwrap()));
        assert!(prod.is_identity());
    }
    let ctx = sym(1);
    let v = natural_rep(&ctx, 1).unwrap();
    assert_eq!(v.x_plus(1).unwrap().get(0, 1), RatFunc::one());
    assert_eq!(v.k(1).unwrap().diagonal().unwrap(), vec![ctx.q_pow(1), ctx.q_pow(-1)]);
    let xm = x_theta_minus::<RatFunc>(2);
    assert_eq!(xm.triplets().map(|(r, c, _)| (r, c)).collect::<Vec<_>>(), vec![(2, 0)]);
}

#[test]
fn tensor_square_action() {
    let ctx = sym(1);
    let vv = tensor_power(&natural_rep(&ctx, 1).unwrap(), 2).unwrap();
    assert!(vv.verify_relations(&ctx).pass());
    // v2 ⊗ v1 has index 2
    let img = vv.x_plus(1).unwrap().mul_vec(&svec::unit(2));
    assert_eq!(img, vec![(0, ctx.q_pow(1))]);
    let hw = highest_weight_vectors(&vv).unwrap();
    assert_eq!(hw.len(), 2);
    assert_eq!(hw[0].0, vec![0]);
    assert_eq!(hw[0].1, vec![vec![(1, RatFunc::one()), (2, ctx.q_pow(-1).neg())]]);
    assert_eq!(hw[1].0, vec![2]);
}

#[test]
fn r_matrix_properties() {
    let ctx = sym(1);
    let r = rcheck(&ctx, 1);
    assert_eq!(r.get(2, 1), ctx.q_pow(1));
    assert_eq!(r.get(1, 2), ctx.q_pow(1));
    assert_eq!(r.get(2, 2), ctx.q_pow(2).sub(&RatFunc::one()));
    let id = SparseMat::identity(4);
    let quad = r.add(&id).mul(&r.sub(&id.scale(&ctx.q_pow(2))));
    assert!(quad.is_zero());
    // eigenvalue multiplicities: q² three times, −1 once
    assert_eq!(r.sub(&id.scale(&ctx.q_pow(2))).rank(), 1);
    assert_eq!(r.add(&id).rank(), 3);

    for n in 1..=3 {
        let ctx = sym(n);
        for ell in 2..=3 {
            let t = tensor_power(&natural_rep(&ctx, n).unwrap(), ell).unwrap();
            for i in 1..ell {
                let ri = rcheck_i(&ctx, n, ell, i).unwrap();
                for (name, g) in t.generators() {
                    assert_eq!(ri.mul(g), g.mul(&ri), "Ř_{i} vs {name}, n={n}, ℓ={ell}");
                }
            }
            if ell == 3 {
                let (r1, r2) = (rcheck_i(&ctx, n, 3, 1).unwrap(), rcheck_i(&ctx, n, 3, 2).unwrap());
                assert_eq!(r1.mul(&r2).mul(&r1), r2.mul(&r1).mul(&r2));
            }
        }
    }
}

#[test]
fn r_matrix_moves_x_theta() {
    for n in 1..=3 {
        let ctx = sym(n);
        let d = n + 1;
        let r = rcheck(&ctx, n);
        let id = SparseMat::identity(d);
        let xm = x_theta_minus(n);
        let kinv = k_theta(&ctx, n).inverse().unwrap();
        assert_eq!(r.mul(&id.kron(&xm)), xm.kron(&kinv).mul(&r));
    }
}

#[test]
fn distinct_tensor_generates() {
    let ctx = sym(2);
    let t = tensor_power(&natural_rep(&ctx, 2).unwrap(), 2).unwrap();
    // v1 ⊗ v2
    assert!(spin(&t.action(), &[svec::unit(1)]).is_full());
}

#[test]
fn jimbo_functor_dimensions() {
    let ctx = sym(2);
    let sign = one_dim_finite(2, &RatFunc::one().neg()).unwrap();
    let j = jimbo_j(&ctx, &sign, 2).unwrap();
    assert_eq!(j.module.dim(), 3);
    let report = j.module.verify_relations(&ctx);
    assert!(report.pass(), "{:?}", report.failures().collect::<Vec<_>>());
    let hw = highest_weight_vectors(&j.module).unwrap();
    assert_eq!(hw.len(), 1);
    assert_eq!(hw[0].0, fundamental(2, 2));
    assert_eq!(level(&hw[0].0), 2);

    let triv = one_dim_finite(2, &ctx.q_pow(2)).unwrap();
    let j = jimbo_j(&ctx, &triv, 2).unwrap();
    assert_eq!(j.module.dim(), 6);
    let hw = highest_weight_vectors(&j.module).unwrap();
    assert_eq!(hw.len(), 1);
    assert_eq!(hw[0].0, vec![2, 0]);
    assert!(is_irreducible(&j.module.action(), 0).unwrap().is_irreducible());

    for ell in 1..=3 {
        let reg = regular_module(&ctx, ell).unwrap();
        let j = jimbo_j(&ctx, &reg, 2).unwrap();
        assert_eq!(j.module.dim(), 3usize.pow(ell as u32));
        assert!(j.module.verify_relations(&ctx).pass());
        let total: usize = character(&j.module).values().sum();
        assert_eq!(total, j.module.dim());
    }
}
