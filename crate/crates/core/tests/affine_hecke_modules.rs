use qaffine::affine_hecke::{
    cherednik_pullback, one_dim_affine, one_dim_finite, regular_module, universal_module, zelevinsky_induce,
};
use qaffine::modtools::{are_isomorphic, composition_factors, is_intertwiner, is_irreducible, ModuleLike};
use qaffine::scalars::{BigRational, RatFunc, ScalarContext};

fn sym(n: usize) -> ScalarContext<RatFunc> {
    ScalarContext::symbolic(n)
}

#[test]
fn universal_modules_satisfy_relations() {
    let ctx = sym(2);
    for a in [vec![ctx.int(1), ctx.q_pow(1)], vec![ctx.int(2), ctx.q_pow(-1), ctx.q_pow(3)]] {
        let m = universal_module(&ctx, &a).unwrap();
        assert_eq!(m.dim(), (1..=a.len()).product::<usize>());
        let report = m.verify_relations(&ctx);
        assert!(report.pass(), "{:?}", report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn universal_module_reducibility_criterion() {
    let ctx = sym(1);
    let red = universal_module(&ctx, &[ctx.int(1), ctx.q_pow(2)]).unwrap();
    let cert = is_irreducible(&red.action(), 1).unwrap();
    assert!(!cert.is_irreducible());
    let irr = universal_module(&ctx, &[ctx.int(1), ctx.q_pow(1)]).unwrap();
    assert!(is_irreducible(&irr.action(), 1).unwrap().is_irreducible());
    let rev = universal_module(&ctx, &[ctx.q_pow(2), ctx.int(1)]).unwrap();
    assert!(!is_irreducible(&rev.action(), 1).unwrap().is_irreducible());
    let equal = universal_module(&ctx, &[ctx.int(3), ctx.int(3)]).unwrap();
    assert!(is_irreducible(&equal.action(), 1).unwrap().is_irreducible());
}

#[test]
fn factors_of_reducible_universal_module() {
    let ctx = sym(1);
    let m = universal_module(&ctx, &[ctx.int(1), ctx.q_pow(2)]).unwrap();
    let f = composition_factors(&m, 3).unwrap();
    assert_eq!(f.len(), 2);
    assert!(f.iter().all(|x| x.dim() == 1));
}

#[test]
fn induction_of_characters_is_universal() {
    let ctx = sym(1);
    let (a1, a2) = (ctx.int(2), ctx.q_pow(1));
    let m1 = one_dim_affine(&RatFunc::one(), std::slice::from_ref(&a1)).unwrap();
    let m2 = one_dim_affine(&RatFunc::one(), std::slice::from_ref(&a2)).unwrap();
    let ind = zelevinsky_induce(&ctx, &m1, &m2).unwrap();
    assert!(ind.verify_relations(&ctx).pass());
    let uni = universal_module(&ctx, &[a1, a2]).unwrap();
    let t = are_isomorphic(&ind.action(), &uni.action(), 5).unwrap().expect("isomorphic");
    assert!(is_intertwiner(&ind.action(), &uni.action(), &t));
}

#[test]
fn finite_modules_and_pullbacks() {
    let ctx = sym(2);
    let reg = regular_module(&ctx, 3).unwrap();
    assert!(reg.verify_relations(&ctx).pass());
    assert!(!is_irreducible(&reg.action(), 0).unwrap().is_irreducible());
    let factors = composition_factors(&reg, 0).unwrap();
    let mut dims: Vec<usize> = factors.iter().map(|f| f.dim()).collect();
    dims.sort();
    assert_eq!(dims, vec![1, 1, 2, 2]);
    let pb = cherednik_pullback(&ctx, &reg, &ctx.q_pow(1)).unwrap();
    assert!(pb.verify_relations(&ctx).pass());
    let triv = one_dim_finite(3, &ctx.q_pow(2)).unwrap();
    let sign = one_dim_finite(3, &RatFunc::one().neg()).unwrap();
    let ind = zelevinsky_induce(&ctx, &one_dim_finite(1, &RatFunc::one()).unwrap(), &one_dim_finite(2, &ctx.q_pow(2)).unwrap()).unwrap();
    assert_eq!(ind.dim(), 3);
    assert!(ind.verify_relations(&ctx).pass());
    assert!(triv.verify_relations(&ctx).pass() && sign.verify_relations(&ctx).pass());
}

#[test]
fn specialized_backend_agrees() {
    let ctx = ScalarContext::specialized(1, BigRational::new(5.into(), 3.into())).unwrap();
    let red = universal_module(&ctx, &[ctx.int(1), ctx.q_pow(2)]).unwrap();
    assert!(red.verify_relations(&ctx).pass());
    assert!(!is_irreducible(&red.action(), 1).unwrap().is_irreducible());
    let irr = universal_module(&ctx, &[ctx.int(1), ctx.q_pow(1)]).unwrap();
    assert!(is_irreducible(&irr.action(), 1).unwrap().is_irreducible());
}
