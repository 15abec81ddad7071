use qaffine::affinization::functor_f;
use qaffine::classification::{
    drinfeld_polys, sign_property_check, finite_irreducible, ideal_i_pi, intersection_of_images, intertwiner_a,
    irreducible_v_a, x0_root_check, triangularity_check, partition_weight, sigma_pi, SegmentList,
};
use qaffine::linalg::SparseMat;
use qaffine::modtools::{are_isomorphic, is_intertwiner, is_irreducible, spin, ModuleLike};
use qaffine::scalars::{RatFunc, ScalarContext};
use qaffine::symgroup::Partition;
use qaffine::uqrep::{highest_weight_vectors, jimbo_j, natural_rep, rcheck_i, tensor_power};

fn sym(n: usize) -> ScalarContext<RatFunc> {
    ScalarContext::symbolic(n)
}

#[test]
fn segment_parsing_and_order() {
    let ctx = sym(2);
    let s = SegmentList::parse("3@0:1,1@0:2").unwrap();
    assert_eq!(s.to_string(), "1@0:2,3@0:1");
    assert_eq!(s.juxtaposition(&ctx), vec![ctx.q_pow(-1), ctx.q_pow(1), ctx.int(3)]);
    assert_eq!(s.partition().unwrap().parts(), &[2, 1]);
    let e = SegmentList::parse("1@2:3").unwrap().juxtaposition(&ctx);
    assert_eq!(e, vec![ctx.q_pow(-1), ctx.q_pow(1), ctx.q_pow(3)]);
    assert!(SegmentList::parse("1@0:0").is_err());
    assert!(SegmentList::parse("0@0:1").is_err());
    assert!(SegmentList::parse("1@x:1").is_err());
}

#[test]
fn drinfeld_polynomials() {
    let ctx = sym(2);
    let p = drinfeld_polys(&ctx, &SegmentList::parse("1@0:1,1@4:1").unwrap(), 2).unwrap();
    let q2 = ctx.q_pow(-2);
    assert_eq!(p.polys[0], vec![q2.clone(), RatFunc::one().add(&q2).neg(), RatFunc::one()]);
    assert_eq!(p.polys[1], vec![RatFunc::one()]);
    let ctx3 = sym(3);
    let p = drinfeld_polys(&ctx3, &SegmentList::parse("1@0:2").unwrap(), 3).unwrap();
    assert_eq!(p.render(&ctx3)[1], "P_2(u) = u - 1");
    assert!(drinfeld_polys(&ctx, &SegmentList::parse("1@0:3").unwrap(), 2).is_err());
    assert_eq!(drinfeld_polys(&ctx, &SegmentList::default(), 2).unwrap().degrees(), vec![0, 0]);
}

#[test]
fn ideals() {
    let ctx = sym(2);
    for k in 1..=3 {
        let segs = SegmentList::parse(&format!("2@1:{k}")).unwrap();
        assert_eq!(ideal_i_pi(&ctx, &segs).unwrap().module.dim(), 1);
    }
    assert_eq!(ideal_i_pi(&ctx, &SegmentList::parse("1@0:2,3@0:1").unwrap()).unwrap().module.dim(), 3);
    assert_eq!(ideal_i_pi(&ctx, &SegmentList::parse("1@0:1,3@0:1").unwrap()).unwrap().module.dim(), 2);
}

#[test]
fn intertwiners_and_intersection() {
    let ctx = sym(2);
    for spec in ["1@0:2,3@0:1", "1@0:3", "2@0:2"] {
        let segs = SegmentList::parse(spec).unwrap();
        let ideal = ideal_i_pi(&ctx, &segs).unwrap();
        for i in sigma_pi(&segs).unwrap() {
            let (dom, a) = intertwiner_a(&ctx, &segs, i).unwrap();
            assert!(is_intertwiner(&dom.action(), &ideal.ambient.action(), &a), "{spec} i={i}");
        }
        assert_eq!(intersection_of_images(&ctx, &segs).unwrap(), ideal.subspace, "{spec}");
    }
    assert!(intertwiner_a(&ctx, &SegmentList::parse("1@0:2,3@0:1").unwrap(), 2).is_err());
}

#[test]
fn intertwiner_under_f_is_r_matrix() {
    let ctx = sym(2);
    let segs = SegmentList::parse("1@0:2").unwrap();
    let (dom, a) = intertwiner_a(&ctx, &segs, 1).unwrap();
    let j = jimbo_j(&ctx, &dom, 2).unwrap();
    // 1 ⊗ v ↦ C_1 ⊗ v; compare with (q^{-1}Ř_1 − q) v
    let r = rcheck_i(&ctx, 2, 2, 1).unwrap();
    let target = r.scale(&ctx.q_pow(-1)).sub(&SparseMat::identity(9).scale(&ctx.q_pow(1)));
    let jm = jimbo_j(&ctx, &qaffine::affine_hecke::universal_module(&ctx, &segs.juxtaposition(&ctx)).unwrap(), 2).unwrap();
    for b in 0..9 {
        let v = vec![(b, RatFunc::one())];
        let img = jm.proj.vector(a.row(0), &v);
        let expect = jm.proj.vector(&vec![(0, RatFunc::one())], &target.mul_vec(&v));
        assert_eq!(img, expect);
    }
    assert_eq!(j.module.dim(), 9);
}

#[test]
fn sign_and_triangularity() {
    let ctx = sym(2);
    for ell in 1..=4 {
        for parts in compositions(ell) {
            assert!(sign_property_check(&ctx, &Partition::new(parts).unwrap()).unwrap());
        }
    }
    let a = vec![ctx.int(2), ctx.q_pow(3), ctx.int(-5)];
    for parts in compositions(3) {
        assert!(triangularity_check(&ctx, &a, &Partition::new(parts).unwrap()).unwrap());
    }
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|k| compositions(n - k).into_iter().map(move |mut c| {
            c.insert(0, k);
            c
        }))
        .collect()
}

#[test]
fn single_segment_v_a() {
    for n in 1..=3 {
        let ctx = sym(n);
        for m in 1..=n {
            for half in [0, 2, 6] {
                let segs = SegmentList::parse(&format!("1@{half}:{m}")).unwrap();
                let (va, _) = irreducible_v_a(&ctx, &segs, 1).unwrap();
                assert_eq!(va.dim(), 1);
                let f = functor_f(&ctx, &va, n).unwrap().module;
                let c = segs.centers(&ctx)[0].clone();
                let out = x0_root_check(&f, m, &c.inv().unwrap()).unwrap();
                assert!(out.pass, "n={n} m={m} extracted {}", out.extracted);
                let p = drinfeld_polys(&ctx, &segs, n).unwrap();
                assert_eq!(p.polys[m - 1][0], c.inv().unwrap().neg());
            }
        }
    }
}

#[test]
fn generic_and_linked_v_a() {
    let ctx = sym(2);
    let (va, _) = irreducible_v_a(&ctx, &SegmentList::parse("1@0:1,3@0:1").unwrap(), 1).unwrap();
    assert_eq!(va.dim(), 2);
    let (va, _) = irreducible_v_a(&ctx, &SegmentList::parse("1@0:1,1@4:1").unwrap(), 1).unwrap();
    assert_eq!(va.dim(), 1);
    assert_eq!(va.sigma(1).get(0, 0), ctx.q_pow(2));
    let segs = SegmentList::parse("1@0:1,5@0:1").unwrap();
    let (va, _) = irreducible_v_a(&ctx, &segs, 1).unwrap();
    let f = functor_f(&ctx, &va, 2).unwrap().module;
    assert!(is_irreducible(&f.action(), 1).unwrap().is_irreducible());
    let hw = highest_weight_vectors(&f).unwrap();
    let p = drinfeld_polys(&ctx, &segs, 2).unwrap();
    let top: Vec<i64> = p.degrees().iter().map(|&d| d as i64).collect();
    assert_eq!(hw.iter().filter(|(w, _)| *w == top).map(|(_, b)| b.len()).sum::<usize>(), 1);
}

#[test]
fn finite_irreducibles_under_j() {
    let n = 3;
    let ctx = sym(n);
    let pi = Partition::new(vec![2, 1]).unwrap();
    let jpi = finite_irreducible(&ctx, &pi, 1).unwrap();
    assert_eq!(jpi.dim(), 2);
    let j = jimbo_j(&ctx, &jpi, n).unwrap().module;
    let lambda = partition_weight(n, &pi);
    let t = tensor_power(&natural_rep(&ctx, n).unwrap(), 3).unwrap();
    let hw = highest_weight_vectors(&t).unwrap();
    let v = hw.iter().find(|(w, _)| *w == lambda).unwrap().1[0].clone();
    let span = spin(&t.action(), &[v]);
    let target = t.submodule(span.basis()).unwrap();
    assert!(are_isomorphic(&j.without_t().action(), &target.without_t().action(), 2).unwrap().is_some());
}
