use num_rational::BigRational;
use proptest::prelude::*;

use qaffine::affine_hecke::{cherednik_pullback, regular_module, universal_module, AffHeckeElt, AffineHecke};
use qaffine::affinization::{evaluation_tensor, functor_f};
use qaffine::classification::{irreducible_v_a, SegmentList};
use qaffine::descriptor::ModuleDescriptor;
use qaffine::hecke::Hecke;
use qaffine::linalg::svec;
use qaffine::modtools::{are_isomorphic, spin, ModuleLike};
use qaffine::scalars::{Field, RatFunc, ScalarContext};
use qaffine::symgroup::{factorial, min_coset_reps, Partition, Perm};
use qaffine::uqrep::{character, UqModule};

fn rat(p: i64, r: i64) -> BigRational {
    BigRational::new(p.into(), r.into())
}

fn laurent() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(RatFunc::zero(), |acc, (c, e)| acc.add(&RatFunc::monomial(rat(c, 1), e)))
    })
}

fn scalar() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_map(|(a, b)| if b.is_zero() { a } else { a.div(&b).unwrap() })
}

fn perm(ell: usize) -> impl Strategy<Value = Perm> {
    Just((1..=ell).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_one_line(&v).unwrap())
}

fn aff_elt(ell: usize) -> impl Strategy<Value = AffHeckeElt<RatFunc>> {
    prop::collection::vec((prop::collection::vec(-1i32..=1, ell), perm(ell), -3i64..=3), 1..3).prop_map(
        move |terms| {
            let mut e = AffHeckeElt::zero(ell);
            for (alpha, w, c) in terms {
                e.add_term(alpha, w, RatFunc::from_int(c));
            }
            e
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn specialization_is_multiplicative(a in scalar(), b in scalar()) {
        let t0 = rat(5, 3);
        let s = |x: &RatFunc| BigRational::from_ratfunc(x, &t0);
        if let (Ok(sa), Ok(sb), Ok(sab)) = (s(&a), s(&b), s(&a.mul(&b))) {
            prop_assert_eq!(sab, sa.mul(&sb));
        }
    }

    #[test]
    fn reduced_words_rebuild(w in perm(5)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Perm::from_word(5, &word).unwrap(), w);
    }

    #[test]
    fn parabolic_factorization(w in perm(5), l1 in 1usize..5) {
        let pi = Partition::new(vec![l1, 5 - l1]).unwrap();
        let (p, d) = pi.factor(&w);
        prop_assert!(pi.contains(&p));
        prop_assert!(pi.min_coset_reps().contains(&d));
        prop_assert_eq!(p.compose(&d).unwrap(), w.clone());
        prop_assert_eq!(p.length() + d.length(), w.length());
    }

    #[test]
    fn straightening_is_associative(a in aff_elt(3), b in aff_elt(3), c in aff_elt(3)) {
        let ctx = ScalarContext::symbolic(2);
        let h = AffineHecke::new(&ctx, 3);
        let left = h.mul(&h.mul(&a, &b).unwrap(), &c).unwrap();
        let right = h.mul(&a, &h.mul(&b, &c).unwrap()).unwrap();
        prop_assert!(left.sub(&right).is_zero());
    }

    #[test]
    fn segment_lists_round_trip(
        segs in prop::collection::vec((-6i64..=6, 1i64..=4, -8i64..=8, 1usize..=4), 1..4)
    ) {
        let spec: Vec<String> = segs
            .iter()
            .filter(|(p, ..)| *p != 0)
            .map(|(p, r, h, k)| format!("{}@{h}:{k}", rat(*p, *r)))
            .collect();
        prop_assume!(!spec.is_empty());
        let parsed = SegmentList::parse(&spec.join(",")).unwrap();
        prop_assert_eq!(SegmentList::parse(&parsed.to_string()).unwrap(), parsed.clone());
        prop_assert_eq!(parsed.segments().len(), spec.len());
    }
}

#[test]
fn quadratic_relation_and_parabolic_ideals() {
    let ctx = ScalarContext::<RatFunc>::symbolic(2);
    let h = Hecke::new(&ctx, 4);
    let bracket = ctx.q_pow(1).add(&ctx.q_pow(-1));
    for i in 1..4 {
        let c = h.kl_simple(i).unwrap();
        assert_eq!(h.mul(&c, &c).unwrap(), c.scale(&bracket.neg()));
    }
    for parts in [vec![2, 2], vec![3, 1], vec![1, 2, 1], vec![4]] {
        let pi = Partition::new(parts.clone()).unwrap();
        let c = h.kl_parabolic_element(&pi).unwrap();
        let reg = regular_module(&ctx, 4).unwrap();
        let index: std::collections::HashMap<Perm, usize> =
            Perm::all(4).into_iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut v: Vec<(usize, RatFunc)> = c.terms().map(|(w, x)| (index[w], x.clone())).collect();
        v.sort_by_key(|(k, _)| *k);
        let dim = spin(&reg.action(), &[v]).dim();
        let expect = factorial(4) / parts.iter().map(|&p| factorial(p)).product::<usize>();
        assert_eq!(dim, expect, "π = {parts:?}");
    }
}

#[test]
fn sigma_y_sigma_is_shifted_y() {
    let ctx = ScalarContext::<RatFunc>::symbolic(2);
    let h = AffineHecke::new(&ctx, 3);
    for i in 1..3 {
        let s = h.sigma(i).unwrap();
        let lhs = h.mul(&h.mul(&s, &h.y(i).unwrap()).unwrap(), &s).unwrap();
        assert!(lhs.sub(&h.y(i + 1).unwrap().scale(&ctx.q_pow(2))).is_zero());
    }
}

#[test]
fn coset_representative_count() {
    for (l1, l2) in [(1, 1), (2, 1), (2, 2), (3, 2), (1, 4)] {
        let reps = min_coset_reps(l1, l2).unwrap();
        assert_eq!(reps.len() * factorial(l1) * factorial(l2), factorial(l1 + l2));
    }
}

#[test]
fn cherednik_pullbacks_are_affine_modules() {
    let ctx = ScalarContext::<RatFunc>::symbolic(2);
    for ell in 1..=3 {
        let m = cherednik_pullback(&ctx, &regular_module(&ctx, ell).unwrap(), &ctx.int(3)).unwrap();
        assert!(m.verify_relations(&ctx).pass(), "ℓ = {ell}");
    }
}

#[test]
fn spin_is_idempotent_and_monotone() {
    let ctx = ScalarContext::<RatFunc>::symbolic(2);
    let m = universal_module(&ctx, &[ctx.int(1), ctx.q_pow(2), ctx.int(5)]).unwrap().action();
    for i in 0..m.dim {
        let s = spin(&m, &[svec::unit(i)]);
        assert_eq!(spin(&m, s.basis()), s);
        let bigger = spin(&m, &[svec::unit(i), svec::unit((i + 1) % m.dim)]);
        assert!(s.basis().iter().all(|b| bigger.contains(b)));
    }
}

fn permuted_tensors(ctx: &ScalarContext<RatFunc>) -> Vec<UqModule<RatFunc>> {
    let (a, b, c) = (ctx.int(2), ctx.int(-3), ctx.q_pow(1));
    [[&a, &b, &c], [&c, &a, &b], [&b, &c, &a]]
        .iter()
        .map(|p| {
            let params: Vec<RatFunc> = p.iter().map(|x| (*x).clone()).collect();
            evaluation_tensor(ctx, 2, &params).unwrap()
        })
        .collect()
}

#[test]
fn isomorphism_is_an_equivalence() {
    let ctx = ScalarContext::<RatFunc>::symbolic(2);
    let mods = permuted_tensors(&ctx);
    let iso = |x: &UqModule<RatFunc>, y: &UqModule<RatFunc>| are_isomorphic(&x.action(), &y.action(), 3).unwrap();
    for x in &mods {
        assert!(iso(x, x).is_some());
        for y in &mods {
            assert_eq!(iso(x, y).is_some(), iso(y, x).is_some());
        }
    }
    let (ab, bc) = (iso(&mods[0], &mods[1]).unwrap(), iso(&mods[1], &mods[2]).unwrap());
    let composite = ab.mul(&bc);
    assert_eq!(composite.rank(), mods[0].dim());
    assert!(qaffine::modtools::is_intertwiner(&mods[0].action(), &mods[2].action(), &composite));
}

#[test]
fn character_is_an_isomorphism_invariant() {
    let ctx = ScalarContext::<RatFunc>::symbolic(2);
    let mods = permuted_tensors(&ctx);
    for m in &mods[1..] {
        assert_eq!(character(m), character(&mods[0]));
    }
    let total: usize = character(&mods[0]).values().sum();
    assert_eq!(total, mods[0].dim());
}

fn descriptor_round_trip<F: Field>(ctx: &ScalarContext<F>) {
    let a = [ctx.int(2), ctx.q_frac(1, 3).unwrap(), ctx.int(-1).div(&ctx.int(7)).unwrap()];
    let m = universal_module(ctx, &a).unwrap();
    let d = ModuleDescriptor::from_hecke(ctx, &m);
    let back = ModuleDescriptor::from_json(&d.to_json()).unwrap().to_hecke(ctx).unwrap();
    for i in 1..3 {
        assert_eq!(back.sigma(i), m.sigma(i));
    }
    for j in 1..=3 {
        assert_eq!(back.y(j), m.y(j));
    }

    let segs = SegmentList::parse("1@0:1,2@3:1").unwrap();
    let (va, _) = irreducible_v_a(ctx, &segs, 1).unwrap();
    let w = functor_f(ctx, &va, ctx.n()).unwrap().module;
    let d = ModuleDescriptor::from_uq(&w);
    let back = ModuleDescriptor::from_json(&d.to_json()).unwrap().to_uq(ctx).unwrap();
    assert_eq!(back.weights(), w.weights());
    let (g1, g2) = (back.generators(), w.generators());
    assert_eq!(g1.len(), g2.len());
    for ((n1, m1), (n2, m2)) in g1.iter().zip(&g2) {
        assert_eq!(n1, n2);
        assert_eq!(m1, m2, "{n1}");
    }

    let mut stripped = d.clone();
    stripped.weights = None;
    assert_eq!(stripped.to_uq(ctx).unwrap().weights(), w.weights());
}

#[test]
fn descriptors_round_trip_on_both_backends() {
    descriptor_round_trip(&ScalarContext::symbolic(2));
    descriptor_round_trip(&ScalarContext::specialized(2, rat(5, 3)).unwrap());
}

#[test]
fn descriptor_rank_is_enforced() {
    let ctx = ScalarContext::<RatFunc>::symbolic(2);
    let m = universal_module(&ctx, &[ctx.int(2), ctx.int(3)]).unwrap();
    let d = ModuleDescriptor::from_hecke(&ctx, &m);
    assert!(d.to_hecke(&ScalarContext::<RatFunc>::symbolic(3)).is_err());
}
