use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use uqzoo::hopf::TensorVector;
use uqzoo::linalg::{minimal_polynomial_of_element, Poly};
use uqzoo::polyid::phi_poly;
use uqzoo::report::Mode;
use uqzoo::sample::{random_family_params, ALL_TAGS};
use uqzoo::sparse::{self, basis};
use uqzoo::uqsl2::Sl2Context;
use uqzoo::zoo::{
    build_family, canonical_params, classify, deform_family, embed_a4_into_uq, is_right_h_simple,
    loewy_filtration, morita_equivalent_params, morita_invariant_d, one_dim_reps_a4,
    semisimplicity_a4, verify_deformed_presentation, verify_family_relations, verify_min_pol_lemma,
    EvidenceTier, FamilyParams,
};
use uqzoo::{Cyclo, Field};

fn ctx3() -> Sl2Context {
    Sl2Context::new(3).unwrap()
}

fn dense(a: &uqzoo::hopf::ComoduleAlgebra<Cyclo>, label: &str) -> Vec<Cyclo> {
    sparse::to_dense(&basis(a.index_of(label).unwrap()), a.dim())
}

#[test]
fn dimensions_at_three() {
    let ctx = ctx3();
    let f = ctx.field();
    let cases = [
        (FamilyParams::l0(1), 1),
        (FamilyParams::l0(3), 3),
        (FamilyParams::l1(3, f.int(2)), 9),
        (FamilyParams::l2(3, f.q()), 9),
        (FamilyParams::l3(1, f.one(), f.zero()), 9),
        (FamilyParams::l3n(3, f.one(), f.zero(), f.q()), 27),
        (FamilyParams::l4(f.one(), f.zero(), f.int(-1)), 3),
    ];
    for (p, dim) in cases {
        let a = build_family(&ctx, &p).unwrap();
        assert_eq!(a.dim(), dim, "{p:?}");
        assert!(a.verify(&Mode::Exhaustive).passed(), "{p:?}");
        assert!(verify_family_relations(&ctx, &p).unwrap().passed(), "{p:?}");
        assert!(
            verify_deformed_presentation(&ctx, &p).unwrap().passed(),
            "{p:?}"
        );
    }
}

#[test]
fn invalid_parameters_rejected() {
    let ctx = ctx3();
    let f = ctx.field();
    assert!(build_family(&ctx, &FamilyParams::l0(2)).is_err());
    assert!(build_family(&ctx, &FamilyParams::l4(f.zero(), f.zero(), f.one())).is_err());
    let mut p = FamilyParams::l3(1, f.one(), f.one());
    p.eta = Some(f.one());
    assert!(build_family(&ctx, &p).is_err());
}

#[test]
fn l0_coaction() {
    let ctx = ctx3();
    let h = ctx.gr();
    let a = build_family(&ctx, &FamilyParams::l0(3)).unwrap();
    let gi = a.index_of("G").unwrap();
    let mut expected = TensorVector::new();
    sparse::add_term(
        &mut expected,
        (h.index_of("g").unwrap(), gi),
        ctx.field().one(),
    );
    assert_eq!(a.coact(&basis(gi)), expected);
}

#[test]
fn l4_top_power() {
    let ctx = Sl2Context::new(5).unwrap();
    let f = ctx.field();
    let xi = f.int(3) - f.q();
    let a = build_family(&ctx, &FamilyParams::l4(f.one(), f.q(), xi.clone())).unwrap();
    let w = basis(a.index_of("W").unwrap());
    assert_eq!(a.algebra().pow(&w, 5), sparse::scale(&a.one(), &xi));
    assert!(a
        .verify(&Mode::Sampled {
            count: 200,
            seed: 3
        })
        .passed());
}

#[test]
fn deformed_l4_minimal_polynomial_at_three() {
    let ctx = ctx3();
    let f = ctx.field();
    let (al, be, xi) = (f.one(), f.one(), f.int(2));
    let a = deform_family(&ctx, &FamilyParams::l4(al.clone(), be.clone(), xi.clone())).unwrap();
    let w = basis(a.index_of("W").unwrap());
    let phi = phi_poly(f, &al, &be, &xi);
    let c = (f.q_pow(2) - f.one()).inv().unwrap();
    assert_eq!(phi, Poly::new(vec![-xi, f.int(3) * c, f.zero(), f.one()]));
    assert_eq!(minimal_polynomial_of_element(a.algebra(), &w), phi);

    let (b2, x2) = (f.q(), f.int(5));
    let a = deform_family(&ctx, &FamilyParams::l4(f.zero(), b2, x2.clone())).unwrap();
    assert_eq!(a.algebra().pow(&w, 3), sparse::scale(&a.one(), &x2));
}

#[test]
fn loewy_layers() {
    let ctx = ctx3();
    let f = ctx.field();
    let l0 = build_family(&ctx, &FamilyParams::l0(3)).unwrap();
    assert_eq!(loewy_filtration(&l0).unwrap().layer_dims, vec![3]);
    let l3 = build_family(&ctx, &FamilyParams::l3n(3, f.one(), f.q(), f.int(2))).unwrap();
    let dims = loewy_filtration(&l3).unwrap().layer_dims;
    assert_eq!(&dims[..3], &[3, 9, 18]);
    assert_eq!(*dims.last().unwrap(), 27);
    let a4 = deform_family(&ctx, &FamilyParams::l4(f.one(), f.q(), f.int(2))).unwrap();
    assert_eq!(loewy_filtration(&a4).unwrap().layer_dims, vec![1, 2, 3]);
}

#[test]
fn d_invariants() {
    let ctx = ctx3();
    let f = ctx.field();
    let d = |p: FamilyParams<Cyclo>| {
        let m = morita_invariant_d(&build_family(&ctx, &p).unwrap()).unwrap();
        (m.ratio, m.socle_dim)
    };
    assert_eq!(d(FamilyParams::l0(3)), (1, 3));
    assert_eq!(d(FamilyParams::l1(3, f.one())), (3, 3));
    assert_eq!(d(FamilyParams::l3(1, f.one(), f.one())), (9, 1));
    assert_eq!(d(FamilyParams::l3n(3, f.zero(), f.zero(), f.one())), (9, 3));
    assert_eq!(d(FamilyParams::l4(f.one(), f.one(), f.zero())), (3, 1));
}

#[test]
fn coefficient_coalgebras() {
    let ctx = ctx3();
    let (h, f) = (ctx.gr(), ctx.field());
    let x = sparse::to_dense(&basis(h.index_of("x").unwrap()), h.dim());
    let l1 = build_family(&ctx, &FamilyParams::l1(3, f.one())).unwrap();
    let l2 = build_family(&ctx, &FamilyParams::l2(3, f.one())).unwrap();
    assert!(l1.coefficient_coalgebra().contains(&x).unwrap());
    assert!(!l2.coefficient_coalgebra().contains(&x).unwrap());

    let c = build_family(&ctx, &FamilyParams::l0(3))
        .unwrap()
        .coefficient_coalgebra();
    assert_eq!(c.dim(), 3);
    for g in ["1", "g", "g^2"] {
        assert!(c
            .contains(&sparse::to_dense(&basis(h.index_of(g).unwrap()), h.dim()))
            .unwrap());
    }
    assert_eq!(
        build_family(&ctx, &FamilyParams::l0(1))
            .unwrap()
            .coefficient_coalgebra()
            .dim(),
        1
    );
}

#[test]
fn coinvariants_are_one_dimensional() {
    let ctx = ctx3();
    let f = ctx.field();
    for p in [
        FamilyParams::l3n(3, f.one(), f.q(), f.int(2)),
        FamilyParams::l4(f.one(), f.q(), f.int(2)),
    ] {
        assert_eq!(build_family(&ctx, &p).unwrap().coinvariants().dim(), 1);
        assert_eq!(deform_family(&ctx, &p).unwrap().coinvariants().dim(), 1);
    }
}

#[test]
fn right_simplicity() {
    let ctx = ctx3();
    let f = ctx.field();
    let l0 = build_family(&ctx, &FamilyParams::l0(3)).unwrap();
    let ev = is_right_h_simple(&l0, 1, 4).unwrap();
    assert!(ev.simple);
    assert_eq!(ev.tier, EvidenceTier::Proved);
    let l3 = build_family(&ctx, &FamilyParams::l3n(3, f.zero(), f.zero(), f.zero())).unwrap();
    assert!(is_right_h_simple(&l3, 1, 4).unwrap().simple);
    let one = build_family(&ctx, &FamilyParams::l0(1)).unwrap();
    let sum = one.direct_sum(&one).unwrap();
    assert!(!is_right_h_simple(&sum, 1, 4).unwrap().simple);
    // a costable ideal of the sum: the first summand
    let first = dense(&sum, "(1,0)");
    let ideal = uqzoo::linalg::Subspace::from_vectors(2, vec![first]).unwrap();
    assert_eq!(sum.costable_closure(&ideal).dim(), 1);
}

#[test]
fn embeddings_into_uq() {
    let ctx = ctx3();
    let f = ctx.field();
    let e = embed_a4_into_uq(&ctx, &f.one(), &f.zero(), &f.zero()).unwrap();
    assert!(e.report.passed());
    let w = basis(1);
    assert_eq!(
        minimal_polynomial_of_element(e.algebra.algebra(), &w),
        Poly::monomial(f.one(), 3)
    );

    let e = embed_a4_into_uq(&ctx, &f.one(), &f.one(), &f.zero()).unwrap();
    assert!(e.report.passed() && e.kind.injective);
    assert!(e.beta.is_zero());
    assert_eq!(e.xi, f.one());

    let e = embed_a4_into_uq(&ctx, &f.one(), &f.one(), &f.one()).unwrap();
    assert!(e.report.passed());
    assert_eq!(e.xi, f.int(2));
    assert_eq!(e.beta, f.one() - f.q_pow(2));
    assert_eq!(
        minimal_polynomial_of_element(e.algebra.algebra(), &w),
        phi_poly(f, &f.one(), &e.beta, &e.xi)
    );

    assert!(embed_a4_into_uq(&ctx, &f.zero(), &f.one(), &f.one()).is_err());
}

#[test]
fn min_pol_lemma_examples() {
    let ctx = ctx3();
    let f = ctx.field();
    let (_, c) = verify_min_pol_lemma(&ctx, &f.one(), &f.zero(), &f.zero()).unwrap();
    assert_eq!(c.computed, Poly::monomial(f.one(), 3));
    assert!(c.matches());
    let (_, c) = verify_min_pol_lemma(&ctx, &f.zero(), &f.zero(), &f.one()).unwrap();
    assert_eq!(
        c.computed,
        Poly::new(vec![-f.one(), f.zero(), f.zero(), f.one()])
    );
    assert!(c.matches());
    let (r, c) = verify_min_pol_lemma(&ctx, &f.one(), &f.one(), &f.zero()).unwrap();
    assert!(r.passed() && c.matches());
    assert!(verify_min_pol_lemma(&ctx, &f.zero(), &f.zero(), &f.zero()).is_err());
}

#[test]
fn one_dimensional_representations() {
    let f = ctx3().field().clone();
    let (mu, r) = one_dim_reps_a4(&f, &f.zero(), &f.zero()).unwrap();
    assert!(mu.iter().all(|m| m.is_zero()) && r.passed());
    let (mu, r) = one_dim_reps_a4(&f, &f.one(), &f.zero()).unwrap();
    assert!(r.passed());
    for (k, m) in mu.iter().enumerate() {
        assert_eq!(m, &f.q_pow(2 * k as i64));
    }
    let (mu, r) = one_dim_reps_a4(&f, &f.one(), &f.one()).unwrap();
    assert!(r.passed());
    assert_eq!(mu[1], f.q_pow(2) + f.q_pow(-2));
}

#[test]
fn semisimplicity_examples() {
    let f = ctx3().field().clone();
    assert!(semisimplicity_a4(&f, &f.one(), &f.zero(), &f.one()).unwrap());
    assert!(!semisimplicity_a4(&f, &f.one(), &f.zero(), &f.zero()).unwrap());
    // α = u = v = 1 gives β = 1 − q², ξ = 2, on the boundary ξ² = 4 α^N β^N (1 − q²)^{−N}
    let beta = f.one() - f.q_pow(2);
    assert!(!semisimplicity_a4(&f, &f.one(), &beta, &f.int(2)).unwrap());
    assert!(semisimplicity_a4(&f, &f.one(), &beta, &f.int(3)).unwrap());
    assert!(semisimplicity_a4(&f, &f.zero(), &f.zero(), &f.one()).is_err());
}

#[test]
fn morita_predicate_examples() {
    let f = ctx3().field().clone();
    let (a, b, x) = (f.int(2), f.q(), f.int(1) + f.q());
    let p = FamilyParams::l4(a.clone(), b.clone(), x.clone());
    let q2 = f.q_pow(2);
    let shifted = FamilyParams::l4(q2.clone() * &a, f.q_pow(-2) * &b, x.clone());
    assert!(morita_equivalent_params(&f, &p, &shifted).unwrap());
    let lam = f.int(3) + f.q();
    let one_one = FamilyParams::l4(f.one(), f.one(), f.zero());
    let scaled = FamilyParams::l4(lam.clone(), lam, f.zero());
    assert!(morita_equivalent_params(&f, &one_one, &scaled).unwrap());
    let l3 = FamilyParams::l3n(3, f.one(), f.zero(), f.int(2));
    let l3q = FamilyParams::l3n(3, f.one(), f.zero(), f.int(2) * f.q());
    assert!(morita_equivalent_params(&f, &l3, &l3q).unwrap());
    assert!(!morita_equivalent_params(
        &f,
        &FamilyParams::l1(3, f.one()),
        &FamilyParams::l2(3, f.one())
    )
    .unwrap());
    assert!(morita_equivalent_params(&f, &FamilyParams::l0(2), &FamilyParams::l0(2)).is_err());
}

#[test]
fn classification_examples() {
    let t = classify(3).unwrap();
    let rs = |i: usize| {
        t.families[i]
            .param_domain
            .iter()
            .map(|d| d.r)
            .collect::<Vec<_>>()
    };
    assert_eq!(rs(0), vec![Some(1), Some(3)]);
    assert_eq!(rs(1), vec![Some(3)]);
    let t = classify(9).unwrap();
    for dom in &t.families[3].param_domain {
        let eta = dom.params.iter().find(|p| p.name == "eta").unwrap();
        assert_eq!(eta.domain == "0", dom.r != Some(9));
    }
}

fn family_strategy() -> impl Strategy<Value = (usize, u64)> {
    (0..ALL_TAGS.len(), any::<u64>())
}

fn params_from(ctx: &Sl2Context, (t, seed): (usize, u64)) -> FamilyParams<Cyclo> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_family_params(ctx.field(), ALL_TAGS[t], &mut rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn families_are_comodule_algebras(fam in family_strategy()) {
        let ctx = ctx3();
        let p = params_from(&ctx, fam);
        let a = build_family(&ctx, &p).unwrap();
        prop_assert!(a.verify(&Mode::Exhaustive).passed());
        let d = morita_invariant_d(&a).unwrap();
        prop_assert_eq!(d.ratio * d.socle_dim, a.dim());
        prop_assert_eq!(a.coinvariants().dim(), 1);
        let b = deform_family(&ctx, &p).unwrap();
        prop_assert!(b.verify(&Mode::Exhaustive).passed());
        prop_assert_eq!(b.coaction_table(), a.coaction_table());
        prop_assert_eq!(loewy_filtration(&b).unwrap().layer_dims, loewy_filtration(&a).unwrap().layer_dims);
        let r = verify_deformed_presentation(&ctx, &p).unwrap();
        prop_assert!(r.passed(), "{:?}", r.first_failure());
    }

    #[test]
    fn morita_predicate_is_an_equivalence(a in family_strategy(), b in family_strategy()) {
        let ctx = ctx3();
        let f = ctx.field();
        let (p, p2) = (params_from(&ctx, a), params_from(&ctx, b));
        prop_assert!(morita_equivalent_params(f, &p, &p).unwrap());
        prop_assert_eq!(
            morita_equivalent_params(f, &p, &p2).unwrap(),
            morita_equivalent_params(f, &p2, &p).unwrap()
        );
        let c = canonical_params(f, &p).unwrap();
        prop_assert!(morita_equivalent_params(f, &p, &c).unwrap());
        prop_assert_eq!(canonical_params(f, &c).unwrap(), c.clone());
        let c2 = canonical_params(f, &p2).unwrap();
        prop_assert_eq!(c == c2, morita_equivalent_params(f, &p, &p2).unwrap());
    }

    #[test]
    fn phi_is_the_minimal_polynomial(al in -2i64..=2, bq in 0i64..3, xi in -3i64..=3) {
        let ctx = ctx3();
        let f = ctx.field();
        let (alpha, beta, xi) = (f.int(al), f.q_pow(bq), f.int(xi) + f.q());
        let a = deform_family(&ctx, &FamilyParams::l4(alpha.clone(), beta.clone(), xi.clone())).unwrap();
        let w = basis(a.index_of("W").unwrap());
        prop_assert_eq!(minimal_polynomial_of_element(a.algebra(), &w), phi_poly(f, &alpha, &beta, &xi));
    }
}
