use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use uqzoo::export::{
    export_comodule, export_form, export_hopf, from_json, params_doc, to_json, Importer,
};
use uqzoo::report::Mode;
use uqzoo::sample::{random_family_params, ALL_TAGS};
use uqzoo::uqsl2::Sl2Context;
use uqzoo::zoo::{build_family, deform_family, FamilyParams};

#[test]
fn hopf_round_trip_is_bit_exact() {
    let ctx = Sl2Context::new(3).unwrap();
    for h in [ctx.gr(), ctx.uq().unwrap()] {
        let doc = export_hopf(3, h);
        assert_eq!(doc.basis.len(), 27);
        let json = to_json(&doc).unwrap();
        let back = from_json(&json).unwrap();
        assert_eq!(back, doc);
        let imported = Importer::for_doc(&back).unwrap().hopf(&back).unwrap();
        assert_eq!(imported.algebra().table(), h.algebra().table());
        assert_eq!(imported.coalgebra().table(), h.coalgebra().table());
        assert_eq!(imported.antipode(), h.antipode());
        assert_eq!(to_json(&export_hopf(3, &imported)).unwrap(), json);
        assert!(uqzoo::hopf::verify_hopf(
            &imported,
            &Mode::Sampled {
                count: 500,
                seed: 1
            }
        )
        .passed());
    }
}

#[test]
fn form_round_trip() {
    let ctx = Sl2Context::new(5).unwrap();
    let doc = export_form(5, ctx.gr().labels(), ctx.sigma());
    let json = to_json(&doc).unwrap();
    let back = from_json(&json).unwrap();
    let s = Importer::for_doc(&back).unwrap().form(&back).unwrap();
    assert_eq!(s.rows(), ctx.sigma().rows());
}

#[test]
fn kind_is_checked() {
    let ctx = Sl2Context::new(3).unwrap();
    let doc = export_hopf(3, ctx.gr());
    let imp = Importer::for_doc(&doc).unwrap();
    assert!(imp.form(&doc).is_err());
    assert!(imp.comodule(&doc).is_err());
    assert!(from_json("{\"N\": 3}").is_err());
    let mut bad = doc.clone();
    bad.n = 4;
    assert!(Importer::for_doc(&bad).is_err());
}

#[test]
fn family_params_round_trip() {
    let ctx = Sl2Context::new(3).unwrap();
    let f = ctx.field();
    let p = FamilyParams::l3n(3, f.q() - f.int(1), f.zero(), f.q_pow(2));
    let doc = params_doc(&p);
    assert_eq!(Importer::new(f.clone()).params(&doc).unwrap(), p);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn comodule_round_trip(t in 0..ALL_TAGS.len(), seed in any::<u64>(), deformed in any::<bool>()) {
        let ctx = Sl2Context::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_family_params(ctx.field(), ALL_TAGS[t], &mut rng);
        let a = if deformed { deform_family(&ctx, &p).unwrap() } else { build_family(&ctx, &p).unwrap() };
        let json = to_json(&export_comodule(3, &a)).unwrap();
        let doc = from_json(&json).unwrap();
        let back = Importer::for_doc(&doc).unwrap().comodule(&doc).unwrap();
        prop_assert_eq!(back.algebra().table(), a.algebra().table());
        prop_assert_eq!(back.coaction_table(), a.coaction_table());
        prop_assert_eq!(back.params(), a.params());
        prop_assert_eq!(to_json(&export_comodule(3, &back)).unwrap(), json);
    }
}
