use proptest::prelude::*;
use uqzoo::linalg::Poly;
use uqzoo::polyid::{
    chebyshev_t, chebyshev_t_recurrence, phi_poly, phi_polynomial, power_sum_p, power_sum_value,
    verify_chebyshev_closed_form, verify_chebyshev_identity, verify_min_pol_formula_consistency,
    verify_power_sums, MultiPoly,
};
use uqzoo::scalar::{rat, ratio, Rational};
use uqzoo::{CyclotomicField, Field};

fn z_poly(c: &[i64]) -> MultiPoly<Rational> {
    MultiPoly::from_poly("z", &Poly::new(c.iter().map(|&v| rat(v)).collect())).unwrap()
}

#[test]
fn power_sum_oracles() {
    let p1 = power_sum_p(1).unwrap();
    assert_eq!(p1, MultiPoly::var(&["s", "t"], "s").unwrap());
    let p2 = power_sum_p(2).unwrap();
    assert_eq!(p2.coeff(&[2, 0]), rat(1));
    assert_eq!(p2.coeff(&[0, 1]), rat(-2));
    assert_eq!(p2.len(), 2);
    let p3 = power_sum_p(3).unwrap();
    assert_eq!(p3.coeff(&[3, 0]), rat(1));
    assert_eq!(p3.coeff(&[1, 1]), rat(-3));
    assert_eq!(p3.len(), 2);
    assert!(power_sum_p(0).is_err());
}

#[test]
fn chebyshev_oracles() {
    assert_eq!(chebyshev_t(1).unwrap(), z_poly(&[0, 1]));
    assert_eq!(chebyshev_t(2).unwrap(), z_poly(&[-1, 0, 2]));
    assert_eq!(chebyshev_t(3).unwrap(), z_poly(&[0, -3, 0, 4]));
    assert!(chebyshev_t(0).is_err());
    assert!(verify_chebyshev_closed_form(12).unwrap().passed());
}

#[test]
fn phi_oracles() {
    for n in [3i64, 5, 7] {
        let f = CyclotomicField::new(n).unwrap();
        let xi = f.int(2) + f.q();
        let phi = phi_poly(&f, &f.zero(), &f.q(), &xi);
        assert_eq!(
            phi,
            Poly::monomial(f.one(), n as usize).sub(&Poly::constant(xi.clone()))
        );
    }
    let f = CyclotomicField::new(3).unwrap();
    let c = (f.q_pow(2) - f.one()).inv().unwrap();
    let xi = f.int(7);
    assert_eq!(
        phi_poly(&f, &f.one(), &f.one(), &xi),
        Poly::new(vec![-xi.clone(), f.int(3) * &c, f.zero(), f.one()])
    );
    let f = CyclotomicField::new(5).unwrap();
    let c = (f.q_pow(2) - f.one()).inv().unwrap();
    let expected = Poly::new(vec![
        -xi.clone(),
        f.int(5) * c.clone() * &c,
        f.zero(),
        f.int(5) * &c,
        f.zero(),
        f.one(),
    ]);
    let phi = phi_poly(&f, &f.one(), &f.one(), &f.int(7));
    assert_eq!(phi, expected);
    assert_eq!(
        phi_polynomial(&f, &f.one(), &f.one(), &f.int(7))
            .unwrap()
            .to_poly()
            .unwrap(),
        expected
    );
}

#[test]
fn product_identity_small_orders() {
    for n in 2..=7 {
        let r = verify_chebyshev_identity(n).unwrap();
        assert!(r.passed(), "n={n}: {:?}", r.first_failure());
    }
    assert!(verify_chebyshev_identity(1).is_err());
}

#[test]
fn power_sums_and_consistency() {
    assert!(verify_power_sums(11).unwrap().passed());
    for n in [3, 5, 7] {
        let f = CyclotomicField::new(n).unwrap();
        let r = verify_min_pol_formula_consistency(&f).unwrap();
        assert!(r.passed(), "N={n}: {:?}", r.first_failure());
    }
}

#[test]
fn variable_errors() {
    assert!(MultiPoly::<Rational>::var(&["s", "t"], "u").is_err());
    assert!(MultiPoly::<Rational>::zero(&["a", "b", "c", "d", "e"]).is_err());
}

fn arb_poly() -> impl Strategy<Value = MultiPoly<Rational>> {
    prop::collection::vec((0u32..3, 0u32..3, -3i64..=3), 0..5).prop_map(|terms| {
        let vars = ["u", "v"];
        let u = MultiPoly::var(&vars, "u").unwrap();
        let v = MultiPoly::var(&vars, "v").unwrap();
        terms
            .into_iter()
            .fold(MultiPoly::zero(&vars).unwrap(), |acc, (a, b, c)| {
                acc.add(&u.pow(a).mul(&v.pow(b)).scale(&rat(c)))
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn power_sum_identity(n in 1u32..16, a in -5i64..=5, b in 1i64..=4, c in -5i64..=5, d in 1i64..=4) {
        let (u, v) = (ratio(a, b), ratio(c, d));
        let s = u.clone() + &v;
        let t = u.clone() * &v;
        let want = u.pow_u(n as u64) + v.pow_u(n as u64);
        prop_assert_eq!(power_sum_value(n, &s, &t), want.clone());
        let p = power_sum_p(n as i64).unwrap();
        let vars = ["s", "t"];
        let at = p
            .substitute(&[
                MultiPoly::constant(&vars, s).unwrap(),
                MultiPoly::constant(&vars, t).unwrap(),
            ])
            .unwrap();
        prop_assert_eq!(at.coeff(&[0, 0]), want);
    }

    #[test]
    fn chebyshev_forms_agree(n in 1i64..24) {
        prop_assert_eq!(chebyshev_t(n).unwrap(), chebyshev_t_recurrence(n).unwrap());
    }

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert!(a.terms().all(|(_, c)| c != &rat(0)));
    }
}
