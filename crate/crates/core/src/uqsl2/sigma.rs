use std::sync::Arc;

use crate::cyclofield::{q_factorial, CyclotomicField};
use crate::error::{Error, Result};
use crate::hopf::{q_exponential, BilinearForm, HopfAlgebraData, LinearFunctional};
use crate::report::{Mode, VerificationReport};
use crate::scalar::Field;
use crate::Cyclo;
use num_traits::{One, Zero};

use super::gr::PbwIndex;

/// The functionals `α`, `ξ₁`, `ξ₂` on `gr(u_q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualFunctionals {
    pub alpha: LinearFunctional<Cyclo>,
    pub xi1: LinearFunctional<Cyclo>,
    pub xi2: LinearFunctional<Cyclo>,
}

fn order_of(h: &HopfAlgebraData<Cyclo>) -> usize {
    let n = (h.dim() as f64).cbrt().round() as usize;
    assert_eq!(n * n * n, h.dim(), "not a PBW basis of gr(u_q)");
    n
}

/// `α = δ_{i0} δ_{j0} q^{−2k}`, `ξ₁ = δ_{i1} δ_{j0} q^{−2k}`, `ξ₂ = δ_{i0} δ_{j1}`.
pub fn build_dual_functionals(
    field: &Arc<CyclotomicField>,
    h: &HopfAlgebraData<Cyclo>,
) -> DualFunctionals {
    let n = order_of(h);
    let at = |pred: fn(&PbwIndex) -> bool, twist: bool| {
        LinearFunctional::from_fn(h.dim(), |s| {
            let p = PbwIndex::from_index(s, n);
            if !pred(&p) {
                field.zero()
            } else if twist {
                field.q_pow(-2 * p.k as i64)
            } else {
                field.one()
            }
        })
    };
    DualFunctionals {
        alpha: at(|p| p.i == 0 && p.j == 0, true),
        xi1: at(|p| p.i == 1 && p.j == 0, true),
        xi2: at(|p| p.i == 0 && p.j == 1, false),
    }
}

/// The closed-form cocycle
/// `σ(x^a y^b g^c, x^d y^e g^f) = δ_{a,e} δ_{b,0} δ_{d,0} (a)_{q²}! q^{−2ac}`.
pub fn build_sigma(n: i64) -> Result<BilinearForm<Cyclo>> {
    let field = CyclotomicField::new(n)?;
    Ok(sigma_in(&field))
}

pub fn sigma_in(field: &Arc<CyclotomicField>) -> BilinearForm<Cyclo> {
    let n = field.order() as usize;
    let q2 = field.q_pow(2);
    let fact: Vec<Cyclo> = (0..n)
        .map(|m| q_factorial(m as i64, &q2).expect("q² nonzero"))
        .collect();
    let mut rows = vec![Vec::new(); n * n * n];
    for (a, fa) in fact.iter().enumerate() {
        for c in 0..n {
            let left = PbwIndex::new(a, 0, c).to_index(n);
            let value = fa.clone() * field.q_pow(-2 * (a * c) as i64);
            for f in 0..n {
                rows[left].push((PbwIndex::new(0, a, f).to_index(n), value.clone()));
            }
        }
    }
    BilinearForm::from_rows(rows).expect("sorted rows")
}

/// `exp_{q²}(ξ₁ ⊗ ξ₂)` under convolution.
pub fn sigma_via_exponential(
    field: &Arc<CyclotomicField>,
    h: &HopfAlgebraData<Cyclo>,
) -> Result<BilinearForm<Cyclo>> {
    let d = build_dual_functionals(field, h);
    q_exponential(&d.xi1.tensor(&d.xi2), &field.q_pow(2), order_of(h), h)
}

fn first_mismatch(
    lhs: &LinearFunctional<Cyclo>,
    rhs: &LinearFunctional<Cyclo>,
    labels: &[String],
) -> Option<String> {
    (0..lhs.dim())
        .find(|&s| lhs.at(s) != rhs.at(s))
        .map(|s| format!("at {}: {} vs {}", labels[s], lhs.at(s), rhs.at(s)))
}

/// Relations among `α, ξ₁, ξ₂` in the dual algebra, the power formulas for
/// `ξ₁^m`, `ξ₂^m`, and `ξ₁^N = ξ₂^N = 0`.
pub fn verify_dual_relations(
    field: &Arc<CyclotomicField>,
    h: &HopfAlgebraData<Cyclo>,
) -> Result<VerificationReport> {
    let n = order_of(h);
    let d = build_dual_functionals(field, h);
    let q2 = field.q_pow(2);
    let labels = h.labels();
    let mut r = VerificationReport::new();

    let commute = |a: &LinearFunctional<Cyclo>,
                   b: &LinearFunctional<Cyclo>,
                   c: &Cyclo|
     -> Result<Option<String>> {
        let ab = a.convolve(b, h)?;
        let ba = b.convolve(a, h)?.scale(c);
        Ok(first_mismatch(&ab, &ba, labels))
    };
    let w = commute(&d.alpha, &d.xi1, &q2)?;
    r.record(
        "dual.alpha_xi1",
        "α ξ₁ = q² ξ₁ α",
        w.is_none(),
        || w.unwrap_or_default(),
    );
    let w = commute(&d.alpha, &d.xi2, &q2)?;
    r.record(
        "dual.alpha_xi2",
        "α ξ₂ = q² ξ₂ α",
        w.is_none(),
        || w.unwrap_or_default(),
    );
    let w = commute(&d.xi1, &d.xi2, &field.one())?;
    r.record(
        "dual.xi1_xi2",
        "ξ₁ ξ₂ = ξ₂ ξ₁",
        w.is_none(),
        || w.unwrap_or_default(),
    );

    let mut p1 = LinearFunctional::counit(h);
    let mut p2 = LinearFunctional::counit(h);
    let (mut w1, mut w2) = (None, None);
    for m in 0..n {
        let fact = q_factorial(m as i64, &q2)?;
        let e1 = LinearFunctional::from_fn(h.dim(), |s| {
            let p = PbwIndex::from_index(s, n);
            if p.i == m && p.j == 0 {
                fact.clone() * field.q_pow(-2 * (p.k * m) as i64)
            } else {
                field.zero()
            }
        });
        let e2 = LinearFunctional::from_fn(h.dim(), |s| {
            let p = PbwIndex::from_index(s, n);
            if p.i == 0 && p.j == m {
                fact.clone()
            } else {
                field.zero()
            }
        });
        if w1.is_none() {
            w1 = first_mismatch(&p1, &e1, labels).map(|s| format!("m={m}, {s}"));
        }
        if w2.is_none() {
            w2 = first_mismatch(&p2, &e2, labels).map(|s| format!("m={m}, {s}"));
        }
        p1 = p1.convolve(&d.xi1, h)?;
        p2 = p2.convolve(&d.xi2, h)?;
    }
    r.record(
        "dual.xi1_power",
        "⟨ξ₁^m, x^i y^j g^k⟩ = δ_{i,m} δ_{j,0} (m)! q^{−2km}",
        w1.is_none(),
        || w1.unwrap_or_default(),
    );
    r.record(
        "dual.xi2_power",
        "⟨ξ₂^m, x^i y^j g^k⟩ = δ_{i,0} δ_{j,m} (m)!",
        w2.is_none(),
        || w2.unwrap_or_default(),
    );
    let zero = LinearFunctional::zero(h.dim());
    let w = first_mismatch(&p1, &zero, labels)
        .map(|s| format!("ξ₁^N {s}"))
        .or_else(|| first_mismatch(&p2, &zero, labels).map(|s| format!("ξ₂^N {s}")));
    r.record(
        "dual.nilpotent",
        "ξ₁^N = ξ₂^N = 0",
        w.is_none(),
        || w.unwrap_or_default(),
    );
    Ok(r)
}

/// Linear combination of pure tensors `f₁ ⊗ f₂ ⊗ f₃` of functionals, an
/// element of the dual of `H ⊗ H ⊗ H`.
#[derive(Clone, Debug)]
struct TripleTensor {
    terms: Vec<(Cyclo, [LinearFunctional<Cyclo>; 3])>,
}

impl TripleTensor {
    fn pure(c: Cyclo, f: [LinearFunctional<Cyclo>; 3]) -> Self {
        TripleTensor {
            terms: vec![(c, f)],
        }
    }

    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        TripleTensor { terms }
    }

    fn scale(&self, c: &Cyclo) -> Self {
        TripleTensor {
            terms: self
                .terms
                .iter()
                .map(|(d, f)| (d.clone() * c, f.clone()))
                .collect(),
        }
    }

    /// Legwise convolution product.
    fn mul(&self, other: &Self, h: &HopfAlgebraData<Cyclo>) -> Result<Self> {
        let mut terms = Vec::new();
        for (c, f) in &self.terms {
            for (d, g) in &other.terms {
                let legs = [
                    f[0].convolve(&g[0], h)?,
                    f[1].convolve(&g[1], h)?,
                    f[2].convolve(&g[2], h)?,
                ];
                if legs.iter().any(LinearFunctional::is_zero) {
                    continue;
                }
                terms.push((c.clone() * d, legs));
            }
        }
        Ok(TripleTensor { terms })
    }

    fn eval(&self, t: [usize; 3]) -> Cyclo {
        let mut acc = Cyclo::zero();
        for (c, f) in &self.terms {
            let v = f[0].at(t[0]);
            if v.is_zero() {
                continue;
            }
            acc += c.clone() * v * f[1].at(t[1]) * f[2].at(t[2]);
        }
        acc
    }

    fn exp(&self, lambda: &Cyclo, n: usize, h: &HopfAlgebraData<Cyclo>) -> Result<Self> {
        let one = LinearFunctional::counit(h);
        let mut acc = TripleTensor::pure(Cyclo::one(), [one.clone(), one.clone(), one]);
        let mut power = acc.clone();
        for r in 1..n {
            power = power.mul(self, h)?;
            let inv = q_factorial(r as i64, lambda)?
                .inv()
                .ok_or(Error::DivisionByZero)?;
            acc = acc.add(&power.scale(&inv));
        }
        Ok(acc)
    }
}

/// The addition law `exp(A + B) = exp(A) exp(B)` for `BA = q² AB` on the
/// pairs of pure tensors used in the cocycle argument, together with the
/// commutation hypotheses, evaluated on basis triples of `H^{⊗3}`.
pub fn verify_exponential_addition(
    field: &Arc<CyclotomicField>,
    h: &HopfAlgebraData<Cyclo>,
    mode: &Mode,
) -> Result<VerificationReport> {
    let n = order_of(h);
    let d = build_dual_functionals(field, h);
    let eps = LinearFunctional::counit(h);
    let one = field.one();
    let q2 = field.q_pow(2);
    let triple =
        |a: &LinearFunctional<Cyclo>, b: &LinearFunctional<Cyclo>, c: &LinearFunctional<Cyclo>| {
            TripleTensor::pure(one.clone(), [a.clone(), b.clone(), c.clone()])
        };
    let e_x_x = triple(&eps, &d.xi1, &d.xi2);
    let x_x_e = triple(&d.xi1, &d.xi2, &eps);
    let x_a_x = triple(&d.xi1, &d.alpha, &d.xi2);
    let cases = mode.tuples::<3>(h.dim());
    let labels = h.labels();
    let show = |t: &[usize; 3]| format!("({}, {}, {})", labels[t[0]], labels[t[1]], labels[t[2]]);
    let mut r = VerificationReport::new();

    let pairs = [
        (
            "exp_addition.e_xi1_xi2",
            "ε⊗ξ₁⊗ξ₂ and ξ₁⊗α⊗ξ₂",
            &e_x_x,
            &x_a_x,
        ),
        (
            "exp_addition.xi1_xi2_e",
            "ξ₁⊗ξ₂⊗ε and ξ₁⊗α⊗ξ₂",
            &x_x_e,
            &x_a_x,
        ),
    ];
    for (id, anchor, a, b) in pairs {
        let ab = a.mul(b, h)?;
        let ba = b.mul(a, h)?;
        r.sweep(
            &format!("{id}.q_commute"),
            &format!("BA = q²AB for {anchor}"),
            &cases,
            |t| {
                let (x, y) = (ba.eval(*t), ab.eval(*t) * &q2);
                (x != y).then(|| format!("{}: {x} vs {y}", show(t)))
            },
        );
        let lhs = a.add(b).exp(&q2, n, h)?;
        let rhs = a.exp(&q2, n, h)?.mul(&b.exp(&q2, n, h)?, h)?;
        r.sweep(
            id,
            &format!("exp(A+B) = exp(A) exp(B) for {anchor}"),
            &cases,
            |t| {
                let (x, y) = (lhs.eval(*t), rhs.eval(*t));
                (x != y).then(|| format!("{}: {x} vs {y}", show(t)))
            },
        );
    }
    let ab = x_x_e.mul(&e_x_x, h)?;
    let ba = e_x_x.mul(&x_x_e, h)?;
    r.sweep(
        "exp_addition.commuting_legs",
        "ξ₁⊗ξ₂⊗ε and ε⊗ξ₁⊗ξ₂ commute",
        &cases,
        |t| {
            let (x, y) = (ab.eval(*t), ba.eval(*t));
            (x != y).then(|| format!("{}: {x} vs {y}", show(t)))
        },
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{convolution_inverse, verify_hopf_2cocycle};
    use crate::uqsl2::gr_uq_in;

    fn setup(n: i64) -> (Arc<CyclotomicField>, HopfAlgebraData<Cyclo>) {
        let f = CyclotomicField::new(n).unwrap();
        let h = gr_uq_in(&f);
        (f, h)
    }

    #[test]
    fn functional_values() {
        let (f, h) = setup(3);
        let d = build_dual_functionals(&f, &h);
        let i = |l: &str| h.index_of(l).unwrap();
        assert_eq!(d.xi1.at(i("x")), &f.one());
        assert_eq!(d.xi2.at(i("y*g")), &f.one());
        assert_eq!(d.alpha.at(i("g")), &f.q_pow(-2));
    }

    #[test]
    fn sigma_values_and_exponential() {
        let (f, h) = setup(3);
        let s = sigma_in(&f);
        let i = |l: &str| h.index_of(l).unwrap();
        assert_eq!(s.get(i("x"), i("y")), f.one());
        assert_eq!(s.get(i("x^2"), i("y^2")), f.one() + f.q_pow(2));
        assert!(s.get(i("y"), i("x")).is_zero());
        assert_eq!(s.get(i("x*g"), i("y")), f.q_pow(-2));
        assert_eq!(sigma_via_exponential(&f, &h).unwrap(), s);
    }

    #[test]
    fn sigma_inverse_first_order_term() {
        let (f, h) = setup(3);
        let s = sigma_in(&f);
        let inv = convolution_inverse(&s, &h, 3).unwrap();
        let i = |l: &str| h.index_of(l).unwrap();
        assert_eq!(inv.get(i("x"), i("y")), -f.one());
        let unit = BilinearForm::counit(&h);
        assert_eq!(s.convolve(&inv, &h).unwrap(), unit);
        assert_eq!(inv.convolve(&s, &h).unwrap(), unit);
    }

    #[test]
    fn sigma_is_cocycle_at_3() {
        let (f, h) = setup(3);
        let rep = verify_hopf_2cocycle(&sigma_in(&f), &h, &Mode::Exhaustive);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn dual_relations() {
        for n in [3, 5] {
            let (f, h) = setup(n);
            let rep = verify_dual_relations(&f, &h).unwrap();
            assert!(rep.passed(), "{:?}", rep.first_failure());
        }
    }

    #[test]
    fn xi1_cubed_on_x_cubed() {
        let (f, h) = setup(5);
        let d = build_dual_functionals(&f, &h);
        let p = d.xi1.pow(3, &h).unwrap();
        let q2 = f.q_pow(2);
        assert_eq!(
            p.at(h.index_of("x^3").unwrap()),
            &q_factorial(3, &q2).unwrap()
        );
    }

    #[test]
    fn exponential_addition_law() {
        let (f, h) = setup(3);
        let rep = verify_exponential_addition(&f, &h, &Mode::Exhaustive).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }
}
