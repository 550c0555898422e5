use std::sync::Arc;

use crate::cyclofield::CyclotomicField;
use crate::error::{Error, Result};
use crate::hopf::{convolution_inverse, deform_hopf, BilinearForm, HopfAlgebraData};
use crate::report::VerificationReport;
use crate::scalar::Field;
use crate::sparse::{self, TensorVector, Vector};
use crate::Cyclo;
use num_traits::Zero;

use super::gr::{gr_uq_in, pbw_labels};
use super::sigma::sigma_in;

/// `u_q(sl2)` as the deformation `gr(u_q)^σ`, basis `Ẽ^i F^j K^k` labelled
/// `Et`, `F`, `K`; every defining relation is checked before returning.
pub fn build_uq(n: i64) -> Result<HopfAlgebraData<Cyclo>> {
    let field = CyclotomicField::new(n)?;
    let gr = gr_uq_in(&field);
    let sigma = sigma_in(&field);
    let sigma_inv = convolution_inverse(&sigma, &gr, n as usize)?;
    uq_from_parts(&field, &gr, &sigma, &sigma_inv)
}

pub fn uq_from_parts(
    field: &Arc<CyclotomicField>,
    gr: &HopfAlgebraData<Cyclo>,
    sigma: &BilinearForm<Cyclo>,
    sigma_inv: &BilinearForm<Cyclo>,
) -> Result<HopfAlgebraData<Cyclo>> {
    let mut uq = deform_hopf(gr, sigma, sigma_inv)?;
    uq.algebra_mut()
        .relabel(pbw_labels(field.order() as usize, ["Et", "F", "K"]));
    let report = verify_uq_relations(field, &uq);
    if let Some(c) = report.first_failure() {
        return Err(Error::RelationFailed(format!(
            "{}: {}",
            c.claim_id,
            c.witness.clone().unwrap_or_default()
        )));
    }
    Ok(uq)
}

struct Ctx<'a> {
    h: &'a HopfAlgebraData<Cyclo>,
}

impl Ctx<'_> {
    fn b(&self, label: &str) -> Vector<Cyclo> {
        sparse::basis(
            self.h
                .index_of(label)
                .unwrap_or_else(|| panic!("no basis element {label}")),
        )
    }
    fn mul(&self, a: &Vector<Cyclo>, b: &Vector<Cyclo>) -> Vector<Cyclo> {
        self.h.mul(a, b)
    }
    fn pow(&self, a: &Vector<Cyclo>, n: usize) -> Vector<Cyclo> {
        self.h.algebra().pow(a, n)
    }
    fn sc(&self, a: &Vector<Cyclo>, c: &Cyclo) -> Vector<Cyclo> {
        sparse::scale(a, c)
    }
    fn tensor(&self, a: &Vector<Cyclo>, b: &Vector<Cyclo>) -> TensorVector<Cyclo> {
        let mut t = TensorVector::new();
        for (i, x) in a {
            for (j, y) in b {
                sparse::add_term(&mut t, (*i, *j), x.mul_ref(y));
            }
        }
        t
    }
    fn show(&self, v: &Vector<Cyclo>) -> String {
        sparse::render(v, self.h.labels())
    }
    fn show_t(&self, t: &TensorVector<Cyclo>) -> String {
        sparse::render_tensor(t, self.h.labels(), self.h.labels())
    }
    fn eq(
        &self,
        r: &mut VerificationReport,
        id: &str,
        anchor: &str,
        lhs: Vector<Cyclo>,
        rhs: Vector<Cyclo>,
    ) {
        r.record(id, anchor, lhs == rhs, || {
            format!("lhs {} but rhs {}", self.show(&lhs), self.show(&rhs))
        });
    }
    fn eq_t(
        &self,
        r: &mut VerificationReport,
        id: &str,
        anchor: &str,
        lhs: TensorVector<Cyclo>,
        rhs: TensorVector<Cyclo>,
    ) {
        r.record(id, anchor, lhs == rhs, || {
            format!("lhs {} but rhs {}", self.show_t(&lhs), self.show_t(&rhs))
        });
    }
}

/// Every defining relation of `u_q` in both generating sets
/// `{Ẽ, F, K}` and `{E, F, K}` with `E = (q − q⁻¹)⁻¹ K Ẽ`.
pub fn verify_uq_relations(
    field: &Arc<CyclotomicField>,
    h: &HopfAlgebraData<Cyclo>,
) -> VerificationReport {
    let c = Ctx { h };
    let n = field.order() as usize;
    let mut r = VerificationReport::new();
    r.record(
        "uq.dimension",
        "dim u_q = N³",
        h.dim() == n * n * n,
        || format!("dimension {}", h.dim()),
    );
    r.record(
        "uq.grouplikes",
        "G(u_q) = <K> of order N",
        h.grouplikes().len() == n,
        || format!("{} grouplikes", h.grouplikes().len()),
    );

    let one = c.b("1");
    let et = c.b("Et");
    let f = c.b("F");
    let k = c.b("K");
    let kinv = c.pow(&k, n - 1);
    let q2 = field.q_pow(2);
    let qm2 = field.q_pow(-2);
    let zero = Vector::new();
    let qq = field.q() - field.q_pow(-1);
    let qq_inv = qq.inv().expect("q − q⁻¹ is nonzero for odd N");
    let e = c.sc(&c.mul(&k, &et), &qq_inv);

    c.eq(&mut r, "uq.K_order", "K^N = 1", c.pow(&k, n), one.clone());
    c.eq(
        &mut r,
        "uq.Et_nilpotent",
        "Ẽ^N = 0",
        c.pow(&et, n),
        zero.clone(),
    );
    c.eq(
        &mut r,
        "uq.F_nilpotent",
        "F^N = 0",
        c.pow(&f, n),
        zero.clone(),
    );
    c.eq(
        &mut r,
        "uq.K_Et",
        "K Ẽ = q² Ẽ K",
        c.mul(&k, &et),
        c.sc(&c.mul(&et, &k), &q2),
    );
    c.eq(
        &mut r,
        "uq.K_F",
        "K F = q⁻² F K",
        c.mul(&k, &f),
        c.sc(&c.mul(&f, &k), &qm2),
    );
    c.eq(
        &mut r,
        "uq.Et_F",
        "Ẽ F − q² F Ẽ = 1 − K⁻²",
        sparse::sub(&c.mul(&et, &f), &c.sc(&c.mul(&f, &et), &q2)),
        sparse::sub(&one, &c.mul(&kinv, &kinv)),
    );
    c.eq_t(
        &mut r,
        "uq.comul_Et",
        "Δ(Ẽ) = Ẽ⊗1 + K⁻¹⊗Ẽ",
        h.comul(&et),
        sparse::add(&c.tensor(&et, &one), &c.tensor(&kinv, &et)),
    );

    c.eq(
        &mut r,
        "uq.K_E",
        "K E = q² E K",
        c.mul(&k, &e),
        c.sc(&c.mul(&e, &k), &q2),
    );
    c.eq(&mut r, "uq.E_nilpotent", "E^N = 0", c.pow(&e, n), zero);
    c.eq(
        &mut r,
        "uq.E_F",
        "E F − F E = (K − K⁻¹)/(q − q⁻¹)",
        sparse::sub(&c.mul(&e, &f), &c.mul(&f, &e)),
        c.sc(&sparse::sub(&k, &kinv), &qq_inv),
    );
    c.eq_t(
        &mut r,
        "uq.comul_E",
        "Δ(E) = E⊗K + 1⊗E",
        h.comul(&e),
        sparse::add(&c.tensor(&e, &k), &c.tensor(&one, &e)),
    );
    c.eq_t(
        &mut r,
        "uq.comul_F",
        "Δ(F) = F⊗1 + K⁻¹⊗F",
        h.comul(&f),
        sparse::add(&c.tensor(&f, &one), &c.tensor(&kinv, &f)),
    );
    c.eq_t(
        &mut r,
        "uq.comul_K",
        "Δ(K) = K⊗K",
        h.comul(&k),
        c.tensor(&k, &k),
    );
    let counits = [h.counit_of(&k), h.counit_of(&e), h.counit_of(&f)];
    r.record(
        "uq.counit",
        "ε(K) = 1, ε(E) = ε(F) = 0",
        counits[0] == field.one() && counits[1].is_zero() && counits[2].is_zero(),
        || {
            format!(
                "ε(K), ε(E), ε(F) = {}, {}, {}",
                counits[0], counits[1], counits[2]
            )
        },
    );
    c.eq(
        &mut r,
        "uq.antipode_K",
        "S(K) = K⁻¹",
        h.antipode_of(&k),
        kinv.clone(),
    );
    c.eq(
        &mut r,
        "uq.antipode_E",
        "S(E) = −E K⁻¹",
        h.antipode_of(&e),
        c.sc(&c.mul(&e, &kinv), &-field.one()),
    );
    c.eq(
        &mut r,
        "uq.antipode_F",
        "S(F) = −K F",
        h.antipode_of(&f),
        c.sc(&c.mul(&k, &f), &-field.one()),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_hopf;
    use crate::report::Mode;

    #[test]
    fn deformed_products_of_generators() {
        let field = CyclotomicField::new(3).unwrap();
        let gr = gr_uq_in(&field);
        let s = sigma_in(&field);
        let si = convolution_inverse(&s, &gr, 3).unwrap();
        let d = deform_hopf(&gr, &s, &si).unwrap();
        let b = |l: &str| sparse::basis::<Cyclo>(gr.index_of(l).unwrap());
        // x * y = 1 + xy − g⁻², y * x = yx
        let expected = sparse::sub(&sparse::add(&b("1"), &gr.mul(&b("x"), &b("y"))), &b("g"));
        assert_eq!(d.mul(&b("x"), &b("y")), expected);
        assert_eq!(d.mul(&b("y"), &b("x")), gr.mul(&b("y"), &b("x")));
        assert_eq!(d.mul(&b("g"), &b("x")), gr.mul(&b("g"), &b("x")));
        assert_eq!(d.mul(&b("x"), &b("g")), gr.mul(&b("x"), &b("g")));
    }

    #[test]
    fn uq_at_3() {
        let h = build_uq(3).unwrap();
        let rep = verify_hopf(&h, &Mode::Exhaustive);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        assert_eq!(h.labels()[1], "K");
    }

    #[test]
    fn identity_deformation_keeps_table() {
        let field = CyclotomicField::new(3).unwrap();
        let gr = gr_uq_in(&field);
        let unit = BilinearForm::counit(&gr);
        let d = deform_hopf(&gr, &unit, &unit).unwrap();
        assert_eq!(d.algebra(), gr.algebra());
    }
}
