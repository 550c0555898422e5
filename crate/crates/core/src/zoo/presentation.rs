use crate::error::Result;
use crate::hopf::ComoduleAlgebra;
use crate::linalg::minimal_polynomial_of_element;
use crate::polyid::phi_poly;
use crate::report::VerificationReport;
use crate::scalar::Field;
use crate::sparse::{self, TensorVector, Vector};
use crate::uqsl2::Sl2Context;
use crate::Cyclo;

use super::build::{build_family, deform_family, FamilyShape};
use super::params::{FamilyParams, FamilyTag};

struct Checker<'a> {
    a: &'a ComoduleAlgebra<Cyclo>,
    prefix: String,
    report: VerificationReport,
}

impl Checker<'_> {
    fn eq(&mut self, id: &str, anchor: &str, lhs: Vector<Cyclo>, rhs: Vector<Cyclo>) {
        let labels = self.a.labels();
        self.report
            .record(&format!("{}.{id}", self.prefix), anchor, lhs == rhs, || {
                format!(
                    "lhs {} but rhs {}",
                    sparse::render(&lhs, labels),
                    sparse::render(&rhs, labels)
                )
            });
    }

    fn eq_t(&mut self, id: &str, anchor: &str, lhs: TensorVector<Cyclo>, rhs: TensorVector<Cyclo>) {
        let (hl, al) = (self.a.over().labels(), self.a.labels());
        self.report
            .record(&format!("{}.{id}", self.prefix), anchor, lhs == rhs, || {
                format!(
                    "lhs {} but rhs {}",
                    sparse::render_tensor(&lhs, hl, al),
                    sparse::render_tensor(&rhs, hl, al)
                )
            });
    }
}

fn tensor(h: &Vector<Cyclo>, a: &Vector<Cyclo>) -> TensorVector<Cyclo> {
    let mut t = TensorVector::new();
    for (i, x) in h {
        for (j, y) in a {
            sparse::add_term(&mut t, (*i, *j), x.mul_ref(y));
        }
    }
    t
}

/// Checks the defining relations and the coaction on generators of a
/// family algebra `a` built from `p`. With `deformed`, the relations are
/// those of the deformation over `u_q`.
fn check_relations(
    ctx: &Sl2Context,
    a: &ComoduleAlgebra<Cyclo>,
    p: &FamilyParams<Cyclo>,
    deformed: bool,
) -> Result<VerificationReport> {
    let n = ctx.n();
    let field = ctx.field();
    let shape = FamilyShape::of(p, n)?;
    let prefix = if deformed {
        format!("deformed.{}", p.family)
    } else {
        p.family.to_string()
    };
    let mut c = Checker {
        a,
        prefix,
        report: VerificationReport::new(),
    };
    let alg = a.algebra();
    let one = a.one();
    let zero_or = |o: &Option<Cyclo>| o.clone().unwrap_or_else(|| field.zero());
    let h = a.over();
    let [hx, hy, hg] = [0, 1, 2].map(|i| sparse::basis::<Cyclo>(h.generators()[i]));
    let (xn, yn, gn) = if deformed {
        ("Ẽ", "F", "K")
    } else {
        ("x", "y", "g")
    };
    let h_ginv = h.algebra().pow(&hg, n - 1);

    if p.family == FamilyTag::L4 {
        let w = sparse::basis(shape.index(1, 0, 0));
        let (alpha, beta, xi) = (zero_or(&p.alpha), zero_or(&p.beta), zero_or(&p.xi));
        if deformed {
            let phi = phi_poly(field, &alpha, &beta, &xi);
            c.eq(
                "phi_W",
                "φ_{α,β,ξ}(W) = 0",
                alg.eval_poly(phi.coeffs(), &w),
                Vector::new(),
            );
            let m = minimal_polynomial_of_element(alg, &w);
            let ok = m == phi;
            c.report.record(
                &format!("{}.minpoly_W", c.prefix),
                "minimal polynomial of W is φ_{α,β,ξ}",
                ok,
                || format!("minimal polynomial {m:?} but φ = {phi:?}"),
            );
        } else {
            c.eq(
                "W_power",
                "W^N = ξ",
                alg.pow(&w, n),
                sparse::scale(&one, &xi),
            );
        }
        let lin = sparse::add(&sparse::scale(&hx, &alpha), &sparse::scale(&hy, &beta));
        let anchor = format!("δ(W) = (α{xn} + β{yn})⊗1 + {gn}⁻¹⊗W");
        c.eq_t(
            "coaction_W",
            &anchor,
            a.coact(&w),
            sparse::add(&tensor(&lin, &one), &tensor(&h_ginv, &w)),
        );
        return Ok(c.report);
    }

    let r = shape.r;
    let g = sparse::basis(shape.index(0, 0, 1 % r));
    let g_step = (n / r) as i64;
    c.eq("G_order", "G^r = 1", alg.pow(&g, r), one.clone());
    let g_coact = h.algebra().pow(&hg, (n / r) % n);
    c.eq_t(
        "coaction_G",
        &format!("δ(G) = {gn}^{{N/r}}⊗G"),
        a.coact(&g),
        tensor(&g_coact, &g),
    );
    let omega = field.q_pow(2 * g_step);
    let omega_inv = field.q_pow(-2 * g_step);

    let x = shape
        .has_x()
        .then(|| sparse::basis::<Cyclo>(shape.index(1, 0, 0)));
    let y = shape
        .has_y()
        .then(|| sparse::basis::<Cyclo>(shape.index(0, 1, 0)));
    if let Some(x) = &x {
        c.eq(
            "X_power",
            "X^N = ξ",
            alg.pow(x, n),
            sparse::scale(&one, &zero_or(&p.xi)),
        );
        c.eq(
            "GX",
            "G X = q^{2N/r} X G",
            alg.mul(&g, x),
            sparse::scale(&alg.mul(x, &g), &omega),
        );
        let anchor = format!("δ(X) = {xn}⊗1 + {gn}⁻¹⊗X");
        c.eq_t(
            "coaction_X",
            &anchor,
            a.coact(x),
            sparse::add(&tensor(&hx, &one), &tensor(&h_ginv, x)),
        );
    }
    if let Some(y) = &y {
        c.eq(
            "Y_power",
            "Y^N = ζ",
            alg.pow(y, n),
            sparse::scale(&one, &zero_or(&p.zeta)),
        );
        c.eq(
            "GY",
            "G Y = q^{−2N/r} Y G",
            alg.mul(&g, y),
            sparse::scale(&alg.mul(y, &g), &omega_inv),
        );
        let anchor = format!("δ(Y) = {yn}⊗1 + {gn}⁻¹⊗Y");
        c.eq_t(
            "coaction_Y",
            &anchor,
            a.coact(y),
            sparse::add(&tensor(&hy, &one), &tensor(&h_ginv, y)),
        );
    }
    if let (Some(x), Some(y)) = (&x, &y) {
        let eta = zero_or(&p.eta);
        let g_inv2 = alg.pow(&g, (-2i64).rem_euclid(r as i64) as usize);
        let mut rhs = sparse::scale(&g_inv2, &-eta);
        if deformed {
            rhs = sparse::add(&rhs, &one);
        }
        let lhs = sparse::sub(
            &alg.mul(x, y),
            &sparse::scale(&alg.mul(y, x), &field.q_pow(2)),
        );
        let anchor = match (deformed, p.family) {
            (true, FamilyTag::L3N) => "X Y − q² Y X = 1 − η G⁻²",
            (true, _) => "X Y − q² Y X = 1",
            (false, FamilyTag::L3N) => "X Y − q² Y X = −η G⁻²",
            (false, _) => "X Y − q² Y X = 0",
        };
        c.eq("XY", anchor, lhs, rhs);
    }
    Ok(c.report)
}

/// The defining relations and generator coaction of `build_family(p)`.
pub fn verify_family_relations(
    ctx: &Sl2Context,
    p: &FamilyParams<Cyclo>,
) -> Result<VerificationReport> {
    let a = build_family(ctx, p)?;
    check_relations(ctx, &a, p, false)
}

/// The presentation of the deformed family over `u_q`: relations evaluated
/// with the twisted product, and `δ(X) = Ẽ⊗1 + K⁻¹⊗X` and its analogues.
/// For `L0`, `L1`, `L2` the deformed table also equals the original one.
pub fn verify_deformed_presentation(
    ctx: &Sl2Context,
    p: &FamilyParams<Cyclo>,
) -> Result<VerificationReport> {
    let l = build_family(ctx, p)?;
    let a = deform_family(ctx, p)?;
    verify_deformed_algebra(ctx, &l, &a, p)
}

/// As [`verify_deformed_presentation`] with both algebras supplied.
pub fn verify_deformed_algebra(
    ctx: &Sl2Context,
    original: &ComoduleAlgebra<Cyclo>,
    deformed: &ComoduleAlgebra<Cyclo>,
    p: &FamilyParams<Cyclo>,
) -> Result<VerificationReport> {
    let mut r = check_relations(ctx, deformed, p, true)?;
    if matches!(p.family, FamilyTag::L0 | FamilyTag::L1 | FamilyTag::L2) {
        let same = original.algebra().table() == deformed.algebra().table();
        r.record(
            &format!("deformed.{}.table_unchanged", p.family),
            "the deformed product equals the original one",
            same,
            || {
                let i = original
                    .algebra()
                    .table()
                    .iter()
                    .zip(deformed.algebra().table())
                    .position(|(a, b)| a != b)
                    .unwrap_or(0);
                let d = original.dim();
                let labels = original.labels();
                format!("products differ at {}*{}", labels[i / d], labels[i % d])
            },
        );
    }
    let same_coaction = original.coaction_table() == deformed.coaction_table();
    r.record(
        &format!("deformed.{}.coaction_unchanged", p.family),
        "the deformation keeps the coaction table",
        same_coaction,
        || "coaction tables differ".into(),
    );
    Ok(r)
}
