use std::sync::Arc;

use num_traits::Zero;

use crate::cyclofield::CyclotomicField;
use crate::error::{Error, Result};
use crate::hopf::{check_comodule_algebra_morphism, ComoduleAlgebra, MorphismKind};
use crate::linalg::{minimal_polynomial_of_element, Matrix, Poly};
use crate::polyid::{min_pol_formula, phi_poly, MultiPoly};
use crate::report::VerificationReport;
use crate::scalar::Field;
use crate::sparse::{self, Vector};
use crate::uqsl2::Sl2Context;
use crate::Cyclo;

use super::build::deform_family;
use super::params::FamilyParams;

/// `p` as a string in the variable `T`, highest degree first.
pub fn render_poly(p: &Poly<Cyclo>) -> String {
    MultiPoly::from_poly("T", p)
        .map(|m| m.to_string())
        .unwrap_or_default()
}

/// `αẼ + βF + γK⁻¹` in `u_q`.
pub fn uq_linear_element(
    ctx: &Sl2Context,
    alpha: &Cyclo,
    beta: &Cyclo,
    gamma: &Cyclo,
) -> Result<Vector<Cyclo>> {
    let uq = ctx.uq()?;
    let gens = uq.generators();
    let k_inv = uq.algebra().pow(&sparse::basis(gens[2]), ctx.n() - 1);
    let mut w = sparse::scale(&sparse::basis(gens[0]), alpha);
    sparse::axpy(&mut w, beta, &sparse::basis(gens[1]));
    sparse::axpy(&mut w, gamma, &k_inv);
    Ok(w)
}

/// `β = uv(1 − q²)/α` and `ξ = u^N + v^N`.
pub fn a4_params_from_uv(
    field: &Arc<CyclotomicField>,
    alpha: &Cyclo,
    u: &Cyclo,
    v: &Cyclo,
) -> Result<(Cyclo, Cyclo)> {
    let a_inv = alpha.inv().ok_or_else(|| {
        Error::InvalidArgument("alpha must be nonzero; swap the roles of x and y".into())
    })?;
    let beta = u.clone() * v * (field.one() - field.q_pow(2)) * a_inv;
    let n = field.order() as u64;
    Ok((beta, u.pow_u(n) + v.pow_u(n)))
}

/// The deformed `L4(α, β; ξ)` together with its embedding into `u_q`.
pub struct A4Embedding {
    pub algebra: ComoduleAlgebra<Cyclo>,
    /// Column `a` is the image of the basis element `W^a` of the algebra.
    pub map: Matrix<Cyclo>,
    pub beta: Cyclo,
    pub xi: Cyclo,
    pub kind: MorphismKind,
    pub report: VerificationReport,
}

/// `f(W) = αẼ + βF + (u + v)K⁻¹` with `β`, `ξ` derived from `(α, u, v)`;
/// checked to be an injective comodule-algebra map with `N`-dimensional image.
pub fn embed_a4_into_uq(
    ctx: &Sl2Context,
    alpha: &Cyclo,
    u: &Cyclo,
    v: &Cyclo,
) -> Result<A4Embedding> {
    let field = ctx.field();
    let n = ctx.n();
    let (beta, xi) = a4_params_from_uv(field, alpha, u, v)?;
    let algebra = deform_family(
        ctx,
        &FamilyParams::l4(alpha.clone(), beta.clone(), xi.clone()),
    )?;
    let uq = ctx.uq()?;
    let fw = uq_linear_element(ctx, alpha, &beta, &(u.clone() + v))?;

    // W^{*k} in the basis of the deformed algebra, and f(W)^k in u_q
    let w = sparse::basis(1);
    let mut powers = Matrix::zeros(n, n);
    let mut images = Vec::with_capacity(n);
    let (mut wk, mut fk) = (algebra.one(), uq.one());
    for k in 0..n {
        for (i, c) in &wk {
            powers.set(*i, k, c.clone());
        }
        images.push(fk.clone());
        wk = algebra.mul(&wk, &w);
        fk = uq.mul(&fk, &fw);
    }
    let mut map = Matrix::zeros(uq.dim(), n);
    for a in 0..n {
        let mut e = vec![field.zero(); n];
        e[a] = field.one();
        let coeffs = powers
            .solve(&e)?
            .ok_or_else(|| Error::RelationFailed("powers of W do not span the algebra".into()))?;
        let mut img = Vector::new();
        for (c, fk) in coeffs.iter().zip(&images) {
            sparse::axpy(&mut img, c, fk);
        }
        for (i, c) in img {
            map.set(i, a, c);
        }
    }
    let regular = ComoduleAlgebra::regular(Arc::clone(uq));
    let (mut report, kind) = check_comodule_algebra_morphism(&map, &algebra, &regular)?;
    report = report.prefixed("a4_embedding");
    let rank = map.rank();
    report.record(
        "a4_embedding.injective",
        "f is injective",
        kind.injective,
        || format!("rank {rank} < {n}"),
    );
    let span = Matrix::from_rows(
        uq.dim(),
        images
            .iter()
            .map(|v| sparse::to_dense(v, uq.dim()))
            .collect(),
    )?
    .rank();
    report.record(
        "a4_embedding.image_dim",
        "f(W)^k, 0 ≤ k < N, are linearly independent",
        span == n,
        || format!("powers of f(W) span a space of dimension {span}"),
    );
    Ok(A4Embedding {
        algebra,
        map,
        beta,
        xi,
        kind,
        report,
    })
}

/// Computed and predicted minimal polynomials of `αẼ + βF + γK⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct MinPolComparison {
    pub computed: Poly<Cyclo>,
    pub formula: Poly<Cyclo>,
}

impl MinPolComparison {
    pub fn matches(&self) -> bool {
        self.computed == self.formula
    }
}

/// Brute-force minimal polynomial of `αẼ + βF + γK⁻¹` in `u_q` against
/// the closed formula built from power sums.
pub fn verify_min_pol_lemma(
    ctx: &Sl2Context,
    alpha: &Cyclo,
    beta: &Cyclo,
    gamma: &Cyclo,
) -> Result<(VerificationReport, MinPolComparison)> {
    if alpha.is_zero() && beta.is_zero() && gamma.is_zero() {
        return Err(Error::InvalidArgument(
            "(alpha, beta, gamma) must not all be zero".into(),
        ));
    }
    let w = uq_linear_element(ctx, alpha, beta, gamma)?;
    let computed = minimal_polynomial_of_element(ctx.uq()?.algebra(), &w);
    let formula = min_pol_formula(ctx.field(), alpha, beta, gamma);
    let cmp = MinPolComparison { computed, formula };
    let n = ctx.n();
    let mut r = VerificationReport::new();
    let deg = cmp.computed.degree();
    r.record(
        "minpoly.degree",
        "the minimal polynomial has degree N",
        deg == Some(n),
        || format!("degree {deg:?}"),
    );
    r.record(
        "minpoly.formula",
        "minimal polynomial of αẼ + βF + γK⁻¹ equals Σ (N/(N−k)) binom(N−k,k) (αβ/(q²−1))^k T^{N−2k} − P_N(γ, αβ/(1−q²))",
        cmp.matches(),
        || {
            format!(
                "computed {} but formula {}",
                render_poly(&cmp.computed),
                render_poly(&cmp.formula)
            )
        },
    );
    Ok((r, cmp))
}

fn sorted_strings(v: &[Cyclo]) -> Vec<String> {
    let mut s: Vec<String> = v.iter().map(ToString::to_string).collect();
    s.sort();
    s
}

/// `μ_k = u q^{2k} + v q^{−2k}`, `0 ≤ k < N`, with checks that each is a root
/// of `φ` (built from `αβ/(q² − 1) = −uv`, `ξ = u^N + v^N`), that the
/// product of `T − μ_k` is `φ`, and that `{μ_k} = {u q^k + v q^{−k}}`.
pub fn one_dim_reps_a4(
    field: &Arc<CyclotomicField>,
    u: &Cyclo,
    v: &Cyclo,
) -> Result<(Vec<Cyclo>, VerificationReport)> {
    let n = field.order() as i64;
    let mu: Vec<Cyclo> = (0..n)
        .map(|k| u.clone() * field.q_pow(2 * k) + v.clone() * field.q_pow(-2 * k))
        .collect();
    let (beta, xi) = a4_params_from_uv(field, &field.one(), u, v)?;
    let phi = phi_poly(field, &field.one(), &beta, &xi);
    let mut r = VerificationReport::new();
    let bad = mu.iter().position(|m| !phi.eval(m).is_zero());
    r.record(
        "one_dim_reps.roots",
        "φ(μ_k) = 0 for every k",
        bad.is_none(),
        || {
            let k = bad.unwrap_or(0);
            format!("φ(μ_{k}) = {} for μ_{k} = {}", phi.eval(&mu[k]), mu[k])
        },
    );
    let mut prod = Poly::constant(field.one());
    for m in &mu {
        prod = prod.mul(&Poly::new(vec![-m.clone(), field.one()]));
    }
    r.record(
        "one_dim_reps.product",
        "∏(T − μ_k) = φ",
        prod == phi,
        || {
            format!(
                "product {} but φ = {}",
                render_poly(&prod),
                render_poly(&phi)
            )
        },
    );
    let alt: Vec<Cyclo> = (0..n)
        .map(|k| u.clone() * field.q_pow(k) + v.clone() * field.q_pow(-k))
        .collect();
    let (a, b) = (sorted_strings(&mu), sorted_strings(&alt));
    r.record(
        "one_dim_reps.indexing",
        "{u q^{2k} + v q^{−2k}} = {u q^k + v q^{−k}} as multisets",
        a == b,
        || format!("{a:?} vs {b:?}"),
    );
    Ok((mu, r))
}

/// Semisimplicity of the deformed `L4(α, β; ξ)`, i.e. `φ_{α,β,ξ}` squarefree.
pub fn semisimplicity_a4(
    field: &Arc<CyclotomicField>,
    alpha: &Cyclo,
    beta: &Cyclo,
    xi: &Cyclo,
) -> Result<bool> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::InvalidArgument(
            "(alpha, beta) must not be (0, 0)".into(),
        ));
    }
    phi_poly(field, alpha, beta, xi).is_squarefree()
}

/// `ξ² = 4 α^N β^N (1 − q²)^{−N}`.
pub fn non_semisimple_condition(
    field: &Arc<CyclotomicField>,
    alpha: &Cyclo,
    beta: &Cyclo,
    xi: &Cyclo,
) -> bool {
    let n = field.order() as u64;
    let c = (field.one() - field.q_pow(2))
        .inv()
        .expect("q² ≠ 1")
        .pow_u(n);
    xi.clone() * xi == field.int(4) * alpha.pow_u(n) * beta.pow_u(n) * c
}

/// `semisimplicity_a4` against the negation of the boundary condition on
/// every point.
pub fn verify_semisimplicity_boundary(
    field: &Arc<CyclotomicField>,
    points: &[(Cyclo, Cyclo, Cyclo)],
) -> Result<VerificationReport> {
    let mut first_bad = None;
    for (a, b, x) in points {
        let ss = semisimplicity_a4(field, a, b, x)?;
        let cond = non_semisimple_condition(field, a, b, x);
        if ss == cond && first_bad.is_none() {
            first_bad = Some(format!(
                "(α, β, ξ) = ({a}, {b}, {x}): squarefree {ss}, boundary condition {cond}"
            ));
        }
    }
    let mut r = VerificationReport::new();
    r.record(
        "semisimplicity.boundary",
        "φ_{α,β,ξ} is squarefree iff ξ² ≠ 4 α^N β^N (1 − q²)^{−N}",
        first_bad.is_none(),
        || first_bad.unwrap_or_default(),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_examples() {
        let ctx = Sl2Context::new(3).unwrap();
        let f = ctx.field().clone();
        for (u, v) in [
            (f.zero(), f.zero()),
            (f.one(), f.zero()),
            (f.one(), f.one()),
            (f.q(), f.int(2)),
        ] {
            let e = embed_a4_into_uq(&ctx, &f.one(), &u, &v).unwrap();
            assert!(e.report.passed(), "{:?}", e.report.first_failure());
        }
        let e = embed_a4_into_uq(&ctx, &f.one(), &f.one(), &f.one()).unwrap();
        assert_eq!(e.xi, f.int(2));
        assert_eq!(e.beta, f.one() - f.q_pow(2));
        assert!(embed_a4_into_uq(&ctx, &f.zero(), &f.one(), &f.one()).is_err());
    }

    #[test]
    fn min_pol_examples() {
        let ctx = Sl2Context::new(3).unwrap();
        let f = ctx.field().clone();
        let (r, c) = verify_min_pol_lemma(&ctx, &f.one(), &f.zero(), &f.zero()).unwrap();
        assert!(r.passed());
        assert_eq!(render_poly(&c.computed), "T^3");
        let (r, c) = verify_min_pol_lemma(&ctx, &f.zero(), &f.zero(), &f.one()).unwrap();
        assert!(r.passed());
        assert_eq!(render_poly(&c.formula), "T^3 - 1");
        let (r, _) = verify_min_pol_lemma(&ctx, &f.one(), &f.one(), &f.zero()).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert!(verify_min_pol_lemma(&ctx, &f.zero(), &f.zero(), &f.zero()).is_err());
    }

    #[test]
    fn reps_and_semisimplicity() {
        let f = CyclotomicField::new(3).unwrap();
        let (mu, r) = one_dim_reps_a4(&f, &f.one(), &f.one()).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert_eq!(mu[0], f.int(2));
        let (mu, _) = one_dim_reps_a4(&f, &f.zero(), &f.zero()).unwrap();
        assert!(mu.iter().all(Zero::is_zero));
        assert!(semisimplicity_a4(&f, &f.one(), &f.zero(), &f.one()).unwrap());
        assert!(!semisimplicity_a4(&f, &f.one(), &f.zero(), &f.zero()).unwrap());
        // u = v = 1: ξ = 2, αβ = 1 − q², on the boundary
        let b = f.one() - f.q_pow(2);
        assert!(non_semisimple_condition(&f, &f.one(), &b, &f.int(2)));
        assert!(!semisimplicity_a4(&f, &f.one(), &b, &f.int(2)).unwrap());
    }
}
