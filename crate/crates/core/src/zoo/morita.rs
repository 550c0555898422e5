use std::sync::Arc;

use num_traits::Zero;

use crate::cyclofield::CyclotomicField;
use crate::error::{Error, Result};
use crate::hopf::{check_comodule_algebra_morphism, ComoduleAlgebra};
use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalar::Field;
use crate::sparse::{self, Vector};
use crate::uqsl2::Sl2Context;
use crate::Cyclo;

use super::build::{build_family, FamilyShape};
use super::params::{FamilyParams, FamilyTag};

/// Parameters with the duplicates folded: `L3(N; ξ, ζ)` is `L3N` with
/// `η = 0`, and `L1(1; ξ)`, `L2(1; ζ)` are `L4(1, 0; ξ)`, `L4(0, 1; ζ)`.
#[derive(Clone, Debug, PartialEq)]
enum Normal {
    L0(usize),
    L1(usize, Cyclo),
    L2(usize, Cyclo),
    L3(usize, Cyclo, Cyclo, Cyclo),
    L4(Cyclo, Cyclo, Cyclo),
}

fn normalize(field: &Arc<CyclotomicField>, p: &FamilyParams<Cyclo>) -> Result<Normal> {
    let n = field.order() as usize;
    p.validate(n)?;
    let get = |o: &Option<Cyclo>| o.clone().unwrap_or_else(|| field.zero());
    let r = p.r.unwrap_or(1);
    Ok(match p.family {
        FamilyTag::L0 => Normal::L0(r),
        FamilyTag::L1 if r == 1 => Normal::L4(field.one(), field.zero(), get(&p.xi)),
        FamilyTag::L1 => Normal::L1(r, get(&p.xi)),
        FamilyTag::L2 if r == 1 => Normal::L4(field.zero(), field.one(), get(&p.zeta)),
        FamilyTag::L2 => Normal::L2(r, get(&p.zeta)),
        FamilyTag::L3 | FamilyTag::L3N => Normal::L3(r, get(&p.xi), get(&p.zeta), get(&p.eta)),
        FamilyTag::L4 => Normal::L4(get(&p.alpha), get(&p.beta), get(&p.xi)),
    })
}

/// Whether the two parameter records give Morita-equivalent comodule
/// algebras: equal tuples for `L0`–`L2`, `η′ = q^{2k} η` for `L3`, and
/// `(α′, β′, ξ′) = (λq^{2k}α, λq^{−2k}β, λ^N ξ)` for `L4`, with `λ`
/// eliminated for each `k`.
pub fn morita_equivalent_params(
    field: &Arc<CyclotomicField>,
    p: &FamilyParams<Cyclo>,
    p2: &FamilyParams<Cyclo>,
) -> Result<bool> {
    let n = field.order() as i64;
    Ok(match (normalize(field, p)?, normalize(field, p2)?) {
        (Normal::L0(r), Normal::L0(s)) => r == s,
        (Normal::L1(r, x), Normal::L1(s, y)) | (Normal::L2(r, x), Normal::L2(s, y)) => {
            r == s && x == y
        }
        (Normal::L3(r, x, z, e), Normal::L3(s, x2, z2, e2)) => {
            r == s && x == x2 && z == z2 && (0..n).any(|k| field.q_pow(2 * k) * &e == e2)
        }
        (Normal::L4(a, b, x), Normal::L4(a2, b2, x2)) => (0..n).any(|k| {
            let lambda = if !a.is_zero() {
                a2.clone() * (field.q_pow(2 * k) * &a).inv().expect("nonzero")
            } else {
                if !a2.is_zero() {
                    return false;
                }
                b2.clone()
                    * (field.q_pow(-2 * k) * &b)
                        .inv()
                        .expect("beta nonzero when alpha is zero")
            };
            !lambda.is_zero()
                && a2 == lambda.clone() * field.q_pow(2 * k) * &a
                && b2 == lambda.clone() * field.q_pow(-2 * k) * &b
                && x2 == lambda.pow_u(n as u64) * &x
        }),
        _ => false,
    })
}

fn least_by_string(items: impl IntoIterator<Item = Cyclo>) -> Cyclo {
    items
        .into_iter()
        .min_by_key(|c| c.to_string())
        .expect("nonempty orbit")
}

/// Deterministic representative of the Morita class of `p`.
///
/// `L4` with `α ≠ 0` goes to `(1, β′, ξ/α^N)` with `β′` the least (as a
/// string) of `q^{4k} β/α`; with `α = 0` to `(0, 1, β^{−N} ξ)`. `L3N` takes
/// the least `q^{2k} η`.
pub fn canonical_params(
    field: &Arc<CyclotomicField>,
    p: &FamilyParams<Cyclo>,
) -> Result<FamilyParams<Cyclo>> {
    let n = field.order() as i64;
    Ok(match normalize(field, p)? {
        Normal::L0(r) => FamilyParams::l0(r),
        Normal::L1(r, x) => FamilyParams::l1(r, x),
        Normal::L2(r, z) => FamilyParams::l2(r, z),
        Normal::L3(r, x, z, e) if r == n as usize => {
            let eta = least_by_string((0..n).map(|k| field.q_pow(2 * k) * &e));
            FamilyParams::l3n(r, x, z, eta)
        }
        Normal::L3(r, x, z, _) => FamilyParams::l3(r, x, z),
        Normal::L4(a, b, x) if !a.is_zero() => {
            let a_inv = a.inv().expect("nonzero");
            let beta = b * &a_inv;
            let xi = x * a_inv.pow_u(n as u64);
            let beta = least_by_string((0..n).map(|k| field.q_pow(4 * k) * &beta));
            FamilyParams::l4(field.one(), beta, xi)
        }
        Normal::L4(_, b, x) => {
            let b_inv = b.inv().expect("beta nonzero when alpha is zero");
            FamilyParams::l4(field.zero(), field.one(), x * b_inv.pow_u(n as u64))
        }
    })
}

/// Images of the generators `X` (or `W`), `Y`, `G` of a family algebra.
#[derive(Clone, Debug, Default)]
pub struct GeneratorImages {
    pub x: Option<Vector<Cyclo>>,
    pub y: Option<Vector<Cyclo>>,
    pub g: Option<Vector<Cyclo>>,
}

/// Matrix of the algebra map sending `X^a Y^b G^c` to `x^a y^b g^c`.
pub fn generator_map(
    source_shape: &FamilyShape,
    target: &ComoduleAlgebra<Cyclo>,
    images: &GeneratorImages,
) -> Result<Matrix<Cyclo>> {
    let missing = |what: &str| Error::InvalidArgument(format!("no image for generator {what}"));
    let one = target.one();
    let mut m = Matrix::zeros(target.dim(), source_shape.dim());
    for col in 0..source_shape.dim() {
        let (a, b, c) = source_shape.exponents(col);
        let mut v = one.clone();
        for (e, img, name) in [
            (a, &images.x, "X"),
            (b, &images.y, "Y"),
            (c, &images.g, "G"),
        ] {
            if e > 0 {
                let img = img.as_ref().ok_or_else(|| missing(name))?;
                v = target.mul(&v, &target.algebra().pow(img, e));
            }
        }
        for (i, x) in v {
            m.set(i, col, x);
        }
    }
    Ok(m)
}

fn check_iso(
    id: &str,
    anchor: &str,
    f: &Matrix<Cyclo>,
    a: &ComoduleAlgebra<Cyclo>,
    b: &ComoduleAlgebra<Cyclo>,
) -> Result<VerificationReport> {
    let (r, kind) = check_comodule_algebra_morphism(f, a, b)?;
    let mut r = r.prefixed(id);
    r.record(&format!("{id}.bijective"), anchor, kind.bijective(), || {
        format!(
            "injective {}, surjective {}",
            kind.injective, kind.surjective
        )
    });
    Ok(r)
}

fn gen(a: &ComoduleAlgebra<Cyclo>, label: &str) -> Vector<Cyclo> {
    sparse::basis(
        a.index_of(label)
            .unwrap_or_else(|| panic!("no basis element {label}")),
    )
}

/// `W ↦ λW : L4(λα, λβ; λ^N ξ) → L4(α, β; ξ)`.
pub fn iso_l4_scaling(
    ctx: &Sl2Context,
    alpha: &Cyclo,
    beta: &Cyclo,
    xi: &Cyclo,
    lambda: &Cyclo,
) -> Result<VerificationReport> {
    let n = ctx.n();
    let p = FamilyParams::l4(
        lambda.clone() * alpha,
        lambda.clone() * beta,
        lambda.pow_u(n as u64) * xi,
    );
    let p2 = FamilyParams::l4(alpha.clone(), beta.clone(), xi.clone());
    let (a, b) = (build_family(ctx, &p)?, build_family(ctx, &p2)?);
    let images = GeneratorImages {
        x: Some(sparse::scale(&gen(&b, "W"), lambda)),
        ..Default::default()
    };
    let f = generator_map(&FamilyShape::of(&p, n)?, &b, &images)?;
    check_iso(
        "iso.l4_scaling",
        "W ↦ λW : L4(λα,λβ;λ^N ξ) → L4(α,β;ξ)",
        &f,
        &a,
        &b,
    )
}

/// `G ↦ q^k G, X ↦ X, Y ↦ Y : L3(N; ξ, ζ, q^{2k}η) → L3(N; ξ, ζ, η)`.
pub fn iso_l3n_shift(
    ctx: &Sl2Context,
    xi: &Cyclo,
    zeta: &Cyclo,
    eta: &Cyclo,
    k: i64,
) -> Result<VerificationReport> {
    let n = ctx.n();
    let field = ctx.field();
    let p = FamilyParams::l3n(n, xi.clone(), zeta.clone(), field.q_pow(2 * k) * eta);
    let p2 = FamilyParams::l3n(n, xi.clone(), zeta.clone(), eta.clone());
    let (a, b) = (build_family(ctx, &p)?, build_family(ctx, &p2)?);
    let images = GeneratorImages {
        x: Some(gen(&b, "X")),
        y: Some(gen(&b, "Y")),
        g: Some(sparse::scale(&gen(&b, "G"), &field.q_pow(k))),
    };
    let f = generator_map(&FamilyShape::of(&p, n)?, &b, &images)?;
    check_iso(
        "iso.l3n_shift",
        "G ↦ q^k G : L3(N;ξ,ζ,q^{2k}η) → L3(N;ξ,ζ,η)",
        &f,
        &a,
        &b,
    )
}

/// The identity on `W` as a map `g L4(α, β; ξ) g⁻¹ → L4(q²α, q⁻²β; ξ)`.
pub fn iso_l4_conjugation(
    ctx: &Sl2Context,
    alpha: &Cyclo,
    beta: &Cyclo,
    xi: &Cyclo,
) -> Result<VerificationReport> {
    let n = ctx.n();
    let field = ctx.field();
    let p = FamilyParams::l4(alpha.clone(), beta.clone(), xi.clone());
    let p2 = FamilyParams::l4(field.q_pow(2) * alpha, field.q_pow(-2) * beta, xi.clone());
    let g = ctx.gr().generators()[2];
    let a = build_family(ctx, &p)?.conjugate(g)?;
    let b = build_family(ctx, &p2)?;
    let images = GeneratorImages {
        x: Some(gen(&b, "W")),
        ..Default::default()
    };
    let f = generator_map(&FamilyShape::of(&p, n)?, &b, &images)?;
    check_iso(
        "iso.l4_conjugation",
        "g L4(α,β;ξ) g⁻¹ ≅ L4(q²α,q⁻²β;ξ) via W ↦ W",
        &f,
        &a,
        &b,
    )
}

/// `G ↦ G, X ↦ q²X, Y ↦ q⁻²Y` as a map `g L g⁻¹ → L` for `L` in
/// `L0`–`L3`.
pub fn iso_conjugation(ctx: &Sl2Context, p: &FamilyParams<Cyclo>) -> Result<VerificationReport> {
    if p.family == FamilyTag::L4 {
        return Err(Error::InvalidArgument(
            "use iso_l4_conjugation for L4".into(),
        ));
    }
    let n = ctx.n();
    let field = ctx.field();
    let shape = FamilyShape::of(p, n)?;
    let g = ctx.gr().generators()[2];
    let b = build_family(ctx, p)?;
    let a = b.conjugate(g)?;
    let images = GeneratorImages {
        x: shape
            .has_x()
            .then(|| sparse::scale(&gen(&b, "X"), &field.q_pow(2))),
        y: shape
            .has_y()
            .then(|| sparse::scale(&gen(&b, "Y"), &field.q_pow(-2))),
        g: shape.has_g().then(|| gen(&b, "G")),
    };
    let f = generator_map(&shape, &b, &images)?;
    check_iso(
        &format!("iso.{}_conjugation", p.family.to_string().to_lowercase()),
        "g L g⁻¹ ≅ L via G ↦ G, X ↦ q²X, Y ↦ q⁻²Y",
        &f,
        &a,
        &b,
    )
}

/// `X ↦ W : L1(1; ξ) → L4(1, 0; ξ)` and `Y ↦ W : L2(1; ζ) → L4(0, 1; ζ)`.
pub fn iso_rank_one_to_l4(ctx: &Sl2Context, xi: &Cyclo) -> Result<VerificationReport> {
    let n = ctx.n();
    let field = ctx.field();
    let mut r = VerificationReport::new();
    for (p, p2, id, anchor, x_side) in [
        (
            FamilyParams::l1(1, xi.clone()),
            FamilyParams::l4(field.one(), field.zero(), xi.clone()),
            "iso.l1_to_l4",
            "X ↦ W : L1(1;ξ) → L4(1,0;ξ)",
            true,
        ),
        (
            FamilyParams::l2(1, xi.clone()),
            FamilyParams::l4(field.zero(), field.one(), xi.clone()),
            "iso.l2_to_l4",
            "Y ↦ W : L2(1;ζ) → L4(0,1;ζ)",
            false,
        ),
    ] {
        let (a, b) = (build_family(ctx, &p)?, build_family(ctx, &p2)?);
        let w = gen(&b, "W");
        let images = GeneratorImages {
            x: x_side.then(|| w.clone()),
            y: (!x_side).then_some(w),
            g: None,
        };
        let f = generator_map(&FamilyShape::of(&p, n)?, &b, &images)?;
        r.extend(check_iso(id, anchor, &f, &a, &b)?);
    }
    Ok(r)
}

/// `W ↦ βY : L4(0, β; ξ) → L2(1; β^{−N} ξ)`.
pub fn iso_l4_to_l2(ctx: &Sl2Context, beta: &Cyclo, xi: &Cyclo) -> Result<VerificationReport> {
    let n = ctx.n();
    let field = ctx.field();
    let b_inv = beta
        .inv()
        .ok_or_else(|| Error::InvalidArgument("beta must be nonzero".into()))?;
    let p = FamilyParams::l4(field.zero(), beta.clone(), xi.clone());
    let p2 = FamilyParams::l2(1, b_inv.pow_u(n as u64) * xi);
    let (a, b) = (build_family(ctx, &p)?, build_family(ctx, &p2)?);
    let images = GeneratorImages {
        x: Some(sparse::scale(&gen(&b, "Y"), beta)),
        ..Default::default()
    };
    let f = generator_map(&FamilyShape::of(&p, n)?, &b, &images)?;
    check_iso(
        "iso.l4_to_l2",
        "W ↦ βY : L4(0,β;ξ) → L2(1;β^{−N}ξ)",
        &f,
        &a,
        &b,
    )
}

/// Every stated isomorphism at one fixed set of sample parameters.
pub fn verify_stated_isomorphisms(ctx: &Sl2Context) -> Result<VerificationReport> {
    let f = ctx.field().clone();
    let n = ctx.n();
    let (two, q) = (f.int(2), f.q());
    let mut r = VerificationReport::new();
    r.extend(iso_l4_scaling(
        ctx,
        &f.one(),
        &q,
        &two,
        &(q.clone() + f.int(3)),
    )?);
    r.extend(iso_l4_scaling(ctx, &f.zero(), &two, &f.int(5), &f.int(-2))?);
    r.extend(iso_l3n_shift(ctx, &two, &q, &f.int(3), 1)?);
    r.extend(iso_l4_conjugation(ctx, &two, &q, &f.int(-1))?);
    for p in [
        FamilyParams::l1(n, two.clone()),
        FamilyParams::l2(n, q.clone()),
        FamilyParams::l3(n, two.clone(), q.clone()),
        FamilyParams::l3n(n, two.clone(), q.clone(), f.int(7)),
    ] {
        r.extend(iso_conjugation(ctx, &p)?);
    }
    r.extend(iso_rank_one_to_l4(ctx, &f.int(3))?);
    r.extend(iso_l4_to_l2(ctx, &f.int(3), &f.int(2))?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_examples() {
        let f = CyclotomicField::new(3).unwrap();
        let (a, b, x) = (f.int(2), f.q(), f.int(5));
        let p = FamilyParams::l4(a.clone(), b.clone(), x.clone());
        let p2 = FamilyParams::l4(f.q_pow(2) * &a, f.q_pow(-2) * &b, x.clone());
        assert!(morita_equivalent_params(&f, &p, &p2).unwrap());
        let lam = f.int(7);
        let p3 = FamilyParams::l4(lam.clone(), lam.clone(), f.zero());
        assert!(
            morita_equivalent_params(&f, &FamilyParams::l4(f.one(), f.one(), f.zero()), &p3)
                .unwrap()
        );
        let p4 = FamilyParams::l4(a.clone(), b.clone(), x.clone() + f.one());
        assert!(!morita_equivalent_params(&f, &p, &p4).unwrap());
        let e = FamilyParams::l3n(3, f.one(), f.one(), f.int(2));
        let e2 = FamilyParams::l3n(3, f.one(), f.one(), f.int(2) * f.q());
        assert!(morita_equivalent_params(&f, &e, &e2).unwrap());
        assert!(!morita_equivalent_params(&f, &FamilyParams::l0(1), &FamilyParams::l0(3)).unwrap());
        assert!(morita_equivalent_params(
            &f,
            &FamilyParams::l1(1, x.clone()),
            &FamilyParams::l4(f.one(), f.zero(), x)
        )
        .unwrap());
        assert_eq!(
            canonical_params(&f, &p).unwrap(),
            canonical_params(&f, &p2).unwrap()
        );
        assert_eq!(
            canonical_params(&f, &e).unwrap(),
            canonical_params(&f, &e2).unwrap()
        );
    }

    #[test]
    fn stated_isomorphisms_at_3() {
        let ctx = Sl2Context::new(3).unwrap();
        let r = verify_stated_isomorphisms(&ctx).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
    }
}
