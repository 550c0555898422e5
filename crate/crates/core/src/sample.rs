//! Seeded parameter samplers shared by the suites and the tests.

use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;

use crate::cyclofield::CyclotomicField;
use crate::scalar::Field;
use crate::zoo::{divisors, FamilyParams, FamilyTag};
use crate::Cyclo;

/// `Σ c_i q^i` over `i < N − 1` with `c_i ∈ [−2, 2]`.
pub fn random_cyclo(field: &Arc<CyclotomicField>, rng: &mut impl Rng) -> Cyclo {
    let n = field.order() as i64;
    (0..(n - 1).max(1)).fold(field.zero(), |acc, i| {
        acc + field.int(rng.gen_range(-2..=2)) * field.q_pow(i)
    })
}

pub fn random_nonzero_cyclo(field: &Arc<CyclotomicField>, rng: &mut impl Rng) -> Cyclo {
    loop {
        let c = random_cyclo(field, rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Like [`random_cyclo`] but zero a quarter of the time.
pub fn random_maybe_zero(field: &Arc<CyclotomicField>, rng: &mut impl Rng) -> Cyclo {
    if rng.gen_ratio(1, 4) {
        field.zero()
    } else {
        random_cyclo(field, rng)
    }
}

/// One random parameter record of the given family. `L1`, `L2` use
/// `r ≠ 1`; `L3` uses `r < N`.
pub fn random_family_params(
    field: &Arc<CyclotomicField>,
    tag: FamilyTag,
    rng: &mut impl Rng,
) -> FamilyParams<Cyclo> {
    let n = field.order() as usize;
    let divs = divisors(n);
    fn pick(rng: &mut impl Rng, from: &[usize]) -> usize {
        from[rng.gen_range(0..from.len())]
    }
    match tag {
        FamilyTag::L0 => FamilyParams::l0(pick(rng, &divs)),
        FamilyTag::L1 => FamilyParams::l1(pick(rng, &divs[1..]), random_maybe_zero(field, rng)),
        FamilyTag::L2 => FamilyParams::l2(pick(rng, &divs[1..]), random_maybe_zero(field, rng)),
        FamilyTag::L3 => {
            let r = pick(rng, &divs[..divs.len() - 1]);
            FamilyParams::l3(
                r,
                random_maybe_zero(field, rng),
                random_maybe_zero(field, rng),
            )
        }
        FamilyTag::L3N => {
            let (x, z) = (random_maybe_zero(field, rng), random_maybe_zero(field, rng));
            FamilyParams::l3n(n, x, z, random_maybe_zero(field, rng))
        }
        FamilyTag::L4 => loop {
            let a = random_maybe_zero(field, rng);
            let b = random_maybe_zero(field, rng);
            let x = random_maybe_zero(field, rng);
            if !(a.is_zero() && b.is_zero()) {
                break FamilyParams::l4(a, b, x);
            }
        },
    }
}

pub const ALL_TAGS: [FamilyTag; 6] = [
    FamilyTag::L0,
    FamilyTag::L1,
    FamilyTag::L2,
    FamilyTag::L3,
    FamilyTag::L3N,
    FamilyTag::L4,
];

/// `per_family` records of each family, in tag order.
pub fn sample_family_params(
    field: &Arc<CyclotomicField>,
    per_family: usize,
    rng: &mut impl Rng,
) -> Vec<FamilyParams<Cyclo>> {
    ALL_TAGS
        .iter()
        .flat_map(|&t| {
            (0..per_family)
                .map(|_| random_family_params(field, t, rng))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `(α, β, γ)` triples for the minimal-polynomial check. The first ones
/// are degenerate: `α = 0`, `β = 0`, and `u = q^{2m} v` (repeated roots)
/// in the chart `γ = u + v`, `αβ = uv(1 − q²)`.
pub fn sample_minpoly_triples(
    field: &Arc<CyclotomicField>,
    count: usize,
    rng: &mut impl Rng,
) -> Vec<(Cyclo, Cyclo, Cyclo)> {
    let n = field.order() as i64;
    let one_minus_q2 = field.one() - field.q_pow(2);
    (0..count)
        .map(|i| match i % 5 {
            0 => (
                field.zero(),
                random_nonzero_cyclo(field, rng),
                random_cyclo(field, rng),
            ),
            1 => (
                random_nonzero_cyclo(field, rng),
                field.zero(),
                random_cyclo(field, rng),
            ),
            2 => {
                let v = random_nonzero_cyclo(field, rng);
                let u = v.clone() * field.q_pow(2 * rng.gen_range(0..n));
                let alpha = random_nonzero_cyclo(field, rng);
                let beta = u.clone() * &v * &one_minus_q2 * alpha.inv().expect("nonzero");
                (alpha, beta, u + v)
            }
            _ => loop {
                let t = (
                    random_cyclo(field, rng),
                    random_cyclo(field, rng),
                    random_cyclo(field, rng),
                );
                if !(t.0.is_zero() && t.1.is_zero() && t.2.is_zero()) {
                    break t;
                }
            },
        })
        .collect()
}

/// `(α, u, v)` with `α ≠ 0`; every other point has `u^N = v^N`.
pub fn sample_uv_points(
    field: &Arc<CyclotomicField>,
    count: usize,
    rng: &mut impl Rng,
) -> Vec<(Cyclo, Cyclo, Cyclo)> {
    let n = field.order() as i64;
    (0..count)
        .map(|i| {
            let alpha = random_nonzero_cyclo(field, rng);
            let v = random_cyclo(field, rng);
            let u = if i % 2 == 0 {
                v.clone() * field.q_pow(rng.gen_range(0..n))
            } else {
                random_cyclo(field, rng)
            };
            (alpha, u, v)
        })
        .collect()
}

/// A pair of parameter records with the expected Morita verdict and how it
/// was derived.
#[derive(Clone, Debug)]
pub struct MoritaCase {
    pub left: FamilyParams<Cyclo>,
    pub right: FamilyParams<Cyclo>,
    pub expected: bool,
    pub why: String,
}

/// Seeded truth table. Each case is produced by applying a known
/// equivalence (expected true) or by breaking an invariant the predicate
/// must see (expected false).
pub fn morita_truth_table(
    field: &Arc<CyclotomicField>,
    count: usize,
    rng: &mut impl Rng,
) -> Vec<MoritaCase> {
    let n = field.order() as i64;
    let nu = n as usize;
    let case = |left, right, expected, why: String| MoritaCase {
        left,
        right,
        expected,
        why,
    };
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let k = rng.gen_range(0..n);
        let lam = random_nonzero_cyclo(field, rng);
        let (a, b, x) = (
            random_nonzero_cyclo(field, rng),
            random_nonzero_cyclo(field, rng),
            random_nonzero_cyclo(field, rng),
        );
        let (qk, qmk) = (field.q_pow(2 * k), field.q_pow(-2 * k));
        let lam_n = lam.pow_u(nu as u64);
        out.push(match i % 14 {
            0 => case(
                FamilyParams::l4(a.clone(), b.clone(), x.clone()),
                FamilyParams::l4(
                    lam.clone() * &qk * &a,
                    lam.clone() * &qmk * &b,
                    lam_n.clone() * &x,
                ),
                true,
                format!("L4 rescaled with k = {k}, λ = {lam}"),
            ),
            1 => case(
                FamilyParams::l4(a.clone(), b.clone(), x.clone()),
                FamilyParams::l4(
                    lam.clone() * &qk * &a,
                    lam.clone() * &qmk * &b,
                    lam_n * &x + field.one(),
                ),
                false,
                format!("L4 rescaled with k = {k}, λ = {lam}, ξ′ shifted by 1"),
            ),
            2 => case(
                FamilyParams::l4(field.zero(), b.clone(), x.clone()),
                FamilyParams::l4(field.zero(), lam.clone() * &qmk * &b, lam_n * &x),
                true,
                format!("L4 with α = 0 rescaled with k = {k}, λ = {lam}"),
            ),
            3 => case(
                FamilyParams::l4(a.clone(), b.clone(), x.clone()),
                FamilyParams::l4(field.zero(), b.clone(), x.clone()),
                false,
                "L4 with α ≠ 0 against α′ = 0: λ q^{2k} α = 0 forces λ = 0".into(),
            ),
            4 => case(
                FamilyParams::l4(a.clone(), b.clone(), x.clone()),
                FamilyParams::l4(a.clone(), field.q_pow(k) * &b, x.clone()),
                true,
                format!("L4 β′ = q^{k} β: take λ = q^{{−2j}}, 4j ≡ −{k} mod N, so λ^N = 1"),
            ),
            5 => case(
                FamilyParams::l4(a.clone(), b.clone(), x.clone()),
                FamilyParams::l4(a.clone(), field.int(2) * &b, x.clone()),
                false,
                "L4 β′ = 2β: λ is a root of unity, so β′/β must be one".into(),
            ),
            6 => case(
                FamilyParams::l3n(nu, x.clone(), b.clone(), a.clone()),
                FamilyParams::l3n(nu, x.clone(), b.clone(), field.q_pow(k) * &a),
                true,
                format!("L3N η′ = q^{k} η: solve 2j ≡ {k} mod N"),
            ),
            7 => case(
                FamilyParams::l3n(nu, x.clone(), b.clone(), a.clone()),
                FamilyParams::l3n(nu, x.clone(), b.clone(), field.int(-2) * &a),
                false,
                "L3N η′ = −2η is not a root-of-unity multiple".into(),
            ),
            8 => case(
                FamilyParams::l3(1, x.clone(), b.clone()),
                FamilyParams::l3(1, x.clone(), b.clone() + field.one()),
                false,
                "L3 with ζ′ = ζ + 1".into(),
            ),
            9 => {
                let divs = divisors(nu);
                let r = divs[rng.gen_range(0..divs.len())];
                let s = divs[rng.gen_range(0..divs.len())];
                case(
                    FamilyParams::l0(r),
                    FamilyParams::l0(s),
                    r == s,
                    format!("L0 with r = {r}, r′ = {s}"),
                )
            }
            10 => case(
                FamilyParams::l1(nu, x.clone()),
                FamilyParams::l2(nu, x.clone()),
                false,
                "L1 against L2 with equal parameters: different families".into(),
            ),
            11 => case(
                FamilyParams::l1(1, x.clone()),
                FamilyParams::l4(lam.clone(), field.zero(), lam_n * &x),
                true,
                format!("L1(1; ξ) ≅ L4(1, 0; ξ), then rescaled by λ = {lam}"),
            ),
            12 => case(
                FamilyParams::l3(nu, x.clone(), b.clone()),
                FamilyParams::l3n(nu, x.clone(), b.clone(), field.zero()),
                true,
                "L3 at r = N is L3N with η = 0".into(),
            ),
            _ => case(
                FamilyParams::l1(nu, x.clone()),
                FamilyParams::l1(nu, field.q() * &x),
                false,
                "L1 with ξ′ = qξ".into(),
            ),
        });
    }
    out
}
