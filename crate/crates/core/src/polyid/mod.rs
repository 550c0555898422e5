//! Exact polynomial identities: power sums, Chebyshev polynomials, the
//! polynomial `φ_{α,β,ξ}` and the product formulas behind it.

mod multipoly;

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::cyclofield::CyclotomicField;
use crate::error::{Error, Result};
use crate::linalg::Poly;
use crate::report::VerificationReport;
use crate::scalar::{rat, Field, Rational};
use crate::Cyclo;

pub use multipoly::{Monomial, MultiPoly, MAX_VARIABLES};

/// `(n/(n−k)) binom(n−k, k)`, an integer for `0 <= 2k <= n`, `n >= 1`.
pub fn chebyshev_weight(n: u32, k: u32) -> Rational {
    let b = binomial(BigInt::from(n - k), BigInt::from(k));
    Rational::new(BigInt::from(n) * b, BigInt::from(n - k))
}

fn check_positive(n: i64) -> Result<u32> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("n must be >= 1 (got {n})")));
    }
    u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("n too large: {n}")))
}

/// `P_n(s, t)` with `P_n(u + v, uv) = u^n + v^n`.
pub fn power_sum_p(n: i64) -> Result<MultiPoly<Rational>> {
    let n = check_positive(n)?;
    let vars = ["s", "t"];
    let s = MultiPoly::var(&vars, "s")?;
    let t = MultiPoly::var(&vars, "t")?;
    // P_0 = 2, P_1 = s, P_k = s P_{k−1} − t P_{k−2}
    let mut prev = MultiPoly::constant(&vars, rat(2))?;
    let mut cur = s.clone();
    for _ in 1..n {
        let next = s.mul(&cur).sub(&t.mul(&prev));
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `P_n(s, t)` evaluated by the same recursion directly on field elements.
pub fn power_sum_value<F: Field>(n: u32, s: &F, t: &F) -> F {
    let mut prev = F::from_i64(2);
    let mut cur = s.clone();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = s.mul_ref(&cur) - t.mul_ref(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `T_n(z) = (n/2) Σ_k binom(n−k, k) ((−1)^k / (n−k)) (2z)^{n−2k}`.
pub fn chebyshev_t(n: i64) -> Result<MultiPoly<Rational>> {
    let n = check_positive(n)?;
    let mut coeffs = vec![Rational::from_integer(0.into()); n as usize + 1];
    for k in 0..=n / 2 {
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        let two_pow = Rational::from_integer(BigInt::from(2).pow(n - 2 * k));
        coeffs[(n - 2 * k) as usize] = chebyshev_weight(n, k) * sign * two_pow / rat(2);
    }
    MultiPoly::from_poly("z", &Poly::new(coeffs))
}

/// `T_n` from `T_0 = 1`, `T_1 = z`, `T_n = 2z T_{n−1} − T_{n−2}`.
pub fn chebyshev_t_recurrence(n: i64) -> Result<MultiPoly<Rational>> {
    let n = check_positive(n)?;
    let z = MultiPoly::var(&["z"], "z")?;
    let mut prev = MultiPoly::constant(&["z"], rat(1))?;
    let mut cur = z.clone();
    for _ in 1..n {
        let next = z.scale(&rat(2)).mul(&cur).sub(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

fn q2_minus_one_inv(field: &Arc<CyclotomicField>) -> Cyclo {
    (field.q_pow(2) - field.one())
        .inv()
        .expect("q² ≠ 1 for odd N > 1")
}

/// `Σ_{k ≤ (N−1)/2} (N/(N−k)) binom(N−k,k) c^k T^{N−2k}` with `c = αβ/(q²−1)`.
fn weighted_sum(field: &Arc<CyclotomicField>, alpha: &Cyclo, beta: &Cyclo) -> Poly<Cyclo> {
    let n = field.order();
    let c = alpha.clone() * beta * q2_minus_one_inv(field);
    let mut coeffs = vec![field.zero(); n as usize + 1];
    let mut ck = field.one();
    for k in 0..=(n - 1) / 2 {
        coeffs[(n - 2 * k) as usize] = field.rational(chebyshev_weight(n, k)) * &ck;
        ck *= &c;
    }
    Poly::new(coeffs)
}

/// `φ_{α,β,ξ}(T) = Σ_k (N/(N−k)) binom(N−k,k) (αβ/(q²−1))^k T^{N−2k} − ξ`.
pub fn phi_poly(
    field: &Arc<CyclotomicField>,
    alpha: &Cyclo,
    beta: &Cyclo,
    xi: &Cyclo,
) -> Poly<Cyclo> {
    weighted_sum(field, alpha, beta).sub(&Poly::constant(xi.clone()))
}

/// [`phi_poly`] as a polynomial in the variable `T`.
pub fn phi_polynomial(
    field: &Arc<CyclotomicField>,
    alpha: &Cyclo,
    beta: &Cyclo,
    xi: &Cyclo,
) -> Result<MultiPoly<Cyclo>> {
    MultiPoly::from_poly("T", &phi_poly(field, alpha, beta, xi))
}

/// The predicted minimal polynomial of `αẼ + βF + γK⁻¹`: the weighted sum
/// minus `P_N(γ, αβ(1 − q²)⁻¹)`.
pub fn min_pol_formula(
    field: &Arc<CyclotomicField>,
    alpha: &Cyclo,
    beta: &Cyclo,
    gamma: &Cyclo,
) -> Poly<Cyclo> {
    let t = -(alpha.clone() * beta * q2_minus_one_inv(field));
    let p = power_sum_value(field.order(), gamma, &t);
    weighted_sum(field, alpha, beta).sub(&Poly::constant(p))
}

/// `P_n(u+v, uv) = u^n + v^n` and `P_n = s^n + (lower in s)` for `n = 1..=max`.
pub fn verify_power_sums(max: i64) -> Result<VerificationReport> {
    let vars = ["u", "v"];
    let u = MultiPoly::<Rational>::var(&vars, "u")?;
    let v = MultiPoly::<Rational>::var(&vars, "v")?;
    let mut r = VerificationReport::new();
    let mut bad_identity = None;
    let mut bad_leading = None;
    for n in 1..=max {
        let p = power_sum_p(n)?;
        let lhs = p.substitute(&[u.add(&v), u.mul(&v)])?;
        let rhs = u.pow(n as u32).add(&v.pow(n as u32));
        if bad_identity.is_none() && lhs != rhs {
            bad_identity = Some(format!("n={n}: {lhs} vs {rhs}"));
        }
        let top_s = p.terms().map(|(m, _)| m.0[0]).max();
        if bad_leading.is_none() && (top_s != Some(n as u32) || p.coeff(&[n as u32, 0]) != rat(1)) {
            bad_leading = Some(format!("n={n}: P_n = {p}"));
        }
    }
    r.record(
        "power_sum.identity",
        "P_n(u+v, uv) = u^n + v^n",
        bad_identity.is_none(),
        || bad_identity.unwrap_or_default(),
    );
    r.record(
        "power_sum.leading",
        "P_n(s, t) = s^n + lower terms in s",
        bad_leading.is_none(),
        || bad_leading.unwrap_or_default(),
    );
    Ok(r)
}

/// The closed formula for `T_n` against the three-term recurrence.
pub fn verify_chebyshev_closed_form(max: i64) -> Result<VerificationReport> {
    let mut bad = None;
    for n in 1..=max {
        let (a, b) = (chebyshev_t(n)?, chebyshev_t_recurrence(n)?);
        if a != b {
            bad = Some(format!("n={n}: closed {a} vs recurrence {b}"));
            break;
        }
    }
    let mut r = VerificationReport::new();
    r.record(
        "chebyshev.closed_form",
        "closed formula for T_n agrees with the recurrence",
        bad.is_none(),
        || bad.unwrap_or_default(),
    );
    Ok(r)
}

/// `Σ_k (n/(n−k)) binom(n−k,k) (−uv)^k z^{n−2k} − u^n − v^n` in `Q(ω)[u, v, z]`.
fn chebyshev_rhs(
    field: &Arc<CyclotomicField>,
    n: u32,
    u: &MultiPoly<Cyclo>,
    v: &MultiPoly<Cyclo>,
    z: &MultiPoly<Cyclo>,
) -> MultiPoly<Cyclo> {
    let minus_one = -field.one();
    let minus_uv = u.mul(v).scale(&minus_one);
    let mut rhs = u.pow(n).add(&v.pow(n)).scale(&minus_one);
    for k in 0..=n / 2 {
        let w = field.rational(chebyshev_weight(n, k));
        rhs = rhs.add(&minus_uv.pow(k).mul(&z.pow(n - 2 * k)).scale(&w));
    }
    rhs
}

/// `∏_{k<n} (z − (uω^k + vω^{−k}))` for a root of unity `ω` of order `n`.
fn root_product(
    root: impl Fn(i64) -> Cyclo,
    n: u32,
    u: &MultiPoly<Cyclo>,
    v: &MultiPoly<Cyclo>,
    z: &MultiPoly<Cyclo>,
) -> MultiPoly<Cyclo> {
    let mut lhs = z.pow(0);
    for k in 0..n as i64 {
        let mu = u.scale(&root(k)).add(&v.scale(&root(-k)));
        lhs = lhs.mul(&z.sub(&mu));
    }
    lhs
}

/// The product identity over `Q(ω)`, `ω` primitive of order `n`, checked
/// by full expansion in `u, v, z`.
pub fn verify_chebyshev_identity(n: i64) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be >= 2 (got {n})")));
    }
    let nn = n as u32;
    let field = CyclotomicField::with_any_order(nn)?;
    let vars = ["u", "v", "z"];
    let (u, v, z) = (
        MultiPoly::var(&vars, "u")?,
        MultiPoly::var(&vars, "v")?,
        MultiPoly::var(&vars, "z")?,
    );
    let lhs = root_product(|k| field.q_pow(k), nn, &u, &v, &z);
    let rhs = chebyshev_rhs(&field, nn, &u, &v, &z);
    let mut r = VerificationReport::new();
    let diff = lhs.first_difference(&rhs);
    r.record(
        &format!("chebyshev.identity.n{n}"),
        "∏(z − (uω^k + vω^{−k})) = Σ (n/(n−k)) binom(n−k,k) (−uv)^k z^{n−2k} − u^n − v^n",
        diff.is_none(),
        || {
            let (m, a, b) = diff.expect("difference");
            format!("coefficient of {}: {a} vs {b}", lhs.render_monomial(&m))
        },
    );
    Ok(r)
}

/// The same identity at `ω = q²` inside `Q(q)`, with the constant term
/// written as `P_N(u + v, uv)`.
pub fn verify_min_pol_formula_consistency(
    field: &Arc<CyclotomicField>,
) -> Result<VerificationReport> {
    let n = field.order();
    let vars = ["u", "v", "T"];
    let (u, v, t) = (
        MultiPoly::var(&vars, "u")?,
        MultiPoly::var(&vars, "v")?,
        MultiPoly::var(&vars, "T")?,
    );
    let lhs = root_product(|k| field.q_pow(2 * k), n, &u, &v, &t);
    let rhs_sums = chebyshev_rhs(field, n, &u, &v, &t);
    let p_cyc = power_sum_p(n as i64)?
        .map_coeffs(|c| field.rational(c.clone()))
        .substitute(&[u.add(&v), u.mul(&v)])?;
    let mut r = VerificationReport::new();
    let sums = u.pow(n).add(&v.pow(n));
    let d = p_cyc.first_difference(&sums);
    r.record(
        "minpol_formula.power_sum",
        "P_N(u+v, uv) = u^N + v^N",
        d.is_none(),
        || format!("{p_cyc} vs {sums}"),
    );
    let rhs = rhs_sums.add(&sums).sub(&p_cyc);
    let diff = lhs.first_difference(&rhs);
    r.record(
        "minpol_formula.product",
        "∏(T − (uq^{2k} + vq^{−2k})) = Σ (N/(N−k)) binom(N−k,k) (−uv)^k T^{N−2k} − P_N(u+v, uv)",
        diff.is_none(),
        || {
            let (m, a, b) = diff.expect("difference");
            format!("coefficient of {}: {a} vs {b}", lhs.render_monomial(&m))
        },
    );
    Ok(r)
}
