//! Named verification suites and the aggregated report.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{
    deform_hopf, verify_hopf, verify_hopf_2cocycle, BilinearForm, ComoduleAlgebra, HopfAlgebraData,
};
use crate::polyid;
use crate::report::{ClaimResult, Mode, VerificationReport};
use crate::sample;
use crate::scalar::Field;
use crate::uqsl2::{
    closed_form_comul, pbw_labels, sigma_via_exponential, verify_dual_relations,
    verify_exponential_addition, verify_uq_relations, PbwIndex, Sl2Context,
};
use crate::zoo::{self, FamilyParams, FamilyTag};
use crate::Cyclo;
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    HopfAxioms,
    Cocycle,
    Deformation,
    Families,
    Minpoly,
    Chebyshev,
    Morita,
    Filtration,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::HopfAxioms,
        Suite::Cocycle,
        Suite::Deformation,
        Suite::Families,
        Suite::Minpoly,
        Suite::Chebyshev,
        Suite::Morita,
        Suite::Filtration,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HopfAxioms => "hopf-axioms",
            Suite::Cocycle => "cocycle",
            Suite::Deformation => "deformation",
            Suite::Families => "families",
            Suite::Minpoly => "minpoly",
            Suite::Chebyshev => "chebyshev",
            Suite::Morita => "morita",
            Suite::Filtration => "filtration",
        }
    }

    /// Parses a comma-separated list; `all` selects every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err(Error::InvalidArgument("no suites selected".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeName {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    #[serde(rename = "N")]
    pub n: usize,
    pub suites: Vec<Suite>,
    pub mode: ModeName,
    pub sample_count: usize,
    pub seed: u64,
}

impl SuiteConfig {
    /// Exhaustive at `N = 3`, sampled otherwise.
    pub fn new(n: usize, suites: Vec<Suite>) -> Self {
        SuiteConfig {
            n,
            suites,
            mode: if n == 3 {
                ModeName::Exhaustive
            } else {
                ModeName::Sampled
            },
            sample_count: 10_000,
            seed: 42,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 || self.n.is_multiple_of(2) {
            return Err(Error::InvalidOrder(self.n as i64));
        }
        if self.mode == ModeName::Sampled && self.sample_count == 0 {
            return Err(Error::InvalidArgument(
                "sample count must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn mode(&self) -> Mode {
        match self.mode {
            ModeName::Exhaustive => Mode::Exhaustive,
            ModeName::Sampled => Mode::Sampled {
                count: self.sample_count,
                seed: self.seed,
            },
        }
    }

    /// Parameter tuples per family in the families and filtration suites.
    pub fn params_per_family(&self) -> usize {
        if self.n == 3 {
            10
        } else {
            3
        }
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub claims: Vec<ClaimResult>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Runs the selected suites in order; claim ids are prefixed with the
/// suite name. `progress` is called after each suite.
pub fn run_suites(
    config: &SuiteConfig,
    mut progress: impl FnMut(Suite, &VerificationReport),
) -> Result<SuiteReport> {
    config.validate()?;
    let ctx = Sl2Context::new(config.n as i64)?;
    let mut all = VerificationReport::new();
    for &s in &config.suites {
        let r = run_suite(&ctx, config, s)?;
        progress(s, &r);
        all.extend(r.prefixed(s.name()));
    }
    let failed = all.claims.iter().filter(|c| !c.passed()).count();
    Ok(SuiteReport {
        config: config.clone(),
        summary: Summary {
            total: all.claims.len(),
            passed: all.claims.len() - failed,
            failed,
        },
        claims: all.claims,
    })
}

pub fn run_suite(
    ctx: &Sl2Context,
    config: &SuiteConfig,
    suite: Suite,
) -> Result<VerificationReport> {
    match suite {
        Suite::HopfAxioms => hopf_axioms(ctx, config),
        Suite::Cocycle => cocycle(ctx, config),
        Suite::Deformation => deformation(ctx),
        Suite::Families => families(ctx, config),
        Suite::Minpoly => minpoly(ctx, config),
        Suite::Chebyshev => chebyshev(ctx),
        Suite::Morita => morita(ctx, config),
        Suite::Filtration => filtration(ctx, config),
    }
}

fn hopf_axioms(ctx: &Sl2Context, config: &SuiteConfig) -> Result<VerificationReport> {
    let mode = config.mode();
    let gr = ctx.gr();
    let n = ctx.n();
    let mut r = verify_hopf(gr, &mode).prefixed("gr");
    let cases: Vec<usize> = (0..gr.dim()).collect();
    r.sweep(
        "gr.closed_form_comul",
        "Δ(x^i y^j g^k) equals the q-binomial closed form",
        &cases,
        |&i| {
            let p = PbwIndex::from_index(i, n);
            let ours = gr.coalgebra().comul(&crate::sparse::basis(i));
            (ours != closed_form_comul(ctx.field(), p)).then(|| format!("Δ({})", gr.labels()[i]))
        },
    );
    r.extend(verify_hopf(ctx.uq()?, &mode).prefixed("uq"));
    Ok(r)
}

/// `(σ * σ⁻¹)(a, b)` on one pair of basis elements.
fn convolve_at(
    h: &HopfAlgebraData<Cyclo>,
    s: &BilinearForm<Cyclo>,
    t: &BilinearForm<Cyclo>,
    a: usize,
    b: usize,
) -> Cyclo {
    let co = h.coalgebra();
    let mut acc = Cyclo::zero();
    for (a1, a2, ca) in co.basis_comul(a) {
        for (b1, b2, cb) in co.basis_comul(b) {
            if let (Some(x), Some(y)) = (s.lookup(*a1, *b1), t.lookup(*a2, *b2)) {
                acc += x.mul_ref(y).mul_ref(ca).mul_ref(cb);
            }
        }
    }
    acc
}

fn cocycle(ctx: &Sl2Context, config: &SuiteConfig) -> Result<VerificationReport> {
    let mode = config.mode();
    let gr = ctx.gr();
    let field = ctx.field();
    let (sigma, sigma_inv) = (ctx.sigma(), ctx.sigma_inv()?);
    let mut r = verify_hopf_2cocycle(sigma, gr, &mode);
    let pairs = mode.tuples::<2>(gr.dim());
    let counit = gr.coalgebra().counit();
    let l = gr.labels();
    for (id, anchor, first, second) in [
        ("inverse.right", "σ * σ⁻¹ = ε ⊗ ε", sigma, sigma_inv),
        ("inverse.left", "σ⁻¹ * σ = ε ⊗ ε", sigma_inv, sigma),
    ] {
        r.sweep(id, anchor, &pairs, |&[a, b]| {
            let got = convolve_at(gr, first, second, a, b);
            let want = counit[a].mul_ref(&counit[b]);
            (got != want)
                .then(|| format!("value {got} at ({}, {}) but ε⊗ε gives {want}", l[a], l[b]))
        });
    }
    let exp = sigma_via_exponential(field, gr)?;
    let diff = sigma.first_difference(&exp);
    r.record(
        "exponential",
        "σ = exp_{q²}(ξ₁ ⊗ ξ₂) coefficientwise",
        diff.is_none(),
        || {
            let (a, b, x, y) = diff.clone().expect("difference");
            format!("σ({}, {}) = {x} but the exponential gives {y}", l[a], l[b])
        },
    );
    r.extend(verify_dual_relations(field, gr)?);
    r.extend(verify_exponential_addition(field, gr, &mode)?);
    Ok(r)
}

fn deformation(ctx: &Sl2Context) -> Result<VerificationReport> {
    let gr = ctx.gr();
    let mut d = deform_hopf(gr, ctx.sigma(), ctx.sigma_inv()?)?;
    d.algebra_mut()
        .relabel(pbw_labels(ctx.n(), ["Et", "F", "K"]));
    let mut r = verify_uq_relations(ctx.field(), &d);
    r.record(
        "coalgebra_unchanged",
        "the deformation keeps the coalgebra",
        d.coalgebra() == gr.coalgebra(),
        || "comultiplication tables differ".into(),
    );
    Ok(r)
}

fn family_sample(ctx: &Sl2Context, config: &SuiteConfig, salt: u64) -> Vec<FamilyParams<Cyclo>> {
    sample::sample_family_params(
        ctx.field(),
        config.params_per_family(),
        &mut config.rng(salt),
    )
}

fn describe(p: &FamilyParams<Cyclo>) -> String {
    let mut parts = Vec::new();
    if let Some(r) = p.r {
        parts.push(format!("r={r}"));
    }
    for (name, v) in [
        ("alpha", &p.alpha),
        ("beta", &p.beta),
        ("xi", &p.xi),
        ("zeta", &p.zeta),
        ("eta", &p.eta),
    ] {
        if let Some(v) = v {
            parts.push(format!("{name}={v}"));
        }
    }
    format!("{}({})", p.family, parts.join(", "))
}

/// Merges per-instance reports: one claim per claim id, failing on the
/// first failing instance with that instance named in the witness.
fn merge_instances(reports: Vec<(String, VerificationReport)>) -> VerificationReport {
    let mut order: Vec<String> = Vec::new();
    let mut merged: std::collections::HashMap<String, ClaimResult> = Default::default();
    for (who, r) in reports {
        for c in r.claims {
            match merged.get_mut(&c.claim_id) {
                None => {
                    order.push(c.claim_id.clone());
                    let mut c = c;
                    if let Some(w) = &mut c.witness {
                        *w = format!("{who}: {w}");
                    }
                    merged.insert(c.claim_id.clone(), c);
                }
                Some(m) => {
                    m.checks += c.checks;
                    m.elapsed_ms = match (m.elapsed_ms, c.elapsed_ms) {
                        (Some(a), Some(b)) => Some(a + b),
                        (a, b) => a.or(b),
                    };
                    if m.passed() && !c.passed() {
                        m.status = c.status;
                        m.witness = c.witness.map(|w| format!("{who}: {w}"));
                    }
                }
            }
        }
    }
    VerificationReport {
        claims: order
            .into_iter()
            .map(|id| merged.remove(&id).expect("merged claim"))
            .collect(),
    }
}

fn family_instance(
    ctx: &Sl2Context,
    mode: &Mode,
    p: &FamilyParams<Cyclo>,
) -> Result<VerificationReport> {
    let tag = p.family;
    let l = zoo::build_family(ctx, p)?;
    let mut r = l.verify(mode).prefixed(&format!("{tag}.comodule_algebra"));
    r.extend(zoo::verify_family_relations(ctx, p)?);
    let a = zoo::deform_family(ctx, p)?;
    r.extend(
        a.verify(mode)
            .prefixed(&format!("deformed.{tag}.comodule_algebra")),
    );
    r.extend(zoo::verify_deformed_algebra(ctx, &l, &a, p)?);
    Ok(r)
}

fn families(ctx: &Sl2Context, config: &SuiteConfig) -> Result<VerificationReport> {
    let mode = config.mode();
    let params = family_sample(ctx, config, 1);
    let reports = params
        .par_iter()
        .map(|p| Ok((describe(p), family_instance(ctx, &mode, p)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_instances(reports))
}

fn minpoly(ctx: &Sl2Context, config: &SuiteConfig) -> Result<VerificationReport> {
    let field = ctx.field();
    let count = if ctx.n() == 3 { 20 } else { 5 };
    let mut rng = config.rng(2);
    let triples = sample::sample_minpoly_triples(field, count, &mut rng);
    ctx.uq()?;
    let reports = triples
        .par_iter()
        .map(|(a, b, g)| {
            Ok((
                format!("(α, β, γ) = ({a}, {b}, {g})"),
                zoo::verify_min_pol_lemma(ctx, a, b, g)?.0,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut r = merge_instances(reports);

    let points = sample::sample_uv_points(field, 20, &mut rng);
    let mut boundary = Vec::new();
    let mut a4 = Vec::new();
    for (i, (alpha, u, v)) in points.iter().enumerate() {
        let (beta, xi) = zoo::a4_params_from_uv(field, alpha, u, v)?;
        let n = ctx.n() as u64;
        let expect_ss = u.pow_u(n) != v.pow_u(n);
        let ss = zoo::semisimplicity_a4(field, alpha, &beta, &xi)?;
        let who = format!("(α, u, v) = ({alpha}, {u}, {v})");
        let mut one = VerificationReport::new();
        one.record(
            "semisimplicity.uv_chart",
            "A4 is semisimple iff u^N ≠ v^N",
            ss == expect_ss,
            || format!("semisimple {ss}"),
        );
        one.extend(zoo::one_dim_reps_a4(field, u, v)?.1);
        if i < 4 {
            one.extend(zoo::embed_a4_into_uq(ctx, alpha, u, v)?.report);
        }
        a4.push((who, one));
        boundary.push((alpha.clone(), beta, xi));
    }
    r.extend(merge_instances(a4));
    r.extend(zoo::verify_semisimplicity_boundary(field, &boundary)?);
    Ok(r)
}

fn chebyshev(ctx: &Sl2Context) -> Result<VerificationReport> {
    let n = ctx.n() as i64;
    let mut r = polyid::verify_power_sums((2 * n + 1).max(11))?;
    r.extend(polyid::verify_chebyshev_closed_form(12)?);
    for k in 2..=7 {
        r.extend(polyid::verify_chebyshev_identity(k)?);
    }
    r.extend(polyid::verify_min_pol_formula_consistency(ctx.field())?);
    Ok(r)
}

/// Table entry for the family of `p`.
fn classify_tag(p: &FamilyParams<Cyclo>) -> &'static str {
    match p.family {
        FamilyTag::L0 => "F0",
        FamilyTag::L1 => "F1",
        FamilyTag::L2 => "F2",
        FamilyTag::L3 | FamilyTag::L3N => "F3",
        FamilyTag::L4 => "F4",
    }
}

fn morita(ctx: &Sl2Context, config: &SuiteConfig) -> Result<VerificationReport> {
    let field = ctx.field();
    let n = ctx.n();
    let mut r = zoo::verify_stated_isomorphisms(ctx)?;

    let table = zoo::classify(n)?;
    let params = family_sample(ctx, config, 3);
    let d_reports = params
        .par_iter()
        .map(|p| {
            let a = zoo::build_family(ctx, p)?;
            let got = zoo::morita_invariant_d(&a)?;
            let entry = table
                .families
                .iter()
                .find(|f| f.tag == classify_tag(p))
                .and_then(|f| f.d_invariant.iter().find(|d| d.r == p.r || d.r.is_none()));
            let mut one = VerificationReport::new();
            let want = entry.map(|e| (e.ratio, e.socle_dim));
            one.record(
                &format!("d_invariant.{}", p.family),
                "d = (dim A / dim A₀, dim A₀) as tabulated per family",
                want == Some((got.ratio, got.socle_dim)),
                || {
                    format!(
                        "computed ({}, {}) but table {want:?}",
                        got.ratio, got.socle_dim
                    )
                },
            );
            Ok((describe(p), one))
        })
        .collect::<Result<Vec<_>>>()?;
    r.extend(merge_instances(d_reports));

    let x = field.int(2);
    let c1 = zoo::build_family(ctx, &FamilyParams::l1(n, x.clone()))?.coefficient_coalgebra();
    let c2 = zoo::build_family(ctx, &FamilyParams::l2(n, x))?.coefficient_coalgebra();
    let hx = crate::sparse::to_dense(
        &crate::sparse::basis::<Cyclo>(ctx.gr().generators()[0]),
        ctx.gr().dim(),
    );
    let (in1, in2) = (c1.contains(&hx)?, c2.contains(&hx)?);
    r.record(
        "coefficient_coalgebra.separates_L1_L2",
        "x lies in C(L1) but not in C(L2)",
        in1 && !in2,
        || format!("x ∈ C(L1): {in1}, x ∈ C(L2): {in2}"),
    );

    let cases = sample::morita_truth_table(field, 50, &mut config.rng(4));
    let mut wrong = None;
    let mut canon_wrong = None;
    for c in &cases {
        let got = zoo::morita_equivalent_params(field, &c.left, &c.right)?;
        if got != c.expected && wrong.is_none() {
            wrong = Some(format!(
                "{} vs {}: got {got}, expected {} ({})",
                describe(&c.left),
                describe(&c.right),
                c.expected,
                c.why
            ));
        }
        let same =
            zoo::canonical_params(field, &c.left)? == zoo::canonical_params(field, &c.right)?;
        if same != c.expected && canon_wrong.is_none() {
            canon_wrong = Some(format!(
                "{} vs {}: canonical forms equal {same}",
                describe(&c.left),
                describe(&c.right)
            ));
        }
    }
    r.record(
        "predicate.truth_table",
        "Morita predicate on seeded pairs with derived verdicts",
        wrong.is_none(),
        || wrong.clone().unwrap_or_default(),
    );
    r.record(
        "canonical.truth_table",
        "canonical forms agree exactly on Morita-equivalent pairs",
        canon_wrong.is_none(),
        || canon_wrong.clone().unwrap_or_default(),
    );
    Ok(r)
}

fn filtration_instance(
    ctx: &Sl2Context,
    p: &FamilyParams<Cyclo>,
    seed: u64,
) -> Result<VerificationReport> {
    let tag = p.family;
    let l = zoo::build_family(ctx, p)?;
    let a = zoo::deform_family(ctx, p)?;
    let (fl, fa) = (zoo::loewy_filtration(&l)?, zoo::loewy_filtration(&a)?);
    let mut r = VerificationReport::new();
    r.record(
        &format!("{tag}.layer_dims"),
        "Loewy layers of the deformed algebra have the dimensions of the original ones",
        fl.layer_dims == fa.layer_dims,
        || format!("original {:?}, deformed {:?}", fl.layer_dims, fa.layer_dims),
    );
    for (which, alg) in [("original", &l), ("deformed", &a)] {
        let dim = alg.coinvariants().dim();
        r.record(
            &format!("{tag}.coinvariants.{which}"),
            "the coinvariants are one-dimensional",
            dim == 1,
            || format!("coinvariants of dimension {dim}"),
        );
    }
    r.extend(simplicity_claim(
        &l,
        &format!("{tag}.simple.original"),
        seed,
    )?);
    r.extend(simplicity_claim(
        &a,
        &format!("{tag}.simple.deformed"),
        seed,
    )?);
    Ok(r)
}

fn simplicity_claim(a: &ComoduleAlgebra<Cyclo>, id: &str, seed: u64) -> Result<VerificationReport> {
    let e = zoo::is_right_h_simple(a, seed, 4)?;
    let mut r = VerificationReport::new();
    r.record(
        id,
        "right H-simple (no proper costable right ideal)",
        e.simple,
        || e.detail.clone(),
    );
    Ok(r)
}

fn filtration(ctx: &Sl2Context, config: &SuiteConfig) -> Result<VerificationReport> {
    let params = family_sample(ctx, config, 5);
    let reports = params
        .par_iter()
        .map(|p| Ok((describe(p), filtration_instance(ctx, p, config.seed)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_instances(reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        assert_eq!(Suite::parse_list("all").unwrap().len(), 8);
        assert_eq!(
            Suite::parse_list("cocycle, morita").unwrap(),
            vec![Suite::Cocycle, Suite::Morita]
        );
        assert!(Suite::parse_list("bogus").is_err());
        assert_eq!(
            serde_json::to_string(&Suite::HopfAxioms).unwrap(),
            "\"hopf-axioms\""
        );
    }
}
