use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One parameter slot of a family and the set it ranges over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSlot {
    pub name: String,
    pub domain: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamDomain {
    pub r: Option<usize>,
    pub params: Vec<ParamSlot>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DInvariantEntry {
    pub r: Option<usize>,
    pub ratio: usize,
    pub socle_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionEntry {
    pub r: Option<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub tag: String,
    pub family: String,
    pub param_domain: Vec<ParamDomain>,
    pub canonical_rule: String,
    pub d_invariant: Vec<DInvariantEntry>,
    pub dimension: Vec<DimensionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationTable {
    #[serde(rename = "N")]
    pub n: usize,
    pub families: Vec<FamilyEntry>,
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn slot(name: &str, domain: &str) -> ParamSlot {
    ParamSlot {
        name: name.into(),
        domain: domain.into(),
    }
}

const FIELD: &str = "Q(q)";

/// Per-`r` data of one of the four `r`-indexed families. `grade` is the
/// `d`-ratio and the factor `dim / r`.
fn r_family(
    tag: &str,
    family: &str,
    rs: &[usize],
    slots: impl Fn(usize) -> Vec<ParamSlot>,
    grade: usize,
    canonical_rule: &str,
) -> FamilyEntry {
    FamilyEntry {
        tag: tag.into(),
        family: family.into(),
        param_domain: rs
            .iter()
            .map(|&r| ParamDomain {
                r: Some(r),
                params: slots(r),
            })
            .collect(),
        canonical_rule: canonical_rule.into(),
        d_invariant: rs
            .iter()
            .map(|&r| DInvariantEntry {
                r: Some(r),
                ratio: grade,
                socle_dim: r,
            })
            .collect(),
        dimension: rs
            .iter()
            .map(|&r| DimensionEntry {
                r: Some(r),
                dim: grade * r,
            })
            .collect(),
    }
}

/// The table of Morita classes of indecomposable comodule algebras over
/// `u_q` at order `n`: parameter domains, canonical representatives,
/// `d`-invariants and dimensions.
pub fn classify(n: usize) -> Result<ClassificationTable> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidOrder(n as i64));
    }
    let all = divisors(n);
    let nontrivial: Vec<usize> = all.iter().copied().filter(|&r| r != 1).collect();
    let families = vec![
        r_family("F0", "L0(r)", &all, |_| vec![], 1, "parameters are the invariant: r"),
        r_family(
            "F1",
            "L1(r; xi)",
            &nontrivial,
            |_| vec![slot("xi", FIELD)],
            n,
            "parameters are the invariant: (r, xi)",
        ),
        r_family(
            "F2",
            "L2(r; zeta)",
            &nontrivial,
            |_| vec![slot("zeta", FIELD)],
            n,
            "parameters are the invariant: (r, zeta)",
        ),
        r_family(
            "F3",
            "L3(r; xi, zeta, eta)",
            &all,
            |r| {
                let eta = if r == n { FIELD } else { "0" };
                vec![slot("xi", FIELD), slot("zeta", FIELD), slot("eta", eta)]
            },
            n * n,
            "(r, xi, zeta) fixed; at r = N replace eta by the lexicographically least of {q^(2k) eta : 0 <= k < N}",
        ),
        FamilyEntry {
            tag: "F4".into(),
            family: "A4(alpha, beta; xi)".into(),
            param_domain: vec![ParamDomain {
                r: None,
                params: vec![
                    slot("alpha", FIELD),
                    slot("beta", FIELD),
                    slot("xi", FIELD),
                    slot("(alpha, beta)", "not both zero"),
                ],
            }],
            canonical_rule: "alpha != 0: scale by 1/alpha to (1, beta', xi/alpha^N), then take the lexicographically \
                             least beta' among the rescalings by (q^(2k), q^(-2k)); alpha = 0: (0, 1, beta^(-N) xi)"
                .into(),
            d_invariant: vec![DInvariantEntry {
                r: None,
                ratio: n,
                socle_dim: 1,
            }],
            dimension: vec![DimensionEntry { r: None, dim: n }],
        },
    ];
    Ok(ClassificationTable { n, families })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uqsl2::Sl2Context;
    use crate::zoo::{build_family, morita_invariant_d, FamilyParams};

    #[test]
    fn table_shape() {
        let t = classify(3).unwrap();
        assert_eq!(t.families.len(), 5);
        let rs = |i: usize| {
            t.families[i]
                .param_domain
                .iter()
                .map(|d| d.r)
                .collect::<Vec<_>>()
        };
        assert_eq!(rs(0), vec![Some(1), Some(3)]);
        assert_eq!(rs(1), vec![Some(3)]);
        assert_eq!(t.families[3].param_domain[0].params[2].domain, "0");
        assert_eq!(classify(15).unwrap().families[0].param_domain.len(), 4);
        assert!(classify(4).is_err());
    }

    #[test]
    fn d_values_match_built_algebras() {
        let ctx = Sl2Context::new(3).unwrap();
        let f = ctx.field().clone();
        let t = classify(3).unwrap();
        let instance = |tag: &str, r: Option<usize>| match (tag, r) {
            ("F0", Some(r)) => FamilyParams::l0(r),
            ("F1", Some(r)) => FamilyParams::l1(r, f.int(2)),
            ("F2", Some(r)) => FamilyParams::l2(r, f.q()),
            ("F3", Some(3)) => FamilyParams::l3n(3, f.one(), f.q(), f.int(2)),
            ("F3", Some(r)) => FamilyParams::l3(r, f.one(), f.q()),
            _ => FamilyParams::l4(f.one(), f.q(), f.int(5)),
        };
        for fam in &t.families {
            for (d, dim) in fam.d_invariant.iter().zip(&fam.dimension) {
                let a = build_family(&ctx, &instance(&fam.tag, d.r)).unwrap();
                assert_eq!(a.dim(), dim.dim);
                let got = morita_invariant_d(&a).unwrap();
                assert_eq!(
                    (got.ratio, got.socle_dim),
                    (d.ratio, d.socle_dim),
                    "{} r={:?}",
                    fam.tag,
                    d.r
                );
            }
        }
    }
}
