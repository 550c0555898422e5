//! JSON form of algebras, Hopf algebras, comodule algebras and bilinear
//! forms, with coefficients written as strings in `q`. Import reproduces
//! the exported object exactly.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclofield::{parse, CyclotomicField};
use crate::error::{Error, Result};
use crate::hopf::{BilinearForm, ComoduleAlgebra, FiniteAlgebra, FiniteCoalgebra, HopfAlgebraData};
use crate::sparse::Vector;
use crate::zoo::{FamilyParams, FamilyTag};
use crate::Cyclo;
use num_traits::Zero;

/// Family parameters with string coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub xi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zeta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eta: Option<String>,
}

/// `mul` entries are `[i, j, k, c]` for `e_i e_j ∋ c e_k`; `comul` entries
/// `[i, j, k, c]` for `Δ(e_i) ∋ c e_j ⊗ e_k`; `coaction` entries `[a, h, b, c]`
/// for `δ(e_a) ∋ c e_h ⊗ e_b`; `form` entries `[i, j, c]` for `σ(e_i, e_j) = c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportDoc {
    #[serde(rename = "N")]
    pub n: usize,
    pub kind: String,
    pub basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unit: Option<Vec<(usize, String)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mul: Option<Vec<(usize, usize, usize, String)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub comul: Option<Vec<(usize, usize, usize, String)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counit: Option<Vec<(usize, String)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub antipode: Option<Vec<(usize, usize, String)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generators: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coradical_degree: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coaction: Option<Vec<(usize, usize, usize, String)>>,
    /// The Hopf algebra coacting on a comodule algebra.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub over: Option<Box<ExportDoc>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub form: Option<Vec<(usize, usize, String)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<ParamsDoc>,
}

pub const KIND_ALGEBRA: &str = "algebra";
pub const KIND_HOPF: &str = "hopf_algebra";
pub const KIND_COMODULE: &str = "comodule_algebra";
pub const KIND_FORM: &str = "bilinear_form";

fn put_algebra(doc: &mut ExportDoc, a: &FiniteAlgebra<Cyclo>) {
    let d = a.dim();
    doc.basis = a.labels().to_vec();
    doc.unit = Some(a.one().iter().map(|(i, c)| (*i, c.to_string())).collect());
    doc.mul = Some(
        a.table()
            .iter()
            .enumerate()
            .flat_map(|(t, row)| {
                row.iter()
                    .map(move |(k, c)| (t / d, t % d, *k, c.to_string()))
            })
            .collect(),
    );
}

pub fn export_algebra(n: usize, a: &FiniteAlgebra<Cyclo>) -> ExportDoc {
    let mut doc = ExportDoc {
        n,
        kind: KIND_ALGEBRA.into(),
        ..Default::default()
    };
    put_algebra(&mut doc, a);
    doc
}

pub fn export_hopf(n: usize, h: &HopfAlgebraData<Cyclo>) -> ExportDoc {
    let mut doc = export_algebra(n, h.algebra());
    doc.kind = KIND_HOPF.into();
    let c = h.coalgebra();
    doc.comul = Some(
        c.table()
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, k, x)| (i, *j, *k, x.to_string())))
            .collect(),
    );
    doc.counit = Some(
        c.counit()
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.to_string()))
            .collect(),
    );
    doc.antipode = Some(
        h.antipode()
            .iter()
            .enumerate()
            .flat_map(|(i, v)| v.iter().map(move |(j, x)| (i, *j, x.to_string())))
            .collect(),
    );
    doc.generators = Some(h.generators().to_vec());
    doc.coradical_degree = h.coradical_degree().map(<[usize]>::to_vec);
    doc
}

pub fn export_comodule(n: usize, a: &ComoduleAlgebra<Cyclo>) -> ExportDoc {
    let mut doc = export_algebra(n, a.algebra());
    doc.kind = KIND_COMODULE.into();
    doc.coaction = Some(
        a.coaction_table()
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(h, b, c)| (i, *h, *b, c.to_string())))
            .collect(),
    );
    doc.over = Some(Box::new(export_hopf(n, a.over())));
    doc.params = a.params().map(params_doc);
    doc
}

pub fn export_form(n: usize, labels: &[String], sigma: &BilinearForm<Cyclo>) -> ExportDoc {
    ExportDoc {
        n,
        kind: KIND_FORM.into(),
        basis: labels.to_vec(),
        form: Some(
            sigma
                .rows()
                .iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().map(move |(j, c)| (i, *j, c.to_string())))
                .collect(),
        ),
        ..Default::default()
    }
}

pub fn params_doc(p: &FamilyParams<Cyclo>) -> ParamsDoc {
    let s = |o: &Option<Cyclo>| o.as_ref().map(ToString::to_string);
    ParamsDoc {
        family: p.family.to_string(),
        r: p.r,
        alpha: s(&p.alpha),
        beta: s(&p.beta),
        xi: s(&p.xi),
        zeta: s(&p.zeta),
        eta: s(&p.eta),
    }
}

/// Reader holding the field the coefficients live in.
pub struct Importer {
    field: Arc<CyclotomicField>,
}

impl Importer {
    pub fn new(field: Arc<CyclotomicField>) -> Self {
        Importer { field }
    }

    /// An importer for the field of order `doc.n`.
    pub fn for_doc(doc: &ExportDoc) -> Result<Self> {
        Ok(Self::new(CyclotomicField::new(doc.n as i64)?))
    }

    fn num(&self, s: &str) -> Result<Cyclo> {
        parse(&self.field, s)
    }

    fn expect_kind(doc: &ExportDoc, kind: &str) -> Result<()> {
        if doc.kind == kind {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "expected a {kind} document, found {}",
                doc.kind
            )))
        }
    }

    fn field_of<'a, T>(what: &str, o: &'a Option<T>) -> Result<&'a T> {
        o.as_ref()
            .ok_or_else(|| Error::InvalidArgument(format!("document has no {what}")))
    }

    pub fn params(&self, p: &ParamsDoc) -> Result<FamilyParams<Cyclo>> {
        let c = |o: &Option<String>| o.as_deref().map(|s| self.num(s)).transpose();
        Ok(FamilyParams {
            family: p.family.parse::<FamilyTag>()?,
            r: p.r,
            alpha: c(&p.alpha)?,
            beta: c(&p.beta)?,
            xi: c(&p.xi)?,
            zeta: c(&p.zeta)?,
            eta: c(&p.eta)?,
        })
    }

    fn algebra_of(&self, doc: &ExportDoc) -> Result<FiniteAlgebra<Cyclo>> {
        let d = doc.basis.len();
        let mut unit = Vector::new();
        for (i, c) in Self::field_of("unit", &doc.unit)? {
            unit.insert(*i, self.num(c)?);
        }
        let mut mul = vec![Vec::new(); d * d];
        for (i, j, k, c) in Self::field_of("mul", &doc.mul)? {
            if *i >= d || *j >= d {
                return Err(Error::DimensionMismatch(format!(
                    "product index ({i}, {j}) out of range"
                )));
            }
            mul[i * d + j].push((*k, self.num(c)?));
        }
        FiniteAlgebra::from_table(doc.basis.clone(), unit, mul)
    }

    pub fn algebra(&self, doc: &ExportDoc) -> Result<FiniteAlgebra<Cyclo>> {
        Self::expect_kind(doc, KIND_ALGEBRA)?;
        self.algebra_of(doc)
    }

    pub fn hopf(&self, doc: &ExportDoc) -> Result<HopfAlgebraData<Cyclo>> {
        Self::expect_kind(doc, KIND_HOPF)?;
        let d = doc.basis.len();
        let algebra = self.algebra_of(doc)?;
        let out_of_range =
            |i: usize| Error::DimensionMismatch(format!("basis index {i} out of range"));
        let mut comul = vec![Vec::new(); d];
        for (i, j, k, c) in Self::field_of("comul", &doc.comul)? {
            comul
                .get_mut(*i)
                .ok_or_else(|| out_of_range(*i))?
                .push((*j, *k, self.num(c)?));
        }
        let mut counit = vec![self.field.zero(); d];
        for (i, c) in Self::field_of("counit", &doc.counit)? {
            *counit.get_mut(*i).ok_or_else(|| out_of_range(*i))? = self.num(c)?;
        }
        let mut antipode = vec![Vector::new(); d];
        for (i, j, c) in Self::field_of("antipode", &doc.antipode)? {
            antipode
                .get_mut(*i)
                .ok_or_else(|| out_of_range(*i))?
                .insert(*j, self.num(c)?);
        }
        let mut h = HopfAlgebraData::new(
            algebra,
            FiniteCoalgebra::from_table(comul, counit)?,
            antipode,
        )?
        .with_generators(doc.generators.clone().unwrap_or_default());
        if let Some(deg) = &doc.coradical_degree {
            if deg.len() != d {
                return Err(Error::DimensionMismatch("coradical degree length".into()));
            }
            h = h.with_coradical_degree(deg.clone());
        }
        Ok(h)
    }

    pub fn comodule(&self, doc: &ExportDoc) -> Result<ComoduleAlgebra<Cyclo>> {
        Self::expect_kind(doc, KIND_COMODULE)?;
        let over = Arc::new(self.hopf(Self::field_of("over", &doc.over)?)?);
        let algebra = self.algebra_of(doc)?;
        let mut coaction = vec![Vec::new(); doc.basis.len()];
        for (a, h, b, c) in Self::field_of("coaction", &doc.coaction)? {
            coaction
                .get_mut(*a)
                .ok_or_else(|| Error::DimensionMismatch(format!("basis index {a} out of range")))?
                .push((*h, *b, self.num(c)?));
        }
        let mut out = ComoduleAlgebra::new(algebra, over, coaction)?;
        if let Some(p) = &doc.params {
            out = out.with_params(self.params(p)?);
        }
        Ok(out)
    }

    pub fn form(&self, doc: &ExportDoc) -> Result<BilinearForm<Cyclo>> {
        Self::expect_kind(doc, KIND_FORM)?;
        let mut rows = vec![Vec::new(); doc.basis.len()];
        for (i, j, c) in Self::field_of("form", &doc.form)? {
            rows.get_mut(*i)
                .ok_or_else(|| Error::DimensionMismatch(format!("basis index {i} out of range")))?
                .push((*j, self.num(c)?));
        }
        BilinearForm::from_rows(rows)
    }
}

pub fn to_json(doc: &ExportDoc) -> Result<String> {
    Ok(serde_json::to_string_pretty(doc)?)
}

pub fn from_json(s: &str) -> Result<ExportDoc> {
    Ok(serde_json::from_str(s)?)
}
