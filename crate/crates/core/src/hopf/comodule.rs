use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::report::{Mode, VerificationReport};
use crate::scalar::Field;
use crate::sparse::{self, TensorVector, Vector};
use crate::zoo::FamilyParams;

use super::algebra::{tensor_mul, FiniteAlgebra};
use super::data::HopfAlgebraData;
use super::verify::verify_algebra_with;

/// Left `H`-comodule algebra: an algebra `A` with an algebra map
/// `δ: A → H ⊗ A` making `A` a left comodule.
#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleAlgebra<F> {
    algebra: FiniteAlgebra<F>,
    over: Arc<HopfAlgebraData<F>>,
    /// `coaction[a]` lists `(h, b, c)` with `δ(e_a) = Σ c e_h ⊗ e_b`.
    coaction: Vec<Vec<(usize, usize, F)>>,
    params: Option<FamilyParams<F>>,
}

impl<F: Field> ComoduleAlgebra<F> {
    pub fn new(
        algebra: FiniteAlgebra<F>,
        over: Arc<HopfAlgebraData<F>>,
        coaction: Vec<Vec<(usize, usize, F)>>,
    ) -> Result<Self> {
        let (da, dh) = (algebra.dim(), over.dim());
        if coaction.len() != da
            || coaction
                .iter()
                .flatten()
                .any(|(h, b, _)| *h >= dh || *b >= da)
        {
            return Err(Error::DimensionMismatch(
                "coaction table does not fit H ⊗ A".into(),
            ));
        }
        Ok(ComoduleAlgebra {
            algebra,
            over,
            coaction,
            params: None,
        })
    }

    /// `H` coacting on itself by comultiplication.
    pub fn regular(h: Arc<HopfAlgebraData<F>>) -> Self {
        let coaction = h.coalgebra().table().to_vec();
        ComoduleAlgebra {
            algebra: h.algebra().clone(),
            over: h,
            coaction,
            params: None,
        }
    }

    pub fn with_params(mut self, p: FamilyParams<F>) -> Self {
        self.params = Some(p);
        self
    }

    pub fn params(&self) -> Option<&FamilyParams<F>> {
        self.params.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &FiniteAlgebra<F> {
        &self.algebra
    }

    pub fn algebra_mut(&mut self) -> &mut FiniteAlgebra<F> {
        &mut self.algebra
    }

    pub fn over(&self) -> &Arc<HopfAlgebraData<F>> {
        &self.over
    }

    pub fn coaction_table(&self) -> &[Vec<(usize, usize, F)>] {
        &self.coaction
    }

    pub fn basis_coaction(&self, a: usize) -> &[(usize, usize, F)] {
        &self.coaction[a]
    }

    pub fn set_basis_coaction(&mut self, a: usize, v: TensorVector<F>) {
        self.coaction[a] = v.into_iter().map(|((h, b), c)| (h, b, c)).collect();
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }

    pub fn mul(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        self.algebra.mul(a, b)
    }

    pub fn one(&self) -> Vector<F> {
        self.algebra.one()
    }

    pub fn coact(&self, v: &Vector<F>) -> TensorVector<F> {
        let mut out = TensorVector::new();
        for (&a, x) in v {
            for (h, b, c) in &self.coaction[a] {
                sparse::add_term(&mut out, (*h, *b), x.mul_ref(c));
            }
        }
        out
    }

    fn render_tensor(&self, t: &TensorVector<F>) -> String {
        sparse::render_tensor(t, self.over.labels(), self.labels())
    }

    /// Algebra axioms, coassociativity, counitality, and `δ` being a unital
    /// algebra map.
    pub fn verify(&self, mode: &Mode) -> VerificationReport {
        let mut r = verify_algebra_with(&self.algebra, mode, &[]);
        let h = &self.over;
        let hl = h.labels();
        let al = self.labels();
        let all: Vec<usize> = (0..self.dim()).collect();
        r.sweep(
            "coaction.coassociativity",
            "(Δ⊗id)δ = (id⊗δ)δ",
            &all,
            |&a| {
                let mut left = BTreeMap::new();
                let mut right = BTreeMap::new();
                for (hh, b, c) in &self.coaction[a] {
                    for (h1, h2, d) in h.coalgebra().basis_comul(*hh) {
                        sparse::add_term(&mut left, (*h1, *h2, *b), c.mul_ref(d));
                    }
                    for (h2, b2, d) in &self.coaction[*b] {
                        sparse::add_term(&mut right, (*hh, *h2, *b2), c.mul_ref(d));
                    }
                }
                (left != right).then(|| format!("coassociativity fails on {}", al[a]))
            },
        );
        r.sweep("coaction.counit", "(eps⊗id)δ = id", &all, |&a| {
            let mut v = Vector::new();
            for (hh, b, c) in &self.coaction[a] {
                sparse::add_term(&mut v, *b, c.mul_ref(&h.coalgebra().counit()[*hh]));
            }
            (v != sparse::basis(a))
                .then(|| format!("(eps⊗id)δ({}) = {}", al[a], sparse::render(&v, al)))
        });
        let pairs = mode.tuples::<2>(self.dim());
        r.sweep(
            "coaction.multiplicative",
            "δ(ab) = δ(a)δ(b)",
            &pairs,
            |&[a, b]| {
                let (ea, eb) = (sparse::basis(a), sparse::basis(b));
                let left = self.coact(&self.mul(&ea, &eb));
                let right = tensor_mul(
                    h.algebra(),
                    &self.algebra,
                    &self.coact(&ea),
                    &self.coact(&eb),
                );
                (left != right).then(|| {
                    format!(
                        "δ({0}*{1}) = {2} but δ({0})δ({1}) = {3}",
                        al[a],
                        al[b],
                        self.render_tensor(&left),
                        self.render_tensor(&right)
                    )
                })
            },
        );
        let one = self.one();
        let d1 = self.coact(&one);
        let mut expected = TensorVector::new();
        for (&x, cx) in &h.one() {
            for (&y, cy) in &one {
                sparse::add_term(&mut expected, (x, y), cx.mul_ref(cy));
            }
        }
        r.record("coaction.unit", "δ(1) = 1⊗1", d1 == expected, || {
            format!("δ(1) = {}", sparse::render_tensor(&d1, hl, al))
        });
        r
    }

    /// Same algebra with coaction `a ↦ g a₋₁ g⁻¹ ⊗ a₀`.
    pub fn conjugate(&self, g: usize) -> Result<Self> {
        let h = &self.over;
        let ginv = h.grouplike_inverse(g)?;
        let (eg, egi) = (sparse::basis(g), sparse::basis(ginv));
        let conj: Vec<Vector<F>> = (0..h.dim())
            .map(|i| h.mul(&h.mul(&eg, &sparse::basis(i)), &egi))
            .collect();
        let coaction = self
            .coaction
            .iter()
            .map(|terms| {
                let mut t = TensorVector::new();
                for (hh, b, c) in terms {
                    for (k, d) in &conj[*hh] {
                        sparse::add_term(&mut t, (*k, *b), c.mul_ref(d));
                    }
                }
                t.into_iter().map(|((k, b), c)| (k, b, c)).collect()
            })
            .collect();
        Ok(ComoduleAlgebra {
            algebra: self.algebra.clone(),
            over: self.over.clone(),
            coaction,
            params: self.params.clone(),
        })
    }

    /// `{a : δ(a) = 1 ⊗ a}`.
    pub fn coinvariants(&self) -> Subspace<F> {
        let one_h = self.over.one();
        let mut rows: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut columns: Vec<TensorVector<F>> = Vec::new();
        for a in 0..self.dim() {
            let mut t = self.coact(&sparse::basis(a));
            for (&x, c) in &one_h {
                sparse::add_term(&mut t, (x, a), -c.clone());
            }
            for k in t.keys() {
                let n = rows.len();
                rows.entry(*k).or_insert(n);
            }
            columns.push(t);
        }
        let mut m = Matrix::zeros(rows.len(), self.dim());
        for (a, t) in columns.iter().enumerate() {
            for (k, c) in t {
                m.set(rows[k], a, c.clone());
            }
        }
        m.kernel()
    }

    /// Vectors `(e_h* ⊗ id) δ(v)` for every basis `h`.
    fn coefficient_maps(&self, v: &Vector<F>) -> Vec<Vector<F>> {
        let mut by_h: BTreeMap<usize, Vector<F>> = BTreeMap::new();
        for ((h, b), c) in self.coact(v) {
            sparse::add_term(by_h.entry(h).or_default(), b, c);
        }
        by_h.into_values().collect()
    }

    /// Smallest subspace containing `v` that is a right ideal and is stable
    /// under every `(f ⊗ id) δ`.
    pub fn costable_closure(&self, v: &Subspace<F>) -> Subspace<F> {
        let d = self.dim();
        let mut current = v.clone();
        loop {
            let mut gens = current.basis_vectors();
            for w in current.basis_vectors() {
                let w = sparse::from_dense(&w);
                for j in 0..d {
                    gens.push(sparse::to_dense(&self.mul(&w, &sparse::basis(j)), d));
                }
                for c in self.coefficient_maps(&w) {
                    gens.push(sparse::to_dense(&c, d));
                }
            }
            let next = Subspace::from_vectors(d, gens).expect("ambient dimension");
            if next.dim() == current.dim() {
                return next;
            }
            current = next;
        }
    }

    /// `C(A) = span{(id ⊗ f) δ(a)}`, a subspace of `H`.
    pub fn coefficient_coalgebra(&self) -> Subspace<F> {
        let dh = self.over.dim();
        let mut by_ab: BTreeMap<(usize, usize), Vector<F>> = BTreeMap::new();
        for (a, terms) in self.coaction.iter().enumerate() {
            for (h, b, c) in terms {
                sparse::add_term(by_ab.entry((a, *b)).or_default(), *h, c.clone());
            }
        }
        let rows = by_ab.values().map(|v| sparse::to_dense(v, dh)).collect();
        Subspace::from_vectors(dh, rows).expect("ambient dimension")
    }

    /// `A ⊕ B` with componentwise product and coaction.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.over, &other.over) && self.over != other.over {
            return Err(Error::InvalidArgument(
                "direct sum over different Hopf algebras".into(),
            ));
        }
        let (da, db) = (self.dim(), other.dim());
        let labels: Vec<String> = self
            .labels()
            .iter()
            .map(|l| format!("({l},0)"))
            .chain(other.labels().iter().map(|l| format!("(0,{l})")))
            .collect();
        let mut unit = self.one();
        for (k, c) in other.one() {
            unit.insert(da + k, c);
        }
        let algebra = FiniteAlgebra::from_fn(labels, unit, |i, j| match (i < da, j < da) {
            (true, true) => self.algebra.basis_product(i, j).iter().cloned().collect(),
            (false, false) => other
                .algebra
                .basis_product(i - da, j - da)
                .iter()
                .map(|(k, c)| (k + da, c.clone()))
                .collect(),
            _ => Vector::new(),
        });
        let mut coaction = self.coaction.clone();
        for t in &other.coaction {
            coaction.push(t.iter().map(|(h, b, c)| (*h, b + da, c.clone())).collect());
        }
        debug_assert_eq!(coaction.len(), da + db);
        Self::new(algebra, self.over.clone(), coaction)
    }
}

/// Injectivity and surjectivity of a checked morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorphismKind {
    pub injective: bool,
    pub surjective: bool,
}

impl MorphismKind {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Checks that `f` (column `j` = image of `e_j`, shape `dim B × dim A`) is
/// multiplicative, unital and `H`-colinear.
pub fn check_comodule_algebra_morphism<F: Field>(
    f: &Matrix<F>,
    a: &ComoduleAlgebra<F>,
    b: &ComoduleAlgebra<F>,
) -> Result<(VerificationReport, MorphismKind)> {
    if f.rows() != b.dim() || f.cols() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "map of shape {}x{} between algebras of dimensions {} and {}",
            f.rows(),
            f.cols(),
            a.dim(),
            b.dim()
        )));
    }
    let image: Vec<Vector<F>> = (0..a.dim())
        .map(|j| {
            sparse::from_dense(
                &(0..b.dim())
                    .map(|i| f.get(i, j).clone())
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let apply = |v: &Vector<F>| {
        let mut out = Vector::new();
        for (&j, c) in v {
            sparse::axpy(&mut out, c, &image[j]);
        }
        out
    };
    let mut r = VerificationReport::new();
    let al = a.labels();
    let pairs = Mode::Exhaustive.tuples::<2>(a.dim());
    r.sweep(
        "morphism.multiplicative",
        "f(xy) = f(x)f(y)",
        &pairs,
        |&[i, j]| {
            let left = apply(&a.mul(&sparse::basis(i), &sparse::basis(j)));
            let right = b.mul(&image[i], &image[j]);
            (left != right).then(|| {
                format!(
                    "f({0}*{1}) = {2} but f({0})f({1}) = {3}",
                    al[i],
                    al[j],
                    sparse::render(&left, b.labels()),
                    sparse::render(&right, b.labels())
                )
            })
        },
    );
    let f1 = apply(&a.one());
    r.record("morphism.unital", "f(1) = 1", f1 == b.one(), || {
        format!("f(1) = {}", sparse::render(&f1, b.labels()))
    });
    let all: Vec<usize> = (0..a.dim()).collect();
    r.sweep(
        "morphism.colinear",
        "δ_B f = (id ⊗ f) δ_A",
        &all,
        |&j| {
            let left = b.coact(&image[j]);
            let mut right = TensorVector::new();
            for (h, k, c) in a.basis_coaction(j) {
                for (i, d) in &image[*k] {
                    sparse::add_term(&mut right, (*h, *i), c.mul_ref(d));
                }
            }
            (left != right).then(|| {
                format!(
                    "δ(f({})) = {} but (id⊗f)δ = {}",
                    al[j],
                    b.render_tensor(&left),
                    b.render_tensor(&right)
                )
            })
        },
    );
    let rank = f.rank();
    Ok((
        r,
        MorphismKind {
            injective: rank == a.dim(),
            surjective: rank == b.dim(),
        },
    ))
}
