use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::sparse::{TensorVector, Vector};

use super::data::HopfAlgebraData;

/// Element of `H*`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFunctional<F> {
    coords: Vec<F>,
}

impl<F: Field> LinearFunctional<F> {
    pub fn new(coords: Vec<F>) -> Self {
        LinearFunctional { coords }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize) -> F) -> Self {
        LinearFunctional {
            coords: (0..dim).map(f).collect(),
        }
    }

    /// The counit, the unit for convolution.
    pub fn counit(h: &HopfAlgebraData<F>) -> Self {
        Self::new(h.coalgebra().counit().to_vec())
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_fn(dim, |_| F::zero())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn at(&self, i: usize) -> &F {
        &self.coords[i]
    }

    pub fn eval(&self, v: &Vector<F>) -> F {
        let mut acc = F::zero();
        for (&i, c) in v {
            if !self.coords[i].is_zero() {
                acc += c.mul_ref(&self.coords[i]);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coords.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// `(f * g)(h) = f(h₁) g(h₂)`.
    pub fn convolve(&self, other: &Self, h: &HopfAlgebraData<F>) -> Result<Self> {
        if self.dim() != h.dim() || other.dim() != h.dim() {
            return Err(Error::DimensionMismatch(
                "functional and Hopf algebra differ in dimension".into(),
            ));
        }
        Ok(Self::from_fn(h.dim(), |i| {
            let mut acc = F::zero();
            for (j, k, c) in h.coalgebra().basis_comul(i) {
                let (a, b) = (&self.coords[*j], &other.coords[*k]);
                if !a.is_zero() && !b.is_zero() {
                    acc += c.mul_ref(a).mul_ref(b);
                }
            }
            acc
        }))
    }

    /// `n`-th convolution power.
    pub fn pow(&self, n: usize, h: &HopfAlgebraData<F>) -> Result<Self> {
        let mut acc = Self::counit(h);
        for _ in 0..n {
            acc = acc.convolve(self, h)?;
        }
        Ok(acc)
    }

    /// `f ⊗ g` as a bilinear form.
    pub fn tensor(&self, other: &Self) -> BilinearForm<F> {
        let rows = self
            .coords
            .iter()
            .map(|a| {
                if a.is_zero() {
                    return Vec::new();
                }
                other
                    .coords
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| !b.is_zero())
                    .map(|(j, b)| (j, a.mul_ref(b)))
                    .collect()
            })
            .collect();
        BilinearForm { rows }
    }
}

/// Element of `(H ⊗ H)*`, stored as sparse rows.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<F> {
    /// `rows[a]` lists `(b, σ(e_a, e_b))` for nonzero values, sorted by `b`.
    rows: Vec<Vec<(usize, F)>>,
}

impl<F: Field> BilinearForm<F> {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> F + Sync) -> Self {
        let rows = (0..dim)
            .into_par_iter()
            .map(|a| {
                (0..dim)
                    .filter_map(|b| {
                        let v = f(a, b);
                        (!v.is_zero()).then_some((b, v))
                    })
                    .collect()
            })
            .collect();
        BilinearForm { rows }
    }

    pub fn from_rows(rows: Vec<Vec<(usize, F)>>) -> Result<Self> {
        let dim = rows.len();
        let mut rows = rows;
        for r in rows.iter_mut() {
            r.retain(|(_, c)| !c.is_zero());
            r.sort_by_key(|(b, _)| *b);
            if r.iter().any(|(b, _)| *b >= dim) || r.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::DimensionMismatch(
                    "bilinear form entry out of range or repeated".into(),
                ));
            }
        }
        Ok(BilinearForm { rows })
    }

    pub fn zero(dim: usize) -> Self {
        BilinearForm {
            rows: vec![Vec::new(); dim],
        }
    }

    /// `ε ⊗ ε`, the unit for convolution.
    pub fn counit(h: &HopfAlgebraData<F>) -> Self {
        let e = LinearFunctional::counit(h);
        e.tensor(&e)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<(usize, F)>] {
        &self.rows
    }

    pub fn row(&self, a: usize) -> &[(usize, F)] {
        &self.rows[a]
    }

    pub fn get(&self, a: usize, b: usize) -> F {
        let r = &self.rows[a];
        match r.binary_search_by_key(&b, |(k, _)| *k) {
            Ok(p) => r[p].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn lookup(&self, a: usize, b: usize) -> Option<&F> {
        let r = &self.rows[a];
        r.binary_search_by_key(&b, |(k, _)| *k)
            .ok()
            .map(|p| &r[p].1)
    }

    /// Overwrites one entry; used to build corrupted forms for negative tests.
    pub fn set(&mut self, a: usize, b: usize, v: F) {
        let r = &mut self.rows[a];
        match r.binary_search_by_key(&b, |(k, _)| *k) {
            Ok(p) if v.is_zero() => {
                r.remove(p);
            }
            Ok(p) => r[p].1 = v,
            Err(_) if v.is_zero() => {}
            Err(p) => r.insert(p, (b, v)),
        }
    }

    pub fn eval(&self, t: &TensorVector<F>) -> F {
        let mut acc = F::zero();
        for (&(a, b), c) in t {
            if let Some(v) = self.lookup(a, b) {
                acc += c.mul_ref(v);
            }
        }
        acc
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    fn combine(&self, other: &Self, c: &F) -> Self {
        let mut out = self.clone();
        for (a, r) in other.rows.iter().enumerate() {
            for (b, v) in r {
                let nv = out.get(a, *b) + v.mul_ref(c);
                out.set(a, *b, nv);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, &F::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, &-F::one())
    }

    pub fn scale(&self, c: &F) -> Self {
        BilinearForm::from_rows(
            self.rows
                .iter()
                .map(|r| r.iter().map(|(b, v)| (*b, v.mul_ref(c))).collect())
                .collect(),
        )
        .expect("shape preserved")
    }

    /// `(f * g)(a, b) = f(a₁, b₁) g(a₂, b₂)`.
    pub fn convolve(&self, other: &Self, h: &HopfAlgebraData<F>) -> Result<Self> {
        let dim = h.dim();
        if self.dim() != dim || other.dim() != dim {
            return Err(Error::DimensionMismatch(
                "bilinear form and Hopf algebra differ in dimension".into(),
            ));
        }
        let co = h.coalgebra();
        // For each first leg b₁: every (b, b₂, c) with c b₁ ⊗ b₂ a term of Δ(b).
        let mut by_first: Vec<Vec<(usize, usize, F)>> = vec![Vec::new(); dim];
        for b in 0..dim {
            for (b1, b2, c) in co.basis_comul(b) {
                by_first[*b1].push((b, *b2, c.clone()));
            }
        }
        let rows = (0..dim)
            .into_par_iter()
            .map(|a| {
                let mut acc: std::collections::BTreeMap<usize, F> = Default::default();
                for (a1, a2, ca) in co.basis_comul(a) {
                    let grow = other.row(*a2);
                    if grow.is_empty() {
                        continue;
                    }
                    for (b1, fv) in self.row(*a1) {
                        let fv = ca.mul_ref(fv);
                        for (b, b2, cb) in &by_first[*b1] {
                            if let Ok(p) = grow.binary_search_by_key(b2, |(k, _)| *k) {
                                crate::sparse::add_term(
                                    &mut acc,
                                    *b,
                                    fv.mul_ref(cb).mul_ref(&grow[p].1),
                                );
                            }
                        }
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        Ok(BilinearForm { rows })
    }

    /// `n`-th convolution power.
    pub fn pow(&self, n: usize, h: &HopfAlgebraData<F>) -> Result<Self> {
        let mut acc = Self::counit(h);
        for _ in 0..n {
            acc = acc.convolve(self, h)?;
        }
        Ok(acc)
    }

    /// First basis pair where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, F, F)> {
        for a in 0..self.dim().max(other.dim()) {
            let keys: std::collections::BTreeSet<usize> = self
                .rows
                .get(a)
                .into_iter()
                .flatten()
                .chain(other.rows.get(a).into_iter().flatten())
                .map(|(b, _)| *b)
                .collect();
            for b in keys {
                let (x, y) = (self.get(a, b), other.get(a, b));
                if x != y {
                    return Some((a, b, x, y));
                }
            }
        }
        None
    }
}

/// `σ⁻¹ = ε⊗ε + ν + ν² + … + ν^{bound−1}` with `ν = ε⊗ε − σ`, after checking
/// `ν^bound = 0`.
pub fn convolution_inverse<F: Field>(
    sigma: &BilinearForm<F>,
    h: &HopfAlgebraData<F>,
    bound: usize,
) -> Result<BilinearForm<F>> {
    let unit = BilinearForm::counit(h);
    let nu = unit.sub(sigma);
    let mut acc = unit.clone();
    let mut power = unit;
    for _ in 1..bound {
        power = power.convolve(&nu, h)?;
        acc = acc.add(&power);
    }
    let top = power.convolve(&nu, h)?;
    if let Some((a, b, v, _)) = top.first_difference(&BilinearForm::zero(h.dim())) {
        return Err(Error::NotNilpotent(format!(
            "nu^{bound} is nonzero at ({}, {}) with value {v}",
            h.labels()[a],
            h.labels()[b]
        )));
    }
    Ok(acc)
}

/// Truncated exponential `Σ_{r<bound} X^r / (r)_λ!` under convolution.
pub fn q_exponential<F: Field>(
    x: &BilinearForm<F>,
    lambda: &F,
    bound: usize,
    h: &HopfAlgebraData<F>,
) -> Result<BilinearForm<F>> {
    let mut acc = BilinearForm::counit(h);
    let mut power = acc.clone();
    for r in 1..bound {
        power = power.convolve(x, h)?;
        let fact = crate::cyclofield::q_factorial(r as i64, lambda)?;
        let inv = fact.inv().ok_or(Error::DivisionByZero)?;
        acc = acc.add(&power.scale(&inv));
    }
    let top = power.convolve(x, h)?;
    if let Some((a, b, v, _)) = top.first_difference(&BilinearForm::zero(h.dim())) {
        return Err(Error::NotNilpotent(format!(
            "X^{bound} is nonzero at ({}, {}) with value {v}",
            h.labels()[a],
            h.labels()[b]
        )));
    }
    Ok(acc)
}
