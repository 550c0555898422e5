use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Field;
use crate::sparse::{self, TensorVector, Vector};

use super::algebra::{tensor_mul, FiniteAlgebra};
use super::antipode::solve_antipode;
use super::coalgebra::FiniteCoalgebra;

/// Hopf algebra on a common basis: algebra and coalgebra tables, antipode
/// and cached data.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebraData<F> {
    algebra: FiniteAlgebra<F>,
    coalgebra: FiniteCoalgebra<F>,
    /// `antipode[i] = S(e_i)`.
    antipode: Vec<Vector<F>>,
    grouplikes: Vec<usize>,
    /// Degree of each basis element in a basis compatible with the coradical
    /// filtration, when known.
    coradical_degree: Option<Vec<usize>>,
    /// Basis indices of algebra generators; sampled checks always include
    /// all tuples drawn from these.
    generators: Vec<usize>,
}

impl<F: Field> HopfAlgebraData<F> {
    pub fn new(
        algebra: FiniteAlgebra<F>,
        coalgebra: FiniteCoalgebra<F>,
        antipode: Vec<Vector<F>>,
    ) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() || antipode.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra {}, coalgebra {}, antipode {}",
                algebra.dim(),
                coalgebra.dim(),
                antipode.len()
            )));
        }
        let grouplikes = (0..coalgebra.dim())
            .filter(|&i| coalgebra.is_grouplike(i))
            .collect();
        Ok(HopfAlgebraData {
            algebra,
            coalgebra,
            antipode,
            grouplikes,
            coradical_degree: None,
            generators: Vec::new(),
        })
    }

    /// Like [`new`](Self::new) with the antipode obtained from the antipode
    /// equations.
    pub fn with_solved_antipode(
        algebra: FiniteAlgebra<F>,
        coalgebra: FiniteCoalgebra<F>,
    ) -> Result<Self> {
        let s = solve_antipode(&algebra, &coalgebra)?;
        Self::new(algebra, coalgebra, s)
    }

    pub fn with_coradical_degree(mut self, degree: Vec<usize>) -> Self {
        assert_eq!(degree.len(), self.dim());
        self.coradical_degree = Some(degree);
        self
    }

    pub fn with_generators(mut self, generators: Vec<usize>) -> Self {
        self.generators = generators;
        self
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

    pub fn coalgebra(&self) -> &FiniteCoalgebra<F> {
        &self.coalgebra
    }

    pub fn coalgebra_mut(&mut self) -> &mut FiniteCoalgebra<F> {
        &mut self.coalgebra
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }

    pub fn antipode(&self) -> &[Vector<F>] {
        &self.antipode
    }

    pub fn set_antipode(&mut self, i: usize, v: Vector<F>) {
        self.antipode[i] = v;
    }

    /// Antipode as a matrix; column `i` holds `S(e_i)`.
    pub fn antipode_matrix(&self) -> Matrix<F> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (i, s) in self.antipode.iter().enumerate() {
            for (&k, c) in s {
                m.set(k, i, c.clone());
            }
        }
        m
    }

    pub fn antipode_of(&self, v: &Vector<F>) -> Vector<F> {
        let mut out = Vector::new();
        for (&i, c) in v {
            sparse::axpy(&mut out, c, &self.antipode[i]);
        }
        out
    }

    pub fn grouplikes(&self) -> &[usize] {
        &self.grouplikes
    }

    pub fn coradical_degree(&self) -> Option<&[usize]> {
        self.coradical_degree.as_deref()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn mul(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        self.algebra.mul(a, b)
    }

    pub fn one(&self) -> Vector<F> {
        self.algebra.one()
    }

    pub fn comul(&self, v: &Vector<F>) -> TensorVector<F> {
        self.coalgebra.comul(v)
    }

    pub fn counit_of(&self, v: &Vector<F>) -> F {
        self.coalgebra.counit_of(v)
    }

    /// Product in `H ⊗ H`.
    pub fn tensor_mul(&self, x: &TensorVector<F>, y: &TensorVector<F>) -> TensorVector<F> {
        tensor_mul(&self.algebra, &self.algebra, x, y)
    }

    /// Inverse of a grouplike basis element.
    pub fn grouplike_inverse(&self, g: usize) -> Result<usize> {
        if !self.grouplikes.contains(&g) {
            return Err(Error::NotGrouplike(g));
        }
        let inv = self
            .algebra
            .inverse(&sparse::basis(g))
            .ok_or(Error::NotGrouplike(g))?;
        match inv.iter().next() {
            Some((&k, c)) if inv.len() == 1 && c.is_one() => Ok(k),
            _ => Err(Error::NotGrouplike(g)),
        }
    }
}
