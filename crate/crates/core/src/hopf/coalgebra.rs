use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::sparse::{self, TensorVector, Vector};

/// Coassociative counital coalgebra given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteCoalgebra<F> {
    /// `comul[i]` lists `(j, k, c)` with `Δ(e_i) = Σ c e_j ⊗ e_k`.
    comul: Vec<Vec<(usize, usize, F)>>,
    counit: Vec<F>,
}

impl<F: Field> FiniteCoalgebra<F> {
    pub fn from_table(comul: Vec<Vec<(usize, usize, F)>>, counit: Vec<F>) -> Result<Self> {
        let dim = comul.len();
        if counit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "counit of length {} for dimension {dim}",
                counit.len()
            )));
        }
        if comul
            .iter()
            .flatten()
            .any(|(j, k, _)| *j >= dim || *k >= dim)
        {
            return Err(Error::DimensionMismatch("basis index out of range".into()));
        }
        Ok(FiniteCoalgebra { comul, counit })
    }

    pub fn dim(&self) -> usize {
        self.comul.len()
    }

    pub fn basis_comul(&self, i: usize) -> &[(usize, usize, F)] {
        &self.comul[i]
    }

    pub fn set_basis_comul(&mut self, i: usize, v: TensorVector<F>) {
        self.comul[i] = v.into_iter().map(|((j, k), c)| (j, k, c)).collect();
    }

    pub fn table(&self) -> &[Vec<(usize, usize, F)>] {
        &self.comul
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn comul(&self, v: &Vector<F>) -> TensorVector<F> {
        let mut out = TensorVector::new();
        for (&i, x) in v {
            for (j, k, c) in &self.comul[i] {
                sparse::add_term(&mut out, (*j, *k), x.mul_ref(c));
            }
        }
        out
    }

    pub fn counit_of(&self, v: &Vector<F>) -> F {
        let mut acc = F::zero();
        for (&i, x) in v {
            if !self.counit[i].is_zero() {
                acc += x.mul_ref(&self.counit[i]);
            }
        }
        acc
    }

    /// True iff `Δ(e_i) = e_i ⊗ e_i` and `ε(e_i) = 1`.
    pub fn is_grouplike(&self, i: usize) -> bool {
        let d = &self.comul[i];
        d.len() == 1 && d[0].0 == i && d[0].1 == i && d[0].2.is_one() && self.counit[i].is_one()
    }
}
