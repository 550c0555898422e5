use crate::error::{Error, Result};
use crate::scalar::Field;

use super::matrix::Matrix;

/// A subspace of `F^n`, stored by its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal iff their bases are.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<F>>) -> Result<Self> {
        let m = Matrix::from_rows(ambient, vectors)?;
        Ok(Self::from_matrix_rows(&m))
    }

    /// Span of the rows of `m`.
    pub fn from_matrix_rows(m: &Matrix<F>) -> Self {
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.cols(), rows).expect("rows of rref"),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Re-derives the canonical basis; a no-op on well-formed values.
    pub fn canonicalize(&self) -> Self {
        Self::from_matrix_rows(&self.basis)
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the
    /// subspace.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = w[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    w[j] -= c.mul_ref(b);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        Ok(self.reduce(v).iter().all(|x| x.is_zero()))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(
                "subspaces of different ambient spaces".into(),
            ));
        }
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Self::from_vectors(self.ambient, rows)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self
                .basis_vectors()
                .iter()
                .all(|v| other.contains(v).unwrap_or(false))
    }
}
