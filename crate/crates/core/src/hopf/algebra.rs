use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Field;
use crate::sparse::{self, TensorVector, Vector};

/// Associative unital algebra given by structure constants on a basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteAlgebra<F> {
    labels: Vec<String>,
    /// `mul[i * dim + j]` lists `(k, c)` with `e_i e_j = Σ c e_k`.
    mul: Vec<Vec<(usize, F)>>,
    unit: Vector<F>,
}

impl<F: Field> FiniteAlgebra<F> {
    /// Builds the table from `product(i, j)`; the result is not checked.
    pub fn from_fn(
        labels: Vec<String>,
        unit: Vector<F>,
        product: impl Fn(usize, usize) -> Vector<F>,
    ) -> Self {
        let dim = labels.len();
        let mul = (0..dim * dim)
            .map(|t| product(t / dim, t % dim).into_iter().collect())
            .collect();
        FiniteAlgebra { labels, mul, unit }
    }

    pub fn from_table(
        labels: Vec<String>,
        unit: Vector<F>,
        mul: Vec<Vec<(usize, F)>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if mul.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "multiplication table has {} entries for dimension {dim}",
                mul.len()
            )));
        }
        if mul.iter().flatten().any(|(k, _)| *k >= dim) || unit.keys().any(|&k| k >= dim) {
            return Err(Error::DimensionMismatch("basis index out of range".into()));
        }
        Ok(FiniteAlgebra { labels, mul, unit })
    }

    /// The one-dimensional algebra `k`.
    pub fn ground() -> Self {
        Self::from_fn(vec!["1".into()], sparse::basis(0), |_, _| sparse::basis(0))
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relabel(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
    }

    pub fn one(&self) -> Vector<F> {
        self.unit.clone()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.mul[i * self.dim() + j]
    }

    /// Replaces one structure constant entry; used to build corrupted
    /// structures for negative tests.
    pub fn set_basis_product(&mut self, i: usize, j: usize, v: Vector<F>) {
        let d = self.dim();
        self.mul[i * d + j] = v.into_iter().collect();
    }

    pub fn table(&self) -> &[Vec<(usize, F)>] {
        &self.mul
    }

    pub fn mul(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        let mut out = Vector::new();
        for (&i, x) in a {
            for (&j, y) in b {
                let xy = x.mul_ref(y);
                for (k, c) in self.basis_product(i, j) {
                    sparse::add_term(&mut out, *k, xy.mul_ref(c));
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &Vector<F>, n: usize) -> Vector<F> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Product of a list of elements, left to right.
    pub fn product(&self, factors: &[&Vector<F>]) -> Vector<F> {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// `Σ c · p(a)` for a polynomial given by coefficients, lowest first.
    pub fn eval_poly(&self, coeffs: &[F], a: &Vector<F>) -> Vector<F> {
        let mut acc = Vector::new();
        for c in coeffs.iter().rev() {
            acc = self.mul(&acc, a);
            sparse::axpy(&mut acc, c, &self.one());
        }
        acc
    }

    /// Two-sided inverse of `a`, if it exists.
    ///
    /// Monomials `c·e_k` are tried through their power cycle first; general
    /// elements fall back to solving `x a = 1`.
    pub fn inverse(&self, a: &Vector<F>) -> Option<Vector<F>> {
        if a.len() == 1 {
            let (&k, c) = a.iter().next().expect("one entry");
            let e: Vector<F> = sparse::basis(k);
            let mut p = e.clone();
            for m in 1..=self.dim() + 1 {
                if p.len() == 1 && self.unit.len() == 1 {
                    let (&pk, pc) = p.iter().next().expect("one entry");
                    let (&uk, uc) = self.unit.iter().next().expect("one entry");
                    if pk == uk {
                        // e^m = (pc/uc)·1, so e^{-1} = (uc/pc)·e^{m-1}.
                        let s = uc.mul_ref(&pc.inv()?).mul_ref(&c.inv()?);
                        return Some(sparse::scale(&self.pow(&e, m - 1), &s));
                    }
                }
                p = self.mul(&p, &e);
                if p.is_empty() {
                    return None;
                }
            }
        }
        let right = self.right_mul_matrix(a);
        let x = right
            .solve(&sparse::to_dense(&self.unit, self.dim()))
            .ok()??;
        let x = sparse::from_dense(&x);
        (self.mul(a, &x) == self.unit).then_some(x)
    }

    /// Matrix of `v ↦ v·a`; column `j` holds `e_j·a`.
    pub fn right_mul_matrix(&self, a: &Vector<F>) -> Matrix<F> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            for (k, c) in self.mul(&sparse::basis(j), a) {
                m.set(k, j, c);
            }
        }
        m
    }

    /// Matrix of `v ↦ a·v`; column `j` holds `a·e_j`.
    pub fn left_mul_matrix(&self, a: &Vector<F>) -> Matrix<F> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            for (k, c) in self.mul(a, &sparse::basis(j)) {
                m.set(k, j, c);
            }
        }
        m
    }

    /// Subalgebra generated by the given elements (as a subspace).
    pub fn generated_subalgebra(&self, gens: &[Vector<F>]) -> Subspace<F> {
        let d = self.dim();
        let mut span =
            Subspace::from_vectors(d, vec![sparse::to_dense(&self.unit, d)]).expect("unit");
        let mut frontier = vec![self.one()];
        while let Some(v) = frontier.pop() {
            for g in gens {
                let w = self.mul(&v, g);
                let dense = sparse::to_dense(&w, d);
                if !span.contains(&dense).expect("ambient") {
                    span = span
                        .sum(&Subspace::from_vectors(d, vec![dense]).expect("ambient"))
                        .expect("ambient");
                    frontier.push(w);
                }
            }
        }
        span
    }
}

/// Product in the tensor product algebra `H ⊗ A`.
pub fn tensor_mul<F: Field>(
    h: &FiniteAlgebra<F>,
    a: &FiniteAlgebra<F>,
    x: &TensorVector<F>,
    y: &TensorVector<F>,
) -> TensorVector<F> {
    let mut out = TensorVector::new();
    for (&(h1, a1), c1) in x {
        for (&(h2, a2), c2) in y {
            let c = c1.mul_ref(c2);
            let hh = h.basis_product(h1, h2);
            if hh.is_empty() {
                continue;
            }
            let aa = a.basis_product(a1, a2);
            for (k, ck) in hh {
                let ck = c.mul_ref(ck);
                for (l, cl) in aa {
                    sparse::add_term(&mut out, (*k, *l), ck.mul_ref(cl));
                }
            }
        }
    }
    out
}
