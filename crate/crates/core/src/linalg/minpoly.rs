use crate::error::{Error, Result};
use crate::hopf::{FiniteAlgebra, Vector};
use crate::scalar::Field;
use crate::sparse;

use super::poly::Poly;

/// Monic minimal polynomial of the operator `step` relative to `start`: the
/// first linear dependence among `start, step(start), step²(start), …`.
///
/// Fails if no dependence appears among the first `max_degree + 1` vectors.
pub fn minimal_polynomial<F, S>(start: Vec<F>, mut step: S, max_degree: usize) -> Result<Poly<F>>
where
    F: Field,
    S: FnMut(&[F]) -> Vec<F>,
{
    let n = start.len();
    // Echelon rows: pivot, normalized vector, matching combination of powers.
    let mut rows: Vec<(usize, Vec<F>, Vec<F>)> = Vec::new();
    let mut current = start;
    for k in 0..=max_degree {
        let mut v = current.clone();
        let mut comb = vec![F::zero(); k + 1];
        comb[k] = F::one();
        for (p, rv, rc) in &rows {
            let c = v[*p].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                if !rv[j].is_zero() {
                    v[j] -= c.mul_ref(&rv[j]);
                }
            }
            for (j, x) in rc.iter().enumerate() {
                if !x.is_zero() {
                    comb[j] -= c.mul_ref(x);
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => return Ok(Poly::new(comb)),
            Some(p) => {
                let inv = v[p].inv().expect("nonzero pivot");
                let v: Vec<F> = v.iter().map(|x| x.mul_ref(&inv)).collect();
                let comb: Vec<F> = comb.iter().map(|x| x.mul_ref(&inv)).collect();
                rows.push((p, v, comb));
            }
        }
        if k < max_degree {
            current = step(&current);
        }
    }
    Err(Error::InvalidArgument(format!(
        "no linear dependence among the first {} powers",
        max_degree + 1
    )))
}

/// Minimal polynomial of `w` in `A`, from the powers `1, w, w², …`.
pub fn minimal_polynomial_of_element<F: Field>(a: &FiniteAlgebra<F>, w: &Vector<F>) -> Poly<F> {
    let dim = a.dim();
    let start = sparse::to_dense(&a.one(), dim);
    minimal_polynomial(
        start,
        |v| {
            let x = sparse::from_dense(v);
            sparse::to_dense(&a.mul(&x, w), dim)
        },
        dim,
    )
    .expect("powers in a space of dimension dim are dependent after dim + 1 steps")
}
