use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Field;
use crate::sparse::{self, Vector};

use super::algebra::FiniteAlgebra;
use super::coalgebra::FiniteCoalgebra;

/// Largest dimension for which the unstructured linear solve is attempted.
const DENSE_LIMIT: usize = 16;

/// Solves `Σ S(h₁) h₂ = ε(h) 1` for the antipode.
///
/// For each basis element `h`, the terms of `Δ(h)` with first leg `h` give a
/// coefficient `u_h`; all other first legs must come earlier in a
/// dependency order, so that `S(h) = (ε(h) 1 − Σ S(h₁) h₂) u_h⁻¹`. When no
/// such order exists, small algebras fall back to one dense system.
pub fn solve_antipode<F: Field>(
    alg: &FiniteAlgebra<F>,
    coalg: &FiniteCoalgebra<F>,
) -> Result<Vec<Vector<F>>> {
    let dim = alg.dim();
    if coalg.dim() != dim {
        return Err(Error::DimensionMismatch(
            "algebra and coalgebra differ in dimension".into(),
        ));
    }
    match dependency_levels(coalg) {
        Some(levels) => triangular(alg, coalg, &levels),
        None if dim <= DENSE_LIMIT => dense(alg, coalg),
        None => Err(Error::AntipodeUnsolvable(
            "comultiplication has no triangular order on the basis".into(),
        )),
    }
}

/// Groups basis indices into levels such that every dependency of an
/// element lies in a strictly lower level; `None` on a cycle.
fn dependency_levels<F: Field>(coalg: &FiniteCoalgebra<F>) -> Option<Vec<Vec<usize>>> {
    let dim = coalg.dim();
    let deps: Vec<Vec<usize>> = (0..dim)
        .map(|h| {
            let mut d: Vec<usize> = coalg
                .basis_comul(h)
                .iter()
                .map(|t| t.0)
                .filter(|&h1| h1 != h)
                .collect();
            d.sort_unstable();
            d.dedup();
            d
        })
        .collect();
    let mut level = vec![usize::MAX; dim];
    let mut remaining: Vec<usize> = (0..dim).collect();
    let mut current = 0;
    let mut levels = Vec::new();
    while !remaining.is_empty() {
        let ready: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&h| deps[h].iter().all(|&d| level[d] < current))
            .collect();
        if ready.is_empty() {
            return None;
        }
        for &h in &ready {
            level[h] = current;
        }
        remaining.retain(|h| level[*h] == usize::MAX);
        levels.push(ready);
        current += 1;
    }
    Some(levels)
}

fn triangular<F: Field>(
    alg: &FiniteAlgebra<F>,
    coalg: &FiniteCoalgebra<F>,
    levels: &[Vec<usize>],
) -> Result<Vec<Vector<F>>> {
    let dim = alg.dim();
    let mut s: Vec<Option<Vector<F>>> = vec![None; dim];
    for level in levels {
        let solved: Vec<(usize, Result<Vector<F>>)> = level
            .par_iter()
            .map(|&h| {
                let mut u = Vector::new();
                let mut rhs = sparse::scale(&alg.one(), &coalg.counit()[h]);
                for (h1, h2, c) in coalg.basis_comul(h) {
                    if *h1 == h {
                        sparse::add_term(&mut u, *h2, c.clone());
                    } else {
                        let s1 = s[*h1].as_ref().expect("dependency solved");
                        let t = alg.mul(s1, &sparse::basis(*h2));
                        sparse::axpy(&mut rhs, &-c.clone(), &t);
                    }
                }
                let res = alg.inverse(&u).map(|ui| alg.mul(&rhs, &ui)).ok_or_else(|| {
                    Error::AntipodeUnsolvable(format!(
                        "leading coefficient of basis element {h} is not invertible"
                    ))
                });
                (h, res)
            })
            .collect();
        for (h, r) in solved {
            s[h] = Some(r?);
        }
    }
    Ok(s.into_iter()
        .map(|v| v.expect("every level solved"))
        .collect())
}

fn dense<F: Field>(alg: &FiniteAlgebra<F>, coalg: &FiniteCoalgebra<F>) -> Result<Vec<Vector<F>>> {
    let dim = alg.dim();
    let n = dim * dim;
    // Unknown s[k * dim + m] is the coefficient of e_m in S(e_k).
    let mut m: Matrix<F> = Matrix::zeros(n, n);
    let mut b = vec![F::zero(); n];
    for h in 0..dim {
        for (h1, h2, c) in coalg.basis_comul(h) {
            for mm in 0..dim {
                for (out, x) in alg.basis_product(mm, *h2) {
                    let row = h * dim + out;
                    let col = h1 * dim + mm;
                    let v = m.get(row, col).clone() + c.mul_ref(x);
                    m.set(row, col, v);
                }
            }
        }
        for (&out, x) in &alg.one() {
            b[h * dim + out] = coalg.counit()[h].mul_ref(x);
        }
    }
    let sol = m
        .solve(&b)?
        .ok_or_else(|| Error::AntipodeUnsolvable("inconsistent antipode equations".into()))?;
    Ok((0..dim)
        .map(|k| sparse::from_dense(&sol[k * dim..(k + 1) * dim]))
        .collect())
}
