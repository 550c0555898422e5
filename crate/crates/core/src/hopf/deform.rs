use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::sparse::{self, Vector};

use super::algebra::FiniteAlgebra;
use super::comodule::ComoduleAlgebra;
use super::data::HopfAlgebraData;
use super::forms::BilinearForm;

/// The cocycle deformation `H^σ`: same coalgebra, product
/// `a * b = σ(a₁, b₁) a₂ b₂ σ⁻¹(a₃, b₃)`, antipode re-solved.
pub fn deform_hopf<F: Field>(
    h: &HopfAlgebraData<F>,
    sigma: &BilinearForm<F>,
    sigma_inv: &BilinearForm<F>,
) -> Result<HopfAlgebraData<F>> {
    let dim = h.dim();
    if sigma.dim() != dim || sigma_inv.dim() != dim {
        return Err(Error::DimensionMismatch(
            "cocycle and Hopf algebra differ in dimension".into(),
        ));
    }
    let alg = h.algebra();
    let co = h.coalgebra();
    let mut by_first: Vec<Vec<(usize, usize, F)>> = vec![Vec::new(); dim];
    let mut by_second: Vec<Vec<(usize, usize, F)>> = vec![Vec::new(); dim];
    for b in 0..dim {
        for (b1, b2, c) in co.basis_comul(b) {
            by_first[*b1].push((b, *b2, c.clone()));
            by_second[*b2].push((b, *b1, c.clone()));
        }
    }

    // right[c][d] = Σ c₁d₁ σ⁻¹(c₂, d₂)
    let right: Vec<Vec<Vector<F>>> = (0..dim)
        .into_par_iter()
        .map(|c| {
            let mut row = vec![Vector::new(); dim];
            for (c1, c2, cc) in co.basis_comul(c) {
                for (d2, s) in sigma_inv.row(*c2) {
                    let w = cc.mul_ref(s);
                    for (d, d1, cd) in &by_second[*d2] {
                        let wd = w.mul_ref(cd);
                        for (k, x) in alg.basis_product(*c1, *d1) {
                            sparse::add_term(&mut row[*d], *k, wd.mul_ref(x));
                        }
                    }
                }
            }
            row
        })
        .collect();

    let table: Vec<Vec<Vec<(usize, F)>>> = (0..dim)
        .into_par_iter()
        .map(|a| {
            let mut row = vec![Vector::new(); dim];
            for (a1, a2, ca) in co.basis_comul(a) {
                for (b1, s) in sigma.row(*a1) {
                    let w = ca.mul_ref(s);
                    for (b, b2, cb) in &by_first[*b1] {
                        sparse::axpy(&mut row[*b], &w.mul_ref(cb), &right[*a2][*b2]);
                    }
                }
            }
            row.into_iter().map(|v| v.into_iter().collect()).collect()
        })
        .collect();
    let algebra = FiniteAlgebra::from_table(
        alg.labels().to_vec(),
        alg.one(),
        table.into_iter().flatten().collect(),
    )?;
    let mut out = HopfAlgebraData::with_solved_antipode(algebra, co.clone())?
        .with_generators(h.generators().to_vec());
    if let Some(d) = h.coradical_degree() {
        out = out.with_coradical_degree(d.to_vec());
    }
    Ok(out)
}

/// The deformation `a * b = σ(a₋₁, b₋₁) a₀ b₀` as a comodule algebra over
/// `over`, which must be `H^σ`.
pub fn deform_comodule_algebra<F: Field>(
    a: &ComoduleAlgebra<F>,
    sigma: &BilinearForm<F>,
    over: Arc<HopfAlgebraData<F>>,
) -> Result<ComoduleAlgebra<F>> {
    let dim = a.dim();
    let dh = a.over().dim();
    if sigma.dim() != dh || over.dim() != dh {
        return Err(Error::DimensionMismatch(
            "cocycle, H and H^σ differ in dimension".into(),
        ));
    }
    let alg = a.algebra();
    let mut by_first: Vec<Vec<(usize, usize, F)>> = vec![Vec::new(); dh];
    for b in 0..dim {
        for (h, b0, c) in a.basis_coaction(b) {
            by_first[*h].push((b, *b0, c.clone()));
        }
    }
    let table: Vec<Vec<(usize, F)>> = (0..dim)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut row = vec![Vector::new(); dim];
            for (h, x0, cx) in a.basis_coaction(x) {
                for (h2, s) in sigma.row(*h) {
                    let w = cx.mul_ref(s);
                    for (y, y0, cy) in &by_first[*h2] {
                        let wy = w.mul_ref(cy);
                        for (k, c) in alg.basis_product(*x0, *y0) {
                            sparse::add_term(&mut row[*y], *k, wy.mul_ref(c));
                        }
                    }
                }
            }
            row.into_iter().map(|v| v.into_iter().collect::<Vec<_>>())
        })
        .collect();
    let algebra = FiniteAlgebra::from_table(alg.labels().to_vec(), alg.one(), table)?;
    let mut out = ComoduleAlgebra::new(algebra, over, a.coaction_table().to_vec())?;
    if let Some(p) = a.params() {
        out = out.with_params(p.clone());
    }
    Ok(out)
}
