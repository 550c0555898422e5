use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::ComoduleAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Field;
use crate::sparse::{self, TensorVector, Vector};

/// Ascending layers `A₀ ⊂ A₁ ⊂ … = A`, `A_n = δ⁻¹(H_n ⊗ A)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LoewyFiltration<F> {
    pub layers: Vec<Subspace<F>>,
    pub layer_dims: Vec<usize>,
}

impl<F: Field> LoewyFiltration<F> {
    pub fn socle(&self) -> &Subspace<F> {
        &self.layers[0]
    }
}

/// Matrix with one row per key of the given tensors and one column per
/// tensor.
fn columns_matrix<F: Field>(columns: &[TensorVector<F>]) -> Matrix<F> {
    let mut rows: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for t in columns {
        for k in t.keys() {
            let n = rows.len();
            rows.entry(*k).or_insert(n);
        }
    }
    let mut m = Matrix::zeros(rows.len(), columns.len());
    for (j, t) in columns.iter().enumerate() {
        for (k, c) in t {
            m.set(rows[k], j, c.clone());
        }
    }
    m
}

/// Loewy layers from the coradical degree of the Hopf algebra; layer `n`
/// is the kernel of `(π_{>n} ⊗ id) δ`.
pub fn loewy_filtration<F: Field>(a: &ComoduleAlgebra<F>) -> Result<LoewyFiltration<F>> {
    let degree = a
        .over()
        .coradical_degree()
        .ok_or_else(|| Error::InvalidArgument("Hopf algebra carries no coradical degree".into()))?;
    let top = degree.iter().copied().max().unwrap_or(0);
    let d = a.dim();
    let mut layers = Vec::new();
    for n in 0..=top {
        let columns: Vec<TensorVector<F>> = (0..d)
            .map(|j| {
                a.basis_coaction(j)
                    .iter()
                    .filter(|(h, _, _)| degree[*h] > n)
                    .map(|(h, b, c)| ((*h, *b), c.clone()))
                    .collect()
            })
            .collect();
        let layer = if columns.iter().all(|c| c.is_empty()) {
            Subspace::full(d)
        } else {
            columns_matrix(&columns).kernel()
        };
        let full = layer.dim() == d;
        layers.push(layer);
        if full {
            break;
        }
    }
    let layer_dims = layers.iter().map(Subspace::dim).collect();
    Ok(LoewyFiltration { layers, layer_dims })
}

/// `(dim A / dim socle, dim socle)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoritaInvariantD {
    pub ratio: usize,
    pub socle_dim: usize,
}

pub fn morita_invariant_d<F: Field>(a: &ComoduleAlgebra<F>) -> Result<MoritaInvariantD> {
    let socle_dim = loewy_filtration(a)?.socle().dim();
    if socle_dim == 0 || !a.dim().is_multiple_of(socle_dim) {
        return Err(Error::InvalidArgument(format!(
            "socle of dimension {socle_dim} in an algebra of dimension {}",
            a.dim()
        )));
    }
    Ok(MoritaInvariantD {
        ratio: a.dim() / socle_dim,
        socle_dim,
    })
}

/// How a simplicity verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EvidenceTier {
    /// Decided exactly on the socle.
    Proved,
    /// Every random probe generated the whole algebra.
    Probed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityEvidence {
    pub simple: bool,
    pub tier: EvidenceTier,
    pub detail: String,
}

/// Homogeneous components `{v ∈ A₀ : δ(v) = g ⊗ v}` of the socle, one per
/// grouplike `g`, as vectors of `A`.
fn homogeneous_components<F: Field>(
    a: &ComoduleAlgebra<F>,
    socle: &Subspace<F>,
) -> Vec<Vec<Vector<F>>> {
    let basis: Vec<Vector<F>> = socle
        .basis_vectors()
        .iter()
        .map(|v| sparse::from_dense(v))
        .collect();
    let deltas: Vec<TensorVector<F>> = basis.iter().map(|v| a.coact(v)).collect();
    a.over()
        .grouplikes()
        .iter()
        .map(|&g| {
            let columns: Vec<TensorVector<F>> = basis
                .iter()
                .zip(&deltas)
                .map(|(v, dv)| {
                    let mut t = dv.clone();
                    for (b, c) in v {
                        sparse::add_term(&mut t, (g, *b), -c.clone());
                    }
                    t
                })
                .collect();
            let kernel = if columns.iter().all(|c| c.is_empty()) {
                Subspace::full(basis.len())
            } else {
                columns_matrix(&columns).kernel()
            };
            kernel
                .basis_vectors()
                .iter()
                .map(|coeffs| {
                    let mut v = Vector::new();
                    for (c, b) in coeffs.iter().zip(&basis) {
                        sparse::axpy(&mut v, c, b);
                    }
                    v
                })
                .collect::<Vec<_>>()
        })
        .filter(|c| !c.is_empty())
        .collect()
}

/// Right `H`-simplicity: no nonzero proper costable right ideal.
///
/// The socle `A₀` is graded by the grouplikes. A homogeneous element whose
/// right ideal in `A₀` is proper proves non-simplicity; when every
/// component is at most one-dimensional and each generates `A₀`, simplicity
/// is proved. Otherwise seeded random socle elements are closed under
/// the right action and the coaction.
pub fn is_right_h_simple<F: Field>(
    a: &ComoduleAlgebra<F>,
    seed: u64,
    probes: usize,
) -> Result<SimplicityEvidence> {
    let d = a.dim();
    let filtration = loewy_filtration(a)?;
    let socle = filtration.socle();
    let s = socle.dim();
    let socle_basis: Vec<Vector<F>> = socle
        .basis_vectors()
        .iter()
        .map(|v| sparse::from_dense(v))
        .collect();
    let components = homogeneous_components(a, socle);
    let graded = components.iter().map(Vec::len).sum::<usize>() == s;

    if graded {
        for comp in &components {
            for w in comp {
                let products = socle_basis
                    .iter()
                    .map(|b| sparse::to_dense(&a.mul(w, b), d))
                    .collect();
                let ideal = Subspace::from_vectors(d, products)?;
                if ideal.dim() < s {
                    return Ok(SimplicityEvidence {
                        simple: false,
                        tier: EvidenceTier::Proved,
                        detail: format!(
                            "homogeneous socle element {} generates a right ideal of dimension {} < {s}",
                            sparse::render(w, a.labels()),
                            ideal.dim()
                        ),
                    });
                }
            }
        }
        if components.iter().all(|c| c.len() <= 1) {
            return Ok(SimplicityEvidence {
                simple: true,
                tier: EvidenceTier::Proved,
                detail: format!("socle of dimension {s} has one-dimensional homogeneous components, each generating it"),
            });
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..probes.max(1) {
        let mut v = Vector::new();
        for b in &socle_basis {
            let c = F::from_i64(rng.gen_range(-3..=3));
            sparse::axpy(&mut v, &c, b);
        }
        if v.is_empty() {
            continue;
        }
        let start = Subspace::from_vectors(d, vec![sparse::to_dense(&v, d)])?;
        let closure = a.costable_closure(&start);
        if closure.dim() < d {
            return Ok(SimplicityEvidence {
                simple: false,
                tier: EvidenceTier::Proved,
                detail: format!(
                    "{} generates a costable right ideal of dimension {} < {d}",
                    sparse::render(&v, a.labels()),
                    closure.dim()
                ),
            });
        }
    }
    Ok(SimplicityEvidence {
        simple: true,
        tier: EvidenceTier::Probed,
        detail: format!("{probes} random socle elements each generate the whole algebra"),
    })
}
