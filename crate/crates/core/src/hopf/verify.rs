use crate::report::{Mode, VerificationReport};
use crate::scalar::Field;
use crate::sparse::{self, TensorVector, Vector};

use super::algebra::FiniteAlgebra;
use super::coalgebra::FiniteCoalgebra;
use super::data::HopfAlgebraData;
use super::forms::BilinearForm;

/// Sweep cases: the tuples selected by `mode`, plus (when sampling) every
/// tuple drawn from `generators`.
fn cases<const K: usize>(mode: &Mode, dim: usize, generators: &[usize]) -> Vec<[usize; K]> {
    let mut out = mode.tuples::<K>(dim);
    if matches!(mode, Mode::Sampled { .. }) && !generators.is_empty() {
        let g = generators.len();
        for t in Mode::Exhaustive.tuples::<K>(g) {
            out.push(t.map(|i| generators[i]));
        }
    }
    out
}

fn render<F: Field>(alg: &FiniteAlgebra<F>, v: &Vector<F>) -> String {
    sparse::render(v, alg.labels())
}

/// Associativity and two-sided unit.
pub fn verify_algebra<F: Field>(alg: &FiniteAlgebra<F>, mode: &Mode) -> VerificationReport {
    verify_algebra_with(alg, mode, &[])
}

pub(crate) fn verify_algebra_with<F: Field>(
    alg: &FiniteAlgebra<F>,
    mode: &Mode,
    generators: &[usize],
) -> VerificationReport {
    let mut r = VerificationReport::new();
    let dim = alg.dim();
    let l = alg.labels();
    let triples = cases::<3>(mode, dim, generators);
    r.sweep(
        "associativity",
        "multiplication is associative",
        &triples,
        |&[i, j, k]| {
            let (ei, ej, ek) = (sparse::basis(i), sparse::basis(j), sparse::basis(k));
            let left = alg.mul(&alg.mul(&ei, &ej), &ek);
            let right = alg.mul(&ei, &alg.mul(&ej, &ek));
            (left != right).then(|| {
                format!(
                    "({}*{})*{} = {} but {}*({}*{}) = {}",
                    l[i],
                    l[j],
                    l[k],
                    render(alg, &left),
                    l[i],
                    l[j],
                    l[k],
                    render(alg, &right)
                )
            })
        },
    );
    let one = alg.one();
    let all: Vec<usize> = (0..dim).collect();
    r.sweep("unit", "unit is two-sided", &all, |&i| {
        let e = sparse::basis(i);
        let (a, b) = (alg.mul(&one, &e), alg.mul(&e, &one));
        (a != e || b != e).then(|| {
            format!(
                "1*{0} = {1}, {0}*1 = {2}",
                l[i],
                render(alg, &a),
                render(alg, &b)
            )
        })
    });
    r
}

/// `(Δ⊗id)Δ = (id⊗Δ)Δ` and both counit laws on every basis element.
pub fn verify_coalgebra<F: Field>(
    co: &FiniteCoalgebra<F>,
    labels: &[String],
) -> VerificationReport {
    let mut r = VerificationReport::new();
    let all: Vec<usize> = (0..co.dim()).collect();
    r.sweep(
        "coassociativity",
        "comultiplication is coassociative",
        &all,
        |&i| {
            let mut left = std::collections::BTreeMap::new();
            let mut right = std::collections::BTreeMap::new();
            for (j, k, c) in co.basis_comul(i) {
                for (a, b, d) in co.basis_comul(*j) {
                    sparse::add_term(&mut left, (*a, *b, *k), c.mul_ref(d));
                }
                for (a, b, d) in co.basis_comul(*k) {
                    sparse::add_term(&mut right, (*j, *a, *b), c.mul_ref(d));
                }
            }
            (left != right).then(|| format!("coassociativity fails on {}", labels[i]))
        },
    );
    r.sweep("counit", "counit laws hold", &all, |&i| {
        let mut left = Vector::new();
        let mut right = Vector::new();
        for (j, k, c) in co.basis_comul(i) {
            sparse::add_term(&mut left, *k, c.mul_ref(&co.counit()[*j]));
            sparse::add_term(&mut right, *j, c.mul_ref(&co.counit()[*k]));
        }
        let e = sparse::basis(i);
        (left != e || right != e).then(|| {
            format!(
                "(eps⊗id)Δ({0}) = {1}, (id⊗eps)Δ({0}) = {2}",
                labels[i],
                sparse::render(&left, labels),
                sparse::render(&right, labels)
            )
        })
    });
    r
}

/// Algebra, coalgebra, bialgebra and antipode axioms plus the grouplike cache.
pub fn verify_hopf<F: Field>(h: &HopfAlgebraData<F>, mode: &Mode) -> VerificationReport {
    let alg = h.algebra();
    let co = h.coalgebra();
    let l = h.labels();
    let dim = h.dim();
    let mut r = verify_algebra_with(alg, mode, h.generators());
    r.extend(verify_coalgebra(co, l));

    let pairs = cases::<2>(mode, dim, h.generators());
    r.sweep(
        "bialgebra.comul",
        "comultiplication is an algebra map",
        &pairs,
        |&[i, j]| {
            let (ei, ej) = (sparse::basis(i), sparse::basis(j));
            let left = h.comul(&alg.mul(&ei, &ej));
            let right = h.tensor_mul(&h.comul(&ei), &h.comul(&ej));
            (left != right).then(|| {
                format!(
                    "Δ({0}*{1}) = {2} but Δ({0})Δ({1}) = {3}",
                    l[i],
                    l[j],
                    sparse::render_tensor(&left, l, l),
                    sparse::render_tensor(&right, l, l)
                )
            })
        },
    );
    r.sweep(
        "bialgebra.counit",
        "counit is an algebra map",
        &pairs,
        |&[i, j]| {
            let left = h.counit_of(&alg.mul(&sparse::basis(i), &sparse::basis(j)));
            let right = co.counit()[i].mul_ref(&co.counit()[j]);
            (left != right).then(|| {
                format!(
                    "eps({0}*{1}) = {left} but eps({0})eps({1}) = {right}",
                    l[i], l[j]
                )
            })
        },
    );
    let one = h.one();
    let mut one_one = TensorVector::new();
    for (&a, x) in &one {
        for (&b, y) in &one {
            sparse::add_term(&mut one_one, (a, b), x.mul_ref(y));
        }
    }
    let d1 = h.comul(&one);
    r.record(
        "bialgebra.unit",
        "comultiplication and counit preserve the unit",
        d1 == one_one && h.counit_of(&one).is_one(),
        || {
            format!(
                "Δ(1) = {}, eps(1) = {}",
                sparse::render_tensor(&d1, l, l),
                h.counit_of(&one)
            )
        },
    );

    let all: Vec<usize> = (0..dim).collect();
    r.sweep("antipode", "m(S⊗id)Δ = ηε = m(id⊗S)Δ", &all, |&i| {
        let mut left = Vector::new();
        let mut right = Vector::new();
        for (j, k, c) in co.basis_comul(i) {
            sparse::axpy(
                &mut left,
                c,
                &alg.mul(&h.antipode()[*j], &sparse::basis(*k)),
            );
            sparse::axpy(
                &mut right,
                c,
                &alg.mul(&sparse::basis(*j), &h.antipode()[*k]),
            );
        }
        let target = sparse::scale(&one, &co.counit()[i]);
        (left != target || right != target).then(|| {
            format!(
                "on {}: S(h1)h2 = {}, h1S(h2) = {}, expected {}",
                l[i],
                render(alg, &left),
                render(alg, &right),
                render(alg, &target)
            )
        })
    });
    let expected: Vec<usize> = (0..dim).filter(|&i| co.is_grouplike(i)).collect();
    r.record(
        "grouplikes",
        "grouplike cache matches Δ(c) = c⊗c, eps(c) = 1",
        expected == h.grouplikes(),
        || format!("cache {:?}, recomputed {:?}", h.grouplikes(), expected),
    );
    r
}

/// `σ(v, e_z)` for a vector `v`.
fn form_left<F: Field>(sigma: &BilinearForm<F>, v: &[(usize, F)], z: usize) -> F {
    let mut acc = F::zero();
    for (k, c) in v {
        if let Some(s) = sigma.lookup(*k, z) {
            acc += c.mul_ref(s);
        }
    }
    acc
}

/// `σ(e_x, v)` for a vector `v`.
fn form_right<F: Field>(sigma: &BilinearForm<F>, x: usize, v: &[(usize, F)]) -> F {
    let mut acc = F::zero();
    for (k, c) in v {
        if let Some(s) = sigma.lookup(x, *k) {
            acc += c.mul_ref(s);
        }
    }
    acc
}

/// The 2-cocycle identity
/// `σ(x₁, y₁) σ(x₂y₂, z) = σ(y₁, z₁) σ(x, y₂z₂)` on basis triples, and
/// `σ(x, 1) = ε(x) = σ(1, x)` on every basis element.
pub fn verify_hopf_2cocycle<F: Field>(
    sigma: &BilinearForm<F>,
    h: &HopfAlgebraData<F>,
    mode: &Mode,
) -> VerificationReport {
    let mut r = VerificationReport::new();
    let alg = h.algebra();
    let co = h.coalgebra();
    let l = h.labels();
    let triples = cases::<3>(mode, h.dim(), h.generators());
    r.sweep(
        "cocycle",
        "σ(x₁,y₁)σ(x₂y₂,z) = σ(y₁,z₁)σ(x,y₂z₂)",
        &triples,
        |&[x, y, z]| {
            let mut left = F::zero();
            for (x1, x2, cx) in co.basis_comul(x) {
                for (y1, y2, cy) in co.basis_comul(y) {
                    if let Some(s) = sigma.lookup(*x1, *y1) {
                        let t = form_left(sigma, alg.basis_product(*x2, *y2), z);
                        if !t.is_zero() {
                            left += s.mul_ref(cx).mul_ref(cy).mul_ref(&t);
                        }
                    }
                }
            }
            let mut right = F::zero();
            for (y1, y2, cy) in co.basis_comul(y) {
                for (z1, z2, cz) in co.basis_comul(z) {
                    if let Some(s) = sigma.lookup(*y1, *z1) {
                        let t = form_right(sigma, x, alg.basis_product(*y2, *z2));
                        if !t.is_zero() {
                            right += s.mul_ref(cy).mul_ref(cz).mul_ref(&t);
                        }
                    }
                }
            }
            (left != right).then(|| {
                format!(
                    "(x, y, z) = ({}, {}, {}): left {left}, right {right}",
                    l[x], l[y], l[z]
                )
            })
        },
    );
    let one: Vec<(usize, F)> = h.one().into_iter().collect();
    let all: Vec<usize> = (0..h.dim()).collect();
    r.sweep(
        "cocycle.unital",
        "σ(x, 1) = eps(x) = σ(1, x)",
        &all,
        |&x| {
            let a = form_right(sigma, x, &one);
            let b = form_left(sigma, &one, x);
            let e = co.counit()[x].clone();
            (a != e || b != e)
                .then(|| format!("x = {}: σ(x,1) = {a}, σ(1,x) = {b}, eps(x) = {e}", l[x]))
        },
    );
    r
}
