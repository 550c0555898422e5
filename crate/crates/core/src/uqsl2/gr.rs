use std::sync::Arc;

use crate::cyclofield::{CyclotomicField, QBinomials};
use crate::error::Result;
use crate::hopf::{tensor_mul, FiniteAlgebra, FiniteCoalgebra, HopfAlgebraData};
use crate::sparse::{self, TensorVector, Vector};
use crate::Cyclo;

/// Exponents `(i, j, k)` of the PBW monomial `x^i y^j g^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwIndex {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl PbwIndex {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        PbwIndex { i, j, k }
    }

    /// Position in the basis; lexicographic in `(i, j, k)`.
    pub fn to_index(self, n: usize) -> usize {
        debug_assert!(self.i < n && self.j < n && self.k < n);
        (self.i * n + self.j) * n + self.k
    }

    pub fn from_index(idx: usize, n: usize) -> Self {
        PbwIndex {
            i: idx / (n * n),
            j: (idx / n) % n,
            k: idx % n,
        }
    }
}

/// `"x^2*y*g^3"`-style label; `"1"` when every exponent is zero.
pub fn monomial_label(parts: &[(&str, usize)]) -> String {
    let s: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(name, e)| {
            if *e == 1 {
                name.to_string()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if s.is_empty() {
        "1".into()
    } else {
        s.join("*")
    }
}

pub(crate) fn pbw_labels(n: usize, names: [&str; 3]) -> Vec<String> {
    (0..n * n * n)
        .map(|idx| {
            let p = PbwIndex::from_index(idx, n);
            monomial_label(&[(names[0], p.i), (names[1], p.j), (names[2], p.k)])
        })
        .collect()
}

/// `gr(u_q)` for `q` a primitive `N`-th root of unity, `N` odd.
pub fn build_gr_uq(n: i64) -> Result<HopfAlgebraData<Cyclo>> {
    let field = CyclotomicField::new(n)?;
    Ok(gr_uq_in(&field))
}

/// `gr(u_q)` over an existing field.
pub fn gr_uq_in(field: &Arc<CyclotomicField>) -> HopfAlgebraData<Cyclo> {
    let n = field.order() as usize;
    let dim = n * n * n;
    let idx = |i, j, k| PbwIndex::new(i, j, k).to_index(n);
    let qp: Vec<Cyclo> = (0..n as i64).map(|e| field.q_pow(e)).collect();
    let q_pow = |e: i64| qp[e.rem_euclid(n as i64) as usize].clone();

    // (x^a y^b g^c)(x^d y^e g^f) = q^{2(cd − ce − bd)} x^{a+d} y^{b+e} g^{c+f}
    let labels = pbw_labels(n, ["x", "y", "g"]);
    let algebra = FiniteAlgebra::from_fn(labels, sparse::basis(0), |s, t| {
        let (a, b) = (PbwIndex::from_index(s, n), PbwIndex::from_index(t, n));
        let mut v = Vector::new();
        if a.i + b.i < n && a.j + b.j < n {
            let e = 2 * (a.k * b.i) as i64 - 2 * (a.k * b.j) as i64 - 2 * (a.j * b.i) as i64;
            v.insert(idx(a.i + b.i, a.j + b.j, (a.k + b.k) % n), q_pow(e));
        }
        v
    });

    let ginv = idx(0, 0, n - 1);
    let one = field.one();
    let gen_comul = |p: PbwIndex| -> TensorVector<Cyclo> {
        let mut t = TensorVector::new();
        if p.k == 1 {
            t.insert((idx(0, 0, 1), idx(0, 0, 1)), one.clone());
        } else {
            let e = idx(p.i, p.j, 0);
            t.insert((e, 0), one.clone());
            t.insert((ginv, e), one.clone());
        }
        t
    };
    let mut comul: Vec<TensorVector<Cyclo>> = vec![TensorVector::new(); dim];
    comul[0].insert((0, 0), one.clone());
    // Δ(x^i y^j g^k) = Δ(x) Δ(x^{i−1} y^j g^k), and so on.
    for s in 1..dim {
        let p = PbwIndex::from_index(s, n);
        let (head, rest) = if p.i > 0 {
            (PbwIndex::new(1, 0, 0), PbwIndex::new(p.i - 1, p.j, p.k))
        } else if p.j > 0 {
            (PbwIndex::new(0, 1, 0), PbwIndex::new(0, p.j - 1, p.k))
        } else {
            (PbwIndex::new(0, 0, 1), PbwIndex::new(0, 0, p.k - 1))
        };
        comul[s] = tensor_mul(
            &algebra,
            &algebra,
            &gen_comul(head),
            &comul[rest.to_index(n)],
        );
    }
    let counit: Vec<Cyclo> = (0..dim)
        .map(|s| {
            let p = PbwIndex::from_index(s, n);
            if p.i == 0 && p.j == 0 {
                one.clone()
            } else {
                field.zero()
            }
        })
        .collect();
    let coalgebra = FiniteCoalgebra::from_table(
        comul
            .into_iter()
            .map(|t| t.into_iter().map(|((a, b), c)| (a, b, c)).collect())
            .collect(),
        counit,
    )
    .expect("well-formed comultiplication");

    // S(g) = g⁻¹, S(x) = −g x, S(y) = −g y, extended anti-multiplicatively.
    let minus = -one.clone();
    let s_x = sparse::scale(
        &algebra.mul(&sparse::basis(idx(0, 0, 1)), &sparse::basis(idx(1, 0, 0))),
        &minus,
    );
    let s_y = sparse::scale(
        &algebra.mul(&sparse::basis(idx(0, 0, 1)), &sparse::basis(idx(0, 1, 0))),
        &minus,
    );
    let s_g: Vector<Cyclo> = sparse::basis(ginv);
    let antipode = (0..dim)
        .map(|s| {
            let p = PbwIndex::from_index(s, n);
            let mut acc: Vector<Cyclo> = sparse::basis(0);
            for _ in 0..p.k {
                acc = algebra.mul(&acc, &s_g);
            }
            for _ in 0..p.j {
                acc = algebra.mul(&acc, &s_y);
            }
            for _ in 0..p.i {
                acc = algebra.mul(&acc, &s_x);
            }
            acc
        })
        .collect();

    let degree = (0..dim)
        .map(|s| {
            let p = PbwIndex::from_index(s, n);
            p.i + p.j
        })
        .collect();
    HopfAlgebraData::new(algebra, coalgebra, antipode)
        .expect("consistent dimensions")
        .with_coradical_degree(degree)
        .with_generators(vec![idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)])
}

/// Closed form of `Δ(x^i y^j g^k)`:
/// `Σ binom(i,r) binom(j,s) q^{−2r(i−r)+2r(j−s)} x^{i−r} y^{j−s} g^{k−r−s} ⊗ x^r y^s g^k`,
/// binomials taken at `q²`.
pub fn closed_form_comul(field: &Arc<CyclotomicField>, p: PbwIndex) -> TensorVector<Cyclo> {
    closed_form_comul_with_shift(field, p, -1)
}

/// Same sum with `g^{k − r + shift·s}` on the left leg; `shift = -1` is
/// the correct formula.
pub(crate) fn closed_form_comul_with_shift(
    field: &Arc<CyclotomicField>,
    p: PbwIndex,
    shift: i64,
) -> TensorVector<Cyclo> {
    let n = field.order() as usize;
    let ni = n as i64;
    let binom = QBinomials::new(field.q_pow(2), n).expect("q² is nonzero");
    let mut t = TensorVector::new();
    for r in 0..=p.i {
        for s in 0..=p.j {
            let (r_, s_) = (r as i64, s as i64);
            let e = -2 * r_ * (p.i as i64 - r_) + 2 * r_ * (p.j as i64 - s_);
            let c = binom.get(p.i, r).clone() * binom.get(p.j, s) * field.q_pow(e);
            let gk = (p.k as i64 - r_ + shift * s_).rem_euclid(ni) as usize;
            let left = PbwIndex::new(p.i - r, p.j - s, gk).to_index(n);
            let right = PbwIndex::new(r, s, p.k).to_index(n);
            sparse::add_term(&mut t, (left, right), c);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Mode;

    #[test]
    fn labels_and_indices() {
        assert_eq!(monomial_label(&[("x", 2), ("y", 0), ("g", 1)]), "x^2*g");
        assert_eq!(monomial_label(&[("x", 0)]), "1");
        for idx in 0..125 {
            assert_eq!(PbwIndex::from_index(idx, 5).to_index(5), idx);
        }
    }

    #[test]
    fn normal_ordering_scalars() {
        let h = build_gr_uq(3).unwrap();
        let f = CyclotomicField::new(3).unwrap();
        let b = |l: &str| sparse::basis::<Cyclo>(h.index_of(l).unwrap());
        let gx = h.mul(&b("g"), &b("x"));
        assert_eq!(gx, sparse::scale(&b("x*g"), &f.q_pow(2)));
        let yx = h.mul(&b("y"), &b("x"));
        assert_eq!(yx, sparse::scale(&b("x*y"), &f.q_pow(-2)));
        let gy = h.mul(&b("g"), &b("y"));
        assert_eq!(gy, sparse::scale(&b("y*g"), &f.q_pow(-2)));
        assert!(h.mul(&b("x^2"), &b("x")).is_empty());
    }

    #[test]
    fn closed_formula_matches_multiplicative_extension() {
        for n in [3i64, 5] {
            let f = CyclotomicField::new(n).unwrap();
            let h = gr_uq_in(&f);
            let nn = n as usize;
            for s in 0..h.dim() {
                let expected: TensorVector<Cyclo> = h
                    .coalgebra()
                    .basis_comul(s)
                    .iter()
                    .map(|(a, b, c)| ((*a, *b), c.clone()))
                    .collect();
                assert_eq!(
                    closed_form_comul(&f, PbwIndex::from_index(s, nn)),
                    expected,
                    "N={n} {}",
                    h.labels()[s]
                );
            }
        }
    }

    #[test]
    fn literal_plus_s_exponent_disagrees() {
        let f = CyclotomicField::new(3).unwrap();
        let h = gr_uq_in(&f);
        let y = h.index_of("y").unwrap();
        let literal = closed_form_comul_with_shift(&f, PbwIndex::from_index(y, 3), 1);
        let actual: TensorVector<Cyclo> = h
            .coalgebra()
            .basis_comul(y)
            .iter()
            .map(|(a, b, c)| ((*a, *b), c.clone()))
            .collect();
        assert_ne!(literal, actual);
    }

    #[test]
    fn comul_of_x_squared() {
        let f = CyclotomicField::new(3).unwrap();
        let h = gr_uq_in(&f);
        let i = |l: &str| h.index_of(l).unwrap();
        let d = h.comul(&sparse::basis(i("x^2")));
        let mid = (f.one() + f.q_pow(2)) * f.q_pow(-2);
        assert_eq!(d.get(&(i("x*g^2"), i("x"))), Some(&mid));
        assert_eq!(d.get(&(i("x^2"), i("1"))), Some(&f.one()));
        assert_eq!(d.get(&(i("g"), i("x^2"))), Some(&f.one()));
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn gr_uq_is_hopf_at_3() {
        let h = build_gr_uq(3).unwrap();
        let r = crate::hopf::verify_hopf(&h, &Mode::Exhaustive);
        assert!(r.passed(), "{:?}", r.first_failure());
        assert_eq!(h.grouplikes().len(), 3);
    }
}
