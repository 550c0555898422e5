//! Sparse coordinate vectors keyed by basis indices.

use std::collections::BTreeMap;

use crate::scalar::Field;

/// Element of a space with a finite basis, keyed by basis index.
pub type Vector<F> = BTreeMap<usize, F>;

/// Element of a tensor product `U ⊗ V`, keyed by pairs of basis indices.
pub type TensorVector<F> = BTreeMap<(usize, usize), F>;

/// `v[k] += c`, dropping the entry if it cancels.
pub fn add_term<K: Ord, F: Field>(v: &mut BTreeMap<K, F>, k: K, c: F) {
    if c.is_zero() {
        return;
    }
    match v.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `v += c * w`.
pub fn axpy<K: Ord + Clone, F: Field>(v: &mut BTreeMap<K, F>, c: &F, w: &BTreeMap<K, F>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        add_term(v, k.clone(), c.mul_ref(x));
    }
}

pub fn scale<K: Ord + Clone, F: Field>(v: &BTreeMap<K, F>, c: &F) -> BTreeMap<K, F> {
    let mut out = BTreeMap::new();
    axpy(&mut out, c, v);
    out
}

pub fn sub<K: Ord + Clone, F: Field>(a: &BTreeMap<K, F>, b: &BTreeMap<K, F>) -> BTreeMap<K, F> {
    let mut out = a.clone();
    axpy(&mut out, &-F::one(), b);
    out
}

pub fn add<K: Ord + Clone, F: Field>(a: &BTreeMap<K, F>, b: &BTreeMap<K, F>) -> BTreeMap<K, F> {
    let mut out = a.clone();
    axpy(&mut out, &F::one(), b);
    out
}

pub fn basis<F: Field>(i: usize) -> Vector<F> {
    BTreeMap::from([(i, F::one())])
}

pub fn to_dense<F: Field>(v: &Vector<F>, dim: usize) -> Vec<F> {
    let mut out = vec![F::zero(); dim];
    for (&i, c) in v {
        out[i] = c.clone();
    }
    out
}

pub fn from_dense<F: Field>(v: &[F]) -> Vector<F> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Renders `v` as `c*label + …` for witnesses.
pub fn render<F: Field>(v: &Vector<F>, labels: &[String]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter()
        .map(|(&i, c)| format!("({c})*{}", labels[i]))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn render_tensor<F: Field>(v: &TensorVector<F>, left: &[String], right: &[String]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter()
        .map(|(&(i, j), c)| format!("({c})*{}⊗{}", left[i], right[j]))
        .collect::<Vec<_>>()
        .join(" + ")
}
