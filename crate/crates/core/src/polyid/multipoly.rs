use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Poly;
use crate::scalar::Field;

/// Exponent tuple ordered graded-lexicographically: total degree first,
/// then lexicographically on the exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub const MAX_VARIABLES: usize = 3;

/// Sparse polynomial in at most three named variables.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<F> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(vars: &[&str]) -> Result<Self> {
        if vars.len() > MAX_VARIABLES {
            return Err(Error::InvalidArgument(format!(
                "at most {MAX_VARIABLES} variables"
            )));
        }
        Ok(MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        })
    }

    pub fn constant(vars: &[&str], c: F) -> Result<Self> {
        let mut p = Self::zero(vars)?;
        let m = Monomial(vec![0; p.vars.len()]);
        p.add_term(m, c);
        Ok(p)
    }

    /// The variable named `name`.
    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars)?;
        let i = p.index_of(name)?;
        let mut e = vec![0; p.vars.len()];
        e[i] = 1;
        p.add_term(Monomial(e), F::one());
        Ok(p)
    }

    fn index_of(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown variable {name}")))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in increasing graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> F {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    fn same_ring(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials in different variables");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d.mul_ref(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(e), c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        acc.add_term(Monomial(vec![0; self.vars.len()]), F::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Substitutes `images[i]` for the `i`-th variable; all images share
    /// one target ring.
    pub fn substitute(&self, images: &[MultiPoly<F>]) -> Result<MultiPoly<F>> {
        if images.len() != self.vars.len() || images.is_empty() {
            return Err(Error::DimensionMismatch("one image per variable".into()));
        }
        let target: Vec<&str> = images[0].vars.iter().map(String::as_str).collect();
        let mut out = MultiPoly::zero(&target)?;
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone())?;
            for (img, e) in images.iter().zip(&m.0) {
                t = t.mul(&img.pow(*e));
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Univariate view as a [`Poly`] in the single variable.
    pub fn to_poly(&self) -> Result<Poly<F>> {
        if self.vars.len() != 1 {
            return Err(Error::InvalidArgument("not univariate".into()));
        }
        let deg = self
            .terms
            .keys()
            .map(|m| m.0[0] as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![F::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.0[0] as usize] = c.clone();
        }
        Ok(Poly::new(coeffs))
    }

    pub fn from_poly(var: &str, p: &Poly<F>) -> Result<Self> {
        let mut out = Self::zero(&[var])?;
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(Monomial(vec![i as u32]), c.clone());
        }
        Ok(out)
    }

    /// The greatest monomial where the two differ, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(Monomial, F, F)> {
        let d = self.sub(other);
        d.terms
            .keys()
            .next_back()
            .map(|m| (m.clone(), self.coeff(&m.0), other.coeff(&m.0)))
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = self
            .vars
            .iter()
            .zip(&m.0)
            .filter(|(_, e)| **e > 0)
            .map(|(v, e)| {
                if *e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    /// Highest terms first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono = self.render_monomial(m);
            let coeff = c.to_string();
            let (neg, body) = match coeff.strip_prefix('-') {
                Some(rest) if !rest.contains([' ', '+']) => (true, rest.to_string()),
                _ => (false, coeff.clone()),
            };
            let body = if body.contains(' ') {
                format!("({body})")
            } else {
                body
            };
            let term = match (body.as_str(), mono.as_str()) {
                (b, "1") => b.to_string(),
                ("1", m) => m.to_string(),
                (b, m) => format!("{b}*{m}"),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{term}")?,
                (true, false) => write!(f, "{term}")?,
                (false, true) => write!(f, " - {term}")?,
                (false, false) => write!(f, " + {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}
