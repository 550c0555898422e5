use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};

use super::field::CyclotomicField;

/// An element of `Q(q) = Q[t]/(Φ_N(t))`.
///
/// Stored as an integer coefficient vector over a common positive
/// denominator, reduced modulo `Φ_N`, with trailing zeros trimmed and the
/// content coprime to the denominator. The representation is canonical, so
/// equality is structural.
///
/// Rational constants may carry no field; they embed into every `Q(q)`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Option<Arc<CyclotomicField>>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicNumber {
    pub(crate) fn from_rational_in(field: &Arc<CyclotomicField>, r: Rational) -> Self {
        let mut c = Self::from_rational_bare(r);
        c.field = Some(field.clone());
        c
    }

    fn from_rational_bare(r: Rational) -> Self {
        let (n, d) = r.into();
        let num = if n.is_zero() { Vec::new() } else { vec![n] };
        let den = if num.is_empty() { BigInt::one() } else { d };
        CyclotomicNumber {
            field: None,
            num,
            den,
        }
    }

    pub(crate) fn from_rational_coeffs(
        field: &Arc<CyclotomicField>,
        coeffs: Vec<Rational>,
    ) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut num: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        field.reduce(&mut num);
        let mut out = CyclotomicNumber {
            field: Some(field.clone()),
            num,
            den,
        };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        while self.num.last().is_some_and(Zero::is_zero) {
            self.num.pop();
        }
        if self.num.is_empty() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    /// The field this element lives in, `None` for a bare rational constant.
    pub fn field(&self) -> Option<&Arc<CyclotomicField>> {
        self.field.as_ref()
    }

    fn merged_field(&self, other: &Self) -> Option<Arc<CyclotomicField>> {
        match (&self.field, &other.field) {
            (Some(a), Some(b)) => {
                debug_assert!(
                    a == b || self.is_rational() || other.is_rational(),
                    "mixing elements of Q(zeta_{}) and Q(zeta_{})",
                    a.order(),
                    b.order()
                );
                Some(if self.is_rational() {
                    b.clone()
                } else {
                    a.clone()
                })
            }
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(b.clone()),
            (None, None) => None,
        }
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.num.len() <= 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self.num.len() {
            0 => Some(Rational::zero()),
            1 => Some(Rational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    /// Coefficient of `q^i` in the reduced representation.
    pub fn coefficient(&self, i: usize) -> Rational {
        match self.num.get(i) {
            Some(c) => Rational::new(c.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    /// Coefficients of `1, q, q^2, …` up to the highest nonzero one.
    pub fn coefficients(&self) -> Vec<Rational> {
        (0..self.num.len()).map(|i| self.coefficient(i)).collect()
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow_u(e as u64))
        } else {
            let inv = self.inv().ok_or(Error::DivisionByZero)?;
            Ok(inv.pow_u(e.unsigned_abs()))
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.mul_ref(&inv))
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        let field = self.merged_field(other);
        let len = self.num.len().max(other.num.len());
        let mut num = Vec::with_capacity(len);
        let den;
        if self.den == other.den {
            den = self.den.clone();
            for i in 0..len {
                let a = self.num.get(i);
                let b = other.num.get(i);
                num.push(combine(a.cloned(), b, negate_other));
            }
        } else {
            den = &self.den * &other.den;
            for i in 0..len {
                let a = self.num.get(i).map(|a| a * &other.den);
                let b = other.num.get(i).map(|b| b * &self.den);
                num.push(combine(a, b.as_ref(), negate_other));
            }
        }
        let mut out = CyclotomicNumber { field, num, den };
        out.normalize();
        out
    }

    fn scale(&self, c: &BigInt, d: &BigInt) -> Self {
        let mut out = CyclotomicNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|x| x * c).collect(),
            den: &self.den * d,
        };
        out.normalize();
        out
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.num.is_empty() || other.num.is_empty() {
            return Self::zero();
        }
        if self.num.len() == 1 {
            let mut out = other.scale(&self.num[0], &self.den);
            out.field = self.merged_field(other);
            return out;
        }
        if other.num.len() == 1 {
            let mut out = self.scale(&other.num[0], &other.den);
            out.field = self.merged_field(other);
            return out;
        }
        let field = self
            .merged_field(other)
            .expect("non-constant cyclotomic numbers carry their field");
        let mut prod = vec![BigInt::zero(); self.num.len() + other.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        field.reduce(&mut prod);
        let mut out = CyclotomicNumber {
            field: Some(field),
            num: prod,
            den: &self.den * &other.den,
        };
        out.normalize();
        out
    }

    fn inv_impl(&self) -> Option<Self> {
        match self.num.len() {
            0 => None,
            1 => {
                let r = Rational::new(self.den.clone(), self.num[0].clone());
                let mut out = Self::from_rational_bare(r);
                out.field = self.field.clone();
                Some(out)
            }
            _ => {
                let field = self.field.clone().expect("non-constant carries field");
                let a: Vec<Rational> = self.coefficients();
                let m: Vec<Rational> = field
                    .modulus()
                    .iter()
                    .map(|c| Rational::from_integer(c.clone()))
                    .collect();
                let s = rational_poly_inverse_mod(&a, &m);
                Some(field.from_coeffs(s))
            }
        }
    }
}

fn combine(a: Option<BigInt>, b: Option<&BigInt>, negate_b: bool) -> BigInt {
    match (a, b) {
        (Some(a), Some(b)) => {
            if negate_b {
                a - b
            } else {
                a + b
            }
        }
        (Some(a), None) => a,
        (None, Some(b)) => {
            if negate_b {
                -b
            } else {
                b.clone()
            }
        }
        (None, None) => BigInt::zero(),
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("non-empty") / lead;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &c * bj;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// `s` with `s * a ≡ 1 (mod m)`, for `a` coprime to `m` over `Q`.
fn rational_poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (qt, rem) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&qt, &s1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    debug_assert_eq!(r0.len(), 1, "gcd with the modulus must be a unit");
    let c = r0[0].recip();
    s0.into_iter().map(|x| x * &c).collect()
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl Eq for CyclotomicNumber {}

impl Hash for CyclotomicNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl Zero for CyclotomicNumber {
    fn zero() -> Self {
        CyclotomicNumber {
            field: None,
            num: Vec::new(),
            den: BigInt::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
}

impl One for CyclotomicNumber {
    fn one() -> Self {
        CyclotomicNumber {
            field: None,
            num: vec![BigInt::one()],
            den: BigInt::one(),
        }
    }
}

impl Neg for CyclotomicNumber {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.num.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $body:expr) => {
        impl $imp<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                let f: fn(&CyclotomicNumber, &CyclotomicNumber) -> CyclotomicNumber = $body;
                f(self, rhs)
            }
        }
        impl $imp<CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                self.$method(&rhs)
            }
        }
        impl $imp<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(rhs)
            }
        }
        impl $imp<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
// Panics on a zero divisor; use `checked_div` for a fallible version.
forward_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("division by zero in Q(q)"));

impl AddAssign for CyclotomicNumber {
    fn add_assign(&mut self, rhs: Self) {
        *self = self.add_impl(&rhs, false);
    }
}

impl AddAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn add_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign for CyclotomicNumber {
    fn sub_assign(&mut self, rhs: Self) {
        *self = self.add_impl(&rhs, true);
    }
}

impl SubAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn sub_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn mul_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = self.mul_impl(rhs);
    }
}

impl Field for CyclotomicNumber {
    fn inv(&self) -> Option<Self> {
        self.inv_impl()
    }

    fn from_rational(r: Rational) -> Self {
        Self::from_rational_bare(r)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
}
