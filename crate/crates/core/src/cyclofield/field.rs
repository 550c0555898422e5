use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;

use super::number::CyclotomicNumber;

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree
/// first.
///
/// Uses the division recursion `Φ_n = (t^n - 1) / ∏_{d | n, d < n} Φ_d`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_polynomial needs n >= 1");
    let mut memo = BTreeMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: u64, memo: &mut BTreeMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // t^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_memo(d, memo);
        num = exact_monic_division(&num, &phi_d);
    }
    memo.insert(n, num.clone());
    num
}

/// Quotient of `num` by the monic polynomial `den`; the remainder must vanish.
fn exact_monic_division(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The cyclotomic field `Q(q) = Q[t]/(Φ_N(t))`, `q` the class of `t`.
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<BigInt>,
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.order)
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CyclotomicField {}

impl CyclotomicField {
    /// Field for the quantum-group parameter: `N` must be odd and `> 1`.
    pub fn new(order: i64) -> Result<Arc<Self>> {
        if order <= 1 || order % 2 == 0 || order > u32::MAX as i64 {
            return Err(Error::InvalidOrder(order));
        }
        Ok(Self::build(order as u32))
    }

    /// Field generated by a primitive root of unity of any order `>= 1`.
    ///
    /// Used for auxiliary contexts (for instance a primitive square root of
    /// unity), never for the quantum group itself.
    pub fn with_any_order(order: u32) -> Result<Arc<Self>> {
        if order == 0 {
            return Err(Error::InvalidArgument("root of unity of order 0".into()));
        }
        Ok(Self::build(order))
    }

    fn build(order: u32) -> Arc<Self> {
        Arc::new(CyclotomicField {
            order,
            modulus: cyclotomic_polynomial(order as u64),
        })
    }

    /// The order `N` of the distinguished root of unity `q`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(N)`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Coefficients of `Φ_N`, lowest degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Reduces an integer polynomial in place modulo `Φ_N` and trims it.
    pub(crate) fn reduce(&self, v: &mut Vec<BigInt>) {
        let deg = self.degree();
        while v.len() > deg {
            let c = v.pop().expect("non-empty");
            if c.is_zero() {
                continue;
            }
            let shift = v.len() - deg;
            for (j, m) in self.modulus[..deg].iter().enumerate() {
                v[shift + j] -= &c * m;
            }
        }
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicNumber {
        CyclotomicNumber::zero()
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicNumber {
        CyclotomicNumber::from_rational_in(self, Rational::one())
    }

    pub fn rational(self: &Arc<Self>, r: Rational) -> CyclotomicNumber {
        CyclotomicNumber::from_rational_in(self, r)
    }

    pub fn int(self: &Arc<Self>, n: i64) -> CyclotomicNumber {
        self.rational(Rational::from_integer(BigInt::from(n)))
    }

    /// The generator `q`.
    pub fn q(self: &Arc<Self>) -> CyclotomicNumber {
        self.q_pow(1)
    }

    /// `q^k` for any integer `k`; the exponent is reduced mod `N`.
    pub fn q_pow(self: &Arc<Self>, k: i64) -> CyclotomicNumber {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        self.from_coeffs(coeffs)
    }

    /// Element with the given coefficients in powers of `q` (lowest first).
    /// Longer inputs are reduced modulo `Φ_N`.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<Rational>) -> CyclotomicNumber {
        CyclotomicNumber::from_rational_coeffs(self, coeffs)
    }
}
