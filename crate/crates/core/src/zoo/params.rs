use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// The families of comodule algebras over `gr(u_q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    L0,
    L1,
    L2,
    L3,
    L3N,
    L4,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyTag::L0 => "L0",
            FamilyTag::L1 => "L1",
            FamilyTag::L2 => "L2",
            FamilyTag::L3 => "L3",
            FamilyTag::L3N => "L3N",
            FamilyTag::L4 => "L4",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "L0" => FamilyTag::L0,
            "L1" => FamilyTag::L1,
            "L2" => FamilyTag::L2,
            "L3" => FamilyTag::L3,
            "L3N" => FamilyTag::L3N,
            "L4" => FamilyTag::L4,
            _ => return Err(Error::InvalidArgument(format!("unknown family tag {s}"))),
        })
    }
}

/// Family tag plus parameters; absent parameters are `None`.
///
/// `r` is the order of `G` (forced to `N` for `L3N`, absent for `L4`).
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyParams<F> {
    pub family: FamilyTag,
    pub r: Option<usize>,
    pub alpha: Option<F>,
    pub beta: Option<F>,
    pub xi: Option<F>,
    pub zeta: Option<F>,
    pub eta: Option<F>,
}

impl<F: Field> FamilyParams<F> {
    fn bare(family: FamilyTag, r: Option<usize>) -> Self {
        FamilyParams {
            family,
            r,
            alpha: None,
            beta: None,
            xi: None,
            zeta: None,
            eta: None,
        }
    }

    pub fn l0(r: usize) -> Self {
        Self::bare(FamilyTag::L0, Some(r))
    }

    pub fn l1(r: usize, xi: F) -> Self {
        FamilyParams {
            xi: Some(xi),
            ..Self::bare(FamilyTag::L1, Some(r))
        }
    }

    pub fn l2(r: usize, zeta: F) -> Self {
        FamilyParams {
            zeta: Some(zeta),
            ..Self::bare(FamilyTag::L2, Some(r))
        }
    }

    pub fn l3(r: usize, xi: F, zeta: F) -> Self {
        FamilyParams {
            xi: Some(xi),
            zeta: Some(zeta),
            ..Self::bare(FamilyTag::L3, Some(r))
        }
    }

    /// `L3(N; ξ, ζ, η)`; `n` is the order of `q`.
    pub fn l3n(n: usize, xi: F, zeta: F, eta: F) -> Self {
        FamilyParams {
            xi: Some(xi),
            zeta: Some(zeta),
            eta: Some(eta),
            ..Self::bare(FamilyTag::L3N, Some(n))
        }
    }

    pub fn l4(alpha: F, beta: F, xi: F) -> Self {
        FamilyParams {
            alpha: Some(alpha),
            beta: Some(beta),
            xi: Some(xi),
            ..Self::bare(FamilyTag::L4, None)
        }
    }

    /// Checks the shape of the record against the family and the order `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        let has = |o: &Option<F>| o.is_some();
        let (need_x, need_y) = match self.family {
            FamilyTag::L0 => (false, false),
            FamilyTag::L1 => (true, false),
            FamilyTag::L2 => (false, true),
            FamilyTag::L3 | FamilyTag::L3N => (true, true),
            FamilyTag::L4 => (true, false),
        };
        if has(&self.xi) != need_x || has(&self.zeta) != need_y {
            return bad(format!(
                "{} takes xi: {need_x}, zeta: {need_y}",
                self.family
            ));
        }
        if has(&self.eta) != (self.family == FamilyTag::L3N) {
            return bad("eta is present exactly for L3N".into());
        }
        if self.family == FamilyTag::L4 {
            if self.r.is_some() {
                return bad("L4 takes no r".into());
            }
            match (&self.alpha, &self.beta) {
                (Some(a), Some(b)) if !(a.is_zero() && b.is_zero()) => {}
                (Some(_), Some(_)) => return bad("L4 needs (alpha, beta) != (0, 0)".into()),
                _ => return bad("L4 needs alpha and beta".into()),
            }
        } else {
            if has(&self.alpha) || has(&self.beta) {
                return bad(format!("{} takes no alpha or beta", self.family));
            }
            match self.r {
                Some(r) if r >= 1 && n.is_multiple_of(r) => {}
                _ => {
                    return bad(format!(
                        "r must be a positive divisor of {n} (got {:?})",
                        self.r
                    ))
                }
            }
            if self.family == FamilyTag::L3N && self.r != Some(n) {
                return bad("L3N has r = N".into());
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    #[test]
    fn validation() {
        assert!(FamilyParams::<Rational>::l0(3).validate(3).is_ok());
        assert!(FamilyParams::<Rational>::l0(2).validate(3).is_err());
        assert!(FamilyParams::l4(rat(0), rat(0), rat(1))
            .validate(3)
            .is_err());
        assert!(FamilyParams::l4(rat(0), rat(2), rat(1)).validate(3).is_ok());
        assert!(FamilyParams::l3n(5, rat(0), rat(0), rat(1))
            .validate(3)
            .is_err());
        assert_eq!("l3n".parse::<FamilyTag>().unwrap(), FamilyTag::L3N);
    }
}
