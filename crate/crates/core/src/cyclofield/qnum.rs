use crate::error::{Error, Result};
use crate::scalar::Field;

fn check_lambda<F: Field>(lambda: &F) -> Result<()> {
    if lambda.is_zero() {
        return Err(Error::InvalidArgument(
            "q-number parameter must be nonzero".into(),
        ));
    }
    Ok(())
}

fn check_nonneg(name: &str, v: i64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::InvalidArgument(format!("{name} must be >= 0 (got {v})")))
}

/// `(m)_λ = 1 + λ + … + λ^{m-1}`.
pub fn q_int<F: Field>(m: i64, lambda: &F) -> Result<F> {
    check_lambda(lambda)?;
    let m = check_nonneg("m", m)?;
    let mut acc = F::zero();
    let mut p = F::one();
    for _ in 0..m {
        acc += &p;
        p = p * lambda;
    }
    Ok(acc)
}

/// `(m)_λ! = (1)_λ (2)_λ … (m)_λ`, with `(0)_λ! = 1`.
pub fn q_factorial<F: Field>(m: i64, lambda: &F) -> Result<F> {
    check_lambda(lambda)?;
    let m = check_nonneg("m", m)?;
    let mut acc = F::one();
    for i in 1..=m {
        acc = acc * q_int(i as i64, lambda)?;
    }
    Ok(acc)
}

/// Gaussian binomial `binom(m, r)_λ` via the Pascal recursion.
pub fn q_binomial<F: Field>(m: i64, r: i64, lambda: &F) -> Result<F> {
    let m = check_nonneg("m", m)?;
    let r = check_nonneg("r", r)?;
    if r > m {
        return Err(Error::InvalidArgument(format!(
            "q_binomial needs r <= m (got r={r}, m={m})"
        )));
    }
    Ok(QBinomials::new(lambda.clone(), m)?.get(m, r).clone())
}

/// Memo table of Gaussian binomials `binom(m, r)_λ` for `m <= max`.
///
/// Built row by row from `binom(m,r) = binom(m-1,r-1) + λ^r binom(m-1,r)`, so
/// no factorial quotient is ever formed.
#[derive(Clone, Debug)]
pub struct QBinomials<F> {
    rows: Vec<Vec<F>>,
}

impl<F: Field> QBinomials<F> {
    pub fn new(lambda: F, max: usize) -> Result<Self> {
        check_lambda(&lambda)?;
        let mut powers = vec![F::one()];
        for i in 1..=max {
            let next = powers[i - 1].clone() * &lambda;
            powers.push(next);
        }
        let mut rows: Vec<Vec<F>> = vec![vec![F::one()]];
        for m in 1..=max {
            let prev = &rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(F::one());
            for r in 1..m {
                row.push(prev[r - 1].clone() + powers[r].mul_ref(&prev[r]));
            }
            row.push(F::one());
            rows.push(row);
        }
        Ok(QBinomials { rows })
    }

    pub fn max(&self) -> usize {
        self.rows.len() - 1
    }

    /// # Panics
    ///
    /// Panics if `m > self.max()` or `r > m`.
    pub fn get(&self, m: usize, r: usize) -> &F {
        &self.rows[m][r]
    }
}
