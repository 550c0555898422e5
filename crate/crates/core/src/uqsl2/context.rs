use std::sync::{Arc, OnceLock};

use crate::cyclofield::CyclotomicField;
use crate::error::Result;
use crate::hopf::{convolution_inverse, BilinearForm, HopfAlgebraData};
use crate::Cyclo;

use super::gr::gr_uq_in;
use super::sigma::sigma_in;
use super::uq::uq_from_parts;

/// The objects attached to one order `N`, built once and shared.
///
/// `σ⁻¹` and `u_q` are computed on first use.
pub struct Sl2Context {
    field: Arc<CyclotomicField>,
    gr: Arc<HopfAlgebraData<Cyclo>>,
    sigma: BilinearForm<Cyclo>,
    sigma_inv: OnceLock<BilinearForm<Cyclo>>,
    uq: OnceLock<Arc<HopfAlgebraData<Cyclo>>>,
}

impl Sl2Context {
    pub fn new(n: i64) -> Result<Self> {
        let field = CyclotomicField::new(n)?;
        let gr = Arc::new(gr_uq_in(&field));
        let sigma = sigma_in(&field);
        Ok(Sl2Context {
            field,
            gr,
            sigma,
            sigma_inv: OnceLock::new(),
            uq: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.field.order() as usize
    }

    pub fn gr(&self) -> &Arc<HopfAlgebraData<Cyclo>> {
        &self.gr
    }

    pub fn sigma(&self) -> &BilinearForm<Cyclo> {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> Result<&BilinearForm<Cyclo>> {
        if let Some(s) = self.sigma_inv.get() {
            return Ok(s);
        }
        let s = convolution_inverse(&self.sigma, &self.gr, self.n())?;
        Ok(self.sigma_inv.get_or_init(|| s))
    }

    pub fn uq(&self) -> Result<&Arc<HopfAlgebraData<Cyclo>>> {
        if let Some(u) = self.uq.get() {
            return Ok(u);
        }
        let u = uq_from_parts(&self.field, &self.gr, &self.sigma, self.sigma_inv()?)?;
        Ok(self.uq.get_or_init(|| Arc::new(u)))
    }
}
