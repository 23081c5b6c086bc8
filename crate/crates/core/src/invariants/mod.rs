//! Invariant families of local K3 surfaces and the identities relating them.
//!
//! Every quantity is derived from three infinite products held in a
//! [`Catalog`]: the Hilbert-scheme genus product, the refined stable-pairs
//! product and the instanton product. An [`Engine`] expands them on demand
//! and memoizes the expansions.

mod bps;
mod catalog;
mod gv;
mod hilb;
mod pairs;
mod suite;
mod vw;

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

pub use bps::{lemma_shape_violations, BpsTable};
pub use catalog::{Catalog, MutationField, ProductFamily, ProductKind};
pub use gv::{kkv_oracle, BasisCenter, CenterOutcome, GvTable};
pub use hilb::{eta_power_coefficients, HilbGenusTable};
pub use pairs::PairsTable;
pub use suite::{default_vw_samples, identity_suite, IdentityCheck, VerificationReport};
pub use vw::{mcf_sheaf, VWParams};

use crate::error::Result;
use crate::series::{expand_product, UTruncatedSeries};

/// Divisors of `n` in ascending order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Expands and caches the products of a [`Catalog`]. Shareable across threads.
#[derive(Debug, Default)]
pub struct Engine {
    catalog: Catalog,
    cache: Mutex<BTreeMap<ProductKind, Arc<UTruncatedSeries>>>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_catalog(catalog: Catalog) -> Self {
        Self {
            catalog,
            cache: Mutex::default(),
        }
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    /// The product of `kind` expanded to `u^order`.
    pub fn product(&self, kind: ProductKind, order: usize) -> Result<Arc<UTruncatedSeries>> {
        if let Some(s) = self.cache.lock().unwrap().get(&kind) {
            if s.order() == order {
                return Ok(Arc::clone(s));
            }
            if s.order() > order {
                return Ok(Arc::new(s.truncate(order)));
            }
        }
        let series = Arc::new(expand_product(&self.catalog.factors(kind, order), order)?);
        self.cache.lock().unwrap().insert(kind, Arc::clone(&series));
        Ok(series)
    }

    /// The refined stable-pairs product expanded to `u^h_max`.
    pub fn ky_product(&self, h_max: usize) -> Result<Arc<UTruncatedSeries>> {
        self.product(ProductKind::Ky, h_max)
    }

    pub fn hilb_chi_series(&self, d_max: usize) -> Result<HilbGenusTable> {
        let series = self.product(ProductKind::Jac, d_max)?;
        let entries = series
            .coeffs()
            .iter()
            .enumerate()
            .map(|(d, c)| c.coeff(0).shift(2 * d as i64))
            .collect();
        Ok(HilbGenusTable::new(entries))
    }

    /// Euler characteristics `e(Hilb^d S)`, the τ = 1 values of the genera.
    pub fn euler_hilb(&self, d_max: usize) -> Result<Vec<num_bigint::BigInt>> {
        Ok(self
            .hilb_chi_series(d_max)?
            .entries()
            .iter()
            .map(|p| p.evaluate_at_one().to_integer())
            .collect())
    }
}
