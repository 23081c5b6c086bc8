use std::collections::BTreeMap;

use num_integer::Integer;

use super::vw::check_square_divisibility;
use super::{divisors, Engine};
use crate::error::{Error, Result};
use crate::laurent::{quantum_integer, TauPolynomial, TauRational};
use crate::series::divide_by_kernel;

/// Refined primitive stable-pair invariants `P^h_χ(t)` for `1−h ≤ χ ≤ chi_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairsTable {
    genus: usize,
    entries: BTreeMap<i64, TauPolynomial>,
    chi_max: i64,
}

impl PairsTable {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn chi_min(&self) -> i64 {
        1 - self.genus as i64
    }

    pub fn chi_max(&self) -> i64 {
        self.chi_max
    }

    /// `P^h_χ`; zero below the window, `None` above it.
    pub fn value(&self, chi: i64) -> Option<TauPolynomial> {
        if chi < self.chi_min() {
            return Some(TauPolynomial::zero());
        }
        self.entries.get(&chi).cloned()
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, &TauPolynomial)> + '_ {
        self.entries.iter().map(|(&k, v)| (k, v))
    }
}

impl Engine {
    /// Divides the `u^h` coefficient of the stable-pairs product by the
    /// kernel, starting the recurrence at `χ = 1−h`.
    pub fn pairs_primitive(&self, h: usize, chi_max: i64) -> Result<PairsTable> {
        let chi_min = 1 - h as i64;
        if chi_max < chi_min {
            return Err(Error::InvalidArgument(format!(
                "chi_max = {chi_max} is below 1 - h = {chi_min}"
            )));
        }
        let series = self.ky_product(h)?;
        let entries = divide_by_kernel(series.coeff(h), chi_min, chi_max);
        Ok(PairsTable {
            genus: h,
            entries,
            chi_max,
        })
    }

    /// `P_{β,χ}(t) = Σ_{d | (m, χ)} (−1)^(χ − χ/d)/[d]_t · P^{h_d}_{χ/d}(t^d)`
    /// where `β² = 2h − 2` has divisibility `m` and `h_d = 1 + (h−1)/d²`.
    pub fn pairs_full(&self, h: usize, m: u64, chi: i64) -> Result<TauRational> {
        check_square_divisibility(h as i64 - 1, m)?;
        let common = m.gcd(&chi.unsigned_abs());
        let mut total = TauRational::zero();
        for d in divisors(common) {
            let d_i = d as i64;
            let h_d = (1 + (h as i64 - 1) / (d_i * d_i)) as usize;
            let chi_d = chi / d_i;
            let table = self.pairs_primitive(h_d, chi_d.max(1 - h_d as i64))?;
            let base = table.value(chi_d).expect("window covers chi/d");
            let mut term = base.substitute_power(d as u32);
            if (chi - chi_d) % 2 != 0 {
                term = -term;
            }
            let summand = TauRational::new(term, quantum_integer(d as u32))?;
            total = &total + &summand;
        }
        Ok(total)
    }

    /// `P^h_χ − P^h_{−χ} − (−1)^(χ−1)·[χ]_t·n^h_0(t)`, identically zero.
    pub fn wall_crossing_residual(&self, h: usize, chi: u32) -> Result<TauRational> {
        if chi == 0 {
            return Err(Error::InvalidArgument("chi must be positive".into()));
        }
        let chi_i = i64::from(chi);
        let table = self.pairs_primitive(h, chi_i)?;
        let instanton = self.vw_instanton(h)?;
        let mut wall = &quantum_integer(chi) * &instanton;
        if chi.is_multiple_of(2) {
            wall = -wall;
        }
        let plus = table.value(chi_i).expect("window covers chi");
        let minus = table.value(-chi_i).expect("window covers -chi");
        Ok(TauRational::from_poly(&(&plus - &minus) - &wall))
    }
}
