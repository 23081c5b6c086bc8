use super::Engine;
use crate::error::{Error, Result};
use crate::laurent::{quantum_integer, TauPolynomial};
use crate::series::{extract_kernel_basis, UTruncatedSeries};

/// Refined BPS invariants `n^h_g(t)`, one row per `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpsTable {
    rows: Vec<Vec<TauPolynomial>>,
}

impl BpsTable {
    pub fn h_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `n^h_g`, zero for `g` beyond the extracted degree.
    pub fn get(&self, h: usize, g: usize) -> TauPolynomial {
        self.rows
            .get(h)
            .and_then(|r| r.get(g))
            .cloned()
            .unwrap_or_default()
    }

    /// The extracted coefficients of row `h`; length is `max(h, degree) + 1`.
    pub fn row(&self, h: usize) -> &[TauPolynomial] {
        &self.rows[h]
    }
}

impl Engine {
    /// Coefficients of the `u^h` term of the stable-pairs product in the
    /// basis `(q^(−1) + [2]_t + q)^g`.
    pub fn bps_row(&self, h: usize) -> Result<Vec<TauPolynomial>> {
        let series = self.ky_product(h)?;
        extract_row(&series, h)
    }

    pub fn bps_refined(&self, h_max: usize) -> Result<BpsTable> {
        let series = self.ky_product(h_max)?;
        let rows = (0..=h_max)
            .map(|h| extract_row(&series, h))
            .collect::<Result<_>>()?;
        Ok(BpsTable { rows })
    }

    /// The instanton contribution `n^h_0(t)`, cross-checked against the
    /// instanton product and against `t^(−h)·χ_{-t}(Hilb^h)`.
    pub fn vw_instanton(&self, h: usize) -> Result<TauPolynomial> {
        let n0 = self.bps_row(h)?.swap_remove(0);
        let kkv = self.product(super::ProductKind::Kkv, h)?;
        let kkv_coeff = kkv.coeff(h);
        if kkv_coeff.terms().any(|(e, _)| e != 0) || kkv_coeff.coeff(0) != n0 {
            return Err(Error::InstantonCrossCheck {
                h,
                detail: "n^h_0 differs from the instanton product coefficient".into(),
            });
        }
        let hilb = self.hilb_chi_series(h)?;
        if hilb.centered(h).as_ref() != Some(&n0) {
            return Err(Error::InstantonCrossCheck {
                h,
                detail: "n^h_0 differs from t^-h chi_{-t}(Hilb^h)".into(),
            });
        }
        Ok(n0)
    }
}

fn extract_row(series: &UTruncatedSeries, h: usize) -> Result<Vec<TauPolynomial>> {
    let mut row = extract_kernel_basis(
        series.coeff(h).as_map(),
        &quantum_integer(2),
        &TauPolynomial::one(),
    )?;
    if row.len() < h + 1 {
        row.resize(h + 1, TauPolynomial::zero());
    }
    Ok(row)
}

/// Shape of the stable-pairs product: the `u^h` coefficient is palindromic in
/// `q` of q-degree ≤ h, with τ-palindromic coefficients of τ-degree ≤ 2h.
pub fn lemma_shape_violations(series: &UTruncatedSeries) -> Vec<String> {
    let mut out = Vec::new();
    for (h, c) in series.coeffs().iter().enumerate() {
        let h_i = h as i64;
        if c.degree_abs() > h_i {
            out.push(format!("u^{h}: q-degree {} exceeds {h}", c.degree_abs()));
        }
        if !c.is_palindromic_in_q() {
            out.push(format!("u^{h}: not palindromic in q"));
        }
        for (e, p) in c.terms() {
            if !p.is_palindromic() || p.degree_abs() > 2 * h_i {
                out.push(format!("u^{h} q^{e}: coefficient {p} breaks τ-shape"));
            }
        }
    }
    out
}
